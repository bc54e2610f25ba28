//! Checks of the structure theorems for `A ⋈^f J`: iteration, the
//! canonical isomorphisms, and the domain and reducedness criteria.

use crate::error::{Error, Result};
use crate::morphism::{corestrict, factor_through, RingHom};
use crate::report::{Recorder, VerificationReport};
use crate::ring::FiniteRng;
use crate::subobjects::{ensure_same, nilradical, quotient_ring, Ideal};

use super::pairs::{amalgam_pairs, set_difference};
use super::{amalgam, duplication, n_amalgam, Amalgam};

/// Coordinates of an index of `Bⁿ`, first coordinate first.
fn coords(mut z: usize, m: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = z % m;
        z /= m;
    }
    out
}

fn encode(cs: &[usize], m: usize) -> usize {
    cs.iter().fold(0, |acc, &c| acc * m + c)
}

pub(crate) fn record_hom(rec: &mut Recorder, name: &str, built: Result<RingHom>) {
    match built {
        Ok(h) => {
            rec.iso(name, &h);
        }
        Err(e) => {
            rec.claim(name, false, || e.to_string());
        }
    }
}

/// `A ⋈^{n,f} J ≅ A^{(n-1,f)} ⋈ J^{(n-1,f)}` for `n ≥ 2`, with two
/// explicit witnesses.
///
/// The first takes `A^{(n-1,f)}` as the flat `(n-1)`-amalgamation with `J`
/// sitting in the last coordinate, and sends
/// `(a, (b_1..b_n)) ↦ (y, y + (0,(0,..,0,b_n − b_{n-1})))` where `y` drops
/// `b_n`. The second builds the tower `A' = A⋈^f J`,
/// `A^{(k+1)} = A^{(k)} ⋈ κ_k(J)` with `κ_1(j) = (0,j)`,
/// `κ_{k+1}(j) = (0, κ_k(j))`, and sends `(a, (b_1..b_n))` to `x_n` where
/// `x_1 = (a, b_1)` and `x_{k+1} = (x_k, x_k + κ_k(b_{k+1} − b_k))`.
pub fn iter_iso_check(f: &RingHom, j: &Ideal, n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::InvalidParameter("iteration needs n ≥ 2".into()));
    }
    let (a, b) = (f.domain(), f.codomain());
    let m = b.order();
    let left = n_amalgam(f, j, n)?;
    let mut rec = Recorder::new(
        "iter_iso",
        &format!("n={n}, |A|={}, |B|={}, |J|={}", a.order(), m, j.len()),
    );
    let expected = (a.order() as u128) * (j.len() as u128).pow(n as u32);
    rec.claim("|A⋈^{n,f}J| = |A|·|J|ⁿ", left.ring().order() as u128 == expected, || {
        format!("{} ≠ {expected}", left.ring().order())
    });
    rec.fact("order", left.ring().order());

    let prev = n_amalgam(f, j, n - 1)?;
    let slot = |t: usize| {
        let mut cs = vec![b.zero(); n - 1];
        cs[n - 2] = t;
        prev.index(a.zero(), encode(&cs, m)).expect("J in the last slot lies in the amalgam")
    };
    let e_members = {
        let mut v = vec![false; prev.ring().order()];
        for t in j.elements() {
            v[slot(t)] = true;
        }
        v
    };
    let e = Ideal::from_members(prev.ring(), e_members)?;
    let flat_target = duplication(prev.ring(), &e)?;
    let flat_map = left
        .pair_ring()
        .pairs()
        .iter()
        .map(|&(x, z)| {
            let cs = coords(z, m, n);
            let y = prev.index(x, encode(&cs[..n - 1], m))?;
            let w = prev.ring().add(y, slot(b.sub(cs[n - 1], cs[n - 2])));
            flat_target.index(y, w)
        })
        .collect::<Option<Vec<_>>>();
    match flat_map {
        Some(map) => record_hom(
            &mut rec,
            "A⋈^{n,f}J → A^{(n-1,f)}⋈J^{(n-1,f)}",
            RingHom::new(left.ring(), flat_target.ring(), map, true),
        ),
        None => {
            rec.claim("A⋈^{n,f}J → A^{(n-1,f)}⋈J^{(n-1,f)}", false, || {
                "an image falls outside the target".into()
            });
        }
    }

    let mut tower = vec![amalgam(f, j)?];
    let mut kappa: Vec<Vec<usize>> = vec![b
        .elements()
        .map(|t| if j.contains(t) { tower[0].index(a.zero(), t).unwrap() } else { usize::MAX })
        .collect()];
    for k in 0..n - 1 {
        let level = &tower[k];
        let members = {
            let mut v = vec![false; level.ring().order()];
            for t in j.elements() {
                v[kappa[k][t]] = true;
            }
            v
        };
        let ideal = Ideal::from_members(level.ring(), members)?;
        let next = duplication(level.ring(), &ideal)?;
        let zero = level.ring().zero();
        let next_kappa = b
            .elements()
            .map(|t| if j.contains(t) { next.index(zero, kappa[k][t]).unwrap() } else { usize::MAX })
            .collect();
        tower.push(next);
        kappa.push(next_kappa);
    }
    let tower_map = left
        .pair_ring()
        .pairs()
        .iter()
        .map(|&(x, z)| {
            let cs = coords(z, m, n);
            let mut cur = tower[0].index(x, cs[0])?;
            for k in 0..n - 1 {
                let step = kappa[k][b.sub(cs[k + 1], cs[k])];
                let w = tower[k].ring().add(cur, step);
                cur = tower[k + 1].index(cur, w)?;
            }
            Some(cur)
        })
        .collect::<Option<Vec<_>>>();
    let top = &tower[n - 1];
    match tower_map {
        Some(map) => record_hom(
            &mut rec,
            "A⋈^{n,f}J → tower A^{(n)}",
            RingHom::new(left.ring(), top.ring(), map, true),
        ),
        None => {
            rec.claim("A⋈^{n,f}J → tower A^{(n)}", false, || "an image falls outside the tower".into());
        }
    }
    Ok(rec.finish())
}

fn pair_ideal(amg: &Amalgam, keep: impl Fn(usize, usize) -> bool) -> Result<Ideal> {
    let members = amg.pair_ring().pairs().iter().map(|&(x, y)| keep(x, y)).collect();
    Ideal::from_members(amg.ring(), members)
}

/// `|A⋈^f J| = |A|·|J|`, with the element set compared against the
/// definition and `f^⋈: A⊕̇J → A⋈^f J` re-validated as a bijection.
pub fn cardinality_check(amg: &Amalgam) -> VerificationReport {
    let mut rec = Recorder::new("cardinality", &amg.describe());
    let expected = amg.a().order() * amg.j().len();
    rec.fact("|A⋈^f J|", amg.ring().order());
    rec.fact("|A|·|J|", expected);
    rec.claim("|A⋈^f J| = |A|·|J|", amg.ring().order() == expected, || {
        format!("{} ≠ {expected}", amg.ring().order())
    });
    let direct = amalgam_pairs(amg.f(), amg.j());
    let diff = set_difference(amg.a(), amg.b(), &direct, amg.pair_ring().pairs());
    rec.claim("pairs = {(a, f(a)+j)}", diff.is_none(), || diff.clone().unwrap_or_default());
    rec.iso("f^⋈: A⊕̇J → A⋈^f J", amg.f_join());
    rec.finish()
}

/// The canonical isomorphisms around `A ⋈^f J`:
/// `(A⋈^f J)/(I⋈^f J) ≅ A/I`, `(A⋈^f J)/({0}×J) ≅ A`,
/// `(A⋈^f J)/(f⁻¹(J)×{0}) ≅ f(A)+J`, `(A⋈^f J)/(f⁻¹(J)×J) ≅ (f(A)+J)/J`,
/// and `≅ B/J` when `f` is surjective. `I` defaults to `f⁻¹(J)`.
pub fn canonical_isos(amg: &Amalgam, i: Option<&Ideal>) -> Result<VerificationReport> {
    let mut rec = Recorder::new("canonical_isos", &amg.describe());
    let (a, b, f, j) = (amg.a(), amg.b(), amg.f(), amg.j());
    let contraction = amg.contraction();
    let i = match i {
        Some(i) => {
            ensure_same(i.ring(), a, "canonical_isos: I must be an ideal of A")?;
            i.clone()
        }
        None => contraction.clone(),
    };
    rec.elements("I", a, &i.elements());

    let ij = pair_ideal(amg, |x, _| i.contains(x));
    rec.claim("I⋈^f J is an ideal", ij.is_ok(), || format!("{:?}", ij.as_ref().err()));
    if let Ok(ij) = ij {
        let (_, proj) = quotient_ring(&ij)?;
        let (_, qa) = quotient_ring(&i)?;
        let through = proj.compose(amg.iota())?;
        rec.claim("Ker(A → A⋈^f J/I⋈^f J) = I", through.kernel() == i, || {
            format!("kernel {:?}", through.kernel().labels())
        });
        record_hom(&mut rec, "A/I → (A⋈^f J)/(I⋈^f J)", factor_through(&qa, &through));
    }

    let zero_j = pair_ideal(amg, |x, _| x == a.zero())?;
    rec.claim("Ker(p_A) = {0}×J", amg.p_a().kernel() == zero_j, || {
        format!("Ker(p_A) = {:?}", amg.p_a().kernel().labels())
    });
    rec.claim("p_A surjective", amg.p_a().is_surjective(), || "p_A misses an element".into());
    let (_, pr0) = quotient_ring(&zero_j)?;
    record_hom(&mut rec, "(A⋈^f J)/({0}×J) → A", factor_through(&pr0, amg.p_a()));

    let contraction_zero = pair_ideal(amg, |x, y| contraction.contains(x) && y == b.zero())?;
    rec.claim("Ker(p_B) = f⁻¹(J)×{0}", amg.p_b().kernel() == contraction_zero, || {
        format!("Ker(p_B) = {:?}", amg.p_b().kernel().labels())
    });
    rec.claim("p_B(A⋈^f J) = f(A)+J", amg.p_b().image() == *amg.b_diamond(), || {
        format!("image {:?}", amg.p_b().image().labels())
    });
    let (_, pr1) = quotient_ring(&contraction_zero)?;
    let pb_d = corestrict(amg.p_b(), amg.b_diamond())?;
    record_hom(&mut rec, "(A⋈^f J)/(f⁻¹(J)×{0}) → f(A)+J", factor_through(&pr1, &pb_d));

    let cj = pair_ideal(amg, |x, y| contraction.contains(x) && j.contains(y))?;
    rec.claim("γ surjective", amg.gamma().is_surjective(), || "γ misses a class".into());
    rec.claim("Ker(γ) = f⁻¹(J)×J", amg.gamma().kernel() == cj, || {
        format!("Ker(γ) = {:?}", amg.gamma().kernel().labels())
    });
    let (_, pr2) = quotient_ring(&cj)?;
    record_hom(&mut rec, "(A⋈^f J)/(f⁻¹(J)×J) → (f(A)+J)/J", factor_through(&pr2, amg.gamma()));

    let surjective = f.is_surjective();
    rec.fact("f surjective", surjective);
    if surjective {
        let (_, pi) = quotient_ring(j)?;
        let to_bj = pi.compose(amg.p_b())?;
        record_hom(&mut rec, "(A⋈^f J)/(f⁻¹(J)×J) → B/J", factor_through(&pr2, &to_bj));
    }
    Ok(rec.finish())
}

/// For `J ≠ 0`: `A⋈^f J` is a domain ⟺ `f(A)+J` is a domain and
/// `f⁻¹(J) = 0`. On finite rings both sides are always false: a finite
/// domain is a field, whose only nonzero ideal is itself.
pub fn domain_criterion_check(amg: &Amalgam) -> Result<VerificationReport> {
    let mut rec = Recorder::new("domain_criterion", &amg.describe());
    let lhs = amg.ring().is_domain()?;
    rec.fact("A⋈^f J domain", lhs);
    if amg.j().is_zero() {
        rec.fact("A domain", amg.a().is_domain()?);
        rec.hypothesis_not_met("J = (0): outside the criterion, and A⋈^f J ≅ A");
        return Ok(rec.finish());
    }
    let (bd, _) = amg.b_diamond().to_ring();
    let bd_domain = bd.is_domain()?;
    let trivial_contraction = amg.contraction().is_zero();
    let rhs = bd_domain && trivial_contraction;
    rec.fact("f(A)+J domain", bd_domain);
    rec.fact("f⁻¹(J) = 0", trivial_contraction);
    rec.claim("domain ⟺ (f(A)+J domain ∧ f⁻¹(J) = 0)", lhs == rhs, || {
        format!("left side {lhs}, right side {rhs}")
    });
    rec.claim("finite degeneracy: both sides false", !lhs && !rhs, || {
        format!("left side {lhs}, right side {rhs}")
    });
    rec.note("finite domains are fields and a field has no proper nonzero ideal, so with J ≠ 0 neither side can hold");
    Ok(rec.finish())
}

fn nilp_meets_trivially(ring: &crate::ring::Ring, j: &Ideal) -> bool {
    nilradical(ring).intersection(j).map(|x| x.is_zero()).unwrap_or(false)
}

/// `A⋈^f J` reduced ⟺ `A` reduced and `Nilp(B)∩J = 0`, plus the two
/// corollaries: `A, B` reduced ⇒ reduced, and `J` radical with `A⋈^f J`
/// reduced ⇒ `B` reduced.
pub fn reduced_criterion_check(amg: &Amalgam) -> Result<VerificationReport> {
    let mut rec = Recorder::new("reduced_criterion", &amg.describe());
    let lhs = amg.ring().is_reduced();
    let a_red = amg.a().is_reduced();
    let b_red = amg.b().is_reduced();
    let nb = nilp_meets_trivially(amg.b(), amg.j());
    let j_radical = amg.j().is_radical()?;
    rec.fact("A⋈^f J reduced", lhs);
    rec.fact("A reduced", a_red);
    rec.fact("Nilp(B)∩J = 0", nb);
    rec.fact("B reduced", b_red);
    rec.fact("J radical", j_radical);
    rec.claim("reduced ⟺ (A reduced ∧ Nilp(B)∩J = 0)", lhs == (a_red && nb), || {
        match amg.ring().nilpotents().into_iter().find(|&x| x != amg.ring().zero()) {
            Some(x) => format!("left side {lhs}; {} is nilpotent", amg.ring().label(x)),
            None => format!("left side {lhs}, right side {}", a_red && nb),
        }
    });
    rec.claim("A, B reduced ⇒ A⋈^f J reduced", !(a_red && b_red) || lhs, String::new);
    rec.claim("J radical ∧ A⋈^f J reduced ⇒ B reduced", !(j_radical && lhs) || b_red, String::new);
    Ok(rec.finish())
}

/// Searches `instances` for `A` reduced, `Nilp(B)∩J = 0` and `f(A)+J` not
/// reduced. Reports the first hit, or "not found".
///
/// On finite rings the search cannot succeed: `A` reduced makes `A` a
/// product of fields, so the image of `f(A)` in `B/J` is reduced; a
/// nilpotent `f(a)+j` then has `f(a) ∈ J`, hence lies in `Nilp(B)∩J = 0`.
pub fn reduced_converse_search(instances: &[Amalgam]) -> VerificationReport {
    let mut rec = Recorder::new("reduced_converse_search", &format!("{} amalgams", instances.len()));
    let mut eligible = 0;
    let mut hit = None;
    for (k, amg) in instances.iter().enumerate() {
        if !amg.a().is_reduced() || !nilp_meets_trivially(amg.b(), amg.j()) {
            continue;
        }
        eligible += 1;
        rec.claim(&format!("instance {k}: A⋈^f J reduced"), amg.ring().is_reduced(), || {
            amg.describe()
        });
        let (bd, _) = amg.b_diamond().to_ring();
        if hit.is_none() && !bd.is_reduced() {
            hit = Some(k);
        }
    }
    rec.fact("eligible instances", eligible);
    match hit {
        Some(k) => {
            rec.fact("found", format!("instance {k}: {}", instances[k].describe()));
        }
        None => {
            rec.fact("found", "not found");
            rec.note("no finite instance exists: a reduced finite A maps onto a reduced image in B/J, forcing nilpotents of f(A)+J into Nilp(B)∩J");
        }
    }
    rec.finish()
}

/// `A⋈^f J = A⋈^g J` ⟺ `f(a) − g(a) ∈ J` for all `a`.
pub fn same_amalgam(f: &RingHom, g: &RingHom, j: &Ideal) -> Result<VerificationReport> {
    ensure_same(f.domain(), g.domain(), "same_amalgam: f and g need a common domain")?;
    ensure_same(f.codomain(), g.codomain(), "same_amalgam: f and g need a common codomain")?;
    ensure_same(f.codomain(), j.ring(), "same_amalgam: J must be an ideal of B")?;
    let (a, b) = (f.domain(), f.codomain());
    let mut rec = Recorder::new(
        "same_amalgam",
        &format!("|A|={}, |B|={}, |J|={}", a.order(), b.order(), j.len()),
    );
    let (sf, sg) = (amalgam_pairs(f, j), amalgam_pairs(g, j));
    let diff = set_difference(a, b, &sf, &sg);
    let equal = diff.is_none();
    let bad = a.elements().find(|&x| !j.contains(b.sub(f.apply(x), g.apply(x))));
    let pointwise = bad.is_none();
    rec.fact("A⋈^f J = A⋈^g J", equal);
    rec.fact("f(a) − g(a) ∈ J for all a", pointwise);
    rec.fact("f = g", f.map() == g.map());
    rec.claim("sets equal ⟺ pointwise condition", equal == pointwise, || {
        format!("sets: {diff:?}; pointwise fails at {:?}", bad.map(|x| a.label(x).to_string()))
    });
    if let Some(x) = bad {
        rec.fact("f(a) − g(a) ∉ J at", label_of(a, x));
    }
    Ok(rec.finish())
}

fn label_of(r: &FiniteRng, x: usize) -> String {
    r.label(x).to_string()
}
