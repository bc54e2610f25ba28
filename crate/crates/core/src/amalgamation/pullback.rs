//! Fiber products `α ×_C β` and the checks relating them to amalgamations.

use std::fmt;

use crate::error::Result;
use crate::morphism::{all_homs, find_section, RingHom};
use crate::report::{Recorder, VerificationReport};
use crate::ring::{direct_product, FiniteRng, Provenance, Ring};
use crate::subobjects::{ensure_same, nilradical, quotient_ring, Ideal};

use super::pairs::{amalgam_pairs, set_difference, PairRing};
use super::Amalgam;

/// Cap on homs enumerated when certifying that a pullback has no
/// amalgamation presentation.
const PRESENTATION_CAP: usize = 4096;

/// `D = α ×_C β = {(a, b) : α(a) = β(b)}` with its projections.
#[derive(Clone)]
pub struct PullbackData {
    alpha: RingHom,
    beta: RingHom,
    pairs: PairRing,
}

impl fmt::Debug for PullbackData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pullback{:?}", self.pairs.ring().labels())
    }
}

impl PullbackData {
    pub fn alpha(&self) -> &RingHom {
        &self.alpha
    }

    pub fn beta(&self) -> &RingHom {
        &self.beta
    }

    pub fn ring(&self) -> &Ring {
        self.pairs.ring()
    }

    pub fn pair_ring(&self) -> &PairRing {
        &self.pairs
    }

    pub fn p_a(&self) -> RingHom {
        self.pairs.p_left()
    }

    pub fn p_b(&self) -> RingHom {
        self.pairs.p_right()
    }

    pub fn describe(&self) -> String {
        format!(
            "α×_C β with |A|={}, |B|={}, |C|={}",
            self.alpha.domain().order(),
            self.beta.domain().order(),
            self.alpha.codomain().order()
        )
    }
}

pub fn pullback(alpha: &RingHom, beta: &RingHom) -> Result<PullbackData> {
    ensure_same(alpha.codomain(), beta.codomain(), "pullback: α and β need a common codomain")?;
    let c = alpha.codomain();
    let mut fibers = vec![Vec::new(); c.order()];
    for b in beta.domain().elements() {
        fibers[beta.apply(b)].push(b);
    }
    let pairs = alpha
        .domain()
        .elements()
        .flat_map(|a| fibers[alpha.apply(a)].iter().map(move |&b| (a, b)))
        .collect();
    let pairs = PairRing::build(alpha.domain(), beta.domain(), pairs, Provenance::Subring, "α×_C β")?;
    Ok(PullbackData {
        alpha: alpha.clone(),
        beta: beta.clone(),
        pairs,
    })
}

/// `f̆ = π∘f` and `π: B → B/J`.
fn f_breve(amg: &Amalgam) -> Result<(RingHom, RingHom)> {
    let (_, pi) = quotient_ring(amg.j())?;
    Ok((pi.compose(amg.f())?, pi))
}

/// The amalgamation re-entered as the pullback `f̆ ×_{B/J} π`.
pub fn as_pullback(amg: &Amalgam) -> Result<PullbackData> {
    let (fb, pi) = f_breve(amg)?;
    pullback(&fb, &pi)
}

/// `A ⋈^f J = f̆ ×_{B/J} π` as subsets of `A × B`.
pub fn pull_identity_check(amg: &Amalgam) -> Result<VerificationReport> {
    let mut rec = Recorder::new("pull_identity", &amg.describe());
    let pb = as_pullback(amg)?;
    let diff = set_difference(amg.a(), amg.b(), amg.pair_ring().pairs(), pb.pair_ring().pairs());
    rec.claim("A⋈^f J = f̆ ×_{B/J} π", diff.is_none(), || diff.clone().unwrap_or_default());
    rec.fact("|A⋈^f J|", amg.ring().order());
    rec.fact("|f̆ ×_{B/J} π|", pb.ring().order());
    rec.map("f̆", pb.alpha());
    Ok(rec.finish())
}

/// The two alternative pullback presentations: `u ×_C v` with
/// `C = A × B/J`, and `ŭ ×_{C̆} v̆` with `C̆ = A/I × B/J`, `I = f⁻¹(J)`.
/// Each is related to the amalgamation by its canonical map, validated.
pub fn alt_pullback_checks(amg: &Amalgam) -> Result<VerificationReport> {
    let mut rec = Recorder::new("alt_pullback", &amg.describe());
    let (a, b, f) = (amg.a(), amg.b(), amg.f());
    let (bj, pi) = quotient_ring(amg.j())?;
    let ab = direct_product(&[a, b])?;
    let w = bj.order();

    let c = direct_product(&[a, &bj])?;
    let u = RingHom::new(a, &c, a.elements().map(|x| x * w + pi.apply(f.apply(x))).collect(), true)?;
    let v = RingHom::new(&ab, &c, ab.elements().map(|z| (z / b.order()) * w + pi.apply(z % b.order())).collect(), true)?;
    let uv = pullback(&u, &v)?;
    let to_uv = amg
        .pair_ring()
        .pairs()
        .iter()
        .map(|&(x, y)| uv.pair_ring().index(x, x * b.order() + y))
        .collect::<Option<Vec<_>>>();
    rec.claim("(a,b) ↦ (a,(a,b)) lands in u×_C v", to_uv.is_some(), || "a pair has no image".into());
    if let Some(map) = to_uv {
        match RingHom::new(amg.ring(), uv.ring(), map, true) {
            Ok(h) => {
                rec.iso("A⋈^f J → u×_C v", &h);
            }
            Err(e) => {
                rec.claim("A⋈^f J → u×_C v", false, || e.to_string());
            }
        }
    }

    let i = amg.contraction();
    let (ai, qa) = quotient_ring(&i)?;
    let c2 = direct_product(&[&ai, &bj])?;
    let w2 = bj.order();
    let mut u2 = vec![usize::MAX; ai.order()];
    for x in a.elements() {
        u2[qa.apply(x)] = qa.apply(x) * w2 + pi.apply(f.apply(x));
    }
    let u2 = RingHom::new(&ai, &c2, u2, true)?;
    let v2 = RingHom::new(
        &ab,
        &c2,
        ab.elements().map(|z| qa.apply(z / b.order()) * w2 + pi.apply(z % b.order())).collect(),
        true,
    )?;
    let uv2 = pullback(&u2, &v2)?;
    let to_uv2 = amg
        .pair_ring()
        .pairs()
        .iter()
        .map(|&(x, y)| uv2.pair_ring().index(qa.apply(x), x * b.order() + y))
        .collect::<Option<Vec<_>>>();
    rec.claim("(a,b) ↦ ([a],(a,b)) lands in ŭ×v̆", to_uv2.is_some(), || "a pair has no image".into());
    if let Some(map) = to_uv2 {
        match RingHom::new(amg.ring(), uv2.ring(), map, true) {
            Ok(h) => {
                rec.iso("A⋈^f J → ŭ×v̆", &h);
            }
            Err(e) => {
                rec.claim("A⋈^f J → ŭ×v̆", false, || e.to_string());
            }
        }
    }
    rec.elements("f⁻¹(J)", a, &i.elements());
    Ok(rec.finish())
}

/// The only possible `J` with `A⋈^f J = D` is `{b − f(a) : (a,b) ∈ D}`;
/// returns it when it is an ideal that works.
fn presenting_ideal(f: &RingHom, d: &[(usize, usize)]) -> Option<Ideal> {
    let b = f.codomain();
    let mut members = vec![false; b.order()];
    for &(x, y) in d {
        members[b.sub(y, f.apply(x))] = true;
    }
    let j = Ideal::from_members(b, members).ok()?;
    (amalgam_pairs(f, &j) == d).then_some(j)
}

/// `(∃J: α×_C β = A⋈^f J) ⟺ α = β∘f`, and then `J = Ker(β)`.
pub fn factor_check(alpha: &RingHom, beta: &RingHom, f: &RingHom) -> Result<VerificationReport> {
    let pb = pullback(alpha, beta)?;
    let mut rec = Recorder::new("factor", &pb.describe());
    ensure_same(f.domain(), alpha.domain(), "factor: f must start at A")?;
    ensure_same(f.codomain(), beta.domain(), "factor: f must land in B")?;
    let composite = beta.compose(f)?;
    let cond_ii = composite.map() == alpha.map();
    let (a, b) = (alpha.domain(), beta.domain());
    let d = pb.pair_ring().pairs();
    let kernel = beta.kernel();
    let witness_j = presenting_ideal(f, d);
    let cond_i = witness_j.is_some();
    rec.fact("α = β∘f", cond_ii);
    rec.fact("∃J: α×_C β = A⋈^f J", cond_i);
    rec.claim("(i) ⟺ (ii)", cond_i == cond_ii, || {
        format!("condition (i) is {cond_i} but (ii) is {cond_ii}")
    });
    if cond_ii {
        let direct = amalgam_pairs(f, &kernel);
        let diff = set_difference(a, b, &direct, d);
        rec.claim("α×_C β = A⋈^f Ker(β)", diff.is_none(), || diff.clone().unwrap_or_default());
    } else {
        let bad = a.elements().find(|&x| composite.apply(x) != alpha.apply(x)).unwrap();
        rec.fact(
            "α ≠ β∘f at",
            format!(
                "{}: α gives {}, β∘f gives {}",
                a.label(bad),
                alpha.codomain().label(alpha.apply(bad)),
                alpha.codomain().label(composite.apply(bad))
            ),
        );
    }
    if let Some(j) = &witness_j {
        rec.claim("J = Ker(β)", *j == kernel, || {
            format!("presenting ideal {:?} differs from Ker(β) {:?}", j.labels(), kernel.labels())
        });
    }
    rec.elements("Ker(β)", b, &kernel.elements());
    Ok(rec.finish())
}

/// `p_A: α×_C β → A` is a retraction ⟺ `α×_C β = A⋈^f J` for some `f, J`.
/// With a section `ι`, rebuilds `f := p_B∘ι`, `J := Ker(β)`; without one,
/// certifies by enumeration that no presentation exists.
pub fn fibret_check(alpha: &RingHom, beta: &RingHom) -> Result<VerificationReport> {
    let pb = pullback(alpha, beta)?;
    let mut rec = Recorder::new("fibret", &pb.describe());
    let p_a = pb.p_a();
    if !p_a.is_surjective() {
        rec.hypothesis_not_met("p_A is not surjective, so it cannot be a retraction");
        return Ok(rec.finish());
    }
    let (a, b) = (alpha.domain(), beta.domain());
    let d = pb.pair_ring().pairs();
    match find_section(&p_a)? {
        Some(iota) => {
            rec.map("section ι", &iota);
            let f = pb.p_b().compose(&iota)?;
            rec.map("f = p_B∘ι", &f);
            let kernel = beta.kernel();
            let beta_f = beta.compose(&f)?;
            rec.claim("β∘f = α", beta_f.map() == alpha.map(), || format!("{beta_f:?} vs {alpha:?}"));
            let rebuilt = amalgam_pairs(&f, &kernel);
            let diff = set_difference(a, b, &rebuilt, d);
            rec.claim("α×_C β = A⋈^f Ker(β)", diff.is_none(), || diff.clone().unwrap_or_default());
            rec.elements("J = Ker(β)", b, &kernel.elements());
            rec.fact("retraction", true);
        }
        None => {
            rec.fact("retraction", false);
            rec.note("exhaustive search found no section of p_A");
            let homs = all_homs(a, b, PRESENTATION_CAP)?;
            if homs.len() == PRESENTATION_CAP {
                rec.hypothesis_not_met(format!("more than {PRESENTATION_CAP} unital homs A → B; enumeration truncated"));
            }
            let found = homs
                .iter()
                .find_map(|f| presenting_ideal(f, d).map(|j| (f.clone(), j)));
            rec.fact("unital homs A → B", homs.len());
            rec.claim("no (f, J) with α×_C β = A⋈^f J", found.is_none(), || {
                let (f, j) = found.clone().unwrap();
                format!("f = {f:?}, J = {:?}", j.labels())
            });
        }
    }
    Ok(rec.finish())
}

/// `A ⋈^f J` re-entered as `f̆ ×_{B/J} π`: the projection to `A` has a
/// section, `J` is recovered as `Ker(π)`, and the factorization criterion
/// holds for `f`.
pub fn retraction_roundtrip(amg: &Amalgam) -> Result<VerificationReport> {
    let pb = as_pullback(amg)?;
    let mut rec = Recorder::new("retraction_roundtrip", &amg.describe());
    let fib = fibret_check(pb.alpha(), pb.beta())?;
    rec.claim("p_A is a retraction", fib.fact("retraction") == Some("true"), || {
        "no section of p_A".into()
    });
    rec.absorb("fibret", fib);
    rec.absorb("factor", factor_check(pb.alpha(), pb.beta(), amg.f())?);
    let kernel = pb.beta().kernel();
    rec.claim("Ker(π) = J", kernel == *amg.j(), || format!("Ker(π) = {:?}", kernel.labels()));
    Ok(rec.finish())
}

fn meets_trivially(nil: &Ideal, kernel: &Ideal) -> bool {
    nil.intersection(kernel).map(|i| i.is_zero()).unwrap_or(false)
}

/// Both implications about reducedness of a pullback:
/// `D` reduced ⇒ `Nilp(A)∩Ker(α) = 0 = Nilp(B)∩Ker(β)`, and either
/// `A` reduced with `Nilp(B)∩Ker(β) = 0` or the symmetric condition ⇒
/// `D` reduced.
pub fn prid_check(pb: &PullbackData) -> Result<VerificationReport> {
    let mut rec = Recorder::new("prid", &pb.describe());
    let (alpha, beta) = (pb.alpha(), pb.beta());
    let (a, b) = (alpha.domain(), beta.domain());
    let d_red = pb.ring().is_reduced();
    let na = meets_trivially(&nilradical(a), &alpha.kernel());
    let nb = meets_trivially(&nilradical(b), &beta.kernel());
    let (a_red, b_red) = (a.is_reduced(), b.is_reduced());
    rec.fact("D reduced", d_red);
    rec.fact("Nilp(A)∩Ker(α) = 0", na);
    rec.fact("Nilp(B)∩Ker(β) = 0", nb);
    rec.fact("A reduced", a_red);
    rec.fact("B reduced", b_red);
    rec.claim("(1) D reduced ⇒ both intersections zero", !d_red || (na && nb), || {
        nonzero_nilpotent(pb.ring())
    });
    rec.claim("(2a) A reduced ∧ Nilp(B)∩Ker(β)=0 ⇒ D reduced", !(a_red && nb) || d_red, || {
        nonzero_nilpotent(pb.ring())
    });
    rec.claim("(2b) B reduced ∧ Nilp(A)∩Ker(α)=0 ⇒ D reduced", !(b_red && na) || d_red, || {
        nonzero_nilpotent(pb.ring())
    });
    Ok(rec.finish())
}

fn nonzero_nilpotent(r: &FiniteRng) -> String {
    match r.nilpotents().into_iter().find(|&x| x != r.zero()) {
        Some(x) => format!("{} is nilpotent", r.label(x)),
        None => "D has no nonzero nilpotent".into(),
    }
}

/// `Ker(p_A) = {0} × Ker(β)` by element scan.
pub fn kernel_identity_check(pb: &PullbackData) -> Result<VerificationReport> {
    let mut rec = Recorder::new("kernel_identity", &pb.describe());
    let (a, b) = (pb.alpha().domain(), pb.beta().domain());
    let kernel: Vec<(usize, usize)> = pb
        .p_a()
        .kernel()
        .elements()
        .into_iter()
        .map(|i| pb.pair_ring().pair(i))
        .collect();
    let expected: Vec<(usize, usize)> = pb
        .beta()
        .kernel()
        .elements()
        .into_iter()
        .map(|y| (a.zero(), y))
        .collect();
    let diff = set_difference(a, b, &kernel, &expected);
    rec.claim("Ker(p_A) = {0}×Ker(β)", diff.is_none(), || diff.clone().unwrap_or_default());
    rec.fact("|Ker(p_A)|", kernel.len());
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgamation::{amalgam, duplication};
    use crate::ring::zmod;

    fn canonical(n: usize, m: usize) -> RingHom {
        let (a, b) = (zmod(n).unwrap(), zmod(m).unwrap());
        RingHom::new(&a, &b, (0..n).map(|x| x % m).collect(), true).unwrap()
    }

    #[test]
    fn pullback_examples() {
        let z2 = zmod(2).unwrap();
        let id = RingHom::identity(&z2);
        let pb = pullback(&id, &id).unwrap();
        assert_eq!(pb.ring().labels(), ["(0,0)", "(1,1)"]);
        let pb = pullback(&id, &canonical(4, 2)).unwrap();
        assert_eq!(pb.ring().order(), 4);
        let z6 = zmod(6).unwrap();
        let f = canonical(6, 3);
        let iso = RingHom::identity(f.codomain());
        let pb = pullback(&f, &iso).unwrap();
        assert!(crate::morphism::verify_iso(&RingHom::new(pb.ring(), &z6, pb.p_a().map().to_vec(), true).unwrap()));
    }

    #[test]
    fn pull_identity_on_examples() {
        let f = canonical(4, 2);
        for j in [Ideal::zero(f.codomain()), Ideal::whole(f.codomain())] {
            let amg = amalgam(&f, &j).unwrap();
            assert!(pull_identity_check(&amg).unwrap().passed());
            assert!(alt_pullback_checks(&amg).unwrap().passed());
        }
    }

    #[test]
    fn factor_examples() {
        let z12 = zmod(12).unwrap();
        let j = Ideal::generated(&z12, &[4]).unwrap();
        let amg = duplication(&z12, &j).unwrap();
        let pb = as_pullback(&amg).unwrap();
        let rep = factor_check(pb.alpha(), pb.beta(), amg.f()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.fact("α = β∘f"), Some("true"));

        // α and β are the first projection, β∘f the second
        let z2 = zmod(2).unwrap();
        let v = direct_product(&[&z2, &z2]).unwrap();
        let beta = RingHom::new(&v, &z2, vec![0, 0, 1, 1], true).unwrap();
        let f = RingHom::new(&v, &v, vec![0, 2, 1, 3], true).unwrap();
        let alpha = RingHom::new(&v, &z2, vec![0, 0, 1, 1], true).unwrap();
        let rep = factor_check(&alpha, &beta, &f).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.fact("α = β∘f"), Some("false"));

        let z3 = zmod(3).unwrap();
        let id = RingHom::identity(&z3);
        let rep = factor_check(&id, &id, &id).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn fibret_examples() {
        let z12 = zmod(12).unwrap();
        let amg = duplication(&z12, &Ideal::generated(&z12, &[6]).unwrap()).unwrap();
        let pb = as_pullback(&amg).unwrap();
        let rep = fibret_check(pb.alpha(), pb.beta()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.fact("retraction"), Some("true"));

        let z2 = zmod(2).unwrap();
        let rep = fibret_check(&RingHom::identity(&z2), &canonical(4, 2)).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.fact("retraction"), Some("false"));
        assert_eq!(rep.fact("unital homs A → B"), Some("0"));
    }

    #[test]
    fn prid_and_kernel_examples() {
        for (n, g) in [(6, 2), (4, 2)] {
            let zn = zmod(n).unwrap();
            let amg = duplication(&zn, &Ideal::generated(&zn, &[g]).unwrap()).unwrap();
            let pb = as_pullback(&amg).unwrap();
            let rep = prid_check(&pb).unwrap();
            assert!(rep.passed());
            assert_eq!(rep.fact("D reduced"), Some(if n == 6 { "true" } else { "false" }));
            assert!(kernel_identity_check(&pb).unwrap().passed());
        }
        let (z2, z4) = (zmod(2).unwrap(), zmod(4).unwrap());
        let zero = zmod(1).unwrap();
        let a = RingHom::new(&z2, &zero, vec![0, 0], true).unwrap();
        let b = RingHom::new(&z4, &zero, vec![0; 4], true).unwrap();
        let pb = pullback(&a, &b).unwrap();
        assert_eq!(pb.ring().order(), 8);
        let rep = prid_check(&pb).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.fact("D reduced"), Some("false"));
    }
}
