//! Split extensions `A ⊕̇ R`: the group `A ⊕ R` with product
//! `(a,x)(a',x') = (aa', a·x' + a'·x + xx')`.

use crate::error::{Error, Result};
use crate::guard::check_order;
use crate::morphism::RingHom;
use crate::report::{Recorder, VerificationReport};
use crate::ring::{zmod, FiniteRng, Provenance, Ring};
use crate::subobjects::{quotient_ring, FiniteModule, Ideal};

/// `A ⊕̇ R` with its structure maps. Element `(a, x)` has index
/// `a·|R| + x`.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    ring: Ring,
    base: Ring,
    fiber_order: usize,
    iota_a: RingHom,
    p_a: RingHom,
    embed: Vec<usize>,
}

impl SplitExtension {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// `a ↦ (a, 0)`.
    pub fn iota_a(&self) -> &RingHom {
        &self.iota_a
    }

    /// `(a, x) ↦ a`.
    pub fn p_a(&self) -> &RingHom {
        &self.p_a
    }

    /// Images of `x ↦ (0, x)`, indexed by `x`.
    pub fn embed(&self) -> &[usize] {
        &self.embed
    }

    pub fn index(&self, a: usize, x: usize) -> usize {
        a * self.fiber_order + x
    }

    pub fn split(&self, i: usize) -> (usize, usize) {
        (i / self.fiber_order, i % self.fiber_order)
    }

    /// `{0} × R` as an ideal.
    pub fn fiber_ideal(&self) -> Ideal {
        let mut members = vec![false; self.ring.order()];
        for &e in &self.embed {
            members[e] = true;
        }
        Ideal::from_members(&self.ring, members).expect("the fiber is an ideal")
    }
}

fn extension(
    a: &Ring,
    module: &FiniteModule,
    fiber_mul: impl Fn(usize, usize) -> usize,
    provenance: Provenance,
) -> Result<SplitExtension> {
    let one = a.require_one()?;
    let m = module.order();
    let n = check_order("split extension A ⊕ R", (a.order() as u128) * (m as u128))?;
    let labels = (0..n)
        .map(|i| format!("({},{})", a.label(i / m), module.label(i % m)))
        .collect();
    let ring = FiniteRng::build(
        n,
        |i, j| {
            let ((x, u), (y, v)) = ((i / m, i % m), (j / m, j % m));
            a.add(x, y) * m + module.add(u, v)
        },
        |i, j| {
            let ((x, u), (y, v)) = ((i / m, i % m), (j / m, j % m));
            let second = module.add(module.add(module.act(x, v), module.act(y, u)), fiber_mul(u, v));
            a.mul(x, y) * m + second
        },
        a.zero() * m + module.zero(),
        Some(one * m + module.zero()),
        labels,
        provenance,
    );
    let iota_a = RingHom::new(a, &ring, a.elements().map(|x| x * m + module.zero()).collect(), true)?;
    let p_a = RingHom::new(&ring, a, (0..n).map(|i| i / m).collect(), true)?;
    Ok(SplitExtension {
        embed: (0..m).map(|x| a.zero() * m + x).collect(),
        ring,
        base: a.clone(),
        fiber_order: m,
        iota_a,
        p_a,
    })
}

/// `A ⊕̇ R` for a rng `R` that is also an `A`-module on the same group.
/// Needs `a·(xy) = (a·x)y` so that the product is associative.
pub fn dotted_sum(a: &Ring, r: &Ring, module: &FiniteModule) -> Result<SplitExtension> {
    if !module.same_group(r) || !crate::subobjects::same_ring(module.scalars(), a) {
        return Err(Error::IncompatibleStructures(
            "the module must be over A and share the additive group of R".into(),
        ));
    }
    for s in a.elements() {
        for x in r.elements() {
            for y in r.elements() {
                if module.act(s, r.mul(x, y)) != r.mul(module.act(s, x), y) {
                    return Err(Error::IncompatibleStructures(format!(
                        "a·(xy) ≠ (a·x)y at a={}, x={}, y={}",
                        a.label(s),
                        r.label(x),
                        r.label(y)
                    )));
                }
            }
        }
    }
    extension(a, module, |u, v| r.mul(u, v), Provenance::DottedSum)
}

/// `A ⋉ M`: the split extension with `xx' = 0`.
pub fn idealization(a: &Ring, module: &FiniteModule) -> Result<SplitExtension> {
    let z = module.zero();
    extension(a, module, |_, _| z, Provenance::Idealization)
}

/// Checks that `0 → R → A⊕̇R → A → 0` is split exact: `p_A ∘ ι_A = id`,
/// `Ker(p_A) = ι_R(R)`, `ι_R` injective, and `A⊕̇R = A(1,0) + R`.
pub fn split_sequence_check(ext: &SplitExtension) -> VerificationReport {
    let instance = format!("A ⊕̇ R, |A|={}, |R|={}", ext.base().order(), ext.embed().len());
    let mut rec = Recorder::new("split_sequence", &instance);
    let d = ext.ring();
    let a = ext.base();
    let section = ext.p_a().compose(ext.iota_a()).expect("composable by construction");
    rec.claim("p_A∘ι_A = id_A", section.map().iter().enumerate().all(|(x, &y)| x == y), || {
        format!("{section:?}")
    });
    let kernel = ext.p_a().kernel().elements();
    let mut image = ext.embed().to_vec();
    image.sort_unstable();
    image.dedup();
    rec.claim("ι_R injective", image.len() == ext.embed().len(), || "two elements of R share an image".into());
    rec.claim("Ker(p_A) = ι_R(R)", kernel == image, || {
        format!("kernel {:?} vs image {:?}", labels(d, &kernel), labels(d, &image))
    });
    let mut covered = vec![false; d.order()];
    for s in a.elements() {
        for &e in ext.embed() {
            covered[d.add(ext.iota_a().apply(s), e)] = true;
        }
    }
    let missing = covered.iter().position(|&c| !c);
    rec.claim("A(1,0) + R covers the ring", missing.is_none(), || {
        format!("{} is not of the form a(1,0)+x", d.label(missing.unwrap()))
    });
    rec.map("iota_A", ext.iota_a());
    rec.map("p_A", ext.p_a());
    rec.elements("Ker(p_A)", d, &kernel);
    rec.finish()
}

fn labels(r: &FiniteRng, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| r.label(x).to_string()).collect()
}

/// `Dh_n(R) = (Z/nZ) ⊕̇ R` with `n` the characteristic of `R`, and a report
/// validating `Dh_n(R)/R ≅ Z/nZ` and `Dh_n(R) = (Z/nZ)(1,0) + R`.
pub fn dorroh(r: &Ring) -> Result<(SplitExtension, VerificationReport)> {
    let n = r.characteristic();
    let zn = zmod(n)?;
    let module = FiniteModule::from_action(&zn, r, |k, x| r.times(k, x))?;
    let ext = dotted_sum(&zn, r, &module)?;
    let mut rec = Recorder::new("dorroh", &format!("Dh_{n}(R), |R|={}", r.order()));
    rec.fact("n", n);
    rec.fact("order", ext.ring().order());
    rec.claim("identity present", ext.ring().has_one(), || "no identity".into());
    let fiber = ext.fiber_ideal();
    let (q, proj) = quotient_ring(&fiber)?;
    let witness = proj.compose(ext.iota_a())?;
    rec.iso("Z/nZ → Dh_n(R)/R", &witness);
    rec.fact("quotient order", q.order());
    let split = split_sequence_check(&ext);
    for c in &split.claims {
        rec.claim(&c.name, c.holds, || split.counterexample.clone().unwrap_or_default());
    }
    Ok((ext, rec.finish()))
}
