//! The amalgamation `A ⋈^f J = {(a, f(a)+j) : a ∈ A, j ∈ J} ⊆ A × B` and
//! the constructions and checks built around it.

mod checks;
mod pairs;
mod pullback;
mod split;

use std::fmt;

use crate::error::{Error, Result};
use crate::guard::check_order;
use crate::morphism::RingHom;
use crate::report::{Recorder, VerificationReport};
use crate::ring::{direct_product, Provenance, Ring};
use crate::subobjects::{ensure_same, module_via_hom, quotient_ring, Ideal, Subrng};

pub use checks::{
    canonical_isos, cardinality_check, domain_criterion_check, iter_iso_check, reduced_criterion_check,
    reduced_converse_search, same_amalgam,
};
pub(crate) use checks::record_hom;
pub use pairs::PairRing;
pub use pullback::{
    alt_pullback_checks, as_pullback, factor_check, fibret_check, kernel_identity_check,
    prid_check, pull_identity_check, pullback, retraction_roundtrip, PullbackData,
};
pub use split::{dorroh, dotted_sum, idealization, split_sequence_check, SplitExtension};

/// `A ⋈^f J` with its canonical maps.
#[derive(Clone)]
pub struct Amalgam {
    f: RingHom,
    j: Ideal,
    pairs: PairRing,
    iota: RingHom,
    p_a: RingHom,
    p_b: RingHom,
    gamma: RingHom,
    b_diamond: Subrng,
    dotted: SplitExtension,
    f_join: RingHom,
}

impl fmt::Debug for Amalgam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Amalgam[{}]", self.describe())
    }
}

impl Amalgam {
    pub fn ring(&self) -> &Ring {
        self.pairs.ring()
    }

    pub fn pair_ring(&self) -> &PairRing {
        &self.pairs
    }

    pub fn f(&self) -> &RingHom {
        &self.f
    }

    pub fn j(&self) -> &Ideal {
        &self.j
    }

    pub fn a(&self) -> &Ring {
        self.f.domain()
    }

    pub fn b(&self) -> &Ring {
        self.f.codomain()
    }

    /// `a ↦ (a, f(a))`.
    pub fn iota(&self) -> &RingHom {
        &self.iota
    }

    pub fn p_a(&self) -> &RingHom {
        &self.p_a
    }

    pub fn p_b(&self) -> &RingHom {
        &self.p_b
    }

    /// `(a, f(a)+j) ↦ f(a) + J` in `(f(A)+J)/J`.
    pub fn gamma(&self) -> &RingHom {
        &self.gamma
    }

    /// `B_◇ = f(A) + J`.
    pub fn b_diamond(&self) -> &Subrng {
        &self.b_diamond
    }

    /// `A ⊕̇ J`, with `J` an `A`-module through `f`.
    pub fn dotted_sum(&self) -> &SplitExtension {
        &self.dotted
    }

    /// `f^⋈: A ⊕̇ J → A ⋈^f J`, `(a, j) ↦ (a, f(a)+j)`, validated bijective.
    pub fn f_join(&self) -> &RingHom {
        &self.f_join
    }

    pub fn index(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.index(a, b)
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs.pair(i)
    }

    /// `f⁻¹(J)`.
    pub fn contraction(&self) -> Ideal {
        self.f.preimage(&self.j).expect("J is an ideal of the codomain")
    }

    pub fn describe(&self) -> String {
        format!(
            "A⋈^f J with |A|={}, |B|={}, |J|={}",
            self.a().order(),
            self.b().order(),
            self.j.len()
        )
    }
}

/// Builds `A ⋈^f J`, attaches `ι`, `p_A`, `p_B`, `γ`, and validates
/// `f^⋈: A ⊕̇ J → A × B` as an injective homomorphism onto it.
pub fn amalgam(f: &RingHom, j: &Ideal) -> Result<Amalgam> {
    ensure_same(f.codomain(), j.ring(), "amalgam: J must be an ideal of the codomain of f")?;
    if !f.is_unital() {
        return Err(Error::HypothesisViolated("amalgam: f must be unital".into()));
    }
    let (a, b) = (f.domain(), f.codomain());
    check_order("A⋈^f J", (a.order() as u128) * (j.len() as u128))?;
    let js = j.elements();
    let pairs = a
        .elements()
        .flat_map(|x| js.iter().map(move |&y| (x, b.add(f.apply(x), y))))
        .collect();
    let pairs = PairRing::build(a, b, pairs, Provenance::Amalgam, "A⋈^f J")?;
    let ring = pairs.ring().clone();
    let iota = RingHom::new(
        a,
        &ring,
        a.elements().map(|x| pairs.index(x, f.apply(x)).expect("Γ(f) ⊆ A⋈^f J")).collect(),
        true,
    )?;
    let p_a = pairs.p_left();
    let p_b = pairs.p_right();

    let mut members = vec![false; b.order()];
    for &(_, y) in pairs.pairs() {
        members[y] = true;
    }
    let b_diamond = Subrng::from_members(b, members)?;
    let (bd, bd_incl) = b_diamond.to_ring();
    let pos = |y: usize| bd_incl.map().binary_search(&y).expect("inside B_◇");
    let j_in_bd = Ideal::from_members(&bd, bd_incl.map().iter().map(|&y| j.contains(y)).collect())?;
    let (q, proj) = quotient_ring(&j_in_bd)?;
    let gamma = RingHom::new(
        &ring,
        &q,
        pairs.pairs().iter().map(|&(x, _)| proj.apply(pos(f.apply(x)))).collect(),
        true,
    )?;

    let module = module_via_hom(f, j)?;
    let (j_rng, j_incl) = j.as_rng();
    let dotted = dotted_sum(a, &j_rng, &module)?;
    let join_map = dotted
        .ring()
        .elements()
        .map(|i| {
            let (x, t) = dotted.split(i);
            pairs
                .index(x, b.add(f.apply(x), j_incl.apply(t)))
                .expect("(a, f(a)+j) is in A⋈^f J")
        })
        .collect();
    let f_join = RingHom::new(dotted.ring(), &ring, join_map, true)?;
    if !f_join.is_bijective() {
        return Err(Error::InvalidHom("f^⋈ is not a bijection onto A⋈^f J".into()));
    }

    Ok(Amalgam {
        f: f.clone(),
        j: j.clone(),
        pairs,
        iota,
        p_a,
        p_b,
        gamma,
        b_diamond,
        dotted,
        f_join,
    })
}

/// `A ⋈ I = A ⋈^id I`.
pub fn duplication(a: &Ring, i: &Ideal) -> Result<Amalgam> {
    amalgam(&RingHom::identity(a), i)
}

/// The diagonal `f^(n): A → Bⁿ` and `Jⁿ`, with `Bⁿ` indexed
/// lexicographically (first coordinate most significant).
pub fn diagonal(f: &RingHom, j: &Ideal, n: usize) -> Result<(RingHom, Ideal)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let b = f.codomain();
    let factors: Vec<&crate::ring::FiniteRng> = (0..n).map(|_| b.as_ref()).collect();
    let bn = direct_product(&factors)?;
    let m = b.order();
    let spread = |y: usize| (0..n).fold(0, |acc, _| acc * m + y);
    let fn_ = RingHom::new(f.domain(), &bn, f.map().iter().map(|&y| spread(y)).collect(), true)?;
    let members = bn
        .elements()
        .map(|mut z| {
            (0..n).all(|_| {
                let ok = j.contains(z % m);
                z /= m;
                ok
            })
        })
        .collect();
    Ok((fn_, Ideal::from_members(&bn, members)?))
}

/// `A ⋈^{n,f} J = A ⋈^{f^(n)} Jⁿ`.
pub fn n_amalgam(f: &RingHom, j: &Ideal, n: usize) -> Result<Amalgam> {
    let exp = u32::try_from(n).map_err(|_| Error::InvalidParameter("n too large".into()))?;
    let requested = (j.len() as u128)
        .checked_pow(exp)
        .and_then(|p| p.checked_mul(f.domain().order() as u128))
        .unwrap_or(u128::MAX);
    check_order("A⋈^{n,f} J", requested)?;
    let (fn_, jn) = diagonal(f, j, n)?;
    amalgam(&fn_, &jn)
}

/// `B_◇ = f(A) + J`, and a report checking `A ⋈^{f_◇} J = A ⋈^f J` as
/// sets of pairs, `f_◇: A → B_◇` being `f` with restricted codomain.
pub fn b_diamond(f: &RingHom, j: &Ideal) -> Result<(Subrng, VerificationReport)> {
    let amg = amalgam(f, j)?;
    let bd = amg.b_diamond().clone();
    let mut rec = Recorder::new("b_diamond", &amg.describe());
    let (bd_ring, incl) = bd.to_ring();
    let f_d = crate::morphism::corestrict(f, &bd)?;
    let j_d = Ideal::from_members(&bd_ring, incl.map().iter().map(|&y| j.contains(y)).collect())?;
    rec.claim("J is an ideal of B_◇", true, String::new);
    let amg_d = amalgam(&f_d, &j_d)?;
    let mut lifted: Vec<(usize, usize)> = amg_d
        .pair_ring()
        .pairs()
        .iter()
        .map(|&(x, y)| (x, incl.apply(y)))
        .collect();
    lifted.sort_unstable();
    let diff = pairs::set_difference(amg.a(), amg.b(), amg.pair_ring().pairs(), &lifted);
    rec.claim("A⋈^{f_◇} J = A⋈^f J", diff.is_none(), || diff.clone().unwrap_or_default());
    rec.elements("B_◇", amg.b(), &bd.elements());
    rec.fact("|B_◇|", bd.len());
    Ok((bd, rec.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::zmod;

    fn canonical(n: usize, m: usize) -> RingHom {
        let (a, b) = (zmod(n).unwrap(), zmod(m).unwrap());
        RingHom::new(&a, &b, (0..n).map(|x| x % m).collect(), true).unwrap()
    }

    #[test]
    fn amalgam_examples() {
        let f = canonical(4, 2);
        let amg = amalgam(&f, &Ideal::whole(f.codomain())).unwrap();
        assert_eq!(amg.ring().order(), 8);
        let zero = amalgam(&f, &Ideal::zero(f.codomain())).unwrap();
        assert_eq!(zero.ring().order(), 4);
        assert_eq!(zero.ring().labels(), ["(0,0)", "(1,1)", "(2,0)", "(3,1)"]);
        let z2 = zmod(2).unwrap();
        let id = amalgam(&RingHom::identity(&z2), &Ideal::whole(&z2)).unwrap();
        assert!(id.ring().same_tables(&direct_product(&[&z2, &z2]).unwrap()));
        assert_eq!(amg.gamma().codomain().order(), 1);
        assert!(amg.f_join().is_bijective());
    }

    #[test]
    fn duplication_examples() {
        let z4 = zmod(4).unwrap();
        let d = duplication(&z4, &Ideal::generated(&z4, &[2]).unwrap()).unwrap();
        assert_eq!(d.ring().order(), 8);
        assert!(!d.ring().is_reduced());
        let z6 = zmod(6).unwrap();
        let d = duplication(&z6, &Ideal::generated(&z6, &[2]).unwrap()).unwrap();
        assert_eq!(d.ring().order(), 18);
        assert!(d.ring().is_reduced());
        let d = duplication(&z6, &Ideal::zero(&z6)).unwrap();
        assert_eq!(d.ring().order(), 6);
    }

    #[test]
    fn n_amalgam_examples() {
        let z4 = zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let i = Ideal::generated(&z4, &[2]).unwrap();
        assert_eq!(n_amalgam(&id, &i, 2).unwrap().ring().order(), 16);
        let one = n_amalgam(&id, &i, 1).unwrap();
        assert_eq!(one.pair_ring().pairs(), duplication(&z4, &i).unwrap().pair_ring().pairs());
        let z2 = zmod(2).unwrap();
        let full = n_amalgam(&RingHom::identity(&z2), &Ideal::whole(&z2), 2).unwrap();
        assert_eq!(full.ring().order(), 8);
        assert!(matches!(n_amalgam(&id, &i, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn b_diamond_examples() {
        let f = canonical(4, 2);
        let (bd, rep) = b_diamond(&f, &Ideal::zero(f.codomain())).unwrap();
        assert_eq!(bd.len(), 2);
        assert!(rep.passed());
        let z2 = zmod(2).unwrap();
        let v = direct_product(&[&z2, &z2]).unwrap();
        let diag = RingHom::new(&z2, &v, vec![0, 3], true).unwrap();
        let j = Ideal::generated(&v, &[2]).unwrap();
        let (bd, rep) = b_diamond(&diag, &j).unwrap();
        assert_eq!(bd.len(), 4);
        assert!(rep.passed());
        let z6 = zmod(6).unwrap();
        let (bd, _) = b_diamond(&RingHom::identity(&z6), &Ideal::generated(&z6, &[3]).unwrap()).unwrap();
        assert_eq!(bd.len(), 6);
    }

    #[test]
    fn non_unital_f_is_rejected() {
        let z2 = zmod(2).unwrap();
        let (r, incl) = Ideal::whole(&z2).as_rng();
        let _ = r;
        assert!(matches!(amalgam(&incl, &Ideal::whole(&z2)), Err(Error::HypothesisViolated(_))));
    }
}
