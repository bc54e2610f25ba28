//! Ring homomorphisms stored as total index maps.

mod search;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::guard::check_order;
use crate::ring::{direct_product, Ring};
use crate::subobjects::{ensure_same, Ideal, Subrng};

pub use search::{
    all_homs, find_iso, find_section, ring_generators, IsoOutcome, SECTION_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomCondition {
    PreservesZero,
    Additive,
    Multiplicative,
    PreservesOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomViolation {
    pub condition: HomCondition,
    pub witness: Vec<usize>,
}

/// Checks that `map` preserves zero, addition, multiplication and (when
/// `unital`) the identity. One entry per violated condition.
pub fn validate_hom(
    domain: &Ring,
    codomain: &Ring,
    map: &[usize],
    unital: bool,
) -> Result<Vec<HomViolation>> {
    if map.len() != domain.order() {
        return Err(Error::MalformedMap(format!(
            "{} images for a domain of order {}",
            map.len(),
            domain.order()
        )));
    }
    if let Some(i) = map.iter().position(|&y| y >= codomain.order()) {
        return Err(Error::MalformedMap(format!("image {} of element {i} out of range", map[i])));
    }
    let mut out = Vec::new();
    if map[domain.zero()] != codomain.zero() {
        out.push(HomViolation {
            condition: HomCondition::PreservesZero,
            witness: vec![domain.zero()],
        });
    }
    let pairs = || domain.elements().flat_map(|x| domain.elements().map(move |y| (x, y)));
    if let Some((x, y)) = pairs().find(|&(x, y)| map[domain.add(x, y)] != codomain.add(map[x], map[y])) {
        out.push(HomViolation {
            condition: HomCondition::Additive,
            witness: vec![x, y],
        });
    }
    if let Some((x, y)) = pairs().find(|&(x, y)| map[domain.mul(x, y)] != codomain.mul(map[x], map[y])) {
        out.push(HomViolation {
            condition: HomCondition::Multiplicative,
            witness: vec![x, y],
        });
    }
    if unital {
        match (domain.one(), codomain.one()) {
            (Some(o1), Some(o2)) if map[o1] == o2 => {}
            (Some(o1), _) => out.push(HomViolation {
                condition: HomCondition::PreservesOne,
                witness: vec![o1],
            }),
            (None, _) => return Err(Error::MissingIdentity),
        }
    }
    Ok(out)
}

/// A validated homomorphism between two finite rings.
#[derive(Clone)]
pub struct RingHom {
    domain: Ring,
    codomain: Ring,
    map: Vec<usize>,
    unital: bool,
}

impl PartialEq for RingHom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
            && crate::subobjects::same_ring(&self.domain, &other.domain)
            && crate::subobjects::same_ring(&self.codomain, &other.codomain)
    }
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("{a}↦{b}"))
            .collect();
        write!(f, "RingHom[{}]", pairs.join(", "))
    }
}

impl RingHom {
    pub fn new(domain: &Ring, codomain: &Ring, map: Vec<usize>, unital: bool) -> Result<RingHom> {
        let violations = validate_hom(domain, codomain, &map, unital)?;
        if let Some(v) = violations.first() {
            return Err(Error::InvalidHom(format!(
                "{:?} fails at {:?}",
                v.condition,
                v.witness.iter().map(|&x| domain.label(x)).collect::<Vec<_>>()
            )));
        }
        Ok(RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map,
            unital,
        })
    }

    /// For maps that hold by construction (inclusions, projections of
    /// tables built here).
    pub(crate) fn trusted(domain: &Ring, codomain: &Ring, map: Vec<usize>, unital: bool) -> RingHom {
        debug_assert!(validate_hom(domain, codomain, &map, unital).is_ok_and(|v| v.is_empty()));
        RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map,
            unital,
        }
    }

    pub fn identity(ring: &Ring) -> RingHom {
        RingHom {
            domain: ring.clone(),
            codomain: ring.clone(),
            map: ring.elements().collect(),
            unital: ring.has_one(),
        }
    }

    pub fn domain(&self) -> &Ring {
        &self.domain
    }

    pub fn codomain(&self) -> &Ring {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Re-runs the homomorphism check.
    pub fn validate(&self) -> Vec<HomViolation> {
        validate_hom(&self.domain, &self.codomain, &self.map, self.unital)
            .expect("stored maps are well formed")
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    pub fn kernel(&self) -> Ideal {
        let z = self.codomain.zero();
        Ideal::trusted(&self.domain, self.map.iter().map(|&y| y == z).collect())
    }

    pub fn image(&self) -> Subrng {
        let mut members = vec![false; self.codomain.order()];
        for &y in &self.map {
            members[y] = true;
        }
        Subrng::trusted(&self.codomain, members)
    }

    /// `f⁻¹(J)` for an ideal `J` of the codomain.
    pub fn preimage(&self, j: &Ideal) -> Result<Ideal> {
        ensure_same(&self.codomain, j.ring(), "preimage")?;
        Ok(Ideal::trusted(
            &self.domain,
            self.map.iter().map(|&y| j.contains(y)).collect(),
        ))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RingHom) -> Result<RingHom> {
        ensure_same(inner.codomain(), &self.domain, "compose: codomain(f) ≠ domain(g)")?;
        Ok(RingHom {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            map: inner.map.iter().map(|&x| self.map[x]).collect(),
            unital: self.unital && inner.unital,
        })
    }

    pub fn inverse(&self) -> Option<RingHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.codomain.order()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(RingHom {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            map: inv,
            unital: self.unital,
        })
    }

    /// The map as label pairs, for reports.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.domain.label(x).to_string(), self.codomain.label(y).to_string()))
            .collect()
    }
}

/// True when `f` is a bijective homomorphism. The homomorphism property is
/// re-checked, so a witness can be fed back through this function.
pub fn verify_iso(f: &RingHom) -> bool {
    f.validate().is_empty() && f.is_bijective()
}

/// The map `h` with `h ∘ q = g`, for a surjection `q: X → Y` and any
/// `g: X → Z` constant on the fibers of `q`. The result is validated.
pub fn factor_through(q: &RingHom, g: &RingHom) -> Result<RingHom> {
    ensure_same(q.domain(), g.domain(), "factor_through: q and g need a common domain")?;
    if !q.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let mut map = vec![usize::MAX; q.codomain().order()];
    for x in q.domain().elements() {
        let slot = &mut map[q.apply(x)];
        if *slot != usize::MAX && *slot != g.apply(x) {
            return Err(Error::InvalidHom(format!(
                "not constant on the fiber of {}",
                q.codomain().label(q.apply(x))
            )));
        }
        *slot = g.apply(x);
    }
    RingHom::new(q.codomain(), g.codomain(), map, q.unital && g.unital)
}

/// `f` with its codomain cut down to a subring containing its image.
pub fn corestrict(f: &RingHom, sub: &Subrng) -> Result<RingHom> {
    ensure_same(f.codomain(), sub.ring(), "corestrict")?;
    let (ring, inclusion) = sub.to_ring();
    let map = f
        .map
        .iter()
        .map(|&y| {
            inclusion
                .map()
                .binary_search(&y)
                .map_err(|_| Error::InvalidParameter(format!("{} is outside the subring", f.codomain().label(y))))
        })
        .collect::<Result<Vec<_>>>()?;
    RingHom::new(f.domain(), &ring, map, f.unital && sub.has_one())
}

/// `Γ(f) = {(a, f(a))}` as a subring of `A × B`.
pub fn graph(f: &RingHom) -> Result<(Ring, Subrng)> {
    let (a, b) = (f.domain(), f.codomain());
    check_order("A × B for the graph", (a.order() as u128) * (b.order() as u128))?;
    let product = direct_product(&[a, b])?;
    let mut members = vec![false; product.order()];
    for x in a.elements() {
        members[x * b.order() + f.apply(x)] = true;
    }
    let sub = Subrng::from_members(&product, members)?;
    Ok((product, sub))
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
    fn validation_examples() {
        let f = canonical(4, 2);
        assert!(f.validate().is_empty());
        let (z2, z4) = (zmod(2).unwrap(), zmod(4).unwrap());
        let v = validate_hom(&z2, &z4, &[0, 1], true).unwrap();
        assert_eq!(v[0].condition, HomCondition::Additive);
        assert_eq!(v[0].witness, vec![1, 1]);
        assert!(matches!(validate_hom(&z2, &z4, &[0], true), Err(Error::MalformedMap(_))));
        assert!(matches!(validate_hom(&z2, &z4, &[0, 9], true), Err(Error::MalformedMap(_))));
    }

    #[test]
    fn crt_map_into_product() {
        let z8 = zmod(8).unwrap();
        let z4 = zmod(4).unwrap();
        let b = direct_product(&[&z8, &z4]).unwrap();
        let map = (0..8).map(|n| n * 4 + n % 4).collect();
        let f = RingHom::new(&z8, &b, map, true).unwrap();
        assert!(f.is_injective() && !f.is_surjective());

        let z6 = zmod(6).unwrap();
        let p = direct_product(&[&zmod(2).unwrap(), &zmod(3).unwrap()]).unwrap();
        let crt = RingHom::new(&z6, &p, (0..6).map(|n| (n % 2) * 3 + n % 3).collect(), true).unwrap();
        assert!(verify_iso(&crt));
    }

    #[test]
    fn kernel_image_compose() {
        let f = canonical(4, 2);
        assert_eq!(f.kernel().elements(), vec![0, 2]);
        assert!(!verify_iso(&f));
        let z2 = f.codomain().clone();
        let p = direct_product(&[&z2, &z2]).unwrap();
        let diag = RingHom::new(&z2, &p, vec![0, 3], true).unwrap();
        assert_eq!(diag.image().labels(), vec!["(0,0)", "(1,1)"]);
        let id = RingHom::identity(&z2);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert!(verify_iso(&id));
        assert!(matches!(f.compose(&f), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn first_isomorphism_counting() {
        for n in 1..=12 {
            for m in 1..=12 {
                if n % m == 0 {
                    let f = canonical(n, m);
                    assert_eq!(n, f.kernel().len() * f.image().len());
                }
            }
        }
    }

    #[test]
    fn graph_examples() {
        let z2 = zmod(2).unwrap();
        let (_, g) = graph(&RingHom::identity(&z2)).unwrap();
        assert_eq!(g.labels(), vec!["(0,0)", "(1,1)"]);
        let f = canonical(4, 2);
        let (_, g) = graph(&f).unwrap();
        assert_eq!(g.labels(), vec!["(0,0)", "(1,1)", "(2,0)", "(3,1)"]);
        let (sub, _) = g.to_ring();
        let first = RingHom::new(&sub, f.domain(), (0..4).collect(), true).unwrap();
        assert!(verify_iso(&first));
    }
}
