//! Ideals, subrings, quotients, localizations and finite modules.

mod localization;
mod module;
mod quotient;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::morphism::RingHom;
use crate::ring::{FiniteRng, Provenance, Ring};

pub use localization::{localization, multiplicative_closure};
pub use module::{module_min_generators, module_via_hom, FiniteModule, MinGenerators, ModuleAxiom};
pub use quotient::{nilradical, quotient_ring, regular_elements_mod};

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn ensure_same(a: &Ring, b: &Ring, what: &str) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(what.to_string()))
    }
}

fn check_indices(ring: &FiniteRng, elems: &[usize]) -> Result<()> {
    match elems.iter().find(|&&e| e >= ring.order()) {
        Some(e) => Err(Error::InvalidParameter(format!(
            "element index {e} out of range for a ring of order {}",
            ring.order()
        ))),
        None => Ok(()),
    }
}

/// Smallest subset containing `seed` and closed under the given unary and
/// binary rules. Runs a worklist to a fixpoint.
fn close(
    order: usize,
    seed: impl IntoIterator<Item = usize>,
    unary: impl Fn(usize, &mut dyn FnMut(usize)),
    binary: impl Fn(usize, usize) -> Vec<usize>,
) -> Vec<bool> {
    let mut members = vec![false; order];
    let mut list = Vec::new();
    let mut queue = VecDeque::new();
    for s in seed {
        if !members[s] {
            members[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        list.push(x);
        let mut fresh = Vec::new();
        unary(x, &mut |y| fresh.push(y));
        for &y in &list {
            fresh.extend(binary(x, y));
        }
        for y in fresh {
            if !members[y] {
                members[y] = true;
                queue.push_back(y);
            }
        }
    }
    members
}

fn indices(members: &[bool]) -> Vec<usize> {
    members
        .iter()
        .enumerate()
        .filter_map(|(i, &m)| m.then_some(i))
        .collect()
}

/// An ideal of a finite rng, stored as a membership vector.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    members: Vec<bool>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.elements().into_iter().map(|x| self.ring.label(x)).collect();
        write!(f, "Ideal{{{}}}", labels.join(", "))
    }
}

impl Ideal {
    /// Checks the ideal axioms on an explicit membership vector.
    pub fn from_members(ring: &Ring, members: Vec<bool>) -> Result<Ideal> {
        if members.len() != ring.order() {
            return Err(Error::NotAnIdeal(format!(
                "membership vector of length {} for a ring of order {}",
                members.len(),
                ring.order()
            )));
        }
        if !members[ring.zero()] {
            return Err(Error::NotAnIdeal("does not contain zero".into()));
        }
        let elems = indices(&members);
        for &x in &elems {
            if !members[ring.neg(x)] {
                return Err(Error::NotAnIdeal(format!("not closed under negation at {}", ring.label(x))));
            }
            for &y in &elems {
                if !members[ring.add(x, y)] {
                    return Err(Error::NotAnIdeal(format!(
                        "{} + {} escapes",
                        ring.label(x),
                        ring.label(y)
                    )));
                }
            }
            for r in ring.elements() {
                if !members[ring.mul(r, x)] {
                    return Err(Error::NotAnIdeal(format!(
                        "{} · {} escapes",
                        ring.label(r),
                        ring.label(x)
                    )));
                }
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            members,
        })
    }

    pub fn from_elements(ring: &Ring, elems: &[usize]) -> Result<Ideal> {
        check_indices(ring, elems)?;
        let mut members = vec![false; ring.order()];
        for &e in elems {
            members[e] = true;
        }
        Ideal::from_members(ring, members)
    }

    pub(crate) fn trusted(ring: &Ring, members: Vec<bool>) -> Ideal {
        debug_assert_eq!(members.len(), ring.order());
        Ideal {
            ring: ring.clone(),
            members,
        }
    }

    /// Least ideal containing `gens`, by closure under addition, negation
    /// and multiplication by arbitrary ring elements.
    pub fn generated(ring: &Ring, gens: &[usize]) -> Result<Ideal> {
        check_indices(ring, gens)?;
        let r = ring.as_ref();
        let members = close(
            r.order(),
            std::iter::once(r.zero()).chain(gens.iter().copied()),
            |x, push| {
                push(r.neg(x));
                for s in r.elements() {
                    push(r.mul(s, x));
                }
            },
            |x, y| vec![r.add(x, y)],
        );
        Ok(Ideal::trusted(ring, members))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        let mut members = vec![false; ring.order()];
        members[ring.zero()] = true;
        Ideal::trusted(ring, members)
    }

    pub fn whole(ring: &Ring) -> Ideal {
        Ideal::trusted(ring, vec![true; ring.order()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn elements(&self) -> Vec<usize> {
        indices(&self.members)
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().into_iter().map(|x| self.ring.label(x).to_string()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        ensure_same(&self.ring, &other.ring, "ideal sum")?;
        let mut gens = self.elements();
        gens.extend(other.elements());
        Ideal::generated(&self.ring, &gens)
    }

    /// Ideal generated by all products `x·y`, `x ∈ self`, `y ∈ other`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        ensure_same(&self.ring, &other.ring, "ideal product")?;
        let mut gens = Vec::new();
        let theirs = other.elements();
        for x in self.elements() {
            for &y in &theirs {
                gens.push(self.ring.mul(x, y));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        Ideal::generated(&self.ring, &gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        ensure_same(&self.ring, &other.ring, "ideal intersection")?;
        let members = self.members.iter().zip(&other.members).map(|(&a, &b)| a && b).collect();
        Ok(Ideal::trusted(&self.ring, members))
    }

    pub fn is_idempotent(&self) -> bool {
        self.product(self).map(|p| p == *self).unwrap_or(false)
    }

    /// `R/I` is an integral domain.
    pub fn is_prime(&self) -> Result<bool> {
        let (q, _) = quotient_ring(self)?;
        q.is_domain()
    }

    /// `R/I` is a field.
    pub fn is_maximal(&self) -> Result<bool> {
        let (q, _) = quotient_ring(self)?;
        q.is_field()
    }

    /// `R/I` has no nonzero nilpotents.
    pub fn is_radical(&self) -> Result<bool> {
        let (q, _) = quotient_ring(self)?;
        Ok(nilradical(&q).is_zero())
    }

    /// The ideal as a rng in its own right, with its (non-unital) inclusion.
    pub fn as_rng(&self) -> (Ring, RingHom) {
        let elems = self.elements();
        let sub = self.ring.restrict(&elems, false, Provenance::Subring);
        let inclusion = RingHom::trusted(&sub, &self.ring, elems, false);
        (sub, inclusion)
    }

    /// Every element that is `x + i` for some `i` in the ideal.
    pub fn coset(&self, x: usize) -> Vec<usize> {
        self.elements().into_iter().map(|i| self.ring.add(x, i)).collect()
    }
}

/// Every ideal of `ring`, as sums of principal ideals, in a deterministic
/// order (by size, then membership vector), truncated to `cap`.
pub fn all_ideals(ring: &Ring, cap: usize) -> Vec<Ideal> {
    let mut found: Vec<Vec<bool>> = Vec::new();
    let mut principal: Vec<Vec<bool>> = Vec::new();
    for x in ring.elements() {
        let p = Ideal::generated(ring, &[x]).expect("index in range").members;
        if !principal.contains(&p) {
            principal.push(p);
        }
    }
    let mut frontier = principal.clone();
    found.extend(principal.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for p in &principal {
                let s: Vec<bool> = a.iter().zip(p).map(|(&x, &y)| x || y).collect();
                let s = Ideal::generated(ring, &indices(&s)).expect("in range").members;
                if !found.contains(&s) {
                    found.push(s.clone());
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| {
        let (ca, cb) = (a.iter().filter(|&&m| m).count(), b.iter().filter(|&&m| m).count());
        ca.cmp(&cb).then_with(|| b.cmp(a))
    });
    found.truncate(cap);
    found.into_iter().map(|m| Ideal::trusted(ring, m)).collect()
}

/// A subrng of a finite ring; `has_one` marks a unital subring containing the
/// ambient identity.
#[derive(Clone)]
pub struct Subrng {
    ring: Ring,
    members: Vec<bool>,
    has_one: bool,
}

impl PartialEq for Subrng {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.has_one == other.has_one && same_ring(&self.ring, &other.ring)
    }
}

impl fmt::Debug for Subrng {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.elements().into_iter().map(|x| self.ring.label(x)).collect();
        write!(f, "Subrng{{{}}}", labels.join(", "))
    }
}

impl Subrng {
    /// Checks closure under `+`, `-`, `·`; `has_one` is set when the
    /// ambient identity is a member.
    pub fn from_members(ring: &Ring, members: Vec<bool>) -> Result<Subrng> {
        if members.len() != ring.order() || !members[ring.zero()] {
            return Err(Error::InvalidParameter("subrng must contain zero".into()));
        }
        let elems = indices(&members);
        for &x in &elems {
            if !members[ring.neg(x)] {
                return Err(Error::InvalidParameter("subrng not closed under negation".into()));
            }
            for &y in &elems {
                if !members[ring.add(x, y)] || !members[ring.mul(x, y)] {
                    return Err(Error::InvalidParameter(format!(
                        "subrng not closed at ({}, {})",
                        ring.label(x),
                        ring.label(y)
                    )));
                }
            }
        }
        let has_one = ring.one().is_some_and(|o| members[o]);
        Ok(Subrng {
            ring: ring.clone(),
            members,
            has_one,
        })
    }

    pub(crate) fn trusted(ring: &Ring, members: Vec<bool>) -> Subrng {
        let has_one = ring.one().is_some_and(|o| members[o]);
        Subrng {
            ring: ring.clone(),
            members,
            has_one,
        }
    }

    /// Least subrng containing `seed` (and the identity, when
    /// `include_one`), by closure to a fixpoint.
    pub fn generated(ring: &Ring, seed: &[usize], include_one: bool) -> Result<Subrng> {
        check_indices(ring, seed)?;
        let one = if include_one { Some(ring.require_one()?) } else { None };
        let r = ring.as_ref();
        let members = close(
            r.order(),
            std::iter::once(r.zero()).chain(one).chain(seed.iter().copied()),
            |x, push| push(r.neg(x)),
            |x, y| vec![r.add(x, y), r.mul(x, y)],
        );
        Ok(Subrng::trusted(ring, members))
    }

    pub fn whole(ring: &Ring) -> Subrng {
        Subrng::trusted(ring, vec![true; ring.order()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn has_one(&self) -> bool {
        self.has_one
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        indices(&self.members)
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().into_iter().map(|x| self.ring.label(x).to_string()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The subring as a ring of its own, with the inclusion into the ambient
    /// ring (unital exactly when `has_one`).
    pub fn to_ring(&self) -> (Ring, RingHom) {
        let elems = self.elements();
        let sub = self.ring.restrict(&elems, self.has_one, Provenance::Subring);
        let inclusion = RingHom::trusted(&sub, &self.ring, elems, self.has_one);
        (sub, inclusion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{direct_product, zmod};

    fn ideal_labels(i: &Ideal) -> Vec<String> {
        i.labels()
    }

    #[test]
    fn ideal_generation_examples() {
        let z12 = zmod(12).unwrap();
        let i = Ideal::generated(&z12, &[2]).unwrap();
        assert_eq!(i.elements(), vec![0, 2, 4, 6, 8, 10]);
        let z6 = zmod(6).unwrap();
        assert!(Ideal::generated(&z6, &[]).unwrap().is_zero());
        let z2 = zmod(2).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        let e = p.index_of("(1,0)").unwrap();
        let i = Ideal::generated(&p, &[e]).unwrap();
        assert_eq!(ideal_labels(&i), vec!["(0,0)", "(1,0)"]);
    }

    #[test]
    fn generation_is_idempotent() {
        let z12 = zmod(12).unwrap();
        for x in z12.elements() {
            let i = Ideal::generated(&z12, &[x]).unwrap();
            let again = Ideal::generated(&z12, &i.elements()).unwrap();
            assert_eq!(i, again);
            assert!(Ideal::from_members(&z12, i.members().to_vec()).is_ok());
        }
    }

    #[test]
    fn non_ideals_are_rejected() {
        let z6 = zmod(6).unwrap();
        assert!(matches!(Ideal::from_elements(&z6, &[0, 1]), Err(Error::NotAnIdeal(_))));
        assert!(matches!(Ideal::from_elements(&z6, &[2, 4]), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn ideal_arithmetic() {
        let z6 = zmod(6).unwrap();
        let three = Ideal::generated(&z6, &[3]).unwrap();
        assert_eq!(three.product(&three).unwrap(), three);
        assert!(three.is_idempotent());
        let z4 = zmod(4).unwrap();
        let two = Ideal::generated(&z4, &[2]).unwrap();
        assert!(two.product(&two).unwrap().is_zero());
        assert!(!two.is_idempotent());
        let z12 = zmod(12).unwrap();
        let (a, b) = (
            Ideal::generated(&z12, &[4]).unwrap(),
            Ideal::generated(&z12, &[6]).unwrap(),
        );
        assert!(a.intersection(&b).unwrap().is_zero());
        assert_eq!(a.sum(&b).unwrap(), Ideal::generated(&z12, &[2]).unwrap());
        let z2 = zmod(2).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        let e = Ideal::generated(&p, &[p.index_of("(1,0)").unwrap()]).unwrap();
        assert!(e.is_idempotent());
        assert!(matches!(a.sum(&two), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn prime_maximal_radical() {
        let z12 = zmod(12).unwrap();
        let two = Ideal::generated(&z12, &[2]).unwrap();
        assert!(two.is_prime().unwrap() && two.is_maximal().unwrap());
        let four = Ideal::generated(&z12, &[4]).unwrap();
        assert!(!four.is_prime().unwrap());
        let z6 = zmod(6).unwrap();
        let zero = Ideal::zero(&z6);
        assert!(zero.is_radical().unwrap());
        assert!(!zero.is_prime().unwrap());
    }

    #[test]
    fn subring_generation_examples() {
        let z12 = zmod(12).unwrap();
        let s = Subrng::generated(&z12, &[4], false).unwrap();
        assert_eq!(s.elements(), vec![0, 4, 8]);
        assert!(!s.has_one());
        let z2 = zmod(2).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        let d = Subrng::generated(&p, &[p.index_of("(1,1)").unwrap()], true).unwrap();
        assert_eq!(d.labels(), vec!["(0,0)", "(1,1)"]);
        let all: Vec<usize> = z12.elements().collect();
        assert_eq!(Subrng::generated(&z12, &all, false).unwrap(), Subrng::whole(&z12));
    }

    #[test]
    fn all_ideals_of_small_rings() {
        let z12 = zmod(12).unwrap();
        // divisors of 12
        assert_eq!(all_ideals(&z12, 100).len(), 6);
        let z2 = zmod(2).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        assert_eq!(all_ideals(&p, 100).len(), 4);
        let first = &all_ideals(&z12, 100)[0];
        assert!(first.is_zero());
    }
}
