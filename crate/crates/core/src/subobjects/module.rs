use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphism::RingHom;
use crate::ring::{FiniteRng, Ring};

use super::Ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleAxiom {
    AbelianGroup,
    DistributesOverElements,
    DistributesOverScalars,
    Compatible,
    UnitActsTrivially,
}

/// A finite module over a finite unital ring: an abelian group table plus a
/// scalar action table.
#[derive(Clone)]
pub struct FiniteModule {
    scalars: Ring,
    order: usize,
    add: Vec<u32>,
    zero: usize,
    action: Vec<u32>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteModule{{{}}}", self.labels.join(", "))
    }
}

impl FiniteModule {
    /// The additive group of `group` with the action `a·x := action(a, x)`.
    /// All module axioms are checked.
    pub fn from_action(
        scalars: &Ring,
        group: &FiniteRng,
        action: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteModule> {
        scalars.require_one()?;
        let n = group.order();
        let mut add = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push(group.add(x, y) as u32);
            }
        }
        let mut act = Vec::with_capacity(scalars.order() * n);
        for a in scalars.elements() {
            for x in 0..n {
                let y = action(a, x);
                if y >= n {
                    return Err(Error::InvalidParameter(format!("action result {y} out of range")));
                }
                act.push(y as u32);
            }
        }
        let module = FiniteModule {
            scalars: scalars.clone(),
            order: n,
            add,
            zero: group.zero(),
            action: act,
            labels: group.labels().to_vec(),
        };
        if let Some((axiom, witness)) = module.first_violation() {
            return Err(Error::IncompatibleStructures(format!(
                "module axiom {axiom:?} fails at {witness:?}"
            )));
        }
        Ok(module)
    }

    /// `R` as a module over itself.
    pub fn regular(ring: &Ring) -> Result<FiniteModule> {
        FiniteModule::from_action(ring, ring, |a, x| ring.mul(a, x))
    }

    pub fn zero_module(scalars: &Ring) -> Result<FiniteModule> {
        let trivial = crate::ring::zmod(1)?;
        FiniteModule::from_action(scalars, &trivial, |_, _| 0)
    }

    pub fn scalars(&self) -> &Ring {
        &self.scalars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }

    pub fn act(&self, a: usize, x: usize) -> usize {
        self.action[a * self.order + x] as usize
    }

    pub fn same_group(&self, ring: &FiniteRng) -> bool {
        ring.order() == self.order
            && ring.zero() == self.zero
            && (0..self.order).all(|x| (0..self.order).all(|y| ring.add(x, y) == self.add(x, y)))
    }

    /// First violated module axiom, if any, with a witness tuple.
    pub fn first_violation(&self) -> Option<(ModuleAxiom, Vec<usize>)> {
        let a_ring = &self.scalars;
        let n = self.order;
        for x in 0..n {
            if self.add(self.zero, x) != x {
                return Some((ModuleAxiom::AbelianGroup, vec![x]));
            }
            if !(0..n).any(|y| self.add(x, y) == self.zero) {
                return Some((ModuleAxiom::AbelianGroup, vec![x]));
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Some((ModuleAxiom::AbelianGroup, vec![x, y]));
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return Some((ModuleAxiom::AbelianGroup, vec![x, y, z]));
                    }
                }
            }
        }
        let one = a_ring.one().expect("scalars are unital");
        for x in 0..n {
            if self.act(one, x) != x {
                return Some((ModuleAxiom::UnitActsTrivially, vec![x]));
            }
        }
        for a in a_ring.elements() {
            for x in 0..n {
                for y in 0..n {
                    if self.act(a, self.add(x, y)) != self.add(self.act(a, x), self.act(a, y)) {
                        return Some((ModuleAxiom::DistributesOverElements, vec![a, x, y]));
                    }
                }
                for b in a_ring.elements() {
                    if self.act(a_ring.add(a, b), x) != self.add(self.act(a, x), self.act(b, x)) {
                        return Some((ModuleAxiom::DistributesOverScalars, vec![a, b, x]));
                    }
                    if self.act(a_ring.mul(a, b), x) != self.act(a, self.act(b, x)) {
                        return Some((ModuleAxiom::Compatible, vec![a, b, x]));
                    }
                }
            }
        }
        None
    }

    /// Submodule generated by `gens`, as a membership vector.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut members = vec![false; self.order];
        members[self.zero] = true;
        let mut list = vec![self.zero];
        for &g in gens {
            for a in self.scalars.elements() {
                let y = self.act(a, g);
                if !members[y] {
                    members[y] = true;
                    list.push(y);
                }
            }
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for j in 0..=i {
                let s = self.add(x, list[j]);
                if !members[s] {
                    members[s] = true;
                    list.push(s);
                }
            }
            i += 1;
        }
        members
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.span(gens).iter().all(|&m| m)
    }
}

/// The ideal `J` of `B` as an `A`-module through `f: A → B`, `a·j = f(a)j`.
pub fn module_via_hom(f: &RingHom, j: &Ideal) -> Result<FiniteModule> {
    super::ensure_same(f.codomain(), j.ring(), "module_via_hom: J must be an ideal of the codomain")?;
    let (carrier, inclusion) = j.as_rng();
    let b = f.codomain();
    let position = |y: usize| inclusion.map().binary_search(&y).expect("J absorbs B");
    FiniteModule::from_action(f.domain(), &carrier, |a, x| {
        position(b.mul(f.apply(a), inclusion.apply(x)))
    })
}

/// Result of [`module_min_generators`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinGenerators {
    pub elements: Vec<usize>,
    /// False when the exhaustive search hit its budget and `elements` is a
    /// greedy (possibly non-minimum) generating set.
    pub exhaustive: bool,
}

/// Subset evaluations allowed before falling back to a greedy generating set.
pub const MIN_GENERATOR_BUDGET: u64 = 1 << 16;

/// A generating set of minimum size, found by trying subsets in order of
/// size and, within a size, in lexicographic index order.
pub fn module_min_generators(module: &FiniteModule) -> MinGenerators {
    let candidates: Vec<usize> = (0..module.order()).filter(|&x| x != module.zero()).collect();
    if module.generates(&[]) {
        return MinGenerators {
            elements: vec![],
            exhaustive: true,
        };
    }
    let mut evaluations = 0u64;
    for size in 1..=candidates.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            evaluations += 1;
            if evaluations > MIN_GENERATOR_BUDGET {
                return greedy_generators(module);
            }
            let set: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
            if module.generates(&set) {
                return MinGenerators {
                    elements: set,
                    exhaustive: true,
                };
            }
            // next combination in lexicographic order
            let mut k = size;
            while k > 0 && idx[k - 1] == candidates.len() - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for t in k..size {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
    unreachable!("the whole module generates itself")
}

fn greedy_generators(module: &FiniteModule) -> MinGenerators {
    let mut gens = Vec::new();
    let mut covered = module.span(&gens);
    for x in 0..module.order() {
        if !covered[x] {
            gens.push(x);
            covered = module.span(&gens);
        }
    }
    MinGenerators {
        elements: gens,
        exhaustive: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::RingHom;
    use crate::ring::{direct_product, zmod};

    #[test]
    fn module_over_canonical_projection() {
        let (z4, z2) = (zmod(4).unwrap(), zmod(2).unwrap());
        let f = RingHom::new(&z4, &z2, vec![0, 1, 0, 1], true).unwrap();
        let m = module_via_hom(&f, &Ideal::whole(&z2)).unwrap();
        assert_eq!(m.order(), 2);
        for a in 0..4 {
            for x in 0..2 {
                assert_eq!(m.act(a, x), (a % 2) * x);
            }
        }
        assert!(m.first_violation().is_none());
    }

    #[test]
    fn module_on_an_ideal_via_identity() {
        let z6 = zmod(6).unwrap();
        let id = RingHom::identity(&z6);
        let two = Ideal::generated(&z6, &[2]).unwrap();
        let m = module_via_hom(&id, &two).unwrap();
        assert_eq!(m.labels(), &["0", "2", "4"]);
        let two_idx = 1;
        assert_eq!(m.label(m.act(5, two_idx)), "4");
    }

    #[test]
    fn module_through_a_product_embedding() {
        let (z8, z4) = (zmod(8).unwrap(), zmod(4).unwrap());
        let b = direct_product(&[&z8, &z4]).unwrap();
        let map: Vec<usize> = (0..8).map(|n| b.index_of(&format!("({},{})", n, n % 4)).unwrap()).collect();
        let f = RingHom::new(&z8, &b, map, true).unwrap();
        let gens: Vec<usize> = (0..8).map(|n| b.index_of(&format!("({n},0)")).unwrap()).collect();
        let j = Ideal::generated(&b, &gens).unwrap();
        assert_eq!(j.len(), 8);
        let m = module_via_hom(&f, &j).unwrap();
        for a in 0..8 {
            for x in 0..8 {
                let expected = format!("({},0)", (a * x) % 8);
                let xi = m.labels().iter().position(|l| *l == format!("({x},0)")).unwrap();
                assert_eq!(m.label(m.act(a, xi)), expected);
            }
        }
    }

    #[test]
    fn broken_action_is_rejected() {
        let z2 = zmod(2).unwrap();
        let z4 = zmod(4).unwrap();
        // 1·x must be x
        let err = FiniteModule::from_action(&z2, &z4, |_, _| 0).unwrap_err();
        assert!(matches!(err, Error::IncompatibleStructures(_)));
    }

    #[test]
    fn minimum_generators() {
        let z2 = zmod(2).unwrap();
        let m = FiniteModule::regular(&z2).unwrap();
        assert_eq!(module_min_generators(&m).elements, vec![1]);
        let zero = FiniteModule::zero_module(&z2).unwrap();
        assert_eq!(module_min_generators(&zero).elements, Vec::<usize>::new());
        let v = direct_product(&[&z2, &z2]).unwrap();
        let plane = FiniteModule::from_action(&z2, &v, |a, x| if a == 0 { v.zero() } else { x }).unwrap();
        let g = module_min_generators(&plane);
        assert!(g.exhaustive);
        assert_eq!(g.elements.len(), 2);
        assert_eq!(g.elements, vec![1, 2]);
        assert!(plane.generates(&g.elements));
        // no single element spans the plane
        assert!((0..4).all(|x| !plane.generates(&[x])));
    }
}
