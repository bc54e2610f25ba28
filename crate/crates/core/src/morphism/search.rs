//! Backtracking searches for homomorphisms: isomorphisms, sections of a
//! surjection, and full enumeration of unital homs between small rings.
//!
//! All three share one engine. A partial map is grown from images chosen
//! for a generating set of the domain; every choice is propagated through
//! sums, products and negatives, and a conflict prunes the branch.

use crate::error::{Error, Result};
use crate::ring::{FiniteRng, Ring};
use crate::subobjects::Subrng;

use super::RingHom;

/// Candidate-extension budget for every search in this module.
pub const SECTION_BUDGET: u64 = 1_000_000;

const UNSET: usize = usize::MAX;

/// An irredundant generating set: no generator lies in the subrng (or
/// unital subring, with `include_one`) generated by the others.
pub fn ring_generators(ring: &Ring, include_one: bool) -> Vec<usize> {
    let span = |gens: &[usize]| {
        Subrng::generated(ring, gens, include_one && ring.has_one()).expect("indices in range")
    };
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = span(&gens);
    for x in ring.elements() {
        if !covered.contains(x) {
            gens.push(x);
            covered = span(&gens);
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        let g = rest.remove(i);
        if span(&rest).contains(g) {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

#[derive(Clone)]
struct Partial {
    map: Vec<usize>,
    mapped: Vec<usize>,
}

impl Partial {
    fn new(order: usize) -> Self {
        Partial {
            map: vec![UNSET; order],
            mapped: Vec::new(),
        }
    }

    /// Sets `x ↦ y` and propagates through the ring operations. Returns
    /// false on a conflict.
    fn assign(&mut self, dom: &FiniteRng, cod: &FiniteRng, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match self.map[x] {
                UNSET => {}
                old if old == y => continue,
                _ => return false,
            }
            self.map[x] = y;
            self.mapped.push(x);
            queue.push((dom.neg(x), cod.neg(y)));
            for k in 0..self.mapped.len() {
                let z = self.mapped[k];
                let w = self.map[z];
                queue.push((dom.add(x, z), cod.add(y, w)));
                queue.push((dom.mul(x, z), cod.mul(y, w)));
            }
        }
        true
    }

    fn complete(&self) -> bool {
        self.mapped.len() == self.map.len()
    }
}

struct Search<'a> {
    dom: &'a FiniteRng,
    cod: &'a FiniteRng,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    budget: u64,
    spent: u64,
    what: &'static str,
}

impl Search<'_> {
    /// Depth-first over generator images; `accept` sees every complete map
    /// and returns true to stop the search.
    fn run(&mut self, start: Partial, accept: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        self.descend(0, start, accept)
    }

    fn descend(
        &mut self,
        level: usize,
        partial: Partial,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        if level == self.gens.len() {
            debug_assert!(partial.complete());
            return Ok(accept(&partial.map));
        }
        let g = self.gens[level];
        if partial.map[g] != UNSET {
            return self.descend(level + 1, partial, accept);
        }
        for ci in 0..self.candidates[level].len() {
            let c = self.candidates[level][ci];
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::SearchBudgetExhausted {
                    what: self.what.to_string(),
                    budget: self.budget,
                });
            }
            let mut next = partial.clone();
            if next.assign(self.dom, self.cod, g, c) && self.descend(level + 1, next, accept)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn seed(dom: &FiniteRng, cod: &FiniteRng, unital: bool) -> Option<Partial> {
    let mut p = Partial::new(dom.order());
    if !p.assign(dom, cod, dom.zero(), cod.zero()) {
        return None;
    }
    if unital {
        let (o1, o2) = (dom.one()?, cod.one()?);
        if !p.assign(dom, cod, o1, o2) {
            return None;
        }
    }
    Some(p)
}

/// Per-element invariants preserved by isomorphisms.
fn signature(r: &FiniteRng, x: usize) -> (usize, usize, bool, bool, bool) {
    let nil_index = {
        let mut acc = x;
        let mut k = 1;
        while acc != r.zero() && k <= r.order() {
            acc = r.mul(acc, x);
            k += 1;
        }
        if acc == r.zero() {
            k
        } else {
            0
        }
    };
    (
        r.additive_order(x),
        nil_index,
        r.is_idempotent(x),
        r.is_unit(x),
        r.is_zero_divisor(x),
    )
}

/// Outcome of [`find_iso`].
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Found(RingHom),
    /// A documented invariant differs, so no search was needed.
    InvariantMismatch(String),
    /// Invariants agree but the exhaustive search found no isomorphism.
    Exhausted,
}

impl IsoOutcome {
    pub fn found(self) -> Option<RingHom> {
        match self {
            IsoOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

fn invariant_mismatch(r: &FiniteRng, s: &FiniteRng) -> Option<String> {
    type Invariant = Box<dyn Fn(&FiniteRng) -> String>;
    let checks: [(&str, Invariant); 6] = [
        ("order", Box::new(|x: &FiniteRng| x.order().to_string())),
        ("identity", Box::new(|x: &FiniteRng| x.has_one().to_string())),
        ("characteristic", Box::new(|x: &FiniteRng| x.characteristic().to_string())),
        ("idempotent count", Box::new(|x: &FiniteRng| x.idempotents().len().to_string())),
        ("nilpotent count", Box::new(|x: &FiniteRng| x.nilpotents().len().to_string())),
        ("unit count", Box::new(|x: &FiniteRng| x.units().len().to_string())),
    ];
    for (name, f) in checks.iter() {
        let (a, b) = (f(r), f(s));
        if a != b {
            return Some(format!("{name}: {a} vs {b}"));
        }
    }
    let mut sr: Vec<_> = r.elements().map(|x| signature(r, x)).collect();
    let mut ss: Vec<_> = s.elements().map(|x| signature(s, x)).collect();
    sr.sort_unstable();
    ss.sort_unstable();
    if sr != ss {
        return Some("element signature multisets differ (additive order, nilpotency index, idempotent, unit, zero divisor)".into());
    }
    None
}

/// Searches for an isomorphism `r → s`, pruning by invariants first.
/// The search order is deterministic.
pub fn find_iso(r: &Ring, s: &Ring) -> Result<IsoOutcome> {
    if let Some(reason) = invariant_mismatch(r, s) {
        return Ok(IsoOutcome::InvariantMismatch(reason));
    }
    let unital = r.has_one();
    let gens = ring_generators(r, unital);
    let sig_s: Vec<_> = s.elements().map(|x| signature(s, x)).collect();
    let candidates = gens
        .iter()
        .map(|&g| {
            let sg = signature(r, g);
            s.elements().filter(|&y| sig_s[y] == sg).collect()
        })
        .collect();
    let Some(start) = seed(r, s, unital) else {
        return Ok(IsoOutcome::Exhausted);
    };
    let mut search = Search {
        dom: r,
        cod: s,
        gens,
        candidates,
        budget: SECTION_BUDGET,
        spent: 0,
        what: "find_iso",
    };
    let mut found = None;
    search.run(start, &mut |map| {
        let mut seen = vec![false; map.len()];
        let injective = map.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
        if injective {
            found = Some(map.to_vec());
        }
        injective
    })?;
    match found {
        Some(map) => Ok(IsoOutcome::Found(RingHom::new(r, s, map, unital)?)),
        None => Ok(IsoOutcome::Exhausted),
    }
}

/// Searches for a unital `ι: A → D` with `p ∘ ι = id_A`, choosing the image
/// of each generator of `A` inside its fiber. `None` means the exhaustive
/// search found no section.
pub fn find_section(p: &RingHom) -> Result<Option<RingHom>> {
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (d, a) = (p.domain(), p.codomain());
    a.require_one()?;
    d.require_one()?;
    let gens = ring_generators(a, true);
    let candidates = gens
        .iter()
        .map(|&g| d.elements().filter(|&x| p.apply(x) == g).collect())
        .collect();
    let Some(start) = seed(a, d, true) else {
        return Ok(None);
    };
    let mut search = Search {
        dom: a,
        cod: d,
        gens,
        candidates,
        budget: SECTION_BUDGET,
        spent: 0,
        what: "find_section",
    };
    let mut found = None;
    search.run(start, &mut |map| {
        let ok = map.iter().enumerate().all(|(x, &y)| p.apply(y) == x);
        if ok {
            found = Some(map.to_vec());
        }
        ok
    })?;
    found.map(|map| RingHom::new(a, d, map, true)).transpose()
}

/// Every unital homomorphism `a → b`, in deterministic order, up to `cap`.
pub fn all_homs(a: &Ring, b: &Ring, cap: usize) -> Result<Vec<RingHom>> {
    a.require_one()?;
    b.require_one()?;
    let gens = ring_generators(a, true);
    let candidates = gens
        .iter()
        .map(|&g| {
            b.elements()
                .filter(|&y| {
                    a.additive_order(g).is_multiple_of(b.additive_order(y))
                        && (!a.is_idempotent(g) || b.is_idempotent(y))
                        && (!a.is_nilpotent(g) || b.is_nilpotent(y))
                })
                .collect()
        })
        .collect();
    let Some(start) = seed(a, b, true) else {
        return Ok(Vec::new());
    };
    let mut search = Search {
        dom: a,
        cod: b,
        gens,
        candidates,
        budget: SECTION_BUDGET,
        spent: 0,
        what: "all_homs",
    };
    let mut maps = Vec::new();
    search.run(start, &mut |map| {
        maps.push(map.to_vec());
        maps.len() >= cap
    })?;
    maps.into_iter().map(|m| RingHom::new(a, b, m, true)).collect()
}
