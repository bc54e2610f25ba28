//! Localization `S⁻¹R` of a finite ring.
//!
//! Fractions `(a, s)` are identified when `t(as' − a's) = 0` for some `t ∈ S`.
//! For a finite multiplicative set the witnesses `t` can all be replaced by
//! one idempotent `e` (a power of the product of all of `S`), and `s` acts
//! invertibly on `eR`. Each pair is therefore keyed by `e·a·s⁻¹ ∈ eR`, and
//! two pairs are equivalent exactly when their keys agree.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::morphism::RingHom;
use crate::ring::{FiniteRng, Provenance, Ring};

/// Smallest multiplicatively closed set containing `1` and `gens`.
pub fn multiplicative_closure(ring: &FiniteRng, gens: &[usize]) -> Result<Vec<usize>> {
    let one = ring.require_one()?;
    let mut members = vec![false; ring.order()];
    members[one] = true;
    let mut list = vec![one];
    let mut i = 0;
    let mut pending: Vec<usize> = gens.to_vec();
    while let Some(g) = pending.pop() {
        if g >= ring.order() {
            return Err(Error::InvalidParameter(format!("element index {g} out of range")));
        }
        if !members[g] {
            members[g] = true;
            list.push(g);
        }
    }
    while i < list.len() {
        let x = list[i];
        for j in 0..=i {
            let p = ring.mul(x, list[j]);
            if !members[p] {
                members[p] = true;
                list.push(p);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    Ok(list)
}

fn idempotent_power(ring: &FiniteRng, u: usize) -> usize {
    let mut p = u;
    loop {
        if ring.is_idempotent(p) {
            return p;
        }
        p = ring.mul(p, u);
    }
}

/// Localizes `ring` at the multiplicative set `s`, returning `S⁻¹R` and the
/// localization map `a ↦ a/1`.
///
/// Classes are ordered and labeled (`a/s`) by their lexicographically least
/// representative pair.
pub fn localization(ring: &Ring, s: &[usize]) -> Result<(Ring, RingHom)> {
    let one = ring.require_one()?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&bad) = set.iter().find(|&&x| x >= ring.order()) {
        return Err(Error::InvalidParameter(format!("element index {bad} out of range")));
    }
    let mut member = vec![false; ring.order()];
    for &x in &set {
        member[x] = true;
    }
    if !member[one] {
        return Err(Error::NotMultiplicativelyClosed("1 is not in the set".into()));
    }
    for &x in &set {
        for &y in &set {
            if !member[ring.mul(x, y)] {
                return Err(Error::NotMultiplicativelyClosed(format!(
                    "{} · {} = {} is missing",
                    ring.label(x),
                    ring.label(y),
                    ring.label(ring.mul(x, y))
                )));
            }
        }
    }

    let u = set.iter().fold(one, |acc, &x| ring.mul(acc, x));
    let e = idempotent_power(ring, u);
    // s · inv(s) = e inside eR
    let inverse: HashMap<usize, usize> = set
        .iter()
        .map(|&x| {
            let y = ring
                .elements()
                .find(|&y| ring.mul(x, y) == e)
                .expect("e is a multiple of every element of S");
            (x, ring.mul(e, y))
        })
        .collect();
    let key = |a: usize, x: usize| ring.mul(ring.mul(e, a), inverse[&x]);

    let mut class_of_key: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for a in ring.elements() {
        for &x in &set {
            class_of_key.entry(key(a, x)).or_insert_with(|| {
                reps.push((a, x));
                reps.len() - 1
            });
        }
    }
    let class = |a: usize, x: usize| class_of_key[&key(a, x)];
    let labels = reps
        .iter()
        .map(|&(a, x)| format!("{}/{}", ring.label(a), ring.label(x)))
        .collect();
    let local = FiniteRng::build(
        reps.len(),
        |p, q| {
            let ((a, s1), (b, s2)) = (reps[p], reps[q]);
            class(ring.add(ring.mul(a, s2), ring.mul(b, s1)), ring.mul(s1, s2))
        },
        |p, q| {
            let ((a, s1), (b, s2)) = (reps[p], reps[q]);
            class(ring.mul(a, b), ring.mul(s1, s2))
        },
        class(ring.zero(), one),
        Some(class(one, one)),
        labels,
        Provenance::Localization,
    );
    let lambda = RingHom::new(ring, &local, ring.elements().map(|a| class(a, one)).collect(), true)?;
    Ok((local, lambda))
}
