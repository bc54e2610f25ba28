//! Subrings of a product `A × B` given by their set of pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::guard::check_order;
use crate::morphism::RingHom;
use crate::subobjects::Ideal;
use crate::ring::{FiniteRng, Provenance, Ring};

/// Position lookups use a dense table while `|A|·|B|` stays below this.
const DENSE_LIMIT: usize = 1 << 22;

/// A subring of `left × right`, stored as its sorted list of pairs, with
/// the pairs re-indexed `0..n` in lexicographic order.
#[derive(Clone)]
pub struct PairRing {
    left: Ring,
    right: Ring,
    pairs: Vec<(usize, usize)>,
    dense: Option<Vec<u32>>,
    ring: Ring,
}

impl fmt::Debug for PairRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairRing{:?}", self.ring.labels())
    }
}

impl PairRing {
    /// `pairs` must be closed under the componentwise operations; a pair
    /// falling outside is reported as `IncompatibleStructures`.
    pub(crate) fn build(
        left: &Ring,
        right: &Ring,
        mut pairs: Vec<(usize, usize)>,
        provenance: Provenance,
        what: &str,
    ) -> Result<PairRing> {
        pairs.sort_unstable();
        pairs.dedup();
        let n = check_order(what, pairs.len() as u128)?;
        let width = right.order();
        let dense = (left.order().saturating_mul(width) <= DENSE_LIMIT).then(|| {
            let mut table = vec![u32::MAX; left.order() * width];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                table[a * width + b] = i as u32;
            }
            table
        });
        let mut this = PairRing {
            left: left.clone(),
            right: right.clone(),
            pairs,
            dense,
            ring: crate::ring::zmod(1)?,
        };
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &(a, b) in &this.pairs {
            for &(c, d) in &this.pairs {
                let s = (left.add(a, c), right.add(b, d));
                let p = (left.mul(a, c), right.mul(b, d));
                let (Some(si), Some(pi)) = (this.index(s.0, s.1), this.index(p.0, p.1)) else {
                    return Err(Error::IncompatibleStructures(format!(
                        "{what}: pair set not closed at ({},{}), ({},{})",
                        left.label(a),
                        right.label(b),
                        left.label(c),
                        right.label(d)
                    )));
                };
                add.push(si);
                mul.push(pi);
            }
        }
        let zero = this
            .index(left.zero(), right.zero())
            .ok_or_else(|| Error::IncompatibleStructures(format!("{what}: (0,0) missing")))?;
        let one = match (left.one(), right.one()) {
            (Some(o1), Some(o2)) => this.index(o1, o2),
            _ => None,
        };
        let labels = this
            .pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", left.label(a), right.label(b)))
            .collect();
        this.ring = FiniteRng::build(n, |x, y| add[x * n + y], |x, y| mul[x * n + y], zero, one, labels, provenance);
        Ok(this)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn left(&self) -> &Ring {
        &self.left
    }

    pub fn right(&self) -> &Ring {
        &self.right
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn index(&self, a: usize, b: usize) -> Option<usize> {
        match &self.dense {
            Some(t) => match t[a * self.right.order() + b] {
                u32::MAX => None,
                i => Some(i as usize),
            },
            None => self.pairs.binary_search(&(a, b)).ok(),
        }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.index(a, b).is_some()
    }

    pub fn p_left(&self) -> RingHom {
        let unital = self.ring.has_one() && self.left.has_one();
        RingHom::trusted(&self.ring, &self.left, self.pairs.iter().map(|p| p.0).collect(), unital)
    }

    pub fn p_right(&self) -> RingHom {
        let unital = self.ring.has_one() && self.right.has_one();
        RingHom::trusted(&self.ring, &self.right, self.pairs.iter().map(|p| p.1).collect(), unital)
    }

    /// Pair labels, for witnesses.
    pub fn pair_labels(&self) -> Vec<String> {
        self.ring.labels().to_vec()
    }
}

/// First pair in which two pair sets differ, as a printable string.
pub(crate) fn set_difference(
    left: &FiniteRng,
    right: &FiniteRng,
    x: &[(usize, usize)],
    y: &[(usize, usize)],
) -> Option<String> {
    let show = |&(a, b): &(usize, usize)| format!("({},{})", left.label(a), right.label(b));
    if let Some(p) = x.iter().find(|p| y.binary_search(p).is_err()) {
        return Some(format!("{} in the first set only", show(p)));
    }
    y.iter()
        .find(|p| x.binary_search(p).is_err())
        .map(|p| format!("{} in the second set only", show(p)))
}

/// `{(a, f(a)+k) : a ∈ A, k ∈ K}`, sorted.
pub(crate) fn amalgam_pairs(f: &RingHom, k: &Ideal) -> Vec<(usize, usize)> {
    let b = f.codomain();
    let mut out: Vec<(usize, usize)> = f
        .domain()
        .elements()
        .flat_map(|x| k.elements().into_iter().map(move |y| (x, b.add(f.apply(x), y))))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
