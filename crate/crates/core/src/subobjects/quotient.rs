use crate::error::Result;
use crate::morphism::RingHom;
use crate::ring::{FiniteRng, Provenance, Ring};

use super::Ideal;

/// `R/I` with its canonical projection.
///
/// Cosets are ordered by their least member and labeled `[x]` after it.
pub fn quotient_ring(ideal: &Ideal) -> Result<(Ring, RingHom)> {
    let ring = ideal.ring();
    let n = ring.order();
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let members = ideal.elements();
    for x in ring.elements() {
        if class[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &i in &members {
            class[ring.add(x, i)] = id;
        }
    }
    let q = FiniteRng::build(
        reps.len(),
        |a, b| class[ring.add(reps[a], reps[b])],
        |a, b| class[ring.mul(reps[a], reps[b])],
        class[ring.zero()],
        ring.one().map(|o| class[o]),
        reps.iter().map(|&r| format!("[{}]", ring.label(r))).collect(),
        Provenance::Quotient,
    );
    let projection = RingHom::new(ring, &q, class, ring.has_one())?;
    Ok((q, projection))
}

/// The ideal of nilpotent elements.
pub fn nilradical(ring: &Ring) -> Ideal {
    let members = ring.elements().map(|x| ring.is_nilpotent(x)).collect();
    Ideal::trusted(ring, members)
}

/// Every `s` whose class in `A/I` is a nonzero non-zero-divisor.
///
/// When `A/I` is the zero ring every element of `A` is returned, so that
/// `I = A` still yields a multiplicative set containing `1`.
pub fn regular_elements_mod(ideal: &Ideal) -> Result<Vec<usize>> {
    let ring = ideal.ring();
    let (q, pi) = quotient_ring(ideal)?;
    if q.is_zero_ring() {
        return Ok(ring.elements().collect());
    }
    let regular: Vec<bool> = q
        .elements()
        .map(|c| c != q.zero() && !q.is_zero_divisor(c))
        .collect();
    Ok(ring.elements().filter(|&s| regular[pi.apply(s)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{direct_product, zmod};

    #[test]
    fn quotient_examples() {
        let z12 = zmod(12).unwrap();
        let four = Ideal::generated(&z12, &[4]).unwrap();
        assert_eq!(four.len(), 3);
        let (q, pi) = quotient_ring(&four).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.same_tables(&zmod(4).unwrap()));
        assert_eq!(pi.kernel(), four);
        assert!(pi.is_surjective());

        let (q0, p0) = quotient_ring(&Ideal::zero(&z12)).unwrap();
        assert!(q0.same_tables(&z12));
        assert!(p0.is_bijective());

        let (qa, _) = quotient_ring(&Ideal::whole(&z12)).unwrap();
        assert!(qa.is_zero_ring());
    }

    #[test]
    fn lagrange_for_every_ideal_of_z24() {
        let z24 = zmod(24).unwrap();
        for i in super::super::all_ideals(&z24, 100) {
            let (q, pi) = quotient_ring(&i).unwrap();
            assert_eq!(z24.order(), i.len() * q.order());
            assert_eq!(pi.kernel(), i);
        }
    }

    #[test]
    fn nilradical_examples() {
        let z8 = zmod(8).unwrap();
        assert_eq!(nilradical(&z8).elements(), vec![0, 2, 4, 6]);
        assert!(nilradical(&zmod(6).unwrap()).is_zero());
        let p = direct_product(&[&zmod(4).unwrap(), &zmod(2).unwrap()]).unwrap();
        assert_eq!(nilradical(&p).labels(), vec!["(0,0)", "(2,0)"]);
    }

    #[test]
    fn regular_elements_examples() {
        let z12 = zmod(12).unwrap();
        let four = Ideal::generated(&z12, &[4]).unwrap();
        assert_eq!(regular_elements_mod(&four).unwrap(), vec![1, 3, 5, 7, 9, 11]);
        let z6 = zmod(6).unwrap();
        assert_eq!(regular_elements_mod(&Ideal::zero(&z6)).unwrap(), vec![1, 5]);
        assert_eq!(regular_elements_mod(&Ideal::whole(&z6)).unwrap().len(), 6);
    }

    #[test]
    fn regular_elements_are_multiplicatively_closed() {
        for n in 2..=16 {
            let r = zmod(n).unwrap();
            for i in super::super::all_ideals(&r, 100) {
                let s = regular_elements_mod(&i).unwrap();
                assert!(s.contains(&r.one().unwrap()));
                for &x in &s {
                    for &y in &s {
                        assert!(s.contains(&r.mul(x, y)));
                    }
                }
            }
        }
    }
}
