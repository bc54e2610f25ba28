use amalgam_core::amalgamation::{
    amalgam, canonical_isos, cardinality_check, domain_criterion_check, duplication, iter_iso_check, n_amalgam,
    pull_identity_check, reduced_criterion_check, retraction_roundtrip,
};
use amalgam_core::constructions::{nagata_idealization, noetherian_verdict_xjx, trunc_poly_amalgam};
use amalgam_core::morphism::{all_homs, verify_iso};
use amalgam_core::ring::{direct_product, monomials, trunc_poly, zmod};
use amalgam_core::subobjects::{all_ideals, nilradical, quotient_ring, FiniteModule};
use amalgam_core::{Ideal, Ring, Status, Subrng};
use proptest::prelude::*;

fn small_ring(code: usize) -> Ring {
    match code % 16 {
        n @ 2..=12 => zmod(n).unwrap(),
        13 => direct_product(&[&zmod(2).unwrap(), &zmod(2).unwrap()]).unwrap(),
        14 => direct_product(&[&zmod(2).unwrap(), &zmod(3).unwrap()]).unwrap(),
        15 => trunc_poly(&zmod(2).unwrap(), 1, 2).unwrap(),
        _ => trunc_poly(&zmod(2).unwrap(), 1, 1).unwrap(),
    }
}

fn pick<T: Clone>(xs: &[T], k: usize) -> T {
    xs[k % xs.len()].clone()
}

/// `{(a, f(a)+j)}` computed straight from the definition.
fn oracle_pairs(f: &amalgam_core::RingHom, j: &Ideal) -> Vec<(usize, usize)> {
    let b = f.codomain();
    let mut out = Vec::new();
    for a in f.domain().elements() {
        for y in b.elements() {
            if j.contains(b.sub(y, f.apply(a))) {
                out.push((a, y));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn amalgam_matches_definition(ca in 0usize..16, cb in 0usize..16, kf in 0usize..64, kj in 0usize..64) {
        let (a, b) = (small_ring(ca), small_ring(cb));
        let homs = all_homs(&a, &b, 64).unwrap();
        prop_assume!(!homs.is_empty());
        let f = pick(&homs, kf);
        let j = pick(&all_ideals(&b, 64), kj);
        let amg = amalgam(&f, &j).unwrap();
        prop_assert_eq!(amg.ring().order(), a.order() * j.len());
        prop_assert_eq!(amg.pair_ring().pairs(), &oracle_pairs(&f, &j)[..]);
        prop_assert!(amg.ring().validate().is_valid());
        prop_assert!(pull_identity_check(&amg).unwrap().passed());
        prop_assert!(cardinality_check(&amg).passed());
        let round = retraction_roundtrip(&amg).unwrap();
        prop_assert!(round.passed(), "{:?}", round);
        prop_assert!(canonical_isos(&amg, None).unwrap().passed());
        let reduced = reduced_criterion_check(&amg).unwrap();
        prop_assert!(reduced.passed());
        let expected = a.is_reduced() && j.intersection(&nilradical(&b)).unwrap().is_zero();
        prop_assert_eq!(amg.ring().is_reduced(), expected);
        prop_assert_ne!(domain_criterion_check(&amg).unwrap().status, Status::Fail);
    }

    #[test]
    fn witnesses_revalidate(ca in 0usize..16, kj in 0usize..64) {
        let a = small_ring(ca);
        let i = pick(&all_ideals(&a, 64), kj);
        let amg = duplication(&a, &i).unwrap();
        let rep = canonical_isos(&amg, None).unwrap();
        for f in &rep.maps {
            prop_assert!(verify_iso(f));
        }
    }

    #[test]
    fn iteration_order(ca in 2usize..9, kj in 0usize..8, n in 2usize..4) {
        let a = zmod(ca).unwrap();
        let j = pick(&all_ideals(&a, 16), kj);
        let f = amalgam_core::RingHom::identity(&a);
        let amg = n_amalgam(&f, &j, n).unwrap();
        prop_assert_eq!(amg.ring().order(), a.order() * j.len().pow(n as u32));
        prop_assert!(iter_iso_check(&f, &j, n).unwrap().passed());
    }

    #[test]
    fn quotient_order(ca in 0usize..16, kj in 0usize..64) {
        let a = small_ring(ca);
        let i = pick(&all_ideals(&a, 64), kj);
        let (q, pi) = quotient_ring(&i).unwrap();
        prop_assert_eq!(q.order() * i.len(), a.order());
        prop_assert!(pi.is_surjective());
        prop_assert_eq!(pi.kernel(), i);
    }

    #[test]
    fn idealization_square_zero(n in 2usize..8) {
        let a = zmod(n).unwrap();
        let m = FiniteModule::regular(&a).unwrap();
        let ext = nagata_idealization(&a, &m).unwrap();
        let d = ext.ring();
        let nil = nilradical(d);
        for &x in ext.embed() {
            prop_assert!(nil.contains(x));
            for &y in ext.embed() {
                prop_assert_eq!(d.mul(x, y), d.zero());
            }
        }
    }

    #[test]
    fn xjx_verdict_tracks_idempotency(ca in 0usize..16, kj in 0usize..64) {
        let b = small_ring(ca);
        let a = Subrng::whole(&b);
        let j = pick(&all_ideals(&b, 64), kj);
        let square = j.product(&j).unwrap();
        let v1 = noetherian_verdict_xjx(&a, &j).unwrap();
        let v2 = noetherian_verdict_xjx(&a, &square).unwrap();
        let verdict = v1.fact("A+XJ[X] Noetherian") == Some("true");
        prop_assert_eq!(verdict, j.is_idempotent());
        if j.is_idempotent() {
            prop_assert_eq!(v1.fact("A+XJ[X] Noetherian"), v2.fact("A+XJ[X] Noetherian"));
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn trunc_poly_amalgam_order(ca in 2usize..7, kj in 0usize..8, r in 1usize..3, k in 1usize..3) {
        let b = zmod(ca).unwrap();
        let j = pick(&all_ideals(&b, 16), kj);
        let a = Subrng::generated(&b, &[], true).unwrap();
        let extra = monomials(r, k).len() - 1;
        prop_assume!(j.len().pow(extra as u32) * a.len() <= 1024 && b.order().pow(extra as u32 + 1) <= 1024);
        let (ring, rep) = trunc_poly_amalgam(&a, &j, r, k).unwrap();
        prop_assert_eq!(ring.order(), a.len() * j.len().pow(extra as u32));
        prop_assert!(rep.passed());
    }
}
