use super::*;
use crate::report::Status;
use crate::ring::{direct_product, galois_field, zmod};

fn z(n: usize) -> Ring {
    zmod(n).unwrap()
}

#[test]
fn nagata_examples() {
    let z2 = z(2);
    let m = FiniteModule::regular(&z2).unwrap();
    let ext = nagata_idealization(&z2, &m).unwrap();
    let x = ext.index(0, 1);
    assert_eq!(ext.ring().mul(x, x), ext.ring().zero());
    let t = trunc_poly(&z2, 1, 1).unwrap();
    assert!(find_iso(ext.ring(), &t).unwrap().found().is_some());
    assert!(nagata_as_amalgam_check(&z2, &m).unwrap().passed());

    let z3 = z(3);
    let ext = nagata_idealization(&z3, &FiniteModule::regular(&z3).unwrap()).unwrap();
    assert_eq!(ext.ring().order(), 9);
    assert_eq!(nilradical(ext.ring()), ext.fiber_ideal());

    let z4 = z(4);
    let m = FiniteModule::from_action(&z4, &z2, |a, x| z2.mul(a % 2, x)).unwrap();
    let rep = nagata_as_amalgam_check(&z4, &m).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.fact("order"), Some("8"));

    let zero = FiniteModule::zero_module(&z4).unwrap();
    assert!(nagata_idealization(&z4, &zero).unwrap().ring().same_tables(&z4));
    assert!(nagata_as_amalgam_check(&z4, &zero).unwrap().passed());
}

fn constants(t: &Ring) -> Subrng {
    Subrng::generated(t, &[], true).unwrap()
}

#[test]
fn d_plus_m_examples() {
    let t = trunc_poly(&galois_field(4).unwrap(), 1, 1).unwrap();
    assert_eq!(t.order(), 16);
    let x = t.index_of("X").unwrap();
    let m = Ideal::generated(&t, &[x]).unwrap();
    let (dm, rep) = d_plus_m(&t, &constants(&t), &[m]).unwrap();
    assert_eq!(dm.len(), 8);
    assert!(rep.passed(), "{rep:?}");

    let z2 = z(2);
    let t = trunc_poly(&z2, 1, 1).unwrap();
    let m = Ideal::generated(&t, &[t.index_of("X").unwrap()]).unwrap();
    let (dm, rep) = d_plus_m(&t, &constants(&t), std::slice::from_ref(&m)).unwrap();
    assert_eq!(dm, Subrng::whole(&t));
    assert!(rep.passed());

    let whole = Subrng::whole(&t);
    assert!(matches!(d_plus_m(&t, &whole, &[m]), Err(Error::HypothesisViolated(_))));
    let z4 = z(4);
    let not_max = Ideal::zero(&z4);
    assert!(matches!(
        d_plus_m(&z4, &constants(&z4), &[not_max]),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn d_plus_m_two_maximal_ideals() {
    // T = F4 × F4 over the diagonal copy of F2 meets neither factor
    let f4 = galois_field(4).unwrap();
    let t = direct_product(&[&f4, &f4]).unwrap();
    let m1 = Ideal::from_members(&t, t.elements().map(|x| x / 4 == 0).collect()).unwrap();
    let m2 = Ideal::from_members(&t, t.elements().map(|x| x % 4 == 0).collect()).unwrap();
    let (dm, rep) = d_plus_m(&t, &constants(&t), &[m1, m2]).unwrap();
    assert_eq!(dm.len(), 2);
    assert!(rep.passed());
}

#[test]
fn cpi_prime_examples() {
    let z12 = z(12);
    let p = Ideal::generated(&z12, &[2]).unwrap();
    let (c, rep) = cpi_prime(&z12, &p).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(c.order(), 4);
    assert_eq!(rep.fact("|A_P|"), Some("4"));
    assert_eq!(rep.fact("amalgam order"), Some("24"));
    assert_eq!(rep.fact("kernel order"), Some("6"));
    assert_eq!(rep.fact("quotient order"), Some("4"));
    assert!(find_iso(&c, &z(4)).unwrap().found().is_some());

    let f5 = z(5);
    let (c, rep) = cpi_prime(&f5, &Ideal::zero(&f5)).unwrap();
    assert!(rep.passed());
    assert!(find_iso(&c, &f5).unwrap().found().is_some());

    let z6 = z(6);
    let p = Ideal::generated(&z6, &[3]).unwrap();
    let (c, rep) = cpi_prime(&z6, &p).unwrap();
    assert!(rep.passed());
    assert_eq!(c.order(), oracle_localization_order(&z6, &p));

    let i = Ideal::generated(&z12, &[4]).unwrap();
    assert!(matches!(cpi_prime(&z12, &i), Err(Error::NotPrime)));
}

/// Counts fraction classes `(a, s)` under `(a,s) ~ (a',s') ⟺ ∃t: t(as'−a's) = 0`.
fn oracle_localization_order(a: &Ring, p: &Ideal) -> usize {
    let s: Vec<usize> = a.elements().filter(|&x| !p.contains(x)).collect();
    let pairs: Vec<(usize, usize)> = a.elements().flat_map(|x| s.iter().map(move |&y| (x, y))).collect();
    let equiv = |(x, y): (usize, usize), (u, v): (usize, usize)| {
        let d = a.sub(a.mul(x, v), a.mul(u, y));
        s.iter().any(|&t| a.mul(t, d) == a.zero())
    };
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for &q in &pairs {
        if !reps.iter().any(|&r| equiv(r, q)) {
            reps.push(q);
        }
    }
    reps.len()
}

#[test]
fn cpi_ideal_examples() {
    let z12 = z(12);
    let i = Ideal::generated(&z12, &[4]).unwrap();
    let (c, rep) = cpi_ideal(&z12, &i).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.fact("|S_I|"), Some("6"));
    assert_eq!(c.order(), 4);

    let (_, rep) = cpi_ideal(&z12, &Ideal::zero(&z12)).unwrap();
    assert!(rep.passed(), "{rep:?}");

    let p = Ideal::generated(&z12, &[3]).unwrap();
    let (c, rep) = cpi_ideal(&z12, &p).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.witness("C(A,I) → C(A,P)").is_some());
    let (cp, _) = cpi_prime(&z12, &p).unwrap();
    assert_eq!(c.order(), cp.order());

    assert!(matches!(cpi_ideal(&z12, &Ideal::whole(&z12)), Err(Error::HypothesisViolated(_))));
}

#[test]
fn trunc_poly_amalgam_examples() {
    let f4 = galois_field(4).unwrap();
    let f2 = constants(&f4);
    let (r, rep) = trunc_poly_amalgam(&f2, &Ideal::whole(&f4), 1, 1).unwrap();
    assert_eq!(r.order(), 8);
    assert!(rep.passed(), "{rep:?}");

    let (r, rep) = trunc_poly_amalgam(&f2, &Ideal::zero(&f4), 1, 2).unwrap();
    assert!(rep.passed());
    assert_eq!(r.order(), 2);

    let z4 = z(4);
    let two = Ideal::generated(&z4, &[2]).unwrap();
    let (r, rep) = trunc_poly_amalgam(&Subrng::whole(&z4), &two, 2, 1).unwrap();
    assert!(rep.passed());
    assert_eq!(r.order(), 4 * 2 * 2);
}

#[test]
fn noetherian_examples() {
    let z4 = z(4);
    let two = Ideal::generated(&z4, &[2]).unwrap();
    let amg = crate::amalgamation::duplication(&z4, &two).unwrap();
    let rep = noetherian_report(&amg);
    assert!(rep.passed());
    match rep.witness("J generators over A").unwrap() {
        crate::report::Witness::Elements { elements, .. } => assert_eq!(elements, &["2"]),
        w => panic!("{w:?}"),
    }
    let dup0 = crate::amalgamation::duplication(&z4, &Ideal::zero(&z4)).unwrap();
    match noetherian_report(&dup0).witness("J generators over A").unwrap() {
        crate::report::Witness::Elements { elements, .. } => assert!(elements.is_empty()),
        w => panic!("{w:?}"),
    }
}

#[test]
fn xjx_verdicts() {
    let z2 = z(2);
    let b = direct_product(&[&z2, &z2]).unwrap();
    let diag = constants(&b);
    assert_eq!(diag.len(), 2);
    let j = Ideal::from_members(&b, b.elements().map(|x| x % 2 == 0).collect()).unwrap();
    assert_eq!(j.len(), 2);
    let rep = noetherian_verdict_xjx(&diag, &j).unwrap();
    assert_eq!(rep.status, Status::TheoremBacked);
    assert_eq!(rep.fact("A+XJ[X] Noetherian"), Some("true"));

    let z4 = z(4);
    let two = Ideal::generated(&z4, &[2]).unwrap();
    let rep = noetherian_verdict_xjx(&Subrng::whole(&z4), &two).unwrap();
    assert_eq!(rep.fact("A+XJ[X] Noetherian"), Some("false"));
    assert!(rep.witness("J²").is_some());

    let rep = noetherian_verdict_xjx(&Subrng::whole(&z4), &Ideal::whole(&z4)).unwrap();
    assert_eq!(rep.fact("A+XJ[X] Noetherian"), Some("true"));
    assert_eq!(rep.fact("A+XJ[X] ⊆ B[X] finite"), Some("true"));
}
