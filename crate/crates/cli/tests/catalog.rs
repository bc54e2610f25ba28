use amalgam_cli::ast::{Kind, Statement};
use amalgam_cli::{generate_catalog, parse, render_script};

fn amalgams(script: &amalgam_cli::Script) -> usize {
    script
        .statements
        .iter()
        .filter(|s| matches!(s, Statement::Define { kind: Kind::Amalgam, .. }))
        .count()
}

#[test]
fn same_seed_same_bytes() {
    let a = render_script(&generate_catalog(7, 128));
    let b = render_script(&generate_catalog(7, 128));
    assert_eq!(a, b);
}

#[test]
fn seed_changes_the_sample() {
    assert_ne!(render_script(&generate_catalog(0, 256)), render_script(&generate_catalog(1, 256)));
}

#[test]
fn default_catalog_is_large_enough() {
    let script = generate_catalog(0, 256);
    assert!(amalgams(&script) >= 30, "{}", amalgams(&script));
    assert_eq!(parse(&render_script(&script)).unwrap(), script);
}

#[test]
fn tiny_budget_gives_empty_catalog() {
    assert!(generate_catalog(0, 1).is_empty());
    assert!(generate_catalog(0, 0).is_empty());
    assert!(!generate_catalog(0, 2).is_empty());
}

#[test]
fn budget_bounds_every_amalgam() {
    // every cardinality report states |A|·|J|, which must respect the budget
    let script = generate_catalog(3, 48);
    let reports = amalgam_cli::evaluate(&script).unwrap();
    let mut seen = 0;
    for r in reports.iter().filter(|r| r.check == "cardinality") {
        let order: usize = r.fact("|A⋈^f J|").unwrap().parse().unwrap();
        assert!(order <= 48, "{}", r.instance);
        seen += 1;
    }
    assert!(seen > 0);
}
