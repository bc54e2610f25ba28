//! Deterministic catalog of instances: small rings, their ideals, a seeded
//! sample of amalgamations over the unital homs between them, and a fixed
//! set of landmark instances. The output is an ordinary script.

use amalgam_core::morphism::all_homs;
use amalgam_core::ring::{direct_product, galois_field, trunc_poly, zmod};
use amalgam_core::subobjects::all_ideals;
use amalgam_core::{Ideal, Ring, RingHom};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ast::{call, name, Expr, Kind, Script, Statement};
use crate::render::label_expr;

/// Smallest budget that admits an instance (`Z2 ⋈ (0)` has two elements).
pub const MIN_BUDGET: usize = 2;
/// Largest ring order in the catalog.
pub const MAX_RING_ORDER: usize = 64;
/// Ideals kept per ring.
pub const IDEAL_CAP: usize = 32;
/// Unital homs kept per ordered pair of rings.
pub const HOM_CAP: usize = 8;
/// Rings of at most this order take part in the hom sample.
pub const HOM_RING_ORDER: usize = 16;
/// Sampled amalgamations, beyond the landmarks.
pub const SAMPLE: usize = 36;
/// Amalgamations used for the iteration checks.
pub const ITERATED: usize = 6;

struct Entry {
    name: String,
    ring: Ring,
    ideals: Vec<(String, Ideal)>,
}

struct Amalg {
    name: String,
    hom: Expr,
    ideal: Expr,
    ideal_len: usize,
    domain_order: usize,
}

/// The catalog for `seed` and `budget` (the largest amalgamation order
/// admitted). A budget below [`MIN_BUDGET`] yields an empty script.
pub fn generate_catalog(seed: u64, budget: usize) -> Script {
    let mut script = Script::default();
    if budget < MIN_BUDGET {
        return script;
    }
    let mut b = Builder {
        script: &mut script,
        rings: Vec::new(),
        amalgams: Vec::new(),
        budget,
    };
    b.rings();
    b.landmarks();
    b.sample(seed);
    b.checks();
    b.named_constructions();
    script
}

struct Builder<'a> {
    script: &'a mut Script,
    rings: Vec<Entry>,
    amalgams: Vec<Amalg>,
    budget: usize,
}

fn num(n: usize) -> Expr {
    Expr::Number(n as u64)
}

fn labels(ring: &Ring, elems: &[usize]) -> Vec<Expr> {
    elems.iter().map(|&x| label_expr(ring.label(x))).collect()
}

/// A small generating set, chosen greedily in index order.
fn generators(ideal: &Ideal) -> Vec<usize> {
    let ring = ideal.ring();
    let mut gens = Vec::new();
    let mut span = Ideal::zero(ring);
    for x in ideal.elements() {
        if !span.contains(x) {
            gens.push(x);
            span = Ideal::generated(ring, &gens).expect("elements of the ring");
        }
    }
    gens
}

impl Builder<'_> {
    fn define(&mut self, kind: Kind, n: &str, expr: Expr) {
        self.script.push(Statement::Define {
            kind,
            name: n.to_string(),
            expr,
        });
    }

    fn check(&mut self, func: &str, groups: Vec<Vec<Expr>>) {
        let Expr::Call(c) = call(func, groups) else { unreachable!() };
        self.script.push(Statement::Check(c));
    }

    fn has(&self, n: &str) -> bool {
        self.rings.iter().any(|e| e.name == n)
    }

    fn entry(&self, n: &str) -> &Entry {
        self.rings.iter().find(|e| e.name == n).expect("ring in catalog")
    }

    fn add_ring(&mut self, n: &str, expr: Expr, built: amalgam_core::Result<Ring>) {
        let Ok(ring) = built else { return };
        if ring.order() > MAX_RING_ORDER.min(self.budget) {
            return;
        }
        self.define(Kind::Ring, n, expr);
        let mut ideals = Vec::new();
        for (k, ideal) in all_ideals(&ring, IDEAL_CAP).into_iter().enumerate() {
            let iname = format!("{n}_I{k}");
            let gens = labels(&ring, &generators(&ideal));
            self.define(Kind::Ideal, &iname, call("gen", vec![vec![name(n)], gens]));
            ideals.push((iname, ideal));
        }
        self.rings.push(Entry {
            name: n.to_string(),
            ring,
            ideals,
        });
    }

    fn rings(&mut self) {
        for n in 2..=12 {
            self.add_ring(&format!("Z{n}"), call("zmod", vec![vec![num(n)]]), zmod(n));
        }
        for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4), (2, 6)] {
            let (zm, zn) = (format!("Z{m}"), format!("Z{n}"));
            if !self.has(&zm) || !self.has(&zn) {
                continue;
            }
            let built = direct_product(&[&self.entry(&zm).ring, &self.entry(&zn).ring]);
            self.add_ring(&format!("Z{m}xZ{n}"), call("product", vec![vec![name(&zm), name(&zn)]]), built);
        }
        self.add_ring("F4", call("gf", vec![vec![num(4)]]), galois_field(4));
        for (n, base, r, k) in [
            ("Z2_X2", "Z2", 1, 1),
            ("Z2_X3", "Z2", 1, 2),
            ("Z2_XY", "Z2", 2, 1),
            ("Z3_X2", "Z3", 1, 1),
            ("Z4_X2", "Z4", 1, 1),
            ("Z2_X4", "Z2", 1, 3),
            ("F4_X2", "F4", 1, 1),
            ("Z3_X3", "Z3", 1, 2),
            ("Z2_XY2", "Z2", 2, 2),
        ] {
            if !self.has(base) {
                continue;
            }
            let built = trunc_poly(&self.entry(base).ring, r, k);
            self.add_ring(n, call("trunc_poly", vec![vec![name(base), num(r), num(k)]]), built);
        }
    }

    fn add_amalgam(&mut self, hom: Expr, ideal: Expr, domain_order: usize, ideal_len: usize) {
        let def = call("amalg", vec![vec![hom.clone(), ideal.clone()]]);
        self.add_amalgam_as(def, hom, ideal, domain_order, ideal_len);
    }

    fn add_amalgam_as(&mut self, def: Expr, hom: Expr, ideal: Expr, domain_order: usize, ideal_len: usize) {
        if domain_order * ideal_len > self.budget {
            return;
        }
        let n = format!("M{}", self.amalgams.len());
        self.define(Kind::Amalgam, &n, def);
        self.amalgams.push(Amalg {
            name: n,
            hom,
            ideal,
            ideal_len,
            domain_order,
        });
    }

    fn hom_to_z2(&mut self, from: &str) -> Option<String> {
        if !self.has(from) || !self.has("Z2") {
            return None;
        }
        let n = format!("q_{from}");
        let ring = self.entry(from).ring.clone();
        let images: Vec<Expr> = ring.elements().map(|x| num(x % 2)).collect();
        self.define(Kind::Hom, &n, call("map", vec![vec![arrow(from, "Z2")], images]));
        Some(n)
    }

    /// Instances the acceptance criteria name explicitly.
    fn landmarks(&mut self) {
        for (r, g) in [("Z4", 2), ("Z6", 2), ("Z8", 2), ("Z9", 3)] {
            if self.has(r) {
                let ideal = call("gen", vec![vec![name(r)], vec![num(g)]]);
                let len = self.entry(r).ring.order() / g;
                let order = self.entry(r).ring.order();
                let def = call("dup", vec![vec![name(r), ideal.clone()]]);
                self.add_amalgam_as(def, call("id", vec![vec![name(r)]]), ideal, order, len);
            }
        }
        // f surjective: the reduction Z4 → Z2 with J = Z2 and J = 0
        if let Some(q) = self.hom_to_z2("Z4") {
            self.add_amalgam(name(&q), call("whole", vec![vec![name("Z2")]]), 4, 2);
            self.add_amalgam(name(&q), call("zero", vec![vec![name("Z2")]]), 4, 1);
        }
        if let Some(q) = self.hom_to_z2("Z6") {
            self.add_amalgam(name(&q), call("whole", vec![vec![name("Z2")]]), 6, 2);
        }
    }

    /// A seeded sample of `(f, J)` over all unital homs between small
    /// catalog rings and all ideals of the target.
    fn sample(&mut self, seed: u64) {
        let small: Vec<usize> = (0..self.rings.len())
            .filter(|&i| self.rings[i].ring.order() <= HOM_RING_ORDER)
            .collect();
        let mut candidates: Vec<(usize, usize, RingHom, usize)> = Vec::new();
        for &a in &small {
            for &b in &small {
                let (ra, rb) = (&self.rings[a].ring, &self.rings[b].ring);
                let Ok(homs) = all_homs(ra, rb, HOM_CAP) else { continue };
                for f in homs {
                    for (k, (_, j)) in self.rings[b].ideals.iter().enumerate() {
                        if ra.order() * j.len() <= self.budget {
                            candidates.push((a, b, f.clone(), k));
                        }
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        candidates.shuffle(&mut rng);
        candidates.truncate(SAMPLE);
        let mut hom_names: Vec<(usize, usize, Vec<usize>, String)> = Vec::new();
        for (a, b, f, k) in candidates {
            let existing = hom_names
                .iter()
                .find(|(x, y, m, _)| *x == a && *y == b && m == f.map())
                .map(|h| h.3.clone());
            let hname = match existing {
                Some(h) => h,
                None => {
                    let h = format!("h{}", hom_names.len());
                    let (an, bn) = (self.rings[a].name.clone(), self.rings[b].name.clone());
                    let images = labels(&self.rings[b].ring, f.map());
                    self.define(Kind::Hom, &h, call("map", vec![vec![arrow(&an, &bn)], images]));
                    hom_names.push((a, b, f.map().to_vec(), h.clone()));
                    h
                }
            };
            let (iname, j) = &self.rings[b].ideals[k];
            let (iname, jlen) = (iname.clone(), j.len());
            let order = self.rings[a].ring.order();
            self.add_amalgam(name(&hname), name(&iname), order, jlen);
        }
    }

    fn checks(&mut self) {
        const PER_AMALGAM: [&str; 8] = [
            "cardinality",
            "pull_identity",
            "alt_pullback",
            "canonical_isos",
            "reduced_criterion",
            "domain_criterion",
            "retraction_roundtrip",
            "noetherian",
        ];
        let names: Vec<String> = self.amalgams.iter().map(|m| m.name.clone()).collect();
        for n in &names {
            for c in PER_AMALGAM {
                self.check(c, vec![vec![name(n)]]);
            }
        }
        if !names.is_empty() {
            self.check("reduced_converse", vec![names.iter().map(|n| name(n)).collect()]);
        }
        let iterated: Vec<(Expr, Expr)> = self
            .amalgams
            .iter()
            .filter(|m| m.ideal_len > 1 && m.domain_order * m.ideal_len.pow(3) <= 4 * self.budget)
            .take(ITERATED)
            .map(|m| (m.hom.clone(), m.ideal.clone()))
            .collect();
        for (f, j) in iterated {
            for n in [2, 3] {
                self.check("iter_iso", vec![vec![f.clone(), j.clone(), num(n)]]);
            }
        }
    }

    fn named_constructions(&mut self) {
        let need = |b: &Self, rs: &[&str]| rs.iter().all(|r| b.has(r));
        let gen = |r: &str, xs: Vec<Expr>| call("gen", vec![vec![name(r)], xs]);
        let constants = |r: &str| call("subgen", vec![vec![name(r)], vec![]]);
        if need(self, &["Z2", "Z4"]) {
            let q = "q_Z4";
            self.check("fibret", vec![vec![call("id", vec![vec![name("Z2")]]), name(q)]]);
            self.define(Kind::Pullback, "P_neg", call("pullback", vec![vec![call("id", vec![vec![name("Z2")]]), name(q)]]));
            self.check("prid", vec![vec![name("P_neg")]]);
            self.check("kernel_identity", vec![vec![name("P_neg")]]);
            self.check("factor", vec![vec![name(q), call("id", vec![vec![name("Z2")]]), name(q)]]);
            self.check("nagata", vec![vec![name("Z2"), call("regular", vec![vec![name("Z2")]])]]);
            let m = call("via", vec![vec![name(q), call("whole", vec![vec![name("Z2")]])]]);
            self.check("nagata", vec![vec![name("Z4"), m]]);
            self.check("nagata", vec![vec![name("Z4"), call("zero_module", vec![vec![name("Z4")]])]]);
            self.check("dorroh", vec![vec![call("rng", vec![vec![gen("Z4", vec![num(2)])]])]]);
            self.check("noetherian_xjx", vec![vec![call("all", vec![vec![name("Z4")]]), gen("Z4", vec![num(2)])]]);
            self.check("noetherian_xjx", vec![vec![call("all", vec![vec![name("Z4")]]), call("whole", vec![vec![name("Z4")]])]]);
            self.check("trunc_poly_amalgam", vec![vec![call("all", vec![vec![name("Z4")]]), gen("Z4", vec![num(2)]), num(1), num(2)]]);
        }
        if need(self, &["Z3"]) {
            self.check("nagata", vec![vec![name("Z3"), call("regular", vec![vec![name("Z3")]])]]);
        }
        if need(self, &["Z2xZ2"]) {
            let p1 = call("map", vec![vec![arrow("Z2xZ2", "Z2")], vec![num(0), num(0), num(1), num(1)]]);
            let p2 = call("map", vec![vec![arrow("Z2xZ2", "Z2")], vec![num(0), num(1), num(0), num(1)]]);
            self.check("same_amalgam", vec![vec![p1, p2, call("whole", vec![vec![name("Z2")]])]]);
            let j = gen("Z2xZ2", vec![label_expr("(1,0)")]);
            self.check("noetherian_xjx", vec![vec![constants("Z2xZ2"), j]]);
        }
        if need(self, &["Z2_X2"]) {
            self.check("d_plus_m", vec![vec![name("Z2_X2"), constants("Z2_X2")], vec![gen("Z2_X2", vec![name("X")])]]);
        }
        if need(self, &["F4_X2"]) {
            self.check("d_plus_m", vec![vec![name("F4_X2"), constants("F4_X2")], vec![gen("F4_X2", vec![name("X")])]]);
        }
        if need(self, &["F4"]) {
            self.check("trunc_poly_amalgam", vec![vec![constants("F4"), call("whole", vec![vec![name("F4")]]), num(1), num(1)]]);
        }
        if need(self, &["Z12"]) && self.budget >= 24 {
            self.check("cpi_prime", vec![vec![name("Z12"), gen("Z12", vec![num(2)])]]);
            self.check("cpi_ideal", vec![vec![name("Z12"), gen("Z12", vec![num(4)])]]);
            self.check("cpi_ideal", vec![vec![name("Z12"), call("zero", vec![vec![name("Z12")]])]]);
            self.check("cpi_ideal", vec![vec![name("Z12"), gen("Z12", vec![num(3)])]]);
            self.check("dorroh", vec![vec![call("rng", vec![vec![gen("Z12", vec![num(2)])]])]]);
        }
        if need(self, &["Z6"]) {
            self.check("cpi_prime", vec![vec![name("Z6"), gen("Z6", vec![num(3)])]]);
        }
        if need(self, &["Z5"]) {
            self.check("cpi_prime", vec![vec![name("Z5"), call("zero", vec![vec![name("Z5")]])]]);
        }
    }
}

fn arrow(from: &str, to: &str) -> Expr {
    Expr::Arrow(Box::new(name(from)), Box::new(name(to)))
}
