//! Argument signatures of every DSL function and check.

use std::fmt;

use crate::ast::Kind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ty {
    Obj(Kind),
    Int,
    Elem,
    Arrow,
}

impl Ty {
    /// Whether a value of type `self` may stand where `want` is expected.
    /// Subrings, amalgams and pullbacks coerce to their underlying ring.
    pub fn fits(self, want: Ty) -> bool {
        self == want
            || matches!(
                (self, want),
                (Ty::Obj(Kind::Subring | Kind::Amalgam | Kind::Pullback), Ty::Obj(Kind::Ring))
            )
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Obj(k) => write!(f, "{k}"),
            Ty::Int => f.write_str("integer"),
            Ty::Elem => f.write_str("element"),
            Ty::Arrow => f.write_str("R -> S"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Param {
    One(Ty),
    Opt(Ty),
    Rest(Ty),
}

pub struct Signature {
    pub name: &'static str,
    pub groups: &'static [&'static [Param]],
    /// `None` for checks.
    pub result: Option<Kind>,
}

impl Signature {
    /// The expected form, e.g. `gen(ring; element...)`.
    pub fn usage(&self) -> String {
        let groups: Vec<String> = self
            .groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|p| match p {
                        Param::One(t) => t.to_string(),
                        Param::Opt(t) => format!("[{t}]"),
                        Param::Rest(t) => format!("{t}..."),
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("{}({})", self.name, groups.join("; "))
    }
}

use Param::{One, Opt, Rest};

const RING: Ty = Ty::Obj(Kind::Ring);
const IDEAL: Ty = Ty::Obj(Kind::Ideal);
const HOM: Ty = Ty::Obj(Kind::Hom);
const MODULE: Ty = Ty::Obj(Kind::Module);
const AMALGAM: Ty = Ty::Obj(Kind::Amalgam);
const PULLBACK: Ty = Ty::Obj(Kind::Pullback);
const SUBRING: Ty = Ty::Obj(Kind::Subring);

macro_rules! sig {
    ($name:literal, [$($group:expr),*], $result:expr) => {
        Signature { name: $name, groups: &[$($group),*], result: $result }
    };
}

pub static FUNCTIONS: &[Signature] = &[
    sig!("zmod", [&[One(Ty::Int)]], Some(Kind::Ring)),
    sig!("gf", [&[One(Ty::Int)]], Some(Kind::Ring)),
    sig!("product", [&[One(RING), Rest(RING)]], Some(Kind::Ring)),
    sig!("trunc_poly", [&[One(RING), One(Ty::Int), One(Ty::Int)]], Some(Kind::Ring)),
    sig!("quotient", [&[One(IDEAL)]], Some(Kind::Ring)),
    sig!("localize", [&[One(RING)], &[Rest(Ty::Elem)]], Some(Kind::Ring)),
    sig!("rng", [&[One(IDEAL)]], Some(Kind::Ring)),
    sig!("gen", [&[One(RING)], &[Rest(Ty::Elem)]], Some(Kind::Ideal)),
    sig!("zero", [&[One(RING)]], Some(Kind::Ideal)),
    sig!("whole", [&[One(RING)]], Some(Kind::Ideal)),
    sig!("nilradical", [&[One(RING)]], Some(Kind::Ideal)),
    sig!("kernel", [&[One(HOM)]], Some(Kind::Ideal)),
    sig!("preimage", [&[One(HOM), One(IDEAL)]], Some(Kind::Ideal)),
    sig!("sum", [&[One(IDEAL), One(IDEAL)]], Some(Kind::Ideal)),
    sig!("prod", [&[One(IDEAL), One(IDEAL)]], Some(Kind::Ideal)),
    sig!("meet", [&[One(IDEAL), One(IDEAL)]], Some(Kind::Ideal)),
    sig!("map", [&[One(Ty::Arrow)], &[Rest(Ty::Elem)]], Some(Kind::Hom)),
    sig!("id", [&[One(RING)]], Some(Kind::Hom)),
    sig!("proj", [&[One(IDEAL)]], Some(Kind::Hom)),
    sig!("incl", [&[One(SUBRING)]], Some(Kind::Hom)),
    sig!("compose", [&[One(HOM), One(HOM)]], Some(Kind::Hom)),
    sig!("regular", [&[One(RING)]], Some(Kind::Module)),
    sig!("zero_module", [&[One(RING)]], Some(Kind::Module)),
    sig!("via", [&[One(HOM), One(IDEAL)]], Some(Kind::Module)),
    sig!("subgen", [&[One(RING)], &[Rest(Ty::Elem)]], Some(Kind::Subring)),
    sig!("image", [&[One(HOM)]], Some(Kind::Subring)),
    sig!("all", [&[One(RING)]], Some(Kind::Subring)),
    sig!("amalg", [&[One(HOM), One(IDEAL)]], Some(Kind::Amalgam)),
    sig!("dup", [&[One(RING), One(IDEAL)]], Some(Kind::Amalgam)),
    sig!("namalg", [&[One(HOM), One(IDEAL), One(Ty::Int)]], Some(Kind::Amalgam)),
    sig!("pullback", [&[One(HOM), One(HOM)]], Some(Kind::Pullback)),
];

pub static CHECKS: &[Signature] = &[
    sig!("cardinality", [&[One(AMALGAM)]], None),
    sig!("pull_identity", [&[One(AMALGAM)]], None),
    sig!("alt_pullback", [&[One(AMALGAM)]], None),
    sig!("canonical_isos", [&[One(AMALGAM), Opt(IDEAL)]], None),
    sig!("domain_criterion", [&[One(AMALGAM)]], None),
    sig!("reduced_criterion", [&[One(AMALGAM)]], None),
    sig!("reduced_converse", [&[Rest(AMALGAM)]], None),
    sig!("same_amalgam", [&[One(HOM), One(HOM), One(IDEAL)]], None),
    sig!("iter_iso", [&[One(HOM), One(IDEAL), One(Ty::Int)]], None),
    sig!("b_diamond", [&[One(HOM), One(IDEAL)]], None),
    sig!("factor", [&[One(HOM), One(HOM), One(HOM)]], None),
    sig!("fibret", [&[One(HOM), One(HOM)]], None),
    sig!("retraction_roundtrip", [&[One(AMALGAM)]], None),
    sig!("prid", [&[One(PULLBACK)]], None),
    sig!("kernel_identity", [&[One(PULLBACK)]], None),
    sig!("dorroh", [&[One(RING)]], None),
    sig!("nagata", [&[One(RING), One(MODULE)]], None),
    sig!("d_plus_m", [&[One(RING), One(SUBRING)], &[One(IDEAL), Rest(IDEAL)]], None),
    sig!("cpi_prime", [&[One(RING), One(IDEAL)]], None),
    sig!("cpi_ideal", [&[One(RING), One(IDEAL)]], None),
    sig!("trunc_poly_amalgam", [&[One(SUBRING), One(IDEAL), One(Ty::Int), One(Ty::Int)]], None),
    sig!("noetherian", [&[One(AMALGAM)]], None),
    sig!("noetherian_xjx", [&[One(SUBRING), One(IDEAL)]], None),
    sig!("isomorphic", [&[One(RING), One(RING)]], None),
];

pub fn function(name: &str) -> Option<&'static Signature> {
    FUNCTIONS.iter().find(|s| s.name == name)
}

pub fn check(name: &str) -> Option<&'static Signature> {
    CHECKS.iter().find(|s| s.name == name)
}
