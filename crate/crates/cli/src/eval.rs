//! Evaluation of a parsed script into verification reports.

use std::collections::HashMap;

use amalgam_core::amalgamation::{
    alt_pullback_checks, amalgam, b_diamond, canonical_isos, cardinality_check, dorroh,
    domain_criterion_check, duplication, factor_check, fibret_check, iter_iso_check,
    kernel_identity_check, n_amalgam, prid_check, pull_identity_check, pullback,
    reduced_converse_search, reduced_criterion_check, retraction_roundtrip, same_amalgam, Amalgam,
    PullbackData,
};
use amalgam_core::constructions::{
    cpi_ideal, cpi_prime, d_plus_m, nagata_as_amalgam_check, noetherian_report, noetherian_verdict_xjx,
    trunc_poly_amalgam,
};
use amalgam_core::morphism::{find_iso, IsoOutcome};
use amalgam_core::report::Recorder;
use amalgam_core::ring::{direct_product, galois_field, trunc_poly, zmod};
use amalgam_core::subobjects::{
    localization, module_via_hom, multiplicative_closure, nilradical, quotient_ring, FiniteModule,
};
use amalgam_core::{Error, Ideal, Ring, RingHom, Subrng, VerificationReport};

use crate::ast::{Call, Expr, Pos, Script, Statement};
use crate::error::DslError;
use crate::render::render_call;

#[derive(Clone)]
enum Value {
    Ring(Ring),
    Ideal(Ideal),
    Hom(RingHom),
    Module(FiniteModule),
    Amalgam(Box<Amalgam>),
    Pullback(Box<PullbackData>),
    Subring(Subrng),
}

/// Why an expression has no value: a hypothesis failure is carried into the
/// reports that need it, anything else aborts evaluation.
enum Fail {
    Deferred(Error),
    Hard(DslError),
}

type Eval<T> = Result<T, Fail>;

/// Evaluates every check in order. Instances outside a construction's
/// hypotheses (including the size guard) become `hypothesis_not_met`
/// reports; malformed input is an error.
pub fn evaluate(script: &Script) -> Result<Vec<VerificationReport>, DslError> {
    let mut ev = Evaluator { env: HashMap::new() };
    let mut reports = Vec::new();
    for (statement, &pos) in script.statements.iter().zip(&script.positions) {
        match statement {
            Statement::Define { name, expr, .. } => {
                let value = match ev.eval(expr, pos) {
                    Ok(v) => Ok(v),
                    Err(Fail::Deferred(e)) => Err(e),
                    Err(Fail::Hard(e)) => return Err(e),
                };
                ev.env.insert(name.clone(), value);
            }
            Statement::Check(call) => {
                let source = render_call(call);
                let report = match ev.check(call, pos) {
                    Ok(mut rep) => {
                        rep.instance = format!("{source} [{}]", rep.instance);
                        rep
                    }
                    Err(Fail::Deferred(e)) => VerificationReport::not_applicable(&call.func, &source, &e),
                    Err(Fail::Hard(e)) => return Err(e),
                };
                reports.push(VerificationReport {
                    check: call.func.clone(),
                    ..report
                });
            }
        }
    }
    Ok(reports)
}

struct Evaluator {
    env: HashMap<String, Result<Value, Error>>,
}

fn lift(pos: Pos) -> impl Fn(Error) -> Fail {
    move |e| {
        if e.is_hypothesis_failure() {
            Fail::Deferred(e)
        } else {
            Fail::Hard(DslError::Eval { pos, source: e })
        }
    }
}

fn mismatch(pos: Pos, expected: &str) -> Fail {
    Fail::Hard(DslError::TypeMismatch {
        pos,
        expected: expected.into(),
        found: "a different kind of value".into(),
    })
}

impl Evaluator {
    fn eval(&self, e: &Expr, pos: Pos) -> Eval<Value> {
        match e {
            Expr::Name(n) => match self.env.get(n) {
                Some(Ok(v)) => Ok(v.clone()),
                Some(Err(e)) => Err(Fail::Deferred(e.clone())),
                None => Err(Fail::Hard(DslError::UnknownName { pos, name: n.clone() })),
            },
            Expr::Call(c) => self.construct(c, pos),
            _ => Err(mismatch(pos, "an object")),
        }
    }

    fn ring(&self, e: &Expr, pos: Pos) -> Eval<Ring> {
        match self.eval(e, pos)? {
            Value::Ring(r) => Ok(r),
            Value::Subring(s) => Ok(s.to_ring().0),
            Value::Amalgam(a) => Ok(a.ring().clone()),
            Value::Pullback(p) => Ok(p.ring().clone()),
            _ => Err(mismatch(pos, "ring")),
        }
    }

    fn ideal(&self, e: &Expr, pos: Pos) -> Eval<Ideal> {
        match self.eval(e, pos)? {
            Value::Ideal(i) => Ok(i),
            _ => Err(mismatch(pos, "ideal")),
        }
    }

    fn hom(&self, e: &Expr, pos: Pos) -> Eval<RingHom> {
        match self.eval(e, pos)? {
            Value::Hom(h) => Ok(h),
            _ => Err(mismatch(pos, "hom")),
        }
    }

    fn module(&self, e: &Expr, pos: Pos) -> Eval<FiniteModule> {
        match self.eval(e, pos)? {
            Value::Module(m) => Ok(m),
            _ => Err(mismatch(pos, "module")),
        }
    }

    fn amalgam(&self, e: &Expr, pos: Pos) -> Eval<Amalgam> {
        match self.eval(e, pos)? {
            Value::Amalgam(a) => Ok(*a),
            _ => Err(mismatch(pos, "amalgam")),
        }
    }

    fn pullback(&self, e: &Expr, pos: Pos) -> Eval<PullbackData> {
        match self.eval(e, pos)? {
            Value::Pullback(p) => Ok(*p),
            _ => Err(mismatch(pos, "pullback")),
        }
    }

    fn subring(&self, e: &Expr, pos: Pos) -> Eval<Subrng> {
        match self.eval(e, pos)? {
            Value::Subring(s) => Ok(s),
            _ => Err(mismatch(pos, "subring")),
        }
    }

    fn int(&self, e: &Expr, pos: Pos) -> Eval<usize> {
        match e {
            Expr::Number(n) => usize::try_from(*n).map_err(|_| mismatch(pos, "a smaller integer")),
            _ => Err(mismatch(pos, "integer")),
        }
    }

    fn element(&self, ring: &Ring, e: &Expr, pos: Pos) -> Eval<usize> {
        let label = match e {
            Expr::Name(s) | Expr::Label(s) => s.clone(),
            Expr::Number(n) => n.to_string(),
            _ => return Err(mismatch(pos, "element")),
        };
        ring.index_of(&label).ok_or(Fail::Hard(DslError::UnknownElement {
            pos,
            label,
            order: ring.order(),
        }))
    }

    fn elements(&self, ring: &Ring, es: &[Expr], pos: Pos) -> Eval<Vec<usize>> {
        es.iter().map(|e| self.element(ring, e, pos)).collect()
    }

    fn construct(&self, c: &Call, pos: Pos) -> Eval<Value> {
        let g = &c.groups;
        let a = |i: usize| &g[0][i];
        let err = lift(pos);
        let v = match c.func.as_str() {
            "zmod" => Value::Ring(zmod(self.int(a(0), pos)?).map_err(&err)?),
            "gf" => Value::Ring(galois_field(self.int(a(0), pos)?).map_err(&err)?),
            "product" => {
                let rings = g[0].iter().map(|e| self.ring(e, pos)).collect::<Eval<Vec<_>>>()?;
                let refs: Vec<&amalgam_core::FiniteRng> = rings.iter().map(|r| &**r).collect();
                Value::Ring(direct_product(&refs).map_err(&err)?)
            }
            "trunc_poly" => {
                let r = self.ring(a(0), pos)?;
                Value::Ring(trunc_poly(&r, self.int(a(1), pos)?, self.int(a(2), pos)?).map_err(&err)?)
            }
            "quotient" => Value::Ring(quotient_ring(&self.ideal(a(0), pos)?).map_err(&err)?.0),
            "localize" => {
                let r = self.ring(a(0), pos)?;
                let gens = self.elements(&r, &g[1], pos)?;
                let s = multiplicative_closure(&r, &gens).map_err(&err)?;
                Value::Ring(localization(&r, &s).map_err(&err)?.0)
            }
            "rng" => Value::Ring(self.ideal(a(0), pos)?.as_rng().0),
            "gen" => {
                let r = self.ring(a(0), pos)?;
                let gens = self.elements(&r, &g[1], pos)?;
                Value::Ideal(Ideal::generated(&r, &gens).map_err(&err)?)
            }
            "zero" => Value::Ideal(Ideal::zero(&self.ring(a(0), pos)?)),
            "whole" => Value::Ideal(Ideal::whole(&self.ring(a(0), pos)?)),
            "nilradical" => Value::Ideal(nilradical(&self.ring(a(0), pos)?)),
            "kernel" => Value::Ideal(self.hom(a(0), pos)?.kernel()),
            "preimage" => Value::Ideal(self.hom(a(0), pos)?.preimage(&self.ideal(a(1), pos)?).map_err(&err)?),
            "sum" | "prod" | "meet" => {
                let (i, j) = (self.ideal(a(0), pos)?, self.ideal(a(1), pos)?);
                let k = match c.func.as_str() {
                    "sum" => i.sum(&j),
                    "prod" => i.product(&j),
                    _ => i.intersection(&j),
                };
                Value::Ideal(k.map_err(&err)?)
            }
            "map" => {
                let Expr::Arrow(l, r) = a(0) else {
                    return Err(mismatch(pos, "R -> S"));
                };
                let (dom, cod) = (self.ring(l, pos)?, self.ring(r, pos)?);
                if g[1].len() != dom.order() {
                    return Err(err(Error::MalformedMap(format!(
                        "{} images given for a domain of order {}",
                        g[1].len(),
                        dom.order()
                    ))));
                }
                let map = self.elements(&cod, &g[1], pos)?;
                let unital = matches!((dom.one(), cod.one()), (Some(o), Some(p)) if map[o] == p);
                Value::Hom(RingHom::new(&dom, &cod, map, unital).map_err(&err)?)
            }
            "id" => Value::Hom(RingHom::identity(&self.ring(a(0), pos)?)),
            "proj" => Value::Hom(quotient_ring(&self.ideal(a(0), pos)?).map_err(&err)?.1),
            "incl" => Value::Hom(self.subring(a(0), pos)?.to_ring().1),
            "compose" => {
                let (outer, inner) = (self.hom(a(0), pos)?, self.hom(a(1), pos)?);
                Value::Hom(outer.compose(&inner).map_err(&err)?)
            }
            "regular" => Value::Module(FiniteModule::regular(&self.ring(a(0), pos)?).map_err(&err)?),
            "zero_module" => Value::Module(FiniteModule::zero_module(&self.ring(a(0), pos)?).map_err(&err)?),
            "via" => {
                let (f, j) = (self.hom(a(0), pos)?, self.ideal(a(1), pos)?);
                Value::Module(module_via_hom(&f, &j).map_err(&err)?)
            }
            "subgen" => {
                let r = self.ring(a(0), pos)?;
                let gens = self.elements(&r, &g[1], pos)?;
                Value::Subring(Subrng::generated(&r, &gens, true).map_err(&err)?)
            }
            "image" => Value::Subring(self.hom(a(0), pos)?.image()),
            "all" => Value::Subring(Subrng::whole(&self.ring(a(0), pos)?)),
            "amalg" => {
                let (f, j) = (self.hom(a(0), pos)?, self.ideal(a(1), pos)?);
                Value::Amalgam(Box::new(amalgam(&f, &j).map_err(&err)?))
            }
            "dup" => {
                let (r, i) = (self.ring(a(0), pos)?, self.ideal(a(1), pos)?);
                Value::Amalgam(Box::new(duplication(&r, &i).map_err(&err)?))
            }
            "namalg" => {
                let (f, j) = (self.hom(a(0), pos)?, self.ideal(a(1), pos)?);
                Value::Amalgam(Box::new(n_amalgam(&f, &j, self.int(a(2), pos)?).map_err(&err)?))
            }
            "pullback" => {
                let (al, be) = (self.hom(a(0), pos)?, self.hom(a(1), pos)?);
                Value::Pullback(Box::new(pullback(&al, &be).map_err(&err)?))
            }
            other => return Err(Fail::Hard(DslError::UnknownName { pos, name: other.into() })),
        };
        Ok(v)
    }

    fn check(&self, c: &Call, pos: Pos) -> Eval<VerificationReport> {
        let g = &c.groups;
        let a = |i: usize| &g[0][i];
        let err = lift(pos);
        let rep = match c.func.as_str() {
            "cardinality" => cardinality_check(&self.amalgam(a(0), pos)?),
            "pull_identity" => pull_identity_check(&self.amalgam(a(0), pos)?).map_err(&err)?,
            "alt_pullback" => alt_pullback_checks(&self.amalgam(a(0), pos)?).map_err(&err)?,
            "canonical_isos" => {
                let amg = self.amalgam(a(0), pos)?;
                let i = g[0].get(1).map(|e| self.ideal(e, pos)).transpose()?;
                canonical_isos(&amg, i.as_ref()).map_err(&err)?
            }
            "domain_criterion" => domain_criterion_check(&self.amalgam(a(0), pos)?).map_err(&err)?,
            "reduced_criterion" => reduced_criterion_check(&self.amalgam(a(0), pos)?).map_err(&err)?,
            "reduced_converse" => {
                let amgs = g[0].iter().map(|e| self.amalgam(e, pos)).collect::<Eval<Vec<_>>>()?;
                reduced_converse_search(&amgs)
            }
            "same_amalgam" => {
                let (f, h, j) = (self.hom(a(0), pos)?, self.hom(a(1), pos)?, self.ideal(a(2), pos)?);
                same_amalgam(&f, &h, &j).map_err(&err)?
            }
            "iter_iso" => {
                let (f, j) = (self.hom(a(0), pos)?, self.ideal(a(1), pos)?);
                iter_iso_check(&f, &j, self.int(a(2), pos)?).map_err(&err)?
            }
            "b_diamond" => {
                let (f, j) = (self.hom(a(0), pos)?, self.ideal(a(1), pos)?);
                b_diamond(&f, &j).map_err(&err)?.1
            }
            "factor" => {
                let (al, be, f) = (self.hom(a(0), pos)?, self.hom(a(1), pos)?, self.hom(a(2), pos)?);
                factor_check(&al, &be, &f).map_err(&err)?
            }
            "fibret" => fibret_check(&self.hom(a(0), pos)?, &self.hom(a(1), pos)?).map_err(&err)?,
            "retraction_roundtrip" => retraction_roundtrip(&self.amalgam(a(0), pos)?).map_err(&err)?,
            "prid" => prid_check(&self.pullback(a(0), pos)?).map_err(&err)?,
            "kernel_identity" => kernel_identity_check(&self.pullback(a(0), pos)?).map_err(&err)?,
            "dorroh" => dorroh(&self.ring(a(0), pos)?).map_err(&err)?.1,
            "nagata" => {
                let (r, m) = (self.ring(a(0), pos)?, self.module(a(1), pos)?);
                nagata_as_amalgam_check(&r, &m).map_err(&err)?
            }
            "d_plus_m" => {
                let (t, d) = (self.ring(a(0), pos)?, self.subring(a(1), pos)?);
                let ms = g[1].iter().map(|e| self.ideal(e, pos)).collect::<Eval<Vec<_>>>()?;
                d_plus_m(&t, &d, &ms).map_err(&err)?.1
            }
            "cpi_prime" => cpi_prime(&self.ring(a(0), pos)?, &self.ideal(a(1), pos)?).map_err(&err)?.1,
            "cpi_ideal" => cpi_ideal(&self.ring(a(0), pos)?, &self.ideal(a(1), pos)?).map_err(&err)?.1,
            "trunc_poly_amalgam" => {
                let (s, j) = (self.subring(a(0), pos)?, self.ideal(a(1), pos)?);
                trunc_poly_amalgam(&s, &j, self.int(a(2), pos)?, self.int(a(3), pos)?)
                    .map_err(&err)?
                    .1
            }
            "noetherian" => noetherian_report(&self.amalgam(a(0), pos)?),
            "noetherian_xjx" => {
                noetherian_verdict_xjx(&self.subring(a(0), pos)?, &self.ideal(a(1), pos)?).map_err(&err)?
            }
            "isomorphic" => {
                let (r, s) = (self.ring(a(0), pos)?, self.ring(a(1), pos)?);
                let mut rec = Recorder::new("isomorphic", &format!("|R|={}, |S|={}", r.order(), s.order()));
                match find_iso(&r, &s).map_err(&err)? {
                    IsoOutcome::Found(h) => {
                        rec.fact("isomorphic", true);
                        rec.iso("R → S", &h);
                    }
                    IsoOutcome::InvariantMismatch(why) => {
                        rec.fact("isomorphic", false);
                        rec.claim("R ≅ S", false, || format!("invariants differ: {why}"));
                    }
                    IsoOutcome::Exhausted => {
                        rec.fact("isomorphic", false);
                        rec.claim("R ≅ S", false, || "exhaustive search found no isomorphism".into());
                    }
                }
                rec.finish()
            }
            other => return Err(Fail::Hard(DslError::UnknownName { pos, name: other.into() })),
        };
        Ok(rep)
    }
}
