//! Structured results of proposition checks.

use std::time::Instant;

use serde::Serialize;

use crate::error::Error;
use crate::morphism::RingHom;
use crate::ring::FiniteRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
    /// The verdict rests on a proved theorem about rings that are never
    /// constructed; only its finite-side hypotheses were computed.
    TheoremBacked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Map {
        name: String,
        pairs: Vec<(String, String)>,
    },
    Elements {
        name: String,
        elements: Vec<String>,
    },
    Fact {
        name: String,
        value: String,
    },
}

impl Witness {
    pub fn name(&self) -> &str {
        match self {
            Witness::Map { name, .. } | Witness::Elements { name, .. } | Witness::Fact { name, .. } => {
                name
            }
        }
    }
}

/// One asserted statement and whether it held on the instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub claims: Vec<Claim>,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
    pub millis: u64,
    /// The validated maps behind every `Witness::Map`, for re-checking.
    #[serde(skip)]
    pub maps: Vec<RingHom>,
}

impl PartialEq for VerificationReport {
    /// Ignores timing.
    fn eq(&self, other: &Self) -> bool {
        self.check == other.check
            && self.instance == other.instance
            && self.status == other.status
            && self.claims == other.claims
            && self.witnesses == other.witnesses
            && self.counterexample == other.counterexample
            && self.notes == other.notes
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn claim(&self, name: &str) -> Option<bool> {
        self.claims.iter().find(|c| c.name == name).map(|c| c.holds)
    }

    pub fn witness(&self, name: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.name() == name)
    }

    pub fn fact(&self, name: &str) -> Option<&str> {
        match self.witness(name)? {
            Witness::Fact { value, .. } => Some(value),
            _ => None,
        }
    }

    /// A report for a check whose inputs could not be built or fell outside
    /// the hypotheses (size guard, non-prime ideal, ...).
    pub fn not_applicable(check: &str, instance: &str, err: &Error) -> VerificationReport {
        let mut r = Recorder::new(check, instance);
        r.hypothesis_not_met(err.to_string());
        r.finish()
    }
}

/// Accumulates claims and witnesses while a check runs.
pub struct Recorder {
    report: VerificationReport,
    started: Instant,
    forced: Option<Status>,
}

impl Recorder {
    pub fn new(check: &str, instance: &str) -> Recorder {
        Recorder {
            report: VerificationReport {
                check: check.to_string(),
                instance: instance.to_string(),
                status: Status::Pass,
                claims: Vec::new(),
                witnesses: Vec::new(),
                counterexample: None,
                notes: Vec::new(),
                millis: 0,
                maps: Vec::new(),
            },
            started: Instant::now(),
            forced: None,
        }
    }

    /// Records `name`; on the first failure `detail` becomes the counterexample.
    pub fn claim(&mut self, name: &str, holds: bool, detail: impl FnOnce() -> String) -> bool {
        self.report.claims.push(Claim {
            name: name.to_string(),
            holds,
        });
        if !holds && self.report.counterexample.is_none() {
            self.report.counterexample = Some(format!("{name}: {}", detail()));
        }
        holds
    }

    pub fn fact(&mut self, name: &str, value: impl ToString) {
        self.report.witnesses.push(Witness::Fact {
            name: name.to_string(),
            value: value.to_string(),
        });
    }

    pub fn elements(&mut self, name: &str, ring: &FiniteRng, elems: &[usize]) {
        self.report.witnesses.push(Witness::Elements {
            name: name.to_string(),
            elements: elems.iter().map(|&x| ring.label(x).to_string()).collect(),
        });
    }

    /// Elements already rendered as labels.
    pub fn labels(&mut self, name: &str, elements: Vec<String>) {
        self.report.witnesses.push(Witness::Elements {
            name: name.to_string(),
            elements,
        });
    }

    pub fn map(&mut self, name: &str, f: &RingHom) {
        self.report.witnesses.push(Witness::Map {
            name: name.to_string(),
            pairs: f.pairs(),
        });
        self.report.maps.push(f.clone());
    }

    /// Records `f` as an isomorphism witness: it must re-validate as a
    /// bijective homomorphism.
    pub fn iso(&mut self, name: &str, f: &RingHom) -> bool {
        let ok = crate::morphism::verify_iso(f);
        self.claim(name, ok, || format!("witness map {f:?} is not a bijective homomorphism"));
        self.map(name, f);
        ok
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.report.notes.push(text.into());
    }

    pub fn hypothesis_not_met(&mut self, reason: impl Into<String>) {
        self.report.notes.push(reason.into());
        self.forced = Some(Status::HypothesisNotMet);
    }

    pub fn theorem_backed(&mut self) {
        self.forced = Some(Status::TheoremBacked);
    }

    /// Folds the claims, witnesses and notes of `other` into this report,
    /// each name prefixed by `prefix: `.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        let rename = |name: &str| format!("{prefix}: {name}");
        for c in other.claims {
            let detail = other.counterexample.clone().unwrap_or_default();
            self.claim(&rename(&c.name), c.holds, || detail);
        }
        for mut w in other.witnesses {
            match &mut w {
                Witness::Map { name, .. } | Witness::Elements { name, .. } | Witness::Fact { name, .. } => {
                    *name = rename(name);
                }
            }
            self.report.witnesses.push(w);
        }
        self.report.maps.extend(other.maps);
        self.report.notes.extend(other.notes.into_iter().map(|n| rename(&n)));
        if other.status == Status::HypothesisNotMet {
            self.forced = Some(Status::HypothesisNotMet);
        }
    }

    pub fn all_held(&self) -> bool {
        self.report.claims.iter().all(|c| c.holds)
    }

    pub fn finish(mut self) -> VerificationReport {
        self.report.millis = self.started.elapsed().as_millis() as u64;
        self.report.status = if !self.all_held() {
            Status::Fail
        } else {
            self.forced.unwrap_or(Status::Pass)
        };
        self.report
    }
}
