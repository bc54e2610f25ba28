use amalgam_cli::ast::{Call, Expr, Kind, Statement};
use amalgam_cli::sig::{Param, Signature, Ty, CHECKS, FUNCTIONS};
use amalgam_cli::{evaluate, parse, render_script, Script};
use amalgam_core::{with_size_guard, Status};
use proptest::prelude::*;

/// Deterministic decisions drawn from a proptest-generated tape; an
/// exhausted tape always answers 0, which keeps every script finite.
struct Tape<'a> {
    data: &'a [u32],
    at: usize,
}

impl Tape<'_> {
    fn pick(&mut self, n: usize) -> usize {
        let v = self.data.get(self.at).copied().unwrap_or(0);
        self.at += 1;
        v as usize % n.max(1)
    }
}

const LABELS: &[&str] = &["(1,0)", "1+t", "", "a b", "say \"hi\"", "back\\slash", "t²", "0x", "07"];

struct Gen<'a> {
    tape: Tape<'a>,
    env: Vec<(String, Kind)>,
}

impl Gen<'_> {
    fn elem(&mut self) -> Expr {
        match self.tape.pick(3) {
            0 => Expr::Number(self.tape.pick(1000) as u64),
            1 => Expr::Name(format!("{}{}", ["t", "X", "y'", "_e"][self.tape.pick(4)], self.tape.pick(9))),
            _ => Expr::Label(LABELS[self.tape.pick(LABELS.len())].to_string()),
        }
    }

    fn obj(&mut self, want: Kind, depth: usize) -> Expr {
        let names: Vec<String> = self
            .env
            .iter()
            .filter(|(_, k)| Ty::Obj(*k).fits(Ty::Obj(want)))
            .map(|(n, _)| n.clone())
            .collect();
        if !names.is_empty() && (depth == 0 || self.tape.pick(2) == 0) {
            return Expr::Name(names[self.tape.pick(names.len())].clone());
        }
        let producers: Vec<&Signature> = FUNCTIONS
            .iter()
            .filter(|s| Ty::Obj(s.result.unwrap()).fits(Ty::Obj(want)))
            .collect();
        // `zmod` bottoms out the recursion for every kind reachable from a ring.
        let sig = if depth == 0 {
            match want {
                Kind::Ring => FUNCTIONS.iter().find(|s| s.name == "zmod").unwrap(),
                _ => producers.iter().copied().find(|s| takes_only_rings(s)).unwrap_or(producers[0]),
            }
        } else {
            producers[self.tape.pick(producers.len())]
        };
        Expr::Call(self.call(sig, depth.saturating_sub(1)))
    }

    fn arg(&mut self, ty: Ty, depth: usize) -> Expr {
        match ty {
            Ty::Obj(k) => self.obj(k, depth),
            Ty::Int => Expr::Number(self.tape.pick(50) as u64),
            Ty::Elem => self.elem(),
            Ty::Arrow => Expr::Arrow(
                Box::new(self.obj(Kind::Ring, depth)),
                Box::new(self.obj(Kind::Ring, depth)),
            ),
        }
    }

    fn call(&mut self, sig: &Signature, depth: usize) -> Call {
        let mut groups = Vec::new();
        for group in sig.groups {
            let mut items = Vec::new();
            for p in group.iter() {
                let (ty, count) = match *p {
                    Param::One(t) => (t, 1),
                    Param::Opt(t) => (t, self.tape.pick(2)),
                    Param::Rest(t) => (t, self.tape.pick(4)),
                };
                for _ in 0..count {
                    items.push(self.arg(ty, depth));
                }
            }
            groups.push(items);
        }
        Call {
            func: sig.name.to_string(),
            groups,
        }
    }
}

fn takes_only_rings(s: &Signature) -> bool {
    s.groups
        .iter()
        .flat_map(|g| g.iter())
        .all(|p| matches!(p, Param::One(Ty::Obj(Kind::Ring) | Ty::Int | Ty::Elem) | Param::Rest(Ty::Elem)))
}

fn random_script(data: &[u32]) -> Script {
    let mut g = Gen {
        tape: Tape { data, at: 0 },
        env: Vec::new(),
    };
    let mut script = Script::default();
    let len = g.tape.pick(12) + 1;
    for i in 0..len {
        if g.tape.pick(3) == 0 {
            let sig = &CHECKS[g.tape.pick(CHECKS.len())];
            let depth = g.tape.pick(3);
            let call = g.call(sig, depth);
            script.push(Statement::Check(call));
        } else {
            let kind = Kind::ALL[g.tape.pick(Kind::ALL.len())];
            let depth = g.tape.pick(3);
            let expr = g.obj(kind, depth);
            let name = format!("v{i}");
            g.env.push((name.clone(), kind));
            script.push(Statement::Define { kind, name, expr });
        }
    }
    script
}

proptest! {
    #[test]
    fn parse_inverts_render(data in prop::collection::vec(any::<u32>(), 0..300)) {
        let script = random_script(&data);
        let text = render_script(&script);
        let parsed = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&parsed, &script);
        prop_assert_eq!(render_script(&parsed), text);
    }
}

#[test]
fn evaluates_the_duplication_example() {
    let script = parse("ring A = zmod(4); ideal I = gen(A; 2); check reduced_criterion(dup(A, I));").unwrap();
    let reports = evaluate(&script).unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.fact("A⋈^f J reduced"), Some("false"));
    assert_eq!(r.fact("A reduced"), Some("false"));
    assert_eq!(r.fact("Nilp(B)∩J = 0"), Some("false"));
}

#[test]
fn same_amalgam_along_the_whole_ring() {
    let src = "ring A = zmod(6); ring B = zmod(3);
               hom f = map(A -> B; 0, 1, 2, 0, 1, 2);
               hom g = map(A -> B; 0, 1, 2, 0, 1, 2);
               check same_amalgam(f, g, whole(B));";
    let reports = evaluate(&parse(src).unwrap()).unwrap();
    assert_eq!(reports[0].status, Status::Pass);
}

#[test]
fn guard_overflow_is_a_hypothesis_failure() {
    let script = parse("ring A = zmod(8); check cardinality(dup(A, whole(A)));").unwrap();
    let reports = with_size_guard(16, || evaluate(&script)).unwrap();
    assert_eq!(reports[0].status, Status::HypothesisNotMet);
    assert!(reports[0].notes.iter().any(|n| n.contains("guard")), "{:?}", reports[0].notes);
    let reports = with_size_guard(64, || evaluate(&script)).unwrap();
    assert_eq!(reports[0].status, Status::Pass);
}

#[test]
fn unknown_element_carries_its_position() {
    let err = evaluate(&parse("ring A = zmod(4);\ncheck cardinality(dup(A, gen(A; 7)));").unwrap()).unwrap_err();
    assert_eq!(err.pos().line, 2);
}

#[test]
fn reports_keep_check_order() {
    let src = "ring A = zmod(4); amalgam M = dup(A, gen(A; 2));
               check noetherian(M); check cardinality(M); check pull_identity(M);";
    let reports = evaluate(&parse(src).unwrap()).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
    assert_eq!(names, ["noetherian", "cardinality", "pull_identity"]);
}
