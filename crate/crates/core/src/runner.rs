//! Runs commands over instance documents and produces machine-readable
//! reports. Exit statuses: 0 all agree / valid, 1 falsification, 2 invalid
//! input, 3 hypotheses unmet, 4 budget exceeded.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::criterion::{self, HypothesisReport, Verdict};
use crate::error::{Error, ErrorClass, Result};
use crate::gradings::GradedAlgebra;
use crate::instance::{InstanceDocument, Payload};
use crate::partial::PartialAction;
use crate::semigroups::SemigroupTable;
use crate::{Algebra, Budget, GroupTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Brute,
    Criterion,
    Both,
    /// The group-graded criterion (center of the whole algebra) with brute force.
    Jespers,
}

impl Mode {
    pub fn parse(s: &str) -> Option<Mode> {
        Some(match s {
            "brute" => Mode::Brute,
            "criterion" => Mode::Criterion,
            "both" => Mode::Both,
            "jespers" => Mode::Jespers,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Brute => "brute",
            Mode::Criterion => "criterion",
            Mode::Both => "both",
            Mode::Jespers => "jespers",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    SemigroupReport,
    GroupReport,
    GradedReport,
    Check(Mode),
    PskewBuild,
    SkewGradedSimplicity,
    SkewSimplicity,
    CentralWitness,
    QuotientChain,
}

impl Command {
    pub fn name(self) -> String {
        match self {
            Command::Validate => "validate".into(),
            Command::SemigroupReport => "semigroup-report".into(),
            Command::GroupReport => "group-report".into(),
            Command::GradedReport => "graded-report".into(),
            Command::Check(m) => format!("check --mode {}", m.name()),
            Command::PskewBuild => "pskew-build".into(),
            Command::SkewGradedSimplicity => "lemma33".into(),
            Command::SkewSimplicity => "theorem34".into(),
            Command::CentralWitness => "lemma21-witness".into(),
            Command::QuotientChain => "chain23".into(),
        }
    }

    /// Whether generated input for this command should be partial actions.
    pub fn wants_partial_actions(self) -> bool {
        matches!(self, Command::PskewBuild | Command::SkewGradedSimplicity | Command::SkewSimplicity)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Falsified,
    Invalid,
    HypothesesUnmet,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Falsified => 1,
            Status::Invalid => 2,
            Status::HypothesesUnmet => 3,
            Status::BudgetExceeded => 4,
        }
    }

    /// Severity used to combine several reports into one exit status.
    fn severity(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::HypothesesUnmet => 1,
            Status::BudgetExceeded => 2,
            Status::Invalid => 3,
            Status::Falsified => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub class: Status,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: String,
    pub hash: String,
    pub kind: String,
    pub command: String,
    pub status: Status,
    pub exit_code: i32,
    /// Set exactly when an agreement the theory guarantees failed.
    pub falsification: bool,
    pub verdict: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl RunReport {
    /// Canonical single-line JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string(&value).expect("values serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Combined exit status: any falsification wins, then invalid input, then
/// budget, then unmet hypotheses.
pub fn overall_exit_code(reports: &[RunReport]) -> i32 {
    reports
        .iter()
        .map(|r| r.status)
        .max_by_key(|s| s.severity())
        .unwrap_or(Status::Ok)
        .exit_code()
}

/// Decides the corner criterion; replaceable so that the harness itself can
/// be tested against a deliberately wrong decider.
pub type CornerDecider = fn(&GradedAlgebra, usize, Option<&[u32]>, &Budget) -> Result<Verdict>;

#[derive(Clone, Copy, Debug)]
pub struct Runner {
    pub budget: Budget,
    pub timing: bool,
    pub corner: CornerDecider,
}

impl Default for Runner {
    fn default() -> Self {
        Runner {
            budget: Budget::default(),
            timing: false,
            corner: criterion::decide_corner_criterion,
        }
    }
}

fn wrong_kind(doc: &InstanceDocument, wanted: &str) -> Error {
    Error::Shape(format!("command needs {wanted}, got a {} instance", doc.kind()))
}

fn semigroup_of(doc: &InstanceDocument) -> Result<SemigroupTable> {
    Ok(match &doc.payload {
        Payload::Semigroup(s) => s.clone(),
        Payload::Group(g) => g.as_semigroup().clone(),
        Payload::GradedAlgebra { graded, .. } => graded.semigroup().clone(),
        Payload::PartialAction(pa) => pa.group().as_semigroup().clone(),
        Payload::Algebra(_) => return Err(wrong_kind(doc, "a semigroup")),
    })
}

fn group_of(doc: &InstanceDocument) -> Result<GroupTable> {
    match &doc.payload {
        Payload::Group(g) => Ok(g.clone()),
        Payload::PartialAction(pa) => Ok(pa.group().clone()),
        Payload::Semigroup(s) => GroupTable::from_semigroup(s).ok_or_else(|| wrong_kind(doc, "a group")),
        Payload::GradedAlgebra { graded, .. } => graded.group().cloned().ok_or(Error::GroupGradingRequired),
        Payload::Algebra(_) => Err(wrong_kind(doc, "a group")),
    }
}

fn graded_of(doc: &InstanceDocument) -> Result<(GradedAlgebra, Option<usize>)> {
    match &doc.payload {
        Payload::GradedAlgebra { graded, e } => Ok((graded.clone(), *e)),
        Payload::PartialAction(pa) => Ok((pa.build_pskew()?.graded, None)),
        _ => Err(wrong_kind(doc, "a graded_algebra or partial_action")),
    }
}

fn algebra_of(doc: &InstanceDocument) -> Result<Algebra> {
    match &doc.payload {
        Payload::Algebra(a) => Ok(a.clone()),
        _ => Ok(graded_of(doc)?.0.algebra().clone()),
    }
}

fn partial_of(doc: &InstanceDocument) -> Result<&PartialAction> {
    match &doc.payload {
        Payload::PartialAction(pa) => Ok(pa),
        _ => Err(wrong_kind(doc, "a partial_action")),
    }
}

fn choose_e(r: &GradedAlgebra, e: Option<usize>) -> Result<usize> {
    e.or_else(|| criterion::default_idempotent(r))
        .ok_or_else(|| Error::Precondition("the grading semigroup has no nonzero idempotent".into()))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

impl Runner {
    pub fn run(&self, command: Command, doc: &InstanceDocument) -> RunReport {
        let start = Instant::now();
        let outcome = self.execute(command, doc);
        let elapsed = start.elapsed().as_micros() as u64;
        let (status, falsification, verdict, error) = match outcome {
            Ok((verdict, false)) => (Status::Ok, false, verdict, None),
            Ok((verdict, true)) => (Status::Falsified, true, verdict, None),
            Err(err) => {
                let status = match err.class() {
                    ErrorClass::Invalid => Status::Invalid,
                    ErrorClass::Hypotheses => Status::HypothesesUnmet,
                    ErrorClass::Budget => Status::BudgetExceeded,
                    ErrorClass::Falsification => Status::Falsified,
                };
                let hypotheses = match &err {
                    Error::HypothesesUnmet(h) => Some((**h).clone()),
                    _ => None,
                };
                let report = ErrorReport {
                    class: status,
                    message: err.to_string(),
                    hypotheses,
                };
                (status, status == Status::Falsified, Value::Null, Some(report))
            }
        };
        RunReport {
            instance: doc.name().to_string(),
            hash: doc.hash(),
            kind: doc.kind().to_string(),
            command: command.name(),
            status,
            exit_code: status.exit_code(),
            falsification,
            verdict,
            error,
            timing_us: self.timing.then_some(elapsed),
        }
    }

    pub fn run_all(&self, command: Command, docs: &[InstanceDocument]) -> Vec<RunReport> {
        docs.iter().map(|d| self.run(command, d)).collect()
    }

    /// The verdict and whether it is a falsification.
    fn execute(&self, command: Command, doc: &InstanceDocument) -> Result<(Value, bool)> {
        let b = &self.budget;
        match command {
            Command::Validate => Ok((self.validate(doc)?, false)),
            Command::SemigroupReport => Ok((semigroup_report(&semigroup_of(doc)?)?, false)),
            Command::GroupReport => {
                let g = group_of(doc)?;
                let quotient_centers = g.check_quotient_centers();
                let v = json!({
                    "order": g.len(),
                    "identity": g.identity(),
                    "abelian": g.is_abelian(),
                    "center": g.center(),
                    "upper_central_series": g.upper_central_series().chain,
                    "hypercentral": g.is_hypercentral(),
                    "hypercentral_by_quotients": g.is_hypercentral_by_quotients(),
                    "quotient_centers_match": quotient_centers.is_ok(),
                });
                let consistent = quotient_centers.is_ok() && g.is_hypercentral() == g.is_hypercentral_by_quotients();
                Ok((v, !consistent))
            }
            Command::GradedReport => {
                let (r, e) = graded_of(doc)?;
                let components: Vec<Value> = r
                    .grading_support()
                    .into_iter()
                    .map(|g| json!({"degree": g, "dim": r.component(g).dim()}))
                    .collect();
                let hypotheses = match choose_e(&r, e) {
                    Ok(e) => Some(criterion::check_hypotheses(&r, e, b)?),
                    Err(_) => None,
                };
                let v = json!({
                    "dim": r.dim(),
                    "p": r.algebra().field().p(),
                    "semigroup_order": r.semigroup().len(),
                    "zero": r.semigroup().zero(),
                    "group_graded": r.group().is_some(),
                    "unital": r.algebra().is_unital(),
                    "components": components,
                    "graded_simple": to_value(&r.is_graded_simple(b)?),
                    "hypotheses": hypotheses,
                });
                Ok((v, false))
            }
            Command::Check(mode) => self.check(mode, doc),
            Command::PskewBuild => {
                let pa = partial_of(doc)?;
                let ring = pa.build_pskew()?;
                let e = pa.group().identity();
                let one = ring.embed(e, pa.local_identity(e))?;
                let identity_ok = ring.graded.algebra().identity() == Some(&one[..]);
                let component_dims: Vec<usize> = (0..pa.group().len()).map(|g| ring.graded.component(g).dim()).collect();
                let domain_dims: Vec<usize> = pa.domains().iter().map(|d| d.dim()).collect();
                let instance = InstanceDocument::new(
                    Payload::GradedAlgebra {
                        graded: ring.graded.clone(),
                        e: None,
                    },
                    crate::instance::Meta::named(format!("{}-skew", doc.name())),
                );
                let v = json!({
                    "dim": ring.graded.dim(),
                    "labels": ring.labels,
                    "component_dims": component_dims,
                    "domain_dims": domain_dims,
                    "identity_is_one_delta_e": identity_ok,
                    "instance": instance.to_value(),
                });
                Ok((v, !identity_ok || component_dims != domain_dims))
            }
            Command::SkewGradedSimplicity => {
                let report = partial_of(doc)?.check_skew_graded_simplicity(b)?;
                Ok((to_value(&report), !report.agreement))
            }
            Command::SkewSimplicity => {
                let report = partial_of(doc)?.check_skew_simplicity(b)?;
                Ok((to_value(&report), !report.agreement))
            }
            Command::CentralWitness => {
                let (r, _) = graded_of(doc)?;
                let whole = crate::Subspace::full(r.algebra().field(), r.dim());
                let found = criterion::minimal_support_central(&r, &whole, b)?;
                let bound_ok = match &found {
                    Some(w) => w.ideal_min_support.map_or(true, |m| w.support_size <= m),
                    None => false,
                };
                Ok((json!({ "witness": found, "support_bound_holds": bound_ok }), !bound_ok))
            }
            Command::QuotientChain => {
                let (r, _) = graded_of(doc)?;
                let chain = criterion::quotient_chain(&r, b)?;
                let brute = r.algebra().is_simple(b)?.is_simple();
                let falsified = chain.all_levels_graded_simple && !brute;
                Ok((json!({ "chain": chain, "brute_simple": brute }), falsified))
            }
        }
    }

    fn validate(&self, doc: &InstanceDocument) -> Result<Value> {
        let mut v = json!({ "kind": doc.kind(), "valid": true });
        match &doc.payload {
            Payload::Semigroup(s) => v["order"] = json!(s.len()),
            Payload::Group(g) => v["order"] = json!(g.len()),
            Payload::Algebra(a) => {
                v["dim"] = json!(a.dim());
                v["unital"] = json!(a.is_unital());
            }
            Payload::GradedAlgebra { graded, .. } => {
                v["dim"] = json!(graded.dim());
                v["semigroup_order"] = json!(graded.semigroup().len());
            }
            Payload::PartialAction(pa) => {
                v["dim"] = json!(pa.algebra().dim());
                v["group_order"] = json!(pa.group().len());
                v["domain_dims"] = json!(pa.domains().iter().map(|d| d.dim()).collect::<Vec<_>>());
            }
        }
        Ok(v)
    }

    fn check(&self, mode: Mode, doc: &InstanceDocument) -> Result<(Value, bool)> {
        let b = &self.budget;
        match mode {
            Mode::Brute => {
                let s = algebra_of(doc)?.is_simple(b)?;
                Ok((json!({ "brute_simple": s.is_simple(), "witness": s }), false))
            }
            Mode::Criterion => {
                let (r, e) = graded_of(doc)?;
                let e = choose_e(&r, e)?;
                let verdict = (self.corner)(&r, e, None, b)?;
                Ok((json!({ "e": e, "verdict": verdict }), false))
            }
            Mode::Both => {
                let (r, e) = graded_of(doc)?;
                let e = choose_e(&r, e)?;
                let verdict = (self.corner)(&r, e, None, b)?.with_brute(r.algebra().is_simple(b)?);
                let falsified = verdict.agreement == Some(false);
                Ok((json!({ "e": e, "verdict": verdict }), falsified))
            }
            Mode::Jespers => {
                let (r, _) = graded_of(doc)?;
                let verdict = criterion::decide_jespers(&r, b)?;
                let falsified = verdict.agreement == Some(false);
                Ok((json!({ "verdict": verdict }), falsified))
            }
        }
    }
}

fn semigroup_report(s: &SemigroupTable) -> Result<Value> {
    let mut locals = Vec::new();
    for e in s.idempotents() {
        if !s.is_nonzero(e) {
            continue;
        }
        let local = s.nonzero_local_group(e)?;
        locals.push(json!({
            "e": e,
            "cancellative": s.is_cancellative_at(e)?,
            "local_elements": s.local_elements(e)?,
            "nonzero_local_group_order": local.as_ref().map(|(g, _)| g.len()),
            "local_group_hypercentral": local.as_ref().map(|(g, _)| g.is_hypercentral()),
        }));
    }
    Ok(json!({
        "order": s.len(),
        "zero": s.zero(),
        "idempotents": s.idempotents(),
        "at_idempotents": locals,
        "simple_semigroup": s.is_simple_semigroup(),
        "inverse_semigroup": s.is_inverse_semigroup(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_runs() {
        let r = Runner::default();
        let rep = r.run(Command::Check(Mode::Both), &catalog::get("m2-gf2-good-grading").unwrap());
        assert_eq!(rep.exit_code, 0);
        assert_eq!(rep.verdict["verdict"]["agreement"], json!(true));
        let rep = r.run(Command::Check(Mode::Criterion), &catalog::get("gf2-left-zero-grading").unwrap());
        assert_eq!(rep.exit_code, 3);
        assert_eq!(rep.error.unwrap().hypotheses.unwrap().cancellative_at_e, false);
        let rep = r.run(Command::SkewSimplicity, &catalog::get("c2-swap-global").unwrap());
        assert_eq!(rep.exit_code, 0);
        assert_eq!(rep.verdict["assertion_iii"], json!(true));
    }

    #[test]
    fn reports_round_trip() {
        let r = Runner::default();
        for name in catalog::names() {
            let doc = catalog::get(name).unwrap();
            for cmd in [Command::Validate, Command::SemigroupReport, Command::Check(Mode::Both)] {
                let rep = r.run(cmd, &doc);
                assert_eq!(RunReport::from_json(&rep.to_json()).unwrap(), rep);
            }
        }
    }

    #[test]
    fn exit_precedence() {
        let mk = |status: Status| RunReport {
            instance: String::new(),
            hash: String::new(),
            kind: String::new(),
            command: String::new(),
            status,
            exit_code: status.exit_code(),
            falsification: status == Status::Falsified,
            verdict: Value::Null,
            error: None,
            timing_us: None,
        };
        let all = [Status::HypothesesUnmet, Status::BudgetExceeded, Status::Invalid, Status::Ok];
        assert_eq!(overall_exit_code(&all.map(mk)), 2);
        assert_eq!(overall_exit_code(&[mk(Status::HypothesesUnmet), mk(Status::BudgetExceeded)]), 4);
        assert_eq!(overall_exit_code(&[mk(Status::Falsified), mk(Status::Invalid)]), 1);
        assert_eq!(overall_exit_code(&[]), 0);
    }
}
