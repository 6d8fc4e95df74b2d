//! The task catalog and the runner producing one report per task.

use std::collections::BTreeMap;

use ordact_core::{
    build_globalization, build_inv_sgp_skew_ring, build_minimal_globalization, build_ordered_skew, build_skew, esn_to_groupoid,
    esn_to_semigroup, globalize_inverse_semigroup_action, morita_context, morita_context_inv_sgp, search_equivalence, skew_unit,
    standard_restriction, verify_equivalence, Globalization, LinMap, MoritaReport, POAction, Report, SearchOutcome, SkewRing, Subspace,
};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format::{self, Matrix, TaskFile, Workspace};

/// Node budget for equivalence searches.
pub const SEARCH_BUDGET: u64 = 1_000_000;

pub struct TaskSpec {
    pub name: &'static str,
    pub flags: &'static [&'static str],
    pub summary: &'static str,
}

pub const CATALOG: &[TaskSpec] = &[
    TaskSpec { name: "validate-groupoid", flags: &[], summary: "groupoid and ordered-groupoid axioms" },
    TaskSpec { name: "validate-action", flags: &[], summary: "partial action axioms, unitality, globality" },
    TaskSpec { name: "restrict", flags: &[], summary: "restriction of a global action to `ideal`" },
    TaskSpec { name: "strong-check", flags: &[], summary: "strong condition and the pseudoproduct law" },
    TaskSpec { name: "globalize", flags: &["--minimal"], summary: "build a globalization; compare with `with` if given" },
    TaskSpec { name: "verify-globalization", flags: &["--minimal"], summary: "check that `with` globalizes the subject" },
    TaskSpec { name: "equivalence", flags: &[], summary: "search for an equivalence with `with`" },
    TaskSpec { name: "skew", flags: &["--ordered"], summary: "skew ring, associativity and grading; ordered quotient" },
    TaskSpec { name: "morita", flags: &["--minimal"], summary: "Morita context between the skew rings of an action and its globalization" },
    TaskSpec { name: "esn", flags: &["--to-groupoid", "--to-semigroup"], summary: "inductive groupoid of a semigroup or the reverse" },
    TaskSpec { name: "inv-action-pipeline", flags: &[], summary: "globalize a semigroup action through its inductive groupoid" },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// Clause outcomes keyed by label, in canonical clause order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Clauses(pub Report);

impl Serialize for Clauses {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let outcomes = self.0.clauses();
        let mut map = s.serialize_map(Some(outcomes.len()))?;
        for (clause, ok) in outcomes {
            map.serialize_entry(clause.label(), &ok)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationOut {
    pub clause: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaskReport {
    pub id: String,
    pub task: String,
    pub subject: String,
    pub status: Status,
    pub clauses: Clauses,
    pub violations: Vec<ViolationOut>,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TaskReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Result of a task body: a report, payload, and an extra pass condition
/// not expressed as a clause.
struct Outcome {
    report: Report,
    data: Value,
    extra_ok: bool,
}

impl Outcome {
    fn new(report: Report, data: Value) -> Self {
        Outcome { report, data, extra_ok: true }
    }
}

struct Invocation<'a> {
    name: &'a str,
    flags: Vec<&'a str>,
}

fn parse_run(run: &str) -> Result<Invocation<'_>> {
    let mut words = run.split_whitespace();
    let name = words.next().ok_or_else(|| Error::UnknownTask(String::new()))?;
    let spec = CATALOG.iter().find(|t| t.name == name).ok_or_else(|| Error::UnknownTask(name.to_string()))?;
    let flags: Vec<&str> = words.collect();
    if let Some(bad) = flags.iter().find(|f| !spec.flags.contains(f)) {
        return Err(Error::BadOption { task: name.to_string(), option: bad.to_string() });
    }
    Ok(Invocation { name, flags })
}

/// Checks every task name and flag without running anything.
pub fn check_tasks(tasks: &[TaskFile]) -> Result<()> {
    tasks.iter().try_for_each(|t| parse_run(&t.run).map(|_| ()))
}

pub fn run_task(ws: &Workspace, task: &TaskFile) -> TaskReport {
    let outcome = parse_run(&task.run).and_then(|inv| dispatch(ws, task, &inv));
    let (status, report, data, error) = match outcome {
        Ok(o) => {
            let ok = o.report.is_ok() && o.extra_ok;
            (if ok { Status::Pass } else { Status::Fail }, o.report, o.data, None)
        }
        Err(e) => {
            let report = match &e {
                Error::Core(
                    ordact_core::Error::InvalidAction(r)
                    | ordact_core::Error::InvalidGroupoid(r)
                    | ordact_core::Error::InvalidSemigroup(r)
                    | ordact_core::Error::NotAGlobalization(r)
                    | ordact_core::Error::NotOrdered(r),
                ) => r.clone(),
                _ => Report::new(),
            };
            (Status::Error, report, Value::Null, Some(e.to_string()))
        }
    };
    TaskReport {
        id: task.id.clone(),
        task: task.run.clone(),
        subject: task.subject.clone(),
        status,
        violations: report.violations().iter().map(|v| ViolationOut { clause: v.clause.label(), detail: v.detail.clone() }).collect(),
        clauses: Clauses(report),
        data,
        error,
    }
}

/// Rejects invalid actions before any construction runs on them.
fn require_valid(ws: &Workspace, name: &str) -> Result<()> {
    let report = if let Some(a) = ws.actions.get(name) {
        a.validate()
    } else if let Some(a) = ws.semigroup_actions.get(name) {
        a.validate()
    } else {
        return Ok(());
    };
    if report.is_ok() {
        Ok(())
    } else {
        Err(ordact_core::Error::InvalidAction(report).into())
    }
}

fn dispatch(ws: &Workspace, task: &TaskFile, inv: &Invocation<'_>) -> Result<Outcome> {
    let has = |f: &str| inv.flags.contains(&f);
    if !inv.name.starts_with("validate-") {
        require_valid(ws, &task.subject)?;
        if let Some(other) = &task.with {
            require_valid(ws, other)?;
        }
    }
    match inv.name {
        "validate-groupoid" => validate_groupoid(ws, task),
        "validate-action" => validate_action(ws, task),
        "restrict" => restrict(ws, task),
        "strong-check" => strong_check(ws, task),
        "globalize" => globalize(ws, task, has("--minimal")),
        "verify-globalization" => verify_globalization(ws, task, has("--minimal")),
        "equivalence" => equivalence(ws, task),
        "skew" => skew(ws, task, has("--ordered")),
        "morita" => morita(ws, task, has("--minimal")),
        "esn" => esn(ws, task, has("--to-groupoid"), has("--to-semigroup")),
        "inv-action-pipeline" => pipeline(ws, task),
        other => Err(Error::UnknownTask(other.to_string())),
    }
}

fn with_of(task: &TaskFile) -> Result<&str> {
    task.with.as_deref().ok_or_else(|| Error::Invalid(format!("task {} needs a `with` action", task.id)))
}

fn per_arrow(names: &[String], values: impl IntoIterator<Item = usize>) -> Value {
    Value::Object(names.iter().cloned().zip(values.into_iter().map(Value::from)).collect())
}

fn encoded_action(a: &POAction) -> Value {
    let f = format::encode_action(a, "", "");
    json!({ "ideals": f.ideals, "maps": f.maps })
}

fn maps_by_object(a: &POAction, maps: &BTreeMap<usize, LinMap>) -> Value {
    Value::Object(maps.iter().map(|(&e, m)| (a.groupoid().name(e).to_string(), json!(m.images()))).collect())
}

fn validate_groupoid(ws: &Workspace, task: &TaskFile) -> Result<Outcome> {
    let g = ws.groupoid(&task.subject)?;
    let mut report = g.validate_groupoid();
    report.merge(g.validate_order());
    let data = if report.is_ok() {
        json!({
            "arrows": g.len(),
            "objects": g.objects().count(),
            "inductive": g.is_inductive(),
            "pseudoassociative": g.is_pseudoassociative(),
        })
    } else {
        Value::Null
    };
    Ok(Outcome::new(report, data))
}

fn validate_action(ws: &Workspace, task: &TaskFile) -> Result<Outcome> {
    if let Ok(a) = ws.action(&task.subject) {
        let report = a.validate();
        let mut data = json!({ "ideal_dims": per_arrow(a.groupoid().names(), a.ideals().iter().map(Subspace::rank)) });
        if report.is_ok() {
            data["preunital"] = json!(a.is_preunital());
            data["unital"] = json!(a.is_unital());
            data["global"] = json!(a.is_global());
            data["strong"] = json!(a.is_strong());
        }
        return Ok(Outcome::new(report, data));
    }
    let a = ws.semigroup_action(&task.subject)?;
    let report = a.validate();
    let mut data = json!({ "ideal_dims": per_arrow(a.semigroup().names(), a.ideals().iter().map(Subspace::rank)) });
    if report.is_ok() {
        data["preunital"] = json!(a.is_preunital());
        data["unital"] = json!(a.is_unital());
        data["global"] = json!(a.is_global());
    }
    Ok(Outcome::new(report, data))
}

fn restrict(ws: &Workspace, task: &TaskFile) -> Result<Outcome> {
    let beta = ws.action(&task.subject)?;
    let rows = task.ideal.as_ref().ok_or_else(|| Error::Invalid(format!("task {} needs an `ideal`", task.id)))?;
    let alg = beta.carrier();
    let ideal = format::subspace_from_rows(alg.modulus(), alg.dim(), rows)?;
    let (alpha, incl) = standard_restriction(beta, &ideal)?;
    let data = json!({
        "ideal_dims": per_arrow(alpha.groupoid().names(), alpha.ideals().iter().map(Subspace::rank)),
        "carrier_dim": alpha.carrier().dim(),
        "inclusion": incl.images(),
        "action": encoded_action(&alpha),
    });
    Ok(Outcome::new(alpha.validate(), data))
}

fn strong_check(ws: &Workspace, task: &TaskFile) -> Result<Outcome> {
    let a = ws.action(&task.subject)?;
    let mut report = a.strong_report();
    let strong = report.is_ok();
    let ps = a.ps_report();
    let satisfies_ps = ps.is_ok();
    report.merge(ps);
    if strong {
        report.merge(a.strong_meets_report());
    }
    let data = json!({ "strong": strong, "ps": satisfies_ps });
    Ok(Outcome::new(report, data))
}

fn globalization_data(glob: &Globalization) -> Value {
    let a = glob.base();
    json!({
        "minimal": glob.is_minimal(),
        "dims": per_arrow(a.groupoid().names(), glob.dims()),
        "carrier_dim": glob.global().carrier().dim(),
        "embeddings": maps_by_object(a, glob.embeddings()),
        "global_action": encoded_action(glob.global()),
    })
}

fn comparison(a: &POAction, c: &POAction) -> Result<Value> {
    Ok(match search_equivalence(a, c, SEARCH_BUDGET) {
        Ok(SearchOutcome::Found(w)) => json!({ "outcome": "equivalent", "witness": maps_by_object(a, w.maps()) }),
        Ok(SearchOutcome::Disproved(why)) => json!({ "outcome": "not equivalent", "reason": why }),
        Ok(SearchOutcome::Exhausted) => json!({ "outcome": "not equivalent", "reason": "no candidate isomorphism works" }),
        Err(ordact_core::Error::BudgetExceeded(n)) => json!({ "outcome": "undecided", "reason": format!("budget of {n} nodes exhausted") }),
        Err(e) => return Err(e.into()),
    })
}

fn globalize(ws: &Workspace, task: &TaskFile, minimal: bool) -> Result<Outcome> {
    let a = ws.action(&task.subject)?;
    let glob = if minimal { build_minimal_globalization(a)? } else { build_globalization(a)? };
    let mut report = glob.verify();
    if let Some(c) = glob.construction_report() {
        report.merge(c);
    }
    let mut data = globalization_data(&glob);
    if let Some(other) = &task.with {
        let mut cmp = comparison(glob.global(), ws.action(other)?)?;
        cmp["with"] = json!(other);
        data["comparison"] = cmp;
    }
    Ok(Outcome::new(report, data))
}

/// Embeddings from the task, or inclusions when the carriers agree.
fn supplied_globalization(ws: &Workspace, task: &TaskFile, minimal: bool) -> Result<Globalization> {
    let alpha = ws.action(&task.subject)?;
    let beta = ws.action(with_of(task)?)?;
    let g = alpha.groupoid();
    let mut embeddings = BTreeMap::new();
    for e in g.objects() {
        let domain = alpha.ideal(e).clone();
        let codomain = beta.ideal(e).clone();
        let m = match task.embeddings.as_ref().map(|m| m.get(g.name(e))) {
            Some(Some(images)) => {
                let full = Subspace::full(beta.carrier().modulus(), beta.carrier().dim());
                LinMap::from_images(domain, full, images)?
            }
            Some(None) => return Err(Error::Invalid(format!("no embedding given for {}", g.name(e)))),
            None if alpha.carrier().dim() == beta.carrier().dim() => {
                let full = Subspace::full(beta.carrier().modulus(), beta.carrier().dim());
                LinMap::identity(full).restrict(&domain)?
            }
            None => return Err(Error::Invalid("embeddings are required when the carriers differ".into())),
        };
        let m = m
            .with_codomain(codomain)
            .map_err(|_| Error::Invalid(format!("embedding of {} does not land in B_{}", g.name(e), g.name(e))))?;
        embeddings.insert(e, m);
    }
    Ok(Globalization::assemble(alpha.clone(), beta.clone(), embeddings, minimal))
}

fn verify_globalization(ws: &Workspace, task: &TaskFile, minimal: bool) -> Result<Outcome> {
    let glob = supplied_globalization(ws, task, minimal)?;
    let data = json!({ "dims": per_arrow(glob.base().groupoid().names(), glob.dims()) });
    Ok(Outcome::new(glob.verify(), data))
}

fn equivalence(ws: &Workspace, task: &TaskFile) -> Result<Outcome> {
    let a = ws.action(&task.subject)?;
    let c = ws.action(with_of(task)?)?;
    match search_equivalence(a, c, SEARCH_BUDGET)? {
        SearchOutcome::Found(w) => {
            let report = verify_equivalence(a, c, &w)?;
            let data = json!({ "outcome": "equivalent", "witness": maps_by_object(a, w.maps()) });
            Ok(Outcome::new(report, data))
        }
        other => {
            let reason = match other {
                SearchOutcome::Disproved(why) => why,
                _ => "no candidate isomorphism works".to_string(),
            };
            let mut o = Outcome::new(Report::new(), json!({ "outcome": "not equivalent", "reason": reason }));
            o.extra_ok = false;
            Ok(o)
        }
    }
}

fn skew_data(s: &SkewRing) -> Value {
    let witnesses: Vec<[usize; 3]> = s.algebra().associator_witnesses().into_iter().take(10).map(|(i, j, k)| [i, j, k]).collect();
    json!({ "dim_l": s.dim(), "associator_witnesses": witnesses })
}

fn skew(ws: &Workspace, task: &TaskFile, ordered: bool) -> Result<Outcome> {
    let (s, from_semigroup) = match ws.action(&task.subject) {
        Ok(a) => (build_skew(a)?, false),
        Err(_) => (build_inv_sgp_skew_ring(ws.semigroup_action(&task.subject)?)?, true),
    };
    let mut report = s.associativity_report();
    report.merge(s.grading_report());
    let mut data = skew_data(&s);
    if ordered && s.is_associative() {
        let o = build_ordered_skew(s)?;
        let unit = if from_semigroup {
            let full = Subspace::full(o.quotient().modulus(), o.dim());
            o.quotient().identity_of(&full)?.map(|id| id.element)
        } else {
            skew_unit(&o).ok()
        };
        data["dim_n"] = json!(o.n_ideal().rank());
        data["dim_quotient"] = json!(o.dim());
        data["unit_is_identity"] = json!(unit.as_ref().is_some_and(|u| o.is_identity(u)));
        data["unit"] = json!(unit);
    }
    Ok(Outcome::new(report, data))
}

fn morita_data(m: &MoritaReport) -> Value {
    json!({ "dims": m.dims(), "one_r": m.one_r })
}

fn morita(ws: &Workspace, task: &TaskFile, minimal: bool) -> Result<Outcome> {
    if let Ok(a) = ws.action(&task.subject) {
        let glob = match &task.with {
            Some(_) => supplied_globalization(ws, task, minimal)?,
            None if minimal => build_minimal_globalization(a)?,
            None => build_globalization(a)?,
        };
        let m = morita_context(a, &glob)?;
        return Ok(Outcome::new(m.report.clone(), morita_data(&m)));
    }
    let a = ws.semigroup_action(&task.subject)?;
    let glob = globalize_inverse_semigroup_action(a)?;
    let m = morita_context_inv_sgp(a, &glob)?;
    Ok(Outcome::new(m.report.clone(), morita_data(&m)))
}

fn esn(ws: &Workspace, task: &TaskFile, to_groupoid: bool, to_semigroup: bool) -> Result<Outcome> {
    if to_groupoid && to_semigroup {
        return Err(Error::Invalid("esn takes one direction".into()));
    }
    let from_semigroup = ws.semigroups.contains_key(&task.subject);
    if (to_groupoid && !from_semigroup) || (to_semigroup && from_semigroup) {
        return Err(Error::Invalid(format!("{} has the wrong kind for this direction", task.subject)));
    }
    if from_semigroup {
        let s = ws.semigroup(&task.subject)?;
        let g = esn_to_groupoid(s)?;
        let mut report = g.validate_groupoid();
        report.merge(g.validate_order());
        let round_trip = esn_to_semigroup(&g).is_ok_and(|back| back == *s);
        let mut o = Outcome::new(report, json!({ "groupoid": format::encode_groupoid(&g), "round_trip": round_trip }));
        o.extra_ok = round_trip;
        Ok(o)
    } else {
        let g = ws.groupoid(&task.subject)?;
        let s = esn_to_semigroup(g)?;
        let round_trip = esn_to_groupoid(&s).is_ok_and(|back| back == *g);
        let mut o = Outcome::new(s.validate(), json!({ "semigroup": format::encode_semigroup(&s), "round_trip": round_trip }));
        o.extra_ok = round_trip;
        Ok(o)
    }
}

fn pipeline(ws: &Workspace, task: &TaskFile) -> Result<Outcome> {
    let a = ws.semigroup_action(&task.subject)?;
    let glob = globalize_inverse_semigroup_action(a)?;
    let b = glob.global();
    let f = format::encode_inv_action(b, "", "");
    let embeddings: BTreeMap<String, Matrix> =
        glob.embeddings().iter().map(|(&e, m)| (a.semigroup().name(e).to_string(), m.images())).collect();
    let data = json!({
        "dims": per_arrow(a.semigroup().names(), b.ideals().iter().map(Subspace::rank)),
        "carrier_dim": b.carrier().dim(),
        "embeddings": embeddings,
        "global_action": { "ideals": f.ideals, "maps": f.maps },
    });
    Ok(Outcome::new(glob.verify(), data))
}

/// Runs the tasks whose id or task name is in `selector` (all when empty),
/// in file order.
pub fn run_selected(ws: &Workspace, selector: &[String]) -> Vec<TaskReport> {
    ws.tasks
        .iter()
        .filter(|t| {
            selector.is_empty() || selector.iter().any(|s| *s == t.id || t.run.split_whitespace().next() == Some(s.as_str()) || *s == t.run)
        })
        .map(|t| run_task(ws, t))
        .collect()
}
