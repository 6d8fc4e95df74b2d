use std::process::Command;

use ordact_core::fixtures;
use ordact_workbench::corpus::{emit_fixture_corpus, fixture_corpus};
use ordact_workbench::error::Error;
use ordact_workbench::format::{self, Workspace, WorkspaceFile};
use ordact_workbench::tasks::{check_tasks, run_selected, run_task, Status, CATALOG};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_workbench"))
}

fn corpus_file(name: &str) -> WorkspaceFile {
    fixture_corpus().into_iter().find(|(n, _)| *n == name).expect("corpus file").1
}

#[test]
fn algebras_round_trip() {
    for a in [fixtures::dual_numbers(), fixtures::truncated_nilpotent(), fixtures::swap_global_action().carrier().clone()] {
        assert_eq!(format::decode_algebra(&format::encode_algebra(&a)).unwrap(), a);
    }
}

#[test]
fn groupoids_and_semigroups_round_trip() {
    for g in [fixtures::arrow_over_bottom(), fixtures::nested_loops(), fixtures::order_two_group()] {
        assert_eq!(format::decode_groupoid(&format::encode_groupoid(&g)).unwrap(), g);
    }
    for s in [fixtures::semilattice(), fixtures::brandt(), fixtures::symmetric_inverse_monoid_one()] {
        assert_eq!(format::decode_semigroup(&format::encode_semigroup(&s)).unwrap(), s);
    }
}

#[test]
fn actions_round_trip() {
    for a in [fixtures::swap_restriction().0, fixtures::nested_loops_action(), fixtures::non_associative_action()] {
        let f = format::encode_action(&a, "g", "A");
        let back = format::decode_action(&f, a.groupoid(), a.carrier()).unwrap();
        assert_eq!(back.ideals(), a.ideals());
        for x in a.groupoid().arrows() {
            assert!(back.map(x).same_values(a.map(x)), "map at {}", a.groupoid().name(x));
        }
    }
    let a = fixtures::brandt_partial_action();
    let f = format::encode_inv_action(&a, "S", "A");
    let back = format::decode_inv_action(&f, a.semigroup(), a.carrier()).unwrap();
    assert_eq!(back.ideals(), a.ideals());
}

#[test]
fn corpus_files_round_trip_through_text() {
    for (name, f) in fixture_corpus() {
        let text = f.to_json();
        assert_eq!(WorkspaceFile::parse(&text).unwrap(), f, "{name}");
        let ws = Workspace::parse(&text).unwrap();
        check_tasks(&ws.tasks).unwrap();
    }
}

#[test]
fn every_corpus_task_passes() {
    for (name, f) in fixture_corpus() {
        let ws = Workspace::resolve(&f).unwrap();
        for r in run_selected(&ws, &[]) {
            assert_eq!(r.status, Status::Pass, "{name}/{}: {}", r.id, r.to_json());
        }
    }
}

#[test]
fn nested_loops_are_reported_not_strong() {
    let ws = Workspace::resolve(&corpus_file("nested_loops.json")).unwrap();
    let r = &run_selected(&ws, &["alpha-valid".into()])[0];
    assert_eq!(r.data["strong"], false);
    assert_eq!(r.data["unital"], true);
    let mut strong = ws.tasks[0].clone();
    strong.run = "strong-check".into();
    strong.subject = "alpha".into();
    let r = run_task(&ws, &strong);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.data["strong"], false);
    assert_eq!(r.data["ps"], false);
}

#[test]
fn minimal_globalization_of_a_non_strong_action_is_an_error() {
    let ws = Workspace::resolve(&corpus_file("nested_loops.json")).unwrap();
    let mut t = ws.tasks[0].clone();
    t.run = "globalize --minimal".into();
    t.subject = "alpha".into();
    let r = run_task(&ws, &t);
    assert_eq!(r.status, Status::Error);
    assert!(r.error.unwrap().contains("not strong"));
}

#[test]
fn non_associative_skew_ring_fails() {
    let ws = Workspace::resolve(&corpus_file("non_associative.json")).unwrap();
    let mut t = ws.tasks[0].clone();
    t.run = "skew".into();
    t.subject = "alpha".into();
    let r = run_task(&ws, &t);
    assert_eq!(r.status, Status::Fail);
    assert!(!r.data["associator_witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn parse_errors_carry_positions() {
    match WorkspaceFile::parse("{\n  \"algebras\": {\n    \"a\": [1, 2,\n}") {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 1)),
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(WorkspaceFile::parse("{\"bogus\": 1}"), Err(Error::Parse { line: 1, .. })));
}

#[test]
fn unknown_names_are_rejected() {
    let mut f = corpus_file("arrow_over_bottom.json");
    f.groupoids.get_mut("arrow_over_bottom").unwrap().order.push(["e".into(), "t".into()]);
    let e = Workspace::resolve(&f).unwrap_err();
    assert!(e.to_string().contains("\"t\""), "{e}");

    let mut f = corpus_file("arrow_over_bottom.json");
    f.actions.get_mut("alpha").unwrap().algebra = "missing".into();
    assert!(matches!(Workspace::resolve(&f), Err(Error::Unresolved { kind: "algebra", .. })));

    let mut f = corpus_file("arrow_over_bottom.json");
    f.tasks[0].subject = "nobody".into();
    assert!(matches!(Workspace::resolve(&f), Err(Error::Unresolved { kind: "subject", .. })));
}

#[test]
fn invalid_actions_are_reported_and_guarded() {
    let mut f = corpus_file("arrow_over_bottom.json");
    // A_{r(s)} = span(e2) leaves e3 uncovered.
    f.actions.get_mut("alpha").unwrap().ideals.insert("r(s)".into(), vec![vec![1, 0]]);
    f.actions.get_mut("alpha").unwrap().maps.remove("r(s)");
    let ws = Workspace::resolve(&f).unwrap();
    let reports = run_selected(&ws, &["alpha-valid".into(), "skew-alpha".into()]);
    assert_eq!(reports[0].status, Status::Fail);
    assert_eq!(reports[0].clauses.0.violations()[0].clause.label(), "(P1)");
    assert_eq!(reports[1].status, Status::Error);
    assert!(reports[1].error.as_deref().unwrap().contains("invalid partial action"));
}

#[test]
fn catalog_is_stable() {
    let names: Vec<&str> = CATALOG.iter().map(|t| t.name).collect();
    assert_eq!(
        names,
        [
            "validate-groupoid",
            "validate-action",
            "restrict",
            "strong-check",
            "globalize",
            "verify-globalization",
            "equivalence",
            "skew",
            "morita",
            "esn",
            "inv-action-pipeline",
        ]
    );
}

#[test]
fn unknown_tasks_and_flags_are_rejected() {
    let mut f = corpus_file("dual_numbers.json");
    f.tasks[0].run = "frobnicate".into();
    assert!(matches!(check_tasks(&f.tasks), Err(Error::UnknownTask(t)) if t == "frobnicate"));
    f.tasks[0].run = "skew --minimal".into();
    assert!(matches!(check_tasks(&f.tasks), Err(Error::BadOption { .. })));
}

#[test]
fn reports_are_deterministic() {
    let f = corpus_file("arrow_over_bottom.json");
    let run = || {
        let ws = Workspace::resolve(&f).unwrap();
        run_selected(&ws, &[]).iter().map(|r| r.to_json()).collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}

#[test]
fn clauses_serialize_in_canonical_order() {
    let ws = Workspace::resolve(&corpus_file("arrow_over_bottom.json")).unwrap();
    let r = &run_selected(&ws, &["alpha-valid".into()])[0];
    let json = r.to_json();
    let p1 = json.find("\"(P1)\"").unwrap();
    let p2 = json.find("\"(P2)\"").unwrap();
    assert!(p1 < p2);
}

#[test]
fn cli_runs_the_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let paths = emit_fixture_corpus(dir.path()).unwrap();
    assert_eq!(paths.len(), fixture_corpus().len());
    let out = dir.path().join("reports");
    let status = bin().args(["run", paths[0].to_str().unwrap(), "--out", out.to_str().unwrap()]).output().unwrap();
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stdout));
    assert!(String::from_utf8_lossy(&status.stdout).lines().all(|l| l.starts_with("PASS")));
    assert!(out.join("globalize.json").exists());

    let first = bin().args(["run", paths[0].to_str().unwrap(), "--json", "--task", "globalize-minimal"]).output().unwrap();
    let second = bin().args(["run", paths[0].to_str().unwrap(), "--json", "--task", "globalize-minimal"]).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
    let reports: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 1);
}

#[test]
fn cli_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = corpus_file("non_associative.json");
    f.tasks.push(ordact_workbench::format::TaskFile {
        id: "skew".into(),
        run: "skew".into(),
        subject: "alpha".into(),
        with: None,
        ideal: None,
        embeddings: None,
    });
    let failing = dir.path().join("failing.json");
    std::fs::write(&failing, f.to_json()).unwrap();
    let out = bin().args(["run", failing.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL  skew"));
    let out = bin().args(["run", failing.to_str().unwrap(), "--task", "validate-action"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{ \"tasks\": [").unwrap();
    let out = bin().args(["run", broken.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("inv-action-pipeline"));
}
