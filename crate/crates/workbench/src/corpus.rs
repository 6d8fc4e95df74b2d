//! The bundled example workspaces written by `workbench fixtures`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use ordact_core::{build_minimal_globalization, fixtures, Algebra, InvSgpAction};

use crate::error::{Error, Result};
use crate::format::{self, Matrix, TaskFile, WorkspaceFile};

fn task(id: &str, run: &str, subject: &str) -> TaskFile {
    TaskFile { id: id.into(), run: run.into(), subject: subject.into(), with: None, ideal: None, embeddings: None }
}

fn task_with(id: &str, run: &str, subject: &str, with: &str) -> TaskFile {
    TaskFile { with: Some(with.into()), ..task(id, run, subject) }
}

fn swap_example() -> WorkspaceFile {
    let beta = fixtures::swap_global_action();
    let (alpha, incl) = fixtures::swap_restriction();
    let minimal = build_minimal_globalization(&alpha).expect("unital action");
    let g = alpha.groupoid();
    let embeddings: BTreeMap<String, Matrix> =
        g.objects().map(|e| (g.name(e).to_string(), incl.restrict(alpha.ideal(e)).expect("ideal of the carrier").images())).collect();
    let mut w = WorkspaceFile::default();
    w.algebras.insert("f5^3".into(), format::encode_algebra(beta.carrier()));
    w.algebras.insert("f5^2".into(), format::encode_algebra(alpha.carrier()));
    w.groupoids.insert("arrow_over_bottom".into(), format::encode_groupoid(g));
    w.actions.insert("beta".into(), format::encode_action(&beta, "arrow_over_bottom", "f5^3"));
    w.actions.insert("alpha".into(), format::encode_action(&alpha, "arrow_over_bottom", "f5^2"));
    w.actions.insert("beta_minimal".into(), format::encode_action(minimal.global(), "arrow_over_bottom", "f5^3"));
    let mut restrict = task("restrict-beta", "restrict", "beta");
    restrict.ideal = Some(format::subspace_rows(&fixtures::swap_restriction_ideal()));
    let mut verify = task_with("beta-globalizes-alpha", "verify-globalization", "alpha", "beta");
    verify.embeddings = Some(embeddings.clone());
    let mut morita_beta = task_with("morita-beta", "morita", "alpha", "beta");
    morita_beta.embeddings = Some(embeddings);
    w.tasks = vec![
        task("groupoid", "validate-groupoid", "arrow_over_bottom"),
        task("beta-valid", "validate-action", "beta"),
        task("alpha-valid", "validate-action", "alpha"),
        restrict,
        task_with("globalize", "globalize", "alpha", "beta"),
        task_with("globalize-minimal", "globalize --minimal", "alpha", "beta"),
        verify,
        task_with("minimal-equivalent-to-beta", "equivalence", "beta_minimal", "beta"),
        task("skew-alpha", "skew --ordered", "alpha"),
        task("skew-beta", "skew --ordered", "beta"),
        task("morita-minimal", "morita --minimal", "alpha"),
        morita_beta,
    ];
    w
}

fn nested_loops_example() -> WorkspaceFile {
    let a = fixtures::nested_loops_action();
    let mut w = WorkspaceFile::default();
    w.algebras.insert("f5^4".into(), format::encode_algebra(a.carrier()));
    w.groupoids.insert("nested_loops".into(), format::encode_groupoid(a.groupoid()));
    w.actions.insert("alpha".into(), format::encode_action(&a, "nested_loops", "f5^4"));
    w.tasks = vec![
        task("groupoid", "validate-groupoid", "nested_loops"),
        task("alpha-valid", "validate-action", "alpha"),
        task("globalize", "globalize", "alpha"),
        task("skew-alpha", "skew --ordered", "alpha"),
    ];
    w
}

fn insert_semigroup_action(w: &mut WorkspaceFile, name: &str, semigroup: &str, algebra: &str, a: &InvSgpAction) {
    w.algebras.insert(algebra.into(), format::encode_algebra(a.carrier()));
    w.semigroup_actions.insert(name.into(), format::encode_inv_action(a, semigroup, algebra));
}

fn brandt_example() -> WorkspaceFile {
    let mut w = WorkspaceFile::default();
    w.semigroups.insert("b2".into(), format::encode_semigroup(&fixtures::brandt()));
    insert_semigroup_action(&mut w, "swap", "b2", "f5^2", &fixtures::brandt_swap_action());
    insert_semigroup_action(&mut w, "partial", "b2", "f5^3", &fixtures::brandt_partial_action());
    w.tasks = vec![
        task("inductive-groupoid", "esn --to-groupoid", "b2"),
        task("swap-valid", "validate-action", "swap"),
        task("partial-valid", "validate-action", "partial"),
        task("globalize-partial", "inv-action-pipeline", "partial"),
        task("globalize-swap", "inv-action-pipeline", "swap"),
        task("skew-partial", "skew --ordered", "partial"),
        task("morita-partial", "morita", "partial"),
    ];
    w
}

fn semilattice_example() -> WorkspaceFile {
    let s = fixtures::semilattice();
    let a = InvSgpAction::trivial(s.clone(), Algebra::pointwise(fixtures::p5(), 1)).expect("trivial action");
    let mut w = WorkspaceFile::default();
    w.semigroups.insert("semilattice".into(), format::encode_semigroup(&s));
    insert_semigroup_action(&mut w, "trivial", "semilattice", "f5", &a);
    w.tasks = vec![
        task("inductive-groupoid", "esn --to-groupoid", "semilattice"),
        task("trivial-valid", "validate-action", "trivial"),
        task("skew-trivial", "skew --ordered", "trivial"),
    ];
    w
}

fn dual_numbers_example() -> WorkspaceFile {
    let a = fixtures::dual_number_action();
    let mut w = WorkspaceFile::default();
    w.algebras.insert("dual".into(), format::encode_algebra(a.carrier()));
    w.groupoids.insert("c2".into(), format::encode_groupoid(a.groupoid()));
    w.actions.insert("alpha".into(), format::encode_action(&a, "c2", "dual"));
    w.tasks = vec![task("alpha-valid", "validate-action", "alpha"), task("skew-alpha", "skew --ordered", "alpha")];
    w
}

fn non_associative_example() -> WorkspaceFile {
    let a = fixtures::non_associative_action();
    let mut w = WorkspaceFile::default();
    w.algebras.insert("truncated".into(), format::encode_algebra(a.carrier()));
    w.groupoids.insert("c2".into(), format::encode_groupoid(a.groupoid()));
    w.actions.insert("alpha".into(), format::encode_action(&a, "c2", "truncated"));
    w.tasks = vec![task("groupoid", "validate-groupoid", "c2"), task("alpha-valid", "validate-action", "alpha")];
    w
}

/// The bundled workspaces by file name. Every task in them passes.
pub fn fixture_corpus() -> Vec<(&'static str, WorkspaceFile)> {
    vec![
        ("arrow_over_bottom.json", swap_example()),
        ("nested_loops.json", nested_loops_example()),
        ("brandt_b2.json", brandt_example()),
        ("semilattice.json", semilattice_example()),
        ("dual_numbers.json", dual_numbers_example()),
        ("non_associative.json", non_associative_example()),
    ]
}

/// Writes [`fixture_corpus`] into `dir`, returning the paths written.
pub fn emit_fixture_corpus(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |path: &Path, source| Error::Io { path: path.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut written = Vec::new();
    for (name, file) in fixture_corpus() {
        let path = dir.join(name);
        std::fs::write(&path, file.to_json() + "\n").map_err(|e| io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
