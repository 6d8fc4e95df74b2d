//! JSON workspace files: named algebras, groupoids, semigroups and actions,
//! plus the tasks to run on them.

use std::collections::BTreeMap;

use ordact_core::{Algebra, InvSgpAction, InverseSemigroup, LinMap, OrderedGroupoid, POAction, PrimeModulus, Subspace};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<u64>>;

/// `structure[i][j]` is the product `b_i b_j` in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: u64,
    pub dim: usize,
    pub structure: Vec<Matrix>,
    pub unit: Option<Vec<u64>>,
}

/// Composition triples `[g, h, gh]`; identity laws may be left out.
/// `order` lists `[lesser, greater]` pairs generating the order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidFile {
    pub arrows: Vec<String>,
    pub objects: Vec<String>,
    pub inv: BTreeMap<String, String>,
    pub comp: Vec<[String; 3]>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
}

/// Full multiplication table; row is the left factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub elements: Vec<String>,
    pub mult: Vec<Vec<String>>,
}

/// Ideals are spanned by the listed rows. The map of `g` lists, row by
/// row, the images of the listed basis of `A_{g^-1}`; maps of objects
/// default to identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub groupoid: String,
    pub algebra: String,
    pub ideals: BTreeMap<String, Matrix>,
    #[serde(default)]
    pub maps: BTreeMap<String, Matrix>,
}

/// As [`ActionFile`], for an inverse semigroup; maps of idempotents
/// default to identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvActionFile {
    pub semigroup: String,
    pub algebra: String,
    pub ideals: BTreeMap<String, Matrix>,
    #[serde(default)]
    pub maps: BTreeMap<String, Matrix>,
}

/// One requested task. `run` is the task name followed by its flags, for
/// example `"globalize --minimal"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskFile {
    pub id: String,
    pub run: String,
    pub subject: String,
    /// Second subject: the action to compare with, or the global action of
    /// a supplied globalization.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub with: Option<String>,
    /// Spanning rows of the ideal for `restrict`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Matrix>,
    /// Embeddings `A_e -> B_e` for `verify-globalization` and `morita`, as
    /// images of the canonical basis of `A_e`. Missing means inclusions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embeddings: Option<BTreeMap<String, Matrix>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraFile>,
    #[serde(default)]
    pub groupoids: BTreeMap<String, GroupoidFile>,
    #[serde(default)]
    pub semigroups: BTreeMap<String, SemigroupFile>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionFile>,
    #[serde(default)]
    pub semigroup_actions: BTreeMap<String, InvActionFile>,
    #[serde(default)]
    pub tasks: Vec<TaskFile>,
}

impl WorkspaceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("workspace files serialize")
    }
}

pub fn encode_algebra(a: &Algebra) -> AlgebraFile {
    AlgebraFile { p: a.modulus().get(), dim: a.dim(), structure: a.dense_structure(), unit: a.unit().map(<[u64]>::to_vec) }
}

pub fn decode_algebra(f: &AlgebraFile) -> Result<Algebra> {
    let p = PrimeModulus::new(f.p)?;
    check_residues(p, f.structure.iter().flatten().chain(f.unit.iter()))?;
    Ok(Algebra::new(p, f.dim, &f.structure, f.unit.clone())?)
}

fn check_residues<'a>(p: PrimeModulus, rows: impl IntoIterator<Item = &'a Vec<u64>>) -> Result<()> {
    for row in rows {
        if let Some(&x) = row.iter().find(|&&x| x >= p.get()) {
            return Err(Error::Invalid(format!("{x} is not a residue mod {}", p.get())));
        }
    }
    Ok(())
}

pub fn encode_groupoid(g: &OrderedGroupoid) -> GroupoidFile {
    let name = |x: usize| g.name(x).to_string();
    let mut comp = Vec::new();
    for a in g.arrows() {
        for b in g.arrows() {
            if let Some(c) = g.comp(a, b) {
                comp.push([name(a), name(b), name(c)]);
            }
        }
    }
    GroupoidFile {
        arrows: g.names().to_vec(),
        objects: g.objects().map(name).collect(),
        inv: g.arrows().map(|x| (name(x), name(g.inv(x)))).collect(),
        comp,
        order: g.strict_pairs().into_iter().map(|(a, b)| [name(a), name(b)]).collect(),
    }
}

/// Resolves names and keeps the groupoid even when it fails validation, so
/// that `validate-groupoid` can report on it.
pub fn decode_groupoid(f: &GroupoidFile) -> Result<OrderedGroupoid> {
    let idx =
        |name: &str| f.arrows.iter().position(|a| a == name).ok_or_else(|| Error::Unresolved { kind: "arrow", name: name.to_string() });
    let objects = f.objects.iter().map(|e| idx(e)).collect::<Result<Vec<_>>>()?;
    let mut inv: Vec<usize> = (0..f.arrows.len()).collect();
    for (a, b) in &f.inv {
        let (a, b) = (idx(a)?, idx(b)?);
        inv[a] = b;
        inv[b] = a;
    }
    let comp = f.comp.iter().map(|[a, b, c]| Ok((idx(a)?, idx(b)?, idx(c)?))).collect::<Result<Vec<_>>>()?;
    let order = f.order.iter().map(|[a, b]| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
    Ok(OrderedGroupoid::assemble(f.arrows.clone(), &objects, inv, &comp, &order)?)
}

pub fn encode_semigroup(s: &InverseSemigroup) -> SemigroupFile {
    SemigroupFile {
        elements: s.names().to_vec(),
        mult: s.table().iter().map(|row| row.iter().map(|&x| s.name(x).to_string()).collect()).collect(),
    }
}

/// Keeps the table even when it fails validation.
pub fn decode_semigroup(f: &SemigroupFile) -> Result<InverseSemigroup> {
    let idx =
        |name: &str| f.elements.iter().position(|a| a == name).ok_or_else(|| Error::Unresolved { kind: "element", name: name.to_string() });
    let table = f.mult.iter().map(|row| row.iter().map(|x| idx(x)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    Ok(InverseSemigroup::unchecked(f.elements.clone(), &table)?)
}

pub fn subspace_rows(s: &Subspace) -> Matrix {
    s.basis().to_vec()
}

pub fn subspace_from_rows(p: PrimeModulus, dim: usize, rows: &Matrix) -> Result<Subspace> {
    if let Some(r) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::Invalid(format!("row of length {} in a space of dimension {dim}", r.len())));
    }
    check_residues(p, rows)?;
    Ok(Subspace::span(p, dim, rows)?)
}

/// The map sending the listed rows of `domain_rows` (linearly independent)
/// to `images`, as a map `span(domain_rows) -> codomain`.
fn map_from_rows(p: PrimeModulus, dim: usize, domain_rows: &Matrix, images: &Matrix, codomain: &Subspace) -> Result<LinMap> {
    let domain = subspace_from_rows(p, dim, domain_rows)?;
    if domain.rank() != domain_rows.len() {
        return Err(Error::Invalid("listed ideal basis is linearly dependent".into()));
    }
    if images.len() != domain_rows.len() {
        return Err(Error::Invalid(format!("{} images for a basis of {} vectors", images.len(), domain_rows.len())));
    }
    check_residues(p, images)?;
    let k = domain_rows.len();
    let coords = Subspace::full(p, k);
    // Listed-basis coordinates -> ambient, inverted to read off coordinates.
    let listed = LinMap::from_images(coords.clone(), domain.clone(), domain_rows)?;
    let to_coords = listed.inverse()?;
    let values = LinMap::from_images(coords, codomain.clone(), images)?;
    Ok(values.compose(&to_coords)?)
}

fn decode_maps(
    names: &[String],
    p: PrimeModulus,
    dim: usize,
    ideals: &BTreeMap<String, Matrix>,
    maps: &BTreeMap<String, Matrix>,
    inverse: impl Fn(usize) -> usize,
    is_identity: impl Fn(usize) -> bool,
) -> Result<(Vec<Subspace>, Vec<LinMap>)> {
    for key in ideals.keys().chain(maps.keys()) {
        if !names.contains(key) {
            return Err(Error::Unresolved { kind: "arrow", name: key.clone() });
        }
    }
    let rows_of = |x: usize| ideals.get(&names[x]).ok_or_else(|| Error::Invalid(format!("no ideal given for {}", names[x])));
    let spaces = (0..names.len()).map(|x| subspace_from_rows(p, dim, rows_of(x)?)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(names.len());
    for x in 0..names.len() {
        let m = match maps.get(&names[x]) {
            Some(images) => map_from_rows(p, dim, rows_of(inverse(x))?, images, &spaces[x])?,
            None if is_identity(x) => LinMap::identity(spaces[x].clone()),
            None => return Err(Error::Invalid(format!("no map given for {}", names[x]))),
        };
        out.push(m);
    }
    Ok((spaces, out))
}

fn encode_maps(names: &[String], ideals: &[Subspace], maps: &[LinMap]) -> (BTreeMap<String, Matrix>, BTreeMap<String, Matrix>) {
    let ideals = names.iter().cloned().zip(ideals.iter().map(subspace_rows)).collect();
    let maps = names.iter().cloned().zip(maps.iter().map(LinMap::images)).collect();
    (ideals, maps)
}

pub fn encode_action(a: &POAction, groupoid: &str, algebra: &str) -> ActionFile {
    let (ideals, maps) = encode_maps(a.groupoid().names(), a.ideals(), a.maps());
    ActionFile { groupoid: groupoid.to_string(), algebra: algebra.to_string(), ideals, maps }
}

pub fn decode_action(f: &ActionFile, g: &OrderedGroupoid, alg: &Algebra) -> Result<POAction> {
    let (ideals, maps) = decode_maps(g.names(), alg.modulus(), alg.dim(), &f.ideals, &f.maps, |x| g.inv(x), |x| g.is_object(x))?;
    Ok(POAction::assemble(g.clone(), alg.clone(), ideals, maps)?)
}

pub fn encode_inv_action(a: &InvSgpAction, semigroup: &str, algebra: &str) -> InvActionFile {
    let (ideals, maps) = encode_maps(a.semigroup().names(), a.ideals(), a.maps());
    InvActionFile { semigroup: semigroup.to_string(), algebra: algebra.to_string(), ideals, maps }
}

pub fn decode_inv_action(f: &InvActionFile, s: &InverseSemigroup, alg: &Algebra) -> Result<InvSgpAction> {
    let (ideals, maps) = decode_maps(s.names(), alg.modulus(), alg.dim(), &f.ideals, &f.maps, |x| s.inverse(x), |x| s.is_idempotent(x))?;
    Ok(InvSgpAction::assemble(s.clone(), alg.clone(), ideals, maps)?)
}

/// A workspace with every reference resolved.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, Algebra>,
    pub groupoids: BTreeMap<String, OrderedGroupoid>,
    pub semigroups: BTreeMap<String, InverseSemigroup>,
    pub actions: BTreeMap<String, POAction>,
    pub semigroup_actions: BTreeMap<String, InvSgpAction>,
    pub tasks: Vec<TaskFile>,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &'static str, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::Unresolved { kind, name: name.to_string() })
}

fn context<T>(what: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Definition { name: what.to_string(), source: Box::new(e) })
}

impl Workspace {
    pub fn parse(text: &str) -> Result<Self> {
        Self::resolve(&WorkspaceFile::parse(text)?)
    }

    pub fn resolve(f: &WorkspaceFile) -> Result<Self> {
        let mut w = Workspace::default();
        for (name, a) in &f.algebras {
            w.algebras.insert(name.clone(), context(name, decode_algebra(a))?);
        }
        for (name, g) in &f.groupoids {
            w.groupoids.insert(name.clone(), context(name, decode_groupoid(g))?);
        }
        for (name, s) in &f.semigroups {
            w.semigroups.insert(name.clone(), context(name, decode_semigroup(s))?);
        }
        for (name, a) in &f.actions {
            let g = lookup(&w.groupoids, "groupoid", &a.groupoid)?;
            let alg = lookup(&w.algebras, "algebra", &a.algebra)?;
            w.actions.insert(name.clone(), context(name, decode_action(a, g, alg))?);
        }
        for (name, a) in &f.semigroup_actions {
            let s = lookup(&w.semigroups, "semigroup", &a.semigroup)?;
            let alg = lookup(&w.algebras, "algebra", &a.algebra)?;
            w.semigroup_actions.insert(name.clone(), context(name, decode_inv_action(a, s, alg))?);
        }
        for t in &f.tasks {
            let known = w.algebras.contains_key(&t.subject)
                || w.groupoids.contains_key(&t.subject)
                || w.semigroups.contains_key(&t.subject)
                || w.actions.contains_key(&t.subject)
                || w.semigroup_actions.contains_key(&t.subject);
            if !known {
                return Err(Error::Unresolved { kind: "subject", name: t.subject.clone() });
            }
            if let Some(other) = &t.with {
                if !w.actions.contains_key(other) && !w.semigroup_actions.contains_key(other) {
                    return Err(Error::Unresolved { kind: "action", name: other.clone() });
                }
            }
        }
        w.tasks = f.tasks.clone();
        Ok(w)
    }

    pub fn algebra(&self, name: &str) -> Result<&Algebra> {
        lookup(&self.algebras, "algebra", name)
    }

    pub fn groupoid(&self, name: &str) -> Result<&OrderedGroupoid> {
        lookup(&self.groupoids, "groupoid", name)
    }

    pub fn semigroup(&self, name: &str) -> Result<&InverseSemigroup> {
        lookup(&self.semigroups, "semigroup", name)
    }

    pub fn action(&self, name: &str) -> Result<&POAction> {
        lookup(&self.actions, "action", name)
    }

    pub fn semigroup_action(&self, name: &str) -> Result<&InvSgpAction> {
        lookup(&self.semigroup_actions, "semigroup action", name)
    }
}
