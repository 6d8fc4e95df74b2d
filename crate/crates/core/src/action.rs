//! Partial ordered actions of ordered groupoids on algebras.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groupoid::OrderedGroupoid;
use crate::linmap::LinMap;
use crate::report::{Clause, Report};
use crate::subspace::Subspace;

/// A family `(A_g, α_g)` of ideals of a carrier algebra and isomorphisms
/// `α_g: A_{g^{-1}} -> A_g`, indexed by the arrows of an ordered groupoid.
///
/// Identities of the ideals are computed once at construction; `unit(g)`
/// is `Some` exactly when `A_g` is generated by a central idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct POAction {
    groupoid: OrderedGroupoid,
    carrier: Algebra,
    ideals: Vec<Subspace>,
    maps: Vec<LinMap>,
    units: Vec<Option<Vec<u64>>>,
}

impl POAction {
    /// Builds and validates an action; fails with the full report otherwise.
    pub fn new(groupoid: OrderedGroupoid, carrier: Algebra, ideals: Vec<Subspace>, maps: Vec<LinMap>) -> Result<Self> {
        let a = Self::assemble(groupoid, carrier, ideals, maps)?;
        let report = a.validate();
        if !report.is_ok() {
            return Err(Error::InvalidAction(report));
        }
        Ok(a)
    }

    /// Checks shapes only, so that invalid data can still be reported on.
    pub fn assemble(groupoid: OrderedGroupoid, carrier: Algebra, ideals: Vec<Subspace>, maps: Vec<LinMap>) -> Result<Self> {
        groupoid.ensure_valid()?;
        let n = groupoid.len();
        for len in [ideals.len(), maps.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, found: len });
            }
        }
        let full = Subspace::full(carrier.modulus(), carrier.dim());
        for g in 0..n {
            let name = groupoid.name(g);
            let ideal = &ideals[g];
            if ideal.ambient_dim() != carrier.dim() || ideal.modulus() != carrier.modulus() {
                return Err(Error::Malformed(format!("ideal of {name} lives in the wrong space")));
            }
            let m = &maps[g];
            if !m.domain().is_subspace_of(&full) || !m.codomain().is_subspace_of(&full) {
                return Err(Error::Malformed(format!("map of {name} lives in the wrong space")));
            }
        }
        let units = ideals
            .iter()
            .map(|s| match carrier.identity_of(s) {
                Ok(Some(id)) if id.is_central_idempotent() => Some(id.element),
                _ => None,
            })
            .collect();
        Ok(POAction { groupoid, carrier, ideals, maps, units })
    }

    /// Every ideal is the whole carrier and every map is the identity.
    pub fn trivial(groupoid: OrderedGroupoid, carrier: Algebra) -> Result<Self> {
        let full = Subspace::full(carrier.modulus(), carrier.dim());
        let n = groupoid.len();
        Self::new(groupoid, carrier, vec![full.clone(); n], vec![LinMap::identity(full); n])
    }

    pub fn groupoid(&self) -> &OrderedGroupoid {
        &self.groupoid
    }

    pub fn carrier(&self) -> &Algebra {
        &self.carrier
    }

    pub fn ideal(&self, g: usize) -> &Subspace {
        &self.ideals[g]
    }

    pub fn ideals(&self) -> &[Subspace] {
        &self.ideals
    }

    pub fn map(&self, g: usize) -> &LinMap {
        &self.maps[g]
    }

    pub fn maps(&self) -> &[LinMap] {
        &self.maps
    }

    /// `1_g`, when `A_g` is generated by a central idempotent.
    pub fn unit(&self, g: usize) -> Option<&[u64]> {
        self.units[g].as_deref()
    }

    fn full(&self) -> Subspace {
        Subspace::full(self.carrier.modulus(), self.carrier.dim())
    }

    fn name(&self, g: usize) -> &str {
        self.groupoid.name(g)
    }

    fn composable_pairs(&self) -> Vec<(usize, usize, usize)> {
        let g = &self.groupoid;
        g.arrows().flat_map(|a| g.arrows().map(move |b| (a, b))).filter_map(|(a, b)| g.comp(a, b).map(|c| (a, b, c))).collect()
    }

    /// Ideal chains, isomorphisms, (P1)-(P3), (PO) and the two derived
    /// identities `α_g^{-1} = α_{g^{-1}}` and
    /// `α_g(A_{g^{-1}} ∩ A_h) = A_g ∩ A_{gh}`.
    pub fn validate(&self) -> Report {
        let g = &self.groupoid;
        let alg = &self.carrier;
        let mut r = Report::new();
        for c in [Clause::IdealChain, Clause::Isomorphism, Clause::P1, Clause::P2, Clause::P3, Clause::PO, Clause::InverseMaps] {
            r.check(c);
        }

        for e in g.objects() {
            let ok = alg.is_two_sided_ideal(&self.ideals[e]).unwrap_or(false);
            r.expect(Clause::IdealChain, ok, || format!("A_{} is not an ideal of the carrier", self.name(e)));
        }
        for a in g.arrows() {
            let ok = alg.is_ideal(&self.ideals[a], &self.ideals[g.ran(a)]).unwrap_or(false);
            r.expect(Clause::IdealChain, ok, || format!("A_{} is not an ideal of A_{}", self.name(a), self.name(g.ran(a))));
            let m = &self.maps[a];
            let shaped = m.domain() == &self.ideals[g.inv(a)] && m.codomain() == &self.ideals[a];
            r.expect(Clause::Isomorphism, shaped && m.is_ring_iso(alg, alg), || {
                format!("α_{} is not a ring isomorphism A_{}^-1 -> A_{}", self.name(a), self.name(a), self.name(a))
            });
        }

        for e in g.objects() {
            let id = LinMap::identity(self.ideals[e].clone());
            r.expect(Clause::P1, self.maps[e].same_values(&id), || format!("α_{} is not the identity", self.name(e)));
        }
        let sum = Subspace::sum_all(alg.modulus(), alg.dim(), g.objects().map(|e| &self.ideals[e]));
        r.expect(Clause::P1, sum.is_ok_and(|s| s == self.full()), || "the object ideals do not sum to the carrier".into());

        for (a, b, ab) in self.composable_pairs() {
            let (na, nb) = (self.name(a), self.name(b));
            let dom = self.maps[b].preimage(&self.ideals[g.inv(a)]);
            let Ok(dom) = dom else {
                r.fail(Clause::P2, format!("cannot pull A_{na}^-1 back along α_{nb}"));
                continue;
            };
            let inside = dom.is_subspace_of(&self.ideals[g.inv(ab)]);
            r.expect(Clause::P2, inside, || format!("α_{nb}^-1(A_{na}^-1 ∩ A_{nb}) is not inside A_({na} {nb})^-1"));
            let agrees = dom.basis().iter().all(|v| {
                let lhs = self.maps[b].apply(v).and_then(|w| self.maps[a].apply(&w));
                let rhs = self.maps[ab].apply(v);
                matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y)
            });
            r.expect(Clause::P3, agrees, || format!("α_{na} ∘ α_{nb} != α_({na} {nb})"));

            let lhs = self.ideals[g.inv(a)].intersect(&self.ideals[b]).and_then(|s| self.maps[a].image_of(&s));
            let rhs = self.ideals[a].intersect(&self.ideals[ab]);
            r.expect(Clause::InverseMaps, matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y), || {
                format!("α_{na}(A_{na}^-1 ∩ A_{nb}) != A_{na} ∩ A_({na} {nb})")
            });
        }

        for a in g.arrows() {
            let back = &self.maps[g.inv(a)];
            let ok =
                self.ideals[g.inv(a)].basis().iter().all(|v| self.maps[a].apply(v).and_then(|w| back.apply(&w)).is_ok_and(|u| &u == v));
            r.expect(Clause::InverseMaps, ok, || format!("α_{}^-1 != α_{}^-1 as maps", self.name(a), self.name(a)));
        }

        for (a, b) in g.strict_pairs() {
            let ok = self.ideals[a].is_subspace_of(&self.ideals[b]) && self.maps[a].is_restriction_of(&self.maps[b]);
            r.expect(Clause::PO, ok, || format!("{} <= {} but A or α is not restricted", self.name(a), self.name(b)));
        }
        r
    }

    pub fn is_preunital(&self) -> bool {
        self.groupoid.objects().all(|e| self.units[e].is_some())
    }

    pub fn is_unital(&self) -> bool {
        self.units.iter().all(Option::is_some)
    }

    pub fn require_preunital(&self) -> Result<()> {
        match self.groupoid.objects().find(|&e| self.units[e].is_none()) {
            Some(e) => Err(Error::NotPreunital(self.name(e).to_string())),
            None => Ok(()),
        }
    }

    pub fn require_unital(&self) -> Result<()> {
        match self.groupoid.arrows().find(|&g| self.units[g].is_none()) {
            Some(g) => Err(Error::NotUnital(self.name(g).to_string())),
            None => Ok(()),
        }
    }

    /// `A_g = A_{r(g)}` for every arrow.
    pub fn is_global(&self) -> bool {
        self.groupoid.arrows().all(|g| self.ideals[g] == self.ideals[self.groupoid.ran(g)])
    }

    /// `A_{(e|g)} = A_e ∩ A_g` for all objects `e <= r(g)`.
    pub fn strong_report(&self) -> Report {
        let g = &self.groupoid;
        let mut r = Report::new();
        r.check(Clause::Strong);
        for a in g.arrows() {
            for e in g.objects() {
                if !g.leq(e, g.ran(a)) {
                    continue;
                }
                let ok = g.corestriction(e, a).is_ok_and(|c| self.ideals[e].intersect(&self.ideals[a]).is_ok_and(|s| s == self.ideals[c]));
                r.expect(Clause::Strong, ok, || {
                    format!("A_({}|{}) != A_{} ∩ A_{}", self.name(e), self.name(a), self.name(e), self.name(a))
                });
            }
        }
        r
    }

    pub fn is_strong(&self) -> bool {
        self.strong_report().is_ok()
    }

    /// `α_g ∘ α_h = α_{g*h} ∘ Id_{A_{h^{-1}}}` as partial maps, whenever the
    /// pseudoproduct exists: equal domains and equal values.
    pub fn ps_report(&self) -> Report {
        let g = &self.groupoid;
        let mut r = Report::new();
        r.check(Clause::PS);
        for a in g.arrows() {
            for b in g.arrows() {
                let Some(k) = g.pseudoproduct(a, b) else { continue };
                let (na, nb) = (self.name(a), self.name(b));
                let left = self.maps[b].preimage(&self.ideals[g.inv(a)]);
                let right = self.ideals[g.inv(k)].intersect(&self.ideals[g.inv(b)]);
                let (Ok(left), Ok(right)) = (left, right) else {
                    r.fail(Clause::PS, format!("domains of the ({na}, {nb}) composites are undefined"));
                    continue;
                };
                if left != right {
                    r.fail(Clause::PS, format!("domains differ for α_{na} ∘ α_{nb} and α_{na}*{nb}"));
                    continue;
                }
                let agrees = left.basis().iter().all(|v| {
                    let lhs = self.maps[b].apply(v).and_then(|w| self.maps[a].apply(&w));
                    matches!((lhs, self.maps[k].apply(v)), (Ok(x), Ok(y)) if x == y)
                });
                r.expect(Clause::PS, agrees, || format!("values differ for α_{na} ∘ α_{nb} and α_{na}*{nb}"));
            }
        }
        r
    }

    pub fn satisfies_ps(&self) -> bool {
        self.ps_report().is_ok()
    }

    /// Consequences of strength: `A_{(g|e)} = A_g ∩ A_{r(g|e)}` for
    /// `e <= d(g)`, and `A_{e∧f} = A_e ∩ A_f` whenever the meet exists.
    pub fn strong_meets_report(&self) -> Report {
        let g = &self.groupoid;
        let mut r = Report::new();
        r.check(Clause::StrongMeets);
        for a in g.arrows() {
            for e in g.objects() {
                if !g.leq(e, g.dom(a)) {
                    continue;
                }
                let ok =
                    g.restriction(a, e).is_ok_and(|x| self.ideals[a].intersect(&self.ideals[g.ran(x)]).is_ok_and(|s| s == self.ideals[x]));
                r.expect(Clause::StrongMeets, ok, || {
                    format!("A_({}|{}) != A_{} ∩ A_r({}|{})", self.name(a), self.name(e), self.name(a), self.name(a), self.name(e))
                });
            }
        }
        let objects: Vec<usize> = g.objects().collect();
        for &e in &objects {
            for &f in &objects {
                let Some(m) = g.meet_objects(e, f) else { continue };
                let ok = self.ideals[e].intersect(&self.ideals[f]).is_ok_and(|s| s == self.ideals[m]);
                r.expect(Clause::StrongMeets, ok, || {
                    format!("A_{} ∧ {} != A_{} ∩ A_{}", self.name(e), self.name(f), self.name(e), self.name(f))
                });
            }
        }
        r
    }

    /// The same action over the relabeled groupoid (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let groupoid = self.groupoid.relabel(perm)?;
        let n = self.groupoid.len();
        let mut ideals = vec![self.full(); n];
        let mut maps = vec![LinMap::identity(self.full()); n];
        for g in 0..n {
            ideals[perm[g]] = self.ideals[g].clone();
            maps[perm[g]] = self.maps[g].clone();
        }
        Self::assemble(groupoid, self.carrier.clone(), ideals, maps)
    }
}

/// Restriction of a global action `beta` to the ideal `a` of its carrier:
/// `A_e = A ∩ B_e`, `A_g = A_{r(g)} ∩ β_g(A_{d(g)})`, `α_g = β_g|`.
///
/// The result acts on `a` viewed as an algebra in its own canonical-basis
/// coordinates; the returned map is the inclusion of those coordinates
/// into the carrier of `beta`.
pub fn standard_restriction(beta: &POAction, a: &Subspace) -> Result<(POAction, LinMap)> {
    if !beta.carrier.is_two_sided_ideal(a)? {
        return Err(Error::NotAnIdeal);
    }
    let family = beta.groupoid.objects().map(|e| Ok((e, a.intersect(&beta.ideals[e])?))).collect::<Result<BTreeMap<_, _>>>()?;
    general_restriction(beta, &family)
}

/// Restriction of a global action to a monotone family of ideals `A_e ⊆ B_e`
/// indexed by objects, acting on `A = Σ A_e` (in its own coordinates, as for
/// [`standard_restriction`]).
pub fn general_restriction(beta: &POAction, family: &BTreeMap<usize, Subspace>) -> Result<(POAction, LinMap)> {
    let g = &beta.groupoid;
    let alg = &beta.carrier;
    if !beta.is_global() {
        return Err(Error::NotGlobal);
    }
    let report = beta.validate();
    if !report.is_ok() {
        return Err(Error::InvalidAction(report));
    }
    let objects: Vec<usize> = g.objects().collect();
    for &e in &objects {
        let fe = family.get(&e).ok_or_else(|| Error::Malformed(format!("no ideal given for object {}", g.name(e))))?;
        if !alg.is_two_sided_ideal(fe)? {
            return Err(Error::NotAnIdeal);
        }
        if !fe.is_subspace_of(&beta.ideals[e]) {
            return Err(Error::NotContained);
        }
    }
    if family.keys().any(|k| !objects.contains(k)) {
        return Err(Error::Malformed("family indexed by a non-object".into()));
    }
    for &e in &objects {
        for &f in &objects {
            if e != f && g.leq(e, f) && !family[&e].is_subspace_of(&family[&f]) {
                return Err(Error::NotMonotone { lower: g.name(e).to_string(), upper: g.name(f).to_string() });
            }
        }
    }
    let total = Subspace::sum_all(alg.modulus(), alg.dim(), family.values())?;
    let mut ideals = Vec::with_capacity(g.len());
    for x in g.arrows() {
        let moved = beta.maps[x].image_of(&family[&g.dom(x)])?;
        ideals.push(family[&g.ran(x)].intersect(&moved)?);
    }
    action_on_subalgebra(g, alg, &total, &ideals, |x, v| beta.maps[x].apply(v))
}

/// Validated action on the subalgebra `total` of `alg`, in the canonical
/// coordinates of `total`, given ideals and maps in ambient coordinates.
pub(crate) fn action_on_subalgebra(
    g: &OrderedGroupoid,
    alg: &Algebra,
    total: &Subspace,
    ideals: &[Subspace],
    apply: impl Fn(usize, &[u64]) -> Result<Vec<u64>>,
) -> Result<(POAction, LinMap)> {
    let (sub_alg, inclusion) = alg.subalgebra(total)?;
    let local: Vec<Subspace> = ideals.iter().map(|s| s.in_coords_of(total)).collect::<Result<_>>()?;
    let maps = g
        .arrows()
        .map(|x| LinMap::from_fn(local[g.inv(x)].clone(), local[x].clone(), |v| total.coords(&apply(x, &total.combine(v))?)))
        .collect::<Result<Vec<_>>>()?;
    let action = POAction::new(g.clone(), sub_alg, local, maps)?;
    Ok((action, inclusion))
}
