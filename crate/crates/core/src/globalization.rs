//! Globalizations of unital partial ordered actions: the product-ring
//! construction over `G_g = { h : r(h) <= r(g) }`, the minimal construction
//! over `E_g = { h : g^{-1} * h exists }`, a checker for externally supplied
//! globalizations, and the inverse-semigroup pipeline through the inductive
//! groupoid.

use std::collections::BTreeMap;

use crate::action::{action_on_subalgebra, general_restriction, POAction};
use crate::algebra::Algebra;
use crate::equivalence::{verify_equivalence, EquivalenceWitness};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{Clause, Report};
use crate::semigroup_action::InvSgpAction;
use crate::subspace::Subspace;

/// Data of the product-ring construction, kept for invariant checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    /// `F = A^n`, block `h` holding the value at arrow `h`.
    ambient: Algebra,
    /// Arrows carrying the support of `F_g`.
    supports: Vec<Vec<usize>>,
    /// `(h, k)`: `γ_g(f)` at `h` is `f` at `k`.
    sources: Vec<Vec<(usize, usize)>>,
    gamma: Vec<LinMap>,
    /// `φ_e: A_e -> F`.
    phi: BTreeMap<usize, LinMap>,
    /// `B_g` inside `F`.
    b_ambient: Vec<Subspace>,
    /// Coordinates of `B` into `F`.
    inclusion: LinMap,
}

impl Construction {
    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    /// `F_g` as a coordinate subspace of the ambient ring.
    pub fn support_space(&self, g: usize) -> Subspace {
        let m = self.block();
        let coords: Vec<usize> = self.supports[g].iter().flat_map(|&h| h * m..(h + 1) * m).collect();
        Subspace::coordinate(self.ambient.modulus(), self.ambient.dim(), &coords)
    }

    pub fn support(&self, g: usize) -> &[usize] {
        &self.supports[g]
    }

    pub fn gamma(&self, g: usize) -> &LinMap {
        &self.gamma[g]
    }

    pub fn phi(&self, e: usize) -> Option<&LinMap> {
        self.phi.get(&e)
    }

    pub fn inclusion(&self) -> &LinMap {
        &self.inclusion
    }

    /// `B_g` in ambient coordinates.
    pub fn b_ideal(&self, g: usize) -> &Subspace {
        &self.b_ambient[g]
    }

    fn block(&self) -> usize {
        self.ambient.dim() / self.supports.len().max(1)
    }

    /// `γ_g` on an arbitrary ambient vector (zero outside `F_g`).
    pub fn apply_gamma(&self, g: usize, f: &[u64]) -> Vec<u64> {
        let m = self.block();
        let mut out = vec![0; self.ambient.dim()];
        for &(h, k) in &self.sources[g] {
            out[h * m..(h + 1) * m].copy_from_slice(&f[k * m..(k + 1) * m]);
        }
        out
    }

    fn block_of<'a>(&self, f: &'a [u64], h: usize) -> &'a [u64] {
        let m = self.block();
        &f[h * m..(h + 1) * m]
    }
}

/// A global action `β` on `B` together with embeddings `φ_e: A_e -> B_e`,
/// claimed to globalize `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Globalization {
    base: POAction,
    global: POAction,
    embeddings: BTreeMap<usize, LinMap>,
    construction: Option<Construction>,
    minimal: bool,
}

impl Globalization {
    /// Wraps externally supplied data; nothing is checked until
    /// [`Globalization::verify`].
    pub fn assemble(base: POAction, global: POAction, embeddings: BTreeMap<usize, LinMap>, minimal: bool) -> Self {
        Globalization { base, global, embeddings, construction: None, minimal }
    }

    pub fn base(&self) -> &POAction {
        &self.base
    }

    pub fn global(&self) -> &POAction {
        &self.global
    }

    pub fn embeddings(&self) -> &BTreeMap<usize, LinMap> {
        &self.embeddings
    }

    pub fn embedding(&self, e: usize) -> Option<&LinMap> {
        self.embeddings.get(&e)
    }

    pub fn construction(&self) -> Option<&Construction> {
        self.construction.as_ref()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `dim B_g` per arrow.
    pub fn dims(&self) -> Vec<usize> {
        self.global.ideals().iter().map(Subspace::rank).collect()
    }

    /// Replaces the global action, keeping everything else. Used to check
    /// that the verifier notices tampering.
    pub fn with_global(&self, global: POAction) -> Self {
        Globalization { global, construction: None, ..self.clone() }
    }

    /// The globalization conditions (i)-(iv), the minimal form of (iv) and
    /// (PS) for `β` when the minimal flag is set, and the check that `β`
    /// restricted to the images `φ_e(A_e)` is equivalent to `α`.
    pub fn verify(&self) -> Report {
        let alpha = &self.base;
        let beta = &self.global;
        let g = alpha.groupoid();
        let mut r = Report::new();
        if g != beta.groupoid() {
            r.fail(Clause::Global, "α and β are indexed by different groupoids");
            return r;
        }
        let b_alg = beta.carrier();
        let inner = beta.validate();
        let global_ok = inner.is_ok() && beta.is_global();
        r.expect(Clause::Global, global_ok, || {
            if inner.is_ok() {
                "β is not global".to_string()
            } else {
                format!("β is not a valid action: {inner}")
            }
        });

        // φ_e(A_e) per object, in B coordinates.
        let mut images: BTreeMap<usize, Subspace> = BTreeMap::new();
        for e in g.objects() {
            let name = g.name(e);
            let Some(phi) = self.embeddings.get(&e) else {
                r.fail(Clause::Embeddings, format!("no embedding for {name}"));
                continue;
            };
            let ok = phi.domain() == alpha.ideal(e)
                && phi.codomain().ambient_dim() == b_alg.dim()
                && phi.image().is_subspace_of(beta.ideal(e))
                && phi.is_injective()
                && phi.is_multiplicative(alpha.carrier(), b_alg);
            r.expect(Clause::Embeddings, ok, || format!("φ_{name} is not a ring monomorphism A_{name} -> B_{name}"));
            if ok {
                images.insert(e, phi.image());
            }
        }
        if !r.passes(Clause::Embeddings) {
            return r;
        }
        for (&e, img) in &images {
            let ok = b_alg.is_ideal(img, beta.ideal(e)).unwrap_or(false);
            r.expect(Clause::GlobI, ok, || format!("φ_{0}(A_{0}) is not an ideal of B_{0}", g.name(e)));
        }

        let moved = |x: usize| -> Result<Subspace> { beta.map(x).image_of(&images[&g.dom(x)]) };
        for x in g.arrows() {
            let name = g.name(x);
            let (rx, dx) = (g.ran(x), g.dom(x));
            let ii = (|| -> Result<bool> {
                let lhs = self.embeddings[&rx].image_of(alpha.ideal(x))?;
                Ok(lhs == images[&rx].intersect(&moved(x)?)?)
            })();
            r.expect(Clause::GlobII, ii.unwrap_or(false), || {
                format!("φ_r({name})(A_{name}) != φ_r({name})(A_r({name})) ∩ β_{name}(φ_d({name})(A_d({name})))")
            });
            let iii = alpha.ideal(g.inv(x)).basis().iter().all(|a| {
                let lhs = self.embeddings[&dx].apply(a).and_then(|u| beta.map(x).apply(&u));
                let rhs = alpha.map(x).apply(a).and_then(|u| self.embeddings[&rx].apply(&u));
                matches!((lhs, rhs), (Ok(p), Ok(q)) if p == q)
            });
            r.expect(Clause::GlobIII, iii, || format!("β_{name} ∘ φ_d({name}) != φ_r({name}) ∘ α_{name}"));

            let sum_over = |pred: &dyn Fn(usize) -> bool| -> Result<Subspace> {
                let parts = g.arrows().filter(|&h| pred(g.ran(h))).map(moved).collect::<Result<Vec<_>>>()?;
                Subspace::sum_all(b_alg.modulus(), b_alg.dim(), &parts)
            };
            let iv = sum_over(&|rh| g.leq(rh, rx)).is_ok_and(|s| &s == beta.ideal(x));
            r.expect(Clause::GlobIV, iv, || format!("B_{name} != Σ_(r(h) <= r({name})) β_h(φ_d(h)(A_d(h)))"));
            if self.minimal {
                let ivm = sum_over(&|rh| rh == rx).is_ok_and(|s| &s == beta.ideal(x));
                r.expect(Clause::GlobIVMinimal, ivm, || format!("B_{name} != Σ_(r(h) = r({name})) β_h(φ_d(h)(A_d(h)))"));
            }
        }
        if self.minimal && global_ok {
            r.merge(beta.ps_report());
        }
        if global_ok {
            match self.restriction_check(&images) {
                Ok(sub) if sub.is_ok() => r.check(Clause::GlobRestriction),
                Ok(sub) => r.fail(Clause::GlobRestriction, sub.to_string()),
                Err(e) => r.fail(Clause::GlobRestriction, e.to_string()),
            }
        }
        r
    }

    /// Restricts `β` to the family `φ_e(A_e)` and compares with `α`. When
    /// the family is not monotone or its members are not ideals of `B`,
    /// the restricted data `A'_g = A'_{r(g)} ∩ β_g(A'_{d(g)})`,
    /// `α'_g = β_g|` is compared directly instead.
    fn restriction_check(&self, images: &BTreeMap<usize, Subspace>) -> Result<Report> {
        let alpha = &self.base;
        let beta = &self.global;
        let g = alpha.groupoid();
        match general_restriction(beta, images) {
            Ok((restricted, inclusion)) => {
                let total = inclusion.image();
                let maps = self
                    .embeddings
                    .iter()
                    .map(|(&e, phi)| {
                        let m = LinMap::from_fn(phi.domain().clone(), restricted.ideal(e).clone(), |a| total.coords(&phi.apply(a)?))?;
                        Ok((e, m))
                    })
                    .collect::<Result<_>>()?;
                verify_equivalence(alpha, &restricted, &EquivalenceWitness::new(maps))
            }
            Err(Error::NotMonotone { .. } | Error::NotAnIdeal) => {
                let mut r = Report::new();
                for x in g.arrows() {
                    let (rx, dx) = (g.ran(x), g.dom(x));
                    let restricted = images[&rx].intersect(&beta.map(x).image_of(&images[&dx])?)?;
                    let ok = self.embeddings[&rx].image_of(alpha.ideal(x))? == restricted;
                    r.expect(Clause::EquivIdeals, ok, || format!("φ(A_{0}) != A'_{0}", g.name(x)));
                    let ok = alpha.ideal(g.inv(x)).basis().iter().all(|a| {
                        let lhs = self.embeddings[&dx].apply(a).and_then(|u| beta.map(x).apply(&u));
                        let rhs = alpha.map(x).apply(a).and_then(|u| self.embeddings[&rx].apply(&u));
                        matches!((lhs, rhs), (Ok(p), Ok(q)) if p == q)
                    });
                    r.expect(Clause::EquivIntertwining, ok, || format!("φ ∘ α_{0} != α'_{0} ∘ φ", g.name(x)));
                }
                Ok(r)
            }
            Err(e) => Err(e),
        }
    }

    /// Invariants of the product-ring construction: `γ_{g^{-1}} γ_g = id`,
    /// `γ_g γ_h = γ_{gh}`, `γ_h = γ_g|` for `h <= g`, `φ_e(a)` at `e` equal
    /// to `a`, and local units of `B` from the images of the identities.
    ///
    /// For the full construction the `γ` laws are checked on `F_{h^{-1}}`;
    /// for the minimal one `γ_g` need not be injective on `F_{g^{-1}}`, and
    /// they are checked on `B_{h^{-1}}`. `None` for assembled data.
    pub fn construction_report(&self) -> Option<Report> {
        let c = self.construction.as_ref()?;
        let g = self.base.groupoid();
        let mut r = Report::new();
        let scope = |h: usize| -> Subspace {
            if self.minimal {
                c.b_ambient[g.inv(h)].clone()
            } else {
                c.support_space(g.inv(h))
            }
        };
        for x in g.arrows() {
            let ok = scope(x).basis().iter().all(|f| &c.apply_gamma(g.inv(x), &c.apply_gamma(x, f)) == f);
            r.expect(Clause::GammaInverse, ok, || format!("γ_{0}^-1 γ_{0} != id", g.name(x)));
        }
        for a in g.arrows() {
            for b in g.arrows() {
                let Some(ab) = g.comp(a, b) else { continue };
                let ok = scope(b).basis().iter().all(|f| c.apply_gamma(a, &c.apply_gamma(b, f)) == c.apply_gamma(ab, f));
                r.expect(Clause::GammaComposition, ok, || format!("γ_{} γ_{} != γ_{}", g.name(a), g.name(b), g.name(ab)));
            }
        }
        for (lo, hi) in g.strict_pairs() {
            let ok = scope(lo).basis().iter().all(|f| c.apply_gamma(lo, f) == c.apply_gamma(hi, f));
            r.expect(Clause::GammaOrder, ok, || format!("γ_{} is not a restriction of γ_{}", g.name(lo), g.name(hi)));
        }
        for (&e, phi) in &c.phi {
            let ok = phi.domain().basis().iter().all(|a| phi.apply(a).is_ok_and(|f| c.block_of(&f, e) == a.as_slice()));
            r.expect(Clause::EmbeddingDiagonal, ok, || format!("φ_{0}(a) at {0} differs from a", g.name(e)));
        }
        let candidates: Vec<Vec<u64>> = g
            .arrows()
            .filter_map(|h| {
                let one = self.base.unit(g.dom(h))?;
                let f = c.phi.get(&g.dom(h))?.apply(one).ok()?;
                Some(c.apply_gamma(h, &f))
            })
            .collect();
        let b_total = c.inclusion.image();
        let ok = c.ambient.local_units_witness(&b_total, &candidates).unwrap_or(false);
        r.expect(Clause::LocalUnits, ok, || "images of the ideal identities do not act as local units on B".into());
        Some(r)
    }
}

/// The globalization over `G_g = { h : r(h) <= r(g) }` with
/// `γ_g(f)|_h = f((g^{-1}|r(h)) h)` and `φ_e(a)|_h = α_{h^{-1}}(a 1_h)` for
/// `r(h) = e`. Requires a valid unital action.
pub fn build_globalization(a: &POAction) -> Result<Globalization> {
    require_valid(a)?;
    a.require_unital()?;
    let g = a.groupoid();
    let supports: Vec<Vec<usize>> = g.arrows().map(|x| g.down_range_set(x)).collect();
    let sources = g
        .arrows()
        .map(|x| {
            let xi = g.inv(x);
            supports[x]
                .iter()
                .map(|&h| {
                    let restricted = g.restriction(xi, g.ran(h))?;
                    let k = g.comp(restricted, h).ok_or_else(|| Error::Malformed("restriction not composable".into()))?;
                    Ok((h, k))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let embed = |e: usize| -> Vec<usize> { g.arrows().filter(|&h| g.ran(h) == e).collect() };
    let generators = |x: usize| -> Vec<usize> { g.arrows().filter(|&h| g.leq(g.ran(h), g.ran(x))).collect() };
    construct(a, supports, sources, embed, generators, false)
}

/// The minimal globalization over `E_g = { h : g^{-1} * h exists }` with
/// `γ_g(f)|_h = f(g^{-1} * h)`, `ψ_e` supported on `E_e`, and `B_g`
/// generated over `r(h) = r(g)`. Requires a valid, unital, strong action of
/// a pseudoassociative groupoid.
pub fn build_minimal_globalization(a: &POAction) -> Result<Globalization> {
    require_valid(a)?;
    a.require_unital()?;
    if !a.is_strong() {
        return Err(Error::NotStrong);
    }
    let g = a.groupoid();
    if !g.is_pseudoassociative() {
        return Err(Error::NotPseudoassociative);
    }
    let supports: Vec<Vec<usize>> = g.arrows().map(|x| g.pseudo_composable_set(x)).collect();
    let sources = g
        .arrows()
        .map(|x| {
            supports[x]
                .iter()
                .map(|&h| Ok((h, g.pseudoproduct(g.inv(x), h).ok_or(Error::NotPseudoassociative)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let embed = |e: usize| -> Vec<usize> { g.pseudo_composable_set(e) };
    let generators = |x: usize| -> Vec<usize> { g.arrows().filter(|&h| g.ran(h) == g.ran(x)).collect() };
    construct(a, supports, sources, embed, generators, true)
}

fn require_valid(a: &POAction) -> Result<()> {
    let report = a.validate();
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::InvalidAction(report))
    }
}

fn construct(
    a: &POAction,
    supports: Vec<Vec<usize>>,
    sources: Vec<Vec<(usize, usize)>>,
    embed: impl Fn(usize) -> Vec<usize>,
    generators: impl Fn(usize) -> Vec<usize>,
    minimal: bool,
) -> Result<Globalization> {
    let g = a.groupoid();
    let n = g.len();
    let alg = a.carrier();
    let m = alg.dim();
    let p = alg.modulus();
    let ambient = alg.product_ring(n);
    let full = Subspace::full(p, n * m);
    let mut c = Construction {
        ambient,
        supports,
        sources,
        gamma: Vec::new(),
        phi: BTreeMap::new(),
        b_ambient: Vec::new(),
        inclusion: LinMap::identity(full),
    };
    c.gamma = g
        .arrows()
        .map(|x| LinMap::from_fn(c.support_space(g.inv(x)), c.support_space(x), |f| Ok(c.apply_gamma(x, f))))
        .collect::<Result<_>>()?;
    for e in g.objects() {
        let arrows = embed(e);
        let phi = LinMap::from_fn(a.ideal(e).clone(), c.support_space(e), |v| {
            let mut out = vec![0; n * m];
            for &h in &arrows {
                let one = a.unit(h).ok_or_else(|| Error::NotUnital(g.name(h).to_string()))?;
                let local = alg.mul(v, one)?;
                let moved = a.map(g.inv(h)).apply(&local)?;
                out[h * m..(h + 1) * m].copy_from_slice(&moved);
            }
            Ok(out)
        })?;
        c.phi.insert(e, phi);
    }

    // Generator images γ_h(φ_d(h)(A_d(h))), and B_g per range object.
    let pieces = g.arrows().map(|h| c.gamma[h].image_of(&c.phi[&g.dom(h)].image())).collect::<Result<Vec<_>>>()?;
    let mut per_object: BTreeMap<usize, Subspace> = BTreeMap::new();
    for e in g.objects() {
        let parts: Vec<Subspace> = generators(e).into_iter().map(|h| pieces[h].clone()).collect();
        per_object.insert(e, c.ambient.subring_closure(&parts)?);
    }
    c.b_ambient = g.arrows().map(|x| per_object[&g.ran(x)].clone()).collect();
    let total = Subspace::sum_all(p, n * m, per_object.values())?;

    let (global, inclusion) =
        action_on_subalgebra(g, &c.ambient, &total, &c.b_ambient, |x, f| Ok(c.apply_gamma(x, f))).map_err(|e| match e {
            Error::InvalidAction(r) => Error::NotOrdered(r),
            e => e,
        })?;
    c.inclusion = inclusion;
    let embeddings = c
        .phi
        .iter()
        .map(|(&e, phi)| {
            let m = LinMap::from_fn(phi.domain().clone(), global.ideal(e).clone(), |v| total.coords(&phi.apply(v)?))?;
            Ok((e, m))
        })
        .collect::<Result<_>>()?;
    Ok(Globalization { base: a.clone(), global, embeddings, construction: Some(c), minimal })
}

/// Result of globalizing an inverse-semigroup action through its inductive
/// groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupGlobalization {
    base: InvSgpAction,
    global: InvSgpAction,
    embeddings: BTreeMap<usize, LinMap>,
    groupoid_level: Globalization,
}

impl SemigroupGlobalization {
    pub fn base(&self) -> &InvSgpAction {
        &self.base
    }

    pub fn global(&self) -> &InvSgpAction {
        &self.global
    }

    pub fn embeddings(&self) -> &BTreeMap<usize, LinMap> {
        &self.embeddings
    }

    /// The minimal globalization of the transferred groupoid action.
    pub fn groupoid_level(&self) -> &Globalization {
        &self.groupoid_level
    }

    pub fn verify(&self) -> Report {
        verify_semigroup_globalization(&self.base, &self.global, &self.embeddings)
    }
}

/// Transfers `a` to its inductive groupoid, builds the minimal
/// globalization there, and transfers the result back.
pub fn globalize_inverse_semigroup_action(a: &InvSgpAction) -> Result<SemigroupGlobalization> {
    let report = a.validate();
    if !report.is_ok() {
        return Err(Error::InvalidAction(report));
    }
    a.require_preunital()?;
    a.require_unital()?;
    let omega = a.to_groupoid_action()?;
    let groupoid_level = build_minimal_globalization(&omega)?;
    let global = InvSgpAction::from_groupoid_action(groupoid_level.global(), a.semigroup())?;
    Ok(SemigroupGlobalization { base: a.clone(), global, embeddings: groupoid_level.embeddings().clone(), groupoid_level })
}

/// Globalization conditions for inverse-semigroup actions, indexed by
/// idempotents: `φ_e(A_e)` an ideal of `B_e`,
/// `φ_{ss^{-1}}(A_s) = φ_{ss^{-1}}(A_{ss^{-1}}) ∩ β_s(φ_{s^{-1}s}(A_{s^{-1}s}))`,
/// intertwining on `A_{s^{-1}}`, and `B_s = Σ_{tt^{-1} = ss^{-1}} β_t(φ_{t^{-1}t}(A_{t^{-1}t}))`.
pub fn verify_semigroup_globalization(alpha: &InvSgpAction, beta: &InvSgpAction, embeddings: &BTreeMap<usize, LinMap>) -> Report {
    let s = alpha.semigroup();
    let mut r = Report::new();
    if s != beta.semigroup() {
        r.fail(Clause::Global, "α and β are indexed by different semigroups");
        return r;
    }
    let inner = beta.validate();
    r.expect(Clause::Global, inner.is_ok() && beta.is_global(), || {
        if inner.is_ok() {
            "β is not global".to_string()
        } else {
            format!("β is not a valid action: {inner}")
        }
    });
    let b_alg = beta.carrier();
    let mut images: BTreeMap<usize, Subspace> = BTreeMap::new();
    for e in s.idempotents() {
        let name = s.name(e);
        let ok = embeddings.get(&e).is_some_and(|phi| {
            phi.domain() == alpha.ideal(e)
                && phi.codomain().ambient_dim() == b_alg.dim()
                && phi.image().is_subspace_of(beta.ideal(e))
                && phi.is_injective()
                && phi.is_multiplicative(alpha.carrier(), b_alg)
        });
        r.expect(Clause::Embeddings, ok, || format!("φ_{name} is not a ring monomorphism A_{name} -> B_{name}"));
        if ok {
            images.insert(e, embeddings[&e].image());
        }
    }
    if !r.passes(Clause::Embeddings) {
        return r;
    }
    for (&e, img) in &images {
        let ok = b_alg.is_ideal(img, beta.ideal(e)).unwrap_or(false);
        r.expect(Clause::SgpGlobI, ok, || format!("φ_{0}(A_{0}) is not an ideal of B_{0}", s.name(e)));
    }
    let range = |x: usize| s.mul(x, s.inverse(x));
    let domain = |x: usize| s.mul(s.inverse(x), x);
    let moved = |x: usize| beta.map(x).image_of(&images[&domain(x)]);
    for x in 0..s.len() {
        let name = s.name(x);
        let (rx, dx) = (range(x), domain(x));
        let ii = (|| -> Result<bool> {
            let lhs = embeddings[&rx].image_of(alpha.ideal(x))?;
            Ok(lhs == images[&rx].intersect(&moved(x)?)?)
        })();
        r.expect(Clause::SgpGlobII, ii.unwrap_or(false), || {
            format!("φ(A_{name}) != φ(A_{name}{name}^-1) ∩ β_{name}(φ(A_{name}^-1{name}))")
        });
        let iii = alpha.ideal(s.inverse(x)).basis().iter().all(|a| {
            let lhs = embeddings[&dx].apply(a).and_then(|u| beta.map(x).apply(&u));
            let rhs = alpha.map(x).apply(a).and_then(|u| embeddings[&rx].apply(&u));
            matches!((lhs, rhs), (Ok(p), Ok(q)) if p == q)
        });
        r.expect(Clause::SgpGlobIII, iii, || format!("β_{name} ∘ φ != φ ∘ α_{name}"));
        let iv = (0..s.len())
            .filter(|&t| range(t) == rx)
            .map(moved)
            .collect::<Result<Vec<_>>>()
            .and_then(|parts| Subspace::sum_all(b_alg.modulus(), b_alg.dim(), &parts))
            .is_ok_and(|sum| &sum == beta.ideal(x));
        r.expect(Clause::SgpGlobIV, iv, || format!("B_{name} != Σ_(tt^-1 = {name}{name}^-1) β_t(φ(A_t^-1t))"));
    }
    r
}
