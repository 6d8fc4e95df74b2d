//! Partial actions of inverse semigroups on algebras and their transfer to
//! and from the inductive groupoid.

use crate::action::POAction;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{Clause, Report};
use crate::semigroup::{esn_to_groupoid, InverseSemigroup};
use crate::subspace::Subspace;

/// A family `(A_s, α_s)` indexed by the elements of an inverse semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvSgpAction {
    semigroup: InverseSemigroup,
    carrier: Algebra,
    ideals: Vec<Subspace>,
    maps: Vec<LinMap>,
    units: Vec<Option<Vec<u64>>>,
}

impl InvSgpAction {
    pub fn new(semigroup: InverseSemigroup, carrier: Algebra, ideals: Vec<Subspace>, maps: Vec<LinMap>) -> Result<Self> {
        let a = Self::assemble(semigroup, carrier, ideals, maps)?;
        let report = a.validate();
        if !report.is_ok() {
            return Err(Error::InvalidAction(report));
        }
        Ok(a)
    }

    pub fn assemble(semigroup: InverseSemigroup, carrier: Algebra, ideals: Vec<Subspace>, maps: Vec<LinMap>) -> Result<Self> {
        let report = semigroup.validate();
        if !report.is_ok() {
            return Err(Error::InvalidSemigroup(report));
        }
        let n = semigroup.len();
        for len in [ideals.len(), maps.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, found: len });
            }
        }
        for (s, ideal) in ideals.iter().enumerate() {
            if ideal.ambient_dim() != carrier.dim() || ideal.modulus() != carrier.modulus() {
                return Err(Error::Malformed(format!("ideal of {} lives in the wrong space", semigroup.name(s))));
            }
            let m = &maps[s];
            if m.domain().ambient_dim() != carrier.dim() || m.codomain().ambient_dim() != carrier.dim() {
                return Err(Error::Malformed(format!("map of {} lives in the wrong space", semigroup.name(s))));
            }
        }
        let units = ideals
            .iter()
            .map(|s| match carrier.identity_of(s) {
                Ok(Some(id)) if id.is_central_idempotent() => Some(id.element),
                _ => None,
            })
            .collect();
        Ok(InvSgpAction { semigroup, carrier, ideals, maps, units })
    }

    /// Every ideal is the carrier and every map the identity.
    pub fn trivial(semigroup: InverseSemigroup, carrier: Algebra) -> Result<Self> {
        let full = Subspace::full(carrier.modulus(), carrier.dim());
        let n = semigroup.len();
        Self::new(semigroup, carrier, vec![full.clone(); n], vec![LinMap::identity(full); n])
    }

    pub fn semigroup(&self) -> &InverseSemigroup {
        &self.semigroup
    }

    pub fn carrier(&self) -> &Algebra {
        &self.carrier
    }

    pub fn ideal(&self, s: usize) -> &Subspace {
        &self.ideals[s]
    }

    pub fn ideals(&self) -> &[Subspace] {
        &self.ideals
    }

    pub fn map(&self, s: usize) -> &LinMap {
        &self.maps[s]
    }

    pub fn maps(&self) -> &[LinMap] {
        &self.maps
    }

    pub fn unit(&self, s: usize) -> Option<&[u64]> {
        self.units[s].as_deref()
    }

    fn name(&self, s: usize) -> &str {
        self.semigroup.name(s)
    }

    pub fn is_preunital(&self) -> bool {
        self.semigroup.idempotents().all(|e| self.units[e].is_some())
    }

    pub fn is_unital(&self) -> bool {
        self.units.iter().all(Option::is_some)
    }

    pub fn require_unital(&self) -> Result<()> {
        match (0..self.semigroup.len()).find(|&s| self.units[s].is_none()) {
            Some(s) => Err(Error::NotUnital(self.name(s).to_string())),
            None => Ok(()),
        }
    }

    pub fn require_preunital(&self) -> Result<()> {
        match self.semigroup.idempotents().find(|&e| self.units[e].is_none()) {
            Some(e) => Err(Error::NotPreunital(self.name(e).to_string())),
            None => Ok(()),
        }
    }

    /// `A_s = A_{ss^{-1}}` for every element.
    pub fn is_global(&self) -> bool {
        let s = &self.semigroup;
        (0..s.len()).all(|x| self.ideals[x] == self.ideals[s.mul(x, s.inverse(x))])
    }

    /// Ideal chains, isomorphisms and (P1')-(P3').
    pub fn validate(&self) -> Report {
        let s = &self.semigroup;
        let alg = &self.carrier;
        let n = s.len();
        let mut r = Report::new();
        for c in [Clause::IdealChain, Clause::Isomorphism, Clause::P1Prime, Clause::P2Prime, Clause::P3Prime] {
            r.check(c);
        }
        for x in 0..n {
            let e = s.mul(x, s.inverse(x));
            let outer_ok = alg.is_two_sided_ideal(&self.ideals[e]).unwrap_or(false);
            let inner_ok = alg.is_ideal(&self.ideals[x], &self.ideals[e]).unwrap_or(false);
            r.expect(Clause::IdealChain, outer_ok && inner_ok, || {
                format!("A_{} is not an ideal of A_{}, or the latter not of the carrier", self.name(x), self.name(e))
            });
            let m = &self.maps[x];
            let shaped = m.domain() == &self.ideals[s.inverse(x)] && m.codomain() == &self.ideals[x];
            r.expect(Clause::Isomorphism, shaped && m.is_ring_iso(alg, alg), || format!("α_{} is not a ring isomorphism", self.name(x)));
        }
        let sum = Subspace::sum_all(alg.modulus(), alg.dim(), s.idempotents().map(|e| &self.ideals[e]));
        r.expect(Clause::P1Prime, sum.is_ok_and(|x| x.is_full()), || "the idempotent ideals do not sum to the carrier".into());
        for a in 0..n {
            for b in 0..n {
                let ab = s.mul(a, b);
                let (na, nb) = (self.name(a), self.name(b));
                let lhs = self.ideals[s.inverse(a)].intersect(&self.ideals[b]).and_then(|x| self.maps[a].image_of(&x));
                let rhs = self.ideals[a].intersect(&self.ideals[ab]);
                r.expect(Clause::P2Prime, matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y), || {
                    format!("α_{na}(A_{na}^-1 ∩ A_{nb}) != A_{na} ∩ A_{na}{nb}")
                });
                let dom = self.ideals[s.inverse(b)].intersect(&self.ideals[s.inverse(ab)]);
                let ok = dom.is_ok_and(|d| {
                    d.basis().iter().all(|v| {
                        let lhs = self.maps[b].apply(v).and_then(|w| self.maps[a].apply(&w));
                        matches!((lhs, self.maps[ab].apply(v)), (Ok(x), Ok(y)) if x == y)
                    })
                });
                r.expect(Clause::P3Prime, ok, || format!("α_{na} ∘ α_{nb} != α_{na}{nb}"));
            }
        }
        r
    }

    /// Premorphism conditions for `s ↦ α_s` into the partial bijections of
    /// the carrier: composites are restrictions of `α_{st}`, inverses match,
    /// and the natural order is sent to restriction.
    pub fn premorphism_report(&self) -> Report {
        let s = &self.semigroup;
        let n = s.len();
        let mut r = Report::new();
        for c in [Clause::PremorphismI, Clause::PremorphismII, Clause::PremorphismIII] {
            r.check(c);
        }
        for a in 0..n {
            for b in 0..n {
                let (na, nb) = (self.name(a), self.name(b));
                let composite = self.maps[a].compose_partial(&self.maps[b]);
                let ok = composite.is_ok_and(|c| c.is_restriction_of(&self.maps[s.mul(a, b)]));
                r.expect(Clause::PremorphismI, ok, || format!("α_{na} α_{nb} is not a restriction of α_{na}{nb}"));
                if s.natural_leq(a, b) {
                    r.expect(Clause::PremorphismIII, self.maps[a].is_restriction_of(&self.maps[b]), || {
                        format!("{na} ⪯ {nb} but α_{na} is not a restriction of α_{nb}")
                    });
                }
            }
            let ok = self.maps[a].inverse().is_ok_and(|inv| inv.same_values(&self.maps[s.inverse(a)]));
            r.expect(Clause::PremorphismII, ok, || format!("α_{}^-1 != α_{}^-1", self.name(a), self.name(a)))
        }
        r
    }

    /// The same ideals and maps over the inductive groupoid of the
    /// semigroup. The result must be a strong P.O. action.
    pub fn to_groupoid_action(&self) -> Result<POAction> {
        let report = self.validate();
        if !report.is_ok() {
            return Err(Error::InvalidAction(report));
        }
        self.require_preunital()?;
        let g = esn_to_groupoid(&self.semigroup)?;
        let omega = POAction::new(g, self.carrier.clone(), self.ideals.clone(), self.maps.clone())?;
        if !omega.is_strong() {
            return Err(Error::NotStrong);
        }
        Ok(omega)
    }

    /// Transfers a global action over the inductive groupoid of `semigroup`
    /// back to the semigroup.
    pub fn from_groupoid_action(action: &POAction, semigroup: &InverseSemigroup) -> Result<Self> {
        if esn_to_groupoid(semigroup)? != *action.groupoid() {
            return Err(Error::GroupoidMismatch);
        }
        if !action.is_global() {
            return Err(Error::NotGlobal);
        }
        Self::new(semigroup.clone(), action.carrier().clone(), action.ideals().to_vec(), action.maps().to_vec())
    }
}
