//! Finite inverse semigroups, the natural order, the ESN correspondence
//! with inductive groupoids, and premorphism checks.

use crate::error::{Error, Result};
use crate::groupoid::OrderedGroupoid;
use crate::report::{Clause, Report};

/// A finite semigroup on elements `0..n` given by its full multiplication
/// table (row = left factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSemigroup {
    names: Vec<String>,
    mult: Vec<usize>,
    inv: Vec<usize>,
    leq: Vec<bool>,
}

impl InverseSemigroup {
    /// Validates the table as an inverse semigroup.
    pub fn new(names: Vec<String>, table: &[Vec<usize>]) -> Result<Self> {
        let s = Self::unchecked(names, table)?;
        let report = s.validate();
        if !report.is_ok() {
            return Err(Error::InvalidSemigroup(report));
        }
        Ok(s)
    }

    /// Keeps the table without validating it; inverse and order data are
    /// only meaningful once [`InverseSemigroup::validate`] passes.
    pub fn unchecked(names: Vec<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = names.len();
        if table.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: table.len() });
        }
        let mut mult = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            if row.iter().any(|&x| x >= n) {
                return Err(Error::Malformed("product index out of range".into()));
            }
            mult.extend_from_slice(row);
        }
        let mut s = InverseSemigroup { names, mult, inv: Vec::new(), leq: Vec::new() };
        s.inv = (0..n).map(|a| (0..n).find(|&t| s.mul(s.mul(a, t), a) == a && s.mul(s.mul(t, a), t) == t).unwrap_or(a)).collect();
        s.leq =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (0..n).any(|e| s.mul(e, e) == e && s.mul(b, e) == a)).collect();
        Ok(s)
    }

    pub fn from_names(elements: &[&str], table: &[Vec<&str>]) -> Result<Self> {
        let idx = |x: &str| elements.iter().position(|e| *e == x).ok_or_else(|| Error::UnknownName(x.to_string()));
        let rows = table.iter().map(|row| row.iter().map(|x| idx(x)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Self::new(elements.iter().map(|s| s.to_string()).collect(), &rows)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.len() + b]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.len().max(1)).map(|r| r.to_vec()).take(self.len()).collect()
    }

    pub fn inverse(&self, s: usize) -> usize {
        self.inv[s]
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&s| self.is_idempotent(s))
    }

    /// `s ⪯ t` iff `s = t e` for some idempotent `e`.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        self.leq[s * self.len() + t]
    }

    pub fn validate(&self) -> Report {
        let n = self.len();
        let nm = |s: usize| self.names[s].as_str();
        let mut r = Report::new();
        r.check(Clause::SemigroupAssociative);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        r.fail(Clause::SemigroupAssociative, format!("({} {}) {} != {} ({} {})", nm(a), nm(b), nm(c), nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        r.check(Clause::SemigroupInverses);
        for a in 0..n {
            let count = (0..n).filter(|&t| self.mul(self.mul(a, t), a) == a && self.mul(self.mul(t, a), t) == t).count();
            if count != 1 {
                r.fail(Clause::SemigroupInverses, format!("{} has {count} inverses", nm(a)));
            }
        }
        r.check(Clause::IdempotentsCommute);
        let idem: Vec<usize> = self.idempotents().collect();
        for &e in &idem {
            for &f in &idem {
                if e < f && self.mul(e, f) != self.mul(f, e) {
                    r.fail(Clause::IdempotentsCommute, format!("{} and {} do not commute", nm(e), nm(f)));
                }
            }
        }
        r
    }
}

/// The inductive groupoid of an inverse semigroup: the restricted product
/// `st` defined when `s^{-1}s = tt^{-1}`, ordered naturally.
pub fn esn_to_groupoid(s: &InverseSemigroup) -> Result<OrderedGroupoid> {
    let report = s.validate();
    if !report.is_ok() {
        return Err(Error::InvalidSemigroup(report));
    }
    let n = s.len();
    let objects: Vec<usize> = s.idempotents().collect();
    let inv: Vec<usize> = (0..n).map(|a| s.inverse(a)).collect();
    let mut triples = Vec::new();
    let mut order = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if s.mul(inv[a], a) == s.mul(b, inv[b]) {
                triples.push((a, b, s.mul(a, b)));
            }
            if a != b && s.natural_leq(a, b) {
                order.push((a, b));
            }
        }
    }
    let g = OrderedGroupoid::new(s.names().to_vec(), &objects, inv, &triples, &order)?;
    debug_assert!(g.is_inductive());
    Ok(g)
}

/// The inverse semigroup of an inductive groupoid, with the pseudoproduct
/// as multiplication.
pub fn esn_to_semigroup(g: &OrderedGroupoid) -> Result<InverseSemigroup> {
    g.ensure_valid()?;
    if !g.is_inductive() {
        return Err(Error::NotInductive);
    }
    let n = g.len();
    let table = (0..n)
        .map(|a| (0..n).map(|b| g.pseudoproduct(a, b).ok_or(Error::NotInductive)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    InverseSemigroup::new(g.names().to_vec(), &table)
}

/// Premorphism conditions for `map: source -> target` between inverse
/// semigroups: `ψ(s)ψ(t) ⪯ ψ(st)`, `ψ(s)^{-1} = ψ(s^{-1})`, and order
/// preservation.
pub fn semigroup_premorphism_report(source: &InverseSemigroup, target: &InverseSemigroup, map: &[usize]) -> Report {
    let mut r = Report::new();
    if map.len() != source.len() || map.iter().any(|&x| x >= target.len()) {
        r.fail(Clause::PremorphismI, "map does not cover the source or leaves the target");
        return r;
    }
    let n = source.len();
    let (sn, tn) = (|a: usize| source.name(a), |a: usize| target.name(a));
    r.check(Clause::PremorphismI);
    r.check(Clause::PremorphismII);
    r.check(Clause::PremorphismIII);
    for a in 0..n {
        for b in 0..n {
            let lhs = target.mul(map[a], map[b]);
            let rhs = map[source.mul(a, b)];
            r.expect(Clause::PremorphismI, target.natural_leq(lhs, rhs), || {
                format!("ψ({})ψ({}) = {} is not below ψ({} {}) = {}", sn(a), sn(b), tn(lhs), sn(a), sn(b), tn(rhs))
            });
            if source.natural_leq(a, b) {
                r.expect(Clause::PremorphismIII, target.natural_leq(map[a], map[b]), || {
                    format!("{} ⪯ {} but images are not ordered", sn(a), sn(b))
                });
            }
        }
        r.expect(Clause::PremorphismII, target.inverse(map[a]) == map[source.inverse(a)], || format!("ψ({})^-1 != ψ({}^-1)", sn(a), sn(a)));
    }
    r
}

/// Premorphism conditions for `map: source -> target` between inductive
/// groupoids, plus the two derived identities on domains and
/// corestrictions.
pub fn groupoid_premorphism_report(source: &OrderedGroupoid, target: &OrderedGroupoid, map: &[usize]) -> Report {
    let mut r = Report::new();
    if map.len() != source.len() || map.iter().any(|&x| x >= target.len()) {
        r.fail(Clause::PremorphismI, "map does not cover the source or leaves the target");
        return r;
    }
    let n = source.len();
    let sn = |a: usize| source.name(a);
    for c in
        [Clause::PremorphismI, Clause::PremorphismII, Clause::PremorphismIII, Clause::PremorphismDomain, Clause::PremorphismCorestriction]
    {
        r.check(c);
    }
    for g in 0..n {
        for h in 0..n {
            if let Some(gh) = source.comp(g, h) {
                let ok = target.pseudoproduct(map[g], map[h]).is_some_and(|x| target.leq(x, map[gh]));
                r.expect(Clause::PremorphismI, ok, || format!("ψ({})*ψ({}) is not below ψ({} {})", sn(g), sn(h), sn(g), sn(h)));
            }
            if source.leq(g, h) {
                r.expect(Clause::PremorphismIII, target.leq(map[g], map[h]), || {
                    format!("{} <= {} but images are not ordered", sn(g), sn(h))
                });
            }
        }
        r.expect(Clause::PremorphismII, target.inv(map[g]) == map[source.inv(g)], || format!("ψ({})^-1 != ψ({}^-1)", sn(g), sn(g)));
        r.expect(Clause::PremorphismDomain, target.leq(target.dom(map[g]), map[source.dom(g)]), || {
            format!("d(ψ({})) is not below ψ(d({}))", sn(g), sn(g))
        });
        for e in source.objects() {
            if source.leq(e, source.ran(g)) {
                let ok =
                    source.corestriction(e, g).is_ok_and(|c| target.meet_objects(map[e], target.ran(map[g])) == Some(target.ran(map[c])));
                r.expect(Clause::PremorphismCorestriction, ok, || format!("r(ψ({}|{})) != ψ({}) ∧ r(ψ({}))", sn(e), sn(g), sn(e), sn(g)));
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brandt() -> InverseSemigroup {
        // Matrix units E12, E21, E11, E22 and zero.
        let units = [(0, 1), (1, 0), (0, 0), (1, 1)];
        let names = ["a", "a^-1", "aa^-1", "a^-1a", "0"];
        let table: Vec<Vec<usize>> = (0..5)
            .map(|x| {
                (0..5)
                    .map(|y| {
                        if x == 4 || y == 4 {
                            return 4;
                        }
                        let ((i, j), (k, l)) = (units[x], units[y]);
                        if j != k {
                            4
                        } else {
                            units.iter().position(|&u| u == (i, l)).unwrap()
                        }
                    })
                    .collect()
            })
            .collect();
        InverseSemigroup::new(names.iter().map(|s| s.to_string()).collect(), &table).unwrap()
    }

    fn semilattice() -> InverseSemigroup {
        InverseSemigroup::from_names(&["1", "e"], &[vec!["1", "e"], vec!["e", "e"]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(semilattice().validate().is_ok());
        assert!(brandt().validate().is_ok());
        let band = InverseSemigroup::unchecked(vec!["x".into(), "y".into()], &[vec![0, 0], vec![1, 1]]).unwrap();
        let report = band.validate();
        assert!(report.failed(Clause::IdempotentsCommute));
    }

    #[test]
    fn natural_order() {
        let b = brandt();
        let (a, ai, z) = (0, 1, 4);
        assert!(b.natural_leq(z, a));
        assert!(!b.natural_leq(a, ai));
        let s = semilattice();
        assert!(s.natural_leq(1, 0));
        assert!(!s.natural_leq(0, 1));
    }

    #[test]
    fn brandt_groupoid() {
        let b = brandt();
        let g = esn_to_groupoid(&b).unwrap();
        assert_eq!(g.comp(0, 1), Some(2));
        assert!(g.is_object(4));
        assert!((0..5).all(|x| g.leq(4, x)));
        assert_eq!(g.objects().count(), 3);
        assert_eq!(esn_to_semigroup(&g).unwrap(), b);
    }

    #[test]
    fn semilattice_groupoid() {
        let g = esn_to_groupoid(&semilattice()).unwrap();
        assert_eq!(g.objects().count(), 2);
        assert!(g.leq(1, 0));
    }

    #[test]
    fn pseudoproduct_semigroup_of_five_arrows() {
        let g = OrderedGroupoid::from_names(
            &["s", "s^-1", "r(s)", "d(s)", "e"],
            &["r(s)", "d(s)", "e"],
            &[("s", "s^-1")],
            &[("s", "s^-1", "r(s)"), ("s^-1", "s", "d(s)")],
            &[("e", "s"), ("e", "s^-1"), ("e", "r(s)"), ("e", "d(s)")],
        )
        .unwrap();
        let s = esn_to_semigroup(&g).unwrap();
        assert_eq!(s.mul(0, 0), 4);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(Some(s.mul(a, b)), g.pseudoproduct(a, b));
                assert_eq!(s.natural_leq(a, b), g.leq(a, b));
            }
        }
        assert_eq!(esn_to_groupoid(&s).unwrap(), g);
    }

    #[test]
    fn premorphisms() {
        let b = brandt();
        let id: Vec<usize> = (0..5).collect();
        assert!(semigroup_premorphism_report(&b, &b, &id).is_ok());
        let constant = vec![0; 5];
        let report = semigroup_premorphism_report(&b, &b, &constant);
        assert!(report.failed(Clause::PremorphismII));
        let g = esn_to_groupoid(&b).unwrap();
        assert!(groupoid_premorphism_report(&g, &g, &id).is_ok());
        // Collapse everything onto the zero object: still a premorphism.
        let collapse = vec![4; 5];
        assert!(semigroup_premorphism_report(&b, &b, &collapse).is_ok());
    }
}
