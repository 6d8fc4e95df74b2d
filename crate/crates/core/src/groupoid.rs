//! Finite ordered groupoids.

use crate::error::{Error, Result};
use crate::report::{Clause, Report};

/// A finite groupoid on arrows `0..n` with a partial order.
///
/// Objects are identified with their identity arrows. Composition is stored
/// as a dense partial table: `comp(g, h)` is `g h`, defined when
/// `dom(g) == ran(h)`. The order is kept as a full boolean matrix, closed
/// reflexively and transitively at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGroupoid {
    names: Vec<String>,
    is_object: Vec<bool>,
    inv: Vec<usize>,
    dom: Vec<usize>,
    ran: Vec<usize>,
    comp: Vec<Option<usize>>,
    leq: Vec<bool>,
    valid: bool,
}

impl OrderedGroupoid {
    /// Assembles a groupoid from explicit tables without validating it.
    /// `order` lists generating pairs `(lesser, greater)`.
    pub fn from_tables(
        names: Vec<String>,
        is_object: Vec<bool>,
        inv: Vec<usize>,
        dom: Vec<usize>,
        ran: Vec<usize>,
        comp: Vec<Option<usize>>,
        order: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        for len in [is_object.len(), inv.len(), dom.len(), ran.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, found: len });
            }
        }
        if comp.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: comp.len() });
        }
        let out_of_range =
            inv.iter().chain(&dom).chain(&ran).chain(comp.iter().flatten()).chain(order.iter().flat_map(|(a, b)| [a, b])).any(|&x| x >= n);
        if out_of_range {
            return Err(Error::Malformed("arrow index out of range".into()));
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in order {
            leq[a * n + b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let mut g = OrderedGroupoid { names, is_object, inv, dom, ran, comp, leq, valid: false };
        g.valid = g.validate_groupoid().is_ok() && g.validate_order().is_ok();
        Ok(g)
    }

    /// Builds a groupoid from its composition triples, deriving domains and
    /// ranges from `g^{-1} g` and `g g^{-1}`, and adding the identity laws
    /// `r(g) g = g = g d(g)` that are not listed. Fails unless the result
    /// validates.
    pub fn new(
        names: Vec<String>,
        objects: &[usize],
        inv: Vec<usize>,
        triples: &[(usize, usize, usize)],
        order: &[(usize, usize)],
    ) -> Result<Self> {
        let g = Self::assemble(names, objects, inv, triples, order)?;
        let mut report = g.validate_groupoid();
        report.merge(g.validate_order());
        if !report.is_ok() {
            return Err(Error::InvalidGroupoid(report));
        }
        Ok(g)
    }

    /// Like [`OrderedGroupoid::new`] but keeps invalid input for reporting.
    pub fn assemble(
        names: Vec<String>,
        objects: &[usize],
        inv: Vec<usize>,
        triples: &[(usize, usize, usize)],
        order: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        if inv.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: inv.len() });
        }
        if objects.iter().chain(&inv).any(|&x| x >= n) || triples.iter().any(|&(a, b, c)| a >= n || b >= n || c >= n) {
            return Err(Error::Malformed("arrow index out of range".into()));
        }
        let mut is_object = vec![false; n];
        for &e in objects {
            is_object[e] = true;
        }
        let mut comp = vec![None; n * n];
        for &(a, b, c) in triples {
            if let Some(prev) = comp[a * n + b] {
                if prev != c {
                    return Err(Error::Malformed(format!("conflicting products for ({}, {})", names[a], names[b])));
                }
            }
            comp[a * n + b] = Some(c);
        }
        let mut dom = vec![usize::MAX; n];
        let mut ran = vec![usize::MAX; n];
        for g in 0..n {
            if is_object[g] {
                dom[g] = g;
                ran[g] = g;
                continue;
            }
            ran[g] = comp[g * n + inv[g]].ok_or_else(|| Error::Malformed(format!("missing product {} {}^-1", names[g], names[g])))?;
            dom[g] = comp[inv[g] * n + g].ok_or_else(|| Error::Malformed(format!("missing product {}^-1 {}", names[g], names[g])))?;
        }
        for g in 0..n {
            for (a, b) in [(g, dom[g]), (ran[g], g)] {
                comp[a * n + b].get_or_insert(g);
            }
        }
        Self::from_tables(names, is_object, inv, dom, ran, comp, order)
    }

    /// Convenience constructor from names.
    pub fn from_names(
        arrows: &[&str],
        objects: &[&str],
        inv: &[(&str, &str)],
        triples: &[(&str, &str, &str)],
        order: &[(&str, &str)],
    ) -> Result<Self> {
        let idx = |s: &str| -> Result<usize> { arrows.iter().position(|a| *a == s).ok_or_else(|| Error::UnknownName(s.to_string())) };
        let names: Vec<String> = arrows.iter().map(|s| s.to_string()).collect();
        let object_ids = objects.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>()?;
        let mut inverse: Vec<usize> = (0..arrows.len()).collect();
        for (a, b) in inv {
            let (a, b) = (idx(a)?, idx(b)?);
            inverse[a] = b;
            inverse[b] = a;
        }
        let triples = triples.iter().map(|(a, b, c)| Ok((idx(a)?, idx(b)?, idx(c)?))).collect::<Result<Vec<_>>>()?;
        let order = order.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
        Self::new(names, &object_ids, inverse, &triples, &order)
    }

    /// A group (one object) with the trivial order, from its Cayley table.
    /// Element 0 must be the identity.
    pub fn group(names: Vec<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = names.len();
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n).find(|&h| table[g][h] == 0).ok_or_else(|| Error::Malformed(format!("{} has no inverse", names[g])))?;
        }
        let triples: Vec<_> = (0..n).flat_map(|g| (0..n).map(move |h| (g, h, table[g][h]))).collect();
        Self::new(names, &[0], inv, &triples, &[])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        if self.valid {
            Ok(())
        } else {
            let mut report = self.validate_groupoid();
            report.merge(self.validate_order());
            Err(Error::InvalidGroupoid(report))
        }
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_object(&self, g: usize) -> bool {
        self.is_object[g]
    }

    pub fn objects(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&g| self.is_object[g])
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn dom(&self, g: usize) -> usize {
        self.dom[g]
    }

    pub fn ran(&self, g: usize) -> usize {
        self.ran[g]
    }

    pub fn comp(&self, g: usize, h: usize) -> Option<usize> {
        self.comp[g * self.len() + h]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Strictly comparable pairs `(a, b)` with `a < b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && self.leq(a, b)).collect()
    }

    /// Category and inverse axioms.
    pub fn validate_groupoid(&self) -> Report {
        let mut r = Report::new();
        r.check(Clause::Category);
        let n = self.len();
        let nm = |g: usize| self.names[g].as_str();
        for g in 0..n {
            if self.is_object[g] && (self.inv[g] != g || self.dom[g] != g || self.ran[g] != g) {
                r.fail(Clause::Category, format!("object {} is not an identity arrow", nm(g)));
            }
            if !self.is_object[self.dom[g]] || !self.is_object[self.ran[g]] {
                r.fail(Clause::Category, format!("{} has a non-object domain or range", nm(g)));
                continue;
            }
            let gi = self.inv[g];
            if self.inv[gi] != g || self.dom[gi] != self.ran[g] || self.ran[gi] != self.dom[g] {
                r.fail(Clause::Category, format!("inverse of {} is inconsistent", nm(g)));
            }
            if self.comp(g, gi) != Some(self.ran[g]) {
                r.fail(Clause::Category, format!("{} {}^-1 is not r({})", nm(g), nm(g), nm(g)));
            }
            if self.comp(gi, g) != Some(self.dom[g]) {
                r.fail(Clause::Category, format!("{}^-1 {} is not d({})", nm(g), nm(g), nm(g)));
            }
            if self.comp(self.ran[g], g) != Some(g) || self.comp(g, self.dom[g]) != Some(g) {
                r.fail(Clause::Category, format!("identity law fails at {}", nm(g)));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let composable = self.dom[g] == self.ran[h];
                match self.comp(g, h) {
                    Some(_) if !composable => {
                        r.fail(Clause::Category, format!("{} {} defined but not composable", nm(g), nm(h)));
                    }
                    None if composable => {
                        r.fail(Clause::Category, format!("{} {} composable but undefined", nm(g), nm(h)));
                    }
                    Some(gh) if self.dom[gh] != self.dom[h] || self.ran[gh] != self.ran[g] => {
                        r.fail(Clause::Category, format!("{} {} has wrong endpoints", nm(g), nm(h)));
                    }
                    Some(_) => {}
                    None => {}
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                let Some(gh) = self.comp(g, h) else { continue };
                for k in 0..n {
                    let Some(hk) = self.comp(h, k) else { continue };
                    if self.comp(gh, k) != self.comp(g, hk) {
                        r.fail(Clause::Category, format!("composition not associative on ({}, {}, {})", nm(g), nm(h), nm(k)));
                    }
                }
            }
        }
        r
    }

    /// Partial-order axioms and (OG1)-(OG3*), each failure with its witness.
    pub fn validate_order(&self) -> Report {
        let mut r = Report::new();
        let n = self.len();
        let nm = |g: usize| self.names[g].as_str();
        r.check(Clause::PartialOrder);
        for a in 0..n {
            if !self.leq(a, a) {
                r.fail(Clause::PartialOrder, format!("{} is not <= itself", nm(a)));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    r.fail(Clause::PartialOrder, format!("{} and {} are mutually below", nm(a), nm(b)));
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        r.fail(Clause::PartialOrder, format!("transitivity fails on {}, {}, {}", nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        r.check(Clause::OG1);
        let below: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.leq(a, b)).collect();
        for &(g, h) in &below {
            if !self.leq(self.inv[g], self.inv[h]) {
                r.fail(Clause::OG1, format!("{} <= {} but inverses are not ordered", nm(g), nm(h)));
            }
        }
        r.check(Clause::OG2);
        for &(g, h) in &below {
            for &(k, l) in &below {
                if let (Some(gk), Some(hl)) = (self.comp(g, k), self.comp(h, l)) {
                    if !self.leq(gk, hl) {
                        r.fail(
                            Clause::OG2,
                            format!("{} <= {}, {} <= {} but {} {} !<= {} {}", nm(g), nm(h), nm(k), nm(l), nm(g), nm(k), nm(h), nm(l)),
                        );
                    }
                }
            }
        }
        r.check(Clause::OG3);
        r.check(Clause::OG3Star);
        for g in 0..n {
            for e in self.objects() {
                if self.leq(e, self.dom[g]) {
                    let c = (0..n).filter(|&x| self.leq(x, g) && self.dom[x] == e).count();
                    if c != 1 {
                        r.fail(Clause::OG3, format!("({}|{}) has {c} candidates", nm(g), nm(e)));
                    }
                }
                if self.leq(e, self.ran[g]) {
                    let c = (0..n).filter(|&x| self.leq(x, g) && self.ran[x] == e).count();
                    if c != 1 {
                        r.fail(Clause::OG3Star, format!("({}|{}) has {c} candidates", nm(e), nm(g)));
                    }
                }
            }
        }
        r
    }

    /// `(g|e)`: the unique arrow below `g` with domain `e`.
    pub fn restriction(&self, g: usize, e: usize) -> Result<usize> {
        if !self.is_object[e] || !self.leq(e, self.dom[g]) {
            return Err(Error::NotBelowDomain { arrow: self.names[g].clone(), object: self.names[e].clone() });
        }
        self.unique_below(g, e, |x| self.dom[x])
    }

    /// `(e|g)`: the unique arrow below `g` with range `e`.
    pub fn corestriction(&self, e: usize, g: usize) -> Result<usize> {
        if !self.is_object[e] || !self.leq(e, self.ran[g]) {
            return Err(Error::NotBelowRange { arrow: self.names[g].clone(), object: self.names[e].clone() });
        }
        self.unique_below(g, e, |x| self.ran[x])
    }

    fn unique_below(&self, g: usize, e: usize, end: impl Fn(usize) -> usize) -> Result<usize> {
        let mut hits = (0..self.len()).filter(|&x| self.leq(x, g) && end(x) == e);
        match (hits.next(), hits.next()) {
            (Some(x), None) => Ok(x),
            _ => Err(Error::AmbiguousRestriction { arrow: self.names[g].clone(), object: self.names[e].clone() }),
        }
    }

    /// Greatest common lower bound of two objects among the objects.
    pub fn meet_objects(&self, e: usize, f: usize) -> Option<usize> {
        let lower: Vec<usize> = self.objects().filter(|&z| self.leq(z, e) && self.leq(z, f)).collect();
        lower.iter().copied().find(|&z| lower.iter().all(|&w| self.leq(w, z)))
    }

    pub fn is_inductive(&self) -> bool {
        let objs: Vec<usize> = self.objects().collect();
        objs.iter().all(|&e| objs.iter().all(|&f| self.meet_objects(e, f).is_some()))
    }

    /// `g * h = (g|m)(m|h)` with `m = d(g) ∧ r(h)`, when the meet exists.
    pub fn pseudoproduct(&self, g: usize, h: usize) -> Option<usize> {
        let m = self.meet_objects(self.dom[g], self.ran[h])?;
        let left = self.restriction(g, m).ok()?;
        let right = self.corestriction(m, h).ok()?;
        self.comp(left, right)
    }

    /// Full pseudoproduct table, row-major.
    pub fn pseudoproduct_table(&self) -> Vec<Option<usize>> {
        let n = self.len();
        (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).map(|(g, h)| self.pseudoproduct(g, h)).collect()
    }

    /// Triples where exactly one bracketing of `g * h * k` exists, or both
    /// exist and differ.
    pub fn pseudoassociativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        let pp = self.pseudoproduct_table();
        let at = |a: usize, b: usize| pp[a * n + b];
        let mut out = Vec::new();
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let left = at(g, h).and_then(|x| at(x, k));
                    let right = at(h, k).and_then(|y| at(g, y));
                    if left != right {
                        out.push((g, h, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_pseudoassociative(&self) -> bool {
        self.pseudoassociativity_failures().is_empty()
    }

    /// `{ h : r(h) <= r(g) }`.
    pub fn down_range_set(&self, g: usize) -> Vec<usize> {
        let rg = self.ran[g];
        (0..self.len()).filter(|&h| self.leq(self.ran[h], rg)).collect()
    }

    /// `{ h : g^{-1} * h exists }`.
    pub fn pseudo_composable_set(&self, g: usize) -> Vec<usize> {
        let gi = self.inv[g];
        (0..self.len()).filter(|&h| self.pseudoproduct(gi, h).is_some()).collect()
    }

    /// The same groupoid with arrow `i` renamed to index `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Malformed("not a permutation".into()));
        }
        let mut names = vec![String::new(); n];
        let mut is_object = vec![false; n];
        let mut inv = vec![0; n];
        let mut dom = vec![0; n];
        let mut ran = vec![0; n];
        let mut comp = vec![None; n * n];
        let mut order = Vec::new();
        for g in 0..n {
            let ng = perm[g];
            names[ng] = self.names[g].clone();
            is_object[ng] = self.is_object[g];
            inv[ng] = perm[self.inv[g]];
            dom[ng] = perm[self.dom[g]];
            ran[ng] = perm[self.ran[g]];
            for h in 0..n {
                comp[ng * n + perm[h]] = self.comp(g, h).map(|x| perm[x]);
                if self.leq(g, h) {
                    order.push((ng, perm[h]));
                }
            }
        }
        Self::from_tables(names, is_object, inv, dom, ran, comp, &order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Five arrows s, s^-1, r(s), d(s), e with e below everything.
    pub(crate) fn five_arrow() -> OrderedGroupoid {
        OrderedGroupoid::from_names(
            &["s", "s^-1", "r(s)", "d(s)", "e"],
            &["r(s)", "d(s)", "e"],
            &[("s", "s^-1")],
            &[("s", "s^-1", "r(s)"), ("s^-1", "s", "d(s)")],
            &[("e", "s"), ("e", "s^-1"), ("e", "r(s)"), ("e", "d(s)")],
        )
        .unwrap()
    }

    pub(crate) fn two_chain() -> OrderedGroupoid {
        OrderedGroupoid::from_names(
            &["m0", "m1", "n0", "n1"],
            &["m0", "n0"],
            &[],
            &[("m1", "m1", "m0"), ("n1", "n1", "n0")],
            &[("m0", "n0"), ("m1", "n1")],
        )
        .unwrap()
    }

    fn idx(g: &OrderedGroupoid, s: &str) -> usize {
        g.index_of(s).unwrap()
    }

    #[test]
    fn trivial_groupoid_is_valid() {
        let g = OrderedGroupoid::from_names(&["x"], &["x"], &[], &[], &[]).unwrap();
        assert!(g.validate_groupoid().is_ok());
        assert!(g.is_inductive());
    }

    #[test]
    fn five_arrow_validates() {
        let g = five_arrow();
        assert!(g.validate_groupoid().is_ok());
        assert!(g.validate_order().is_ok());
        assert_eq!(g.dom(idx(&g, "s")), idx(&g, "d(s)"));
        assert_eq!(g.ran(idx(&g, "s")), idx(&g, "r(s)"));
    }

    #[test]
    fn corrupted_inverse_product_is_reported() {
        let g = five_arrow();
        let n = g.len();
        let (s, si, ds) = (idx(&g, "s"), idx(&g, "s^-1"), idx(&g, "d(s)"));
        let mut comp: Vec<Option<usize>> = (0..n * n).map(|i| g.comp(i / n, i % n)).collect();
        comp[s * n + si] = Some(ds);
        let order: Vec<_> = g.strict_pairs();
        let bad = OrderedGroupoid::from_tables(
            g.names().to_vec(),
            (0..n).map(|x| g.is_object(x)).collect(),
            (0..n).map(|x| g.inv(x)).collect(),
            (0..n).map(|x| g.dom(x)).collect(),
            (0..n).map(|x| g.ran(x)).collect(),
            comp,
            &order,
        )
        .unwrap();
        let report = bad.validate_groupoid();
        assert!(report.failed(Clause::Category));
        assert!(!bad.is_valid());
    }

    #[test]
    fn missing_order_pair_breaks_og2() {
        let err = OrderedGroupoid::from_names(
            &["s", "s^-1", "r(s)", "d(s)", "e"],
            &["r(s)", "d(s)", "e"],
            &[("s", "s^-1")],
            &[("s", "s^-1", "r(s)"), ("s^-1", "s", "d(s)")],
            &[("e", "s"), ("e", "s^-1"), ("e", "d(s)")],
        )
        .unwrap_err();
        let Error::InvalidGroupoid(report) = err else { panic!() };
        assert!(report.failed(Clause::OG2));
        assert!(report.violations().iter().any(|v| v.clause == Clause::OG2 && v.detail.contains("e <= s, e <= s^-1")));
    }

    #[test]
    fn two_chain_validates() {
        let g = two_chain();
        assert!(g.validate_order().is_ok());
        assert!(g.is_inductive());
    }

    #[test]
    fn restrictions() {
        let g = two_chain();
        let (m0, m1, n1) = (idx(&g, "m0"), idx(&g, "m1"), idx(&g, "n1"));
        assert_eq!(g.corestriction(m0, n1).unwrap(), m1);
        let h = five_arrow();
        let (s, e, ds, rs) = (idx(&h, "s"), idx(&h, "e"), idx(&h, "d(s)"), idx(&h, "r(s)"));
        assert_eq!(h.restriction(s, ds).unwrap(), s);
        assert_eq!(h.restriction(s, e).unwrap(), e);
        assert!(matches!(h.restriction(s, rs), Err(Error::NotBelowDomain { .. })));
        assert!(matches!(h.corestriction(ds, s), Err(Error::NotBelowRange { .. })));
    }

    #[test]
    fn meets() {
        let g = five_arrow();
        let (rs, ds, e) = (idx(&g, "r(s)"), idx(&g, "d(s)"), idx(&g, "e"));
        assert_eq!(g.meet_objects(e, e), Some(e));
        assert_eq!(g.meet_objects(rs, ds), Some(e));
        let disjoint = OrderedGroupoid::from_names(&["a", "b"], &["a", "b"], &[], &[], &[]).unwrap();
        assert_eq!(disjoint.meet_objects(0, 1), None);
        assert!(!disjoint.is_inductive());
    }

    #[test]
    fn pseudoproducts() {
        let g = five_arrow();
        let (s, si, rs, e) = (idx(&g, "s"), idx(&g, "s^-1"), idx(&g, "r(s)"), idx(&g, "e"));
        assert_eq!(g.pseudoproduct(s, si), Some(rs));
        assert_eq!(g.pseudoproduct(s, e), Some(e));
        let h = two_chain();
        assert_eq!(h.pseudoproduct(idx(&h, "n1"), idx(&h, "m1")), Some(idx(&h, "m0")));
        assert!(g.is_pseudoassociative());
        assert!(h.is_pseudoassociative());
    }

    #[test]
    fn range_sets() {
        let g = five_arrow();
        let (s, rs, e) = (idx(&g, "s"), idx(&g, "r(s)"), idx(&g, "e"));
        assert_eq!(g.down_range_set(s), vec![s, rs, e]);
        assert_eq!(g.down_range_set(e), vec![e]);
        assert_eq!(g.pseudo_composable_set(s), (0..5).collect::<Vec<_>>());
        let h = two_chain();
        assert_eq!(h.pseudo_composable_set(idx(&h, "n1")), (0..4).collect::<Vec<_>>());
    }

    #[test]
    fn relabel_round_trip() {
        let g = five_arrow();
        let perm = [4, 2, 0, 3, 1];
        let r = g.relabel(&perm).unwrap();
        assert!(r.is_valid());
        let mut back = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            back[p] = i;
        }
        assert_eq!(r.relabel(&back).unwrap(), g);
    }
}
