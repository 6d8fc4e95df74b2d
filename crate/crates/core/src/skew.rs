//! Partial skew rings `⊕ A_x δ_x` of groupoid and inverse-semigroup actions,
//! their ordered quotients by `N = ⟨aδ_x - aδ_y : x <= y, a ∈ A_x⟩`, and
//! identities.

use crate::action::POAction;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{Clause, Report};
use crate::semigroup_action::InvSgpAction;
use crate::subspace::Subspace;

/// `⊕_x A_x δ_x` with `(aδ_x)(bδ_y) = α_x(α_{x^{-1}}(a) b) δ_{xy}`.
///
/// Coordinates are blocks in index order; block `x` holds the coordinates
/// of `a` in the canonical basis of `A_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewRing {
    names: Vec<String>,
    objects: Vec<usize>,
    ideals: Vec<Subspace>,
    units: Vec<Option<Vec<u64>>>,
    products: Vec<Option<usize>>,
    strict_order: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    grading: Vec<usize>,
    algebra: Algebra,
}

struct Source<'a> {
    carrier: &'a Algebra,
    names: Vec<String>,
    objects: Vec<usize>,
    ideals: &'a [Subspace],
    maps: &'a [LinMap],
    units: Vec<Option<Vec<u64>>>,
    inverse: Vec<usize>,
    products: Vec<Option<usize>>,
    strict_order: Vec<(usize, usize)>,
}

impl SkewRing {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the piece each basis vector belongs to.
    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    pub fn ideal(&self, x: usize) -> &Subspace {
        &self.ideals[x]
    }

    /// `aδ_x` for `a ∈ A_x`, given in carrier coordinates.
    pub fn element(&self, x: usize, a: &[u64]) -> Result<Vec<u64>> {
        let c = self.ideals[x].coords(a)?;
        let mut out = vec![0; self.dim()];
        out[self.offsets[x]..self.offsets[x] + c.len()].copy_from_slice(&c);
        Ok(out)
    }

    /// `{ aδ_x : a ∈ sub }` for `sub ⊆ A_x`.
    pub fn graded(&self, x: usize, sub: &Subspace) -> Result<Subspace> {
        let rows = sub.basis().iter().map(|a| self.element(x, a)).collect::<Result<Vec<_>>>()?;
        Subspace::span(self.algebra.modulus(), self.dim(), &rows)
    }

    /// The `x` component of `v`, in carrier coordinates.
    pub fn component(&self, v: &[u64], x: usize) -> Vec<u64> {
        let k = self.ideals[x].rank();
        self.ideals[x].combine(&v[self.offsets[x]..self.offsets[x] + k])
    }

    /// Basis-triple associator scan.
    pub fn associativity_report(&self) -> Report {
        let mut r = Report::new();
        r.check(Clause::Associativity);
        for (i, j, k) in self.algebra.associator_witnesses() {
            let name = |b: usize| self.names[self.grading[b]].as_str();
            r.fail(
                Clause::Associativity,
                format!("(b{i} b{j}) b{k} != b{i} (b{j} b{k}) with gradings {}, {}, {}", name(i), name(j), name(k)),
            );
        }
        r
    }

    pub fn is_associative(&self) -> bool {
        self.algebra.associator_witnesses().is_empty()
    }

    /// Product of a piece graded `x` with one graded `y` lies in the `xy`
    /// piece, or is zero when `xy` is undefined.
    pub fn grading_report(&self) -> Report {
        let mut r = Report::new();
        r.check(Clause::Grading);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let (x, y) = (self.grading[i], self.grading[j]);
                let prod = self.algebra.basis_product(i, j);
                let ok = prod.iter().enumerate().all(|(k, &c)| c == 0 || Some(self.grading[k]) == self.products[x * self.names.len() + y]);
                r.expect(Clause::Grading, ok, || format!("δ_{} δ_{} leaves its piece", self.names[x], self.names[y]));
            }
        }
        r
    }

    /// `Σ_e 1_e δ_e` over identity pieces.
    pub fn unit_sum(&self) -> Result<Vec<u64>> {
        let mut out = vec![0; self.dim()];
        for &e in &self.objects {
            let one = self.units[e].as_ref().ok_or_else(|| Error::NotPreunital(self.names[e].clone()))?;
            let v = self.element(e, one)?;
            out = self.algebra.add(&out, &v);
        }
        Ok(out)
    }

    fn from_source(src: Source<'_>) -> Result<SkewRing> {
        let n = src.names.len();
        let p = src.carrier.modulus();
        let mut offsets = Vec::with_capacity(n);
        let mut grading = Vec::new();
        for (x, ideal) in src.ideals.iter().enumerate() {
            offsets.push(grading.len());
            grading.extend(std::iter::repeat_n(x, ideal.rank()));
        }
        let dim = grading.len();
        let mut table = vec![vec![0; dim]; dim * dim];
        for x in 0..n {
            for y in 0..n {
                let Some(z) = src.products[x * n + y] else { continue };
                for (i, a) in src.ideals[x].basis().iter().enumerate() {
                    let back = src.maps[src.inverse[x]].apply(a)?;
                    for (j, b) in src.ideals[y].basis().iter().enumerate() {
                        let moved = src.maps[x].apply(&src.carrier.mul(&back, b)?)?;
                        let c = src.ideals[z].coords(&moved)?;
                        let row = &mut table[(offsets[x] + i) * dim + offsets[y] + j];
                        row[offsets[z]..offsets[z] + c.len()].copy_from_slice(&c);
                    }
                }
            }
        }
        let algebra = Algebra::unchecked(p, dim, table, None)?;
        Ok(SkewRing {
            names: src.names,
            objects: src.objects,
            ideals: src.ideals.to_vec(),
            units: src.units,
            products: src.products,
            strict_order: src.strict_order,
            offsets,
            grading,
            algebra,
        })
    }
}

/// The partial skew groupoid ring of `a`.
pub fn build_skew(a: &POAction) -> Result<SkewRing> {
    let report = a.validate();
    if !report.is_ok() {
        return Err(Error::InvalidAction(report));
    }
    let g = a.groupoid();
    let n = g.len();
    SkewRing::from_source(Source {
        carrier: a.carrier(),
        names: g.names().to_vec(),
        objects: g.objects().collect(),
        ideals: a.ideals(),
        maps: a.maps(),
        units: (0..n).map(|x| a.unit(x).map(<[u64]>::to_vec)).collect(),
        inverse: (0..n).map(|x| g.inv(x)).collect(),
        products: (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| g.comp(x, y)).collect(),
        strict_order: g.strict_pairs(),
    })
}

/// `L = ⊕_s A_s δ_s` for an inverse-semigroup action, with the product
/// `δ_s δ_t = δ_{st}` always defined.
pub fn build_inv_sgp_skew_ring(a: &InvSgpAction) -> Result<SkewRing> {
    let report = a.validate();
    if !report.is_ok() {
        return Err(Error::InvalidAction(report));
    }
    let s = a.semigroup();
    let n = s.len();
    let strict_order = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && s.natural_leq(x, y)).collect();
    SkewRing::from_source(Source {
        carrier: a.carrier(),
        names: s.names().to_vec(),
        objects: s.idempotents().collect(),
        ideals: a.ideals(),
        maps: a.maps(),
        units: (0..n).map(|x| a.unit(x).map(<[u64]>::to_vec)).collect(),
        inverse: (0..n).map(|x| s.inverse(x)).collect(),
        products: (0..n).flat_map(|x| (0..n).map(move |y| Some(s.mul(x, y)))).collect(),
        strict_order,
    })
}

/// A skew ring modulo `N`, with the projection onto the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSkewRing {
    skew: SkewRing,
    n_ideal: Subspace,
    quotient: Algebra,
    projection: LinMap,
}

impl OrderedSkewRing {
    pub fn skew(&self) -> &SkewRing {
        &self.skew
    }

    pub fn n_ideal(&self) -> &Subspace {
        &self.n_ideal
    }

    pub fn quotient(&self) -> &Algebra {
        &self.quotient
    }

    pub fn projection(&self) -> &LinMap {
        &self.projection
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project(&self, v: &[u64]) -> Result<Vec<u64>> {
        self.projection.apply(v)
    }

    /// Whether `u` is a two-sided identity of the quotient.
    pub fn is_identity(&self, u: &[u64]) -> bool {
        let q = &self.quotient;
        (0..q.dim()).all(|i| {
            let b = q.basis_vector(i);
            q.mul(u, &b).is_ok_and(|x| x == b) && q.mul(&b, u).is_ok_and(|x| x == b)
        })
    }
}

/// `L / N`. The skew ring must be associative.
pub fn build_ordered_skew(s: SkewRing) -> Result<OrderedSkewRing> {
    let failures = s.algebra.associator_witnesses().len();
    if failures > 0 {
        return Err(Error::NotAssociative(failures));
    }
    let mut gens = Vec::new();
    for &(x, y) in &s.strict_order {
        for a in s.ideals[x].basis() {
            let lower = s.element(x, a)?;
            let upper = s.element(y, a)?;
            gens.push(s.algebra.sub(&lower, &upper));
        }
    }
    let n_ideal = s.algebra.ideal_closure(&gens)?;
    let (quotient, projection) = s.algebra.quotient(&n_ideal)?;
    Ok(OrderedSkewRing { skew: s, n_ideal, quotient, projection })
}

/// Image of `Σ_e 1_e δ_e` in the quotient.
pub fn skew_unit(o: &OrderedSkewRing) -> Result<Vec<u64>> {
    o.project(&o.skew.unit_sum()?)
}

/// The ordered skew ring of a unital inverse-semigroup action.
pub fn build_inv_sgp_skew(a: &InvSgpAction) -> Result<OrderedSkewRing> {
    a.require_unital()?;
    build_ordered_skew(build_inv_sgp_skew_ring(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::standard_restriction;
    use crate::field::PrimeModulus;
    use crate::groupoid::OrderedGroupoid;

    fn p5() -> PrimeModulus {
        PrimeModulus::new(5).unwrap()
    }

    #[test]
    fn group_algebra_from_trivial_action() {
        let p = p5();
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = OrderedGroupoid::group(vec!["1".into(), "t".into(), "t^2".into()], &table).unwrap();
        let a = POAction::trivial(g, Algebra::pointwise(p, 1)).unwrap();
        let s = build_skew(&a).unwrap();
        assert_eq!(s.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let mut expected = vec![0; 3];
                expected[table[i][j]] = 1;
                assert_eq!(s.algebra().basis_product(i, j), expected);
            }
        }
        assert!(s.grading_report().is_ok());
        let o = build_ordered_skew(s).unwrap();
        assert!(o.n_ideal().is_zero());
        let u = skew_unit(&o).unwrap();
        assert_eq!(u, vec![1, 0, 0]);
        assert!(o.is_identity(&u));
    }

    #[test]
    fn restriction_skew_ring() {
        let p = p5();
        let g = OrderedGroupoid::from_names(
            &["s", "s^-1", "r(s)", "d(s)", "e"],
            &["r(s)", "d(s)", "e"],
            &[("s", "s^-1")],
            &[("s", "s^-1", "r(s)"), ("s^-1", "s", "d(s)")],
            &[("e", "s"), ("e", "s^-1"), ("e", "r(s)"), ("e", "d(s)")],
        )
        .unwrap();
        let c = |ix: &[usize]| Subspace::coordinate(p, 3, ix);
        let (bs, bd, be) = (c(&[1, 2]), c(&[0, 1]), c(&[1]));
        let swap = |f: &Subspace, t: &Subspace| LinMap::from_fn(f.clone(), t.clone(), |v| Ok(vec![v[2], v[1], v[0]])).unwrap();
        let beta = POAction::new(
            g,
            Algebra::pointwise(p, 3),
            vec![bs.clone(), bd.clone(), bs.clone(), bd.clone(), be.clone()],
            vec![swap(&bd, &bs), swap(&bs, &bd), LinMap::identity(bs.clone()), LinMap::identity(bd), LinMap::identity(be)],
        )
        .unwrap();
        let (alpha, _) = standard_restriction(&beta, &c(&[1, 2])).unwrap();
        let s = build_skew(&alpha).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(s.associativity_report().is_ok());
        assert!(s.grading_report().is_ok());
        let o = build_ordered_skew(s).unwrap();
        let u = skew_unit(&o).unwrap();
        assert!(o.is_identity(&u));
    }
}
