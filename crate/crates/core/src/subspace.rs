//! Linear subspaces of F_p^n in canonical (reduced row echelon) form.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::linalg;

/// A subspace of `F_p^dim`, stored as the RREF of any spanning set.
///
/// Two subspaces are equal exactly when their canonical bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: PrimeModulus,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl Subspace {
    pub fn zero(p: PrimeModulus, dim: usize) -> Self {
        Subspace { p, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: PrimeModulus, dim: usize) -> Self {
        let rows = (0..dim).map(|i| (0..dim).map(|j| u64::from(i == j)).collect()).collect();
        Subspace { p, dim, rows, pivots: (0..dim).collect() }
    }

    /// Span of coordinate vectors `e_i` for `i` in `coords`.
    pub fn coordinate(p: PrimeModulus, dim: usize, coords: &[usize]) -> Self {
        let vecs = coords.iter().map(|&i| (0..dim).map(|j| u64::from(i == j)).collect()).collect();
        Self::span_reduced(p, dim, vecs)
    }

    /// Canonical basis of the span of `vectors`. Entries are reduced mod p.
    pub fn span<I, V>(p: PrimeModulus, dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[u64]>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            rows.push(v.iter().map(|&x| p.reduce(x)).collect());
        }
        Ok(Self::span_reduced(p, dim, rows))
    }

    pub(crate) fn span_reduced(p: PrimeModulus, dim: usize, rows: Vec<Vec<u64>>) -> Self {
        let (rows, pivots) = linalg::rref(p, rows, dim);
        Subspace { p, dim, rows, pivots }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the subspace itself.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn same_space(&self, other: &Subspace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    fn check_len(&self, v: &[u64]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    /// Removes the components of `v` along the pivot columns. The result is
    /// zero iff `v` lies in the subspace; it is the canonical representative
    /// of `v` modulo the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut out = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = out[piv];
            if c != 0 {
                self.p.axpy(&mut out, self.p.neg(c), row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        v.len() == self.dim && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to the canonical basis.
    pub fn coords(&self, v: &[u64]) -> Result<Vec<u64>> {
        self.check_len(v)?;
        let c: Vec<u64> = self.pivots.iter().map(|&i| v[i]).collect();
        if self.combine(&c) != v {
            return Err(Error::NotContained);
        }
        Ok(c)
    }

    /// The vector with coordinates `c` in the canonical basis.
    pub fn combine(&self, c: &[u64]) -> Vec<u64> {
        debug_assert_eq!(c.len(), self.rows.len());
        let mut out = vec![0; self.dim];
        for (&x, row) in c.iter().zip(&self.rows) {
            self.p.axpy(&mut out, x, row);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.same_space(other).is_ok() && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_space(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::span_reduced(self.p, self.dim, rows))
    }

    /// Sum of many subspaces of the same ambient space.
    pub fn sum_all<'a>(p: PrimeModulus, dim: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Result<Subspace> {
        let mut rows = Vec::new();
        for s in parts {
            if s.dim != dim || s.p != p {
                return Err(Error::DimensionMismatch { expected: dim, found: s.dim });
            }
            rows.extend(s.rows.iter().cloned());
        }
        Ok(Self::span_reduced(p, dim, rows))
    }

    /// Intersection by the Zassenhaus algorithm: reduce `[u | u]` and `[v | 0]`
    /// together; rows whose left half vanishes span `U ∩ V` on the right.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_space(other)?;
        let n = self.dim;
        let mut rows = Vec::with_capacity(self.rank() + other.rank());
        for u in &self.rows {
            let mut r = u.clone();
            r.extend_from_slice(u);
            rows.push(r);
        }
        for v in &other.rows {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(0, n));
            rows.push(r);
        }
        let (reduced, _) = linalg::rref(self.p, rows, 2 * n);
        let inter = reduced.into_iter().filter(|r| r[..n].iter().all(|&x| x == 0)).map(|r| r[n..].to_vec()).collect();
        Ok(Self::span_reduced(self.p, n, inter))
    }

    /// `self` expressed in the canonical-basis coordinates of `outer`.
    pub fn in_coords_of(&self, outer: &Subspace) -> Result<Subspace> {
        let rows = self.rows.iter().map(|r| outer.coords(r)).collect::<Result<Vec<_>>>()?;
        Ok(Self::span_reduced(self.p, outer.rank(), rows))
    }

    /// Inverse of [`Subspace::in_coords_of`]: the subspace of the ambient
    /// space whose `self`-coordinates span `inner`.
    pub fn lift(&self, inner: &Subspace) -> Result<Subspace> {
        if inner.dim != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: inner.dim });
        }
        let rows = inner.rows.iter().map(|c| self.combine(c)).collect();
        Ok(Self::span_reduced(self.p, self.dim, rows))
    }

    /// Columns that carry no pivot; these index a complement of the subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut piv = self.pivots.iter().peekable();
        (0..self.dim)
            .filter(|c| {
                if piv.peek() == Some(&c) {
                    piv.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }
}
