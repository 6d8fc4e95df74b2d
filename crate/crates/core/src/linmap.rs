//! Linear maps between subspaces.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::linalg;
use crate::subspace::Subspace;

/// A linear map `domain -> codomain` between subspaces (possibly of
/// different ambient spaces).
///
/// Row `i` of `matrix` holds the codomain-basis coordinates of the image of
/// the `i`-th canonical basis vector of `domain`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinMap {
    domain: Subspace,
    codomain: Subspace,
    matrix: Vec<Vec<u64>>,
}

impl LinMap {
    pub fn new(domain: Subspace, codomain: Subspace, matrix: Vec<Vec<u64>>) -> Result<Self> {
        if domain.modulus() != codomain.modulus() {
            return Err(Error::ModulusMismatch(domain.modulus().get(), codomain.modulus().get()));
        }
        if matrix.len() != domain.rank() {
            return Err(Error::DimensionMismatch { expected: domain.rank(), found: matrix.len() });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != codomain.rank()) {
            return Err(Error::DimensionMismatch { expected: codomain.rank(), found: row.len() });
        }
        Ok(LinMap { domain, codomain, matrix })
    }

    /// Builds the map sending the `i`-th domain basis vector to `images[i]`,
    /// given in codomain ambient coordinates.
    pub fn from_images(domain: Subspace, codomain: Subspace, images: &[Vec<u64>]) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::DimensionMismatch { expected: domain.rank(), found: images.len() });
        }
        let matrix = images.iter().map(|v| codomain.coords(v)).collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, matrix)
    }

    /// Builds a map from a function on ambient vectors, evaluated on the
    /// domain basis.
    pub fn from_fn(domain: Subspace, codomain: Subspace, f: impl Fn(&[u64]) -> Result<Vec<u64>>) -> Result<Self> {
        let images = domain.basis().iter().map(|b| f(b)).collect::<Result<Vec<_>>>()?;
        Self::from_images(domain, codomain, &images)
    }

    pub fn identity(space: Subspace) -> Self {
        let k = space.rank();
        let matrix = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
        LinMap { domain: space.clone(), codomain: space, matrix }
    }

    pub fn zero(domain: Subspace, codomain: Subspace) -> Self {
        let matrix = vec![vec![0; codomain.rank()]; domain.rank()];
        LinMap { domain, codomain, matrix }
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn codomain(&self) -> &Subspace {
        &self.codomain
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    fn p(&self) -> PrimeModulus {
        self.domain.modulus()
    }

    /// Images of the domain basis in codomain ambient coordinates.
    pub fn images(&self) -> Vec<Vec<u64>> {
        self.matrix.iter().map(|c| self.codomain.combine(c)).collect()
    }

    /// Evaluates the map on an ambient vector lying in the domain.
    pub fn apply(&self, v: &[u64]) -> Result<Vec<u64>> {
        let c = self.domain.coords(v)?;
        let out = linalg::vec_mat(self.p(), &c, &self.matrix, self.codomain.rank());
        Ok(self.codomain.combine(&out))
    }

    pub fn image(&self) -> Subspace {
        Subspace::span_reduced(self.p(), self.codomain.ambient_dim(), self.images())
    }

    pub fn image_of(&self, sub: &Subspace) -> Result<Subspace> {
        let imgs = sub.basis().iter().map(|v| self.apply(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span_reduced(self.p(), self.codomain.ambient_dim(), imgs))
    }

    /// `{ v in domain : self(v) in target }`.
    pub fn preimage(&self, target: &Subspace) -> Result<Subspace> {
        if target.ambient_dim() != self.codomain.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.codomain.ambient_dim(), found: target.ambient_dim() });
        }
        let p = self.p();
        let k = self.domain.rank();
        // Kernel of (c, d) -> sum c_i img_i - sum d_j t_j; the c-part pulls back.
        let mut rows = self.images();
        rows.extend(target.basis().iter().map(|t| t.iter().map(|&x| p.neg(x)).collect()));
        let ker = linalg::left_kernel(p, &rows, self.codomain.ambient_dim());
        let pulled = ker.iter().map(|c| self.domain.combine(&c[..k])).collect();
        Ok(Subspace::span_reduced(p, self.domain.ambient_dim(), pulled))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.p(), self.matrix.clone(), self.codomain.rank())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.rank() == self.codomain.rank() && self.is_injective()
    }

    /// Restriction to a subspace of the domain (codomain unchanged).
    pub fn restrict(&self, sub: &Subspace) -> Result<LinMap> {
        if !sub.is_subspace_of(&self.domain) {
            return Err(Error::NotContained);
        }
        let images = sub.basis().iter().map(|v| self.apply(v)).collect::<Result<Vec<_>>>()?;
        LinMap::from_images(sub.clone(), self.codomain.clone(), &images)
    }

    /// Same map with a different codomain that still contains the image.
    pub fn with_codomain(&self, codomain: Subspace) -> Result<LinMap> {
        LinMap::from_images(self.domain.clone(), codomain, &self.images())
    }

    /// `self ∘ inner`; requires the image of `inner` to lie in `self`'s domain.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        let images = inner.images().iter().map(|v| self.apply(v)).collect::<Result<Vec<_>>>()?;
        LinMap::from_images(inner.domain.clone(), self.codomain.clone(), &images)
    }

    /// `self ∘ inner` as partial maps: defined on the vectors that `inner`
    /// sends into `self`'s domain.
    pub fn compose_partial(&self, inner: &LinMap) -> Result<LinMap> {
        let dom = inner.preimage(&self.domain)?;
        self.compose(&inner.restrict(&dom)?)
    }

    /// `self ⊆ other` as partial maps.
    pub fn is_restriction_of(&self, other: &LinMap) -> bool {
        self.domain.is_subspace_of(&other.domain) && self.agrees_on(other, &self.domain)
    }

    pub fn inverse(&self) -> Result<LinMap> {
        if !self.is_bijective() {
            return Err(Error::NotInvertible);
        }
        let inv = linalg::invert(self.p(), &self.matrix).ok_or(Error::NotInvertible)?;
        LinMap::new(self.codomain.clone(), self.domain.clone(), inv)
    }

    /// Whether both maps are defined on `sub` and agree on its basis.
    pub fn agrees_on(&self, other: &LinMap, sub: &Subspace) -> bool {
        sub.basis().iter().all(|v| match (self.apply(v), other.apply(v)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        })
    }

    /// Equality as maps: same domain and same values; codomains may differ.
    pub fn same_values(&self, other: &LinMap) -> bool {
        self.domain == other.domain && self.images() == other.images()
    }

    /// `f(xy) = f(x) f(y)` on all pairs of domain basis vectors.
    pub fn is_multiplicative(&self, dom_alg: &Algebra, cod_alg: &Algebra) -> bool {
        let imgs = self.images();
        let basis = self.domain.basis();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let Ok(xy) = dom_alg.mul(x, y) else { return false };
                let Ok(lhs) = self.apply(&xy) else { return false };
                let Ok(rhs) = cod_alg.mul(&imgs[i], &imgs[j]) else { return false };
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Bijective and multiplicative between the stated subspaces.
    pub fn is_ring_iso(&self, dom_alg: &Algebra, cod_alg: &Algebra) -> bool {
        self.domain.ambient_dim() == dom_alg.dim()
            && self.codomain.ambient_dim() == cod_alg.dim()
            && self.is_bijective()
            && self.is_multiplicative(dom_alg, cod_alg)
    }
}
