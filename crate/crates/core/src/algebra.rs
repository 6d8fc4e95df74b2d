//! Finite-dimensional associative algebras over F_p given by structure
//! constants.

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::linalg;
use crate::linmap::LinMap;
use crate::report::{Clause, Report};
use crate::subspace::Subspace;

/// An algebra on basis `b_0..b_{n-1}` with `b_i b_j = sum_k c[i][j][k] b_k`.
///
/// Products are stored sparsely per basis pair. [`Algebra::new`] and friends
/// reject non-associative tables; [`Algebra::unchecked`] exists for rings
/// whose associativity is itself the question (partial skew rings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    p: PrimeModulus,
    dim: usize,
    table: Vec<Vec<(usize, u64)>>,
    unit: Option<Vec<u64>>,
}

/// Result of [`Algebra::identity_of`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub element: Vec<u64>,
    pub central: bool,
    pub idempotent: bool,
}

impl Identity {
    pub fn is_central_idempotent(&self) -> bool {
        self.central && self.idempotent
    }
}

impl Algebra {
    /// From a dense table `structure[i][j][k]`.
    pub fn new(p: PrimeModulus, dim: usize, structure: &[Vec<Vec<u64>>], unit: Option<Vec<u64>>) -> Result<Self> {
        if structure.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: structure.len() });
        }
        let mut products = Vec::with_capacity(dim * dim);
        for row in structure {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                products.push(v.clone());
            }
        }
        Self::from_products(p, dim, products, unit)
    }

    /// From the dense products `b_i b_j`, listed row-major (`i * dim + j`).
    pub fn from_products(p: PrimeModulus, dim: usize, products: Vec<Vec<u64>>, unit: Option<Vec<u64>>) -> Result<Self> {
        let alg = Self::unchecked(p, dim, products, unit)?;
        let report = alg.validate();
        if !report.is_ok() {
            return Err(Error::NonAssociative(report.violations().len()));
        }
        Ok(alg)
    }

    /// Builds the algebra without the associativity and unit checks.
    pub fn unchecked(p: PrimeModulus, dim: usize, products: Vec<Vec<u64>>, unit: Option<Vec<u64>>) -> Result<Self> {
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: products.len() });
        }
        let mut table = Vec::with_capacity(dim * dim);
        for v in products {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            table.push(
                v.iter()
                    .enumerate()
                    .filter_map(|(k, &c)| {
                        let c = p.reduce(c);
                        (c != 0).then_some((k, c))
                    })
                    .collect(),
            );
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: u.len() });
            }
        }
        let unit = unit.map(|u| u.iter().map(|&x| p.reduce(x)).collect());
        Ok(Algebra { p, dim, table, unit })
    }

    /// `F_p^n` with componentwise product.
    pub fn pointwise(p: PrimeModulus, n: usize) -> Self {
        let mut products = vec![vec![0; n]; n * n];
        for i in 0..n {
            products[i * n + i][i] = 1;
        }
        Self::unchecked(p, n, products, Some(vec![1; n])).expect("shape is consistent")
    }

    /// `M_m(F_p)` on matrix units `E_ab` (basis index `a * m + b`).
    pub fn matrix_units(p: PrimeModulus, m: usize) -> Self {
        let n = m * m;
        let mut products = vec![vec![0; n]; n * n];
        for a in 0..m {
            for b in 0..m {
                for d in 0..m {
                    // E_ab E_bd = E_ad
                    products[(a * m + b) * n + (b * m + d)][a * m + d] = 1;
                }
            }
        }
        let unit = (0..n).map(|i| u64::from(i / m == i % m)).collect();
        Self::unchecked(p, n, products, Some(unit)).expect("shape is consistent")
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&[u64]> {
        self.unit.as_deref()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        (0..self.dim).map(|j| u64::from(i == j)).collect()
    }

    /// Dense structure constants `c[i][j][k]`.
    pub fn dense_structure(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.basis_product(i, j)).collect()).collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<u64> {
        let mut out = vec![0; self.dim];
        for &(k, c) in &self.table[i * self.dim + j] {
            out[k] = c;
        }
        out
    }

    fn check_len(&self, x: &[u64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Ok(())
    }

    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.modulus() != self.p {
            return Err(Error::ModulusMismatch(s.modulus().get(), self.p.get()));
        }
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        Ok(())
    }

    /// Bilinear product of coefficient vectors.
    pub fn mul(&self, x: &[u64], y: &[u64]) -> Result<Vec<u64>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul_raw(x, y))
    }

    pub(crate) fn mul_raw(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = p.mul(a, b);
                for &(k, c) in &self.table[i * self.dim + j] {
                    out[k] = p.add(out[k], p.mul(ab, c));
                }
            }
        }
        out
    }

    /// `x * b_k`.
    pub(crate) fn mul_basis_right(&self, x: &[u64], k: usize) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.dim];
        for (t, &a) in x.iter().enumerate() {
            if a != 0 {
                for &(s, c) in &self.table[t * self.dim + k] {
                    out[s] = p.add(out[s], p.mul(a, c));
                }
            }
        }
        out
    }

    /// `b_i * x`.
    pub(crate) fn mul_basis_left(&self, i: usize, x: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0; self.dim];
        for (t, &a) in x.iter().enumerate() {
            if a != 0 {
                for &(s, c) in &self.table[i * self.dim + t] {
                    out[s] = p.add(out[s], p.mul(a, c));
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.p.add_vec(x, y)
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.p.sub_vec(x, y)
    }

    /// Associativity on every basis triple and the unit laws, if a unit is
    /// declared. Violations carry the failing triple `(i, j, k)`.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        report.check(Clause::Associativity);
        for (i, j, k) in self.associator_witnesses() {
            report.fail(Clause::Associativity, format!("({i},{j},{k})"));
        }
        if let Some(u) = &self.unit {
            report.check(Clause::UnitLaw);
            for i in 0..self.dim {
                let b = self.basis_vector(i);
                if self.mul_raw(u, &b) != b || self.mul_raw(&b, u) != b {
                    report.fail(Clause::UnitLaw, format!("unit fails on basis vector {i}"));
                }
            }
        }
        report
    }

    /// Basis triples `(i, j, k)` with `(b_i b_j) b_k != b_i (b_j b_k)`.
    pub fn associator_witnesses(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul_basis_right(&ij, k);
                    let right = self.mul_basis_left(i, &self.basis_product(j, k));
                    if left != right {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.table[i * self.dim + j] == self.table[j * self.dim + i]))
    }

    pub fn is_central(&self, x: &[u64]) -> bool {
        (0..self.dim).all(|i| self.mul_basis_right(x, i) == self.mul_basis_left(i, x))
    }

    /// `{ x : xy = yx for all y }`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .flat_map(|j| {
                        let (ij, ji) = (self.basis_product(i, j), self.basis_product(j, i));
                        self.p.sub_vec(&ij, &ji)
                    })
                    .collect()
            })
            .collect();
        let kernel = linalg::left_kernel(self.p, &rows, n * n);
        Subspace::span_reduced(self.p, n, kernel)
    }

    pub fn is_idempotent(&self, x: &[u64]) -> bool {
        self.mul_raw(x, x) == x
    }

    /// Smallest two-sided ideal containing `gens`: alternate multiplying the
    /// current basis by every algebra basis vector on both sides and
    /// re-canonicalizing, until the rank stops growing.
    pub fn ideal_closure(&self, gens: &[Vec<u64>]) -> Result<Subspace> {
        let mut current = Subspace::span(self.p, self.dim, gens)?;
        loop {
            let mut rows: Vec<Vec<u64>> = current.basis().to_vec();
            for i in 0..self.dim {
                for x in current.basis() {
                    rows.push(self.mul_basis_left(i, x));
                    rows.push(self.mul_basis_right(x, i));
                }
            }
            let next = Subspace::span_reduced(self.p, self.dim, rows);
            if next.rank() == current.rank() {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Smallest multiplicatively closed subspace containing every part.
    pub fn subring_closure(&self, parts: &[Subspace]) -> Result<Subspace> {
        for s in parts {
            self.check_space(s)?;
        }
        let mut current = Subspace::sum_all(self.p, self.dim, parts)?;
        loop {
            let basis = current.basis();
            let mut rows: Vec<Vec<u64>> = basis.to_vec();
            for x in basis {
                for y in basis {
                    rows.push(self.mul_raw(x, y));
                }
            }
            let next = Subspace::span_reduced(self.p, self.dim, rows);
            if next.rank() == current.rank() {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_multiplicatively_closed(&self, sub: &Subspace) -> bool {
        let b = sub.basis();
        b.iter().all(|x| b.iter().all(|y| sub.contains(&self.mul_raw(x, y))))
    }

    /// The identity of the ring `sub`, when it has one. The zero subspace is
    /// the zero ring, whose identity is `0`.
    pub fn identity_of(&self, sub: &Subspace) -> Result<Option<Identity>> {
        self.check_space(sub)?;
        if !self.is_multiplicatively_closed(sub) {
            return Err(Error::NotMultiplicativelyClosed);
        }
        let basis = sub.basis();
        // Unknown u = sum c_i r_i with u r_j = r_j = r_j u for all j.
        let rows: Vec<Vec<u64>> = basis
            .iter()
            .map(|ri| {
                let mut row = Vec::with_capacity(2 * basis.len() * self.dim);
                for rj in basis {
                    row.extend(self.mul_raw(ri, rj));
                }
                for rj in basis {
                    row.extend(self.mul_raw(rj, ri));
                }
                row
            })
            .collect();
        let target: Vec<u64> = basis.iter().chain(basis).flat_map(|r| r.iter().copied()).collect();
        let Some(c) = linalg::solve_left(self.p, &rows, &target) else {
            return Ok(None);
        };
        let element = sub.combine(&c);
        Ok(Some(Identity { central: self.is_central(&element), idempotent: self.is_idempotent(&element), element }))
    }

    /// Whether `inner` is a two-sided ideal of the ring `outer`.
    pub fn is_ideal(&self, inner: &Subspace, outer: &Subspace) -> Result<bool> {
        self.check_space(inner)?;
        self.check_space(outer)?;
        if !inner.is_subspace_of(outer) {
            return Err(Error::NotContained);
        }
        Ok(outer
            .basis()
            .iter()
            .all(|b| inner.basis().iter().all(|x| inner.contains(&self.mul_raw(b, x)) && inner.contains(&self.mul_raw(x, b)))))
    }

    /// Ideal of the whole algebra.
    pub fn is_two_sided_ideal(&self, inner: &Subspace) -> Result<bool> {
        self.is_ideal(inner, &Subspace::full(self.p, self.dim))
    }

    /// `alg / ideal` on the pivot-free coordinates of the ideal, with the
    /// projection map from the full space.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, LinMap)> {
        if !self.is_two_sided_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let free = ideal.free_columns();
        let m = free.len();
        let project = |v: &[u64]| -> Vec<u64> {
            let r = ideal.reduce(v);
            free.iter().map(|&i| r[i]).collect()
        };
        let mut products = Vec::with_capacity(m * m);
        for &i in &free {
            for &j in &free {
                products.push(project(&self.basis_product(i, j)));
            }
        }
        let unit = self.unit.as_ref().map(|u| project(u));
        let q = Algebra::from_products(self.p, m, products, unit)?;
        let matrix = (0..self.dim).map(|i| project(&self.basis_vector(i))).collect();
        let proj = LinMap::new(Subspace::full(self.p, self.dim), Subspace::full(self.p, m), matrix)?;
        Ok((q, proj))
    }

    /// `A^k` with componentwise product; copy `c` occupies coordinates
    /// `c*n .. (c+1)*n`.
    pub fn product_ring(&self, k: usize) -> Algebra {
        let n = self.dim;
        let big = k * n;
        let mut table = vec![Vec::new(); big * big];
        for c in 0..k {
            for i in 0..n {
                for j in 0..n {
                    table[(c * n + i) * big + (c * n + j)] = self.table[i * n + j].iter().map(|&(t, v)| (c * n + t, v)).collect();
                }
            }
        }
        let unit = self.unit.as_ref().map(|u| u.iter().copied().cycle().take(big).collect());
        Algebra { p: self.p, dim: big, table, unit }
    }

    /// The multiplicatively closed subspace `sub` as an algebra in its own
    /// right (coordinates = canonical basis of `sub`), with the inclusion map.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<(Algebra, LinMap)> {
        self.check_space(sub)?;
        if !self.is_multiplicatively_closed(sub) {
            return Err(Error::NotMultiplicativelyClosed);
        }
        let basis = sub.basis();
        let k = basis.len();
        let mut products = Vec::with_capacity(k * k);
        for x in basis {
            for y in basis {
                products.push(sub.coords(&self.mul_raw(x, y))?);
            }
        }
        let unit = match self.identity_of(sub)? {
            Some(id) => Some(sub.coords(&id.element)?),
            None => None,
        };
        let alg = Algebra::unchecked(self.p, k, products, unit)?;
        let incl = LinMap::from_images(Subspace::full(self.p, k), Subspace::full(self.p, self.dim), basis)?;
        Ok((alg, incl))
    }

    /// The primitive idempotents of `sub` when it is a commutative ring
    /// isomorphic to `F_p^k` (`k = rank`); `None` otherwise, or when `p`
    /// is too large for the eigenvalue scan used to split it.
    pub fn split_idempotents(&self, sub: &Subspace) -> Option<Vec<Vec<u64>>> {
        const MAX_SCAN: u64 = 1 << 12;
        if sub.is_zero() {
            return Some(Vec::new());
        }
        if self.p.get() > MAX_SCAN {
            return None;
        }
        let unit = self.identity_of(sub).ok()??.element;
        let basis = sub.basis();
        if basis.iter().any(|x| basis.iter().any(|y| self.mul_raw(x, y) != self.mul_raw(y, x))) {
            return None;
        }
        let mut done = Vec::new();
        let mut work = vec![(unit, sub.clone())];
        while let Some((e, v)) = work.pop() {
            let k = v.rank();
            if k == 1 {
                done.push(e);
                continue;
            }
            let (f, w) = self.split_once(&v)?;
            let rest = self.sub(&e, &f);
            let rest_space = Subspace::span_reduced(self.p, self.dim, v.basis().iter().map(|x| self.mul_raw(&rest, x)).collect());
            work.push((f, w));
            work.push((rest, rest_space));
        }
        done.sort();
        Some(done)
    }

    /// A proper nonzero generalized eigenspace of some basis multiplication
    /// on `v`, with its identity.
    fn split_once(&self, v: &Subspace) -> Option<(Vec<u64>, Subspace)> {
        let k = v.rank();
        for x in v.basis() {
            let m: Vec<Vec<u64>> = v.basis().iter().map(|b| v.coords(&self.mul_raw(x, b)).expect("closed under products")).collect();
            for lambda in 0..self.p.get() {
                let mut shifted = m.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = self.p.sub(row[i], lambda);
                }
                if linalg::rank(self.p, shifted.clone(), k) == k {
                    continue;
                }
                let mut power = shifted.clone();
                for _ in 1..k {
                    power = linalg::mat_mul(self.p, &power, &shifted, k);
                }
                let ker = linalg::left_kernel(self.p, &power, k);
                if ker.is_empty() || ker.len() == k {
                    continue;
                }
                let w = Subspace::span_reduced(self.p, self.dim, ker.iter().map(|c| v.combine(c)).collect());
                let id = self.identity_of(&w).ok()??;
                return Some((id.element, w));
            }
        }
        None
    }

    /// Whether the central idempotents in `candidates`, closed under
    /// `e ∨ f = e + f - ef`, absorb every basis vector of `sub`.
    pub fn local_units_witness(&self, sub: &Subspace, candidates: &[Vec<u64>]) -> Result<bool> {
        self.check_space(sub)?;
        for c in candidates {
            self.check_len(c)?;
            if !(self.is_central(c) && self.is_idempotent(c)) {
                return Err(Error::NotCentralIdempotent);
            }
        }
        let mut closed: Vec<Vec<u64>> = Vec::new();
        for c in candidates {
            if !closed.contains(c) {
                closed.push(c.clone());
            }
        }
        let mut i = 0;
        while i < closed.len() {
            for j in 0..i {
                let (e, f) = (&closed[i], &closed[j]);
                let join = self.sub(&self.add(e, f), &self.mul_raw(e, f));
                if !closed.contains(&join) {
                    closed.push(join);
                }
            }
            i += 1;
        }
        Ok(sub.basis().iter().all(|v| closed.iter().any(|b| &self.mul_raw(b, v) == v)))
    }
}
