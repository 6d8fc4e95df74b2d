//! The Morita context between the ordered skew ring `R` of a unital action
//! and the ordered skew ring `T` of a globalization, computed inside `T`
//! with `A` identified with its image under the embeddings.

use serde::Serialize;

use crate::action::POAction;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::globalization::{verify_semigroup_globalization, Globalization, SemigroupGlobalization};
use crate::linmap::LinMap;
use crate::report::{Clause, Report};
use crate::semigroup_action::InvSgpAction;
use crate::skew::{build_inv_sgp_skew, build_ordered_skew, build_skew, skew_unit, OrderedSkewRing};
use crate::subspace::Subspace;

/// Subspace dimensions recorded by a [`MoritaReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoritaDims {
    pub r: usize,
    pub t: usize,
    pub r_in_t: usize,
    pub t_one_r: usize,
    pub one_r_t: usize,
    pub one_r_t_one_r: usize,
    pub t_one_r_t: usize,
    /// Centers are Morita invariants of unital rings.
    pub r_center: usize,
    pub t_center: usize,
}

/// `R`, `T`, `1_R ∈ T` and the products `T1_R`, `1_RT`, `1_RT1_R`,
/// `T1_RT` (as subspaces of `T`), with the outcome of every check.
#[derive(Debug, Clone)]
pub struct MoritaReport {
    pub r: OrderedSkewRing,
    pub t: OrderedSkewRing,
    /// `R -> T` induced by the embeddings.
    pub r_to_t: LinMap,
    pub one_r: Vec<u64>,
    pub r_in_t: Subspace,
    pub t_one_r: Subspace,
    pub one_r_t: Subspace,
    pub one_r_t_one_r: Subspace,
    pub t_one_r_t: Subspace,
    pub report: Report,
}

impl MoritaReport {
    pub fn is_ok(&self) -> bool {
        self.report.is_ok()
    }

    pub fn dims(&self) -> MoritaDims {
        MoritaDims {
            r: self.r.dim(),
            t: self.t.dim(),
            r_in_t: self.r_in_t.rank(),
            t_one_r: self.t_one_r.rank(),
            one_r_t: self.one_r_t.rank(),
            one_r_t_one_r: self.one_r_t_one_r.rank(),
            t_one_r_t: self.t_one_r_t.rank(),
            r_center: self.r.quotient().center().rank(),
            t_center: self.t.quotient().center().rank(),
        }
    }
}

/// Morita context for a unital P.O. action and a globalization of it.
///
/// Checks `T1_R = Σ_g β_g(A_{d(g)})δ_g`, `1_RT = Σ_g A_{r(g)}δ_g`,
/// `1_RT1_R = R`, `T1_RT = T`, both context laws on basis triples,
/// surjectivity of the two multiplication pairings, idempotency of `R` and
/// `T`, and unitality of the four modules.
pub fn morita_context(a: &POAction, glob: &Globalization) -> Result<MoritaReport> {
    a.require_unital()?;
    if glob.base() != a {
        return Err(Error::Malformed("globalization of a different action".into()));
    }
    let verdict = glob.verify();
    if !verdict.is_ok() {
        return Err(Error::NotAGlobalization(verdict));
    }
    let beta = glob.global();
    let g = a.groupoid();
    let r = build_ordered_skew(build_skew(a)?)?;
    let t = build_ordered_skew(build_skew(beta)?)?;
    let one_r = skew_unit(&r)?;
    let phi = |e: usize| glob.embedding(e).ok_or_else(|| Error::Malformed(format!("no embedding for {}", g.name(e))));
    let lift = |x: usize, v: &[u64]| phi(g.ran(x))?.apply(v);
    let mut from_t = Vec::new();
    let mut from_r = Vec::new();
    for x in g.arrows() {
        from_t.push((x, beta.map(x).image_of(&phi(g.dom(x))?.image())?));
        from_r.push((x, phi(g.ran(x))?.image()));
    }
    context(r, t, lift, one_r, &from_t, &from_r)
}

/// Morita context for a unital inverse-semigroup action and its
/// globalization, with `1_R` the identity of `R` and the sums
/// `T1_R = Σ_s β_s(A_{s^{-1}s})δ_s`, `1_RT = Σ_s A_{ss^{-1}}δ_s`.
pub fn morita_context_inv_sgp(a: &InvSgpAction, glob: &SemigroupGlobalization) -> Result<MoritaReport> {
    a.require_unital()?;
    if glob.base() != a {
        return Err(Error::Malformed("globalization of a different action".into()));
    }
    let verdict = verify_semigroup_globalization(a, glob.global(), glob.embeddings());
    if !verdict.is_ok() {
        return Err(Error::NotAGlobalization(verdict));
    }
    let s = a.semigroup();
    let beta = glob.global();
    let r = build_inv_sgp_skew(a)?;
    let t = build_inv_sgp_skew(beta)?;
    let full = Subspace::full(r.quotient().modulus(), r.dim());
    let one_r = match r.quotient().identity_of(&full)? {
        Some(id) => id.element,
        None => return Err(Error::NotUnital("skew ring".into())),
    };
    let range = |x: usize| s.mul(x, s.inverse(x));
    let domain = |x: usize| s.mul(s.inverse(x), x);
    let phi = |e: usize| glob.embeddings().get(&e).ok_or_else(|| Error::Malformed(format!("no embedding for {}", s.name(e))));
    let lift = |x: usize, v: &[u64]| phi(range(x))?.apply(v);
    let mut from_t = Vec::new();
    let mut from_r = Vec::new();
    for x in 0..s.len() {
        from_t.push((x, beta.map(x).image_of(&phi(domain(x))?.image())?));
        from_r.push((x, phi(range(x))?.image()));
    }
    context(r, t, lift, one_r, &from_t, &from_r)
}

fn context(
    r: OrderedSkewRing,
    t: OrderedSkewRing,
    lift: impl Fn(usize, &[u64]) -> Result<Vec<u64>>,
    one_r_local: Vec<u64>,
    from_t: &[(usize, Subspace)],
    from_r: &[(usize, Subspace)],
) -> Result<MoritaReport> {
    let rs = r.skew();
    let ts = t.skew();
    let tq = t.quotient();
    let p = tq.modulus();
    let t_full = Subspace::full(p, tq.dim());
    let mut rep = Report::new();

    // L(α) -> T on the skew basis, then the induced map on R.
    let mut images = Vec::with_capacity(rs.dim());
    for (i, &x) in rs.grading().iter().enumerate() {
        let a = rs.component(&rs.algebra().basis_vector(i), x);
        images.push(t.project(&ts.element(x, &lift(x, &a)?)?)?);
    }
    let l_to_t = LinMap::from_images(Subspace::full(p, rs.dim()), t_full.clone(), &images)?;
    let well_defined = l_to_t.image_of(r.n_ideal())?.is_zero();
    let free = r.n_ideal().free_columns();
    let r_rows: Vec<Vec<u64>> = free.iter().map(|&i| images[i].clone()).collect();
    let r_to_t = LinMap::from_images(Subspace::full(p, r.dim()), t_full.clone(), &r_rows)?;
    let injective = r_to_t.is_injective();
    let r_in_t = r_to_t.image();
    let one_r = r_to_t.apply(&one_r_local)?;
    let r_unital = r.is_identity(&one_r_local);

    let t_basis: Vec<Vec<u64>> = (0..tq.dim()).map(|i| tq.basis_vector(i)).collect();
    let t_one_r = span(p, tq.dim(), t_basis.iter().map(|b| tq.mul(b, &one_r)))?;
    let one_r_t = span(p, tq.dim(), t_basis.iter().map(|b| tq.mul(&one_r, b)))?;
    let one_r_t_one_r = span(p, tq.dim(), t_basis.iter().map(|b| tq.mul(&one_r, b).and_then(|x| tq.mul(&x, &one_r))))?;
    let t_one_r_t = product(tq, &t_one_r, &t_full)?;

    let graded_sum = |parts: &[(usize, Subspace)]| -> Result<Subspace> {
        let rows = parts
            .iter()
            .map(|(x, sub)| {
                let graded = ts.graded(*x, sub)?;
                graded.basis().iter().map(|v| t.project(v)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(p, tq.dim(), rows.into_iter().flatten())
    };
    let expect_i = graded_sum(from_t)?;
    let expect_ii = graded_sum(from_r)?;
    rep.expect(Clause::MoritaI, t_one_r == expect_i, || {
        format!("T1_R has dim {}, the graded sum has dim {}", t_one_r.rank(), expect_i.rank())
    });
    rep.expect(Clause::MoritaII, one_r_t == expect_ii, || {
        format!("1_RT has dim {}, the graded sum has dim {}", one_r_t.rank(), expect_ii.rank())
    });
    rep.expect(Clause::MoritaIII, well_defined, || "N of R does not map into N of T".into());
    rep.expect(Clause::MoritaIII, injective, || "R does not embed in T".into());
    rep.expect(Clause::MoritaIII, r_unital && tq.is_idempotent(&one_r), || "1_R is not an idempotent identity of R".into());
    rep.expect(Clause::MoritaIII, one_r_t_one_r == r_in_t, || {
        format!("1_RT1_R has dim {}, R has dim {}", one_r_t_one_r.rank(), r_in_t.rank())
    });
    rep.expect(Clause::MoritaIV, t_one_r_t.is_full(), || format!("T1_RT has dim {} of {}", t_one_r_t.rank(), tq.dim()));

    let (m, m_prime) = (&one_r_t, &t_one_r);
    let assoc = |x: &[u64], y: &[u64], z: &[u64]| -> Result<bool> { Ok(tq.mul(&tq.mul(x, y)?, z)? == tq.mul(x, &tq.mul(y, z)?)?) };
    let mut law_i = true;
    let mut law_ii = true;
    for x in m.basis() {
        for xp in m_prime.basis() {
            for y in m.basis() {
                law_i &= assoc(x, xp, y)?;
            }
            for yp in m_prime.basis() {
                law_ii &= assoc(xp, x, yp)?;
            }
        }
    }
    rep.expect(Clause::ContextLaws, law_i, || "φ(x ⊗ x')y != xφ'(x' ⊗ y)".into());
    rep.expect(Clause::ContextLaws, law_ii, || "φ'(x' ⊗ x)y' != x'φ(x ⊗ y')".into());

    let mm = product(tq, m, m_prime)?;
    let mpm = product(tq, m_prime, m)?;
    rep.expect(Clause::PairingsSurjective, mm == r_in_t, || "M ⊗ M' -> R is not onto R".into());
    rep.expect(Clause::PairingsSurjective, mpm.is_full(), || "M' ⊗ M -> T is not onto T".into());
    rep.expect(Clause::IdempotentRings, product(tq, &r_in_t, &r_in_t)? == r_in_t, || "R^2 != R".into());
    rep.expect(Clause::IdempotentRings, product(tq, &t_full, &t_full)?.is_full(), || "T^2 != T".into());
    for (label, lhs, rhs) in [
        ("R M", product(tq, &r_in_t, m)?, m),
        ("M T", product(tq, m, &t_full)?, m),
        ("T M'", product(tq, &t_full, m_prime)?, m_prime),
        ("M' R", product(tq, m_prime, &r_in_t)?, m_prime),
    ] {
        rep.expect(Clause::UnitalModules, &lhs == rhs, || format!("{label} is a proper submodule"));
    }

    Ok(MoritaReport { r, t, r_to_t, one_r, r_in_t, t_one_r, one_r_t, one_r_t_one_r, t_one_r_t, report: rep })
}

fn span(p: crate::field::PrimeModulus, dim: usize, rows: impl Iterator<Item = Result<Vec<u64>>>) -> Result<Subspace> {
    let rows = rows.collect::<Result<Vec<_>>>()?;
    Subspace::span(p, dim, &rows)
}

/// Span of all products `xy`, `x ∈ lhs`, `y ∈ rhs`.
fn product(alg: &Algebra, lhs: &Subspace, rhs: &Subspace) -> Result<Subspace> {
    span(alg.modulus(), alg.dim(), lhs.basis().iter().flat_map(|x| rhs.basis().iter().map(move |y| alg.mul(x, y))))
}
