//! Equivalence of P.O. actions of one groupoid: verification of a given
//! family of object isomorphisms, and a bounded search for one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::action::POAction;
use crate::error::{Error, Result};
use crate::linalg;
use crate::linmap::LinMap;
use crate::report::{Clause, Report};

/// Ring isomorphisms `φ_e: A_e -> C_e`, one per object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceWitness {
    maps: BTreeMap<usize, LinMap>,
}

impl EquivalenceWitness {
    pub fn new(maps: BTreeMap<usize, LinMap>) -> Self {
        EquivalenceWitness { maps }
    }

    pub fn identity(a: &POAction) -> Self {
        let maps = a.groupoid().objects().map(|e| (e, LinMap::identity(a.ideal(e).clone()))).collect();
        EquivalenceWitness { maps }
    }

    pub fn get(&self, e: usize) -> Option<&LinMap> {
        self.maps.get(&e)
    }

    pub fn maps(&self) -> &BTreeMap<usize, LinMap> {
        &self.maps
    }

    /// The witness in the opposite direction.
    pub fn inverse(&self) -> Result<Self> {
        let maps = self.maps.iter().map(|(&e, m)| Ok((e, m.inverse()?))).collect::<Result<_>>()?;
        Ok(EquivalenceWitness { maps })
    }

    /// `next ∘ self`, object by object.
    pub fn then(&self, next: &EquivalenceWitness) -> Result<Self> {
        let maps = self
            .maps
            .iter()
            .map(|(&e, m)| {
                let n = next.maps.get(&e).ok_or(Error::GroupoidMismatch)?;
                Ok((e, n.compose(m)?))
            })
            .collect::<Result<_>>()?;
        Ok(EquivalenceWitness { maps })
    }
}

/// Checks that `w` is an equivalence `a ≃ c`: each `φ_e` a ring
/// isomorphism, `φ_{r(g)}(A_g) = C_g`, and
/// `φ_{r(g)} ∘ α_g = γ_g ∘ φ_{d(g)}` on `A_{g^{-1}}`.
pub fn verify_equivalence(a: &POAction, c: &POAction, w: &EquivalenceWitness) -> Result<Report> {
    if a.groupoid() != c.groupoid() {
        return Err(Error::GroupoidMismatch);
    }
    let g = a.groupoid();
    let mut r = Report::new();
    for cl in [Clause::EquivIso, Clause::EquivIdeals, Clause::EquivIntertwining] {
        r.check(cl);
    }
    for e in g.objects() {
        let ok =
            w.get(e).is_some_and(|m| m.domain() == a.ideal(e) && m.codomain() == c.ideal(e) && m.is_ring_iso(a.carrier(), c.carrier()));
        r.expect(Clause::EquivIso, ok, || format!("φ_{} is not a ring isomorphism A_{} -> C_{}", g.name(e), g.name(e), g.name(e)));
    }
    if !r.is_ok() {
        return Ok(r);
    }
    for x in g.arrows() {
        let (ok_ideal, ok_maps) = arrow_conditions(a, c, w, x);
        r.expect(Clause::EquivIdeals, ok_ideal, || format!("φ(A_{}) != C_{}", g.name(x), g.name(x)));
        r.expect(Clause::EquivIntertwining, ok_maps, || format!("φ ∘ α_{} != γ_{} ∘ φ", g.name(x), g.name(x)));
    }
    Ok(r)
}

fn arrow_conditions(a: &POAction, c: &POAction, w: &EquivalenceWitness, x: usize) -> (bool, bool) {
    let g = a.groupoid();
    let (Some(fr), Some(fd)) = (w.get(g.ran(x)), w.get(g.dom(x))) else {
        return (false, false);
    };
    let ideal = fr.image_of(a.ideal(x)).is_ok_and(|s| &s == c.ideal(x));
    let maps = a.ideal(g.inv(x)).basis().iter().all(|v| {
        let lhs = a.map(x).apply(v).and_then(|u| fr.apply(&u));
        let rhs = fd.apply(v).and_then(|u| c.map(x).apply(&u));
        matches!((lhs, rhs), (Ok(p), Ok(q)) if p == q)
    });
    (ideal, maps)
}

/// Outcome of [`search_equivalence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A verified witness.
    Found(EquivalenceWitness),
    /// An invariant rules equivalence out.
    Disproved(String),
    /// Every candidate in the strategy class was tried; none works.
    Exhausted,
}

/// Looks for an equivalence `a ≃ c`.
///
/// Dimensions of `A_g` and `C_g` are compared first; a mismatch is a proof
/// of non-equivalence. Candidate isomorphisms per object are bijections of
/// primitive idempotents when both ideals split as `F_p^k`, and otherwise
/// all invertible matrices when there are at most `budget` of them.
/// Candidates are then combined by backtracking over objects. Running past
/// `budget` nodes gives [`Error::BudgetExceeded`].
pub fn search_equivalence(a: &POAction, c: &POAction, budget: u64) -> Result<SearchOutcome> {
    if a.groupoid() != c.groupoid() {
        return Err(Error::GroupoidMismatch);
    }
    let g = a.groupoid();
    for x in g.arrows() {
        let (da, dc) = (a.ideal(x).rank(), c.ideal(x).rank());
        if da != dc {
            return Ok(SearchOutcome::Disproved(format!("dim A_{} = {da} but dim C_{} = {dc}", g.name(x), g.name(x))));
        }
    }
    let mut nodes = 0u64;
    let objects: Vec<usize> = g.objects().collect();
    let mut candidates = Vec::with_capacity(objects.len());
    for &e in &objects {
        let list = object_candidates(a, c, e, budget, &mut nodes)?;
        // Loops at e only involve φ_e, so they prune early.
        let loops: Vec<usize> = g.arrows().filter(|&x| g.dom(x) == e && g.ran(x) == e).collect();
        let list: Vec<LinMap> = list
            .into_iter()
            .filter(|m| {
                let w = EquivalenceWitness::new(BTreeMap::from([(e, m.clone())]));
                loops.iter().all(|&x| arrow_conditions(a, c, &w, x) == (true, true))
            })
            .collect();
        if list.is_empty() {
            return Ok(SearchOutcome::Exhausted);
        }
        candidates.push(list);
    }
    let mut chosen: BTreeMap<usize, LinMap> = BTreeMap::new();
    let found = backtrack(a, c, &objects, &candidates, 0, &mut chosen, &mut nodes, budget)?;
    if !found {
        return Ok(SearchOutcome::Exhausted);
    }
    let w = EquivalenceWitness::new(chosen);
    debug_assert!(verify_equivalence(a, c, &w).is_ok_and(|r| r.is_ok()));
    Ok(SearchOutcome::Found(w))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &POAction,
    c: &POAction,
    objects: &[usize],
    candidates: &[Vec<LinMap>],
    depth: usize,
    chosen: &mut BTreeMap<usize, LinMap>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    if depth == objects.len() {
        return Ok(true);
    }
    let g = a.groupoid();
    let e = objects[depth];
    let touching: Vec<usize> = g
        .arrows()
        .filter(|&x| {
            let (r, d) = (g.ran(x), g.dom(x));
            let assigned = |o: usize| o == e || chosen.contains_key(&o);
            (r == e || d == e) && assigned(r) && assigned(d)
        })
        .collect();
    for m in &candidates[depth] {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        chosen.insert(e, m.clone());
        let w = EquivalenceWitness::new(std::mem::take(chosen));
        let ok = touching.iter().all(|&x| arrow_conditions(a, c, &w, x) == (true, true));
        *chosen = w.maps;
        if ok && backtrack(a, c, objects, candidates, depth + 1, chosen, nodes, budget)? {
            return Ok(true);
        }
        chosen.remove(&e);
    }
    Ok(false)
}

fn object_candidates(a: &POAction, c: &POAction, e: usize, budget: u64, nodes: &mut u64) -> Result<Vec<LinMap>> {
    let (src, dst) = (a.ideal(e), c.ideal(e));
    let p = src.modulus();
    let d = src.rank();
    if d == 0 {
        return Ok(vec![LinMap::zero(src.clone(), dst.clone())]);
    }
    let mut tick = || -> Result<()> {
        *nodes += 1;
        if *nodes > budget {
            Err(Error::BudgetExceeded(budget))
        } else {
            Ok(())
        }
    };
    if let (Some(pa), Some(pc)) = (a.carrier().split_idempotents(src), c.carrier().split_idempotents(dst)) {
        if pa.len() == d && pc.len() == d {
            // Express the canonical basis of A_e in the idempotent basis.
            let coeffs =
                src.basis().iter().map(|b| linalg::solve_left(p, &pa, b).ok_or(Error::NotInvertible)).collect::<Result<Vec<_>>>()?;
            let mut out = Vec::new();
            let mut perm: Vec<usize> = (0..d).collect();
            loop {
                tick()?;
                let images: Vec<Vec<u64>> = coeffs
                    .iter()
                    .map(|cf| {
                        let mut v = vec![0; dst.ambient_dim()];
                        for (i, &x) in cf.iter().enumerate() {
                            p.axpy(&mut v, x, &pc[perm[i]]);
                        }
                        v
                    })
                    .collect();
                out.push(LinMap::from_images(src.clone(), dst.clone(), &images)?);
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            return Ok(out);
        }
    }
    let total = (p.get() as f64).powi((d * d) as i32);
    if total > budget as f64 {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut out = Vec::new();
    let mut entries = vec![0u64; d * d];
    loop {
        tick()?;
        let matrix: Vec<Vec<u64>> = entries.chunks(d).map(<[u64]>::to_vec).collect();
        let m = LinMap::new(src.clone(), dst.clone(), matrix)?;
        if m.is_ring_iso(a.carrier(), c.carrier()) {
            out.push(m);
        }
        if !odometer(&mut entries, p.get()) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn odometer(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::PrimeModulus;
    use crate::groupoid::OrderedGroupoid;
    use crate::subspace::Subspace;

    fn p5() -> PrimeModulus {
        PrimeModulus::new(5).unwrap()
    }

    /// Z/2 acting on F5^2 by swapping coordinates.
    fn swap(carrier_dim: usize) -> POAction {
        let p = p5();
        let g = OrderedGroupoid::group(vec!["1".into(), "t".into()], &[vec![0, 1], vec![1, 0]]).unwrap();
        let full = Subspace::full(p, carrier_dim);
        let t = LinMap::from_fn(full.clone(), full.clone(), |v| {
            let mut w = v.to_vec();
            w.reverse();
            Ok(w)
        })
        .unwrap();
        POAction::new(g, Algebra::pointwise(p, carrier_dim), vec![full.clone(); 2], vec![LinMap::identity(full), t]).unwrap()
    }

    #[test]
    fn identity_witness_verifies() {
        let a = swap(2);
        let w = EquivalenceWitness::identity(&a);
        assert!(verify_equivalence(&a, &a, &w).unwrap().is_ok());
        let back = w.inverse().unwrap();
        assert_eq!(back.then(&w).unwrap(), w);
    }

    #[test]
    fn search_finds_self_equivalence() {
        let a = swap(2);
        let SearchOutcome::Found(w) = search_equivalence(&a, &a, 10_000).unwrap() else { panic!() };
        assert!(verify_equivalence(&a, &a, &w).unwrap().is_ok());
    }

    #[test]
    fn trivial_and_swap_actions_differ() {
        let a = swap(2);
        let g = a.groupoid().clone();
        let triv = POAction::trivial(g, Algebra::pointwise(p5(), 2)).unwrap();
        assert_eq!(search_equivalence(&a, &triv, 10_000).unwrap(), SearchOutcome::Exhausted);
    }

    #[test]
    fn dimension_mismatch_disproves() {
        let a = swap(2);
        let b = swap(4);
        assert!(matches!(search_equivalence(&a, &b, 10).unwrap(), SearchOutcome::Disproved(_)));
    }

    #[test]
    fn split_idempotents_of_pointwise_algebra() {
        let p = p5();
        let alg = Algebra::pointwise(p, 3);
        let sub = Subspace::span(p, 3, [[1u64, 1, 0], [0, 0, 1]]).unwrap();
        let ids = alg.split_idempotents(&sub).unwrap();
        assert_eq!(ids, vec![vec![0, 0, 1], vec![1, 1, 0]]);
        let dual = Algebra::from_products(p, 2, vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 0]], Some(vec![1, 0])).unwrap();
        assert!(dual.split_idempotents(&Subspace::full(p, 2)).is_none());
    }
}
