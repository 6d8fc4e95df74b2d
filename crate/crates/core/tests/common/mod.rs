#![allow(dead_code)]

use std::collections::BTreeSet;

use ordact_core::{esn_to_groupoid, Algebra, InverseSemigroup, LinMap, OrderedGroupoid, POAction, PrimeModulus, Subspace};
use rand::seq::SliceRandom;
use rand::Rng;

/// A partial injection of `{0..n}`: `map[x] = Some(y)` sends `x` to `y`.
pub type PartialMap = Vec<Option<usize>>;

fn compose(s: &PartialMap, t: &PartialMap) -> PartialMap {
    t.iter().map(|x| x.and_then(|y| s[y])).collect()
}

fn invert(s: &PartialMap) -> PartialMap {
    let mut out = vec![None; s.len()];
    for (x, y) in s.iter().enumerate() {
        if let Some(y) = y {
            out[*y] = Some(x);
        }
    }
    out
}

fn random_partial_injection(rng: &mut impl Rng, n: usize) -> PartialMap {
    let mut targets: Vec<usize> = (0..n).collect();
    targets.shuffle(rng);
    (0..n).map(|x| if rng.gen_bool(0.75) { Some(targets[x]) } else { None }).collect()
}

/// Closure of the generators under composition and inversion, or `None`
/// when it has more than `cap` elements.
pub fn close(gens: &[PartialMap], cap: usize) -> Option<Vec<PartialMap>> {
    let mut set: BTreeSet<PartialMap> = gens.iter().cloned().chain(gens.iter().map(invert)).collect();
    loop {
        let current: Vec<PartialMap> = set.iter().cloned().collect();
        let before = set.len();
        for a in &current {
            for b in &current {
                set.insert(compose(a, b));
            }
        }
        if set.len() > cap {
            return None;
        }
        if set.len() == before {
            return Some(current);
        }
    }
}

fn name(m: &PartialMap) -> String {
    m.iter().map(|x| x.map_or('-', |y| char::from(b'0' + y as u8))).collect()
}

/// An inverse semigroup of partial bijections of `{0..n}` with at most
/// `cap` elements, as a table together with its elements.
pub fn random_partial_bijections(rng: &mut impl Rng, n: usize, cap: usize) -> (InverseSemigroup, Vec<PartialMap>) {
    loop {
        let k = rng.gen_range(1..=2);
        let mut gens: Vec<PartialMap> = (0..k).map(|_| random_partial_injection(rng, n)).collect();
        if rng.gen_bool(0.5) {
            // A partial identity, so that restrictions of the generators
            // appear below them.
            gens.push((0..n).map(|x| rng.gen_bool(0.5).then_some(x)).collect());
        }
        let Some(mut elems) = close(&gens, cap) else { continue };
        // Keep only the points some element touches, so that the object
        // ideals of the pushforward action cover the carrier.
        let covered: Vec<usize> = (0..n).filter(|&x| elems.iter().any(|m| m[x].is_some())).collect();
        if covered.is_empty() {
            continue;
        }
        let pos = |x: usize| covered.iter().position(|&c| c == x).unwrap();
        for m in &mut elems {
            *m = covered.iter().map(|&x| m[x].map(pos)).collect();
        }
        let idx = |m: &PartialMap| elems.iter().position(|x| x == m).expect("closed");
        let table: Vec<Vec<usize>> = elems.iter().map(|a| elems.iter().map(|b| idx(&compose(a, b))).collect()).collect();
        let s = InverseSemigroup::new(elems.iter().map(name).collect(), &table).expect("inverse semigroup");
        return (s, elems);
    }
}

/// Coefficient algebras used for the carriers `C^X`.
#[derive(Debug, Clone, Copy)]
pub enum Coefficients {
    Field,
    Split,
    Dual,
}

impl Coefficients {
    pub fn algebra(self, p: PrimeModulus) -> Algebra {
        match self {
            Coefficients::Field => Algebra::pointwise(p, 1),
            Coefficients::Split => Algebra::pointwise(p, 2),
            Coefficients::Dual => {
                Algebra::from_products(p, 2, vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 0]], Some(vec![1, 0])).unwrap()
            }
        }
    }

    /// Ideals of `C`, as coordinate sets.
    pub fn ideals(self) -> Vec<Vec<usize>> {
        match self {
            Coefficients::Field => vec![vec![], vec![0]],
            Coefficients::Split => vec![vec![], vec![0], vec![1], vec![0, 1]],
            Coefficients::Dual => vec![vec![], vec![1], vec![0, 1]],
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Coefficients::Field => 1,
            _ => 2,
        }
    }
}

fn block_subspace(p: PrimeModulus, c: usize, n: usize, points: impl Iterator<Item = usize>) -> Subspace {
    let coords: Vec<usize> = points.flat_map(|x| (0..c).map(move |i| x * c + i)).collect();
    Subspace::coordinate(p, n * c, &coords)
}

/// The global action of a semigroup of partial bijections of `{0..n}` on
/// `C^n` (its inductive groupoid acting by pushforward): `B_e` is the
/// functions supported on the domain of `e`.
pub fn pushforward_action(p: PrimeModulus, coeff: Coefficients, s: &InverseSemigroup, elems: &[PartialMap]) -> POAction {
    let g = esn_to_groupoid(s).unwrap();
    let n = elems[0].len();
    let c = coeff.dim();
    let carrier = coeff.algebra(p).product_ring(n);
    let range = |m: &PartialMap| -> Vec<usize> { m.iter().flatten().copied().collect() };
    let domain = |m: &PartialMap| -> Vec<usize> { (0..n).filter(|&x| m[x].is_some()).collect() };
    let mut ideals = Vec::new();
    let mut maps = Vec::new();
    for m in elems {
        let ran = block_subspace(p, c, n, range(m).into_iter());
        let dom = block_subspace(p, c, n, domain(m).into_iter());
        let map = LinMap::from_fn(dom, ran.clone(), |v| {
            let mut out = vec![0; n * c];
            for (x, y) in m.iter().enumerate() {
                if let Some(y) = y {
                    out[y * c..(y + 1) * c].copy_from_slice(&v[x * c..(x + 1) * c]);
                }
            }
            Ok(out)
        })
        .unwrap();
        ideals.push(ran);
        maps.push(map);
    }
    POAction::new(g, carrier, ideals, maps).unwrap()
}

/// A random ideal of `C^n`: a random ideal of `C` at each point.
pub fn random_ideal(rng: &mut impl Rng, p: PrimeModulus, coeff: Coefficients, n: usize) -> Subspace {
    let choices = coeff.ideals();
    let c = coeff.dim();
    let coords: Vec<usize> = (0..n).flat_map(|x| choices.choose(rng).unwrap().iter().map(move |i| x * c + i).collect::<Vec<_>>()).collect();
    Subspace::coordinate(p, n * c, &coords)
}

/// Trivially ordered groupoid: a disjoint union of cyclic groups, with the
/// trivial global action on `C^n` with `B_e = C^n` per component.
pub fn cyclic_groups_trivially(p: PrimeModulus, coeff: Coefficients, orders: &[usize], n: usize) -> POAction {
    let mut names = Vec::new();
    let mut objects = Vec::new();
    let mut inv = Vec::new();
    let mut triples = Vec::new();
    let mut base = 0;
    for (c, &k) in orders.iter().enumerate() {
        objects.push(base);
        for i in 0..k {
            names.push(format!("g{c}^{i}"));
            inv.push(base + (k - i) % k);
            for j in 0..k {
                triples.push((base + i, base + j, base + (i + j) % k));
            }
        }
        base += k;
    }
    let g = OrderedGroupoid::new(names, &objects, inv, &triples, &[]).unwrap();
    POAction::trivial(g, coeff.algebra(p).product_ring(n)).unwrap()
}

/// Replaces the ideals of a random arrow and its inverse by a random
/// smaller ideal and its image, keeping the result only when it is a valid
/// action.
/// `incl` embeds the carrier of `a` into `C^n`, where the random ideal is
/// drawn.
pub fn random_shrink(rng: &mut impl Rng, a: &POAction, incl: &LinMap, coeff: Coefficients, n: usize) -> Option<POAction> {
    let g = a.groupoid();
    let candidates: Vec<usize> = g.arrows().filter(|&x| !g.is_object(x) && g.arrows().any(|y| y != x && g.leq(x, y))).collect();
    let &x = candidates.choose(rng)?;
    let p = incl.codomain().modulus();
    let j = incl.preimage(&random_ideal(rng, p, coeff, n)).ok()?.intersect(a.ideal(x)).ok()?;
    // Keep what lies below `x`, so the order axiom survives.
    let mut j = j;
    for y in g.arrows().filter(|&y| y != x && g.leq(y, x)) {
        j = j.sum(a.ideal(y)).ok()?;
    }
    let xi = g.inv(x);
    if xi == x {
        j = j.intersect(&a.map(x).image_of(&j).ok()?).ok()?;
    }
    if &j == a.ideal(x) {
        return None;
    }
    let back = a.map(xi).restrict(&j).ok()?;
    let mut ideals = a.ideals().to_vec();
    let mut maps = a.maps().to_vec();
    ideals[x] = j.clone();
    ideals[xi] = back.image();
    maps[xi] = back.with_codomain(ideals[xi].clone()).ok()?;
    maps[x] = maps[xi].inverse().ok()?;
    let out = POAction::assemble(g.clone(), a.carrier().clone(), ideals, maps).ok()?;
    out.validate().is_ok().then_some(out)
}

pub fn random_prime(rng: &mut impl Rng) -> PrimeModulus {
    PrimeModulus::new(*[2u64, 3, 5].choose(rng).unwrap()).unwrap()
}

pub fn random_coefficients(rng: &mut impl Rng) -> Coefficients {
    *[Coefficients::Field, Coefficients::Split, Coefficients::Dual].choose(rng).unwrap()
}

/// A random restriction of a random global action, possibly perturbed so
/// that it is no longer strong. Carrier dimension at most 6, at most 8
/// arrows.
pub fn random_action(rng: &mut impl Rng) -> POAction {
    let p = random_prime(rng);
    let coeff = random_coefficients(rng);
    let n = rng.gen_range(1..=6 / coeff.dim()).min(3);
    let beta = if rng.gen_bool(0.75) {
        let (s, elems) = random_partial_bijections(rng, n, 8);
        pushforward_action(p, coeff, &s, &elems)
    } else {
        let orders: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=4)).collect();
        cyclic_groups_trivially(p, coeff, &orders, n)
    };
    let n = beta.carrier().dim() / coeff.dim();
    loop {
        let ideal = random_ideal(rng, p, coeff, n);
        let Ok((alpha, incl)) = ordact_core::standard_restriction(&beta, &ideal) else { continue };
        if rng.gen_bool(0.8) {
            for _ in 0..50 {
                if let Some(shrunk) = random_shrink(rng, &alpha, &incl, coeff, n) {
                    return shrunk;
                }
            }
        }
        return alpha;
    }
}

/// A random invertible linear map of `F_p^n`.
pub fn random_invertible(rng: &mut impl Rng, p: PrimeModulus, n: usize) -> LinMap {
    let full = Subspace::full(p, n);
    loop {
        let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p.get())).collect()).collect();
        let m = LinMap::new(full.clone(), full.clone(), rows).unwrap();
        if m.is_bijective() {
            return m;
        }
    }
}

/// The action transported along the change of basis `change` of its
/// carrier, with the witness `A_e -> A'_e` given by `change`.
pub fn transport(a: &POAction, change: &LinMap) -> (POAction, ordact_core::EquivalenceWitness) {
    let alg = a.carrier();
    let (p, n) = (alg.modulus(), alg.dim());
    let back = change.inverse().unwrap();
    let mut products = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (back.apply(&alg.basis_vector(i)).unwrap(), back.apply(&alg.basis_vector(j)).unwrap());
            products.push(change.apply(&alg.mul(&x, &y).unwrap()).unwrap());
        }
    }
    let unit = alg.unit().map(|u| change.apply(u).unwrap());
    let moved = Algebra::from_products(p, n, products, unit).unwrap();
    let g = a.groupoid();
    let ideals: Vec<Subspace> = g.arrows().map(|x| change.image_of(a.ideal(x)).unwrap()).collect();
    let maps: Vec<LinMap> = g
        .arrows()
        .map(|x| {
            let m = a.map(x);
            LinMap::from_fn(ideals[g.inv(x)].clone(), ideals[x].clone(), |v| change.apply(&m.apply(&back.apply(v)?)?)).unwrap()
        })
        .collect();
    let witness = ordact_core::EquivalenceWitness::new(
        g.objects().map(|e| (e, change.restrict(a.ideal(e)).unwrap().with_codomain(ideals[e].clone()).unwrap())).collect(),
    );
    (POAction::new(g.clone(), moved, ideals, maps).unwrap(), witness)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank of a list of vectors mod `p`, by plain Gaussian elimination.
pub fn naive_rank(p: u64, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_multiple_of(p)) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the two-sided ideal generated by `gens`: multiply by basis
/// vectors on both sides until the rank stops growing.
pub fn naive_ideal_dim(alg: &Algebra, gens: &[Vec<u64>]) -> usize {
    let p = alg.modulus().get();
    let mut span: Vec<Vec<u64>> = gens.to_vec();
    let mut rank = naive_rank(p, &span);
    loop {
        let mut grown = span.clone();
        for v in &span {
            for i in 0..alg.dim() {
                let b = alg.basis_vector(i);
                grown.push(alg.mul(&b, v).unwrap());
                grown.push(alg.mul(v, &b).unwrap());
            }
        }
        let new_rank = naive_rank(p, &grown);
        if new_rank == rank {
            return rank;
        }
        rank = new_rank;
        span = grown;
    }
}

/// Dimension of `L / N` computed with [`naive_ideal_dim`], given the strict
/// order pairs of the acting structure.
pub fn naive_quotient_dim(skew: &ordact_core::SkewRing, strict: &[(usize, usize)]) -> usize {
    let gens: Vec<Vec<u64>> = strict
        .iter()
        .flat_map(|&(x, y)| {
            skew.ideal(x)
                .basis()
                .iter()
                .map(|a| skew.algebra().sub(&skew.element(x, a).unwrap(), &skew.element(y, a).unwrap()))
                .collect::<Vec<_>>()
        })
        .collect();
    skew.dim() - naive_ideal_dim(skew.algebra(), &gens)
}
