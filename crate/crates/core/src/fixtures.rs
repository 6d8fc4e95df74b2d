//! Small worked examples over `F_5` used by tests, the command-line corpus
//! and the acceptance suite.

use crate::action::{standard_restriction, POAction};
use crate::algebra::Algebra;
use crate::field::PrimeModulus;
use crate::groupoid::OrderedGroupoid;
use crate::linmap::LinMap;
use crate::semigroup::InverseSemigroup;
use crate::semigroup_action::InvSgpAction;
use crate::subspace::Subspace;

pub fn p5() -> PrimeModulus {
    PrimeModulus::new(5).expect("5 is prime")
}

fn coords(dim: usize, ix: &[usize]) -> Subspace {
    Subspace::coordinate(p5(), dim, ix)
}

/// Builds the map on `from` that permutes coordinates by `perm`
/// (`out[i] = v[perm[i]]`).
fn permutation(from: &Subspace, to: &Subspace, perm: &[usize]) -> LinMap {
    LinMap::from_fn(from.clone(), to.clone(), |v| Ok(perm.iter().map(|&i| v[i]).collect()))
        .expect("permutation maps between coordinate subspaces")
}

/// An arrow `s: d(s) -> r(s)` with its inverse and an object `e` below
/// every arrow. Arrow order: `s, s^-1, r(s), d(s), e`.
pub fn arrow_over_bottom() -> OrderedGroupoid {
    OrderedGroupoid::from_names(
        &["s", "s^-1", "r(s)", "d(s)", "e"],
        &["r(s)", "d(s)", "e"],
        &[("s", "s^-1")],
        &[("s", "s^-1", "r(s)"), ("s^-1", "s", "d(s)")],
        &[("e", "s"), ("e", "s^-1"), ("e", "r(s)"), ("e", "d(s)")],
    )
    .expect("valid ordered groupoid")
}

/// Global action of [`arrow_over_bottom`] on `F_5^3`:
/// `B_{r(s)} = span(e2,e3)`, `B_{d(s)} = span(e1,e2)`, `B_e = span(e2)`,
/// `β_s` swapping `e1` and `e3`.
pub fn swap_global_action() -> POAction {
    let (bs, bd, be) = (coords(3, &[1, 2]), coords(3, &[0, 1]), coords(3, &[1]));
    let swap = [2, 1, 0];
    POAction::new(
        arrow_over_bottom(),
        Algebra::pointwise(p5(), 3),
        vec![bs.clone(), bd.clone(), bs.clone(), bd.clone(), be.clone()],
        vec![permutation(&bd, &bs, &swap), permutation(&bs, &bd, &swap), LinMap::identity(bs), LinMap::identity(bd), LinMap::identity(be)],
    )
    .expect("valid global action")
}

/// `span(e2, e3)` inside the carrier of [`swap_global_action`].
pub fn swap_restriction_ideal() -> Subspace {
    coords(3, &[1, 2])
}

/// Standard restriction of [`swap_global_action`] to `span(e2, e3)`, acting
/// on `F_5^2` (`e2 -> (1,0)`, `e3 -> (0,1)`), with the inclusion into `F_5^3`.
pub fn swap_restriction() -> (POAction, LinMap) {
    standard_restriction(&swap_global_action(), &swap_restriction_ideal()).expect("restriction of a global action")
}

/// Two loops `m1 <= n1` of order two at objects `m0 <= n0`. Arrow order:
/// `m0, m1, n0, n1`.
pub fn nested_loops() -> OrderedGroupoid {
    OrderedGroupoid::from_names(
        &["m0", "m1", "n0", "n1"],
        &["m0", "n0"],
        &[("m1", "m1"), ("n1", "n1")],
        &[("m1", "m1", "m0"), ("n1", "n1", "n0")],
        &[("m0", "n0"), ("m1", "n1")],
    )
    .expect("valid ordered groupoid")
}

/// Unital, non-strong action of [`nested_loops`] on `F_5^4`: every ideal is
/// the whole ring except `A_{m1} = span(e1, e3)`; `α_{n1}` swaps
/// `e1 <-> e3`, `e2 <-> e4` and `α_{m1}` is its restriction.
pub fn nested_loops_action() -> POAction {
    let full = Subspace::full(p5(), 4);
    let small = coords(4, &[0, 2]);
    let swap = [2, 3, 0, 1];
    POAction::new(
        nested_loops(),
        Algebra::pointwise(p5(), 4),
        vec![full.clone(), small.clone(), full.clone(), full.clone()],
        vec![
            LinMap::identity(full.clone()),
            permutation(&small, &small, &swap),
            LinMap::identity(full.clone()),
            permutation(&full, &full, &swap),
        ],
    )
    .expect("valid action")
}

/// Inductive groupoid of partial bijections of `{0, 1, 2}`: the empty map
/// `0`, identities `p` on `{2}`, `q` on `{1}`, `u` on `{0, 2}`, and
/// `t: 2 -> 1` with its inverse. Arrow order: `0, p, q, u, t, t^-1`.
pub fn bijections_with_nested_object() -> OrderedGroupoid {
    OrderedGroupoid::from_names(
        &["0", "p", "q", "u", "t", "t^-1"],
        &["0", "p", "q", "u"],
        &[("t", "t^-1")],
        &[("t", "t^-1", "q"), ("t^-1", "t", "p")],
        &[("0", "p"), ("0", "q"), ("0", "u"), ("0", "t"), ("0", "t^-1"), ("p", "u")],
    )
    .expect("valid ordered groupoid")
}

/// Unital strong action of [`bijections_with_nested_object`] on `F_5^4`:
/// `A_p = span(e4)`, `A_q = span(e2, e3)`, `A_u = span(e1, e4)`,
/// `A_t = span(e3)`, `A_{t^-1} = span(e4)`, `α_t` sending `e4` to `e3`.
/// The minimal construction over it breaks the order axiom at `p <= u`.
pub fn nested_object_action() -> POAction {
    let (zero, p, q, u) = (Subspace::zero(p5(), 4), coords(4, &[3]), coords(4, &[1, 2]), coords(4, &[0, 3]));
    let (t, ti) = (coords(4, &[2]), coords(4, &[3]));
    let swap = [0, 1, 3, 2];
    POAction::new(
        bijections_with_nested_object(),
        Algebra::pointwise(p5(), 4),
        vec![zero.clone(), p.clone(), q.clone(), u.clone(), t.clone(), ti.clone()],
        vec![
            LinMap::identity(zero),
            LinMap::identity(p),
            LinMap::identity(q),
            LinMap::identity(u),
            permutation(&ti, &t, &swap),
            permutation(&t, &ti, &swap),
        ],
    )
    .expect("valid action")
}

/// `F_5[b]/(b^2)` with basis `1, b`.
pub fn dual_numbers() -> Algebra {
    Algebra::from_products(p5(), 2, vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 0]], Some(vec![1, 0])).expect("associative")
}

/// The group of order two, elements `1, t`.
pub fn order_two_group() -> OrderedGroupoid {
    OrderedGroupoid::group(vec!["1".into(), "t".into()], &[vec![0, 1], vec![1, 0]]).expect("group")
}

/// Preunital, non-unital action of the group of order two on the dual
/// numbers: `A_t = span(b)`, `α_t = id`.
pub fn dual_number_action() -> POAction {
    let full = Subspace::full(p5(), 2);
    let nil = coords(2, &[1]);
    POAction::new(order_two_group(), dual_numbers(), vec![full.clone(), nil.clone()], vec![LinMap::identity(full), LinMap::identity(nil)])
        .expect("valid action")
}

/// The nilpotent algebra `span(x, x^2, x^3)` with `x^4 = 0`, no unit.
pub fn truncated_nilpotent() -> Algebra {
    let mut products = vec![vec![0; 3]; 9];
    for i in 0..3 {
        for j in 0..3 - i - 1 {
            products[i * 3 + j][i + j + 1] = 1;
        }
    }
    Algebra::from_products(p5(), 3, products, None).expect("associative")
}

/// Non-unital action of the group of order two on [`truncated_nilpotent`]
/// with `A_t = span(x^2, x^3)` and `α_t` swapping `x^2` and `x^3`. Its
/// skew ring is not associative.
pub fn non_associative_action() -> POAction {
    let full = Subspace::full(p5(), 3);
    let ideal = coords(3, &[1, 2]);
    POAction::new(
        order_two_group(),
        truncated_nilpotent(),
        vec![full.clone(), ideal.clone()],
        vec![LinMap::identity(full), permutation(&ideal, &ideal, &[0, 2, 1])],
    )
    .expect("valid action")
}

/// The two-element semilattice `{1, e}`.
pub fn semilattice() -> InverseSemigroup {
    InverseSemigroup::from_names(&["1", "e"], &[vec!["1", "e"], vec!["e", "e"]]).expect("valid semigroup")
}

/// The symmetric inverse monoid on one point, `{1, 0}`.
pub fn symmetric_inverse_monoid_one() -> InverseSemigroup {
    InverseSemigroup::from_names(&["1", "0"], &[vec!["1", "0"], vec!["0", "0"]]).expect("valid semigroup")
}

/// The Brandt semigroup `B_2 = {a, a^-1, aa^-1, a^-1a, 0}`.
pub fn brandt() -> InverseSemigroup {
    let names = ["a", "a^-1", "aa^-1", "a^-1a", "0"];
    let rows = [
        ["0", "aa^-1", "0", "a", "0"],
        ["a^-1a", "0", "a^-1", "0", "0"],
        ["a", "0", "aa^-1", "0", "0"],
        ["0", "a^-1", "0", "a^-1a", "0"],
        ["0", "0", "0", "0", "0"],
    ];
    let table: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    InverseSemigroup::from_names(&names, &table).expect("valid semigroup")
}

/// `B_2` on `F_5^2` swapping the coordinates: `A_a = A_{aa^-1} = span(e1)`,
/// `A_{a^-1} = A_{a^-1a} = span(e2)`, `A_0 = 0`. Already global.
pub fn brandt_swap_action() -> InvSgpAction {
    let (x, y, z) = (coords(2, &[0]), coords(2, &[1]), Subspace::zero(p5(), 2));
    let swap = [1, 0];
    InvSgpAction::new(
        brandt(),
        Algebra::pointwise(p5(), 2),
        vec![x.clone(), y.clone(), x.clone(), y.clone(), z.clone()],
        vec![permutation(&y, &x, &swap), permutation(&x, &y, &swap), LinMap::identity(x), LinMap::identity(y), LinMap::identity(z)],
    )
    .expect("valid action")
}

/// A genuinely partial unital action of `B_2` on `F_5^3`:
/// `A_{aa^-1} = span(e1,e3)`, `A_{a^-1a} = span(e2,e3)`,
/// `A_a = A_{a^-1} = A_0 = span(e3)`, all maps identities.
pub fn brandt_partial_action() -> InvSgpAction {
    let (top, bottom, common) = (coords(3, &[0, 2]), coords(3, &[1, 2]), coords(3, &[2]));
    InvSgpAction::new(
        brandt(),
        Algebra::pointwise(p5(), 3),
        vec![common.clone(), common.clone(), top.clone(), bottom.clone(), common.clone()],
        vec![
            LinMap::identity(common.clone()),
            LinMap::identity(common.clone()),
            LinMap::identity(top),
            LinMap::identity(bottom),
            LinMap::identity(common),
        ],
    )
    .expect("valid action")
}

/// The group of order two as an inverse semigroup.
pub fn order_two_semigroup() -> InverseSemigroup {
    InverseSemigroup::from_names(&["1", "t"], &[vec!["1", "t"], vec!["t", "1"]]).expect("valid semigroup")
}

/// Semigroup version of [`dual_number_action`]: preunital, not unital.
pub fn dual_number_semigroup_action() -> InvSgpAction {
    let full = Subspace::full(p5(), 2);
    let nil = coords(2, &[1]);
    InvSgpAction::new(
        order_two_semigroup(),
        dual_numbers(),
        vec![full.clone(), nil.clone()],
        vec![LinMap::identity(full), LinMap::identity(nil)],
    )
    .expect("valid action")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        let (alpha, _) = swap_restriction();
        assert!(alpha.validate().is_ok());
        assert!(nested_loops_action().is_unital());
        assert!(!nested_loops_action().is_strong());
        assert!(dual_number_action().is_preunital());
        assert!(!dual_number_action().is_unital());
        assert!(brandt_swap_action().is_global());
        assert!(!brandt_partial_action().is_global());
        assert!(brandt_partial_action().is_unital());
        assert!(!dual_number_semigroup_action().is_unital());
        assert!(non_associative_action().validate().is_ok());
        assert!(nested_object_action().is_unital() && nested_object_action().is_strong());
        for s in [semilattice(), symmetric_inverse_monoid_one(), brandt(), order_two_semigroup()] {
            assert!(s.validate().is_ok());
        }
    }
}
