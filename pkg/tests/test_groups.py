"""Group geometry tests: laws, word lengths, balls, growth, weights."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orliczlab.errors import GroupMismatchError, InputError, MemoryCapError, RadiusCapError
from orliczlab.groups import (
    Group,
    polynomial_weight,
    product_weight,
    subexp_log_weight,
    subexp_weight,
    trivial_weight,
    weight_axioms_report,
    weight_eval,
)

coord = st.integers(min_value=-6, max_value=6)


def test_heisenberg_defining_product():
    heis = Group.heisenberg()
    assert heis.multiply((1, 0, 0), (0, 1, 0)) == (1, 1, 1)


@settings(max_examples=150, deadline=None)
@given(a=st.tuples(coord, coord, coord), b=st.tuples(coord, coord, coord), c=st.tuples(coord, coord, coord))
def test_heisenberg_group_axioms(a, b, c):
    heis = Group.heisenberg()
    assert heis.multiply(heis.multiply(a, b), c) == heis.multiply(a, heis.multiply(b, c))
    assert heis.multiply(a, heis.identity()) == a
    assert heis.multiply(a, heis.invert(a)) == heis.identity()
    assert heis.multiply(heis.invert(a), a) == heis.identity()


def test_cyclic_reduction_and_law():
    c5 = Group.cyclic(5)
    assert c5.multiply((3,), (4,)) == (2,)
    assert c5.element((-1,)) == (4,)
    assert c5.invert((2,)) == (3,)


def test_generator_sets_are_symmetric_without_identity():
    for group in (Group.free_abelian(3), Group.heisenberg(), Group.cyclic(5)):
        gens = set(group.generators)
        assert group.identity() not in gens
        assert {group.invert(g) for g in gens} == gens


def test_identity_law_random_elements():
    rng = np.random.default_rng(5)
    for group in (Group.free_abelian(2), Group.heisenberg(), Group.cyclic(7)):
        ball = group.ball(4)
        e = group.identity()
        for _ in range(100):
            g = ball[int(rng.integers(len(ball)))]
            assert group.multiply(g, e) == g and group.multiply(e, g) == g


def test_arity_mismatch_rejected():
    z2 = Group.free_abelian(2)
    with pytest.raises(GroupMismatchError):
        z2.multiply((1, 2), (1, 2, 3))
    with pytest.raises(GroupMismatchError):
        z2.element((1, 2, 3))


def test_word_length_examples():
    z2 = Group.free_abelian(2)
    assert z2.word_length((0, 0)) == 0
    assert z2.word_length((2, 1)) == 3
    heis = Group.heisenberg()
    assert heis.word_length((0, 0, 0)) == 0
    # the commutator x y x^-1 y^-1 reaches the center in 4 letters
    assert heis.word_length((0, 0, 1)) == 4
    assert Group.cyclic(5).word_length((3,)) == 2


def test_word_length_closed_form_matches_bfs():
    for group, radius in (
        (Group.free_abelian(1), 8),
        (Group.free_abelian(2), 8),
        (Group.free_abelian(3), 6),
        (Group.cyclic(9), 4),
    ):
        for g in group.ball(radius):
            assert group.word_length(g) == group.word_length_bfs(g)


def test_word_length_symmetry_and_subadditivity():
    for group, radius in ((Group.free_abelian(2), 6), (Group.heisenberg(), 4)):
        ball = group.ball(radius)
        for g in ball:
            assert group.word_length(g) == group.word_length(group.invert(g))
        for g in ball[::5]:
            for h in ball[::5]:
                gh = group.multiply(g, h)
                assert group.word_length(gh) <= group.word_length(g) + group.word_length(h)


def test_ball_counts_and_ordering():
    z2 = Group.free_abelian(2)
    for n in range(21):
        assert z2.ball_count(n) == 2 * n * n + 2 * n + 1
    ball = z2.ball(1)
    assert ball == [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
    assert ball == sorted(ball)
    # closed under inversion
    assert all(z2.invert(g) in set(ball) for g in ball)


def test_ball_saturates_on_finite_group():
    c5 = Group.cyclic(5)
    assert len(c5.ball(2)) == 5
    assert len(c5.ball(10)) == 5


def test_ball_nesting_strict_below_cap():
    heis = Group.heisenberg()
    counts = [heis.ball_count(n) for n in range(7)]
    assert all(a < b for a, b in zip(counts, counts[1:]))


def test_negative_radius_rejected():
    with pytest.raises(InputError):
        Group.free_abelian(2).ball(-1)


def test_memory_cap_carries_partial_count():
    tight = Group("free_abelian", 2, element_cap=30)
    with pytest.raises(MemoryCapError) as err:
        tight.ball(10)
    assert err.value.partial_count > 30


def test_radius_cap_error_for_unreachable_element():
    heis = Group.heisenberg()
    with pytest.raises(RadiusCapError) as err:
        heis.word_length_bfs((0, 0, 10**6), radius_cap=6)
    assert err.value.radius_cap == 6


def test_growth_orders():
    fit = Group.free_abelian(2).growth_order_estimate(20)
    assert 1.8 <= fit.d_hat <= 2.2
    assert fit.c1 <= fit.c2
    fit = Group.free_abelian(3).growth_order_estimate(14)
    assert 2.7 <= fit.d_hat <= 3.3
    fit = Group.heisenberg().growth_order_estimate(12)
    assert 3.6 <= fit.d_hat <= 4.4


def test_growth_needs_six_radii():
    with pytest.raises(InputError):
        Group.free_abelian(2).growth_order_estimate(4)


def test_weight_values():
    z2 = Group.free_abelian(2)
    w1 = polynomial_weight(z2, 1.0)
    assert weight_eval(w1, (2, 1)) == 4.0
    assert w1(z2.identity()) == 1.0
    sub = subexp_weight(z2, 0.5, 1.0)
    assert sub((2, 1)) == pytest.approx(math.exp(math.sqrt(3.0)), rel=1e-14)
    assert sub(z2.identity()) == 1.0


def test_subexp_log_identity_convention():
    # the defining exponent is 0/0 at tau = 0; the value is pinned to 1
    z2 = Group.free_abelian(2)
    wl = subexp_log_weight(z2, 1.0, 1.0)
    assert wl(z2.identity()) == 1.0
    assert wl((1, 0)) == pytest.approx(math.exp(1.0 / math.log(2.0)), rel=1e-14)


def test_weight_parameter_validation():
    z2 = Group.free_abelian(2)
    with pytest.raises(InputError):
        polynomial_weight(z2, 0.0)
    with pytest.raises(InputError):
        subexp_weight(z2, 1.5, 1.0)
    with pytest.raises(InputError):
        subexp_log_weight(z2, -1.0, 1.0)


def test_weight_axioms_reports():
    z2 = Group.free_abelian(2)
    rep = weight_axioms_report(trivial_weight(z2), 6)
    assert rep.identity_ok and rep.submult_sup == 1.0
    for w in (polynomial_weight(z2, 1.0), polynomial_weight(z2, 2.0), subexp_weight(z2, 0.5, 1.0)):
        rep = weight_axioms_report(w, 10)
        assert rep.identity_ok
        assert rep.inverse_bound <= 1.0 + 1e-12
        assert rep.submult_sup <= 1.0 + 1e-12


def test_product_weight_multiplies():
    z2 = Group.free_abelian(2)
    w = product_weight(polynomial_weight(z2, 1.0), subexp_weight(z2, 0.5, 1.0))
    g = (2, 1)
    assert w(g) == pytest.approx(4.0 * math.exp(math.sqrt(3.0)), rel=1e-14)
    with pytest.raises(GroupMismatchError):
        product_weight(polynomial_weight(z2, 1.0), polynomial_weight(Group.cyclic(5), 1.0))


def test_product_array_matches_scalar_multiply():
    for group in (Group.free_abelian(2), Group.heisenberg(), Group.cyclic(6)):
        ball = group.ball(2)
        X = group.coords_array(ball)
        P = group.product_array(X, X)
        for i, g in enumerate(ball):
            for j, h in enumerate(ball):
                assert tuple(int(v) for v in P[i, j]) == group.multiply(g, h)


def test_tau_array_matches_word_length():
    for group in (Group.free_abelian(3), Group.heisenberg(), Group.cyclic(6)):
        ball = group.ball(3)
        X = group.coords_array(ball)
        taus = group.tau_array(X)
        assert [int(t) for t in taus] == [group.word_length(g) for g in ball]
