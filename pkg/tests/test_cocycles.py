"""Cocycle tests: constructors, the identity scan, polar splitting, witnesses."""

import math

import numpy as np
import pytest

from orliczlab.cocycles import (
    bilinear_phase,
    coboundary_from_weight,
    cocycle_identity_residual,
    decomposition_witness,
    normalization_residual,
    perturbed,
    polar_decompose,
    product_cocycle,
    sup_norm_estimate,
    trivial_cocycle,
)
from orliczlab.errors import InputError, WitnessSearchError
from orliczlab.groups import (
    Group,
    polynomial_weight,
    product_weight,
    subexp_log_weight,
    subexp_weight,
    trivial_weight,
)

Z2 = Group.free_abelian(2)
PHASE_B = np.array([[0, 0], [1, 0]])


def test_trivial_coboundary_is_one():
    om = coboundary_from_weight(trivial_weight(Z2))
    assert om.value((2, 1), (-1, 3)) == 1.0


def test_coboundary_value_example():
    om = coboundary_from_weight(polynomial_weight(Z2, 1.0))
    # w((2,0)) = 3 over w((1,0))^2 = 4
    assert om.value((1, 0), (1, 0)) == pytest.approx(0.75)


def test_normalization_everywhere():
    oms = [
        coboundary_from_weight(polynomial_weight(Z2, 1.0)),
        bilinear_phase(Z2, PHASE_B, math.pi),
    ]
    for om in oms:
        assert normalization_residual(om, 5) <= 1e-14


def test_bilinear_phase_examples():
    om = bilinear_phase(Z2, PHASE_B, math.pi)
    assert om.value((0, 1), (1, 0)) == pytest.approx(-1.0, abs=1e-12)
    assert om.value((1, 0), (0, 1)) == pytest.approx(1.0, abs=1e-12)
    flat = bilinear_phase(Z2, PHASE_B, 0.0)
    assert flat.value((2, 3), (1, 4)) == 1.0


def test_bilinear_phase_rejects_heisenberg_and_bad_shape():
    with pytest.raises(InputError):
        bilinear_phase(Group.heisenberg(), np.eye(3, dtype=int), 1.0)
    with pytest.raises(InputError):
        bilinear_phase(Z2, np.ones((3, 3), dtype=int), 1.0)


def test_identity_residual_catalog():
    oms = [
        coboundary_from_weight(polynomial_weight(Z2, 1.0)),
        coboundary_from_weight(polynomial_weight(Z2, 2.0)),
        coboundary_from_weight(subexp_weight(Z2, 0.5, 1.0)),
        bilinear_phase(Z2, PHASE_B, math.pi),
    ]
    oms.append(product_cocycle(oms[0], oms[3]))
    for om in oms:
        assert cocycle_identity_residual(om, 3) <= 1e-12, om.label


def test_identity_residual_on_cyclic_phase():
    c5 = Group.cyclic(5)
    om = bilinear_phase(c5, np.array([[1]]), 2.0 * math.pi / 5.0)
    assert cocycle_identity_residual(om, 2) <= 1e-12
    # an incompatible angle breaks the identity on the quotient
    bad = bilinear_phase(c5, np.array([[1]]), 1.0)
    assert cocycle_identity_residual(bad, 2) > 1e-2


def test_perturbed_cocycle_detected():
    base = coboundary_from_weight(polynomial_weight(Z2, 1.0))
    bad = perturbed(base, (1, 0), (0, 1), 1.1)
    assert cocycle_identity_residual(bad, 2) >= 0.05


def test_vanishing_value_is_an_invariant_violation():
    from orliczlab.errors import InvariantViolationError

    base = coboundary_from_weight(polynomial_weight(Z2, 1.0))
    zeroed = perturbed(base, (1, 0), (0, 1), 0.0)
    with pytest.raises(InvariantViolationError):
        zeroed.value((1, 0), (0, 1))


def test_table_matches_pointwise_values():
    om = product_cocycle(
        coboundary_from_weight(polynomial_weight(Z2, 1.0)),
        bilinear_phase(Z2, PHASE_B, math.pi),
    )
    elems = Z2.ball(2)
    table = om.table(elems)
    for i, s in enumerate(elems):
        for j, t in enumerate(elems):
            assert table[i, j] == pytest.approx(om.value(s, t), abs=1e-14)


def test_polar_decomposition_recovers_factors():
    cob = coboundary_from_weight(polynomial_weight(Z2, 1.0))
    phase = bilinear_phase(Z2, PHASE_B, math.pi)
    om = product_cocycle(cob, phase)
    modulus, unit = polar_decompose(om)
    for s in Z2.ball(2):
        for t in Z2.ball(2):
            assert modulus.value(s, t) == pytest.approx(abs(om.value(s, t)))
            assert abs(unit.value(s, t)) == pytest.approx(1.0)
            assert modulus.value(s, t) * unit.value(s, t) == pytest.approx(om.value(s, t))
    assert cocycle_identity_residual(modulus, 2) <= 1e-12
    assert cocycle_identity_residual(unit, 2) <= 1e-12


def test_polar_trivial_directions():
    cob = coboundary_from_weight(polynomial_weight(Z2, 1.0))
    modulus, unit = polar_decompose(cob)
    assert unit.value((2, 1), (1, 1)) == 1.0  # positive cocycle: phase is 1
    phase = bilinear_phase(Z2, PHASE_B, math.pi)
    modulus, unit = polar_decompose(phase)
    assert modulus.value((0, 1), (1, 0)) == pytest.approx(1.0)  # unimodular: modulus is 1


def test_product_of_cocycles_is_cocycle():
    a = coboundary_from_weight(polynomial_weight(Z2, 2.0))
    b = bilinear_phase(Z2, PHASE_B, math.pi / 3.0)
    assert cocycle_identity_residual(product_cocycle(a, b), 3) <= 1e-12


def test_coboundary_of_product_weight_is_product_of_coboundaries():
    w1 = polynomial_weight(Z2, 1.0)
    w2 = subexp_weight(Z2, 0.5, 1.0)
    combined = coboundary_from_weight(product_weight(w1, w2))
    split = product_cocycle(coboundary_from_weight(w1), coboundary_from_weight(w2))
    elems = Z2.ball(3)
    assert np.max(np.abs(combined.table(elems) - split.table(elems))) <= 1e-13


def test_sup_norm_estimates():
    cob = coboundary_from_weight(polynomial_weight(Z2, 1.0))
    assert sup_norm_estimate(cob, 4) <= 1.0 + 1e-15
    phase = bilinear_phase(Z2, PHASE_B, math.pi)
    assert sup_norm_estimate(phase, 4) == pytest.approx(1.0)
    assert sup_norm_estimate(product_cocycle(cob, phase), 4) <= 1.0 + 1e-15


def test_witness_polynomial_exhaustive_b20():
    for beta in (1.0, 2.0, 3.0):
        om = coboundary_from_weight(polynomial_weight(Z2, beta))
        wit = decomposition_witness(om, 20)
        assert wit.max_violation <= 0.0
        assert wit.verified_radius == 20
        # u = v = 2^beta / w as evaluators on elements
        assert wit.u((2, 1)) == pytest.approx(2.0**beta / (4.0**beta))


def test_witness_subexp_derived_exponent():
    om = coboundary_from_weight(subexp_weight(Z2, 0.5, 1.0))
    wit = decomposition_witness(om, 15)
    assert wit.max_violation <= 0.0
    tau = 3.0
    expected = math.exp(-(2.0 - math.sqrt(2.0)) * math.sqrt(tau))
    assert wit.u((2, 1)) == pytest.approx(expected, rel=1e-12)


def test_witness_subexp_log_grid_search():
    om = coboundary_from_weight(subexp_log_weight(Z2, 1.0, 1.0))
    wit = decomposition_witness(om, 10)
    assert wit.max_violation <= 0.0


def test_witness_trivial_on_finite_group():
    om = trivial_cocycle(Group.cyclic(5))
    wit = decomposition_witness(om, 2)
    assert wit.max_violation == pytest.approx(-1.0)


def test_witness_user_supplied_and_failure():
    w1 = polynomial_weight(Z2, 1.0)
    om = coboundary_from_weight(w1)
    wit = decomposition_witness(om, 8, u=lambda g: 2.0 / w1(g), v=lambda g: 2.0 / w1(g))
    assert wit.max_violation <= 0.0
    with pytest.raises(WitnessSearchError) as err:
        decomposition_witness(om, 8, u=lambda g: 0.0, v=lambda g: 0.0)
    assert err.value.violation > 0.0
    assert err.value.worst_pair is not None


def test_witness_through_product_with_phase():
    om = product_cocycle(
        coboundary_from_weight(polynomial_weight(Z2, 1.0)),
        bilinear_phase(Z2, PHASE_B, math.pi),
    )
    wit = decomposition_witness(om, 10)
    assert wit.max_violation <= 0.0
