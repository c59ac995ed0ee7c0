"""Orlicz-space tests: modulars, both norms, Hoelder, weighted norms, membership."""

import math

import numpy as np
import pytest

from orliczlab.errors import GroupMismatchError, InputError, MethodDisagreementError
from orliczlab.groups import Group, polynomial_weight, trivial_weight
from orliczlab.space import (
    OrliczVector,
    holder_gap,
    luxemburg_batch,
    luxemburg_norm,
    membership_diagnostic,
    modular,
    norm_report,
    orlicz_norm,
    random_vector,
    weighted_norm,
)
from orliczlab.young import ComplementaryPair, catalog_names, catalog_pair

Z2 = Group.free_abelian(2)
C7 = Group.cyclic(7)
P2 = catalog_pair("pnorm:2")


def test_vector_prunes_exact_zeros_and_orders_support():
    f = OrliczVector(Z2, {(1, 0): 0.0, (0, 1): 2.0, (-1, 0): 1.0})
    assert f.support == ((-1, 0), (0, 1))
    assert f.amplitude((1, 0)) == 0.0
    assert len(f) == 2


def test_vector_algebra_and_pairing():
    f = OrliczVector(Z2, {(0, 0): 1.0 + 1.0j, (1, 0): 2.0})
    g = OrliczVector(Z2, {(0, 0): 3.0, (2, 0): -1.0})
    assert (f + g).amplitude((0, 0)) == 4.0 + 1.0j
    assert (f - f).support == ()
    # bilinear pairing, no conjugation: (1+i) * 3
    assert f.pairing(g) == pytest.approx(3.0 + 3.0j)
    rev = f.reverse()
    assert rev.amplitude((-1, 0)) == 2.0
    with pytest.raises(GroupMismatchError):
        f.pairing(OrliczVector(C7, {(1,): 1.0}))


def test_modular_examples():
    f = OrliczVector(Z2, {(0, 0): 1.0, (1, 0): 1.0})
    assert modular(P2.phi, f) == pytest.approx(1.0)
    assert modular(P2.phi, OrliczVector.zero(Z2)) == 0.0
    fe = OrliczVector.delta(Z2, (0, 0), 1.0)
    assert modular(catalog_pair("expm").phi, fe) == pytest.approx(math.e - 2.0)


def test_modular_saturates_to_inf():
    huge = OrliczVector.delta(Z2, (0, 0), 1e6)
    assert modular(catalog_pair("expm").phi, huge) == math.inf


def test_luxemburg_closed_forms():
    fe = OrliczVector.delta(Z2, (0, 0), 1.0)
    assert luxemburg_norm(P2.phi, fe) == pytest.approx(2.0**-0.5, abs=1e-11)
    f34 = OrliczVector(Z2, {(0, 0): 3.0, (1, 0): 4.0})
    assert luxemburg_norm(P2.phi, f34) == pytest.approx(5.0 / math.sqrt(2.0), abs=1e-11)
    assert luxemburg_norm(P2.phi, OrliczVector.zero(Z2)) == 0.0


def test_luxemburg_matches_lp_closed_form_all_p():
    rng = np.random.default_rng(8)
    for p in (1.5, 2.0, 3.0):
        pair = catalog_pair(f"pnorm:{p:g}")
        vecs = [random_vector(Z2, rng, 5, 7) for _ in range(50)]
        A = np.zeros((len(vecs), max(len(v) for v in vecs)))
        for i, v in enumerate(vecs):
            a = v.abs_amplitudes()
            A[i, : a.size] = a
        lux = luxemburg_batch(pair.phi, A)
        lp = (A**p).sum(axis=1) ** (1.0 / p)
        assert np.max(np.abs(lux - lp * p ** (-1.0 / p))) < 1e-8


def test_orlicz_closed_forms():
    fe = OrliczVector.delta(Z2, (0, 0), 1.0)
    assert orlicz_norm(P2, fe) == pytest.approx(math.sqrt(2.0), abs=1e-10)
    f34 = OrliczVector(Z2, {(0, 0): 3.0, (1, 0): 4.0})
    assert orlicz_norm(P2, f34) == pytest.approx(5.0 * math.sqrt(2.0), abs=1e-9)
    assert orlicz_norm(P2, OrliczVector.zero(Z2)) == 0.0


def test_norm_report_sandwich_invariant():
    rng = np.random.default_rng(21)
    for name in catalog_names():
        pair = catalog_pair(name)
        for _ in range(20):
            f = random_vector(C7, rng, 3, 5)
            rep = norm_report(pair, f)
            assert rep.luxemburg <= rep.orlicz + 1e-9
            assert rep.orlicz <= 2.0 * rep.luxemburg + 1e-9
            assert rep.method_agreement <= 1e-5


def test_unit_ball_characterization():
    rng = np.random.default_rng(3)
    pair = catalog_pair("pnorm:3")
    for _ in range(30):
        f = random_vector(C7, rng, 3, 5)
        if not f:
            continue
        n = luxemburg_norm(pair.phi, f)
        for c in (0.5, 1.0, 1.7):
            fc = f.scale(c / n)
            inside_norm = luxemburg_norm(pair.phi, fc) <= 1.0 + 1e-9
            inside_modular = modular(pair.phi, fc) <= 1.0 + 1e-9
            assert inside_norm == inside_modular


def test_homogeneity_and_triangle():
    rng = np.random.default_rng(4)
    pair = catalog_pair("xlog")
    for _ in range(20):
        f = random_vector(Z2, rng, 4, 6)
        g = random_vector(Z2, rng, 4, 6)
        c = 0.7 - 0.4j
        assert luxemburg_norm(pair.phi, f.scale(c)) == pytest.approx(
            abs(c) * luxemburg_norm(pair.phi, f), rel=1e-9, abs=1e-12
        )
        assert orlicz_norm(pair, f.scale(c)) == pytest.approx(
            abs(c) * orlicz_norm(pair, f), rel=1e-9, abs=1e-12
        )
        assert luxemburg_norm(pair.phi, f + g) <= (
            luxemburg_norm(pair.phi, f) + luxemburg_norm(pair.phi, g) + 1e-9
        )
        assert orlicz_norm(pair, f + g) <= orlicz_norm(pair, f) + orlicz_norm(pair, g) + 1e-9


def test_dual_sampling_lower_bound():
    rng = np.random.default_rng(6)
    for name in ("pnorm:1.5", "expm"):
        pair = catalog_pair(name)
        f = random_vector(C7, rng, 3, 6)
        a = f.abs_amplitudes()
        V = np.abs(rng.uniform(-1.0, 1.0, size=(300, a.size)))
        nv = luxemburg_batch(pair.psi, V)
        live = nv > 0
        pairings = (V[live] / nv[live][:, None]) @ a
        assert float(np.max(pairings)) <= orlicz_norm(pair, f) + 1e-9


def test_method_disagreement_is_a_hard_error():
    # A deliberately inconsistent "pair": psi is NOT the conjugate of phi,
    # so the stationarity route disagrees with the minimization route.
    lying = ComplementaryPair(
        catalog_pair("pnorm:2").phi, catalog_pair("pnorm:3").psi, "closed_form"
    )
    f = OrliczVector(Z2, {(0, 0): 3.0, (1, 0): 4.0})
    with pytest.raises(MethodDisagreementError):
        orlicz_norm(lying, f)


def test_holder_gap_cases():
    fd = OrliczVector.delta(C7, (1,))
    # Cauchy-Schwarz equality case: bound = 2^-1/2 * 2^1/2 = 1, pairing = 1
    assert holder_gap(P2, fd, fd) == pytest.approx(0.0, abs=1e-10)
    assert holder_gap(P2, fd, OrliczVector.zero(C7)) == 0.0
    rng = np.random.default_rng(9)
    for name in catalog_names():
        pair = catalog_pair(name)
        for _ in range(5):
            f = random_vector(C7, rng, 3, 5)
            g = random_vector(C7, rng, 3, 5)
            assert holder_gap(pair, f, g) >= -1e-9


def test_weighted_norm():
    w1 = polynomial_weight(Z2, 1.0)
    f = OrliczVector.delta(Z2, (2, 1))
    assert weighted_norm(P2, w1, f) == pytest.approx(4.0 * math.sqrt(2.0), rel=1e-10)
    assert weighted_norm(P2, w1, f, kind="luxemburg") == pytest.approx(
        4.0 / math.sqrt(2.0), rel=1e-10
    )
    g = OrliczVector(Z2, {(0, 1): 1.5, (1, 1): -2.0j})
    assert weighted_norm(P2, trivial_weight(Z2), g) == pytest.approx(orlicz_norm(P2, g))
    with pytest.raises(InputError):
        weighted_norm(P2, w1, f, kind="bogus")


def test_membership_diagnostic_verdicts():
    psi = P2.psi
    w2 = polynomial_weight(Z2, 2.0)
    rep = membership_diagnostic(Z2, psi, lambda g: 1.0 / w2(g), (1.0, 10.0), (5, 10, 20, 40))
    assert all(v == "converging" for v in rep.verdicts.values())
    w04 = polynomial_weight(Z2, 0.4)
    rep = membership_diagnostic(Z2, psi, lambda g: 1.0 / w04(g), (1.0,), (5, 10, 20, 40))
    assert rep.verdicts[1.0] == "diverging"
    c5 = Group.cyclic(5)
    rep = membership_diagnostic(
        c5, psi, lambda g: 1.0 / polynomial_weight(c5, 1.0)(g), (1.0, 10.0), (1, 2, 3, 4)
    )
    assert all(v == "converging" for v in rep.verdicts.values())
    # partial sums are recorded per (alpha, radius)
    assert len(rep.rows) == 8


def test_membership_radii_must_increase():
    with pytest.raises(InputError):
        membership_diagnostic(Z2, P2.psi, lambda g: 1.0, (1.0,), (5, 5, 10))


def test_random_vector_determinism():
    a = random_vector(Z2, np.random.default_rng(123), 4, 6)
    b = random_vector(Z2, np.random.default_rng(123), 4, 6)
    assert dict(a.items()) == dict(b.items())
