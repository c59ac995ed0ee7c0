"""Twisted convolution and the operator identities built on it.

For a cocycle Om the twisted convolution of finitely supported vectors is

    (f * g)(t) = sum_s f(s) g(s^{-1} t) Om(s, s^{-1} t),

an exact finite sum here (no truncation, no FFT: correctness over speed,
with the naive double loop kept as the oracle for the support-pair
implementation).  Deltas multiply as delta_s * delta_t = Om(s,t) delta_{st},
so associativity of the convolution is the cocycle identity in disguise.

The dual-side module actions are

    (g *' h)(s) = sum_t g(t) h(st) Om(s,t),
    (h *' g)(s) = sum_t g(t) h(ts) Om(t,s),

and with the bilinear pairing <f,h> = sum f(s) h(s) they satisfy

    <f * g, h> = <f, g *' h> = <g, h *' f>.

When Om factors as Om(s,t) = L(s,t) (u(s) + v(t)) with |L| <= 1 (see
cocycles.decomposition_witness), the pairing splits:

    <f * g, h> = <f u, xi(g,h)> + <g v, eta(f,h)>,

where xi(g,h)(s) = sum_t g(t) h(st) L(s,t) and
eta(f,h)(t) = sum_s f(s) h(st) L(s,t) (i.e. the same kernel summed over
the other slot).  The cross-kernel zeta(f,g)(t) = sum_s f(s) g(s^{-1}t)
L(s, s^{-1}t) links the two: sum_s f(s) xi(g,h)(s) = sum_t h(t) zeta(f,g)(t).

The transform under a weight w, f -> f / w, intertwines the twisted
convolution of the coboundary of w with the plain convolution and is an
isometry between the correspondingly weighted norms.  The augmentation
functional is the plain coefficient sum; it is multiplicative for the
untwisted convolution and its kernel is spanned by differences
delta_s - delta_e.

All operations are pure; random sampling takes explicit generators so
parallel and serial sweeps produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cocycles import Cocycle, DecompositionWitness
from .errors import FactorizationError, GroupMismatchError
from .groups import Group, Weight
from .space import OrliczVector, orlicz_norm, random_vector
from .young import ComplementaryPair

__all__ = [
    "twisted_convolve",
    "twisted_convolve_naive",
    "convolve",
    "l1_bound_gap",
    "associativity_residual",
    "module_action_left",
    "module_action_right",
    "module_action_left_naive",
    "module_action_right_naive",
    "duality_residual",
    "SplitFactors",
    "xi",
    "eta",
    "zeta",
    "splitting_residual",
    "lambda_transform",
    "augmentation",
    "unit_check",
    "UnitReport",
    "submultiplicativity_probe",
    "ProbeSpec",
    "ProbeReport",
]


def _same_group(f: OrliczVector, g: OrliczVector) -> Group:
    if f.group != g.group:
        raise GroupMismatchError(f"operands on {f.group!r} vs {g.group!r}")
    return f.group


def twisted_convolve(om: Cocycle, f: OrliczVector, g: OrliczVector) -> OrliczVector:
    """(f * g)(t) = sum_s f(s) g(s^{-1}t) Om(s, s^{-1}t), support-pair form.

    Accumulates over supp(f) x supp(g) via t = s y, so the cocycle is
    evaluated at (s, y) directly; support lands inside supp(f)supp(g).
    """
    group = _same_group(f, g)
    if om.group != group:
        raise GroupMismatchError("cocycle lives on a different group")
    acc: dict = {}
    mul = group.multiply
    for s, a in f.items():
        for y, b in g.items():
            t = mul(s, y)
            acc[t] = acc.get(t, 0.0) + a * b * om.value(s, y)
    return OrliczVector(group, acc)


def twisted_convolve_naive(om: Cocycle, f: OrliczVector, g: OrliczVector) -> OrliczVector:
    """Literal transcription of the defining sum; the oracle."""
    group = _same_group(f, g)
    mul, inv = group.multiply, group.invert
    targets = sorted({mul(s, y) for s, _ in f.items() for y, _ in g.items()})
    out = {}
    for t in targets:
        total = 0.0 + 0.0j
        for s, a in f.items():
            y = mul(inv(s), t)
            b = g.amplitude(y)
            if b != 0:
                total += a * b * om.value(s, y)
        out[t] = total
    return OrliczVector(group, out)


def convolve(f: OrliczVector, g: OrliczVector) -> OrliczVector:
    """Plain (untwisted) convolution."""
    group = _same_group(f, g)
    acc: dict = {}
    mul = group.multiply
    for s, a in f.items():
        for y, b in g.items():
            t = mul(s, y)
            acc[t] = acc.get(t, 0.0) + a * b
    return OrliczVector(group, acc)


def l1_bound_gap(om: Cocycle, f: OrliczVector, g: OrliczVector) -> float:
    """sup|Om| * |f|_1 * |g|_1 - |f*g|_1 over the pairs the sum touches."""
    if not f or not g:
        return 0.0
    sup = max(abs(om.value(s, y)) for s, _ in f.items() for y, _ in g.items())
    return sup * f.l1() * g.l1() - twisted_convolve(om, f, g).l1()


def associativity_residual(
    om: Cocycle, f: OrliczVector, g: OrliczVector, h: OrliczVector
) -> float:
    """l1 distance between (f*g)*h and f*(g*h)."""
    left = twisted_convolve(om, twisted_convolve(om, f, g), h)
    right = twisted_convolve(om, f, twisted_convolve(om, g, h))
    return left.distance_l1(right)


# ---------------------------------------------------------------------------
# dual-side actions and the pairing identities


def module_action_left(om: Cocycle, g: OrliczVector, h: OrliczVector) -> OrliczVector:
    """(g *' h)(s) = sum_t g(t) h(st) Om(s,t)."""
    group = _same_group(g, h)
    mul, inv = group.multiply, group.invert
    acc: dict = {}
    for u, hb in h.items():
        for t, ga in g.items():
            s = mul(u, inv(t))  # s t = u
            acc[s] = acc.get(s, 0.0) + ga * hb * om.value(s, t)
    return OrliczVector(group, acc)


def module_action_right(om: Cocycle, h: OrliczVector, g: OrliczVector) -> OrliczVector:
    """(h *' g)(s) = sum_t g(t) h(ts) Om(t,s)."""
    group = _same_group(g, h)
    mul, inv = group.multiply, group.invert
    acc: dict = {}
    for u, hb in h.items():
        for t, ga in g.items():
            s = mul(inv(t), u)  # t s = u
            acc[s] = acc.get(s, 0.0) + ga * hb * om.value(t, s)
    return OrliczVector(group, acc)


def module_action_left_naive(om: Cocycle, g: OrliczVector, h: OrliczVector) -> OrliczVector:
    group = _same_group(g, h)
    mul, inv = group.multiply, group.invert
    candidates = sorted({mul(u, inv(t)) for u, _ in h.items() for t, _ in g.items()})
    out = {}
    for s in candidates:
        total = 0.0 + 0.0j
        for t, ga in g.items():
            hb = h.amplitude(mul(s, t))
            if hb != 0:
                total += ga * hb * om.value(s, t)
        out[s] = total
    return OrliczVector(group, out)


def module_action_right_naive(om: Cocycle, h: OrliczVector, g: OrliczVector) -> OrliczVector:
    group = _same_group(g, h)
    mul, inv = group.multiply, group.invert
    candidates = sorted({mul(inv(t), u) for u, _ in h.items() for t, _ in g.items()})
    out = {}
    for s in candidates:
        total = 0.0 + 0.0j
        for t, ga in g.items():
            hb = h.amplitude(mul(t, s))
            if hb != 0:
                total += ga * hb * om.value(t, s)
        out[s] = total
    return OrliczVector(group, out)


def duality_residual(
    om: Cocycle, f: OrliczVector, g: OrliczVector, h: OrliczVector
) -> float:
    """Deviation from <f*g, h> = <f, g*'h> = <g, h*'f>."""
    lhs = twisted_convolve(om, f, g).pairing(h)
    mid = f.pairing(module_action_left(om, g, h))
    rhs = g.pairing(module_action_right(om, h, f))
    return abs(lhs - mid) + abs(lhs - rhs)


# ---------------------------------------------------------------------------
# splitting operators


@dataclass(frozen=True)
class SplitFactors:
    """A factorization Om(s,t) = L(s,t) (u(s) + v(t)) with |L| <= 1."""

    L: Callable
    u: Callable
    v: Callable

    @classmethod
    def from_witness(cls, om: Cocycle, witness: DecompositionWitness) -> "SplitFactors":
        u, v = witness.u, witness.v

        def L(s, t):
            return om.value(s, t) / (u(s) + v(t))

        return cls(L, u, v)

    def verify(self, om: Cocycle, pairs) -> None:
        """Check the factorization on the given pairs; raise on mismatch."""
        worst, worst_pair = 0.0, None
        for s, t in pairs:
            Lv = self.L(s, t)
            if abs(Lv) > 1.0 + 1e-12:
                raise FactorizationError((s, t), abs(Lv) - 1.0)
            dev = abs(om.value(s, t) - Lv * (self.u(s) + self.v(t)))
            if dev > worst:
                worst, worst_pair = dev, (s, t)
        if worst > 1e-10:
            raise FactorizationError(worst_pair, worst)


def xi(L: Callable, g: OrliczVector, h: OrliczVector) -> OrliczVector:
    """xi(g,h)(s) = sum_t g(t) h(st) L(s,t)."""
    group = _same_group(g, h)
    mul, inv = group.multiply, group.invert
    acc: dict = {}
    for u, hb in h.items():
        for t, ga in g.items():
            s = mul(u, inv(t))
            acc[s] = acc.get(s, 0.0) + ga * hb * L(s, t)
    return OrliczVector(group, acc)


def eta(L: Callable, f: OrliczVector, h: OrliczVector) -> OrliczVector:
    """eta(f,h)(t) = sum_s f(s) h(st) L(s,t)."""
    group = _same_group(f, h)
    mul, inv = group.multiply, group.invert
    acc: dict = {}
    for u, hb in h.items():
        for s, fa in f.items():
            t = mul(inv(s), u)
            acc[t] = acc.get(t, 0.0) + fa * hb * L(s, t)
    return OrliczVector(group, acc)


def zeta(L: Callable, f: OrliczVector, g: OrliczVector) -> OrliczVector:
    """zeta(f,g)(t) = sum_s f(s) g(s^{-1}t) L(s, s^{-1}t)."""
    group = _same_group(f, g)
    mul = group.multiply
    acc: dict = {}
    for s, a in f.items():
        for y, b in g.items():
            t = mul(s, y)
            acc[t] = acc.get(t, 0.0) + a * b * L(s, y)
    return OrliczVector(group, acc)


def splitting_residual(
    om: Cocycle,
    factors: SplitFactors,
    f: OrliczVector,
    g: OrliczVector,
    h: OrliczVector,
) -> float:
    """|<f*g,h> - <f u, xi(g,h)> - <g v, eta(f,h)>| after verifying the factors."""
    pairs = [(s, t) for s, _ in f.items() for t, _ in g.items()]
    factors.verify(om, pairs)
    lhs = twisted_convolve(om, f, g).pairing(h)
    fu = f.pointwise_mul(factors.u)
    gv = g.pointwise_mul(factors.v)
    rhs = fu.pairing(xi(factors.L, g, h)) + gv.pairing(eta(factors.L, f, h))
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# weight transform, augmentation, unit, probe


def lambda_transform(w: Weight, f: OrliczVector) -> OrliczVector:
    """f -> f / w, the isometry onto the weighted space."""
    return f.pointwise_div(w)


def augmentation(f: OrliczVector) -> complex:
    """Sum of coefficients; multiplicative under plain convolution."""
    return sum((a for _, a in f.items()), 0.0 + 0.0j)


@dataclass(frozen=True)
class UnitReport:
    max_left_deviation: float
    max_right_deviation: float
    samples: int
    seed: int


def unit_check(
    om: Cocycle, samples: int = 50, seed: int = 0, radius: int = 3, support: int = 6
) -> UnitReport:
    """Verify delta_e is a two-sided unit for the twisted convolution."""
    group = om.group
    rng = np.random.default_rng(seed)
    e = OrliczVector.delta(group, group.identity())
    worst_l = worst_r = 0.0
    for _ in range(samples):
        f = random_vector(group, rng, radius, support)
        worst_l = max(worst_l, twisted_convolve(om, e, f).distance_l1(f))
        worst_r = max(worst_r, twisted_convolve(om, f, e).distance_l1(f))
    return UnitReport(worst_l, worst_r, samples, seed)


@dataclass(frozen=True)
class ProbeSpec:
    radii: tuple = (4, 8)
    samples: int = 100
    seed: int = 0
    support: int = 6


@dataclass(frozen=True)
class ProbeReport:
    """Empirical lower bounds for the multiplicative norm constant.

    c_hat per radius is max |f*g| / (|f| |g|) over the sampled pairs; it
    can only under-estimate the true constant.
    """

    rows: tuple  # (radius, c_hat, samples)
    spec: ProbeSpec
    note: str = "c_hat is an empirical lower bound for the true constant"


def submultiplicativity_probe(
    pair: ComplementaryPair, om: Cocycle, spec: ProbeSpec | None = None
) -> ProbeReport:
    """Sample |f*g|_Phi / (|f|_Phi |g|_Phi) across balls of growing radius."""
    spec = spec or ProbeSpec()
    group = om.group
    rows = []
    for i, radius in enumerate(spec.radii):
        rng = np.random.default_rng((spec.seed, i))  # per-radius derived seed
        worst = 0.0
        for _ in range(spec.samples):
            f = random_vector(group, rng, radius, spec.support)
            g = random_vector(group, rng, radius, spec.support)
            if not f or not g:
                continue
            num = orlicz_norm(pair, twisted_convolve(om, f, g))
            den = orlicz_norm(pair, f) * orlicz_norm(pair, g)
            if den > 0.0:
                worst = max(worst, num / den)
        rows.append((radius, worst, spec.samples))
    return ProbeReport(tuple(rows), spec)
