"""Young-function calculus.

A Young function here is a continuous, strictly increasing, convex
Phi: [0, inf) -> [0, inf) with Phi(0) = 0 and Phi(x) -> inf.  Two Young
functions Phi, Psi are complementary when

    Psi(y) = sup { x*y - Phi(x) : x >= 0 },

which implies the Young inequality x*y <= Phi(x) + Psi(y) with equality
exactly at y = Phi'(x).  This module provides:

- numeric convex conjugation (conjugate), with the derivative of the
  conjugate recovered from the maximizer;
- the density construction Phi(x) = int_0^x gen, Psi(y) = int_0^y gen^{-1}
  (build_from_generator), via adaptive composite Simpson quadrature;
- the Delta_2 diagnostic sup_x Phi(2x)/Phi(x) (delta2_estimate);
- strong-equivalence witnesses Phi1(a x) <= Phi2(x) <= Phi1(b x)
  (strong_equivalence);
- a catalog of complementary pairs: pnorm:<p>, xlog, cosh, expm.

Evaluators are plain callables that accept a float or a numpy array and
are pure; everything here is immutable after construction and safe to
share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import (
    BracketOverflowError,
    InputError,
    InvariantViolationError,
    NonMonotoneGeneratorError,
)

__all__ = [
    "Tolerances",
    "SearchSpec",
    "BuildSpec",
    "YoungFunction",
    "ComplementaryPair",
    "conjugate",
    "build_from_generator",
    "young_gap",
    "delta2_estimate",
    "Delta2Result",
    "strong_equivalence",
    "EquivalenceResult",
    "validate_young",
    "catalog_pair",
    "catalog_names",
    "pnorm_pair",
]


@dataclass(frozen=True)
class Tolerances:
    """Default comparison tolerances: absolute plus relative slack."""

    absolute: float = 1e-9
    relative: float = 1e-6

    def leq(self, a, b) -> bool:
        """a <= b up to the combined slack (elementwise-and for arrays)."""
        return bool(np.all(a <= b + self.absolute + self.relative * np.abs(b)))

    def slack(self, b):
        return self.absolute + self.relative * np.abs(b)


@dataclass(frozen=True)
class SearchSpec:
    """Controls for conjugation searches.

    The bracket starts at [0, 1] and the right endpoint doubles until the
    optimum is enclosed; expansion past ``bracket_cap`` raises
    BracketOverflowError naming the offending y and the cap.
    """

    bracket_cap: float = 1e3
    rel_tol: float = 1e-14
    max_iter: int = 200


@dataclass(frozen=True)
class BuildSpec:
    """Controls for the density-integral construction."""

    probe_grid: tuple = tuple(np.logspace(-3, 2, 41))
    quad_tol: float = 1e-10
    max_panel_doublings: int = 22
    inverse_cap: float = 1e9


@dataclass(frozen=True)
class YoungFunction:
    """An evaluable Young function.

    fn maps nonnegative reals (scalar or ndarray) to nonnegative reals.
    derivative, when present, is the density gen with Phi(x) = int_0^x gen.
    closed_form_conjugate is populated for catalog entries whose partner
    has a closed form.
    """

    fn: Callable
    name: str
    derivative: Optional[Callable] = None
    closed_form_conjugate: Optional["YoungFunction"] = field(
        default=None, repr=False
    )

    def __call__(self, x):
        return self.fn(x)

    def derivative_or_numeric(self) -> Callable:
        """The density, falling back to a one-sided/central difference."""
        if self.derivative is not None:
            return self.derivative
        fn = self.fn

        def numdiff(x):
            x = np.asarray(x, dtype=float)
            h = np.maximum(1e-7 * np.maximum(x, 1.0), 1e-9)
            lo = np.maximum(x - h, 0.0)
            return (fn(x + h) - fn(lo)) / (x + h - lo)

        return numdiff


@dataclass(frozen=True)
class ComplementaryPair:
    """A Young function together with its complementary partner.

    numeric_side records which member (if any) is a numerically built
    conjugate, so norm code can route evaluations through the cheap
    closed-form side (the conjugate of the numeric side IS the closed
    side, by biconjugation).
    """

    phi: YoungFunction
    psi: YoungFunction
    pairing_mode: str = "closed_form"  # or "numeric_conjugate"
    numeric_side: str = "none"  # "phi" | "psi" | "none"

    def flip(self) -> "ComplementaryPair":
        swapped = {"phi": "psi", "psi": "phi"}.get(self.numeric_side, "none")
        return ComplementaryPair(self.psi, self.phi, self.pairing_mode, swapped)


# ---------------------------------------------------------------------------
# scalar/array helpers


def _as_1d(x):
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    return arr, np.ndim(x) == 0


def _restore(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def _solve_increasing(f: Callable, targets: np.ndarray, spec: SearchSpec) -> np.ndarray:
    """Solve f(x) = t per element for increasing f with f(0) = 0, t >= 0.

    Doubles the right endpoint from 1 until f encloses each target, then
    bisects.  Targets of 0 map to 0 exactly.
    """
    t = np.asarray(targets, dtype=float)
    hi = np.ones_like(t)
    active = f(hi) < t
    while np.any(active):
        blown = active & (hi * 2.0 > spec.bracket_cap)
        if np.any(blown):
            bad = int(np.argmax(blown))
            raise BracketOverflowError(float(np.ravel(t)[bad]), spec.bracket_cap)
        hi = np.where(active, hi * 2.0, hi)
        active = f(hi) < t
    lo = np.zeros_like(t)
    for _ in range(spec.max_iter):
        mid = 0.5 * (lo + hi)
        below = f(mid) < t
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if np.max(hi - lo) <= spec.rel_tol * max(1.0, float(np.max(hi))):
            break
    out = 0.5 * (lo + hi)
    return np.where(t <= 0.0, 0.0, out)


def _golden_max(objective: Callable[[float], float], cap: float, y: float) -> float:
    """Maximize a concave objective over [0, hi] after doubling the bracket.

    The right endpoint doubles until the objective decreases there, per the
    bracket policy; expansion past ``cap`` raises BracketOverflowError.
    """
    hi = 1.0
    while objective(hi * 2.0) > objective(hi):
        hi *= 2.0
        if hi > cap:
            raise BracketOverflowError(y, cap)
    hi *= 2.0
    lo = 0.0
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = objective(c), objective(d)
    for _ in range(120):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = objective(d)
        if b - a <= 1e-14 * max(1.0, b):
            break
    return 0.5 * (a + b)


# ---------------------------------------------------------------------------
# conjugation


def conjugate(phi: YoungFunction, spec: SearchSpec | None = None) -> YoungFunction:
    """The complementary function y -> sup_x (x*y - Phi(x)).

    When phi carries a density the supremum is located by solving
    gen(x) = y (bisection on a doubling bracket); otherwise each value is
    found by golden-section search.  The returned function carries the
    maximizer as its derivative, which is exact for conjugates of smooth
    strictly convex functions.
    """
    spec = spec or SearchSpec()
    gen = phi.derivative
    fn = phi.fn

    if gen is not None:

        def maximizer(y):
            arr, scalar = _as_1d(y)
            return _restore(_solve_increasing(gen, arr, spec), scalar)

    else:

        def maximizer(y):
            arr, scalar = _as_1d(y)
            out = np.empty_like(arr)
            for i, yi in enumerate(arr):
                if yi <= 0.0:
                    out[i] = 0.0
                    continue
                out[i] = _golden_max(lambda x: x * yi - float(fn(x)), spec.bracket_cap, yi)
            return _restore(out, scalar)

    def value(y):
        arr, scalar = _as_1d(y)
        xs = np.atleast_1d(np.asarray(maximizer(arr), dtype=float))
        vals = xs * arr - np.asarray(fn(xs), dtype=float)
        vals = np.maximum(vals, 0.0)  # sup includes x = 0
        return _restore(vals, scalar)

    return YoungFunction(fn=value, name=f"conj({phi.name})", derivative=maximizer)


def young_gap(pair: ComplementaryPair, x, y):
    """Phi(x) + Psi(y) - x*y; nonnegative for complementary pairs."""
    return pair.phi(x) + pair.psi(y) - np.asarray(x, dtype=float) * np.asarray(y, dtype=float)


# ---------------------------------------------------------------------------
# density construction


def _simpson(fn: Callable, a: float, b: float, panels: int) -> float:
    xs = np.linspace(a, b, 2 * panels + 1)
    ys = np.asarray(fn(xs), dtype=float)
    h = (b - a) / (2 * panels)
    return float(h / 3.0 * (ys[0] + ys[-1] + 4.0 * ys[1::2].sum() + 2.0 * ys[2:-1:2].sum()))


def _simpson_adaptive(fn: Callable, b: float, spec: BuildSpec) -> float:
    """int_0^b fn by composite Simpson with panel halving to quad_tol."""
    if b <= 0.0:
        return 0.0
    panels = 8
    prev = _simpson(fn, 0.0, b, panels)
    for _ in range(spec.max_panel_doublings):
        panels *= 2
        cur = _simpson(fn, 0.0, b, panels)
        if abs(cur - prev) < spec.quad_tol * (1.0 + abs(cur)):
            return cur
        prev = cur
    return prev


def build_from_generator(
    phi_gen: Callable, spec: BuildSpec | None = None
) -> ComplementaryPair:
    """Build a complementary pair from a strictly increasing density.

    Phi(x) = int_0^x gen and Psi(y) = int_0^y gen^{-1}, where gen^{-1} is
    obtained by bisection.  The density is probed for strict monotonicity
    on the probe grid first; a violation raises with the offending sample
    pair.
    """
    spec = spec or BuildSpec()
    grid = np.asarray(spec.probe_grid, dtype=float)
    vals = np.asarray(phi_gen(grid), dtype=float)
    if abs(float(phi_gen(0.0))) > 1e-12:
        raise InputError(f"generator must vanish at 0, got {phi_gen(0.0)!r}")
    worse = np.nonzero(np.diff(vals) <= 0.0)[0]
    if worse.size:
        i = int(worse[0])
        raise NonMonotoneGeneratorError(
            float(grid[i]), float(grid[i + 1]), float(vals[i]), float(vals[i + 1])
        )

    inv_spec = SearchSpec(bracket_cap=spec.inverse_cap)

    def gen_inverse(x):
        arr, scalar = _as_1d(x)
        return _restore(_solve_increasing(phi_gen, arr, inv_spec), scalar)

    def phi_fn(x):
        arr, scalar = _as_1d(x)
        out = np.array([_simpson_adaptive(phi_gen, xi, spec) for xi in arr])
        return _restore(out, scalar)

    def psi_fn(y):
        arr, scalar = _as_1d(y)
        out = np.array([_simpson_adaptive(gen_inverse, yi, spec) for yi in arr])
        return _restore(out, scalar)

    phi = YoungFunction(fn=phi_fn, name="built", derivative=phi_gen)
    psi = YoungFunction(fn=psi_fn, name="built-conjugate", derivative=gen_inverse)
    return ComplementaryPair(phi, psi, pairing_mode="numeric_conjugate", numeric_side="psi")


# ---------------------------------------------------------------------------
# diagnostics


def validate_young(
    phi: YoungFunction,
    grid: Sequence[float] | None = None,
    tol: Tolerances | None = None,
) -> None:
    """Check the Young-function invariants on a sampled grid.

    Verifies Phi(0) = 0, strict increase, midpoint convexity within
    tolerance, and finiteness; raises InvariantViolationError otherwise.
    """
    tol = tol or Tolerances()
    xs = np.asarray(grid if grid is not None else np.logspace(-3, 2, 41), dtype=float)
    if abs(float(phi(0.0))) > tol.absolute:
        raise InvariantViolationError(f"{phi.name}: value at 0 is {phi(0.0)!r}")
    vals = np.asarray(phi(xs), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise InvariantViolationError(f"{phi.name}: non-finite value on grid")
    if np.any(np.diff(vals) <= 0.0):
        i = int(np.nonzero(np.diff(vals) <= 0.0)[0][0])
        raise InvariantViolationError(
            f"{phi.name}: not strictly increasing between {xs[i]!r} and {xs[i + 1]!r}"
        )
    mids = np.asarray(phi(0.5 * (xs[:-1] + xs[1:])), dtype=float)
    chords = 0.5 * (vals[:-1] + vals[1:])
    if not tol.leq(mids, chords):
        i = int(np.argmax(mids - chords))
        raise InvariantViolationError(
            f"{phi.name}: convexity fails near x={0.5 * (xs[i] + xs[i + 1])!r}"
        )


@dataclass(frozen=True)
class Delta2Result:
    """Outcome of the doubling diagnostic sup_x Phi(2x)/Phi(x)."""

    bounded: bool
    constant: Optional[float]
    grid: np.ndarray
    ratios: np.ndarray


def delta2_estimate(
    phi: YoungFunction, log_grid: Sequence[float] | None = None
) -> Delta2Result:
    """Estimate the doubling constant K with Phi(2x) <= K*Phi(x).

    Requires a grid spanning at least 6 decades.  Returns the supremum of
    the ratio when it stays bounded across the grid, or the diverging
    ratio sequence as evidence otherwise.
    """
    grid = np.asarray(
        log_grid if log_grid is not None else np.logspace(-4, 4, 161), dtype=float
    )
    if grid[0] <= 0.0 or np.log10(grid[-1] / grid[0]) < 6.0 - 1e-9:
        raise InputError("log grid must be positive and span at least 6 decades")
    with np.errstate(over="ignore", invalid="ignore"):
        base = np.asarray(phi(grid), dtype=float)
        if np.any(base <= 0.0):
            i = int(np.argmax(base <= 0.0))
            raise InvariantViolationError(
                f"{phi.name}: vanishes at nonzero grid point x={grid[i]!r}"
            )
        ratios = np.asarray(phi(2.0 * grid), dtype=float) / base
    # Divergence evidence: a ratio overflowed outright, or the tail ratio
    # dwarfs everything seen in the lower half of the grid.
    if not np.all(np.isfinite(ratios)):
        return Delta2Result(False, None, grid, ratios)
    head = float(np.max(ratios[: len(ratios) // 2]))
    if float(ratios[-1]) > 1e3 * head:
        return Delta2Result(False, None, grid, ratios)
    return Delta2Result(True, float(np.max(ratios)), grid, ratios)


@dataclass(frozen=True)
class EquivalenceResult:
    """Witness (a, b) with Phi1(a x) <= Phi2(x) <= Phi1(b x), or the failure."""

    found: bool
    a: Optional[float] = None
    b: Optional[float] = None
    failing_candidate: Optional[float] = None
    failing_x: Optional[float] = None
    gap: Optional[float] = None


def strong_equivalence(
    phi1: YoungFunction,
    phi2: YoungFunction,
    grid: Sequence[float] | None = None,
    tol: Tolerances | None = None,
) -> EquivalenceResult:
    """Search scale witnesses making phi1 and phi2 strongly equivalent.

    Candidates run over quarter powers of two (so exact values like 1 and
    2^{-1/2} are representable).  a is the largest candidate with
    Phi1(a x) <= Phi2(x) on the whole grid, b the smallest with
    Phi2(x) <= Phi1(b x); failure reports the nearest candidate and its
    worst grid point.
    """
    tol = tol or Tolerances()
    xs = np.asarray(grid if grid is not None else np.logspace(-3, 3, 61), dtype=float)
    with np.errstate(over="ignore"):
        v2 = np.asarray(phi2(xs), dtype=float)
    cands = 2.0 ** (np.arange(-60, 61) / 4.0)

    def lower_ok(a: float) -> float:
        # max violation of Phi1(a x) <= Phi2(x); <= 0 means pass.  A blown
        # conjugation bracket means phi1(a x) is astronomically large, so
        # the candidate simply fails.
        try:
            with np.errstate(over="ignore"):
                v1 = np.asarray(phi1(a * xs), dtype=float)
        except BracketOverflowError:
            return np.inf
        return float(np.max(v1 - v2 - tol.slack(v2)))

    def upper_ok(b: float) -> float:
        try:
            with np.errstate(over="ignore"):
                v1 = np.asarray(phi1(b * xs), dtype=float)
        except BracketOverflowError:
            return np.inf
        return float(np.max(v2 - v1 - tol.slack(v1)))

    a_star = None
    best_a, best_a_gap = None, np.inf
    for a in cands[::-1]:
        gap = lower_ok(float(a))
        if gap <= 0.0:
            a_star = float(a)
            break
        if gap < best_a_gap:
            best_a, best_a_gap = float(a), gap
    b_star = None
    best_b, best_b_gap = None, np.inf
    for b in cands:
        gap = upper_ok(float(b))
        if gap <= 0.0:
            b_star = float(b)
            break
        if gap < best_b_gap:
            best_b, best_b_gap = float(b), gap
    if a_star is not None and b_star is not None and a_star <= b_star:
        return EquivalenceResult(True, a_star, b_star)
    if a_star is None:
        cand, gap = best_a, best_a_gap
        v1 = np.asarray(phi1(cand * xs), dtype=float)
        worst = int(np.argmax(v1 - v2))
    else:
        cand, gap = best_b, best_b_gap
        v1 = np.asarray(phi1(cand * xs), dtype=float)
        worst = int(np.argmax(v2 - v1))
    return EquivalenceResult(
        False, failing_candidate=cand, failing_x=float(xs[worst]), gap=gap
    )


# ---------------------------------------------------------------------------
# catalog

# Numeric partners of the exp-type entries need enormous maximizers
# (for Phi = x*ln(1+x) the optimum at y sits near e^{y-1}), so catalog
# conjugates get a much larger bracket cap than the 1e3 default.
_CATALOG_SEARCH = SearchSpec(bracket_cap=1e200)


def _pnorm_fn(p: float) -> YoungFunction:
    def fn(x):
        x = np.asarray(x, dtype=float)
        return x**p / p

    def deriv(x):
        x = np.asarray(x, dtype=float)
        return x ** (p - 1.0)

    return YoungFunction(fn=fn, name=f"pnorm:{p:g}", derivative=deriv)


def pnorm_pair(p: float) -> ComplementaryPair:
    """The pair Phi = x^p/p, Psi = y^q/q with 1/p + 1/q = 1."""
    if not p > 1.0:
        raise InputError(f"pnorm exponent must exceed 1, got {p!r}")
    q = p / (p - 1.0)
    phi = _pnorm_fn(p)
    psi = _pnorm_fn(q)
    phi = replace(phi, closed_form_conjugate=psi)
    psi = replace(psi, closed_form_conjugate=phi)
    return ComplementaryPair(phi, psi, pairing_mode="closed_form")


def _xlog() -> YoungFunction:
    def fn(x):
        x = np.asarray(x, dtype=float)
        return x * np.log1p(x)

    def deriv(x):
        x = np.asarray(x, dtype=float)
        return np.log1p(x) + x / (1.0 + x)

    return YoungFunction(fn=fn, name="xlog", derivative=deriv)


def _coshm() -> YoungFunction:
    def fn(x):
        x = np.asarray(x, dtype=float)
        return np.cosh(x) - 1.0

    def deriv(x):
        return np.sinh(np.asarray(x, dtype=float))

    return YoungFunction(fn=fn, name="cosh", derivative=deriv)


def _expm() -> YoungFunction:
    def fn(x):
        x = np.asarray(x, dtype=float)
        return np.expm1(x) - x

    def deriv(x):
        return np.expm1(np.asarray(x, dtype=float))

    return YoungFunction(fn=fn, name="expm", derivative=deriv)


def _expm_conjugate() -> YoungFunction:
    def fn(y):
        y = np.asarray(y, dtype=float)
        return (1.0 + y) * np.log1p(y) - y

    def deriv(y):
        return np.log1p(np.asarray(y, dtype=float))

    return YoungFunction(fn=fn, name="entropy", derivative=deriv)


def catalog_names() -> tuple:
    """Default pair names exercised by the verification suites."""
    return ("pnorm:1.5", "pnorm:2", "pnorm:3", "xlog", "cosh", "expm")


def catalog_pair(name: str) -> ComplementaryPair:
    """Look up a complementary pair by catalog name.

    pnorm:<p> pairs are closed-form; expm pairs with (1+y)ln(1+y)-y in
    closed form; xlog and cosh carry numeric conjugates (their partners
    have no elementary closed form, only strong equivalents).
    """
    if name.startswith("pnorm:"):
        return pnorm_pair(float(name.split(":", 1)[1]))
    if name == "xlog":
        phi = _xlog()
        return ComplementaryPair(
            phi, conjugate(phi, _CATALOG_SEARCH), pairing_mode="numeric_conjugate",
            numeric_side="psi",
        )
    if name == "cosh":
        phi = _coshm()
        return ComplementaryPair(
            phi, conjugate(phi, _CATALOG_SEARCH), pairing_mode="numeric_conjugate",
            numeric_side="psi",
        )
    if name == "expm":
        phi = _expm()
        psi = _expm_conjugate()
        phi = replace(phi, closed_form_conjugate=psi)
        psi = replace(psi, closed_form_conjugate=phi)
        return ComplementaryPair(phi, psi, pairing_mode="closed_form")
    raise InputError(f"unknown Young-function name {name!r}")
