"""2-cocycles on a discrete group with values in the nonzero complex numbers.

A normalized 2-cocycle is a map Om: G x G -> C* satisfying

    Om(r,s) * Om(rs,t) == Om(s,t) * Om(r,st)      (cocycle identity)
    Om(g,e) == Om(e,g) == 1                       (normalization)

Constructors cover the families the laboratory needs:

- the trivial cocycle Om == 1;
- the coboundary of a weight w: Om(s,t) = w(st) / (w(s) w(t)), which is
  real, positive, and automatically normalized since w(e) = 1;
- the bilinear phase on an abelian group: Om(x,y) = exp(i * theta * x.B.y)
  for an integer matrix B (on Z_n the identity requires theta to be a
  multiple of 2*pi/n; the residual scan catches incompatible choices);
- pointwise products of cocycles (cocycles form an abelian group);
- pointwise perturbations, used to manufacture deliberately broken
  cocycles for negative tests.

Polar decomposition splits Om = |Om| * phase pointwise; both factors are
again cocycles.  decomposition_witness finds nonnegative u, v with
|Om(s,t)| <= u(s) + v(t) on a ball, the hypothesis that upgrades the
twisted convolution to a Banach-algebra multiplication.  Witnesses:

    polynomial weight (1+tau)^beta      u = v = 2^beta / w
    subexponential exp(C tau^alpha)     u = v = exp(-C (2 - 2^alpha) tau^alpha)
    log-damped exp(C tau / ln^gamma)    bounded grid search over
                                        u = v = kappa / w' with w' a
                                        shrunken copy of the same family

each verified pair-by-pair on the requested ball (the searches certify,
they do not prove).  Evaluators are pure; values are cached per pair, so
concurrent readers need no coordination.

The groups here are discrete, so the continuity a bounded cocycle's
unimodular part would otherwise have to satisfy holds automatically and
is not checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import GroupMismatchError, InputError, InvariantViolationError, WitnessSearchError
from .groups import (
    Group,
    Weight,
    product_weight,
    subexp_log_weight,
    subexp_weight,
    trivial_weight,
)

__all__ = [
    "Cocycle",
    "DecompositionWitness",
    "trivial_cocycle",
    "coboundary_from_weight",
    "bilinear_phase",
    "product_cocycle",
    "perturbed",
    "cocycle_identity_residual",
    "normalization_residual",
    "polar_decompose",
    "sup_norm_estimate",
    "decomposition_witness",
]


class Cocycle:
    """A 2-cocycle evaluator with construction metadata and a pair cache."""

    def __init__(
        self,
        group: Group,
        kind: str,
        fn: Callable,
        label: str,
        weight: Optional[Weight] = None,
        factors: tuple = (),
        table_fn: Optional[Callable] = None,
    ):
        self.group = group
        self.kind = kind
        self.label = label
        self.weight = weight
        self.factors = factors
        self._fn = fn
        self._table_fn = table_fn
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Cocycle({self.label} on {self.group!r})"

    def value(self, s, t) -> complex:
        key = (s, t)
        got = self._cache.get(key)
        if got is None:
            got = complex(self._fn(s, t))
            if got == 0.0:
                raise InvariantViolationError(
                    f"{self.label}: vanishes at {key!r}; cocycles take nonzero values"
                )
            self._cache[key] = got
        return got

    def table(self, elems) -> np.ndarray:
        """Dense value table over elems x elems (vectorized when possible)."""
        if self._table_fn is not None:
            return self._table_fn(elems)
        n = len(elems)
        out = np.empty((n, n), dtype=complex)
        for i, s in enumerate(elems):
            for j, t in enumerate(elems):
                out[i, j] = self.value(s, t)
        return out

    def modulus_weight(self) -> Optional[Weight]:
        """The weight whose coboundary is |Om|, when the construction shows it."""
        if self.kind in ("trivial", "bilinear_phase", "phase_factor"):
            return trivial_weight(self.group)
        if self.kind in ("coboundary", "modulus_factor"):
            return self.weight
        if self.kind == "product":
            parts = [f.modulus_weight() for f in self.factors]
            if any(p is None for p in parts):
                return None
            live = [p for p in parts if p.kind != "trivial"]
            if not live:
                return trivial_weight(self.group)
            acc = live[0]
            for p in live[1:]:
                acc = product_weight(acc, p)
            return acc
        return None


def trivial_cocycle(group: Group) -> Cocycle:
    def table_fn(elems):
        return np.ones((len(elems), len(elems)), dtype=complex)

    return Cocycle(group, "trivial", lambda s, t: 1.0 + 0.0j, "trivial", table_fn=table_fn)


def coboundary_from_weight(w: Weight) -> Cocycle:
    """The positive cocycle w(st) / (w(s) w(t))."""
    group = w.group

    def fn(s, t):
        return w(group.multiply(s, t)) / (w(s) * w(t))

    def table_fn(elems):
        X = group.coords_array(elems)
        tau = group.tau_array(X)
        vals = w.tau_values(tau)
        prods = group.product_array(X, X)
        group.ensure_radius(2 * int(tau.max(initial=0)))
        wst = w.tau_values(group.tau_array(prods))
        return (wst / np.multiply.outer(vals, vals)).astype(complex)

    return Cocycle(group, "coboundary", fn, f"coboundary({w.label})", weight=w, table_fn=table_fn)


def bilinear_phase(group: Group, B, theta: float) -> Cocycle:
    """Unimodular cocycle exp(i * theta * s.B.t) on an abelian group."""
    if group.kind == "heisenberg3":
        raise InputError("bilinear phases need an abelian group")
    Bm = np.asarray(B, dtype=np.int64)
    d = group.dim
    if Bm.shape != (d, d):
        raise InputError(f"phase matrix must be {d}x{d}, got {Bm.shape}")

    def fn(s, t):
        form = int(np.dot(np.dot(np.asarray(s, dtype=np.int64), Bm), np.asarray(t, dtype=np.int64)))
        return complex(math.cos(theta * form), math.sin(theta * form))

    def table_fn(elems):
        X = group.coords_array(elems).astype(np.int64)
        form = X @ Bm @ X.T
        return np.exp(1j * theta * form)

    return Cocycle(group, "bilinear_phase", fn, f"phase:{theta:g}", table_fn=table_fn)


def product_cocycle(a: Cocycle, b: Cocycle) -> Cocycle:
    if a.group != b.group:
        raise GroupMismatchError("cocycle factors live on different groups")

    def fn(s, t):
        return a.value(s, t) * b.value(s, t)

    def table_fn(elems):
        return a.table(elems) * b.table(elems)

    return Cocycle(a.group, "product", fn, f"{a.label}*{b.label}", factors=(a, b), table_fn=table_fn)


def perturbed(base: Cocycle, s, t, factor: float) -> Cocycle:
    """Copy of base scaled by ``factor`` at the single pair (s, t).

    Any factor != 1 breaks the cocycle identity; used as the negative
    control in the verification suites.
    """

    def fn(x, y):
        v = base.value(x, y)
        return v * factor if (x, y) == (s, t) else v

    return Cocycle(base.group, "perturbed", fn, f"{base.label}!@{s},{t}")


# ---------------------------------------------------------------------------
# verification


def _pair_table(om: Cocycle, radius: int):
    """Value table over the ball of twice the radius, plus index helpers.

    Products of two radius-R elements have length <= 2R, so the 2R ball
    indexes every pair the triple scan touches.
    """
    group = om.group
    outer = group.ball(2 * radius)
    index = {g: i for i, g in enumerate(outer)}
    inner_idx = np.array([index[g] for g in group.ball(radius)], dtype=np.int64)
    W = om.table(outer)
    X = group.coords_array(outer)
    prods = group.product_array(X, X)
    flat = prods.reshape(-1, group.dim)
    prod_idx = np.array(
        [index.get(tuple(int(v) for v in row), -1) for row in flat], dtype=np.int64
    ).reshape(len(outer), len(outer))
    return outer, inner_idx, W, prod_idx


def cocycle_identity_residual(om: Cocycle, radius: int) -> float:
    """max over ball triples of |Om(r,s)Om(rs,t) - Om(s,t)Om(r,st)|."""
    _, inner, W, prod_idx = _pair_table(om, radius)
    I = inner
    RS = prod_idx[np.ix_(I, I)]  # index of r*s in the outer ball
    if np.any(RS < 0):
        raise InvariantViolationError("product fell outside the doubled ball")
    lhs = W[np.ix_(I, I)][:, :, None] * W[RS[:, :, None], I[None, None, :]]
    ST = prod_idx[np.ix_(I, I)]
    rhs = W[np.ix_(I, I)][None, :, :] * W[I[:, None, None], ST[None, :, :]]
    return float(np.abs(lhs - rhs).max())


def normalization_residual(om: Cocycle, radius: int) -> float:
    """max over the ball of |Om(g,e) - 1| and |Om(e,g) - 1|."""
    e = om.group.identity()
    worst = 0.0
    for g in om.group.ball(radius):
        worst = max(worst, abs(om.value(g, e) - 1.0), abs(om.value(e, g) - 1.0))
    return worst


def polar_decompose(om: Cocycle):
    """Split Om into (modulus, phase) with Om = modulus * phase pointwise.

    The modulus is positive, the phase unimodular, and each factor is a
    cocycle in its own right.  A zero value anywhere is an invariant
    violation of the input.
    """

    def mod_fn(s, t):
        v = abs(om.value(s, t))
        if v == 0.0:
            raise InvariantViolationError(f"{om.label}: zero modulus at {(s, t)!r}")
        return complex(v)

    def phase_fn(s, t):
        v = om.value(s, t)
        return v / abs(v)

    def mod_table(elems):
        return np.abs(om.table(elems)).astype(complex)

    def phase_table(elems):
        W = om.table(elems)
        mags = np.abs(W)
        if np.any(mags == 0.0):
            raise InvariantViolationError(f"{om.label}: zero modulus in table")
        return W / mags

    modulus = Cocycle(
        om.group, "modulus_factor", mod_fn, f"|{om.label}|",
        weight=om.modulus_weight(), table_fn=mod_table,
    )
    phase = Cocycle(om.group, "phase_factor", phase_fn, f"phase({om.label})", table_fn=phase_table)
    return modulus, phase


def sup_norm_estimate(om: Cocycle, radius: int) -> float:
    """max |Om| over ball pairs."""
    elems = om.group.ball(radius)
    return float(np.abs(om.table(elems)).max())


# ---------------------------------------------------------------------------
# decomposition witnesses


@dataclass(frozen=True)
class DecompositionWitness:
    """Verified dominating pair: |Om(s,t)| <= u(s) + v(t) on the ball.

    u and v are evaluators tied to the underlying weight (no tabulation),
    so the verification radius can grow without rebuilding them.
    max_violation is the exact maximum of |Om| - u - v over the checked
    pairs; success means it is <= 0.
    """

    u: Callable
    v: Callable
    u_tau: Callable
    v_tau: Callable
    verified_radius: int
    max_violation: float
    description: str


def _verify_radial(om: Cocycle, w: Weight, u_tau, v_tau, radius: int):
    """Max of |Om| - u - v over the ball when |Om| is the coboundary of w."""
    group = om.group
    elems = group.ball(radius)
    X = group.coords_array(elems)
    tau = group.tau_array(X)
    group.ensure_radius(2 * radius)
    tau_st = group.tau_array(group.product_array(X, X))
    wv = w.tau_values(tau)
    mod = w.tau_values(tau_st) / np.multiply.outer(wv, wv)
    viol = mod - u_tau(tau)[:, None] - v_tau(tau)[None, :]
    k = int(np.argmax(viol))
    i, j = divmod(k, len(elems))
    return float(viol[i, j]), (elems[i], elems[j])


def _verify_generic(om: Cocycle, u, v, radius: int):
    elems = om.group.ball(radius)
    mod = np.abs(om.table(elems))
    uv = np.array([u(g) for g in elems], dtype=float)
    vv = np.array([v(g) for g in elems], dtype=float)
    viol = mod - uv[:, None] - vv[None, :]
    k = int(np.argmax(viol))
    i, j = divmod(k, len(elems))
    return float(viol[i, j]), (elems[i], elems[j])


def decomposition_witness(
    om: Cocycle,
    radius: int,
    u: Callable | None = None,
    v: Callable | None = None,
) -> DecompositionWitness:
    """Find (or verify) u, v >= 0 dominating |Om| additively on a ball.

    With user-supplied u, v the inequality is checked directly.  Otherwise
    the construction of om must expose the weight behind |Om|; the
    candidate for each weight family is listed in the module docstring.
    """
    group = om.group
    if u is not None or v is not None:
        if u is None or v is None:
            raise InputError("supply both u and v, or neither")
        violation, worst = _verify_generic(om, u, v, radius)
        if violation > 0.0:
            raise WitnessSearchError(worst, violation, "user-supplied")
        return DecompositionWitness(
            u, v, None, None, radius, violation, "user-supplied"
        )

    w = om.modulus_weight()
    if w is None:
        raise WitnessSearchError(None, math.inf, f"none (opaque construction {om.kind})")

    candidates = []
    if w.kind == "trivial":
        candidates.append(("constants 1 + 1", lambda t: np.ones_like(np.asarray(t, float)),
                           lambda t: np.ones_like(np.asarray(t, float))))
    elif w.kind == "polynomial":
        beta = w.params[0]
        scale = 2.0**beta

        def u_tau(t, scale=scale, w=w):
            return scale / w.tau_values(t)

        candidates.append((f"2^{beta:g}/w on each side", u_tau, u_tau))
    elif w.kind == "subexp_alpha":
        alpha, C = w.params
        shrunk = subexp_weight(group, alpha, C * (2.0 - 2.0**alpha))

        def u_tau(t, shrunk=shrunk):
            return 1.0 / shrunk.tau_values(t)

        candidates.append((f"1/{shrunk.label} on each side", u_tau, u_tau))
    elif w.kind == "subexp_log":
        gamma, C = w.params
        for kappa in (1.0, 2.0, 4.0, 8.0):
            for frac in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
                shrunk = subexp_log_weight(group, gamma, C * frac)

                def u_tau(t, kappa=kappa, shrunk=shrunk):
                    return kappa / shrunk.tau_values(t)

                candidates.append((f"{kappa:g}/{shrunk.label} on each side", u_tau, u_tau))
    else:
        raise WitnessSearchError(None, math.inf, f"no recipe for weight kind {w.kind!r}")

    best = None
    for desc, u_tau, v_tau in candidates:
        violation, worst = _verify_radial(om, w, u_tau, v_tau, radius)
        if violation <= 0.0:
            u_fn = lambda g, f=u_tau: float(f(np.asarray(float(group.word_length(g)))))
            v_fn = lambda g, f=v_tau: float(f(np.asarray(float(group.word_length(g)))))
            return DecompositionWitness(u_fn, v_fn, u_tau, v_tau, radius, violation, desc)
        if best is None or violation < best[0]:
            best = (violation, worst, desc)
    raise WitnessSearchError(best[1], best[0], best[2])
