"""Finitely generated discrete groups as integer-tuple algebras.

Three families are supported, all with elements stored as plain integer
tuples so they hash and sort deterministically:

- free abelian Z^d with the 2d standard generators +-e_i,
- the discrete Heisenberg group H3(Z) on triples with the law
  (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'),
- cyclic Z_n with generators +-1, coordinates reduced to [0, n).

The word length tau(g) is the least number of generators whose product
is g; it is symmetric and subadditive.  It is computed by breadth-first
search from the identity with a memoized length table; for Z^d and Z_n
a closed form (validated against BFS in the test suite) is used instead.
Balls are returned in lexicographic coordinate order so every report is
reproducible byte for byte.

Weights are strictly positive functions of the word length with value 1
at the identity.  The built-in families are

    polynomial        (1 + tau)^beta                      beta > 0
    subexp_alpha      exp(C * tau^alpha)                  0 < alpha < 1, C > 0
    subexp_log        exp(C * tau / ln(1+tau)^gamma)      gamma > 0, C > 0

plus the trivial weight and pointwise products.  subexp_log's defining
expression is 0/0 at the identity; its value there is pinned to 1 by
convention so that every weight satisfies w(e) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import (
    GroupMismatchError,
    InputError,
    MemoryCapError,
    RadiusCapError,
)

__all__ = [
    "Group",
    "Weight",
    "GrowthFit",
    "WeightAxiomsReport",
    "trivial_weight",
    "polynomial_weight",
    "subexp_weight",
    "subexp_log_weight",
    "product_weight",
    "weight_eval",
    "weight_axioms_report",
]

Element = tuple


class Group:
    """A finitely generated discrete group with tuple-coordinate elements."""

    DEFAULT_ELEMENT_CAP = 10**6
    DEFAULT_RADIUS_CAP = 64

    def __init__(self, kind: str, param: int, element_cap: int | None = None):
        if kind not in ("free_abelian", "heisenberg3", "cyclic"):
            raise InputError(f"unknown group kind {kind!r}")
        if kind == "free_abelian" and param < 1:
            raise InputError("free abelian rank must be >= 1")
        if kind == "cyclic" and param < 2:
            raise InputError("cyclic order must be >= 2")
        self.kind = kind
        self.param = int(param)
        self.element_cap = element_cap or self.DEFAULT_ELEMENT_CAP
        self.radius_cap = self.DEFAULT_RADIUS_CAP
        # memoized BFS state: length table plus the last completed frontier
        self._lengths: dict = {self.identity(): 0}
        self._frontier: list = [self.identity()]
        self._built_radius = 0

    # -- construction ------------------------------------------------------

    @classmethod
    def free_abelian(cls, d: int) -> "Group":
        return cls("free_abelian", d)

    @classmethod
    def heisenberg(cls) -> "Group":
        return cls("heisenberg3", 3)

    @classmethod
    def cyclic(cls, n: int) -> "Group":
        return cls("cyclic", n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Group)
            and self.kind == other.kind
            and self.param == other.param
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.param))

    def __repr__(self) -> str:
        if self.kind == "free_abelian":
            return f"Group(Z^{self.param})"
        if self.kind == "cyclic":
            return f"Group(Z_{self.param})"
        return "Group(H3(Z))"

    @property
    def dim(self) -> int:
        return 3 if self.kind == "heisenberg3" else (1 if self.kind == "cyclic" else self.param)

    @property
    def generators(self) -> tuple:
        """Symmetric generator set, identity excluded."""
        if self.kind == "free_abelian":
            gens = []
            for i in range(self.param):
                e = [0] * self.param
                e[i] = 1
                gens.append(tuple(e))
                e[i] = -1
                gens.append(tuple(e))
            return tuple(gens)
        if self.kind == "heisenberg3":
            return ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0))
        return ((1,), (self.param - 1,))

    def is_finite(self) -> bool:
        return self.kind == "cyclic"

    # -- element algebra ----------------------------------------------------

    def identity(self) -> Element:
        return (0,) * self.dim

    def element(self, coords: Iterable[int]) -> Element:
        """Validate and normalize raw coordinates into an element."""
        g = tuple(int(c) for c in coords)
        if len(g) != self.dim:
            raise GroupMismatchError(
                f"expected {self.dim} coordinates for {self!r}, got {len(g)}"
            )
        if self.kind == "cyclic":
            g = (g[0] % self.param,)
        return g

    def _check(self, g: Element) -> None:
        if not isinstance(g, tuple) or len(g) != self.dim:
            raise GroupMismatchError(
                f"element {g!r} has wrong arity for {self!r}"
            )

    def multiply(self, g: Element, h: Element) -> Element:
        self._check(g)
        self._check(h)
        if self.kind == "free_abelian":
            return tuple(a + b for a, b in zip(g, h))
        if self.kind == "cyclic":
            return ((g[0] + h[0]) % self.param,)
        a, b, c = g
        ap, bp, cp = h
        return (a + ap, b + bp, c + cp + a * bp)

    def invert(self, g: Element) -> Element:
        self._check(g)
        if self.kind == "free_abelian":
            return tuple(-a for a in g)
        if self.kind == "cyclic":
            return ((-g[0]) % self.param,)
        a, b, c = g
        return (-a, -b, -c + a * b)

    # -- word length and balls ----------------------------------------------

    def word_length(self, g: Element) -> int:
        """Least n with g a product of n generators; 0 for the identity."""
        g = self.element(g)
        if self.kind == "free_abelian":
            return int(sum(abs(a) for a in g))
        if self.kind == "cyclic":
            k = g[0]
            return int(min(k, self.param - k))
        return self.word_length_bfs(g)

    def word_length_bfs(self, g: Element, radius_cap: int | None = None) -> int:
        """BFS word length; the oracle for the closed forms above."""
        g = self.element(g)
        cap = radius_cap or self.radius_cap
        while g not in self._lengths:
            if self._built_radius >= cap or not self._frontier:
                raise RadiusCapError(g, cap, self.element_cap)
            self._grow_one_level()
        return self._lengths[g]

    def _grow_one_level(self) -> None:
        nxt = []
        r = self._built_radius + 1
        for h in self._frontier:
            for gen in self.generators:
                m = self.multiply(h, gen)
                if m not in self._lengths:
                    self._lengths[m] = r
                    nxt.append(m)
                    if len(self._lengths) > self.element_cap:
                        raise MemoryCapError(len(self._lengths), self.element_cap)
        self._frontier = nxt
        self._built_radius = r

    def ensure_radius(self, radius: int) -> None:
        while self._built_radius < radius and self._frontier:
            self._grow_one_level()

    def ball(self, radius: int) -> list:
        """All elements of word length <= radius, lexicographically sorted."""
        if radius < 0:
            raise InputError("radius must be nonnegative")
        self.ensure_radius(radius)
        return sorted(g for g, n in self._lengths.items() if n <= radius)

    def ball_count(self, radius: int) -> int:
        self.ensure_radius(radius)
        return sum(1 for n in self._lengths.values() if n <= radius)

    # -- vectorized helpers ---------------------------------------------------

    def coords_array(self, elems) -> np.ndarray:
        return np.asarray(list(elems), dtype=np.int64).reshape(len(elems), self.dim)

    def product_array(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """All pairwise products: (N, d) x (M, d) -> (N, M, d)."""
        if self.kind == "free_abelian":
            return A[:, None, :] + B[None, :, :]
        if self.kind == "cyclic":
            return (A[:, None, :] + B[None, :, :]) % self.param
        out = A[:, None, :] + B[None, :, :]
        out[..., 2] += A[:, None, 0] * B[None, :, 1]
        return out

    def tau_array(self, coords: np.ndarray) -> np.ndarray:
        """Word lengths of a coordinate array of shape (..., d)."""
        if self.kind == "free_abelian":
            return np.abs(coords).sum(axis=-1)
        if self.kind == "cyclic":
            k = coords[..., 0] % self.param
            return np.minimum(k, self.param - k)
        flat = coords.reshape(-1, 3)
        out = np.array([self.word_length_bfs(tuple(int(v) for v in row)) for row in flat])
        return out.reshape(coords.shape[:-1])

    # -- growth ---------------------------------------------------------------

    def growth_order_estimate(self, max_radius: int) -> "GrowthFit":
        """Least-squares growth order from log |B_n| against log n.

        The fit runs over n in [max_radius/2, max_radius]; the reported
        envelope constants satisfy c1 * n^d_hat <= |B_n| <= c2 * n^d_hat
        on that window.
        """
        if max_radius < 6:
            raise InputError("growth fit needs max_radius >= 6")
        radii = np.arange(max_radius // 2, max_radius + 1)
        counts = np.array([self.ball_count(int(n)) for n in radii], dtype=float)
        logn = np.log(radii.astype(float))
        logc = np.log(counts)
        slope, intercept = np.polyfit(logn, logc, 1)
        resid = logc - (slope * logn + intercept)
        scale = counts / radii.astype(float) ** slope
        return GrowthFit(
            d_hat=float(slope),
            fit_residual=float(np.sqrt(np.mean(resid**2))),
            radii=radii,
            counts=counts.astype(int),
            c1=float(scale.min()),
            c2=float(scale.max()),
        )


@dataclass(frozen=True)
class GrowthFit:
    d_hat: float
    fit_residual: float
    radii: np.ndarray
    counts: np.ndarray
    c1: float
    c2: float


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    """A radial weight: a function of the word length with value 1 at e.

    tau_fn maps an array of word lengths to weight values; calling the
    weight on a group element routes through group.word_length.  All
    built-in families take values >= 1, so reciprocals stay bounded by 1.
    """

    group: Group
    kind: str
    tau_fn: Callable
    label: str
    params: tuple = ()

    def tau_values(self, tau):
        return self.tau_fn(np.asarray(tau, dtype=float))

    def __call__(self, g) -> float:
        return float(self.tau_fn(float(self.group.word_length(g))))


def trivial_weight(group: Group) -> Weight:
    return Weight(group, "trivial", lambda t: np.ones_like(t), "trivial")


def polynomial_weight(group: Group, beta: float) -> Weight:
    if not beta > 0.0:
        raise InputError(f"polynomial weight needs beta > 0, got {beta!r}")
    return Weight(
        group,
        "polynomial",
        lambda t: (1.0 + t) ** beta,
        f"poly:{beta:g}",
        (beta,),
    )


def subexp_weight(group: Group, alpha: float, C: float) -> Weight:
    if not (0.0 < alpha < 1.0 and C > 0.0):
        raise InputError(f"subexponential weight needs 0<alpha<1, C>0; got {alpha!r}, {C!r}")
    return Weight(
        group,
        "subexp_alpha",
        lambda t: np.exp(C * t**alpha),
        f"subexp:{alpha:g}:{C:g}",
        (alpha, C),
    )


def subexp_log_weight(group: Group, gamma: float, C: float) -> Weight:
    if not (gamma > 0.0 and C > 0.0):
        raise InputError(f"log-damped weight needs gamma > 0 and C > 0; got {gamma!r}, {C!r}")

    def tau_fn(t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            expo = np.where(t > 0.0, C * t / np.log1p(t) ** gamma, 0.0)
        return np.exp(expo)  # exponent pinned to 0 at tau=0: w(e) = 1

    return Weight(group, "subexp_log", tau_fn, f"subexplog:{gamma:g}:{C:g}", (gamma, C))


def product_weight(w1: Weight, w2: Weight) -> Weight:
    if w1.group != w2.group:
        raise GroupMismatchError("weights live on different groups")
    return Weight(
        w1.group,
        "product",
        lambda t: w1.tau_fn(t) * w2.tau_fn(t),
        f"{w1.label}*{w2.label}",
        (w1, w2),
    )


def weight_eval(w: Weight, g) -> float:
    """Weight value at a group element (goes through the word length)."""
    return w(g)


@dataclass(frozen=True)
class WeightAxiomsReport:
    identity_ok: bool
    inverse_bound: float  # max of 1/w over the ball
    submult_sup: float  # max of w(st) / (w(s) w(t)) over ball pairs


def weight_axioms_report(w: Weight, radius: int) -> WeightAxiomsReport:
    """Probe the weight axioms on a ball: w(e)=1, bounded reciprocal, and
    the submultiplicativity ratio sup w(st)/(w(s)w(t))."""
    group = w.group
    elems = group.ball(radius)
    X = group.coords_array(elems)
    tau = group.tau_array(X)
    vals = w.tau_values(tau)
    prods = group.product_array(X, X)
    group.ensure_radius(2 * radius)
    tau_prod = group.tau_array(prods)
    ratio = w.tau_values(tau_prod) / np.multiply.outer(vals, vals)
    return WeightAxiomsReport(
        identity_ok=abs(w(group.identity()) - 1.0) < 1e-12,
        inverse_bound=float((1.0 / vals).max()),
        submult_sup=float(ratio.max()),
    )
