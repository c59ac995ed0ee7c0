"""Finitely supported vectors over a group and their Orlicz norms.

An OrliczVector is a map from finitely many group elements to nonzero
complex amplitudes (exact zeros are pruned; near-zeros are kept, since
pruning them would silently change norms).  With counting measure all
modulars are exact finite sums

    modular(Phi, f) = sum_s Phi(|f(s)|).

Two norms are computed and cross-checked:

- the Luxemburg (gauge) norm  N(f) = inf { k > 0 : modular(f/k) <= 1 },
  found by bisection on k; the modular is continuous and strictly
  decreasing in k for f != 0, so the infimum is the unique root of
  modular(f/k) = 1;
- the Orlicz (dual) norm  |f| = sup { sum |f v| : modular(Psi, v) <= 1 },
  computed two independent ways: (a) stationarity, where the optimal
  dual vector is v_s = dens(|f_s| / lam) with dens the density of Phi and
  lam chosen by bisection so the constraint binds, and (b) minimizing
  k -> (1 + modular(Phi, k f)) / k by golden section (a computational
  device whose agreement with (a) is enforced, not assumed).  The two
  must agree to 1e-5 relative or a hard MethodDisagreementError fires.

The norms satisfy N(f) <= |f| <= 2 N(f).  Batched variants run whole
sweeps of vectors through the same bisection loops at once (rows padded
with zeros, which are invisible to every modular since Phi(0) = 0).

membership_diagnostic probes whether sum_s Psi(alpha h(s)) converges as
the summation ball grows, for each requested alpha -- a finite-radius
heuristic for membership of h in the closure of the step functions; its
verdicts are labeled as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import BracketOverflowError, GroupMismatchError, InputError, MethodDisagreementError
from .groups import Group, Weight
from .young import ComplementaryPair, YoungFunction

__all__ = [
    "OrliczVector",
    "NormReport",
    "MembershipReport",
    "random_vector",
    "amplitude_matrix",
    "modular",
    "luxemburg_norm",
    "orlicz_norm",
    "norm_report",
    "holder_gap",
    "weighted_norm",
    "membership_diagnostic",
    "luxemburg_batch",
    "orlicz_batch",
]

_AGREEMENT_LIMIT = 1e-5
_MODULAR_TARGET_TOL = 1e-12
_MAX_BISECT = 200


class OrliczVector:
    """Finitely supported complex amplitudes on group elements."""

    __slots__ = ("group", "_data")

    def __init__(self, group: Group, data: Mapping | Iterable = ()):
        self.group = group
        items = data.items() if isinstance(data, Mapping) else data
        store = {}
        for g, a in items:
            a = complex(a)
            if a != 0:
                store[group.element(g)] = a
        self._data = store

    # -- construction --------------------------------------------------------

    @classmethod
    def zero(cls, group: Group) -> "OrliczVector":
        return cls(group)

    @classmethod
    def delta(cls, group: Group, g, amplitude: complex = 1.0) -> "OrliczVector":
        return cls(group, {group.element(g): amplitude})

    # -- views ---------------------------------------------------------------

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._data))

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def __repr__(self) -> str:
        return f"OrliczVector({len(self._data)} points on {self.group!r})"

    def amplitude(self, g) -> complex:
        return self._data.get(g, 0.0 + 0.0j)

    def items(self):
        """(element, amplitude) pairs in deterministic support order."""
        for g in sorted(self._data):
            yield g, self._data[g]

    def abs_amplitudes(self) -> np.ndarray:
        return np.array([abs(self._data[g]) for g in sorted(self._data)], dtype=float)

    # -- algebra ---------------------------------------------------------------

    def scale(self, c: complex) -> "OrliczVector":
        return OrliczVector(self.group, {g: c * a for g, a in self._data.items()})

    def __add__(self, other: "OrliczVector") -> "OrliczVector":
        if self.group != other.group:
            raise GroupMismatchError("vectors live on different groups")
        out = dict(self._data)
        for g, a in other._data.items():
            out[g] = out.get(g, 0.0) + a
        return OrliczVector(self.group, out)

    def __sub__(self, other: "OrliczVector") -> "OrliczVector":
        return self + other.scale(-1.0)

    def pointwise_mul(self, fn: Callable) -> "OrliczVector":
        """Multiply each amplitude by fn(element)."""
        return OrliczVector(self.group, {g: a * fn(g) for g, a in self._data.items()})

    def pointwise_div(self, fn: Callable) -> "OrliczVector":
        return OrliczVector(self.group, {g: a / fn(g) for g, a in self._data.items()})

    def reverse(self) -> "OrliczVector":
        """g -> f(g^{-1})."""
        inv = self.group.invert
        return OrliczVector(self.group, {inv(g): a for g, a in self._data.items()})

    def abs(self) -> "OrliczVector":
        return OrliczVector(self.group, {g: abs(a) for g, a in self._data.items()})

    def l1(self) -> float:
        return float(sum(abs(a) for a in self._data.values()))

    def linf(self) -> float:
        return float(max((abs(a) for a in self._data.values()), default=0.0))

    def pairing(self, other: "OrliczVector") -> complex:
        """Bilinear pairing sum_s f(s) h(s) -- no complex conjugation."""
        if self.group != other.group:
            raise GroupMismatchError("vectors live on different groups")
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        return sum(
            (a * big._data[g] for g, a in small._data.items() if g in big._data),
            0.0 + 0.0j,
        )

    def distance_l1(self, other: "OrliczVector") -> float:
        return (self - other).l1()


def random_vector(
    group: Group, rng: np.random.Generator, radius: int, size: int = 8
) -> OrliczVector:
    """Support drawn uniformly in a ball, amplitudes uniform on [-1,1]^2."""
    ball = group.ball(radius)
    k = min(size, len(ball))
    idx = rng.choice(len(ball), size=k, replace=False)
    amps = rng.uniform(-1.0, 1.0, size=(k, 2))
    return OrliczVector(
        group, {ball[int(i)]: complex(a, b) for i, (a, b) in zip(idx, amps)}
    )


def amplitude_matrix(vectors) -> np.ndarray:
    """Stack |amplitudes| of many vectors into one zero-padded matrix.

    Rows feed the batched norm engines; the padding is invisible to every
    modular because Phi(0) = 0.
    """
    width = max((len(v) for v in vectors), default=1)
    out = np.zeros((len(vectors), max(width, 1)))
    for i, v in enumerate(vectors):
        a = v.abs_amplitudes()
        out[i, : a.size] = a
    return out


# ---------------------------------------------------------------------------
# modulars and norms


def modular(phi: YoungFunction, f: OrliczVector) -> float:
    """sum_s Phi(|f(s)|); overflow saturates to inf rather than raising."""
    if not f:
        return 0.0
    with np.errstate(over="ignore"):
        total = float(np.sum(phi(f.abs_amplitudes())))
    return total if math.isfinite(total) else math.inf


def _rows_modular(phi_fn: Callable, A: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore"):
        vals = np.asarray(phi_fn(A), dtype=float)
    return np.nan_to_num(vals, nan=math.inf, posinf=math.inf).sum(axis=1)


def luxemburg_batch(phi: YoungFunction, A: np.ndarray) -> np.ndarray:
    """Luxemburg norms of the rows of a nonnegative amplitude matrix.

    Zero-padded rows are fine: Phi(0) = 0 keeps padding invisible.
    Bisection stops at |modular - 1| <= 1e-12 or 200 iterations.
    """
    A = np.asarray(A, dtype=float)
    out = np.zeros(A.shape[0])
    live = A.sum(axis=1) > 0.0
    if not np.any(live):
        return out
    B = A[live]

    def mod(k):
        return _rows_modular(phi.fn, B / k[:, None])

    hi = np.ones(B.shape[0])
    for _ in range(200):
        need = mod(hi) > 1.0
        if not np.any(need):
            break
        hi = np.where(need, hi * 2.0, hi)
    else:
        raise BracketOverflowError(float(np.max(B)), float(np.max(hi)))
    lo = hi.copy()
    for _ in range(1200):
        need = mod(lo) < 1.0
        if not np.any(need):
            break
        lo = np.where(need, lo * 0.5, lo)
    else:
        raise BracketOverflowError(float(np.max(B)), float(np.min(lo)))
    mid = 0.5 * (lo + hi)
    for _ in range(_MAX_BISECT):
        m = mod(mid)
        if np.max(np.abs(m - 1.0)) <= _MODULAR_TARGET_TOL:
            break
        lo = np.where(m > 1.0, mid, lo)
        hi = np.where(m > 1.0, hi, mid)
        mid = 0.5 * (lo + hi)
    out[live] = mid
    return out


def luxemburg_norm(phi: YoungFunction, f: OrliczVector) -> float:
    """inf { k > 0 : modular(f / k) <= 1 }; 0 for the zero vector."""
    if not f:
        return 0.0
    return float(luxemburg_batch(phi, f.abs_amplitudes()[None, :])[0])


def _stationarity_batch(pair: ComplementaryPair, A: np.ndarray) -> np.ndarray:
    """Orlicz norms via the dual optimizer v = dens(|f|/lam).

    The binding constraint sum Psi(v) = 1 is solved for lam by bisection.
    When Psi has no closed form, Psi(dens(w)) is evaluated through the
    equality case of the Young inequality, Psi(dens(w)) = w*dens(w) - Phi(w),
    which is exactly what the numeric conjugate would return at these
    points, minus its redundant inner root-find.
    """
    phi_fn = pair.phi.fn
    dens = pair.phi.derivative_or_numeric()
    # When the partner is numerically built, dodge it: on the graph of the
    # density, Psi(dens(w)) = w*dens(w) - Phi(w) by the Young equality.
    cheap_psi = pair.numeric_side != "psi"
    psi_fn = pair.psi.fn if cheap_psi else None

    def constraint(lam):
        with np.errstate(over="ignore", invalid="ignore"):
            w = A / lam[:, None]
            v = np.asarray(dens(w), dtype=float)
            if cheap_psi:
                s = np.asarray(psi_fn(v), dtype=float)
            else:
                s = w * v - np.asarray(phi_fn(w), dtype=float)
        return np.nan_to_num(s, nan=math.inf, posinf=math.inf).sum(axis=1)

    n = A.shape[0]
    hi = np.ones(n)
    for _ in range(400):
        need = constraint(hi) > 1.0
        if not np.any(need):
            break
        hi = np.where(need, hi * 2.0, hi)
    lo = hi.copy()
    for _ in range(1200):
        need = constraint(lo) < 1.0
        if not np.any(need):
            break
        lo = np.where(need, lo * 0.5, lo)
    mid = 0.5 * (lo + hi)
    for _ in range(_MAX_BISECT):
        c = constraint(mid)
        if np.max(np.abs(c - 1.0)) <= _MODULAR_TARGET_TOL:
            break
        lo = np.where(c > 1.0, mid, lo)
        hi = np.where(c > 1.0, hi, mid)
        mid = 0.5 * (lo + hi)
    v = np.asarray(dens(A / mid[:, None]), dtype=float)
    return (A * v).sum(axis=1)


def _amemiya_batch(pair: ComplementaryPair, A: np.ndarray, lux: np.ndarray) -> np.ndarray:
    """Orlicz norms as min_k (1 + modular(Phi, k f)) / k by golden section.

    The objective is the perspective of a convex function, hence unimodal;
    the bracket sits around 1/N(f) and expands if a minimum pins to a
    boundary.
    """
    phi_fn = pair.phi.fn

    def h(k):
        return (1.0 + _rows_modular(phi_fn, A * k[:, None])) / k

    base = 1.0 / lux
    span = 256.0
    for _ in range(8):
        a = base / span
        b = base * span
        invphi = (math.sqrt(5.0) - 1.0) / 2.0
        c = b - invphi * (b - a)
        d = a + invphi * (b - a)
        fc, fd = h(c), h(d)
        for _ in range(120):
            right = fc < fd
            b = np.where(right, d, b)
            a = np.where(right, a, c)
            c = b - invphi * (b - a)
            d = a + invphi * (b - a)
            fc, fd = h(c), h(d)
        mid = 0.5 * (a + b)
        on_edge = (mid < base / span * 1.05) | (mid > base * span * 0.95)
        if not np.any(on_edge):
            break
        span *= 16.0
    return h(mid)


def orlicz_batch(pair: ComplementaryPair, A: np.ndarray):
    """(norms, agreement gaps) for the rows of an amplitude matrix.

    Each norm is the larger of the stationarity and minimization values;
    their relative gap beyond 1e-5 is an implementation fault and raises.
    """
    A = np.asarray(A, dtype=float)
    norms = np.zeros(A.shape[0])
    gaps = np.zeros(A.shape[0])
    live = A.sum(axis=1) > 0.0
    if not np.any(live):
        return norms, gaps
    B = A[live]
    stat = _stationarity_batch(pair, B)
    amem = _amemiya_batch(pair, B, luxemburg_batch(pair.phi, B))
    rel = np.abs(stat - amem) / np.maximum(np.maximum(stat, amem), 1e-300)
    if np.max(rel) > _AGREEMENT_LIMIT:
        i = int(np.argmax(rel))
        raise MethodDisagreementError(float(stat[i]), float(amem[i]), float(rel[i]), _AGREEMENT_LIMIT)
    norms[live] = np.maximum(stat, amem)
    gaps[live] = rel
    return norms, gaps


@dataclass(frozen=True)
class NormReport:
    """Both norms of one vector plus the cross-method agreement gap."""

    luxemburg: float
    orlicz: float
    method_agreement: float


def orlicz_norm(pair: ComplementaryPair, f: OrliczVector) -> float:
    if not f:
        return 0.0
    norms, _ = orlicz_batch(pair, f.abs_amplitudes()[None, :])
    return float(norms[0])


def norm_report(pair: ComplementaryPair, f: OrliczVector) -> NormReport:
    if not f:
        return NormReport(0.0, 0.0, 0.0)
    A = f.abs_amplitudes()[None, :]
    lux = float(luxemburg_batch(pair.phi, A)[0])
    norms, gaps = orlicz_batch(pair, A)
    return NormReport(lux, float(norms[0]), float(gaps[0]))


def holder_gap(pair: ComplementaryPair, f: OrliczVector, g: OrliczVector) -> float:
    """min{ N_Phi(f) |g|_Psi , |f|_Phi N_Psi(g) } - sum |f g|; >= 0 in exact math."""
    pointwise = float(
        sum(abs(a * g.amplitude(s)) for s, a in f.items())
    )
    if not f or not g:
        return 0.0 - pointwise
    flipped = pair.flip()
    bound = min(
        luxemburg_norm(pair.phi, f) * orlicz_norm(flipped, g),
        orlicz_norm(pair, f) * luxemburg_norm(pair.psi, g),
    )
    return bound - pointwise


def weighted_norm(
    pair: ComplementaryPair, w: Weight, f: OrliczVector, kind: str = "orlicz"
) -> float:
    """Norm of the pointwise product f * w (the weighted-space norm)."""
    fw = f.pointwise_mul(w)
    if kind == "orlicz":
        return orlicz_norm(pair, fw)
    if kind == "luxemburg":
        return luxemburg_norm(pair.phi, fw)
    raise InputError(f"unknown norm kind {kind!r}")


# ---------------------------------------------------------------------------
# membership diagnostic


@dataclass(frozen=True)
class MembershipReport:
    """Partial sums of sum_{B_R} Psi(alpha h) and a heuristic verdict per alpha.

    Verdicts: "converging" when the partial sums flatten and the last
    shell contributes a vanishing fraction, "diverging" when they keep
    growing about linearly or faster in the radius, "inconclusive"
    otherwise.  Finite-radius evidence only.
    """

    rows: tuple  # (alpha, radius, partial_sum)
    verdicts: dict


def membership_diagnostic(
    group: Group,
    psi: YoungFunction,
    h: Callable,
    alphas: Sequence[float],
    radii: Sequence[int],
) -> MembershipReport:
    radii = [int(r) for r in radii]
    if any(b >= a for a, b in zip(radii[1:], radii)):
        raise InputError("radii must be strictly increasing")
    elems = group.ball(radii[-1])
    tau = np.array([group.word_length(g) for g in elems], dtype=float)
    hv = np.array([float(h(g)) for g in elems], dtype=float)
    if np.any(hv < 0.0):
        raise InputError("membership diagnostic needs h >= 0")
    rows = []
    verdicts = {}
    for alpha in alphas:
        with np.errstate(over="ignore"):
            terms = np.asarray(psi(alpha * hv), dtype=float)
        sums = np.array([terms[tau <= r].sum() for r in radii])
        for r, s in zip(radii, sums):
            rows.append((float(alpha), r, float(s)))
        verdicts[float(alpha)] = _verdict(np.array(radii, dtype=float), sums, group)
    return MembershipReport(tuple(rows), verdicts)


def _verdict(radii: np.ndarray, sums: np.ndarray, group: Group) -> str:
    inc = np.diff(sums, prepend=0.0)
    if group.is_finite() and inc[-1] == 0.0:
        return "converging"
    if np.all(sums <= 0.0):
        return "converging"
    half = max(2, len(radii) // 2)
    with np.errstate(divide="ignore"):
        slope = np.polyfit(np.log(radii[-half:]), np.log(np.maximum(sums[-half:], 1e-300)), 1)[0]
    tail_fraction = inc[-1] / max(sums[-1], 1e-300)
    if slope <= 0.2 and tail_fraction <= 0.01 and inc[-1] <= inc[-2] + 1e-300:
        return "converging"
    if slope >= 0.5 or (len(inc) >= 3 and inc[-1] >= inc[-2] >= inc[-3] > 0.0):
        return "diverging"
    return "inconclusive"
