"""Cohomology of line bundles on P^1, F_e and the bundle threefolds P(O + O(-D0)).

Everything goes through two Leray steps with P^1 fibers.  For a class with
fiber degree ``m``:

* ``m >= 0``: ``pi_* O(mS + pi^*P) = sum_{k=0..m} O(P - k*N)``, no ``R^1``;
* ``m == -1``: both direct images vanish;
* ``m <= -2``: ``R^1 pi_* O(mS + pi^*P) = sum_{j=1..-m-1} O(P + j*N)`` by
  relative duality,

where ``S`` is the negative section and ``N`` its conormal class (``e*l`` on
``F_e``, ``D0`` on ``Y'``).  The lattice-point oracle and Riemann-Roch give
independent checks on surfaces.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

from .chow import (
    BundleThreefold,
    HirzebruchBase,
    SurfaceClass,
    ThreefoldClass,
    canonical_surface,
    surface_pair,
)

__all__ = [
    "CohVector",
    "SplitBundle",
    "NonIntegralClass",
    "h_p1",
    "pushforward_surface",
    "h_surface",
    "pushforward_threefold",
    "h_threefold",
    "h_split",
    "lattice_oracle_h0",
    "hirzebruch_rays",
    "rr_chi_surface",
    "odd_square_sum",
    "symmetric_power_degrees",
]


class NonIntegralClass(ValueError):
    """Cohomology was requested for a class with non-integer coefficients."""


@dataclass(frozen=True)
class CohVector:
    """Cohomology dimensions ``(h^0, ..., h^n)``.

    Each entry is a closed interval ``(lo, hi)``; ``hi`` is ``None`` when no
    upper bound is known.  Point values have ``lo == hi``.
    """

    entries: tuple[tuple[int, int | None], ...]

    def __post_init__(self):
        for lo, hi in self.entries:
            if lo < 0 or (hi is not None and hi < lo):
                raise ValueError(f"bad interval [{lo}, {hi}]")

    @classmethod
    def point(cls, values: Iterable[int]) -> CohVector:
        return cls(tuple((int(v), int(v)) for v in values))

    @classmethod
    def zero(cls, dim: int) -> CohVector:
        return cls.point([0] * (dim + 1))

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    @property
    def is_point(self) -> bool:
        return all(lo == hi for lo, hi in self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        if not self.is_point:
            raise ValueError(f"{self} is not a point vector")
        return tuple(lo for lo, _ in self.entries)

    def __getitem__(self, i: int) -> tuple[int, int | None]:
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: CohVector) -> CohVector:
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return CohVector(tuple(
            (l1 + l2, None if h1 is None or h2 is None else h1 + h2)
            for (l1, h1), (l2, h2) in zip(self.entries, other.entries)
        ))

    def chi(self) -> int:
        return sum((-1) ** i * v for i, v in enumerate(self.values))

    def padded(self, length: int) -> CohVector:
        return CohVector(self.entries + ((0, 0),) * (length - len(self)))

    def shifted(self) -> CohVector:
        """``h^i -> h^{i+1}``: the contribution of an ``R^1`` term one level up."""
        return CohVector(((0, 0),) + self.entries)

    def __repr__(self):
        if self.is_point:
            return f"CohVector{self.values}"
        return f"CohVector({', '.join(_fmt(e) for e in self.entries)})"


def _fmt(entry):
    lo, hi = entry
    if lo == hi:
        return str(lo)
    return f"[{lo}, {'inf' if hi is None else hi}]"


ClassLike = Union[SurfaceClass, ThreefoldClass, int]


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles (surface classes, threefold classes or P^1 degrees)."""

    summands: tuple[ClassLike, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("a split bundle needs at least one summand")

    @property
    def rank(self) -> int:
        return len(self.summands)


def _int(x: Fraction, what: str) -> int:
    if Fraction(x).denominator != 1:
        raise NonIntegralClass(f"{what} has non-integer coefficient {x}")
    return int(x)


# -- P^1 ----------------------------------------------------------------------

def h_p1(d: int) -> CohVector:
    return CohVector.point((max(d + 1, 0), max(-d - 1, 0)))


# -- F_e ----------------------------------------------------------------------

def pushforward_surface(base: HirzebruchBase, c: SurfaceClass) -> tuple[list[int], list[int]]:
    """Degrees of ``pi_*`` and ``R^1 pi_*`` of ``O(c)`` along ``F_e -> P^1``."""
    a, b = _int(c.a, "class"), _int(c.b, "class")
    e = base.e
    if a >= 0:
        return [b - k * e for k in range(a + 1)], []
    if a == -1:
        return [], []
    return [], [b + j * e for j in range(1, -a)]


def h_surface(base: HirzebruchBase, c: SurfaceClass) -> CohVector:
    r0, r1 = pushforward_surface(base, c)
    h0 = sum(max(d + 1, 0) for d in r0)
    h1 = sum(max(-d - 1, 0) for d in r0) + sum(max(d + 1, 0) for d in r1)
    h2 = sum(max(-d - 1, 0) for d in r1)
    return CohVector.point((h0, h1, h2))


def rr_chi_surface(base: HirzebruchBase, c: SurfaceClass) -> Fraction:
    """Riemann-Roch on a rational surface: ``chi = 1 + c.(c - K)/2``."""
    return 1 + surface_pair(base, c, c - canonical_surface(base)) / 2


def hirzebruch_rays(e: int) -> list[tuple[int, int]]:
    """Fan of ``F_e``: rays for ``l``, ``sigma``, ``l``, ``sigma + e*l`` in that order."""
    return [(1, 0), (0, 1), (-1, e), (0, -1)]


def lattice_oracle_h0(base: HirzebruchBase, c: SurfaceClass) -> int:
    """``h^0`` by counting lattice points of the toric divisor polytope.

    ``c = a*sigma + b*l`` is represented by the torus-invariant divisor
    ``b*D_1 + a*D_2`` and the points ``u`` with ``<u, v_rho> >= -a_rho`` are
    enumerated by brute force over a bounding box.
    """
    a, b = _int(c.a, "class"), _int(c.b, "class")
    rays = hirzebruch_rays(base.e)
    coeffs = [b, a, 0, 0]
    box = _vertex_box(rays, coeffs)
    if box is None:
        return 0
    (x0, x1), (y0, y1) = box
    count = 0
    for u in product(range(x0, x1 + 1), range(y0, y1 + 1)):
        if all(u[0] * v[0] + u[1] * v[1] >= -k for v, k in zip(rays, coeffs)):
            count += 1
    return count


def _vertex_box(rays, coeffs):
    """Bounding box of all pairwise intersections of the facet lines.

    Every vertex of the (bounded) polytope is such an intersection, so the box
    contains the polytope.  Returns ``None`` if no intersection is feasible.
    """
    xs, ys = [], []
    for i in range(len(rays)):
        for j in range(i + 1, len(rays)):
            (p, q), (r, s) = rays[i], rays[j]
            det = p * s - q * r
            if det == 0:
                continue
            ci, cj = -coeffs[i], -coeffs[j]
            x = Fraction(ci * s - q * cj, det)
            y = Fraction(p * cj - r * ci, det)
            if all(x * v[0] + y * v[1] >= -k for v, k in zip(rays, coeffs)):
                xs.append(x)
                ys.append(y)
    if not xs:
        return None
    return (math.floor(min(xs)), math.ceil(max(xs))), (math.floor(min(ys)), math.ceil(max(ys)))


# -- bundle threefolds -----------------------------------------------------------

def pushforward_threefold(y: BundleThreefold, t: ThreefoldClass) -> tuple[list[SurfaceClass], list[SurfaceClass]]:
    """Surface classes of ``pi_*`` and ``R^1 pi_*`` of ``O(t)`` along ``Y' -> T``."""
    if not t.is_integral:
        raise NonIntegralClass(f"{t} is not an integral class")
    m = int(t.m)
    p, d0 = t.pull, y.d0
    if m >= 0:
        return [p - k * d0 for k in range(m + 1)], []
    if m == -1:
        return [], []
    return [], [p + j * d0 for j in range(1, -m)]


def h_threefold(y: BundleThreefold, t: ThreefoldClass) -> CohVector:
    r0, r1 = pushforward_threefold(y, t)
    total = CohVector.zero(3)
    for c in r0:
        total = total + h_surface(y.base, c).padded(4)
    for c in r1:
        total = total + h_surface(y.base, c).shifted()
    return total


# -- split bundles -------------------------------------------------------------

def h_split(space, s: SplitBundle | Sequence[ClassLike], twist: ClassLike | None = None) -> CohVector:
    """Entrywise sum of ``h(L_i + twist)`` over the summands of a split bundle.

    ``space`` is ``None`` for P^1, a ``HirzebruchBase`` or a ``BundleThreefold``.
    """
    summands = s.summands if isinstance(s, SplitBundle) else tuple(s)
    if space is None:
        tw = 0 if twist is None else twist
        vecs = [h_p1(int(d) + int(tw)) for d in summands]
    elif isinstance(space, HirzebruchBase):
        tw = SurfaceClass(0, 0) if twist is None else twist
        vecs = [h_surface(space, c + tw) for c in summands]
    elif isinstance(space, BundleThreefold):
        tw = ThreefoldClass.of(0, 0, 0) if twist is None else twist
        vecs = [h_threefold(space, c + tw) for c in summands]
    else:
        raise TypeError(f"unsupported space {space!r}")
    total = vecs[0]
    for v in vecs[1:]:
        total = total + v
    return total


def symmetric_power_degrees(degrees: Sequence, k: int) -> Counter:
    """Multiset of summands of ``Sym^k`` of a split bundle (classes must support ``+``)."""
    out: Counter = Counter()

    def rec(start, left, acc):
        if left == 0:
            out[acc] += 1
            return
        for i in range(start, len(degrees)):
            rec(i, left - 1, acc + degrees[i])

    zero = degrees[0] - degrees[0]
    rec(0, k, zero)
    return out


def odd_square_sum(d1: int) -> int:
    """``sum_{m=0}^{d1} (2m+1)^2``."""
    return sum((2 * m + 1) ** 2 for m in range(d1 + 1))
