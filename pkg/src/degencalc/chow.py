"""Intersection numbers on Hirzebruch surfaces and on P^1-bundles over them.

Conventions
-----------
On ``F_e`` a divisor class is written ``a*sigma + b*l`` where ``sigma`` is the
*negative* section (``sigma^2 = -e``) and ``l`` is a fiber.  Every pair
``O_T(x, y)`` elsewhere in the package means ``x*sigma + y*l`` in this basis.

A bundle threefold is ``Y' = P(O + O(-D0))`` over ``F_e``.  ``E`` denotes the
section with normal bundle ``O_E(-D0)``; a threefold class is
``m*E + pi^*(P)``.  The Chow ring relation used throughout is
``E . (E + pi^*D0) = 0`` (the two sections are disjoint).

All arithmetic is exact (``fractions.Fraction``).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "HirzebruchBase",
    "SurfaceClass",
    "BundleThreefold",
    "ThreefoldClass",
    "ConeSolution",
    "NotNefAndBig",
    "surface_pair",
    "canonical_surface",
    "triple",
    "canonical_threefold",
    "cone_discrepancy",
    "anticanonical_class_cone",
    "anticanonical_cube_cone",
    "anticanonical_cube_closed_form",
    "anticanonical_cube_bullets",
    "is_nef_and_big",
    "is_ample",
    "iter_cone_candidates",
    "scan_candidates",
    "classify_degenerations",
    "boundary_hits",
    "anticanonical_divisible_by_four",
]


def _q(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed; use Fraction")
    if not isinstance(x, Rational):
        raise TypeError(f"expected a rational number, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class HirzebruchBase:
    """The Hirzebruch surface ``F_e``."""

    e: int

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 0:
            raise ValueError(f"e must be a nonnegative integer, got {self.e!r}")


@dataclass(frozen=True)
class SurfaceClass:
    """Divisor class ``a*sigma + b*l`` on ``F_e``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))

    @property
    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> SurfaceClass:
        return SurfaceClass(-self.a, -self.b)

    def __mul__(self, k) -> SurfaceClass:
        k = _q(k)
        return SurfaceClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self):
        return f"SurfaceClass({self.a}, {self.b})"


ZERO_SURFACE = SurfaceClass(0, 0)


@dataclass(frozen=True)
class BundleThreefold:
    """``P(O_T + O_T(-D0))`` over ``T = F_e``."""

    base: HirzebruchBase
    d0: SurfaceClass

    def __post_init__(self):
        if not self.d0.is_integral:
            raise ValueError("the twisting divisor D0 must have integer coefficients")

    @classmethod
    def over(cls, e: int, a: int, b: int) -> BundleThreefold:
        return cls(HirzebruchBase(e), SurfaceClass(a, b))


@dataclass(frozen=True)
class ThreefoldClass:
    """Divisor class ``m*E + pi^*(pull)`` on a bundle threefold."""

    m: Fraction
    pull: SurfaceClass

    def __post_init__(self):
        object.__setattr__(self, "m", _q(self.m))
        if not isinstance(self.pull, SurfaceClass):
            object.__setattr__(self, "pull", SurfaceClass(*self.pull))

    @classmethod
    def of(cls, m, a, b) -> ThreefoldClass:
        return cls(m, SurfaceClass(a, b))

    @property
    def is_integral(self) -> bool:
        return self.m.denominator == 1 and self.pull.is_integral

    def __add__(self, other: ThreefoldClass) -> ThreefoldClass:
        return ThreefoldClass(self.m + other.m, self.pull + other.pull)

    def __sub__(self, other: ThreefoldClass) -> ThreefoldClass:
        return ThreefoldClass(self.m - other.m, self.pull - other.pull)

    def __neg__(self) -> ThreefoldClass:
        return ThreefoldClass(-self.m, -self.pull)

    def __mul__(self, k) -> ThreefoldClass:
        k = _q(k)
        return ThreefoldClass(k * self.m, k * self.pull)

    __rmul__ = __mul__

    def __repr__(self):
        return f"ThreefoldClass({self.m}, {self.pull.a}, {self.pull.b})"


# -- surfaces ---------------------------------------------------------------

def _pair(e, a1, b1, a2, b2):
    # sigma^2 = -e, sigma.l = 1, l^2 = 0; works on ints or Fractions
    return -e * a1 * a2 + a1 * b2 + b1 * a2


def surface_pair(base: HirzebruchBase, c1: SurfaceClass, c2: SurfaceClass) -> Fraction:
    """Intersection number ``c1 . c2`` on ``F_e``."""
    return Fraction(_pair(base.e, c1.a, c1.b, c2.a, c2.b))


def canonical_surface(base: HirzebruchBase) -> SurfaceClass:
    return SurfaceClass(-2, -(base.e + 2))


# -- bundle threefolds --------------------------------------------------------

def _triple(e, d0a, d0b, c1, c2, c3):
    """Trilinear form on ``(m, a, b)`` triples; works on ints or Fractions.

    Reduction rules: E.E = E.pi^*(-D0), E.pi^*A.pi^*B = A.B and three
    pullbacks meet trivially.  Hence E^3 = D0^2 and E^2.pi^*A = -D0.A.
    """
    m1, a1, b1 = c1
    m2, a2, b2 = c2
    m3, a3, b3 = c3
    e3 = _pair(e, d0a, d0b, d0a, d0b)
    e2 = (
        m1 * m2 * _pair(e, -d0a, -d0b, a3, b3)
        + m1 * m3 * _pair(e, -d0a, -d0b, a2, b2)
        + m2 * m3 * _pair(e, -d0a, -d0b, a1, b1)
    )
    e1 = m1 * _pair(e, a2, b2, a3, b3) + m2 * _pair(e, a1, b1, a3, b3) + m3 * _pair(e, a1, b1, a2, b2)
    return m1 * m2 * m3 * e3 + e2 + e1


def _coords(c: ThreefoldClass):
    return (c.m, c.pull.a, c.pull.b)


def triple(y: BundleThreefold, c1: ThreefoldClass, c2: ThreefoldClass, c3: ThreefoldClass) -> Fraction:
    """Triple intersection ``c1 . c2 . c3`` on ``Y'``."""
    return Fraction(_triple(y.base.e, y.d0.a, y.d0.b, _coords(c1), _coords(c2), _coords(c3)))


def canonical_threefold(y: BundleThreefold) -> ThreefoldClass:
    """``K_{Y'} = -2E + pi^*(K_T - D0)``."""
    return ThreefoldClass(-2, canonical_surface(y.base) - y.d0)


# -- cone degenerations ---------------------------------------------------------

class NotNefAndBig(ValueError):
    """Raised when ``a*sigma + b*l`` on ``F_e`` is not nef and big."""


def is_nef_and_big(a: int, b: int, e: int) -> bool:
    if e < 0 or a <= 0 or b < a * e:
        return False
    return e > 0 or b > 0


def is_ample(a: int, b: int, e: int) -> bool:
    return a > 0 and b > a * e


def _check_cone_input(a, b, e):
    for name, v in (("a", a), ("b", b), ("e", e)):
        if not isinstance(v, int):
            raise TypeError(f"{name} must be an integer")
    if not is_nef_and_big(a, b, e):
        raise NotNefAndBig(f"D = {a}*sigma + {b}*l on F_{e} is not nef and big")


def cone_discrepancy(a: int, b: int, e: int) -> tuple[Fraction, Fraction]:
    """Discrepancies ``(c, d)`` in ``K_V = f^*K_W + c*Sigma + d*p^*sigma``.

    ``c = (2-a)/a``; ``d = (2-e)/e`` when ``D`` is nef but not ample and
    ``d = 0`` when ``D`` is ample.
    """
    _check_cone_input(a, b, e)
    c = Fraction(2 - a, a)
    d = Fraction(0) if is_ample(a, b, e) else Fraction(2 - e, e)
    return c, d


def anticanonical_class_cone(a: int, b: int, e: int) -> ThreefoldClass:
    """The pullback ``f^*(-K_W)`` as a class on ``V = P(O + O(-D))``."""
    c, d = cone_discrepancy(a, b, e)
    y = BundleThreefold.over(e, a, b)
    return -canonical_threefold(y) + ThreefoldClass(c, SurfaceClass(d, 0))


def _scaled_triple(a, b, e):
    """Integer-scaled triple expansion of ``f^*(-K_W)``: ``(cube * den^3, den)``.

    The class ``(2 + c) Sigma + pi^*((a + 2 + d) sigma + (b + e + 2) l)`` is
    multiplied by a common denominator so the expansion runs on ints.
    """
    ample = b > a * e
    den = a if ample else a * e
    m = (a + 2) * den // a
    if ample:
        sa = (a + 2) * den
    else:
        # a + 2 + (2 - e)/e
        sa = (a + 2) * den + (2 - e) * a
    sb = (b + e + 2) * den
    cls = (m, sa, sb)
    return _triple(e, a, b, cls, cls, cls), den


def _scaled_cube(a, b, e):
    t, den = _scaled_triple(a, b, e)
    return Fraction(t, den**3)


def anticanonical_cube_cone(a: int, b: int, e: int) -> Fraction:
    """``(-K_W)^3`` by expanding ``f^*(-K_W)`` through the Chow relations."""
    _check_cone_input(a, b, e)
    return _scaled_cube(a, b, e)


def anticanonical_cube_closed_form(a: int, b: int, e: int) -> Fraction:
    """The two published closed forms for ``(-K_W)^3`` (ample / non-ample)."""
    _check_cone_input(a, b, e)
    if is_ample(a, b, e):
        return Fraction((a + 2) ** 2, a * a) * (-a * a * e + 2 * a * b + a * e - 2 * b + 6 * a)
    return Fraction(a + 2, a * e) * (a * a * e * e + a * e * e + e * e + 6 * a * e + 12)


def anticanonical_cube_bullets(a: int, b: int, e: int) -> Fraction:
    """Ample case only: cube assembled from the three listed intersection numbers.

    Uses ``Sigma^3``, ``Sigma^2 A`` and ``Sigma A^2`` as printed, with
    ``-f^*K_W = ((a+2)/a) Sigma + A``.
    """
    _check_cone_input(a, b, e)
    if not is_ample(a, b, e):
        raise ValueError("the bullet expansion applies to the ample case only")
    s3 = -a * a * e + 2 * a * b
    s2a = (a * a + 2 * a) * e + (-2 * a * b - a * e - 2 * a - 2 * b)
    sa2 = -(a * a + 4 * a + 4) * e + (2 * a * b + 2 * a * e + 4 * a + 4 * b + 4 * e + 8)
    t = Fraction(a + 2, a)
    return t**3 * s3 + 3 * t**2 * s2a + 3 * t * sa2


class ConeSolution(NamedTuple):
    a: int
    b: int
    e: int
    case: str  # "ample" or "non-ample"


def iter_cone_candidates(
    max_a: int, max_e: int, max_b: int, *, a_values: Iterable[int] | None = None
) -> Iterator[tuple[int, int, int]]:
    """All nef-and-big ``(a, b, e)`` with ``a <= max_a``, ``e <= max_e``, ``b <= a*e + max_b``.

    ``a_values`` restricts the scan to a subset of ``1..max_a`` (one shard).
    """
    for a in range(1, max_a + 1) if a_values is None else sorted(a_values):
        if not 1 <= a <= max_a:
            continue
        for e in range(0, max_e + 1):
            for b in range(a * e, a * e + max_b + 1):
                if is_nef_and_big(a, b, e):
                    yield a, b, e


def scan_candidates(candidates: Iterable[tuple[int, int, int]], *, cross_check: bool = False) -> list[ConeSolution]:
    """Return the candidates with ``(-K_W)^3 = 64``.

    With ``cross_check`` every candidate is also evaluated through the closed
    forms (and the bullet expansion when ample); an ``AssertionError`` is raised
    on the first disagreement.
    """
    out = []
    for a, b, e in candidates:
        # integer cross-multiplication; Fractions are too slow for the full box
        t, den = _scaled_triple(a, b, e)
        ample = b > a * e
        if cross_check:
            if ample:
                closed = (a + 2) ** 2 * (-a * a * e + 2 * a * b + a * e - 2 * b + 6 * a)
                ok = t * a * a == closed * den**3
            else:
                closed = (a + 2) * (a * a * e * e + a * e * e + e * e + 6 * a * e + 12)
                ok = t * a * e == closed * den**3
            if not ok:
                raise AssertionError(
                    f"closed form disagrees at {(a, b, e)}: "
                    f"{anticanonical_cube_closed_form(a, b, e)} != {Fraction(t, den**3)}"
                )
            if ample and _bullets_scaled(a, b, e) != t:
                raise AssertionError(f"bullet expansion disagrees at {(a, b, e)}")
        if t == 64 * den**3:
            out.append(ConeSolution(a, b, e, "ample" if ample else "non-ample"))
    return out


def _bullets_scaled(a, b, e):
    # a^3 times the bullet expansion; equals the scaled triple since den = a
    s3 = -a * a * e + 2 * a * b
    s2a = (a * a + 2 * a) * e + (-2 * a * b - a * e - 2 * a - 2 * b)
    sa2 = -(a * a + 4 * a + 4) * e + (2 * a * b + 2 * a * e + 4 * a + 4 * b + 4 * e + 8)
    p = a + 2
    return p**3 * s3 + 3 * p * p * a * s2a + 3 * p * a * a * sa2


def _scan_a(args):
    a, max_e, max_b, cross_check = args
    return scan_candidates(iter_cone_candidates(a, max_e, max_b, a_values=[a]), cross_check=cross_check)


def classify_degenerations(
    max_a: int = 64,
    max_e: int = 16,
    max_b: int = 128,
    *,
    cross_check: bool = False,
    workers: int = 1,
) -> list[ConeSolution]:
    """Cone degenerations of ``P^3`` in the search box, sorted lexicographically.

    ``max_b`` bounds ``b - a*e``.  ``workers > 1`` shards the box by ``a``
    across processes; the result does not depend on the sharding.
    """
    if min(max_a, max_b) < 1 or max_e < 0:
        raise ValueError("search bounds must be positive")
    if workers > 1:
        jobs = [(a, max_e, max_b, cross_check) for a in range(1, max_a + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = [s for part in pool.map(_scan_a, jobs) for s in part]
    else:
        found = scan_candidates(iter_cone_candidates(max_a, max_e, max_b), cross_check=cross_check)
    return sorted(found)


def anticanonical_divisible_by_four(a: int, b: int, e: int) -> bool:
    """Whether ``-K_W`` is divisible by 4 in the class group of the cone ``W``.

    ``Cl(W)`` is ``Pic(V)`` modulo the contracted divisors: ``Sigma`` when
    ``D`` is ample, ``Sigma`` and ``p^*sigma`` otherwise.  ``-K_V`` maps to
    ``(a+2) sigma + (b+e+2) l`` resp. ``(b+e+2) l``.  A degeneration of
    ``P^3`` carries the limit ``L`` of ``O(1)`` with ``-K = 4L``.
    """
    _check_cone_input(a, b, e)
    if is_ample(a, b, e):
        return (a + 2) % 4 == 0 and (b + e + 2) % 4 == 0
    return (b + e + 2) % 4 == 0


def boundary_hits(solutions: Iterable[ConeSolution], max_a: int, max_e: int, max_b: int) -> list[ConeSolution]:
    """Solutions lying on the edge of the search box (the box may be too small)."""
    return [
        s for s in solutions
        if s.a == max_a or s.e == max_e or s.b == s.a * s.e + max_b
    ]
