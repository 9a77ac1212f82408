"""Dimension bookkeeping for short exact sequences of sheaves.

For ``0 -> A -> B -> C -> 0`` on an n-fold the long exact sequence

    0 -> H^0A -> H^0B -> H^0C -> H^1A -> ... -> H^nC -> 0

is a chain of ``3(n+1)`` spaces ``V_0, V_1, ...`` in which consecutive maps
have ranks ``r_0, r_1, ...`` and exactness means ``dim V_k = r_{k-1} + r_k``.
Given partial knowledge of the dimensions, :func:`solve_ses` enumerates every
nonnegative rank assignment compatible with it and reports, for each
dimension, the tightest interval of values that occur.

The solver knows nothing about geometry.  Vanishing theorems and other
external input enter only as :class:`Assumption` objects toggled in by the
caller.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from .chow import SurfaceClass, ThreefoldClass
from .cohomology import CohVector, h_split, h_threefold

if TYPE_CHECKING:
    from .models import DegenerationModel

__all__ = [
    "PartialCohVector",
    "partial",
    "SESProblem",
    "SESSolution",
    "Assumption",
    "InfeasibleSequence",
    "UnderdeterminedSequence",
    "solve_ses",
    "apply_assumptions",
    "intersect",
    "euler_tangent",
    "euler_terms",
    "TwistedTangent",
    "tangent_twisted",
]

# a partial vector is a CohVector whose entries may be open-ended intervals
PartialCohVector = CohVector
UNKNOWN = (0, None)


def partial(entries: Iterable) -> CohVector:
    """Build a partial vector from ints, ``None`` (unknown) and ``(lo, hi)`` pairs."""
    out = []
    for x in entries:
        if x is None:
            out.append(UNKNOWN)
        elif isinstance(x, tuple):
            out.append((int(x[0]), None if x[1] is None else int(x[1])))
        else:
            out.append((int(x), int(x)))
    return CohVector(tuple(out))


class InfeasibleSequence(ValueError):
    """No long exact sequence has the given dimensions."""


class UnderdeterminedSequence(ValueError):
    """Two consecutive unknowns leave a connecting rank unbounded."""


@dataclass(frozen=True)
class SESProblem:
    a: CohVector
    b: CohVector
    c: CohVector

    def __post_init__(self):
        if not len(self.a) == len(self.b) == len(self.c):
            raise ValueError("A, B and C must have the same length")

    @property
    def dim(self) -> int:
        return len(self.a) - 1


@dataclass(frozen=True)
class SESSolution:
    a: CohVector
    b: CohVector
    c: CohVector

    @property
    def forced(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(lo == hi for lo, hi in v.entries) for v in (self.a, self.b, self.c))

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c


def _chain(p: SESProblem) -> list[tuple[int, int | None]]:
    out = []
    for i in range(p.dim + 1):
        out += [p.a[i], p.b[i], p.c[i]]
    return out


def _rank_bounds(chain):
    # r_k <= dim V_k and r_k <= dim V_{k+1}; the last map goes to 0
    his = [hi for _, hi in chain] + [0]
    bounds = []
    for k in range(len(chain)):
        cands = [h for h in (his[k], his[k + 1]) if h is not None]
        if not cands:
            raise UnderdeterminedSequence(f"rank of map {k} in the long exact sequence is unbounded")
        bounds.append(min(cands))
    return bounds


def _fits(v, interval):
    lo, hi = interval
    return v >= lo and (hi is None or v <= hi)


def solve_ses(p: SESProblem) -> SESSolution:
    """Tightest intervals for every ``h^i`` of ``A``, ``B``, ``C``.

    Raises :class:`InfeasibleSequence` when the data admit no long exact
    sequence and :class:`UnderdeterminedSequence` when some connecting rank is
    unbounded.
    """
    chain = _chain(p)
    n = len(chain)
    ub = _rank_bounds(chain)

    # fwd[k]: values of r_k reachable from the left end
    fwd: list[set[int]] = []
    prev = {0}
    for k in range(n):
        cur = {r for r in range(ub[k] + 1) if any(_fits(x + r, chain[k]) for x in prev)}
        fwd.append(cur)
        prev = cur
    # bwd[k]: values of r_k from which the right end is reachable (r_{n-1} = 0)
    bwd: list[set[int]] = [set()] * n
    bwd[n - 1] = {0}
    for k in range(n - 2, -1, -1):
        bwd[k] = {r for r in range(ub[k] + 1) if any(_fits(r + y, chain[k + 1]) for y in bwd[k + 1])}
    if not fwd[n - 1] & bwd[n - 1]:
        raise InfeasibleSequence("no long exact sequence is compatible with the given dimensions")

    values = []
    for k in range(n):
        left = fwd[k - 1] if k else {0}
        right = fwd[k] & bwd[k]
        vals = {x + r for x in left for r in right if _fits(x + r, chain[k])}
        values.append((min(vals), max(vals)))

    vecs = [CohVector(tuple(values[3 * i + j] for i in range(p.dim + 1))) for j in range(3)]
    sol = SESSolution(*vecs)
    if all(v.is_point for v in sol):
        assert sol.b.chi() == sol.a.chi() + sol.c.chi()
    return sol


def intersect(u: CohVector, v: CohVector) -> CohVector:
    """Entrywise intersection of two interval vectors; empty means contradiction."""
    out = []
    for (l1, h1), (l2, h2) in zip(u.entries, v.entries):
        lo = max(l1, l2)
        his = [h for h in (h1, h2) if h is not None]
        hi = min(his) if his else None
        if hi is not None and hi < lo:
            raise InfeasibleSequence(f"intervals [{l1}, {h1}] and [{l2}, {h2}] are disjoint")
        out.append((lo, hi))
    return CohVector(tuple(out))


@dataclass(frozen=True)
class Assumption:
    """A dimension asserted from outside the engine (a published claim, a vanishing theorem).

    ``target`` is ``"a"``, ``"b"`` or ``"c"``; ``degree`` is the cohomological degree.
    """

    name: str
    target: str
    degree: int
    value: int
    source: str = ""
    note: str = field(default="", compare=False)


def apply_assumptions(p: SESProblem, assumptions: Sequence[Assumption]) -> SESProblem:
    vecs = {"a": p.a, "b": p.b, "c": p.c}
    for fact in assumptions:
        v = vecs[fact.target]
        pinned = list(v.entries)
        pinned[fact.degree] = (fact.value, fact.value)
        try:
            vecs[fact.target] = intersect(v, CohVector(tuple(pinned)))
        except InfeasibleSequence as exc:
            raise InfeasibleSequence(f"assumption {fact.name!r} contradicts known data: {exc}") from None
    return SESProblem(**vecs)


# -- tangent sheaves of the bundle threefolds -----------------------------------

def euler_terms(model: DegenerationModel, twist: ThreefoldClass | None = None) -> tuple[CohVector, CohVector]:
    """``h(O^3 (x) M)`` and ``h(sum_rho O(D_rho) (x) M)`` for the twisted Euler sequence."""
    y = model.threefold
    tw = twist if twist is not None else ThreefoldClass.of(0, 0, 0)
    rank = len(model.rays[0][0])
    left = h_split(y, [ThreefoldClass.of(0, 0, 0)] * rank, tw)
    middle = h_split(y, [cls for _, cls in model.rays], tw)
    return left, middle


def euler_tangent(model: DegenerationModel, classes: Sequence[ThreefoldClass] | None = None) -> CohVector:
    """``h^i(T_{Y'})`` from the toric Euler sequence ``0 -> O^3 -> sum O(D_rho) -> T -> 0``.

    ``classes`` overrides the ray classes (used to test the solver's rejection
    of impossible data).
    """
    y = model.threefold
    left = h_split(y, [ThreefoldClass.of(0, 0, 0)] * 3)
    if classes is None:
        _, middle = euler_terms(model)
    else:
        middle = h_split(y, list(classes))
    sol = solve_ses(SESProblem(left, middle, partial([None] * 4)))
    return sol.c


@dataclass(frozen=True)
class TwistedTangent:
    """Pieces of ``h(T_{Y'} (x) L^v)`` as computed along the relative tangent sequence."""

    relative: CohVector        # Theta_{Y'/T} (x) L^v
    base_pieces: tuple[CohVector, ...]  # line-bundle pieces of pi^*T_T (x) L^v
    base: CohVector            # pi^*T_T (x) L^v
    via_relative: CohVector    # middle term from 0 -> Theta -> T -> pi^*T_T -> 0
    via_euler: CohVector       # middle term from the twisted Euler sequence
    total: CohVector           # intersection of both routes


def tangent_twisted(model: DegenerationModel, d1: int) -> TwistedTangent:
    """``h^i(T_{Y'} (x) L^v)`` for the cover with branch parameter ``d1``.

    ``Theta_{Y'/T} = O(2E + pi^*D0)``.  On ``T = F_e`` the tangent bundle sits
    in ``0 -> O(2 sigma + e l) -> T_T -> O(2 l) -> 0``, which splits for
    ``e = 0``.  Both this route and the Euler sequence twisted by ``L^v`` are
    solved and the resulting intervals intersected.
    """
    if d1 < 1:
        raise ValueError("d1 must be positive")
    y = model.threefold
    e = y.base.e
    dual = -model.branch(d1).l_class

    rel = h_threefold(y, ThreefoldClass(2, y.d0) + dual)
    vertical = ThreefoldClass(0, SurfaceClass(2, e)) + dual
    horizontal = ThreefoldClass(0, SurfaceClass(0, 2)) + dual
    pieces = (h_threefold(y, vertical), h_threefold(y, horizontal))
    if e == 0:
        base = pieces[0] + pieces[1]
    else:
        base = solve_ses(SESProblem(pieces[0], partial([None] * 4), pieces[1])).b
    via_rel = solve_ses(SESProblem(rel, partial([None] * 4), base)).b

    left, middle = euler_terms(model, dual)
    via_euler = solve_ses(SESProblem(left, middle, partial([None] * 4))).c
    return TwistedTangent(rel, pieces, base, via_rel, via_euler, intersect(via_rel, via_euler))
