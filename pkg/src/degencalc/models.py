"""The four canonical degenerations of P^3 and double covers of types II and III.

Types II and III are the cones over the anticanonical F_0 and F_2.  Both are
resolved by a bundle threefold ``Y' = P(O + O(-D0))`` which is toric with six
rays.  The double cover ``X' -> Y'`` is branched over ``B = B0 (+ E if d1 is
odd)`` with ``B0 in |d1*E + pi^*(d1*D0)|``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chow import BundleThreefold, ThreefoldClass
from .cohomology import CohVector, h_threefold
from .lesolve import (
    Assumption,
    InfeasibleSequence,
    SESProblem,
    apply_assumptions,
    euler_tangent,
    partial,
    solve_ses,
    tangent_twisted,
)

__all__ = [
    "DegenerationModel",
    "CoverSpec",
    "CoverCohomology",
    "TangentTable",
    "H2Result",
    "FACTS",
    "model_data",
    "branch_class",
    "cover_cohomology",
    "normal_sheaf_rows",
    "invariants",
    "moduli_dimension",
    "moduli_count",
    "tangent_table",
    "h2_tx",
]

KINDS = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class CoverSpec:
    kind: str
    d1: int
    parity: str
    b_class: ThreefoldClass
    l_class: ThreefoldClass
    b0_class: ThreefoldClass


@dataclass(frozen=True)
class DegenerationModel:
    kind: str
    description: str
    threefold: BundleThreefold | None = None
    rays: tuple[tuple[tuple[int, int, int], ThreefoldClass], ...] = ()
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def has_bundle(self) -> bool:
        return self.threefold is not None

    def branch(self, d1: int) -> CoverSpec:
        return branch_class(self.kind, d1)


def _sigma(k=1):
    # pullback of k * (negative section)
    return ThreefoldClass.of(0, k, 0)


def _fiber(k=1):
    return ThreefoldClass.of(0, 0, k)


_E = ThreefoldClass.of(1, 0, 0)

_TYPE_II = DegenerationModel(
    kind="II",
    description="cone over the smooth quadric; Y' = P(O + O(-2,-2)) over F_0",
    threefold=BundleThreefold.over(0, 2, 2),
    rays=(
        ((1, 0, 2), _fiber()),
        ((0, 1, 2), _sigma()),
        ((-1, 0, 0), _fiber()),
        ((0, -1, 0), _sigma()),
        ((0, 0, 1), _E),
        ((0, 0, -1), _E + _sigma(2) + _fiber(2)),
    ),
)

_TYPE_III = DegenerationModel(
    kind="III",
    description="P(1,1,2,4), the cone over the quadric cone; Y' = P(O + O(-2 sigma - 4 l)) over F_2",
    threefold=BundleThreefold.over(2, 2, 4),
    rays=(
        ((1, 0, 4), _fiber()),
        ((0, 1, 2), _sigma()),
        ((-1, 2, 0), _fiber()),
        ((0, -1, 0), _sigma() + _fiber(2)),
        ((0, 0, 1), _E),
        ((0, 0, -1), _E + _sigma(2) + _fiber(4)),
    ),
)

_TYPE_I = DegenerationModel(kind="I", description="P^3 itself", metadata={"variety": "P^3"})

_TYPE_IV = DegenerationModel(
    kind="IV",
    description="anticanonical model of a conic bundle Y' in |2 zeta - p^*(12 l)| on P(V) over F_4",
    metadata={
        "base": "F_4",
        "bundle": "O_T(2 sigma + 12 l) + O_T(6 l) + O_T",
        "linear_system": "|2 zeta - p^*(12 l)|",
        "ambient": "P^34",
        "note": "rank-3 bundle; handled numerically by degencalc.typeiv only",
    },
)

_REGISTRY = {"I": _TYPE_I, "II": _TYPE_II, "III": _TYPE_III, "IV": _TYPE_IV}


def model_data(kind: str) -> DegenerationModel:
    try:
        return _REGISTRY[kind]
    except KeyError:
        raise ValueError(f"unknown degeneration type {kind!r}; expected one of {KINDS}") from None


def _bundle_model(kind: str) -> DegenerationModel:
    model = model_data(kind)
    if not model.has_bundle:
        raise ValueError(f"type {kind} has no bundle-threefold data; only II and III do")
    return model


def branch_class(kind: str, d1: int) -> CoverSpec:
    """Branch divisor ``B`` and ``L = B/2`` of the double cover of ``Y'``."""
    y = _bundle_model(kind).threefold
    if d1 < 1:
        raise ValueError("d1 must be a positive integer")
    b0 = ThreefoldClass(d1, d1 * y.d0)
    odd = d1 % 2 == 1
    b = b0 + ThreefoldClass.of(1, 0, 0) if odd else b0
    half = b * Fraction(1, 2)
    assert half.is_integral
    return CoverSpec(kind, d1, "odd" if odd else "even", b, half, b0)


@dataclass(frozen=True)
class CoverCohomology:
    invariant: CohVector
    anti: CohVector

    @property
    def total(self) -> CohVector:
        return self.invariant + self.anti

    def __iter__(self):
        yield self.total
        yield self.invariant
        yield self.anti


def cover_cohomology(kind: str, d1: int, f: ThreefoldClass) -> CoverCohomology:
    """``h^i(X', p^*O(f))`` split into invariant ``h(f)`` and anti-invariant ``h(f - L)``."""
    model = _bundle_model(kind)
    spec = branch_class(kind, d1)
    y = model.threefold
    return CoverCohomology(h_threefold(y, f), h_threefold(y, f - spec.l_class))


def normal_sheaf_rows(kind: str, d1: int, b: ThreefoldClass | None = None) -> CohVector:
    """``h(N_B)`` from ``0 -> O -> O(B) -> N_B -> 0`` on ``Y'``."""
    y = _bundle_model(kind).threefold
    if b is None:
        b = branch_class(kind, d1).b_class
    problem = SESProblem(h_threefold(y, ThreefoldClass.of(0, 0, 0)), h_threefold(y, b), partial([None] * 4))
    return solve_ses(problem).c


def invariants(d1: int) -> tuple[int, int]:
    """``(Vol, p_g)`` of the double cover of ``P^3`` branched in degree ``2*d1``."""
    if d1 < 5:
        raise ValueError("d1 must be at least 5 (general type)")
    return 2 * (d1 - 4) ** 3, (d1 - 1) * (d1 - 2) * (d1 - 3) // 6


def moduli_count(d1: int) -> int:
    """``N = (2d1+1)(2d1+2)(2d1+3)/6``, the dimension of ``H^0(O(B))``."""
    return (2 * d1 + 1) * (2 * d1 + 2) * (2 * d1 + 3) // 6


def moduli_dimension(kind: str, d1: int) -> int:
    """``h^1(T_{X'})`` as printed: ``N - 17``, except ``N - 16`` for type III with odd ``d1``."""
    if kind not in ("II", "III"):
        raise ValueError("moduli dimensions are tabulated for types II and III only")
    if d1 < 5:
        raise ValueError("d1 must be at least 5")
    n = moduli_count(d1)
    if kind == "III" and d1 % 2 == 1:
        return n - 16
    return n - 17


# -- external facts -------------------------------------------------------------

# Each fact pins one entry of the tangent-sheaf sequence 0 -> T_X' -> p^*T_Y' -> N -> 0.
FACTS = {
    "general_type": Assumption(
        "general_type", "a", 0, 0,
        source="X' is of general type, so h^0(T_X') = 0",
    ),
    "h2_tx_odd_II": Assumption(
        "h2_tx_odd_II", "a", 2, 0,
        source="H^2(T_X') = 0 for odd d1 (no anti-invariant part)",
    ),
    "h2_tx_even_II": Assumption(
        "h2_tx_even_II", "a", 2, 1,
        source="H^2(T_X') = 1 for even d1",
    ),
    "h2_tx_III_5": Assumption(
        "h2_tx_III_5", "a", 2, 2,
        source="type III, d1 = 5: h^2(T_X') = 2",
    ),
}


@dataclass(frozen=True)
class TangentTable:
    """The four columns of the tangent computation for one cover."""

    kind: str
    d1: int
    o_b: CohVector              # h(O(B))
    normal: CohVector           # h(N_B)
    euler_middle: CohVector     # h(sum O(D_rho))
    tangent: CohVector          # h(T_Y')
    twisted: object             # TwistedTangent
    pullback: CohVector         # h(p^*T_Y') = h(T_Y') + h(T_Y' (x) L^v)
    tx: CohVector               # h(T_X') with only the general-type fact


def tangent_table(kind: str, d1: int, facts: tuple[str, ...] = ("general_type",)) -> TangentTable:
    """Assemble every column of the tangent computation for the cover of type ``kind``.

    The ``N_B`` column follows the printed rows, i.e. ``h(N_B)`` on ``Y'``
    with no anti-invariant contribution.
    """
    from .lesolve import euler_terms

    model = _bundle_model(kind)
    y = model.threefold
    spec = branch_class(kind, d1)
    o_b = h_threefold(y, spec.b_class)
    normal = normal_sheaf_rows(kind, d1)
    _, middle = euler_terms(model)
    tangent = euler_tangent(model)
    tw = tangent_twisted(model, d1)
    pullback = tangent + tw.total
    problem = SESProblem(partial([None] * 4), pullback, normal)
    problem = apply_assumptions(problem, [FACTS[f] for f in facts])
    tx = solve_ses(problem).a
    return TangentTable(kind, d1, o_b, normal, middle, tangent, tw, pullback, tx)


@dataclass(frozen=True)
class H2Result:
    """``h^2(T_X')``: exactness-only interval, the asserted value and whether they agree."""

    kind: str
    d1: int
    exactness: tuple[int, int | None]
    asserted: int | None
    fact: str | None
    consistent: bool
    detail: str = ""

    @property
    def value(self) -> tuple[int, int | None]:
        if self.asserted is not None and self.consistent:
            return (self.asserted, self.asserted)
        return self.exactness

    @property
    def status(self) -> str:
        if self.asserted is None:
            return "interval" if self.exactness[0] != self.exactness[1] else "pass"
        return "assumed" if self.consistent else "fail"


def _h2_fact(kind: str, d1: int) -> str | None:
    if kind == "II":
        return "h2_tx_odd_II" if d1 % 2 else "h2_tx_even_II"
    if kind == "III" and d1 == 5:
        return "h2_tx_III_5"
    return None


def h2_tx(kind: str, d1: int, *, use_facts: bool = True) -> H2Result:
    """``h^2(T_X')`` by exactness, optionally with the asserted value toggled in.

    The asserted value is accepted only if the solve stays feasible with it;
    otherwise the result is flagged inconsistent and the exactness interval is
    returned instead.
    """
    table = tangent_table(kind, d1)
    exact = table.tx[2]
    name = _h2_fact(kind, d1) if use_facts else None
    if name is None:
        return H2Result(kind, d1, exact, None, None, True, "no published value" if kind == "III" else "")
    fact = FACTS[name]
    problem = SESProblem(partial([None] * 4), table.pullback, table.normal)
    try:
        sol = solve_ses(apply_assumptions(problem, [FACTS["general_type"], fact]))
    except InfeasibleSequence as exc:
        return H2Result(kind, d1, exact, fact.value, name, False, str(exc))
    return H2Result(kind, d1, exact, fact.value, name, sol.a[2] == (fact.value, fact.value))
