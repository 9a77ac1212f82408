"""Divisor ledger for the type IV degeneration.

The type IV threefold is not a P^1-bundle tower, so nothing here computes
cohomology.  The module stores the divisor expansions on the models
``Y~ -> Y'``, ``Y_1`` and checks that they are mutually consistent:
crepancy of ``tau``, ``-K = 4 H`` on both sides, and the parity
obstruction for the degree ``d`` of the degenerating surface.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

__all__ = [
    "BASES",
    "DivisorVector",
    "PullbackMap",
    "LedgerCheck",
    "LedgerReport",
    "TAU",
    "ANTICANONICAL",
    "HYPERPLANE_PULLBACK",
    "Y0_ANTICANONICAL",
    "ASSUMPTIONS",
    "verify_crepant_tau",
    "verify_hyperplane",
    "parity_admissible",
    "parity_table",
    "singularity_membership",
]

BASES: dict[str, tuple[str, ...]] = {
    "Y~": ("F", "D~", "Sigma~", "E~1", "E~2", "E~3", "E~4"),
    "Y'": ("F", "D'", "E'1"),
    "Y1": ("F", "D1", "Sigma1"),
    "Y0": ("F", "Sigma"),
}


@dataclass(frozen=True)
class DivisorVector:
    basis: str
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != len(BASES[self.basis]):
            raise ValueError(f"basis {self.basis} has {len(BASES[self.basis])} elements, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_terms(cls, basis: str, terms: Mapping[str, object]) -> DivisorVector:
        names = BASES[basis]
        unknown = set(terms) - set(names)
        if unknown:
            raise KeyError(f"{sorted(unknown)} not in basis {basis}")
        return cls(basis, tuple(Fraction(terms.get(n, 0)) for n in names))

    @classmethod
    def zero(cls, basis: str) -> DivisorVector:
        return cls(basis, (0,) * len(BASES[basis]))

    def __add__(self, other: DivisorVector) -> DivisorVector:
        self._same(other)
        return DivisorVector(self.basis, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: DivisorVector) -> DivisorVector:
        self._same(other)
        return DivisorVector(self.basis, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __mul__(self, k) -> DivisorVector:
        k = Fraction(k)
        return DivisorVector(self.basis, tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def _same(self, other):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(BASES[self.basis], self.coords))

    def __str__(self):
        terms = [f"{c}*{n}" for n, c in zip(BASES[self.basis], self.coords) if c]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class PullbackMap:
    """Linear map on divisor coordinates; one column per source basis element."""

    source: str
    target: str
    columns: tuple[DivisorVector, ...]

    def __post_init__(self):
        if len(self.columns) != len(BASES[self.source]):
            raise ValueError("one column per source basis element is required")
        if any(c.basis != self.target for c in self.columns):
            raise ValueError("columns must live in the target basis")

    def __call__(self, v: DivisorVector) -> DivisorVector:
        if v.basis != self.source:
            raise ValueError(f"expected a divisor on {self.source}, got {v.basis}")
        out = DivisorVector.zero(self.target)
        for coeff, col in zip(v.coords, self.columns):
            out = out + coeff * col
        return out


_h = Fraction(1, 2)

TAU = PullbackMap(
    "Y'",
    "Y~",
    (
        # F is pulled back from P^1 on both sides
        DivisorVector.from_terms("Y~", {"F": 1}),
        DivisorVector.from_terms("Y~", {"D~": 1, "E~2": _h, "Sigma~": 1, "E~3": _h, "E~4": 1}),
        DivisorVector.from_terms("Y~", {"E~1": 1, "E~2": 1, "Sigma~": 1, "E~3": _h, "E~4": _h}),
    ),
)

ANTICANONICAL = {
    "Y~": DivisorVector.from_terms("Y~", {"F": 12, "D~": 4, "Sigma~": 6, "E~1": 2, "E~2": 4, "E~3": 3, "E~4": 5}),
    "Y'": DivisorVector.from_terms("Y'", {"F": 12, "D'": 4, "E'1": 2}),
    "Y1": DivisorVector.from_terms("Y1", {"Sigma1": 6, "D1": 4, "F": 12}),
}

Y0_ANTICANONICAL = DivisorVector.from_terms("Y0", {"Sigma": 6, "F": 12})

HYPERPLANE_PULLBACK = {
    "Y'": DivisorVector.from_terms("Y'", {"F": 3, "D'": 1, "E'1": _h}),
    "Y1": DivisorVector.from_terms("Y1", {"F": 3, "D1": 1, "Sigma1": Fraction(3, 2)}),
}

ASSUMPTIONS = (
    "tau^*F = F (F is the fiber over P^1 on every model)",
    "H^1(Y~, B_d) = 0 by Kawamata-Viehweg, since -K_Y~ is the pullback of -K_Y and is nef and big",
    "-K_Y = 4H on the degeneration of P^3",
)


@dataclass(frozen=True)
class LedgerCheck:
    name: str
    expected: DivisorVector
    actual: DivisorVector

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def mismatches(self) -> list[tuple[str, Fraction, Fraction]]:
        names = BASES[self.expected.basis]
        return [
            (n, x, y) for n, x, y in zip(names, self.expected.coords, self.actual.coords) if x != y
        ]


@dataclass(frozen=True)
class LedgerReport:
    checks: tuple[LedgerCheck, ...]
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_crepant_tau(
    tau: PullbackMap = TAU,
    anticanonical: Mapping[str, DivisorVector] = ANTICANONICAL,
) -> LedgerReport:
    """``tau^*(-K_{Y'}) == -K_{Y~}`` coordinatewise.  Mismatches are reported, not raised."""
    actual = tau(anticanonical["Y'"])
    return LedgerReport((LedgerCheck("tau^*(-K_Y') = -K_Y~", anticanonical["Y~"], actual),))


def verify_hyperplane(
    hyperplane: Mapping[str, DivisorVector] = HYPERPLANE_PULLBACK,
    anticanonical: Mapping[str, DivisorVector] = ANTICANONICAL,
    scale: int = 4,
) -> LedgerReport:
    """``scale * (pullback of H) == -K`` on ``Y'`` and on ``Y1``."""
    checks = tuple(
        LedgerCheck(f"{scale}*H = -K on {basis}", anticanonical[basis], scale * hyperplane[basis])
        for basis in ("Y'", "Y1")
    )
    return LedgerReport(checks)


def parity_admissible(d: int) -> tuple[bool, Fraction]:
    """Whether a surface of degree ``d`` can sit on the type IV degeneration.

    The curve cut on a general fiber meets each conic of the conic fibration in
    ``d/2`` points (``K . conic = -2`` and ``d K + 4 B = 0``).  One conic is a
    double line, so ``d/2`` must be even.
    """
    if d < 4:
        raise ValueError("d must be at least 4")
    points = Fraction(d, 2)
    return d % 4 == 0, points


def parity_table(lo: int = 4, hi: int = 40) -> list[tuple[int, bool, Fraction]]:
    return [(d, *parity_admissible(d)) for d in range(lo, hi + 1)]


def singularity_membership(d: int) -> list[str]:
    """Qualitative facts asserted for admissible ``d``; recorded, not computed."""
    if not parity_admissible(d)[0]:
        return []
    return [
        f"B_{d} is a smooth surface",
        f"B_{d} does not contain the unique singular point p of Y",
        f"B_{d} is composed of a pencil of curves",
    ]
