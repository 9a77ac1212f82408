import pytest

from degencalc.chow import ThreefoldClass, triple
from degencalc.models import (
    FACTS,
    branch_class,
    cover_cohomology,
    h2_tx,
    invariants,
    model_data,
    moduli_count,
    moduli_dimension,
    normal_sheaf_rows,
    tangent_table,
)

O = ThreefoldClass.of(0, 0, 0)


def test_registry():
    assert model_data("II").has_bundle and model_data("III").has_bundle
    assert not model_data("I").has_bundle
    assert model_data("IV").metadata["base"] == "F_4"
    with pytest.raises(ValueError):
        model_data("V")
    with pytest.raises(ValueError):
        branch_class("IV", 5)


@pytest.mark.parametrize("kind", ["II", "III"])
def test_branch_is_disjoint_from_e(kind):
    y = model_data(kind).threefold
    b0 = branch_class(kind, 6).b0_class
    e = ThreefoldClass.of(1, 0, 0)
    for probe in (ThreefoldClass.of(0, 1, 0), ThreefoldClass.of(0, 0, 1), e):
        assert triple(y, b0, e, probe) == 0


@pytest.mark.parametrize("d1", range(1, 12))
def test_branch_halves_integrally(d1):
    spec = branch_class("II", d1)
    assert spec.l_class * 2 == spec.b_class
    assert spec.parity == ("odd" if d1 % 2 else "even")


@pytest.mark.parametrize("kind,d1", [("II", 5), ("II", 6), ("III", 5), ("III", 8)])
def test_cover_structure_sheaf(kind, d1):
    total = cover_cohomology(kind, d1, O).total
    pg = invariants(d1)[1]
    assert total.values == (1, 0, 0, pg)


def test_cover_split_is_sum():
    cov = cover_cohomology("II", 7, ThreefoldClass.of(1, 1, 1))
    total, inv, anti = cov
    assert total == inv + anti == cov.total


@pytest.mark.parametrize("d1", [5, 6, 7])
def test_normal_rows(d1):
    n = moduli_count(d1)
    assert normal_sheaf_rows("II", d1).values == (n - 1, 0, d1 % 2, 0)


def test_type_iii_even_normal_sheaf_h2_vanishes():
    assert normal_sheaf_rows("III", 6).values[2] == 0


def test_invariants():
    assert invariants(5) == (2, 4)
    assert invariants(6) == (16, 10)
    with pytest.raises(ValueError):
        invariants(4)


@pytest.mark.parametrize("kind", ["II", "III"])
@pytest.mark.parametrize("d1", range(5, 12))
def test_moduli_dimension_rederived(kind, d1):
    # the closed form agrees with the sequence chain, not just with itself
    tx = tangent_table(kind, d1).tx
    assert tx[0] == (0, 0)
    assert tx[1] == (moduli_dimension(kind, d1),) * 2


def test_moduli_dimension_values():
    assert moduli_dimension("II", 5) == 269
    assert moduli_dimension("III", 5) == 270
    assert moduli_dimension("II", 6) == 438
    with pytest.raises(ValueError):
        moduli_dimension("IV", 5)


@pytest.mark.parametrize("d1", [5, 7, 9, 11])
def test_h2_odd_type_ii(d1):
    r = h2_tx("II", d1)
    assert r.consistent and r.value == (0, 0) and r.status == "assumed"
    assert r.exactness == (0, 1)


@pytest.mark.parametrize("d1", [8, 10])
def test_h2_even_type_ii_consistent(d1):
    r = h2_tx("II", d1)
    assert r.consistent and r.value == (1, 1)


def test_h2_even_type_ii_d1_6_conflicts():
    # at d1 = 6 the twisted tangent sheaf has h^2 = 2 exactly, forcing h^2(T_X') = 3
    r = h2_tx("II", 6)
    assert not r.consistent
    assert r.exactness == (3, 3)
    assert r.status == "fail"


def test_h2_type_iii():
    r = h2_tx("III", 5)
    assert r.consistent and r.value == (2, 2) and r.exactness == (2, 3)
    assert h2_tx("III", 7).asserted is None
    assert h2_tx("II", 5, use_facts=False).status == "interval"


def test_facts_are_tagged():
    for name, fact in FACTS.items():
        assert fact.name == name and fact.source
