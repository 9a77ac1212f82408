from collections import Counter
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from degencalc.chow import BundleThreefold, HirzebruchBase, SurfaceClass, ThreefoldClass, canonical_surface, canonical_threefold
from degencalc.cohomology import (
    CohVector,
    NonIntegralClass,
    SplitBundle,
    h_p1,
    h_split,
    h_surface,
    h_threefold,
    lattice_oracle_h0,
    odd_square_sum,
    pushforward_surface,
    pushforward_threefold,
    rr_chi_surface,
    symmetric_power_degrees,
)
from degencalc.models import model_data

SETTINGS = settings(max_examples=200, derandomize=True, deadline=None)

small = st.integers(-12, 12)
base_e = st.integers(0, 6)


def kunneth(u, v):
    """Cohomology of an exterior product from the two factors."""
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] += x * y
    return tuple(out)


def test_p1():
    assert h_p1(3).values == (4, 0)
    assert h_p1(-1).values == (0, 0)
    assert h_p1(-4).values == (0, 3)


def test_pushforward_branches():
    f = HirzebruchBase(2)
    assert pushforward_surface(f, SurfaceClass(2, 5)) == ([5, 3, 1], [])
    assert pushforward_surface(f, SurfaceClass(-1, 7)) == ([], [])
    assert pushforward_surface(f, SurfaceClass(-3, 0)) == ([], [2, 4])


def test_canonical_surface_cohomology():
    for e in range(5):
        f = HirzebruchBase(e)
        assert h_surface(f, canonical_surface(f)).values == (0, 0, 1)
        assert h_surface(f, SurfaceClass(0, 0)).values == (1, 0, 0)


def test_non_integral_rejected():
    with pytest.raises(NonIntegralClass):
        h_surface(HirzebruchBase(1), SurfaceClass(Fraction(1, 2), 0))
    with pytest.raises(NonIntegralClass):
        h_threefold(BundleThreefold.over(0, 2, 2), ThreefoldClass.of(Fraction(1, 2), 0, 0))


@SETTINGS
@given(base_e, small, small)
def test_serre_duality_surface(e, a, b):
    f = HirzebruchBase(e)
    c = SurfaceClass(a, b)
    assert h_surface(f, c).values == h_surface(f, canonical_surface(f) - c).values[::-1]


@SETTINGS
@given(base_e, small, small)
def test_lattice_oracle_matches_h0(e, a, b):
    f = HirzebruchBase(e)
    c = SurfaceClass(a, b)
    assert lattice_oracle_h0(f, c) == h_surface(f, c).values[0]


@SETTINGS
@given(base_e, small, small)
def test_riemann_roch(e, a, b):
    f = HirzebruchBase(e)
    c = SurfaceClass(a, b)
    assert rr_chi_surface(f, c) == h_surface(f, c).chi()


@SETTINGS
@given(small, small)
def test_kunneth_on_f0(a, b):
    # F_0 = P^1 x P^1 and sigma, l are the two rulings
    got = h_surface(HirzebruchBase(0), SurfaceClass(a, b)).values
    assert got == kunneth(h_p1(a).values, h_p1(b).values)


@SETTINGS
@given(base_e, st.integers(-5, 5), st.integers(-6, 6), st.integers(-6, 6))
def test_kunneth_on_trivial_bundle(e, m, a, b):
    # D0 = 0 gives P^1 x F_e
    y = BundleThreefold.over(e, 0, 0)
    got = h_threefold(y, ThreefoldClass.of(m, a, b)).values
    assert got == kunneth(h_p1(m).values, h_surface(y.base, SurfaceClass(a, b)).values)


threefold_data = st.tuples(base_e, st.integers(-3, 3), st.integers(-3, 3),
                           st.integers(-5, 5), st.integers(-6, 6), st.integers(-6, 6))


@SETTINGS
@given(threefold_data)
def test_serre_duality_threefold(data):
    e, p, q, m, a, b = data
    y = BundleThreefold.over(e, p, q)
    t = ThreefoldClass.of(m, a, b)
    assert h_threefold(y, t).values == h_threefold(y, canonical_threefold(y) - t).values[::-1]


def _lattice_h0_3d(rays, coeffs):
    # vertices of {u : <u, v> >= -k} from all triples of facet planes
    pts = []
    for i, j, k in combinations(range(len(rays)), 3):
        m = [rays[i], rays[j], rays[k]]
        rhs = [-coeffs[i], -coeffs[j], -coeffs[k]]
        det = _det3(m)
        if det == 0:
            continue
        sol = []
        for col in range(3):
            mc = [list(r) for r in m]
            for r in range(3):
                mc[r][col] = rhs[r]
            sol.append(Fraction(_det3(mc), det))
        if all(sum(s * v for s, v in zip(sol, ray)) >= -c for ray, c in zip(rays, coeffs)):
            pts.append(sol)
    if not pts:
        return 0
    lo = [min(p[i] for p in pts).__floor__() for i in range(3)]
    hi = [max(p[i] for p in pts).__ceil__() for i in range(3)]
    return sum(
        all(sum(x * v for x, v in zip(u, ray)) >= -c for ray, c in zip(rays, coeffs))
        for u in product(*(range(l, h + 1) for l, h in zip(lo, hi)))
    )


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.sampled_from(["II", "III"]), st.integers(-2, 3), st.integers(-2, 4), st.integers(-2, 6))
def test_toric_lattice_oracle_threefold(kind, m, a, b):
    model = model_data(kind)
    rays = [r for r, _ in model.rays]
    # m E + a sigma + b l as a torus-invariant divisor: rays 5, 2, 1 carry E, sigma, l
    coeffs = [b, a, 0, 0, m, 0]
    assert model.rays[4][1] == ThreefoldClass.of(1, 0, 0)
    assert model.rays[1][1] == ThreefoldClass.of(0, 1, 0)
    assert model.rays[0][1] == ThreefoldClass.of(0, 0, 1)
    expected = h_threefold(model.threefold, ThreefoldClass.of(m, a, b)).values[0]
    assert _lattice_h0_3d(rays, coeffs) == expected


def test_ray_classes_sum_to_anticanonical():
    for kind in ("II", "III"):
        model = model_data(kind)
        total = ThreefoldClass.of(0, 0, 0)
        for _, cls in model.rays:
            total = total + cls
        assert total == -canonical_threefold(model.threefold)


def test_pushforward_threefold_branches():
    y = BundleThreefold.over(0, 2, 2)
    r0, r1 = pushforward_threefold(y, ThreefoldClass.of(2, 4, 4))
    assert r0 == [SurfaceClass(4, 4), SurfaceClass(2, 2), SurfaceClass(0, 0)] and r1 == []
    assert pushforward_threefold(y, ThreefoldClass.of(-1, 3, 3)) == ([], [])
    assert pushforward_threefold(y, ThreefoldClass.of(-3, 0, 0))[1] == [SurfaceClass(2, 2), SurfaceClass(4, 4)]


def test_branch_divisor_against_symmetric_power():
    # h^0(O(B)) on Y' equals h^0 of Sym^{d1+1}(O + O(-2,-2)) (x) O(2d1, 2d1) on F_0 for odd d1
    f = HirzebruchBase(0)
    for d1 in (5, 7):
        summands = symmetric_power_degrees([SurfaceClass(0, 0), SurfaceClass(-2, -2)], d1 + 1)
        h = sum((h_surface(f, c + SurfaceClass(2 * d1, 2 * d1)) for c in summands.elements()),
                CohVector.zero(2))
        y = BundleThreefold.over(0, 2, 2)
        direct = h_threefold(y, ThreefoldClass.of(d1 + 1, 2 * d1, 2 * d1))
        assert h.values[0] == direct.values[0] == odd_square_sum(d1)


def test_symmetric_power_multiset():
    assert symmetric_power_degrees([0, 1], 3) == Counter({0: 1, 1: 1, 2: 1, 3: 1})
    assert sum(symmetric_power_degrees([0, 1, 5], 2).values()) == 6


def test_split_bundle_sum():
    assert h_split(None, SplitBundle((1, -3))).values == (2, 2)
    f = HirzebruchBase(1)
    assert h_split(f, [SurfaceClass(0, 0)] * 3).values == (3, 0, 0)
    with pytest.raises(ValueError):
        SplitBundle(())
    with pytest.raises(TypeError):
        h_split("P^2", [0])


def test_cohvector_intervals():
    v = CohVector(((1, 3), (0, None)))
    assert not v.is_point
    assert (v + CohVector.point((1, 1))).entries == ((2, 4), (1, None))
    with pytest.raises(ValueError):
        v.values


@pytest.mark.parametrize("d1,expected", [(5, 286), (6, 455), (7, 680)])
def test_odd_square_sum(d1, expected):
    assert odd_square_sum(d1) == expected == (2 * d1 + 1) * (2 * d1 + 2) * (2 * d1 + 3) // 6
