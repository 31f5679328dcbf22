from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from neutrosophic import (
    COMPONENTS,
    EntropyVariant,
    InformationKind,
    decompose,
    decompose_by_cases,
    entropy,
    make_triple,
    reduced_partition,
)
from neutrosophic.checks import PROTOTYPES, boundary_points
from neutrosophic.decomposition import (
    case_components,
    case_masks,
    case_split_parts,
    decompose_arrays,
    decompose_by_cases_arrays,
)
from neutrosophic.rng import SplitMix64

C, R = EntropyVariant.CZEKANOWSKI, EntropyVariant.RUZICKA
unit = st.floats(0.0, 1.0)
variants = st.sampled_from([C, R])
grid = st.integers(0, 40).map(lambda k: Fraction(k, 40))


def exact_components(mu, omega, nu, variant):
    """Component formulas in exact rational arithmetic."""
    tau, sigma = mu - nu, mu + nu
    pi, kappa = 1 - min(sigma, 1), max(sigma, 1) - 1
    d = 1 + omega + pi + kappa + (abs(tau) if variant is R else 0)
    spill = Fraction(max(omega - pi - kappa, 0)) / 2
    if variant is C:
        t, f = (max(mu, nu) - nu) / d, (max(mu, nu) - mu) / d
    else:
        t, f = 2 * max(tau, 0) / d, 2 * max(-tau, 0) / d
    return {
        "t": t,
        "f": f,
        "a": (1 - abs(tau) - pi - kappa) / d,
        "u": 2 * max(pi - omega, 0) / d,
        "c": 2 * max(kappa - omega, 0) / d,
        "n": (spill + 3 * min(omega, pi)) / d,
        "s": (spill + 3 * min(omega, kappa)) / d,
    }


class TestDecompose:
    def test_worked_example(self):
        h = decompose(make_triple(0.8, 0.2, 0.1), C)
        expected = dict(t=7 / 13, f=0, a=2 / 13, u=0, c=0, n=3.5 / 13, s=0.5 / 13)
        for k, v in expected.items():
            assert getattr(h, k) == pytest.approx(v, abs=1e-12), k
        assert sum(h.values()) == pytest.approx(1, abs=1e-12)
        assert h.variant is C

    @pytest.mark.parametrize("variant", [C, R])
    @pytest.mark.parametrize("name", list(PROTOTYPES))
    def test_prototype_purity(self, name, variant):
        h = decompose(make_triple(*PROTOTYPES[name]), variant)
        assert h.as_dict() == {k: (1.0 if k == name else 0.0) for k in COMPONENTS}

    @given(grid, grid, grid, variants)
    def test_matches_exact_rational(self, mu, omega, nu, v):
        h = decompose(make_triple(mu, omega, nu), v)
        exact = exact_components(mu, omega, nu, v)
        assert sum(exact.values()) == 1
        for k in COMPONENTS:
            assert getattr(h, k) == pytest.approx(float(exact[k]), abs=1e-12), k

    @given(unit, unit, unit, variants)
    def test_partition_and_entropy(self, mu, omega, nu, v):
        t = make_triple(mu, omega, nu)
        h = decompose(t, v)
        assert abs(sum(h.values()) - 1) <= 1e-9
        assert abs(h.uncertainty - entropy(t, v).entropy) <= 1e-9
        assert min(h.values()) >= 0.0

    @given(unit, unit, unit, variants)
    def test_exclusivity(self, mu, omega, nu, v):
        h = decompose(make_triple(mu, omega, nu), v)
        assert h.t * h.f == 0.0
        assert h.u * h.c == 0.0
        assert sum(x == 0.0 for x in (h.u, h.c, h.n, h.s)) >= 2

    @given(unit, unit, unit, variants)
    def test_swap_symmetry(self, mu, omega, nu, v):
        t = make_triple(mu, omega, nu)
        h, hs = decompose(t, v), decompose(t.swapped(), v)
        assert (hs.t, hs.f) == (h.f, h.t)
        assert (hs.a, hs.u, hs.c, hs.n, hs.s) == (h.a, h.u, h.c, h.n, h.s)

    def test_no_negative_zero(self):
        h = decompose(make_triple(0.5, 0.0, 0.5), R)
        for x in h.values():
            assert np.copysign(1.0, x) == 1.0


class TestCaseSplit:
    def test_case_one_example(self):
        t = make_triple(0.3, 0.1, 0.2)
        h = decompose_by_cases(t, C)
        assert h.u == pytest.approx(0.5, abs=1e-12)
        assert h.n == pytest.approx(0.1875, abs=1e-12)
        assert h.c == 0.0 and h.s == 0.0
        omega, pi, kappa, _ = case_split_parts(*t, C)
        assert [bool(m) for m in case_masks(omega, pi, kappa)] == [True, False, False]

    def test_case_two_example(self):
        t = make_triple(0.9, 0.1, 0.4)
        h = decompose_by_cases(t, C)
        assert h.c == pytest.approx(0.4 / 1.4, abs=1e-12)
        assert h.s == pytest.approx(0.3 / 1.4, abs=1e-12)
        assert h.u == 0.0 and h.n == 0.0
        omega, pi, kappa, _ = case_split_parts(*t, C)
        assert [bool(m) for m in case_masks(omega, pi, kappa)] == [False, True, False]

    def test_case_three_example(self):
        t = make_triple(0.8, 0.2, 0.1)
        omega, pi, kappa, _ = case_split_parts(*t, C)
        assert [bool(m) for m in case_masks(omega, pi, kappa)] == [False, False, True]
        a, b = decompose_by_cases(t, C), decompose(t, C)
        for x, y in zip(a.values(), b.values()):
            assert x == pytest.approx(y, abs=1e-12)

    @given(unit, unit, unit, variants)
    def test_oracle_equivalence(self, mu, omega, nu, v):
        t = make_triple(mu, omega, nu)
        a, b = decompose(t, v), decompose_by_cases(t, v)
        for x, y in zip(a.values(), b.values()):
            assert abs(x - y) <= 1e-12

    @pytest.mark.parametrize("variant", [C, R])
    @pytest.mark.parametrize("surface", ["omega=pi", "omega=kappa", "pi=kappa=0"])
    def test_oracle_equivalence_on_boundaries(self, surface, variant):
        pts = boundary_points(SplitMix64(3), 2000, surface)
        a = decompose_arrays(*pts, variant)
        b = decompose_by_cases_arrays(*pts, variant)
        for k in COMPONENTS:
            np.testing.assert_allclose(a[k], b[k], rtol=0, atol=1e-12)

    @pytest.mark.parametrize("variant", [C, R])
    @pytest.mark.parametrize("surface, cases", [("omega=pi", (1, 3)), ("omega=kappa", (2, 3))])
    def test_continuity(self, surface, cases, variant):
        rng = SplitMix64(8)
        mu, omega, nu = boundary_points(rng, 2000, surface)
        omega = np.clip(omega + rng.uniform(-1e-8, 1e-8, mu.size), 0, 1)
        parts = case_split_parts(mu, omega, nu, variant)
        x, y = case_components(cases[0], *parts), case_components(cases[1], *parts)
        for i in range(4):
            assert np.max(np.abs(x[i] - y[i])) <= 1e-6

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            case_components(4, 0.0, 0.0, 0.0, 1.0)


class TestReducedPartition:
    @pytest.mark.parametrize("variant", [C, R])
    @pytest.mark.parametrize(
        "triple, kind, nonzero",
        [
            ((0.4, 0, 0.6), InformationKind.FUZZY, {"t", "f", "a"}),
            ((0.3, 0, 0.2), InformationKind.INTUITIONISTIC, {"t", "f", "a", "u"}),
            ((0.9, 0, 0.4), InformationKind.PARACONSISTENT, {"t", "f", "a", "c"}),
        ],
    )
    def test_examples(self, triple, kind, nonzero, variant):
        rp = reduced_partition(make_triple(*triple), variant)
        assert rp.kind is kind
        values = rp.decomposition.as_dict()
        assert {k for k, x in values.items() if x != 0.0} <= nonzero
        assert all(values[k] == 0.0 for k in set(COMPONENTS) - nonzero)

    @given(unit, unit, variants)
    def test_bifuzzy_points_never_trip(self, mu, nu, v):
        rp = reduced_partition(make_triple(mu, 0.0, nu), v)
        assert rp.decomposition.n == 0.0 and rp.decomposition.s == 0.0

    def test_near_fuzzy_within_tolerance(self):
        # omega and |mu + nu - 1| just under the tolerance still pass
        rp = reduced_partition(make_triple(0.3, 0.9e-9, 0.7 - 0.9e-9), C, tol=1e-9)
        assert rp.kind is InformationKind.FUZZY
