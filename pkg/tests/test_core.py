import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from neutrosophic import (
    DomainError,
    InformationKind,
    classify,
    derive_indices,
    from_fuzzy,
    from_intuitionistic,
    make_triple,
)
from neutrosophic.core import classify_arrays

unit = st.floats(0.0, 1.0)


class TestMakeTriple:
    def test_passthrough(self):
        t = make_triple(0.8, 0.2, 0.1)
        assert (t.mu, t.omega, t.nu) == (0.8, 0.2, 0.1)

    @pytest.mark.parametrize(
        "args, field",
        [
            ((1.2, 0.0, 0.0), "mu"),
            ((0.5, math.nan, 0.5), "omega"),
            ((0.5, 0.0, -0.1), "nu"),
            ((0.5, math.inf, 0.5), "omega"),
            (("x", 0.0, 0.5), "mu"),
        ],
    )
    def test_rejects(self, args, field):
        with pytest.raises(DomainError) as info:
            make_triple(*args)
        assert info.value.field == field
        assert field in str(info.value)

    def test_immutable(self):
        t = make_triple(0.1, 0.2, 0.3)
        with pytest.raises(AttributeError):
            t.mu = 0.5

    def test_full_cube_admissible(self):
        make_triple(1.0, 1.0, 1.0)


class TestConstructors:
    @pytest.mark.parametrize("mu, expected", [(0.5, (0.5, 0, 0.5)), (1.0, (1, 0, 0)), (0.3, (0.3, 0, 0.7))])
    def test_from_fuzzy(self, mu, expected):
        assert tuple(from_fuzzy(mu)) == pytest.approx(expected, abs=0)

    def test_from_fuzzy_rejects(self):
        with pytest.raises(DomainError):
            from_fuzzy(1.5)

    def test_from_intuitionistic(self):
        assert tuple(from_intuitionistic(0.6, 0.3)) == (0.6, 0.0, 0.3)
        assert tuple(from_intuitionistic(0, 0)) == (0.0, 0.0, 0.0)
        assert derive_indices(from_intuitionistic(0.6, 0.3)).pi == pytest.approx(0.1, abs=1e-15)

    def test_from_intuitionistic_rejects_sum_over_one(self):
        with pytest.raises(DomainError):
            from_intuitionistic(0.7, 0.7)


class TestDeriveIndices:
    def test_worked_example(self):
        # values checked by exact rational substitution
        ix = derive_indices(make_triple(0.8, 0.2, 0.1))
        assert ix.tau == pytest.approx(0.7, abs=1e-15)
        assert ix.pi == pytest.approx(0.1, abs=1e-15)
        assert ix.kappa == 0.0
        assert ix.alpha == pytest.approx(0.2, abs=1e-15)

    def test_corners(self):
        assert derive_indices(make_triple(1, 0, 1)) == derive_indices(make_triple(1, 0.5, 1))
        ix = derive_indices(make_triple(1, 0, 1))
        assert (ix.tau, ix.pi, ix.kappa, ix.alpha) == (0.0, 0.0, 1.0, 0.0)
        ix = derive_indices(make_triple(0, 0, 0))
        assert (ix.tau, ix.pi, ix.kappa, ix.alpha) == (0.0, 1.0, 0.0, 0.0)

    @given(unit, unit, unit)
    def test_identities(self, mu, omega, nu):
        ix = derive_indices(make_triple(mu, omega, nu))
        assert ix.pi * ix.kappa == 0.0
        assert abs(ix.pi + ix.kappa - abs(mu + nu - 1)) <= 1e-12
        assert abs(ix.alpha - (1 - abs(ix.tau) - ix.pi - ix.kappa)) <= 1e-12
        assert ix.alpha >= -1e-12
        assert -1 <= ix.tau <= 1


class TestClassify:
    @pytest.mark.parametrize(
        "triple, kind",
        [
            ((0.4, 0, 0.6), InformationKind.FUZZY),
            ((0.3, 0, 0.2), InformationKind.INTUITIONISTIC),
            ((0.9, 0, 0.4), InformationKind.PARACONSISTENT),
            ((0.8, 0.2, 0.1), InformationKind.NEUTROSOPHIC),
            ((0.5, 0.2, 0.5), InformationKind.NEUTROSOPHIC),
        ],
    )
    def test_examples(self, triple, kind):
        assert classify(make_triple(*triple)) is kind

    def test_tie_at_unit_sum_is_fuzzy(self):
        assert classify(make_triple(0.25, 0.0, 0.75 + 1e-10)) is InformationKind.FUZZY
        assert classify(make_triple(0.25, 0.0, 0.75 + 1e-10), tol=0.0) is InformationKind.PARACONSISTENT

    def test_negative_tolerance(self):
        with pytest.raises(ValueError):
            classify(make_triple(0, 0, 0), tol=-1)

    @given(unit)
    def test_fuzzy_constructor_classifies_fuzzy(self, mu):
        assert classify(from_fuzzy(mu)) is InformationKind.FUZZY

    @given(unit, st.floats(0.0, 1.0), unit, st.floats(-1.0, 1.0), st.floats(-1.0, 1.0), st.floats(0.0, 1.0))
    def test_stable_under_small_perturbation(self, mu, omega, nu, dm, dn, dw):
        eps = 1e-9
        base = make_triple(mu, omega, nu)
        s = mu + nu
        # keep strictly inside a class region: away from every threshold by > eps
        margin = eps
        thresholds = [abs(s - 1) - eps, abs(s - 1 - eps), abs(s - 1 + eps), abs(omega - eps)]
        if min(thresholds) <= margin:
            return
        h = 0.49 * eps / 2
        mu2, nu2, om2 = mu + h * dm, nu + h * dn, omega + h * dw
        if not all(0 <= x <= 1 for x in (mu2, nu2, om2)):
            return
        assert classify(make_triple(mu2, om2, nu2), eps) is classify(base, eps)

    def test_vectorized_matches_scalar(self):
        rng = np.random.default_rng(3)
        pts = rng.random((2000, 3))
        pts[:500, 1] = 0.0
        pts[:250, 2] = 1.0 - pts[:250, 0]
        kinds = classify_arrays(pts[:, 0], pts[:, 1], pts[:, 2])
        for row, kind in zip(pts, kinds):
            assert classify(make_triple(*row)) is kind
