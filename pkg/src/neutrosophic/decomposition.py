"""Hepta-valued partition of neutrosophic information.

Each triple splits into truth ``t`` and falsity ``f`` (certainty) plus five
entropy features: ambiguity ``a``, ignorance ``u``, contradiction ``c``,
neutrality ``n`` and saturation ``s``. The seven sum to one, and the last
five sum to the entropy of the matching variant.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    InformationKind,
    NeutrosophicTriple,
    classify,
    index_arrays,
)
from .entropy import EntropyVariant

COMPONENTS = ("t", "f", "a", "u", "c", "n", "s")
#: Rounding residue below zero that is snapped to an exact 0.0.
NEGATIVE_ZERO_TOL = 1e-12

#: Components forced to vanish for each restricted kind of information.
VANISHING = {
    InformationKind.FUZZY: ("u", "c", "n", "s"),
    InformationKind.INTUITIONISTIC: ("c", "n", "s"),
    InformationKind.PARACONSISTENT: ("u", "n", "s"),
    InformationKind.BIFUZZY: ("n", "s"),
    InformationKind.NEUTROSOPHIC: (),
}


@dataclass(frozen=True)
class HeptaDecomposition:
    t: float
    f: float
    a: float
    u: float
    c: float
    n: float
    s: float
    variant: EntropyVariant

    def values(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in COMPONENTS)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(COMPONENTS, self.values()))

    @property
    def uncertainty(self) -> float:
        """Sum of the five entropy features."""
        return self.a + self.u + self.c + self.n + self.s

    @property
    def certainty(self) -> float:
        return self.t + self.f


@dataclass(frozen=True)
class ReducedPartition:
    decomposition: HeptaDecomposition
    kind: InformationKind


def _clean(x):
    x = np.asarray(x, dtype=float)
    return np.where((x <= 0.0) & (x >= -NEGATIVE_ZERO_TOL), 0.0, x)


def _denominator(tau, omega, pi, kappa, variant):
    d = 1.0 + omega + pi + kappa
    if variant is EntropyVariant.RUZICKA:
        d = d + np.abs(tau)
    return d


def _certainty(mu, nu, tau, d, variant):
    if variant is EntropyVariant.CZEKANOWSKI:
        top = np.maximum(mu, nu)
        return (top - nu) / d, (top - mu) / d
    return 2.0 * np.maximum(tau, 0.0) / d, 2.0 * np.maximum(-tau, 0.0) / d


def decompose_arrays(mu, omega, nu, variant) -> dict[str, np.ndarray]:
    """Branch-free component formulas over arrays; keys are ``COMPONENTS``."""
    variant = EntropyVariant.parse(variant)
    mu, omega, nu = (np.asarray(x, dtype=float) for x in (mu, omega, nu))
    tau, pi, kappa, _ = index_arrays(mu, nu)
    d = _denominator(tau, omega, pi, kappa, variant)
    t, f = _certainty(mu, nu, tau, d, variant)
    spill = np.maximum(omega - pi - kappa, 0.0) / 2.0
    out = {
        "t": t,
        "f": f,
        "a": (1.0 - np.abs(tau) - pi - kappa) / d,
        "u": 2.0 * np.maximum(pi - omega, 0.0) / d,
        "c": 2.0 * np.maximum(kappa - omega, 0.0) / d,
        "n": (spill + 3.0 * np.minimum(omega, pi)) / d,
        "s": (spill + 3.0 * np.minimum(omega, kappa)) / d,
    }
    return {k: _clean(v) for k, v in out.items()}


def case_components(case: int, omega, pi, kappa, d):
    """``(u, c, n, s)`` by the formulas of a single case, wherever evaluated."""
    zero = np.zeros_like(d)
    if case == 1:
        return (2.0 * pi - 2.0 * omega) / d, zero, 3.0 * omega / d, zero
    if case == 2:
        return zero, (2.0 * kappa - 2.0 * omega) / d, zero, 3.0 * omega / d
    if case == 3:
        half = (omega - pi - kappa) / 2.0
        return zero, zero, (half + 3.0 * pi) / d, (half + 3.0 * kappa) / d
    raise ValueError(f"no case {case!r}")


def case_masks(omega, pi, kappa):
    """Boolean masks for cases I, II, III with precedence I, II, III."""
    case1 = (pi >= omega) & (kappa == 0.0)
    case2 = ~case1 & (kappa >= omega) & (pi == 0.0)
    case3 = ~case1 & ~case2 & (omega >= np.maximum(pi, kappa))
    return case1, case2, case3


def decompose_by_cases_arrays(mu, omega, nu, variant) -> dict[str, np.ndarray]:
    """Case-split construction of the components; an oracle for the unified one.

    Case I (``pi >= omega >= kappa = 0``), case II (``kappa >= omega >= pi = 0``)
    and case III (``omega >= max(pi, kappa)``) are tried in that order.
    """
    variant = EntropyVariant.parse(variant)
    mu, omega, nu = (np.asarray(x, dtype=float) for x in (mu, omega, nu))
    tau, pi, kappa, _ = index_arrays(mu, nu)
    d = _denominator(tau, omega, pi, kappa, variant)
    t, f = _certainty(mu, nu, tau, d, variant)
    a = (1.0 - np.abs(tau) - pi - kappa) / d

    masks = case_masks(omega, pi, kappa)
    if not np.all(masks[0] | masks[1] | masks[2]):
        raise AssertionError("no decomposition case matches; pi * kappa != 0?")
    per_case = [case_components(k, omega, pi, kappa, d) for k in (1, 2, 3)]
    u, c, n, s = (
        np.select(list(masks[:2]), [per_case[0][i], per_case[1][i]], per_case[2][i])
        for i in range(4)
    )
    out = {"t": t, "f": f, "a": a, "u": u, "c": c, "n": n, "s": s}
    return {k: _clean(v) for k, v in out.items()}


def case_split_parts(mu, omega, nu, variant):
    """Indices and denominator feeding :func:`case_components`."""
    variant = EntropyVariant.parse(variant)
    mu, omega, nu = (np.asarray(x, dtype=float) for x in (mu, omega, nu))
    tau, pi, kappa, _ = index_arrays(mu, nu)
    return omega, pi, kappa, _denominator(tau, omega, pi, kappa, variant)


def _pack(arrays, variant) -> HeptaDecomposition:
    return HeptaDecomposition(**{k: float(arrays[k]) for k in COMPONENTS}, variant=variant)


def decompose(t: NeutrosophicTriple, variant=EntropyVariant.CZEKANOWSKI) -> HeptaDecomposition:
    variant = EntropyVariant.parse(variant)
    return _pack(decompose_arrays(t.mu, t.omega, t.nu, variant), variant)


def decompose_by_cases(t: NeutrosophicTriple, variant=EntropyVariant.CZEKANOWSKI) -> HeptaDecomposition:
    variant = EntropyVariant.parse(variant)
    return _pack(decompose_by_cases_arrays(t.mu, t.omega, t.nu, variant), variant)


def vanishing_bound(tol: float) -> float:
    """Largest value a vanishing component can take when the kind's
    constraints hold only to within ``tol``."""
    # n can reach omega / 2 + 3 * omega over a denominator >= 1
    return 4.0 * tol + NEGATIVE_ZERO_TOL


def reduced_partition(
    t: NeutrosophicTriple,
    variant=EntropyVariant.CZEKANOWSKI,
    tol: float = DEFAULT_TOL,
) -> ReducedPartition:
    """Decompose and tag with the information kind, checking that the
    components the kind rules out are (numerically) absent."""
    hepta = decompose(t, variant)
    kind = classify(t, tol)
    bound = vanishing_bound(tol)
    for name in VANISHING[kind]:
        value = getattr(hepta, name)
        if abs(value) > bound:
            raise AssertionError(
                f"{name}={value!r} should vanish for {kind.value} information at {t}"
            )
    return ReducedPartition(hepta, kind)

