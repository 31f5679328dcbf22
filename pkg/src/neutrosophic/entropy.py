"""Neutrosophic entropy from similarity between distances to the crisp points.

Two similarity measures are supported. Czekanowski gives an entropy that
reduces to Kaufmann's linear index of fuzziness on fuzzy values; Ruzicka
gives one that reduces to Kosko's ratio.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    InformationKind,
    KindMismatch,
    NeutrosophicTriple,
    UnsupportedKind,
    satisfies,
)

#: Agreement required between the similarity route and the closed form.
PATH_TOL = 1e-12


class EntropyVariant(str, enum.Enum):
    CZEKANOWSKI = "c"
    RUZICKA = "r"

    @classmethod
    def parse(cls, value) -> "EntropyVariant":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ValueError(f"unknown entropy variant: {value!r}")


@dataclass(frozen=True)
class EntropyBreakdown:
    d_true: float
    d_false: float
    similarity: float
    entropy: float
    variant: EntropyVariant


def distance_arrays(mu, omega, nu):
    """L1 distances of ``(mu - nu, mu + nu - 1, omega)`` to (1,0,0) and (-1,0,0)."""
    tau = mu - nu
    excess = np.abs(mu + nu - 1.0)
    d_true = np.abs(tau - 1.0) + excess + omega
    d_false = np.abs(tau + 1.0) + excess + omega
    return d_true, d_false


def similarity_arrays(d_true, d_false, variant: EntropyVariant):
    gap = np.abs(d_true - d_false)
    if variant is EntropyVariant.CZEKANOWSKI:
        return 1.0 - gap / (d_true + d_false)
    return 1.0 - gap / np.maximum(d_true, d_false)


def entropy_arrays(mu, omega, nu, variant: EntropyVariant):
    """Closed-form entropy; the public value."""
    spread = np.abs(mu - nu)
    excess = np.abs(mu + nu - 1.0)
    if variant is EntropyVariant.CZEKANOWSKI:
        return 1.0 - spread / (1.0 + excess + omega)
    return (1.0 - spread + excess + omega) / (1.0 + spread + excess + omega)


def distances(t: NeutrosophicTriple) -> tuple[float, float]:
    d_true, d_false = distance_arrays(t.mu, t.omega, t.nu)
    return float(d_true), float(d_false)


def entropy(t: NeutrosophicTriple, variant=EntropyVariant.CZEKANOWSKI) -> EntropyBreakdown:
    """Entropy of one triple, with the distances and similarity behind it.

    The similarity is recomputed from the two distances and must agree with
    the closed form to ``PATH_TOL``; a disagreement is a bug and raises.
    """
    variant = EntropyVariant.parse(variant)
    d_true, d_false = distances(t)
    sim = float(similarity_arrays(d_true, d_false, variant))
    value = float(entropy_arrays(t.mu, t.omega, t.nu, variant))
    if abs(sim - value) > PATH_TOL:
        raise AssertionError(
            f"similarity {sim!r} disagrees with closed form {value!r} at {t}"
        )
    return EntropyBreakdown(d_true, d_false, sim, value, variant)


# Reduced closed forms for the constrained kinds. These are written out from
# their own definitions and are used only to cross-check the general formula.

def _kaufmann(mu):
    return 1.0 - np.abs(2.0 * mu - 1.0)


def _kosko(mu):
    d = np.abs(2.0 * mu - 1.0)
    return (1.0 - d) / (1.0 + d)


def _czekanowski_bifuzzy(mu, nu):
    return 1.0 - np.abs(mu - nu) / (1.0 + np.abs(mu + nu - 1.0))


def _ruzicka_bifuzzy(mu, nu):
    spread = np.abs(mu - nu)
    excess = np.abs(mu + nu - 1.0)
    return (1.0 - spread + excess) / (1.0 + spread + excess)


def _czekanowski_intuitionistic(mu, nu):
    ignorance = 1.0 - mu - nu
    return 1.0 - np.abs(mu - nu) / (1.0 + ignorance)


def _szmidt_kacprzyk(mu, nu):
    ignorance = 1.0 - mu - nu
    spread = np.abs(mu - nu)
    return (1.0 - spread + ignorance) / (1.0 + spread + ignorance)


def _czekanowski_paraconsistent(mu, nu):
    contradiction = mu + nu - 1.0
    return 1.0 - np.abs(mu - nu) / (1.0 + contradiction)


def _ruzicka_paraconsistent(mu, nu):
    contradiction = mu + nu - 1.0
    spread = np.abs(mu - nu)
    return (1.0 - spread + contradiction) / (1.0 + spread + contradiction)


_REDUCED = {
    (InformationKind.FUZZY, EntropyVariant.CZEKANOWSKI): lambda mu, nu: _kaufmann(mu),
    (InformationKind.FUZZY, EntropyVariant.RUZICKA): lambda mu, nu: _kosko(mu),
    (InformationKind.INTUITIONISTIC, EntropyVariant.CZEKANOWSKI): _czekanowski_intuitionistic,
    (InformationKind.INTUITIONISTIC, EntropyVariant.RUZICKA): _szmidt_kacprzyk,
    (InformationKind.PARACONSISTENT, EntropyVariant.CZEKANOWSKI): _czekanowski_paraconsistent,
    (InformationKind.PARACONSISTENT, EntropyVariant.RUZICKA): _ruzicka_paraconsistent,
    (InformationKind.BIFUZZY, EntropyVariant.CZEKANOWSKI): _czekanowski_bifuzzy,
    (InformationKind.BIFUZZY, EntropyVariant.RUZICKA): _ruzicka_bifuzzy,
}


def entropy_reduced_arrays(kind, variant, mu, omega, nu, tol: float = DEFAULT_TOL):
    kind = InformationKind(kind)
    variant = EntropyVariant.parse(variant)
    if kind is InformationKind.NEUTROSOPHIC:
        raise UnsupportedKind("no reduced form for neutrosophic information; use entropy()")
    ok = satisfies(kind, mu, omega, nu, tol)
    if not np.all(ok):
        raise KindMismatch(f"point(s) violate the {kind.value} constraints")
    return _REDUCED[kind, variant](mu, nu)


def entropy_reduced(kind, variant, t: NeutrosophicTriple, tol: float = DEFAULT_TOL) -> float:
    """Entropy by the special-case formula for ``kind``.

    Fuzzy/Czekanowski is Kaufmann's ``1 - |2 mu - 1|``; fuzzy/Ruzicka is
    Kosko's ``(1 - |2 mu - 1|) / (1 + |2 mu - 1|)``. Intuitionistic/Ruzicka
    is the Szmidt-Kacprzyk entropy.
    """
    return float(entropy_reduced_arrays(kind, variant, t.mu, t.omega, t.nu, tol))
