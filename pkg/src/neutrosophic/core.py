"""Neutrosophic triples, derived indices and information-kind classification.

A triple ``(mu, omega, nu)`` holds the degrees of truth, neutrality and
falsity. Every component lives in [0, 1] independently, so the whole unit
cube is admissible.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9


class DomainError(ValueError):
    """A value lies outside the unit interval or is not finite."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class KindMismatch(ValueError):
    pass


class UnsupportedKind(ValueError):
    pass


class InformationKind(str, enum.Enum):
    FUZZY = "fuzzy"
    INTUITIONISTIC = "intuitionistic"
    PARACONSISTENT = "paraconsistent"
    BIFUZZY = "bifuzzy"
    NEUTROSOPHIC = "neutrosophic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NeutrosophicTriple:
    mu: float
    omega: float
    nu: float

    def __post_init__(self):
        for name in ("mu", "omega", "nu"):
            value = getattr(self, name)
            _check_unit(name, value)
            object.__setattr__(self, name, float(value))

    def swapped(self) -> "NeutrosophicTriple":
        """The triple with truth and falsity exchanged."""
        return NeutrosophicTriple(self.nu, self.omega, self.mu)

    def __iter__(self):
        return iter((self.mu, self.omega, self.nu))


@dataclass(frozen=True)
class DerivedIndices:
    tau: float
    pi: float
    kappa: float
    alpha: float


def _check_unit(name: str, value) -> None:
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} is not a number: {value!r}", field=name) from None
    if not math.isfinite(x):
        raise DomainError(f"{name} not finite: {value!r}", field=name)
    if x < 0.0 or x > 1.0:
        raise DomainError(f"{name} out of range [0, 1]: {value!r}", field=name)


def make_triple(mu, omega, nu) -> NeutrosophicTriple:
    return NeutrosophicTriple(mu, omega, nu)


def from_fuzzy(mu) -> NeutrosophicTriple:
    """Fuzzy value: falsity is the negation ``1 - mu``, no neutrality."""
    _check_unit("mu", mu)
    return NeutrosophicTriple(mu, 0.0, 1.0 - float(mu))


def from_intuitionistic(mu, nu, tol: float = DEFAULT_TOL) -> NeutrosophicTriple:
    """Intuitionistic pair ``(mu, nu)`` with ``mu + nu <= 1``."""
    t = NeutrosophicTriple(mu, 0.0, nu)
    if t.mu + t.nu > 1.0 + tol:
        raise DomainError(
            f"not an intuitionistic pair: mu + nu = {t.mu + t.nu!r} > 1", field="nu"
        )
    return t


# Array kernels. They accept floats or numpy arrays alike.

def index_arrays(mu, nu):
    """Return ``(tau, pi, kappa, alpha)`` for scalar or array inputs."""
    s = mu + nu
    tau = mu - nu
    pi = 1.0 - np.minimum(s, 1.0)
    kappa = np.maximum(s, 1.0) - 1.0
    alpha = 1.0 - np.abs(mu - nu) - np.abs(s - 1.0)
    return tau, pi, kappa, alpha


def derive_indices(t: NeutrosophicTriple) -> DerivedIndices:
    tau, pi, kappa, alpha = index_arrays(t.mu, t.nu)
    return DerivedIndices(float(tau), float(pi), float(kappa), float(alpha))


_SPECIFICITY = (
    InformationKind.FUZZY,
    InformationKind.INTUITIONISTIC,
    InformationKind.PARACONSISTENT,
    InformationKind.BIFUZZY,
)


def classify_arrays(mu, omega, nu, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorized :func:`classify`; returns an object array of kinds."""
    mu, omega, nu = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (mu, omega, nu)))
    out = np.empty(mu.shape, dtype=object)
    out.fill(InformationKind.NEUTROSOPHIC)
    # least specific first so the most specific match is written last
    for kind in reversed(_SPECIFICITY):
        out[satisfies(kind, mu, omega, nu, tol)] = kind
    return out


def satisfies(kind: InformationKind, mu, omega, nu, tol: float = DEFAULT_TOL):
    """Whether a point meets the defining constraints of ``kind``.

    Unlike :func:`classify` this is not exclusive: a fuzzy point satisfies
    every bifuzzy kind.
    """
    s = np.asarray(mu) + np.asarray(nu)
    flat = np.asarray(omega) <= tol
    if kind is InformationKind.FUZZY:
        return flat & (np.abs(s - 1.0) <= tol)
    if kind is InformationKind.INTUITIONISTIC:
        return flat & (s <= 1.0 + tol)
    if kind is InformationKind.PARACONSISTENT:
        return flat & (s >= 1.0 - tol)
    if kind is InformationKind.BIFUZZY:
        return flat
    return np.ones_like(flat, dtype=bool)


def classify(t: NeutrosophicTriple, tol: float = DEFAULT_TOL) -> InformationKind:
    """Most specific kind of information the triple represents.

    Tested in the order fuzzy, intuitionistic, paraconsistent, bifuzzy,
    neutrosophic. Points with ``mu + nu`` within ``tol`` of 1 are fuzzy.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    for kind in _SPECIFICITY:
        if satisfies(kind, t.mu, t.omega, t.nu, tol):
            return kind
    return InformationKind.NEUTROSOPHIC
