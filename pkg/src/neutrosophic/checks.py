"""Seeded invariant suite over random points of the neutrosophic cube.

Everything runs on numpy arrays so a million samples take seconds.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, InformationKind, classify_arrays, index_arrays
from .decomposition import (
    COMPONENTS,
    VANISHING,
    case_components,
    case_split_parts,
    decompose_arrays,
    decompose_by_cases_arrays,
)
from .entropy import (
    EntropyVariant,
    distance_arrays,
    entropy_arrays,
    entropy_reduced_arrays,
    similarity_arrays,
)
from .rng import SplitMix64

EXACT_TOL = 1e-12
PARTITION_TOL = 1e-9
ORACLE_TOL = 1e-12
STRICT_TAU_GAP = 1e-6
STRICT_ENTROPY_GAP = 1e-12
CONTINUITY_OFFSET = 1e-8
CONTINUITY_TOL = 1e-6
MAX_EXAMPLES = 5

VARIANTS = (EntropyVariant.CZEKANOWSKI, EntropyVariant.RUZICKA)
REDUCED_KINDS = (
    InformationKind.FUZZY,
    InformationKind.INTUITIONISTIC,
    InformationKind.PARACONSISTENT,
    InformationKind.BIFUZZY,
)

#: Each prototype point and the component that equals 1 there.
PROTOTYPES = {
    "t": (1.0, 0.0, 0.0),
    "f": (0.0, 0.0, 1.0),
    "a": (0.5, 0.0, 0.5),
    "u": (0.0, 0.0, 0.0),
    "c": (1.0, 0.0, 1.0),
    "n": (0.0, 1.0, 0.0),
    "s": (1.0, 1.0, 1.0),
}


@dataclass
class Failure:
    invariant: str
    triple: tuple[float, float, float]
    observed: dict


@dataclass
class CheckReport:
    samples: int
    seed: int
    tolerance: float = DEFAULT_TOL
    checked: dict = field(default_factory=dict)
    failure_counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, bad, points, **observed) -> None:
        bad = np.atleast_1d(np.asarray(bad, dtype=bool))
        self.checked[name] = self.checked.get(name, 0) + bad.size
        count = int(bad.sum())
        if not count:
            self.failure_counts.setdefault(name, 0)
            return
        self.failure_counts[name] = self.failure_counts.get(name, 0) + count
        mu, omega, nu = (np.broadcast_to(np.atleast_1d(p), bad.shape) for p in points)
        for i in np.flatnonzero(bad)[:MAX_EXAMPLES]:
            obs = {k: float(np.broadcast_to(np.atleast_1d(v), bad.shape)[i]) for k, v in observed.items()}
            self.failures.append(Failure(name, (float(mu[i]), float(omega[i]), float(nu[i])), obs))

    def summary(self) -> str:
        lines = [f"neutro check: samples={self.samples} seed={self.seed} tolerance={self.tolerance:g}"]
        for name, n in self.checked.items():
            bad = self.failure_counts.get(name, 0)
            status = "PASS" if bad == 0 else "FAIL"
            lines.append(f"{status} {name} ({n} checked, {bad} failed)")
        for f in self.failures:
            mu, omega, nu = f.triple
            obs = " ".join(f"{k}={v!r}" for k, v in f.observed.items())
            lines.append(f"  failure {f.invariant} at (mu={mu!r}, omega={omega!r}, nu={nu!r}): {obs}")
        total = sum(self.failure_counts.values())
        lines.append(f"result: {'OK' if total == 0 else 'FAILED'} ({total} failures)")
        return "\n".join(lines) + "\n"


# -- sampling helpers -------------------------------------------------------

def from_balance(tau, total, omega):
    """Triple arrays from net truth ``tau = mu - nu`` and ``total = mu + nu``."""
    mu = np.clip((total + tau) / 2.0, 0.0, 1.0)
    nu = np.clip((total - tau) / 2.0, 0.0, 1.0)
    return mu, np.broadcast_to(omega, mu.shape).astype(float), nu


def constrained_family(kind: InformationKind, mu, nu):
    """Project sampled ``(mu, nu)`` pairs onto the exact constraint set of
    ``kind`` (with omega = 0)."""
    mu = np.asarray(mu, dtype=float)
    nu = np.asarray(nu, dtype=float)
    zero = np.zeros_like(mu)
    if kind is InformationKind.FUZZY:
        return mu, zero, 1.0 - mu
    over = mu + nu > 1.0
    if kind is InformationKind.INTUITIONISTIC:
        return np.where(over, 1.0 - nu, mu), zero, np.where(over, 1.0 - mu, nu)
    if kind is InformationKind.PARACONSISTENT:
        under = mu + nu < 1.0
        return np.where(under, 1.0 - nu, mu), zero, np.where(under, 1.0 - mu, nu)
    if kind is InformationKind.BIFUZZY:
        return mu, zero, nu
    raise ValueError(f"no constrained family for {kind}")


def _rejection(rng: SplitMix64, n: int, draw):
    """Collect ``n`` accepted samples; ``draw(rng, m)`` returns ``(accept, cols)``."""
    parts, have = [], 0
    while have < n:
        m = max(2 * (n - have), 16)
        accept, cols = draw(rng, m)
        cols = [c[accept] for c in cols]
        parts.append(cols)
        have += int(accept.sum())
    return [np.concatenate(col)[:n] for col in zip(*parts)]


def monotonicity_pairs(rng: SplitMix64, n: int, condition: str):
    """Comparison pairs for one ordering condition.

    ``"omega"``: neutrality grows with mu, nu fixed. ``"tau"``: |mu - nu|
    shrinks (strictly) with mu + nu and omega fixed. ``"omega_balanced"``,
    ``"ignorance"``, ``"contradiction"``: omega, pi or kappa grows with the
    other indices fixed.

    Returns ``(low, high, strict)`` where ``low`` and ``high`` are triple
    arrays with ``entropy(low) <= entropy(high)`` expected, and ``strict``
    marks pairs that must differ by more than ``STRICT_ENTROPY_GAP``.
    Pairs other than ``"omega"`` (mu and nu held fixed) are drawn in (tau, mu + nu, omega) coordinates
    and samples that leave the cube are rejected.
    """
    if condition == "omega":
        mu, nu = rng.random(n), rng.random(n)
        w = np.sort(rng.random(2 * n).reshape(n, 2), axis=1)
        return (mu, w[:, 0], nu), (mu, w[:, 1], nu), np.zeros(n, dtype=bool)

    if condition == "tau":
        def draw(r, m):
            total, omega = r.uniform(0.0, 2.0, m), r.random(m)
            ta, tb = r.uniform(-1.0, 1.0, m), r.uniform(-1.0, 1.0, m)
            room = np.minimum(total, 2.0 - total)
            return (np.abs(ta) <= room) & (np.abs(tb) <= room), (total, omega, ta, tb)

        total, omega, ta, tb = _rejection(rng, n, draw)
        a_bigger = np.abs(ta) >= np.abs(tb)
        t_lo, t_hi = np.where(a_bigger, ta, tb), np.where(a_bigger, tb, ta)
        strict = np.abs(t_lo) - np.abs(t_hi) > STRICT_TAU_GAP
        return from_balance(t_lo, total, omega), from_balance(t_hi, total, omega), strict

    if condition == "omega_balanced":
        def draw(r, m):
            tau, total = r.uniform(-1.0, 1.0, m), r.uniform(0.0, 2.0, m)
            w = np.sort(r.random(2 * m).reshape(m, 2), axis=1)
            ok = np.abs(tau) <= np.minimum(total, 2.0 - total)
            return ok, (tau, total, w[:, 0], w[:, 1])

        tau, total, w1, w2 = _rejection(rng, n, draw)
        return from_balance(tau, total, w1), from_balance(tau, total, w2), np.zeros(n, dtype=bool)

    if condition in ("ignorance", "contradiction"):
        sign = -1.0 if condition == "ignorance" else 1.0

        def draw(r, m):
            tau, omega = r.uniform(-1.0, 1.0, m), r.random(m)
            g = np.sort(r.random(2 * m).reshape(m, 2), axis=1)
            # the larger gap from mu + nu = 1 bounds |tau| from above
            return np.abs(tau) <= 1.0 - g[:, 1], (tau, omega, g[:, 0], g[:, 1])

        tau, omega, g1, g2 = _rejection(rng, n, draw)
        low = from_balance(tau, 1.0 + sign * g1, omega)
        high = from_balance(tau, 1.0 + sign * g2, omega)
        return low, high, np.zeros(n, dtype=bool)

    raise ValueError(f"unknown condition {condition!r}")


def boundary_points(rng: SplitMix64, n: int, surface: str):
    """Points lying exactly on a case boundary: ``omega=pi``, ``omega=kappa``
    or ``pi=kappa=0`` (``mu + nu = 1``)."""
    mu, nu = rng.random(n), rng.random(n)
    total = mu + nu
    if surface == "omega=pi":
        flip = total > 1.0
        mu, nu = np.where(flip, 1.0 - nu, mu), np.where(flip, 1.0 - mu, nu)
        _, pi, _, _ = index_arrays(mu, nu)
        return mu, pi, nu
    if surface == "omega=kappa":
        flip = total < 1.0
        mu, nu = np.where(flip, 1.0 - nu, mu), np.where(flip, 1.0 - mu, nu)
        _, _, kappa, _ = index_arrays(mu, nu)
        return mu, kappa, nu
    if surface == "pi=kappa=0":
        return mu, rng.random(n), 1.0 - mu
    raise ValueError(f"unknown surface {surface!r}")


# -- the suite --------------------------------------------------------------

def _check_core(report, pts, tol):
    mu, omega, nu = pts
    tau, pi, kappa, alpha = index_arrays(mu, nu)
    report.record("indices: pi*kappa == 0", pi * kappa != 0.0, pts, pi=pi, kappa=kappa)
    gap = np.abs(pi + kappa - np.abs(mu + nu - 1.0))
    report.record("indices: pi+kappa == |mu+nu-1|", gap > EXACT_TOL, pts, gap=gap)
    gap = np.abs(alpha - (1.0 - np.abs(tau) - pi - kappa))
    report.record("indices: alpha == 1-|tau|-pi-kappa", gap > EXACT_TOL, pts, gap=gap)
    report.record("indices: alpha >= 0", alpha < -EXACT_TOL, pts, alpha=alpha)
    fz = (mu, np.zeros_like(mu), 1.0 - mu)
    kinds = classify_arrays(*fz, tol=tol)
    report.record("classify(from_fuzzy) == fuzzy", kinds != InformationKind.FUZZY, fz)


def _check_entropy(report, pts, rng, n, tol):
    mu, omega, nu = pts
    for v in VARIANTS:
        tag = f"[{v.value}]"
        for crisp in ((1.0, 0.0, 0.0), (0.0, 0.0, 1.0)):
            e = entropy_arrays(*crisp, v)
            report.record(f"entropy{tag}: crisp points give 0", e != 0.0, crisp, entropy=e)
        e = entropy_arrays(mu, omega, nu, v)
        report.record(f"entropy{tag}: range [0,1]", (e < 0.0) | (e > 1.0), pts, entropy=e)
        sim = similarity_arrays(*distance_arrays(mu, omega, nu), v)
        gap = np.abs(sim - e)
        report.record(f"entropy{tag}: similarity path == closed form", gap > EXACT_TOL, pts, gap=gap)
        es = entropy_arrays(nu, omega, mu, v)
        report.record(f"entropy{tag}: swap symmetry", es != e, pts, entropy=e, swapped=es)
        eq = entropy_arrays(mu, omega, mu, v)
        report.record(f"entropy{tag}: mu == nu gives 1", np.abs(eq - 1.0) > EXACT_TOL, (mu, omega, mu), entropy=eq)

        for kind in REDUCED_KINDS:
            fam = constrained_family(kind, mu, nu)
            general = entropy_arrays(*fam, v)
            reduced = entropy_reduced_arrays(kind, v, *fam, tol=tol)
            gap = np.abs(general - reduced)
            report.record(f"entropy{tag}: reduced {kind.value} form", gap > EXACT_TOL, fam, gap=gap)

        for cond in ("omega", "tau", "omega_balanced", "ignorance", "contradiction"):
            low, high, strict = monotonicity_pairs(rng, n, cond)
            e_lo, e_hi = entropy_arrays(*low, v), entropy_arrays(*high, v)
            bad = (e_lo > e_hi + EXACT_TOL) | (strict & ~(e_hi - e_lo > STRICT_ENTROPY_GAP))
            report.record(f"entropy{tag}: ordering in {cond}", bad, low, low=e_lo, high=e_hi)


def _check_decomposition(report, pts, rng, n):
    mu, omega, nu = pts
    for v in VARIANTS:
        tag = f"[{v.value}]"
        h = decompose_arrays(mu, omega, nu, v)
        total = sum(h[k] for k in COMPONENTS)
        report.record(f"hepta{tag}: partition of unity", np.abs(total - 1.0) > PARTITION_TOL, pts, total=total)
        unc = h["a"] + h["u"] + h["c"] + h["n"] + h["s"]
        e = entropy_arrays(mu, omega, nu, v)
        report.record(f"hepta{tag}: a+u+c+n+s == entropy", np.abs(unc - e) > PARTITION_TOL, pts, uncertainty=unc, entropy=e)
        low = np.minimum.reduce([h[k] for k in COMPONENTS])
        report.record(f"hepta{tag}: components >= 0", low < -EXACT_TOL, pts, min=low)
        report.record(f"hepta{tag}: t*f == 0", h["t"] * h["f"] != 0.0, pts, t=h["t"], f=h["f"])
        report.record(f"hepta{tag}: u*c == 0", h["u"] * h["c"] != 0.0, pts, u=h["u"], c=h["c"])
        zeros = sum((h[k] == 0.0).astype(int) for k in "ucns")
        report.record(f"hepta{tag}: two of u,c,n,s vanish", zeros < 2, pts, zeros=zeros)

        hs = decompose_arrays(nu, omega, mu, v)
        bad = (hs["t"] != h["f"]) | (hs["f"] != h["t"])
        for k in "aucns":
            bad |= hs[k] != h[k]
        report.record(f"hepta{tag}: swap symmetry", bad, pts)

        sets = [("random", pts)] + [
            (surface, boundary_points(rng, max(n // 1000, 1000), surface))
            for surface in ("omega=pi", "omega=kappa", "pi=kappa=0")
        ]
        for label, p in sets:
            a = h if p is pts else decompose_arrays(*p, v)
            b = decompose_by_cases_arrays(*p, v)
            gap = np.maximum.reduce([np.abs(a[k] - b[k]) for k in COMPONENTS])
            report.record(f"hepta{tag}: unified == case split ({label})", gap > ORACLE_TOL, p, gap=gap)

        for surface, cases in (("omega=pi", (1, 3)), ("omega=kappa", (2, 3))):
            bmu, bomega, bnu = boundary_points(rng, max(n // 1000, 1000), surface)
            shift = rng.uniform(-CONTINUITY_OFFSET, CONTINUITY_OFFSET, bmu.size)
            p = (bmu, np.clip(bomega + shift, 0.0, 1.0), bnu)
            parts = case_split_parts(*p, v)
            x = case_components(cases[0], *parts)
            y = case_components(cases[1], *parts)
            gap = np.maximum.reduce([np.abs(x[i] - y[i]) for i in range(4)])
            report.record(f"hepta{tag}: continuity across {surface}", gap > CONTINUITY_TOL, p, gap=gap)

        for kind in REDUCED_KINDS:
            fam = constrained_family(kind, mu, nu)
            hf = decompose_arrays(*fam, v)
            worst = np.maximum.reduce([np.abs(hf[k]) for k in VANISHING[kind]])
            report.record(f"hepta{tag}: {kind.value} vanishing components", worst > EXACT_TOL, fam, worst=worst)

        for name, point in PROTOTYPES.items():
            hp = decompose_arrays(*point, v)
            bad = any(float(hp[k]) != (1.0 if k == name else 0.0) for k in COMPONENTS)
            report.record(f"hepta{tag}: prototype {name} purity", bad, point, **{k: hp[k] for k in COMPONENTS})


def run_checks(samples: int, seed: int, tolerance: float = DEFAULT_TOL) -> CheckReport:
    """Run every invariant on ``samples`` uniform cube points from ``seed``.

    ``tolerance`` is the classification tolerance; the numeric tolerances of
    the individual invariants are fixed constants of this module.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    rng = SplitMix64(seed)
    pts = rng.triples(samples)
    report = CheckReport(samples=samples, seed=seed, tolerance=tolerance)
    _check_core(report, pts, tolerance)
    _check_entropy(report, pts, rng, samples, tolerance)
    _check_decomposition(report, pts, rng, samples)
    return report
