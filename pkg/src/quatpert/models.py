"""Hydrogen, infinite-well and harmonic-oscillator levels under the coupling.

Everything here is expressed in each model's natural energy unit, so that
the three systems share one correction series:

    model        level E(n)    unit                  |W|   level radius
    hydrogen     -1/n**2       R_y (~13.6 eV)        2     alpha <= 1/(2 n**2)
    well          n**2         E_L = pi^2 hbar^2 /   2     alpha <= n**2 / 2
                                     (2 m L**2)
    oscillator    n + 1/2      E_omega = hbar*omega  1     alpha <= n + 1/2

The spectral gap between consecutive levels is lambda(n) = E(n+1) - E(n)
(dimensionless: (2n+1)/(n**2 (n+1)**2), 2n+1, and 1 respectively), and the
perturbed gap ratio sigma = Lambda/lambda measures how much the coupling
distorts the spectrum.  sigma is computed through two independent routes,
from two perturbed levels and from the explicit per-model gap series, which
the tests hold to 1e-12 of each other.

Truncation order `order` counts even contributions: order s keeps series
terms up through (alpha * |W| / 2E)**(2s).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .series import (
    PerturbationSpec,
    RadiusWarning,
    catalan,
    perturbed_energy,
)


class ModelKind(str, Enum):
    HYDROGEN = "hydrogen"
    WELL = "well"
    OSCILLATOR = "oscillator"


_MIN_N = {ModelKind.HYDROGEN: 1, ModelKind.WELL: 1, ModelKind.OSCILLATOR: 0}
_W_MAGNITUDE = {ModelKind.HYDROGEN: 2.0, ModelKind.WELL: 2.0, ModelKind.OSCILLATOR: 1.0}
_UNIT_NAME = {
    ModelKind.HYDROGEN: "R_y",
    ModelKind.WELL: "E_L",
    ModelKind.OSCILLATOR: "E_omega",
}


def _check_n(model: ModelKind, n: int) -> None:
    if n < _MIN_N[model]:
        raise ValueError(f"{model.value} requires n >= {_MIN_N[model]}, got {n}")


@dataclass(frozen=True)
class LevelSpec:
    """A single bound level: model identity and quantum number."""

    model: ModelKind
    n: int

    def __post_init__(self):
        _check_n(self.model, self.n)

    @property
    def energy_unit(self) -> str:
        """Name of the model's natural energy scale."""
        return _UNIT_NAME[self.model]


@dataclass(frozen=True)
class GapResult:
    """Gap between levels n and n+1: unperturbed, perturbed, and their ratio."""

    model: ModelKind
    n: int
    unperturbed_gap: float
    perturbed_gap: float
    sigma: float
    order: int
    alpha: float


@dataclass(frozen=True)
class SigmaCurveResult:
    """Rows (alpha, order, sigma) plus diagnostics for excluded strengths."""

    rows: tuple[tuple[float, int, float], ...]
    skipped: tuple[tuple[float, str], ...]
    notes: tuple[str, ...]


def unperturbed_energy(level: LevelSpec) -> float:
    """Level energy in the model's unit: -1/n**2, n**2, or n + 1/2."""
    if level.model is ModelKind.HYDROGEN:
        return -1.0 / level.n**2
    if level.model is ModelKind.WELL:
        return float(level.n**2)
    return level.n + 0.5


def model_w(level: LevelSpec) -> float:
    """Coupling magnitude |W| in the model's unit: 2, 2, or 1."""
    return _W_MAGNITUDE[level.model]


def perturbation_spec(level: LevelSpec, alpha: float) -> PerturbationSpec:
    """Series input for one level at strength alpha."""
    return PerturbationSpec(
        e0=unperturbed_energy(level), w=complex(model_w(level)), alpha=alpha
    )


def alpha_max(model: ModelKind, n: int) -> float:
    """Largest strength keeping level n inside the convergence radius."""
    _check_n(model, n)
    if model is ModelKind.HYDROGEN:
        return 1.0 / (2 * n**2)
    if model is ModelKind.WELL:
        return n**2 / 2.0
    return n + 0.5


def gap_alpha_max(model: ModelKind, n: int) -> float:
    """Binding strength bound for the level pair (n, n+1).

    The minimum of the two level bounds: 1/(2(n+1)**2) for hydrogen, and
    the level-n value for the well and oscillator.
    """
    return min(alpha_max(model, n), alpha_max(model, n + 1))


def sigma_alpha_limit(model: ModelKind, n: int) -> float:
    """Acceptance bound on alpha for gap-ratio sweeps.

    Equal to :func:`gap_alpha_max` except for the well's ground-state pair,
    which is widened to 1.0 so sweeps can cover the oscillatory regime
    beyond the pair bound of 0.5; rows in the widened range do not converge
    and are reported as such by :func:`sigma_curve`.
    """
    if model is ModelKind.WELL and n == 1:
        return 1.0
    return gap_alpha_max(model, n)


def spectral_gap(model: ModelKind, n: int) -> float:
    """Unperturbed gap E(n+1) - E(n) in model units.

    Closed forms: (2n+1)/(n**2 (n+1)**2) for hydrogen, 2n+1 for the well,
    1 for the oscillator.  Evaluated as the level difference so that the
    zero-strength gap ratio is exactly one at every n (the rational
    expressions can differ from the difference by one ulp).
    """
    _check_n(model, n)
    return unperturbed_energy(LevelSpec(model, n + 1)) - unperturbed_energy(
        LevelSpec(model, n)
    )


def _level_value(level: LevelSpec, alpha: float, order: int) -> float:
    return perturbed_energy(perturbation_spec(level, alpha), 2 * order).value


def _warn_if_outside(level: LevelSpec, alpha: float) -> bool:
    outside = abs(alpha) * model_w(level) > abs(unperturbed_energy(level))
    if outside:
        warnings.warn(
            RadiusWarning(
                f"alpha={alpha:.6g} puts {level.model.value} level n={level.n} "
                f"outside the convergence radius (bound {alpha_max(level.model, level.n):.6g}); "
                "the truncated sum does not converge"
            ),
            stacklevel=3,
        )
    return outside


def perturbed_level(level: LevelSpec, alpha: float, order: int) -> float:
    """Perturbed level at truncation `order` (even contributions kept).

    Out-of-radius strengths are evaluated anyway and flagged with a
    :class:`RadiusWarning`.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    _warn_if_outside(level, alpha)
    return _level_value(level, alpha, order)


def perturbed_gap(model: ModelKind, n: int, alpha: float, order: int) -> float:
    """Perturbed gap Lambda(n, alpha) = level(n+1) - level(n), model units.

    A strength beyond either level's radius raises a :class:`RadiusWarning`
    naming the binding level.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    lo, hi = LevelSpec(model, n), LevelSpec(model, n + 1)
    binding = lo if alpha_max(model, n) <= alpha_max(model, n + 1) else hi
    _warn_if_outside(binding, alpha)
    return _level_value(hi, alpha, order) - _level_value(lo, alpha, order)


def sigma_ratio(model: ModelKind, n: int, alpha: float, order: int) -> float:
    """Gap ratio sigma = Lambda/lambda from two perturbed levels."""
    return perturbed_gap(model, n, alpha, order) / spectral_gap(model, n)


def sigma_series(model: ModelKind, n: int, alpha: float, order: int) -> float:
    """Gap ratio from the explicit per-model series (independent route).

    Matches :func:`sigma_ratio` term for term at every truncation order.
    Powers are grouped as (alpha/scale)**(2s) so that no intermediate
    quantity overflows at strengths inside the acceptance bounds.
    """
    _check_n(model, n)
    if order < 1:
        raise ValueError("order must be >= 1")
    total = 1.0
    for s in range(1, order + 1):
        c = 2 * catalan(s - 1)  # = (2/s) * C(2s-2, s-1), exact
        sign = 1.0 if s % 2 == 1 else -1.0
        if model is ModelKind.HYDROGEN:
            bracket = ((n + 1) ** 2 * alpha) ** (2 * s) / (n + 1) ** 2 - (
                n**2 * alpha
            ) ** (2 * s) / n**2
            total += -sign * c * bracket * n**2 * (n + 1) ** 2 / (2 * n + 1)
        elif model is ModelKind.WELL:
            bracket = (alpha / (n + 1) ** 2) ** (2 * s) * (n + 1) ** 2 - (
                alpha / n**2
            ) ** (2 * s) * n**2
            total += sign * c * bracket / (2 * n + 1)
        else:
            bracket = (alpha / (2 * n + 3)) ** (2 * s) * (2 * n + 3) - (
                alpha / (2 * n + 1)
            ) ** (2 * s) * (2 * n + 1)
            total += sign * (c / 2) * bracket
    return total


def sigma_limit(model: ModelKind, n: int, alpha: float) -> float:
    """Analytic gap ratio from the resummed levels.

    Valid as a function for any alpha; the truncated series converges to it
    only inside the pair radius.
    """
    _check_n(model, n)
    aw = abs(alpha) * _W_MAGNITUDE[model]
    lo = LevelSpec(model, n)
    hi = LevelSpec(model, n + 1)
    e_lo, e_hi = unperturbed_energy(lo), unperturbed_energy(hi)
    lam = math.copysign(math.hypot(e_hi, aw), e_hi) - math.copysign(
        math.hypot(e_lo, aw), e_lo
    )
    return lam / spectral_gap(model, n)


def compute_gap(model: ModelKind, n: int, alpha: float, order: int) -> GapResult:
    """Bundle lambda, Lambda and sigma for one pair at one truncation."""
    lam = spectral_gap(model, n)
    big_lam = perturbed_gap(model, n, alpha, order)
    return GapResult(
        model=model,
        n=n,
        unperturbed_gap=lam,
        perturbed_gap=big_lam,
        sigma=big_lam / lam,
        order=order,
        alpha=alpha,
    )


def sigma_curve(
    model: ModelKind,
    n: int,
    alphas: list[float],
    max_order: int,
) -> SigmaCurveResult:
    """sigma(n, alpha) as a function of truncation order s = 1..max_order.

    One row (alpha, s, sigma_s) per requested strength and order, in the
    given alpha order.  Strengths beyond :func:`sigma_alpha_limit` are
    skipped and reported; strengths inside the acceptance bound but beyond
    the pair radius are kept and noted as non-convergent.
    """
    _check_n(model, n)
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    lam = spectral_gap(model, n)
    limit = sigma_alpha_limit(model, n)
    pair_bound = gap_alpha_max(model, n)
    rows: list[tuple[float, int, float]] = []
    skipped: list[tuple[float, str]] = []
    notes: list[str] = []
    for alpha in alphas:
        if abs(alpha) > limit:
            skipped.append(
                (alpha, f"exceeds the acceptance bound {limit:.6g} for "
                        f"{model.value} n={n}")
            )
            continue
        if abs(alpha) == pair_bound:
            notes.append(
                f"alpha={alpha:.6g} sits on the pair radius; terms no longer "
                "decay strictly"
            )
        elif abs(alpha) > pair_bound:
            notes.append(
                f"alpha={alpha:.6g} is beyond the pair radius {pair_bound:.6g}; "
                "partial sums oscillate without converging"
            )
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RadiusWarning)
            lo = perturbed_energy(
                perturbation_spec(LevelSpec(model, n), alpha), 2 * max_order
            )
            hi = perturbed_energy(
                perturbation_spec(LevelSpec(model, n + 1), alpha), 2 * max_order
            )
        for s in range(1, max_order + 1):
            gap_s = hi.partial_sums[2 * s - 1] - lo.partial_sums[2 * s - 1]
            rows.append((alpha, s, gap_s / lam))
    return SigmaCurveResult(rows=tuple(rows), skipped=tuple(skipped), notes=tuple(notes))
