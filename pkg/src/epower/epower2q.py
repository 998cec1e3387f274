"""Entangling power of two-qubit gates whose last two coefficients agree.

For such gates the critical inputs reduce to pairs of two-qubit states
cos(a)|00> + sin(a)|11|, the output spectrum on one side has a closed
form, and the maximum lies on the line alpha + beta = pi/2.  This module
implements the closed-form spectrum, the boundary analysis, the line
maximization, analytic values for the two solvable families, derivative
diagnostics, and a falsification harness for the edge-maximum conjecture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import cos, sin, pi, log2

import numpy as np

from .canonical import (
    CanonicalParams,
    PauliCoefficients,
    RANK_TOL,
    coefficients_from_xyz,
    schmidt_rank,
)
from .qmath import DensityMatrix, DomainError, shannon_entropy
from .results import EntanglingPowerResult

__all__ = [
    "Spectrum",
    "ProductInputParams",
    "DerivativeConstants",
    "reduced_density_closed_form",
    "spectrum",
    "entanglement_at",
    "line_profile_value",
    "line_profile_values",
    "entanglement_grid",
    "boundary_maximum",
    "partial_derivatives",
    "entangling_power_c2eqc3",
    "conjecture_gap",
    "example1_threshold",
    "example1_power",
    "example2_power",
    "example1_line_entropy",
    "e2_derivative",
    "e2_derivative_limit_upper",
    "e2_derivative_limit_lower",
    "example2_pair_sum_derivative",
]

SPECTRUM_CLAMP = 1e-10
DEGENERATE_LAMBDA = 1e-12
# the derivative formula divides by the gap inside each eigenvalue pair;
# below this the gap is dominated by rounding noise in the discriminant
DEGENERATE_GAP = 1e-7
LINE_GRID_N = 2001
GOLDEN_TOL = 1e-10
TIE_TOL = 1e-9

_LIMIT_NOTE = (
    "d/dy limits at the endpoints: 2|c|^2/ln2 at y=+1, "
    "|c|^2 (log2 4|c|^2 - log2(1-4|c|^2)) at y=-1"
)


@dataclass(frozen=True)
class Spectrum:
    """Closed-form eigenvalues of the one-sided reduced output state.

    ``lam`` is ordered (lam1, lam2, lam3, lam4) with lam1 <= lam2 and
    lam3 <= lam4; ``t1``/``t2`` are the two block traces.
    """

    lam: np.ndarray
    t1: float
    t2: float

    def __post_init__(self):
        lam = np.asarray(self.lam, dtype=float)
        if lam.min() < -SPECTRUM_CLAMP:
            raise DomainError(f"spectrum entry {lam.min():.3e} below clamp")
        lam = np.clip(lam, 0.0, None)
        if abs(lam.sum() - 1.0) > 1e-9:
            raise DomainError(f"spectrum sums to {lam.sum()!r}, not 1")
        if lam[0] > lam[1] + 1e-12 or lam[2] > lam[3] + 1e-12:
            raise DomainError("spectrum pairs out of order")
        if abs(self.t1 + self.t2 - 1.0) > 1e-10:
            raise DomainError(f"block traces sum to {self.t1 + self.t2!r}, not 1")
        lam.flags.writeable = False
        object.__setattr__(self, "lam", lam)

    def entropy(self) -> float:
        return shannon_entropy(self.lam)


@dataclass(frozen=True)
class ProductInputParams:
    """Six angles of an ancilla-assisted product input state.

    alpha, beta in [0, pi/2]; theta, xi in [0, 2pi); mu, nu in (0, pi/2].
    """

    alpha: float
    beta: float
    theta: float = 0.0
    xi: float = 0.0
    mu: float = pi / 2
    nu: float = pi / 2

    def __post_init__(self):
        tol = 1e-12
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not -tol <= v <= pi / 2 + tol:
                raise DomainError(f"{name}={v!r} outside [0, pi/2]")
        for name in ("theta", "xi"):
            v = getattr(self, name)
            if not -tol <= v < 2 * pi:
                raise DomainError(f"{name}={v!r} outside [0, 2pi)")
        for name in ("mu", "nu"):
            v = getattr(self, name)
            if not 0.0 < v <= pi / 2 + tol:
                raise DomainError(f"{name}={v!r} outside (0, pi/2]")


@dataclass(frozen=True)
class DerivativeConstants:
    """Gate constants entering the analytic partial derivatives."""

    k: float
    b: float
    l1: float
    l2: float

    @classmethod
    def from_coefficients(cls, c: PauliCoefficients) -> "DerivativeConstants":
        c0, c1, c2, c3 = c.as_array()
        k = (c0 * np.conj(c3) + c3 * np.conj(c0)).real
        return cls(
            k=float(k),
            b=float(abs(c0) ** 2 + abs(c3) ** 2),
            l1=float(abs(c0 * c3) ** 2),
            l2=float(abs(c1 * c2) ** 2),
        )


def _constants(c: PauliCoefficients):
    c0, c1, c2, c3 = c.as_array()
    b = abs(c0) ** 2 + abs(c3) ** 2
    a2 = abs(c1) ** 2 + abs(c2) ** 2
    k = (c0 * np.conj(c3) + c3 * np.conj(c0)).real
    k2 = (c1 * np.conj(c2) + c2 * np.conj(c1)).real
    l1 = abs(c0 * c3) ** 2
    l2 = abs(c1 * c2) ** 2
    return float(b), float(a2), float(k), float(k2), float(l1), float(l2)


def _lambda_pair(t, big_l):
    """Stable eigenvalue pair ((t -+ sqrt(t^2-4L))/2) with product form.

    The small root is recovered from lam_lo * lam_hi = L to avoid the
    cancellation in t - sqrt(t^2 - 4L).
    """
    t = np.asarray(t, dtype=float)
    big_l = np.asarray(big_l, dtype=float)
    disc = t * t - 4.0 * big_l
    if np.any(disc < -1e-10):
        raise RuntimeError(f"negative discriminant {disc.min():.3e} in spectrum")
    hi = 0.5 * (t + np.sqrt(np.clip(disc, 0.0, None)))
    with np.errstate(divide="ignore", invalid="ignore"):
        lo = np.where(hi > 1e-300, big_l / np.where(hi > 1e-300, hi, 1.0), 0.0)
    return lo, hi


def _spectrum_arrays(c: PauliCoefficients, alpha, beta):
    """Broadcast closed-form spectrum; returns (lam[..., 4], t1, t2)."""
    b, a2, k, k2, l1, l2 = _constants(c)
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    cc = np.cos(2 * alpha) * np.cos(2 * beta)
    s_sq = np.sin(2 * alpha) ** 2 * np.sin(2 * beta) ** 2
    t1 = b + cc * k
    t2 = a2 - cc * k2
    lo1, hi1 = _lambda_pair(t1, l1 * s_sq)
    lo2, hi2 = _lambda_pair(t2, l2 * s_sq)
    lam = np.stack(np.broadcast_arrays(lo1, hi1, lo2, hi2), axis=-1)
    return lam, t1, t2


def _entropy_last_axis(lam: np.ndarray) -> np.ndarray:
    lam = np.clip(lam, 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam > 0.0, lam * np.log2(np.where(lam > 0.0, lam, 1.0)), 0.0)
    return -terms.sum(axis=-1) + 0.0


def reduced_density_closed_form(c: PauliCoefficients, alpha: float, beta: float) -> DensityMatrix:
    """Closed-form reduced state on (B, R_B) for the two-angle product input.

    The matrix is X-shaped in the computational basis of B (x) R_B: one
    2x2 block on |00>,|11> and one on |01>,|10>.
    """
    c0, c1, c2, c3 = c.as_array()
    ca = cos(2 * alpha)
    cb2, sb2, s2b = cos(beta) ** 2, sin(beta) ** 2, sin(2 * beta)
    k = c0 * np.conj(c3) + c3 * np.conj(c0)
    k2 = c1 * np.conj(c2) + c2 * np.conj(c1)
    w = c0 * np.conj(c3) - c3 * np.conj(c0)
    w2 = c1 * np.conj(c2) - c2 * np.conj(c1)
    b = abs(c0) ** 2 + abs(c3) ** 2
    a2 = abs(c1) ** 2 + abs(c2) ** 2
    d = abs(c0) ** 2 - abs(c3) ** 2
    d2 = abs(c1) ** 2 - abs(c2) ** 2

    m11 = cb2 * (b + ca * k)
    m44 = sb2 * (b - ca * k)
    m14 = 0.5 * s2b * (d - ca * w)
    m41 = 0.5 * s2b * (d + ca * w)
    m22 = cb2 * (a2 - ca * k2)
    m33 = sb2 * (a2 + ca * k2)
    m23 = 0.5 * s2b * (d2 + ca * w2)
    m32 = 0.5 * s2b * (d2 - ca * w2)

    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0], rho[0, 3], rho[3, 0], rho[3, 3] = m11, m14, m41, m44
    rho[2, 2], rho[2, 1], rho[1, 2], rho[1, 1] = m22, m23, m32, m33
    return DensityMatrix(rho)


def spectrum(c: PauliCoefficients, alpha: float, beta: float) -> Spectrum:
    """Closed-form eigenvalues of the reduced output state."""
    lam, t1, t2 = _spectrum_arrays(c, alpha, beta)
    return Spectrum(lam, float(t1), float(t2))


def entanglement_at(c: PauliCoefficients, alpha: float, beta: float) -> float:
    """Output entanglement in ebits at input angles (alpha, beta)."""
    return spectrum(c, alpha, beta).entropy()


def _line_lambdas(c: PauliCoefficients, alpha):
    """Spectrum on the line beta = pi/2 - alpha via the specialized traces."""
    b, a2, k, k2, l1, l2 = _constants(c)
    alpha = np.asarray(alpha, dtype=float)
    u = np.cos(2 * alpha) ** 2
    s4 = np.sin(2 * alpha) ** 4
    lo1, hi1 = _lambda_pair(b - k * u, l1 * s4)
    lo2, hi2 = _lambda_pair(a2 + k2 * u, l2 * s4)
    return np.stack(np.broadcast_arrays(lo1, hi1, lo2, hi2), axis=-1)


def line_profile_value(c: PauliCoefficients, alpha: float) -> float:
    """Entanglement at (alpha, pi/2 - alpha) for alpha in [0, pi/4]."""
    if not -1e-12 <= alpha <= pi / 4 + 1e-12:
        raise DomainError(f"alpha={alpha!r} outside [0, pi/4]")
    return float(_entropy_last_axis(_line_lambdas(c, alpha)))


def line_profile_values(c: PauliCoefficients, alphas) -> np.ndarray:
    """Vectorized line profile over an array of alpha values."""
    return _entropy_last_axis(_line_lambdas(c, np.asarray(alphas, dtype=float)))


def entanglement_grid(c: PauliCoefficients, alphas, betas) -> np.ndarray:
    """Entanglement on the outer grid alphas x betas (closed form)."""
    a = np.asarray(alphas, dtype=float)[:, None]
    b = np.asarray(betas, dtype=float)[None, :]
    lam, _, _ = _spectrum_arrays(c, a, b)
    return _entropy_last_axis(lam)


def _require_c2_eq_c3(c: PauliCoefficients, tol: float = 1e-10):
    if abs(c.c2 - c.c3) > tol:
        raise DomainError(f"|c2 - c3| = {abs(c.c2 - c.c3):.3e} exceeds {tol:.0e}")


def boundary_maximum(c: PauliCoefficients, x: float, y: float) -> EntanglingPowerResult:
    """Maximum over the boundary set alpha or beta in {0, pi/4}.

    For cos(2x+2y) <= 0 the boundary maximum is max(1, E(pi/4, pi/4));
    otherwise it is max(E(0, pi/2), E(pi/4, pi/4)).
    """
    _require_c2_eq_c3(c)
    e44 = entanglement_at(c, pi / 4, pi / 4)
    branch_neg = cos(2 * x + 2 * y) <= 0.0
    if branch_neg:
        other, other_tag = 1.0, "balanced boundary (alpha=0)"
        other_alpha, other_beta = 0.0, _balanced_beta(c)
    else:
        other = entanglement_at(c, 0.0, pi / 2)
        other_tag = "product edge (alpha=0, beta=pi/2)"
        other_alpha, other_beta = 0.0, pi / 2
    diag = {
        "branch": "cos(2x+2y)<=0" if branch_neg else "cos(2x+2y)>0",
        "candidates": {"maximally_entangled": e44, other_tag: other},
    }
    if e44 >= other - TIE_TOL:
        return EntanglingPowerResult(
            value=max(e44, other), method="boundary",
            critical="maximally entangled (alpha=beta=pi/4)",
            critical_alpha=pi / 4, critical_beta=pi / 4, diagnostics=diag,
        )
    return EntanglingPowerResult(
        value=other, method="boundary", critical=other_tag,
        critical_alpha=other_alpha, critical_beta=other_beta, diagnostics=diag,
    )


def _balanced_beta(c: PauliCoefficients) -> float:
    """Beta at alpha=0 where the two block traces both equal 1/2, if any."""
    b, a2, k, k2, l1, l2 = _constants(c)
    if k <= 0:
        return pi / 4
    arg = (a2 - b) / (k + k2)
    if abs(arg) > 1.0:
        return pi / 4
    return 0.5 * float(np.arccos(arg))


def partial_derivatives(c: PauliCoefficients, alpha: float, beta: float):
    """Analytic (d/d alpha, d/d beta) of the entanglement surface.

    Valid only at interior points with a nondegenerate spectrum; the
    formula divides by the gap inside each eigenvalue pair.
    """
    b, a2, k, k2, l1, l2 = _constants(c)
    lam, t1, t2 = _spectrum_arrays(c, alpha, beta)
    if np.any(lam <= DEGENERATE_LAMBDA):
        raise DomainError("degenerate spectrum: derivative formula singular")
    s_sq = sin(2 * alpha) ** 2 * sin(2 * beta) ** 2
    r1 = float(np.sqrt(max(t1 * t1 - 4 * l1 * s_sq, 0.0)))
    r2 = float(np.sqrt(max(t2 * t2 - 4 * l2 * s_sq, 0.0)))
    if r1 <= DEGENERATE_GAP or r2 <= DEGENERATE_GAP:
        raise DomainError("coincident eigenvalue pair: derivative formula singular")
    lg21 = log2(lam[1] / lam[0])
    lg43 = log2(lam[3] / lam[2])
    g = log2(l1 / l2) + t1 / r1 * lg21 - t2 / r2 * lg43
    h = 4 * l1 / r1 * lg21 + 4 * l2 / r2 * lg43
    f_alpha = (k * sin(2 * alpha) * cos(2 * beta) * g
               + sin(2 * alpha) * cos(2 * alpha) * sin(2 * beta) ** 2 * h)
    f_beta = (k * cos(2 * alpha) * sin(2 * beta) * g
              + sin(2 * beta) * cos(2 * beta) * sin(2 * alpha) ** 2 * h)
    return float(f_alpha), float(f_beta)


def _golden_max(f, lo: float, hi: float, tol: float = GOLDEN_TOL):
    """Golden-section maximization of a unimodal-enough scalar function."""
    inv_phi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c_pt = b - inv_phi * (b - a)
    d_pt = a + inv_phi * (b - a)
    fc, fd = f(c_pt), f(d_pt)
    while b - a > tol:
        if fc >= fd:
            b, d_pt, fd = d_pt, c_pt, fc
            c_pt = b - inv_phi * (b - a)
            fc = f(c_pt)
        else:
            a, c_pt, fc = c_pt, d_pt, fd
            d_pt = a + inv_phi * (b - a)
            fd = f(d_pt)
    x_best = 0.5 * (a + b)
    return x_best, f(x_best)


def _maximize_line(c: PauliCoefficients, grid_n: int = LINE_GRID_N):
    """Dense grid plus golden-section refinement of the line profile."""
    alphas = np.linspace(0.0, pi / 4, grid_n)
    vals = line_profile_values(c, alphas)
    i = int(np.argmax(vals))
    lo = alphas[max(i - 1, 0)]
    hi = alphas[min(i + 1, grid_n - 1)]
    a_star, v_star = _golden_max(lambda a: line_profile_value(c, a), lo, hi)
    if vals[i] > v_star:
        a_star, v_star = float(alphas[i]), float(vals[i])
    return a_star, v_star, float(vals[0]), float(vals[-1])


def entangling_power_c2eqc3(x: float, y: float) -> EntanglingPowerResult:
    """Entangling power of the gate with chamber angles (x, y, z=y).

    Schmidt-rank-deficient gates (y = 0, a controlled phase up to local
    unitaries) are routed to the phase-gate solver.  Otherwise the line
    alpha + beta = pi/2 is scanned densely and refined, and the balanced
    boundary value 1 is taken into account when cos(2x+2y) <= 0.
    """
    params = CanonicalParams(x, y, y)
    c = coefficients_from_xyz(params)
    if schmidt_rank(c, RANK_TOL) < 4:
        from .schmidt2 import PhaseGateSpec, entangling_power_phase_gate

        sub = entangling_power_phase_gate(PhaseGateSpec((0.0, 4.0 * x)))
        return EntanglingPowerResult(
            value=sub.value, method="rank2_dispatch", critical=sub.critical,
            diagnostics={"phases": (0.0, 4.0 * x), "sub_method": sub.method,
                         **sub.diagnostics},
        )

    a_star, v_star, v0, v4 = _maximize_line(c)
    branch_neg = cos(2 * x + 2 * y) <= 0.0
    candidates = [
        (v4, pi / 4, pi / 4, "maximally entangled (alpha=pi/4)", "line_scan"),
        (v0, 0.0, pi / 2, "product (alpha=0 line edge)", "line_scan"),
    ]
    if branch_neg:
        candidates.append(
            (1.0, 0.0, _balanced_beta(c), "balanced boundary (alpha=0)", "boundary"))
    candidates.append(
        (v_star, a_star, pi / 2 - a_star, "line interior", "line_scan"))

    best = max(v for v, *_ in candidates)
    # ties prefer the earlier (boundary/edge) candidates for reproducibility
    _, alpha, beta, tag, method = next(
        cand for cand in candidates if cand[0] >= best - TIE_TOL)
    return EntanglingPowerResult(
        value=best, method=method, critical=tag,
        critical_alpha=alpha, critical_beta=beta,
        diagnostics={
            "branch": "cos(2x+2y)<=0" if branch_neg else "cos(2x+2y)>0",
            "line_max": v_star, "line_argmax": a_star,
            "edge_values": (v0, v4), "grid_n": LINE_GRID_N,
        },
    )


def conjecture_gap(x: float, y: float, grid_n: int = 4001) -> float:
    """Excess of the line-profile grid maximum over its two edge values.

    A value above 1e-9 would place the maximum strictly inside the line,
    falsifying the edge-maximum conjecture for this gate.
    """
    params = CanonicalParams(x, y, y)
    c = coefficients_from_xyz(params)
    alphas = np.linspace(0.0, pi / 4, grid_n)
    vals = line_profile_values(c, alphas)
    return float(vals.max() - max(vals[0], vals[-1]))


@lru_cache(maxsize=None)
def example1_threshold(tol: float = 1e-10) -> float:
    """Crossover angle where the two candidate maxima of the equal-tail
    family agree (root near 0.1018), found by bisection on [0.01, pi/8]."""

    def diff(t: float) -> float:
        prod = shannon_entropy([cos(2 * t) ** 2, sin(2 * t) ** 2])
        csq = sin(t) ** 2 * cos(t) ** 2
        me = shannon_entropy([1 - 3 * csq, csq, csq, csq])
        return prod - me

    lo, hi = 0.01, pi / 8
    f_lo, f_hi = diff(lo), diff(hi)
    if not (f_lo > 0 > f_hi):
        raise RuntimeError(f"bisection bracket invalid: f({lo})={f_lo}, f({hi})={f_hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if diff(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def example1_power(x: float) -> EntanglingPowerResult:
    """Entangling power of the family with all three tail coefficients
    equal (chamber angles x = y = z), for x in (0, pi/4].

    Below the crossover the product input wins with value
    H(cos^2 2x, sin^2 2x); above it the maximally entangled input wins
    with value H(cos^6 x + sin^6 x, (cos^2 x sin^2 x) * 3).
    """
    if not 0.0 < x <= pi / 4 + 1e-12:
        raise DomainError(f"x={x!r} outside (0, pi/4]")
    x0 = example1_threshold()
    v_prod = shannon_entropy([cos(2 * x) ** 2, sin(2 * x) ** 2])
    csq = sin(x) ** 2 * cos(x) ** 2
    v_me = shannon_entropy([1 - 3 * csq, csq, csq, csq])
    tie = abs(v_prod - v_me) <= TIE_TOL
    diag = {"threshold": x0, "product_value": v_prod,
            "max_entangled_value": v_me, "tie": tie}
    if x <= x0 or tie:
        return EntanglingPowerResult(
            value=v_prod, method="closed_form",
            critical="product (alpha=0 line edge)",
            critical_alpha=0.0, critical_beta=pi / 2, diagnostics=diag,
        )
    return EntanglingPowerResult(
        value=v_me, method="closed_form",
        critical="maximally entangled (alpha=pi/4)",
        critical_alpha=pi / 4, critical_beta=pi / 4, diagnostics=diag,
    )


def example2_power(y: float) -> EntanglingPowerResult:
    """Entangling power of the family with x = pi/4 and z = y, y in (0, pi/4).

    The maximum always sits at the maximally entangled input and equals
    H((cos^4 y + sin^4 y)/2 twice, sin^2 y cos^2 y twice).
    """
    if not 0.0 < y < pi / 4:
        raise DomainError(f"y={y!r} outside (0, pi/4)")
    half = 0.5 * (cos(y) ** 4 + sin(y) ** 4)
    cross = sin(y) ** 2 * cos(y) ** 2
    value = shannon_entropy([half, half, cross, cross])
    return EntanglingPowerResult(
        value=value, method="closed_form",
        critical="maximally entangled (alpha=beta=pi/4)",
        critical_alpha=pi / 4, critical_beta=pi / 4,
        diagnostics={"spectrum": (half, half, cross, cross)},
    )


def _example1_line_lambdas(yvar: float, csq: float):
    """Spectrum of the equal-tail family on the line, in y = -cos(4 alpha)."""
    u0 = 1.0 - 3.0 * csq
    disc = (u0 - csq) * (u0 - csq * yvar * yvar)
    hi = 0.5 * (u0 + csq * yvar + np.sqrt(max(disc, 0.0)))
    # lo * hi = |c0 c|^2 sin^4(2 alpha) exactly; recover lo stably
    lo = u0 * csq * (1.0 + yvar) ** 2 / (4.0 * hi) if hi > 0 else 0.0
    c2a = np.sqrt(max((1.0 - yvar) / 2.0, 0.0))
    return lo, hi, (1.0 - c2a) ** 2 * csq, (1.0 + c2a) ** 2 * csq


def _check_e2_domain(csq: float, *, open_y=None):
    if not 0.0 < csq < 0.25:
        raise DomainError(f"|c|^2={csq!r} outside (0, 1/4)")
    if open_y is not None and not -1.0 < open_y < 1.0:
        raise DomainError(
            f"y={open_y!r} outside the open interval (-1, 1); {_LIMIT_NOTE}")


def example1_line_entropy(yvar: float, csq: float) -> float:
    """Line-profile entropy of the equal-tail family as a function of
    y = -cos(4 alpha) in [-1, 1] and tail weight |c|^2 in (0, 1/4)."""
    _check_e2_domain(csq)
    if not -1.0 <= yvar <= 1.0:
        raise DomainError(f"y={yvar!r} outside [-1, 1]")
    return float(_entropy_last_axis(np.array(_example1_line_lambdas(yvar, csq))))


def e2_derivative(yvar: float, csq: float) -> float:
    """Analytic d/dy of the equal-tail line profile, y in the open (-1, 1)."""
    _check_e2_domain(csq, open_y=yvar)
    l12, l22, l32, l42 = _example1_line_lambdas(yvar, csq)
    term1 = -np.sqrt(2.0 / (1.0 - yvar)) * (log2(l32) - log2(l42))
    term2 = (-np.sqrt((1.0 - 4.0 * csq) / (1.0 - csq * (3.0 + yvar * yvar)))
             * yvar * (log2(l12) - log2(l22)))
    term3 = log2(csq / (1.0 - 3.0 * csq))
    return float(0.5 * csq * (term1 + term2 + term3))


def e2_derivative_limit_upper(csq: float) -> float:
    """Limit of the line-profile derivative as y -> +1: 2|c|^2 / ln 2."""
    _check_e2_domain(csq)
    return 2.0 * csq / np.log(2.0)


def e2_derivative_limit_lower(csq: float) -> float:
    """Limit as y -> -1: |c|^2 (log2 4|c|^2 - log2(1 - 4|c|^2))."""
    _check_e2_domain(csq)
    return csq * (log2(4.0 * csq) - log2(1.0 - 4.0 * csq))


def example2_pair_sum_derivative(u: float, y: float) -> float:
    """d/du of the sum of the two large eigenvalues for x = pi/4 gates,
    in u = cos^2(2 alpha).  Nonnegative on [0, 1], which is what pins the
    maximum of that family at alpha = pi/4."""
    if not -1e-12 <= u <= 1.0 + 1e-12:
        raise DomainError(f"u={u!r} outside [0, 1]")
    if not 0.0 < y < pi / 4:
        raise DomainError(f"y={y!r} outside (0, pi/4)")
    k = 0.5 * sin(2 * y)
    lam0 = 0.5 * (cos(y) ** 4 + sin(y) ** 4)
    lam2 = sin(y) ** 2 * cos(y) ** 2
    ell = lam0 * lam2
    num1 = -k + 8 * ell * (1 - u) + 2 * k * k * u
    den1 = np.sqrt((1 - 2 * k * u) ** 2 - 16 * ell * (1 - u) ** 2)
    num2 = k + 8 * ell * (1 - u) + 2 * k * k * u
    den2 = np.sqrt((1 + 2 * k * u) ** 2 - 16 * ell * (1 - u) ** 2)
    return float(0.5 * (num1 / den1 + num2 / den2))
