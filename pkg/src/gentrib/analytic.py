# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Analytic (closed-form) evaluation of generalized Tribonacci sequences.

The characteristic cubic of the recurrence ``V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}`` is

    x^3 - r x^2 - s x - t = 0

When

    Delta(r, s, t) = r^3 t / 27 - r^2 s^2 / 108 + r s t / 6 - s^3 / 27 + t^2 / 4 > 0

the cubic has one real root ``alpha`` and a pair of complex-conjugate roots ``omega1``, ``omega2``, given by Cardano's
formulas

    alpha  = r/3 + A + B
    omega1 = r/3 + eps A + eps^2 B
    omega2 = r/3 + eps^2 A + eps B

with ``A, B = cbrt(r^3/27 + r s/6 + t/2 +/- sqrt(Delta))`` and ``eps`` the primitive cube root of unity. Every
evaluation in this module assumes ``Delta > 0`` and refuses otherwise by raising ``DeltaNotPositive``. The exact
modules (``seq_core``, ``matrix``) have no such restriction.

Roots from the radicals are polished with Newton's method, since the radical form alone loses digits when ``A``
and ``B`` nearly cancel. All Binet sums are evaluated in complex arithmetic and collapse to the real part at the end;
the discarded imaginary magnitude is returned as a diagnostic.
"""

from __future__ import annotations

import logging
import math
import sys
from fractions import Fraction
from numbers import Real
from typing import NamedTuple

import numpy as np

from gentrib.seq_core import SequenceParams, as_fraction, fundamental, terms_range

logger = logging.getLogger(__name__)

TOL_ROOT = 1e-10
"""Base tolerance on the root residual ``|z^3 - r z^2 - s z - t|``, scaled by ``max(1, |r|, |s|, |t|)^3``."""

NEWTON_MAX_ITER = 60

EPSILON = complex(-0.5, math.sqrt(3.0) / 2.0)  # primitive cube root of unity


class DeltaNotPositive(ValueError):
    """Raised when Delta(r, s, t) <= 0, so the cubic does not have one real and two complex roots."""


class RootConvergenceError(ArithmeticError):
    """Raised when Newton polishing cannot bring a root residual below the tolerance."""


class BinetOverflow(OverflowError):
    """Raised when a root power in a closed form leaves the floating-point range."""


class CubicRoots(NamedTuple):
    """Roots of ``x^3 - r x^2 - s x - t`` together with the Cardano intermediates.

    Returns
    -------
    object
        - alpha (float): The real root.
        - omega1, omega2 (complex): The complex-conjugate pair, ``omega1`` with positive imaginary part.
        - delta (Fraction or float): Delta(r, s, t), exact when the coefficients are exact.
        - a_v, b_v (float): The real cube roots A and B.
        - radicand (Fraction or float): ``r^3/27 + r s/6 + t/2``, exact when the coefficients are exact.
    """

    alpha: float
    omega1: complex
    omega2: complex
    delta: Fraction | float
    a_v: float
    b_v: float
    radicand: Fraction | float

    @property
    def roots(self) -> tuple[complex, complex, complex]:
        return complex(self.alpha), self.omega1, self.omega2


class BinetConstants(NamedTuple):
    """The seed-dependent projection coefficients P, Q and R of the Binet formula."""

    p_c: complex
    q_c: complex
    r_c: complex


class BinetValue(NamedTuple):
    """Real part of a Binet evaluation and the magnitude of the imaginary part that was discarded."""

    value: float
    imag_residue: float


class QuadResiduals(NamedTuple):
    """Residuals of the quadratic approximation for the roots alpha, omega1 and omega2."""

    alpha: float
    omega1: float
    omega2: float


def discriminant(r: Real, s: Real, t: Real) -> Fraction | float:
    """Delta(r, s, t), as an exact rational for int/Fraction inputs and as a float otherwise."""
    r, s, t = (as_fraction(x) for x in (r, s, t))
    return r**3 * t / 27 - r**2 * s**2 / 108 + r * s * t / 6 - s**3 / 27 + t**2 / 4


def cardano_radicand(r: Real, s: Real, t: Real) -> Fraction | float:
    """The common part ``r^3/27 + r s/6 + t/2`` of the two Cardano cube-root radicands."""
    r, s, t = (as_fraction(x) for x in (r, s, t))
    return r**3 / 27 + r * s / 6 + t / 2


def root_tolerance(r: Real, s: Real, t: Real, tol: float = TOL_ROOT) -> float:
    """Root-residual tolerance scaled by the size of the coefficients."""
    return tol * max(1.0, abs(float(r)), abs(float(s)), abs(float(t))) ** 3


def char_poly(z: complex, r: float, s: float, t: float) -> complex:
    """Evaluate ``z^3 - r z^2 - s z - t`` in Horner form."""
    return ((z - r) * z - s) * z - t


def _newton(z: complex, r: float, s: float, t: float, max_iter: int) -> complex:
    for i in range(max_iter):
        slope = (3 * z - 2 * r) * z - s
        if slope == 0:
            logger.warning(f"Newton polishing hit a stationary point at z={z} after {i} iterations")
            break
        step = char_poly(z, r, s, t) / slope
        z -= step
        if abs(step) <= 4 * sys.float_info.epsilon * max(1.0, abs(z)):
            logger.debug(f"Newton polishing converged to z={z} after {i + 1} iterations")
            break
    return z


def require_positive_delta(r: Real, s: Real, t: Real) -> Fraction | float:
    """Return Delta(r, s, t), raising ``DeltaNotPositive`` unless it is strictly positive."""
    delta = discriminant(r, s, t)
    if delta <= 0:
        raise DeltaNotPositive(
            f"Closed forms need Delta(r, s, t) > 0. Got Delta({r}, {s}, {t}) = {delta} instead"
        )
    return delta


def cubic_roots(
    r: Real, s: Real, t: Real, *, tol_root: float = TOL_ROOT, max_iter: int = NEWTON_MAX_ITER
) -> CubicRoots:
    """Solve ``x^3 - r x^2 - s x - t = 0`` with Cardano's formulas and polish the roots with Newton's method.

    Parameters
    ----------
    r, s, t : int, Fraction or float, required
        Coefficients of the characteristic cubic.

    tol_root : float, optional, default=1e-10
        Base tolerance on the root residuals, scaled by ``max(1, |r|, |s|, |t|)^3``.

    max_iter : int, optional, default=60
        Maximum number of Newton iterations per root.

    Returns
    -------
    CubicRoots
        The real root, the complex pair (``omega2`` is the conjugate of ``omega1``) and the Cardano intermediates.

    Raises
    ------
    DeltaNotPositive
        If Delta(r, s, t) <= 0.
    RootConvergenceError
        If a polished root still has a residual above the tolerance.
    """
    delta = require_positive_delta(r, s, t)
    radicand = cardano_radicand(r, s, t)

    sqrt_delta = math.sqrt(float(delta))
    a_v = float(np.cbrt(float(radicand) + sqrt_delta))
    b_v = float(np.cbrt(float(radicand) - sqrt_delta))
    shift = float(r) / 3.0
    rf, sf, tf = float(r), float(s), float(t)

    alpha = _newton(complex(shift + a_v + b_v), rf, sf, tf, max_iter).real
    omega1 = _newton(shift + EPSILON * a_v + EPSILON.conjugate() * b_v, rf, sf, tf, max_iter)
    omega2 = omega1.conjugate()

    tol = root_tolerance(r, s, t, tol_root)
    for name, z in (("alpha", alpha), ("omega1", omega1)):
        residual = abs(char_poly(z, rf, sf, tf))
        if residual > tol:
            raise RootConvergenceError(f"Root {name}={z} has residual {residual:.3e} above tolerance {tol:.3e}")

    logger.debug(f"Roots for (r, s, t)=({r}, {s}, {t}): {alpha=}, {omega1=}, {omega2=}")
    return CubicRoots(alpha, omega1, omega2, delta, a_v, b_v, radicand)


def symmetric_residuals(roots: CubicRoots, r: Real, s: Real, t: Real) -> tuple[float, float, float]:
    """Residuals of the symmetric-function identities of the roots.

    For ``x^3 - r x^2 - s x - t`` the elementary symmetric functions are ``r``, ``-s`` and ``t``.

    Returns:
        tuple[float, float, float]: ``|sum - r|``, ``|pairwise sum + s|``, ``|product - t|``.
    """
    a, w1, w2 = roots.roots
    return (
        abs(a + w1 + w2 - float(r)),
        abs(a * w1 + a * w2 + w1 * w2 + float(s)),
        abs(a * w1 * w2 - float(t)),
    )


def binet_constants(p: SequenceParams, roots: CubicRoots) -> BinetConstants:
    """Projection coefficients of the seeds of ``p`` onto the three roots.

        P = V2 - (omega1 + omega2) V1 + omega1 omega2 V0
        Q = V2 - (alpha + omega2) V1 + alpha omega2 V0
        R = V2 - (alpha + omega1) V1 + alpha omega1 V0
    """
    a, w1, w2 = roots.roots
    v0, v1, v2 = p.seeds
    return BinetConstants(
        v2 - (w1 + w2) * v1 + w1 * w2 * v0,
        v2 - (a + w2) * v1 + a * w2 * v0,
        v2 - (a + w1) * v1 + a * w1 * v0,
    )


def root_power(z: complex, n: int) -> complex:
    """``z^n`` in complex arithmetic, raising ``BinetOverflow`` past the float range."""
    try:
        return complex(z) ** n
    except OverflowError as err:
        raise BinetOverflow(f"Closed form overflows: |{z}|^{n} is outside the floating-point range") from err


def binet_terms(roots: CubicRoots, consts: BinetConstants, n: int) -> tuple[complex, complex, complex]:
    """The three signed root terms whose sum is the Binet value at index n."""
    a, w1, w2 = roots.roots
    return (
        consts.p_c * root_power(a, n) / ((a - w1) * (a - w2)),
        -consts.q_c * root_power(w1, n) / ((a - w1) * (w1 - w2)),
        consts.r_c * root_power(w2, n) / ((a - w2) * (w1 - w2)),
    )


def _binet_sum(roots: CubicRoots, consts: BinetConstants, n: int) -> complex:
    return sum(binet_terms(roots, consts, n))


def _to_binet_value(z: complex) -> BinetValue:
    return BinetValue(z.real, abs(z.imag))


def u_binet(roots: CubicRoots, n: int) -> BinetValue:
    """Closed form of the fundamental sequence term U_n (P = Q = R = 1)."""
    if n < 0:
        raise ValueError(f"Index must be a non-negative integer. Got {n} instead")
    return _to_binet_value(_binet_sum(roots, BinetConstants(1, 1, 1), n))


def params_roots(p: SequenceParams, roots: CubicRoots | None = None) -> CubicRoots:
    """Return ``roots`` or, when not given, the roots of the characteristic cubic of ``p``."""
    return cubic_roots(p.r, p.s, p.t) if roots is None else roots


def v_binet(p: SequenceParams, n: int, roots: CubicRoots | None = None) -> BinetValue:
    """Closed form of V_n.

    Raises
    ------
    DeltaNotPositive
        If Delta(r, s, t) <= 0.
    """
    if n < 0:
        raise ValueError(f"Index must be a non-negative integer. Got {n} instead")
    roots = params_roots(p, roots)
    return _to_binet_value(_binet_sum(roots, binet_constants(p, roots), n))


def v_from_u(p: SequenceParams, n: int) -> int:
    """V_n as a combination of fundamental terms: ``V2 U_n + (s V1 + t V0) U_{n-1} + t V1 U_{n-2}`` (n >= 2)."""
    if n < 2:
        raise ValueError(f"The U-decomposition of V_n needs n >= 2. Got {n} instead")
    u_nm2, u_nm1, u_n = terms_range(fundamental(p), n - 2, n)
    return p.v2 * u_n + (p.s * p.v1 + p.t * p.v0) * u_nm1 + p.t * p.v1 * u_nm2


def _quad_terms(p: SequenceParams, n: int) -> tuple[float, float, float]:
    v_n, v_n1, v_n2 = terms_range(p, n, n + 2)
    s, t = float(p.s), float(p.t)
    try:
        return float(v_n2), s * v_n1 + t * v_n, t * v_n1
    except OverflowError as err:
        raise BinetOverflow(f"Terms around V_{n} are outside the floating-point range") from err


def quad_approx_residuals(
    p: SequenceParams, n: int, roots: CubicRoots | None = None, *, relative: bool = False
) -> QuadResiduals:
    """Residuals of the quadratic approximation of V at index n:

        P alpha^(n+2)  = alpha^2  V_{n+2} + alpha  (s V_{n+1} + t V_n) + t V_{n+1}
        Q omega1^(n+2) = omega1^2 V_{n+2} + omega1 (s V_{n+1} + t V_n) + t V_{n+1}
        R omega2^(n+2) = omega2^2 V_{n+2} + omega2 (s V_{n+1} + t V_n) + t V_{n+1}

    Exact V terms are combined with floating-point roots, so the residuals are pure rounding error.

    Args:
        relative (bool): Divide each residual by the magnitude of the largest participating term (at least 1), so
            that the result stays meaningful as the terms grow geometrically.
    """
    roots = params_roots(p, roots)
    consts = binet_constants(p, roots)
    quad, lin, const = _quad_terms(p, n)

    residuals = []
    for z, c in zip(roots.roots, consts, strict=True):
        lhs = c * root_power(z, n + 2)
        residual = abs(lhs - (z * z * quad + z * lin + const))
        if relative:
            scale = max(1.0, abs(lhs), abs(z) ** 2 * abs(quad) + abs(z) * abs(lin) + abs(const))
            residual /= scale
        residuals.append(residual)
    return QuadResiduals(*residuals)


def linear_form_check(p: SequenceParams, n: int, roots: CubicRoots | None = None) -> float:
    """Residual magnitude of ``alpha V_{n+2} + (s + omega1 omega2) V_{n+1} + t V_n = P alpha^(n+1)``."""
    roots = params_roots(p, roots)
    a, w1, w2 = roots.roots
    consts = binet_constants(p, roots)
    v_n, v_n1, v_n2 = terms_range(p, n, n + 2)
    lhs = a * v_n2 + (float(p.s) + w1 * w2) * v_n1 + float(p.t) * v_n
    return abs(lhs - consts.p_c * root_power(a, n + 1))


def is_close(approx: complex, exact: int, rel_tol: float, scale: float = 0.0) -> bool:
    """``|approx - exact| <= rel_tol * max(1, |exact|, scale)``.

    ``scale`` is typically ``binet_magnitude``, the size of the terms whose cancellation produced ``approx``.
    """
    return abs(approx - exact) <= rel_tol * max(1.0, abs(exact), scale)


def binet_magnitude(p: SequenceParams, n: int, roots: CubicRoots | None = None) -> float:
    """Sum of the magnitudes of the three Binet terms of V_n.

    Rounding error in ``v_binet`` scales with this quantity rather than with ``|V_n|``, which can be much smaller when
    the complex terms dominate and nearly cancel.
    """
    roots = params_roots(p, roots)
    return sum(abs(term) for term in binet_terms(roots, binet_constants(p, roots), n))
