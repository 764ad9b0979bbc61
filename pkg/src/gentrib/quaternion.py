# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Generalized Tribonacci quaternions and their Binet formula.

The n-th generalized Tribonacci quaternion of ``p`` is

    Q_{V,n} = V_n + V_{n+1} i + V_{n+2} j + V_{n+3} k

With ``alpha``, ``omega1``, ``omega2`` the roots of the characteristic cubic and the root quaternions
``z_ = 1 + z i + z^2 j + z^3 k``, the closed form is

    Q_{V,n} = P alpha_ alpha^n / ((alpha - omega1)(alpha - omega2))
            - Q omega1_ omega1^n / ((alpha - omega1)(omega1 - omega2))
            + R omega2_ omega2^n / ((alpha - omega2)(omega1 - omega2))

Only scalar-by-quaternion products and sums are needed for the closed form, so complex scalars never meet the Hamilton
product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from gentrib.analytic import CubicRoots, QuadResiduals, binet_constants, params_roots, root_power
from gentrib.seq_core import SequenceParams, terms_range

S = TypeVar("S", int, float, complex)


@dataclass(frozen=True)
class Quaternion(Generic[S]):
    """Quaternion ``w + x i + y j + z k`` over a pluggable scalar (exact ``int`` or ``complex``).

    Arithmetic is componentwise except for the product of two quaternions, which is the Hamilton product
    (``i^2 = j^2 = k^2 = ijk = -1``).
    """

    w: S
    x: S
    y: S
    z: S

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(a + b for a, b in zip(self, other, strict=True)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(a - b for a, b in zip(self, other, strict=True)))

    def __neg__(self) -> Quaternion:
        return Quaternion(*(-a for a in self))

    def __mul__(self, other: Quaternion | S) -> Quaternion:
        if isinstance(other, Quaternion):
            return hamilton_mul(self, other)
        return Quaternion(*(a * other for a in self))

    def __rmul__(self, other: S) -> Quaternion:
        # scalars commute with the basis
        return Quaternion(*(other * a for a in self))

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> S:
        """``w^2 + x^2 + y^2 + z^2`` (exact for integer quaternions)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def real_part(self) -> Quaternion:
        """Componentwise real part of a complex-scalar quaternion."""
        return Quaternion(*(complex(a).real for a in self))


def hamilton_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a b``."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def seq_quaternion(p: SequenceParams, n: int) -> Quaternion[int]:
    """The exact quaternion ``V_n + V_{n+1} i + V_{n+2} j + V_{n+3} k``."""
    return Quaternion(*terms_range(p, n, n + 3))


def root_quaternion(root: complex) -> Quaternion[complex]:
    """The root quaternion ``1 + z i + z^2 j + z^3 k``."""
    z = complex(root)
    return Quaternion(complex(1), z, z * z, z * z * z)


def quaternion_binet(p: SequenceParams, n: int, roots: CubicRoots | None = None) -> Quaternion[complex]:
    """Closed form of ``Q_{V,n}``; the real parts of the components approximate ``seq_quaternion(p, n)``.

    Raises
    ------
    DeltaNotPositive
        If Delta(r, s, t) <= 0.
    """
    if n < 0:
        raise ValueError(f"Index must be a non-negative integer. Got {n} instead")
    roots = params_roots(p, roots)
    consts = binet_constants(p, roots)
    a, w1, w2 = roots.roots
    return (
        (consts.p_c * root_power(a, n) / ((a - w1) * (a - w2))) * root_quaternion(a)
        - (consts.q_c * root_power(w1, n) / ((a - w1) * (w1 - w2))) * root_quaternion(w1)
        + (consts.r_c * root_power(w2, n) / ((a - w2) * (w1 - w2))) * root_quaternion(w2)
    )


def quaternion_quad_residuals(
    p: SequenceParams, n: int, roots: CubicRoots | None = None, *, relative: bool = False
) -> QuadResiduals:
    """Largest componentwise residual of the quaternion quadratic approximation, for each root z:

        z^2 Q_{V,n+2} + z (s Q_{V,n+1} + t Q_{V,n}) + t Q_{V,n+1} = C z_ z^(n+2)

    with ``C`` the Binet constant (P, Q or R) belonging to ``z``.

    Args:
        relative (bool): Divide each component residual by the magnitude of its largest participating term.
    """
    roots = params_roots(p, roots)
    consts = binet_constants(p, roots)
    q_n, q_n1, q_n2 = (seq_quaternion(p, k) for k in range(n, n + 3))
    s, t = float(p.s), float(p.t)

    residuals = []
    for z, c in zip(roots.roots, consts, strict=True):
        lhs = z * z * q_n2 + z * (s * q_n1 + t * q_n) + t * q_n1
        rhs = c * root_power(z, n + 2) * root_quaternion(z)
        diff = lhs - rhs
        if relative:
            size = abs(z)
            scales = (
                max(1.0, abs(b), size**2 * abs(v2) + size * (abs(s * v1) + abs(t * v0)) + abs(t * v1))
                for b, v0, v1, v2 in zip(rhs, q_n, q_n1, q_n2, strict=True)
            )
            residuals.append(max(abs(d) / scale for d, scale in zip(diff, scales, strict=True)))
        else:
            residuals.append(max(abs(d) for d in diff))
    return QuadResiduals(*residuals)
