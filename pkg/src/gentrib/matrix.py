# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Companion-matrix machinery for generalized Tribonacci sequences.

The companion matrix of ``{V_n(V0, V1, V2; r, s, t)}`` is

    M = [[r, s, t],
         [1, 0, 0],
         [0, 1, 0]]

and ``M^n (V2, V1, V0)^T = (V_{n+2}, V_{n+1}, V_n)^T``. Powers are computed with binary exponentiation, either exactly
or modulo a user-supplied modulus. The module also builds the closed matrix forms of ``M^n`` in terms of sequence
terms and the scalar left-hand sides of the Cassini-type identities obtained by taking determinants of those forms.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from gentrib.seq_core import SequenceParams, make_params, require_exact, terms_range

logger = logging.getLogger(__name__)

Rows = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def _check_shape(rows: tuple) -> None:
    if len(rows) != 3 or any(len(row) != 3 for row in rows):
        raise ValueError(f"A Mat3 must have exactly 3x3 entries. Got {rows} instead")


@dataclass(frozen=True)
class Mat3:
    """Immutable 3x3 matrix over the (exact) integers.

    Args:
        rows: The three rows, each a tuple of three integers.
    """

    rows: Rows

    def __post_init__(self) -> None:
        _check_shape(self.rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> Mat3:
        """Build a matrix from any nested iterable of entries."""
        return cls(tuple(tuple(row) for row in rows))  # type: ignore[arg-type]

    @classmethod
    def identity(cls) -> Mat3:
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def zero(cls) -> Mat3:
        return cls(((0, 0, 0), (0, 0, 0), (0, 0, 0)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: Mat3) -> Mat3:
        return mat_mul(self, other)

    def __add__(self, other: Mat3) -> Mat3:
        pairs = zip(self.rows, other.rows, strict=True)
        return Mat3.of((a + b for a, b in zip(ra, rb, strict=True)) for ra, rb in pairs)

    def scale(self, factor: int) -> Mat3:
        return Mat3.of((factor * a for a in row) for row in self.rows)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class Mat3Mod:
    """Immutable 3x3 matrix over the integers modulo ``modulus``.

    Args:
        rows: The three rows of residues, each in ``[0, modulus)``.
        modulus: The modulus, at least 2. No primality is required.
    """

    rows: Rows
    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"Modulus must be an integer >= 2. Got {self.modulus} instead")
        _check_shape(self.rows)
        if any(not 0 <= a < self.modulus for row in self.rows for a in row):
            raise ValueError(f"Residues must lie in [0, {self.modulus}). Got {self.rows} instead")

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: Mat3Mod) -> Mat3Mod:
        if other.modulus != self.modulus:
            raise ValueError(f"Moduli must match. Got {self.modulus} and {other.modulus} instead")
        m = self.modulus
        return Mat3Mod(_mul_rows(self.rows, other.rows, m), m)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _mul_rows(a: Rows, b: Rows, modulus: int | None = None) -> Rows:
    rows = tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3)) for i in range(3)
    )
    if modulus is not None:
        rows = tuple(tuple(x % modulus for x in row) for row in rows)
    return rows  # type: ignore[return-value]


def reduce_mod(m: Mat3, modulus: int) -> Mat3Mod:
    """Reduce every entry of ``m`` into ``[0, modulus)``."""
    if not isinstance(modulus, int) or modulus < 2:
        raise ValueError(f"Modulus must be an integer >= 2. Got {modulus} instead")
    return Mat3Mod(tuple(tuple(a % modulus for a in row) for row in m.rows), modulus)  # type: ignore[arg-type]


def companion(p: SequenceParams) -> Mat3:
    """Companion matrix [[r, s, t], [1, 0, 0], [0, 1, 0]] of the recurrence of ``p``."""
    require_exact(p)
    return Mat3(((p.r, p.s, p.t), (1, 0, 0), (0, 1, 0)))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    """Exact matrix product ``a b``."""
    return Mat3(_mul_rows(a.rows, b.rows))


def _check_exponent(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"Exponent must be an integer. Got {type(n)} instead")
    if n < 0:
        raise ValueError(f"Exponent must be a non-negative integer. Got {n} instead")


def mat_pow(m: Mat3, n: int) -> Mat3:
    """Compute ``m^n`` by left-to-right square-and-multiply, using O(log n) products. ``m^0`` is the identity."""
    _check_exponent(n)
    result = Mat3.identity()
    for bit in bin(n)[2:]:
        result = result @ result
        if bit == "1":
            result = result @ m
    return result


def mat_pow_mod(m: Mat3, n: int, modulus: int) -> Mat3Mod:
    """Compute ``m^n`` modulo ``modulus`` by left-to-right square-and-multiply.

    Entries stay below ``modulus`` throughout, so the cost is O(log n) products of bounded size.

    Raises
    ------
    ValueError
        If the modulus is smaller than 2 or the exponent is negative.
    """
    _check_exponent(n)
    base = reduce_mod(m, modulus)
    result = reduce_mod(Mat3.identity(), modulus)
    logger.debug(f"Modular matrix power with {n=} ({n.bit_length()} bits), {modulus=}")
    for bit in bin(n)[2:]:
        result = result @ result
        if bit == "1":
            result = result @ base
    return result


def u_form(r: int, s: int, t: int, n: int) -> Mat3:
    """Closed form of ``M^n`` in terms of the fundamental sequence U (valid for n >= 2):

        [[U_{n+2}, s U_{n+1} + t U_n,     t U_{n+1}],
         [U_{n+1}, s U_n + t U_{n-1},     t U_n    ],
         [U_n,     s U_{n-1} + t U_{n-2}, t U_{n-1}]]

    Raises
    ------
    ValueError
        If ``n < 2``, since the form needs ``U_{n-2}``.
    """
    if n < 2:
        raise ValueError(f"The U-form of M^n needs n >= 2. Got {n} instead")
    u = make_params(0, 0, 1, r, s, t)
    u_nm2, u_nm1, u_n, u_np1, u_np2 = terms_range(u, n - 2, n + 2)
    return Mat3(
        (
            (u_np2, s * u_np1 + t * u_n, t * u_np1),
            (u_np1, s * u_n + t * u_nm1, t * u_n),
            (u_n, s * u_nm1 + t * u_nm2, t * u_nm1),
        )
    )


def v_shift_matrix(p: SequenceParams, n: int) -> Mat3:
    """Sum-form window matrix of ``p`` at index n:

        [[V_{n+4}, V_{n+3} + V_{n+2}, V_{n+3}],
         [V_{n+3}, V_{n+2} + V_{n+1}, V_{n+2}],
         [V_{n+2}, V_{n+1} + V_n,     V_{n+1}]]
    """
    v_n, v_n1, v_n2, v_n3, v_n4 = terms_range(p, n, n + 4)
    return Mat3(
        (
            (v_n4, v_n3 + v_n2, v_n3),
            (v_n3, v_n2 + v_n1, v_n2),
            (v_n2, v_n1 + v_n, v_n1),
        )
    )


def st_form_matrix(p: SequenceParams, n: int) -> Mat3:
    """(s, t)-form window matrix of ``p`` at index n:

        [[V_{n+4}, s V_{n+3} + t V_{n+2}, t V_{n+3}],
         [V_{n+3}, s V_{n+2} + t V_{n+1}, t V_{n+2}],
         [V_{n+2}, s V_{n+1} + t V_n,     t V_{n+1}]]

    It equals ``v_shift_matrix(p, n) @ factor_matrix(p)``.
    """
    s, t = p.s, p.t
    v_n, v_n1, v_n2, v_n3, v_n4 = terms_range(p, n, n + 4)
    return Mat3(
        (
            (v_n4, s * v_n3 + t * v_n2, t * v_n3),
            (v_n3, s * v_n2 + t * v_n1, t * v_n2),
            (v_n2, s * v_n1 + t * v_n, t * v_n1),
        )
    )


def factor_matrix(p: SequenceParams) -> Mat3:
    """The matrix F = [[1, 0, 0], [0, t, 0], [0, s - t, t]] converting the sum form into the (s, t)-form.

    F is invertible (over the rationals) exactly when t != 0.
    """
    require_exact(p)
    return Mat3(((1, 0, 0), (0, p.t, 0), (0, p.s - p.t, p.t)))


def matrix_quadratic(p: SequenceParams, n: int) -> Mat3:
    """Matrix substitution of the quadratic approximation: ``V_{n+2} M^2 + (s V_{n+1} + t V_n) M + t V_{n+1} I``."""
    m = companion(p)
    v_n, v_n1, v_n2 = terms_range(p, n, n + 2)
    return (m @ m).scale(v_n2) + m.scale(p.s * v_n1 + p.t * v_n) + Mat3.identity().scale(p.t * v_n1)


def det3(m: Mat3) -> int:
    """Exact determinant by cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def term_by_matrix(p: SequenceParams, n: int) -> int:
    """Compute V_n as the third component of ``M^n (V2, V1, V0)^T``, using O(log n) products."""
    power = mat_pow(companion(p), n)
    return sum(a * v for a, v in zip(power.rows[2], (p.v2, p.v1, p.v0), strict=True))


def term_by_matrix_mod(p: SequenceParams, n: int, modulus: int) -> int:
    """Compute V_n mod ``modulus`` as the third component of ``M^n (V2, V1, V0)^T`` over the residues."""
    power = mat_pow_mod(companion(p), n, modulus)
    return sum(a * v for a, v in zip(power.rows[2], (p.v2, p.v1, p.v0), strict=True)) % modulus


def cassini_v_lhs(p: SequenceParams, n: int) -> int:
    """Left-hand side of the Cassini-type identity for V at index n:

        V_{n+2}^3 + V_{n+1}^2 V_{n+4} + V_n V_{n+3}^2 - V_{n+2} (2 V_{n+1} V_{n+3} + V_n V_{n+4})

    which equals ``t^n g(0)``.
    """
    v_n, v_n1, v_n2, v_n3, v_n4 = terms_range(p, n, n + 4)
    return v_n2**3 + v_n1**2 * v_n4 + v_n * v_n3**2 - v_n2 * (2 * v_n1 * v_n3 + v_n * v_n4)


def cassini_u_lhs(r: int, s: int, t: int, n: int) -> int:
    """Left-hand side of the Cassini-type identity for the fundamental sequence U (n >= 2):

        U_n^3 + U_{n-1}^2 U_{n+2} + U_{n-2} U_{n+1}^2 - 2 U_{n-1} U_n U_{n+1} - U_{n-2} U_n U_{n+2}

    which equals ``t^(n-2)``.
    """
    if n < 2:
        raise ValueError(f"The Cassini-type identity for U is stated for n >= 2. Got {n} instead")
    return cassini_v_lhs(make_params(0, 0, 1, r, s, t), n - 2)
