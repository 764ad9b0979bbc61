# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Exact definition and evaluation of generalized Tribonacci sequences.

A generalized Tribonacci sequence ``{V_n(V0, V1, V2; r, s, t)}`` is fixed by three initial terms and three recurrence
coefficients:

    V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}    (n >= 3)

Well-known members of the family are provided as presets: Tribonacci ``(0,0,1;1,1,1)``, Padovan ``(0,1,0;0,1,1)`` and
the k-Narayana sequences ``(0,0,1;k,0,1)``. The sequence with seeds ``(0,0,1)`` and the same coefficients as ``p`` is
called the fundamental sequence ``U`` of ``p``; every ``V_n`` is a fixed linear combination of three consecutive ``U``
terms.

All values in this module are Python integers, so arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Real
from typing import NamedTuple


class SequenceParams(NamedTuple):
    """The six parameters defining a generalized Tribonacci sequence.

    The exact paths (iteration, matrices, Cassini identities) require all six fields to be integers. The analytic
    path also accepts real ``r``, ``s`` and ``t`` (see ``real_params``).

    Returns
    -------
    object
        - v0, v1, v2 (int): Initial terms V0, V1, V2.
        - r, s, t (int, or Fraction/float on the analytic path): Recurrence coefficients.
    """

    v0: int
    v1: int
    v2: int
    r: Real
    s: Real
    t: Real

    @property
    def seeds(self) -> tuple[int, int, int]:
        return self.v0, self.v1, self.v2

    @property
    def coefficients(self) -> tuple[Real, Real, Real]:
        return self.r, self.s, self.t

    @property
    def is_exact(self) -> bool:
        """True when all six parameters are integers."""
        return all(_is_int(value) for value in self)


def _is_int(value: object) -> bool:
    # bool is an int subclass but never a meaningful parameter
    return isinstance(value, int) and not isinstance(value, bool)


def make_params(v0: int, v1: int, v2: int, r: int, s: int, t: int) -> SequenceParams:
    """Bundle the six integer parameters of a sequence.

    Raises
    ------
    TypeError
        If any parameter is not an integer.
    """
    for name, value in zip(SequenceParams._fields, (v0, v1, v2, r, s, t), strict=True):
        if not _is_int(value):
            raise TypeError(f"Sequence parameter '{name}' must be an integer. Got {type(value)} instead")
    return SequenceParams(v0, v1, v2, r, s, t)


def real_params(v0: int, v1: int, v2: int, r: Real, s: Real, t: Real) -> SequenceParams:
    """Bundle sequence parameters with real recurrence coefficients (analytic path only).

    Initial terms must still be integers. Coefficients may be int, Fraction or float.

    Raises
    ------
    TypeError
        If an initial term is not an integer or a coefficient is not a real number.
    """
    for name, value in zip(("v0", "v1", "v2"), (v0, v1, v2), strict=True):
        if not _is_int(value):
            raise TypeError(f"Initial term '{name}' must be an integer. Got {type(value)} instead")
    for name, value in zip(("r", "s", "t"), (r, s, t), strict=True):
        if isinstance(value, bool) or not isinstance(value, Real):
            raise TypeError(f"Coefficient '{name}' must be a real number. Got {type(value)} instead")
    return SequenceParams(v0, v1, v2, r, s, t)


def require_exact(p: SequenceParams) -> None:
    """Raise ``TypeError`` unless all parameters of ``p`` are integers."""
    if not p.is_exact:
        raise TypeError(f"Exact evaluation requires integer parameters. Got {p} instead")


def _require_index(n: int, name: str = "n", minimum: int = 0) -> None:
    if not _is_int(n):
        raise TypeError(f"Index '{name}' must be an integer. Got {type(n)} instead")
    if n < minimum:
        raise ValueError(f"Index '{name}' must be >= {minimum}. Got {n} instead")


PRESET_NAMES = ("tribonacci", "padovan", "narayana")


def preset(name: str, k: int | None = None) -> SequenceParams:
    """Return the parameters of a named member of the family.

    Parameters
    ----------
    name : str, required
        One of "tribonacci", "padovan" or "narayana".

    k : int, optional
        The k of the k-Narayana sequence. Required for "narayana", rejected otherwise.

    Returns
    -------
    SequenceParams
        tribonacci -> (0,0,1;1,1,1), padovan -> (0,1,0;0,1,1), narayana(k) -> (0,0,1;k,0,1)

    Raises
    ------
    ValueError
        If the name is unknown or ``k`` is missing/unexpected.
    """
    if name not in PRESET_NAMES:
        raise ValueError(f"Preset = {name} not allowed. Allowed values are {list(PRESET_NAMES)}")

    if name == "narayana":
        if k is None:
            raise ValueError("The narayana preset requires the parameter k")
        return make_params(0, 0, 1, k, 0, 1)

    if k is not None:
        raise ValueError(f"Preset '{name}' takes no parameter. Got k={k} instead")
    if name == "tribonacci":
        return make_params(0, 0, 1, 1, 1, 1)
    return make_params(0, 1, 0, 0, 1, 1)


def fundamental(p: SequenceParams) -> SequenceParams:
    """The fundamental sequence U of ``p``: seeds (0, 0, 1) with the coefficients of ``p``."""
    return SequenceParams(0, 0, 1, p.r, p.s, p.t)


def term_iterative(p: SequenceParams, n: int) -> int:
    """Compute V_n by forward iteration of the recurrence, using O(n) multiplications."""
    require_exact(p)
    _require_index(n)

    a, b, c = p.v0, p.v1, p.v2
    if n < 3:
        return (a, b, c)[n]
    for _ in range(n - 2):
        a, b, c = b, c, p.r * c + p.s * b + p.t * a
    return c


def term_iterative_mod(p: SequenceParams, n: int, modulus: int) -> int:
    """Compute V_n mod ``modulus`` by forward iteration, keeping every intermediate reduced.

    Raises
    ------
    ValueError
        If the modulus is smaller than 2.
    """
    require_exact(p)
    _require_index(n)
    if not _is_int(modulus) or modulus < 2:
        raise ValueError(f"Modulus must be an integer >= 2. Got {modulus} instead")

    r, s, t = p.r % modulus, p.s % modulus, p.t % modulus
    a, b, c = p.v0 % modulus, p.v1 % modulus, p.v2 % modulus
    if n < 3:
        return (a, b, c)[n]
    for _ in range(n - 2):
        a, b, c = b, c, (r * c + s * b + t * a) % modulus
    return c


def terms_range(p: SequenceParams, n_lo: int, n_hi: int) -> list[int]:
    """Return ``[V_{n_lo}, ..., V_{n_hi}]`` in a single pass.

    Raises
    ------
    ValueError
        If ``n_lo > n_hi`` or either bound is negative.
    """
    require_exact(p)
    _require_index(n_lo, "n_lo")
    _require_index(n_hi, "n_hi")
    if n_lo > n_hi:
        raise ValueError(f"Invalid index range: n_lo must be <= n_hi. Got ({n_lo}, {n_hi}) instead")

    terms = []
    a, b, c = p.v0, p.v1, p.v2
    for n in range(n_hi + 1):
        if n >= n_lo:
            terms.append(a)
        a, b, c = b, c, p.r * c + p.s * b + p.t * a
    return terms


def cassini_seed(p: SequenceParams) -> int:
    """The seed constant g(0) of the Cassini-type identity for ``p``.

        g(0) = V2^3 + V1^2 V4 + V0 V3^2 - V2 (2 V1 V3 + V0 V4)
    """
    v0, v1, v2, v3, v4 = terms_range(p, 0, 4)
    return v2**3 + v1**2 * v4 + v0 * v3**2 - v2 * (2 * v1 * v3 + v0 * v4)


def as_fraction(value: Real) -> Fraction | float:
    """Convert an exact coefficient (int or Fraction) to a Fraction, leaving floats untouched."""
    if isinstance(value, float):
        return value
    return Fraction(value)
