# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Textual notation for sequence parameters, parsed with Lark.

Two forms are understood, both on the command line and in YAML suite files:

    tribonacci | padovan | narayana:<k>          presets
    V(v0,v1,v2;r,s,t)  or  (v0,v1,v2;r,s,t)      explicit parameters

Initial terms are always signed integers. Coefficients are signed integers, and, when the caller allows real
coefficients (analytic path only), rationals such as ``-3/4`` or decimals such as ``1.5e-1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from lark import Lark, Token, Transformer
from lark.exceptions import LarkError, VisitError

from gentrib.seq_core import SequenceParams, preset, real_params

GRAMMAR = r"""
?start: preset
      | params

preset: CNAME (":" SIGNED_INT)?

params: "V"? "(" seed "," seed "," seed ";" coef "," coef "," coef ")"

seed: SIGNED_INT

?coef: integer
     | rational
     | decimal

integer: SIGNED_INT
rational: SIGNED_INT "/" INT
decimal: SIGNED_FLOAT

%import common.CNAME
%import common.INT
%import common.SIGNED_INT
%import common.SIGNED_FLOAT
%import common.WS
%ignore WS
"""


class ParamsTransformer(Transformer):
    """Lark transformer turning a notation parse tree into ``SequenceParams``.

    Unlike the round-trip configuration parsers, nothing needs to be written back into the tree, so a plain
    ``Transformer`` is enough here.
    """

    def preset(self, children: list[Token]) -> SequenceParams:
        name = str(children[0]).lower()
        k = int(children[1]) if len(children) > 1 else None
        return preset(name, k)

    def params(self, children: list) -> SequenceParams:
        return real_params(*children)

    def seed(self, children: list[Token]) -> int:
        return int(children[0])

    def integer(self, children: list[Token]) -> int:
        return int(children[0])

    def rational(self, children: list[Token]) -> Fraction | int:
        value = Fraction(int(children[0]), int(children[1]))
        return value.numerator if value.denominator == 1 else value

    def decimal(self, children: list[Token]) -> float:
        return float(children[0])


@cache
def _parser() -> Lark:
    return Lark(GRAMMAR, maybe_placeholders=False)


def parse_params(text: str, *, allow_real: bool = False) -> SequenceParams:
    """Parse a parameter notation string.

    Args:
        text (str): Preset name or explicit ``V(v0,v1,v2;r,s,t)`` notation.
        allow_real (bool): Accept non-integer coefficients (rational or decimal).

    Returns:
        SequenceParams: The parsed parameters.

    Raises:
        ValueError: If the text cannot be parsed, names an unknown preset, or has non-integer coefficients while
            ``allow_real`` is False.
    """
    try:
        tree = _parser().parse(text.strip())
        params = ParamsTransformer().transform(tree)
    except VisitError as err:
        # errors raised by the preset/params constructors are wrapped by Lark
        raise ValueError(f"Invalid sequence parameters '{text}': {err.orig_exc}") from err.orig_exc
    except LarkError as err:
        raise ValueError(f"Invalid sequence notation '{text}': {err}") from err

    if not allow_real and not params.is_exact:
        raise ValueError(f"Coefficients must be integers for exact evaluation. Got {format_params(params)} instead")
    return params


def format_params(p: SequenceParams) -> str:
    """Render parameters in the canonical ``V(v0,v1,v2;r,s,t)`` notation."""
    coefs = ",".join(repr(c) if isinstance(c, float) else str(c) for c in p.coefficients)
    return f"V({p.v0},{p.v1},{p.v2};{coefs})"
