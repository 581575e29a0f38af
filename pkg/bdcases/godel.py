# ========================================================================
#
#  Copyright the BDCaseModels contributors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0.txt
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#
# ========================================================================

"""The bi-Goedel algebra on exact rationals in [0, 1]."""

from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

GValue = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_gvalue(a: Union[Rational, int, str]) -> GValue:
    """Convert to an exact rational, rejecting values outside [0, 1] and floats."""
    if isinstance(a, float):
        raise TypeError(f"inexact value {a!r}; use a Fraction or a string like '1/3'")
    value = Fraction(a)
    if not ZERO <= value <= ONE:
        raise ValueError(f"value {value} is outside [0, 1]")
    return value


def g_and(a: GValue, b: GValue) -> GValue:
    return min(a, b)


def g_or(a: GValue, b: GValue) -> GValue:
    return max(a, b)


def g_imp(a: GValue, b: GValue) -> GValue:
    return ONE if a <= b else b


def g_coimp(a: GValue, b: GValue) -> GValue:
    return ZERO if a <= b else a


def g_neg(a: GValue) -> GValue:
    return ONE if a == ZERO else ZERO


def g_delta(a: GValue) -> GValue:
    return ONE if a == ONE else ZERO


_BINARY = {"and": g_and, "or": g_or, "imp": g_imp, "coimp": g_coimp}
_UNARY = {"neg": g_neg, "delta": g_delta}
OPERATIONS = tuple(_BINARY) + tuple(_UNARY)


def godel(op: str, a, b: Optional[object] = None) -> GValue:
    """Apply a bi-Goedel operation by name.

    :param op: One of "and", "or", "imp", "coimp", "neg", "delta".
    :param a: First argument, an exact rational in [0, 1].
    :param b: Second argument for binary operations, omitted for unary ones.
    """
    if op in _UNARY:
        if b is not None:
            raise ValueError(f"operation {op} takes one argument")
        return _UNARY[op](as_gvalue(a))
    if op in _BINARY:
        if b is None:
            raise ValueError(f"operation {op} takes two arguments")
        return _BINARY[op](as_gvalue(a), as_gvalue(b))
    raise ValueError(f"Unknown operation ({op}), valid values are {OPERATIONS}")
