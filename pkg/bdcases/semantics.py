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

"""Four-valued semantics of BD with Delta and its decision procedures."""

import enum
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

import numpy as np

from .enumeration import (
    DEFAULT_BLOCK_VARS,
    DEFAULT_VAR_CAP,
    Planes,
    block_by_block,
    evaluate_planes,
    index_digits,
)
from .errors import UnboundVariable, UnknownPoint
from .formula import (
    RESERVED_VARIABLE,
    And,
    Delta,
    InnerFormula,
    Neg,
    Signature,
    Var,
    make_bot,
    make_signature,
    variables,
)

logger = logging.getLogger(__name__)


class FourValue(enum.Enum):
    """Belnap-Dunn values as (positive, negative) support bits."""

    T = (True, False)
    B = (True, True)
    N = (False, False)
    F = (False, True)

    @property
    def pos(self) -> bool:
        return self.value[0]

    @property
    def neg(self) -> bool:
        return self.value[1]

    @classmethod
    def from_bits(cls, pos: bool, neg: bool) -> "FourValue":
        return cls((bool(pos), bool(neg)))

    def __le__(self, other: "FourValue") -> bool:
        return leq4(self, other)

    def __invert__(self) -> "FourValue":
        return FourValue.from_bits(self.neg, self.pos)

    def __and__(self, other: "FourValue") -> "FourValue":
        return FourValue.from_bits(self.pos and other.pos, self.neg or other.neg)

    def __or__(self, other: "FourValue") -> "FourValue":
        return FourValue.from_bits(self.pos or other.pos, self.neg and other.neg)

    def __str__(self) -> str:
        return self.name


# Canonical enumeration order of a single variable, a linear extension of
# the truth order. The digit of a value in index_digits is its position here.
ENUMERATION_ORDER = (FourValue.F, FourValue.B, FourValue.N, FourValue.T)


def leq4(a: FourValue, b: FourValue) -> bool:
    """Truth order: a is below b iff a.pos <= b.pos and a.neg >= b.neg."""
    return (not a.pos or b.pos) and (a.neg or not b.neg)


def delta(a: FourValue) -> FourValue:
    return FourValue.T if a.pos else FourValue.F


class Valuation(Mapping[str, FourValue]):
    """A total map from a signature to four values.

    Iteration follows the signature order. The reserved constant variable
    is readable and always N, but is not part of the signature.
    """

    def __init__(self, assignment: Iterable[Tuple[str, FourValue]]):
        pairs = tuple(dict(assignment).items())
        self._signature = make_signature(name for name, _ in pairs)
        for name, value in pairs:
            if not isinstance(value, FourValue):
                raise TypeError(f"value of {name} is not a FourValue: {value!r}")
        self._values = dict(pairs)

    @classmethod
    def from_digits(cls, signature: Signature, digits: Mapping[str, int]) -> "Valuation":
        return cls((name, ENUMERATION_ORDER[digits[name]]) for name in signature)

    @property
    def signature(self) -> Signature:
        return self._signature

    def __getitem__(self, name: str) -> FourValue:
        if name == RESERVED_VARIABLE:
            return FourValue.N
        return self._values[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._signature)

    def __len__(self) -> int:
        return len(self._signature)

    def __hash__(self):
        return hash(tuple(self._values.items()))

    def __repr__(self):
        return f"Valuation({self})"

    def __str__(self):
        return " ".join(f"{name}={value}" for name, value in self._values.items())


def all_valuations(signature: Signature) -> Iterator[Valuation]:
    """Every valuation over signature, in canonical enumeration order."""
    for values in itertools.product(ENUMERATION_ORDER, repeat=len(signature)):
        yield Valuation(zip(signature, values))


def eval4(phi: InnerFormula, v: Valuation) -> FourValue:
    """The four-valued truth table value of phi under v.

    :raises UnboundVariable: If phi has a variable outside v's signature.
    """
    unbound = set(variables(phi)) - set(v.signature)
    if unbound:
        raise UnboundVariable(unbound)
    return _eval4(phi, v)


def _eval4(phi, v):
    if isinstance(phi, Var):
        return v[phi.name]
    if isinstance(phi, Neg):
        return ~_eval4(phi.sub, v)
    if isinstance(phi, Delta):
        return delta(_eval4(phi.sub, v))
    if isinstance(phi, And):
        return _eval4(phi.left, v) & _eval4(phi.right, v)
    return _eval4(phi.left, v) | _eval4(phi.right, v)


class PointModel:
    """Finite points with a bilateral valuation ``v+``/``v-``.

    :param valuations: Point name to Valuation, in point order. All
        valuations share one signature.
    """

    def __init__(self, valuations: Mapping[str, Valuation], signature: Optional[Signature] = None):
        self._points = tuple(valuations)
        if len(set(self._points)) != len(self._points):
            raise ValueError(f"duplicate point names in {self._points}")
        if signature is None:
            signature = next(iter(valuations.values())).signature if valuations else ()
        self._signature = make_signature(signature)
        for point, valuation in valuations.items():
            if tuple(valuation.signature) != self._signature:
                raise ValueError(
                    f"point {point} is valued over {valuation.signature}, "
                    f"expected {self._signature}"
                )
        self._valuations = dict(valuations)
        self._v_plus = {
            name: frozenset(w for w in self._points if self._valuations[w][name].pos)
            for name in self._signature
        }
        self._v_minus = {
            name: frozenset(w for w in self._points if self._valuations[w][name].neg)
            for name in self._signature
        }

    @property
    def points(self) -> Tuple[str, ...]:
        return self._points

    @property
    def signature(self) -> Signature:
        return self._signature

    def valuation(self, point: str) -> Valuation:
        if point not in self._valuations:
            raise UnknownPoint(point)
        return self._valuations[point]

    def v_plus(self, name: str) -> FrozenSet[str]:
        """Points where variable name is positively supported."""
        if name == RESERVED_VARIABLE:
            return frozenset()
        return self._v_plus[name]

    def v_minus(self, name: str) -> FrozenSet[str]:
        if name == RESERVED_VARIABLE:
            return frozenset()
        return self._v_minus[name]

    def __repr__(self):
        return f"PointModel({', '.join(f'{w}: {self._valuations[w]}' for w in self._points)})"


@dataclass(frozen=True)
class Extension:
    """Positive and negative interpretation of a formula in a point model."""

    pos: FrozenSet[str]
    neg: FrozenSet[str]


def sat(phi: InnerFormula, model: PointModel, point: str) -> Tuple[bool, bool]:
    """Positive and negative satisfaction of phi at a point.

    Follows the recursive bilateral clauses over ``v+`` and ``v-``.

    :raises UnknownPoint: If point is not a point of model.
    :raises UnboundVariable: If phi has a variable outside the model's signature.
    """
    if point not in model.points:
        raise UnknownPoint(point)
    unbound = set(variables(phi)) - set(model.signature)
    if unbound:
        raise UnboundVariable(unbound)
    return _sat_pos(phi, model, point), _sat_neg(phi, model, point)


def _sat_pos(phi, model, w) -> bool:
    if isinstance(phi, Var):
        return w in model.v_plus(phi.name)
    if isinstance(phi, Neg):
        return _sat_neg(phi.sub, model, w)
    if isinstance(phi, Delta):
        return _sat_pos(phi.sub, model, w)
    if isinstance(phi, And):
        return _sat_pos(phi.left, model, w) and _sat_pos(phi.right, model, w)
    return _sat_pos(phi.left, model, w) or _sat_pos(phi.right, model, w)


def _sat_neg(phi, model, w) -> bool:
    if isinstance(phi, Var):
        return w in model.v_minus(phi.name)
    if isinstance(phi, Neg):
        return _sat_pos(phi.sub, model, w)
    if isinstance(phi, Delta):
        return not _sat_pos(phi.sub, model, w)
    if isinstance(phi, And):
        return _sat_neg(phi.left, model, w) or _sat_neg(phi.right, model, w)
    return _sat_neg(phi.left, model, w) and _sat_neg(phi.right, model, w)


def extension(phi: InnerFormula, model: PointModel) -> Extension:
    pos, neg = set(), set()
    for w in model.points:
        w_pos, w_neg = sat(phi, model, w)
        if w_pos:
            pos.add(w)
        if w_neg:
            neg.add(w)
    return Extension(frozenset(pos), frozenset(neg))


def _joint_signature(*formulas: InnerFormula) -> Signature:
    names = set()
    for phi in formulas:
        names.update(variables(phi))
    return tuple(sorted(names))


@block_by_block
def _sequent_holds(planes: Dict[str, Planes], size: int, phi, chi) -> np.ndarray:
    phi_pos, phi_neg = evaluate_planes(phi, planes, size)
    chi_pos, chi_neg = evaluate_planes(chi, planes, size)
    return (~phi_pos | chi_pos) & (~chi_neg | phi_neg)


@block_by_block
def _support_holds(planes: Dict[str, Planes], size: int, phi, chi) -> np.ndarray:
    phi_pos, _ = evaluate_planes(phi, planes, size)
    chi_pos, _ = evaluate_planes(chi, planes, size)
    return ~phi_pos | chi_pos


@block_by_block
def _is_false(planes: Dict[str, Planes], size: int, phi) -> np.ndarray:
    pos, neg = evaluate_planes(phi, planes, size)
    return ~pos & neg


def counter_valuation(
    phi: InnerFormula,
    chi: InnerFormula,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    block_vars: int = DEFAULT_BLOCK_VARS,
) -> Optional[Valuation]:
    """The first valuation where phi is not below chi in the truth order.

    Valuations range over the sorted joint variables of phi and chi in
    canonical enumeration order.

    :return: The counter-valuation, or None when phi entails chi.
    :raises CapacityExceeded: If there are more than var_cap variables.
    """
    signature = _joint_signature(phi, chi)
    index = _sequent_holds(signature, phi, chi, var_cap=var_cap, block_vars=block_vars)
    if index is None:
        return None
    return Valuation.from_digits(signature, index_digits(signature, index))


def entails(
    phi: InnerFormula,
    chi: InnerFormula,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    block_vars: int = DEFAULT_BLOCK_VARS,
) -> bool:
    """Bilateral entailment: phi is below chi in the truth order under every valuation.

    :raises CapacityExceeded: If phi and chi have more than var_cap variables together.
    """
    return counter_valuation(phi, chi, var_cap=var_cap, block_vars=block_vars) is None


def supports(
    phi: InnerFormula,
    chi: InnerFormula,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    block_vars: int = DEFAULT_BLOCK_VARS,
) -> bool:
    """Positive entailment: wherever phi is T or B, so is chi."""
    signature = _joint_signature(phi, chi)
    return (
        _support_holds(signature, phi, chi, var_cap=var_cap, block_vars=block_vars)
        is None
    )


def nontrivial(
    phi: InnerFormula,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    block_vars: int = DEFAULT_BLOCK_VARS,
) -> bool:
    """True iff phi takes a value other than F under some valuation."""
    return (
        _is_false(variables(phi), phi, var_cap=var_cap, block_vars=block_vars)
        is not None
    )


def jointly_exclusive(
    phi: InnerFormula,
    psi: InnerFormula,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    block_vars: int = DEFAULT_BLOCK_VARS,
) -> bool:
    return entails(And(phi, psi), make_bot(), var_cap=var_cap, block_vars=block_vars)


RELATIONS: Dict[str, Callable[..., bool]] = {
    "support": supports,
    "sequent": entails,
}


def get_relation(relation: str) -> Callable[..., bool]:
    """The case-to-formula relation named relation."""
    try:
        return RELATIONS[relation]
    except KeyError:
        raise ValueError(
            f"Unknown relation ({relation}), valid values are {tuple(RELATIONS)}"
        ) from None
