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

"""Inner (BD with Delta) and outer (two-layered) formula trees.

Only the five primitive inner constructors exist as node types. Status
probes, the constants and internal entailment are expansions built by the
``make_*`` functions below.
"""

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Tuple, Union

from .errors import DeltaPresent

RESERVED_VARIABLE = "_c"
PROBE_KINDS = ("t", "b", "n", "f")

# Pairs (x, x') with x below x' in the truth order, in disjunct order.
TRUTH_ORDER_PAIRS = (
    ("f", "f"),
    ("f", "b"),
    ("f", "n"),
    ("f", "t"),
    ("b", "b"),
    ("b", "t"),
    ("n", "n"),
    ("n", "t"),
    ("t", "t"),
)

_IDENTIFIER = re.compile(r"[a-z][a-z0-9_]*\Z")

Signature = Tuple[str, ...]


def is_identifier(name: str) -> bool:
    return bool(_IDENTIFIER.match(name)) and name not in ("top", "bot")


def _str_inner(self):
    from .syntax import print_inner

    return print_inner(self)


def _str_outer(self):
    from .syntax import print_outer

    return print_outer(self)


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if self.name != RESERVED_VARIABLE and not is_identifier(self.name):
            raise ValueError(f"invalid variable name ({self.name!r})")

    __str__ = _str_inner


@dataclass(frozen=True)
class Neg:
    sub: "InnerFormula"

    __str__ = _str_inner


@dataclass(frozen=True)
class And:
    left: "InnerFormula"
    right: "InnerFormula"

    __str__ = _str_inner


@dataclass(frozen=True)
class Or:
    left: "InnerFormula"
    right: "InnerFormula"

    __str__ = _str_inner


@dataclass(frozen=True)
class Delta:
    sub: "InnerFormula"

    __str__ = _str_inner


InnerFormula = Union[Var, Neg, And, Or, Delta]


@dataclass(frozen=True)
class ModalAtom:
    inner: InnerFormula

    __str__ = _str_outer


@dataclass(frozen=True)
class GNeg:
    sub: "OuterFormula"

    __str__ = _str_outer


@dataclass(frozen=True)
class GAnd:
    left: "OuterFormula"
    right: "OuterFormula"

    __str__ = _str_outer


@dataclass(frozen=True)
class GOr:
    left: "OuterFormula"
    right: "OuterFormula"

    __str__ = _str_outer


@dataclass(frozen=True)
class GImp:
    left: "OuterFormula"
    right: "OuterFormula"

    __str__ = _str_outer


@dataclass(frozen=True)
class GCoimp:
    left: "OuterFormula"
    right: "OuterFormula"

    __str__ = _str_outer


@dataclass(frozen=True)
class GDelta:
    sub: "OuterFormula"

    __str__ = _str_outer


OuterFormula = Union[ModalAtom, GNeg, GAnd, GOr, GImp, GCoimp, GDelta]


def make_signature(names: Iterable[str]) -> Signature:
    """Validate an ordered list of variable names and return it as a tuple."""
    names = tuple(names)
    for name in names:
        if not is_identifier(name):
            raise ValueError(f"invalid variable name ({name!r})")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in signature {names}")
    return names


def conjoin(formulas: Iterable[InnerFormula]) -> InnerFormula:
    """Left-associated conjunction of a nonempty sequence."""
    return reduce(And, formulas)


def disjoin(formulas: Iterable[InnerFormula]) -> InnerFormula:
    """Left-associated disjunction of a nonempty sequence."""
    return reduce(Or, formulas)


def make_probe(kind: str, phi: InnerFormula) -> InnerFormula:
    """Status probe ``kind(phi)`` for kind in t, b, n, f.

    The probe is T exactly when phi takes the matching value and F otherwise.

    :param kind: One of "t", "b", "n", "f".
    :param phi: The probed formula.
    :return: The defining expansion over Neg, And and Delta.
    """
    if kind == "t":
        return And(Delta(phi), Neg(Delta(Neg(phi))))
    if kind == "b":
        return And(Delta(phi), Delta(Neg(phi)))
    if kind == "n":
        return And(Neg(Delta(phi)), Neg(Delta(Neg(phi))))
    if kind == "f":
        return And(Neg(Delta(phi)), Delta(Neg(phi)))
    raise ValueError(f"Unknown probe kind ({kind}), valid values are {PROBE_KINDS}")


def make_top() -> InnerFormula:
    c = Var(RESERVED_VARIABLE)
    return Or(Delta(c), Neg(Delta(c)))


def make_bot() -> InnerFormula:
    return Neg(make_top())


def make_internal_entailment(phi: InnerFormula, chi: InnerFormula) -> InnerFormula:
    """The formula internalising ``phi`` entails ``chi``.

    It is valid (T under every valuation) iff phi entails chi.
    """
    return disjoin(
        And(make_probe(x, phi), make_probe(y, chi)) for x, y in TRUTH_ORDER_PAIRS
    )


def variables(phi: InnerFormula) -> Signature:
    """Sorted variables of phi, without the reserved constant variable."""
    found = set()
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if node.name != RESERVED_VARIABLE:
                found.add(node.name)
        elif isinstance(node, (Neg, Delta)):
            stack.append(node.sub)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return tuple(sorted(found))


def outer_variables(alpha: OuterFormula) -> Signature:
    found = set()
    for atom in modal_atoms(alpha):
        found.update(variables(atom.inner))
    return tuple(sorted(found))


def modal_atoms(alpha: OuterFormula):
    """Yield the modal atoms of alpha, left to right."""
    if isinstance(alpha, ModalAtom):
        yield alpha
    elif isinstance(alpha, (GNeg, GDelta)):
        yield from modal_atoms(alpha.sub)
    else:
        yield from modal_atoms(alpha.left)
        yield from modal_atoms(alpha.right)


def is_delta_free(phi: InnerFormula) -> bool:
    if isinstance(phi, Var):
        return True
    if isinstance(phi, Delta):
        return False
    if isinstance(phi, Neg):
        return is_delta_free(phi.sub)
    return is_delta_free(phi.left) and is_delta_free(phi.right)


def is_delta_guarded(phi: InnerFormula) -> bool:
    """True when every variable occurrence lies in the scope of a Delta."""
    if isinstance(phi, Var):
        return False
    if isinstance(phi, Delta):
        return True
    if isinstance(phi, Neg):
        return is_delta_guarded(phi.sub)
    return is_delta_guarded(phi.left) and is_delta_guarded(phi.right)


def substitute_t(phi: InnerFormula) -> InnerFormula:
    """Replace every variable p of a Delta-free formula by ``t(p)``.

    :param phi: A formula over negation, conjunction and disjunction only.
    :return: The translated formula, connectives preserved.
    """
    if not is_delta_free(phi):
        raise DeltaPresent(phi)
    return _substitute_t(phi)


def _substitute_t(phi):
    if isinstance(phi, Var):
        return make_probe("t", phi)
    if isinstance(phi, Neg):
        return Neg(_substitute_t(phi.sub))
    return type(phi)(_substitute_t(phi.left), _substitute_t(phi.right))


def make_outer_top(alpha: OuterFormula) -> OuterFormula:
    return GImp(alpha, alpha)


def make_outer_bot(alpha: OuterFormula) -> OuterFormula:
    return GCoimp(alpha, alpha)
