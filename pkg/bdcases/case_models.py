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

"""Case models: exclusive, nontrivial cases ranked by a total preorder.

Models are read from and written to a line-oriented text format::

    vars l s b
    case c1 := t(l) & n(s) & f(b)
    case c2 := n(l) & b(s) & t(b)
    case c3 := t(l) & t(s) & b(b)
    prefs c1 < c2 < c3

A ``classical`` line before ``vars`` marks a classical model.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple, Union

from .classical import (
    DEFAULT_CLASSICAL_VAR_CAP,
    incompatible_classical,
    satisfiable_classical,
)
from .enumeration import DEFAULT_VAR_CAP
from .errors import DeltaPresent, ModelFormatError, ParseError, UnboundVariable
from .formula import (
    And,
    Delta,
    InnerFormula,
    Neg,
    Or,
    Signature,
    Var,
    is_delta_free,
    is_identifier,
    make_probe,
    make_signature,
    substitute_t,
    variables,
)
from .semantics import get_relation, jointly_exclusive, nontrivial
from .syntax import parse_inner, print_inner

logger = logging.getLogger(__name__)

PathType = Union[str, Path]


@dataclass(frozen=True)
class Case:
    name: str
    formula: InnerFormula


@dataclass(frozen=True)
class CaseModel:
    """Named cases over a signature with integer preference ranks.

    A larger rank is more preferred; equal ranks are tied.

    :param signature: Ordered variable names.
    :param cases: The cases, in declaration order.
    :param rank: Case name to natural number, total on the case names.
    """

    signature: Signature
    cases: Tuple[Case, ...]
    rank: Mapping[str, int] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "signature", make_signature(self.signature))
        object.__setattr__(self, "cases", tuple(self.cases))
        object.__setattr__(self, "rank", dict(self.rank))
        names = self.names
        for name in names:
            if not is_identifier(name):
                raise ValueError(f"invalid case name ({name!r})")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate case names in {names}")
        if set(self.rank) != set(names):
            raise ValueError(
                f"rank must be defined on exactly the cases {names}, got {tuple(self.rank)}"
            )
        for name, r in self.rank.items():
            if not isinstance(r, int) or r < 0:
                raise ValueError(f"rank of {name} must be a natural number, got {r!r}")
        for case in self.cases:
            unbound = set(variables(case.formula)) - set(self.signature)
            if unbound:
                raise UnboundVariable(unbound)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(case.name for case in self.cases)

    @property
    def is_classical(self) -> bool:
        return False

    def formula(self, name: str) -> InnerFormula:
        for case in self.cases:
            if case.name == name:
                return case.formula
        raise KeyError(name)

    def __iter__(self) -> Iterator[Case]:
        return iter(self.cases)

    def __len__(self) -> int:
        return len(self.cases)


@dataclass(frozen=True)
class ClassicalCaseModel(CaseModel):
    """A case model whose formulas are Delta-free and read classically."""

    def __post_init__(self):
        super().__post_init__()
        for case in self.cases:
            if not is_delta_free(case.formula):
                raise DeltaPresent(case.formula)

    @property
    def is_classical(self) -> bool:
        return True


@dataclass(frozen=True)
class Violation:
    kind: str
    cases: Tuple[str, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _rank_gaps(model: CaseModel) -> List[Violation]:
    # Ranks in use must form a contiguous run of integers.
    levels = sorted(set(model.rank.values()))
    violations = []
    for lower, upper in zip(levels, levels[1:]):
        if upper - lower > 1:
            involved = tuple(n for n in model.names if model.rank[n] in (lower, upper))
            violations.append(Violation("RankGap", involved))
    return violations


def validate(model: CaseModel, *, var_cap: int = DEFAULT_VAR_CAP) -> ValidationReport:
    """Check that every case is nontrivial and every pair is jointly exclusive.

    :raises CapacityExceeded: Propagated from the enumeration.
    """
    violations = []
    for case in model.cases:
        if not nontrivial(case.formula, var_cap=var_cap):
            violations.append(Violation("Trivial", (case.name,)))
    for first, second in itertools.combinations(model.cases, 2):
        if not jointly_exclusive(first.formula, second.formula, var_cap=var_cap):
            violations.append(Violation("NotExclusive", (first.name, second.name)))
    violations.extend(_rank_gaps(model))
    report = ValidationReport(tuple(violations))
    logger.debug("validated %d cases: %s", len(model), report)
    return report


def validate_classical(
    model: ClassicalCaseModel, *, var_cap: int = DEFAULT_CLASSICAL_VAR_CAP
) -> ValidationReport:
    """Check classical satisfiability and pairwise classical incompatibility."""
    violations = []
    for case in model.cases:
        if not satisfiable_classical(case.formula, var_cap=var_cap):
            violations.append(Violation("Unsatisfiable", (case.name,)))
    for first, second in itertools.combinations(model.cases, 2):
        if not incompatible_classical(first.formula, second.formula, var_cap=var_cap):
            violations.append(Violation("NotIncompatible", (first.name, second.name)))
    violations.extend(_rank_gaps(model))
    return ValidationReport(tuple(violations))


def most_preferred(model: CaseModel, names: Iterable[str]) -> FrozenSet[str]:
    """The highest ranked of the named cases; empty for no names."""
    names = tuple(names)
    best = max((model.rank[name] for name in names), default=None)
    return frozenset(name for name in names if model.rank[name] == best)


def most_preferred_supporting(
    model: CaseModel,
    phi: InnerFormula,
    *,
    relation: str = "support",
    var_cap: int = DEFAULT_VAR_CAP,
) -> FrozenSet[str]:
    """The highest ranked cases that entail phi; empty if no case does."""
    holds = get_relation(relation)
    return most_preferred(
        model, (c.name for c in model.cases if holds(c.formula, phi, var_cap=var_cap))
    )


def _is_t_variable_probe(phi: InnerFormula) -> bool:
    return (
        isinstance(phi, And)
        and isinstance(phi.left, Delta)
        and isinstance(phi.left.sub, Var)
        and phi == make_probe("t", phi.left.sub)
    )


def _built_from_t_probes(phi: InnerFormula) -> bool:
    if _is_t_variable_probe(phi):
        return True
    if isinstance(phi, Neg):
        return _built_from_t_probes(phi.sub)
    if isinstance(phi, (And, Or)):
        return _built_from_t_probes(phi.left) and _built_from_t_probes(phi.right)
    return False


def is_quasi_classical(model: CaseModel) -> bool:
    """Every case is built from probes ``t(p)`` with negation, conjunction and disjunction."""
    return all(_built_from_t_probes(case.formula) for case in model.cases)


def counterpart(model: ClassicalCaseModel) -> CaseModel:
    """Translate a classical model case by case with ``p`` replaced by ``t(p)``.

    Names and ranks are preserved.
    """
    cases = tuple(Case(c.name, substitute_t(c.formula)) for c in model.cases)
    return CaseModel(model.signature, cases, model.rank)


_LINE = re.compile(r"(?P<keyword>classical|vars|case|prefs)\b\s*(?P<rest>.*)\Z")
_CASE = re.compile(r"(?P<name>[^\s:]+)\s*:=\s*(?P<formula>.*)\Z")
_PREFS_TOKEN = re.compile(r"\s*([<=])\s*")


def _parse_prefs(rest: str, line: int) -> List[List[str]]:
    """Split a preference chain into levels, least preferred first."""
    tokens = _PREFS_TOKEN.split(rest.strip())
    names, operators = tokens[0::2], tokens[1::2]
    if any(not name for name in names):
        raise ModelFormatError(line, f"malformed preference chain ({rest.strip()})")
    levels = [[names[0]]]
    for operator, name in zip(operators, names[1:]):
        if operator == "<":
            levels.append([name])
        else:
            levels[-1].append(name)
    return levels


def read_model(text: str) -> CaseModel:
    """Parse a case-model file.

    :return: A CaseModel, or a ClassicalCaseModel when the text starts with
        a ``classical`` line.
    :raises ModelFormatError: On structural problems, with the line number.
    """
    classical = False
    signature = None
    cases: List[Case] = []
    levels = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        match = _LINE.match(content)
        if match is None:
            raise ModelFormatError(number, f"unrecognized line ({content})")
        keyword, rest = match.group("keyword"), match.group("rest").strip()
        if keyword == "classical":
            if signature is not None or classical or rest:
                raise ModelFormatError(number, "'classical' must be the first line")
            classical = True
        elif keyword == "vars":
            if signature is not None:
                raise ModelFormatError(number, "duplicate 'vars' line")
            try:
                signature = make_signature(rest.split())
            except ValueError as err:
                raise ModelFormatError(number, str(err)) from None
        elif keyword == "case":
            if signature is None:
                raise ModelFormatError(number, "'case' before 'vars'")
            cases.append(_read_case(rest, number, signature, classical, cases))
        else:
            if levels is not None:
                raise ModelFormatError(number, "duplicate 'prefs' line")
            levels = (number, _parse_prefs(rest, number))

    if signature is None:
        raise ModelFormatError(0, "missing 'vars' line")
    rank = _rank_from_levels(levels, [c.name for c in cases])
    model_type = ClassicalCaseModel if classical else CaseModel
    return model_type(signature, tuple(cases), rank)


def _read_case(rest, number, signature, classical, cases) -> Case:
    match = _CASE.match(rest)
    if match is None:
        raise ModelFormatError(number, f"expected 'case <name> := <formula>' ({rest})")
    name = match.group("name")
    if not is_identifier(name):
        raise ModelFormatError(number, f"invalid case name ({name})")
    if any(c.name == name for c in cases):
        raise ModelFormatError(number, f"duplicate case ({name})")
    try:
        formula = parse_inner(match.group("formula"))
    except ParseError as err:
        raise ModelFormatError(number, str(err)) from None
    unbound = set(variables(formula)) - set(signature)
    if unbound:
        raise ModelFormatError(
            number, f"variables not declared in 'vars': {', '.join(sorted(unbound))}"
        )
    if classical and not is_delta_free(formula):
        raise ModelFormatError(
            number, "Delta, probes and constants are not allowed in a classical model"
        )
    return Case(name, formula)


def _rank_from_levels(levels, names: List[str]) -> Dict[str, int]:
    if levels is None:
        if names:
            raise ModelFormatError(0, "missing 'prefs' line")
        return {}
    number, chain = levels
    ranked = [name for level in chain for name in level]
    for name in ranked:
        if name not in names:
            raise ModelFormatError(number, f"unknown case in 'prefs' ({name})")
    if len(set(ranked)) != len(ranked):
        raise ModelFormatError(number, "a case appears more than once in 'prefs'")
    missing = [name for name in names if name not in ranked]
    if missing:
        raise ModelFormatError(number, f"cases missing from 'prefs': {', '.join(missing)}")
    return {name: r for r, level in enumerate(chain) for name in level}


def load_model(path: PathType) -> CaseModel:
    return read_model(Path(path).read_text(encoding="utf-8"))


def dump_model(model: CaseModel) -> str:
    """Render model in the file format; ``read_model`` of the output is equal to model."""
    lines = []
    if model.is_classical:
        lines.append("classical")
    lines.append(" ".join(["vars", *model.signature]).rstrip())
    for case in model.cases:
        lines.append(f"case {case.name} := {print_inner(case.formula)}")
    if model.cases:
        ordered = sorted(model.names, key=lambda n: model.rank[n])
        chain = ordered[0]
        for previous, name in zip(ordered, ordered[1:]):
            operator = "=" if model.rank[previous] == model.rank[name] else "<"
            chain += f" {operator} {name}"
        lines.append(f"prefs {chain}")
    return "\n".join(lines) + "\n"
