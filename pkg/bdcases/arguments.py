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

"""Classification of arguments over case models.

An argument with premise phi and conclusion chi is coherent when some case
supports the target formula, presumptively valid when a most preferred
premise-supporting case does, and conclusive when it is coherent and every
premise-supporting case does. The target is ``phi & @chi`` for the positive
polarity, ``phi & !@!chi`` for the negative one and ``phi & t(chi)`` for the
strong one.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Tuple

from .case_models import CaseModel, ClassicalCaseModel, most_preferred
from .classical import DEFAULT_CLASSICAL_VAR_CAP, entails_classical
from .enumeration import DEFAULT_VAR_CAP
from .formula import And, Delta, InnerFormula, Neg, make_probe
from .semantics import entails, get_relation

logger = logging.getLogger(__name__)

STATUS_KINDS = ("coherent", "presumptively_valid", "conclusive")

Witnesses = FrozenSet[str]


class Polarity(enum.Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"
    STRONG = "strong"

    def wrap(self, chi: InnerFormula) -> InnerFormula:
        """The conclusion wrapper of this polarity."""
        if self is Polarity.POSITIVE:
            return Delta(chi)
        if self is Polarity.NEGATIVE:
            return Neg(Delta(Neg(chi)))
        return make_probe("t", chi)


@dataclass(frozen=True)
class Argument:
    premise: InnerFormula
    conclusion: InnerFormula

    def __str__(self):
        return f"<{self.premise}, {self.conclusion}>"


def target(pol: Polarity, arg: Argument) -> InnerFormula:
    return And(arg.premise, pol.wrap(arg.conclusion))


class _Supports:
    """Memoized case-to-formula checks over one model."""

    def __init__(self, model: CaseModel, relation: str, var_cap: int):
        self._model = model
        self._holds = get_relation(relation)
        self._var_cap = var_cap
        self._cache: Dict[Tuple[str, InnerFormula], bool] = {}

    def cases(self, phi: InnerFormula) -> Tuple[str, ...]:
        """Names of the cases related to phi, in model order."""
        found = []
        for case in self._model.cases:
            key = (case.name, phi)
            if key not in self._cache:
                self._cache[key] = self._holds(case.formula, phi, var_cap=self._var_cap)
            if self._cache[key]:
                found.append(case.name)
        return tuple(found)

    def most_preferred(self, phi: InnerFormula) -> FrozenSet[str]:
        return most_preferred(self._model, self.cases(phi))


def _coherent(supports: _Supports, arg: Argument, pol: Polarity):
    witnesses = frozenset(supports.cases(target(pol, arg)))
    return bool(witnesses), witnesses


def _conclusive(supports: _Supports, arg: Argument, pol: Polarity):
    witnesses = frozenset(supports.cases(target(pol, arg)))
    premise_cases = frozenset(supports.cases(arg.premise))
    holds = bool(witnesses) and premise_cases <= witnesses
    return holds, premise_cases if holds else frozenset()


def _presumptively_valid(supports: _Supports, arg: Argument, pol: Polarity):
    witnesses = supports.most_preferred(arg.premise) & frozenset(
        supports.cases(target(pol, arg))
    )
    return bool(witnesses), witnesses


def coherent(
    model: CaseModel,
    arg: Argument,
    pol: Polarity,
    *,
    relation: str = "support",
    var_cap: int = DEFAULT_VAR_CAP,
) -> Tuple[bool, Witnesses]:
    """Some case supports the target of pol.

    :param relation: ``"support"`` relates a case to a formula when the
        formula is T or B wherever the case is; ``"sequent"`` uses full
        bilateral entailment.
    :return: The verdict and all supporting cases.
    """
    return _coherent(_Supports(model, relation, var_cap), arg, pol)


def conclusive(
    model: CaseModel,
    arg: Argument,
    pol: Polarity,
    *,
    relation: str = "support",
    var_cap: int = DEFAULT_VAR_CAP,
) -> Tuple[bool, Witnesses]:
    """Coherent, and every case supporting the premise supports the target.

    :return: The verdict and, when it holds, the premise-supporting cases.
    """
    return _conclusive(_Supports(model, relation, var_cap), arg, pol)


def presumptively_valid(
    model: CaseModel,
    arg: Argument,
    pol: Polarity,
    *,
    relation: str = "support",
    var_cap: int = DEFAULT_VAR_CAP,
) -> Tuple[bool, Witnesses]:
    """A most preferred premise-supporting case supports the target.

    :return: The verdict and the witnessing cases.
    """
    return _presumptively_valid(_Supports(model, relation, var_cap), arg, pol)


_STATUS_FUNCTIONS = {
    "coherent": _coherent,
    "presumptively_valid": _presumptively_valid,
    "conclusive": _conclusive,
}


@dataclass(frozen=True)
class ArgumentStatus:
    """The three statuses in the three polarities, with witnesses.

    ``presumptive`` is True when the premise does not entail the conclusion.
    """

    coherent: Mapping[Polarity, bool]
    presumptively_valid: Mapping[Polarity, bool]
    conclusive: Mapping[Polarity, bool]
    witnesses: Mapping[Tuple[str, Polarity], Witnesses] = field(hash=False)
    presumptive: bool

    def holds(self, kind: str, pol: Polarity) -> bool:
        if kind not in STATUS_KINDS:
            raise ValueError(f"Unknown status kind ({kind}), valid values are {STATUS_KINDS}")
        return getattr(self, kind)[pol]

    def as_dict(self) -> dict:
        result = {
            kind: {pol.value: getattr(self, kind)[pol] for pol in Polarity}
            for kind in STATUS_KINDS
        }
        result["witnesses"] = {
            kind: {pol.value: sorted(self.witnesses[kind, pol]) for pol in Polarity}
            for kind in STATUS_KINDS
        }
        result["presumptive"] = self.presumptive
        return result


def classify(
    model: CaseModel,
    arg: Argument,
    *,
    relation: str = "support",
    var_cap: int = DEFAULT_VAR_CAP,
) -> ArgumentStatus:
    """Fill the full status matrix of arg over model."""
    supports = _Supports(model, relation, var_cap)
    verdicts = {kind: {} for kind in STATUS_KINDS}
    witnesses = {}
    for kind, status_function in _STATUS_FUNCTIONS.items():
        for pol in Polarity:
            verdicts[kind][pol], witnesses[kind, pol] = status_function(supports, arg, pol)
    presumptive = not entails(arg.premise, arg.conclusion, var_cap=var_cap)
    logger.debug("classified %s: %s", arg, verdicts)
    return ArgumentStatus(
        coherent=verdicts["coherent"],
        presumptively_valid=verdicts["presumptively_valid"],
        conclusive=verdicts["conclusive"],
        witnesses=witnesses,
        presumptive=presumptive,
    )


@dataclass(frozen=True)
class ClassicalStatus:
    coherent: bool
    presumptively_valid: bool
    conclusive: bool
    presumptive: bool
    witnesses: Mapping[str, Witnesses] = field(hash=False)

    def as_dict(self) -> dict:
        result = {kind: getattr(self, kind) for kind in STATUS_KINDS}
        result["witnesses"] = {kind: sorted(self.witnesses[kind]) for kind in STATUS_KINDS}
        result["presumptive"] = self.presumptive
        return result


def classify_classical(
    model: ClassicalCaseModel,
    arg: Argument,
    *,
    var_cap: int = DEFAULT_CLASSICAL_VAR_CAP,
) -> ClassicalStatus:
    """Classical coherence, presumptive validity and conclusiveness.

    A case supports a formula when it classically entails it; the target is
    ``premise & conclusion``.

    :raises DeltaPresent: If the argument is not Delta-free.
    """
    conjunction = And(arg.premise, arg.conclusion)
    target_cases = frozenset(
        c.name for c in model.cases if entails_classical(c.formula, conjunction, var_cap=var_cap)
    )
    premise_cases = [
        c.name for c in model.cases if entails_classical(c.formula, arg.premise, var_cap=var_cap)
    ]
    preferred = most_preferred(model, premise_cases)
    is_conclusive = bool(target_cases) and frozenset(premise_cases) <= target_cases
    return ClassicalStatus(
        coherent=bool(target_cases),
        presumptively_valid=bool(preferred & target_cases),
        conclusive=is_conclusive,
        presumptive=not entails_classical(arg.premise, arg.conclusion, var_cap=var_cap),
        witnesses={
            "coherent": target_cases,
            "presumptively_valid": preferred & target_cases,
            "conclusive": frozenset(premise_cases) if is_conclusive else frozenset(),
        },
    )
