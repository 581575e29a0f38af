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

"""Two-layered models: a capacity over the points of a BD model, outer
formulas valued in the bi-Goedel algebra, and the representation of
argument statuses by outer formulas."""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from itertools import chain, combinations
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from .arguments import Argument, Polarity, classify, target
from .case_models import CaseModel
from .enumeration import DEFAULT_VAR_CAP
from .errors import NotDeterminate, UnboundVariable, UnknownPoint, UnknownWitness
from .formula import (
    PROBE_KINDS,
    And,
    Delta,
    GAnd,
    GCoimp,
    GDelta,
    GImp,
    GNeg,
    GOr,
    InnerFormula,
    ModalAtom,
    Neg,
    OuterFormula,
    Signature,
    Var,
    make_internal_entailment,
    make_probe,
    outer_variables,
)
from .godel import ONE, ZERO, GValue, as_gvalue, g_and, g_coimp, g_delta, g_imp, g_neg, g_or
from .semantics import FourValue, PointModel, Valuation, entails, eval4, extension
from .syntax import print_inner

logger = logging.getLogger(__name__)

REPRESENTATION_KINDS = ("coherent", "conclusive", "presumptive")

_PROBE_VALUES = {"t": FourValue.T, "b": FourValue.B, "n": FourValue.N, "f": FourValue.F}


def _power_set(points: Iterable[str]):
    points = tuple(points)
    for subset in chain.from_iterable(
        combinations(points, r) for r in range(len(points) + 1)
    ):
        yield frozenset(subset)


class Capacity:
    """A monotone set function on the subsets of a finite point set, with
    the empty set at 0 and the full set at 1.

    Build one with :meth:`additive` or :meth:`explicit`. Additive capacities
    keep only their point masses; explicit ones keep a value per subset.
    """

    def __init__(
        self,
        points: Sequence[str],
        values: Optional[Mapping[FrozenSet[str], GValue]],
        kind: str,
        masses: Optional[Mapping[str, GValue]] = None,
    ):
        self._points = tuple(points)
        self._values = None if values is None else dict(values)
        self._kind = kind
        self._masses = None if masses is None else dict(masses)

    @classmethod
    def additive(cls, masses: Mapping[str, object]) -> "Capacity":
        """The normalized sum of positive point masses.

        :param masses: Point name to a positive rational mass.
        """
        masses = {w: Fraction(m) for w, m in masses.items()}
        if not masses:
            raise ValueError("an additive capacity needs at least one point")
        for w, m in masses.items():
            if m <= 0:
                raise ValueError(f"mass of {w} must be positive, got {m}")
        total = sum(masses.values(), ZERO)
        normalized = {w: m / total for w, m in masses.items()}
        return cls(tuple(masses), None, "additive", normalized)

    @classmethod
    def explicit(
        cls, points: Sequence[str], mapping: Mapping[Iterable[str], object]
    ) -> "Capacity":
        """A capacity given subset by subset.

        :param points: The point set.
        :param mapping: A value for every subset of points.
        :raises ValueError: If a subset is missing or the values are not a capacity.
        """
        points = tuple(points)
        values = {frozenset(subset): as_gvalue(value) for subset, value in mapping.items()}
        everything = frozenset(points)
        for subset in values:
            if not subset <= everything:
                raise UnknownPoint(", ".join(sorted(subset - everything)))
        for subset in _power_set(points):
            if subset not in values:
                raise ValueError(f"no capacity value for {{{', '.join(sorted(subset))}}}")
        if values[frozenset()] != ZERO or values[everything] != ONE:
            raise ValueError("a capacity is 0 on the empty set and 1 on all points")
        for subset in values:
            for w in everything - subset:
                if values[subset] > values[subset | {w}]:
                    raise ValueError(
                        f"capacity is not monotone at {sorted(subset)} plus {w}"
                    )
        return cls(points, values, "explicit")

    @property
    def points(self) -> Tuple[str, ...]:
        return self._points

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def masses(self) -> Optional[Dict[str, GValue]]:
        """Normalized point masses of an additive capacity, None otherwise."""
        return None if self._masses is None else dict(self._masses)

    def __call__(self, subset: Iterable[str]) -> GValue:
        subset = frozenset(subset)
        unknown = subset - set(self._points)
        if unknown:
            raise UnknownPoint(", ".join(sorted(unknown)))
        if self._masses is not None:
            return sum((self._masses[w] for w in subset), ZERO)
        return self._values[subset]

    def is_strict(self) -> bool:
        """Positive on every nonempty subset and below 1 on every proper subset."""
        if self._masses is not None:
            # positive masses summing to 1
            return True
        everything = frozenset(self._points)
        return all(
            (value > ZERO or not subset) and (value < ONE or subset == everything)
            for subset, value in self._values.items()
        )


@dataclass(frozen=True)
class QGModel:
    points: PointModel
    mu: Capacity

    def __post_init__(self):
        if set(self.mu.points) != set(self.points.points):
            raise ValueError(
                f"capacity is defined on {self.mu.points}, model points are {self.points.points}"
            )


_OUTER_BINARY = {GAnd: g_and, GOr: g_or, GImp: g_imp, GCoimp: g_coimp}


def eval_outer(model: QGModel, alpha: OuterFormula) -> GValue:
    """Value of alpha, with ``B{phi}`` at the capacity of the positive extension of phi.

    :raises UnboundVariable: If an inner formula uses a variable outside the model's signature.
    """
    return _eval_outer(model, alpha, {})


def _eval_outer(
    model: QGModel, alpha: OuterFormula, atoms: Dict[InnerFormula, GValue]
) -> GValue:
    unbound = set(outer_variables(alpha)) - set(model.points.signature)
    if unbound:
        raise UnboundVariable(unbound)

    def _evaluate(node):
        if isinstance(node, ModalAtom):
            if node.inner not in atoms:
                atoms[node.inner] = model.mu(extension(node.inner, model.points).pos)
            return atoms[node.inner]
        if isinstance(node, GNeg):
            return g_neg(_evaluate(node.sub))
        if isinstance(node, GDelta):
            return g_delta(_evaluate(node.sub))
        return _OUTER_BINARY[type(node)](_evaluate(node.left), _evaluate(node.right))

    return _evaluate(alpha)


def outer_entails(
    model: QGModel, premises: Sequence[OuterFormula], conclusion: OuterFormula
) -> bool:
    """The least premise value is at most the conclusion value (1 without premises)."""
    lowest = min((eval_outer(model, alpha) for alpha in premises), default=ONE)
    return lowest <= eval_outer(model, conclusion)


def canonical_valuation(
    case: InnerFormula,
    signature: Signature,
    *,
    name: Optional[str] = None,
    var_cap: int = DEFAULT_VAR_CAP,
) -> Valuation:
    """The valuation a determinate case fixes.

    Every variable p gets the value X whose probe ``x(p)`` the case entails.

    :param name: Case name used in errors; defaults to the printed formula.
    :raises NotDeterminate: If some variable has no single entailed probe, or
        the case is not T or B at the valuation it fixes.
    """
    label = name if name is not None else print_inner(case)
    values = []
    for p in signature:
        kinds = [
            kind
            for kind in PROBE_KINDS
            if entails(case, make_probe(kind, Var(p)), var_cap=var_cap)
        ]
        if len(kinds) != 1:
            raise NotDeterminate(label, p)
        values.append((p, _PROBE_VALUES[kinds[0]]))
    v = Valuation(values)
    if not eval4(case, v).pos:
        raise NotDeterminate(label, None)
    return v


@dataclass(frozen=True)
class MuCounterpart:
    """A two-layered model with one point per case of a case model."""

    model: QGModel
    case_of_point: Mapping[str, str] = field(hash=False)
    source: CaseModel

    @property
    def point_of_case(self) -> Dict[str, str]:
        return {case: point for point, case in self.case_of_point.items()}

    def with_capacity(self, mu: Capacity) -> "MuCounterpart":
        """The same points and valuations under another capacity."""
        return replace(self, model=QGModel(self.model.points, mu))


def mu_counterpart(model: CaseModel, *, var_cap: int = DEFAULT_VAR_CAP) -> MuCounterpart:
    """Points ``w1 .. wn`` valued canonically, with masses rank + 1 normalized.

    :raises NotDeterminate: If a case does not fix a canonical valuation.
    """
    valuations = {}
    case_of_point = {}
    masses = {}
    for i, case in enumerate(model.cases, start=1):
        point = f"w{i}"
        valuations[point] = canonical_valuation(
            case.formula, model.signature, name=case.name, var_cap=var_cap
        )
        case_of_point[point] = case.name
        masses[point] = model.rank[case.name] + 1
    mu = Capacity.additive(masses)
    logger.debug("mu-counterpart masses: %s", {w: str(m) for w, m in mu.masses.items()})
    points = PointModel(valuations, model.signature)
    return MuCounterpart(QGModel(points, mu), case_of_point, model)


def dump_mu(counterpart: MuCounterpart) -> str:
    """One ``point`` line per point, then the capacity kind."""
    model = counterpart.model
    lines = []
    for point in model.points.points:
        valuation = model.points.valuation(point)
        mass = model.mu({point})
        case = counterpart.case_of_point[point]
        lines.append(f"point {point} from {case} mass {mass} val {valuation}".rstrip())
    lines.append(f"capacity {model.mu.kind}")
    return "\n".join(lines) + "\n"


def _not_not(alpha: OuterFormula) -> OuterFormula:
    return GNeg(GNeg(alpha))


def representation_formula(
    kind: str,
    pol: Polarity,
    arg: Argument,
    witness: Optional[str] = None,
    model: Optional[CaseModel] = None,
) -> OuterFormula:
    """The outer formula that holds in a mu-counterpart exactly when arg has the status.

    :param kind: "coherent", "conclusive" or "presumptive".
    :param pol: Any polarity for "coherent"; positive or negative otherwise.
    :param witness: For "presumptive", the name of the witnessing case of model.
    :param model: For "presumptive", the case model the conjunction ranges over.
    :raises UnknownWitness: If witness is not a case of model.
    """
    phi, chi = arg.premise, arg.conclusion
    if kind == "coherent":
        return _not_not(ModalAtom(target(pol, arg)))
    if kind not in REPRESENTATION_KINDS:
        raise ValueError(f"Unknown kind ({kind}), valid values are {REPRESENTATION_KINDS}")
    if pol is Polarity.STRONG:
        raise ValueError(f"the strong polarity is only represented for coherence, not {kind}")

    if kind == "conclusive":
        if pol is Polarity.POSITIVE:
            refuting = And(phi, Neg(Delta(chi)))
        else:
            refuting = And(phi, Delta(Neg(chi)))
        return GAnd(GNeg(ModalAtom(refuting)), _not_not(ModalAtom(target(pol, arg))))

    if model is None or witness not in model.names:
        raise UnknownWitness(str(witness))
    wrapped = target(pol, arg)
    chosen = model.formula(witness)
    preference = reduce(
        GAnd,
        (
            GImp(
                GDelta(ModalAtom(make_internal_entailment(other.formula, phi))),
                GDelta(GImp(ModalAtom(other.formula), ModalAtom(chosen))),
            )
            for other in model.cases
        ),
    )
    return GAnd(
        GAnd(
            _not_not(ModalAtom(wrapped)),
            GDelta(ModalAtom(make_internal_entailment(chosen, wrapped))),
        ),
        preference,
    )


@dataclass(frozen=True)
class RepresentationInstance:
    """One biconditional: an argument status against its outer formula.

    ``expected`` is the status computed over the case model, ``value`` the
    outer formula's value in the mu-counterpart.
    """

    kind: str
    polarity: Polarity
    witness: Optional[str]
    expected: bool
    value: GValue
    formula: OuterFormula = field(repr=False)

    @property
    def actual(self) -> bool:
        return self.value == ONE

    @property
    def agrees(self) -> bool:
        return self.expected == self.actual

    def __str__(self):
        witness = f" witness {self.witness}" if self.witness is not None else ""
        return (
            f"{self.kind} {self.polarity.value}{witness}: status {self.expected}, "
            f"outer value {self.value}"
        )


@dataclass(frozen=True)
class RepresentationReport:
    instances: Tuple[RepresentationInstance, ...]
    strict: bool
    warnings: Tuple[str, ...] = ()

    @property
    def disagreements(self) -> Tuple[RepresentationInstance, ...]:
        return tuple(i for i in self.instances if not i.agrees)

    @property
    def failures(self) -> Tuple[RepresentationInstance, ...]:
        """Disagreements that count: none under a non-strict capacity."""
        return self.disagreements if self.strict else ()

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_representation(
    model: CaseModel,
    arg: Argument,
    *,
    relation: str = "support",
    var_cap: int = DEFAULT_VAR_CAP,
    counterpart: Optional[MuCounterpart] = None,
) -> RepresentationReport:
    """Compare every argument status with its outer formula in the mu-counterpart.

    Coherence is checked in all three polarities, conclusiveness and
    presumptive validity in the positive and negative ones, the latter with
    every case as candidate witness.

    :param counterpart: Use this counterpart (e.g. with an explicit capacity)
        instead of building the canonical one.
    :raises NotDeterminate: If the canonical counterpart cannot be built.
    """
    if counterpart is None:
        counterpart = mu_counterpart(model, var_cap=var_cap)
    qg = counterpart.model
    warnings = []
    strict = qg.mu.is_strict()
    if not strict:
        message = (
            "capacity is not positive on every nonempty set and below 1 on every "
            "proper subset; disagreements are reported as warnings"
        )
        logger.warning(message)
        warnings.append(message)

    status = classify(model, arg, relation=relation, var_cap=var_cap)
    instances = []
    atoms: Dict[InnerFormula, GValue] = {}

    def _instance(kind, pol, witness, expected, formula):
        value = _eval_outer(qg, formula, atoms)
        instances.append(RepresentationInstance(kind, pol, witness, expected, value, formula))

    for pol in Polarity:
        _instance(
            "coherent",
            pol,
            None,
            status.coherent[pol],
            representation_formula("coherent", pol, arg),
        )
    for pol in (Polarity.POSITIVE, Polarity.NEGATIVE):
        _instance(
            "conclusive",
            pol,
            None,
            status.conclusive[pol],
            representation_formula("conclusive", pol, arg),
        )
        witnesses = status.witnesses["presumptively_valid", pol]
        for case in model.cases:
            _instance(
                "presumptive",
                pol,
                case.name,
                case.name in witnesses,
                representation_formula("presumptive", pol, arg, case.name, model),
            )

    for instance in instances:
        if not instance.agrees:
            message = f"{arg}: {instance}"
            logger.warning("representation disagreement for %s", message)
            warnings.append(message)
    return RepresentationReport(tuple(instances), strict, tuple(warnings))
