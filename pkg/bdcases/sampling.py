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

"""Seeded random formulas, arguments and case models.

Every function draws from a ``numpy.random.Generator`` so that a run is
reproducible from its seed.
"""

import itertools
from typing import Dict, List, Sequence

import numpy as np

from .arguments import Argument
from .case_models import Case, CaseModel, ClassicalCaseModel, counterpart
from .formula import (
    PROBE_KINDS,
    And,
    Delta,
    InnerFormula,
    Neg,
    Or,
    Signature,
    Var,
    conjoin,
    disjoin,
    make_probe,
)
from .semantics import nontrivial


def random_formula(
    rng: np.random.Generator,
    signature: Signature,
    depth: int,
    *,
    delta: bool = True,
    guarded: bool = False,
) -> InnerFormula:
    """A random formula of at most the given depth over signature.

    :param delta: Allow the Delta operator.
    :param guarded: Put every variable occurrence in the scope of a Delta.
    """
    operators = ["neg", "and", "or"] + (["delta"] if delta or guarded else [])

    def _random(d, guard):
        if d == 0 or rng.random() < 0.2:
            leaf = Var(str(rng.choice(signature)))
            return Delta(leaf) if guard else leaf
        operator = operators[rng.integers(len(operators))]
        if operator == "neg":
            return Neg(_random(d - 1, guard))
        if operator == "delta":
            return Delta(_random(d - 1, False))
        node_type = And if operator == "and" else Or
        return node_type(_random(d - 1, guard), _random(d - 1, guard))

    return _random(depth, guarded)


def random_argument(
    rng: np.random.Generator, signature: Signature, depth: int = 2, *, delta: bool = True
) -> Argument:
    return Argument(
        random_formula(rng, signature, depth, delta=delta),
        random_formula(rng, signature, depth, delta=delta),
    )


def random_t_argument(rng: np.random.Generator, signature: Signature, depth: int = 2) -> Argument:
    """An argument whose formulas are built from ``t(p)`` probes, hence only T or F."""
    classical = random_argument(rng, signature, depth, delta=False)
    return Argument(_t_lift(classical.premise), _t_lift(classical.conclusion))


def _t_lift(phi):
    if isinstance(phi, Var):
        return make_probe("t", phi)
    if isinstance(phi, Neg):
        return Neg(_t_lift(phi.sub))
    return type(phi)(_t_lift(phi.left), _t_lift(phi.right))


def random_ranks(rng: np.random.Generator, names: Sequence[str], *, ties: bool = True) -> Dict[str, int]:
    """Contiguous ranks from 0, possibly tied."""
    if ties:
        raw = rng.integers(0, len(names), size=len(names))
    else:
        raw = rng.permutation(len(names))
    levels = sorted(set(int(r) for r in raw))
    return {name: levels.index(int(r)) for name, r in zip(names, raw)}


def _distinct_cells(rng, count: int, alphabet: int, length: int, per_case: int) -> List[List[tuple]]:
    """Disjoint groups of distinct value tuples, one group per case."""
    everything = list(itertools.product(range(alphabet), repeat=length))
    picked = rng.permutation(len(everything))
    groups, position = [], 0
    for _ in range(count):
        size = int(rng.integers(1, per_case + 1))
        groups.append([everything[i] for i in picked[position : position + size]])  # noqa E203
        position += size
    return groups


def random_determinate_model(
    rng: np.random.Generator,
    signature: Signature,
    n_cases: int,
    *,
    ties: bool = True,
) -> CaseModel:
    """Cases that each fix one valuation by a conjunction of probes.

    :param n_cases: At most ``4 ** len(signature)``.
    """
    groups = _distinct_cells(rng, n_cases, 4, len(signature), 1)
    cases = []
    for i, (cell,) in enumerate(groups, start=1):
        cases.append(Case(f"c{i}", _probe_cell(signature, cell)))
    names = [c.name for c in cases]
    return CaseModel(signature, tuple(cases), random_ranks(rng, names, ties=ties))


def _probe_cell(signature, cell) -> InnerFormula:
    return conjoin(
        make_probe(PROBE_KINDS[digit], Var(p)) for p, digit in zip(signature, cell)
    )


def random_case_model(
    rng: np.random.Generator,
    signature: Signature,
    n_cases: int,
    *,
    ties: bool = True,
    depth: int = 2,
) -> CaseModel:
    """A valid case model with possibly indeterminate, glutted or gappy cases.

    Each case is a disjunction of probe cells over disjoint sets of
    valuations, optionally narrowed by conjoining a random formula that
    keeps the case nontrivial.
    """
    total = 4 ** len(signature)
    per_case = max(1, min(2, total // max(n_cases, 1)))
    groups = _distinct_cells(rng, n_cases, 4, len(signature), per_case)
    cases = []
    for i, group in enumerate(groups, start=1):
        formula = disjoin(_probe_cell(signature, cell) for cell in group)
        if rng.random() < 0.5:
            narrowed = And(formula, random_formula(rng, signature, depth))
            if nontrivial(narrowed):
                formula = narrowed
        cases.append(Case(f"c{i}", formula))
    names = [c.name for c in cases]
    return CaseModel(signature, tuple(cases), random_ranks(rng, names, ties=ties))


def random_classical_model(
    rng: np.random.Generator,
    signature: Signature,
    n_cases: int,
    *,
    ties: bool = True,
) -> ClassicalCaseModel:
    """Classical cases as disjunctions of literal cells over disjoint valuations.

    :param n_cases: At most ``2 ** len(signature)``.
    """
    total = 2 ** len(signature)
    per_case = max(1, min(2, total // max(n_cases, 1)))
    groups = _distinct_cells(rng, n_cases, 2, len(signature), per_case)
    cases = []
    for i, group in enumerate(groups, start=1):
        cells = (
            conjoin(Var(p) if bit else Neg(Var(p)) for p, bit in zip(signature, cell))
            for cell in group
        )
        cases.append(Case(f"c{i}", disjoin(cells)))
    names = [c.name for c in cases]
    return ClassicalCaseModel(signature, tuple(cases), random_ranks(rng, names, ties=ties))


def random_quasi_classical_model(
    rng: np.random.Generator,
    signature: Signature,
    n_cases: int,
    *,
    ties: bool = True,
) -> CaseModel:
    return counterpart(random_classical_model(rng, signature, n_cases, ties=ties))
