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

from .Logger import Logger
from .arguments import (
    Argument,
    ArgumentStatus,
    ClassicalStatus,
    Polarity,
    classify,
    classify_classical,
    coherent,
    conclusive,
    presumptively_valid,
    target,
)
from .case_models import (
    Case,
    CaseModel,
    ClassicalCaseModel,
    ValidationReport,
    Violation,
    counterpart,
    dump_model,
    is_quasi_classical,
    load_model,
    most_preferred_supporting,
    read_model,
    validate,
    validate_classical,
)
from .classical import (
    classical_counter_valuation,
    entails_classical,
    eval2,
    incompatible_classical,
    satisfiable_classical,
)
from .enumeration import block_by_block
from .errors import (
    BDCaseError,
    CapacityExceeded,
    DeltaPresent,
    InvalidModel,
    ModelFormatError,
    NotDeterminate,
    ParseError,
    UnboundVariable,
    UnknownPoint,
    UnknownWitness,
)
from .formula import (
    make_bot,
    make_internal_entailment,
    make_probe,
    make_top,
    substitute_t,
    variables,
)
from .godel import godel
from .semantics import (
    Extension,
    FourValue,
    PointModel,
    Valuation,
    counter_valuation,
    entails,
    eval4,
    extension,
    jointly_exclusive,
    nontrivial,
    sat,
    supports,
)
from .syntax import parse_inner, parse_outer, print_inner, print_outer
from .two_layered import (
    Capacity,
    MuCounterpart,
    QGModel,
    RepresentationReport,
    canonical_valuation,
    dump_mu,
    eval_outer,
    mu_counterpart,
    outer_entails,
    representation_formula,
    verify_representation,
)

try:
    from ._version import version as __version__
except ImportError:
    __version__ = "unknown version"


__all__ = [
    "Logger",
    "Argument",
    "ArgumentStatus",
    "ClassicalStatus",
    "Polarity",
    "classify",
    "classify_classical",
    "coherent",
    "conclusive",
    "presumptively_valid",
    "target",
    "Case",
    "CaseModel",
    "ClassicalCaseModel",
    "ValidationReport",
    "Violation",
    "counterpart",
    "dump_model",
    "is_quasi_classical",
    "load_model",
    "most_preferred_supporting",
    "read_model",
    "validate",
    "validate_classical",
    "classical_counter_valuation",
    "entails_classical",
    "eval2",
    "incompatible_classical",
    "satisfiable_classical",
    "block_by_block",
    "BDCaseError",
    "CapacityExceeded",
    "DeltaPresent",
    "InvalidModel",
    "ModelFormatError",
    "NotDeterminate",
    "ParseError",
    "UnboundVariable",
    "UnknownPoint",
    "UnknownWitness",
    "make_bot",
    "make_internal_entailment",
    "make_probe",
    "make_top",
    "substitute_t",
    "variables",
    "godel",
    "Extension",
    "FourValue",
    "PointModel",
    "Valuation",
    "counter_valuation",
    "entails",
    "eval4",
    "extension",
    "jointly_exclusive",
    "nontrivial",
    "sat",
    "supports",
    "parse_inner",
    "parse_outer",
    "print_inner",
    "print_outer",
    "Capacity",
    "MuCounterpart",
    "QGModel",
    "RepresentationReport",
    "canonical_valuation",
    "dump_mu",
    "eval_outer",
    "mu_counterpart",
    "outer_entails",
    "representation_formula",
    "verify_representation",
    "__version__",
]
