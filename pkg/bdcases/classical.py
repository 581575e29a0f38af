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

"""Two-valued semantics of the Delta-free language."""

import logging
from typing import Dict, Mapping, Optional

import numpy as np

from .enumeration import check_capacity
from .errors import DeltaPresent, UnboundVariable
from .formula import And, InnerFormula, Neg, Signature, Var, is_delta_free, variables

logger = logging.getLogger(__name__)

DEFAULT_CLASSICAL_VAR_CAP = 20

ClassicalValuation = Mapping[str, int]


def _require_delta_free(*formulas: InnerFormula) -> None:
    for phi in formulas:
        if not is_delta_free(phi):
            raise DeltaPresent(phi)


def eval2(phi: InnerFormula, v: ClassicalValuation) -> int:
    """Classical truth value (0 or 1) of a Delta-free formula.

    :raises DeltaPresent: If phi contains Delta.
    :raises UnboundVariable: If v does not assign a variable of phi.
    """
    _require_delta_free(phi)
    unbound = set(variables(phi)) - set(v)
    if unbound:
        raise UnboundVariable(unbound)
    return int(_eval2(phi, v))


def _eval2(phi, v) -> bool:
    if isinstance(phi, Var):
        return bool(v[phi.name])
    if isinstance(phi, Neg):
        return not _eval2(phi.sub, v)
    if isinstance(phi, And):
        return _eval2(phi.left, v) and _eval2(phi.right, v)
    return _eval2(phi.left, v) or _eval2(phi.right, v)


def _evaluate_bits(phi: InnerFormula, planes: Mapping[str, np.ndarray]) -> np.ndarray:
    if isinstance(phi, Var):
        return planes[phi.name]
    if isinstance(phi, Neg):
        return ~_evaluate_bits(phi.sub, planes)
    left = _evaluate_bits(phi.left, planes)
    right = _evaluate_bits(phi.right, planes)
    return left & right if isinstance(phi, And) else left | right


def _truth_table(signature: Signature, *formulas: InnerFormula):
    """Columns of the formulas over all 2**n classical valuations.

    The first signature variable is the most significant bit, 0 before 1.
    """
    n = len(signature)
    indices = np.arange(2**n, dtype=np.int64)
    planes = {
        name: ((indices >> (n - 1 - k)) & 1).astype(bool)
        for k, name in enumerate(signature)
    }
    logger.debug("classical truth table over %d variables", n)
    return [_evaluate_bits(phi, planes) for phi in formulas]


def _decode(signature: Signature, index: int) -> Dict[str, int]:
    n = len(signature)
    return {name: (index >> (n - 1 - k)) & 1 for k, name in enumerate(signature)}


def classical_counter_valuation(
    phi: InnerFormula,
    chi: InnerFormula,
    *,
    var_cap: int = DEFAULT_CLASSICAL_VAR_CAP,
) -> Optional[Dict[str, int]]:
    """First classical valuation making phi true and chi false, or None."""
    _require_delta_free(phi, chi)
    signature = tuple(sorted(set(variables(phi)) | set(variables(chi))))
    check_capacity(signature, var_cap)
    phi_bits, chi_bits = _truth_table(signature, phi, chi)
    failures = np.flatnonzero(phi_bits & ~chi_bits)
    if failures.size == 0:
        return None
    return _decode(signature, int(failures[0]))


def entails_classical(
    phi: InnerFormula, chi: InnerFormula, *, var_cap: int = DEFAULT_CLASSICAL_VAR_CAP
) -> bool:
    """Every classical valuation making phi true makes chi true.

    :raises DeltaPresent: If either formula contains Delta.
    :raises CapacityExceeded: Beyond var_cap joint variables (default 20).
    """
    return classical_counter_valuation(phi, chi, var_cap=var_cap) is None


def satisfiable_classical(
    phi: InnerFormula, *, var_cap: int = DEFAULT_CLASSICAL_VAR_CAP
) -> bool:
    _require_delta_free(phi)
    signature = variables(phi)
    check_capacity(signature, var_cap)
    (bits,) = _truth_table(signature, phi)
    return bool(bits.any())


def incompatible_classical(
    phi: InnerFormula, psi: InnerFormula, *, var_cap: int = DEFAULT_CLASSICAL_VAR_CAP
) -> bool:
    """No classical valuation makes both phi and psi true."""
    return not satisfiable_classical(And(phi, psi), var_cap=var_cap)
