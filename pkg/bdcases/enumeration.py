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

"""Bit-parallel enumeration of four-valued valuations.

A valuation over a signature of n variables is identified with an index in
``range(4 ** n)``. The first signature variable is the most significant
base-4 digit and digits run through the values in ascending truth order
F, B, N, T. Each formula is evaluated on a whole block of indices at once as
two numpy boolean planes, one for positive and one for negative support.
"""

import logging
from functools import wraps
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import CapacityExceeded
from .formula import RESERVED_VARIABLE, And, Delta, InnerFormula, Neg, Or, Var

logger = logging.getLogger(__name__)

DEFAULT_VAR_CAP = 16
DEFAULT_BLOCK_VARS = 8

# Digit d of an index stands for the value with bits (POS_BITS[d], NEG_BITS[d]):
# 0 -> F, 1 -> B, 2 -> N, 3 -> T.
POS_BITS = np.array([False, True, False, True])
NEG_BITS = np.array([True, True, False, False])

Planes = Tuple[np.ndarray, np.ndarray]


def check_capacity(signature: Sequence[str], var_cap: int) -> None:
    if len(signature) > var_cap:
        raise CapacityExceeded(len(signature), var_cap)


def index_planes(signature: Sequence[str], indices: np.ndarray) -> Dict[str, Planes]:
    """Planes of every signature variable for an array of valuation indices."""
    n = len(signature)
    planes = {}
    for k, name in enumerate(signature):
        digits = (indices >> (2 * (n - 1 - k))) & 3
        planes[name] = (POS_BITS[digits], NEG_BITS[digits])
    return planes


def index_digits(signature: Sequence[str], index: int) -> Dict[str, int]:
    n = len(signature)
    return {
        name: (index >> (2 * (n - 1 - k))) & 3 for k, name in enumerate(signature)
    }


def evaluate_planes(
    phi: InnerFormula, planes: Mapping[str, Planes], size: int
) -> Planes:
    """Evaluate phi on every valuation of a block.

    :param phi: Formula whose variables all have planes.
    :param planes: Positive and negative planes per variable.
    :param size: Number of valuations in the block.
    :return: The (positive, negative) planes of phi.
    """
    memo: Dict[int, Planes] = {}

    def _evaluate(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Var):
            if node.name == RESERVED_VARIABLE:
                result = (np.zeros(size, dtype=bool), np.zeros(size, dtype=bool))
            else:
                result = planes[node.name]
        elif isinstance(node, Neg):
            pos, neg = _evaluate(node.sub)
            result = (neg, pos)
        elif isinstance(node, Delta):
            pos, _ = _evaluate(node.sub)
            result = (pos, ~pos)
        else:
            lpos, lneg = _evaluate(node.left)
            rpos, rneg = _evaluate(node.right)
            if isinstance(node, And):
                result = (lpos & rpos, lneg | rneg)
            else:
                result = (lpos | rpos, lneg & rneg)
        memo[key] = result
        return result

    return _evaluate(phi)


def block_by_block(func):
    """A function decorator which runs func on consecutive blocks of
    valuations and reports the first valuation where it fails.

    :param func: A function taking the variable planes of a block and its size
        (followed by any extra arguments) and returning a boolean array, True
        where the checked property holds.

    :return: A decorated function taking the signature to enumerate first. It
        returns the index of the first failing valuation, or None when the
        property holds everywhere. The keyword arguments ``var_cap`` and
        ``block_vars`` bound the signature size and set the block size to
        ``4 ** block_vars`` valuations.
    """

    @wraps(func)
    def _block_by_block(
        signature: Sequence[str],
        *args,
        var_cap: int = DEFAULT_VAR_CAP,
        block_vars: int = DEFAULT_BLOCK_VARS,
        **kwargs,
    ) -> Optional[int]:
        check_capacity(signature, var_cap)
        total = 4 ** len(signature)
        block = 4 ** min(len(signature), block_vars)
        logger.debug(
            "%s: %d valuations in %d blocks",
            func.__name__,
            total,
            total // block,
        )
        for offset in range(0, total, block):
            indices = np.arange(offset, offset + block, dtype=np.int64)
            holds = func(index_planes(signature, indices), block, *args, **kwargs)
            failures = np.flatnonzero(~holds)
            if failures.size:
                return offset + int(failures[0])
        return None

    return _block_by_block
