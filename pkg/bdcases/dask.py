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

import dask.array as da
import numpy as np

from .enumeration import (
    DEFAULT_BLOCK_VARS,
    DEFAULT_VAR_CAP,
    check_capacity,
    evaluate_planes,
    index_planes,
)
from .formula import InnerFormula, variables


def entails_partitioned(
    phi: InnerFormula,
    chi: InnerFormula,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    block_vars: int = DEFAULT_BLOCK_VARS,
    scheduler: str = "threads",
) -> bool:
    """Decides bilateral entailment with the valuations split into dask chunks.

    The index range of all valuations is a dask array chunked into blocks
    of ``4 ** block_vars`` valuations; each chunk evaluates both formulas
    with map_blocks and the per-chunk verdicts are combined by conjunction.

    :param phi: The premise.
    :param chi: The conclusion.
    :param var_cap: Maximum number of joint variables to enumerate.
    :param block_vars: Number of trailing variables enumerated inside one chunk.
    :param scheduler: Any dask scheduler name, e.g. "threads" or "synchronous".
    :return: The same answer as :func:`bdcases.semantics.entails`.
    """
    signature = tuple(sorted(set(variables(phi)) | set(variables(chi))))
    check_capacity(signature, var_cap)
    total = 4 ** len(signature)
    indices = da.arange(
        total, chunks=4 ** min(len(signature), block_vars), dtype=np.int64
    )

    def func(block):
        planes = index_planes(signature, block)
        phi_pos, phi_neg = evaluate_planes(phi, planes, block.size)
        chi_pos, chi_neg = evaluate_planes(chi, planes, block.size)
        return (~phi_pos | chi_pos) & (~chi_neg | phi_neg)

    holds = da.map_blocks(
        func, indices, dtype=bool, meta=np.array((), dtype=bool), token="bd-sequent"
    )
    return bool(holds.all().compute(scheduler=scheduler))
