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

"""Exceptions raised by the bdcases package.

All of them derive from ValueError, so code that guards calls with
``except ValueError`` keeps working.
"""

from typing import FrozenSet, Iterable, Optional


class BDCaseError(ValueError):
    """Base class of every error raised by bdcases."""


class ParseError(BDCaseError):
    """Malformed formula text.

    :param offset: Byte offset of the failure in the UTF-8 encoded input.
    :param expected: Descriptions of the tokens the parser would have accepted.
    :param text: The input text.
    """

    def __init__(self, offset: int, expected: Iterable[str], text: str):
        self.offset = offset
        self.expected: FrozenSet[str] = frozenset(expected)
        self.text = text
        wanted = ", ".join(sorted(self.expected)) or "end of input"
        super().__init__(f"parse error at offset {offset}: expected {wanted}")


class UnboundVariable(BDCaseError):
    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        super().__init__(f"variables not in the signature: {', '.join(self.names)}")


class CapacityExceeded(BDCaseError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"{count} variables to enumerate exceeds the configured cap of {cap}"
        )


class DeltaPresent(BDCaseError):
    def __init__(self, formula):
        self.formula = formula
        super().__init__(f"formula contains the Delta operator: {formula}")


class UnknownPoint(BDCaseError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown point ({name})")


class NotDeterminate(BDCaseError):
    """A case does not fix a canonical valuation.

    ``variable`` is None when every variable is fixed but the case is not
    positively satisfied at the valuation it fixes.
    """

    def __init__(self, case: str, variable: Optional[str]):
        self.case = case
        self.variable = variable
        if variable is None:
            message = f"case {case} is not supported at its canonical valuation"
        else:
            message = f"case {case} does not determine the value of {variable}"
        super().__init__(message)


class UnknownWitness(BDCaseError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown witnessing case ({name})")


class ModelFormatError(BDCaseError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InvalidModel(BDCaseError):
    def __init__(self, report):
        self.report = report
        listing = "; ".join(
            f"{v.kind}({', '.join(v.cases)})" for v in report.violations
        )
        super().__init__(f"ill-formed case model: {listing}")
