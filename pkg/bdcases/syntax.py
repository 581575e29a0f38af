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

"""Concrete ASCII syntax for inner and outer formulas.

Inner connectives: ``!`` negation, ``&`` conjunction, ``|`` disjunction,
``@`` Delta, ``=>>`` internal entailment (lowest precedence, at most once
per level), keywords ``top`` and ``bot``, probes ``t( )``, ``b( )``,
``n( )``, ``f( )``.

Outer connectives: ``~`` Goedel negation, ``@`` Delta, ``&``, ``|``,
``-<`` coimplication (left associative), ``->`` implication (right
associative) and modal atoms ``B{ <inner formula> }``.

``#`` starts a comment running to the end of the line.
"""

from functools import reduce
from typing import Optional, Tuple

from pyparsing import (
    Forward,
    Keyword,
    Opt,
    ParseBaseException,
    ParserElement,
    Regex,
    StringEnd,
    Suppress,
    ZeroOrMore,
    python_style_comment,
)

from .errors import ParseError
from .formula import (
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
    Or,
    OuterFormula,
    Var,
    make_bot,
    make_internal_entailment,
    make_probe,
    make_top,
)


def _fold(node_type):
    return lambda tokens: reduce(node_type, list(tokens))


# Names of the elements that start a formula; a failure reports them as
# the expected alternatives.
_INNER_START = ("'!'", "'@'", "'('", "probe", "'top'", "'bot'", "variable")
_OUTER_START = ("'~'", "'@'", "'B'", "'('")
_ALTERNATIVES = " | "


def _token(text: str) -> ParserElement:
    return Suppress(text).set_name(f"'{text}'")


def _build_inner_grammar() -> Tuple[ParserElement, ParserElement]:
    LPAR, RPAR = _token("("), _token(")")
    formula = Forward().set_name(_ALTERNATIVES.join(_INNER_START))
    unary = Forward().set_name(_ALTERNATIVES.join(_INNER_START))

    top = Keyword("top").set_name("'top'").set_parse_action(lambda: make_top())
    bot = Keyword("bot").set_name("'bot'").set_parse_action(lambda: make_bot())
    identifier = (
        Regex(r"[a-z][a-z0-9_]*")
        .add_condition(lambda tokens: tokens[0] not in ("top", "bot"))
        .set_parse_action(lambda tokens: Var(tokens[0]))
        .set_name("variable")
    )
    probe = (
        Regex(r"[tbnf](?=\s*\()").set_name("probe") + LPAR - formula - RPAR
    ).set_parse_action(lambda tokens: make_probe(tokens[0], tokens[1]))
    atom = (probe | top | bot | identifier | (LPAR - formula - RPAR)).set_name(
        _ALTERNATIVES.join(_INNER_START[2:])
    )

    negation = (_token("!") - unary).set_parse_action(lambda t: Neg(t[0]))
    delta = (_token("@") - unary).set_parse_action(lambda t: Delta(t[0]))
    unary <<= (negation | delta | atom).set_name(_ALTERNATIVES.join(_INNER_START))

    conjunction = (unary + ZeroOrMore(_token("&") - unary)).set_parse_action(
        _fold(And)
    )
    disjunction = (
        conjunction + ZeroOrMore(_token("|") - conjunction)
    ).set_parse_action(_fold(Or))
    formula <<= (disjunction + Opt(_token("=>>") - disjunction)).set_parse_action(
        lambda t: t[0] if len(t) == 1 else make_internal_entailment(t[0], t[1])
    )
    return formula, formula + StringEnd().set_name("end of text")


def _build_outer_grammar(inner: ParserElement) -> ParserElement:
    LPAR, RPAR = _token("("), _token(")")
    oformula = Forward().set_name(_ALTERNATIVES.join(_OUTER_START))
    ounary = Forward().set_name(_ALTERNATIVES.join(_OUTER_START))

    modal = (
        Suppress(Keyword("B")).set_name("'B'") - _token("{") - inner - _token("}")
    ).set_parse_action(lambda t: ModalAtom(t[0]))
    gneg = (_token("~") - ounary).set_parse_action(lambda t: GNeg(t[0]))
    gdelta = (_token("@") - ounary).set_parse_action(lambda t: GDelta(t[0]))
    ounary <<= (gneg | gdelta | modal | (LPAR - oformula - RPAR)).set_name(
        _ALTERNATIVES.join(_OUTER_START)
    )

    oconj = (ounary + ZeroOrMore(_token("&") - ounary)).set_parse_action(_fold(GAnd))
    odisj = (oconj + ZeroOrMore(_token("|") - oconj)).set_parse_action(_fold(GOr))
    ocoimp = (odisj + ZeroOrMore(_token("-<") - odisj)).set_parse_action(
        _fold(GCoimp)
    )
    oformula <<= (ocoimp + Opt(_token("->") - oformula)).set_parse_action(
        lambda t: t[0] if len(t) == 1 else GImp(t[0], t[1])
    )
    return oformula + StringEnd().set_name("end of text")


_INNER_FORMULA, _INNER = _build_inner_grammar()
_OUTER = _build_outer_grammar(_INNER_FORMULA)
_INNER.ignore(python_style_comment)
_OUTER.ignore(python_style_comment)


def _parse(grammar: ParserElement, text: str):
    try:
        return grammar.parse_string(text, parse_all=True)[0]
    except ParseBaseException as exc:
        offset = len(text[: exc.loc].encode("utf-8"))
        message = exc.msg
        if message.startswith("Expected "):
            message = message[len("Expected ") :]  # noqa E203
        raise ParseError(offset, message.split(_ALTERNATIVES), text) from None


def parse_inner(text: str) -> InnerFormula:
    """Parse an inner formula.

    Probes, ``top``, ``bot`` and ``=>>`` are expanded while parsing, so the
    result only contains the five primitive node types.

    :param text: Formula text, e.g. ``"t(l) & n(s) & f(b)"``.
    :return: The formula tree.
    :raises ParseError: With the byte offset of the failure and the expected input.
    """
    return _parse(_INNER, text)


def parse_outer(text: str) -> OuterFormula:
    """Parse an outer formula such as ``"~~B{ l & @s }"``."""
    return _parse(_OUTER, text)


# Printing precedence levels, loosest first.
_ENTAIL, _DISJ, _CONJ, _UNARY = range(4)
_IMP, _COIMP, _ODISJ, _OCONJ, _OUNARY = range(5)

_TOP = make_top()
_BOT = make_bot()


def _match_probe(phi: InnerFormula) -> Optional[Tuple[str, InnerFormula]]:
    if not isinstance(phi, And):
        return None
    left = phi.left
    if isinstance(left, Delta):
        candidate = left.sub
    elif isinstance(left, Neg) and isinstance(left.sub, Delta):
        candidate = left.sub.sub
    else:
        return None
    for kind in ("t", "b", "n", "f"):
        if make_probe(kind, candidate) == phi:
            return kind, candidate
    return None


def _match_entailment(
    phi: InnerFormula,
) -> Optional[Tuple[InnerFormula, InnerFormula]]:
    if not isinstance(phi, Or):
        return None
    first = phi
    while isinstance(first, Or):
        first = first.left
    if not isinstance(first, And):
        return None
    left, right = _match_probe(first.left), _match_probe(first.right)
    if left is None or right is None or left[0] != "f" or right[0] != "f":
        return None
    if make_internal_entailment(left[1], right[1]) == phi:
        return left[1], right[1]
    return None


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def _print_inner(phi: InnerFormula, level: int) -> str:
    if isinstance(phi, Var):
        return phi.name
    if phi == _TOP:
        return "top"
    if phi == _BOT:
        return "bot"
    probe = _match_probe(phi)
    if probe is not None:
        return f"{probe[0]}({_print_inner(probe[1], _ENTAIL)})"
    entailment = _match_entailment(phi)
    if entailment is not None:
        text = (
            f"{_print_inner(entailment[0], _DISJ)} =>> "
            f"{_print_inner(entailment[1], _DISJ)}"
        )
        return _wrap(text, level > _ENTAIL)
    if isinstance(phi, Neg):
        return "!" + _print_inner(phi.sub, _UNARY)
    if isinstance(phi, Delta):
        return "@" + _print_inner(phi.sub, _UNARY)
    if isinstance(phi, And):
        text = f"{_print_inner(phi.left, _CONJ)} & {_print_inner(phi.right, _UNARY)}"
        return _wrap(text, level > _CONJ)
    text = f"{_print_inner(phi.left, _DISJ)} | {_print_inner(phi.right, _CONJ)}"
    return _wrap(text, level > _DISJ)


def print_inner(phi: InnerFormula) -> str:
    """Print phi in the concrete syntax, re-sugaring exact expansion shapes.

    ``parse_inner(print_inner(phi)) == phi`` for every tree whose variables
    are user identifiers.
    """
    return _print_inner(phi, _ENTAIL)


def _print_outer(alpha: OuterFormula, level: int) -> str:
    if isinstance(alpha, ModalAtom):
        return "B{" + print_inner(alpha.inner) + "}"
    if isinstance(alpha, GNeg):
        return "~" + _print_outer(alpha.sub, _OUNARY)
    if isinstance(alpha, GDelta):
        return "@" + _print_outer(alpha.sub, _OUNARY)
    if isinstance(alpha, GImp):
        text = f"{_print_outer(alpha.left, _COIMP)} -> {_print_outer(alpha.right, _IMP)}"
        return _wrap(text, level > _IMP)
    if isinstance(alpha, GCoimp):
        text = (
            f"{_print_outer(alpha.left, _COIMP)} -< {_print_outer(alpha.right, _ODISJ)}"
        )
        return _wrap(text, level > _COIMP)
    if isinstance(alpha, GOr):
        text = f"{_print_outer(alpha.left, _ODISJ)} | {_print_outer(alpha.right, _OCONJ)}"
        return _wrap(text, level > _ODISJ)
    text = f"{_print_outer(alpha.left, _OCONJ)} & {_print_outer(alpha.right, _OUNARY)}"
    return _wrap(text, level > _OCONJ)


def print_outer(alpha: OuterFormula) -> str:
    return _print_outer(alpha, _IMP)
