import pytest
from itertools import product

import bdcases
from bdcases import (
    DeltaPresent,
    FourValue,
    ParseError,
    Valuation,
    entails,
    eval4,
    make_bot,
    make_internal_entailment,
    make_probe,
    make_top,
    parse_inner,
    parse_outer,
    print_inner,
    print_outer,
    substitute_t,
)
from bdcases.formula import (
    And,
    Delta,
    GAnd,
    GCoimp,
    GDelta,
    GImp,
    GNeg,
    ModalAtom,
    Neg,
    Or,
    Var,
    is_delta_free,
    is_delta_guarded,
    make_outer_bot,
    make_outer_top,
    variables,
)
from bdcases.sampling import random_formula

p, q = Var("p"), Var("q")


def _disjuncts(phi):
    found = []
    while isinstance(phi, Or):
        found.append(phi.right)
        phi = phi.left
    found.append(phi)
    return found[::-1]


def test_parse_inner_probe_conjunction():
    phi = parse_inner("t(l) & n(s) & f(b)")
    expected = And(
        And(make_probe("t", Var("l")), make_probe("n", Var("s"))),
        make_probe("f", Var("b")),
    )
    assert phi == expected


def test_parse_inner_precedence():
    assert parse_inner("p") == p
    assert parse_inner("!@p | q") == Or(Neg(Delta(p)), q)
    assert parse_inner("p | q & !p") == Or(p, And(q, Neg(p)))
    assert parse_inner("(p | q) & p") == And(Or(p, q), p)


def test_parse_inner_constants_and_comments():
    assert parse_inner("top") == make_top()
    assert parse_inner("bot  # nothing holds") == make_bot()
    assert parse_inner("topic") == Var("topic")
    assert parse_inner("t (p)") == make_probe("t", p)
    assert parse_inner("p =>> q") == make_internal_entailment(p, q)


FORMULA_START = {"'!'", "'@'", "'('", "probe", "'top'", "'bot'", "variable"}
OUTER_START = {"'~'", "'@'", "'B'", "'('"}


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("", 0, FORMULA_START),
        ("p &", 3, FORMULA_START),
        ("p & ", 4, FORMULA_START),
        ("p | !", 5, FORMULA_START),
        ("(p", 2, {"')'"}),
        ("p q", 2, {"end of text"}),
        ("t()", 2, FORMULA_START),
        ("t(p", 3, {"')'"}),
        ("p =>> q =>> p", 8, {"end of text"}),
        ("p =>>", 5, FORMULA_START),
        ("P", 0, FORMULA_START),
        ("é & p", 0, FORMULA_START),
        ("p & é", 4, FORMULA_START),
    ],
)
def test_parse_inner_errors(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse_inner(text)
    assert info.value.offset == offset
    assert info.value.expected == expected
    assert isinstance(info.value, ValueError)


def test_parse_error_offset_is_in_bytes():
    with pytest.raises(ParseError) as info:
        parse_inner("é & ")
    assert info.value.offset == 0
    with pytest.raises(ParseError) as info:
        parse_inner("p # é\n&")
    assert info.value.offset == 8


def test_make_probe():
    assert make_probe("t", p) == And(Delta(p), Neg(Delta(Neg(p))))
    assert make_probe("b", p) == And(Delta(p), Delta(Neg(p)))
    assert make_probe("n", p) == And(Neg(Delta(p)), Neg(Delta(Neg(p))))
    assert make_probe("f", p) == And(Neg(Delta(p)), Delta(Neg(p)))
    bot = make_bot()
    assert make_probe("b", bot) == And(Delta(bot), Delta(Neg(bot)))
    with pytest.raises(ValueError):
        make_probe("x", p)


@pytest.mark.parametrize("kind, value", product("tbnf", FourValue))
def test_probe_values(kind, value):
    result = eval4(make_probe(kind, p), Valuation({"p": value}))
    assert result in (FourValue.T, FourValue.F)
    assert (result is FourValue.T) == (value.name == kind.upper())


def test_constants():
    c = Var("_c")
    assert make_top() == Or(Delta(c), Neg(Delta(c)))
    assert variables(make_top()) == ()
    for value in FourValue:
        v = Valuation({"p": value})
        assert eval4(make_top(), v) is FourValue.T
        assert eval4(make_bot(), v) is FourValue.F


def test_internal_entailment_disjuncts():
    disjuncts = _disjuncts(make_internal_entailment(p, p))
    assert len(disjuncts) == 9
    pairs = ["ff", "fb", "fn", "ft", "bb", "bt", "nn", "nt", "tt"]
    for (x, y), disjunct in zip(pairs, disjuncts):
        assert disjunct == And(make_probe(x, p), make_probe(y, p))


def test_internal_entailment_validity():
    lhs = parse_inner("p & !p & q")
    rhs = parse_inner("p & !p")
    assert entails(lhs, rhs)
    valuations = [Valuation({"p": a, "q": b}) for a, b in product(FourValue, repeat=2)]
    assert len(valuations) == 16
    formula = make_internal_entailment(lhs, rhs)
    assert all(eval4(formula, v) is FourValue.T for v in valuations)

    formula = make_internal_entailment(p, q)
    assert eval4(formula, Valuation({"p": FourValue.T, "q": FourValue.F})) is FourValue.F


def test_substitute_t():
    t = lambda x: make_probe("t", x)  # noqa E731
    assert substitute_t(parse_inner("p & !q")) == And(t(p), Neg(t(q)))
    assert substitute_t(p) == t(p)
    assert substitute_t(parse_inner("(p | q) & !p")) == And(Or(t(p), t(q)), Neg(t(p)))
    with pytest.raises(DeltaPresent):
        substitute_t(parse_inner("@p & q"))
    with pytest.raises(DeltaPresent):
        substitute_t(make_top())


def test_substitute_t_is_guarded(rng):
    for _ in range(100):
        phi = random_formula(rng, ("p", "q", "r"), 4, delta=False)
        assert is_delta_free(phi)
        assert is_delta_guarded(substitute_t(phi))


def test_parse_outer():
    assert parse_outer("~~B{ l & @s }") == GNeg(
        GNeg(ModalAtom(And(Var("l"), Delta(Var("s")))))
    )
    assert parse_outer("@B{p} -> @(B{q} -> B{p})") == GImp(
        GDelta(ModalAtom(p)), GDelta(GImp(ModalAtom(q), ModalAtom(p)))
    )
    assert parse_outer("B{p} -< B{q}") == GCoimp(ModalAtom(p), ModalAtom(q))
    assert parse_outer("B{p} -> B{q} -> B{p}") == GImp(
        ModalAtom(p), GImp(ModalAtom(q), ModalAtom(p))
    )
    assert parse_outer("B{p} -< B{q} -< B{p}") == GCoimp(
        GCoimp(ModalAtom(p), ModalAtom(q)), ModalAtom(p)
    )
    assert parse_outer("B{p} & B{q} | B{p}") == bdcases.formula.GOr(
        GAnd(ModalAtom(p), ModalAtom(q)), ModalAtom(p)
    )


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("p", 0, OUTER_START),
        ("B{p} &", 6, OUTER_START),
        ("B{p", 3, {"'}'"}),
        ("B{}", 2, FORMULA_START),
        ("~p", 1, OUTER_START),
        ("B{p} -> ", 8, OUTER_START),
        ("B{p} -< ", 8, OUTER_START),
        ("B p", 2, {"'{'"}),
    ],
)
def test_parse_outer_errors(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse_outer(text)
    assert info.value.offset == offset
    assert info.value.expected == expected


def test_print_inner_resugars():
    assert print_inner(parse_inner("t(l) & n(s) & f(b)")) == "t(l) & n(s) & f(b)"
    assert print_inner(parse_inner("top & !@!l")) == "top & !@!l"
    assert print_inner(make_bot()) == "bot"
    assert print_inner(parse_inner("p & q =>> p")) == "p & q =>> p"
    assert print_inner(parse_inner("(p =>> q) | q")) == "(p =>> q) | q"
    assert str(parse_inner("!(p | q)")) == "!(p | q)"


def test_round_trip_inner(rng):
    signature = ("p", "q", "r")
    for _ in range(500):
        phi = random_formula(rng, signature, 5)
        assert parse_inner(print_inner(phi)) == phi
    for phi in (
        make_internal_entailment(And(p, q), make_top()),
        make_probe("n", make_internal_entailment(p, q)),
        Neg(make_bot()),
    ):
        assert parse_inner(print_inner(phi)) == phi


def test_round_trip_outer(rng):
    signature = ("p", "q")
    constructors = [GAnd, bdcases.formula.GOr, GImp, GCoimp]
    for _ in range(300):

        def _outer(depth):
            if depth == 0 or rng.random() < 0.25:
                return ModalAtom(random_formula(rng, signature, 3))
            choice = int(rng.integers(6))
            if choice == 4:
                return GNeg(_outer(depth - 1))
            if choice == 5:
                return GDelta(_outer(depth - 1))
            return constructors[choice](_outer(depth - 1), _outer(depth - 1))

        alpha = _outer(4)
        assert parse_outer(print_outer(alpha)) == alpha


def test_outer_constants():
    alpha = ModalAtom(p)
    assert make_outer_top(alpha) == GImp(alpha, alpha)
    assert make_outer_bot(alpha) == GCoimp(alpha, alpha)


def test_variable_names():
    with pytest.raises(ValueError):
        Var("P")
    with pytest.raises(ValueError):
        Var("top")
    assert variables(parse_inner("z & a | t(m)")) == ("a", "m", "z")
