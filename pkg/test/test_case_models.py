import pytest

from bdcases import (
    Case,
    CaseModel,
    ClassicalCaseModel,
    DeltaPresent,
    ModelFormatError,
    UnboundVariable,
    Violation,
    counterpart,
    dump_model,
    is_quasi_classical,
    load_model,
    make_probe,
    most_preferred_supporting,
    parse_inner,
    read_model,
    validate,
    validate_classical,
)
from bdcases.case_models import most_preferred
from bdcases.formula import Var
from bdcases.sampling import random_case_model, random_classical_model

p, q = Var("p"), Var("q")


def _model(text):
    return read_model(text)


def test_robbery_is_valid(robbery):
    report = validate(robbery)
    assert report.ok and bool(report)
    assert report.violations == ()
    assert robbery.names == ("c1", "c2", "c3")
    assert robbery.rank == {"c1": 0, "c2": 1, "c3": 2}
    assert robbery.signature == ("l", "s", "b")
    assert len(robbery) == 3
    assert robbery.formula("c2") == parse_inner("n(l) & b(s) & t(b)")
    assert not robbery.is_classical


def test_validate_not_exclusive():
    model = _model("vars p q\ncase c1 := t(p)\ncase c2 := t(p) & t(q)\nprefs c1 < c2\n")
    report = validate(model)
    assert not report.ok
    assert report.violations == (Violation("NotExclusive", ("c1", "c2")),)


def test_validate_trivial():
    report = validate(_model("vars p\ncase c1 := bot\nprefs c1\n"))
    assert report.violations == (Violation("Trivial", ("c1",)),)


def test_validate_rank_gap():
    cases = (Case("c1", make_probe("t", p)), Case("c2", make_probe("f", p)))
    report = validate(CaseModel(("p",), cases, {"c1": 0, "c2": 2}))
    assert report.violations == (Violation("RankGap", ("c1", "c2")),)
    # Ranks need not start at zero.
    assert validate(CaseModel(("p",), cases, {"c1": 1, "c2": 2})).ok


def test_case_model_construction_errors():
    cases = (Case("c1", make_probe("t", p)),)
    with pytest.raises(ValueError):
        CaseModel(("p",), cases, {})
    with pytest.raises(ValueError):
        CaseModel(("p",), cases, {"c1": -1})
    with pytest.raises(ValueError):
        CaseModel(("p",), cases + cases, {"c1": 0})
    with pytest.raises(UnboundVariable):
        CaseModel(("q",), cases, {"c1": 0})
    with pytest.raises(DeltaPresent):
        ClassicalCaseModel(("p",), cases, {"c1": 0})
    with pytest.raises(KeyError):
        CaseModel(("p",), cases, {"c1": 0}).formula("c2")


def test_most_preferred_supporting(robbery):
    assert most_preferred_supporting(robbery, parse_inner("l")) == {"c3"}
    assert most_preferred_supporting(robbery, parse_inner("top")) == {"c3"}
    assert most_preferred_supporting(robbery, parse_inner("f(l)")) == frozenset()
    assert most_preferred_supporting(robbery, parse_inner("n(l)")) == {"c2"}


def test_most_preferred_supporting_ties():
    model = _model("vars p\ncase c1 := t(p)\ncase c2 := b(p)\ncase c3 := f(p)\nprefs c3 < c1 = c2\n")
    assert model.rank == {"c1": 1, "c2": 1, "c3": 0}
    assert most_preferred_supporting(model, p) == {"c1", "c2"}
    # Under the sequent reading b(p) does not entail p.
    assert most_preferred_supporting(model, p, relation="sequent") == {"c1"}
    assert most_preferred(model, ["c3", "c1"]) == {"c1"}
    assert most_preferred(model, model.names) == {"c1", "c2"}
    assert most_preferred(model, []) == frozenset()


def test_is_quasi_classical(robbery):
    model = _model("vars p q\ncase c1 := t(p) & !t(q)\ncase c2 := !t(p)\nprefs c1 < c2\n")
    assert is_quasi_classical(model)
    assert not is_quasi_classical(robbery)
    assert not is_quasi_classical(_model("vars p\ncase c1 := @p\nprefs c1\n"))
    assert not is_quasi_classical(_model("vars p\ncase c1 := t(p) & p\nprefs c1\n"))


def test_counterpart_examples():
    model = _model("classical\nvars p q\ncase c1 := p & !q\ncase c2 := q\nprefs c2 < c1\n")
    assert model.is_classical
    translated = counterpart(model)
    assert not translated.is_classical
    assert translated.formula("c1") == parse_inner("t(p) & !t(q)")
    assert translated.formula("c2") == parse_inner("t(q)")
    assert translated.rank == model.rank

    single = counterpart(_model("classical\nvars p\ncase c := p\nprefs c\n"))
    assert single.formula("c") == make_probe("t", p)

    opposite = _model("classical\nvars p\ncase c1 := p\ncase c2 := !p\nprefs c1 = c2\n")
    assert validate_classical(opposite).ok
    assert validate(counterpart(opposite)).ok


def test_validate_classical():
    model = _model("classical\nvars p q\ncase c1 := p\ncase c2 := p & q\nprefs c1 < c2\n")
    assert validate_classical(model).violations == (Violation("NotIncompatible", ("c1", "c2")),)
    model = _model("classical\nvars p\ncase c1 := p & !p\nprefs c1\n")
    assert validate_classical(model).violations == (Violation("Unsatisfiable", ("c1",)),)


def test_random_counterparts_are_valid(rng):
    for _ in range(100):
        model = random_classical_model(rng, ("p", "q", "r"), int(rng.integers(1, 5)))
        assert validate_classical(model).ok
        translated = counterpart(model)
        assert validate(translated).ok
        assert is_quasi_classical(translated)
        assert translated.rank == model.rank
        assert translated.names == model.names


def test_random_case_models_are_valid(rng):
    for _ in range(50):
        model = random_case_model(rng, ("p", "q"), int(rng.integers(1, 5)))
        assert validate(model).ok


def test_read_and_dump(robbery, robbery_text, robbery_file):
    text = dump_model(robbery)
    assert text == "".join(
        line + "\n" for line in robbery_text.splitlines() if not line.startswith("#")
    )
    assert read_model(text) == robbery
    assert load_model(robbery_file) == robbery
    assert load_model(str(robbery_file)) == robbery


def test_dump_ties_and_classical():
    text = "classical\nvars p q\ncase c1 := p\ncase c2 := !p & q\ncase c3 := !p & !q\nprefs c3 < c1 = c2\n"
    model = read_model(text)
    assert model.rank == {"c1": 1, "c2": 1, "c3": 0}
    assert isinstance(model, ClassicalCaseModel)
    assert dump_model(model) == text
    assert read_model(dump_model(model)) == model
    assert dump_model(counterpart(model)).startswith("vars p q\n")


def test_round_trip_random_models(rng):
    for _ in range(50):
        model = random_case_model(rng, ("p", "q", "r"), int(rng.integers(1, 5)))
        assert read_model(dump_model(model)) == model


def test_empty_model():
    model = read_model("vars p q  # no cases yet\n")
    assert model.cases == () and model.rank == {}
    assert validate(model).ok
    assert dump_model(model) == "vars p q\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("vars p\ncase c1 := t(p)\n", 0),
        ("prefs c1\n", 0),
        ("case c1 := p\nvars p\n", 1),
        ("vars p p\n", 1),
        ("vars p\nfoo\n", 2),
        ("vars p\ncase c1 := t(q)\nprefs c1\n", 2),
        ("vars p\ncase c1 := p &\nprefs c1\n", 2),
        ("vars p\ncase c1 = p\nprefs c1\n", 2),
        ("vars p\ncase c1 := t(p)\ncase c1 := f(p)\nprefs c1\n", 3),
        ("vars p\ncase c1 := t(p)\nprefs c1 < c2\n", 3),
        ("vars p\ncase c1 := t(p)\nprefs c1 < c1\n", 3),
        ("vars p\ncase c1 := t(p)\nprefs c1 <\n", 3),
        ("vars p\ncase c1 := t(p)\ncase c2 := f(p)\nprefs c1\n", 4),
        ("vars p\nvars q\n", 2),
        ("classical\nvars p\ncase c1 := @p\nprefs c1\n", 3),
        ("vars p\nclassical\n", 2),
    ],
)
def test_model_format_errors(text, line):
    with pytest.raises(ModelFormatError) as info:
        read_model(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")
