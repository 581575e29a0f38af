import json
import logging
import pytest

import bdcases
from bdcases import Logger
from bdcases.cli import CliConfig, main

NOT_EXCLUSIVE = "vars p q\ncase c1 := t(p)\ncase c2 := t(p) & t(q)\nprefs c1 < c2\n"
CLASSICAL = "classical\nvars p\ncase c1 := p\ncase c2 := !p\nprefs c1 < c2\n"
GLUTTED_FAVOURITE = "vars l s b\ncase c1 := t(l) & n(s) & f(b)\ncase c2 := n(l) & b(s) & t(b)\ncase c3 := t(l) & t(s) & b(b)\nprefs c1 < c3 < c2\n"


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_Logger():
    logger = logging.getLogger("bdcases")
    records = []

    class _Collect(logging.Handler):
        def emit(self, record):
            records.append(record)

    before = logger.level
    with Logger(logger, level=logging.DEBUG, handler=_Collect()) as wrapper:
        assert wrapper.level == logging.DEBUG
        assert logger.level == logging.DEBUG
        bdcases.entails(bdcases.parse_inner("p"), bdcases.parse_inner("p"))
    assert logger.level == before
    assert any(r.name == "bdcases.enumeration" for r in records)
    count = len(records)
    bdcases.entails(bdcases.parse_inner("p"), bdcases.parse_inner("p"))
    assert len(records) == count


def test_config():
    assert CliConfig().var_cap == 16
    assert CliConfig().cap(classical=True) == 20
    assert CliConfig().seed == 0
    assert CliConfig(output="json").json
    with pytest.raises(ValueError):
        CliConfig(var_cap=0)
    with pytest.raises(ValueError):
        CliConfig(classical_var_cap=0)
    with pytest.raises(ValueError):
        CliConfig(seed=-1)
    with pytest.raises(ValueError):
        CliConfig(output="xml")
    with pytest.raises(ValueError):
        CliConfig(relation="classical")


def test_version():
    assert isinstance(bdcases.__version__, str)


def test_validate(capsys, robbery_file, write_model):
    assert _run(capsys, "validate", str(robbery_file)) == (0, "ok\n", "")
    code, out, _ = _run(capsys, "validate", str(write_model(NOT_EXCLUSIVE)))
    assert code == 3
    assert out == "NotExclusive c1 c2\n"
    code, out, _ = _run(capsys, "--json", "validate", str(write_model(NOT_EXCLUSIVE)))
    assert json.loads(out) == {
        "ok": False,
        "classical": False,
        "violations": [{"kind": "NotExclusive", "cases": ["c1", "c2"]}],
    }


def test_validate_format_error(capsys, write_model):
    path = write_model("vars p\ncase c1 := t(p)\ncase c2 := f(p)\nprefs c1\n")
    code, out, err = _run(capsys, "validate", str(path))
    assert code == 2
    assert out == ""
    assert err.startswith("error: line 4:")


def test_entails(capsys):
    code, out, _ = _run(capsys, "entails", "p & !p", "q")
    assert code == 1
    assert out == "does not hold\ncounter-valuation: p=B q=F\n"
    assert _run(capsys, "entails", "p & !p & q", "p & !p") == (0, "holds\n", "")
    assert _run(capsys, "entails", "--classical", "p & !p", "q") == (0, "holds\n", "")
    code, out, _ = _run(capsys, "entails", "--classical", "p | q", "p")
    assert (code, out) == (1, "does not hold\ncounter-valuation: p=0 q=1\n")


def test_entails_json(capsys):
    code, out, _ = _run(capsys, "--json", "entails", "p & !p", "q")
    assert code == 1
    assert json.loads(out) == {"holds": False, "counter_valuation": {"p": "B", "q": "F"}}
    code, out, _ = _run(capsys, "--json", "entails", "p", "p | q")
    assert code == 0
    assert json.loads(out) == {"holds": True, "counter_valuation": None}


def test_entails_errors(capsys):
    code, _, err = _run(capsys, "entails", "p &", "q")
    assert code == 2 and "parse error at offset" in err
    code, _, err = _run(capsys, "--var-cap", "1", "entails", "p", "q")
    assert code == 2 and "exceeds" in err
    code, _, err = _run(capsys, "entails", "--classical", "@p", "p")
    assert code == 2 and "Delta" in err


def test_entails_classical_cap(capsys):
    wide = " & ".join(f"x{i}" for i in range(17))
    assert _run(capsys, "entails", "--classical", wide, "x0") == (0, "holds\n", "")
    code, _, err = _run(capsys, "--var-cap", "16", "entails", "--classical", wide, "x0")
    assert code == 2 and "exceeds" in err
    code, _, err = _run(capsys, "entails", wide, "x0")
    assert code == 2 and "exceeds" in err


def test_bad_var_cap(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--var-cap", "0", "entails", "p", "p"])
    assert info.value.code == 2


def test_classify(capsys, robbery, robbery_file):
    code, out, _ = _run(capsys, "--json", "classify", str(robbery_file), "l", "s")
    assert code == 0
    data = json.loads(out)
    arg = bdcases.Argument(bdcases.parse_inner("l"), bdcases.parse_inner("s"))
    assert data == bdcases.classify(robbery, arg).as_dict()
    assert data["presumptively_valid"]["strong"]
    assert data["witnesses"]["presumptively_valid"]["strong"] == ["c3"]
    assert data["conclusive"] == {"pos": False, "neg": True, "strong": False}

    code, out, _ = _run(capsys, "classify", str(robbery_file), "s", "!s")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["status", "pos", "neg", "strong"]
    assert lines[1].split() == ["coherent", "true", "false", "false"]
    assert "witnesses coherent pos: c2" in lines
    assert lines[-1] == "presumptive true"

    code, out, _ = _run(capsys, "classify", str(robbery_file), "top", "l")
    assert out.splitlines()[3].split() == ["conclusive", "false", "true", "false"]


def test_classify_relation(capsys, robbery_file):
    code, out, _ = _run(
        capsys, "--json", "--relation", "sequent", "classify", str(robbery_file), "s", "!s"
    )
    assert code == 0
    assert not json.loads(out)["coherent"]["pos"]


def test_classify_classical(capsys, write_model):
    path = write_model("classical\nvars p q\ncase c := p & q\nprefs c\n")
    code, out, _ = _run(capsys, "classify", str(path), "p", "q")
    assert code == 0
    assert out.splitlines()[:3] == [
        "coherent true",
        "presumptively_valid true",
        "conclusive true",
    ]
    assert "witnesses coherent: c" in out


def test_classify_invalid_model(capsys, write_model):
    code, _, err = _run(capsys, "classify", str(write_model(NOT_EXCLUSIVE)), "p", "q")
    assert code == 3
    assert "NotExclusive(c1, c2)" in err


def test_counterpart(capsys, write_model, robbery_file):
    code, out, _ = _run(capsys, "counterpart", str(write_model(CLASSICAL)))
    assert code == 0
    assert out == "vars p\ncase c1 := t(p)\ncase c2 := !t(p)\nprefs c1 < c2\n"
    assert bdcases.validate(bdcases.read_model(out)).ok
    code, _, err = _run(capsys, "counterpart", str(robbery_file))
    assert code == 2 and "not a classical model" in err


def test_mu(capsys, robbery_file, write_model):
    code, out, _ = _run(capsys, "mu", str(robbery_file))
    assert code == 0
    assert out.splitlines() == [
        "point w1 from c1 mass 1/6 val l=T s=N b=F",
        "point w2 from c2 mass 1/3 val l=N s=B b=T",
        "point w3 from c3 mass 1/2 val l=T s=T b=B",
        "capacity additive",
    ]
    code, out, _ = _run(capsys, "--json", "mu", str(robbery_file))
    data = json.loads(out)
    assert data["capacity"] == "additive"
    assert data["points"][0] == {
        "point": "w1",
        "case": "c1",
        "mass": "1/6",
        "valuation": {"l": "T", "s": "N", "b": "F"},
    }

    undetermined = write_model("vars p q\ncase c := t(p) & (t(q) | f(q))\nprefs c\n")
    code, _, err = _run(capsys, "mu", str(undetermined))
    assert code == 5 and "does not determine the value of q" in err
    code, _, err = _run(capsys, "mu", str(write_model(CLASSICAL)))
    assert code == 2 and "classical" in err


def test_eval(capsys, robbery_file):
    assert _run(capsys, "eval", str(robbery_file), "~~B{ top & !@!l }") == (0, "1\n", "")
    assert _run(capsys, "eval", str(robbery_file), "B{l}") == (1, "2/3\n", "")
    code, out, _ = _run(capsys, "--json", "eval", str(robbery_file), "B{l}")
    assert (code, json.loads(out)) == (1, {"value": "2/3", "holds": False})
    code, _, err = _run(capsys, "eval", str(robbery_file), "B{l")
    assert code == 2 and "parse error" in err


def test_verify(capsys, robbery_file, write_model):
    code, out, _ = _run(capsys, "verify", str(robbery_file), "l", "s")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert all(line.startswith("agree <l, s> ") for line in lines)

    code, out, err = _run(capsys, "verify", str(write_model(GLUTTED_FAVOURITE)), "s", "!s")
    assert code == 4
    assert "DISAGREE <s, !s> presumptive pos witness c2: status True, outer value 0" in out
    assert "representation disagreement" in err

    code, out, _ = _run(capsys, "--json", "verify", str(robbery_file), "top", "l")
    data = json.loads(out)
    assert data["ok"] and len(data["arguments"]) == 1
    assert data["arguments"][0]["instances"][1] == {
        "kind": "coherent",
        "polarity": "neg",
        "witness": None,
        "status": True,
        "value": "1",
        "agrees": True,
    }


def test_verify_sample_is_reproducible(capsys, robbery_file):
    argv = ["--seed", "7", "--json", "verify", "--sample", "3", str(robbery_file), "l", "s"]
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first == second
    assert len(json.loads(first[1])["arguments"]) == 4


def test_missing_file(capsys, tmp_path):
    code, _, err = _run(capsys, "validate", str(tmp_path / "absent.bdc"))
    assert code == 2 and err.startswith("error:")


def test_verify_sample_defaults_to_fixed_seed(capsys, robbery_file):
    argv = ["--json", "verify", "--sample", "3", str(robbery_file), "l", "s"]
    first = _run(capsys, *argv)
    assert first == _run(capsys, *argv)
    assert first == _run(capsys, "--seed", "0", *argv)
