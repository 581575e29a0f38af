import pytest
import numpy as np
from pathlib import Path

from bdcases import read_model

ROBBERY = """\
# three witnesses of a robbery: l(ight), s(hot), b(lood)
vars l s b
case c1 := t(l) & n(s) & f(b)
case c2 := n(l) & b(s) & t(b)
case c3 := t(l) & t(s) & b(b)
prefs c1 < c2 < c3
"""


@pytest.fixture(scope="session")
def robbery_text() -> str:
    return ROBBERY


@pytest.fixture(scope="session")
def robbery():
    return read_model(ROBBERY)


@pytest.fixture(scope="session")
def robbery_file(tmp_path_factory) -> Path:
    fn = Path(tmp_path_factory.mktemp("models")) / "robbery.bdc"
    fn.write_text(ROBBERY)
    return fn


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def write_model(tmp_path):
    def _write(text: str, name: str = "model.bdc") -> Path:
        fn = tmp_path / name
        fn.write_text(text)
        return fn

    return _write
