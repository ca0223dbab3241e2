import pytest
from hypothesis import settings, strategies as st

from modcong import _pykernels
from modcong.permutation import Permutation, Word

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

try:
    from modcong import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernels(request):
    return request.param


@st.composite
def permutations(draw, degree=None, max_degree=12):
    n = degree if degree is not None else draw(st.integers(1, max_degree))
    return Permutation(draw(st.permutations(range(n))))


@st.composite
def perm_pairs(draw, max_degree=12):
    n = draw(st.integers(1, max_degree))
    return draw(permutations(n)), draw(permutations(n))


def words(max_factors=10, max_exp=9):
    factor = st.tuples(st.sampled_from("LR"), st.integers(-max_exp, max_exp))
    return st.lists(factor, max_size=max_factors).map(Word)


_results = []


def record(name, passed, detail=""):
    _results.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
