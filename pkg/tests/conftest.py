import pytest

from lendkit.cat import Funct, identity_functor, terminal_cat, walking_arrow
from lendkit.corpus import generate_corpus
from lendkit.limits import identity_two_cells
from lendkit.twocat import TwoFunctor, locally_discrete


def size(c):
    return len(c.objects), len(c.morphisms)


def arrow_diagram_over_two(v0, v1, fa):
    """A covariant diagram over the walking arrow with values ``v0, v1`` and ``fa: v0 -> v1``."""
    s = locally_discrete(walking_arrow())
    on_one = {"10": identity_functor(v0), "11": identity_functor(v1), "a": fa}
    return TwoFunctor(s, {"0": v0, "1": v1}, on_one, identity_two_cells(s, on_one))


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(0)


@pytest.fixture
def two():
    return walking_arrow()


@pytest.fixture
def one():
    return terminal_cat()


@pytest.fixture
def pick0():
    return Funct(terminal_cat(), walking_arrow(), {"*": "0"}, {"1*": "10"})


ACCEPTANCE_LINES = []


def record(criterion, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
