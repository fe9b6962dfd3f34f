import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from nomset.atoms import Perm, fresh_atoms
from nomset.fscore import AtomSet
from nomset.fsfun import make_atom_fun

settings.register_profile(
    "default", max_examples=100, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

POOL = fresh_atoms(6, ["p0", "p1", "p2", "p3", "p4", "p5"])

atoms = st.sampled_from(POOL)


@st.composite
def perms(draw):
    chosen = draw(st.lists(atoms, unique=True, max_size=len(POOL)))
    image = draw(st.permutations(chosen))
    return Perm(dict(zip(chosen, image)))


@st.composite
def atomsets(draw):
    return AtomSet(frozenset(draw(st.sets(atoms, max_size=4))), draw(st.booleans()))


@st.composite
def atomfuns(draw):
    carrier = sorted(draw(st.sets(atoms, min_size=1, max_size=3)))
    table = {s: draw(st.sampled_from(carrier)) for s in carrier}
    tail = draw(st.one_of(st.none(), st.sampled_from(carrier)))
    return make_atom_fun(carrier, table, tail)


@pytest.fixture
def abc():
    return fresh_atoms(3, ["a", "b", "c"])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
