import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from maxspec.poset_core import FinitePoset
from maxspec.theorems import lattice_corpus, space_corpus

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

CORPUS = lattice_corpus(8)
SMALL_CORPUS = tuple(c for c in CORPUS if len(c.lattice) <= 6)
SPACES = space_corpus(4)


def by_name(name):
    return next(c.lattice for c in CORPUS if c.name == name)


@st.composite
def posets(draw, max_size=5):
    """Random posets: a random DAG on 0..n-1 (edges i<j), transitively closed."""
    n = draw(st.integers(0, max_size))
    names = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    rel = {(i, i) for i in range(n)} | set(chosen)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return FinitePoset(names, [(names[a], names[b]) for a, b in rel])


corpus_lattices = st.sampled_from([c.lattice for c in CORPUS])
small_lattices = st.sampled_from([c.lattice for c in SMALL_CORPUS])
spaces = st.sampled_from(SPACES)


@pytest.fixture(scope="session")
def corpus():
    return CORPUS
