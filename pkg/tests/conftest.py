import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from diagramma.diagrams import Diagram, canonical_labels
from diagramma.wbimodule import WBasisVector

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracles():
    return json.loads((DATA / "oracles.json").read_text())


@st.composite
def diagrams(draw, k=None, max_k=4):
    """A uniformly-labelled (not uniformly distributed) diagram in A_k."""
    if k is None:
        k = draw(st.integers(0, max_k))
    labels = draw(st.lists(st.integers(0, 2 * k), min_size=2 * k, max_size=2 * k))
    return Diagram(k, k, canonical_labels(labels))


@st.composite
def diagram_pairs(draw, max_k=4):
    k = draw(st.integers(0, max_k))
    return draw(diagrams(k)), draw(diagrams(k))


@st.composite
def partial_permutations(draw, n):
    images = draw(st.permutations(range(1, n + 1)))
    mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return tuple(x if keep else 0 for x, keep in zip(images, mask))


@st.composite
def w_vectors(draw, k, n):
    word = draw(st.lists(st.integers(0, n), min_size=k, max_size=k))
    zeros = [j for j, a in enumerate(word, 1) if a == 0]
    labels = draw(st.lists(st.integers(0, len(zeros)), min_size=len(zeros), max_size=len(zeros)))
    parts: dict[int, list[int]] = {}
    for j, lab in zip(zeros, labels):
        parts.setdefault(lab, []).append(j)
    return WBasisVector(k, n, tuple(word), list(parts.values()))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
