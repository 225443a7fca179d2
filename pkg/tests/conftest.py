import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from cofinite_monoid.core import PartialBijection, canonicalize

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# fixtures shared by several modules: the 3-cycle unit and the partial map 3 -> 1
BETA = canonicalize({1: 2, 2: 3, 3: 1}, 4, 0)
EPS12 = canonicalize({3: 1}, 4, 0)
SIGMA_PI = canonicalize({}, 2, 0)


@st.composite
def elements(draw, bound=8, max_shift=3, max_exceptions=4):
    d = draw(st.integers(-max_shift, max_shift))
    n = draw(st.integers(max(1, 1 - d), min(bound + 1, bound + 1 - d)))
    k = draw(st.integers(0, max(0, min(max_exceptions, n - 1, n + d - 1))))
    keys = draw(st.lists(st.integers(1, n - 1), min_size=k, max_size=k, unique=True)) if k else []
    vals = draw(st.lists(st.integers(1, n + d - 1), min_size=k, max_size=k, unique=True)) if k else []
    return canonicalize(zip(keys, vals), n, d)


def idempotents(bound=8):
    return st.sets(st.integers(1, bound), max_size=bound).map(
        lambda holes: canonicalize({n: n for n in range(1, bound + 1) if n not in holes}, bound + 1, 0)
    )


@pytest.fixture
def beta3() -> PartialBijection:
    return BETA


@pytest.fixture
def eps12() -> PartialBijection:
    return EPS12


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
