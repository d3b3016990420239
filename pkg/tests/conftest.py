import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from krasner.corpus import corpus  # noqa: E402
from krasner.io import bundled  # noqa: E402

CORPUS = corpus()


def pytest_generate_tests(metafunc):
    if "member" in metafunc.fixturenames:
        metafunc.parametrize("member", CORPUS, ids=[t.name for t in CORPUS])
    if "small_member" in metafunc.fixturenames:
        small = [t for t in CORPUS if t.n <= 6]
        metafunc.parametrize("small_member", small, ids=[t.name for t in small])


@pytest.fixture
def r8():
    return bundled("r8")
