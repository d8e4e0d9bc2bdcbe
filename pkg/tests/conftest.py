import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gradednr.builders import builder_cyclic, builder_mapping_nearring  # noqa: E402
from gradednr.core import mask_of  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "gradednr" / "data"


def m(*xs) -> int:
    return mask_of(xs)


@pytest.fixture(scope="session")
def z12():
    return builder_cyclic(12)


@pytest.fixture(scope="session")
def z8():
    return builder_cyclic(8)


@pytest.fixture(scope="session")
def z18():
    return builder_cyclic(18)


@pytest.fixture(scope="session")
def z16():
    return builder_cyclic(16)


@pytest.fixture(scope="session")
def mz2():
    return builder_mapping_nearring(2)


@pytest.fixture(scope="session")
def default_corpus():
    from gradednr.corpus import default_entries
    return default_entries()


@pytest.fixture(scope="session")
def data_dir():
    return DATA
