import pytest

from mpart.counting import BinarySeries, build_table

# a_m for 1 <= m <= 64, transcribed once; the packaged golden CSV and every
# count path in the library are held against this list.
COUNTS_64 = [
    0, 1, 1, 1, 1, 2, 1, 1, 3, 4, 3, 4, 2, 2, 1, 1,
    12, 15, 13, 14, 11, 12, 9, 10, 6, 6, 4, 4, 2, 2, 1, 1,
    84, 91, 82, 89, 77, 80, 70, 73, 60, 63, 53, 54, 43, 44, 35, 36,
    26, 26, 20, 20, 14, 14, 10, 10, 6, 6, 4, 4, 2, 2, 1, 1, 908,
]


@pytest.fixture(scope="session")
def counts64():
    return COUNTS_64


@pytest.fixture(scope="session")
def table14():
    """Dense count table covering every m <= 2**14."""
    return build_table(1 << 14)


@pytest.fixture(scope="session")
def bser():
    return BinarySeries()
