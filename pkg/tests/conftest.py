import pytest

from hypersurf.census import classify_all, enumerate_closed_surfaces, scan_edge_regular


@pytest.fixture(scope="session")
def edge_regular_masks():
    return scan_edge_regular(4)


@pytest.fixture(scope="session")
def census():
    return enumerate_closed_surfaces(4)


@pytest.fixture(scope="session")
def classes(census):
    return classify_all(census)
