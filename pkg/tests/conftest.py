import pytest

from hopfgalois.catalog import catalog
from hopfgalois.descent import descend, group_algebra
from hopfgalois.extensions import splitting_field_cubic


@pytest.fixture(scope="session")
def L3():
    return splitting_field_cubic(2)


@pytest.fixture(scope="session")
def catalog3():
    return catalog(3)


@pytest.fixture(scope="session")
def descended3(L3, catalog3):
    return {e.label: descend(group_algebra(L3, e.subgroup), label=e.label)
            for e in catalog3}
