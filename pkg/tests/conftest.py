import pytest

from pg10 import canonical, gf2, incidence, search, weightenum


@pytest.fixture(scope="session")
def fano():
    return incidence.fano_plane()


@pytest.fixture(scope="session")
def order3():
    return incidence.construct_plane_prime(3)


@pytest.fixture(scope="session")
def fano_code(fano):
    return gf2.plane_code(fano)


@pytest.fixture(scope="session")
def fano_words(fano_code):
    return gf2.enumerate_codewords(fano_code)


@pytest.fixture(scope="session")
def structure():
    return canonical.build_canonical_structure()


@pytest.fixture(scope="session")
def group_g(structure):
    return canonical.group_G(structure)


@pytest.fixture(scope="session")
def group_g1(structure):
    return canonical.group_G1(structure)


@pytest.fixture(scope="session")
def six_sets_1(structure):
    return search.generate_six_sets(1, structure)


@pytest.fixture(scope="session")
def k6_bundles(six_sets_1):
    return search.enumerate_k6(six_sets_1, anchor=1)


@pytest.fixture(scope="session")
def orbits(k6_bundles, group_g1):
    return search.orbit_partition(k6_bundles, group_g1)


@pytest.fixture(scope="session")
def pg10_system():
    return weightenum.build_pg10_system()


@pytest.fixture(scope="session")
def solved_table(pg10_system):
    return weightenum.solve_weight_distribution(pg10_system, weightenum.STANDARD_PINS)


@pytest.fixture(scope="session")
def search_report():
    return search.full_search(workers=1)
