import pytest

from reuleaux.polyhedron import analyze_config, config_from_generator


@pytest.fixture(scope="session")
def tetra_structure():
    return analyze_config(config_from_generator("tetra"))


@pytest.fixture(scope="session")
def pentad_structure():
    return analyze_config(config_from_generator("pentad"))
