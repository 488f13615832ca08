import functools

import pytest
from hypothesis import HealthCheck, settings

from planar_pmc import generators as gen
from planar_pmc.latching import build_latching
from planar_pmc.oracle import corpus
from planar_pmc.planar import embed

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def cached_corpus(n_max: int = 12):
    return tuple(corpus(seed=1, n_max=n_max))


def triconnected_corpus(n_max: int = 12):
    return [c for c in cached_corpus(n_max) if c.triconnected and c.n >= 4]


@pytest.fixture(scope="session")
def cube():
    return gen.cube()


@pytest.fixture(scope="session")
def octahedron():
    return gen.octahedron()


@pytest.fixture(scope="session")
def cube_latching(cube):
    return build_latching(embed(cube))


@pytest.fixture(scope="session")
def octahedron_latching(octahedron):
    return build_latching(embed(octahedron))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
