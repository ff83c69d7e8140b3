import pytest

from sring import GroupDescriptor, named_automorphism, orbit_ring

NAMES = ("psi", "delta", "xi", "rho", "sigma", "zeta", "tau")


@pytest.fixture(scope="session")
def G():
    return GroupDescriptor(0, 3)


@pytest.fixture(scope="session")
def Z():
    return GroupDescriptor(0, 1)


@pytest.fixture(scope="session")
def Z3():
    return GroupDescriptor(1, 3)


@pytest.fixture(scope="session")
def autos(G):
    return {name: named_automorphism(name, G) for name in NAMES}


@pytest.fixture(scope="session")
def psi_ring(G, autos):
    return orbit_ring(G, [autos["psi"]], 6)


@pytest.fixture(scope="session")
def xi_ring(G, autos):
    return orbit_ring(G, [autos["xi"]], 6)
