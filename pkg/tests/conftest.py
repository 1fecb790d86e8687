"""Shared fixtures: small classical schemes and one full pipeline run."""

import pytest

from gmforge.arith import Ring
from gmforge.geom import Scheme
from gmforge.grass import pluecker_ideal
from gmforge.ideals import Ideal
from gmforge.recipes import Pipeline

P = 31991
SEED = 7


def twisted_cubic(p=P):
    R = Ring(4, p)
    x0, x1, x2, x3 = R.gens()
    return Scheme(Ideal(R, [x0 * x2 - x1**2, x1 * x3 - x2**2, x0 * x3 - x1 * x2]), "twisted cubic")


def rational_quartic(p=P):
    R = Ring(5, p)
    x = R.gens()
    gens = [x[i] * x[j + 1] - x[i + 1] * x[j] for i in range(4) for j in range(i + 1, 4)]
    return Scheme(Ideal(R, gens), "rational normal quartic")


def veronese_surface(p=P):
    # 2x2 minors of the symmetric matrix [[a, b, c], [b, d, e], [c, e, f]]
    R = Ring(6, p)
    a, b, c, d, e, f = R.gens()
    M = [[a, b, c], [b, d, e], [c, e, f]]
    gens = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    gens.append(M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1])
    return Scheme(Ideal(R, gens), "Veronese surface")


def segre_threefold(p=P):
    # P^1 x P^2 in P^5: 2x2 minors of a 2x3 matrix
    R = Ring(6, p)
    x = R.gens()
    top, bot = x[:3], x[3:]
    gens = [top[i] * bot[j] - top[j] * bot[i] for i in range(3) for j in range(i + 1, 3)]
    return Scheme(Ideal(R, gens), "Segre threefold")


def plane_cubic(p=P):
    R = Ring(3, p)
    x, y, z = R.gens()
    return Scheme(Ideal(R, [y**2 * z - x**3 - x * z**2 - z**3]), "plane cubic")


def grassmannian(p=P):
    return Scheme(pluecker_ideal(4, p), "G(1,4)")


SMALL_FIXTURES = {
    "twisted cubic": (twisted_cubic, 1, 3),
    "rational quartic": (rational_quartic, 1, 4),
    "plane cubic": (plane_cubic, 1, 3),
    "Veronese surface": (veronese_surface, 2, 4),
    "Segre threefold": (segre_threefold, 3, 3),
}


@pytest.fixture(scope="session")
def pipeline():
    """The full construction chain at the default prime, run once per session."""
    pipe = Pipeline(SEED, P, smooth_check=True)
    pipe.run("gm4")
    return pipe


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def pytest_collection_modifyitems(items):
    for item in items:
        if "pipeline" in getattr(item, "fixturenames", ()):
            item.add_marker(pytest.mark.slow)
