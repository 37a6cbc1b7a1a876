import pytest

from quivercone import LabeledFamily, Quiver, canonical_family, parse_quiver

A2_TEXT = """\
# the two-vertex chain with two labels everywhere
vertex x 1 2
vertex y 1 2
arrow x y
"""

STAR_TEXT = """\
vertex x1 1 2
vertex x2 1 2
vertex y 1 2
arrow x1 y
arrow x2 y
"""


@pytest.fixture
def a2():
    return parse_quiver(A2_TEXT)


@pytest.fixture
def star2():
    return parse_quiver(STAR_TEXT)


@pytest.fixture
def a2_quiver(a2):
    return a2[0]


@pytest.fixture
def a2_family(a2):
    return a2[1]


def make_quiver(arrows, vertices):
    return Quiver(tuple(vertices), tuple(arrows))


def family(**labels):
    return LabeledFamily(labels)


def canon(quiver, *dims):
    return canonical_family(quiver, dict(zip(quiver.vertices, dims)))
