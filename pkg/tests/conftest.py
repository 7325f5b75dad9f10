import pytest

from quotcat.fincat import CategoryPresentation
from quotcat.linalg import QQ


def point_category(field=QQ):
    """One object, Hom = k * id: the field as a category."""
    one = field.one
    return CategoryPresentation(
        field,
        ["pt"],
        {(0, 0): 1},
        {(0, 0, 0): [[[one]]]},
        [[one]],
        sigma=[0],
    )


def arrow_category(field=QQ, unit_coeff=1):
    """Two objects x, y with a single map x -> y (mod kA_2 as a category).

    unit_coeff != 1 corrupts the structure constant of id_y o f, giving a
    negative control for validation.
    """
    one = field.one
    comp = {
        (0, 0, 0): [[[one]]],
        (1, 1, 1): [[[one]]],
        (0, 0, 1): [[[one]]],
        (0, 1, 1): [[[field.of(unit_coeff)]]],
    }
    return CategoryPresentation(
        field,
        ["x", "y"],
        {(0, 0): 1, (1, 1): 1, (0, 1): 1},
        comp,
        [[one], [one]],
    )


def chain4_category(field=QQ, assoc_coeff=1):
    """w -> x -> y -> z with one-dimensional Hom spaces down the chain.

    All composites are the canonical basis paths; assoc_coeff != 1 skews one
    double-composite so that associativity fails at (w, x, y, z).
    """
    one = field.one
    objs = ["w", "x", "y", "z"]
    hom = {(i, i): 1 for i in range(4)}
    for i in range(4):
        for j in range(i + 1, 4):
            hom[(i, j)] = 1
    comp = {}
    for i in range(4):
        for j in range(i, 4):
            for k in range(j, 4):
                comp[(i, j, k)] = [[[one]]]
    comp[(0, 1, 3)] = [[[field.of(assoc_coeff)]]]
    return CategoryPresentation(field, objs, hom, comp, [[one]] * 4)


@pytest.fixture
def point():
    return point_category()


@pytest.fixture
def arrow():
    return arrow_category()
