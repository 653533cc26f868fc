from __future__ import annotations

import pytest

from schurlab.catalog import dihedral, extraspecial_p3, named
from schurlab.groups import GroupError, build_cyclic, check_group
from schurlab.subgroups import (
    Subgroup,
    center,
    derived_subgroup,
    image,
    intersect,
    join,
    kernel,
    minimal_generators,
    quotient,
    subgroup_generated,
    subgroups_of_abelian,
    trivial,
    whole,
)


def test_center_and_derived():
    S3 = dihedral(6)
    assert center(S3).order == 1
    assert derived_subgroup(S3).order == 3
    D8 = extraspecial_p3(2, "+")
    assert center(D8).order == 2 and derived_subgroup(D8).order == 2
    assert derived_subgroup(build_cyclic(7)).order == 1


def test_quotient_and_projection():
    D8 = extraspecial_p3(2, "+")
    Q, proj = quotient(D8, center(D8))
    check_group(Q)
    assert Q.order == 4 and Q.is_abelian()
    assert proj.is_homomorphism()
    assert kernel(proj).elements == center(D8).elements
    assert image(proj).order == 4


def test_quotient_needs_normal():
    S3 = dihedral(6)
    H = subgroup_generated(S3, [next(x for x in range(6) if S3.element_orders()[x] == 2)])
    assert not H.is_normal()
    with pytest.raises(GroupError):
        quotient(S3, H)


def test_lattice_operations():
    Z12 = build_cyclic(12)
    A, B = subgroup_generated(Z12, [4]), subgroup_generated(Z12, [6])
    assert intersect(A, B).order == 1
    assert join(A, B).order == 6
    assert whole(Z12).order == 12 and trivial(Z12).order == 1
    assert A.is_closed() and A.is_central()


@pytest.mark.parametrize("name,count", [("Z2^2", 5), ("Z4", 3), ("Z2^3", 16), ("Z2xZ4", 8), ("Z3^2", 6)])
def test_subgroups_of_abelian_counts(name, count):
    G = named(name)
    assert len(subgroups_of_abelian(G, whole(G))) == count


def test_minimal_generators():
    assert len(minimal_generators(named("Z2^3"))) == 3
    assert len(minimal_generators(named("Q8"))) == 2
    assert subgroup_generated(named("Q8"), minimal_generators(named("Q8"))).order == 8


def test_subgroup_table():
    D8 = extraspecial_p3(2, "+")
    T, inc = center(D8).table()
    assert T.order == 2 and inc.is_homomorphism()
    assert Subgroup(D8, (0,)) == trivial(D8)
