from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurlab.catalog import dihedral, extraspecial, extraspecial_p3, named, pc_group
from schurlab.groups import (
    MAX_ORDER,
    CayleyTable,
    CentralProductSpec,
    GroupError,
    GroupMap,
    InconsistentPresentation,
    SizeGuardError,
    build_cyclic,
    central_product,
    check_group,
    direct_product,
    element_order,
    is_associative,
    pc_element,
)
from schurlab.subgroups import center, derived_subgroup


def test_cyclic_basics():
    G = build_cyclic(12)
    check_group(G)
    assert G.order == 12 and G.is_abelian()
    assert sorted(set(G.element_orders())) == [1, 2, 3, 4, 6, 12]
    assert element_order(G, 4) == 3


def test_size_guard():
    with pytest.raises(SizeGuardError):
        build_cyclic(MAX_ORDER + 1)
    with pytest.raises(SizeGuardError):
        direct_product(build_cyclic(32), build_cyclic(32))


def test_non_associative_rejected():
    mul = np.array([[0, 1, 2], [1, 0, 1], [2, 2, 0]])
    T = CayleyTable(mul)
    assert not is_associative(T)
    with pytest.raises(GroupError):
        check_group(T)


def test_direct_product_embeddings():
    G, e1, e2 = direct_product(build_cyclic(2), build_cyclic(3))
    check_group(G)
    assert e1.is_homomorphism() and e2.is_homomorphism()
    assert e1.is_injective() and e2.is_injective()
    assert max(G.element_orders()) == 6


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("kind", ["+", "-"])
def test_extraspecial_p3(p, kind):
    G = extraspecial_p3(p, kind)
    check_group(G)
    Z, D = center(G), derived_subgroup(G)
    assert G.order == p**3 and Z.order == p and D.elements == Z.elements


def test_extraspecial_exponents():
    assert max(extraspecial_p3(3, "+").element_orders()) == 3
    assert max(extraspecial_p3(3, "-").element_orders()) == 9
    # D8 has five involutions, Q8 one
    assert extraspecial_p3(2, "+").element_orders().count(2) == 5
    assert extraspecial_p3(2, "-").element_orders().count(2) == 1


@pytest.mark.parametrize("kind", ["+", "-"])
def test_extraspecial_order_32(kind):
    G = extraspecial(2, 2, kind)
    check_group(G)
    assert center(G).order == 2 and derived_subgroup(G).order == 2
    invol = G.element_orders().count(2)
    assert invol == (19 if kind == "+" else 11)


def test_central_product_d8_d8():
    D8 = extraspecial_p3(2, "+")
    z = center(D8).elements[1]
    G, mh, mk = central_product(CentralProductSpec(D8, D8, ((z, z),)))
    check_group(G)
    assert G.order == 32
    assert mh.is_homomorphism() and mk.is_homomorphism()
    h, k = mh.image, mk.image
    assert (G.mul[h[:, None], k[None, :]] == G.mul[k[None, :], h[:, None]]).all()


def test_central_product_needs_central_amalgam():
    S3 = dihedral(6)
    with pytest.raises(GroupError):
        central_product(CentralProductSpec(S3, build_cyclic(2), ((3, 1),)))


def test_pc_presentation_and_collection():
    H = pc_group((3, 3, 3), {}, {(1, 0): (0, 0, 1)})
    check_group(H)
    a, b, c = (pc_element(H, v) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert H.comm(b, a) == c
    assert center(H).elements == tuple(sorted((0, c, H.mul[c, c])))


def test_inconsistent_presentation():
    # the order-16 class-3 analogue of the maximal-class example is not consistent
    with pytest.raises(InconsistentPresentation):
        pc_group((2, 2, 2, 2), {}, {(1, 0): (0, 0, 1, 0), (2, 0): (0, 0, 0, 1)})


def test_group_map_checks():
    Z4, Z2 = build_cyclic(4), build_cyclic(2)
    assert GroupMap(Z4, Z2, [0, 1, 0, 1]).is_homomorphism()
    assert not GroupMap(Z4, Z2, [0, 1, 1, 0]).is_homomorphism()
    with pytest.raises(GroupError):
        GroupMap(Z4, Z2, [0, 1])


def test_serialization_round_trip():
    G = named("Q8")
    H = CayleyTable.deserialize(G.serialize(), "Q8")
    assert H == G and H.key == G.key


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 24), st.integers(1, 12))
def test_direct_product_orders(m, n):
    if m * n > MAX_ORDER:
        return
    G, _, _ = direct_product(build_cyclic(m), build_cyclic(n))
    assert G.order == m * n
    assert max(G.element_orders()) == np.lcm(m, n)
