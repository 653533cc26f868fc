from __future__ import annotations

import numpy as np
import pytest

from schurlab.abelian import abelian_subgroup_basis, hom_group
from schurlab.catalog import heis_elementary, extraspecial_pair, named, q8_o_z4
from schurlab.cohomology import (
    Cocycle2,
    CohomologyError,
    bockstein_image,
    coboundary,
    cohomology,
    h2,
    induced_map_on_h2,
    nu,
    psi,
    pullback_cocycle,
    schur_multiplier,
    transgress,
)
from schurlab.groups import GroupMap, build_cyclic
from schurlab.subgroups import center, quotient


@pytest.mark.parametrize(
    "name,m,expected",
    [("Z2", 2, [2]), ("Z2^2", 2, [2, 2, 2]), ("Z4", 4, [4]), ("Z3^2", 3, [3, 3, 3]), ("Q8", 2, [2, 2])],
)
def test_h2_with_finite_coefficients(name, m, expected):
    # H^2(G, Z/m) by the universal coefficient theorem
    assert h2(named(name), m).invariants == expected


@pytest.mark.parametrize(
    "name,expected",
    [("Z6", []), ("Z2^2", [2]), ("Z2^3", [2, 2, 2]), ("D8", [2]), ("Q8", []), ("Z4xZ4", [4]),
     ("2^(1+4)+", [2] * 5), ("2^(1+4)-", [2] * 5), ("E27+", [3, 3]), ("E27-", [])],
)
def test_schur_multiplier_known(name, expected):
    assert schur_multiplier(named(name)).invariants == expected


def test_multiplier_independent_of_modulus():
    G = named("Z2xZ4")
    assert schur_multiplier(G, 8).invariants == schur_multiplier(G, 16).invariants == [2]


def test_wreath_product_multiplier():
    # Z3 wr Z3 (maximal class, order 81); Blackburn's wreath formula gives Z3
    from schurlab.catalog import wreath_p4

    assert schur_multiplier(wreath_p4(3)).invariants == [3]


def test_bockstein_image_is_hom_dual():
    G = named("Z2xZ4")
    _, gens, order = bockstein_image(G, 8)
    assert order == 8  # |Hom(G, Z/8)| = |G|


@pytest.mark.parametrize("name", ["Z2^2", "D8", "Q8", "Z3^2", "E27+", "Z4oZ4"])
def test_cocycle_identity_on_all_representatives(name):
    G = named(name)
    H = cohomology(G, G.order, rational=False)
    assert H.reps, "expected at least one class"
    for r in H.reps:
        assert r.is_normalized() and r.is_cocycle()
    assert not any(H.decompose(H.zero()))


def test_decompose_round_trip():
    G = named("Z2^3")
    H = cohomology(G, 8)
    rng = np.random.default_rng(3)
    for _ in range(10):
        c = tuple(int(rng.integers(0, d)) for d in H.structure.orders)
        assert H.decompose(H.cocycle(c)) == c


def _random_coboundary(G, m, rng):
    phi = rng.integers(0, m, G.order)
    phi[0] = 0
    return coboundary(G, m, phi)


INSTANCES = {"heis-elem": lambda: heis_elementary(3, 1), "D8oD8": lambda: extraspecial_pair(2, "+"), "Q8oZ4": q8_o_z4}


@pytest.mark.parametrize("label", list(INSTANCES))
def test_psi_nu_class_invariance(label):
    data = INSTANCES[label]()
    G = data.G
    m = G.order
    Z = center(G)
    H = cohomology(G, m)
    rng = np.random.default_rng(7)
    for rep in H.reps:
        base_psi, base_nu = psi(rep, Z), nu(rep, data.H_emb, data.K_emb)
        for _ in range(100):
            f = rep + _random_coboundary(G, m, rng)
            assert f.is_cocycle()
            assert psi(f, Z) == base_psi
            assert nu(f, data.H_emb, data.K_emb) == base_nu


@pytest.mark.parametrize("name", ["D8", "Q8", "E27+", "2^(1+4)-"])
def test_transgression_section_independence(name):
    G = named(name)
    N = center(G)
    Q, proj = quotient(G, N)
    m = G.order
    HQ = cohomology(Q, m)
    nb = abelian_subgroup_basis(N)
    beta = np.zeros(G.order, dtype=np.int64)
    d = nb.structure.orders[0]
    beta[list(N.elements)] = nb.coords[list(N.elements), 0] * (m // d)
    # two sections: least and greatest representative of each coset
    lo = np.full(Q.order, -1)
    hi = np.full(Q.order, -1)
    for x in range(G.order):
        q = proj.image[x]
        lo[q] = x if lo[q] < 0 else lo[q]
        hi[q] = x
    hi[0] = 0
    f1 = transgress(beta, proj, N, m, section=lo)
    f2 = transgress(beta, proj, N, m, section=hi)
    assert f1.is_cocycle() and f2.is_cocycle()
    assert not (lo == hi).all()
    assert HQ.decompose(f1) == HQ.decompose(f2)
    # a transgressed central extension class is nonzero and inflates to zero
    assert any(HQ.decompose(f1))
    assert cohomology(G, m).is_trivial_class(pullback_cocycle(f1, proj))


def test_transgression_rejects_bad_input():
    G = named("D8")
    N = center(G)
    _, proj = quotient(G, N)
    with pytest.raises(CohomologyError):
        transgress(np.arange(G.order), proj, N, 8, section=np.zeros(4, dtype=int))


def test_restriction_functoriality():
    # inversion on Z4 acts as -1 on H^2(Z4, Z/4) = Z4 (it is -1 on Hom(Z4, Q/Z))
    Z4 = build_cyclic(4)
    H = cohomology(Z4, 4, rational=False)
    neg = GroupMap(Z4, Z4, [0, 3, 2, 1])
    f = induced_map_on_h2(lambda c: pullback_cocycle(c, neg), H, H, check_coboundaries=20)
    assert f.columns() == [(3,)]


def test_cocycle_arithmetic():
    G = named("Z2^2")
    a = Cocycle2.zero(G, 4)
    b = coboundary(G, 4, [0, 1, 2, 3])
    assert (a + b - b).is_zero()
    assert (b.scale(4)).is_zero()
    assert (-b + b).is_zero()
