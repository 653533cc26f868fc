from __future__ import annotations

import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from schurlab.abelian import (
    AbelianMap,
    FinAbGroup,
    cyclic,
    diagonal,
    direct_sum,
    dual_map,
    embeds,
    from_invariants,
    hom_coords,
    hom_group,
    hom_values,
    invariants_of_presentation,
    kernel_image_cokernel,
    matmul,
    normalize_invariants,
    preimage_generators,
    quotient_map,
    quotient_structure,
    same_subgroup,
    smith_normal_form,
    solve,
    swap_map,
    tensor,
    tensor_map,
)

small_matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _is_unimodular(M) -> bool:
    return abs(sympy.Matrix(M).det()) == 1


@settings(max_examples=1000, deadline=None)
@given(small_matrices)
def test_snf_reconstruction(M):
    S, U, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == S
    assert _is_unimodular(U) and _is_unimodular(V)
    d = diagonal(S)
    for i in range(len(S)):
        for j in range(len(S[0])):
            if i != j:
                assert S[i][j] == 0
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert d[: len(nz)] == nz  # zeros trail


def test_snf_known():
    S, _, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert diagonal(S) == [2, 6, 12]


@pytest.mark.parametrize(
    "orders,expected",
    [((4, 6), [2, 12]), ((2, 3), [6]), ((1, 1), []), ((2, 4, 8), [2, 4, 8]), ((6, 10, 15), [30, 30])],
)
def test_normalize_invariants(orders, expected):
    assert normalize_invariants(orders) == expected


def test_presentation_invariants():
    # <x, y | 2x + 4y, 6x + 8y> = Z2 + Z4
    assert invariants_of_presentation([[2, 4], [6, 8]], 2).invariants == [2, 4]
    with pytest.raises(ValueError):
        invariants_of_presentation([], 1)  # free part


def test_tensor_and_hom():
    A, B = from_invariants([2, 4]), from_invariants([4, 6])
    assert tensor(A, B).invariants == [2, 2, 2, 4]
    assert hom_group(A, 24).invariants == A.invariants
    v = hom_values(A, 24, (1, 3))
    assert hom_coords(A, 24, v) == (1, 3)


@pytest.mark.parametrize(
    "a,b,expected",
    [([2], [4], True), ([4], [2, 2], False), ([2, 2], [2, 4], True), ([3, 3, 3], [9, 9], False), ([], [5], True)],
)
def test_embeds(a, b, expected):
    assert embeds(from_invariants(a), from_invariants(b)) is expected


@given(st.lists(st.sampled_from([2, 3, 4, 8, 9]), max_size=3), st.lists(st.sampled_from([2, 3, 4, 8, 9]), max_size=3))
def test_embeds_reflexive_and_sum(a, b):
    A, B = from_invariants(a), from_invariants(b)
    assert embeds(A, A)
    assert embeds(A, direct_sum(A, B))


def _elements(G: FinAbGroup):
    return list(itertools.product(*(range(d) for d in G.orders)))


def _random_map(rng, S: FinAbGroup, T: FinAbGroup) -> AbelianMap:
    # columns must respect orders: d_j * col_j = 0 in T
    cols = []
    for d in S.orders:
        col = []
        for e in T.orders:
            step = e // np.gcd(e, d)
            col.append(int(rng.integers(0, e)) // step * step % e)
        cols.append(col)
    return AbelianMap.from_columns(S, T, cols)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_kernel_image_counts(seed):
    rng = np.random.default_rng(seed)
    S = FinAbGroup(tuple(rng.choice([2, 4, 3], size=rng.integers(1, 3))))
    T = FinAbGroup(tuple(rng.choice([2, 4, 6], size=rng.integers(1, 3))))
    f = _random_map(rng, S, T)
    ker, im, coker = kernel_image_cokernel(f)
    imgs = {T.reduce(f(x)) for x in _elements(S)}
    kers = [x for x in _elements(S) if not any(T.reduce(f(x)))]
    assert im.order == len(imgs)
    assert ker.order == len(kers)
    assert coker.order * im.order == T.order
    for k in f.kernel_generators():
        assert not any(T.reduce(f(k)))
    for y in list(imgs)[:5]:
        x = solve(f, y)
        assert x is not None and T.reduce(f(x)) == y


def test_solve_unsolvable():
    f = AbelianMap.from_columns(cyclic(4), cyclic(4), [(2,)])
    assert solve(f, (1,)) is None


def test_quotient_map():
    T = FinAbGroup((4, 6))
    q = quotient_map(T, [(2, 3)])
    assert q.target.order == 12
    assert q.is_surjective()
    ker = q.kernel_generators()
    assert same_subgroup(T, ker, [(2, 3)])
    assert quotient_structure(T, [(2, 3)]).order == 12


def test_preimage_generators():
    f = AbelianMap.from_columns(cyclic(8), cyclic(4), [(1,)])
    pre = preimage_generators(f, [(2,)])
    assert same_subgroup(cyclic(8), pre, [(2,)])


def test_tensor_swap_and_dual():
    A, B = from_invariants([2, 4]), from_invariants([4])
    s = swap_map(A, B)
    assert (swap_map(B, A) @ s).equals(AbelianMap.identity(tensor(A, B)))
    f = AbelianMap.from_columns(cyclic(4), cyclic(2), [(1,)])
    fs = dual_map(f, 8)
    assert fs.is_injective() and not fs.is_surjective()
    g = tensor_map(f, AbelianMap.identity(cyclic(4)))
    assert g.target.invariants == [2]
    assert g.is_surjective()
