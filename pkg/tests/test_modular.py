from __future__ import annotations

import itertools

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from schurlab.modular import kernel_mod, kernel_of_rows, quotient_mod, smith_mod

moduli = st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (5, 1)])


def _brute_kernel_size(A, q):
    n = A.shape[1]
    return sum(1 for x in itertools.product(range(q), repeat=n) if not ((A @ np.array(x)) % q).any())


@settings(max_examples=80, deadline=None)
@given(moduli, st.integers(1, 4), st.integers(1, 3), st.integers(0, 10**6))
def test_kernel_matches_brute_force(pk, r, c, seed):
    p, k = pk
    q = p**k
    A = np.random.default_rng(seed).integers(0, q, size=(r, c))
    K = kernel_mod(smith_mod(A, p, k))
    assert not ((A @ K.gens.T) % q).any()
    size = int(np.prod([p**int(e) for e in K.order_exps])) if len(K.order_exps) else 1
    assert size == _brute_kernel_size(A, q)


@settings(max_examples=40, deadline=None)
@given(moduli, st.integers(0, 10**6))
def test_smith_transform_is_invertible(pk, seed):
    p, k = pk
    q = p**k
    A = np.random.default_rng(seed).integers(0, q, size=(3, 4))
    sm = smith_mod(A, p, k)
    assert ((sm.V @ sm.Vinv) % q == np.eye(4, dtype=np.int64)).all()


@settings(max_examples=40, deadline=None)
@given(moduli, st.integers(0, 10**6))
def test_submodule_coords_round_trip(pk, seed):
    p, k = pk
    q = p**k
    rng = np.random.default_rng(seed)
    A = rng.integers(0, q, size=(2, 4))
    K = kernel_mod(smith_mod(A, p, k))
    if K.gens.shape[0] == 0:
        return
    c = rng.integers(0, q, size=K.gens.shape[0]) % (p**K.order_exps)
    u = (c @ K.gens) % q
    assert K.contains(u).all()
    assert (K.coords(u)[0] == c).all()


def test_quotient_structure():
    # (Z/9)^2 modulo <(3, 0)> has exponents [1 (order 3), 2 (order 9)]
    p, k = 3, 2
    K = kernel_mod(smith_mod(np.zeros((1, 2), dtype=np.int64), p, k))
    Q = quotient_mod(K, np.array([[3, 0]]))
    assert sorted(int(p**e) for e in Q.exps) == [3, 9]
    assert (Q.coords(np.array([[3, 0]])) == 0).all()


def test_kernel_of_rows_blocks():
    p, k = 2, 2
    rng = np.random.default_rng(1)
    A = rng.integers(0, 4, size=(60, 6))
    K = kernel_of_rows(lambda: iter([A[:30], A[30:]]), 6, p, k)
    K2 = kernel_mod(smith_mod(A, p, k))
    assert sorted(K.order_exps.tolist()) == sorted(K2.order_exps.tolist())
    assert not ((A @ K.gens.T) % 4).any()
