"""Brute-force integral ``H_2(G, Z)`` from the normalized bar complex.

This is deliberately independent of :mod:`schurlab.cohomology`: it never
touches cocycles, moduli or Bocksteins, only integer boundary matrices.
Since ``C_2 / ker d_2`` embeds in the free module ``C_1``, the finite group
``H_2 = ker d_2 / im d_3`` is exactly the torsion of ``coker d_3``, i.e. the
non-unit elementary divisors of ``d_3``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abelian import FinAbGroup, diagonal, from_invariants, normalize_invariants, smith_normal_form
from .groups import CayleyTable, SizeGuardError

ORACLE_MAX = 16
ORACLE_MAX_SLOW = 32
_GROWTH_LIMIT = 1 << 40


@dataclass(frozen=True, eq=False)
class BarComplexSlice:
    """``d_2 : C_2 -> C_1`` and ``d_3 : C_3 -> C_2`` on non-identity bar symbols.

    Column ``c`` of ``boundary3`` is the boundary of the symbol with index
    ``c`` in row-major order over ``(x, y, z)``, elements shifted down by one.
    """

    group: CayleyTable
    boundary2: np.ndarray
    boundary3: np.ndarray

    def is_complex(self) -> bool:
        prod = self.boundary2.astype(np.int64) @ self.boundary3.astype(np.int64)
        return not prod.any()


def bar_complex(G: CayleyTable, slow: bool = False) -> BarComplexSlice:
    _guard(G, slow)
    n = G.order
    r = n - 1
    mul = G.mul
    # d_2 [x|y] = [y] - [xy] + [x]
    d2 = np.zeros((r, r * r), dtype=np.int8)
    x, y = np.divmod(np.arange(r * r), r)
    x, y = x + 1, y + 1
    cols = np.arange(r * r)
    np.add.at(d2, (y - 1, cols), 1)
    xy = mul[x, y]
    nz = xy != 0
    np.add.at(d2, (xy[nz] - 1, cols[nz]), -1)
    np.add.at(d2, (x - 1, cols), 1)
    # d_3 [x|y|z] = [y|z] - [xy|z] + [x|yz] - [x|y]
    d3 = np.zeros((r * r, r**3), dtype=np.int8)
    idx = np.arange(r**3)
    x, rest = np.divmod(idx, r * r)
    y, z = np.divmod(rest, r)
    x, y, z = x + 1, y + 1, z + 1

    def sym(a, b):
        return (a - 1) * r + (b - 1)

    np.add.at(d3, (sym(y, z), idx), 1)
    xy = mul[x, y]
    nz = xy != 0
    np.add.at(d3, (sym(xy[nz], z[nz]), idx[nz]), -1)
    yz = mul[y, z]
    nz = yz != 0
    np.add.at(d3, (sym(x[nz], yz[nz]), idx[nz]), 1)
    np.add.at(d3, (sym(x, y), idx), -1)
    return BarComplexSlice(G, d2, d3)


def _guard(G: CayleyTable, slow: bool):
    limit = ORACLE_MAX_SLOW if slow else ORACLE_MAX
    if G.order > limit:
        raise SizeGuardError(f"homology oracle limited to order {limit} (got {G.order})")


def _unit_pivot_reduce(A: np.ndarray) -> np.ndarray:
    """Eliminate unit pivots (elementary divisors 1) and return the remainder.

    Each step replaces ``A`` by a Schur complement of a +-1 entry, which
    preserves the non-unit elementary divisors.
    """
    A = np.asarray(A, dtype=np.int64)
    A = A[:, A.any(axis=0)]
    A = np.unique(A, axis=1)  # duplicate columns do not change the column span
    while A.size:
        hits = np.argwhere(np.abs(A) == 1)
        if hits.size == 0:
            break
        # prefer the sparsest row to limit fill-in
        weight = np.count_nonzero(A, axis=1)[hits[:, 0]]
        i, j = hits[int(np.argmin(weight))]
        piv = int(A[i, j])
        col = A[:, j].copy()
        row = A[i].copy() * piv  # A[i,j] * piv == 1
        nzc = np.flatnonzero(row)
        nzr = np.flatnonzero(col)
        A[np.ix_(nzr, nzc)] -= np.outer(col[nzr], row[nzc])
        keep_r = np.ones(A.shape[0], dtype=bool)
        keep_r[i] = False
        keep_c = np.ones(A.shape[1], dtype=bool)
        keep_c[j] = False
        A = A[keep_r][:, keep_c]
        if A.size:
            A = A[:, A.any(axis=0)]
            A = A[A.any(axis=1)]
        if A.size and np.abs(A).max() > _GROWTH_LIMIT:
            raise OverflowError("entry growth in unit-pivot elimination")
    return A


def elementary_divisors_of(A: np.ndarray) -> list[int]:
    """Non-unit, nonzero elementary divisors of an integer matrix."""
    R = _unit_pivot_reduce(A)
    if R.size == 0:
        return []
    R = np.unique(R, axis=1)
    S, _, _ = smith_normal_form(R.tolist(), want_u=False, want_v=False)
    return [abs(d) for d in diagonal(S) if abs(d) > 1]


def h2_integral(G: CayleyTable, slow: bool = False) -> FinAbGroup:
    """``H_2(G, Z)`` (isomorphic to the Schur multiplier for finite ``G``)."""
    _guard(G, slow)
    if G.order == 1:
        return FinAbGroup(())
    bc = bar_complex(G, slow)
    divisors = elementary_divisors_of(bc.boundary3)
    return from_invariants(normalize_invariants(divisors))
