"""Linear algebra over ``Z/p^k``.

``Z/p^k`` is a chain ring: every element is ``p^v * unit``, and the ideals are
totally ordered.  Pivoting on an entry of least ``p``-valuation therefore
always clears its row and column exactly, which gives both an echelon form
(row module with at most ``ncols`` generators) and a Smith form with explicit
column transforms.  Entries stay below ``q = p^k``; arrays are ``int64``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def _tables(p: int, k: int):
    q = p**k
    x = np.arange(q, dtype=np.int64)
    val = np.zeros(q, dtype=np.int64)
    val[0] = k
    unit = np.ones(q, dtype=np.int64)
    for i in range(1, q):
        v, u = 0, i
        while u % p == 0:
            u //= p
            v += 1
        val[i] = v
        unit[i] = pow(u, -1, q)
    return val, unit


def valuations(a: np.ndarray, p: int, k: int) -> np.ndarray:
    return _tables(p, k)[0][a]


@dataclass
class SmithMod:
    """``A V`` is row-equivalent to ``diag(p^vals)`` (``vals[i] == k`` means 0).

    ``vals`` has one entry per column of ``A``.
    """

    p: int
    k: int
    vals: np.ndarray
    V: np.ndarray
    Vinv: np.ndarray

    @property
    def q(self) -> int:
        return self.p**self.k


def smith_mod(A: np.ndarray, p: int, k: int, track: bool = True) -> SmithMod:
    """Smith form of ``A`` over ``Z/p^k`` by least-valuation full pivoting."""
    q = p**k
    val, unit = _tables(p, k)
    A = np.array(A, dtype=np.int64) % q
    r, c = A.shape
    V = np.eye(c, dtype=np.int64) if track else None
    Vinv = np.eye(c, dtype=np.int64) if track else None
    vals = np.full(c, k, dtype=np.int64)
    for t in range(min(r, c)):
        sub = A[t:, t:]
        sv = val[sub]
        flat = int(np.argmin(sv))
        i, j = divmod(flat, sub.shape[1])
        v = int(sv[i, j])
        if v >= k:
            break
        i += t
        j += t
        if i != t:
            A[[t, i]] = A[[i, t]]
        if j != t:
            A[:, [t, j]] = A[:, [j, t]]
            if track:
                V[:, [t, j]] = V[:, [j, t]]
                Vinv[[t, j]] = Vinv[[j, t]]
        A[t, t:] = (A[t, t:] * unit[A[t, t]]) % q
        pv = p**v
        col = A[t + 1 :, t] // pv
        nz = np.flatnonzero(col)
        if nz.size:
            rows = t + 1 + nz
            A[rows, t:] = (A[rows, t:] - np.outer(col[nz], A[t, t:])) % q
        row = A[t, t + 1 :] // pv
        A[t, t + 1 :] = 0
        if track and row.any():
            V[:, t + 1 :] = (V[:, t + 1 :] - np.outer(V[:, t], row)) % q
            Vinv[t, :] = (Vinv[t, :] + row @ Vinv[t + 1 :, :]) % q
        vals[t] = v
    return SmithMod(p, k, vals, V, Vinv)


@dataclass
class Submodule:
    """A submodule of ``(Z/q)^n`` with a basis of cyclic generators.

    ``gens[i]`` has order ``p^orders_exp[i]``; ``coords`` recovers the
    coefficients of a member on that basis.
    """

    p: int
    k: int
    gens: np.ndarray  # (g, n)
    order_exps: np.ndarray  # (g,)
    _Vinv: np.ndarray
    _index: np.ndarray  # positions into Vinv rows
    _shift: np.ndarray  # p^(k - val)
    _unit_rows: np.ndarray  # Vinv rows that must vanish on members

    @property
    def q(self) -> int:
        return self.p**self.k

    def coords(self, u: np.ndarray, check: bool = True) -> np.ndarray:
        """Coefficients of ``u`` (or rows of ``u``) on ``gens``."""
        q = self.q
        u = np.atleast_2d(np.asarray(u, dtype=np.int64) % q)
        y = (u @ self._Vinv.T) % q
        if check:
            if self._unit_rows.size and y[:, self._unit_rows].any():
                raise ValueError("vector is not in the submodule")
            if (y[:, self._index] % self._shift).any():
                raise ValueError("vector is not in the submodule")
        return (y[:, self._index] // self._shift) % (self.p**self.order_exps)

    def contains(self, u: np.ndarray) -> np.ndarray:
        q = self.q
        u = np.atleast_2d(np.asarray(u, dtype=np.int64) % q)
        y = (u @ self._Vinv.T) % q
        ok = ~(y[:, self._index] % self._shift).any(axis=1)
        if self._unit_rows.size:
            ok &= ~y[:, self._unit_rows].any(axis=1)
        return ok


def kernel_mod(sm: SmithMod) -> Submodule:
    """Kernel of the matrix whose Smith data is ``sm``."""
    p, k = sm.p, sm.k
    keep = np.flatnonzero(sm.vals > 0)
    shift = p ** (k - sm.vals[keep])
    gens = (sm.V[:, keep] * shift[None, :]).T % (p**k)
    return Submodule(
        p, k, gens, sm.vals[keep].copy(), sm.Vinv, keep, shift, np.flatnonzero(sm.vals == 0)
    )


@dataclass
class QuotientMod:
    """``Z / R`` for a submodule ``Z`` (with basis) and relations ``R``.

    Nontrivial cyclic factors ``p^exps[j]`` with representatives ``reps[j]``
    expressed in the ambient ``(Z/q)^n``.
    """

    p: int
    k: int
    exps: np.ndarray
    reps: np.ndarray
    basis: Submodule
    _V2: np.ndarray
    _cols: np.ndarray

    def coords(self, u: np.ndarray) -> np.ndarray:
        c = self.basis.coords(u)
        x = (c @ self._V2) % self.basis.q
        return (x[:, self._cols] % (self.p ** self.exps)).astype(np.int64)


def quotient_mod(Z: Submodule, relations: np.ndarray) -> QuotientMod:
    """Structure of ``Z / <relations>`` (relations given as ambient vectors)."""
    p, k, q = Z.p, Z.k, Z.q
    g = Z.gens.shape[0]
    rows = [np.diag(p**Z.order_exps % q)]
    if relations is not None and len(relations):
        rows.append(Z.coords(relations))
    R = np.vstack(rows) if g else np.zeros((0, 0), dtype=np.int64)
    if g == 0:
        return QuotientMod(p, k, np.zeros(0, np.int64), np.zeros((0, Z.gens.shape[1]), np.int64), Z, np.zeros((0, 0), np.int64), np.zeros(0, np.int64))
    sm = smith_mod(R, p, k)
    cols = np.flatnonzero(sm.vals > 0)
    # generator j of the quotient is e_j V^-1 in Z-basis coordinates
    coeffs = sm.Vinv[cols] % q
    reps = (coeffs @ Z.gens) % q
    return QuotientMod(p, k, sm.vals[cols].copy(), reps, Z, sm.V, cols)


def compress_rows(blocks, ncols: int, p: int, k: int, extra: int = 24, seed: int = 0) -> np.ndarray:
    """Random ``Z/q``-combinations of all rows produced by ``blocks()``.

    With ``ncols + extra`` combinations the row module is recovered with
    overwhelming probability; callers must verify (see ``kernel_of_rows``).
    Products are accumulated in float64, which is exact while
    ``rows_per_block * q^2 < 2^53``.
    """
    q = p**k
    rng = np.random.default_rng(seed)
    r = ncols + extra
    acc = np.zeros((r, ncols), dtype=np.float64)
    for block in blocks():
        if block.shape[0] == 0:
            continue
        assert block.shape[0] * q * q < 2**53
        R = rng.integers(0, q, size=(r, block.shape[0])).astype(np.float64)
        acc += R @ block.astype(np.float64)
        acc = np.fmod(acc, q)
    return acc.astype(np.int64) % q


def kernel_of_rows(blocks, ncols: int, p: int, k: int, seed: int = 0) -> Submodule:
    """Exact kernel of the (huge) matrix whose rows come from ``blocks()``.

    The row module is compressed randomly, then the kernel candidate is
    checked against every original row; on failure more rows are drawn.
    """
    q = p**k
    extra = 24
    for attempt in range(6):
        C = compress_rows(blocks, ncols, p, k, extra=extra, seed=seed + attempt)
        K = kernel_mod(smith_mod(C, p, k))
        if K.gens.shape[0] == 0:
            return K
        Kt = K.gens.T.astype(np.float64)
        ok = True
        for block in blocks():
            if block.shape[0] == 0:
                continue
            if np.fmod(block.astype(np.float64) @ Kt, q).any():
                ok = False
                break
        if ok:
            return K
        extra *= 2
    raise RuntimeError("randomized row compression failed repeatedly")
