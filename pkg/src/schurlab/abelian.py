"""Finite abelian groups over exact integers.

Everything here works with plain Python ints (arbitrary precision), so no
overflow can occur; the matrices involved are small (tens of rows).  The large
modular systems of the cohomology engine live in :mod:`schurlab.modular`.

A finite abelian group is carried as a cyclic decomposition on a list of
generators (``FinAbGroup.orders``); ``invariants`` gives the canonical
invariant-factor form ``d1 | d2 | ...`` with the 1's dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Optional, Sequence

from sympy import factorint

Matrix = list  # list of rows of ints


class AbelianError(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(row[k] * B[k][j] for k in range(inner)) for j in range(cols)] for row in A]


def transpose(A: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


# --------------------------------------------------------------------------
# Smith normal form
# --------------------------------------------------------------------------


def smith_normal_form(M: Sequence[Sequence[int]], want_u: bool = True, want_v: bool = True):
    """Return ``(S, U, V)`` with ``S = U M V`` diagonal and ``s_i | s_{i+1}``.

    Pivoting is on the entry of least absolute value.  ``U`` (resp. ``V``) is
    ``None`` when not requested; skipping ``U`` matters for tall relation
    matrices.  Diagonal entries are made non-negative.
    """
    A = [list(map(int, row)) for row in M]
    r = len(A)
    c = len(A[0]) if r else 0
    U = identity(r) if want_u else None
    V = identity(c) if want_v else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        if q == 0:
            return
        a, b = A[dst], A[src]
        for k in range(c):
            if b[k]:
                a[k] += q * b[k]
        if U is not None:
            a, b = U[dst], U[src]
            for k in range(r):
                if b[k]:
                    a[k] += q * b[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        if q == 0:
            return
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    t = 0
    while t < min(r, c):
        best = None
        for i in range(t, r):
            row = A[i]
            for j in range(t, c):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, c):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t onto the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, r) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, c) if A[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            # divisibility: the pivot must divide the whole remaining block
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


def diagonal(S: Matrix) -> list[int]:
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def invert_unimodular(V: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix (Gauss-Jordan over Q)."""
    from fractions import Fraction

    n = len(V)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(V)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    out = [[int(x) for x in row[n:]] for row in A]
    for row, orig in zip(out, A):
        assert all(x.denominator == 1 for x in orig[n:])
    return out


# --------------------------------------------------------------------------
# Finite abelian groups
# --------------------------------------------------------------------------


def elementary_divisors(orders: Sequence[int]) -> list[int]:
    out = []
    for d in orders:
        if d == 0:
            raise AbelianError("infinite cyclic factor")
        for p, e in factorint(int(d)).items():
            out.append(p**e)
    return sorted(out)


def normalize_invariants(orders: Sequence[int]) -> list[int]:
    """Invariant factors (ascending, divisibility chain, 1's dropped)."""
    by_prime: dict[int, list[int]] = {}
    for q in elementary_divisors(orders):
        p = next(iter(factorint(q)))
        by_prime.setdefault(p, []).append(q)
    if not by_prime:
        return []
    length = max(len(v) for v in by_prime.values())
    inv = [1] * length
    for qs in by_prime.values():
        qs = sorted(qs, reverse=True)
        for i, q in enumerate(qs):
            inv[length - 1 - i] *= q
    return inv


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group ``Z/orders[0] + Z/orders[1] + ...``.

    ``basis`` optionally records what each generator is in some ambient
    object (group elements, tensor pairs, ...); it is provenance only.
    """

    orders: tuple = ()
    basis: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        if any(d < 1 for d in self.orders):
            raise AbelianError(f"orders must be positive: {self.orders}")

    @property
    def invariants(self) -> list[int]:
        return normalize_invariants(self.orders)

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        e = 1
        for d in self.orders:
            e = e * d // gcd(e, d)
        return e

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def is_trivial(self) -> bool:
        return self.order == 1

    def isomorphic(self, other: "FinAbGroup") -> bool:
        return self.invariants == other.invariants

    def reduce(self, x: Sequence[int]) -> tuple:
        return tuple(int(a) % d for a, d in zip(x, self.orders))

    def __add__(self, other: "FinAbGroup") -> "FinAbGroup":
        return direct_sum(self, other)

    def __str__(self):
        inv = self.invariants
        return "trivial" if not inv else " x ".join(f"Z{d}" for d in inv)


def direct_sum(*groups: FinAbGroup) -> FinAbGroup:
    orders, basis = [], []
    for G in groups:
        orders.extend(G.orders)
        basis.extend(G.basis or [None] * G.ngens)
    return FinAbGroup(tuple(orders), tuple(basis))


def cyclic(n: int) -> FinAbGroup:
    return FinAbGroup((n,)) if n > 1 else FinAbGroup(())


def from_invariants(inv: Sequence[int]) -> FinAbGroup:
    return FinAbGroup(tuple(d for d in inv if d != 1))


def invariants_of_presentation(rel: Sequence[Sequence[int]], ngens: int) -> FinAbGroup:
    """Structure of ``Z^ngens / rowspan(rel)``; a free part is an error."""
    rows = [list(r) for r in rel if any(r)]
    if not rows:
        if ngens:
            raise AbelianError("presentation has free rank > 0")
        return FinAbGroup(())
    S, _, _ = smith_normal_form(rows, want_u=False, want_v=False)
    d = diagonal(S)
    d += [0] * (ngens - len(d))
    if any(x == 0 for x in d):
        raise AbelianError("presentation has free rank > 0")
    return from_invariants(normalize_invariants([x for x in d if x != 1]))


def tensor(A: FinAbGroup, B: FinAbGroup) -> FinAbGroup:
    """Abelian tensor product on the generator pairs ``(i, j)``."""
    orders, basis = [], []
    for i, a in enumerate(A.orders):
        for j, b in enumerate(B.orders):
            orders.append(gcd(a, b))
            basis.append((i, j))
    return FinAbGroup(tuple(orders), tuple(basis))


def hom_group(A: FinAbGroup, m: int) -> FinAbGroup:
    """``Hom(A, Q/Z)`` realized inside ``Hom(A, Z/m)``.

    Basis element ``i`` is the homomorphism sending generator ``i`` of ``A`` to
    ``m / orders[i]`` (an element of order ``orders[i]``) and the others to 0.
    """
    if m % A.exponent:
        raise AbelianError(f"exponent {A.exponent} does not divide modulus {m}")
    return FinAbGroup(A.orders, tuple(("dual", i) for i in range(A.ngens)))


def hom_values(A: FinAbGroup, m: int, coords: Sequence[int]) -> list[int]:
    """Values in Z/m on the generators of ``A`` of the hom with given coordinates."""
    return [(c * (m // d)) % m for c, d in zip(coords, A.orders)]


def hom_coords(A: FinAbGroup, m: int, values: Sequence[int]) -> tuple:
    out = []
    for v, d in zip(values, A.orders):
        v %= m
        step = m // d
        if v % step:
            raise AbelianError("value does not define a homomorphism on this generator")
        out.append((v // step) % d)
    return tuple(out)


def embeds(A: FinAbGroup, B: FinAbGroup) -> bool:
    """Subgroup-embedding criterion by counting factors divisible by ``p^k``."""
    ea, eb = elementary_divisors(A.orders), elementary_divisors(B.orders)
    for q in set(ea):
        p, e = next(iter(factorint(q).items()))
        for k in range(1, e + 1):
            pk = p**k
            if sum(1 for x in ea if x % pk == 0) > sum(1 for x in eb if x % pk == 0):
                return False
    return True


# --------------------------------------------------------------------------
# Maps
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianMap:
    """Homomorphism given by an integer matrix; column ``j`` is the image of
    source generator ``j`` in target coordinates."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: tuple

    def __post_init__(self):
        rows = tuple(
            tuple(int(x) % d for x in row) for row, d in zip(self.matrix, self.target.orders)
        )
        if len(rows) != self.target.ngens or any(len(r) != self.source.ngens for r in rows):
            raise AbelianError("matrix shape does not match groups")
        object.__setattr__(self, "matrix", rows)
        for j, a in enumerate(self.source.orders):
            for i, b in enumerate(self.target.orders):
                if (rows[i][j] * a) % b:
                    raise AbelianError(f"ill-defined map: generator {j} of order {a}")

    @classmethod
    def from_columns(cls, source, target, columns) -> "AbelianMap":
        cols = [list(c) for c in columns]
        mat = [[cols[j][i] for j in range(source.ngens)] for i in range(target.ngens)]
        return cls(source, target, tuple(map(tuple, mat)))

    @classmethod
    def zero(cls, source, target) -> "AbelianMap":
        return cls(source, target, tuple((0,) * source.ngens for _ in range(target.ngens)))

    @classmethod
    def identity(cls, G) -> "AbelianMap":
        return cls(G, G, tuple(map(tuple, identity(G.ngens))))

    def columns(self) -> list[tuple]:
        return [tuple(self.matrix[i][j] for i in range(self.target.ngens)) for j in range(self.source.ngens)]

    def __call__(self, x: Sequence[int]) -> tuple:
        return self.target.reduce(
            [sum(self.matrix[i][j] * x[j] for j in range(self.source.ngens)) for i in range(self.target.ngens)]
        )

    def __matmul__(self, other: "AbelianMap") -> "AbelianMap":
        if other.target.orders != self.source.orders:
            raise AbelianError("composition of incompatible maps")
        return AbelianMap(other.source, self.target, tuple(map(tuple, matmul(self.matrix, other.matrix))))

    def __add__(self, other: "AbelianMap") -> "AbelianMap":
        return AbelianMap(
            self.source,
            self.target,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)),
        )

    def __neg__(self) -> "AbelianMap":
        return AbelianMap(self.source, self.target, tuple(tuple(-a for a in r) for r in self.matrix))

    def equals(self, other: "AbelianMap") -> bool:
        return (
            self.source.orders == other.source.orders
            and self.target.orders == other.target.orders
            and self.matrix == other.matrix
        )

    # structure ---------------------------------------------------------------

    def image_order(self) -> int:
        return subgroup_order(self.target, self.columns())

    def is_injective(self) -> bool:
        return self.image_order() == self.source.order

    def is_surjective(self) -> bool:
        return self.image_order() == self.target.order

    def kernel_generators(self) -> list[tuple]:
        return _kernel_lattice(self)[0]


def block_diag(*maps: AbelianMap) -> AbelianMap:
    src = direct_sum(*(f.source for f in maps))
    tgt = direct_sum(*(f.target for f in maps))
    mat = zeros(tgt.ngens, src.ngens)
    r0 = c0 = 0
    for f in maps:
        for i, row in enumerate(f.matrix):
            for j, x in enumerate(row):
                mat[r0 + i][c0 + j] = x
        r0 += f.target.ngens
        c0 += f.source.ngens
    return AbelianMap(src, tgt, tuple(map(tuple, mat)))


def hstack(*maps: AbelianMap) -> AbelianMap:
    """``(f1, f2, ...)`` on a direct sum of sources into a common target."""
    src = direct_sum(*(f.source for f in maps))
    tgt = maps[0].target
    mat = [sum((list(f.matrix[i]) for f in maps), []) for i in range(tgt.ngens)]
    return AbelianMap(src, tgt, tuple(map(tuple, mat)))


def vstack(*maps: AbelianMap) -> AbelianMap:
    """``x -> (f1 x, f2 x, ...)`` from a common source into a direct sum."""
    tgt = direct_sum(*(f.target for f in maps))
    mat = [row for f in maps for row in f.matrix]
    return AbelianMap(maps[0].source, tgt, tuple(map(tuple, mat)))


def subgroup_order(target: FinAbGroup, gens: Sequence[Sequence[int]]) -> int:
    return target.order // quotient_structure(target, gens).order


def quotient_structure(target: FinAbGroup, gens: Sequence[Sequence[int]]) -> FinAbGroup:
    """Structure of ``target / <gens>``."""
    n = target.ngens
    if n == 0:
        return FinAbGroup(())
    rows = [list(g) for g in gens if any(g)]
    rows += [[d if i == j else 0 for j in range(n)] for i, d in enumerate(target.orders)]
    return invariants_of_presentation(rows, n)


def in_subgroup(target: FinAbGroup, gens: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    return subgroup_order(target, list(gens) + [list(x)]) == subgroup_order(target, gens)


def subgroup_contains(target: FinAbGroup, big: Sequence, small: Sequence) -> bool:
    return subgroup_order(target, list(big) + list(small)) == subgroup_order(target, big)


def _kernel_lattice(f: AbelianMap):
    """Generators of ``ker f`` and its structure.

    ``L = {x in Z^n : f(x) = 0}`` is found as the projection of the integer
    kernel of ``[M | diag(b)]``; then ``ker f = L / diag(a) Z^n``.
    """
    n, mm = f.source.ngens, f.target.ngens
    if n == 0:
        return [], FinAbGroup(())
    N = [list(f.matrix[i]) + [f.target.orders[i] if k == i else 0 for k in range(mm)] for i in range(mm)]
    if mm == 0:
        gens = identity(n)
    else:
        S, _, V = smith_normal_form(N, want_u=False)
        d = diagonal(S)
        rank = sum(1 for x in d if x)
        gens = [[V[i][j] for i in range(n)] for j in range(rank, n + mm)]
    gens = [g for g in gens if any(g)]
    # basis of L from its generators
    S, _, V = smith_normal_form(gens, want_u=False)
    d = diagonal(S)
    Vinv = invert_unimodular(V)
    basis = [[d[i] * x for x in Vinv[i]] for i in range(n)]
    # express a_i e_i in that basis: c = a_i e_i V diag(1/d)
    rel = [[(a * V[i][j]) // d[j] for j in range(n)] for i, a in enumerate(f.source.orders)]
    structure = invariants_of_presentation(rel, n)
    kgens = [f.source.reduce(b) for b in basis]
    return [k for k in kgens if any(k)], structure


def kernel_image_cokernel(f: AbelianMap):
    """Return ``(ker, im, coker)`` structures; ``|ker| |im| = |source|``."""
    ker = _kernel_lattice(f)[1]
    coker = quotient_structure(f.target, f.columns())
    im_order = f.target.order // coker.order
    # im = source / ker; compute structure from the lattice directly
    n = f.source.ngens
    if n == 0:
        im = FinAbGroup(())
    else:
        rows = [list(k) for k in _kernel_lattice(f)[0]]
        rows += [[d if i == j else 0 for j in range(n)] for i, d in enumerate(f.source.orders)]
        im = invariants_of_presentation(rows, n)
    assert im.order == im_order and ker.order * im.order == f.source.order
    return ker, im, coker


def solve(f: AbelianMap, y: Sequence[int]) -> Optional[tuple]:
    """Some ``x`` with ``f(x) = y``, or ``None`` if ``y`` is not in the image."""
    n, mm = f.source.ngens, f.target.ngens
    y = f.target.reduce(y)
    if not any(y):
        return (0,) * n
    if n == 0:
        return None
    N = [list(f.matrix[i]) + [f.target.orders[i] if k == i else 0 for k in range(mm)] for i in range(mm)]
    S, U, V = smith_normal_form(N)
    d = diagonal(S)
    Uy = [sum(U[i][k] * y[k] for k in range(mm)) for i in range(mm)]
    z = [0] * (n + mm)
    for i in range(mm):
        di = d[i] if i < len(d) else 0
        if di == 0:
            if Uy[i]:
                return None
        else:
            if Uy[i] % di:
                return None
            z[i] = Uy[i] // di
    x = [sum(V[i][j] * z[j] for j in range(n + mm)) for i in range(n)]
    x = f.source.reduce(x)
    assert f(x) == y
    return x


# --------------------------------------------------------------------------
# abelianization of table groups
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Abelianization:
    """``G/G'`` (or an abelian subgroup) with an explicit basis.

    ``structure.basis`` lists representative elements of ``group``;
    ``coords[x]`` is the coordinate vector of the class of ``x`` (rows of
    elements outside the subgroup, if any, are ``-1``).
    """

    group: object
    structure: FinAbGroup
    coords: object  # np.ndarray (order, ngens)

    @property
    def basis(self) -> tuple:
        return self.structure.basis


def _abelian_basis(Q, lift):
    """Basis of the abelian table ``Q``; ``lift`` maps Q-elements to the ambient group."""
    import numpy as np

    from .subgroups import minimal_generators

    n = Q.order
    if n == 1:
        return FinAbGroup((), ()), np.zeros((1, 0), dtype=np.int64)
    gens = minimal_generators(Q)
    r = len(gens)
    word = {0: [0] * r}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = int(Q.mul[x, g])
                if y not in word:
                    w = list(word[x])
                    w[i] += 1
                    word[y] = w
                    nxt.append(y)
        frontier = nxt
    rel = []
    seen = set()
    for x in range(n):
        for i, g in enumerate(gens):
            y = int(Q.mul[x, g])
            row = tuple(word[x][j] + (j == i) - word[y][j] for j in range(r))
            if any(row) and row not in seen:
                seen.add(row)
                rel.append(list(row))
    S, _, V = smith_normal_form(rel, want_u=False)
    d = diagonal(S) + [0] * max(0, r - len(rel))
    Vinv = invert_unimodular(V)
    keep = [j for j in range(r) if d[j] != 1]
    assert all(d[j] > 1 for j in keep), "abelian group is infinite?"
    basis = []
    for j in keep:
        e = 0
        for i, g in enumerate(gens):
            for _ in range(Vinv[j][i] % n):
                e = int(Q.mul[e, g])
        basis.append(lift(e))
    W = np.array([word[x] for x in range(n)], dtype=object)
    Vk = np.array([[V[i][j] for j in keep] for i in range(r)], dtype=object)
    C = (W.dot(Vk) if keep else np.zeros((n, 0), dtype=object))
    mods = np.array([d[j] for j in keep], dtype=object)
    coords = (C % mods if keep else C).astype(np.int64)
    return FinAbGroup(tuple(d[j] for j in keep), tuple(basis)), coords


def abelianization(G) -> Abelianization:
    """``G/G'`` with basis representatives in ``G`` and the element-class map."""
    from .subgroups import derived_subgroup, quotient

    Gp = derived_subgroup(G)
    Q, proj = quotient(G, Gp)
    section = {}
    for x in range(G.order):
        section.setdefault(int(proj.image[x]), x)
    structure, qcoords = _abelian_basis(Q, lambda e: section[e])
    return Abelianization(G, structure, qcoords[proj.image])


def abelian_subgroup_basis(S) -> Abelianization:
    """Basis of an abelian subgroup ``S`` (coordinates ``-1`` off ``S``)."""
    import numpy as np

    T, inc = S.table()
    if not T.is_abelian():
        raise AbelianError("subgroup is not abelian")
    structure, tcoords = _abelian_basis(T, lambda e: int(inc.image[e]))
    coords = np.full((S.parent.order, structure.ngens), -1, dtype=np.int64)
    coords[inc.image] = tcoords
    return Abelianization(S.parent, structure, coords)


# --------------------------------------------------------------------------
# functorial constructions on maps
# --------------------------------------------------------------------------


def tensor_map(f: AbelianMap, g: AbelianMap) -> AbelianMap:
    """``f (x) g`` between tensor products built by :func:`tensor`."""
    src, tgt = tensor(f.source, g.source), tensor(f.target, g.target)
    cols = []
    for i, j in src.basis:
        col = []
        for k, l in tgt.basis:
            col.append(f.matrix[k][i] * g.matrix[l][j])
        cols.append(col)
    return AbelianMap.from_columns(src, tgt, cols)


def swap_map(A: FinAbGroup, B: FinAbGroup) -> AbelianMap:
    """``a (x) b -> b (x) a``."""
    src, tgt = tensor(A, B), tensor(B, A)
    pos = {pair: n for n, pair in enumerate(tgt.basis)}
    cols = []
    for i, j in src.basis:
        col = [0] * tgt.ngens
        col[pos[(j, i)]] = 1
        cols.append(col)
    return AbelianMap.from_columns(src, tgt, cols)


def dual_map(f: AbelianMap, m: int) -> AbelianMap:
    """``f^* : Hom(target, Q/Z) -> Hom(source, Q/Z)`` in :func:`hom_group` bases."""
    cols = []
    for e, o in enumerate(f.target.orders):
        vals = [(f.matrix[e][i] * (m // o)) % m for i in range(f.source.ngens)]
        cols.append(hom_coords(f.source, m, vals))
    return AbelianMap.from_columns(hom_group(f.target, m), hom_group(f.source, m), cols)


def preimage_generators(f: AbelianMap, gens: Sequence[Sequence[int]]) -> list[tuple]:
    """Generators of ``f^-1(<gens>)``."""
    gens = [list(g) for g in gens if any(g)]
    if not gens:
        return f.kernel_generators()
    e = max(f.target.exponent, 1)
    aux = FinAbGroup((e,) * len(gens))
    s = AbelianMap.from_columns(aux, f.target, gens)
    both = hstack(f, s)
    n = f.source.ngens
    out = [f.source.reduce(k[:n]) for k in both.kernel_generators()]
    return [x for x in out if any(x)]


def same_subgroup(target: FinAbGroup, gens1: Sequence, gens2: Sequence) -> bool:
    return subgroup_contains(target, gens1, gens2) and subgroup_contains(target, gens2, gens1)


def image_generators(f: AbelianMap) -> list[tuple]:
    return [c for c in f.columns() if any(c)]


def sum_embedding(parts: Sequence[FinAbGroup], index: int, x: Sequence[int]) -> tuple:
    """``x`` placed in summand ``index`` of ``direct_sum(*parts)``."""
    out: list[int] = []
    for n, P in enumerate(parts):
        out.extend(x if n == index else [0] * P.ngens)
    return tuple(out)


def quotient_map(target: FinAbGroup, gens: Sequence[Sequence[int]]) -> AbelianMap:
    """Projection ``target -> target / <gens>`` onto an SNF-adapted basis."""
    n = target.ngens
    if n == 0:
        return AbelianMap(target, FinAbGroup(()), ())
    rows = [list(g) for g in gens if any(g)]
    rows += [[d if i == j else 0 for j in range(n)] for i, d in enumerate(target.orders)]
    S, _, V = smith_normal_form(rows, want_u=False)
    d = diagonal(S)
    keep = [i for i in range(n) if d[i] != 1]
    Q = FinAbGroup(tuple(d[i] for i in keep))
    mat = tuple(tuple(V[j][i] for j in range(n)) for i in keep)
    return AbelianMap(target, Q, mat)
