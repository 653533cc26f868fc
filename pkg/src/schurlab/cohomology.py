"""Second cohomology of finite groups by cocycle linear algebra.

Coefficients are ``Z/m`` (trivial action).  ``H^2(G, Q/Z)``, the Schur
multiplier, is realized as ``H^2(G, Z/m) / im(Bockstein)`` for a modulus with
``exp(G/G')`` and ``exp M(G)`` dividing ``m`` (``m = |G|`` always works); a
``Z/m`` cocycle ``f`` then stands for the ``Q/Z`` cocycle ``f/m``.

Reduction of the cocycle system
-------------------------------
Fix a generating set ``S`` and a breadth-first spanning tree of the Cayley
graph.  A normalized 2-cocycle is determined by its values ``u(x, s) =
f(x, s)``: the cocycle identity at ``(x, y, s)`` reads
``f(x, ys) = f(x, y) + f(xy, s) - f(y, s)`` and recovers every ``f(x, w)``
along tree edges.  Conversely the identity for all ``(x, y, s)`` with
``s in S`` implies it for all ``(x, y, z)`` (induct on the length of ``z``
using the coboundary of ``df``), so ``Z^2`` is the kernel of the remaining
non-tree equations, a system in ``(|G|-1)|S|`` unknowns.  That system is
solved over each ``Z/p^k`` factor of ``m`` (see :mod:`schurlab.modular`).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional, Sequence

import numpy as np
from sympy import factorint

from .abelian import (
    AbelianMap,
    FinAbGroup,
    abelian_subgroup_basis,
    abelianization,
    hom_coords,
    tensor,
)
from .groups import MAX_ORDER, CayleyTable, GroupError, GroupMap, SizeGuardError
from .modular import QuotientMod, Submodule, kernel_of_rows, quotient_mod
from .subgroups import Subgroup, minimal_generators, quotient

log = logging.getLogger(__name__)

MEMORY_BUDGET = 1_500_000_000  # bytes for the symbolic cocycle table


class CohomologyError(ValueError):
    pass


# --------------------------------------------------------------------------
# cochains
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Cocycle2:
    """Normalized 2-cochain ``G x G -> Z/m`` (values table, row = first argument)."""

    group: CayleyTable
    modulus: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64) % self.modulus
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        self._compatible(other)
        return Cocycle2(self.group, self.modulus, self.values + other.values)

    def __sub__(self, other: "Cocycle2") -> "Cocycle2":
        self._compatible(other)
        return Cocycle2(self.group, self.modulus, self.values - other.values)

    def __neg__(self) -> "Cocycle2":
        return Cocycle2(self.group, self.modulus, -self.values)

    def scale(self, c: int) -> "Cocycle2":
        return Cocycle2(self.group, self.modulus, self.values * int(c))

    def _compatible(self, other):
        if other.modulus != self.modulus or other.group != self.group:
            raise CohomologyError("cochains live on different groups or moduli")

    def is_normalized(self) -> bool:
        return not self.values[0].any() and not self.values[:, 0].any()

    def is_cocycle(self) -> bool:
        return self.is_normalized() and cocycle_defect(self) == 0

    def is_zero(self) -> bool:
        return not self.values.any()

    def serialize(self) -> dict:
        return {"order": self.group.order, "modulus": self.modulus, "values": self.values.ravel().tolist()}

    @classmethod
    def zero(cls, G: CayleyTable, m: int) -> "Cocycle2":
        return cls(G, m, np.zeros((G.order, G.order), dtype=np.int64))


def cocycle_defect(f: Cocycle2) -> int:
    """Number of triples violating ``f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0``."""
    G, v, m = f.group, f.values, f.modulus
    n = G.order
    bad = 0
    chunk = max(1, 4_000_000 // (n * n))
    for x0 in range(0, n, chunk):
        xs = np.arange(x0, min(n, x0 + chunk))
        xy = G.mul[xs]  # (c, n)
        t = v[None, :, :] - v[xy] + v[xs[:, None, None], G.mul[None, :, :]] - v[xs][:, :, None]
        bad += int(np.count_nonzero(t % m))
    return bad


def coboundary(G: CayleyTable, m: int, phi: Sequence[int]) -> Cocycle2:
    """``(d phi)(x, y) = phi(y) - phi(xy) + phi(x)`` for ``phi(1) = 0``."""
    phi = np.asarray(phi, dtype=np.int64) % m
    if phi[0]:
        raise CohomologyError("normalized 1-cochains vanish at the identity")
    return Cocycle2(G, m, phi[None, :] - phi[G.mul] + phi[:, None])


def pullback_cocycle(f: Cocycle2, h: GroupMap) -> Cocycle2:
    """``(h^* f)(x, y) = f(h(x), h(y))``: inflation along a projection,
    restriction along an inclusion."""
    if h.target != f.group:
        raise CohomologyError("map does not land in the cocycle's group")
    img = h.image
    return Cocycle2(h.source, f.modulus, f.values[img[:, None], img[None, :]])


def retarget(f: Cocycle2, m: int) -> Cocycle2:
    """Same ``Q/Z`` cocycle at a multiple modulus (``Z/m0 -> Z/m``, ``a -> a m/m0``)."""
    if m % f.modulus:
        raise CohomologyError("new modulus must be a multiple of the old one")
    return Cocycle2(f.group, m, f.values * (m // f.modulus))


# --------------------------------------------------------------------------
# primary engine
# --------------------------------------------------------------------------


class _PrimaryEngine:
    """Cocycles, coboundaries and Bockstein classes of ``G`` over ``Z/p^k``."""

    def __init__(self, G: CayleyTable, p: int, k: int):
        self.G, self.p, self.k, self.q = G, p, k, p**k
        n = G.order
        self.gens = minimal_generators(G) if n > 1 else []
        ns = len(self.gens)
        self.ncols = (n - 1) * ns
        self._tree()
        if n == 1:
            self.Z = None
            return
        need = n * n * self.ncols * 2
        if need > MEMORY_BUDGET:
            raise SizeGuardError(f"cocycle system for |G|={n} with {ns} generators needs {need >> 20} MiB")
        self.Z = self._cocycles()
        self.cob = self._coboundaries()
        self.bock = self._bocksteins()
        self.H2 = quotient_mod(self.Z, self.cob)
        self.QZ = quotient_mod(self.Z, np.vstack([self.cob, self.bock]) if len(self.bock) else self.cob)

    # -- structure ---------------------------------------------------------

    def col(self, x, s):
        return (np.asarray(x) - 1) * len(self.gens) + s

    def _tree(self):
        G = self.G
        n = G.order
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        order = [0]
        self.tree = []  # (w, y, s): w = y * gens[s]
        self.nontree = []  # (y, s, w)
        i = 0
        while i < len(order):
            y = order[i]
            i += 1
            for s, g in enumerate(self.gens):
                w = int(G.mul[y, g])
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
                    self.tree.append((w, y, s))
                else:
                    self.nontree.append((y, s, w))
        assert seen.all(), "generators do not generate"

    def _symbolic(self) -> np.ndarray:
        """``F[x, y]`` = coefficients of ``f(x, y)`` in the unknowns ``u``."""
        G, q = self.G, self.q
        n, c = G.order, self.ncols
        F = np.zeros((n, n, c), dtype=np.int16)
        xs = np.arange(n)
        for w, y, s in self.tree:
            F[:, w] = F[:, y]
            xy = G.mul[:, y]
            nz = xy != 0
            F[xs[nz], w, self.col(xy[nz], s)] += 1
            if y:
                F[:, w, self.col(y, s)] -= 1
            F[:, w] %= q
        return F

    def _cocycles(self) -> Submodule:
        G, q = self.G, self.q
        n, c = G.order, self.ncols
        F = self._symbolic()
        edges = self.nontree
        per = max(1, 8192 // max(1, n - 1))
        xs = np.arange(1, n)

        def blocks():
            for e0 in range(0, len(edges), per):
                chunk = edges[e0 : e0 + per]
                out = np.empty((len(chunk) * (n - 1), c), dtype=np.int32)
                for b, (y, s, w) in enumerate(chunk):
                    blk = F[1:, y].astype(np.int32) - F[1:, w]
                    xy = G.mul[xs, y]
                    nz = xy != 0
                    blk[np.flatnonzero(nz), self.col(xy[nz], s)] += 1
                    if y:
                        blk[:, self.col(y, s)] -= 1
                    out[b * (n - 1) : (b + 1) * (n - 1)] = blk % q
                yield out

        Z = kernel_of_rows(blocks, c, self.p, self.k)
        log.debug("Z^2 of order-%d group over Z/%d: %d generators", n, q, Z.gens.shape[0])
        return Z

    def _coboundaries(self) -> np.ndarray:
        G, q = self.G, self.q
        n, ns = G.order, len(self.gens)
        B = np.zeros((n - 1, self.ncols), dtype=np.int64)
        xs = np.arange(1, n)
        for s, g in enumerate(self.gens):
            cols = self.col(xs, s)
            B[xs - 1, cols] += 1
            B[g - 1, cols] += 1
            xg = G.mul[xs, g]
            nz = xg != 0
            B[xg[nz] - 1, cols[nz]] -= 1
        return B % q

    def _bocksteins(self) -> np.ndarray:
        G, q = self.G, self.q
        ab = abelianization(G)
        rows = []
        for i, d in enumerate(ab.structure.orders):
            g = gcd(d, q)
            if g == 1:
                continue
            phi = (ab.coords[:, i] * (q // g)) % q
            beta = (phi[:, None] + phi[None, :] - phi[G.mul]) // q
            rows.append(self.u_of(beta))
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.ncols)

    # -- conversions -------------------------------------------------------

    def u_of(self, values: np.ndarray) -> np.ndarray:
        return (np.asarray(values)[1:, self.gens] % self.q).ravel()

    def table_of(self, u: np.ndarray) -> np.ndarray:
        G, q = self.G, self.q
        n, ns = G.order, len(self.gens)
        U = np.zeros((n, max(ns, 1)), dtype=np.int64)
        if ns:
            U[1:] = np.asarray(u, dtype=np.int64).reshape(n - 1, ns)
        f = np.zeros((n, n), dtype=np.int64)
        for w, y, s in self.tree:
            f[:, w] = (f[:, y] + U[G.mul[:, y], s] - U[y, s]) % q
        return f


_ENGINES: dict = {}


def _engine(G: CayleyTable, p: int, k: int) -> _PrimaryEngine:
    key = (G.key, p, k)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _PrimaryEngine(G, p, k)
        _ENGINES[key] = eng
    return eng


def clear_cache() -> None:
    _ENGINES.clear()
    _GROUPS.clear()


# --------------------------------------------------------------------------
# cohomology groups
# --------------------------------------------------------------------------


@dataclass(eq=False)
class _Part:
    q: int
    engine: _PrimaryEngine
    quot: QuotientMod
    offset: int


@dataclass(eq=False)
class CohomologyGroup:
    """``H^2(G, Z/m)`` or, with ``rational=True``, ``H^2(G, Q/Z)`` realized at modulus ``m``.

    ``structure`` has one cyclic factor per entry of ``reps``; ``decompose``
    returns the coordinates of a cocycle's class in that basis.
    """

    group: CayleyTable
    modulus: int
    rational: bool
    structure: FinAbGroup
    reps: list
    parts: list = field(repr=False, default_factory=list)

    @property
    def invariants(self) -> list[int]:
        return self.structure.invariants

    @property
    def order(self) -> int:
        return self.structure.order

    def decompose(self, f: Cocycle2) -> tuple:
        if f.modulus != self.modulus or f.group != self.group:
            raise CohomologyError("cocycle does not belong to this context")
        out = [0] * self.structure.ngens
        for part in self.parts:
            q, m = part.q, self.modulus
            g = (f.values * pow(m // q, -1, q)) % q if m != q else f.values % q
            try:
                c = part.quot.coords(part.engine.u_of(g))[0]
            except ValueError as exc:
                raise CohomologyError("not a cocycle") from exc
            out[part.offset : part.offset + len(c)] = [int(x) for x in c]
        return tuple(out)

    def is_trivial_class(self, f: Cocycle2) -> bool:
        return not any(self.decompose(f))

    def cocycle(self, coords: Sequence[int]) -> Cocycle2:
        """Representative of the class with the given coordinates."""
        v = np.zeros((self.group.order, self.group.order), dtype=np.int64)
        for c, r in zip(coords, self.reps):
            if c:
                v = v + int(c) * r.values
        return Cocycle2(self.group, self.modulus, v)

    def zero(self) -> Cocycle2:
        return Cocycle2.zero(self.group, self.modulus)

    def serialize(self) -> dict:
        return {
            "order": self.group.order,
            "modulus": self.modulus,
            "coefficients": "Q/Z" if self.rational else f"Z/{self.modulus}",
            "invariants": self.invariants,
            "orders": list(self.structure.orders),
            "representatives": [r.values.ravel().tolist() for r in self.reps],
        }


_GROUPS: dict = {}


def _check_size(G: CayleyTable):
    if G.order > MAX_ORDER:
        raise SizeGuardError(f"group order {G.order} exceeds {MAX_ORDER}")


def _build(G: CayleyTable, m: int, rational: bool) -> CohomologyGroup:
    if m < 2:
        raise CohomologyError("modulus must be at least 2")
    _check_size(G)
    key = (G.key, m, rational)
    if key in _GROUPS:
        return _GROUPS[key]
    if rational:
        e = abelianization(G).structure.exponent
        if m % e:
            raise CohomologyError(f"exp(G/G') = {e} does not divide modulus {m}")
    orders, reps, parts = [], [], []
    divisors_of_G = set(factorint(G.order)) if G.order > 1 else set()
    for p, k in sorted(factorint(m).items()):
        if p not in divisors_of_G:
            continue  # H^2 of a finite group with coefficients of coprime order vanishes
        eng = _engine(G, p, k)
        if eng.Z is None:
            continue
        quot = eng.QZ if rational else eng.H2
        q = p**k
        parts.append(_Part(q, eng, quot, len(orders)))
        for e, u in zip(quot.exps, quot.reps):
            orders.append(p ** int(e))
            reps.append(Cocycle2(G, m, eng.table_of(u) * (m // q)))
    H = CohomologyGroup(G, m, rational, FinAbGroup(tuple(orders), tuple(range(len(orders)))), reps, parts)
    _GROUPS[key] = H
    return H


def h2(G: CayleyTable, m: int) -> CohomologyGroup:
    """``H^2(G, Z/m)`` with representatives."""
    return _build(G, m, rational=False)


def h2_qz(G: CayleyTable, m: Optional[int] = None) -> CohomologyGroup:
    """``H^2(G, Q/Z)`` realized at modulus ``m`` (default ``|G|``)."""
    return _build(G, m or max(G.order, 2), rational=True)


def schur_multiplier(G: CayleyTable, m: Optional[int] = None) -> FinAbGroup:
    """Invariant factors of ``M(G) = H^2(G, Q/Z)``."""
    if G.order == 1:
        return FinAbGroup(())
    H = h2_qz(G, m)
    return FinAbGroup(tuple(H.invariants))


def bockstein_cocycles(G: CayleyTable, m: int) -> list[Cocycle2]:
    """``beta(phi)`` for a basis ``phi`` of ``Hom(G, Z/m)``."""
    ab = abelianization(G)
    out = []
    for i, d in enumerate(ab.structure.orders):
        if m % d:
            raise CohomologyError(f"exp(G/G') does not divide {m}")
        phi = (ab.coords[:, i] * (m // d)) % m
        out.append(Cocycle2(G, m, (phi[:, None] + phi[None, :] - phi[G.mul]) // m))
    return out


def bockstein_image(G: CayleyTable, m: int):
    """Subgroup of ``H^2(G, Z/m)`` generated by Bockstein classes.

    Returns ``(H, generators, order)`` with generators as coordinate vectors of ``H``.
    """
    H = h2(G, m)
    gens = [H.decompose(b) for b in bockstein_cocycles(G, m)]
    from .abelian import subgroup_order

    return H, gens, subgroup_order(H.structure, gens)


# --------------------------------------------------------------------------
# maps
# --------------------------------------------------------------------------


def induced_map_on_h2(
    cocycle_map: Callable[[Cocycle2], Cocycle2],
    source: CohomologyGroup,
    target: CohomologyGroup,
    check_coboundaries: int = 0,
    seed: int = 0,
) -> AbelianMap:
    """Matrix of a cocycle-level map on the chosen class bases."""
    cols = [target.decompose(cocycle_map(r)) for r in source.reps]
    if check_coboundaries:
        rng = np.random.default_rng(seed)
        n = source.group.order
        for _ in range(check_coboundaries):
            phi = rng.integers(0, source.modulus, n)
            phi[0] = 0
            img = cocycle_map(coboundary(source.group, source.modulus, phi))
            if any(target.decompose(img)):
                raise CohomologyError("map does not send coboundaries to coboundaries")
    try:
        return AbelianMap.from_columns(source.structure, target.structure, cols)
    except Exception as exc:
        raise CohomologyError(f"map is not well defined on classes: {exc}") from exc


def restriction_map(f: GroupMap, source: CohomologyGroup, target: CohomologyGroup) -> AbelianMap:
    """``H^2(f.target) -> H^2(f.source)`` by pulling back along ``f``."""
    return induced_map_on_h2(lambda c: pullback_cocycle(c, f), source, target)


def map_from_cocycles(domain: FinAbGroup, cocycle_of: Callable[[int], Cocycle2], target: CohomologyGroup) -> AbelianMap:
    """Map ``domain -> H^2`` sending generator ``i`` to the class of ``cocycle_of(i)``."""
    cols = [target.decompose(cocycle_of(i)) for i in range(domain.ngens)]
    return AbelianMap.from_columns(domain, target.structure, cols)


def transgress(
    beta: Sequence[int],
    proj: GroupMap,
    N: Subgroup,
    m: int,
    section: Optional[Sequence[int]] = None,
) -> Cocycle2:
    """``f(x, y) = beta(mu(x) mu(y) mu(xy)^-1)`` on ``G/N`` for central ``N``.

    ``beta`` is indexed by elements of ``G`` and read on ``N`` only; ``section``
    lists a representative for each element of ``G/N`` (default: least index).
    """
    G, Q = proj.source, proj.target
    if not N.is_central():
        raise CohomologyError("transgression needs a central subgroup")
    beta = np.asarray(beta, dtype=np.int64) % m
    e = np.array(N.elements)
    # homomorphism check on N
    if (beta[G.mul[e[:, None], e[None, :]]] - beta[e][:, None] - beta[e][None, :]).any() and (
        (beta[G.mul[e[:, None], e[None, :]]] - beta[e][:, None] - beta[e][None, :]) % m
    ).any():
        raise CohomologyError("beta is not a homomorphism on N")
    if section is None:
        mu = np.full(Q.order, -1, dtype=np.int64)
        for x in range(G.order - 1, -1, -1):
            mu[proj.image[x]] = x
    else:
        mu = np.asarray(section, dtype=np.int64)
        if (proj.image[mu] != np.arange(Q.order)).any():
            raise CohomologyError("section does not pick one element per coset")
    if mu[0] != 0:
        raise CohomologyError("section must send the identity to the identity")
    prod_ = G.mul[mu[:, None], mu[None, :]]
    n_elem = G.mul[prod_, G.inv[mu[Q.mul]]]
    if not np.isin(n_elem, e).all():
        raise CohomologyError("N is not the kernel of the projection")
    return Cocycle2(Q, m, beta[n_elem])


@dataclass(frozen=True, eq=False)
class TensorBasis:
    """``X^ab (x) Y^ab`` on pairs of basis representatives, with ``Hom(., Q/Z)``."""

    left: tuple  # elements (in the ambient group) representing X^ab basis
    right: tuple
    tensor: FinAbGroup

    @property
    def dual(self) -> FinAbGroup:
        return FinAbGroup(self.tensor.orders, tuple(("dual",) + b for b in self.tensor.basis))

    def pairing_coords(self, f: Cocycle2, sign: int = 1) -> tuple:
        """Coordinates in ``Hom(tensor, Q/Z)`` of ``x (x) y -> f(x,y) - f(y,x)``."""
        vals = []
        for i, j in self.tensor.basis:
            x, y = self.left[i], self.right[j]
            vals.append(sign * (int(f.values[x, y]) - int(f.values[y, x])))
        return hom_coords(self.tensor, f.modulus, vals)


def tensor_basis(left: FinAbGroup, left_elems: Sequence[int], right: FinAbGroup, right_elems: Sequence[int]) -> TensorBasis:
    T = tensor(left, right)
    return TensorBasis(tuple(int(x) for x in left_elems), tuple(int(y) for y in right_elems), T)


def psi_basis(X: CayleyTable, N: Subgroup) -> TensorBasis:
    ab = abelianization(X)
    nb = abelian_subgroup_basis(N)
    return tensor_basis(ab.structure, ab.basis, nb.structure, nb.basis)


def psi(f: Cocycle2, N: Subgroup) -> tuple:
    """``psi(f)(x (x) n) = f(x, n) - f(n, x)`` as coordinates in ``Hom(X (x) N, Q/Z)``."""
    if not N.is_central():
        raise CohomologyError("psi needs a central subgroup")
    return psi_basis(f.group, N).pairing_coords(f)


def psi_map(H: CohomologyGroup, N: Subgroup) -> AbelianMap:
    tb = psi_basis(H.group, N)
    cols = [tb.pairing_coords(r) for r in H.reps]
    return AbelianMap.from_columns(H.structure, tb.dual, cols)


def nu_basis(H_emb: GroupMap, K_emb: GroupMap) -> TensorBasis:
    aH, aK = abelianization(H_emb.source), abelianization(K_emb.source)
    return tensor_basis(
        aH.structure, [H_emb.image[x] for x in aH.basis], aK.structure, [K_emb.image[y] for y in aK.basis]
    )


def nu(f: Cocycle2, H_emb: GroupMap, K_emb: GroupMap) -> tuple:
    """``nu(f)(h (x) k) = f(h, k) - f(k, h)`` in ``Hom(H (x) K, Q/Z)`` coordinates."""
    return nu_basis(H_emb, K_emb).pairing_coords(f)


def nu_map(G_h2: CohomologyGroup, H_emb: GroupMap, K_emb: GroupMap) -> AbelianMap:
    tb = nu_basis(H_emb, K_emb)
    cols = [tb.pairing_coords(r) for r in G_h2.reps]
    return AbelianMap.from_columns(G_h2.structure, tb.dual, cols)


def theta_prime_map(G_h2: CohomologyGroup, H_emb: GroupMap, K_emb: GroupMap) -> AbelianMap:
    """``(res_H, res_K, nu)`` from ``H^2(G)`` into ``H^2(H) + H^2(K) + Hom(H (x) K)``."""
    from .abelian import vstack

    m, rat = G_h2.modulus, G_h2.rational
    HH = _build(H_emb.source, m, rat)
    HK = _build(K_emb.source, m, rat)
    return vstack(
        restriction_map(H_emb, G_h2, HH),
        restriction_map(K_emb, G_h2, HK),
        nu_map(G_h2, H_emb, K_emb),
    )


def theta_prime(xi: Cocycle2, H_emb: GroupMap, K_emb: GroupMap, rational: bool = True):
    """Value of ``(res_H, res_K, nu)`` on one class: coordinate triple."""
    m = xi.modulus
    HH = _build(H_emb.source, m, rational)
    HK = _build(K_emb.source, m, rational)
    return (
        HH.decompose(pullback_cocycle(xi, H_emb)),
        HK.decompose(pullback_cocycle(xi, K_emb)),
        nu(xi, H_emb, K_emb),
    )


def cohomology(G: CayleyTable, m: int, rational: bool = True) -> CohomologyGroup:
    return _build(G, m, rational)


__all__ = [
    "Cocycle2",
    "CohomologyGroup",
    "CohomologyError",
    "bockstein_cocycles",
    "bockstein_image",
    "coboundary",
    "cohomology",
    "h2",
    "h2_qz",
    "induced_map_on_h2",
    "nu",
    "nu_map",
    "psi",
    "psi_map",
    "pullback_cocycle",
    "restriction_map",
    "schur_multiplier",
    "theta_prime",
    "theta_prime_map",
    "transgress",
]
