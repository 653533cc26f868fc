"""Finite groups as explicit Cayley tables.

Elements are the indices ``0..order-1`` and the identity is always ``0``.
Constructions: cyclic groups, direct and central products, and groups given by
a power-commutator (pc) presentation.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from math import prod
from typing import Optional, Sequence

import numpy as np

MAX_ORDER = 512
COLLECTION_CAP = 10**6


class GroupError(ValueError):
    pass


class SizeGuardError(GroupError):
    pass


class InconsistentPresentation(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """A finite group as a multiplication table.

    ``mul[x, y]`` is the index of ``x*y``; ``inv[x]`` the inverse of ``x``.
    ``labels`` optionally names elements (exponent vectors, pairs, ...).
    """

    mul: np.ndarray
    inv: np.ndarray = None
    gen_hint: Optional[tuple] = None
    name: str = ""
    labels: Optional[tuple] = field(default=None, repr=False)

    def __post_init__(self):
        mul = np.ascontiguousarray(self.mul, dtype=np.int64)
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        if self.inv is None:
            inv = np.argmax(mul == 0, axis=1)
        else:
            inv = np.asarray(self.inv, dtype=np.int64)
        inv.setflags(write=False)
        object.__setattr__(self, "inv", inv)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return self.order

    @property
    def key(self) -> str:
        k = self.__dict__.get("_key")
        if k is None:
            k = hashlib.sha1(self.mul.tobytes()).hexdigest()
            object.__setattr__(self, "_key", k)
        return k

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and self.key == other.key

    def power(self, x: int, k: int) -> int:
        y = 0
        for _ in range(k):
            y = int(self.mul[y, x])
        return y

    def comm(self, x: int, y: int) -> int:
        """``[x, y] = x^-1 y^-1 x y``."""
        m, i = self.mul, self.inv
        return int(m[m[i[x], i[y]], m[x, y]])

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def element_orders(self) -> list[int]:
        return [element_order(self, x) for x in range(self.order)]

    def fingerprint(self) -> dict:
        """Cheap isomorphism invariants (isomorphism testing is not attempted)."""
        from .subgroups import center, derived_subgroup

        return {
            "order": self.order,
            "element_orders": sorted(Counter(self.element_orders()).items()),
            "center": len(center(self)),
            "derived": len(derived_subgroup(self)),
        }

    def serialize(self) -> list[int]:
        """Order followed by the row-major multiplication table."""
        return [self.order] + self.mul.ravel().tolist()

    @classmethod
    def deserialize(cls, data: Sequence[int], name: str = "") -> "CayleyTable":
        n = int(data[0])
        G = cls(np.asarray(data[1:], dtype=np.int64).reshape(n, n), name=name)
        check_group(G)
        return G


def check_group(G: CayleyTable, associativity: bool = True) -> None:
    """Raise ``GroupError`` unless the table satisfies the group axioms."""
    n = G.order
    m = G.mul
    if m.shape != (n, n) or m.min() < 0 or m.max() >= n:
        raise GroupError("table entries out of range")
    ar = np.arange(n)
    if not (m[0] == ar).all() or not (m[:, 0] == ar).all():
        raise GroupError("0 is not the identity")
    if not (m[ar, G.inv] == 0).all():
        raise GroupError("inverse law fails")
    srt = np.sort(m, axis=1)
    if not (srt == ar).all() or not (np.sort(m, axis=0) == ar[:, None]).all():
        raise GroupError("table is not a Latin square")
    if associativity:
        if not is_associative(G):
            raise GroupError("table is not associative")


def is_associative(G: CayleyTable) -> bool:
    m = G.mul
    n = G.order
    chunk = max(1, 2_000_000 // max(1, n * n))
    for x0 in range(0, n, chunk):
        xs = np.arange(x0, min(n, x0 + chunk))
        # (x y) z  vs  x (y z)
        lhs = m[m[xs][:, :, None], np.arange(n)[None, None, :]]
        rhs = m[xs[:, None, None], m[None, :, :]]
        if not (lhs == rhs).all():
            return False
    return True


def element_order(G: CayleyTable, x: int) -> int:
    k, y = 1, int(x)
    while y != 0:
        y = int(G.mul[y, x])
        k += 1
    return k


@dataclass(frozen=True, eq=False)
class GroupMap:
    """Homomorphism ``source -> target`` as an element-wise image list."""

    source: CayleyTable
    target: CayleyTable
    image: np.ndarray

    def __post_init__(self):
        img = np.asarray(self.image, dtype=np.int64)
        img.setflags(write=False)
        object.__setattr__(self, "image", img)
        if img.shape != (self.source.order,):
            raise GroupError("image list has wrong length")

    def __call__(self, x):
        return self.image[x]

    def is_homomorphism(self) -> bool:
        img = self.image
        if img[0] != 0:
            return False
        return bool((img[self.source.mul] == self.target.mul[img[:, None], img[None, :]]).all())

    def check(self) -> "GroupMap":
        if not self.is_homomorphism():
            raise GroupError("map is not a homomorphism")
        return self

    def compose(self, first: "GroupMap") -> "GroupMap":
        """``self o first``."""
        return GroupMap(first.source, self.target, self.image[first.image])

    def is_injective(self) -> bool:
        return len(set(self.image.tolist())) == self.source.order

    @classmethod
    def identity(cls, G: CayleyTable) -> "GroupMap":
        return cls(G, G, np.arange(G.order))


def _guard(n: int) -> None:
    if n > MAX_ORDER:
        raise SizeGuardError(f"group order {n} exceeds {MAX_ORDER}")


# --------------------------------------------------------------------------
# constructions
# --------------------------------------------------------------------------


def build_cyclic(n: int) -> CayleyTable:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    _guard(n)
    a = np.arange(n)
    return CayleyTable((a[:, None] + a[None, :]) % n, gen_hint=(1,) if n > 1 else (), name=f"Z{n}")


def direct_product(G1: CayleyTable, G2: CayleyTable):
    """``G1 x G2`` with ``(a, b) -> a*|G2| + b`` and the two embeddings."""
    n1, n2 = G1.order, G2.order
    _guard(n1 * n2)
    a = np.arange(n1 * n2)
    x1, x2 = a // n2, a % n2
    mul = G1.mul[x1[:, None], x1[None, :]] * n2 + G2.mul[x2[:, None], x2[None, :]]
    hint = None
    if G1.gen_hint is not None and G2.gen_hint is not None:
        hint = tuple(g * n2 for g in G1.gen_hint) + tuple(G2.gen_hint)
    G = CayleyTable(mul, gen_hint=hint, name=f"({G1.name} x {G2.name})")
    e1 = GroupMap(G1, G, np.arange(n1) * n2)
    e2 = GroupMap(G2, G, np.arange(n2))
    return G, e1, e2


@dataclass(frozen=True)
class CentralProductSpec:
    """``H`` and ``K`` with amalgam pairs ``(a, phi(a))`` generating ``A <= Z(H)``."""

    left: CayleyTable
    right: CayleyTable
    amalgam: tuple = ()


def central_product(spec: CentralProductSpec):
    """``(H x K)/U`` with ``U = {(a, phi(a)^-1)}``; returns ``(G, H -> G, K -> G)``.

    Cosets of ``U`` are labelled by their least element index in ``H x K``.
    """
    from .subgroups import center, subgroup_generated

    H, K = spec.left, spec.right
    ZH, ZK = set(center(H).elements), set(center(K).elements)
    for a, b in spec.amalgam:
        if a not in ZH or b not in ZK:
            raise GroupError(f"amalgam pair ({a}, {b}) is not central")
    # extend a -> phi(a) along words in the given generators
    phi: dict[int, int] = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for a, b in spec.amalgam:
                y, z = int(H.mul[x, a]), int(K.mul[phi[x], b])
                if y in phi:
                    if phi[y] != z:
                        raise GroupError("amalgam does not extend to a homomorphism")
                else:
                    phi[y] = z
                    nxt.append(y)
        frontier = nxt
    if len(set(phi.values())) != len(phi):
        raise GroupError("amalgam map is not injective")
    if len(phi) == 1:
        return direct_product(H, K)
    nH, nK = H.order, K.order
    _guard(nH * nK // len(phi))
    # work on pairs (h, k) -> h*nK + k without tabulating H x K itself
    amal = np.array(sorted(phi), dtype=np.int64)
    binv = K.inv[np.array([phi[int(a)] for a in amal], dtype=np.int64)]
    hs, ks = np.divmod(np.arange(nH * nK, dtype=np.int64), nK)
    label = (H.mul[hs[:, None], amal[None, :]] * nK + K.mul[ks[:, None], binv[None, :]]).min(axis=1)
    reps = np.unique(label)
    index = np.full(nH * nK, -1, dtype=np.int64)
    index[reps] = np.arange(len(reps))
    proj = index[label]
    rh, rk = np.divmod(reps, nK)
    mul = proj[H.mul[rh[:, None], rh[None, :]] * nK + K.mul[rk[:, None], rk[None, :]]]
    hint = None
    if H.gen_hint is not None and K.gen_hint is not None:
        gens = [g * nK for g in H.gen_hint] + list(K.gen_hint)
        hint = tuple(sorted({int(proj[g]) for g in gens} - {0}))
    G = CayleyTable(mul, gen_hint=hint, name=f"({H.name} o {K.name})")
    mapH = GroupMap(H, G, proj[np.arange(nH) * nK])
    mapK = GroupMap(K, G, proj[np.arange(nK)])
    return G, mapH, mapK


# --------------------------------------------------------------------------
# power-commutator presentations
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PcPresentation:
    """Generators ``g_0..g_{n-1}``; words are exponent vectors.

    ``power_rules[i]`` is ``g_i^{rel_orders[i]}`` and ``commutator_rules[(j, i)]``
    (``j > i``) is ``[g_j, g_i] = g_j^-1 g_i^-1 g_j g_i``; both must only involve
    generators of larger index.  Missing rules are trivial.
    """

    rel_orders: tuple
    power_rules: dict = field(default_factory=dict)
    commutator_rules: dict = field(default_factory=dict)
    names: tuple = ()

    @property
    def ngens(self) -> int:
        return len(self.rel_orders)


class Collector:
    """Collection to normal form for a pc presentation (left-to-right, with a
    step cap so an inconsistent or malformed presentation cannot loop)."""

    def __init__(self, pres: PcPresentation, cap: int = COLLECTION_CAP):
        self.pres = pres
        self.n = pres.ngens
        self.cap = cap
        n = self.n
        self.power = [self._letters(pres.power_rules.get(i)) for i in range(n)]
        self.conj = {}
        for j in range(n):
            for i in range(j):
                w = self._letters(pres.commutator_rules.get((j, i)))
                if any(g <= j for g in w):
                    raise GroupError(f"commutator rule ({j},{i}) is not in pc form")
                # g_j^{g_i} = g_j [g_j, g_i]
                self.conj[(j, i)] = [j] + w
        for i, w in enumerate(self.power):
            if any(g <= i for g in w):
                raise GroupError(f"power rule {i} is not in pc form")

    def _letters(self, word) -> list[int]:
        if word is None:
            return []
        out = []
        for g, e in enumerate(word):
            out.extend([g] * (int(e) % self.pres.rel_orders[g]))
        return out

    def multiply(self, vec: Sequence[int], word: Sequence[int]) -> list[int]:
        """Collected normal form of ``vec * word`` (``word`` is a letter list)."""
        v = list(vec)
        orders = self.pres.rel_orders
        stack = list(reversed(word))
        steps = 0
        while stack:
            steps += 1
            if steps > self.cap:
                raise InconsistentPresentation("collection exceeded the step cap")
            i = stack.pop()
            tail = []
            for j in range(self.n - 1, i, -1):
                if v[j]:
                    tail.append((j, v[j]))
                    v[j] = 0
            pending = []
            v[i] += 1
            if v[i] == orders[i]:
                v[i] = 0
                pending.extend(self.power[i])
            # conjugate the tail by g_i: (g_j^e)^{g_i} = (g_j^{g_i})^e
            for j, e in reversed(tail):
                pending.extend(self.conj[(j, i)] * e)
            stack.extend(reversed(pending))
        return v


def from_pc_presentation(pres: PcPresentation, name: str = "") -> CayleyTable:
    """Cayley table on collected normal forms (mixed radix, ``g_0`` most significant)."""
    orders = [int(r) for r in pres.rel_orders]
    N = prod(orders)
    _guard(N)
    col = Collector(pres)
    n = len(orders)
    radix = [prod(orders[i + 1 :]) for i in range(n)]

    def encode(v):
        return sum(a * r for a, r in zip(v, radix))

    def decode(x):
        return [(x // r) % o for r, o in zip(radix, orders)]

    right = np.empty((n, N), dtype=np.int64)  # right[i, x] = x * g_i
    for x in range(N):
        v = decode(x)
        for i in range(n):
            right[i, x] = encode(col.multiply(v, [i]))
    for i in range(n):
        if len(np.unique(right[i])) != N:
            raise InconsistentPresentation("right multiplication by a generator is not a bijection")
    # mul[:, y] built along normal-form words of y
    mul = np.empty((N, N), dtype=np.int64)
    mul[:, 0] = np.arange(N)
    for y in range(1, N):
        v = decode(y)
        last = max(i for i in range(n) if v[i])
        v[last] -= 1
        mul[:, y] = right[last][mul[:, encode(v)]]
    labels = tuple(tuple(decode(x)) for x in range(N))
    G = CayleyTable(mul, gen_hint=tuple(encode([int(i == j) for j in range(n)]) for i in range(n)), name=name, labels=labels)
    try:
        check_group(G)
    except GroupError as exc:
        raise InconsistentPresentation(str(exc)) from exc
    return G


def pc_element(G: CayleyTable, vec: Sequence[int]) -> int:
    """Index of the element with the given exponent vector in a pc-built table."""
    return G.labels.index(tuple(vec))
