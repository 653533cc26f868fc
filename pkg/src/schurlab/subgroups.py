"""Subgroups, quotients and images inside Cayley tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .groups import CayleyTable, GroupError, GroupMap


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: CayleyTable
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(int(x) for x in self.elements)))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return int(x) in self._set

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    @property
    def _set(self):
        s = self.__dict__.get("_s")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_s", s)
        return s

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_subset(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def is_closed(self) -> bool:
        e = np.array(self.elements)
        G = self.parent
        prods = G.mul[e[:, None], e[None, :]]
        return 0 in self._set and bool(np.isin(prods, e).all()) and bool(np.isin(G.inv[e], e).all())

    def is_normal(self) -> bool:
        G = self.parent
        e = np.array(self.elements)
        conj = G.mul[G.mul[G.inv[:, None], e[None, :]], np.arange(G.order)[:, None]]
        return bool(np.isin(conj, e).all())

    def is_central(self) -> bool:
        G = self.parent
        e = np.array(self.elements)
        return bool((G.mul[e, :] == G.mul[:, e].T).all())

    def table(self):
        """This subgroup as its own Cayley table, with the inclusion map."""
        e = np.array(self.elements)  # e[0] == 0
        pos = np.full(self.parent.order, -1, dtype=np.int64)
        pos[e] = np.arange(len(e))
        mul = pos[self.parent.mul[e[:, None], e[None, :]]]
        T = CayleyTable(mul, name=f"sub{len(e)}")
        return T, GroupMap(T, self.parent, e)

    def __repr__(self):
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"


def whole(G: CayleyTable) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial(G: CayleyTable) -> Subgroup:
    return Subgroup(G, (0,))


def subgroup_generated(G: CayleyTable, gens: Iterable[int]) -> Subgroup:
    gens = [int(g) for g in gens if int(g) != 0]
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while frontier.size:
        if not gens:
            break
        nxt = G.mul[frontier[:, None], np.array(gens)[None, :]].ravel()
        nxt = np.unique(nxt[~seen[nxt]])
        seen[nxt] = True
        frontier = nxt
    return Subgroup(G, tuple(np.flatnonzero(seen).tolist()))


def derived_subgroup(G: CayleyTable) -> Subgroup:
    m, i = G.mul, G.inv
    comms = m[m[i[:, None], i[None, :]], m]  # [x, y]
    return subgroup_generated(G, np.unique(comms).tolist())


def center(G: CayleyTable) -> Subgroup:
    central = (G.mul == G.mul.T).all(axis=1)
    return Subgroup(G, tuple(np.flatnonzero(central).tolist()))


def intersect(S1: Subgroup, S2: Subgroup) -> Subgroup:
    if S1.parent is not S2.parent and S1.parent != S2.parent:
        raise GroupError("subgroups live in different groups")
    return Subgroup(S1.parent, tuple(sorted(S1._set & S2._set)))


def join(S1: Subgroup, S2: Subgroup) -> Subgroup:
    return subgroup_generated(S1.parent, list(S1.elements) + list(S2.elements))


def quotient(G: CayleyTable, N: Subgroup):
    """``(G/N, projection)``; cosets are labelled by their least element.

    Normality is verified, never assumed.
    """
    if not N.is_normal():
        raise GroupError("subgroup is not normal")
    e = np.array(N.elements)
    label = G.mul[:, e].min(axis=1)
    reps = np.unique(label)
    index = np.full(G.order, -1, dtype=np.int64)
    index[reps] = np.arange(len(reps))
    proj = index[label]
    mul = proj[G.mul[reps[:, None], reps[None, :]]]
    Q = CayleyTable(mul, name=f"{G.name}/{len(e)}")
    return Q, GroupMap(G, Q, proj)


def image_subgroup(f: GroupMap, S: Subgroup) -> Subgroup:
    return Subgroup(f.target, tuple(np.unique(f.image[np.array(S.elements)]).tolist()))


def preimage_subgroup(f: GroupMap, T: Subgroup) -> Subgroup:
    mask = np.isin(f.image, np.array(T.elements))
    return Subgroup(f.source, tuple(np.flatnonzero(mask).tolist()))


def kernel(f: GroupMap) -> Subgroup:
    return preimage_subgroup(f, trivial(f.target))


def image(f: GroupMap) -> Subgroup:
    return image_subgroup(f, whole(f.source))


def subgroups_of_abelian(G: CayleyTable, S: Subgroup) -> list[Subgroup]:
    """All subgroups of an abelian subgroup ``S`` (by closure of growing sets)."""
    found = {(0,): trivial(G)}
    frontier = [trivial(G)]
    while frontier:
        nxt = []
        for T in frontier:
            for x in S.elements:
                if x in T:
                    continue
                U = subgroup_generated(G, list(T.elements[1:]) + [x]) if len(T) > 1 else subgroup_generated(G, [x])
                if U.elements not in found:
                    found[U.elements] = U
                    nxt.append(U)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (len(s), s.elements))


def minimal_generators(G: CayleyTable, S: Sequence[int] | None = None) -> list[int]:
    """Greedy small generating set of ``G`` (or of the subgroup ``S``)."""
    pool = list(range(1, G.order)) if S is None else [x for x in S if x != 0]
    target = G.order if S is None else len(set(S))
    gens: list[int] = []
    cur = trivial(G)
    while len(cur) < target:
        best = None
        for x in pool:
            if x in cur:
                continue
            U = subgroup_generated(G, gens + [x])
            if best is None or len(U) > len(best[1]):
                best = (x, U)
                if len(U) == target:
                    break
        gens.append(best[0])
        cur = best[1]
    return gens
