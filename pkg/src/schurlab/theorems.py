"""Mechanical checks of the central-product results on concrete instances.

Every check returns a :class:`VerificationReport`.  Embeddings are witnessed
by explicit maps (transgressions, inflations, ``theta'``) whose kernels are
computed exactly; the invariant-factor criterion :func:`embeds` is reported
alongside and must agree.
"""

from __future__ import annotations

import itertools
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .abelian import (
    AbelianMap,
    FinAbGroup,
    abelian_subgroup_basis,
    abelianization,
    block_diag,
    direct_sum,
    dual_map,
    embeds,
    hom_coords,
    hom_group,
    hstack,
    image_generators,
    kernel_image_cokernel,
    preimage_generators,
    quotient_map,
    quotient_structure,
    same_subgroup,
    solve,
    subgroup_contains,
    subgroup_order,
    sum_embedding,
    swap_map,
    tensor,
    tensor_map,
    vstack,
)
from .catalog import CentralProductData, extraspecial
from .cohomology import (
    CohomologyGroup,
    TensorBasis,
    cohomology,
    induced_map_on_h2,
    pullback_cocycle,
    restriction_map,
    schur_multiplier,
    tensor_basis,
    theta_prime_map,
    transgress,
)
from .groups import CayleyTable, GroupError, GroupMap
from .subgroups import (
    Subgroup,
    center,
    derived_subgroup,
    image,
    image_subgroup,
    intersect,
    preimage_subgroup,
    quotient,
    subgroups_of_abelian,
    trivial,
    whole,
)

log = logging.getLogger(__name__)

SLOW_ORDER = 100


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass
class VerificationReport:
    claim: str
    instance: str
    computed: dict
    verdict: str
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["claim"], d["instance"], d["computed"], d["verdict"], d.get("ms", 0.0))

    def summary(self) -> str:
        return f"[{self.verdict.upper():4}] {self.claim:<22} {self.instance:<28} {self.ms:9.0f} ms"


class _Clock:
    def __init__(self):
        self.t0 = time.perf_counter()

    def ms(self) -> float:
        return round((time.perf_counter() - self.t0) * 1000.0, 1)


def _report(claim: str, instance: str, computed: dict, checks: dict, clock: _Clock) -> VerificationReport:
    computed = dict(computed)
    computed["checks"] = {k: bool(v) for k, v in checks.items()}
    verdict = "pass" if all(checks.values()) else "fail"
    return VerificationReport(claim, instance, computed, verdict, clock.ms())


def inv(G: FinAbGroup) -> list[int]:
    return list(G.invariants)


# --------------------------------------------------------------------------
# homomorphisms out of central subgroups
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SubHom:
    """``Hom(S, Q/Z)`` for an abelian subgroup ``S``, realized at modulus ``m``."""

    sub: Subgroup
    m: int

    @cached_property
    def basis(self):
        return abelian_subgroup_basis(self.sub)

    @property
    def structure(self) -> FinAbGroup:
        return self.basis.structure

    @property
    def dual(self) -> FinAbGroup:
        return hom_group(self.structure, self.m)

    def values(self, c: Sequence[int]) -> np.ndarray:
        """Values in ``Z/m`` on all elements of the parent (zero off ``S``)."""
        coords = self.basis.coords
        out = np.zeros(self.sub.parent.order, dtype=np.int64)
        e = np.array(self.sub.elements)
        for j, d in enumerate(self.structure.orders):
            if c[j]:
                out[e] += int(c[j]) * coords[e, j] * (self.m // d)
        return out % self.m

    def coords_of(self, values: np.ndarray) -> tuple:
        return hom_coords(self.structure, self.m, [int(values[b]) for b in self.structure.basis])


def restrict_hom(big: SubHom, small: SubHom) -> AbelianMap:
    """``Hom(S) -> Hom(T)`` for ``T <= S`` in the same parent."""
    cols = []
    for j in range(big.structure.ngens):
        e = [int(i == j) for i in range(big.structure.ngens)]
        cols.append(small.coords_of(big.values(e)))
    return AbelianMap.from_columns(big.dual, small.dual, cols)


def extend_hom(big: SubHom, small: SubHom, c: Sequence[int]) -> tuple:
    """Some extension to ``big`` of the hom on ``small`` with coordinates ``c``."""
    x = solve(restrict_hom(big, small), c)
    if x is None:
        raise GroupError("homomorphism does not extend (coefficients not divisible?)")
    return x


# --------------------------------------------------------------------------
# group-level helpers
# --------------------------------------------------------------------------


def abelianized_map(f: GroupMap) -> AbelianMap:
    """``X^ab -> Y^ab`` induced by ``f``."""
    ax, ay = abelianization(f.source), abelianization(f.target)
    cols = [tuple(int(v) for v in ay.coords[f.image[b]]) for b in ax.basis]
    return AbelianMap.from_columns(ax.structure, ay.structure, cols)


def induced_quotient_map(f: GroupMap, px: GroupMap, py: GroupMap) -> GroupMap:
    """``X/N1 -> Y/N2`` induced by ``f`` (requires ``f(N1) <= N2``)."""
    img = np.full(px.target.order, -1, dtype=np.int64)
    for x in range(f.source.order):
        q = px.image[x]
        y = py.image[f.image[x]]
        if img[q] == -1:
            img[q] = y
        elif img[q] != y:
            raise GroupError("map does not descend to the quotients")
    return GroupMap(px.target, py.target, img)


def subgroup_inclusion_coords(S: Subgroup, ab) -> AbelianMap:
    """``S -> X^ab`` (``ab`` an abelianization of ``S.parent``) on the basis of ``S``."""
    sb = abelian_subgroup_basis(S)
    cols = [tuple(int(v) for v in ab.coords[b]) for b in sb.basis]
    return AbelianMap.from_columns(sb.structure, ab.structure, cols)


def _coords_list(f: AbelianMap, basis_gens: Sequence) -> list[tuple]:
    return [f(g) for g in basis_gens]


def _unit(n: int, i: int) -> tuple:
    return tuple(int(j == i) for j in range(n))


def inverse_map(f: AbelianMap) -> AbelianMap:
    cols = []
    for i in range(f.target.ngens):
        x = solve(f, _unit(f.target.ngens, i))
        if x is None:
            raise GroupError("map is not surjective")
        cols.append(x)
    g = AbelianMap.from_columns(f.target, f.source, cols)
    if not f.is_injective():
        raise GroupError("map is not injective")
    return g


def permute_blocks(parts: Sequence[FinAbGroup], order: Sequence[int]) -> AbelianMap:
    """Isomorphism ``P_0 + P_1 + ... -> P_order[0] + P_order[1] + ...``."""
    src = direct_sum(*parts)
    tgt = direct_sum(*(parts[i] for i in order))
    offs_src = np.cumsum([0] + [P.ngens for P in parts])
    offs_tgt = {}
    o = 0
    for i in order:
        offs_tgt[i] = o
        o += parts[i].ngens
    cols = []
    for b, P in enumerate(parts):
        for k in range(P.ngens):
            col = [0] * tgt.ngens
            col[offs_tgt[b] + k] = 1
            cols.append(col)
    assert len(cols) == offs_src[-1]
    return AbelianMap.from_columns(src, tgt, cols)


def subgroup_structure(target: FinAbGroup, gens: Sequence) -> FinAbGroup:
    gens = [tuple(g) for g in gens if any(g)]
    if not gens:
        return FinAbGroup(())
    aux = FinAbGroup((max(target.exponent, 1),) * len(gens))
    f = AbelianMap.from_columns(aux, target, gens)
    return kernel_image_cokernel(f)[1]


# --------------------------------------------------------------------------
# central product instances
# --------------------------------------------------------------------------


class CentralProductInstance:
    """``G = HK`` with ``[H, K] = 1``, ``A = H cap K`` and ``Z = H' cap K'``.

    Heavy derived objects (quotients, cohomology groups, maps) are cached on
    the instance; all of them are deterministic functions of the tables.
    """

    def __init__(self, data: CentralProductData, modulus: Optional[int] = None):
        self.label = data.label
        self.G = data.G
        self.H_emb, self.K_emb = data.H_emb, data.K_emb
        self.H, self.K = data.H_emb.source, data.K_emb.source
        self.m = modulus or self.G.order
        G = self.G
        self.imH, self.imK = image(self.H_emb), image(self.K_emb)
        self.A = intersect(self.imH, self.imK)
        self.Hd = image_subgroup(self.H_emb, derived_subgroup(self.H))
        self.Kd = image_subgroup(self.K_emb, derived_subgroup(self.K))
        self.Gd = derived_subgroup(G)
        self.Z = intersect(self.Hd, self.Kd)
        self.AH = intersect(self.A, self.Hd)
        self.AK = intersect(self.A, self.Kd)
        self.AG = intersect(self.A, self.Gd)
        self._cache: dict = {}
        self.validate()

    # -- sanity --------------------------------------------------------------

    def validate(self) -> None:
        G = self.G
        if self.imH.order * self.imK.order != G.order * self.A.order:
            raise GroupError("G is not the product of the factor images")
        h, k = np.array(self.imH.elements), np.array(self.imK.elements)
        if not (G.mul[h[:, None], k[None, :]] == G.mul[k[None, :], h[:, None]]).all():
            raise GroupError("factor images do not commute")
        if not self.A.is_central():
            raise GroupError("amalgam is not central")
        if not self.Z.is_subset(self.A):
            raise GroupError("Z is not contained in A")
        if not (self.H_emb.is_homomorphism() and self.K_emb.is_homomorphism()):
            raise GroupError("factor maps are not homomorphisms")

    def describe(self) -> dict:
        return {
            "label": self.label,
            "order": self.G.order,
            "H": self.H.order,
            "K": self.K.order,
            "A": self.A.order,
            "Z": self.Z.order,
            "A_cap_Hd": self.AH.order,
            "A_cap_Kd": self.AK.order,
            "A_cap_Gd": self.AG.order,
            "modulus": self.m,
        }

    # -- cached building blocks ----------------------------------------------

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def h2(self, X: CayleyTable) -> CohomologyGroup:
        return cohomology(X, self.m, rational=True)

    def hom(self, S: Subgroup) -> SubHom:
        return self._memo(("hom", id(S.parent), S.elements), lambda: SubHom(S, self.m))

    def quot(self, X: CayleyTable, N: Subgroup):
        return self._memo(("quot", X.key, N.elements), lambda: quotient(X, N))

    def factor(self, which: str):
        return (self.H, self.H_emb) if which == "H" else (self.K, self.K_emb)

    def pull(self, which: str, S: Subgroup) -> Subgroup:
        """``S <= G`` (inside the factor image) as a subgroup of the factor."""
        X, emb = self.factor(which)
        return preimage_subgroup(emb, S)

    def factor_quot(self, which: str, S: Subgroup):
        """``X/S`` for ``X`` in ``{H, K}`` and ``S <= A`` given inside ``G``."""
        X, _ = self.factor(which)
        return self.quot(X, self.pull(which, S))

    def factor_into_quotient(self, which: str, S: Subgroup) -> GroupMap:
        """``X/S -> G/S``."""
        X, emb = self.factor(which)
        _, px = self.factor_quot(which, S)
        _, pg = self.quot(self.G, S)
        return self._memo(("fq", which, S.elements), lambda: induced_quotient_map(emb, px, pg))

    def inf_map(self, X: CayleyTable, N: Subgroup) -> AbelianMap:
        """``inf : H^2(X/N) -> H^2(X)``."""

        def build():
            Q, proj = self.quot(X, N)
            return induced_map_on_h2(lambda f: pullback_cocycle(f, proj), self.h2(Q), self.h2(X))

        return self._memo(("inf", X.key, N.elements), build)

    def inf_between(self, which: str, small: Subgroup, big: Subgroup) -> AbelianMap:
        """``inf : H^2(X/big) -> H^2(X/small)`` for ``small <= big``."""

        def build():
            X = self.factor(which)[0] if which in ("H", "K") else self.G
            if which in ("H", "K"):
                Qs, ps = self.factor_quot(which, small)
                Qb, pb = self.factor_quot(which, big)
            else:
                Qs, ps = self.quot(self.G, small)
                Qb, pb = self.quot(self.G, big)
            step = induced_quotient_map(GroupMap.identity(X), ps, pb)
            return induced_map_on_h2(lambda f: pullback_cocycle(f, step), self.h2(Qb), self.h2(Qs))

        return self._memo(("infb", which, small.elements, big.elements), build)

    def tra(self, which: str, S: Subgroup, N: Subgroup) -> AbelianMap:
        """``tra : Hom(S) -> H^2(X/N)`` for ``S <= N <= A`` given in ``G``.

        ``which`` is ``"H"``, ``"K"`` or ``"G"``.  A hom on ``S`` is extended to
        ``N`` before transgressing; this is well defined when ``S`` contains
        ``N cap X'``.
        """

        def build():
            cols = self.tra_columns(which, S, N)
            X = self.G if which == "G" else self.factor(which)[0]
            Q = self.quot(X, N if which == "G" else self.pull(which, N))[0]
            return AbelianMap.from_columns(self.hom(S).dual, self.h2(Q).structure, cols)

        return self._memo(("tra", which, S.elements, N.elements), build)

    def tra_columns(self, which: str, S: Subgroup, N: Subgroup) -> list[tuple]:
        hs, hn = self.hom(S), self.hom(N)
        if which == "G":
            X, emb, NX = self.G, None, N
        else:
            X, emb = self.factor(which)
            NX = self.pull(which, N)
        Q, proj = self.quot(X, NX)
        HQ = self.h2(Q)
        cols = []
        for j in range(hs.structure.ngens):
            ext = extend_hom(hn, hs, _unit(hs.structure.ngens, j))
            vals = hn.values(ext)
            if emb is not None:
                vals = vals[emb.image]
            cols.append(HQ.decompose(transgress(vals, proj, NX, self.m)))
        return cols

    def theta(self, level: Optional[Subgroup] = None) -> AbelianMap:
        """``theta'`` of ``G/level`` with respect to ``H/level`` and ``K/level``
        (``level = None`` means ``G`` itself).  For ``level = A`` this is the
        isomorphism ``theta`` of the direct product ``G/A``."""

        def build():
            if level is None:
                return theta_prime_map(self.h2(self.G), self.H_emb, self.K_emb)
            Q = self.quot(self.G, level)[0]
            return theta_prime_map(
                self.h2(Q), self.factor_into_quotient("H", level), self.factor_into_quotient("K", level)
            )

        return self._memo(("theta", None if level is None else level.elements), build)

    def theta_inverse(self) -> AbelianMap:
        return self._memo(("thinv",), lambda: inverse_map(self.theta(self.A)))

    def theta_parts(self, level: Optional[Subgroup] = None) -> list[FinAbGroup]:
        if level is None:
            XH, XK = self.H, self.K
            nb = tensor(abelianization(self.H).structure, abelianization(self.K).structure)
        else:
            XH = self.factor_quot("H", level)[0]
            XK = self.factor_quot("K", level)[0]
            nb = tensor(abelianization(XH).structure, abelianization(XK).structure)
        return [self.h2(XH).structure, self.h2(XK).structure, hom_group(nb, self.m)]

    # -- tensor sequence pieces -------------------------------------------------

    def a_into_ab(self, which: str) -> AbelianMap:
        """``A -> X^ab`` for ``X`` in ``{H, K, G}`` on the basis of ``A``."""
        ha = self.hom(self.A).basis
        if which == "G":
            ab = abelianization(self.G)
            cols = [tuple(int(v) for v in ab.coords[a]) for a in ha.basis]
        else:
            X, emb = self.factor(which)
            ab = abelianization(X)
            pos = {int(g): i for i, g in enumerate(emb.image)}
            cols = [tuple(int(v) for v in ab.coords[pos[a]]) for a in ha.basis]
        return AbelianMap.from_columns(ha.structure, ab.structure, cols)

    def mu(self, literal: bool = True) -> AbelianMap:
        """``mu : (H (x) A) + (K (x) A) -> H (x) K``.

        With ``literal=True`` the second block is ``k (x) a -> a (x) k``;
        otherwise ``k (x) a -> -(a (x) k)``, the sign that matches
        ``f(h, k) - f(k, h)`` in the bottom rectangle of the diagram.
        """
        Hab = abelianization(self.H).structure
        Kab = abelianization(self.K).structure
        Ast = self.hom(self.A).structure
        idH = AbelianMap.identity(Hab)
        idK = AbelianMap.identity(Kab)
        first = tensor_map(idH, self.a_into_ab("K"))
        second = tensor_map(self.a_into_ab("H"), idK) @ swap_map(Kab, Ast)
        if not literal:
            second = -second
        return hstack(first, second)

    def lam(self) -> AbelianMap:
        """``lambda : H (x) K -> H/A (x) K/A``."""
        _, pH = self.factor_quot("H", self.A)
        _, pK = self.factor_quot("K", self.A)
        return tensor_map(abelianized_map(pH), abelianized_map(pK))


def instance(data: CentralProductData, modulus: Optional[int] = None) -> CentralProductInstance:
    return CentralProductInstance(data, modulus)


# --------------------------------------------------------------------------
# inflation from central quotients
# --------------------------------------------------------------------------


def check_inflation_kernel(X: CayleyTable, N: Subgroup, m: Optional[int] = None, label: str = "") -> VerificationReport:
    """``0 -> Hom(N cap X') -> H^2(X/N) -> H^2(X)`` is exact for central ``N``."""
    clock = _Clock()
    if not N.is_central():
        raise GroupError("N must be central")
    m = m or X.order
    Q, proj = quotient(X, N)
    HQ, HX = cohomology(Q, m), cohomology(X, m)
    infm = induced_map_on_h2(lambda f: pullback_cocycle(f, proj), HQ, HX)
    NX = intersect(N, derived_subgroup(X))
    hn, hs = SubHom(N, m), SubHom(NX, m)
    cols = []
    for j in range(hs.structure.ngens):
        ext = extend_hom(hn, hs, _unit(hs.structure.ngens, j))
        cols.append(HQ.decompose(transgress(hn.values(ext), proj, N, m)))
    tra = AbelianMap.from_columns(hs.dual, HQ.structure, cols)
    ker = kernel_image_cokernel(infm)[0]
    checks = {
        "tra_injective": tra.is_injective(),
        "im_tra_eq_ker_inf": same_subgroup(HQ.structure, image_generators(tra), infm.kernel_generators()),
        "ker_inf_iso_hom": ker.isomorphic(hs.structure),
    }
    computed = {
        "H2_quotient": inv(HQ.structure),
        "H2": inv(HX.structure),
        "N_cap_derived": inv(hs.structure),
        "ker_inf": inv(ker),
    }
    return _report("inflation-kernel", label or X.name, computed, checks, clock)


def check_inflation_quotient(inst: CentralProductInstance, B: Subgroup) -> VerificationReport:
    """``H^2(G) = H^2(G/B)/N`` with ``N = Hom(B)`` for ``B <= Z``."""
    clock = _Clock()
    if not B.is_subset(inst.Z):
        raise GroupError("B must lie in Z = H' cap K'")
    G = inst.G
    Q, _ = inst.quot(G, B)
    infm = inst.inf_map(G, B)
    ker, im, coker = kernel_image_cokernel(infm)
    tra = inst.tra("G", B, B)
    hb = inst.hom(B)
    HQ = inst.h2(Q)
    quotient_by_tra = quotient_structure(HQ.structure, image_generators(tra))
    MG = inst.h2(G).structure
    checks = {
        "inf_surjective": coker.order == 1,
        "tra_injective": tra.is_injective(),
        "ker_inf_eq_im_tra": same_subgroup(HQ.structure, infm.kernel_generators(), image_generators(tra)),
        "ker_inf_iso_hom_B": ker.isomorphic(hb.structure),
        "M_G_iso_quotient": quotient_by_tra.isomorphic(MG),
    }
    computed = {
        "M_G": inv(MG),
        "M_G_mod_B": inv(HQ.structure),
        "N": inv(hb.dual),
        "ker_inf": inv(ker),
        "B_order": B.order,
        "instance": inst.describe(),
    }
    return _report("inflation-quotient", f"{inst.label}, |B|={B.order}", computed, checks, clock)


def check_inflation_surjective(inst: CentralProductInstance) -> VerificationReport:
    """``inf : H^2(G/B) -> H^2(G)`` is onto for every ``B <= Z``."""
    clock = _Clock()
    results = {}
    for B in subgroups_of_abelian(inst.G, inst.Z):
        cok = kernel_image_cokernel(inst.inf_map(inst.G, B))[2]
        results[",".join(map(str, B.elements))] = cok.order == 1
    computed = {"subgroups_checked": len(results), "instance": inst.describe()}
    return _report("inflation-onto", inst.label, computed, results, clock)


def check_extraspecial_multiplier(p: int, n: int, slow: bool = False) -> list[VerificationReport]:
    """Both extraspecial types of order ``p^(2n+1)``: ``M`` elementary of rank ``2n^2-n-1``."""
    out = []
    rank = 2 * n * n - n - 1
    for kind in ("+", "-"):
        clock = _Clock()
        order = p ** (2 * n + 1)
        label = f"{p}^(1+{2 * n}){kind}"
        if order > SLOW_ORDER and not slow:
            out.append(VerificationReport("extraspecial", label, {"order": order}, "skipped", 0.0))
            continue
        G = extraspecial(p, n, kind)
        M = schur_multiplier(G)
        Z = center(G)
        checks = {
            "extraspecial": Z.order == p and derived_subgroup(G).elements == Z.elements,
            "elementary_abelian": all(d == p for d in M.invariants),
            "order_matches_formula": M.order == p**rank,
        }
        computed = {"order": order, "M_G": inv(M), "formula_order": p**rank, "computed_order": M.order}
        out.append(_report("extraspecial", label, computed, checks, clock))
    return out


# --------------------------------------------------------------------------
# the two embeddings of M(H) + M(K) + Hom into M(G)
# --------------------------------------------------------------------------


@dataclass
class EmbeddingData:
    X: FinAbGroup  # H^2(H/A) + H^2(K/A) + Hom(H/A (x) K/A)
    L: list
    M: list
    Ncols: list
    lhs: FinAbGroup
    rhs: FinAbGroup
    MG: FinAbGroup
    witness_i: bool
    witness_ii: bool
    extra: dict = field(default_factory=dict)


def _in_block(parts: Sequence[FinAbGroup], i: int, vecs) -> list[tuple]:
    return [sum_embedding(parts, i, v) for v in vecs]


def embedding_data(inst: CentralProductInstance) -> EmbeddingData:
    def build():
        G, A, Z = inst.G, inst.A, inst.Z
        MG = inst.h2(G).structure
        # L and M: transgressions of homs on A vanishing on Z
        hA, hZ = inst.hom(A), inst.hom(Z)
        resAZ = restrict_hom(hA, hZ)
        vanish = resAZ.kernel_generators()
        traHA = inst.tra("H", A, A)
        traKA = inst.tra("K", A, A)
        L = [traHA(v) for v in vanish]
        M = [traKA(v) for v in vanish]
        # N: extend homs on Z to A, transgress in both factors
        Ncols = []
        for j in range(hZ.structure.ngens):
            ext = extend_hom(hA, hZ, _unit(hZ.structure.ngens, j))
            Ncols.append((traHA(ext), traKA(ext)))
        parts = inst.theta_parts(A)
        X = direct_sum(*parts)
        rel = _in_block(parts, 0, L) + _in_block(parts, 1, M)
        rel += [tuple(a) + tuple(b) + (0,) * parts[2].ngens for a, b in Ncols]
        lhs = quotient_structure(X, rel)
        # witness (i): inf o theta^-1 : X -> H^2(G) has kernel exactly <rel>
        phi = inst.inf_map(G, A) @ inst.theta_inverse()
        witness_i = same_subgroup(X, phi.kernel_generators(), rel)
        # RHS: (H^2(H/Z) + H^2(K/Z)) / tra(Hom Z) + Hom(H/Z (x) K/Z)
        partsZ = inst.theta_parts(Z)
        traHZ = inst.tra("H", Z, Z)
        traKZ = inst.tra("K", Z, Z)
        relZ = []
        for j in range(hZ.structure.ngens):
            e = _unit(hZ.structure.ngens, j)
            relZ.append(tuple(traHZ(e)) + tuple(traKZ(e)) + (0,) * partsZ[2].ngens)
        XZ = direct_sum(*partsZ)
        rhs = quotient_structure(XZ, relZ)
        # witness (ii): theta' on G/Z modulo relZ has kernel ker(inf: H^2(G/Z) -> H^2(G))
        thZ = inst.theta(Z)
        infZ = inst.inf_map(G, Z)
        GZ = inst.quot(G, Z)[0]
        witness_ii = same_subgroup(
            inst.h2(GZ).structure, preimage_generators(thZ, relZ), infZ.kernel_generators()
        ) and kernel_image_cokernel(infZ)[2].order == 1
        hom_tensor = hom_group(tensor(abelianization(inst.H).structure, abelianization(inst.K).structure), inst.m)
        extra = {
            "L": inv(subgroup_structure(parts[0], L)),
            "M": inv(subgroup_structure(parts[1], M)),
            "N": inv(hZ.dual),
            "Hom_HA_KA": inv(parts[2]),
            "Hom_H_K": inv(hom_tensor),
            "Hom_HZ_KZ": inv(partsZ[2]),
            "H2_H_mod_A": inv(parts[0]),
            "H2_K_mod_A": inv(parts[1]),
            "H2_H_mod_Z": inv(partsZ[0]),
            "H2_K_mod_Z": inv(partsZ[1]),
        }
        return EmbeddingData(X, L, M, Ncols, lhs, rhs, MG, witness_i, witness_ii, extra)

    return inst._memo(("embeddings",), build)


def check_embeddings(inst: CentralProductInstance) -> VerificationReport:
    clock = _Clock()
    d = embedding_data(inst)
    A, Z = inst.A, inst.Z
    L_expected = inst.hom(inst.AH).structure.order // max(1, Z.order)
    M_expected = inst.hom(inst.AK).structure.order // max(1, Z.order)
    Lord = subgroup_order(d.X, _in_block(inst.theta_parts(A), 0, d.L))
    Mord = subgroup_order(d.X, _in_block(inst.theta_parts(A), 1, d.M))
    checks = {
        "lhs_embeds": embeds(d.lhs, d.MG),
        "rhs_contains": embeds(d.MG, d.rhs),
        "witness_i_injective": d.witness_i,
        "witness_ii_injective": d.witness_ii,
        "L_order": Lord == L_expected,
        "M_order": Mord == M_expected,
        "hom_tensor_Z_level": d.extra["Hom_HZ_KZ"] == d.extra["Hom_H_K"],
    }
    first = "isomorphism" if d.lhs.order == d.MG.order else "strict"
    second = "isomorphism" if d.rhs.order == d.MG.order else "strict"
    computed = {
        "lhs": inv(d.lhs),
        "M_G": inv(d.MG),
        "rhs": inv(d.rhs),
        "first_embedding": first,
        "second_embedding": second,
        "instance": inst.describe(),
        **d.extra,
    }
    return _report("embeddings", inst.label, computed, checks, clock)


def chi_map(inst: CentralProductInstance) -> AbelianMap:
    """``chi : Hom(Z) -> H^2(G)``: extend to ``A cap H'`` (pair it with 0 on
    ``A cap K'``), transgress, pull back through ``theta`` and inflate."""
    Z, AH, A = inst.Z, inst.AH, inst.A
    hZ, hAH = inst.hom(Z), inst.hom(AH)
    parts = inst.theta_parts(A)
    traH = inst.tra("H", AH, A)
    zeta = inst.inf_map(inst.G, A) @ inst.theta_inverse()
    cols = []
    for j in range(hZ.structure.ngens):
        g = extend_hom(hAH, hZ, _unit(hZ.structure.ngens, j))
        cols.append(zeta(sum_embedding(parts, 0, traH(g))))
    return AbelianMap.from_columns(hZ.dual, inst.h2(inst.G).structure, cols)


def check_kernel_theta_prime(inst: CentralProductInstance) -> VerificationReport:
    clock = _Clock()
    G, A, Z = inst.G, inst.A, inst.Z
    HG = inst.h2(G)
    th = inst.theta()
    ker_gens = th.kernel_generators()
    ker = kernel_image_cokernel(th)[0]
    inf_img = image_generators(inst.inf_map(G, A))
    # ker theta' = inf(theta^-1(im(tra, tra, 0)))
    parts = inst.theta_parts(A)
    tt = _in_block(parts, 0, image_generators(inst.tra("H", inst.AH, A)))
    tt += _in_block(parts, 1, image_generators(inst.tra("K", inst.AK, A)))
    zeta = inst.inf_map(G, A) @ inst.theta_inverse()
    tra_gens = [zeta(v) for v in tt]
    chi = chi_map(inst)
    # (chi, inf o theta^-1 on Hom(H/A (x) K/A)) into ker(res, res)
    hom_part = [zeta(sum_embedding(parts, 2, _unit(parts[2].ngens, i))) for i in range(parts[2].ngens)]
    pair = hstack(chi, AbelianMap.from_columns(parts[2], HG.structure, hom_part))
    resres = vstack(restriction_map(inst.H_emb, HG, inst.h2(inst.H)), restriction_map(inst.K_emb, HG, inst.h2(inst.K)))
    checks = {
        "ker_order_eq_Z": ker.order == Z.order,
        "ker_iso_hom_Z": ker.isomorphic(inst.hom(Z).structure),
        "ker_in_inflation_image": subgroup_contains(HG.structure, inf_img, ker_gens),
        "kernel_spanned_by_transgressions": same_subgroup(HG.structure, ker_gens, tra_gens),
        "chi_injective": chi.is_injective(),
        "im_chi_eq_ker_theta": same_subgroup(HG.structure, image_generators(chi), ker_gens),
        "hom_sequence_injective": pair.is_injective(),
        "hom_sequence_image_eq_ker_res": same_subgroup(HG.structure, image_generators(pair), resres.kernel_generators()),
    }
    if Z.order == 1:
        checks["theta_prime_injective_when_Z_trivial"] = th.is_injective()
    computed = {
        "M_G": inv(HG.structure),
        "ker_theta_prime": inv(ker),
        "Z": Z.order,
        "theta_prime_target": inv(th.target),
        "instance": inst.describe(),
    }
    return _report("theta-kernel", inst.label, computed, checks, clock)


def check_hom_embeddings(inst: CentralProductInstance) -> VerificationReport:
    clock = _Clock()
    G, A, Z = inst.G, inst.A, inst.Z
    computed = {"instance": inst.describe()}
    if Z.order == 1:
        computed["branch"] = "Z trivial"
        return _report("hom-embeddings", inst.label, computed, {"vacuous": True}, clock)
    d = embedding_data(inst)
    parts = inst.theta_parts(A)
    LM = _in_block(parts, 0, d.L) + _in_block(parts, 1, d.M)
    Ngens = [tuple(a) + tuple(b) + (0,) * parts[2].ngens for a, b in d.Ncols]
    lm = subgroup_order(d.X, LM)
    with_n = subgroup_order(d.X, LM + Ngens)
    # transgressions of homs on A cap G' land in the first two summands
    th = inst.theta(A)
    traG = inst.tra("G", inst.AG, A)
    third_zero = all(not any(th(c)[parts[0].ngens + parts[1].ngens :]) for c in traG.columns())
    # into H^2(H/Z) + H^2(K/Z)
    tz = vstack(inst.tra("H", Z, Z), inst.tra("K", Z, Z))
    checks = {
        "hom_Z_into_quotient_injective": with_n == lm * Z.order,
        "tra_has_no_tensor_part": third_zero,
        "hom_Z_into_H2_HZ_KZ_injective": tz.is_injective(),
    }
    computed.update({"L_plus_M_order": lm, "with_N_order": with_n, "Z": Z.order})
    if A.elements == Z.elements:
        checks["A_eq_Z_iso"] = d.rhs.isomorphic(d.MG)
        computed["branch"] = "A = Z"
        computed["rhs"] = inv(d.rhs)
        computed["M_G"] = inv(d.MG)
    return _report("hom-embeddings", inst.label, computed, checks, clock)


# --------------------------------------------------------------------------
# equivalences on G/Z
# --------------------------------------------------------------------------


def _abar_pieces(inst: CentralProductInstance):
    """Objects for ``Gbar = G/Z`` with ``Hbar, Kbar, Abar`` inside."""
    G, A, Z = inst.G, inst.A, inst.Z
    Gb, pG = inst.quot(G, Z)
    Ab = image_subgroup(pG, A)
    out = {"Gb": Gb, "Ab": Ab}
    for w in ("H", "K"):
        emb = inst.factor_into_quotient(w, Z)
        Xb = emb.source
        Ab_X = preimage_subgroup(emb, Ab)
        T, inc = Ab_X.table()
        out[w] = {
            "emb": emb,
            "X": Xb,
            "A": Ab_X,
            "res": restriction_map(inc, inst.h2(Xb), inst.h2(T)),
            "psi": _psi_map(inst.h2(Xb), Ab_X),
        }
    # mu for (Hbar, Kbar, Abar); hom bases of Abar read inside each factor
    ab_basis = abelian_subgroup_basis(Ab)
    Ast = ab_basis.structure
    blocks = {}
    for w in ("H", "K"):
        emb = out[w]["emb"]
        Xab = abelianization(out[w]["X"])
        pos = {int(g): i for i, g in enumerate(emb.image)}
        cols = [tuple(int(v) for v in Xab.coords[pos[a]]) for a in ab_basis.basis]
        blocks[w] = (Xab.structure, AbelianMap.from_columns(Ast, Xab.structure, cols))
    Hab, aH = blocks["H"]
    Kab, aK = blocks["K"]
    first = tensor_map(AbelianMap.identity(Hab), aK)
    second = -(tensor_map(aH, AbelianMap.identity(Kab)) @ swap_map(Kab, Ast))
    out["mu_star"] = dual_map(hstack(first, second), inst.m)
    out["inf_img"] = image_generators(inst.inf_between("G", Z, A))
    return out


def _psi_map(HX: CohomologyGroup, N: Subgroup) -> AbelianMap:
    from .cohomology import psi_map

    return psi_map(HX, N)


def check_equivalences(inst: CentralProductInstance, limit: int = 4096) -> VerificationReport:
    """Conditions (i)-(iii) on classes of ``H^2(G/Z)`` plus the consequences
    for the first embedding."""
    clock = _Clock()
    A, Z, G = inst.A, inst.Z, inst.G
    pc = _abar_pieces(inst)
    Hg = inst.h2(pc["Gb"])
    th = inst.theta(Z)
    parts = inst.theta_parts(Z)
    n0, n1 = parts[0].ngens, parts[1].ngens
    inf_q = quotient_map(Hg.structure, pc["inf_img"])
    S = Hg.structure
    if S.order <= limit:
        classes = itertools.product(*(range(d) for d in S.orders))
    else:
        units = [_unit(S.ngens, i) for i in range(S.ngens)]
        classes = [tuple([0] * S.ngens)] + units + [tuple(a + b for a, b in zip(u, v)) for u in units for v in units]
    agree = disagree = eligible = mu_nonzero = mu_nonzero_not_inflated = 0
    for xi in classes:
        img = th(xi)
        x1, x2, t = img[:n0], img[n0 : n0 + n1], img[n0 + n1 :]
        r1 = any(pc["H"]["res"](x1))
        r2 = any(pc["K"]["res"](x2))
        if r1 and r2:
            continue
        eligible += 1
        c1 = not any(inf_q(xi))
        c2 = not any(pc["mu_star"](t))
        c3 = not any(pc["H"]["psi"](x1)) and not any(pc["K"]["psi"](x2))
        if c1 == c2 == c3:
            agree += 1
        else:
            disagree += 1
        if not c2:
            mu_nonzero += 1
            mu_nonzero_not_inflated += not c1
    d = embedding_data(inst)
    first_iso = d.lhs.order == d.MG.order
    second_iso = d.rhs.order == d.MG.order
    inf_H_onto = kernel_image_cokernel(inst.inf_between("H", Z, A))[2].order == 1
    inf_K_onto = kernel_image_cokernel(inst.inf_between("K", Z, A))[2].order == 1
    inf_G_onto = kernel_image_cokernel(inst.inf_between("G", Z, A))[2].order == 1
    checks = {
        "conditions_agree": disagree == 0,
        "factor_inflations_onto_imply_first_iso": (not (inf_H_onto and inf_K_onto)) or first_iso,
        "second_iso_implies_first": (not second_iso) or first_iso,
        "first_iso_iff_inflation_onto": first_iso == inf_G_onto,
    }
    computed = {
        "classes_eligible": eligible,
        "classes_agree": agree,
        "mu_star_nonzero": mu_nonzero,
        "mu_star_nonzero_not_inflated": mu_nonzero_not_inflated,
        "inf_H_onto": inf_H_onto,
        "inf_K_onto": inf_K_onto,
        "inf_G_onto": inf_G_onto,
        "first_iso": first_iso,
        "second_iso": second_iso,
        "instance": inst.describe(),
    }
    return _report("equivalences", inst.label, computed, checks, clock)


# --------------------------------------------------------------------------
# tensor sequence and the big diagram
# --------------------------------------------------------------------------


def check_tensor_sequence(inst: CentralProductInstance) -> VerificationReport:
    clock = _Clock()
    mu, lam = inst.mu(literal=True), inst.lam()
    HK = mu.target
    comp = lam @ mu
    _, im_mu, _ = kernel_image_cokernel(mu)
    ker_lam = kernel_image_cokernel(lam)[0]
    mu_s, lam_s = dual_map(mu, inst.m), dual_map(lam, inst.m)
    checks = {
        "lambda_surjective": lam.is_surjective(),
        "lambda_mu_zero": not any(any(c) for c in comp.columns()),
        "im_mu_eq_ker_lambda": im_mu.order == ker_lam.order,
        "lambda_star_injective": lam_s.is_injective(),
        "im_lambda_star_eq_ker_mu_star": same_subgroup(
            lam_s.target, image_generators(lam_s), mu_s.kernel_generators()
        ),
    }
    computed = {
        "H_tensor_K": inv(HK),
        "HA_tensor_KA": inv(lam.target),
        "im_mu": inv(im_mu),
        "instance": inst.describe(),
    }
    return _report("tensor-sequence", inst.label, computed, checks, clock)


def check_diagram(inst: CentralProductInstance) -> VerificationReport:
    """Every arrow as an :class:`AbelianMap`; rectangles as matrix identities."""
    clock = _Clock()
    G, A = inst.G, inst.A
    m = inst.m
    HG, HH, HK = inst.h2(G), inst.h2(inst.H), inst.h2(inst.K)
    AT, incA = A.table()
    HA2 = inst.h2(AT)
    # top row and columns
    tra_G = inst.tra("G", inst.AG, A)
    resres = vstack(restrict_hom(inst.hom(inst.AG), inst.hom(inst.AH)), restrict_hom(inst.hom(inst.AG), inst.hom(inst.AK)))
    parts = inst.theta_parts(A)
    X = direct_sum(*parts)
    tra_H = inst.tra("H", inst.AH, A)
    tra_K = inst.tra("K", inst.AK, A)
    tt0 = block_diag(tra_H, tra_K, AbelianMap.zero(FinAbGroup(()), parts[2]))
    theta = inst.theta(A)
    inf_G = inst.inf_map(G, A)
    theta_p = inst.theta()
    inf_H = inst.inf_map(inst.H, inst.pull("H", A))
    inf_K = inst.inf_map(inst.K, inst.pull("K", A))
    lam_s = dual_map(inst.lam(), m)
    iil = block_diag(inf_H, inf_K, lam_s)
    # bottom: (res, psi) on G, H, K into H^2(A) + Hom(. (x) A)
    ha = inst.hom(A).basis
    Gab, Hab, Kab = abelianization(G), abelianization(inst.H), abelianization(inst.K)

    def pairing(X_ab, to_ambient, a_elems) -> TensorBasis:
        return tensor_basis(X_ab.structure, [to_ambient(b) for b in X_ab.basis], ha.structure, a_elems)

    def res_psi(HX: CohomologyGroup, inc_A: GroupMap, tb: TensorBasis) -> AbelianMap:
        res = restriction_map(inc_A, HX, HA2)
        cols = [tb.pairing_coords(r) for r in HX.reps]
        psi = AbelianMap.from_columns(HX.structure, tb.dual, cols)
        return vstack(res, psi)

    def a_in(which):
        X, emb = inst.factor(which)
        pos = {int(g): i for i, g in enumerate(emb.image)}
        return GroupMap(AT, X, np.array([pos[int(a)] for a in incA.image])), [pos[int(a)] for a in ha.basis]

    incH, a_H = a_in("H")
    incK, a_K = a_in("K")
    rp_G = res_psi(HG, incA, pairing(Gab, int, list(ha.basis)))
    rp_H = res_psi(HH, incH, pairing(Hab, int, a_H))
    rp_K = res_psi(HK, incK, pairing(Kab, int, a_K))
    alpha = hstack(abelianized_map(inst.H_emb), abelianized_map(inst.K_emb))
    alpha_star = dual_map(tensor_map(alpha, AbelianMap.identity(ha.structure)), m)
    H2A = HA2.structure
    delta = vstack(AbelianMap.identity(H2A), AbelianMap.identity(H2A))
    left_bottom = block_diag(delta, vstack(alpha_star, alpha_star)) @ rp_G
    HomHA, HomKA = hom_group(tensor(Hab.structure, ha.structure), m), hom_group(tensor(Kab.structure, ha.structure), m)
    perm = permute_blocks([H2A, HomHA, H2A, HomKA, HomHA, HomKA], [0, 2, 1, 3, 4, 5])
    results = {}
    for literal in (False, True):
        mu_s = dual_map(inst.mu(literal=literal), m)
        right_col = block_diag(rp_H, rp_K, mu_s)
        results[literal] = (perm @ right_col @ theta_p).equals(left_bottom), right_col
    right_bottom = results[False][1]

    def exact_at(f: AbelianMap, g: AbelianMap) -> bool:
        """``im f = ker g`` inside ``f.target``."""
        return same_subgroup(f.target, image_generators(f), g.kernel_generators())

    checks = {
        "top_commutes": (theta @ tra_G).equals(tt0 @ resres),
        "middle_commutes": (theta_p @ inf_G).equals(iil @ theta),
        "bottom_commutes": results[False][0],
        "theta_iso": theta.is_injective() and theta.is_surjective(),
        "left_tra_injective": tra_G.is_injective(),
        "left_exact_at_H2_GA": exact_at(tra_G, inf_G),
        "left_exact_at_H2_G": exact_at(inf_G, rp_G),
        "right_tra_injective": tt0.is_injective(),
        "right_exact_at_X": exact_at(tt0, iil),
        "right_exact_at_H2_sum": exact_at(iil, right_bottom),
        "alpha_star_injective": alpha_star.is_injective(),
    }
    computed = {
        "bottom_commutes_with_literal_eta": results[True][0],
        "H2_G_mod_A": inv(inst.h2(inst.quot(G, A)[0]).structure),
        "X": inv(X),
        "M_G": inv(HG.structure),
        "instance": inst.describe(),
    }
    return _report("diagram", inst.label, computed, checks, clock)


# --------------------------------------------------------------------------
# Jones' divisibility
# --------------------------------------------------------------------------


def jones_terms(X: CayleyTable, N: Subgroup) -> dict:
    Q, _ = quotient(X, N)
    T, _ = N.table()
    lhs = schur_multiplier(X).order * intersect(derived_subgroup(X), N).order
    tens = tensor(abelianization(Q).structure, abelian_subgroup_basis(N).structure)
    rhs = schur_multiplier(Q).order * schur_multiplier(T).order * tens.order
    return {"lhs": lhs, "rhs": rhs, "bound": rhs // intersect(derived_subgroup(X), N).order}


def check_jones(X: CayleyTable, N: Subgroup, label: str = "") -> VerificationReport:
    clock = _Clock()
    if not N.is_central():
        raise GroupError("N must be central")
    t = jones_terms(X, N)
    return _report(
        "jones", label or f"{X.name}, |N|={N.order}", {"order": X.order, "N": N.order, **t},
        {"divides": t["rhs"] % t["lhs"] == 0}, clock,
    )


def check_jones_all(X: CayleyTable, label: str = "") -> VerificationReport:
    """The divisibility for every central subgroup of ``X``."""
    clock = _Clock()
    checks, bounds = {}, []
    for N in subgroups_of_abelian(X, center(X)):
        t = jones_terms(X, N)
        checks[",".join(map(str, N.elements))] = t["rhs"] % t["lhs"] == 0
        bounds.append(t["bound"])
    computed = {"order": X.order, "central_subgroups": len(checks), "min_bound": min(bounds)}
    return _report("jones", label or X.name, computed, checks, clock)


# --------------------------------------------------------------------------
# worked examples
# --------------------------------------------------------------------------


WORKED_EXAMPLES = ("heis-elem", "heis-cyc", "wreath-cyc", "heis-minus-cyc")


def _elementary(p: int, r: int) -> list[int]:
    return [p] * r


def run_worked_examples(p: int = 3, n: int = 1, slow: bool = False, which=WORKED_EXAMPLES) -> list[VerificationReport]:
    """Check the four worked central products against their known invariants.

    ``which`` selects a subset of :data:`WORKED_EXAMPLES`.  For odd ``p`` the
    known values are asserted; for ``p = 2`` they are only reported.
    """
    from . import catalog

    out = []
    odd = p % 2 == 1
    plan = []
    if "heis-elem" in which:
        r = n * (n + 3) // 2
        plan.append(("heis-elem", catalog.heis_elementary(p, n) if p ** (n + 3) <= 512 else None, p ** (n + 3),
                     {"M_G": _elementary(p, r + 2), "lhs": _elementary(p, r),
                      "rhs": _elementary(p, (n + 1) * (n + 4) // 2 + 2), "first": "strict", "second": "strict"}))
    if "heis-cyc" in which:
        plan.append(("heis-cyc", None, p**5, {"M_G": _elementary(p, 2), "lhs": _elementary(p, 2),
                                         "rhs": _elementary(p, 4), "first": "isomorphism", "second": "strict",
                                         "jones_bound": p**2}))
    if "wreath-cyc" in which:
        plan.append(("wreath-cyc", None, p**5, {"M_G_order": p**3, "lhs": _elementary(p, 3), "first": "isomorphism",
                                         "second": None, "jones_bound": p**3}))
    if "heis-minus-cyc" in which:
        plan.append(("heis-minus-cyc", None, p ** (n + 3), {"M_G": _elementary(p, 2), "lhs": _elementary(p, 2),
                                                  "rhs": _elementary(p, 2), "first": "isomorphism",
                                                  "second": "isomorphism"}))
    for name, data, order, expect in plan:
        clock = _Clock()
        label = f"{name}(p={p}" + (f",n={n})" if name in ("heis-elem", "heis-minus-cyc") else ")")
        if order > 512:
            out.append(VerificationReport(name, label, {"order": order, "reason": "size guard"}, "skipped", 0.0))
            continue
        if order > SLOW_ORDER and not slow:
            out.append(VerificationReport(name, label, {"order": order, "reason": "slow tier"}, "skipped", 0.0))
            continue
        if data is None:
            build = {
                "heis-elem": lambda: catalog.heis_elementary(p, n),
                "heis-cyc": lambda: catalog.heis_cyclic(p),
                "wreath-cyc": lambda: catalog.wreath_cyclic(p),
                "heis-minus-cyc": lambda: catalog.heis_minus_cyclic(p, n),
            }[name]
            try:
                data = build()
            except GroupError as exc:
                out.append(VerificationReport(name, label, {"order": order, "reason": str(exc)}, "skipped", clock.ms()))
                continue
        inst = CentralProductInstance(data)
        b = check_embeddings(inst)
        c = b.computed
        checks = {"embedding_checks": b.passed}
        computed = {
            "M_G": c["M_G"],
            "lhs": c["lhs"],
            "rhs": c["rhs"],
            "first_embedding": c["first_embedding"],
            "second_embedding": c["second_embedding"],
            "Z": inst.Z.order,
            "expected_source": "published" if odd else "derived",
        }
        if "jones_bound" in expect:
            jb = check_jones_all(inst.G).computed["min_bound"]
            computed["jones_min_bound"] = jb
        if odd:
            if "M_G" in expect:
                checks["M_G"] = c["M_G"] == expect["M_G"]
            if "M_G_order" in expect:
                checks["M_G_order"] = int(np.prod(c["M_G"] or [1])) == expect["M_G_order"]
            if "lhs" in expect:
                checks["lhs"] = c["lhs"] == expect["lhs"]
            if "rhs" in expect:
                checks["rhs"] = c["rhs"] == expect["rhs"]
            checks["first_embedding"] = c["first_embedding"] == expect["first"]
            if expect["second"] is not None:
                checks["second_embedding"] = c["second_embedding"] == expect["second"]
            checks["Z_trivial"] = inst.Z.order == 1
            if "jones_bound" in expect:
                checks["jones_bound"] = computed["jones_min_bound"] == expect["jones_bound"]
        out.append(_report(name, label, computed, checks, clock))
    return out


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------


def _instance_builders() -> dict:
    from . import catalog

    return {
        "heis-elem": lambda: catalog.heis_elementary(3, 1),
        "heis-minus-cyc": lambda: catalog.heis_minus_cyclic(3, 1),
        "heis-cyc-small": lambda: catalog.heis_cyclic_small(3),
        "Z3^2oZ3^2": lambda: catalog.elementary_pair(3),
        "Z4oZ4": catalog.z4_o_z4,
        "Q8oZ4": catalog.q8_o_z4,
        "D8oD8": lambda: catalog.extraspecial_pair(2, "+"),
        "D8oQ8": lambda: catalog.extraspecial_pair(2, "-"),
        "E27oE27": lambda: catalog.extraspecial_pair(3, "+"),
        "heis-cyc": lambda: catalog.heis_cyclic(3),
        "wreath-cyc": lambda: catalog.wreath_cyclic(3),
    }


FAST_INSTANCES = ["heis-elem", "heis-minus-cyc", "heis-cyc-small", "Z3^2oZ3^2", "Z4oZ4", "Q8oZ4", "D8oD8", "D8oQ8", "E27oE27"]
SLOW_INSTANCES = ["heis-cyc", "wreath-cyc"]
DIAGRAM_INSTANCES = ["heis-elem", "heis-minus-cyc", "Z3^2oZ3^2", "Q8oZ4", "D8oD8"]

_INSTANCES: dict = {}


def named_instance(name: str) -> CentralProductInstance:
    if name not in _INSTANCES:
        _INSTANCES[name] = CentralProductInstance(_instance_builders()[name]())
    return _INSTANCES[name]


def _task_instance_checks(name: str) -> list[VerificationReport]:
    inst = named_instance(name)
    out = [check_embeddings(inst), check_kernel_theta_prime(inst), check_inflation_surjective(inst)]
    for B in subgroups_of_abelian(inst.G, inst.Z):
        if B.order > 1:
            out.append(check_inflation_quotient(inst, B))
    out += [check_hom_embeddings(inst), check_equivalences(inst), check_tensor_sequence(inst)]
    if name in DIAGRAM_INSTANCES:
        out.append(check_diagram(inst))
    return out


def _task_examples(slow: bool) -> list[VerificationReport]:
    return run_worked_examples(3, 1, slow=slow)


def _task_extraspecial(p: int, n: int, slow: bool) -> list[VerificationReport]:
    return check_extraspecial_multiplier(p, n, slow=slow)


def _task_jones(name: str) -> list[VerificationReport]:
    from .catalog import named

    return [check_jones_all(named(name), name)]


def _task_oracle(name: str, slow: bool) -> list[VerificationReport]:
    from .catalog import named
    from .homology import h2_integral

    clock = _Clock()
    G = named(name)
    a = schur_multiplier(G).invariants
    b = h2_integral(G, slow=slow).invariants
    return [_report("oracle", name, {"order": G.order, "multiplier": a, "h2_integral": b}, {"equal": a == b}, clock)]


TASK_FUNCTIONS = {
    "instance": _task_instance_checks,
    "examples": _task_examples,
    "extraspecial": _task_extraspecial,
    "jones": _task_jones,
    "oracle": _task_oracle,
}


def suite_tasks(suite: str, slow: bool = False) -> list[tuple]:
    """Picklable task descriptors ``(kind, args)`` for a suite."""
    from .catalog import EXTENDED_CATALOG, LARGE_CATALOG, ORACLE_CATALOG

    if suite not in ("paper", "oracle", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    tasks: list[tuple] = []
    if suite in ("paper", "all"):
        tasks.append(("examples", (slow,)))
        tasks.append(("extraspecial", (2, 2, slow)))
        if slow:
            tasks.append(("extraspecial", (3, 2, slow)))
        for name in FAST_INSTANCES + (SLOW_INSTANCES if slow else []):
            tasks.append(("instance", (name,)))
        for name in ORACLE_CATALOG + EXTENDED_CATALOG + LARGE_CATALOG:
            tasks.append(("jones", (name,)))
    if suite in ("oracle", "all"):
        for name in ORACLE_CATALOG + EXTENDED_CATALOG:
            tasks.append(("oracle", (name, slow)))
    return tasks


def run_task(task: tuple) -> list[VerificationReport]:
    kind, args = task
    return TASK_FUNCTIONS[kind](*args)
