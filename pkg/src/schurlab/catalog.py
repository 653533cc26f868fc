"""Named groups, the small-group catalog, worked-example instances and the
JSON group-spec format.

Group-spec JSON (schema version 1)
----------------------------------
Every spec is an object with a ``kind``:

``{"kind": "cyclic", "n": 6}``
``{"kind": "abelian", "invariants": [2, 4]}``
``{"kind": "named", "name": "Q8"}``  (any key of :data:`NAMED`)
``{"kind": "extraspecial", "p": 2, "n": 2, "type": "+"}``
``{"kind": "metacyclic", "m": 8, "s": 2, "t": 4, "r": 7}``
    ``<a, b | a^m = 1, b^s = a^t, b a b^-1 = a^r>``
``{"kind": "pc", "rel_orders": [3, 3, 3], "power_rules": {"0": [0, 0, 1]},
   "commutator_rules": {"1,0": [0, 0, 1]}}``
    words are exponent vectors; key ``"j,i"`` (``j > i``) gives ``[g_j, g_i]``
``{"kind": "direct", "factors": [spec, spec, ...]}``
``{"kind": "central", "left": spec, "right": spec, "amalgam": [[a, b], ...]}``
    ``a``/``b`` are element indices, or exponent vectors when the factor is a
    pc group; ``"amalgam": "centers"`` identifies two cyclic centers of equal
    order through their least-index generators.

An optional ``"name"`` field labels the result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .groups import (
    CayleyTable,
    CentralProductSpec,
    GroupError,
    GroupMap,
    PcPresentation,
    build_cyclic,
    central_product,
    check_group,
    direct_product,
    element_order,
    from_pc_presentation,
    pc_element,
)
from .subgroups import Subgroup, center, subgroup_generated

SCHEMA_VERSION = 1


class SpecError(ValueError):
    """Malformed group-spec document."""


# --------------------------------------------------------------------------
# builders
# --------------------------------------------------------------------------


def abelian(invariants) -> CayleyTable:
    G = build_cyclic(1)
    for d in invariants:
        G = direct_product(G, build_cyclic(int(d)))[0]
    return _named(G, "x".join(f"Z{d}" for d in invariants) or "1")


def elementary_abelian(p: int, r: int) -> CayleyTable:
    return _named(abelian([p] * r), f"Z{p}^{r}")


def metacyclic(m: int, s: int, t: int, r: int, name: str = "") -> CayleyTable:
    """``<a, b | a^m, b^s = a^t, b a b^-1 = a^r>`` on words ``a^i b^j``."""
    if pow(r, s, m) != 1 % m or (r * t - t) % m:
        raise GroupError("metacyclic parameters are inconsistent")
    n = m * s
    i, j = np.divmod(np.arange(n), s)
    rpow = np.array([pow(r, e, m) for e in range(s)], dtype=np.int64)
    # (a^i b^j)(a^k b^l) = a^(i + k r^j) b^(j + l), folding b^s = a^t
    ii, jj = i[:, None], j[:, None]
    kk, ll = i[None, :], j[None, :]
    e_a = ii + kk * rpow[jj]
    e_b = jj + ll
    wrap = e_b >= s
    e_a = (e_a + wrap * t) % m
    e_b = e_b - wrap * s
    G = CayleyTable(e_a * s + e_b, gen_hint=(s % n, 1 % n), name=name or f"Meta({m},{s},{t},{r})")
    check_group(G)
    return G


def dihedral(order: int) -> CayleyTable:
    return metacyclic(order // 2, 2, 0, order // 2 - 1, name=f"D{order}")


def dicyclic(order: int) -> CayleyTable:
    m = order // 2
    return metacyclic(m, 2, m // 2, m - 1, name=f"Q{order}")


def semidihedral(order: int) -> CayleyTable:
    m = order // 2
    return metacyclic(m, 2, 0, m // 2 - 1, name=f"SD{order}")


def modular_group(order: int) -> CayleyTable:
    m = order // 2
    return metacyclic(m, 2, 0, m // 2 + 1, name=f"M{order}")


def pc_group(rel_orders, power_rules=None, commutator_rules=None, name: str = "") -> CayleyTable:
    pres = PcPresentation(tuple(rel_orders), dict(power_rules or {}), dict(commutator_rules or {}))
    return from_pc_presentation(pres, name=name)


def extraspecial_p3(p: int, kind: str = "+") -> CayleyTable:
    """Order ``p^3`` on generators ``a, b, c`` with ``[b, a] = c`` central.

    ``"+"``: exponent ``p`` for odd ``p`` (dihedral ``D8`` for ``p = 2``);
    ``"-"``: exponent ``p^2`` via ``a^p = c`` (quaternion ``Q8`` for ``p = 2``).
    """
    comm = {(1, 0): (0, 0, 1)}
    if kind == "+":
        name = "D8" if p == 2 else f"E{p**3}+"
        return pc_group((p, p, p), {}, comm, name)
    if kind == "-":
        if p == 2:
            return pc_group((2, 2, 2), {0: (0, 0, 1), 1: (0, 0, 1)}, comm, "Q8")
        return pc_group((p, p, p), {0: (0, 0, 1)}, comm, f"E{p**3}-")
    raise GroupError(f"unknown extraspecial type {kind!r}")


def center_generator(G: CayleyTable) -> int:
    """Least-index generator of a cyclic center."""
    Z = center(G)
    for z in Z.elements:
        if element_order(G, z) == Z.order:
            return z
    raise GroupError("center is not cyclic")


def amalgamate_centers(H: CayleyTable, K: CayleyTable):
    """Central product identifying cyclic centers of equal order."""
    zh, zk = center_generator(H), center_generator(K)
    if center(H).order != center(K).order:
        raise GroupError("centers have different orders")
    return central_product(CentralProductSpec(H, K, ((zh, zk),)))


def extraspecial(p: int, n: int, kind: str = "+") -> CayleyTable:
    """Extraspecial group of order ``p^(2n+1)`` as an iterated central product."""
    if n < 1:
        raise GroupError("n must be at least 1")
    factors = [extraspecial_p3(p, "+") for _ in range(n - 1)] + [extraspecial_p3(p, kind)]
    G = factors[0]
    for F in factors[1:]:
        G = amalgamate_centers(G, F)[0]
    sign = "+" if kind == "+" else "-"
    return _named(G, f"{p}^(1+{2 * n}){sign}")


def _named(G: CayleyTable, name: str) -> CayleyTable:
    return CayleyTable(G.mul, G.inv, G.gen_hint, name, G.labels)


# --------------------------------------------------------------------------
# catalog
# --------------------------------------------------------------------------


def _z4_o_z4():
    Z4 = build_cyclic(4)
    return _named(central_product(CentralProductSpec(Z4, Z4, ((2, 2),)))[0], "Z4oZ4")


def _pauli():
    D8 = extraspecial_p3(2, "+")
    return _named(central_product(CentralProductSpec(D8, build_cyclic(4), ((center_generator(D8), 2),)))[0], "D8oZ4")


NAMED: dict[str, Callable[[], CayleyTable]] = {
    "Z2^2": lambda: elementary_abelian(2, 2),
    "Z2xZ4": lambda: abelian([2, 4]),
    "Z2^3": lambda: elementary_abelian(2, 3),
    "Z3^2": lambda: elementary_abelian(3, 2),
    "D8": lambda: extraspecial_p3(2, "+"),
    "Q8": lambda: extraspecial_p3(2, "-"),
    "D8xZ2": lambda: _named(direct_product(extraspecial_p3(2, "+"), build_cyclic(2))[0], "D8xZ2"),
    "Z4oZ4": _z4_o_z4,
    "S3": lambda: dihedral(6),
    "D10": lambda: dihedral(10),
    "D12": lambda: dihedral(12),
    "Q12": lambda: dicyclic(12),
    "Z2xZ6": lambda: abelian([2, 6]),
    "Z4xZ4": lambda: abelian([4, 4]),
    "Z2xZ8": lambda: abelian([2, 8]),
    "Z2^2xZ4": lambda: abelian([2, 2, 4]),
    "Z2^4": lambda: elementary_abelian(2, 4),
    "D16": lambda: dihedral(16),
    "Q16": lambda: dicyclic(16),
    "SD16": lambda: semidihedral(16),
    "M16": lambda: modular_group(16),
    "Z4:Z4": lambda: metacyclic(4, 4, 0, 3, "Z4:Z4"),
    "Q8xZ2": lambda: _named(direct_product(extraspecial_p3(2, "-"), build_cyclic(2))[0], "Q8xZ2"),
    "D8oZ4": _pauli,
    "E27+": lambda: extraspecial_p3(3, "+"),
    "E27-": lambda: extraspecial_p3(3, "-"),
    "2^(1+4)+": lambda: extraspecial(2, 2, "+"),
    "2^(1+4)-": lambda: extraspecial(2, 2, "-"),
    "D8xZ2^2": lambda: _named(direct_product(extraspecial_p3(2, "+"), elementary_abelian(2, 2))[0], "D8xZ2^2"),
    "D8xZ4": lambda: _named(direct_product(extraspecial_p3(2, "+"), build_cyclic(4))[0], "D8xZ4"),
    "Q8xZ4": lambda: _named(direct_product(extraspecial_p3(2, "-"), build_cyclic(4))[0], "Q8xZ4"),
    "D32": lambda: dihedral(32),
    "Q32": lambda: dicyclic(32),
    "Z2^5": lambda: elementary_abelian(2, 5),
    "Z4xZ8": lambda: abelian([4, 8]),
    "Z2xZ4xZ4": lambda: abelian([2, 4, 4]),
}

# the order-<=16 list checked against the bar-resolution oracle by default
ORACLE_CATALOG = [f"Z{n}" for n in range(1, 17)] + [
    "Z2^2",
    "Z2xZ4",
    "Z2^3",
    "Z3^2",
    "D8",
    "Q8",
    "D8xZ2",
    "Z4oZ4",
]

# extra groups of order <= 16 (also oracle-checked)
EXTENDED_CATALOG = ["S3", "D10", "D12", "Q12", "Z2xZ6", "Z4xZ4", "Z2xZ8", "Z2^2xZ4", "Z2^4",
                    "D16", "Q16", "SD16", "M16", "Z4:Z4", "Q8xZ2", "D8oZ4"]

# order 17..32 additions used by the central-subgroup (Jones) sweep
LARGE_CATALOG = ["E27+", "E27-", "2^(1+4)+", "2^(1+4)-", "D8xZ2^2", "D8xZ4", "Q8xZ4", "D32",
                 "Q32", "Z2^5", "Z4xZ8", "Z2xZ4xZ4"] + [f"Z{n}" for n in range(17, 33)]


@lru_cache(maxsize=None)
def named(name: str) -> CayleyTable:
    if name.startswith("Z") and name[1:].isdigit():
        return _named(build_cyclic(int(name[1:])), name)
    try:
        builder = NAMED[name]
    except KeyError as exc:
        raise SpecError(f"unknown group name {name!r}") from exc
    return _named(builder(), name)


def catalog(max_order: int = 16) -> list[CayleyTable]:
    names = ORACLE_CATALOG + EXTENDED_CATALOG + (LARGE_CATALOG if max_order > 16 else [])
    out = [named(n) for n in names]
    return [G for G in out if G.order <= max_order]


# --------------------------------------------------------------------------
# worked examples as central products
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CentralProductData:
    """A central product with its factor embeddings and a short label."""

    label: str
    G: CayleyTable
    H_emb: GroupMap
    K_emb: GroupMap


def _cp(label: str, H: CayleyTable, K: CayleyTable, amalgam) -> CentralProductData:
    G, mh, mk = central_product(CentralProductSpec(H, K, tuple(amalgam)))
    return CentralProductData(label, _named(G, label), GroupMap(H, G, mh.image), GroupMap(K, G, mk.image))


def heis_elementary(p: int = 3, n: int = 1) -> CentralProductData:
    """``E(p^3, exp p)`` with ``Z_p^(n+1)``, amalgamating ``H'`` with one factor."""
    H = extraspecial_p3(p, "+")
    K = elementary_abelian(p, n + 1)
    c = pc_element(H, (0, 0, 1))
    return _cp(f"heis-elem(p={p},n={n})", H, K, [(c, _abelian_gen(K, 0))])


def heis_minus_cyclic(p: int = 3, n: int = 1) -> CentralProductData:
    """``E(p^3, exp p^2)`` with ``Z_(p^(n+1))`` amalgamating ``H'`` with ``Z_p``."""
    H = extraspecial_p3(p, "-")
    K = build_cyclic(p ** (n + 1))
    c = pc_element(H, (0, 0, 1))
    return _cp(f"heis-minus-cyc(p={p},n={n})", H, K, [(c, p**n)])


def heis_cyclic(p: int = 3) -> CentralProductData:
    """``<a, a1, a2 | [a1, a] = a2>`` (order ``p^3``) with ``Z_(p^3)``, ``a2 = g^(p^2)``."""
    H = pc_group((p, p, p), {}, {(1, 0): (0, 0, 1)}, f"H{p**3}")
    K = build_cyclic(p**3)
    return _cp(f"heis-cyc(p={p})", H, K, [(pc_element(H, (0, 0, 1)), p * p)])


def wreath_p4(p: int = 3) -> CentralProductData:
    return pc_group(
        (p, p, p, p), {}, {(1, 0): (0, 0, 1, 0), (2, 0): (0, 0, 0, 1)}, f"W{p**4}"
    )


def wreath_cyclic(p: int = 3) -> CentralProductData:
    """Class-3 group of order ``p^4`` with ``Z_(p^2)``, ``a3 = g^p``."""
    H = wreath_p4(p)
    K = build_cyclic(p * p)
    return _cp(f"wreath-cyc(p={p})", H, K, [(pc_element(H, (0, 0, 0, 1)), p)])


def heis_cyclic_small(p: int = 3) -> CentralProductData:
    """Same ``H`` as :func:`heis_cyclic` with the smaller ``K = Z_(p^2)``."""
    H = pc_group((p, p, p), {}, {(1, 0): (0, 0, 1)}, f"H{p**3}")
    return _cp(f"heis-cyc-small(p={p})", H, build_cyclic(p * p), [(pc_element(H, (0, 0, 1)), p)])


def extraspecial_pair(p: int, kind: str = "+") -> CentralProductData:
    H = extraspecial_p3(p, "+")
    K = extraspecial_p3(p, kind)
    return _cp(f"E({p}^3)oE({p}^3){kind}", H, K, [(center_generator(H), center_generator(K))])


def direct_pair(H: CayleyTable, K: CayleyTable, label: Optional[str] = None) -> CentralProductData:
    return _cp(label or f"{H.name}x{K.name}", H, K, [])


def elementary_pair(p: int = 3) -> CentralProductData:
    """``Z_p^2`` with ``Z_p^2`` amalgamating one direct factor (``A`` not inside ``G'``)."""
    E = elementary_abelian(p, 2)
    g = _abelian_gen(E, 0)
    return _cp(f"Z{p}^2oZ{p}^2", E, E, [(g, g)])


def q8_o_z4() -> CentralProductData:
    return _cp("Q8oZ4", extraspecial_p3(2, "-"), build_cyclic(4), [(center_generator(extraspecial_p3(2, "-")), 2)])


def z4_o_z4() -> CentralProductData:
    Z4 = build_cyclic(4)
    return _cp("Z4oZ4", Z4, Z4, [(2, 2)])


def _abelian_gen(K: CayleyTable, i: int) -> int:
    """Element of an ``abelian()``-built table with a 1 in factor ``i``."""
    # factors are nested direct products with the last factor least significant
    gens = [g for g in (K.gen_hint or ()) if g]
    return int(gens[i])


# --------------------------------------------------------------------------
# JSON specs
# --------------------------------------------------------------------------


def _int_key_rules(d, pair: bool):
    out = {}
    for k, v in (d or {}).items():
        if pair:
            j, i = (int(t) for t in str(k).split(","))
            out[(j, i)] = tuple(int(x) for x in v)
        else:
            out[int(k)] = tuple(int(x) for x in v)
    return out


def _element(G: CayleyTable, ref) -> int:
    if isinstance(ref, int):
        if not 0 <= ref < G.order:
            raise SpecError(f"element index {ref} out of range")
        return ref
    if isinstance(ref, list) and G.labels is not None:
        try:
            return pc_element(G, ref)
        except ValueError as exc:
            raise SpecError(f"no element with exponent vector {ref}") from exc
    raise SpecError(f"cannot resolve element reference {ref!r}")


def build_from_spec(spec: dict) -> CayleyTable:
    """Build a group from a parsed group-spec document."""
    G = _build_spec(spec)
    name = spec.get("name") if isinstance(spec, dict) else None
    return _named(G, name) if name else G


def _build_spec(spec) -> CayleyTable:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("group spec must be an object with a 'kind'")
    kind = spec["kind"]
    try:
        if kind == "cyclic":
            return build_cyclic(int(spec["n"]))
        if kind == "abelian":
            return abelian([int(d) for d in spec["invariants"]])
        if kind == "named":
            return named(str(spec["name"]))
        if kind == "extraspecial":
            return extraspecial(int(spec["p"]), int(spec.get("n", 1)), str(spec.get("type", "+")))
        if kind == "metacyclic":
            return metacyclic(int(spec["m"]), int(spec["s"]), int(spec["t"]), int(spec["r"]))
        if kind == "pc":
            return pc_group(
                [int(r) for r in spec["rel_orders"]],
                _int_key_rules(spec.get("power_rules"), False),
                _int_key_rules(spec.get("commutator_rules"), True),
                spec.get("name", ""),
            )
        if kind == "direct":
            factors = [build_from_spec(f) for f in spec["factors"]]
            G = factors[0] if factors else build_cyclic(1)
            for F in factors[1:]:
                G = direct_product(G, F)[0]
            return G
        if kind == "central":
            H, K = build_from_spec(spec["left"]), build_from_spec(spec["right"])
            am = spec.get("amalgam", [])
            if am == "centers":
                return amalgamate_centers(H, K)[0]
            pairs = tuple((_element(H, a), _element(K, b)) for a, b in am)
            return central_product(CentralProductSpec(H, K, pairs))[0]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed {kind!r} spec: {exc}") from exc
    raise SpecError(f"unknown kind {kind!r}")


def load_spec(path: str) -> CayleyTable:
    with open(path) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from exc
    return build_from_spec(spec)
