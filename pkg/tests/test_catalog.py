from __future__ import annotations

import json

import pytest

from schurlab.catalog import (
    ORACLE_CATALOG,
    SpecError,
    build_from_spec,
    catalog,
    heis_elementary,
    heis_cyclic_small,
    heis_minus_cyclic,
    load_spec,
    named,
)
from schurlab.cohomology import schur_multiplier
from schurlab.groups import SizeGuardError, check_group
from schurlab.subgroups import center, derived_subgroup


def test_oracle_catalog_orders():
    groups = [named(n) for n in ORACLE_CATALOG]
    assert all(G.order <= 16 for G in groups)
    assert len(groups) == 24
    for G in catalog(16):
        check_group(G)


@pytest.mark.parametrize(
    "spec,order",
    [
        ({"kind": "cyclic", "n": 6}, 6),
        ({"kind": "abelian", "invariants": [2, 4]}, 8),
        ({"kind": "named", "name": "Q8"}, 8),
        ({"kind": "extraspecial", "p": 3, "n": 1, "type": "-"}, 27),
        ({"kind": "metacyclic", "m": 8, "s": 2, "t": 0, "r": 7}, 16),
        ({"kind": "pc", "rel_orders": [3, 3, 3], "commutator_rules": {"1,0": [0, 0, 1]}}, 27),
        ({"kind": "direct", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "named", "name": "D8"}]}, 16),
        ({"kind": "central", "left": {"kind": "cyclic", "n": 4}, "right": {"kind": "cyclic", "n": 4},
          "amalgam": [[2, 2]]}, 8),
        ({"kind": "central", "left": {"kind": "named", "name": "D8"}, "right": {"kind": "named", "name": "Q8"},
          "amalgam": "centers"}, 32),
    ],
)
def test_spec_kinds(spec, order):
    assert build_from_spec(spec).order == order


@pytest.mark.parametrize(
    "spec",
    [{}, {"kind": "nope"}, {"kind": "cyclic"}, {"kind": "named", "name": "XYZ"},
     {"kind": "central", "left": {"kind": "cyclic", "n": 4}, "right": {"kind": "cyclic", "n": 4},
      "amalgam": [[9, 1]]}, [1, 2]],
)
def test_malformed_specs(spec):
    with pytest.raises(SpecError):
        build_from_spec(spec)


def test_size_guard_from_spec():
    with pytest.raises(SizeGuardError):
        build_from_spec({"kind": "cyclic", "n": 1024})


def test_load_spec(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"kind": "named", "name": "D8", "name_unused": 1}))
    assert load_spec(str(p)).order == 8
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(SpecError):
        load_spec(str(bad))


def test_worked_instances():
    d1 = heis_elementary(3, 1)
    assert d1.G.order == 81
    # G = H x Z3: centre of order 9, derived subgroup of order 3
    assert center(d1.G).order == 9 and derived_subgroup(d1.G).order == 3
    d4 = heis_minus_cyclic(3, 1)
    assert d4.G.order == 81
    assert heis_cyclic_small(3).G.order == 81


def test_worked_multipliers_small():
    assert schur_multiplier(heis_elementary(3, 1).G).invariants == [3, 3, 3, 3]
    assert schur_multiplier(heis_minus_cyclic(3, 1).G).invariants == [3, 3]
