from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurlab import catalog
from schurlab.groups import GroupError
from schurlab.subgroups import center, subgroups_of_abelian
from schurlab.theorems import (
    CentralProductInstance,
    VerificationReport,
    check_extraspecial_multiplier,
    check_diagram,
    check_hom_embeddings,
    check_inflation_kernel,
    check_inflation_surjective,
    check_jones,
    check_jones_all,
    check_kernel_theta_prime,
    check_equivalences,
    check_tensor_sequence,
    check_inflation_quotient,
    check_embeddings,
    jones_terms,
    named_instance,
    run_worked_examples,
    suite_tasks,
)


def test_instance_invariants():
    inst = named_instance("D8oQ8")
    d = inst.describe()
    assert d["order"] == 32 and d["A"] == 2 and d["Z"] == 2
    inst = named_instance("heis-elem")
    assert inst.A.order == 3 and inst.Z.order == 1


def test_instance_rejects_noncommuting_factors():
    S3 = catalog.dihedral(6)
    data = catalog.CentralProductData("bad", S3, catalog.GroupMap.identity(S3), catalog.GroupMap.identity(S3))
    with pytest.raises(GroupError):
        CentralProductInstance(data)


@pytest.mark.parametrize("name", ["heis-elem", "heis-minus-cyc", "Z4oZ4", "Q8oZ4", "D8oD8", "Z3^2oZ3^2"])
def test_embeddings_checks_pass(name):
    r = check_embeddings(named_instance(name))
    assert r.passed, r.computed


def test_embeddings_known_values():
    c1 = check_embeddings(named_instance("heis-elem")).computed
    assert (c1["lhs"], c1["M_G"], c1["rhs"]) == ([3, 3], [3] * 4, [3] * 7)
    assert c1["first_embedding"] == c1["second_embedding"] == "strict"
    c4 = check_embeddings(named_instance("heis-minus-cyc")).computed
    assert c4["lhs"] == c4["M_G"] == c4["rhs"] == [3, 3]


def test_inflation_quotient_all_subgroups_of_z():
    inst = named_instance("D8oD8")
    for B in subgroups_of_abelian(inst.G, inst.Z):
        if B.order > 1:
            assert check_inflation_quotient(inst, B).passed


def test_inflation_quotient_requires_b_in_z():
    inst = named_instance("heis-elem")
    with pytest.raises(GroupError):
        check_inflation_quotient(inst, inst.A)


@pytest.mark.parametrize("name", ["heis-elem", "heis-minus-cyc", "heis-cyc-small", "Q8oZ4", "D8oD8", "D8oQ8"])
def test_kernel_theta_prime(name):
    r = check_kernel_theta_prime(named_instance(name))
    assert r.passed, r.computed
    assert r.computed["ker_theta_prime"] == ([2] if name.startswith("D8o") else [])


@pytest.mark.parametrize("name", ["heis-elem", "Z3^2oZ3^2", "D8oD8", "Z4oZ4"])
def test_remaining_checks(name):
    inst = named_instance(name)
    for fn in (check_hom_embeddings, check_equivalences, check_tensor_sequence, check_inflation_surjective):
        r = fn(inst)
        assert r.passed, (fn.__name__, r.computed)


@pytest.mark.parametrize("name", ["heis-elem", "heis-minus-cyc", "Z3^2oZ3^2"])
def test_diagram(name):
    r = check_diagram(named_instance(name))
    assert r.passed, r.computed


def test_diagram_sign_convention():
    # with A not inside G' the literal k(x)a -> a(x)k orientation breaks the bottom square
    r = check_diagram(named_instance("Z3^2oZ3^2"))
    assert r.passed and r.computed["bottom_commutes_with_literal_eta"] is False


def test_inflation_kernel_sequence():
    G = catalog.named("Q8")
    assert check_inflation_kernel(G, center(G)).passed


def test_jones():
    G = catalog.named("D8xZ2")
    for N in subgroups_of_abelian(G, center(G)):
        assert check_jones(G, N).passed
    t = jones_terms(G, center(G))
    assert t["rhs"] % t["lhs"] == 0
    assert check_jones_all(catalog.named("E27+")).computed["min_bound"] == 9


def test_extraspecial_order_32():
    reports = check_extraspecial_multiplier(2, 2)
    assert [r.verdict for r in reports] == ["pass", "pass"]
    assert all(r.computed["M_G"] == [2] * 5 for r in reports)


def test_extraspecial_skipped_without_slow():
    assert {r.verdict for r in check_extraspecial_multiplier(3, 2)} == {"skipped"}


def test_worked_examples_fast():
    reports = {r.claim: r for r in run_worked_examples(3, 1)}
    assert reports["heis-elem"].passed and reports["heis-minus-cyc"].passed
    assert reports["heis-cyc"].verdict == reports["wreath-cyc"].verdict == "skipped"


@pytest.mark.slow
def test_worked_examples_slow():
    reports = {r.claim: r for r in run_worked_examples(3, 1, slow=True, which=("heis-cyc", "wreath-cyc"))}
    assert reports["heis-cyc"].passed, reports["heis-cyc"].computed
    assert reports["wreath-cyc"].passed, reports["wreath-cyc"].computed


@given(
    st.text(max_size=12),
    st.dictionaries(st.text(max_size=5), st.one_of(st.integers(), st.lists(st.integers(0, 9), max_size=4)), max_size=4),
    st.sampled_from(["pass", "fail", "skipped"]),
    st.floats(0, 1e6, allow_nan=False),
)
def test_report_round_trip(claim, computed, verdict, ms):
    r = VerificationReport(claim, "inst", computed, verdict, ms)
    text = r.to_json()
    again = VerificationReport.from_dict(json.loads(text))
    assert again.to_json() == text


def test_suite_tasks():
    assert any(t[0] == "oracle" for t in suite_tasks("oracle"))
    assert not any(t[0] == "oracle" for t in suite_tasks("paper"))
    assert len(suite_tasks("all", slow=True)) > len(suite_tasks("all"))
    with pytest.raises(ValueError):
        suite_tasks("bogus")
