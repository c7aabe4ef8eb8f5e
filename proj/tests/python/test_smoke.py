import math
import os

import pytest

import coxkit as ck

DATA = os.environ.get("COX_DATA_DIR", "data")


def path(rel):
    return os.path.join(DATA, rel)


def test_classification():
    b2 = ck.system_from_edges(2, [(0, 1, 4)])
    assert b2.rank == 2
    assert b2.modulus == 4
    assert b2.classify() == [([0, 1], "Finite", "B2")]
    two = ck.system_from_edges(4, [(0, 1, 3), (2, 3, 3)])
    kinds = [(part, name) for part, _, name in two.classify()]
    assert kinds == [([0, 1], "A2"), ([2, 3], "A2")]


def test_words_and_length():
    b2 = ck.system_from_edges(2, [(0, 1, 4)])
    assert b2.reduce([1, 0, 1, 0, 1, 0]) == [0, 1]
    w0 = b2.longest_element()
    assert w0.length == 4
    assert w0.order() == {"kind": "finite", "order": 2}
    assert (w0 * w0).is_identity()
    assert len(ck.inversions(w0)) == 4
    approx = ck.inversions(w0, approx=True)
    assert all(c >= -1e-12 for root in approx for c in root)


def test_infinite_order_certificate():
    aii = ck.load_system(path("systems/aii.cox"))
    w = aii.element([0, 1])
    res = w.order()
    assert res["kind"] == "infinite"
    assert res["certificate"]
    assert not ck.roots(aii, depth=5, cap=100)["closed"]


def test_exact_gram():
    b2 = ck.system_from_edges(2, [(0, 1, 4)])
    g = b2.gram()
    assert isinstance(g[0][1], str)
    approx = b2.gram(approx=True)
    assert math.isclose(approx[0][1], -math.cos(math.pi / 4), rel_tol=1e-12)
    assert approx[0][0] == 1.0


def test_fixed_point_subgroup():
    a3 = ck.system_from_edges(3, [(0, 1, 3), (1, 2, 3)])
    tau = a3.automorphism("(1 3)")
    fixed = ck.fixed_coxeter_system(a3, tau)
    assert fixed.classify() == [([0, 1], "Finite", "B2")]
    assert ck.finite_index_fixed(a3, tau)

    aii = ck.load_system(path("systems/aii.cox"))
    flip = aii.automorphism("(1 2)")
    assert not ck.finite_index_fixed(aii, flip)
    pres = ck.fixed_presentation(aii, flip)
    assert pres["generator_words"] == []
    assert pres["infinite_orbits"] == [0]


def test_aci_verdicts():
    mixed = ck.load_system(path("systems/aiixa1.cox"))
    G = ck.action_group(mixed)
    assert ck.is_aci(mixed, G, mixed.element([2]))["aci"]
    bad = ck.is_aci(mixed, G, mixed.element([0]))
    assert not bad["aci"] and bad["reasons"]
    assert ck.conjugate_growth(mixed, G, mixed.element([0])) >= 25
    rep = ck.aci_subgroup(mixed, G)
    assert rep["w_generators"] == [2]
    assert rep["g_involutions"] == []


def test_brute_force_oracle():
    sys = ck.load_system(path("systems/a2xa2.cox"))
    G = ck.load_action_group(sys, path("actions/swap22.act"))
    res = ck.brute_force_aci(sys, G)
    assert res["group_size"] == 72
    assert res["matches"]


def test_essential_certificate():
    a2t = ck.system_from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    res = ck.essential_certificate(a2t.element([0, 1, 2]))
    assert res["kind"] == "yes"


def test_table_verification():
    affine = ck.verify_rows(path("tables/affine.rows"))
    assert len(affine) == 15 and all(r["ok"] for r in affine)
    hyperbolic = ck.verify_rows(path("tables/hyperbolic.rows"))
    assert len(hyperbolic) == 13 and all(r["ok"] for r in hyperbolic)
    statuses = {c["status"] for r in affine + hyperbolic for c in r["clauses"]}
    assert statuses == {"pass", "skipped"}


def test_error_types():
    b2 = ck.system_from_edges(2, [(0, 1, 4)])
    with pytest.raises(ck.DomainError):
        b2.element([5])
    with pytest.raises(ck.DomainError):
        b2.set_label(0, 1, 1)
    with pytest.raises(ck.ParseError):
        ck.load_system(path("systems/does_not_exist.cox"))
    with pytest.raises(ValueError):
        ck.parse_system("rank 2\nedge 1 2 bogus\n")
