"""Smoke tests for the compiled module: anchor values across every surface."""

import liaison


def test_genus_numerics():
    p = liaison.compute_parameters(98, 5, 9)
    assert (p["m"], p["eps"], p["w"], p["v"]) == (10, 7, 2, 2)
    assert p["branch"] == "high" and (p["k"], p["delta"], p["e"]) == (2, 2, 1)

    assert liaison.delta_h(4, 3, 2) == [1, 2, 1]
    assert sum(liaison.delta_h(98, 5, 9)) == 98
    assert liaison.max_genus(98, 5, 9) == 550
    assert liaison.max_genus(85, 5, 8) == 452

    value, flagged = liaison.closed_form_genus(98, 5, 9)
    assert value == "528" and flagged
    value, flagged = liaison.closed_form_genus(121, 5, 12)
    assert value == "1413/2" and flagged

    assert liaison.castelnuovo_genus(9, 4) == 7
    assert liaison.castelnuovo_genus_printed(9, 4) == 5
    assert liaison.min_admissible_degree(5, 9) == 2035
    assert liaison.min_admissible_degree(3, 2) == 9
    assert liaison.residual_h0_bound(98, 5, 9, 0) == 1


def test_scroll_geometry():
    x = liaison.Scroll(5, [0, 0, 3])
    assert x.degree == 3 and x.vertex_dim == 1 and x.vertex_codim == 2
    assert x.class_group()["cyclic"]
    assert x.intersection_number([(1, 0), (1, 0), (1, 0)]) == 3
    assert x.intersection_number([(2, 3), (10, 3), (1, 0)]) == 96
    assert x.total_transform(9) == (3, 0)
    assert x.proper_transform(3, 1) == (2, 3)
    assert x.vertex_multiplicity(3, 1, 11, 1) == 3
    assert x.vertex_multiplicity_ruling(3, 1) == 1
    assert x.ci_curve(3, 11) == (99, 562)
    assert x.is_reflexive(-3, 1) and not x.is_reflexive(0, 3)
    k = x.canonical_class()
    assert k == {"kind": "cone", "R": -8}  # -3*3 + 1


def test_linkage():
    assert liaison.linked_genus(550, 562, 11) == 0
    assert liaison.linked_genus_scroll(3, 11, 5, 3, 550, 562, 1, 0) == 0
    rep = liaison.classify_example1(98, 5, 9)
    assert rep["applicable"] and rep["genus_cross_check"] == 550
    rep2 = liaison.example2_construction(85, 5, 8)
    assert rep2["variant"] == "v=n-4" and rep2["genus_cross_check"] == 452


def test_oracle():
    pts = [["1", "2", "3", "4"]]
    assert liaison.hilbert_function(pts, 3, 2) == 1

    rep = liaison.verify_quadric_split(2, 2, [0, 1, 2, 3, 4, 5, 6], seed=7)
    assert rep["pass"]
    lhs_rhs = {(i, lhs, rhs) for i, lhs, rhs, _ in rep["rows"]}
    assert (1, 3, 3) in lhs_rhs

    assert liaison.verify_cone_colon(2, 2, 4, seed=1)["pass"]
    assert liaison.verify_cubic_scroll_split(2, 2, list(range(12)))["pass"]
