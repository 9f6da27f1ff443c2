from fractions import Fraction

import pytest

from hamgraphs import (GraphError, PiecewiseLinearDensity,
                       check_concave_nonneg, density,
                       extremal_self_intersections, isotropy_weights,
                       minimal_graph, polygon_pushforward, polygon_to_graph,
                       total_mass)
from hamgraphs.dh_measure import evaluate
from conftest import S2S2_POLYGONS, TENT_POLYGONS, s2s2_graph, tent_graph

F = Fraction


def test_extremal_s2s2():
    ext = extremal_self_intersections(s2s2_graph())
    assert (ext.e_min, ext.e_max) == (F(-1, 2), F(-1, 2))


def test_extremal_cp2():
    ext = extremal_self_intersections(minimal_graph("cp2", 1, 2))
    assert (ext.e_min, ext.e_max) == (F(-1, 6), F(-1, 3))


def test_extremal_trivial_ruled():
    ext = extremal_self_intersections(minimal_graph("ruled", 0, 0, 1, 1, 0))
    assert (ext.e_min, ext.e_max) == (0, 0)


def test_tent_density():
    rho = density(tent_graph())
    assert rho.breakpoints == (0, 1, 3, 4)
    assert rho.values == (0, 1, 1, 0)
    assert rho.value_inside(F(1, 2)) == F(1, 2)
    assert rho.value_inside(F(7, 2)) == F(1, 2)


def test_s2s2_density():
    rho = density(s2s2_graph())
    assert rho.breakpoints == (-3, -1, 1, 3)
    assert rho.values == (0, 1, 1, 0)


def test_trivial_ruled_density_constant():
    rho = density(minimal_graph("ruled", 0, 0, 3, 1, 0))
    assert rho.breakpoints == (0, 1)
    assert rho.values == (3, 3)


def test_total_mass():
    assert total_mass(density(tent_graph())) == 3
    assert total_mass(density(s2s2_graph())) == 4
    assert total_mass(PiecewiseLinearDensity((0, 1), (0, 0))) == 0


def test_evaluate_closed_convention():
    g = minimal_graph("ruled", 0, 0, 3, 1, 0)
    assert evaluate(g, F(0)) == 3
    assert evaluate(g, F(1)) == 0       # the top jump is included at y_max
    assert evaluate(g, F(-1)) == 0
    assert evaluate(tent_graph(), F(4)) == 0
    assert evaluate(tent_graph(), F(2)) == 1


def test_concavity():
    assert check_concave_nonneg(density(tent_graph()))
    bad = PiecewiseLinearDensity((0, 1, 2), (1, 0, 2))
    assert not check_concave_nonneg(bad)
    neg = PiecewiseLinearDensity((0, 1), (-1, 1))
    assert not check_concave_nonneg(neg)


def test_degenerate_graph_rejected():
    from hamgraphs import DecoratedGraph, Vertex
    g = DecoratedGraph([Vertex("a", "point", F(0)),
                        Vertex("b", "point", F(0))])
    with pytest.raises(GraphError):
        extremal_self_intersections(g)


def test_pushforward_unit_square():
    from conftest import P
    rho = polygon_pushforward(P((0, 0), (1, 0), (1, 1), (0, 1)))
    assert rho.breakpoints == (0, 1)
    assert rho.values == (1, 1)


def test_pushforward_tent_polygons():
    tent = density(tent_graph())
    for Q in TENT_POLYGONS[:3]:
        assert polygon_pushforward(Q) == tent


def test_pushforward_s2s2_polygon():
    rho = polygon_pushforward(S2S2_POLYGONS[0])
    shifted = density(s2s2_graph())
    assert rho.breakpoints == tuple(b + 3 for b in shifted.breakpoints)
    assert rho.values == shifted.values


def test_slope_drops_match_weight_products(enumerated_small):
    for rec in enumerated_small:
        g = rec.graph
        rho = density(g)
        slopes = {}
        for i in range(len(rho.breakpoints) - 1):
            dy = rho.breakpoints[i + 1] - rho.breakpoints[i]
            slopes[rho.breakpoints[i]] = \
                F(rho.values[i + 1] - rho.values[i], dy)
        drop = {}
        for vid in g.interior_ids():
            w1, w2 = isotropy_weights(g, vid)
            y = g.moment(vid)
            drop[y] = drop.get(y, 0) + F(1, (-w1) * w2)
        prev = None
        for y in sorted(slopes):
            if prev is not None:
                assert slopes[prev] - slopes[y] == drop.get(y, 0)
            prev = y


def test_corpus_concave_and_positive_mass(enumerated_small):
    for rec in enumerated_small:
        rho = density(rec.graph)
        assert check_concave_nonneg(rho)
        assert total_mass(rho) > 0
