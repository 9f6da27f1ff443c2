"""Minimal models, toric classification, and graph enumeration.

The minimal spaces come in four shapes: the projective plane with a circle
subaction (three isolated fixed points), its variant with a fixed surface,
the Hirzebruch surfaces (three graph variants), and ruled surfaces over a
genus-g curve (two fixed surfaces, no interior points).  Everything else
arises from these by blow-ups.
"""

from fractions import Fraction
from math import gcd

from . import blowup_calculus
from .graph_core import (DecoratedGraph, Edge, GraphError, Vertex,
                         canonical_form, extend_graph, flip, require_valid)
from .toric_geometry import (affine_normal_form, graph_to_polygon,
                             minimal_fan_type, outward_normal, polygon_to_fan)


def _edges(pairs):
    return [Edge(a, b, k) for a, b, k in pairs if k >= 2]


def cp2_graph(m, n, alpha=0, beta=1):
    """Projective plane with the circle acting through weights (m, n)."""
    m, n = int(m), int(n)
    alpha, beta = Fraction(alpha), Fraction(beta)
    if m <= 0 or n <= 0 or gcd(m, n) != 1 or beta <= 0:
        raise GraphError("cp2 needs coprime positive m, n and beta > 0")
    vertices = [Vertex("min", "point", alpha - n * beta),
                Vertex("int", "point", alpha),
                Vertex("max", "point", alpha + m * beta)]
    edges = _edges([("min", "max", m + n), ("int", "min", n),
                    ("int", "max", m)])
    return require_valid(DecoratedGraph(vertices, edges))


def cp2_surface_graph(alpha=0, lam=1):
    """Projective plane with a fixed sphere at the bottom."""
    alpha, lam = Fraction(alpha), Fraction(lam)
    if lam <= 0:
        raise GraphError("cp2-surface needs lambda > 0")
    vertices = [Vertex("min", "surface", alpha, area=lam, genus=0),
                Vertex("max", "point", alpha + lam)]
    return require_valid(DecoratedGraph(vertices, []))


def hirzebruch_graph(variant, n, c=1, d=1, r=1, s=1, alpha=0):
    """Hirzebruch surface graphs; variant in {"left", "middle", "right"}."""
    n, c, d = int(n), int(c), int(d)
    r, s, alpha = Fraction(r), Fraction(s), Fraction(alpha)
    if r <= 0 or s <= 0:
        raise GraphError("hirzebruch needs r, s > 0")
    if variant == "right":
        if n < 1:
            raise GraphError("hirzebruch right variant needs n >= 1")
        vertices = [Vertex("min", "surface", alpha, area=s, genus=0),
                    Vertex("int", "point", alpha + r),
                    Vertex("max", "point", alpha + r + n * s)]
        edges = _edges([("int", "max", n)])
    elif variant == "left":
        if c < 1 or d < 1 or gcd(c, d) != 1 or n < 0:
            raise GraphError("hirzebruch left variant needs coprime "
                             "positive c, d and n >= 0")
        vertices = [Vertex("min", "point", alpha),
                    Vertex("rint", "point", alpha + r * c),
                    Vertex("lint", "point", alpha + s * d),
                    Vertex("max", "point", alpha + r * c + s * d + n * s * c)]
        edges = _edges([("min", "rint", c), ("rint", "max", n * c + d),
                        ("min", "lint", d), ("lint", "max", c)])
    elif variant == "middle":
        if c < 1 or d < 1 or gcd(c, d) != 1 or n * c - d < 1:
            raise GraphError("hirzebruch middle variant needs coprime "
                             "positive c, d with n c - d >= 1")
        if not s * d < r * c + s * d - n * s * c < r * c:
            raise GraphError("hirzebruch middle variant needs r > n s and "
                             "d < n c for monotone labels")
        vertices = [Vertex("min", "point", alpha),
                    Vertex("v1", "point", alpha + s * d),
                    Vertex("v2", "point",
                           alpha + r * c + s * d - n * s * c),
                    Vertex("max", "point", alpha + r * c)]
        edges = _edges([("min", "max", c), ("min", "v1", d),
                        ("v1", "v2", c), ("v2", "max", n * c - d)])
    else:
        raise GraphError("unknown hirzebruch variant %r" % (variant,))
    return require_valid(DecoratedGraph(vertices, edges))


def ruled_graph(g=0, n=0, r=1, s=1, alpha=0):
    """Ruled surface over a genus-g curve: two fixed surfaces, nothing else."""
    g, n = int(g), int(n)
    r, s, alpha = Fraction(r), Fraction(s), Fraction(alpha)
    if g < 0 or r <= 0 or s <= 0 or r + n * s <= 0:
        raise GraphError("ruled needs g >= 0, r > 0, s > 0 and positive "
                         "top area r + n s")
    vertices = [Vertex("min", "surface", alpha, area=r, genus=g),
                Vertex("max", "surface", alpha + s, area=r + n * s, genus=g)]
    return require_valid(DecoratedGraph(vertices, []))


_FAMILIES = {
    "cp2": cp2_graph,
    "cp2-surface": cp2_surface_graph,
    "hirzebruch": hirzebruch_graph,
    "ruled": ruled_graph,
}


def minimal_graph(family, *args, flipped=False, **kw):
    if family not in _FAMILIES:
        raise GraphError("unknown minimal family %r" % (family,))
    g = _FAMILIES[family](*args, **kw)
    return flip(g) if flipped else g


def match_minimal_family(g):
    """Name of the minimal family g belongs to, or None.

    Matching is up to flip; the redundant middle Hirzebruch graphs with
    c = 1 are covered because recognition of graphs with only isolated
    fixed points goes through the normal fan of their polygon.
    """
    require_valid(g)
    surfaces = g.surfaces()
    interiors = g.interior_ids()
    from .dh_measure import extremal_self_intersections
    if len(surfaces) == 2:
        if interiors:
            return None
        ext = extremal_self_intersections(g)
        return "ruled" if ext.e_min.denominator == 1 else None
    if len(surfaces) == 1:
        lo, hi = g.min_vertex(), g.max_vertex()
        if len(g.vertices) == 2 and not g.edges:
            return "cp2-surface"
        if len(g.vertices) == 3 and len(interiors) == 1:
            point_ext = hi if lo.kind == "surface" else lo
            ok = all({e.a, e.b} == {interiors[0], point_ext.id}
                     for e in g.edges) and len(g.edges) <= 1
            if ok:
                return "hirzebruch"
        return None
    fan = polygon_to_fan(classify_isolated(g))
    kind = minimal_fan_type(fan)
    if kind == "cp2":
        return "cp2"
    if kind.startswith("hirzebruch"):
        return "hirzebruch"
    return None


def is_toric_extendable(g):
    """Whether the circle action extends to a toric one."""
    require_valid(g)
    if any(s.genus != 0 for s in g.surfaces()):
        return False
    try:
        extend_graph(g)
    except GraphError:
        return False
    return True


def classify_isolated(g):
    """The canonical Delzant polygon of a graph with isolated fixed points."""
    require_valid(g)
    if any(v.kind != "point" for v in g.vertices.values()):
        raise GraphError("classify_isolated needs a graph with only "
                         "isolated fixed points")
    ext = extend_graph(g)
    if len(ext.branches) > 2:
        raise GraphError("more than two chains; not a valid graph")
    P = graph_to_polygon(g, ext)
    heights = [y for _, y in P.vertices]
    y_min, y_max = min(heights), max(heights)
    for p, q in P.edge_list():
        if p[1] == q[1]:
            raise GraphError("internal failure: horizontal edge in the "
                             "polygon of an isolated-fixed-point graph")
        if abs(outward_normal(p, q)[0]) == 1:
            if y_min not in (p[1], q[1]) and y_max not in (p[1], q[1]):
                raise GraphError("internal failure: free edge away from "
                                 "the extrema")
    return affine_normal_form(P)


# -- enumeration -------------------------------------------------------------

class EnumeratedGraph:
    def __init__(self, graph, seed_key, depth):
        self.graph = graph
        self.seed_key = seed_key
        self.depth = depth
        self.provenances = {(seed_key, depth)}

    def __repr__(self):
        return "EnumeratedGraph(%s, depth=%d)" % (self.seed_key, self.depth)


def enumerate_graphs(seeds, max_blowups, lam_factor=Fraction(1, 2)):
    """Breadth-first closure of the seed graphs under blow-ups.

    seeds: list of (key, DecoratedGraph).  At every site the blow-up size
    is lam_factor times the supremum of admissible sizes.  Graphs are
    deduplicated by exact canonical form; output order is deterministic.
    """
    lam_factor = Fraction(lam_factor)
    if not 0 < lam_factor < 1:
        raise GraphError("lambda rule factor must lie in (0, 1)")
    out = []
    index = {}
    frontier = []
    for key, g in seeds:
        require_valid(g)
        digest = canonical_form(g, "exact").digest
        if digest in index:
            index[digest].provenances.add((key, 0))
            continue
        rec = EnumeratedGraph(g, key, 0)
        index[digest] = rec
        out.append(rec)
        frontier.append(rec)
    for depth in range(1, max_blowups + 1):
        next_frontier = []
        for rec in frontier:
            for site in blowup_calculus.blowup_sites(rec.graph):
                sup, _ = blowup_calculus.max_size(rec.graph, site)
                if sup is None or sup <= 0:
                    continue
                child = blowup_calculus.blowup(rec.graph, site.vertex,
                                               sup * lam_factor)
                digest = canonical_form(child, "exact").digest
                if digest in index:
                    index[digest].provenances.add((rec.seed_key, depth))
                    continue
                child_rec = EnumeratedGraph(child, rec.seed_key, depth)
                index[digest] = child_rec
                out.append(child_rec)
                next_frontier.append(child_rec)
        frontier = next_frontier
    return out


def assign_labels(skeleton, moments, a_min, a_max, e_choice):
    """Fill in the real labels of a two-surface skeleton and validate the
    compatibility constraints.

    skeleton: {"vertices": [{"id", "kind", "genus"?}], "edges": [...]} with
    surface extrema; moments: id -> level; e_choice: (e_min, e_max)
    integers.  The constraints are e_min + e_max = -sum 1/(m_p n_p) and
    a_min - a_max = -e_min y_min - sum y_p/(m_p n_p) - e_max y_max, which
    together make the Duistermaat-Heckman density vanish above the support.
    """
    a_min, a_max = Fraction(a_min), Fraction(a_max)
    e_min, e_max = e_choice
    vertices = []
    levels = {vid: Fraction(m) for vid, m in moments.items()}
    y_min, y_max = min(levels.values()), max(levels.values())
    for v in skeleton["vertices"]:
        vid, kind = str(v["id"]), v["kind"]
        if kind == "surface":
            area = a_min if levels[vid] == y_min else a_max
            vertices.append(Vertex(vid, kind, levels[vid], area=area,
                                   genus=int(v.get("genus", 0))))
        else:
            vertices.append(Vertex(vid, kind, levels[vid]))
    edges = [Edge(str(e["a"]), str(e["b"]), int(e["k"]))
             for e in skeleton.get("edges", [])]
    if a_min <= 0 or a_max <= 0:
        raise GraphError("area labels must be positive")
    g = require_valid(DecoratedGraph(vertices, edges))
    lo, hi = g.min_vertex(), g.max_vertex()
    if lo.kind != "surface" or hi.kind != "surface":
        raise GraphError("assign_labels needs surface extrema")
    from .dh_measure import _interior_products
    s0 = sum(Fraction(1, mn) for _, mn in _interior_products(g))
    s1 = sum(y * Fraction(1, mn) for y, mn in _interior_products(g))
    if s0.denominator != 1:
        raise GraphError("sum of 1/(m_p n_p) = %s is not an integer" % s0)
    if e_min + e_max != -s0:
        raise GraphError("e_min + e_max = %s but the interior weights "
                         "demand %s" % (e_min + e_max, -s0))
    b = -e_min * lo.moment - s1 - e_max * hi.moment
    if a_min - a_max != b:
        raise GraphError("a_min - a_max = %s but the labels demand %s"
                         % (a_min - a_max, b))
    return g
