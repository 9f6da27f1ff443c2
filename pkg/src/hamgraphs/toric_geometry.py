"""Delzant polygons, smooth fans, and the polygon <-> graph dictionary.

Polygons are counterclockwise lists of rational points.  An edge with
primitive outward normal (k, b), |k| >= 2, lies over a sphere with
stabilizer Z_k; horizontal edges lie over fixed surfaces; the moment level
is the height.  ``graph_to_polygon`` rebuilds a polygon from a graph with
two chains, one drawn as the right boundary and one as the left.
"""

from fractions import Fraction
from math import gcd

from . import chain_arith
from .graph_core import (DecoratedGraph, Edge, GraphError, Vertex,
                         extend_graph, require_valid)
from .rational import fmt_rat, parse_rat


class PolygonError(GraphError):
    pass


class DelzantPolygon:
    def __init__(self, vertices):
        self.vertices = [(Fraction(x), Fraction(y)) for x, y in vertices]

    def __eq__(self, other):
        return isinstance(other, DelzantPolygon) and \
            self.vertices == other.vertices

    def __repr__(self):
        return "DelzantPolygon(%r)" % (self.vertices,)

    def edge_list(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n])
                for i in range(n)]

    def to_json(self):
        return {"vertices": [[fmt_rat(x), fmt_rat(y)]
                             for x, y in self.vertices]}


def polygon_from_json(data):
    try:
        return DelzantPolygon([(parse_rat(x), parse_rat(y))
                               for x, y in data["vertices"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise PolygonError("malformed polygon JSON: %s" % exc) from exc


def primitive(dx, dy):
    """Primitive integer vector positively parallel to the rational (dx, dy)."""
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == dy == 0:
        raise ValueError("zero vector")
    denom = dx.denominator * dy.denominator // gcd(dx.denominator,
                                                   dy.denominator)
    ix, iy = int(dx * denom), int(dy * denom)
    g = gcd(abs(ix), abs(iy))
    return ix // g, iy // g


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def edge_direction(p, q):
    return primitive(q[0] - p[0], q[1] - p[1])


def outward_normal(p, q):
    """Primitive outward normal of the ccw edge p -> q."""
    dx, dy = edge_direction(p, q)
    return (dy, -dx)


def lattice_length(p, q):
    d = edge_direction(p, q)
    if d[0] != 0:
        return Fraction(q[0] - p[0], d[0])
    return Fraction(q[1] - p[1], d[1])


def validate_delzant(P):
    """Return a list of problems; empty means P is a Delzant polygon."""
    verts = P.vertices
    problems = []
    if len(verts) < 3:
        return ["fewer than three vertices"]
    if len(set(verts)) != len(verts):
        return ["repeated vertex"]
    n = len(verts)
    dirs = []
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        dirs.append(edge_direction(p, q))
    area2 = sum(verts[i][0] * verts[(i + 1) % n][1]
                - verts[(i + 1) % n][0] * verts[i][1] for i in range(n))
    if area2 <= 0:
        problems.append("vertices are not in counterclockwise order")
    for i in range(n):
        if det2(dirs[i], dirs[(i + 1) % n]) <= 0:
            problems.append("not strictly convex at vertex %d" % ((i + 1) % n))
    if problems:
        return problems
    normals = [(d[1], -d[0]) for d in dirs]
    for i in range(n):
        if det2(normals[i], normals[(i + 1) % n]) != 1:
            problems.append("normal determinant != 1 at vertex %d"
                            % ((i + 1) % n))
    return problems


def require_valid_polygon(P):
    problems = validate_delzant(P)
    if problems:
        raise PolygonError("; ".join(problems))
    return P


def polygon_to_graph(P):
    """Fixed-point data of the toric space over P, restricted to the
    vertical circle action."""
    require_valid_polygon(P)
    verts = P.vertices
    n = len(verts)
    vertex_of = {}
    graph_vertices = []
    edges = []
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        if p[1] == q[1]:
            sid = "s%d" % i
            graph_vertices.append(Vertex(sid, "surface", p[1],
                                         area=lattice_length(p, q), genus=0))
            vertex_of[p] = sid
            vertex_of[q] = sid
    for i, p in enumerate(verts):
        if p not in vertex_of:
            vid = "p%d" % i
            graph_vertices.append(Vertex(vid, "point", p[1]))
            vertex_of[p] = vid
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        k = abs(outward_normal(p, q)[0])
        if k >= 2:
            edges.append(Edge(vertex_of[p], vertex_of[q], k))
    g = DecoratedGraph(graph_vertices, edges)
    return require_valid(g)


# -- graph -> polygon --------------------------------------------------------

def _branch_weight_lists(g, branches):
    lo, hi = g.min_vertex().id, g.max_vertex().id
    direct = sorted(e.k for e in g.edges if {e.a, e.b} == {lo, hi})
    out = []
    for path in branches:
        if len(path) == 2:
            out.append([direct.pop(0)] if direct else [1])
            continue
        ks = []
        for u, v in zip(path, path[1:]):
            stored = [e for e in g.edges if {e.a, e.b} == {u, v}]
            ks.append(stored[0].k if stored else 1)
        out.append(ks)
    return out


def _seed_pair(g, k1, k1p, k2_right):
    """Integers (b1, b1') for the bottom corner: det(u1' u1) = 1 for an
    isolated minimum, i.e. k1' b1 + k1 b1' = -1."""
    if k1 == 1:
        b1 = 0
    elif k2_right is not None:
        b1 = (-pow(k2_right, -1, k1)) % k1
    else:
        b1 = (-pow(k1p, -1, k1)) % k1
    num = -1 - k1p * b1
    if num % k1 != 0:
        raise GraphError("bottom corner is not smooth: weights %d, %d with "
                         "chain data admit no integral normals" % (k1, k1p))
    return b1, num // k1


def _b_list(ks, b1):
    """b_i with k_{i-1} b_i - b_{i-1} k_i = 1, seeded at b1."""
    bs = [b1]
    for i in range(1, len(ks)):
        num = 1 + bs[i - 1] * ks[i]
        if num % ks[i - 1] != 0:
            raise GraphError("chain %r admits no integral normals with the "
                             "forced seed" % (ks,))
        bs.append(num // ks[i - 1])
    return bs


def graph_to_polygon(g, ext=None):
    """A Delzant polygon whose vertical circle action has graph g.

    The two chains of the extension become the right and left boundary;
    the horizontal distance between the boundaries at level t equals the
    Duistermaat-Heckman density at t.
    """
    from .dh_measure import extremal_self_intersections
    require_valid(g)
    for s in g.surfaces():
        if s.genus != 0:
            raise GraphError("graph with positive genus is not toric")
    if ext is None:
        ext = extend_graph(g)
    lo, hi = g.min_vertex(), g.max_vertex()
    branches = [list(p) for p in ext.branches]
    while len(branches) < 2:
        branches.append([lo.id, hi.id])
    if len(branches) > 2:
        raise GraphError("more than two chains; no polygon exists")
    right, left = branches
    ks_r, ks_l = _branch_weight_lists(g, [right, left])

    a_min = lo.area if lo.kind == "surface" else Fraction(0)
    a_max = hi.area if hi.kind == "surface" else Fraction(0)
    if lo.kind == "surface":
        if ks_r[0] != 1 or ks_l[0] != 1:
            raise GraphError("weighted edge at a fixed surface")
        ext_data = extremal_self_intersections(g)
        if ext_data.e_min.denominator != 1:
            raise GraphError("surface minimum with non-integer "
                             "self-intersection %s" % ext_data.e_min)
        # the width a_min - e_min (t - y_min) of the bottom strip equals
        # x_right(t) - x_left(t) = a_min - (b1/k1 + b1'/k1') (t - y_min)
        b1, b1p = 0, int(ext_data.e_min)
    else:
        k2_right = ks_r[1] if len(ks_r) > 1 else None
        b1, b1p = _seed_pair(g, ks_r[0], ks_l[0], k2_right)
    bs_r = _b_list(ks_r, b1)
    bs_l = _b_list(ks_l, b1p)

    def side_points(path, ks, bs, x0, sign):
        pts = [(x0, lo.moment)]
        x = x0
        for i in range(len(ks)):
            t0 = g.moment(path[i])
            t1 = g.moment(path[i + 1])
            x = x + sign * Fraction(bs[i], ks[i]) * (t1 - t0)
            pts.append((x, t1))
        return pts

    pts_r = side_points(right, ks_r, bs_r, Fraction(0), -1)
    pts_l = side_points(left, ks_l, bs_l, -a_min, +1)

    if hi.kind == "surface":
        gap = pts_r[-1][0] - pts_l[-1][0]
        if gap != a_max:
            raise GraphError("closure failure: top gap %s != area %s"
                             % (gap, a_max))
        if ks_r[-1] != 1 or ks_l[-1] != 1:
            raise GraphError("weighted edge at a fixed surface")
    else:
        if pts_r[-1] != pts_l[-1]:
            raise GraphError("closure failure: chains meet the maximum at "
                             "different points")
        if ks_r[-1] * bs_l[-1] + bs_r[-1] * ks_l[-1] != 1:
            raise GraphError("closure failure: top corner is not smooth")

    verts = list(pts_r)
    back = list(reversed(pts_l))
    if hi.kind == "point":
        back = back[1:]
    if lo.kind == "point":
        back = back[:-1]
    verts += back
    P = DelzantPolygon(verts)
    require_valid_polygon(P)
    return P


# -- affine equivalence ------------------------------------------------------

def _reflect(P):
    verts = [(-x, y) for x, y in reversed(P.vertices)]
    return DelzantPolygon(verts)


def _shear(P, m):
    return DelzantPolygon([(x + m * y, y) for x, y in P.vertices])


def _translate_x(P, a):
    return DelzantPolygon([(x + a, y) for x, y in P.vertices])


def affine_normal_form(P):
    """Canonical representative of P under (x,y) -> (a +/- x + m y, y)."""
    require_valid_polygon(P)
    candidates = []
    for Q in (P, _reflect(P)):
        verts = Q.vertices
        n = len(verts)
        pivot = min(range(n), key=lambda i: (verts[i][1], verts[i][0]))
        edge = None
        for j in range(n):
            i = (pivot + j) % n
            k = outward_normal(verts[i], verts[(i + 1) % n])[0]
            if k != 0:
                edge = i
                break
        k, b = outward_normal(verts[edge], verts[(edge + 1) % n])
        # shearing by m sends the normal (k, b) to (k, b - m k);
        # normalize b into [0, |k|)
        r = b % abs(k)
        R = _shear(Q, (b - r) // k)
        R = _translate_x(R, -min(x for x, _ in R.vertices))
        start = min(range(n), key=lambda i: (R.vertices[i][1],
                                             R.vertices[i][0]))
        rotated = R.vertices[start:] + R.vertices[:start]
        candidates.append(rotated)
    return DelzantPolygon(min(candidates))


def polygon_affine_equivalent(P1, P2):
    """True iff the polygons differ by (x,y) -> (a +/- x + m y, y)."""
    return affine_normal_form(P1).vertices == affine_normal_form(P2).vertices


# -- corner chopping ---------------------------------------------------------

def polygon_chop(P, index, t):
    """Cut the corner at the given vertex at lattice distance t."""
    require_valid_polygon(P)
    t = Fraction(t)
    if t <= 0:
        raise PolygonError("chop size must be positive")
    verts = P.vertices
    n = len(verts)
    if not 0 <= index < n:
        raise PolygonError("no vertex with index %r" % (index,))
    v = verts[index]
    prev_v = verts[(index - 1) % n]
    next_v = verts[(index + 1) % n]
    if t >= lattice_length(prev_v, v) or t >= lattice_length(v, next_v):
        raise PolygonError("chop size %s does not fit inside the adjacent "
                           "edges" % t)
    d_in = edge_direction(prev_v, v)
    d_out = edge_direction(v, next_v)
    p_a = (v[0] - t * d_in[0], v[1] - t * d_in[1])
    p_b = (v[0] + t * d_out[0], v[1] + t * d_out[1])
    new_verts = verts[:index] + [p_a, p_b] + verts[index + 1:]
    Q = DelzantPolygon(new_verts)
    require_valid_polygon(Q)
    return Q


# -- fans --------------------------------------------------------------------

def polygon_to_fan(P):
    """Cyclically ordered primitive inward normals of P."""
    require_valid_polygon(P)
    return [tuple(-c for c in outward_normal(p, q))
            for p, q in P.edge_list()]


def _upper(u):
    return u[1] > 0 or (u[1] == 0 and u[0] > 0)


def validate_fan(F):
    problems = []
    n = len(F)
    if n < 3:
        return ["fewer than three rays"]
    for u in F:
        if gcd(abs(u[0]), abs(u[1])) != 1:
            problems.append("ray %r is not primitive" % (u,))
    if problems:
        return problems
    for i in range(n):
        if det2(F[i], F[(i + 1) % n]) != 1:
            problems.append("determinant != 1 between rays %d and %d"
                            % (i, (i + 1) % n))
    crossings = sum(1 for i in range(n)
                    if not _upper(F[i]) and _upper(F[(i + 1) % n]))
    if not problems and crossings != 1:
        problems.append("rays do not wind around the origin exactly once")
    return problems


def require_valid_fan(F):
    problems = validate_fan(F)
    if problems:
        raise PolygonError("; ".join(problems))
    return F


def fan_blowdown_sites(F):
    require_valid_fan(F)
    n = len(F)
    return [i for i in range(n)
            if (F[(i - 1) % n][0] + F[(i + 1) % n][0],
                F[(i - 1) % n][1] + F[(i + 1) % n][1]) == tuple(F[i])]


def fan_blowdown(F, i):
    if i not in fan_blowdown_sites(F):
        raise PolygonError("ray %d is not a blow-down site" % i)
    G = list(F[:i]) + list(F[i + 1:])
    return require_valid_fan(G)


def minimal_fan_type(F):
    """"cp2", "hirzebruch:n", or "not-minimal"."""
    require_valid_fan(F)
    if fan_blowdown_sites(F):
        return "not-minimal"
    if len(F) == 3:
        return "cp2"
    if len(F) == 4:
        for i in range(2):
            u, w = F[i], F[i + 2]
            if (u[0] + w[0], u[1] + w[1]) == (0, 0):
                a, b = F[(i + 1) % 4], F[(i + 3) % 4]
                s = (a[0] + b[0], a[1] + b[1])
                # s is an integer multiple of u since det(u, s) = 0
                if det2(u, s) != 0:
                    continue
                c = s[0] * u[0] + s[1] * u[1]
                return "hirzebruch:%d" % abs(c)
    return "not-minimal"
