"""Decorated graphs for 4-dimensional spaces with a Hamiltonian circle action.

A graph records the fixed-point data of such a space: vertices are fixed
surfaces or isolated fixed points placed at their moment-map levels, and
edges of weight k >= 2 record gradient spheres on which the circle acts
with stabilizer Z_k.  Free (weight 1) spheres are not stored; they are
reconstructed on demand by ``extend_graph``.
"""

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .rational import fmt_rat, parse_rat


class GraphError(Exception):
    """Domain error: the input is structurally fine but mathematically bad."""


class ValidationError(GraphError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class NoExtensionError(GraphError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: str  # "point" or "surface"
    moment: Fraction
    area: Fraction | None = None
    genus: int | None = None


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    k: int

    def other(self, vid):
        if vid == self.a:
            return self.b
        if vid == self.b:
            return self.a
        raise KeyError(vid)


class DecoratedGraph:
    def __init__(self, vertices, edges=()):
        self.vertices = {}
        for v in vertices:
            if v.id in self.vertices:
                raise ValidationError(["duplicate vertex id %r" % v.id])
            self.vertices[v.id] = v
        self.edges = list(edges)

    def vertex(self, vid):
        return self.vertices[vid]

    def moment(self, vid):
        return self.vertices[vid].moment

    def edges_at(self, vid):
        return [e for e in self.edges if vid in (e.a, e.b)]

    def up_edges(self, vid):
        y = self.moment(vid)
        return [e for e in self.edges_at(vid) if self.moment(e.other(vid)) > y]

    def down_edges(self, vid):
        y = self.moment(vid)
        return [e for e in self.edges_at(vid) if self.moment(e.other(vid)) < y]

    def min_vertex(self):
        return min(self.vertices.values(), key=lambda v: (v.moment, v.id))

    def max_vertex(self):
        return max(self.vertices.values(), key=lambda v: (v.moment, v.id))

    def is_extremal(self, vid):
        return vid in (self.min_vertex().id, self.max_vertex().id)

    def interior_ids(self):
        lo, hi = self.min_vertex().id, self.max_vertex().id
        return [v.id for v in sorted(self.vertices.values(),
                                     key=lambda v: (v.moment, v.id))
                if v.id not in (lo, hi)]

    def surfaces(self):
        return [v for v in self.vertices.values() if v.kind == "surface"]

    def copy(self):
        return DecoratedGraph(self.vertices.values(), self.edges)

    def __repr__(self):
        return "DecoratedGraph(%d vertices, %d edges)" % (
            len(self.vertices), len(self.edges))


def validate_graph(g):
    """Return a list of human-readable problems; empty means valid."""
    problems = []
    if not g.vertices:
        return ["graph has no vertices"]
    for v in g.vertices.values():
        if v.kind not in ("point", "surface"):
            problems.append("vertex %s: unknown kind %r" % (v.id, v.kind))
        if not isinstance(v.moment, Fraction):
            problems.append("vertex %s: moment is not rational" % v.id)
        if v.kind == "surface":
            if v.area is None or v.area <= 0:
                problems.append("vertex %s: surface needs positive area" % v.id)
            if v.genus is None or v.genus < 0:
                problems.append("vertex %s: surface needs genus >= 0" % v.id)
        else:
            if v.area is not None or v.genus is not None:
                problems.append("vertex %s: point carries area or genus" % v.id)
    for e in g.edges:
        if e.a not in g.vertices or e.b not in g.vertices:
            problems.append("edge %s--%s: unknown endpoint" % (e.a, e.b))
            continue
        if e.a == e.b:
            problems.append("edge %s--%s: endpoints coincide" % (e.a, e.b))
        if not isinstance(e.k, int) or e.k < 2:
            problems.append("edge %s--%s: weight %r is not an integer >= 2"
                            % (e.a, e.b, e.k))
        elif g.moment(e.a) == g.moment(e.b):
            problems.append("edge %s--%s: endpoints at the same level"
                            % (e.a, e.b))
    if problems:
        return problems

    moments = [v.moment for v in g.vertices.values()]
    y_min, y_max = min(moments), max(moments)
    if y_min == y_max:
        return ["minimum and maximum level coincide"]
    if moments.count(y_min) != 1:
        problems.append("minimum level attained by more than one vertex")
    if moments.count(y_max) != 1:
        problems.append("maximum level attained by more than one vertex")
    if problems:
        return problems

    lo, hi = g.min_vertex(), g.max_vertex()
    for vid in g.interior_ids():
        v = g.vertex(vid)
        if v.kind != "point":
            problems.append("vertex %s: interior fixed surface" % vid)
        if len(g.up_edges(vid)) > 1:
            problems.append("vertex %s: more than one up edge" % vid)
        if len(g.down_edges(vid)) > 1:
            problems.append("vertex %s: more than one down edge" % vid)
    for ext in (lo, hi):
        deg = len(g.edges_at(ext.id))
        if ext.kind == "surface" and deg > 0:
            problems.append("vertex %s: extremal surface carries edges" % ext.id)
        if ext.kind == "point" and deg > 2:
            problems.append("vertex %s: isolated extremum with more than "
                            "two edges" % ext.id)
    if problems:
        return problems

    from math import gcd
    for vid in g.vertices:
        w1, w2 = isotropy_weights(g, vid)
        if gcd(abs(w1), abs(w2)) != 1:
            problems.append("vertex %s: isotropy weights %d, %d not coprime"
                            % (vid, w1, w2))
    genera = {v.genus for v in g.surfaces()}
    if len(genera) > 1:
        problems.append("fixed surfaces of different genus")
    return problems


def require_valid(g):
    problems = validate_graph(g)
    if problems:
        raise ValidationError(problems)
    return g


def isotropy_weights(g, vid):
    """Weights of the circle action on the tangent space at a fixed point.

    Returned as an increasing pair of integers.  Missing edges contribute
    weight 1; a fixed surface contributes weight 0.
    """
    v = g.vertex(vid)
    lo, hi = g.min_vertex(), g.max_vertex()
    if v.kind == "surface":
        return (0, 1) if vid == lo.id else (-1, 0)
    ups = [e.k for e in g.up_edges(vid)]
    downs = [e.k for e in g.down_edges(vid)]
    if vid == lo.id:
        ks = sorted(ups) + [1, 1]
        return tuple(sorted(ks[:2]))
    if vid == hi.id:
        ks = sorted(downs) + [1, 1]
        return tuple(sorted(-k for k in ks[:2]))
    up = ups[0] if ups else 1
    down = downs[0] if downs else 1
    return (-down, up)


def _monotone_chain_exists(g, low, high):
    """Is there a path of edges from low to high with increasing levels?"""
    target = g.moment(high)
    stack = [low]
    seen = set()
    while stack:
        cur = stack.pop()
        if cur == high:
            return True
        if cur in seen:
            continue
        seen.add(cur)
        y = g.moment(cur)
        for e in g.edges_at(cur):
            w = e.other(cur)
            if y < g.moment(w) <= target:
                stack.append(w)
    return False


def compare(g, vid, wid):
    """Partial order on fixed points: "less", "greater", "incomparable",
    or "equal".

    Two fixed points are comparable when their levels differ and either one
    of them is extremal or a monotone chain of recorded spheres joins them.
    """
    if vid == wid:
        return "equal"
    yv, yw = g.moment(vid), g.moment(wid)
    if yv == yw:
        return "incomparable"
    low, high = (vid, wid) if yv < yw else (wid, vid)
    related = (g.is_extremal(vid) or g.is_extremal(wid)
               or _monotone_chain_exists(g, low, high))
    if not related:
        return "incomparable"
    return "less" if yv < yw else "greater"


def flip(g):
    """Reverse the circle action: negate all moment levels."""
    return DecoratedGraph(
        [Vertex(v.id, v.kind, -v.moment, v.area, v.genus)
         for v in g.vertices.values()],
        g.edges)


def shift(g, c):
    """Translate all moment levels by the rational c."""
    c = Fraction(c)
    return DecoratedGraph(
        [Vertex(v.id, v.kind, v.moment + c, v.area, v.genus)
         for v in g.vertices.values()],
        g.edges)


# -- canonical forms ---------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    digest: str
    text: str


def canonical_form(g, mode="exact"):
    """Canonical normal form of a graph, as (sha256 digest, listing).

    mode "exact" keeps moment levels as given; mode "shift" first translates
    the graph so its minimum level is 0, so graphs differing by a moment-map
    constant agree.
    """
    if mode not in ("exact", "shift"):
        raise ValueError("mode must be 'exact' or 'shift'")
    offset = -min(v.moment for v in g.vertices.values()) if mode == "shift" else 0

    def label(v):
        return "%s|%s|%s|%s" % (
            v.kind, fmt_rat(v.moment + offset),
            "-" if v.area is None else fmt_rat(v.area),
            "-" if v.genus is None else v.genus)

    incident = {vid: [] for vid in g.vertices}
    for e in g.edges:
        incident[e.a].append((e.k, e.b))
        incident[e.b].append((e.k, e.a))

    def refine(colors):
        # Weisfeiler-Leman refinement; classes only ever split, so a
        # stable class count means a stable partition
        while True:
            new = {}
            for vid in g.vertices:
                around = sorted("%d:%s" % (k, colors[w])
                                for k, w in incident[vid])
                data = colors[vid] + "#" + ",".join(around)
                new[vid] = hashlib.sha256(data.encode()).hexdigest()[:16]
            if len(set(new.values())) == len(set(colors.values())):
                return new
            colors = new

    def listing(colors):
        order = sorted(g.vertices,
                       key=lambda vid: (label(g.vertex(vid)), colors[vid]))
        index = {vid: i for i, vid in enumerate(order)}
        lines = []
        for vid in order:
            lines.append("vertex %d %s" % (index[vid], label(g.vertex(vid))))
        for a, b, k in sorted((min(index[e.a], index[e.b]),
                               max(index[e.a], index[e.b]), e.k)
                              for e in g.edges):
            lines.append("edge %d %d k=%d" % (a, b, k))
        return "\n".join(lines)

    def canon(colors):
        colors = refine(colors)
        classes = {}
        for vid, c in colors.items():
            classes.setdefault(c, []).append(vid)
        tied = [classes[c] for c in sorted(classes) if len(classes[c]) > 1]
        if not tied:
            return listing(colors)
        # individualize each vertex of the first tied class in turn and
        # keep the smallest resulting listing
        best = None
        for vid in tied[0]:
            forked = dict(colors)
            forked[vid] += "!"
            text = canon(forked)
            if best is None or text < best:
                best = text
        return best

    text = canon({vid: label(v) for vid, v in g.vertices.items()})
    return CanonicalForm(hashlib.sha256(text.encode()).hexdigest(), text)


def is_isomorphic(g1, g2, mode="exact"):
    """Decide whether two graphs agree up to relabeling of vertex ids.

    In mode "shift" the comparison also ignores a common translation of all
    moment levels.
    """
    return canonical_form(g1, mode).text == canonical_form(g2, mode).text


# -- extensions by free spheres ---------------------------------------------

@dataclass
class ExtendedGraph:
    base: DecoratedGraph
    free_edges: list = field(default_factory=list)  # (low id, high id) pairs
    branches: list = field(default_factory=list)    # vertex id paths, min..max


def _free_capacity(g, vid, used):
    v = g.vertex(vid)
    if v.kind == "surface":
        return 2 - used
    return 2 - len(g.edges_at(vid)) - used


def extend_graph(g):
    """Attach free (weight 1) spheres so every interior fixed point lies on
    one chain from minimum to maximum, with at most two chains in total.

    The search backtracks over the choices, preferring to attach interior
    points directly to the extrema, so the result is deterministic.  Raises
    NoExtensionError when no such arrangement exists.
    """
    require_valid(g)
    lo, hi = g.min_vertex().id, g.max_vertex().id
    interiors = g.interior_ids()
    need_up = [vid for vid in interiors if not g.up_edges(vid)]
    need_up.sort(key=lambda vid: (-g.moment(vid), vid))

    def search(i, frees, used):
        if i == len(need_up):
            # every remaining down-slot can only point at the minimum
            extra = []
            cap_lo = _free_capacity(g, lo, 0)
            for vid in interiors:
                has_down = bool(g.down_edges(vid)) or any(
                    h == vid for _, h in frees)
                if not has_down:
                    if cap_lo <= 0:
                        return None
                    cap_lo -= 1
                    extra.append((lo, vid))
            return frees + extra
        v = need_up[i]
        yv = g.moment(v)
        candidates = []
        if _free_capacity(g, hi, used.get(hi, 0)) > 0:
            candidates.append(hi)
        for w in interiors:
            if g.moment(w) > yv and not g.down_edges(w) and not any(
                    high == w for _, high in frees):
                candidates.append(w)
        for w in candidates:
            used2 = dict(used)
            used2[hi] = used.get(hi, 0) + (1 if w == hi else 0)
            result = search(i + 1, frees + [(v, w)], used2)
            if result is not None:
                return result
        return None

    frees = search(0, [], {})
    if frees is None:
        raise NoExtensionError("no arrangement of free spheres with at most "
                               "two chains exists")
    ext = ExtendedGraph(g, sorted(frees))
    ext.branches = _branches(g, ext.free_edges)
    if len(ext.branches) > 2:
        raise NoExtensionError("every arrangement needs more than two chains")
    return ext


def _branches(g, frees):
    lo, hi = g.min_vertex().id, g.max_vertex().id
    up_of = {}
    starts = []
    for e in g.edges:
        low, high = (e.a, e.b) if g.moment(e.a) < g.moment(e.b) else (e.b, e.a)
        if low == lo:
            starts.append(high)
        else:
            up_of[low] = high
    for low, high in frees:
        if low == lo:
            starts.append(high)
        else:
            up_of[low] = high
    branches = []
    for first in starts:
        path = [lo, first]
        while path[-1] != hi:
            path.append(up_of[path[-1]])
        branches.append(path)
    branches.sort(key=lambda p: [(g.moment(v), v) for v in p[1:-1]])
    return branches


# -- JSON --------------------------------------------------------------------

def graph_to_json(g):
    vertices = []
    for v in sorted(g.vertices.values(), key=lambda v: (v.moment, v.id)):
        d = {"id": v.id, "kind": v.kind, "moment": fmt_rat(v.moment)}
        if v.area is not None:
            d["area"] = fmt_rat(v.area)
        if v.genus is not None:
            d["genus"] = v.genus
        vertices.append(d)
    edges = [{"a": e.a, "b": e.b, "k": e.k}
             for e in sorted(g.edges, key=lambda e: (sorted((e.a, e.b)), e.k))]
    return {"vertices": vertices, "edges": edges}


def graph_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        vertices = [Vertex(str(d["id"]), d["kind"], parse_rat(d["moment"]),
                           parse_rat(d["area"]) if "area" in d else None,
                           int(d["genus"]) if "genus" in d else None)
                    for d in data["vertices"]]
        edges = [Edge(str(d["a"]), str(d["b"]), int(d["k"]))
                 for d in data.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(["malformed graph JSON: %s" % exc]) from exc
    return DecoratedGraph(vertices, edges)
