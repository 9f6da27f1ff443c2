"""Equivariant blow-up and blow-down as exact graph rewrites.

Blowing up at a fixed point rewrites the graph locally; the new moment and
area labels are affine functions of the blow-up size lambda.  A symbolic
blow-up keeps them as affine pairs (c0, c1) meaning c0 + c1*lambda, together
with the partial order the vertices carry for small lambda, so admissible
sizes can be computed exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import (DecoratedGraph, Edge, GraphError, Vertex,
                         isotropy_weights, require_valid, validate_graph)


@dataclass(frozen=True)
class BlowupSite:
    vertex: str
    tag: str


@dataclass(frozen=True)
class BlowdownSite:
    pattern: str          # "A", "B", "C", or "D"
    vertices: tuple       # ids consumed by the rewrite
    lam: Fraction
    side: str = ""        # "min" or "max" for the extremal patterns


def _aff(c0, c1=0):
    return (Fraction(c0), Fraction(c1))


def _aff_at(a, lam):
    return a[0] + a[1] * lam


def _aff_lt(a, b):
    """Compare affine functions in the small-lambda regime."""
    return (a[0], a[1]) < (b[0], b[1])


class SymbolicBlowup:
    """Blown-up graph with labels affine in the blow-up size."""

    def __init__(self, base, site, vertices, edges):
        self.base = base
        self.site = site
        self.vertices = vertices  # id -> (kind, moment aff, area aff|None, genus)
        self.edges = edges
        self.order_pairs = self._carried_order()

    def _carried_order(self):
        ids = list(self.vertices)
        mom = {vid: self.vertices[vid][1] for vid in ids}
        lo = min(ids, key=lambda v: (mom[v], v))
        hi = max(ids, key=lambda v: (mom[v], v))
        incident = {vid: [] for vid in ids}
        for e in self.edges:
            incident[e.a].append(e.b)
            incident[e.b].append(e.a)

        def chain(low, high):
            stack, seen = [low], set()
            while stack:
                cur = stack.pop()
                if cur == high:
                    return True
                if cur in seen:
                    continue
                seen.add(cur)
                for w in incident[cur]:
                    if _aff_lt(mom[cur], mom[w]) and (
                            _aff_lt(mom[w], mom[high]) or w == high):
                        stack.append(w)
            return False

        pairs = []
        for v in ids:
            for w in ids:
                if v >= w:
                    continue
                if mom[v] == mom[w]:
                    continue
                a, b = (v, w) if _aff_lt(mom[v], mom[w]) else (w, v)
                if a in (lo, hi) or b in (lo, hi) or chain(a, b):
                    pairs.append((a, b))
        return pairs


def blowup_sites(g):
    """One blow-up site per vertex, tagged by the local model."""
    require_valid(g)
    lo, hi = g.min_vertex().id, g.max_vertex().id
    sites = []
    for vid in sorted(g.vertices, key=lambda v: (g.moment(v), v)):
        v = g.vertex(vid)
        if v.kind == "surface":
            tag = "SurfaceMin" if vid == lo else "SurfaceMax"
        elif vid == lo:
            w = isotropy_weights(g, vid)
            tag = "IsolatedMin11" if w == (1, 1) else "IsolatedMinDistinct"
        elif vid == hi:
            w = isotropy_weights(g, vid)
            tag = "IsolatedMax11" if w == (-1, -1) else "IsolatedMaxDistinct"
        else:
            tag = "Interior"
        sites.append(BlowupSite(vid, tag))
    return sites


def site_for_vertex(g, vid):
    for s in blowup_sites(g):
        if s.vertex == vid:
            return s
    raise GraphError("unknown vertex %r" % (vid,))


def _fresh(base_ids, stem):
    vid = stem
    while vid in base_ids:
        vid += "'"
    return vid


def blowup_symbolic(g, site):
    """The blown-up graph with labels affine in lambda."""
    require_valid(g)
    p = g.vertex(site.vertex)
    alpha = p.moment
    sym_vertices = {v.id: (v.kind, _aff(v.moment),
                           None if v.area is None else _aff(v.area), v.genus)
                    for v in g.vertices.values()}
    edges = [e for e in g.edges if site.vertex not in (e.a, e.b)]
    touched = [e for e in g.edges if site.vertex in (e.a, e.b)]
    ids = set(sym_vertices)
    tag = site.tag

    def add(vid, kind, mom, area=None, genus=None):
        sym_vertices[vid] = (kind, mom, area, genus)

    if tag == "Interior":
        wdn, wup = isotropy_weights(g, p.id)
        n, m = -wdn, wup
        del sym_vertices[p.id]
        v_hi = _fresh(ids, p.id + ".hi")
        v_lo = _fresh(ids, p.id + ".lo")
        add(v_hi, "point", _aff(alpha, m))
        add(v_lo, "point", _aff(alpha, -n))
        for e in touched:
            other = e.other(p.id)
            target = v_hi if g.moment(other) > alpha else v_lo
            edges.append(Edge(target, other, e.k))
        edges.append(Edge(v_lo, v_hi, m + n))
    elif tag in ("SurfaceMin", "SurfaceMax"):
        sgn = 1 if tag == "SurfaceMin" else -1
        kind, mom, area, genus = sym_vertices[p.id]
        sym_vertices[p.id] = (kind, mom, (area[0], area[1] - 1), genus)
        v_new = _fresh(ids, p.id + ".new")
        add(v_new, "point", _aff(alpha, sgn))
    elif tag in ("IsolatedMinDistinct", "IsolatedMaxDistinct"):
        sgn = 1 if tag == "IsolatedMinDistinct" else -1
        w = isotropy_weights(g, p.id)
        n, m = sorted(abs(x) for x in w)
        if n == m:
            raise GraphError("vertex %s has weights {1,1}; use the 1,1 "
                             "blow-up" % p.id)
        del sym_vertices[p.id]
        v_ext = _fresh(ids, p.id + ".lo" if sgn > 0 else p.id + ".hi")
        v_int = _fresh(ids, p.id + ".hi" if sgn > 0 else p.id + ".lo")
        add(v_ext, "point", _aff(alpha, sgn * n))
        add(v_int, "point", _aff(alpha, sgn * m))
        for e in touched:
            target = v_ext if e.k == n else v_int
            edges.append(Edge(target, e.other(p.id), e.k))
        if m - n >= 2:
            edges.append(Edge(v_ext, v_int, m - n))
    elif tag in ("IsolatedMin11", "IsolatedMax11"):
        sgn = 1 if tag == "IsolatedMin11" else -1
        if isotropy_weights(g, p.id) not in ((1, 1), (-1, -1)):
            raise GraphError("vertex %s does not have weights {1,1}" % p.id)
        genus = 0
        for s in g.surfaces():
            genus = s.genus
        del sym_vertices[p.id]
        v_s = _fresh(ids, p.id + ".s")
        add(v_s, "surface", _aff(alpha, sgn), _aff(0, 1), genus)
    else:
        raise GraphError("unknown blow-up tag %r" % (tag,))
    return SymbolicBlowup(g, site, sym_vertices, edges)


def instantiate(sb, lam):
    """Evaluate a symbolic blow-up at a concrete size lambda > 0."""
    lam = Fraction(lam)
    if lam <= 0:
        raise GraphError("blow-up size must be positive")
    vertices = []
    for vid, (kind, mom, area, genus) in sb.vertices.items():
        vertices.append(Vertex(vid, kind, _aff_at(mom, lam),
                               None if area is None else _aff_at(area, lam),
                               genus))
    return DecoratedGraph(vertices, sb.edges)


def monotone_check(sb, lam):
    """True iff the blown-up labels at lambda respect the carried order
    strictly and all area labels stay positive."""
    lam = Fraction(lam)
    if lam <= 0:
        return False
    for v, w in sb.order_pairs:
        if not _aff_at(sb.vertices[v][1], lam) < _aff_at(sb.vertices[w][1], lam):
            return False
    for vid, (kind, mom, area, genus) in sb.vertices.items():
        if area is not None and not _aff_at(area, lam) > 0:
            return False
    return True


def max_size(g, site):
    """(supremum of admissible blow-up sizes, attainable flag).

    The supremum is None when no constraint bounds lambda (cannot happen
    for valid compact graphs, but kept for safety).
    """
    sb = blowup_symbolic(g, site)
    constraints = []  # require c0 + c1*lambda > 0
    for v, w in sb.order_pairs:
        mv, mw = sb.vertices[v][1], sb.vertices[w][1]
        constraints.append((mw[0] - mv[0], mw[1] - mv[1]))
    for vid, (kind, mom, area, genus) in sb.vertices.items():
        if area is not None:
            constraints.append(area)
    bounds = [Fraction(-c0, c1) for c0, c1 in constraints if c1 < 0]
    if not bounds:
        return None, False
    sup = min(bounds)
    return sup, monotone_check(sb, sup) if sup > 0 else False


def blowup(g, vid, lam):
    """Blow up at the vertex by size lambda, refusing non-monotone sizes."""
    site = site_for_vertex(g, vid)
    sb = blowup_symbolic(g, site)
    if not monotone_check(sb, lam):
        sup, _ = max_size(g, site)
        raise GraphError("monotonicity violated: lambda = %s is not in "
                         "(0, %s)" % (lam, sup))
    result = instantiate(sb, lam)
    return require_valid(result)


# -- blow-down ---------------------------------------------------------------

def _fully_valid(g):
    from .dh_measure import extremal_self_intersections
    if validate_graph(g):
        return False
    try:
        extremal_self_intersections(g)
    except GraphError:
        return False
    return True


def _merge_id(g, *parts):
    return _fresh(set(g.vertices), "+".join(parts))


def _apply_A(g, e, m, n):
    v_bot, v_top = (e.a, e.b) if g.moment(e.a) < g.moment(e.b) else (e.b, e.a)
    lam = Fraction(g.moment(v_top) - g.moment(v_bot), e.k)
    mu = g.moment(v_top) - m * lam
    merged = _merge_id(g, v_bot, v_top)
    vertices = [v for v in g.vertices.values() if v.id not in (v_bot, v_top)]
    vertices.append(Vertex(merged, "point", mu))
    edges = []
    for ed in g.edges:
        if ed is e:
            continue
        a = merged if ed.a in (v_bot, v_top) else ed.a
        b = merged if ed.b in (v_bot, v_top) else ed.b
        edges.append(Edge(a, b, ed.k))
    return DecoratedGraph(vertices, edges), lam


def _A_sites(g):
    out = []
    for e in g.edges:
        if g.is_extremal(e.a) or g.is_extremal(e.b):
            continue
        v_bot, v_top = (e.a, e.b) if g.moment(e.a) < g.moment(e.b) \
            else (e.b, e.a)
        ups = [x.k for x in g.up_edges(v_top)]
        downs = [x.k for x in g.down_edges(v_bot)]
        m = ups[0] if ups else 1
        n = downs[0] if downs else 1
        if m + n != e.k:
            continue
        result, lam = _apply_A(g, e, m, n)
        if _fully_valid(result):
            out.append((BlowdownSite("A", (v_bot, v_top), lam), result))
    return out


def _apply_C(g, ext_id, q_id, n, d, side):
    sgn = 1 if side == "min" else -1
    lam = Fraction(abs(g.moment(q_id) - g.moment(ext_id)), d)
    mu = g.moment(ext_id) - sgn * n * lam
    merged = _merge_id(g, ext_id, q_id)
    vertices = [v for v in g.vertices.values() if v.id not in (ext_id, q_id)]
    vertices.append(Vertex(merged, "point", mu))
    edges = []
    for ed in g.edges:
        if {ed.a, ed.b} == {ext_id, q_id}:
            continue
        a = merged if ed.a in (ext_id, q_id) else ed.a
        b = merged if ed.b in (ext_id, q_id) else ed.b
        edges.append(Edge(a, b, ed.k))
    return DecoratedGraph(vertices, edges), lam


def _C_sites(g):
    out = []
    for side in ("min", "max"):
        ext = g.min_vertex() if side == "min" else g.max_vertex()
        if ext.kind != "point":
            continue
        a, b = sorted(abs(x) for x in isotropy_weights(g, ext.id))
        m = a + b
        seen = set()
        for n, d in ((a, b), (b, a)):
            if (n, d) in seen:
                continue
            seen.add((n, d))
            for q in g.interior_ids():
                qups = [x.k for x in g.up_edges(q)]
                qdowns = [x.k for x in g.down_edges(q)]
                outward = (qups[0] if qups else 1) if side == "min" \
                    else (qdowns[0] if qdowns else 1)
                inward = (qdowns[0] if qdowns else 1) if side == "min" \
                    else (qups[0] if qups else 1)
                if outward != m or inward != d:
                    continue
                linked = any({e.a, e.b} == {ext.id, q} for e in g.edges)
                if (d >= 2) != linked:
                    continue
                result, lam = _apply_C(g, ext.id, q, n, d, side)
                if lam > 0 and _fully_valid(result):
                    out.append((BlowdownSite("C", (ext.id, q), lam, side),
                                result))
    return out


def _D_sites(g):
    out = []
    for side in ("min", "max"):
        ext = g.min_vertex() if side == "min" else g.max_vertex()
        if ext.kind != "surface" or ext.genus != 0:
            continue
        sgn = 1 if side == "min" else -1
        lam = ext.area
        merged = _merge_id(g, ext.id)
        vertices = [v for v in g.vertices.values() if v.id != ext.id]
        vertices.append(Vertex(merged, "point", ext.moment - sgn * lam))
        result = DecoratedGraph(vertices, g.edges)
        if _fully_valid(result):
            out.append((BlowdownSite("D", (ext.id,), lam, side), result))
    return out


def _B_sites(g):
    out = []
    for q in g.interior_ids():
        if g.edges_at(q):
            continue
        for side in ("min", "max"):
            ext = g.min_vertex() if side == "min" else g.max_vertex()
            if ext.kind != "surface":
                continue
            lam = abs(g.moment(q) - ext.moment)
            vertices = []
            for v in g.vertices.values():
                if v.id == q:
                    continue
                if v.id == ext.id:
                    v = Vertex(v.id, v.kind, v.moment, v.area + lam, v.genus)
                vertices.append(v)
            result = DecoratedGraph(vertices, g.edges)
            if lam > 0 and _fully_valid(result):
                out.append((BlowdownSite("B", (q,), lam, side), result))
    return out


def blowdown_sites(g):
    """All recognized blow-down sites, with the size each one removes."""
    require_valid(g)
    found = _A_sites(g) + _C_sites(g) + _D_sites(g) + _B_sites(g)
    found.sort(key=lambda pair: (pair[0].pattern, pair[0].vertices,
                                 pair[0].side))
    return [site for site, _ in found]


def blowdown(g, site):
    """Apply the inverse rewrite at a site found by blowdown_sites."""
    require_valid(g)
    for cand, result in _A_sites(g) + _C_sites(g) + _D_sites(g) + _B_sites(g):
        if cand == site:
            return result
    raise GraphError("not a blow-down site: %r" % (site,))


def _ordered_sites(cur):
    """All blow-down options of cur in preference order: A sites with the
    largest edge weight first, then C (smaller size, min side first), then
    D (min side first), then B (smaller size, max side first)."""
    a = _A_sites(cur)
    a.sort(key=lambda pair: (-_site_weight(cur, pair[0]), pair[0].vertices))
    c = _C_sites(cur)
    c.sort(key=lambda pair: (pair[0].lam, pair[0].side != "min",
                             pair[0].vertices))
    d = _D_sites(cur)
    d.sort(key=lambda pair: (pair[0].side != "min",))
    b = _B_sites(cur)
    b.sort(key=lambda pair: (pair[0].lam, pair[0].side != "max",
                             pair[0].vertices))
    return a + c + d + b


def reduce_to_minimal(g):
    """Blow down until a graph of a minimal family remains.

    The same graph can admit several legitimate blow-down sequences ending
    at different minimal models (minimal models are not unique).  The
    search explores them all, stops each path at the first minimal-family
    graph, and keeps the longest sequence; among equal lengths it prefers
    the smaller terminal graph and then the preference order of
    _ordered_sites.  Returns the minimal graph and the blow-down records.
    """
    from .classify import match_minimal_family
    require_valid(g)
    matched = {}

    def is_minimal(cur):
        key = str(sorted((v.id, v.kind, v.moment, v.area, v.genus)
                         for v in cur.vertices.values())) + \
            str(sorted((e.a, e.b, e.k) for e in cur.edges))
        if key not in matched:
            matched[key] = match_minimal_family(cur) is not None
        return matched[key]

    best = None

    def dfs(cur, records):
        nonlocal best
        if is_minimal(cur):
            # rank a finished sequence: prefer many steps but penalize
            # blowing down fixed surfaces (pattern D), which the gradient
            # sphere argument never needs; then prefer the smaller model
            n_d = sum(1 for s in records if s.pattern == "D")
            key = (len(records) - n_d, len(records), -len(cur.vertices))
            if best is None or key > best[0]:
                best = (key, list(records), cur)
            return
        options = _ordered_sites(cur)
        if not options:
            raise GraphError("internal failure: graph matches no minimal "
                             "family and admits no blow-down")
        for site, nxt in options:
            records.append(site)
            dfs(nxt, records)
            records.pop()

    dfs(g, [])
    return best[2], best[1]


def _site_weight(g, site):
    v_bot, v_top = site.vertices
    return int((g.moment(v_top) - g.moment(v_bot)) / site.lam)
