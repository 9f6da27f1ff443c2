"""Duistermaat-Heckman density of a decorated graph.

The density on the moment interval [y_min, y_max] is

    rho(y) = a_min H(y - y_min) - e_min T(y - y_min)
             - sum_p T(y - y_p) / (m_p n_p)
             - e_max T(y - y_max) - a_max H(y - y_max)

with H(x) = 1 for x >= 0 else 0, and T(x) = x for x >= 0 else 0.  The sum
runs over interior fixed points with weights {-m_p, n_p}.  Stored values
follow the limit from inside the support, so the function is continuous
piecewise-linear data; pointwise evaluation with the closed H convention
is available through ``evaluate``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import GraphError, isotropy_weights, require_valid
from .rational import fmt_rat


@dataclass(frozen=True)
class PiecewiseLinearDensity:
    """Continuous piecewise-linear function on [breakpoints[0], breakpoints[-1]],
    zero outside; values are the limits from inside the support."""
    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", tuple(self.breakpoints))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.breakpoints) != len(self.values):
            raise ValueError("breakpoints and values differ in length")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if a >= b:
                raise ValueError("breakpoints must increase strictly")

    def value_inside(self, y):
        bp, vals = self.breakpoints, self.values
        if y < bp[0] or y > bp[-1]:
            return Fraction(0)
        for i in range(len(bp) - 1):
            if bp[i] <= y <= bp[i + 1]:
                t = Fraction(y - bp[i], bp[i + 1] - bp[i])
                return vals[i] + t * (vals[i + 1] - vals[i])
        return vals[-1]

    def to_json(self):
        return {"breakpoints": [fmt_rat(b) for b in self.breakpoints],
                "values": [fmt_rat(v) for v in self.values]}


@dataclass(frozen=True)
class ExtremalData:
    e_min: Fraction
    e_max: Fraction


def _interior_products(g):
    """(level, m_p n_p) for each interior fixed point."""
    out = []
    for vid in g.interior_ids():
        w1, w2 = isotropy_weights(g, vid)
        out.append((g.moment(vid), (-w1) * w2))
    return out


def extremal_self_intersections(g):
    """Self-intersections of the extremal sets, solved from the graph.

    The two linear conditions are that rho vanishes identically above
    y_max: its slope there gives e_min + e_max = -sum 1/(m_p n_p), and its
    constant term gives y_min e_min + y_max e_max =
    a_max - a_min - sum y_p/(m_p n_p).  When an extremum is an isolated
    point with weights {n, n'}, the solution is cross-checked against the
    closed form -1/(n n').
    """
    require_valid(g)
    lo, hi = g.min_vertex(), g.max_vertex()
    if lo.moment == hi.moment:
        raise GraphError("degenerate graph: y_min = y_max")
    s0 = sum(Fraction(1, mn) for _, mn in _interior_products(g))
    s1 = sum(Fraction(y * 1, mn) for y, mn in _interior_products(g))
    a_min = lo.area if lo.kind == "surface" else Fraction(0)
    a_max = hi.area if hi.kind == "surface" else Fraction(0)
    e_max = Fraction(a_max - a_min - s1 + lo.moment * s0,
                     hi.moment - lo.moment)
    e_min = -s0 - e_max
    if lo.kind == "point":
        n, np_ = isotropy_weights(g, lo.id)
        if e_min != Fraction(-1, n * np_):
            raise GraphError("inconsistent graph: e_min = %s but the minimum "
                             "has weights {%d, %d}" % (e_min, n, np_))
    if hi.kind == "point":
        m, mp_ = isotropy_weights(g, hi.id)
        if e_max != Fraction(-1, m * mp_):
            raise GraphError("inconsistent graph: e_max = %s but the maximum "
                             "has weights {%d, %d}" % (e_max, m, mp_))
    return ExtremalData(e_min, e_max)


def density(g):
    """Exact Duistermaat-Heckman density of a valid graph."""
    ext = extremal_self_intersections(g)
    lo, hi = g.min_vertex(), g.max_vertex()
    a_min = lo.area if lo.kind == "surface" else Fraction(0)
    products = _interior_products(g)
    bps = sorted({v.moment for v in g.vertices.values()})

    def inside(y):
        val = a_min - ext.e_min * (y - lo.moment)
        for yp, mn in products:
            if y > yp:
                val -= Fraction(y - yp, mn)
        return val

    return PiecewiseLinearDensity(bps, [inside(y) for y in bps])


def evaluate(g, y):
    """Pointwise value of rho with the literal H(0) = 1 convention."""
    ext = extremal_self_intersections(g)
    lo, hi = g.min_vertex(), g.max_vertex()
    a_min = lo.area if lo.kind == "surface" else Fraction(0)
    a_max = hi.area if hi.kind == "surface" else Fraction(0)

    def H(x):
        return 1 if x >= 0 else 0

    def T(x):
        return x if x >= 0 else Fraction(0)

    val = a_min * H(y - lo.moment) - ext.e_min * T(y - lo.moment)
    for yp, mn in _interior_products(g):
        val -= Fraction(T(y - yp), mn)
    val -= ext.e_max * T(y - hi.moment)
    val -= a_max * H(y - hi.moment)
    return val


def total_mass(rho):
    """Exact integral of a piecewise-linear density."""
    total = Fraction(0)
    for i in range(len(rho.breakpoints) - 1):
        dy = rho.breakpoints[i + 1] - rho.breakpoints[i]
        total += Fraction(rho.values[i] + rho.values[i + 1], 2) * dy
    return total


def check_concave_nonneg(rho, g=None):
    """Slopes must be non-increasing and values nonnegative on the support."""
    if any(v < 0 for v in rho.values):
        return False
    slopes = []
    for i in range(len(rho.breakpoints) - 1):
        dy = rho.breakpoints[i + 1] - rho.breakpoints[i]
        slopes.append(Fraction(rho.values[i + 1] - rho.values[i], dy))
    return all(s1 >= s2 for s1, s2 in zip(slopes, slopes[1:]))


def polygon_pushforward(P):
    """Horizontal width function of a Delzant polygon: the pushforward of
    Lebesgue measure under (x, y) -> y."""
    from .toric_geometry import require_valid_polygon
    require_valid_polygon(P)
    heights = sorted({y for _, y in P.vertices})

    def width(y):
        xs = []
        n = len(P.vertices)
        for i in range(n):
            (x1, y1), (x2, y2) = P.vertices[i], P.vertices[(i + 1) % n]
            if y1 == y2 == y:
                xs += [x1, x2]
            elif min(y1, y2) <= y <= max(y1, y2) and y1 != y2:
                xs.append(x1 + (x2 - x1) * Fraction(y - y1, y2 - y1))
        return max(xs) - min(xs)

    return PiecewiseLinearDensity(heights, [width(y) for y in heights])
