"""Integer arithmetic of chains of gradient spheres.

A chain records the stabilizer orders k_1..k_l of the spheres joining the
fixed points of one branch, bottom to top.  Each end is either a fixed
surface (contributing neighbor weight 0) or an isolated extremum, whose
second isotropy weight is carried explicitly on the boundary marker.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class ChainError(Exception):
    pass


SURFACE_END = None  # boundary marker: adjacent to a fixed surface


@dataclass(frozen=True)
class WeightChain:
    weights: tuple        # k_1..k_l, positive integers
    bottom: int | None = SURFACE_END  # other isotropy weight, or SURFACE_END
    top: int | None = SURFACE_END

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    def end_weight(self, which):
        """Neighbor weight beyond the chain: 0 at a surface end."""
        mark = self.bottom if which == "bottom" else self.top
        return 0 if mark is SURFACE_END else abs(mark)


def validate_chain(c):
    """Return a list of violated conditions; empty means valid."""
    problems = []
    ks = c.weights
    if not ks:
        return ["empty chain"]
    for k in ks:
        if not isinstance(k, int) or k < 1:
            problems.append("weight %r is not a positive integer" % (k,))
    if problems:
        return problems
    for i in range(len(ks) - 1):
        if gcd(ks[i], ks[i + 1]) != 1:
            problems.append("gcd(k_%d, k_%d) = %d != 1"
                            % (i + 1, i + 2, gcd(ks[i], ks[i + 1])))
    for i in range(1, len(ks) - 1):
        q, r = divmod(ks[i - 1] + ks[i + 1], ks[i])
        if r != 0 or q <= 0:
            problems.append("(k_%d + k_%d)/k_%d = %d/%d is not a positive "
                            "integer" % (i, i + 2, i + 1,
                                         ks[i - 1] + ks[i + 1], ks[i]))
    if c.bottom is SURFACE_END and ks[0] != 1:
        problems.append("surface end at the bottom requires k_1 = 1")
    if c.top is SURFACE_END and ks[-1] != 1:
        problems.append("surface end at the top requires k_l = 1")
    return problems


def require_valid_chain(c):
    problems = validate_chain(c)
    if problems:
        raise ChainError("; ".join(problems))
    return c


def self_intersections(c):
    """Self-intersection numbers e_1..e_l of the chain spheres.

    e_i = -(k_{i-1} + k_{i+1})/k_i, with the neighbor weight beyond either
    end given by the boundary marker (0 at a surface).
    """
    require_valid_chain(c)
    ks = (c.end_weight("bottom"),) + c.weights + (c.end_weight("top"),)
    es = []
    for i in range(1, len(ks) - 1):
        q, r = divmod(ks[i - 1] + ks[i + 1], ks[i])
        if r != 0:
            raise ChainError("self-intersection at position %d is not an "
                             "integer; boundary data inconsistent" % i)
        es.append(-q)
    return es


def mg_check(m, n, e, k):
    """Weights m (north) and n (south) of a sphere with self-intersection e
    and stabilizer order k must satisfy m - n = -e k."""
    return m - n == -e * k


def _default_seed(ks):
    k1 = ks[0]
    k2 = ks[1] if len(ks) > 1 else 1
    if k1 == 1:
        b1 = 0
    else:
        b1 = (-pow(k2, -1, k1)) % k1
    b2 = (1 + b1 * k2) // k1
    return b1, b2


def b_sequence(c, b1=None, b2=None):
    """Integers b_i with k_i b_{i+1} - b_i k_{i+1} = 1 along the chain.

    The default seed comes from the extended Euclidean algorithm with
    0 <= b_1 < k_2 when possible; any valid seed gives an equivalent fan.
    """
    require_valid_chain(c)
    ks = c.weights
    if b1 is None or b2 is None:
        b1, b2 = _default_seed(ks)
    if len(ks) == 1:
        return [b1]
    if ks[0] * b2 - b1 * ks[1] != 1:
        raise ChainError("seed violates k_1 b_2 - b_1 k_2 = 1")
    bs = [b1, b2]
    for i in range(1, len(ks) - 1):
        step = (ks[i + 1] + ks[i - 1]) // ks[i]
        bs.append(-bs[i - 1] + step * bs[i])
    return bs


def chain_fan(c, b1=None, b2=None):
    """Lattice vectors u_i = (k_i, b_i); consecutive determinants are 1 and
    all vectors lie in the open right half-plane."""
    bs = b_sequence(c, b1, b2)
    fan = [(k, b) for k, b in zip(c.weights, bs)]
    for (k, b), (k2, b2_) in zip(fan, fan[1:]):
        if k * b2_ - b * k2 != 1:
            raise ChainError("fan determinant check failed")
    return fan


def kho_d(c):
    """The positive integer d with sum 1/(k_i k_{i+1}) = d/(k_1 k_l)."""
    require_valid_chain(c)
    ks = c.weights
    if len(ks) < 2:
        raise ChainError("kho_d needs a chain of length >= 2")
    total = sum(Fraction(1, ks[i] * ks[i + 1]) for i in range(len(ks) - 1))
    d = total * ks[0] * ks[-1]
    if d.denominator != 1 or d <= 0:
        raise ChainError("internal consistency failure: d = %s" % d)
    fan = chain_fan(c)
    (k1, b1), (kl, bl) = fan[0], fan[-1]
    det = k1 * bl - b1 * kl
    if det != d.numerator:
        raise ChainError("internal consistency failure: d = %s but "
                         "det(u_1 u_l) = %d" % (d, det))
    return d.numerator
