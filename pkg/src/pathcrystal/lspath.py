"""Piecewise-linear paths in weight space and their crystal operators.

A path is a sequence of direction weights nu_1, ..., nu_s together with
rational breakpoints 0 = a_0 < a_1 < ... < a_s = 1; the path value at t in
[a_{u-1}, a_u] is sum_{v<u} (a_v - a_{v-1}) nu_v + (t - a_{u-1}) nu_u.
Everything is exact: breakpoints are Fractions, directions are Weights.

Operators return None when undefined, matching the usual crystal
convention for e_i / f_i falling off the graph.

Text form: (<w1>|...|<ws> ; a0,a1,...,as) with weight syntax from
pathcrystal.weights, e.g. (0,-1;0|0,1;0 ; 0,1/2,1).
"""

from fractions import Fraction

from .errors import NonIntegralWeight
from .weights import Weight, compute_N, j_dominant_rep, pairing_h, parse_weight, format_weight
from .weyl import pairing_root, reflect_simple, step_graph


class LSPath:
    """Immutable piecewise-linear path; use make_path to build one."""

    __slots__ = ("points", "breaks", "_hash")

    def __init__(self, points, breaks):
        points = tuple(points)
        breaks = tuple(breaks)
        if len(points) + 1 != len(breaks):
            raise ValueError("need one more breakpoint than directions")
        if not points:
            raise ValueError("a path needs at least one direction")
        if breaks[0] != 0 or breaks[-1] != 1:
            raise ValueError("breakpoints must run from 0 to 1")
        for u in range(1, len(breaks)):
            if breaks[u - 1] >= breaks[u]:
                raise ValueError("breakpoints must strictly increase")
        for u in range(1, len(points)):
            if points[u - 1] == points[u]:
                raise ValueError("adjacent directions must differ (merge first)")
        tag = points[0].tag
        for p in points:
            if p.tag != tag:
                raise ValueError("mixed types in one path")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "_hash", hash((points, breaks)))

    def __setattr__(self, name, value):
        raise AttributeError("LSPath is immutable")

    @property
    def tag(self):
        return self.points[0].tag

    def __eq__(self, other):
        return (
            isinstance(other, LSPath)
            and self.points == other.points
            and self.breaks == other.breaks
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "LSPath(%s)" % format_path(self)


def make_path(points, breaks):
    """Build a path, merging equal adjacent directions and zero-length steps."""
    pts = []
    brs = [Fraction(breaks[0])]
    for p, b in zip(points, breaks[1:]):
        b = Fraction(b)
        if b == brs[-1]:
            continue  # zero length segment
        if pts and pts[-1] == p:
            brs[-1] = b  # merge with previous segment
        else:
            pts.append(p)
            brs.append(b)
    return LSPath(pts, brs)


def straight_path(w):
    """The single-segment path pointing at w."""
    return LSPath((w,), (Fraction(0), Fraction(1)))


def value_at(pi, t):
    """Exact path value at time t, as (tuple of Fraction coords, Fraction tail).

    The coordinate tuple covers indices 0..k-1 where k is the longest head
    among the direction weights; all later coordinates equal the tail value.
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    k = max(p.head_len for p in pi.points)
    heads = [Fraction(0)] * k
    tail = Fraction(0)
    for u, p in enumerate(pi.points):
        lo, hi = pi.breaks[u], pi.breaks[u + 1]
        d = min(t, hi) - lo
        if d <= 0:
            break
        for j in range(k):
            heads[j] += d * Fraction(p.coord2(j), 2)
        tail += d * Fraction(p.tail2, 2)
    return tuple(heads), tail


def weight_of(pi):
    """Endpoint value as a weight; raises NonIntegralWeight if it is not one."""
    heads, tail = value_at(pi, 1)
    tail2 = 2 * tail
    head2 = [2 * h for h in heads]
    if tail2.denominator != 1 or any(h.denominator != 1 for h in head2):
        raise NonIntegralWeight("endpoint of %s is not a weight" % format_path(pi))
    try:
        return Weight(pi.tag, [int(h) for h in head2], int(tail2))
    except ValueError:
        raise NonIntegralWeight("endpoint of %s mixes parities" % format_path(pi))


def _h_data(pi, i):
    """Breakpoint values of t -> <pi(t), h_i> plus the integer minimum."""
    slopes = [pairing_h(p, i) for p in pi.points]
    hvals = [Fraction(0)]
    for u, sl in enumerate(slopes):
        hvals.append(hvals[-1] + (pi.breaks[u + 1] - pi.breaks[u]) * sl)
    m = min(hvals)
    if m.denominator != 1:
        raise ValueError("minimum of the pairing function is not an integer")
    return hvals, int(m)


def h_function(pi, i):
    """Pairing with the i-th coroot at every breakpoint (list of Fractions)."""
    return _h_data(pi, i)[0]


def _rebuild(pi, i, t0, t1):
    """Reflect the directions of pi on [t0, t1], keep the rest."""
    cuts = sorted(set(pi.breaks) | {t0, t1})
    pts = []
    brs = [Fraction(0)]
    for k in range(len(cuts) - 1):
        l, r = cuts[k], cuts[k + 1]
        u = 0
        while pi.breaks[u + 1] <= l:
            u += 1
        p = pi.points[u]
        if t0 <= l and r <= t1:
            p = reflect_simple(i, p)
        pts.append(p)
        brs.append(r)
    return make_path(pts, brs)


def root_e(i, pi):
    """Raising operator; None when the pairing minimum is already 0."""
    hvals, m = _h_data(pi, i)
    if m == 0:
        return None
    u1 = next(u for u, h in enumerate(hvals) if h == m)
    t1 = pi.breaks[u1]
    t0 = None
    for v in range(u1, 0, -1):
        if hvals[v] == m + 1:
            t0 = pi.breaks[v]
            break
        if hvals[v - 1] >= m + 1 > hvals[v]:
            left = hvals[v - 1]
            t0 = pi.breaks[v - 1] + (pi.breaks[v] - pi.breaks[v - 1]) * (
                left - (m + 1)
            ) / (left - hvals[v])
            break
    if t0 is None:
        # H(0) = 0 = m+1 can only happen at the very start
        t0 = pi.breaks[0]
    return _rebuild(pi, i, t0, t1)


def root_f(i, pi):
    """Lowering operator; None when the endpoint sits at the minimum."""
    hvals, m = _h_data(pi, i)
    phi = hvals[-1] - m
    if phi == 0:
        return None
    u0 = max(u for u, h in enumerate(hvals) if h == m)
    t0 = pi.breaks[u0]
    t1 = None
    for v in range(u0 + 1, len(hvals)):
        if hvals[v] == m + 1:
            t1 = pi.breaks[v]
            break
        if hvals[v] > m + 1:
            left = hvals[v - 1]
            t1 = pi.breaks[v - 1] + (pi.breaks[v] - pi.breaks[v - 1]) * (
                (m + 1) - left
            ) / (hvals[v] - left)
            break
    assert t1 is not None  # phi >= 1 guarantees the level m+1 is reached
    return _rebuild(pi, i, t0, t1)


def eps_phi(i, pi):
    """(eps, phi): how many times e_i and f_i apply before hitting None."""
    eps = 0
    cur = pi
    while True:
        nxt = root_e(i, cur)
        if nxt is None:
            break
        eps += 1
        cur = nxt
    phi = 0
    cur = pi
    while True:
        nxt = root_f(i, cur)
        if nxt is None:
            break
        phi += 1
        cur = nxt
    return eps, phi


def eps_phi_minmax(i, pi):
    """(eps, phi) from the pairing function: (-min, end - min).

    Agrees with eps_phi on valid paths; the equality is exercised by the
    test suite rather than assumed here.
    """
    hvals, m = _h_data(pi, i)
    end = hvals[-1]
    if end.denominator != 1:
        raise ValueError("endpoint pairing is not an integer")
    return -m, int(end) - m


def weyl_s(i, pi):
    """The i-th string reflection: f_i^k or e_i^(-k) with k the weight pairing."""
    k = pairing_h(weight_of(pi), i)
    cur = pi
    if k >= 0:
        for _ in range(k):
            cur = root_f(i, cur)
            if cur is None:
                raise ValueError("string shorter than the weight pairing")
    else:
        for _ in range(-k):
            cur = root_e(i, cur)
            if cur is None:
                raise ValueError("string shorter than the weight pairing")
    return cur


def validate_ls_path(pi, lam, n):
    """Check the chain conditions defining shape-lam paths at rank n.

    Verifies: all directions lie in the rank-n orbit of lam's dominant
    representative; the common denominator bound N * a_u in Z at interior
    breakpoints; and for each consecutive pair of directions a chain of
    covering reflection steps whose pairings are negative multiples of
    1/a_u.
    """
    rep, _ = j_dominant_rep(lam, n)
    g = step_graph(rep, n)
    for p in pi.points:
        if p not in g.succ:
            return False
    N = compute_N(lam)
    for u in range(1, len(pi.breaks) - 1):
        if (N * pi.breaks[u]).denominator != 1:
            return False
    for u in range(1, len(pi.points)):
        a = pi.breaks[u]
        if not _a_chain_exists(g, pi.points[u - 1], pi.points[u], a):
            return False
    return True


def format_path(pi):
    ws = "|".join(format_weight(p) for p in pi.points)
    bs = ",".join(str(b) for b in pi.breaks)
    return "(%s ; %s)" % (ws, bs)


def parse_path(tag, text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("path text must be parenthesized: %r" % text)
    body = text[1:-1]
    if " ; " not in body:
        raise ValueError("path text needs ' ; ' between directions and breakpoints")
    wpart, bpart = body.rsplit(" ; ", 1)
    points = [parse_weight(tag, w) for w in wpart.split("|")]
    breaks = [Fraction(b) for b in bpart.split(",")]
    return LSPath(points, breaks)


def _a_chain_exists(g, src, dst, a):
    """Chain of cover steps src -> ... -> dst with pairings in (1/a) Z_{<0}."""
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for beta, y in g.succ[x]:
            if y in seen:
                continue
            pr = pairing_root(x, beta)
            if (a * pr).denominator != 1:
                continue
            if g.longest(x, y) != 1:
                continue  # not a covering step
            seen.add(y)
            stack.append(y)
    return False
