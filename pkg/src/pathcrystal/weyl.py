"""Finite-rank Weyl group machinery on weight coordinates.

Rank n means the reflections r_0..r_n are available (signed permutations of
coordinates 0..n; type D flips signs in pairs). Positive roots are tagged
tuples:

    ('diff', j, i)   eps_i - eps_j          (j < i, all types)
    ('sum',  j, i)   eps_j + eps_i          (j < i, all types)
    ('short', j)     eps_j                  (type B only)
    ('long',  j)     2 eps_j                (type C only)

The step digraph has an edge x -> r(x) for each positive root whose coroot
pairs negatively with x; every step adds a nonnegative root combination, so
the digraph is acyclic and "greater" means a directed path exists.
"""

import os

from .errors import NotInOrbit, OrbitTooLarge
from .weights import Weight, j_dominant_rep, reflect_simple_weight

DEFAULT_SIZE_CAP = 10**6


def size_cap():
    v = os.environ.get("PATHCRYSTAL_SIZE_CAP")
    return int(v) if v else DEFAULT_SIZE_CAP


def reflect_simple(i, w):
    return reflect_simple_weight(i, w)


def positive_roots(tag, n):
    roots = []
    if tag == "B":
        roots.extend(("short", j) for j in range(n + 1))
    elif tag == "C":
        roots.extend(("long", j) for j in range(n + 1))
    for j in range(n + 1):
        for i in range(j + 1, n + 1):
            roots.append(("diff", j, i))
            roots.append(("sum", j, i))
    return roots


def pairing_root(w, root):
    """Integer pairing of the weight with the coroot of a positive root."""
    kind = root[0]
    if kind == "diff":
        return (w.coord2(root[2]) - w.coord2(root[1])) // 2
    if kind == "sum":
        return (w.coord2(root[1]) + w.coord2(root[2])) // 2
    if kind == "short":
        return w.coord2(root[1])
    if kind == "long":
        return w.coord2(root[1]) // 2
    raise ValueError("bad root %r" % (root,))


def reflect_root(root, w):
    kind = root[0]
    if kind == "diff":
        j, i = root[1], root[2]
        return w.replace_coords([(j, w.coord2(i)), (i, w.coord2(j))])
    if kind == "sum":
        j, i = root[1], root[2]
        return w.replace_coords([(j, -w.coord2(i)), (i, -w.coord2(j))])
    if kind in ("short", "long"):
        j = root[1]
        return w.replace_coords([(j, -w.coord2(j))])
    raise ValueError("bad root %r" % (root,))


def orbit(w, n, cap=None):
    """Orbit of the weight under r_0..r_n, in discovery order."""
    if cap is None:
        cap = size_cap()
    seen = {w}
    out = [w]
    queue = [w]
    while queue:
        x = queue.pop()
        for i in range(n + 1):
            y = reflect_simple_weight(i, x)
            if y not in seen:
                if len(seen) >= cap:
                    raise OrbitTooLarge("orbit exceeded cap %d" % cap)
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


class _StepGraph:
    """Step digraph of one finite-rank orbit, with longest-path memo."""

    def __init__(self, tag, n, elements):
        self.n = n
        roots = positive_roots(tag, n)
        succ = {}
        for x in elements:
            lst = []
            for beta in roots:
                if pairing_root(x, beta) < 0:
                    lst.append((beta, reflect_root(beta, x)))
            succ[x] = lst
        self.succ = succ
        self._longest = {}  # (source, target) -> chain length or None

    def longest(self, x, target):
        """Longest directed path length from x to target, None if unreachable."""
        if x == target:
            return 0
        key = (x, target)
        if key in self._longest:
            return self._longest[key]
        self._longest[key] = None  # cycle guard; the graph is acyclic anyway
        best = None
        for _, y in self.succ[x]:
            sub = self.longest(y, target)
            if sub is not None and (best is None or sub + 1 > best):
                best = sub + 1
        self._longest[key] = best
        return best


_graph_cache = {}


def step_graph(w, n):
    """Shared step digraph for the orbit of w at rank n."""
    rep, _ = j_dominant_rep(w, n)
    key = (w.tag, n, rep)
    g = _graph_cache.get(key)
    if g is None:
        g = _StepGraph(w.tag, n, orbit(rep, n))
        _graph_cache[key] = g
    return g


def _require_same_orbit(g, mu, nu):
    if mu not in g.succ or nu not in g.succ:
        raise NotInOrbit("weights lie in different orbits at this rank")


def bruhat_greater(mu, nu, n):
    """True iff a nonempty chain of negative-pairing reflections joins them."""
    if mu.tag != nu.tag:
        raise NotInOrbit("weights of different types")
    g = step_graph(mu, n)
    _require_same_orbit(g, mu, nu)
    if mu == nu:
        return False
    return g.longest(mu, nu) is not None


def bruhat_dist(mu, nu, n):
    """Maximal chain length from mu down to nu; 0 for equal weights."""
    if mu.tag != nu.tag:
        raise NotInOrbit("weights of different types")
    g = step_graph(mu, n)
    _require_same_orbit(g, mu, nu)
    d = g.longest(mu, nu)
    if d is None:
        raise ValueError("weights are not comparable in this order")
    return d
