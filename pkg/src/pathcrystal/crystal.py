"""Finite-rank crystal graphs built from paths, and tensor products.

Elements are LSPath objects; tensor elements are plain (left, right) pairs.
A crystal graph is generated by closing the straight dominant path under
the lowering operators f_0..f_n. Operator results are memoized per path,
which keeps large tensor searches cheap.
"""

import hashlib
import json

from .errors import SizeCap
from .lspath import (
    LSPath,
    eps_phi_minmax,
    format_path,
    root_e,
    root_f,
    straight_path,
    weight_of,
)
from .weights import j_dominant_rep, pairing_h
from .weyl import size_cap

_e_cache = {}
_f_cache = {}
_ep_cache = {}
_wt_cache = {}


def clear_caches():
    _e_cache.clear()
    _f_cache.clear()
    _ep_cache.clear()
    _wt_cache.clear()


def cached_e(i, pi):
    key = (i, pi)
    if key not in _e_cache:
        _e_cache[key] = root_e(i, pi)
    return _e_cache[key]


def cached_f(i, pi):
    key = (i, pi)
    if key not in _f_cache:
        _f_cache[key] = root_f(i, pi)
    return _f_cache[key]


def cached_eps_phi(i, pi):
    key = (i, pi)
    if key not in _ep_cache:
        _ep_cache[key] = eps_phi_minmax(i, pi)
    return _ep_cache[key]


def cached_weight(pi):
    if pi not in _wt_cache:
        _wt_cache[pi] = weight_of(pi)
    return _wt_cache[pi]


class CrystalGraph:
    """A connected crystal generated from one dominant path."""

    def __init__(self, lam, rep, n, elements, edges):
        self.lam = lam
        self.rep = rep
        self.n = n
        self.elements = elements  # discovery order
        self.edges = edges  # (src, i, dst) with dst = f_i(src)

    def __len__(self):
        return len(self.elements)

    @property
    def highest(self):
        return self.elements[0]

    def maximal_elements(self):
        return [x for x in self.elements if all(cached_e(i, x) is None for i in range(self.n + 1))]

    def minimal_elements(self):
        return [x for x in self.elements if all(cached_f(i, x) is None for i in range(self.n + 1))]

    def node_id(self, pi):
        return hashlib.sha1(format_path(pi).encode()).hexdigest()[:12]

    def to_dot(self):
        lines = ["digraph crystal {"]
        for pi in sorted(self.elements, key=format_path):
            lines.append('  "%s" [label="%s"];' % (self.node_id(pi), format_path(pi)))
        for src, i, dst in sorted(
            self.edges, key=lambda e: (format_path(e[0]), e[1], format_path(e[2]))
        ):
            lines.append(
                '  "%s" -> "%s" [label="%d"];' % (self.node_id(src), self.node_id(dst), i)
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        elements = sorted(format_path(p) for p in self.elements)
        edges = sorted(
            [format_path(s), i, format_path(d)] for s, i, d in self.edges
        )
        return json.dumps({"elements": elements, "edges": edges}, indent=2) + "\n"


def generate_crystal(lam, n, cap=None):
    """Close the straight path at lam's dominant representative under f_i.

    Any Weyl translate may be passed as the shape; the representative
    dominant through rank n is used as the starting direction.
    """
    if cap is None:
        cap = size_cap()
    rep, _ = j_dominant_rep(lam, n)
    start = straight_path(rep)
    elements = [start]
    seen = {start}
    edges = []
    queue = [start]
    while queue:
        x = queue.pop()
        for i in range(n + 1):
            y = cached_f(i, x)
            if y is None:
                continue
            edges.append((x, i, y))
            if y not in seen:
                if len(seen) >= cap:
                    raise SizeCap("crystal exceeded cap %d" % cap)
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return CrystalGraph(lam, rep, n, elements, edges)


# -- tensor product -----------------------------------------------------


def tensor_eps_phi(i, pair):
    x, y = pair
    ex, px = cached_eps_phi(i, x)
    ey, py = cached_eps_phi(i, y)
    eps = ex + max(0, ey - px)
    phi = py + max(0, px - ey)
    return eps, phi


def tensor_weight(pair):
    return cached_weight(pair[0]) + cached_weight(pair[1])


def tensor_e(i, pair):
    """Raising operator on a two-factor tensor element, None if undefined."""
    x, y = pair
    _, px = cached_eps_phi(i, x)
    ey, _ = cached_eps_phi(i, y)
    if px >= ey:
        nx = cached_e(i, x)
        return None if nx is None else (nx, y)
    ny = cached_e(i, y)
    return None if ny is None else (x, ny)


def tensor_f(i, pair):
    """Lowering operator on a two-factor tensor element, None if undefined."""
    x, y = pair
    _, px = cached_eps_phi(i, x)
    ey, _ = cached_eps_phi(i, y)
    if px > ey:
        nx = cached_f(i, x)
        return None if nx is None else (nx, y)
    ny = cached_f(i, y)
    return None if ny is None else (x, ny)


def is_maximal(pair, n):
    """No raising operator applies (eps vanishes for every index)."""
    return all(tensor_eps_phi(i, pair)[0] == 0 for i in range(n + 1))


def is_minimal(pair, n):
    return all(tensor_eps_phi(i, pair)[1] == 0 for i in range(n + 1))


# -- generic element operations (path or pair) --------------------------


def _is_pair(x):
    return isinstance(x, tuple)


def elem_weight(x):
    return tensor_weight(x) if _is_pair(x) else cached_weight(x)


def elem_eps_phi(i, x):
    return tensor_eps_phi(i, x) if _is_pair(x) else cached_eps_phi(i, x)


def elem_e(i, x):
    return tensor_e(i, x) if _is_pair(x) else cached_e(i, x)


def elem_f(i, x):
    return tensor_f(i, x) if _is_pair(x) else cached_f(i, x)


def string_reflect(i, x):
    """Apply f_i or e_i as many times as the weight pairing demands."""
    k = pairing_h(elem_weight(x), i)
    cur = x
    for _ in range(k):
        cur = elem_f(i, cur)
        if cur is None:
            raise ValueError("string shorter than weight pairing")
    for _ in range(-k):
        cur = elem_e(i, cur)
        if cur is None:
            raise ValueError("string shorter than weight pairing")
    return cur


def is_extremal_at_rank(x, n, cap=None):
    """Check the extremal property on the whole string-reflection closure.

    An element is extremal when, on every Weyl translate along string
    reflections, e_i kills it whenever the weight pairing with h_i is >= 0
    and f_i kills it whenever the pairing is <= 0.
    """
    if cap is None:
        cap = size_cap()
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        wt = elem_weight(y)
        nexts = []
        for i in range(n + 1):
            k = pairing_h(wt, i)
            eps, phi = elem_eps_phi(i, y)
            if k >= 0 and eps != 0:
                return False
            if k <= 0 and phi != 0:
                return False
            if k != 0:
                nexts.append(i)
        for i in nexts:
            z = string_reflect(i, y)
            if z not in seen:
                if len(seen) >= cap:
                    raise SizeCap("string-reflection closure exceeded cap %d" % cap)
                seen.add(z)
                stack.append(z)
    return True


# -- brute tensor decomposition -----------------------------------------


def decompose_brute(lam, mu, n, cap=None):
    """Group the maximal elements of the tensor product crystal by weight.

    Returns (mapping weight -> list of maximal (left, right) pairs,
    left crystal, right crystal). The left factor of a maximal pair is
    always the highest path of the left crystal, so only the right factor
    is searched.
    """
    ga = generate_crystal(lam, n, cap)
    gb = generate_crystal(mu, n, cap)
    top = ga.highest
    phis = [cached_eps_phi(i, top)[1] for i in range(n + 1)]
    fibers = {}
    for y in gb.elements:
        good = True
        for i in range(n + 1):
            if cached_eps_phi(i, y)[0] > phis[i]:
                good = False
                break
        if good:
            nu = cached_weight(top) + cached_weight(y)
            fibers.setdefault(nu, []).append((top, y))
    return fibers, ga, gb


def maximal_elements_of_weight(lam, mu, n, nu, cap=None):
    fibers, _, _ = decompose_brute(lam, mu, n, cap)
    return fibers.get(nu, [])


# -- tensor components and graph isomorphism ----------------------------


def tensor_component(pair, n, cap=None):
    """f-closure of one tensor element: (elements, edges)."""
    if cap is None:
        cap = size_cap()
    seen = {pair}
    elements = [pair]
    edges = []
    queue = [pair]
    while queue:
        x = queue.pop()
        for i in range(n + 1):
            y = tensor_f(i, x)
            if y is None:
                continue
            edges.append((x, i, y))
            if y not in seen:
                if len(seen) >= cap:
                    raise SizeCap("tensor component exceeded cap %d" % cap)
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return elements, edges


def graphs_isomorphic(nodes1, edges1, root1, nodes2, edges2, root2):
    """Isomorphism of edge-labeled rooted digraphs by label propagation.

    Roots must correspond; every node must be reachable from the root along
    labeled edges for the propagation to certify a bijection.
    """
    if len(nodes1) != len(nodes2) or len(edges1) != len(edges2):
        return False
    out1 = {}
    for s, i, d in edges1:
        if (s, i) in out1:
            return False  # crystal operators are functions
        out1[(s, i)] = d
    out2 = {}
    for s, i, d in edges2:
        if (s, i) in out2:
            return False
        out2[(s, i)] = d
    fwd = {root1: root2}
    stack = [root1]
    while stack:
        x = stack.pop()
        labels1 = {i for (s, i) in out1 if s == x}
        labels2 = {i for (s, i) in out2 if s == fwd[x]}
        if labels1 != labels2:
            return False
        for i in labels1:
            y1 = out1[(x, i)]
            y2 = out2[(fwd[x], i)]
            if y1 in fwd:
                if fwd[y1] != y2:
                    return False
            else:
                if y2 in fwd.values():
                    return False
                fwd[y1] = y2
                stack.append(y1)
    return len(fwd) == len(nodes1)