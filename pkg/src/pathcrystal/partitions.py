"""Integer partitions and Littlewood-Richardson coefficients.

Partitions are plain tuples of weakly decreasing positive ints; () is the
empty partition. Text form is comma separated parts, empty string for ().
"""

from .errors import LengthExceeded


def check_partition(rho):
    """Return rho as a normalized tuple, raising ValueError if malformed."""
    rho = tuple(int(x) for x in rho)
    for i, x in enumerate(rho):
        if x <= 0:
            raise ValueError("partition parts must be positive: %r" % (rho,))
        if i > 0 and rho[i - 1] < x:
            raise ValueError("partition parts must weakly decrease: %r" % (rho,))
    return rho


def parse_partition(text):
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError("bad partition %r" % text)
    return check_partition(parts)


def format_partition(rho):
    return ",".join(str(p) for p in rho)


def size(rho):
    return sum(rho)


def part(rho, i):
    """i-th part, 1-indexed, 0 beyond the last row."""
    return rho[i - 1] if 1 <= i <= len(rho) else 0


def conjugate(rho):
    """Transpose the Young diagram (column lengths)."""
    if not rho:
        return ()
    return tuple(sum(1 for p in rho if p >= j) for j in range(1, rho[0] + 1))


def iota_insert(L, rho):
    """Insert one extra part equal to L (no-op for L = 0)."""
    if L < 0:
        raise ValueError("part to insert must be >= 0")
    if L == 0:
        return tuple(rho)
    out = list(rho)
    k = 0
    while k < len(out) and out[k] >= L:
        k += 1
    out.insert(k, L)
    return tuple(out)


def contains(outer, inner):
    return all(part(outer, i + 1) >= x for i, x in enumerate(inner))


def is_vertical_strip(outer, inner):
    """True iff outer/inner is a skew shape with at most one cell per row."""
    if not contains(outer, inner):
        return False
    return all(p - part(inner, i + 1) <= 1 for i, p in enumerate(outer))


def is_horizontal_strip(outer, inner):
    """True iff outer/inner is a skew shape with at most one cell per column."""
    if not contains(outer, inner):
        return False
    # interlacing: outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    return all(part(inner, i) >= part(outer, i + 1) for i in range(1, len(outer) + 1))


def partitions_of(n, max_part=None):
    """All partitions of n with parts <= max_part, in lex-decreasing order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def subpartitions(rho, weight=None):
    """All partitions contained in rho (optionally of a fixed size)."""
    out = []

    def go(i, cap, acc, rem):
        if weight is not None and rem < 0:
            return
        if i == len(rho):
            if weight is None or rem == 0:
                out.append(tuple(acc))
            return
        hi = min(rho[i], cap)
        for v in range(hi, -1, -1):
            if v == 0:
                if weight is None or rem == 0:
                    out.append(tuple(acc))
                return
            acc.append(v)
            go(i + 1, v, acc, rem - v)
            acc.pop()

    go(0, rho[0] if rho else 0, [], weight if weight is not None else 0)
    return out


_lr_cache = {}


def lr_coefficient(rho, kappa, omega):
    """Multiplicity of the omega component in the product of rho and kappa.

    Counts column-strict fillings of the skew shape omega/rho with content
    kappa whose reverse reading word (right to left, top to bottom) is a
    lattice word. Exact backtracking; results are memoized.
    """
    rho = tuple(rho)
    kappa = tuple(kappa)
    omega = tuple(omega)
    if size(omega) != size(rho) + size(kappa):
        return 0
    if not contains(omega, rho) or not contains(omega, kappa):
        return 0
    if not kappa:
        return 1 if omega == rho else 0
    key = (rho, kappa, omega)
    if key in _lr_cache:
        return _lr_cache[key]

    nrows = len(omega)
    inner = [part(rho, i + 1) for i in range(nrows)]
    # cells in reverse reading order: rows top to bottom, columns right to left
    cells = []
    for r in range(nrows):
        for c in range(omega[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))

    nvals = len(kappa)
    remaining = list(kappa)
    # column -> value placed in the previous row at that column (for strictness)
    above = {}
    fill = {}
    counts = [0] * (nvals + 1)  # counts[v] = copies of v placed so far, 1-indexed
    total = 0

    def ok(r, c, v):
        if remaining[v - 1] == 0:
            return False
        # lattice: after placing, #v <= #(v-1)
        if v > 1 and counts[v] + 1 > counts[v - 1]:
            return False
        # row weakly increases left to right, we fill right to left
        right = fill.get((r, c + 1))
        if right is not None and v > right:
            return False
        up = fill.get((r - 1, c))
        if up is not None and v <= up:
            return False
        return True

    def go(k):
        nonlocal total
        if k == len(cells):
            total += 1
            return
        r, c = cells[k]
        for v in range(1, nvals + 1):
            if ok(r, c, v):
                fill[(r, c)] = v
                counts[v] += 1
                remaining[v - 1] -= 1
                go(k + 1)
                fill.pop((r, c))
                counts[v] -= 1
                remaining[v - 1] += 1

    go(0)
    _lr_cache[key] = total
    return total


def lr_expand(rho, kappa):
    """All (omega, coefficient) with nonzero coefficient in the product."""
    n = size(rho) + size(kappa)
    out = []
    for omega in partitions_of(n):
        c = lr_coefficient(rho, kappa, omega)
        if c:
            out.append((omega, c))
    return out


def require_length(rho, nparts):
    """Raise LengthExceeded when rho has more than nparts parts."""
    if len(rho) > nparts:
        raise LengthExceeded(
            "partition %s has %d parts, at most %d allowed"
            % (format_partition(rho) or "(empty)", len(rho), nparts)
        )
