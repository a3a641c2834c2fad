"""Weights with eventually-constant coordinates, stored exactly.

A weight is a coordinate sequence c0, c1, c2, ... that becomes constant
(the "tail") from some index on, with all entries integers or all entries
in 1/2 + Z. Coordinates are stored as twice their value so that everything
stays in plain ints; HalfInt wraps the same convention for scalar values.

Text form: "<c0>,...,<ck>;<tail>" with entries like "2", "-1", "3/2",
"-1/2". Empty head is allowed (";1").
"""

from math import gcd

from .errors import (
    InfiniteSupport,
    NegativeLevel,
    NonIntegralWeight,
    NonzeroLevel,
    NotInEW,
    NotInLdom,
)

TAGS = ("B", "C", "D")


class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, value=0, *, twice=None):
        if twice is not None:
            self.twice = int(twice)
        elif isinstance(value, HalfInt):
            self.twice = value.twice
        elif isinstance(value, int):
            self.twice = 2 * value
        else:
            raise TypeError("HalfInt takes an int or HalfInt, not %r" % (value,))

    @staticmethod
    def parse(text):
        text = text.strip()
        if text.endswith("/2"):
            num = int(text[:-2])
            if num % 2 == 0:
                raise ValueError("numerator of a half must be odd: %r" % text)
            return HalfInt(twice=num)
        return HalfInt(int(text))

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    def __int__(self):
        if not self.is_integer:
            raise ValueError("%s is not an integer" % self)
        return self.twice // 2

    def __add__(self, other):
        return HalfInt(twice=self.twice + HalfInt(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(twice=self.twice - HalfInt(other).twice)

    def __rsub__(self, other):
        return HalfInt(other) - self

    def __neg__(self):
        return HalfInt(twice=-self.twice)

    def __abs__(self):
        return HalfInt(twice=abs(self.twice))

    def __mul__(self, k):
        if isinstance(k, HalfInt):
            if not k.is_integer:
                raise TypeError("can only scale by integers")
            k = int(k)
        return HalfInt(twice=self.twice * k)

    __rmul__ = __mul__

    def _cmp_key(self, other):
        return HalfInt(other).twice

    def __eq__(self, other):
        try:
            return self.twice == self._cmp_key(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < self._cmp_key(other)

    def __le__(self, other):
        return self.twice <= self._cmp_key(other)

    def __gt__(self, other):
        return self.twice > self._cmp_key(other)

    def __ge__(self, other):
        return self.twice >= self._cmp_key(other)

    def __hash__(self):
        if self.twice % 2 == 0:
            return hash(self.twice // 2)  # match plain int hashing
        return hash((self.twice, "half"))

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return "%d/2" % self.twice

    def __repr__(self):
        return "HalfInt(twice=%d)" % self.twice


def _as_twice(x):
    if isinstance(x, HalfInt):
        return x.twice
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, str):
        return HalfInt.parse(x).twice
    raise TypeError("cannot interpret %r as a half-integer" % (x,))


class Weight:
    """Canonical eventually-constant weight for one of the types B, C, D."""

    __slots__ = ("tag", "head2", "tail2", "_hash")

    def __init__(self, tag, head2=(), tail2=0):
        if tag not in TAGS:
            raise ValueError("type must be one of %s" % (TAGS,))
        head2 = tuple(int(x) for x in head2)
        tail2 = int(tail2)
        par = tail2 % 2
        for x in head2:
            if x % 2 != par:
                raise ValueError("coordinates must all be integers or all halves")
        if tag == "C" and par:
            raise ValueError("type C weights have integer coordinates")
        k = len(head2)
        while k > 0 and head2[k - 1] == tail2:
            k -= 1
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "head2", head2[:k])
        object.__setattr__(self, "tail2", tail2)
        object.__setattr__(self, "_hash", hash((tag, head2[:k], tail2)))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @staticmethod
    def from_coords(tag, coords, tail=0):
        return Weight(tag, tuple(_as_twice(c) for c in coords), _as_twice(tail))

    # -- basics ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.tag == other.tag
            and self.head2 == other.head2
            and self.tail2 == other.tail2
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Weight(%r, %s)" % (self.tag, format_weight(self))

    def coord2(self, j):
        return self.head2[j] if j < len(self.head2) else self.tail2

    def coord(self, j):
        return HalfInt(twice=self.coord2(j))

    def coords2_upto(self, n):
        """Doubled coordinates c0..cn as a list."""
        return [self.coord2(j) for j in range(n + 1)]

    @property
    def head_len(self):
        return len(self.head2)

    @property
    def is_integral(self):
        return self.tail2 % 2 == 0

    @property
    def is_zero(self):
        return self.tail2 == 0 and not self.head2

    def replace_coords(self, pairs):
        """New weight with coordinates at the given indices replaced."""
        top = max([j for j, _ in pairs], default=-1)
        h = self.coords2_upto(max(top, len(self.head2) - 1)) if pairs else list(self.head2)
        for j, v2 in pairs:
            h[j] = v2
        return Weight(self.tag, h, self.tail2)

    def __add__(self, other):
        self._check_same_type(other)
        n = max(len(self.head2), len(other.head2))
        h = [self.coord2(j) + other.coord2(j) for j in range(n)]
        return Weight(self.tag, h, self.tail2 + other.tail2)

    def __sub__(self, other):
        self._check_same_type(other)
        n = max(len(self.head2), len(other.head2))
        h = [self.coord2(j) - other.coord2(j) for j in range(n)]
        return Weight(self.tag, h, self.tail2 - other.tail2)

    def __mul__(self, k):
        k = int(k)
        return Weight(self.tag, [k * x for x in self.head2], k * self.tail2)

    __rmul__ = __mul__

    def __neg__(self):
        return self * (-1)

    def bar(self):
        """Negate coordinate 0 (the even-orthogonal diagram flip)."""
        h = list(self.head2) if self.head2 else [self.tail2]
        h[0] = -h[0]
        return Weight(self.tag, h, self.tail2)

    def _check_same_type(self, other):
        if not isinstance(other, Weight) or other.tag != self.tag:
            raise TypeError("weights of different types")


# -- parse / format -----------------------------------------------------


def parse_weight(tag, text):
    text = text.strip()
    if ";" not in text:
        raise ValueError("weight text needs '<head>;<tail>': %r" % text)
    head_text, tail_text = text.rsplit(";", 1)
    head_text = head_text.strip()
    entries = []
    if head_text:
        entries = [HalfInt.parse(p).twice for p in head_text.split(",")]
    tail2 = HalfInt.parse(tail_text).twice
    return Weight(tag, entries, tail2)


def format_weight(w):
    head = ",".join(str(HalfInt(twice=x)) for x in w.head2)
    return "%s;%s" % (head, HalfInt(twice=w.tail2))


# -- spec operations ----------------------------------------------------


def fundamental_weight(tag, i):
    """The i-th fundamental weight."""
    if i < 0:
        raise ValueError("index must be >= 0")
    if tag == "B":
        if i == 0:
            return Weight("B", (), 1)  # all coordinates 1/2
        return Weight("B", (0,) * i, 2)
    if tag == "C":
        return Weight("C", (0,) * i, 2)
    if tag == "D":
        if i == 0:
            return Weight("D", (), 1)
        if i == 1:
            return Weight("D", (-1,), 1)
        return Weight("D", (0,) * i, 2)
    raise ValueError("bad type %r" % tag)


def level(w):
    return HalfInt(twice=w.tail2)


def support(w):
    """Indices with nonzero coordinate; defined only for level-zero weights."""
    if w.tail2 != 0:
        raise InfiniteSupport("weight %s has level %s" % (format_weight(w), level(w)))
    return [j for j, x in enumerate(w.head2) if x != 0]


def pairing_h(w, i):
    """Integer pairing of the weight with the i-th simple coroot."""
    if i < 0:
        raise ValueError("coroot index must be >= 0")
    if i >= 1:
        return (w.coord2(i) - w.coord2(i - 1)) // 2
    if w.tag == "B":
        return w.coord2(0)
    if w.tag == "C":
        return w.coord2(0) // 2
    return (w.coord2(0) + w.coord2(1)) // 2


def reflect_simple_weight(i, w):
    """Apply the i-th simple reflection to the coordinates."""
    if i == 0:
        if w.tag == "D":
            a, b = w.coord2(0), w.coord2(1)
            return w.replace_coords([(0, -b), (1, -a)])
        return w.replace_coords([(0, -w.coord2(0))])
    a, b = w.coord2(i - 1), w.coord2(i)
    if a == b:
        return w
    return w.replace_coords([(i - 1, b), (i, a)])


def is_dominant(w, upto=None):
    """All simple-coroot pairings >= 0 (through the head, or through upto)."""
    top = len(w.head2) + 1 if upto is None else upto
    return all(pairing_h(w, i) >= 0 for i in range(top + 1))


def dagger(w):
    """Absolute coordinate values, sorted decreasing, as a partition."""
    if w.tail2 != 0:
        raise NonzeroLevel("dagger needs a level-zero weight, got level %s" % level(w))
    vals = sorted((abs(x) for x in w.head2 if x), reverse=True)
    return tuple(v // 2 for v in vals)


def to_partition(w):
    if w.tail2 != 0:
        raise NotInEW("weight %s has nonzero level" % format_weight(w))
    return dagger(w)


def from_partition(tag, rho):
    """Level-zero weight with increasing coordinates rho reversed, then zeros."""
    return Weight(tag, [2 * p for p in reversed(rho)], 0)


def j_dominant_rep(w, n):
    """Dominant representative under the reflections r_0..r_n, with the word.

    Repeatedly applies the least-index simple reflection whose pairing is
    negative. Returns (representative, word) where word is the sequence of
    indices applied, oldest first.
    """
    word = []
    cur = w
    while True:
        neg = None
        for i in range(n + 1):
            if pairing_h(cur, i) < 0:
                neg = i
                break
        if neg is None:
            return cur, tuple(word)
        cur = reflect_simple_weight(neg, cur)
        word.append(neg)


def split_plus_zero(w):
    """Split into a level-zero part and a dominant part of the same level.

    Returns (zero_part, plus_part) with zero_part + plus_part a Weyl
    rearrangement of the input: coordinates with absolute value below the
    level come first (sorted), coordinates above the level contribute their
    excess over the level to the level-zero part.
    """
    L2 = w.tail2
    if L2 < 0:
        raise NegativeLevel("level %s is negative" % level(w))
    if is_dominant(w):
        return Weight(w.tag, (), 0), w
    sub = sorted(abs(x) for x in w.head2 if abs(x) < L2)
    sup = sorted(abs(x) for x in w.head2 if abs(x) > L2)
    if w.tag == "D":
        negatives = sum(1 for x in w.head2 if x < 0)
        has_zero = L2 == 0 or any(x == 0 for x in w.head2)
        if negatives % 2 == 1 and not has_zero:
            # sign parity is invariant without a zero coordinate to absorb
            # it; the rearranged form carries it on coordinate 0
            if sub:
                sub[0] = -sub[0]
            elif sup:
                sup[0] = -sup[0]
            else:
                plus = Weight(w.tag, [-L2], L2)
                return Weight(w.tag, (), 0), plus
    q = len(sub)
    plus = Weight(w.tag, sub, L2)
    # nu = zero + plus coordinatewise, so a sign carried on a coordinate
    # above the level lands on the level-zero part as nu^(j) - L
    zero_head = [0] * q + [v - L2 for v in sup]
    zero = Weight(w.tag, zero_head, 0)
    return zero, plus


def in_ldom(w, ell):
    """Truncation-dominant with constant coordinates beyond index ell."""
    return w.head_len <= ell + 1 and all(pairing_h(w, i) >= 0 for i in range(ell + 1))


def phi_ell(w, ell):
    """Reversed coordinate vector (c_ell, ..., c_1, |c_0|) as a partition."""
    if not in_ldom(w, ell):
        raise NotInLdom(
            "weight %s is not dominant-through-%d with constant tail" % (format_weight(w), ell)
        )
    if w.tail2 % 2:
        raise NonIntegralWeight("phi needs an integral weight, got %s" % format_weight(w))
    vals = [w.coord2(j) // 2 for j in range(ell, 0, -1)]
    vals.append(abs(w.coord2(0)) // 2)
    while vals and vals[-1] == 0:
        vals.pop()
    return tuple(vals)


def compute_N(w):
    """LCM of the nonzero coroot pairings over all positive roots.

    Pairings over two distinct coordinate positions with values a, b give
    a-b and a+b; a value can pair with itself only when it occurs at two
    positions (the tail value always does). Type B adds 2c for every
    coordinate c, type C adds c, type D adds nothing extra.
    """
    counts = {}
    for x in w.head2:
        counts[x] = counts.get(x, 0) + 1
    counts[w.tail2] = counts.get(w.tail2, 0) + 2  # tail occurs infinitely often
    vals = sorted(counts)
    pair2 = set()
    for ai, a in enumerate(vals):
        for b in vals[ai:]:
            if a == b and counts[a] < 2:
                continue
            pair2.add(abs(a - b))
            pair2.add(abs(a + b))
    single2 = set()
    for a in vals:
        if w.tag == "B":
            single2.add(abs(2 * a))
        elif w.tag == "C":
            single2.add(abs(a))
    out = 1
    for t in pair2 | single2:
        # t is twice a pairing; pairings are integers, so t is even
        if t:
            v = t // 2
            out = out * v // gcd(out, v)
    return out
