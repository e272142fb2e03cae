"""Brauer diagrams: perfect matchings on a two-sided boundary.

A (k, l) diagram is a perfect matching on k + l nodes, drawn with k nodes on
the bottom boundary and l on the top.  Composition stacks one diagram on top
of another, gluing the middle boundary, deleting closed loops (their count is
returned alongside the residual diagram), and tensor is juxtaposition.

Node convention (the single 0-based/1-based bridge for the whole package):
internally nodes are 0-based, bottom 0..k-1 left to right, then top k..k+l-1
left to right.  The algebra literature numbers strands 1-based; the generator
constructors s_i(r, i) and e_i(r, i) keep that 1-based convention, everything
else speaks 0-based positions.
"""

from __future__ import annotations

import itertools

from brauer import ops


class DiagramError(ValueError):
    pass


class Diagram:
    """Immutable canonical (k, l) perfect matching.

    pairs is the canonical form: each arc stored (min, max), arcs sorted
    lexicographically.  partner is the involution as a flat tuple.
    """

    __slots__ = ("k", "l", "pairs", "partner", "_hash")

    def __init__(self, k, l, pairs):
        n = k + l
        partner = [-1] * n
        for arc in pairs:
            try:
                a, b = arc
            except (TypeError, ValueError):
                raise DiagramError("arc %r is not a pair" % (arc,))
            if not (isinstance(a, int) and isinstance(b, int)):
                raise DiagramError("non-integer node in arc %r" % (arc,))
            if a == b or not (0 <= a < n) or not (0 <= b < n):
                raise DiagramError("arc %r out of range for %d nodes" % (arc, n))
            if partner[a] != -1 or partner[b] != -1:
                raise DiagramError("node repeated in arc %r" % (arc,))
            partner[a] = b
            partner[b] = a
        if -1 in partner:
            raise DiagramError(
                "pairs do not cover all %d nodes of a (%d, %d) diagram" % (n, k, l)
            )
        self.k = k
        self.l = l
        self.partner = tuple(partner)
        self.pairs = tuple((i, partner[i]) for i in range(n) if i < partner[i])
        self._hash = hash((k, l, self.pairs))

    @staticmethod
    def _from_partner(k, l, partner):
        d = object.__new__(Diagram)
        d.k = k
        d.l = l
        d.partner = tuple(partner)
        d.pairs = tuple((i, partner[i]) for i in range(k + l) if i < partner[i])
        d._hash = hash((k, l, d.pairs))
        return d

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.k == other.k and self.l == other.l and self.pairs == other.pairs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.k, self.l, self.pairs) < (other.k, other.l, other.pairs)

    def __repr__(self):
        return "Diagram(%d, %d, %r)" % (self.k, self.l, list(self.pairs))

    def through_count(self):
        """Number of arcs joining the bottom boundary to the top."""
        return sum(1 for a, b in self.pairs if a < self.k <= b)


def make_diagram(k, l, pairs):
    return Diagram(k, l, pairs)


def compose(d1, d2):
    """Stack d1 on top of d2 (d2 applied first): d1 o d2.

    d2: k -> l, d1: l -> p.  Returns (loop_count, residual (k, p) diagram).
    """
    if d1.k != d2.l:
        raise DiagramError(
            "valency mismatch: cannot compose (%d,%d) after (%d,%d)"
            % (d1.k, d1.l, d2.k, d2.l)
        )
    loops, partner = ops.compose_partners(d2.partner, d2.k, d2.l, d1.partner, d1.l)
    return loops, Diagram._from_partner(d2.k, d1.l, partner)


def tensor(d1, d2):
    """Juxtaposition, left factor on the left."""
    k = d1.k + d2.k
    l = d1.l + d2.l
    partner = [-1] * (k + l)

    def map1(i):
        return i if i < d1.k else k + (i - d1.k)

    def map2(i):
        return d1.k + i if i < d2.k else k + d1.l + (i - d2.k)

    for a, b in d1.pairs:
        a, b = map1(a), map1(b)
        partner[a] = b
        partner[b] = a
    for a, b in d2.pairs:
        a, b = map2(a), map2(b)
        partner[a] = b
        partner[b] = a
    return Diagram._from_partner(k, l, partner)


def _relabel(d, k, l, node_map):
    partner = [-1] * (k + l)
    for a, b in d.pairs:
        a, b = node_map(a), node_map(b)
        partner[a] = b
        partner[b] = a
    return Diagram._from_partner(k, l, partner)


def star(d):
    """Reflection in a horizontal line: (k,l) -> (l,k)."""
    return _relabel(d, d.l, d.k, lambda i: d.l + i if i < d.k else i - d.k)


def sharp(d):
    """Reflection in a vertical line: left-right mirror."""
    k, l = d.k, d.l
    return _relabel(d, k, l, lambda i: k - 1 - i if i < k else k + (l - 1 - (i - k)))


def ast(d):
    """The composite star o sharp, the algebra anti-involution on diagrams."""
    return star(sharp(d))


def identity(r):
    return Diagram._from_partner(r, r, tuple(range(r, 2 * r)) + tuple(range(r)))


def crossing():
    return Diagram(2, 2, [(0, 3), (1, 2)])


def cap():
    return Diagram(2, 0, [(0, 1)])


def cup():
    return Diagram(0, 2, [(0, 1)])


def permutation_diagram(pi):
    """Diagram of the permutation sending bottom i to top pi[i] (0-based)."""
    r = len(pi)
    if sorted(pi) != list(range(r)):
        raise DiagramError("%r is not a permutation of 0..%d" % (pi, r - 1))
    return Diagram(r, r, [(i, r + pi[i]) for i in range(r)])


def s_i(r, i):
    """Adjacent transposition of strands i, i+1 (1-based, 1 <= i <= r-1)."""
    if not 1 <= i <= r - 1:
        raise DiagramError("s_i index %d out of range for %d strands" % (i, r))
    pi = list(range(r))
    pi[i - 1], pi[i] = pi[i], pi[i - 1]
    return permutation_diagram(pi)


def e_i(r, i):
    """Cap-cup pair on strands i, i+1 (1-based, 1 <= i <= r-1)."""
    if not 1 <= i <= r - 1:
        raise DiagramError("e_i index %d out of range for %d strands" % (i, r))
    return e_pair(r, i - 1, i)


def e_pair(r, a, b):
    """Bottom arc {a,b}, top arc {a,b}, identity elsewhere (0-based a < b)."""
    if not 0 <= a < b <= r - 1:
        raise DiagramError("e_pair needs 0 <= a < b <= r-1, got (%d, %d)" % (a, b))
    pairs = [(a, b), (r + a, r + b)]
    pairs += [(j, r + j) for j in range(r) if j != a and j != b]
    return Diagram(r, r, pairs)


def x_block(s, t):
    """Block crossing: the first s strands pass over the next t."""
    pi = [t + i for i in range(s)] + [j for j in range(t)]
    return permutation_diagram(pi)


def a_nest(q):
    """Nested caps: (2q, 0) diagram with arcs {i, 2q-1-i}."""
    return Diagram(2 * q, 0, [(i, 2 * q - 1 - i) for i in range(q)])


def u_nest(q):
    """Nested cups: (0, 2q) diagram with arcs {i, 2q-1-i}."""
    return Diagram(0, 2 * q, [(i, 2 * q - 1 - i) for i in range(q)])


def raise_diagram(d):
    """Bend the last bottom strand up: (D (x) I) o (I^(k-1) (x) cup).

    Implemented as the equivalent pure relabeling; composition cannot create
    loops here, which the property tests confirm against the composed form.
    """
    k, l = d.k, d.l
    if k < 1:
        raise DiagramError("raise needs at least one bottom node")

    def node_map(i):
        if i < k - 1:
            return i
        if i == k - 1:
            return (k - 1) + l
        return (k - 1) + (i - k)

    return _relabel(d, k - 1, l + 1, node_map)


def lower_diagram(d):
    """Bend the last top strand down: (I^(l-1) (x) cap) o (D (x) I)."""
    k, l = d.k, d.l
    if l < 1:
        raise DiagramError("lower needs at least one top node")

    def node_map(i):
        if i < k:
            return i
        if i == k + l - 1:
            return k
        return (k + 1) + (i - k)

    return _relabel(d, k + 1, l - 1, node_map)


def rotate_right(d, p):
    """Rotate the last p strands of a square diagram around the right edge.

    Pure relabeling: the last p top positions become the last p bottom
    positions in reversed order, and vice versa.  rotate_right(X, 1) = e_1;
    applying it twice with p = r is the identity.
    """
    if d.k != d.l:
        raise DiagramError("rotate_right needs a square diagram")
    r = d.k
    if not 0 <= p <= r:
        raise DiagramError("rotation amount %d out of range 0..%d" % (p, r))

    def node_map(i):
        if i < r:  # bottom position i
            if i < r - p:
                return i
            t = i - (r - p)
            return r + (r - 1 - t)  # new top position r-1-t
        j = i - r  # top position j
        if j < r - p:
            return r + j
        t = j - (r - p)
        return r - 1 - t  # new bottom position r-1-t

    return _relabel(d, r, r, node_map)


_ENUM_CACHE = {}


def enumerate_diagrams(k, l):
    """All (k, l) diagrams in a fixed deterministic order.

    The order pairs the smallest unmatched node with each larger node in
    increasing order, recursively.  Count is (k+l-1)!! for even k+l.
    """
    key = (k, l)
    cached = _ENUM_CACHE.get(key)
    if cached is None:
        if (k + l) % 2 == 1:
            cached = ()
        else:
            out = []
            partner = [-1] * (k + l)

            def rec(free):
                if not free:
                    out.append(Diagram._from_partner(k, l, partner))
                    return
                a = free[0]
                for idx in range(1, len(free)):
                    b = free[idx]
                    partner[a] = b
                    partner[b] = a
                    rec(free[1:idx] + free[idx + 1 :])
                partner[a] = -1

            rec(tuple(range(k + l)))
            cached = tuple(out)
        _ENUM_CACHE[key] = cached
    return list(cached)


def crossing_count(d):
    """Interleaving arc pairs in the circular boundary order.

    Circular order walks the bottom left to right then the top right to
    left; two arcs interleave iff exactly one endpoint of one lies strictly
    between the endpoints of the other.
    """
    k, l = d.k, d.l

    def pos(i):
        return i if i < k else k + (l - 1 - (i - k))

    arcs = [tuple(sorted((pos(a), pos(b)))) for a, b in d.pairs]
    count = 0
    for (a, b), (c, e) in itertools.combinations(arcs, 2):
        if (a < c < b) != (a < e < b):
            count += 1
    return count


def closure_loops(d):
    """Loop count of the full right closure cap_r o (D (x) I_r) o cup_r."""
    if d.k != d.l:
        raise DiagramError("closure needs a square diagram")
    return ops.closure_cycles(d.partner, d.k)


def diagram_to_json(d):
    return {"k": d.k, "l": d.l, "pairs": [list(p) for p in d.pairs]}


def diagram_from_json(obj):
    try:
        k, l, pairs = obj["k"], obj["l"], obj["pairs"]
    except (TypeError, KeyError):
        raise DiagramError("diagram JSON needs keys k, l, pairs")
    return Diagram(int(k), int(l), [tuple(int(x) for x in p) for p in pairs])
