"""Distinguished elements of the diagram algebra and their identity verifiers.

Houses the (anti)symmetrizers Sigma_eps(r), the quasi-idempotents Phi and
E_p, the bent elements D(p, q), products of cap-cup generators, and exact
verifiers for the recursion/cap/bend identities these elements satisfy.

Index conventions follow the classical generator notation: s_i and e_i act
on strands i, i+1 with 1-based i, and antisymmetrizer windows [k, l] are
1-based inclusive.  Reciprocal factorials 1/t! are taken to vanish for
t < 0, which is the convention that makes the cap and bend identities hold
uniformly at the boundary of their parameter ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from . import diagram as dg
from .diagram import Diagram, closure_loops, identity, lower_diagram, make_diagram, tensor
from .linear import (
    Morphism,
    MorphismError,
    delta_factor,
    from_diagram,
    identity_morphism,
    integrality_check,
    lin_add,
    lin_ast,
    lin_compose,
    lin_scale,
    lin_sub,
    lin_tensor,
    make_morphism,
    reduce_mod_p,
    specialize_delta,
    zero_morphism,
)
from .report import check, check_bool
from .rings import QQ, QQ_DELTA, Poly

__all__ = [
    "AlgebraContext",
    "ElementError",
    "inversions",
    "from_permutation",
    "sigma",
    "antisymmetrizer_block",
    "e_product",
    "e_i_j",
    "phi",
    "f_p",
    "e_p_rotation",
    "e_p_formula",
    "d_pq",
    "verify_sigma_identities",
    "verify_sigma_cap",
    "verify_afu",
    "jones_trace_symbolic",
    "brauer_presentation_report",
    "integrality_check",
    "reduce_mod_p",
    "specialize_delta",
]


class ElementError(ValueError):
    """Raised for out-of-range constructor parameters."""


@dataclass(frozen=True)
class AlgebraContext:
    """Degree, coefficient ring, delta handling, and sign for one algebra."""

    r: int
    ring: object = QQ_DELTA
    delta: object = None
    eps: int = 0

    def diagram(self, d):
        return from_diagram(d, ring=self.ring, delta=self.delta)

    def identity(self):
        return identity_morphism(self.r, ring=self.ring, delta=self.delta)

    def zero(self):
        return zero_morphism(self.r, self.r, ring=self.ring, delta=self.delta)

    def s(self, i):
        return self.diagram(dg.s_i(self.r, i))

    def e(self, i):
        return self.diagram(dg.e_i(self.r, i))


def inversions(pi):
    """Coxeter length of a permutation given in one-line 0-based form."""
    count = 0
    for a in range(len(pi)):
        for b in range(a + 1, len(pi)):
            if pi[a] > pi[b]:
                count += 1
    return count


def from_permutation(pi, ring=QQ_DELTA, delta=None):
    """Single-diagram morphism of the permutation sending bottom i to top pi[i]."""
    return from_diagram(dg.permutation_diagram(tuple(pi)), ring=ring, delta=delta)


def sigma(eps, r, ring=QQ_DELTA, delta=None):
    """Sum over Sym_r of (-eps)^length; symmetrizer for eps=-1, antisymmetrizer for +1."""
    if eps not in (1, -1):
        raise ElementError("eps must be +1 or -1")
    if r < 0:
        raise ElementError("degree must be nonnegative")
    terms = {}
    for pi in permutations(range(r)):
        terms[dg.permutation_diagram(pi)] = (-eps) ** inversions(pi)
    return make_morphism(r, r, terms, ring=ring, delta=delta)


def antisymmetrizer_block(k, l, r, ring=QQ_DELTA, delta=None):
    """Signed sum over permutations of the 1-based window [k, l] fixing the rest.

    Equals the identity whenever k >= l.
    """
    if r < 0:
        raise ElementError("degree must be nonnegative")
    if k >= l:
        return identity_morphism(r, ring=ring, delta=delta)
    if not (1 <= k and l <= r):
        raise ElementError(
            "window [%d, %d] out of range for %d strands" % (k, l, r)
        )
    window = list(range(k - 1, l))
    terms = {}
    for w in permutations(window):
        full = list(range(r))
        for pos, image in zip(window, w):
            full[pos] = image
        terms[dg.permutation_diagram(full)] = (-1) ** inversions(w)
    return make_morphism(r, r, terms, ring=ring, delta=delta)


def e_product(indices, r, ring=QQ_DELTA, delta=None):
    """Left-to-right product of cap-cup generators e_i for i in indices."""
    acc = identity_morphism(r, ring=ring, delta=delta)
    for i in indices:
        acc = lin_compose(acc, from_diagram(dg.e_i(r, i), ring=ring, delta=delta))
    return acc


def e_i_j(i, j, r, ring=QQ_DELTA, delta=None):
    """Nested product e_{i,i+1} e_{i-1,i+2} ... e_{i-j+1,i+j} (1-based strands).

    The factors act on pairwise disjoint strand pairs; e_i_j(i, 0, r) is the
    identity.
    """
    if j < 0:
        raise ElementError("j must be nonnegative")
    if j > 0 and not (1 <= i - j + 1 and i + j <= r):
        raise ElementError(
            "nested window (i=%d, j=%d) out of range for %d strands" % (i, j, r)
        )
    acc = identity_morphism(r, ring=ring, delta=delta)
    for x in range(j):
        factor = dg.e_pair(r, (i - x) - 1, (i + 1 + x) - 1)
        acc = lin_compose(acc, from_diagram(factor, ring=ring, delta=delta))
    return acc


def phi(n):
    """The quasi-idempotent of degree n+1 at delta = -2n.

    Sum over k of Xi_k / ((2^k k!)^2 (n+1-2k)!) where Xi_k sandwiches the
    k-fold product of far cap-cup generators between two symmetrizers.
    Computed over the rationals; the result has integer coefficients.
    """
    if n < 1:
        raise ElementError("phi requires n >= 1")
    r = n + 1
    delta = Fraction(-2 * n)
    sig = sigma(-1, r, ring=QQ, delta=delta)
    acc = zero_morphism(r, r, ring=QQ, delta=delta)
    for k in range((n + 1) // 2 + 1):
        ek = identity_morphism(r, ring=QQ, delta=delta)
        for j in range(1, k + 1):
            ek = lin_compose(
                ek, from_diagram(dg.e_i(r, n + 2 - 2 * j), ring=QQ, delta=delta)
            )
        xi = lin_compose(lin_compose(sig, ek), sig)
        a_k = Fraction(1, (2**k * factorial(k)) ** 2 * factorial(n + 1 - 2 * k))
        acc = lin_add(acc, lin_scale(a_k, xi))
    return acc


def f_p(m, p, ring=None, delta=None):
    """Product of antisymmetrizer blocks on [1, p] and [p+1, m+1] in degree m+1."""
    if ring is None:
        ring, delta = QQ, Fraction(m)
    r = m + 1
    return lin_compose(
        antisymmetrizer_block(1, p, r, ring=ring, delta=delta),
        antisymmetrizer_block(p + 1, r, r, ring=ring, delta=delta),
    )


def e_p_rotation(m, p, ring=None, delta=None):
    """Rotate the last p strands of the degree-(m+1) antisymmetrizer, term-wise.

    With the boundary-position index i = m+1-p this realizes the bent
    antisymmetrizer E_i; coefficients stay +-1.
    """
    if not 0 <= p <= m + 1:
        raise ElementError("rotation count %d out of range" % p)
    if ring is None:
        ring, delta = QQ, Fraction(m)
    src = sigma(1, m + 1, ring=ring, delta=delta)
    terms = {}
    zero = ring.zero()
    for d, c in src.terms.items():
        rd = dg.rotate_right(d, p)
        terms[rd] = ring.add(terms.get(rd, zero), c)
    return Morphism(m + 1, m + 1, ring, delta, terms)


def e_p_formula(m, i, ring=None, delta=None):
    """The bent antisymmetrizer E_i by its rational formula.

    Alternating sum over j of F_i e_i(j) F_i weighted by
    1/((i-j)! (m+1-i-j)! (j!)^2); agrees with e_p_rotation(m, m+1-i).
    """
    if not 0 <= i <= m + 1:
        raise ElementError("index %d out of range" % i)
    if ring is None:
        ring, delta = QQ, Fraction(m)
    r = m + 1
    fi = f_p(m, i, ring=ring, delta=delta)
    acc = zero_morphism(r, r, ring=ring, delta=delta)
    for j in range(min(i, m + 1 - i) + 1):
        c = Fraction(
            (-1) ** j,
            factorial(i - j) * factorial(m + 1 - i - j) * factorial(j) ** 2,
        )
        xi = lin_compose(lin_compose(fi, e_i_j(i, j, r, ring=ring, delta=delta)), fi)
        acc = lin_add(acc, lin_scale(c, xi))
    return acc


def d_pq(n, p, q, ring=None, delta=None):
    """Bend the degree-(2n+1) symmetrizer: p bottom legs up, q of its top legs down.

    Term-wise on each permutation: the last p bottom legs wrap around the
    right to the top boundary in reversed order; of the 2n+1 top legs the
    first 2n+1-2(p-q)-q pass straight up, the next 2(p-q) close into p-q
    nested arcs, and the last q wrap around the right to the bottom
    boundary in reversed order.  The result is square of degree 2n+1-p+q.
    """
    if n < 0 or not 0 <= q <= p <= n:
        raise ElementError("need 0 <= q <= p <= n")
    if ring is None:
        ring, delta = QQ, Fraction(-2 * n)
    w = 2 * n + 1
    narcs = p - q
    straight_top = w - 2 * narcs - q
    nr = w - p + q
    src = sigma(-1, w, ring=ring, delta=delta)
    final = {}
    arc_partner = {}
    for b in range(w - p):
        final[b] = b
    for t in range(p):
        final[w - p + t] = nr + straight_top + (p - 1 - t)
    for j in range(straight_top):
        final[w + j] = nr + j
    for u in range(2 * narcs):
        arc_partner[w + straight_top + u] = w + straight_top + (2 * narcs - 1 - u)
    for s in range(q):
        final[w + (w - q) + s] = (w - p) + (q - 1 - s)
    terms = {}
    zero = ring.zero()
    for d, c in src.terms.items():
        partner = d.partner
        pairs = []
        seen = set()
        for x in final:
            if x in seen:
                continue
            seen.add(x)
            y = partner[x]
            while y in arc_partner:
                y = partner[arc_partner[y]]
            seen.add(y)
            pairs.append((final[x], final[y]))
        diag = make_diagram(nr, nr, pairs)
        terms[diag] = ring.add(terms.get(diag, zero), c)
    return Morphism(nr, nr, ring, delta, terms)


def _id_cap_id(left, right, ring, delta):
    d = tensor(tensor(identity(left), dg.cap()), identity(right))
    return from_diagram(d, ring=ring, delta=delta)


def _id_cups_id(left, count, right, ring, delta, nested=False):
    mid = dg.u_nest(count) if nested else _adjacent_cups(count)
    d = tensor(tensor(identity(left), mid), identity(right))
    return from_diagram(d, ring=ring, delta=delta)


def _adjacent_cups(count):
    d = identity(0)
    for _ in range(count):
        d = tensor(d, dg.cup())
    return d


def verify_sigma_identities(r):
    """Exact checks of the recursion, right-closure, and lowering identities
    for Sigma_eps(r), both signs, over symbolic delta."""
    if r < 1:
        raise ElementError("need r >= 1")
    checks = []
    for eps in (1, -1):
        tag = "eps=%+d, r=%d" % (eps, r)
        sig_r = sigma(eps, r)
        sig_r1 = sigma(eps, r - 1)
        if r >= 2:
            wide = lin_tensor(sig_r1, identity_morphism(1))
            mid = from_diagram(tensor(identity(r - 2), dg.crossing()))
            rhs = lin_sub(
                wide,
                lin_scale(
                    Fraction(eps, factorial(r - 2)),
                    lin_compose(lin_compose(wide, mid), wide),
                ),
            )
            checks.append(check_bool("sigma recursion, %s" % tag, sig_r == rhs))
        cap_last = from_diagram(tensor(identity(r - 1), dg.cap()))
        cup_last = from_diagram(tensor(identity(r - 1), dg.cup()))
        closed = lin_compose(
            lin_compose(cap_last, lin_tensor(sig_r, identity_morphism(1))), cup_last
        )
        coeff = Poly((Fraction(-eps * (r - 1)), Fraction(1)))
        checks.append(
            check_bool(
                "sigma right closure, %s" % tag,
                closed == lin_scale(coeff, sig_r1),
            )
        )
        lowered = Morphism(
            r + 1,
            r - 1,
            QQ_DELTA,
            None,
            {lower_diagram(d): c for d, c in sig_r.terms.items()},
        )
        acc = zero_morphism(r + 1, r - 1)
        for i in range(r):
            rest = [b for b in range(r + 1) if b not in (r - i - 1, r)]
            pairs = [(r - i - 1, r)] + [
                (b, (r + 1) + t) for t, b in enumerate(rest)
            ]
            base = make_diagram(r + 1, r - 1, pairs)
            acc = lin_add(
                acc,
                lin_scale((-eps) ** i, lin_compose(sig_r1, from_diagram(base))),
            )
        checks.append(check_bool("sigma lowering, %s" % tag, lowered == acc))
    return checks


def verify_sigma_cap(r, k):
    """Exact check of the cap identity for the degree-r symmetrizer with k
    adjacent cups under its last 2k legs, over symbolic delta."""
    if r < 2 or k < 0 or r - 2 * k < 0:
        raise ElementError("need r >= 2 and 0 <= 2k <= r")
    sig_r = sigma(-1, r)
    sig_r2 = sigma(-1, r - 2)
    cap_top = from_diagram(tensor(identity(r - 2), dg.cap()))
    cups_bottom = from_diagram(tensor(identity(r - 2 * k), _adjacent_cups(k)))
    lhs = lin_compose(cap_top, lin_compose(sig_r, cups_bottom))
    rhs = zero_morphism(r - 2 * k, r - 2)
    if k >= 1:
        cups1 = from_diagram(tensor(identity(r - 2 * k), _adjacent_cups(k - 1)))
        coeff = Poly((Fraction(4 * k * (r - k - 1)), Fraction(2 * k)))
        rhs = lin_add(rhs, lin_scale(coeff, lin_compose(sig_r2, cups1)))
    if r - 2 - 2 * k >= 0:
        sig_inner = sigma(-1, r - 2 * k)
        cap_inner = from_diagram(tensor(identity(r - 2 - 2 * k), dg.cap()))
        cups_inner = from_diagram(
            tensor(identity(r - 2 - 2 * k), _adjacent_cups(k))
        )
        tail = lin_compose(
            sig_r2, lin_compose(cups_inner, lin_compose(cap_inner, sig_inner))
        )
        rhs = lin_add(rhs, lin_scale(Fraction(1, factorial(r - 2 - 2 * k)), tail))
    checks = [check_bool("sigma cap identity, r=%d k=%d" % (r, k), lhs == rhs)]
    if k == 1 and r >= 4:
        shorthand = lin_scale(
            Fraction(1, factorial(r - 4)),
            lin_compose(
                sig_r2,
                lin_compose(from_diagram(dg.e_i(r - 2, r - 3)), sig_r2),
            ),
        )
        coeff = Poly((Fraction(4 * (r - 2)), Fraction(2)))
        checks.append(
            check_bool(
                "sigma cap k=1 shorthand, r=%d" % r,
                lhs == lin_add(lin_scale(coeff, lin_compose(sig_r2, cups1)), shorthand),
            )
        )
    return checks


def verify_afu(m, i, k):
    """Exact check of the cap-through-bent-antisymmetrizer identity in
    degree m+1 at delta = m (1 <= i <= m, 0 <= k <= min(i, m+1-i))."""
    if not 1 <= i <= m:
        raise ElementError("need 1 <= i <= m")
    if not 0 <= k <= min(i, m + 1 - i):
        raise ElementError("need 0 <= k <= min(i, m+1-i)")
    ring, delta = QQ, Fraction(m)
    fi = f_p(m, i, ring=ring, delta=delta)
    cap_left = _id_cap_id(i - 1, m - i, ring, delta)
    cups = _id_cups_id(i - k, k, m + 1 - i - k, ring, delta, nested=True)
    lhs = lin_compose(cap_left, lin_compose(fi, cups))
    blocks = lin_compose(
        antisymmetrizer_block(1, i - 1, m - 1, ring=ring, delta=delta),
        antisymmetrizer_block(i, m - 1, m - 1, ring=ring, delta=delta),
    )
    rhs = zero_morphism(m + 1 - 2 * k, m - 1, ring=ring, delta=delta)
    if k >= 1:
        cups1 = _id_cups_id(i - k, k - 1, m + 1 - i - k, ring, delta, nested=True)
        rhs = lin_add(rhs, lin_scale(k * k, lin_compose(blocks, cups1)))
    if i - k - 1 >= 0 and m - i - k >= 0:
        zeta = Fraction(1, factorial(i - k - 1) * factorial(m - i - k))
        inner = lin_compose(
            antisymmetrizer_block(1, i - k, m + 1 - 2 * k, ring=ring, delta=delta),
            antisymmetrizer_block(
                i - k + 1, m + 1 - 2 * k, m + 1 - 2 * k, ring=ring, delta=delta
            ),
        )
        cap_inner = _id_cap_id(i - k - 1, m - i - k, ring, delta)
        cups_inner = _id_cups_id(i - k - 1, k, m - i - k, ring, delta, nested=True)
        tail = lin_compose(
            blocks, lin_compose(cups_inner, lin_compose(cap_inner, inner))
        )
        rhs = lin_add(rhs, lin_scale(zeta, tail))
    return [check_bool("bent-cap identity, m=%d i=%d k=%d" % (m, i, k), lhs == rhs)]


def jones_trace_symbolic(x, eps=1):
    """eps^r times the delta-weighted sum of closure loops over the terms of x."""
    if x.k != x.l:
        raise MorphismError("trace requires square valency")
    if eps not in (1, -1):
        raise ElementError("eps must be +1 or -1")
    ring = x.ring
    acc = ring.zero()
    for d, c in x.terms.items():
        acc = ring.add(acc, ring.mul(c, delta_factor(ring, x.delta, closure_loops(d))))
    if eps == -1 and x.k % 2 == 1:
        acc = ring.neg(acc)
    return acc


def brauer_presentation_report(r, ring=QQ_DELTA, delta=None):
    """Exact checks of the full generator presentation in degree r, plus the
    derived relation e_i s_{i+1} e_i = e_i and the 180-degree anti-involution."""
    ctx = AlgebraContext(r, ring=ring, delta=delta)
    one = ctx.identity()
    checks = []

    def comp(*xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = lin_compose(acc, x)
        return acc

    for i in range(1, r):
        si, ei = ctx.s(i), ctx.e(i)
        checks.append(check_bool("s%d^2 = 1, r=%d" % (i, r), comp(si, si) == one))
        checks.append(check_bool("s%d e%d = e%d, r=%d" % (i, i, i, r), comp(si, ei) == ei))
        checks.append(check_bool("e%d s%d = e%d, r=%d" % (i, i, i, r), comp(ei, si) == ei))
        checks.append(
            check_bool(
                "e%d^2 = delta e%d, r=%d" % (i, i, r),
                comp(ei, ei) == lin_scale(delta_factor(ring, delta, 1), ei),
            )
        )
        checks.append(
            check_bool(
                "ast(s%d) = s%d, r=%d" % (i, r - i, r), lin_ast(si) == ctx.s(r - i)
            )
        )
        checks.append(
            check_bool(
                "ast(e%d) = e%d, r=%d" % (i, r - i, r), lin_ast(ei) == ctx.e(r - i)
            )
        )
    for i in range(1, r - 1):
        si, si1 = ctx.s(i), ctx.s(i + 1)
        ei, ei1 = ctx.e(i), ctx.e(i + 1)
        checks.append(
            check_bool(
                "braid s%d s%d s%d, r=%d" % (i, i + 1, i, r),
                comp(si, si1, si) == comp(si1, si, si1),
            )
        )
        checks.append(
            check_bool(
                "e%d e%d e%d = e%d, r=%d" % (i, i + 1, i, i, r),
                comp(ei, ei1, ei) == ei,
            )
        )
        checks.append(
            check_bool(
                "e%d e%d e%d = e%d, r=%d" % (i + 1, i, i + 1, i + 1, r),
                comp(ei1, ei, ei1) == ei1,
            )
        )
        checks.append(
            check_bool(
                "s%d e%d e%d = s%d e%d, r=%d" % (i, i + 1, i, i + 1, i, r),
                comp(si, ei1, ei) == comp(si1, ei),
            )
        )
        checks.append(
            check_bool(
                "e%d s%d e%d = e%d, r=%d" % (i, i + 1, i, i, r),
                comp(ei, si1, ei) == ei,
            )
        )
    for i in range(1, r):
        for j in range(i + 2, r):
            si, sj = ctx.s(i), ctx.s(j)
            ei, ej = ctx.e(i), ctx.e(j)
            checks.append(
                check_bool(
                    "s%d s%d commute, r=%d" % (i, j, r), comp(si, sj) == comp(sj, si)
                )
            )
            checks.append(
                check_bool(
                    "s%d e%d commute, r=%d" % (i, j, r), comp(si, ej) == comp(ej, si)
                )
            )
            checks.append(
                check_bool(
                    "e%d s%d commute, r=%d" % (i, j, r), comp(ei, sj) == comp(sj, ei)
                )
            )
            checks.append(
                check_bool(
                    "e%d e%d commute, r=%d" % (i, j, r), comp(ei, ej) == comp(ej, ei)
                )
            )
    return checks
