"""Named verification suites over the whole library, at desk scale.

Each suite returns a list of :class:`~brauer.report.Check` records; every
comparison is exact (zero tolerance).  The suites mirror the acceptance
criteria: generator-relation soundness, word round-trips, the algebra
presentation, the antisymmetrizer identity family, the matrix relations of
the generating pictures with functor consistency and traces, the
quasi-idempotent suites, the kernel theorems with fullness, and the
positive-characteristic reruns.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from .diagram import enumerate_diagrams, identity as identity_diagram
from .elements import (brauer_presentation_report, e_p_formula, e_p_rotation,
                       f_p, phi, sigma, verify_afu, verify_sigma_cap,
                       verify_sigma_identities)
from .functor import (functor_matrix, functor_matrix_layered, group_spec,
                      trace_check, verify_pau)
from .invariants import (commutant_dimension, hom_rank, ideal_span_dimension,
                         kernel_dimension, tensor_ideal_span_dimension)
from .linear import (from_diagram, identity_morphism, integrality_check,
                     lin_ast, lin_compose, lin_scale, lin_sub, lin_tensor,
                     make_morphism, reduce_mod_p)
from .report import Check, check, check_bool
from .rewrite import verify_relation_soundness
from .rings import QQ
from .words import evaluate_word, synthesize_word

SUITE_NAMES = ("relations", "presentation", "sigma", "pau", "phi", "ep",
               "kernel", "charp", "all")

_DESK_GROUPS = (("o", 2), ("o", 3), ("sp", 2), ("sp", 4))
_SMALL_GROUPS = (("o", 2), ("o", 3), ("sp", 2))


def _restrict(groups, family=None, m=None):
    out = []
    for fam, dim in groups:
        if family is not None and fam != {"orthogonal": "o", "symplectic": "sp"}.get(
                str(family).lower(), str(family).lower()):
            continue
        if m is not None and dim != int(m):
            continue
        out.append((fam, dim))
    return out


def suite_relations(**_):
    """Generator-relation soundness: both sides of every rewrite rule
    evaluate to the same scaled diagram at several paddings."""
    return verify_relation_soundness()


def suite_word_roundtrip(max_nodes=8, **_):
    """Synthesize a layered word for every diagram with k + l <= max_nodes
    and evaluate it back; the result must be loop-free and equal."""
    checks = []
    for total in range(0, max_nodes + 1, 2):
        for k in range(total + 1):
            l = total - k
            ok = True
            bad = ""
            for d in enumerate_diagrams(k, l):
                loops, back = evaluate_word(synthesize_word(d))
                if loops != 0 or back != d:
                    ok = False
                    bad = repr(d)
                    break
            checks.append(check_bool(
                "word round-trip (%d, %d): %d diagrams"
                % (k, l, len(enumerate_diagrams(k, l))), ok, bad))
    return checks


def suite_presentation(max_r=5, **_):
    """Defining relations of the diagram algebra over symbolic delta."""
    checks = []
    for r in range(2, max_r + 1):
        checks.extend(brauer_presentation_report(r))
    return checks


def suite_sigma(max_r=6, cap_max_k=2, afu_max_m=4, **_):
    """Antisymmetrizer identities: recursion/closure/lowering for both
    signs, the cap identity with symbolic delta, and the bent-cap identity
    at the symplectic loop value."""
    checks = []
    for r in range(1, max_r + 1):
        checks.extend(verify_sigma_identities(r))
    for r in range(2, max_r + 1):
        for k in range(0, cap_max_k + 1):
            if 2 * k <= r:
                checks.extend(verify_sigma_cap(r, k))
    for m in range(1, afu_max_m + 1):
        for i in range(1, m + 1):
            for k in range(0, min(i, m + 1 - i) + 1):
                checks.extend(verify_afu(m, i, k))
    return checks


def _random_morphism(rng, k, l, ring, delta):
    terms = {}
    pool = enumerate_diagrams(k, l)
    for d in rng.sample(pool, min(3, len(pool))):
        c = rng.randint(-3, 3)
        if c:
            terms[d] = ring.from_int(c)
    return make_morphism(k, l, terms, ring=ring, delta=delta)


def suite_pau(family=None, m=None, pairs=200, seed=20260818, **_):
    """Matrix relations of the generating pictures, agreement of the two
    functor evaluators, multiplicativity on random morphism pairs, and the
    closure-trace rule."""
    checks = []
    for fam, dim in _restrict(_DESK_GROUPS, family, m):
        checks.extend(verify_pau(group_spec(fam, dim)))

    for fam, dim in _restrict(_SMALL_GROUPS, family, m):
        spec = group_spec(fam, dim)
        ok = True
        bad = ""
        count = 0
        for total in range(0, 7):
            for k in range(total + 1):
                l = total - k
                if (k + l) % 2:
                    continue
                for d in enumerate_diagrams(k, l):
                    count += 1
                    if functor_matrix(d, spec) != functor_matrix_layered(d, spec):
                        ok = False
                        bad = repr(d)
        checks.append(check_bool(
            "%s: direct and layered evaluation agree on %d diagrams"
            % (spec.label(), count), ok, bad))

    specs = [group_spec(fam, dim) for fam, dim in _restrict(_SMALL_GROUPS, family, m)]
    if specs:
        rng = random.Random(seed)
        ok_compose = ok_tensor = True
        for t in range(pairs):
            spec = specs[t % len(specs)]
            ring, delta = spec.ring, spec.delta_value()
            k, s, l = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)
            if (k + s) % 2 == 0 and (s + l) % 2 == 0 and \
                    enumerate_diagrams(k, s) and enumerate_diagrams(s, l):
                x = _random_morphism(rng, s, l, ring, delta)
                y = _random_morphism(rng, k, s, ring, delta)
                lhs = functor_matrix(lin_compose(x, y), spec)
                rhs = functor_matrix(x, spec).mul(functor_matrix(y, spec))
                if lhs != rhs:
                    ok_compose = False
            k1, l1 = rng.randint(0, 2), rng.randint(0, 2)
            k2, l2 = rng.randint(0, 2), rng.randint(0, 2)
            if (k1 + l1) % 2 == 0 and (k2 + l2) % 2 == 0 and \
                    enumerate_diagrams(k1, l1) and enumerate_diagrams(k2, l2):
                x = _random_morphism(rng, k1, l1, spec.ring, spec.delta_value())
                y = _random_morphism(rng, k2, l2, spec.ring, spec.delta_value())
                lhs = functor_matrix(lin_tensor(x, y), spec)
                rhs = functor_matrix(x, spec).tensor(functor_matrix(y, spec))
                if lhs != rhs:
                    ok_tensor = False
        checks.append(check_bool(
            "functor respects composition on %d random pairs" % pairs, ok_compose))
        checks.append(check_bool(
            "functor respects juxtaposition on %d random pairs" % pairs, ok_tensor))

    for fam, dim in _restrict(_SMALL_GROUPS, family, m):
        spec = group_spec(fam, dim)
        ok = True
        bad = ""
        count = 0
        for r in range(1, 5):
            for d in enumerate_diagrams(r, r):
                count += 1
                if not trace_check(d, spec):
                    ok = False
                    bad = repr(d)
        checks.append(check_bool(
            "%s: closure-trace rule on %d square diagrams" % (spec.label(), count),
            ok, bad))
    return checks


def suite_phi(**_):
    """Symplectic quasi-idempotent: integrality, scaled idempotency,
    annihilation by every cap generator, flip and permutation invariance,
    functor vanishing, and the alternating binomial consequence."""
    checks = []
    for n in (1, 2, 3):
        ph = phi(n)
        tag = "phi(%d)" % n
        checks.append(check_bool("%s has integer coefficients" % tag,
                                 integrality_check(ph)))
        lhs = lin_compose(ph, ph)
        rhs = lin_scale(Fraction(factorial(n + 1)), ph)
        checks.append(check_bool("%s squares to (n+1)! times itself" % tag,
                                 lhs == rhs))
        ring, delta = ph.ring, ph.delta
        ok = True
        for i in range(1, n + 1):
            from .elements import AlgebraContext
            ctx = AlgebraContext(r=n + 1, ring=ring, delta=delta)
            ei = ctx.e(i)
            if not (lin_compose(ei, ph).is_zero() and lin_compose(ph, ei).is_zero()):
                ok = False
        checks.append(check_bool("%s is annihilated by every cap generator" % tag, ok))
        checks.append(check_bool("%s is fixed by the rotation flip" % tag,
                                 lin_ast(ph) == ph))
        from itertools import permutations
        from .elements import from_permutation
        ok = True
        for pi in permutations(range(n + 1)):
            pm = from_permutation(pi, ring=ring, delta=delta)
            if lin_compose(pm, ph) != ph or lin_compose(ph, pm) != ph:
                ok = False
                break
        checks.append(check_bool(
            "%s absorbs all %d permutations" % (tag, factorial(n + 1)), ok))
    for n in (1, 2):
        spec = group_spec("sp", 2 * n)
        checks.append(check_bool(
            "functor kills phi(%d) under %s" % (n, spec.label()),
            functor_matrix(phi(n), spec).is_zero()))
    ok = True
    for n in range(1, 9):
        total = sum((-1) ** k * comb(n, k) * comb(2 * n - 2 * k, n - 1)
                    for k in range(0, n + 1))
        if total != 0:
            ok = False
    checks.append(check_bool(
        "alternating binomial sum vanishes for n = 1..8", ok))
    return checks


def suite_ep(include_optional=False, family=None, m=None, **_):
    """Orthogonal kernel generators: the rotation construction matches the
    closed formula, scaled absorption by the block antisymmetrizers,
    annihilation by cap generators, flip and crossing-conjugation symmetry,
    the p = 0 degenerate case, and functor vanishing."""
    checks = []
    sizes = [2, 3] + ([4, 5] if include_optional else [])
    if m is not None:
        sizes = [d for d in sizes if d == int(m)]
    if family is not None and _restrict([("o", 2)], family, None) == []:
        return checks
    for dim in sizes:
        ring = QQ
        delta = Fraction(dim)
        rot = {p: e_p_rotation(dim, p, ring=ring, delta=delta)
               for p in range(0, dim + 2)}
        ok = all(e_p_formula(dim, i, ring=ring, delta=delta) == rot[dim + 1 - i]
                 for i in range(0, dim + 2))
        checks.append(check_bool(
            "m=%d: rotation construction matches the closed formula" % dim, ok))

        ok = True
        for p in range(0, dim + 2):
            ep = rot[dim + 1 - p]
            fp = f_p(dim, p, ring=ring, delta=delta)
            scale = Fraction(factorial(p) * factorial(dim + 1 - p))
            if lin_compose(fp, ep) != lin_scale(scale, ep):
                ok = False
            if lin_compose(ep, fp) != lin_scale(scale, ep):
                ok = False
        checks.append(check_bool(
            "m=%d: block antisymmetrizers absorb with factor p!(m+1-p)!" % dim, ok))

        from .elements import AlgebraContext
        ctx = AlgebraContext(r=dim + 1, ring=ring, delta=delta)
        ok = True
        for p in range(0, dim + 2):
            ep = rot[dim + 1 - p]
            for i in range(1, dim + 1):
                ei = ctx.e(i)
                if not (lin_compose(ei, ep).is_zero()
                        and lin_compose(ep, ei).is_zero()):
                    ok = False
        checks.append(check_bool(
            "m=%d: cap generators annihilate every bent antisymmetrizer" % dim, ok))

        ok = all(lin_ast(rot[dim + 1 - p]) == rot[p] for p in range(0, dim + 2))
        checks.append(check_bool(
            "m=%d: rotation flip swaps the index to m+1-p" % dim, ok))

        from .diagram import x_block
        ok = True
        for i in range(0, dim + 2):
            j = dim + 1 - i
            left = from_diagram(x_block(i, j), ring=ring, delta=delta)
            right = from_diagram(x_block(j, i), ring=ring, delta=delta)
            conj = lin_compose(lin_compose(left, rot[dim + 1 - i]), right)
            if conj != rot[dim + 1 - j]:
                ok = False
        checks.append(check_bool(
            "m=%d: crossing conjugation swaps the index" % dim, ok))

        checks.append(check_bool(
            "m=%d: the unbent case is the signed symmetry sum" % dim,
            rot[dim + 1] == sigma(1, dim + 1, ring=ring, delta=delta)))

    for dim in [d for d in sizes if d in (2, 3)]:
        spec = group_spec("o", dim)
        ok = all(functor_matrix(e_p_rotation(dim, p, ring=spec.ring,
                                             delta=spec.delta_value()), spec).is_zero()
                 for p in range(0, dim + 2))
        checks.append(check_bool(
            "functor kills every bent antisymmetrizer under O(%d)" % dim, ok))
    return checks


def _double_factorial(r):
    out = 1
    for t in range(2 * r - 1, 0, -2):
        out *= t
    return out


def suite_kernel(jobs=1, family=None, m=None, **_):
    """Kernel theorems and fullness: kernel dimensions agree with the
    two-sided ideal spans of the quasi-idempotents, ranks hit the full
    diagram count in the injective range, tensor-ideal slices match
    kernels, and ranks equal commutant dimensions."""
    checks = []
    fams = _restrict(_DESK_GROUPS, family, m)

    if ("sp", 2) in fams:
        sp2 = group_spec("sp", 2)
        ph1 = phi(1)
        for r in (2, 3, 4):
            kd = kernel_dimension(r, r, sp2, jobs=jobs)
            idim = ideal_span_dimension(r, ph1, sp2)
            checks.append(check("Sp(2) r=%d: kernel vs quasi-idempotent ideal" % r,
                                kd, idim))
        checks.append(check("Sp(2): kernel dimension at (2, 2)",
                            1, kernel_dimension(2, 2, sp2, jobs=jobs)))
        checks.append(check("Sp(2): rank at (1, 1) is 1!! (injective range)",
                            _double_factorial(1), hom_rank(1, 1, sp2, jobs=jobs)))
        checks.append(check(
            "Sp(2): kernel at (3, 3) complements the rank in 15 diagrams",
            15 - hom_rank(3, 3, sp2, jobs=jobs),
            kernel_dimension(3, 3, sp2, jobs=jobs)))

    if ("sp", 4) in fams:
        sp4 = group_spec("sp", 4)
        for r in (1, 2):
            checks.append(check(
                "Sp(4) r=%d: rank is (2r-1)!! (injective range)" % r,
                _double_factorial(r), hom_rank(r, r, sp4, jobs=jobs)))
        # At r = n + 1 = 3 the functor first fails to be injective: the
        # kernel is one-dimensional, spanned by the quasi-idempotent ideal.
        kd = kernel_dimension(3, 3, sp4, jobs=jobs)
        checks.append(check("Sp(4): kernel dimension at (3, 3)", 1, kd))
        checks.append(check("Sp(4) r=3: kernel vs quasi-idempotent ideal",
                            kd, ideal_span_dimension(3, phi(2), sp4)))

    if ("o", 2) in fams:
        o2 = group_spec("o", 2)
        e1 = e_p_rotation(2, 1, ring=o2.ring, delta=o2.delta_value())
        for r in (3, 4):
            kd = kernel_dimension(r, r, o2, jobs=jobs)
            idim = ideal_span_dimension(r, e1, o2)
            checks.append(check("O(2) r=%d: kernel vs bent-antisymmetrizer ideal" % r,
                                kd, idim))
        checks.append(check("O(2): kernel dimension at (2, 2) (injective range)",
                            0, kernel_dimension(2, 2, o2, jobs=jobs)))

    if ("o", 3) in fams:
        o3 = group_spec("o", 3)
        checks.append(check("O(3): kernel dimension at (3, 3) (injective range)",
                            0, kernel_dimension(3, 3, o3, jobs=jobs)))
        e2 = e_p_rotation(3, 2, ring=o3.ring, delta=o3.delta_value())
        kd = kernel_dimension(4, 4, o3, jobs=jobs)
        checks.append(check("O(3) r=4: kernel vs bent-antisymmetrizer ideal",
                            kd, ideal_span_dimension(4, e2, o3)))

    for fam, dim in [g for g in (("sp", 2), ("o", 2)) if g in fams]:
        spec = group_spec(fam, dim)
        for (kk, ll) in ((4, 0), (3, 1), (2, 2)):
            tid = tensor_ideal_span_dimension(kk, ll, spec)
            kd = kernel_dimension(kk, ll, spec, jobs=jobs)
            checks.append(check(
                "%s slice (%d, %d): tensor ideal vs kernel" % (spec.label(), kk, ll),
                kd, tid))
            if kk + ll <= 2 * (dim if fam == "o" else dim // 2):
                checks.append(check(
                    "%s slice (%d, %d): empty in the injective range"
                    % (spec.label(), kk, ll), 0, tid))

    for fam, dim in _restrict(_SMALL_GROUPS, family, m):
        spec = group_spec(fam, dim)
        for r in (1, 2, 3):
            checks.append(check(
                "%s r=%d: rank equals commutant dimension (fullness)"
                % (spec.label(), r),
                commutant_dimension(r, spec), hom_rank(r, r, spec, jobs=jobs)))
    return checks


def suite_charp(jobs=1, **_):
    """Positive characteristic reruns: the quasi-idempotents still vanish
    under the functor and every kernel, ideal, and slice dimension matches
    its characteristic-zero value."""
    checks = []

    sp2 = group_spec("sp", 2)
    sp2p = group_spec("sp", 2, modulus=5)
    ph1 = phi(1)
    ph1p = reduce_mod_p(ph1, 5)
    checks.append(check_bool("Sp(2)/F_5: functor kills the quasi-idempotent",
                             functor_matrix(ph1p, sp2p).is_zero()))
    for r in (2, 3, 4):
        kd0 = kernel_dimension(r, r, sp2, jobs=jobs)
        kdp = kernel_dimension(r, r, sp2p, jobs=jobs)
        checks.append(check("Sp(2)/F_5 r=%d: kernel matches characteristic 0" % r,
                            kd0, kdp))
        checks.append(check("Sp(2)/F_5 r=%d: kernel vs quasi-idempotent ideal" % r,
                            kdp, ideal_span_dimension(r, ph1p, sp2p)))
    for (kk, ll) in ((4, 0), (3, 1), (2, 2)):
        tid = tensor_ideal_span_dimension(kk, ll, sp2p)
        checks.append(check(
            "Sp(2)/F_5 slice (%d, %d): matches characteristic 0" % (kk, ll),
            tensor_ideal_span_dimension(kk, ll, sp2), tid))

    o3 = group_spec("o", 3)
    o3p = group_spec("o", 3, modulus=7)
    ok = True
    for p in range(0, 5):
        ep = reduce_mod_p(e_p_rotation(3, p), 7)
        if not functor_matrix(ep, o3p).is_zero():
            ok = False
    checks.append(check_bool("O(3)/F_7: functor kills every bent antisymmetrizer",
                             ok))
    checks.append(check("O(3)/F_7: kernel at (3, 3) matches characteristic 0",
                        kernel_dimension(3, 3, o3, jobs=jobs),
                        kernel_dimension(3, 3, o3p, jobs=jobs)))
    kd0 = kernel_dimension(4, 4, o3, jobs=jobs)
    kdp = kernel_dimension(4, 4, o3p, jobs=jobs)
    checks.append(check("O(3)/F_7: kernel at (4, 4) matches characteristic 0",
                        kd0, kdp))
    e2p = reduce_mod_p(e_p_rotation(3, 2), 7)
    checks.append(check("O(3)/F_7 r=4: kernel vs bent-antisymmetrizer ideal",
                        kdp, ideal_span_dimension(4, e2p, o3p)))
    return checks


_SUITE_FUNCS = {
    "relations": (suite_relations,),
    "presentation": (suite_word_roundtrip, suite_presentation),
    "sigma": (suite_sigma,),
    "pau": (suite_pau,),
    "phi": (suite_phi,),
    "ep": (suite_ep,),
    "kernel": (suite_kernel,),
    "charp": (suite_charp,),
}


def run_suite(name, **options):
    """Run one named suite (or 'all') and return its checks."""
    if name == "all":
        checks = []
        for key in ("relations", "presentation", "sigma", "pau", "phi", "ep",
                    "kernel", "charp"):
            checks.extend(run_suite(key, **options))
        return checks
    funcs = _SUITE_FUNCS.get(name)
    if funcs is None:
        raise ValueError("unknown suite %r; choose from %s"
                         % (name, ", ".join(SUITE_NAMES)))
    checks = []
    for func in funcs:
        checks.extend(func(**options))
    return checks
