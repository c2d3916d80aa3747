"""Buchberger Groebner engine with elimination orders.

Deliberately classical: normal pair selection (minimal lcm degree, ties
broken by the active order on lcms) and the two textbook pair-pruning
criteria (coprime leading monomials; chain criterion).  Adequate for the
desk-scale inputs this package targets (few variables, small degrees).

Ideals are immutable; the reduced basis per order tag is cached
write-once, and recomputation is idempotent, so concurrent readers are
safe.
"""

from __future__ import annotations

from .errors import PreconditionError
from .mpoly import Context, MPoly
from .orders import LEX, block_order


def _lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _divides(m1, m2):
    return all(a <= b for a, b in zip(m1, m2))


def _mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def _mono_sub(m1, m2):
    return tuple(a - b for a, b in zip(m1, m2))


def reduce_poly(p, basis, order):
    """Full remainder of multivariate division of p by a list of
    polynomials: no remainder term is divisible by any basis leading
    monomial."""
    if not basis:
        return p
    ctx = p.ctx
    lead = [(b.leading_monomial(order), b.leading_coeff(order), b) for b in basis]
    rest = dict(p.terms)
    remainder = {}
    while rest:
        m = max(rest, key=order.key)
        c = rest.pop(m)
        hit = None
        for lm, lc, b in lead:
            if _divides(lm, m):
                hit = (lm, lc, b)
                break
        if hit is None:
            remainder[m] = c
            continue
        lm, lc, b = hit
        shift = _mono_sub(m, lm)
        fac = c / lc
        for bm, bc in b.terms.items():
            if bm == lm:
                continue
            mm = _mono_mul(shift, bm)
            s = rest.get(mm, 0) - fac * bc
            if s:
                rest[mm] = s
            else:
                rest.pop(mm, None)
    return MPoly(ctx, remainder)


def spoly(f, g, order):
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    L = _lcm(lf, lg)
    ctx = f.ctx
    mf = MPoly(ctx, {_mono_sub(L, lf): 1 / f.leading_coeff(order)})
    mg = MPoly(ctx, {_mono_sub(L, lg): 1 / g.leading_coeff(order)})
    return mf * f - mg * g


def buchberger(gens, order):
    """Reduced Groebner basis, canonicalized and sorted by decreasing
    leading monomial.  The unit ideal yields [1]; the zero ideal []."""
    G = [g.monic(order) for g in gens if not g.is_zero()]
    if not G:
        return []
    lm = [g.leading_monomial(order) for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_key(ij):
        L = _lcm(lm[ij[0]], lm[ij[1]])
        return (sum(L), order.key(L))

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        L = _lcm(lm[i], lm[j])
        if L == _mono_mul(lm[i], lm[j]):
            continue  # coprime leading monomials
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(lm[k], L):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 not in pairs and p2 not in pairs:
                skip = True
                break
        if skip:
            continue
        r = reduce_poly(spoly(G[i], G[j], order), G, order)
        if not r.is_zero():
            r = r.monic(order)
            new = len(G)
            G.append(r)
            lm.append(r.leading_monomial(order))
            pairs.update((t, new) for t in range(new))

    # minimalize
    keep = []
    for i in range(len(G)):
        if not any(j != i and _divides(lm[j], lm[i]) and (j in keep or j > i) for j in range(len(G))):
            keep.append(i)
    minimal = [G[i] for i in keep]
    # interreduce fully
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = reduce_poly(g, others, order)
        reduced.append(r.monic(order))
    out = [g.canonical(order) for g in reduced if not g.is_zero()]
    out.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return out


def is_groebner(basis, order):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not reduce_poly(spoly(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


class Ideal:
    """Ideal of a polynomial context, with cached reduced bases.

    The zero ideal is represented by a single zero generator.
    """

    __slots__ = ("ctx", "generators", "_bases")

    def __init__(self, ctx, generators):
        generators = list(generators)
        if not generators:
            raise ValueError("generators must be nonempty; use [ctx.zero()] for the zero ideal")
        for g in generators:
            if g.ctx.names != ctx.names:
                raise PreconditionError("generator context mismatch")
        self.ctx = ctx
        self.generators = tuple(generators)
        self._bases = {}

    def groebner(self, order=None):
        order = order or self.ctx.order
        tag = order.tag
        if tag not in self._bases:
            self._bases[tag] = tuple(buchberger(list(self.generators), order))
        return list(self._bases[tag])

    def normal_form(self, p, order=None):
        order = order or self.ctx.order
        return reduce_poly(p, self.groebner(order), order)

    def contains(self, p, order=None):
        return self.normal_form(p, order).is_zero()

    def is_zero_ideal(self):
        return not self.groebner()

    def is_unit(self):
        basis = self.groebner()
        return len(basis) == 1 and basis[0].constant_value() is not None

    def equals(self, other):
        if self.ctx.names != other.ctx.names:
            return False
        return all(self.contains(g) for g in other.generators) and all(
            other.contains(g) for g in self.generators
        )

    def canonical_generators(self):
        basis = self.groebner()
        return basis if basis else [self.ctx.zero()]

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def groebner(I, order=None):
    """Reduced Groebner basis of an ideal under the given order."""
    return I.groebner(order)


def normal_form(p, I, order=None):
    """Remainder of p on division by the reduced basis; zero iff p is in
    the ideal."""
    return I.normal_form(p, order)


def eliminate(I, keep):
    """Generators of the elimination ideal in the kept variables.

    Computes a two-block basis and restricts it to the members free of
    the eliminated variables.  The result lives in a fresh context on the
    kept names (in their original relative order) under lex, which is
    the order elimination results are printed and compared in.
    """
    keep = set(keep)
    names = I.ctx.names
    unknown = keep - set(names)
    if unknown:
        raise PreconditionError(f"cannot keep unknown variables {sorted(unknown)}")
    elim = [n for n in names if n not in keep]
    kept_names = tuple(n for n in names if n in keep)
    sub = Context(kept_names, LEX)
    if not elim:
        members = I.groebner()
    else:
        order = block_order(names, elim)
        basis = I.groebner(order)
        members = [g for g in basis if g.support_vars() <= keep]
    polys = [g.rebase(sub) for g in members]
    if not polys:
        return Ideal(sub, [sub.zero()])
    out = Ideal(sub, buchberger(polys, LEX) or [sub.zero()])
    return out


def vanishes_on(p, I):
    """True iff p vanishes on the complex zero set of I (radical
    membership via the Rabinowitsch trick)."""
    if p.ctx.names != I.ctx.names:
        raise PreconditionError("context mismatch in vanishes_on")
    if p.is_zero():
        return True
    fresh = "z_"
    while fresh in I.ctx.names:
        fresh += "_"
    big = Context(I.ctx.names + (fresh,))
    gens = [g.rebase(big) for g in I.generators]
    gens.append(big.one() - big.var(fresh) * p.rebase(big))
    basis = buchberger(gens, big.order)
    return len(basis) == 1 and basis[0].constant_value() is not None


def dimension(I):
    """Krull dimension of the zero set, by the independent-set count on
    the leading monomials of a Groebner basis; -1 for the unit ideal."""
    basis = I.groebner()
    if not basis:
        return I.ctx.arity
    order = I.ctx.order
    if len(basis) == 1 and basis[0].constant_value() is not None:
        return -1
    lms = [g.leading_monomial(order) for g in basis]
    n = I.ctx.arity
    from itertools import combinations

    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(any(e and i not in s for i, e in enumerate(lm)) for lm in lms):
                return size
    return 0
