"""Monomial orders: graded reverse lexicographic, lexicographic, and
two-block elimination orders.

An order exposes ``key(exponents)``: a sortable value that is larger for
larger monomials.  ``tag`` is a stable string used for basis caching.
"""

from dataclasses import dataclass


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MonomialOrder:
    tag = "abstract"

    def key(self, exps):
        raise NotImplementedError

    def compare(self, a, b):
        """-1, 0, or 1 as monomial a is below, equal to, or above b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return f"<order {self.tag}>"


@dataclass(frozen=True, repr=False)
class GrevLex(MonomialOrder):
    tag = "grevlex"

    def key(self, exps):
        return _grevlex_key(exps)


@dataclass(frozen=True, repr=False)
class Lex(MonomialOrder):
    tag = "lex"

    def key(self, exps):
        return tuple(exps)


@dataclass(frozen=True, repr=False)
class BlockElim(MonomialOrder):
    """Eliminate the masked variables: compare their exponents grevlex
    first, then the remaining block grevlex.  Any monomial containing an
    eliminated variable dominates every monomial free of them, which is
    what makes basis restriction compute elimination ideals.
    """

    mask: tuple  # True at eliminated variable positions

    @property
    def tag(self):
        elim = ",".join(str(i) for i, b in enumerate(self.mask) if b)
        return f"block[{elim}]"

    def key(self, exps):
        first = tuple(e for e, b in zip(exps, self.mask) if b)
        second = tuple(e for e, b in zip(exps, self.mask) if not b)
        return (_grevlex_key(first), _grevlex_key(second))


GREVLEX = GrevLex()
LEX = Lex()


def block_order(ctx_names, eliminate):
    """Two-block order eliminating the named variables of a context."""
    elim = set(eliminate)
    unknown = elim - set(ctx_names)
    if unknown:
        raise ValueError(f"unknown variables in block order: {sorted(unknown)}")
    return BlockElim(tuple(n in elim for n in ctx_names))
