"""Exact multivariate polynomials over arbitrary-precision rationals.

This is the carrier type for everything symbolic in the package: map
components, ideal generators, ansatz coefficient equations.  A polynomial
is a finite map from exponent vectors to nonzero ``Fraction`` values,
attached to a ``Context`` (an ordered tuple of variable names plus the
active monomial order).  Values are immutable after construction and all
operations are pure, so concurrent reads are always safe.

Canonical form: an integer-primitive scalar multiple with positive leading
coefficient under the active order.  Golden-value tests compare canonical
forms bit-exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .orders import GREVLEX, MonomialOrder

Scalar = Fraction


@dataclass(frozen=True)
class Context:
    """Ordered variable names plus the context's default monomial order."""

    names: tuple
    order: MonomialOrder = field(default=GREVLEX)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")
        if not all(isinstance(n, str) and n for n in self.names):
            raise ValueError("variable names must be nonempty strings")

    @property
    def arity(self):
        return len(self.names)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in context {self.names}") from None

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return MPoly(self, {(0,) * self.arity: c})

    def var(self, name):
        e = [0] * self.arity
        e[self.index(name)] = 1
        return MPoly(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def with_order(self, order):
        return Context(self.names, order)


class MPoly:
    """Immutable sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        clean = {}
        n = ctx.arity
        for mono, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for arity {n}")
            clean[tuple(mono)] = c
        self.terms = clean

    # -- basics ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ctx.names != self.ctx.names:
                raise PreconditionError(
                    f"context mismatch: {self.ctx.names} vs {other.ctx.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ctx.names == other.ctx.names and self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.ctx.names, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- structure -------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        i = self.ctx.index(name)
        if not self.terms:
            return 0
        return max(m[i] for m in self.terms)

    def degrees(self):
        """(max total degree, per-variable max exponents)."""
        per = tuple(self.degree_in(n) for n in self.ctx.names)
        return self.total_degree(), per

    def support_vars(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ctx.names[i])
        return used

    def sorted_terms(self, order=None):
        order = order or self.ctx.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order=None):
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading monomial")
        order = order or self.ctx.order
        return max(self.terms, key=order.key)

    def leading_coeff(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def constant_value(self):
        """The Fraction value if constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if not any(m):
                return c
        return None

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, point):
        """Exact value at a rational point (length = context arity)."""
        point = [Fraction(x) for x in point]
        if len(point) != self.ctx.arity:
            raise PreconditionError(
                f"arity mismatch: point of length {len(point)} for {self.ctx.arity} variables"
            )
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def subs(self, target_ctx, images):
        """Substitute polynomials for variables.

        ``images`` maps variable names of this context to MPoly values in
        ``target_ctx``.  Every variable actually used must have an image.
        """
        out = target_ctx.zero()
        cache = {}
        for m, c in self.terms.items():
            term = target_ctx.const(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                name = self.ctx.names[i]
                if name not in images:
                    raise PreconditionError(f"no substitution image for {name!r}")
                key = (name, e)
                if key not in cache:
                    cache[key] = images[name] ** e
                term = term * cache[key]
            out = out + term
        return out

    def coeffs_in(self, name):
        """Coefficients of powers of one variable, as MPoly in the same
        context (index = power of the variable)."""
        i = self.ctx.index(name)
        d = self.degree_in(name)
        buckets = [dict() for _ in range(d + 1)]
        for m, c in self.terms.items():
            e = m[i]
            rest = list(m)
            rest[i] = 0
            buckets[e][tuple(rest)] = c
        return [MPoly(self.ctx, b) for b in buckets]

    @staticmethod
    def from_coeffs_in(ctx, name, coeffs):
        i = ctx.index(name)
        out = {}
        for e, p in enumerate(coeffs):
            for m, c in p.terms.items():
                if m[i] != 0:
                    raise ValueError("coefficient polynomial involves the variable itself")
                mm = list(m)
                mm[i] = e
                out[tuple(mm)] = out.get(tuple(mm), 0) + c
        return MPoly(ctx, out)

    def derivative(self, name):
        i = self.ctx.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            mm = list(m)
            mm[i] -= 1
            out[tuple(mm)] = c * m[i]
        return MPoly(self.ctx, out)

    # -- context moves -----------------------------------------------------

    def rebase(self, new_ctx):
        """Re-express in another context by variable name.

        Dropped variables must be unused; new variables are allowed.
        """
        pos = {n: i for i, n in enumerate(new_ctx.names)}
        out = {}
        for m, c in self.terms.items():
            mm = [0] * new_ctx.arity
            for i, e in enumerate(m):
                if not e:
                    continue
                name = self.ctx.names[i]
                if name not in pos:
                    raise PreconditionError(
                        f"variable {name!r} is used but absent from target context"
                    )
                mm[pos[name]] = e
            out[tuple(mm)] = c
        return MPoly(new_ctx, out)

    # -- canonical form ----------------------------------------------------

    def primitive_scale(self):
        """Positive rational s such that s*self has coprime integer
        coefficients.  Zero polynomial maps to scale 1."""
        if not self.terms:
            return Fraction(1)
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator * (den // c.denominator)))
        return Fraction(den, num)

    def canonical(self, order=None):
        """Integer-primitive multiple with positive leading coefficient."""
        if not self.terms:
            return self
        s = self.primitive_scale()
        if self.leading_coeff(order) < 0:
            s = -s
        return MPoly(self.ctx, {m: c * s for m, c in self.terms.items()})

    def monic(self, order=None):
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        return MPoly(self.ctx, {m: c / lc for m, c in self.terms.items()})

    # -- printing ----------------------------------------------------------

    def to_str(self, order=None):
        """Canonical text: terms in descending active order, explicit `*`
        and `^`, rationals as p/q.  Round-trips through parse_poly."""
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            factors = []
            for name, e in zip(self.ctx.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MPoly({self.to_str()!r})"


# -- exact division and gcd --------------------------------------------------


def exact_div(p, q):
    """Exact quotient p/q in the polynomial ring; raises if q does not
    divide p."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ctx = p.ctx
    order = ctx.order
    qlm = q.leading_monomial(order)
    qlc = q.leading_coeff(order)
    quot = {}
    rest = dict(p.terms)
    while rest:
        m = max(rest, key=order.key)
        c = rest[m]
        diff = tuple(a - b for a, b in zip(m, qlm))
        if any(e < 0 for e in diff):
            raise PreconditionError("not an exact polynomial division")
        fac = c / qlc
        quot[diff] = quot.get(diff, 0) + fac
        for qm, qc in q.terms.items():
            mm = tuple(a + b for a, b in zip(diff, qm))
            s = rest.get(mm, 0) - fac * qc
            if s:
                rest[mm] = s
            else:
                rest.pop(mm, None)
    return MPoly(ctx, quot)


def _upoly_view(p, name):
    return p.coeffs_in(name)


def _upoly_build(ctx, name, coeffs):
    return MPoly.from_coeffs_in(ctx, name, coeffs)


def _content_in(p, name):
    """gcd of the coefficients of p viewed as univariate in ``name``."""
    coeffs = [c for c in p.coeffs_in(name) if not c.is_zero()]
    g = coeffs[0].ctx.zero()
    for c in coeffs:
        g = mpoly_gcd(g, c)
    return g


def _pseudo_rem(a, b, name):
    """Pseudo-remainder of a by b with respect to one variable."""
    ctx = a.ctx
    ca = a.coeffs_in(name)
    cb = b.coeffs_in(name)
    da, db = len(ca) - 1, len(cb) - 1
    lb = cb[-1]
    r = list(ca)
    for _ in range(da - db + 1):
        dr = len(r) - 1
        while r and r[-1].is_zero():
            r.pop()
            dr -= 1
        if dr < db:
            break
        lr = r[-1]
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[dr - db + j] = r[dr - db + j] - lr * cb[j]
        r.pop()
    while r and r[-1].is_zero():
        r.pop()
    if not r:
        return ctx.zero()
    return _upoly_build(ctx, name, r)


def mpoly_gcd(p, q):
    """Canonical gcd via the primitive pseudo-remainder sequence.

    The result is integer-primitive with positive leading coefficient. The
    gcd of two nonzero constants is 1 (constants are units over Q).
    """
    if p.is_zero():
        return q.canonical()
    if q.is_zero():
        return p.canonical()
    ctx = p.ctx
    used = p.support_vars() | q.support_vars()
    if not used:
        return ctx.one()
    name = next(n for n in reversed(ctx.names) if n in used)
    dp, dq = p.degree_in(name), q.degree_in(name)
    # a common divisor cannot involve a variable absent from one side
    if dp == 0:
        return mpoly_gcd(p, _content_in(q, name))
    if dq == 0:
        return mpoly_gcd(_content_in(p, name), q)
    cp, cq = _content_in(p, name), _content_in(q, name)
    c = mpoly_gcd(cp, cq)
    a = exact_div(p, cp)
    b = exact_div(q, cq)
    if a.degree_in(name) < b.degree_in(name):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b, name)
        if r.is_zero():
            g = exact_div(b, _content_in(b, name))
            return (c * g).canonical()
        if r.degree_in(name) == 0:
            return c.canonical()
        a, b = b, exact_div(r, _content_in(r, name))


def squarefree_part(p, name):
    """p / gcd(p, dp/dname), integer-primitive, positive leading
    coefficient under the context order."""
    if p.is_zero():
        raise PreconditionError("squarefree part of the zero polynomial")
    g = mpoly_gcd(p, p.derivative(name))
    return exact_div(p, g).canonical()


def squarefree_full(p):
    """Product of the distinct irreducible factors of p (char 0), via
    gcd with all partial derivatives."""
    if p.is_zero():
        raise PreconditionError("squarefree part of the zero polynomial")
    g = p.ctx.zero()
    for n in sorted(p.support_vars()):
        g = mpoly_gcd(g, p.derivative(n))
    if g.is_zero():  # constant polynomial
        return p.ctx.one()
    g = mpoly_gcd(p, g)
    return exact_div(p, g).canonical()


# -- Sylvester resultants ------------------------------------------------------


def sylvester_matrix(p, q, name):
    """Sylvester matrix of p and q in one variable, q-block rows on top.

    Row ordering fixes the sign of the determinant; ``resultant`` returns
    the raw determinant of exactly this matrix.
    """
    n = p.degree_in(name)
    m = q.degree_in(name)
    if n == 0 or m == 0:
        raise PreconditionError("resultant requires positive degree in the variable")
    ctx = p.ctx
    pc = p.coeffs_in(name)
    qc = q.coeffs_in(name)
    size = n + m
    zero = ctx.zero()
    rows = []
    for r in range(n):  # q-block: x^(n-1-r) * q
        row = [zero] * size
        for j in range(m + 1):
            row[m + r - j] = qc[j]
        rows.append(row)
    for r in range(m):  # p-block: x^(m-1-r) * p
        row = [zero] * size
        for j in range(n + 1):
            row[n + r - j] = pc[j]
        rows.append(row)
    return rows


def det_mpoly(rows):
    """Fraction-free Bareiss determinant of a square MPoly matrix."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ctx = rows[0][0].ctx
    M = [list(r) for r in rows]
    sign = 1
    prev = ctx.one()
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return ctx.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
            M[i][k] = ctx.zero()
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def resultant(p, q, name):
    """Raw Sylvester determinant of p and q with respect to one variable.

    Vanishes at a parameter point iff p and q share a root there (or both
    leading coefficients vanish).  No canonicalization is applied, so the
    sign is pinned by the matrix layout.
    """
    return det_mpoly(sylvester_matrix(p, q, name))


def resultant_cofactors(p, q, name):
    """(res, u, v) with res = u*p + v*q, via last-column cofactor
    expansion of the Sylvester matrix.  Intended for small inputs."""
    S = sylvester_matrix(p, q, name)
    ctx = p.ctx
    n = p.degree_in(name)
    m = q.degree_in(name)
    size = n + m
    x = ctx.var(name)
    u = ctx.zero()
    v = ctx.zero()
    res = ctx.zero()
    for r in range(size):
        minor = [row[:-1] for i, row in enumerate(S) if i != r]
        cof = det_mpoly(minor) if size > 1 else ctx.one()
        if (r + size - 1) % 2 == 1:
            cof = -cof
        res = res + S[r][-1] * cof
        if r < n:
            v = v + x ** (n - 1 - r) * cof
        else:
            u = u + x ** (size - 1 - r) * cof
    return res, u, v
