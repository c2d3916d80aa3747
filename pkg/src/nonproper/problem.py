"""Problem files and reports.

A problem file is a JSON document (``format: 1``) naming the variables,
the field mode, the domain constraints, and whichever of map / action /
curve / targets / paths / samples the requested command needs.  Reports
are JSON documents with stable keys {format, command, input_digest,
result, checks, timings}; all polynomials are canonical strings that
parse back to identical values.  Both formats are documented in
docs/formats.md with JSON schemas in docs/.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .curves import ParametricCurve
from .errors import ParseError, PreconditionError
from .groebner import Ideal
from .mpoly import Context
from .orders import GREVLEX, LEX
from .parser import parse_poly
from .properness import PolyMap
from .tracker import PathSpec

FORMAT_VERSION = 1


def parse_rational(text):
    """Rational scalar from text like '3', '-4/7'."""
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational literal {text!r}: {e}") from None


def parse_point(values):
    return tuple(parse_rational(v) for v in values)


def format_rational(q):
    q = Fraction(q)
    return str(q)


# -- arithmetic expressions in k (for paths) -----------------------------------

_EXPR_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def eval_path_expr(text, k):
    """Evaluate an arithmetic expression in the index variable k exactly.

    Full rational arithmetic ( + - * / ^ , unary minus, parentheses ) is
    allowed here, unlike in polynomial text, because path coordinates are
    rational functions of the index."""
    k = Fraction(k)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in path expression")
        tokens.append(m.group(0).strip())
        pos = m.end()
    tokens.append(None)
    i = [0]

    def peek():
        return tokens[i[0]]

    def take():
        t = tokens[i[0]]
        i[0] += 1
        return t

    def expr():
        v = term()
        while peek() in ("+", "-"):
            op = take()
            w = term()
            v = v + w if op == "+" else v - w
        return v

    def term():
        v = factor()
        while peek() in ("*", "/"):
            op = take()
            w = factor()
            if op == "/":
                if w == 0:
                    raise ParseError(f"division by zero in path expression {text!r}")
                v = v / w
            else:
                v = v * w
        return v

    def factor():
        if peek() == "-":
            take()
            return -factor()
        return power()

    def power():
        v = atom()
        while peek() == "^":
            take()
            e = take()
            if e is None or not e.isdigit():
                raise ParseError(f"expected integer exponent in path expression {text!r}")
            v = v ** int(e)
        return v

    def atom():
        t = take()
        if t is None:
            raise ParseError(f"unexpected end of path expression {text!r}")
        if t.isdigit():
            return Fraction(int(t))
        if t == "(":
            v = expr()
            if take() != ")":
                raise ParseError(f"missing ')' in path expression {text!r}")
            return v
        if t == "k":
            return k
        raise ParseError(f"unexpected {t!r} in path expression {text!r} (only 'k' is bound)")

    v = expr()
    if peek() is not None:
        raise ParseError(f"trailing input in path expression {text!r}")
    return v


def path_from_spec(spec, kmax=20):
    """PathSpec from {'kind': ..., 'point': [exprs in k]}."""
    kind = spec.get("kind", "radial")
    exprs = spec.get("point")
    if not exprs:
        raise ParseError("path spec needs a 'point' list of expressions in k")
    for e in exprs:
        eval_path_expr(e, 2)  # validate early

    def point_fn(k):
        return tuple(eval_path_expr(e, k) for e in exprs)

    return PathSpec.geometric(point_fn, kind, kmax)


# -- problem files ----------------------------------------------------------------


@dataclass
class Problem:
    """Validated problem-file contents plus the raw bytes for digesting."""

    vars: tuple
    mode: str
    domain_equations: tuple
    domain_inequalities: tuple
    map_components: tuple  # may be empty
    action: tuple  # may be empty
    action_param: str
    curve: tuple  # may be empty
    targets: tuple
    paths: tuple  # raw dicts
    degree: int | None
    d1: int | None
    samples: tuple
    sharpness: bool
    kmax: int
    raw: bytes = b""

    def digest(self):
        return "sha256:" + hashlib.sha256(self.raw).hexdigest()

    # -- builders ---------------------------------------------------------

    def context(self):
        return Context(self.vars, GREVLEX)

    def domain_ideal(self):
        ctx = self.context()
        gens = [parse_poly(t, ctx) for t in self.domain_equations]
        return Ideal(ctx, gens or [ctx.zero()])

    def inequality_polys(self):
        ctx = self.context()
        return tuple(parse_poly(t, ctx) for t in self.domain_inequalities)

    def polymap(self):
        if not self.map_components:
            raise PreconditionError("this command needs a 'map' in the problem file")
        ctx = self.context()
        comps = tuple(parse_poly(t, ctx) for t in self.map_components)
        return PolyMap(ctx, comps, domain=self.domain_ideal(), mode=self.mode)

    def one_param_action(self):
        if not self.action:
            raise PreconditionError("this command needs an 'action' in the problem file")
        from .curves import one_param_action

        ctx = self.context()
        act_ctx = Context((self.action_param,) + self.vars, GREVLEX)
        comps = [parse_poly(t, act_ctx) for t in self.action]
        dom = self.domain_ideal()
        return one_param_action(ctx, self.action_param, comps,
                                dom if not dom.is_zero_ideal() else None)

    def curve_object(self, mode=None):
        if not self.curve:
            raise PreconditionError("this command needs a 'curve' in the problem file")
        tctx = Context(("t",), GREVLEX)
        coords = []
        for text in self.curve:
            p = parse_poly(text, tctx)
            cs = [Fraction(0)] * (p.degree_in("t") + 1)
            for mono, c in p.terms.items():
                cs[mono[0]] = c
            coords.append(cs)
        return ParametricCurve.from_coordinates(coords, mode or self.mode)

    def path_specs(self):
        return tuple(path_from_spec(p, self.kmax) for p in self.paths)

    def target_points(self):
        return tuple(parse_point(t) for t in self.targets)

    def sample_points(self):
        return tuple(parse_point(s) for s in self.samples)


_ALLOWED_KEYS = {
    "format", "vars", "field", "domain_equations", "domain_inequalities",
    "map", "action", "action_param", "curve", "targets", "paths", "degree",
    "d1", "samples", "sharpness", "kmax",
}


def problem_from_dict(data, raw=b""):
    if not isinstance(data, dict):
        raise ParseError("problem file must be a JSON object")
    unknown = set(data) - _ALLOWED_KEYS
    if unknown:
        raise ParseError(f"unknown problem keys: {sorted(unknown)}")
    if data.get("format") != FORMAT_VERSION:
        raise ParseError(f"unsupported problem format {data.get('format')!r}; expected {FORMAT_VERSION}")
    vars_ = data.get("vars")
    if not vars_ or not all(isinstance(v, str) for v in vars_):
        raise ParseError("'vars' must be a nonempty list of names")
    mode = data.get("field", "complex")
    if mode not in ("complex", "real"):
        raise ParseError("'field' must be 'complex' or 'real'")
    ineqs = tuple(data.get("domain_inequalities", ()))
    if ineqs and mode != "real":
        raise ParseError("domain inequalities are only allowed with field = 'real'")
    degree = data.get("degree")
    if degree is not None and (not isinstance(degree, int) or degree < 1):
        raise ParseError("'degree' must be a positive integer")
    kmax = data.get("kmax", 20)
    if not isinstance(kmax, int) or not 2 <= kmax <= 40:
        raise ParseError("'kmax' must be an integer in [2, 40]")
    prob = Problem(
        vars=tuple(vars_),
        mode=mode,
        domain_equations=tuple(data.get("domain_equations", ())),
        domain_inequalities=ineqs,
        map_components=tuple(data.get("map", ())),
        action=tuple(data.get("action", ())),
        action_param=data.get("action_param", "g"),
        curve=tuple(data.get("curve", ())),
        targets=tuple(tuple(t) for t in data.get("targets", ())),
        paths=tuple(data.get("paths", ())),
        degree=degree,
        d1=data.get("d1"),
        samples=tuple(tuple(s) for s in data.get("samples", ())),
        sharpness=bool(data.get("sharpness", False)),
        kmax=kmax,
        raw=raw,
    )
    # parse everything parseable up front so errors surface as ParseError
    ctx = prob.context()
    for text in (prob.domain_equations + prob.domain_inequalities + prob.map_components):
        parse_poly(text, ctx)
    for t in prob.targets:
        parse_point(t)
    for s in prob.samples:
        parse_point(s)
    return prob


def load_problem(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e}") from None
    return problem_from_dict(data, raw)


# -- reports ------------------------------------------------------------------------


def render_ideal(ideal, order_tag="lex"):
    """Canonical generator strings of an ideal under the requested print
    order."""
    order = LEX if order_tag == "lex" else GREVLEX
    ctx = ideal.ctx.with_order(order)
    out = []
    for g in ideal.canonical_generators():
        out.append(str(g.rebase(ctx).canonical()) if not g.is_zero() else "0")
    return out


def render_curve(curve):
    return {
        "coordinates": [curve.coordinate_str(i) for i in range(curve.m)],
        "coefficients": [[format_rational(c) for c in vec] for vec in curve.coeffs],
        "effective_degree": curve.effective_degree,
        "mode": curve.mode,
    }


def make_report(command, digest, result, checks, timings):
    return {
        "format": FORMAT_VERSION,
        "command": command,
        "input_digest": digest,
        "result": result,
        "checks": [
            {"name": n, "ok": bool(ok), "detail": str(detail)} for n, ok, detail in checks
        ],
        "timings": {k: round(v, 6) for k, v in timings.items()},
    }
