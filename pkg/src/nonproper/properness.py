"""Non-properness sets of generically finite polynomial maps.

For a map f = (f_1..f_m) on an affine variety X, the target points near
which f fails to be proper form a closed set inside the closure of the
image.  This module computes that set exactly for rational-coefficient
maps: eliminate the source variables from the graph ideal to get, for
each source coordinate, a minimal-degree relation with the image
variables; the vanishing of its leading coefficient (restricted to the
image closure) cuts out the components where that coordinate can escape
to infinity.

Exactness is guaranteed for dominant maps onto affine space (principal
elimination ideals); for maps with a proper subvariety as image the
leading-coefficient criterion is best-effort and is cross-checked by an
independent resultant-based elimination and by the numeric tracker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .groebner import Ideal, dimension, eliminate, vanishes_on
from .mpoly import Context, MPoly, resultant, squarefree_full, squarefree_part
from .orders import GREVLEX, LEX


def _default_image_names(m, taken):
    names = tuple(f"y{j + 1}" for j in range(m))
    clash = set(names) & set(taken)
    if clash:
        raise PreconditionError(
            f"image variable names {sorted(clash)} collide with source names; "
            "pass explicit image_names"
        )
    return names


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map on an affine variety.

    ``domain`` is the ideal of the source variety inside the source
    context (the zero ideal for all of affine space); ``components`` are
    the coordinate functions.  ``mode`` is "complex" or "real" and only
    affects how results are interpreted downstream.
    """

    ctx: Context
    components: tuple
    domain: Ideal = None
    mode: str = "complex"
    image_names: tuple = None

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise PreconditionError("a map needs at least one component")
        for f in comps:
            if f.ctx.names != self.ctx.names:
                raise PreconditionError("component context mismatch")
        object.__setattr__(self, "components", comps)
        if self.domain is None:
            object.__setattr__(self, "domain", Ideal(self.ctx, [self.ctx.zero()]))
        elif self.domain.ctx.names != self.ctx.names:
            raise PreconditionError("domain ideal context mismatch")
        if self.mode not in ("complex", "real"):
            raise PreconditionError(f"unknown field mode {self.mode!r}")
        names = self.image_names or _default_image_names(len(comps), self.ctx.names)
        if len(names) != len(comps):
            raise PreconditionError("image_names length must match component count")
        object.__setattr__(self, "image_names", tuple(names))
        if self.degree < 1:
            raise PreconditionError("map degree must be at least 1")

    @property
    def m(self):
        return len(self.components)

    @property
    def n(self):
        return self.ctx.arity

    @property
    def degree(self):
        return max(f.total_degree() for f in self.components)

    def domain_is_affine_space(self):
        return self.domain.is_zero_ideal()

    def image_context(self):
        return Context(self.image_names, LEX)

    def joined_context(self):
        return Context(self.ctx.names + self.image_names, GREVLEX)

    def evaluate(self, point):
        return tuple(f.evaluate(point) for f in self.components)


def graph_ideal(f: PolyMap) -> Ideal:
    """Ideal of the graph of f in the joined (source, image) context:
    the domain ideal together with component - image_variable."""
    big = f.joined_context()
    gens = [g.rebase(big) for g in f.domain.generators if not g.is_zero()]
    for comp, name in zip(f.components, f.image_names):
        gens.append(comp.rebase(big) - big.var(name))
    return Ideal(big, gens)


def image_closure(f: PolyMap) -> Ideal:
    """Ideal of the Zariski closure of the image: eliminate all source
    variables from the graph ideal."""
    return eliminate(graph_ideal(f), set(f.image_names))


def _coordinate_elimination(f, j):
    """Reduced lex basis of graph_ideal restricted to (x_j, image vars)."""
    name = f.ctx.names[j]
    return eliminate(graph_ideal(f), set(f.image_names) | {name})


def coordinate_min_poly(f: PolyMap, j, _elim=None) -> MPoly:
    """A nonzero relation between source coordinate j and the image
    variables, of minimal degree in that coordinate within the computed
    elimination basis; integer-primitive and squarefree in the
    coordinate."""
    name = f.ctx.names[j]
    elim = _elim if _elim is not None else _coordinate_elimination(f, j)
    candidates = [g for g in elim.generators if g.degree_in(name) > 0]
    if not candidates:
        raise PreconditionError(
            f"map is not generically finite: coordinate {name!r} is not "
            "algebraic over the image"
        )
    best = min(candidates, key=lambda g: (g.degree_in(name), g.ctx.order.key(g.leading_monomial())))
    return squarefree_part(best, name).canonical()


def is_generically_finite(f: PolyMap) -> bool:
    """True iff every source coordinate is algebraically dependent on the
    image variables over the domain (equivalently, generic fibers are
    finite)."""
    for j in range(f.n):
        name = f.ctx.names[j]
        elim = _coordinate_elimination(f, j)
        if not any(g.degree_in(name) > 0 for g in elim.generators):
            return False
    return True


@dataclass(frozen=True)
class CoordinateData:
    """Per-coordinate elimination result: the relation, its leading
    coefficient in the coordinate, and its coordinate degree."""

    index: int
    name: str
    min_poly: MPoly
    lead_coeff: MPoly  # in the image context, squarefree, canonical
    degree: int


@dataclass(frozen=True)
class SfResult:
    """The computed non-properness set.

    ``components`` are ideals in the image context; their union is the
    set.  ``empty_components`` names source coordinates whose candidate
    component turned out to cut the empty set.  ``hypersurface_ok``
    records whether every nonempty component has codimension one in the
    image closure.
    """

    map: PolyMap
    image_ideal: Ideal
    coordinates: tuple
    components: tuple
    empty_components: tuple
    generically_finite: bool
    dominant: bool
    hypersurface_ok: bool
    real_superset_warning: bool

    @property
    def is_empty(self):
        return not self.components

    def component_strings(self):
        return [[str(g) for g in comp.canonical_generators()] for comp in self.components]


def sf_compute(f: PolyMap) -> SfResult:
    """Compute the non-properness set of a generically finite map.

    Components arise from source coordinates whose minimal relation has a
    nonconstant leading coefficient; each component ideal is the image
    ideal plus the squarefree part of that coefficient.  An empty result
    means the map is proper (finite over its image closure).
    """
    yctx = f.image_context()
    J = image_closure(f)
    coords = []
    for j in range(f.n):
        name = f.ctx.names[j]
        elim = _coordinate_elimination(f, j)
        if not any(g.degree_in(name) > 0 for g in elim.generators):
            raise PreconditionError(
                f"map is not generically finite: coordinate {name!r} is not "
                "algebraic over the image"
            )
        phi = coordinate_min_poly(f, j, _elim=elim)
        nj = phi.degree_in(name)
        lead = phi.coeffs_in(name)[nj].rebase(yctx)
        lead = squarefree_full(lead).canonical() if not lead.is_zero() else lead
        coords.append(CoordinateData(j, name, phi, lead, nj))

    components = []
    empty = []
    seen = set()
    for cd in coords:
        a = cd.lead_coeff
        if a.constant_value() is not None:
            continue  # coordinate stays finite over the image
        if not J.is_zero_ideal() and vanishes_on(a, J):
            continue  # degenerate: coefficient vanishes on the whole image
        gens = [g for g in J.canonical_generators() if not g.is_zero()] + [a]
        comp = Ideal(yctx, gens)
        if comp.is_unit():
            empty.append(cd.name)
            continue
        key = tuple(str(g) for g in comp.canonical_generators())
        if key in seen:
            continue
        seen.add(key)
        components.append(comp)

    dim_image = dimension(J)
    hypersurface_ok = all(dimension(c) == dim_image - 1 for c in components)
    return SfResult(
        map=f,
        image_ideal=J,
        coordinates=tuple(coords),
        components=tuple(components),
        empty_components=tuple(empty),
        generically_finite=True,
        dominant=J.is_zero_ideal(),
        hypersurface_ok=hypersurface_ok,
        real_superset_warning=(f.mode == "real" and bool(components)),
    )


def is_proper_at(f: PolyMap, point, sf: SfResult = None) -> bool:
    """True iff the point lies on the image closure and on no component
    of the non-properness set (exact evaluation of the generators)."""
    if sf is None:
        sf = sf_compute(f)
    point = [Fraction(x) for x in point]
    if len(point) != f.m:
        raise PreconditionError("point arity must match the number of components")
    for g in sf.image_ideal.generators:
        if g.evaluate(point) != 0:
            return False
    for comp in sf.components:
        if all(g.evaluate(point) == 0 for g in comp.canonical_generators()):
            return False
    return True


# -- degree-of-uniruledness bound table ---------------------------------------

BOUND_MODES = ("cn", "wn", "multc", "cn1", "multc1")


def theorem_bound(f: PolyMap, mode, d1=None) -> int:
    """Integer bound on the degree of uniruledness of the non-properness
    set, per bound rule.

    cn / cn1:  deg(f) - 1; requires the domain to be all of affine space
               (complex / real statement).
    wn:        min over source variables of the max per-component degree
               in that variable; requires affine-space domain.
    multc:     d1 * deg(f) where d1 bounds the uniruledness degree of the
               domain (complex).
    multc1:    2 * d1 * deg(f) (real).
    """
    if mode not in BOUND_MODES:
        raise PreconditionError(f"unknown bound mode {mode!r}")
    if mode in ("cn", "cn1", "wn"):
        if not f.domain_is_affine_space():
            raise PreconditionError(f"mode {mode!r} requires the full affine space as domain")
    if mode in ("cn", "cn1"):
        return f.degree - 1
    if mode == "wn":
        return min(
            max(comp.degree_in(name) for comp in f.components)
            for name in f.ctx.names
        )
    if d1 is None:
        raise PreconditionError(f"mode {mode!r} needs the domain uniruledness degree d1")
    if d1 < 0:
        raise PreconditionError("d1 must be nonnegative")
    if mode == "multc":
        return d1 * f.degree
    return 2 * d1 * f.degree


# -- independent resultant-based elimination (cross-oracle) --------------------


def _eliminate_var_resultants(polys, name):
    """One resultant elimination step: drop every polynomial's dependence
    on one variable via pairwise resultants with a minimal-degree pivot."""
    with_var = [p for p in polys if p.degree_in(name) > 0]
    without = [p for p in polys if p.degree_in(name) == 0 and not p.is_zero()]
    if len(with_var) <= 1:
        return without
    pivot = min(with_var, key=lambda p: (p.degree_in(name), p.ctx.order.key(p.leading_monomial())))
    out = list(without)
    for p in with_var:
        if p is pivot:
            continue
        r = resultant(pivot, p, name)
        if not r.is_zero():
            out.append(r)
    return out


def coordinate_min_poly_resultant(f: PolyMap, j) -> MPoly:
    """Resultant-path analogue of coordinate_min_poly: iterated Sylvester
    resultants eliminating the other source variables.  May carry
    extraneous factors; used as an independent oracle."""
    big = f.joined_context()
    polys = [g.rebase(big) for g in graph_ideal(f).generators if not g.is_zero()]
    keep_name = f.ctx.names[j]
    for name in f.ctx.names:
        if name != keep_name:
            polys = _eliminate_var_resultants(polys, name)
    candidates = [p for p in polys if p.degree_in(keep_name) > 0]
    if not candidates:
        raise PreconditionError(
            f"resultant elimination found no relation for coordinate {keep_name!r}"
        )
    best = min(
        candidates,
        key=lambda g: (g.degree_in(keep_name), g.ctx.order.key(g.leading_monomial())),
    )
    sub = Context(tuple([keep_name]) + f.image_names, LEX)
    return squarefree_part(best, keep_name).rebase(sub).canonical()


def sf_components_resultant(f: PolyMap):
    """Non-properness components via the resultant path, for cross-oracle
    comparison with sf_compute."""
    yctx = f.image_context()
    J = image_closure(f)
    comps = []
    seen = set()
    for j in range(f.n):
        name = f.ctx.names[j]
        phi = coordinate_min_poly_resultant(f, j)
        nj = phi.degree_in(name)
        if nj == 0:
            continue
        lead = phi.coeffs_in(name)[nj].rebase(yctx)
        if lead.constant_value() is not None:
            continue
        lead = squarefree_full(lead).canonical()
        if not J.is_zero_ideal() and vanishes_on(lead, J):
            continue
        gens = [g for g in J.canonical_generators() if not g.is_zero()] + [lead]
        comp = Ideal(yctx, gens)
        if comp.is_unit():
            continue
        key = tuple(str(g) for g in comp.canonical_generators())
        if key not in seen:
            seen.add(key)
            comps.append(comp)
    return comps
