"""Floating-point limit-curve tracking with exact back-verification.

Push a divergent sequence of base points through a map, expand the image
of each scaled line exactly, renormalize each image curve to unit
coefficient norm, and watch the normalized coefficient vectors converge.
The limit, once converged, is snapped back to rational coefficients and
re-verified exactly against the non-properness set.

Everything exact happens in Fractions (the per-step image curves are
exact); floats enter only for normalization and the convergence metric.
The subsequence/compactness step of the underlying existence argument is
replaced by a geometric index schedule and a deterministic convergence
test; non-convergent runs are reported, never silently resampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curves import ParametricCurve, common_inner, eval_at_tpolys, substitute_curve
from .errors import NonproperError, PreconditionError, VerificationError
from .rationals import snap_rational
from .unipoly import Q, UniPoly


class ConstantCurveError(NonproperError):
    """The image curve degenerated to a constant: the chosen line met an
    infinite fiber (those cover only a nowhere dense set, so a different
    path avoids this)."""


@dataclass(frozen=True)
class PathSpec:
    """A family of base points indexed by k.

    kind "radial": the whole point is scaled along the line (1-t)*x_k.
    kind "cylinder": only the first coordinate is scaled, the rest ride
    along unchanged.
    """

    kind: str
    point_fn: object  # Callable[[int], tuple[Fraction, ...]]
    schedule: tuple

    def __post_init__(self):
        if self.kind not in ("radial", "cylinder"):
            raise PreconditionError(f"unknown path kind {self.kind!r}")
        sched = tuple(int(k) for k in self.schedule)
        if len(sched) < 4:
            raise PreconditionError("schedule needs at least 4 indices")
        if any(b <= a for a, b in zip(sched, sched[1:])):
            raise PreconditionError("schedule must be strictly increasing")
        object.__setattr__(self, "schedule", sched)

    @classmethod
    def geometric(cls, point_fn, kind="radial", kmax=20):
        return cls(kind, point_fn, tuple(2 ** i for i in range(1, kmax + 1)))


def image_curve(f, base, mode="radial"):
    """Exact t-expansion of f along the scaled line through a base point.

    radial: f((1-t) * base); cylinder: f(((1-t) * base_1, base_rest)).
    """
    base = [Q(x) for x in base]
    if len(base) != f.n:
        raise PreconditionError("base point arity mismatch")
    if mode == "radial":
        coords = [[b, -b] for b in base]
    elif mode == "cylinder":
        coords = [[base[0], -base[0]]] + [[b] for b in base[1:]]
    else:
        raise PreconditionError(f"unknown image_curve mode {mode!r}")
    rows = []
    for comp in f.components:
        rows.append(eval_at_tpolys(comp, coords, Q(0), Q(1)))
    depth = max(len(r) for r in rows)
    vecs = [tuple(r[i] if i < len(r) else Q(0) for r in rows) for i in range(depth)]
    return UniPoly(vecs, m=f.m)


def norm_objective(norms2, lam):
    """sum_i ||c_i||^2 lam^(2i); strictly increasing in lam > 0 whenever
    some positive-index coefficient is nonzero."""
    return sum(v * lam ** (2 * i) for i, v in enumerate(norms2))


def unit_normalize(coeffs):
    """(lam, normalized) with normalized = c_i * lam^i of unit Euclidean
    norm, lam > 0 solved by bracket doubling plus bisection.

    Requires the constant coefficient to have norm < 1 (otherwise the
    step is not yet in the convergence regime) and some higher
    coefficient to be nonzero (otherwise the curve is constant)."""
    arr = _as_complex_matrix(coeffs)
    norms2 = [float(np.sum(np.abs(row) ** 2)) for row in arr]
    if norms2[0] >= 1.0:
        raise PreconditionError(
            "constant coefficient norm is >= 1: not yet in the convergence regime"
        )
    if len(norms2) < 2 or all(v == 0 for v in norms2[1:]):
        raise ConstantCurveError("image curve is constant (infinite fiber hit)")
    lo, hi = 0.0, 1.0
    for _ in range(200):
        if norm_objective(norms2, hi) >= 1.0:
            break
        hi *= 2.0
    else:
        raise PreconditionError("failed to bracket the normalization root")
    lam = hi
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        val = norm_objective(norms2, mid)
        if val < 1.0:
            lo = mid
        else:
            hi = mid
        lam = mid
        if abs(math.sqrt(val) - 1.0) < 1e-13:
            break
    scaled = np.array([arr[i] * lam ** i for i in range(arr.shape[0])])
    return lam, scaled


def _as_complex_matrix(coeffs):
    if isinstance(coeffs, UniPoly):
        return np.array([[complex(c) for c in vec] for vec in coeffs.coeffs])
    arr = np.asarray(coeffs, dtype=complex)
    if arr.ndim == 1:
        arr = arr[:, None]
    return arr


@dataclass(frozen=True)
class StepRecord:
    k: int
    raw: UniPoly  # exact image curve, already translated by the target
    lam: float
    normalized: object  # complex ndarray, phase-aligned to the previous step
    in_regime: bool


@dataclass(frozen=True)
class FloatCurve:
    """Floating estimate of the limit curve (coefficient matrix rows are
    t-powers)."""

    coeffs: object  # complex ndarray (degree+1, m)

    @property
    def m(self):
        return self.coeffs.shape[1]

    @property
    def degree(self):
        return self.coeffs.shape[0] - 1

    def eval(self, t):
        acc = np.zeros(self.m, dtype=complex)
        for row in self.coeffs[::-1]:
            acc = acc * t + row
        return acc


@dataclass(frozen=True)
class LimitTrace:
    """Everything a tracking run produced, exact and floating."""

    target: tuple
    path: PathSpec
    steps: tuple
    diffs: tuple  # consecutive sup-norm differences after phase alignment
    status: str  # converged | diverged | constant-curve-hit
    limit_estimate: FloatCurve
    lambdas: tuple

    @property
    def converged(self):
        return self.status == "converged"

    def lambda_growth(self):
        """Consecutive ratios of the normalization factors; a diagnostic
        for whether the reparametrization scale stays finite (ratios
        near 1) or escapes (ratios drifting), never a branch point."""
        return tuple(b / a for a, b in zip(self.lambdas, self.lambdas[1:]))

    def final_raw(self):
        return self.steps[-1].raw


def _phase_align(prev, cur):
    inner = np.vdot(cur, prev)  # sum conj(cur) * prev
    if abs(inner) < 1e-300:
        return cur, float("inf")
    u = inner / abs(inner)
    aligned = u * cur
    return aligned, float(np.max(np.abs(aligned - prev)))


def track(f, target, path, tol=1e-8, residual_tol=1e-6):
    """Run the schedule, normalize each exact image curve, and test
    convergence of the normalized coefficient vectors.

    Converged means the last three consecutive aligned differences are
    all below tol.  The limit estimate is the final normalized curve
    translated back by the target."""
    target = tuple(Q(x) for x in target)
    if len(target) != f.m:
        raise PreconditionError("target arity must match the number of components")
    points = [path.point_fn(k) for k in path.schedule]
    last_val = f.evaluate(points[-1])
    resid = math.sqrt(sum(abs(complex(a - b)) ** 2 for a, b in zip(last_val, target)))
    scale = 1.0 + math.sqrt(sum(abs(complex(t)) ** 2 for t in target))
    if resid >= residual_tol * scale:
        raise PreconditionError(
            f"path does not approach the target: final residual {resid:.3e}"
        )
    steps = []
    diffs = []
    prev_norm = None
    status = None
    for k, pt in zip(path.schedule, points):
        raw = image_curve(f, pt, path.kind)
        shifted_vecs = list(raw.coeffs)
        shifted_vecs[0] = tuple(c - t for c, t in zip(shifted_vecs[0], target))
        raw = UniPoly(shifted_vecs, m=f.m)
        try:
            lam, normalized = unit_normalize(raw)
        except ConstantCurveError:
            status = "constant-curve-hit"
            steps.append(StepRecord(k, raw, float("nan"), None, False))
            break
        except PreconditionError:
            steps.append(StepRecord(k, raw, float("nan"), None, False))
            continue
        if prev_norm is not None and prev_norm.shape == normalized.shape:
            normalized, diff = _phase_align(prev_norm, normalized)
            diffs.append(diff)
        elif prev_norm is not None:
            pad = max(prev_norm.shape[0], normalized.shape[0])
            a = np.zeros((pad, f.m), dtype=complex)
            b = np.zeros((pad, f.m), dtype=complex)
            a[: prev_norm.shape[0]] = prev_norm
            b[: normalized.shape[0]] = normalized
            b, diff = _phase_align(a, b)
            normalized = b
            diffs.append(diff)
        prev_norm = normalized
        steps.append(StepRecord(k, raw, lam, normalized, True))
    if status is None:
        usable = [s for s in steps if s.in_regime]
        tail = diffs[-3:]
        if len(usable) >= 4 and len(tail) == 3 and all(d < tol for d in tail):
            status = "converged"
        else:
            status = "diverged"
    limit = None
    for s in reversed(steps):
        if s.in_regime:
            est = np.array(s.normalized, dtype=complex, copy=True)
            est[0] += np.array([complex(t) for t in target])
            limit = FloatCurve(est)
            break
    if limit is None:
        limit = FloatCurve(np.zeros((1, f.m), dtype=complex))
    lambdas = tuple(s.lam for s in steps if s.in_regime)
    return LimitTrace(
        target=target,
        path=path,
        steps=tuple(steps),
        diffs=tuple(diffs),
        status=status,
        limit_estimate=limit,
        lambdas=lambdas,
    )


@dataclass(frozen=True)
class VerifiedLimit:
    """Exact rational limit curve plus its decomposition through a common
    inner polynomial (the decomposed outer degree witnesses the degree
    bound)."""

    curve: ParametricCurve
    outer: ParametricCurve
    inner: UniPoly

    @property
    def outer_degree(self):
        return self.outer.effective_degree


def rationalize_verify(trace, sf, tol=Fraction(1, 10**6), max_denominator=10**6):
    """Snap the final exact image curve to simple rationals and verify it
    exactly against every component of the non-properness set.

    The per-step image curves are exact, so at large schedule indices the
    non-limit dust is below tol and snapping recovers the exact limit;
    verification then has no numeric content at all.  Raises
    VerificationError when snapping fails or a component generator does
    not vanish on the curve."""
    raw = trace.final_raw()
    coords = []
    for i in range(raw.m):
        cs = raw.coordinate(i) or [Q(0)]
        snapped = [snap_rational(c, tol, max_denominator) for c in cs]
        snapped[0] = snapped[0] + trace.target[i]
        coords.append(snapped)
    curve = ParametricCurve.from_coordinates(coords, mode="complex")
    if curve.is_constant():
        raise VerificationError("rationalized limit curve is constant")
    if not sf.components:
        raise VerificationError("the non-properness set is empty; no curve can lie in it")
    # the image of the line is irreducible, so it must sit inside one
    # component of the set; exactness means every generator of that
    # component composes to zero
    failing = None
    for comp in sf.components:
        ok = True
        for g in comp.canonical_generators():
            if g.is_zero():
                continue
            if not substitute_curve(g, curve).is_zero():
                ok = False
                failing = g
                break
        if ok:
            break
    else:
        raise VerificationError(
            f"limit curve does not satisfy the component generator {failing}"
        )
    outer, inner = common_inner(curve)
    return VerifiedLimit(curve=curve, outer=outer, inner=inner)
