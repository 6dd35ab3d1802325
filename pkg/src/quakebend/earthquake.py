"""Left/right earthquakes: coordinate form, quake cocycle, flow.

Sign conventions (calibrated against the twist rule of the holonomy
builder and asserted by the cross-oracle tests): leaves realized by
``realize_lifts`` are oriented with the initial base point on their
left, and the *left* quake cocycle composes ``exp(+a X^)`` over the
crossed leaves, ``X^`` the unit-displacement generator of the oriented
leaf.  The right cocycle is its inverse on matching data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from quakebend import isometry as iso
from quakebend import teich
from quakebend import lamination as lm
from quakebend.errors import DomainError, StructureError, QuakebendError

LEFT = "left"
RIGHT = "right"


class InvalidLaminationError(QuakebendError):
    """Input leaves cross each other."""


class NoChartWitnessError(QuakebendError):
    """The twist-chart witness construction does not apply."""


def _side_sign(side):
    if side == LEFT:
        return 1.0
    if side == RIGHT:
        return -1.0
    raise DomainError(f"side must be {LEFT!r} or {RIGHT!r}")


# ---------------------------------------------------------------------------
# earthquakes in coordinates
# ---------------------------------------------------------------------------

def quake_coordinates(fn: teich.FNPoint, lam: lm.MultiCurveLam, side,
                      pd: teich.PantDecomposition | None = None):
    """Earthquake along a weighted multicurve: twists move by +-w."""
    if len(lam.weights) != len(fn.interior_lengths):
        raise StructureError("lamination does not match the decomposition")
    if pd is not None:
        fn.check(pd)
    s = _side_sign(side)
    return fn.with_twists(tuple(t + s * w for t, w in
                                zip(fn.twists, lam.weights)))


def quake_shear(sp: teich.ShearPoint, lam: lm.TriangulationLam, side):
    """Earthquake along a weighted triangulation: shears move by +-w."""
    if lam.triangulation is not sp.triangulation and \
            lam.triangulation != sp.triangulation:
        raise StructureError("lamination lives on a different triangulation")
    s = _side_sign(side)
    return sp.with_shears(tuple(x + s * w for x, w in
                                zip(sp.shears, lam.weights)))


# ---------------------------------------------------------------------------
# quake cocycle
# ---------------------------------------------------------------------------

def cocycle_product(lifts, factor, x=None, y=None, tol=1e-9):
    """Ordered product of per-leaf factors with the endpoint half-weight
    rule: the weight of the first (last) leaf is halved when x (y) lies
    on it.

    One routine serves the quake cocycle and both bending cocycles:
    only the `factor(geodesic, weight) -> matrix` map differs.
    """
    if not lm.leaves_pairwise_disjoint(lifts):
        raise InvalidLaminationError("crossing leaves in the lift family")
    out = None
    for idx, leaf in enumerate(lifts):
        a = leaf.weight
        if idx == 0 and x is not None and leaf.geodesic.contains(x, tol=tol):
            a = a / 2.0
        if idx == len(lifts) - 1 and y is not None \
                and leaf.geodesic.contains(y, tol=tol):
            a = a / 2.0
        m = factor(leaf.geodesic, a)
        out = m if out is None else out @ m
    if out is None:
        return np.eye(2)
    return iso.normalize(out)


def quake_cocycle(lifts, side, x=None, y=None, tol=1e-9):
    """B(x, y): ordered product of exp(+-a X^) over the crossed leaves.

    `lifts` must come ordered along the segment and oriented with x on
    the left (the `realize_lifts` convention).  When x or y is supplied
    and lies on the first/last leaf, that weight is halved.
    """
    s = _side_sign(side)

    def factor(geo, a):
        return iso.expm2(s * a * geo.displacement_generator())

    return cocycle_product(lifts, factor, x=x, y=y, tol=tol)


def quake_holonomy(point, lam, side, depth=8, pd=None, base=None):
    """Deformed holonomy gamma -> B(x0, gamma x0) gamma.

    `point` is an FNPoint (with its decomposition) or a ShearPoint; the
    result carries meta['converged'] reporting lift-depth convergence.
    """
    if isinstance(point, teich.FNPoint):
        if pd is None:
            raise StructureError("FN quake holonomy needs the decomposition")
        h = teich.holonomy_from_fn(pd, point)
    elif isinstance(point, teich.ShearPoint):
        h = teich.holonomy_from_shear(point)
    else:
        raise StructureError(f"unsupported point {type(point)!r}")

    empty = (isinstance(lam, lm.MultiCurveLam) and lam.is_empty)
    if empty:
        h.meta["converged"] = True
        return h
    fam = lm.LiftFamily(lam, h, depth=depth)
    x0 = base if base is not None else complex(0.137, 1.03)
    converged = True

    def deform(name, m):
        nonlocal converged
        y = iso.apply_h2(m, x0)
        leaves, ok = fam.crossings(x0, y)
        converged = converged and ok
        return iso.normalize(quake_cocycle(leaves, side, x=x0, y=y) @ m)

    out = h.map(deform)
    out.meta["converged"] = converged
    return out


# ---------------------------------------------------------------------------
# the (enhanced) quake flow
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlowState:
    """State of the enhanced left-quake flow.

    Stores the initial enhanced surface and lamination plus elapsed
    time; all peripheral scalars derive from them, which keeps the flow
    law exact.
    """

    surface: teich.EnhancedPoint
    lam: lm.EnhancedLam
    time: float = 0.0

    def __post_init__(self):
        if self.time < 0:
            raise DomainError("flow time must be >= 0; "
                              "run the right flow for negative times")

    @property
    def punctures(self):
        return len(self.surface.eps)

    def initial_spectrum(self, i):
        return lm.enhanced_spectrum(self.lam, i)

    def enhanced_spectrum(self, i):
        """I#_{C_i}: constant along the flow."""
        return self.initial_spectrum(i)

    def enhanced_length(self, i):
        """l#_{C_i}(t) = l#_{C_i}(0) - t I#_{C_i}(0)."""
        return teich.enhanced_length(self.surface, i) - \
            self.time * self.initial_spectrum(i)

    def plain_length(self, i):
        return abs(self.enhanced_length(i))

    def _flip(self, i):
        # common sign factor of eps and eta; +1 at t = 0, flips when the
        # enhanced length crosses zero (their product stays constant)
        return self.surface.eps[i] * \
            teich.sign_of_enhanced(self.enhanced_length(i))

    def eps(self, i):
        """Boundary-orientation sign: the sign of l#, with sign(0)=+1."""
        return self.surface.eps[i] * self._flip(i)

    def eta(self, i):
        return self.lam.eta[i] * self._flip(i)

    def sigma(self, i):
        """Spiraling sign of the flowed lamination.

        Follows the bounce rule: flips when the boundary length passes
        through a cusp; reported as +1 at the cusp instant itself
        (flagged by `at_cusp`, a convention the source text leaves
        open).
        """
        if self.at_cusp(i):
            return 1
        return self.surface.eps[i] * self.eta(i)

    def at_cusp(self, i, tol=0.0):
        return abs(self.enhanced_length(i)) <= tol

    def critical_time(self, i):
        """Time at which C_i degenerates to a cusp, if ever."""
        l0 = teich.enhanced_length(self.surface, i)
        I0 = self.initial_spectrum(i)
        if I0 == 0 or (l0 / I0) < 0:
            return None
        return l0 / I0

    def record(self):
        return {
            "t": self.time,
            "l_sharp": tuple(self.enhanced_length(i) for i in range(self.punctures)),
            "I_sharp": tuple(self.enhanced_spectrum(i) for i in range(self.punctures)),
            "eps": tuple(self.eps(i) for i in range(self.punctures)),
            "eta": tuple(self.eta(i) for i in range(self.punctures)),
            "sigma": tuple(self.sigma(i) for i in range(self.punctures)),
            "cusp": tuple(self.at_cusp(i) for i in range(self.punctures)),
        }


def quake_flow(state: FlowState, t):
    """Advance the enhanced left-quake flow by time t >= 0."""
    if t < 0:
        raise DomainError("t must be >= 0; negative times are the right flow")
    return FlowState(state.surface, state.lam, state.time + t)


def quake_compatible(f0, sigma0, f1, sigma1):
    """Necessary compatibility for a left earthquake from F0 to F1 with
    the given spiraling signatures."""
    n = len(sigma0)
    if len(sigma1) != n:
        raise StructureError("signatures must have equal length")
    for i in range(n):
        l0 = teich._plain_boundary_length(f0, i)
        l1 = teich._plain_boundary_length(f1, i)
        if l1 < l0 and sigma0[i] != 1:
            return False
        if l1 > l0 and sigma1[i] != 1:
            return False
    return True


def solve_twist_earthquake(f0: teich.FNPoint, f1: teich.FNPoint):
    """Witness multicurve for a left earthquake in the twist chart.

    Applies only when the two points share all lengths and differ by
    componentwise non-negative twist increments.
    """
    if f0.boundary_lengths != f1.boundary_lengths or \
            f0.interior_lengths != f1.interior_lengths:
        raise NoChartWitnessError("length coordinates differ")
    dt = tuple(b - a for a, b in zip(f0.twists, f1.twists))
    if any(d < 0 for d in dt):
        raise NoChartWitnessError("twist differences must be >= 0 for a "
                                  "left-quake witness in this chart")
    return lm.MultiCurveLam(dt)
