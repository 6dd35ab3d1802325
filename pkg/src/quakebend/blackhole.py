"""The causal AdS extension Omega(h): membership, peripheral rectangles,
horizon invariants, extremal meridians, T-symmetry, and the BTZ metric.

Boundary-circle arcs use the angle chart theta = 2 arctan(x) (infinity
at pi), which keeps interval arithmetic free of special cases.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from quakebend import isometry as iso
from quakebend import teich
from quakebend.errors import DomainError, QuakebendError, WrongClassError


class DegenerateHorizonError(QuakebendError):
    """A parabolic side leaves the horizon without a size."""


class IncreaseDepthError(QuakebendError):
    """Limit-set sampling too shallow to select the rectangle sides."""


class CoordinateSingularityError(QuakebendError):
    """BTZ chart breaks down where f(r) = 0."""

    def __init__(self, radius_name):
        super().__init__(f"f vanishes at the horizon radius {radius_name}")
        self.radius_name = radius_name


def circle_angle(x):
    """Monotone coordinate on the boundary circle, infinity at pi."""
    return math.pi if x == iso.INF else 2.0 * math.atan(x)


@dataclass(frozen=True)
class CircleArc:
    """Open arc swept counterclockwise from start to end."""

    start: float  # boundary values (extended reals)
    end: float

    def contains(self, x, tol=0.0):
        a, b = circle_angle(self.start), circle_angle(self.end)
        t = (circle_angle(x) - a) % (2.0 * math.pi)
        w = (b - a) % (2.0 * math.pi)
        return tol < t < w - tol


@dataclass(frozen=True)
class Rectangle:
    """R(gamma) = I_L x I_R with the two horizon vertices."""

    left: object   # CircleArc or a single boundary point
    right: object
    vertices: tuple = ()

    @property
    def degenerate(self):
        return not (isinstance(self.left, CircleArc)
                    and isinstance(self.right, CircleArc))


@dataclass(frozen=True)
class HorizonData:
    size: float
    momentum: float

    def __post_init__(self):
        if not self.size > abs(self.momentum):
            raise DomainError("horizon data requires size > |momentum|")


@dataclass(frozen=True)
class BTZParams:
    r_plus: float
    r_minus: float

    def __post_init__(self):
        if not (self.r_plus > self.r_minus >= 0.0) or self.r_plus <= 0:
            raise DomainError("BTZ radii must satisfy r+ > r- >= 0, r+ > 0")

    @property
    def mass(self):
        return self.r_plus ** 2 + self.r_minus ** 2

    @property
    def angular_momentum(self):
        return 2.0 * self.r_plus * self.r_minus

    @classmethod
    def from_horizon(cls, data: HorizonData):
        """Inversion of s = r+ + r-, m = r+ - r- (with m >= 0 enforced by
        taking |m|: the radii do not see the momentum sign)."""
        m = abs(data.momentum)
        return cls((data.size + m) / 2.0, (data.size - m) / 2.0)


# ---------------------------------------------------------------------------
# horizon invariants
# ---------------------------------------------------------------------------

def horizon_invariants(g_left, g_right):
    """size = (l_L + l_R)/2, momentum = (l_L - l_R)/2."""
    try:
        ll = iso.translation_length(g_left)
        lr = iso.translation_length(g_right)
    except WrongClassError as exc:
        raise DegenerateHorizonError(
            "parabolic peripheral side: the horizon degenerates") from exc
    if ll == 0.0 or lr == 0.0:
        raise DegenerateHorizonError(
            "parabolic peripheral side: the horizon degenerates")
    return HorizonData((ll + lr) / 2.0, (ll - lr) / 2.0)


def t_symmetry(data: HorizonData):
    """Exchanging the holonomy components fixes the size and negates the
    momentum."""
    return HorizonData(data.size, -data.momentum)


# ---------------------------------------------------------------------------
# rectangles
# ---------------------------------------------------------------------------

def _orbit_boundary_samples(h: teich.Holonomy, depth):
    """Fixed points of the generators pushed around by reduced words."""
    base = []
    for m in h.gens.values():
        k = iso.classify(m)
        base.extend(k.fixed_points)
    mats = [np.eye(2)]
    frontier = [(np.eye(2), None)]
    names = list(h.gens)
    for _ in range(depth):
        nxt = []
        for mat, last in frontier:
            for n in names:
                for e in (1, -1):
                    if last == (n, -e):
                        continue
                    m2 = iso.normalize(
                        mat @ (h.gens[n] if e > 0 else iso.inv(h.gens[n])))
                    nxt.append((m2, (n, e)))
                    mats.append(m2)
        frontier = nxt
    out = []
    for m in mats:
        for p in base:
            out.append(iso.apply_boundary(m, p))
    return out


def _select_side(g, samples, tol=1e-7):
    k = iso.classify(g)
    if k.kind == "parabolic":
        return k.fixed_points[0]
    if k.kind != "hyperbolic":
        raise DomainError("peripheral holonomy must be hyperbolic or parabolic")
    att, rep = k.fixed_points
    arc1, arc2 = CircleArc(att, rep), CircleArc(rep, att)
    inhabited1 = any(arc1.contains(x, tol=tol) for x in samples)
    inhabited2 = any(arc2.contains(x, tol=tol) for x in samples)
    if inhabited1 and inhabited2:
        raise IncreaseDepthError(
            "both candidate arcs meet the sampled limit set; increase depth")
    if not inhabited1 and not inhabited2:
        raise IncreaseDepthError(
            "no limit-set samples landed near either arc; increase depth")
    return arc1 if inhabited2 else arc2


def peripheral_rectangle(g_left, g_right, h_left: teich.Holonomy,
                         h_right: teich.Holonomy, depth=10):
    """R(gamma): per side, the fixed point (parabolic) or the arc between
    the fixed points missing the sampled limit set.

    The two vertices spanning the horizon geodesic pair the attracting
    point of one side with the repelling point of the other.
    """
    side_l = _select_side(g_left, _orbit_boundary_samples(h_left, depth))
    side_r = _select_side(g_right, _orbit_boundary_samples(h_right, depth))
    vertices = ()
    if isinstance(side_l, CircleArc) and isinstance(side_r, CircleArc):
        att_l, rep_l = iso.fixed_points(g_left)
        att_r, rep_r = iso.fixed_points(g_right)
        vertices = ((att_l, rep_r), (rep_l, att_r))
    return Rectangle(side_l, side_r, vertices)


# ---------------------------------------------------------------------------
# Omega(h) membership
# ---------------------------------------------------------------------------

def _reduced_words(names, depth):
    out = []
    frontier = [((), None)]
    for _ in range(depth):
        nxt = []
        for word, last in frontier:
            for n in names:
                for e in (1, -1):
                    if last == (n, -e):
                        continue
                    w2 = word + ((n, e),)
                    nxt.append((w2, (n, e)))
                    out.append(w2)
        frontier = nxt
    return out


def omega_contains(x, h_left: teich.Holonomy, h_right: teich.Holonomy,
                   depth=8):
    """Whether no translate of x by a reduced word of length <= depth is
    causally related to x.  Conservative: deeper tests only shrink the
    domain."""
    if depth < 1:
        raise DomainError("depth must be >= 1")
    names = list(h_left.gens)
    cache_l, cache_r = {(): np.eye(2)}, {(): np.eye(2)}
    for w in _reduced_words(names, depth):
        head, tail = w[:-1], w[-1]
        n, e = tail
        gl = h_left.gens[n] if e > 0 else iso.inv(h_left.gens[n])
        gr = h_right.gens[n] if e > 0 else iso.inv(h_right.gens[n])
        cache_l[w] = iso.normalize(cache_l[head] @ gl)
        cache_r[w] = iso.normalize(cache_r[head] @ gr)
        y = cache_l[w] @ x @ iso.inv(cache_r[w])
        # fixed points of the action (e.g. the dual point of an invariant
        # plane) are fine; chronology fails on timelike/lightlike pairs
        if iso.causal_type(x, y) in ("timelike", "lightlike"):
            return False
    return True


# ---------------------------------------------------------------------------
# extremal meridians
# ---------------------------------------------------------------------------

LOWER = "lower"
UPPER = "upper"


@dataclass(frozen=True)
class MeridianChoice:
    """Per non-degenerate rectangle, an upper or lower extremal arc."""

    choices: tuple

    @property
    def is_future_convex_core_boundary(self):
        return all(c == LOWER for c in self.choices)

    @property
    def is_past_convex_core_boundary(self):
        return all(c == UPPER for c in self.choices)

    def swapped(self):
        flip = {LOWER: UPPER, UPPER: LOWER}
        return MeridianChoice(tuple(flip[c] for c in self.choices))


def extremal_meridians(rectangles):
    """All 2^k assignments over the non-degenerate orbit representatives.

    k = 0 gives the single meridian of a globally hyperbolic Omega(h).
    """
    k = sum(1 for r in rectangles if not r.degenerate)
    return [MeridianChoice(c) for c in itertools.product((LOWER, UPPER),
                                                         repeat=k)]


def meridian_vertex_records(rectangles, choice: MeridianChoice):
    """Vertex sequences of the chosen arcs (for the CLI output)."""
    out = []
    idx = 0
    for r in rectangles:
        if r.degenerate:
            out.append({"degenerate": True})
            continue
        out.append({"degenerate": False,
                    "side": choice.choices[idx],
                    "vertices": r.vertices})
        idx += 1
    return out


# ---------------------------------------------------------------------------
# BTZ metric
# ---------------------------------------------------------------------------

def btz_f(r, params: BTZParams):
    m, j = params.mass, params.angular_momentum
    return -m + r * r + j * j / (4.0 * r * r)


def btz_metric(v, r, phi, params: BTZParams):
    """Kerr-like components in (v, r, phi); fails on the horizons."""
    if r <= 0:
        raise DomainError("the BTZ chart needs r > 0")
    f = btz_f(r, params)
    if abs(f) < 1e-12:
        name = "r+" if abs(r - params.r_plus) < abs(r - params.r_minus) else "r-"
        raise CoordinateSingularityError(name)
    m, j = params.mass, params.angular_momentum
    g = np.array([[m - r * r, 0.0, -j / 2.0],
                  [0.0, 1.0 / f, 0.0],
                  [-j / 2.0, 0.0, r * r]])
    from quakebend.spacetime import MetricSample
    return MetricSample(g, "lorentzian")
