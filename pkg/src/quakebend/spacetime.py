"""Flat regular domains, the one-geodesic local model, and the
Wick-rotation / rescaling maps to H3, de Sitter and anti-de Sitter.

The local model is the future of the spacelike segment [0, a0 v0] in
Minkowski 3-space, charted by cosmological time T, the level-surface
arc coordinates (u, zeta); the chart is C^{1,1} with three regimes
(hyperboloid wing, flat band over the singular segment, rotated wing),
with the band at 0 <= zeta <= a0 / T.  All metric samples are reported
in the (T-or-tau, zeta, u) coordinate order of this chart; inside the
band the literal chart components pick up the T zeta cross terms of
zeta = arc/T, which vanish on the seams.

Setting a0 = +inf drops the third regime (the boundary-ray model).

Rescalings directed by the cosmological-time gradient are implemented
as tensor operations g = alpha h + (alpha +- beta) dT x dT, exact in
any chart where |dT|_h = -1; the universal function pairs are
(1/(T^2-1), 1/(T^2-1)^2) for the Wick rotation to H3 (T > 1),
(1/(1-T^2), 1/(1-T^2)^2) to de Sitter (T < 1) and
(1/(1+T^2), 1/(1+T^2)^2) to anti-de Sitter (any T > 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from quakebend import isometry as iso
from quakebend import teich
from quakebend import lamination as lm
from quakebend.errors import DomainError, StructureError

INF = math.inf


@dataclass(frozen=True)
class LocalPoint:
    """Point (T, u, zeta) of the one-geodesic local model with weight a0."""

    T: float
    u: float
    zeta: float
    alpha0: float = 1.0

    def __post_init__(self):
        if self.T <= 0:
            raise DomainError("cosmological time must be positive")
        if not (self.alpha0 > 0):
            raise DomainError("the model weight must be positive (inf allowed)")

    @property
    def regime(self):
        if self.zeta < 0:
            return 1
        if self.alpha0 == INF or self.zeta <= self.alpha0 / self.T:
            return 2
        return 3


@dataclass(frozen=True)
class MetricSample:
    """Symmetric 3x3 metric components in the (T-or-tau, zeta, u) frame."""

    components: np.ndarray
    signature: str  # 'lorentzian' | 'riemannian'

    def __post_init__(self):
        g = np.asarray(self.components, dtype=float)
        if g.shape != (3, 3) or not np.allclose(g, g.T, atol=1e-12):
            raise StructureError("metric sample must be symmetric 3x3")
        eig = np.linalg.eigvalsh(g)
        negs = int(np.sum(eig < 0))
        want = 1 if self.signature == "lorentzian" else 0
        if negs != want:
            raise StructureError(
                f"{self.signature} sample has {negs} negative directions")


# ---------------------------------------------------------------------------
# flat local model
# ---------------------------------------------------------------------------

def flat_embedding(p: LocalPoint):
    """Minkowski 3-space point of the chart (T, u, zeta)."""
    T, u, z, a0 = p.T, p.u, p.zeta, p.alpha0
    if p.regime == 1:
        return T * np.array([math.cosh(u) * math.cosh(z),
                             math.sinh(u) * math.cosh(z),
                             math.sinh(z)])
    if p.regime == 2:
        return T * np.array([math.cosh(u), math.sinh(u), z])
    zp = z - a0 / T
    return T * np.array([math.cosh(u) * math.cosh(zp),
                         math.sinh(u) * math.cosh(zp),
                         math.sinh(zp)]) + np.array([0.0, 0.0, a0])


def flat_metric(p: LocalPoint):
    """Flat spacetime metric in the chart, continuous across the seams.

    On the wings the classical warped form diag(-1, T^2, T^2 ch^2);
    inside the band the zeta = arc/T chart adds the cross terms
    (zeta^2) dT^2 + 2 T zeta dT dzeta that vanish on both seams.
    """
    T, z = p.T, p.zeta
    if p.regime == 1:
        g = np.diag([-1.0, T * T, T * T * math.cosh(z) ** 2])
    elif p.regime == 2:
        g = np.array([[-1.0 + z * z, T * z, 0.0],
                      [T * z, T * T, 0.0],
                      [0.0, 0.0, T * T]])
    else:
        a0 = p.alpha0
        zp = z - a0 / T
        g = np.array([[-1.0 + (a0 / T) ** 2, a0, 0.0],
                      [a0, T * T, 0.0],
                      [0.0, 0.0, T * T * math.cosh(zp) ** 2]])
    return MetricSample(g, "lorentzian")


def flat_gauss_map(p: LocalPoint):
    """Unit normal direction N(T, u, zeta): depends only on (u, zeta)."""
    T, u, z, a0 = p.T, p.u, p.zeta, p.alpha0
    if p.regime == 1:
        return np.array([math.cosh(u) * math.cosh(z),
                         math.sinh(u) * math.cosh(z), math.sinh(z)])
    if p.regime == 2:
        return np.array([math.cosh(u), math.sinh(u), 0.0])
    zp = z - a0 / T
    return np.array([math.cosh(u) * math.cosh(zp),
                     math.sinh(u) * math.cosh(zp), math.sinh(zp)])


def local_model_ct(q, alpha0=1.0):
    """Cosmological time of a Minkowski point over the segment
    [0, alpha0 v0], v0 = (0, 0, 1)."""
    q = np.asarray(q, dtype=float)
    s = min(max(q[2], 0.0), alpha0) if alpha0 != INF else max(q[2], 0.0)
    d = q - np.array([0.0, 0.0, s])
    val = -(-d[0] ** 2 + d[1] ** 2 + d[2] ** 2)
    if val <= 0 or d[0] <= 0:
        raise DomainError("point is not in the open future of the segment")
    return math.sqrt(val)


# ---------------------------------------------------------------------------
# rescaling machinery
# ---------------------------------------------------------------------------

def wick_rescale(sample: MetricSample, alpha, beta):
    """Riemannian Wick rotation directed by grad T: the vertical norm
    flips sign and scales by beta, the horizontal part by alpha."""
    h = np.asarray(sample.components, dtype=float)
    g = alpha * h.copy()
    g[0, 0] += alpha + beta
    return MetricSample(g, "riemannian")


def lorentz_rescale(sample: MetricSample, alpha, beta):
    """Lorentzian rescaling directed by grad T."""
    h = np.asarray(sample.components, dtype=float)
    g = alpha * h.copy()
    g[0, 0] += alpha - beta
    return MetricSample(g, "lorentzian")


def wick_functions(T):
    if T <= 1.0:
        raise DomainError("the Wick rotation needs T > 1")
    return 1.0 / (T * T - 1.0), 1.0 / (T * T - 1.0) ** 2


def ds_functions(T):
    if not 0.0 < T < 1.0:
        raise DomainError("the de Sitter rescaling needs 0 < T < 1")
    return 1.0 / (1.0 - T * T), 1.0 / (1.0 - T * T) ** 2


def ads_functions(T):
    if T <= 0.0:
        raise DomainError("the AdS rescaling needs T > 0")
    return 1.0 / (1.0 + T * T), 1.0 / (1.0 + T * T) ** 2


# ---------------------------------------------------------------------------
# Wick rotation into H3
# ---------------------------------------------------------------------------

def wick_rotate(p: LocalPoint):
    """The C^1 developing map into H3 (unit timelike Minkowski-4
    vectors); T > 1 required."""
    T, u, z, a0 = p.T, p.u, p.zeta, p.alpha0
    if T <= 1.0:
        raise DomainError("the Wick rotation needs T > 1")
    d = math.atanh(1.0 / T)
    chd, shd = math.cosh(d), math.sinh(d)
    if p.regime == 1:
        base = np.array([math.cosh(z) * math.cosh(u),
                         math.cosh(z) * math.sinh(u), math.sinh(z), 0.0])
        normal = np.array([0.0, 0.0, 0.0, 1.0])
    elif p.regime == 2:
        ang = z * T  # z / tanh(d)
        base = np.array([math.cosh(u), math.sinh(u), 0.0, 0.0])
        normal = np.array([0.0, 0.0, math.sin(ang), math.cos(ang)])
    else:
        zp = z - a0 / T
        base = np.array([math.cosh(zp) * math.cosh(u),
                         math.cosh(zp) * math.sinh(u),
                         math.sinh(zp) * math.cos(a0),
                         -math.sinh(zp) * math.sin(a0)])
        normal = np.array([0.0, 0.0, math.sin(a0), math.cos(a0)])
    return chd * base + shd * normal


def wick_metric(p: LocalPoint):
    """Expected pulled-back metric of the Wick map: the flat sample
    rescaled by the universal functions."""
    return wick_rescale(flat_metric(p), *wick_functions(p.T))


def hyperbolic_boundary_distance(T):
    """Distance from the bent boundary of the H3 image at level T."""
    if T <= 1.0:
        raise DomainError("needs T > 1")
    return math.atanh(1.0 / T)


# ---------------------------------------------------------------------------
# de Sitter rescaling
# ---------------------------------------------------------------------------

def rescale_ds(p: LocalPoint):
    """De Sitter metric sample at p (0 < T < 1): constant curvature +1."""
    return lorentz_rescale(flat_metric(p), *ds_functions(p.T))


def ds_cosmological_time(T):
    """CT of the rescaled spacetime: tau = arctanh(T)."""
    if not 0.0 < T < 1.0:
        raise DomainError("needs 0 < T < 1")
    return math.atanh(T)


# ---------------------------------------------------------------------------
# anti-de Sitter map
# ---------------------------------------------------------------------------

_P0 = np.array([[0.0, -1.0], [1.0, 0.0]])   # embedded point of l0 at u = 0
_V0 = np.array([[1.0, 0.0], [0.0, -1.0]])   # unit tangent of l0 there
_X0 = np.array([[0.0, 1.0], [1.0, 0.0]])    # translation generator along l0


def _leaf_point(u):
    return math.cosh(u) * _P0 + math.sinh(u) * _V0


def ads_map(p: LocalPoint):
    """The C^1 developing map into X_{-1} = PSL(2, R), any T > 0.

    Join formula cos(tau) x^- + sin(tau) x^+ with tau = arctan T and a
    future-directed unit-determinant lift, asserted at runtime.
    """
    T, u, z, a0 = p.T, p.u, p.zeta, p.alpha0
    tau = math.atan(T)
    c, s = math.cos(tau), math.sin(tau)
    if p.regime == 1:
        x_plus = math.cosh(z) * _leaf_point(u) - math.sinh(z) * _X0
        x_minus = np.eye(2)
    elif p.regime == 2:
        x_plus = _leaf_point(u)
        x_minus = iso.expm2(-z * T * _X0)
    else:
        zp = z - a0 / T
        half = iso.expm2(-0.5 * a0 * _X0)
        wing = math.cosh(zp) * _leaf_point(u) - math.sinh(zp) * _X0
        x_plus = half @ wing @ half
        x_minus = iso.expm2(-a0 * _X0)
    out = c * x_minus + s * x_plus
    if abs(iso.det(out) - 1.0) > 1e-10:
        raise DomainError("join of the lifted pair left SL(2, R)")
    if iso.tr(x_minus) <= 0:
        raise DomainError("x^- lift must have positive trace")
    v = -s * x_minus + c * x_plus
    if not iso.is_future_directed(out, v):
        raise DomainError("the lifted segment is not future-directed")
    return out


def ads_metric(p: LocalPoint):
    """Expected pulled-back metric of the AdS map: constant curvature -1."""
    return lorentz_rescale(flat_metric(p), *ads_functions(p.T))


def ads_cosmological_time(T):
    """tau = arctan(T) on the past part."""
    if T <= 0:
        raise DomainError("needs T > 0")
    return math.atan(T)


# ---------------------------------------------------------------------------
# CT level-surface geometry
# ---------------------------------------------------------------------------

def ct_level_geometry(a, kappa):
    """(scale factor, graft-weight factor) of the CT level surface at a.

    The level surface at time a is (scale) Gr_{lambda / (graft)}(F):
    (a, a) for flat, (sinh a, tanh a) for +1, (sin a, tan a) for -1 --
    returned as (scale, 1/graft-denominator) pairs (a, 1/a),
    (sinh a, 1/tanh a), (sin a, 1/tan a).
    """
    if kappa == 0:
        if a <= 0:
            raise DomainError("flat CT level needs a > 0")
        return a, 1.0 / a
    if kappa == 1:
        if a <= 0:
            raise DomainError("dS CT level needs a > 0")
        return math.sinh(a), 1.0 / math.tanh(a)
    if kappa == -1:
        if not 0.0 < a < math.pi / 2.0:
            raise DomainError("AdS CT level needs 0 < a < pi/2")
        return math.sin(a), 1.0 / math.tan(a)
    raise DomainError("kappa must be 0, +1 or -1")


# ---------------------------------------------------------------------------
# flat translation cocycle and regular domains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineIsom3:
    """Isometry of Minkowski 3-space: linear part in SO+(2,1) plus a
    translation vector."""

    linear: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        eta = np.diag([-1.0, 1.0, 1.0])
        scale = max(1.0, float(np.sum(self.linear * self.linear)))
        if not np.allclose(self.linear.T @ eta @ self.linear, eta,
                           atol=1e-10 * scale):
            raise StructureError("linear part must preserve the Minkowski form")

    def compose(self, other):
        return AffineIsom3(self.linear @ other.linear,
                           self.translation + self.linear @ other.translation)

    def apply(self, v):
        return self.linear @ v + self.translation


def _leaf_normal_toward(geo: iso.Geodesic, target):
    """Unit spacelike Minkowski normal of the leaf's plane pointing to
    the side of the H2 point `target`."""
    def null_vec(b):
        if b == iso.INF:
            return np.array([1.0, 0.0, 1.0])
        return np.array([1.0 + b * b, 2.0 * b, b * b - 1.0]) / 2.0

    a = null_vec(geo.p_minus)
    b = null_vec(geo.p_plus)
    w = np.diag([-1.0, 1.0, 1.0]) @ np.cross(a, b)
    w = w / math.sqrt(abs(w @ np.diag([-1.0, 1.0, 1.0]) @ w))
    t = iso.h2_to_hyperboloid(target)
    side = float(w @ np.diag([-1.0, 1.0, 1.0]) @ t)
    return w if side > 0 else -w


def translation_part(fam: lm.LiftFamily, x0, y):
    """s(y) relative to s(x0) = 0: sum of weighted unit normals of the
    crossed leaves, each pointing toward y."""
    leaves, converged = fam.crossings(x0, y)
    out = np.zeros(3)
    for leaf in leaves:
        out += leaf.weight * _leaf_normal_toward(leaf.geodesic, y)
    return out, converged


def flat_holonomy(point, lam, depth=8, base_point=complex(0.137, 1.03), pd=None):
    """Affine holonomy letter map of the flat spacetime of (F, lambda).

    Returns (letters, converged): letters maps each alphabet letter of
    the underlying holonomy to an AffineIsom3; words compose through
    AffineIsom3.compose.
    """
    if isinstance(point, teich.FNPoint):
        if pd is None:
            raise StructureError("FN flat holonomy needs the decomposition")
        h = teich.holonomy_from_fn(pd, point)
    elif isinstance(point, teich.ShearPoint):
        h = teich.holonomy_from_shear(point)
    else:
        h = point
    fam = lm.LiftFamily(lam, h, depth=depth)
    letters = {}
    flags = []
    for name, m in h.alphabet.items():
        y = iso.apply_h2(m, base_point)
        s, ok = translation_part(fam, base_point, y)
        flags.append(ok)
        letters[name] = AffineIsom3(iso.psl2r_to_so21(m), s)
    return letters, all(flags)


def affine_word(letters, word):
    out = AffineIsom3(np.eye(3), np.zeros(3))
    for name, e in word:
        g = letters[name]
        if e < 0:
            li = np.linalg.inv(g.linear)
            g = AffineIsom3(li, -li @ g.translation)
        for _ in range(abs(e)):
            out = out.compose(g)
    return out


def regular_domain_contains(q, fam: lm.LiftFamily, h: teich.Holonomy,
                            base_point=complex(0.137, 1.03), depth=4):
    """Sampled membership test of the regular domain of (F, lambda).

    True iff q lies strictly in the future of s(x) + x-perp for every
    sampled stratum point x (orbit points of the base point to the
    given word depth plus midpoints between consecutive leaf
    crossings); conservative and monotone in depth.
    """
    q = np.asarray(q, dtype=float)
    samples = [base_point]
    names = list(h.gens)
    frontier = [(np.eye(2), None)]
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
                    samples.append(iso.apply_h2(m2, base_point))
        frontier = nxt
    # midpoints between consecutive crossings along segments to orbit points
    mids = []
    for y in samples[1:16]:
        leaves, _ = fam.crossings(base_point, y)
        if leaves:
            frame = lm.segment_frame(base_point, y)
            heights = []
            for leaf in leaves:
                u = iso.apply_boundary(iso.inv(frame), leaf.geodesic.p_minus)
                v = iso.apply_boundary(iso.inv(frame), leaf.geodesic.p_plus)
                heights.append(math.sqrt(abs(u * v)))
            heights = sorted(heights)
            for h1, h2 in zip(heights, heights[1:]):
                mids.append(iso.apply_h2(frame, 1j * math.sqrt(h1 * h2)))
    for x in samples + mids:
        s, _ = translation_part(fam, base_point, x)
        xv = iso.h2_to_hyperboloid(x)
        gap = float((q - s) @ np.diag([-1.0, 1.0, 1.0]) @ xv)
        if gap >= 0:
            return False
    return True
