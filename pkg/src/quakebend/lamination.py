"""Finite measured geodesic laminations in the two combinatorial families.

A ``MultiCurveLam`` weights the pant curves of a decomposition; a
``TriangulationLam`` weights the edges of an ideal triangulation and
records the per-puncture spiraling signature.  Arbitrary finite
laminations occur only as realized lift families (output of
``realize_lifts``), never as user input, which keeps disjointness
decidable.

Peripheral spectra use the same star convention as the shear length
formula: every corner incidence of an edge at the puncture counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from quakebend import isometry as iso
from quakebend import teich
from quakebend.errors import DomainError, StructureError, QuakebendError


class BasePointOnLeafError(QuakebendError):
    """A base point lies on a weighted leaf; the caller must perturb."""


class UnsupportedCurveError(QuakebendError):
    """Curve outside the pant-decomposition dictionary."""


@dataclass(frozen=True)
class MultiCurveLam:
    """Weights w_j >= 0 on the interior curves z_j of a decomposition."""

    weights: tuple

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise DomainError("multicurve weights must be >= 0")

    @property
    def is_empty(self):
        return all(w == 0 for w in self.weights)

    def scaled(self, t):
        return MultiCurveLam(tuple(t * w for w in self.weights))


@dataclass(frozen=True)
class TriangulationLam:
    """Weights w_E > 0 on the edges of an ideal triangulation, plus the
    per-puncture spiraling signature."""

    triangulation: teich.IdealTriangulation
    weights: tuple
    signature: tuple  # sigma_i per puncture

    def __post_init__(self):
        if len(self.weights) != self.triangulation.num_edges:
            raise StructureError("one weight per edge")
        if any(w <= 0 for w in self.weights):
            raise DomainError("triangulation-family weights must be > 0")
        if len(self.signature) != self.triangulation.num_punctures:
            raise StructureError("one spiraling sign per puncture")
        if any(s not in (-1, 1) for s in self.signature):
            raise DomainError("signature entries must be +-1")

    @classmethod
    def from_shear(cls, sp: teich.ShearPoint, weights):
        """Lamination of the triangulation edges realized on F(s).

        The spiraling signature is opposite to the shear sign at each
        opened boundary (+1 at cusps): the left quake from the all-cusp
        point opens boundaries with negative spiraling, and F(s) is by
        definition that left-quake image for s > 0.
        """
        sig = []
        for i in range(sp.triangulation.num_punctures):
            s = sp.puncture_sum(i)
            sig.append(1 if s == 0.0 else (-1 if s > 0 else 1))
        return cls(sp.triangulation, tuple(weights), tuple(sig))

    def scaled(self, t):
        if t <= 0:
            raise DomainError("ray parameter must be positive for this family")
        return TriangulationLam(self.triangulation,
                                tuple(t * w for w in self.weights),
                                self.signature)


@dataclass(frozen=True)
class EnhancedLam:
    """Lamination with a relaxed signature eta.

    eta_i must agree with sigma_i except at cusps entered by the
    lamination, where it is free; `kinds` records the per-puncture type
    of the underlying surface.
    """

    lam: object
    eta: tuple
    kinds: tuple

    def __post_init__(self):
        spec = peripheral_spectrum(self.lam, len(self.kinds))
        sig = signature(self.lam, len(self.kinds))
        for i, (e, s, k, I) in enumerate(zip(self.eta, sig, self.kinds, spec)):
            if e not in (-1, 1):
                raise DomainError("eta entries must be +-1")
            free = (k == teich.CUSP and I != 0.0)
            if not free and e != s:
                raise StructureError(
                    f"eta must equal the spiraling signature at puncture {i}")


@dataclass(frozen=True)
class WeightedGeodesic:
    geodesic: iso.Geodesic
    weight: float


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def peripheral_spectrum(lam, num_punctures):
    """(I_{C_1}, ..., I_{C_r}): transverse mass of the peripheral loops."""
    if isinstance(lam, MultiCurveLam):
        return tuple(0.0 for _ in range(num_punctures))
    if isinstance(lam, TriangulationLam):
        out = []
        for i in range(num_punctures):
            counts = lam.triangulation.star_counts(i)
            out.append(float(sum(c * w for c, w in zip(counts, lam.weights))))
        return tuple(out)
    raise StructureError(f"unsupported lamination {type(lam)!r}")


def signature(lam, num_punctures):
    if isinstance(lam, MultiCurveLam):
        return tuple(1 for _ in range(num_punctures))
    return tuple(lam.signature)


def intersection_spectrum(curve, lam: MultiCurveLam, pd: teich.PantDecomposition):
    """I_curve(lam) for curves of the decomposition dictionary.

    Pant curves and boundary curves are disjoint from the lamination;
    each transversal z'_j, z''_j crosses z_j twice.
    """
    if not isinstance(lam, MultiCurveLam):
        raise StructureError("intersection spectrum dictionary is for multicurves")
    if curve.startswith("C"):
        idx = int(curve[1:])
        if not 0 <= idx < pd.num_boundary:
            raise UnsupportedCurveError(curve)
        return 0.0
    for prefix, crossings in (("zpp", 2), ("zp", 2), ("z", 0)):
        if curve.startswith(prefix):
            idx = int(curve[len(prefix):])
            if not 0 <= idx < pd.num_interior:
                raise UnsupportedCurveError(curve)
            return float(crossings * lam.weights[idx])
    raise UnsupportedCurveError(curve)


def enhanced_spectrum(elam: EnhancedLam, i):
    """Signed peripheral spectrum I#_{C_i} = eta_i I_{C_i}."""
    return elam.eta[i] * peripheral_spectrum(elam.lam, len(elam.kinds))[i]


def reflect(elam: EnhancedLam, i):
    """Reflection along C_i: negates the signs at i when the lamination
    reaches the puncture, otherwise the identity.  An involution."""
    spec = peripheral_spectrum(elam.lam, len(elam.kinds))
    if spec[i] == 0.0:
        return elam
    lam = elam.lam
    if isinstance(lam, TriangulationLam) and elam.kinds[i] == teich.BOUNDARY:
        sig = list(lam.signature)
        sig[i] = -sig[i]
        lam = TriangulationLam(lam.triangulation, lam.weights, tuple(sig))
    eta = list(elam.eta)
    eta[i] = -eta[i]
    return EnhancedLam(lam, tuple(eta), elam.kinds)


def in_V_c(point, lam):
    """Whether I_{C_i} < l_{C_i} strictly at every geodesic boundary."""
    if isinstance(point, teich.FNPoint):
        lengths = point.boundary_lengths
    else:
        lengths = tuple(abs(point.puncture_sum(i))
                        for i in range(point.triangulation.num_punctures))
    spec = peripheral_spectrum(lam, len(lengths))
    for I, l in zip(spec, lengths):
        if l > 0.0 and I >= l:
            return False
    return True


# ---------------------------------------------------------------------------
# geometric realization
# ---------------------------------------------------------------------------

def segment_frame(x, y):
    """Matrix F with F^{-1} x = i and F^{-1} y = i e^{d(x,y)}."""
    if abs(x - y) < 1e-14:
        raise DomainError("segment endpoints coincide")
    if abs(x.real - y.real) < 1e-13:
        geo = iso.Geodesic(x.real, iso.INF)
        if y.imag < x.imag:
            geo = iso.Geodesic(iso.INF, x.real)
    else:
        c = (abs(y) ** 2 - abs(x) ** 2) / (2.0 * (y.real - x.real))
        r = abs(x - c)
        geo = iso.Geodesic(c - r, c + r)
        m = iso.inv(geo.map_from_standard())
        if iso.apply_h2(m, y).imag < iso.apply_h2(m, x).imag:
            geo = geo.reversed()
    m = geo.map_from_standard()
    h1 = iso.apply_h2(iso.inv(m), x).imag
    return iso.normalize(m @ np.array([[math.sqrt(h1), 0.0],
                                       [0.0, 1.0 / math.sqrt(h1)]]))


def _dist_to_vertical_segment(z, h2):
    """Distance from z to the segment [i, i h2] of the imaginary axis."""
    r = abs(z)
    foot = min(max(r, 1.0), h2)
    return iso.dist_h2(z, complex(0.0, foot))


def _base_leaves(lam, h: teich.Holonomy):
    if isinstance(lam, MultiCurveLam):
        out = []
        for j, w in enumerate(lam.weights):
            if w > 0:
                out.append((iso.axis(h.curve(f"z{j}")), float(w)))
        return out
    if isinstance(lam, TriangulationLam):
        geos = h.meta.get("edge_geodesics")
        if geos is None:
            raise StructureError("holonomy lacks the placed edge geodesics; "
                                 "build it with holonomy_from_shear")
        return [(g, float(w)) for g, w in zip(geos, lam.weights)]
    raise StructureError(f"unsupported lamination {type(lam)!r}")


def _proj_vec(p):
    return np.array([1.0, 0.0]) if p == iso.INF else np.array([float(p), 1.0])


def _stabilizer_letters(lam, h):
    """Per base leaf, the alphabet letter generating its setwise
    stabilizer (None when the stabilizer is trivial, as for the
    cusp-to-cusp / spiraling leaves of the triangulation family)."""
    if isinstance(lam, MultiCurveLam):
        return [f"z{j}" for j, w in enumerate(lam.weights) if w > 0]
    return [None] * len(lam.weights)


def _angles(vecs):
    """RP^1 coordinate in [0, pi) of an (n, 2) array of direction vectors."""
    th = np.arctan2(vecs[:, 1], vecs[:, 0])
    return np.mod(th, math.pi)


class LiftFamily:
    """All translates of a finite lamination's leaves up to a word depth.

    Enumerates the reduced words of the free generating set once (the
    expensive part) and answers segment-crossing queries cheaply, so
    cocycles along many segments share one realization.  Leaves are
    indexed by canonical coset representatives of their stabilizers
    (words not ending in the stabilizing letter), so distinct entries
    are distinct geodesics and every leaf is produced by its shortest
    word.
    """

    MAX_WORDS = 6_000_000

    def __init__(self, lam, h: teich.Holonomy, depth=12):
        if depth < 1:
            raise DomainError("depth must be >= 1")
        self.depth = depth
        base = _base_leaves(lam, h)
        self.empty = not base
        if self.empty:
            return
        k = len(h.gens)
        est = 2 * k * ((2 * k - 1) ** (depth - 1)) if k else 1
        if est > self.MAX_WORDS:
            raise DomainError(
                f"depth {depth} enumerates ~{est} words on a rank-{k} group; "
                "reduce the depth")
        names = list(h.gens)
        gen_list = []
        for n in names:
            gen_list.append(h.gens[n])
            gen_list.append(iso.inv(h.gens[n]))
        words = [np.eye(2)[None, :, :]]
        lasts = [np.array([-1])]
        for _ in range(depth):
            prev, pl = words[-1], lasts[-1]
            blocks, bl = [], []
            for gi, g in enumerate(gen_list):
                mask = pl != (gi ^ 1)  # no immediate backtracking
                if not mask.any():
                    continue
                blocks.append(np.einsum("nij,jk->nik", prev[mask], g))
                bl.append(np.full(int(mask.sum()), gi))
            words.append(np.concatenate(blocks))
            lasts.append(np.concatenate(bl))

        stab = _stabilizer_letters(lam, h)
        ends_m, ends_p, ws, lv = [], [], [], []
        for (geo, w), stab_name in zip(base, stab):
            vm, vp = _proj_vec(geo.p_minus), _proj_vec(geo.p_plus)
            if stab_name in names:
                gi = 2 * names.index(stab_name)
                forbidden = (gi, gi + 1)
            else:
                forbidden = ()
            for level, (block, bl) in enumerate(zip(words, lasts)):
                if forbidden:
                    keep = (bl != forbidden[0]) & (bl != forbidden[1])
                    block = block[keep]
                ends_m.append(block @ vm)
                ends_p.append(block @ vp)
                ws.append(np.full(len(block), w))
                lv.append(np.full(len(block), level))
        self.ends_minus = np.concatenate(ends_m)
        self.ends_plus = np.concatenate(ends_p)
        self.weights = np.concatenate(ws)
        self.levels = np.concatenate(lv)

    def crossings(self, x, y, tol=1e-9, on_leaf="raise"):
        """Leaves crossing [x, y], ordered along it, oriented with x on
        the left; also returns the depth-convergence flag.

        A segment endpoint sitting on a leaf raises by default; the
        cocycle layers pass on_leaf='include' and apply the half-weight
        rule themselves.
        """
        if self.empty or abs(x - y) < 1e-14:
            return [], True
        frame = segment_frame(x, y)
        fi = iso.inv(frame)
        seg_len = math.log(iso.apply_h2(fi, y).imag)

        um = self.ends_minus @ fi.T
        up = self.ends_plus @ fi.T
        with np.errstate(divide="ignore", invalid="ignore"):
            vm = um[:, 0] / um[:, 1]
            vp = up[:, 0] / up[:, 1]
        finite = np.isfinite(vm) & np.isfinite(vp) & (um[:, 1] != 0) & (up[:, 1] != 0)
        prod = np.where(finite, vm * vp, 1.0)
        cross = finite & (prod < 0)
        if not cross.any():
            return [], True
        t = 0.5 * np.log(-prod[cross])
        near_end = (np.abs(t) <= tol) | (np.abs(t - seg_len) <= tol)
        if near_end.any() and on_leaf == "raise":
            raise BasePointOnLeafError(
                "a segment endpoint lies on a weighted leaf")
        inside = ((t > 0) & (t < seg_len)) | near_end
        idx = np.flatnonzero(cross)[inside]
        t = t[inside]

        order = np.argsort(t, kind="stable")
        leaves = []
        for i in idx[order]:
            pm = self._endpoint(self.ends_minus[i])
            pp = self._endpoint(self.ends_plus[i])
            geo = iso.Geodesic(pm, pp)
            if geo.side(x) < 0:
                geo = geo.reversed()
            leaves.append(WeightedGeodesic(geo, float(self.weights[i])))
        converged = bool(np.all(self.levels[idx] < self.depth))
        return leaves, converged

    @staticmethod
    def _endpoint(vec):
        if abs(vec[1]) < 1e-13 * abs(vec[0]):
            return iso.INF
        return float(vec[0] / vec[1])


def realize_lifts(lam, h: teich.Holonomy, x, y, depth=12, tol=1e-9):
    """All lifts of the weighted leaves crossing the segment [x, y].

    Convenience wrapper over `LiftFamily`; callers realizing many
    segments against one lamination should hold a LiftFamily instead.
    """
    return LiftFamily(lam, h, depth).crossings(x, y, tol=tol)


def leaves_pairwise_disjoint(leaves, tol=1e-8):
    """Endpoint-separation test for a realized leaf family.

    Works in the uniform angle chart of the circle (tol is angular).
    Leaves sharing an ideal endpoint within tol (asymptotic leaves,
    e.g. two lifts spiraling into the same boundary point) count as
    disjoint.
    """
    two_pi = 2.0 * math.pi

    def angle(p):
        return math.pi if p == iso.INF else 2.0 * math.atan(p)

    pairs = [(angle(l.geodesic.p_minus), angle(l.geodesic.p_plus))
             for l in leaves]
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            a1, a2 = pairs[i]
            span = (a2 - a1) % two_pi
            inside = []
            shared = False
            for th in pairs[j]:
                u = (th - a1) % two_pi
                if min(u, two_pi - u, abs(u - span)) < tol:
                    shared = True
                    break
                inside.append(u < span)
            if shared:
                continue
            if inside[0] != inside[1]:
                return False
    return True
