"""Teichmueller spaces of finite-type surfaces in two coordinate systems.

Fenchel-Nielsen (length/twist) coordinates over a pant decomposition and
shear coordinates over an ideal triangulation, both with explicit
holonomy construction into PSL(2, R).

Holonomy conventions
--------------------
Each hyperbolic pant is realized by the trace normal form

    C1 = [[x1, -1], [1, 0]],   C2 = [[0, xi], [-1/xi, x2]],   C3 = (C1 C2)^{-1}

with x_i = -2 cosh(l_i / 2) and xi = -exp(l_3 / 2), so C1 C2 C3 = Id
holds exactly and cusps (l_i = 0) come out parabolic with trace -2.  The
pant interior lies on the *right* of each boundary element's translation
direction (asserted at build time).  A cuff frame N maps the oriented
geodesic (0, oo) onto the cuff axis, repelling to attracting fixed
point, with N(i) at the foot of the perpendicular toward the cyclically
next cuff; gluing two cuffs with twist t composes

    N . A(-t) . J . N'^{-1},      J = [[0, -1], [1, 0]],

which realizes the rule that for t > 0 the two sides of the curve
translate to the *left* relative to each other.  Zero twist matches the
perpendicular feet.

Shear holonomy follows the ideal-triangulation developing recipe with
turn matrix L = [[-1, -1], [1, 0]] (cyclic rotation of the standard
triangle (0, oo, -1)) and edge matrix F(s) = [[0, -e^{s/2}], [e^{-s/2}, 0]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from quakebend import isometry as iso
from quakebend.errors import DomainError, StructureError, WrongClassError

J_FLIP = np.array([[0.0, -1.0], [1.0, 0.0]])


def _a_mat(s):
    return np.array([[math.exp(s / 2.0), 0.0], [0.0, math.exp(-s / 2.0)]])


# ---------------------------------------------------------------------------
# surface data
# ---------------------------------------------------------------------------

CUSP = "cusp"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class SurfaceType:
    genus: int
    kinds: tuple  # per-puncture: CUSP or BOUNDARY

    @property
    def punctures(self):
        return len(self.kinds)

    def __post_init__(self):
        if 2 - 2 * self.genus - self.punctures >= 0:
            raise StructureError("surface must have non-Abelian fundamental group")


@dataclass(frozen=True)
class PantDecomposition:
    """Combinatorics of a pant decomposition.

    Pants are numbered 0..num_pants-1 with cuff slots 0, 1, 2.  Interior
    curves z_j occupy two slots, boundary curves C_i one; every slot is
    used exactly once.
    """

    num_pants: int
    interior: tuple  # ((pant, slot), (pant, slot)) per z_j
    boundary: tuple  # (pant, slot) per C_i

    def __post_init__(self):
        slots = [s for pair in self.interior for s in pair] + list(self.boundary)
        expected = {(p, k) for p in range(self.num_pants) for k in range(3)}
        if sorted(slots) != sorted(expected):
            raise StructureError("every cuff slot must be used exactly once")
        n_p, r = self.num_pants, len(self.boundary)
        if (n_p - r + 2) % 2 != 0 or n_p - r + 2 < 0:
            raise StructureError("pant count incompatible with a closed-up surface")
        if len(self._components()) != 1:
            raise StructureError("gluing graph is not connected")

    def _components(self):
        parent = list(range(self.num_pants))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (p, _), (q, _) in self.interior:
            parent[find(p)] = find(q)
        return {find(p) for p in range(self.num_pants)}

    @property
    def genus(self):
        return (self.num_pants - len(self.boundary) + 2) // 2

    @property
    def num_interior(self):
        return len(self.interior)

    @property
    def num_boundary(self):
        return len(self.boundary)

    def slot_curve(self, pant, slot):
        """('z', j) or ('C', i) occupying the given cuff slot."""
        for j, pair in enumerate(self.interior):
            if (pant, slot) in pair:
                return ("z", j)
        return ("C", self.boundary.index((pant, slot)))

    @classmethod
    def once_punctured_torus(cls):
        return cls(1, (((0, 0), (0, 1)),), ((0, 2),))

    @classmethod
    def three_punctured_sphere(cls):
        return cls(1, (), ((0, 0), (0, 1), (0, 2)))

    @classmethod
    def four_punctured_sphere(cls):
        return cls(2, (((0, 2), (1, 2)),),
                   ((0, 0), (0, 1), (1, 0), (1, 1)))


@dataclass(frozen=True)
class FNPoint:
    """Fenchel-Nielsen coordinates over a pant decomposition.

    Boundary length 0 encodes a cusp; interior lengths are positive.
    """

    boundary_lengths: tuple
    interior_lengths: tuple
    twists: tuple

    def __post_init__(self):
        if any(l < 0 for l in self.boundary_lengths):
            raise DomainError("boundary lengths must be >= 0")
        if any(l <= 0 for l in self.interior_lengths):
            raise DomainError("interior curve lengths must be > 0")
        if len(self.twists) != len(self.interior_lengths):
            raise StructureError("one twist per interior curve")

    def check(self, pd: PantDecomposition):
        if (len(self.boundary_lengths) != pd.num_boundary
                or len(self.interior_lengths) != pd.num_interior):
            raise StructureError("FN point does not match the pant decomposition")

    def with_twists(self, twists):
        return FNPoint(self.boundary_lengths, self.interior_lengths, tuple(twists))


@dataclass(frozen=True)
class IdealTriangulation:
    """Ideal triangulation of (S-hat, V): triangles with glued sides.

    Side k of a triangle joins its corners k and k+1 (mod 3); gluing
    reverses orientation, matching corner k with corner k'+1.
    """

    num_triangles: int
    gluing: tuple  # ((tri, side), (tri, side)) per edge

    def __post_init__(self):
        slots = [s for pair in self.gluing for s in pair]
        expected = {(t, k) for t in range(self.num_triangles) for k in range(3)}
        if sorted(slots) != sorted(expected):
            raise StructureError("every triangle side must be glued exactly once")
        object.__setattr__(self, "_corner_orbits", self._compute_corners())

    @property
    def num_edges(self):
        return len(self.gluing)

    @property
    def num_punctures(self):
        return len(set(self._corner_orbits.values()))

    def _compute_corners(self):
        corners = [(t, c) for t in range(self.num_triangles) for c in range(3)]
        parent = {c: c for c in corners}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (t, k), (u, m) in self.gluing:
            parent[find((t, k))] = find((u, (m + 1) % 3))
            parent[find((t, (k + 1) % 3))] = find((u, m))
        reps = sorted({find(c) for c in corners})
        index = {r: i for i, r in enumerate(reps)}
        return {c: index[find(c)] for c in corners}

    def puncture_of_corner(self, tri, corner):
        return self._corner_orbits[(tri, corner)]

    def edge_endpoints(self, j):
        """Puncture indices at the two ends of edge j (may coincide)."""
        (t, k), _ = self.gluing[j]
        return (self.puncture_of_corner(t, k),
                self.puncture_of_corner(t, (k + 1) % 3))

    def star_counts(self, puncture):
        """Per-edge incidence count of the puncture (0, 1 or 2)."""
        out = []
        for j in range(self.num_edges):
            a, b = self.edge_endpoints(j)
            out.append(int(a == puncture) + int(b == puncture))
        return out

    def side_edge(self, tri, side):
        for j, pair in enumerate(self.gluing):
            if (tri, side) in pair:
                return j
        raise StructureError("unglued side")

    @classmethod
    def once_punctured_torus(cls):
        return cls(2, (((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2))))

    @classmethod
    def three_punctured_sphere(cls):
        return cls(2, (((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))))


@dataclass(frozen=True)
class ShearPoint:
    triangulation: IdealTriangulation
    shears: tuple

    def __post_init__(self):
        if len(self.shears) != self.triangulation.num_edges:
            raise StructureError("one shear per triangulation edge")

    def puncture_sum(self, i):
        """s(p_i): sum of shears over the star of the puncture, counted
        with corner multiplicity."""
        counts = self.triangulation.star_counts(i)
        return float(sum(c * s for c, s in zip(counts, self.shears)))

    def with_shears(self, shears):
        return ShearPoint(self.triangulation, tuple(shears))


@dataclass(frozen=True)
class EnhancedPoint:
    """Surface point decorated with boundary-orientation signs.

    eps_i = +1 is forced at cusps.
    """

    point: object  # FNPoint or ShearPoint
    eps: tuple

    def __post_init__(self):
        for i, e in enumerate(self.eps):
            if e not in (-1, 1):
                raise DomainError("signs must be +-1")
            if _plain_boundary_length(self.point, i) == 0.0 and e != 1:
                raise StructureError(f"eps must be +1 at the cusp {i}")


def _plain_boundary_length(point, i):
    if isinstance(point, FNPoint):
        return float(point.boundary_lengths[i])
    if isinstance(point, ShearPoint):
        return abs(point.puncture_sum(i))
    raise StructureError(f"unsupported coordinate point {type(point)!r}")


def enhanced_length(fp: EnhancedPoint, i):
    """Signed boundary length l#_i = eps_i * l_i (0 at cusps)."""
    return fp.eps[i] * _plain_boundary_length(fp.point, i)


def sign_of_enhanced(value):
    """Sign convention for enhanced lengths: the sign of 0 is +1."""
    return -1 if value < 0 else 1


# ---------------------------------------------------------------------------
# pants in normal form
# ---------------------------------------------------------------------------

def pants_matrices(l1, l2, l3):
    """Boundary holonomies (C1, C2, C3) of a hyperbolic pant.

    C1 C2 C3 = Id exactly; |tr C_k| = 2 cosh(l_k / 2), parabolic at
    cusps.  Lengths must be >= 0.
    """
    if min(l1, l2, l3) < 0:
        raise DomainError("pant boundary lengths must be >= 0")
    x1 = -2.0 * math.cosh(l1 / 2.0)
    x2 = -2.0 * math.cosh(l2 / 2.0)
    xi = -math.exp(l3 / 2.0)
    c1 = np.array([[x1, -1.0], [1.0, 0.0]])
    c2 = np.array([[0.0, xi], [-1.0 / xi, x2]])
    c3 = iso.inv(c1 @ c2)
    return c1, c2, c3


def _axis_or_point(c):
    """Axis of a hyperbolic element, or the ideal fixed point if parabolic."""
    k = iso.classify(c)
    if k.kind == "hyperbolic":
        return iso.axis(c)
    if k.kind == "parabolic":
        return k.fixed_points[0]
    raise StructureError("pant cuff holonomy is neither hyperbolic nor parabolic")


def _foot_height(axis: iso.Geodesic, target):
    """Height h such that M(i h) is the foot on `axis` of the
    perpendicular toward `target` (a Geodesic or an ideal point)."""
    minv = iso.inv(axis.map_from_standard())
    if isinstance(target, iso.Geodesic):
        u = iso.apply_boundary(minv, target.p_minus)
        v = iso.apply_boundary(minv, target.p_plus)
        if u == iso.INF or v == iso.INF or u * v <= 0:
            raise StructureError("cuff axes are not disjoint")
        return math.sqrt(u * v)
    u = iso.apply_boundary(minv, target)
    if u == iso.INF or u == 0.0:
        raise StructureError("ideal point lies on the cuff axis")
    return abs(u)


def _cuff_frame(cuffs, k):
    """Frame N with N^{-1} C_k N = A(l), pinned at the perpendicular
    foot toward the cyclically next cuff."""
    ax = iso.axis(cuffs[k])
    target = _axis_or_point(cuffs[(k + 1) % 3])
    h = _foot_height(ax, target)
    return ax.map_from_standard() @ _a_mat(math.log(h))


def _pant_side_check(cuffs):
    # pant interior must sit on the right of each translation direction
    axes = [_axis_or_point(c) for c in cuffs]
    for i, ax in enumerate(axes):
        if not isinstance(ax, iso.Geodesic):
            continue
        for j, other in enumerate(axes):
            if i == j or not isinstance(other, iso.Geodesic):
                continue
            z = iso.apply_h2(other.map_from_standard(), 1j)
            if ax.side(z) >= 0:
                raise StructureError("pant normal form lost its chirality")


# ---------------------------------------------------------------------------
# holonomy container
# ---------------------------------------------------------------------------

class Holonomy:
    """Representation of pi_1(S) into PSL(2, R) (or PSL(2, C), or pairs).

    `gens` is a free generating set used for reduced-word enumeration;
    `alphabet` extends it with derived letters so curve words stay
    short.  Words are tuples of (letter, +-1).
    """

    def __init__(self, gens, alphabet, curve_words, peripheral, meta=None):
        self.gens = dict(gens)
        self.alphabet = dict(alphabet)
        self.curve_words = dict(curve_words)
        self.peripheral = tuple(peripheral)  # curve names of C_0..C_{r-1}
        self.meta = dict(meta or {})

    @property
    def generator_names(self):
        return tuple(self.gens)

    def word(self, letters):
        """Evaluate a word: iterable of (letter, exponent)."""
        out = np.eye(2)
        for name, e in letters:
            m = self.alphabet[name]
            if e < 0:
                m = iso.inv(m)
            for _ in range(abs(e)):
                out = out @ m
        return iso.normalize(out)

    def curve(self, name):
        """Holonomy matrix of a dictionary curve (C_i, z_j, zp_j, zpp_j)."""
        return self.word(self.curve_words[name])

    def curve_names(self):
        return tuple(self.curve_words)

    def peripheral_matrix(self, i):
        return self.curve(self.peripheral[i])

    def map(self, fn):
        """New holonomy with every letter transformed by fn (e.g. a
        conjugation or a deformation); words are preserved."""
        return Holonomy({k: fn(k, m) for k, m in self.gens.items()},
                        {k: fn(k, m) for k, m in self.alphabet.items()},
                        self.curve_words, self.peripheral, self.meta)


def boundary_length(h: Holonomy, i):
    """Geodesic boundary length read from the peripheral holonomy."""
    m = h.peripheral_matrix(i)
    k = iso.classify(m)
    if k.kind == "hyperbolic":
        return k.translation_length
    if k.kind == "parabolic":
        return 0.0
    raise StructureError(
        f"peripheral holonomy of C_{i} is {k.kind}: not a structure in scope")


def puncture_kinds(point):
    """Per-puncture cusp/boundary kinds of a coordinate point."""
    if isinstance(point, FNPoint):
        return tuple(CUSP if l == 0.0 else BOUNDARY
                     for l in point.boundary_lengths)
    if isinstance(point, ShearPoint):
        return tuple(CUSP if point.puncture_sum(i) == 0.0 else BOUNDARY
                     for i in range(point.triangulation.num_punctures))
    raise StructureError(f"unsupported coordinate point {type(point)!r}")


def surface_type(obj, pd=None):
    """Partition of the punctures into cusps and geodesic boundaries."""
    if isinstance(obj, Holonomy):
        kinds = tuple(CUSP if boundary_length(obj, i) == 0.0 else BOUNDARY
                      for i in range(len(obj.peripheral)))
        return SurfaceType(obj.meta.get("genus", 0), kinds)
    if isinstance(obj, FNPoint):
        kinds = tuple(CUSP if l == 0.0 else BOUNDARY for l in obj.boundary_lengths)
        genus = pd.genus if pd is not None else 0
        return SurfaceType(genus, kinds)
    if isinstance(obj, ShearPoint):
        tri = obj.triangulation
        kinds = tuple(CUSP if obj.puncture_sum(i) == 0.0 else BOUNDARY
                      for i in range(tri.num_punctures))
        genus = (2 - tri.num_punctures + tri.num_edges - tri.num_triangles) // 2
        return SurfaceType(genus, kinds)
    raise StructureError(f"cannot type {type(obj)!r}")


# ---------------------------------------------------------------------------
# Fenchel-Nielsen holonomy
# ---------------------------------------------------------------------------

def _curve_length(pd, fn, pant, slot):
    kind, idx = pd.slot_curve(pant, slot)
    return (fn.interior_lengths[idx] if kind == "z"
            else fn.boundary_lengths[idx])


def holonomy_from_fn(pd: PantDecomposition, fn: FNPoint) -> Holonomy:
    """Holonomy of F(l, t): normalized pants glued along the interior
    curves with the stated twist convention."""
    fn.check(pd)

    local_cuffs = []
    frames = []
    for p in range(pd.num_pants):
        ls = [_curve_length(pd, fn, p, k) for k in range(3)]
        cuffs = pants_matrices(*ls)
        _pant_side_check(cuffs)
        local_cuffs.append(cuffs)
        frames.append([_cuff_frame(cuffs, k) if ls[k] > 0 else None
                       for k in range(3)])

    def edge_transition(j, src, dst):
        t = fn.twists[j]
        (p, k) = src
        (q, m) = dst
        return iso.normalize(frames[p][k] @ _a_mat(-t) @ J_FLIP @ iso.inv(frames[q][m]))

    # BFS placements over a spanning tree of the gluing graph
    placement = {0: np.eye(2)}
    tree_edges = set()
    queue = [0]
    while queue:
        p = queue.pop(0)
        for j, (a, b) in enumerate(pd.interior):
            for src, dst in ((a, b), (b, a)):
                if src[0] == p and dst[0] not in placement:
                    placement[dst[0]] = iso.normalize(
                        placement[p] @ edge_transition(j, src, dst))
                    tree_edges.add(j)
                    queue.append(dst[0])

    def placed(p, mat):
        g = placement[p]
        return iso.normalize(g @ mat @ iso.inv(g))

    # primary/secondary slot per edge, spreading secondaries so every
    # pant keeps an eliminable letter for its product relation
    secondary_count = [0] * pd.num_pants
    edge_sides = []
    for a, b in pd.interior:
        if secondary_count[a[0]] < secondary_count[b[0]]:
            a, b = b, a
        edge_sides.append((a, b))
        secondary_count[b[0]] += 1

    # letters: one per interior curve (primary slot), one per boundary
    # curve, one connector per non-tree edge
    alphabet = {}
    for j, (a, b) in enumerate(edge_sides):
        alphabet[f"z{j}"] = placed(a[0], local_cuffs[a[0]][a[1]])
    for i, (p, k) in enumerate(pd.boundary):
        alphabet[f"C{i}"] = placed(p, local_cuffs[p][k])
    for j, (a, b) in enumerate(edge_sides):
        if j in tree_edges:
            continue
        alphabet[f"b{j}"] = iso.normalize(
            placement[a[0]] @ edge_transition(j, a, b) @ iso.inv(placement[b[0]]))

    # derived words: secondary slot of edge j is b_j^{-1} z_j^{-1} b_j
    slot_word = {}
    for j, (a, b) in enumerate(edge_sides):
        slot_word[a] = ((f"z{j}", +1),)
        if j in tree_edges:
            slot_word[b] = ((f"z{j}", -1),)
        else:
            slot_word[b] = ((f"b{j}", -1), (f"z{j}", -1), (f"b{j}", +1))
    for i, (p, k) in enumerate(pd.boundary):
        slot_word[(p, k)] = ((f"C{i}", +1),)

    # free generators: eliminate one letter per pant via C1 C2 C3 = Id
    eliminated = set()
    for p in range(pd.num_pants):
        candidates = []
        for k in (2, 1, 0):
            lw = slot_word[(p, k)]
            if len(lw) == 1 and lw[0][1] == +1 and lw[0][0] not in eliminated:
                candidates.append(lw[0][0])
        boundary_first = sorted(candidates,
                                key=lambda n: (not n.startswith("C"), n))
        if not boundary_first:
            raise StructureError("pant decomposition admits no free basis here")
        eliminated.add(boundary_first[0])
    gens = {n: alphabet[n] for n in alphabet if n not in eliminated}

    def inverse_word(w):
        return tuple((n, -e) for n, e in reversed(w))

    curve_words = {}
    for i in range(pd.num_boundary):
        curve_words[f"C{i}"] = ((f"C{i}", +1),)
    for j in range(pd.num_interior):
        curve_words[f"z{j}"] = ((f"z{j}", +1),)
    # z'_j crosses z_j exactly twice (two seam arcs glued across the
    # curve); z''_j is its image under a Dehn twist along z_j, i.e. a
    # z_j letter inserted at each crossing
    for j, (a, b) in enumerate(edge_sides):
        zj, bj = (f"z{j}", +1), (f"b{j}", +1)
        if a[0] == b[0]:
            # self-gluing: both crossings have the same sign
            curve_words[f"zp{j}"] = (zj, bj, bj)
            curve_words[f"zpp{j}"] = (zj, bj, zj, bj, zj)
        else:
            u = slot_word[(a[0], (a[1] + 1) % 3)]
            v = slot_word[(b[0], (b[1] + 1) % 3)]
            cross = (bj,) if j not in tree_edges else ()
            back = inverse_word(cross)
            curve_words[f"zp{j}"] = u + cross + v + back
            curve_words[f"zpp{j}"] = (u + cross + (zj,) + v + back
                                      + ((f"z{j}", -1),))

    peripheral = tuple(f"C{i}" for i in range(pd.num_boundary))
    return Holonomy(gens, alphabet, curve_words, peripheral,
                    meta={"genus": pd.genus, "coords": "fn"})


# ---------------------------------------------------------------------------
# shear holonomy
# ---------------------------------------------------------------------------

_L_TURN = np.array([[-1.0, -1.0], [1.0, 0.0]])  # 0 -> oo -> -1 -> 0


def _f_edge(s):
    return np.array([[0.0, -math.exp(s / 2.0)], [math.exp(-s / 2.0), 0.0]])


def holonomy_from_shear(sp: ShearPoint) -> Holonomy:
    """Holonomy of F(s): ideal triangles glued with shears.

    Boundary lengths satisfy l_{C_i} = |s(p_i)| with s(p_i) the shear
    sum over the star of p_i counted with corner multiplicity; cusps
    occur exactly at s(p_i) = 0.
    """
    tri = sp.triangulation
    shears = sp.shears

    def transition(t, k, u, m, j):
        # chart change crossing edge j from (t, side k) into (u, side m)
        turn_out = np.linalg.matrix_power(_L_TURN, k % 3)
        turn_in = np.linalg.matrix_power(_L_TURN, (-m) % 3)
        return iso.normalize(turn_out @ _f_edge(shears[j]) @ turn_in)

    placement = {0: np.eye(2)}
    tree_edges = set()
    queue = [0]
    while queue:
        t = queue.pop(0)
        for j, ((a, k), (b, m)) in enumerate(tri.gluing):
            for (t1, k1), (t2, k2) in (((a, k), (b, m)), ((b, m), (a, k))):
                if t1 == t and t2 not in placement:
                    placement[t2] = iso.normalize(
                        placement[t] @ transition(t1, k1, t2, k2, j))
                    tree_edges.add(j)
                    queue.append(t2)

    alphabet = {}
    gens = {}
    for j, ((a, k), (b, m)) in enumerate(tri.gluing):
        if j in tree_edges:
            continue
        name = f"g{j}"
        mat = iso.normalize(placement[a] @ transition(a, k, b, m, j)
                            @ iso.inv(placement[b]))
        alphabet[name] = mat
        gens[name] = mat

    # peripheral loops: walk the corner fan around each puncture
    def peripheral_word(puncture):
        start = None
        for t in range(tri.num_triangles):
            for c in range(3):
                if tri.puncture_of_corner(t, c) == puncture:
                    start = (t, c)
                    break
            if start:
                break
        mat = np.eye(2)
        t, c = start
        while True:
            j = tri.side_edge(t, c)
            (a, k), (b, m) = tri.gluing[j]
            (u, mm) = (b, m) if (a, k) == (t, c) else (a, k)
            mat = mat @ transition(t, c, u, mm, j)
            t, c = u, (mm + 1) % 3
            if (t, c) == start:
                break
        g0 = placement[start[0]]
        return iso.normalize(g0 @ mat @ iso.inv(g0))

    curve_words = {}
    peripheral = []
    for i in range(tri.num_punctures):
        name = f"C{i}"
        alphabet[name] = peripheral_word(i)
        curve_words[name] = ((name, +1),)
        peripheral.append(name)

    edge_geodesics = []
    for j, ((t, k), _) in enumerate(tri.gluing):
        chart = iso.normalize(placement[t] @ np.linalg.matrix_power(_L_TURN, k % 3))
        edge_geodesics.append(iso.transform_geodesic(chart, iso.Geodesic(0.0, iso.INF)))

    genus = (2 - tri.num_punctures + tri.num_edges - tri.num_triangles) // 2
    return Holonomy(gens, alphabet, curve_words, peripheral,
                    meta={"genus": genus, "coords": "shear",
                          "placements": placement,
                          "edge_geodesics": tuple(edge_geodesics)})


def shear_edge_geodesics(sp: ShearPoint):
    """Placed geodesics of the triangulation edges (one lift per edge)."""
    return list(holonomy_from_shear(sp).meta["edge_geodesics"])
