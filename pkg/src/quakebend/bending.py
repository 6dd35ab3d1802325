"""Bending cocycles: PSL(2, C)-valued for H3, PSL(2, R)^2-valued for AdS.

Both reuse the quake module's lift ordering, orientation, and endpoint
half-weight handling; only the per-leaf exponent map differs:

* hyperbolic: exp(a X_l), X_l the rotation generator of the oriented
  leaf with exp(2 pi X_l) projectively trivial;
* AdS: the pair (exp(+a X^), exp(-a X^)) of half-angle translations --
  with leaves oriented per the base-point-on-the-left convention the
  first component lifts the *left* earthquake and the second the right
  one, which is the calibration asserted by the cross-oracle tests.

H3 points travel as unit timelike Minkowski-4 vectors; the totally
geodesic copy of H2 is the slice x3 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from quakebend import isometry as iso
from quakebend import teich
from quakebend import lamination as lm
from quakebend import earthquake as eq
from quakebend.errors import DomainError, StructureError

HYPERBOLIC = "hyperbolic"
ADS = "ads"


# ---------------------------------------------------------------------------
# H3 as unit timelike vectors of Minkowski 4-space
# ---------------------------------------------------------------------------

def mink4_from_h2(z):
    """Inclusion H2 -> H3 as the slice x3 = 0."""
    y = iso.h2_to_hyperboloid(z)
    return np.array([y[0], y[1], y[2], 0.0])


def hermitian_from_mink4(v):
    x0, x1, x2, x3 = v
    return np.array([[x0 + x2, x1 + 1j * x3], [x1 - 1j * x3, x0 - x2]])


def mink4_from_hermitian(p):
    return np.array([(p[0, 0].real + p[1, 1].real) / 2.0,
                     p[0, 1].real,
                     (p[0, 0].real - p[1, 1].real) / 2.0,
                     p[0, 1].imag])


def mink4_inner(v, w):
    return -v[0] * w[0] + v[1] * w[1] + v[2] * w[2] + v[3] * w[3]


def dist_h3(v, w):
    ip = -mink4_inner(v, w)
    return math.acosh(max(ip, 1.0))


def apply_psl2c(a, v):
    """Isometry action of PSL(2, C) on Minkowski-4 points, P -> A P A*."""
    p = hermitian_from_mink4(v)
    return mink4_from_hermitian(a @ p @ a.conj().T)


# ---------------------------------------------------------------------------
# context
# ---------------------------------------------------------------------------

@dataclass
class BendContext:
    """Base point, realized lift family and target geometry."""

    base_point: complex
    family: lm.LiftFamily
    target: str = HYPERBOLIC

    def __post_init__(self):
        if self.target not in (HYPERBOLIC, ADS):
            raise DomainError(f"unknown bending target {self.target!r}")
        # the base point itself must be off the weighted leaves
        if not self.family.empty:
            self.family.crossings(self.base_point,
                                  self.base_point + 1e-3j, tol=1e-9)

    def leaves(self, x, y):
        return self.family.crossings(x, y, on_leaf="include")


def make_context(point, lam, depth=8, base_point=complex(0.137, 1.03),
                 target=HYPERBOLIC, pd=None):
    """Realize `lam` on the holonomy of `point` and fix a base point."""
    if isinstance(point, teich.FNPoint):
        if pd is None:
            raise StructureError("FN bending needs the pant decomposition")
        h = teich.holonomy_from_fn(pd, point)
    elif isinstance(point, teich.ShearPoint):
        h = teich.holonomy_from_shear(point)
    elif isinstance(point, teich.Holonomy):
        h = point
    else:
        raise StructureError(f"unsupported point {type(point)!r}")
    fam = lm.LiftFamily(lam, h, depth=depth)
    return BendContext(base_point, fam, target), h


# ---------------------------------------------------------------------------
# hyperbolic bending
# ---------------------------------------------------------------------------

def bend_cocycle_hyp(ctx: BendContext, x, y):
    """B_lambda(x, y) in PSL(2, C): product of exp(a_i X_{l_i})."""
    leaves, _ = ctx.leaves(x, y)
    return bend_cocycle_hyp_from_lifts(leaves, x, y)


def bend_cocycle_hyp_from_lifts(lifts, x=None, y=None, tol=1e-9):
    def factor(geo, a):
        return iso.expm2(a * geo.rotation_generator())

    out = eq.cocycle_product(lifts, factor, x=x, y=y, tol=tol)
    return out.astype(complex)


def bend_map_hyp(ctx: BendContext, x):
    """F(x) = B(x0, x) . x, a point of H3.

    Pinned normalization: the base point maps to its isometric
    inclusion, eliminating the global post-composition freedom.
    """
    if abs(x - ctx.base_point) < 1e-14:
        return mink4_from_h2(x)
    b = bend_cocycle_hyp(ctx, ctx.base_point, x)
    return apply_psl2c(b, mink4_from_h2(x))


def hyp_holonomy(point, lam, depth=8, base_point=complex(0.137, 1.03), pd=None):
    """h_H(gamma) = B(x0, gamma x0) gamma in PSL(2, C).

    Returns the deformed holonomy with meta['converged'] flagging lift
    convergence; the empty lamination reproduces the Fuchsian inclusion.
    """
    ctx, h = make_context(point, lam, depth=depth, base_point=base_point,
                          target=HYPERBOLIC, pd=pd)
    if ctx.family.empty:
        out = h.map(lambda _, m: m.astype(complex))
        out.meta["converged"] = True
        return out
    converged = True

    def deform(name, m):
        nonlocal converged
        y = iso.apply_h2(m, ctx.base_point)
        leaves, ok = ctx.leaves(ctx.base_point, y)
        converged = converged and ok
        b = bend_cocycle_hyp_from_lifts(leaves, ctx.base_point, y)
        return iso.normalize(b @ m.astype(complex))

    out = h.map(deform)
    out.meta["converged"] = converged
    return out


# ---------------------------------------------------------------------------
# AdS bending
# ---------------------------------------------------------------------------

def bend_cocycle_ads(ctx: BendContext, x, y):
    """The pair (B^-, B^+) of half-angle translation products.

    The first component composed with gamma gives the left-earthquake
    holonomy h_L, the second the right one.
    """
    leaves, _ = ctx.leaves(x, y)
    return bend_cocycle_ads_from_lifts(leaves, x, y)


def bend_cocycle_ads_from_lifts(lifts, x=None, y=None, tol=1e-9):
    return (eq.quake_cocycle(lifts, eq.LEFT, x=x, y=y, tol=tol),
            eq.quake_cocycle(lifts, eq.RIGHT, x=x, y=y, tol=tol))


def bend_map_ads(ctx: BendContext, x):
    """phi_lambda(x) = B(x0, x) . x on the embedded copy of H2 in X_{-1}."""
    p = iso.ads_embed(x)
    if abs(x - ctx.base_point) < 1e-14:
        return p
    pair = bend_cocycle_ads(ctx, ctx.base_point, x)
    return iso.ads_act(pair, p)


def ads_holonomy(point, lam, depth=8, base_point=complex(0.137, 1.03), pd=None):
    """(h_L, h_R): the PSL(2,R) x PSL(2,R) holonomy of the AdS spacetime.

    h_L is conjugate to the left-earthquake holonomy of (F, lam) and
    h_R to the right one; both carry meta['converged'].
    """
    ctx, h = make_context(point, lam, depth=depth, base_point=base_point,
                          target=ADS, pd=pd)
    if ctx.family.empty:
        h.meta["converged"] = True
        return h, h
    flags = {"ok": True}

    def deform(side):
        def fn(name, m):
            y = iso.apply_h2(m, ctx.base_point)
            leaves, ok = ctx.leaves(ctx.base_point, y)
            flags["ok"] = flags["ok"] and ok
            return iso.normalize(
                eq.quake_cocycle(leaves, side, x=ctx.base_point, y=y) @ m)
        return fn

    out_l = h.map(deform(eq.LEFT))
    out_r = h.map(deform(eq.RIGHT))
    out_l.meta["converged"] = out_r.meta["converged"] = flags["ok"]
    return out_l, out_r
