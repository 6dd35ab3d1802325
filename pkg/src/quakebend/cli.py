"""Batch front-end: scenario files in, line-delimited JSON records out.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 verification
failure.  Records are emitted with sorted keys so identical scenarios
produce byte-identical streams.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from quakebend import isometry as iso
from quakebend import teich
from quakebend import lamination as lm
from quakebend import earthquake as eq
from quakebend import bending as bd
from quakebend import spacetime as sp
from quakebend import blackhole as bh
from quakebend import curvature as cv
from quakebend import scenario
from quakebend.errors import (QuakebendError, ParseError, DomainError,
                              WrongClassError, StructureError,
                              MalformedMatrixError, VerificationError)

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


def _jsonable(v):
    if isinstance(v, (np.floating, np.integer)):
        return float(v)
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, np.ndarray):
        return v.tolist()
    raise TypeError(f"cannot serialize {type(v)!r}")


def emit(record):
    sys.stdout.write(json.dumps(record, sort_keys=True, default=_jsonable) + "\n")


def _holonomy_of(point, pd):
    if isinstance(point, teich.FNPoint):
        return teich.holonomy_from_fn(pd, point)
    return teich.holonomy_from_shear(point)


def _load_surface(args):
    data = scenario.load(args.scenario)
    point, pd = scenario.surface_point(data)
    return data, point, pd


def parse_grid(spec):
    """'T=1.1:3:10,u=-1:1:5,zeta=-1:1.5:8' -> dict of 1d arrays."""
    out = {}
    for part in spec.split(","):
        try:
            key, rng = part.split("=")
            lo, hi, n = rng.split(":")
            out[key.strip()] = np.linspace(float(lo), float(hi), int(n))
        except ValueError as exc:
            raise ParseError(f"bad grid component {part!r}") from exc
    return out


def write_mesh(path, vertices, faces):
    """Plain OFF vertex/face text format."""
    with open(path, "w") as fh:
        fh.write("OFF\n")
        fh.write(f"{len(vertices)} {len(faces)} 0\n")
        for v in vertices:
            fh.write(" ".join(f"{c:.12g}" for c in v) + "\n")
        for f in faces:
            fh.write(str(len(f)) + " " + " ".join(map(str, f)) + "\n")


def grid_faces(n_rows, n_cols):
    faces = []
    for i in range(n_rows - 1):
        for j in range(n_cols - 1):
            a = i * n_cols + j
            faces.append((a, a + 1, a + n_cols + 1, a + n_cols))
    return faces


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_classify(args):
    entries = [float(v) for v in args.matrix.split(",")]
    if len(entries) != 4:
        raise ParseError("--matrix expects a,b,c,d")
    g = iso.normalize(np.array(entries).reshape(2, 2))
    k = iso.classify(g, tol=args.tol)
    rec = {"command": "classify", "kind": k.kind,
           "trace": abs(float(iso.tr(g)))}
    if k.kind == "hyperbolic":
        rec["translation_length"] = k.translation_length
        rec["fixed_points"] = [_num(p) for p in k.fixed_points]
    elif k.kind == "elliptic":
        rec["rotation_angle"] = k.rotation_angle
    elif k.kind == "parabolic":
        rec["fixed_points"] = [_num(p) for p in k.fixed_points]
    emit(rec)


def _num(x):
    return "inf" if x == iso.INF else float(x)


def cmd_holonomy(args):
    _, point, pd = _load_surface(args)
    h = _holonomy_of(point, pd)
    for name in h.curve_names():
        m = h.curve(name)
        k = iso.classify(m)
        emit({"command": "holonomy", "curve": name,
              "trace": abs(float(iso.tr(m))), "kind": k.kind,
              "length": k.translation_length if k.kind == "hyperbolic" else 0.0})
    st = teich.surface_type(h)
    emit({"command": "holonomy", "types": list(st.kinds), "genus": st.genus})


def cmd_spectrum(args):
    data, point, pd = _load_surface(args)
    lam = scenario.lamination(data, point)
    if lam is None:
        raise ParseError("spectrum needs a lamination section")
    kinds = teich.puncture_kinds(point)
    elam = scenario.eta(data, lam, point)
    spec = lm.peripheral_spectrum(lam, len(kinds))
    for i in range(len(kinds)):
        emit({"command": "spectrum", "puncture": i, "I": spec[i],
              "I_sharp": lm.enhanced_spectrum(elam, i),
              "sigma": lm.signature(lam, len(kinds))[i],
              "eta": elam.eta[i], "kind": kinds[i]})
    if isinstance(lam, lm.MultiCurveLam) and pd is not None:
        for name in sorted(["z%d" % j for j in range(pd.num_interior)]
                           + ["zp%d" % j for j in range(pd.num_interior)]
                           + ["zpp%d" % j for j in range(pd.num_interior)]
                           + ["C%d" % i for i in range(pd.num_boundary)]):
            emit({"command": "spectrum", "curve": name,
                  "I": lm.intersection_spectrum(name, lam, pd)})


def cmd_quake(args):
    data, point, pd = _load_surface(args)
    lam = scenario.lamination(data, point)
    if lam is None:
        raise ParseError("quake needs a lamination section")
    side = args.side
    if isinstance(point, teich.FNPoint):
        moved = eq.quake_coordinates(point, lam, side, pd=pd)
        h2 = teich.holonomy_from_fn(pd, moved)
        emit({"command": "quake", "side": side, "twists": list(moved.twists)})
    else:
        moved = eq.quake_shear(point, lam, side)
        h2 = teich.holonomy_from_shear(moved)
        emit({"command": "quake", "side": side, "shears": list(moved.shears)})
    hq = eq.quake_holonomy(point, lam, side, depth=args.depth, pd=pd)
    for name in h2.curve_names():
        tc = abs(float(iso.tr(h2.curve(name))))
        tq = abs(float(iso.tr(hq.curve(name)))) if name in hq.curve_words else None
        rec = {"command": "quake", "curve": name, "trace_coordinates": tc,
               "depth": args.depth, "converged": hq.meta.get("converged")}
        if tq is not None:
            rec["trace_cocycle"] = tq
            rec["residual"] = abs(tc - tq)
        emit(rec)


def cmd_flow(args):
    data, point, pd = _load_surface(args)
    lam = scenario.lamination(data, point)
    if lam is None:
        raise ParseError("flow needs a lamination section")
    elam = scenario.eta(data, lam, point)
    kinds = teich.puncture_kinds(point)
    eps = tuple(int(v) for v in data.get("eps", [1] * len(kinds)))
    state = eq.FlowState(teich.EnhancedPoint(point, eps), elam)
    times = data.get("times")
    if args.grid:
        times = list(parse_grid(args.grid).get("t", []))
    if not times:
        raise ParseError("flow needs 'times' in the scenario or --grid t=...")
    for t in times:
        out = eq.quake_flow(state, float(t))
        rec = out.record()
        rec.update({"command": "flow"})
        rec["l"] = [abs(v) for v in rec["l_sharp"]]
        emit(rec)


def cmd_bend(args):
    data, point, pd = _load_surface(args)
    lam = scenario.lamination(data, point)
    if lam is None:
        raise ParseError("bend needs a lamination section")
    target = bd.ADS if args.target == "ads" else bd.HYPERBOLIC
    ctx, h = bd.make_context(point, lam, depth=args.depth, target=target, pd=pd)
    grid = parse_grid(args.grid) if args.grid else {
        "x": np.linspace(-1.5, 1.5, 12), "y": np.linspace(0.3, 2.5, 12)}
    xs, ys = grid.get("x"), grid.get("y")
    vertices = []
    for yv in ys:
        for xv in xs:
            z = complex(xv, yv)
            if target == bd.HYPERBOLIC:
                vertices.append(list(bd.bend_map_hyp(ctx, z)))
            else:
                vertices.append([float(v) for v in
                                 bd.bend_map_ads(ctx, z).flatten()])
    emit({"command": "bend", "target": args.target,
          "points": len(vertices), "depth": args.depth})
    if args.mesh_out:
        write_mesh(args.mesh_out, vertices, grid_faces(len(ys), len(xs)))
        emit({"command": "bend", "mesh": args.mesh_out})
    else:
        for v in vertices:
            emit({"command": "bend", "vertex": v})


def cmd_wick(args):
    grid = parse_grid(args.grid) if args.grid else {
        "T": np.linspace(1.2, 2.8, 5), "u": np.linspace(-0.8, 0.8, 5),
        "zeta": np.linspace(-0.8, 1.2, 5)}
    a0 = args.alpha0
    worst = 0.0
    for T in grid["T"]:
        for u in grid["u"]:
            for z in grid["zeta"]:
                p = sp.LocalPoint(float(T), float(u), float(z), a0)
                v = sp.wick_rotate(p)
                g = sp.wick_metric(p).components
                rec = {"command": "wick", "T": float(T), "u": float(u),
                       "zeta": float(z), "image": [float(c) for c in v],
                       "metric": [[float(c) for c in row] for row in g]}
                # the chart is only C^{1,1} on the seams: curvature is
                # reported away from them
                seam_dist = min(abs(z), abs(z - a0 / T)) if a0 != math.inf \
                    else abs(z)
                if seam_dist > 0.05:
                    fn = lambda x: sp.wick_metric(
                        sp.LocalPoint(x[0], x[2], x[1], a0)).components
                    kappa, _ = cv.constant_curvature_fit(fn, (T, z, u))
                    worst = max(worst, abs(kappa + 1.0))
                    rec["curvature"] = float(kappa)
                    rec["curvature_residual"] = float(abs(kappa + 1.0))
                emit(rec)
    emit({"command": "wick", "max_curvature_residual": worst})
    if args.mesh_out:
        us = grid["u"]
        zs = grid["zeta"]
        T = float(grid["T"][0])
        vertices = [list(sp.wick_rotate(sp.LocalPoint(T, float(u), float(z), a0)))
                    for u in us for z in zs]
        write_mesh(args.mesh_out, vertices, grid_faces(len(us), len(zs)))
        emit({"command": "wick", "mesh": args.mesh_out, "level": T})


def cmd_btz(args):
    params = bh.BTZParams(args.rp, args.rm)
    emit({"command": "btz", "r_plus": params.r_plus, "r_minus": params.r_minus,
          "M": params.mass, "J": params.angular_momentum,
          "f_at_r_plus": bh.btz_f(params.r_plus, params),
          "f_at_r_minus": bh.btz_f(params.r_minus, params)
          if params.r_minus > 0 else 0.0})


def cmd_blackhole(args):
    data, point, pd = _load_surface(args)
    lam = scenario.lamination(data, point)
    if lam is None:
        raise ParseError("blackhole needs a lamination section")
    hl, hr = bd.ads_holonomy(point, lam, depth=args.depth, pd=pd)
    kinds = teich.puncture_kinds(point)
    rects = []
    for i in range(len(kinds)):
        gl, gr = hl.peripheral_matrix(i), hr.peripheral_matrix(i)
        rect = bh.peripheral_rectangle(gl, gr, hl, hr, depth=args.depth)
        rects.append(rect)
        rec = {"command": "blackhole", "puncture": i,
               "degenerate": rect.degenerate, "depth": args.depth,
               "converged": hl.meta.get("converged")}
        if not rect.degenerate:
            d = bh.horizon_invariants(gl, gr)
            rp = (d.size + abs(d.momentum)) / 2.0
            rm = (d.size - abs(d.momentum)) / 2.0
            rec.update({"size": d.size, "momentum": d.momentum,
                        "r_plus": rp, "r_minus": rm,
                        "M": rp * rp + rm * rm, "J": 2.0 * rp * rm,
                        "extremal": d.momentum == 0.0})
        emit(rec)
    meridians = bh.extremal_meridians(rects)
    emit({"command": "blackhole", "meridians": len(meridians)})
    for n, choice in enumerate(meridians):
        recs = bh.meridian_vertex_records(rects, choice)
        emit({"command": "blackhole", "meridian": n,
              "future_core": choice.is_future_convex_core_boundary,
              "past_core": choice.is_past_convex_core_boundary,
              "arcs": [
                  {"degenerate": True} if r["degenerate"] else
                  {"side": r["side"],
                   "vertices": [[_num(a), _num(b)] for a, b in r["vertices"]]}
                  for r in recs]})


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _verify_quake(tol):
    pd = teich.PantDecomposition.once_punctured_torus()
    fn = teich.FNPoint((1.0,), (2.0,), (0.3,))
    worst = 0.0
    for a in (0.1, 0.5, 1.0):
        lam = lm.MultiCurveLam((a,))
        hq = eq.quake_holonomy(fn, lam, eq.LEFT, depth=8, pd=pd)
        hf = teich.holonomy_from_fn(pd, eq.quake_coordinates(fn, lam, eq.LEFT))
        for name in hf.curve_names():
            worst = max(worst, abs(abs(iso.tr(hq.curve(name)))
                                   - abs(iso.tr(hf.curve(name)))))
    return worst, tol if tol is not None else 1e-8


def _verify_ads(tol):
    pd = teich.PantDecomposition.once_punctured_torus()
    fn = teich.FNPoint((1.0,), (2.0,), (0.3,))
    worst = 0.0
    for a in (0.1, 0.5, 1.0):
        lam = lm.MultiCurveLam((a,))
        hl, hr = bd.ads_holonomy(fn, lam, depth=8, pd=pd)
        for side, ha in ((eq.LEFT, hl), (eq.RIGHT, hr)):
            hf = teich.holonomy_from_fn(pd, eq.quake_coordinates(fn, lam, side))
            for name in hf.curve_names():
                worst = max(worst, abs(abs(iso.tr(ha.curve(name)))
                                       - abs(iso.tr(hf.curve(name)))))
    return worst, tol if tol is not None else 1e-8


def _verify_wick(tol):
    worst = 0.0
    for (T, z, u) in [(1.5, -0.5, 0.2), (2.0, 0.2, 0.3), (2.5, 0.9, -0.4)]:
        fn = lambda x: sp.wick_metric(
            sp.LocalPoint(x[0], x[2], x[1], 1.0)).components
        kappa, resid = cv.constant_curvature_fit(fn, (T, z, u))
        worst = max(worst, abs(kappa + 1.0), resid)
    return worst, tol if tol is not None else 1e-4


def _verify_ds(tol):
    worst = 0.0
    for (T, z, u) in [(0.3, -0.5, 0.2), (0.6, 0.2, 0.3), (0.85, 0.9, -0.4)]:
        fn = lambda x: sp.rescale_ds(
            sp.LocalPoint(x[0], x[2], x[1], 1.0)).components
        kappa, resid = cv.constant_curvature_fit(fn, (T, z, u))
        worst = max(worst, abs(kappa - 1.0), resid)
    return worst, tol if tol is not None else 1e-4


def _verify_ads_model(tol):
    worst = 0.0
    for (T, z, u) in [(0.4, -0.5, 0.2), (1.5, 0.1, 0.3), (2.0, 0.9, -0.4)]:
        fn = lambda x: sp.ads_metric(
            sp.LocalPoint(x[0], x[2], x[1], 1.0)).components
        kappa, resid = cv.constant_curvature_fit(fn, (T, z, u))
        worst = max(worst, abs(kappa + 1.0), resid)
    return worst, tol if tol is not None else 1e-4


def _verify_btz(tol):
    worst = 0.0
    for (rp, rm) in [(1.0, 0.0), (1.2, 0.4)]:
        params = bh.BTZParams(rp, rm)
        fn = lambda x: bh.btz_metric(x[0], x[1], x[2], params).components
        kappa, resid = cv.constant_curvature_fit(fn, (0.0, 2.0 * rp, 0.3))
        worst = max(worst, abs(kappa + 1.0), resid)
        worst = max(worst, abs(bh.btz_f(params.r_plus, params)))
    return worst, tol if tol is not None else 1e-4


VERIFY_SUITES = {
    "quake": _verify_quake,
    "ads": _verify_ads,
    "wick": _verify_wick,
    "ds": _verify_ds,
    "ads-model": _verify_ads_model,
    "btz": _verify_btz,
}


def cmd_verify(args):
    suites = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in suites:
        worst, tol = VERIFY_SUITES[name](args.tol)
        ok = worst < tol
        failed = failed or not ok
        emit({"command": "verify", "suite": name, "residual": worst,
              "tolerance": tol, "ok": ok})
    if failed:
        raise VerificationError("verification residual above tolerance")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="quakebend",
        description="earthquakes, bending, Wick rotations and AdS "
                    "black-hole invariants")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, scenario_file=True):
        if scenario_file:
            p.add_argument("scenario", help="scenario JSON file")
        p.add_argument("--depth", type=int, default=8)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--mesh-out", default=None)
        p.add_argument("--grid", default=None,
                       help="grid spec key=lo:hi:n[,key=...]")

    p = sub.add_parser("classify", help="classify a PSL(2,R) matrix")
    p.add_argument("--matrix", required=True, help="a,b,c,d entries")
    p.add_argument("--tol", type=float, default=iso.TAU_CLASS)
    p.set_defaults(func=cmd_classify)

    for name, fn in [("holonomy", cmd_holonomy), ("spectrum", cmd_spectrum),
                     ("quake", cmd_quake), ("flow", cmd_flow),
                     ("bend", cmd_bend), ("blackhole", cmd_blackhole)]:
        p = sub.add_parser(name)
        common(p)
        if name == "quake":
            p.add_argument("--side", choices=[eq.LEFT, eq.RIGHT],
                           default=eq.LEFT)
        if name == "bend":
            p.add_argument("--target", choices=["hyperbolic", "ads"],
                           default="hyperbolic")
        p.set_defaults(func=fn)

    p = sub.add_parser("wick", help="Wick-rotation grid records")
    common(p, scenario_file=False)
    p.add_argument("--alpha0", type=float, default=1.0)
    p.set_defaults(func=cmd_wick)

    p = sub.add_parser("btz")
    p.add_argument("--rp", type=float, required=True)
    p.add_argument("--rm", type=float, required=True)
    p.set_defaults(func=cmd_btz)

    p = sub.add_parser("verify", help="run the cross-oracle suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + sorted(VERIFY_SUITES))
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DomainError, WrongClassError, StructureError,
            MalformedMatrixError, QuakebendError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
