"""Scenario files: versioned JSON descriptions of surfaces, laminations
and command parameters consumed by the CLI.

Layout::

    {
      "version": 1,
      "surface": {"g": 1, "r": 1},
      "pants":  {"num_pants": 1, "interior": [[[0,0],[0,1]]],
                 "boundary": [[0,2]]},
      "fn":     {"l": [1.0, 2.0], "t": [0.3]},      # boundary then interior
      "shear":  {"tri": {"num_triangles": 2,
                         "gluing": [[[0,0],[1,0]], ...]}, "s": [1,1,1]},
      "lamination": {"family": "multicurve", "weights": [0.7],
                     "signature": [1], "eta": [1]},
      ...per-command parameters...
    }

Exactly one of "fn" (with "pants") or "shear" describes the structure.
"""

from __future__ import annotations

import json

from quakebend import teich
from quakebend import lamination as lm
from quakebend.errors import ParseError, StructureError

VERSION = 1


def load(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise ParseError(f"scenario file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), line=exc.lineno) from exc
    if not isinstance(data, dict):
        raise ParseError("scenario must be a JSON object")
    if data.get("version") != VERSION:
        raise ParseError(f"unsupported scenario version {data.get('version')!r}")
    return data


def _require(data, key):
    if key not in data:
        raise ParseError(f"missing scenario section {key!r}")
    return data[key]


def pant_decomposition(data):
    sec = _require(data, "pants")
    try:
        interior = tuple((tuple(map(tuple, pair))) for pair in sec["interior"])
        boundary = tuple(map(tuple, sec["boundary"]))
        return teich.PantDecomposition(int(sec["num_pants"]), interior, boundary)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed pants section: {exc}") from exc
    except StructureError as exc:
        raise ParseError(f"inconsistent pants section: {exc}") from exc


def triangulation(data):
    sec = _require(data, "shear")
    try:
        tri = sec["tri"]
        gluing = tuple((tuple(map(tuple, pair))) for pair in tri["gluing"])
        return teich.IdealTriangulation(int(tri["num_triangles"]), gluing)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed shear section: {exc}") from exc
    except StructureError as exc:
        raise ParseError(f"inconsistent triangulation: {exc}") from exc


def _check_surface_section(data, genus, punctures):
    sec = data.get("surface")
    if sec is None:
        return
    if "g" in sec and int(sec["g"]) != genus:
        raise ParseError(f"surface.g = {sec['g']} but the structure has "
                         f"genus {genus}")
    if "r" in sec and int(sec["r"]) != punctures:
        raise ParseError(f"surface.r = {sec['r']} but the structure has "
                         f"{punctures} punctures")


def surface_point(data):
    """(point, pd-or-None): the FN or shear structure of the scenario."""
    if "fn" in data:
        pd = pant_decomposition(data)
        sec = data["fn"]
        try:
            l = [float(v) for v in sec["l"]]
            t = tuple(float(v) for v in sec["t"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed fn section: {exc}") from exc
        nb = pd.num_boundary
        if len(l) != nb + pd.num_interior:
            raise ParseError(
                f"fn.l must list {nb} boundary then {pd.num_interior} "
                "interior lengths")
        fn = teich.FNPoint(tuple(l[:nb]), tuple(l[nb:]), t)
        _check_surface_section(data, pd.genus, pd.num_boundary)
        return fn, pd
    if "shear" in data:
        tri = triangulation(data)
        try:
            s = tuple(float(v) for v in data["shear"]["s"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed shear section: {exc}") from exc
        if len(s) != tri.num_edges:
            raise ParseError(f"shear.s must list {tri.num_edges} values")
        genus = (2 - tri.num_punctures + tri.num_edges - tri.num_triangles) // 2
        _check_surface_section(data, genus, tri.num_punctures)
        return teich.ShearPoint(tri, s), None
    raise ParseError("scenario has neither an 'fn' nor a 'shear' section")


def lamination(data, point):
    sec = data.get("lamination")
    if sec is None:
        return None
    family = sec.get("family")
    try:
        weights = tuple(float(v) for v in sec["weights"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed lamination section: {exc}") from exc
    if family == "multicurve":
        return lm.MultiCurveLam(weights)
    if family == "triangulation":
        if not isinstance(point, teich.ShearPoint):
            raise ParseError("triangulation laminations need a shear surface")
        if "signature" in sec:
            return lm.TriangulationLam(point.triangulation, weights,
                                       tuple(int(v) for v in sec["signature"]))
        return lm.TriangulationLam.from_shear(point, weights)
    raise ParseError(f"unknown lamination family {family!r}")


def eta(data, lam, point):
    """Enhancement signs for the lamination, defaulting to its signature."""
    if lam is None:
        return None
    kinds = teich.puncture_kinds(point)
    sig = lm.signature(lam, len(kinds))
    sec = data.get("lamination", {})
    values = tuple(int(v) for v in sec.get("eta", sig))
    return lm.EnhancedLam(lam, values, kinds)
