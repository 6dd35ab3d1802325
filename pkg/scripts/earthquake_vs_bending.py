#!/usr/bin/env python3
"""Cross-oracle sweep: AdS bending holonomy against coordinate quakes.

For a range of lamination weights on the once-punctured torus, compares
the traces of the two AdS holonomy components with the Fenchel-Nielsen
twist rebuilds, and prints the worst trace gap per weight.
"""

import numpy as np

from quakebend import isometry as iso
from quakebend import teich, lamination as lm, earthquake as eq, bending as bd

PD = teich.PantDecomposition.once_punctured_torus()
FN = teich.FNPoint((1.0,), (2.0,), (0.3,))

WORDS = {"a": (("z0", 1),), "b": (("b0", 1),),
         "ab": (("z0", 1), ("b0", 1)),
         "[a,b]": (("z0", 1), ("b0", 1), ("z0", -1), ("b0", -1))}


def main():
    print(f"{'weight':>8} {'worst trace gap':>16}  converged")
    for a in np.linspace(0.1, 2.0, 8):
        lam = lm.MultiCurveLam((float(a),))
        hl, hr = bd.ads_holonomy(FN, lam, depth=8, pd=PD)
        gap = 0.0
        for side, h_bend in ((eq.LEFT, hl), (eq.RIGHT, hr)):
            h_fn = teich.holonomy_from_fn(
                PD, eq.quake_coordinates(FN, lam, side))
            for w in WORDS.values():
                gap = max(gap, abs(abs(iso.tr(h_bend.word(w)))
                                   - abs(iso.tr(h_fn.word(w)))))
        print(f"{a:8.3f} {gap:16.3e}  {hl.meta['converged']}")


if __name__ == "__main__":
    main()
