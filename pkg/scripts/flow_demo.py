#!/usr/bin/env python3
"""Quake-flow bounce demo: boundary length against flow time.

Runs the enhanced left-quake flow on a once-punctured torus whose
boundary has length 2 and lamination mass 1, printing the piecewise
linear bounce through the cusp at t = 2.
"""

from quakebend import teich, lamination as lm, earthquake as eq

TRI = teich.IdealTriangulation.once_punctured_torus()


def main():
    sp = teich.ShearPoint(TRI, (-1.0 / 3,) * 3)      # l_C = 2, sigma = +1
    lam = lm.TriangulationLam.from_shear(sp, (1.0 / 6,) * 3)   # I_C = 1
    elam = lm.EnhancedLam(lam, lam.signature, teich.puncture_kinds(sp))
    state = eq.FlowState(teich.EnhancedPoint(sp, (1,)), elam)

    print(f"{'t':>5} {'l#':>8} {'l':>7} {'eps':>4} {'eta':>4} {'sigma':>6} cusp")
    for k in range(13):
        t = 0.25 * k
        out = eq.quake_flow(state, t)
        print(f"{t:5.2f} {out.enhanced_length(0):8.3f} "
              f"{out.plain_length(0):7.3f} {out.eps(0):4d} {out.eta(0):4d} "
              f"{out.sigma(0):6d} {'*' if out.at_cusp(0) else ''}")
    print(f"\ncritical time t0 = {state.critical_time(0)}")


if __name__ == "__main__":
    main()
