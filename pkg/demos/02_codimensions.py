#!/usr/bin/env python3
"""Strata and their codimensions.

A stratum fixes which intersection points and which branches the strict
transform of a function passes through, and with which multiplicities.  The
codimension of the corresponding family of functions decomposes as

    F = (divisorial-ideal codimension of the valuation vector)
        + (dimension of the symmetric products)
        + (branch contact terms).
"""

import json
from pathlib import Path

from curvemotive import (
    Stratum,
    build,
    codim_F,
    codim_F_literal,
    codim_FD,
    deg_AA,
    deg_AK,
    hoskin_deligne,
    nhat,
    v_of,
    w_of,
)

HERE = Path(__file__).parent
cusp = build(json.loads((HERE / "graphs" / "cusp.json").read_text()))

print("A function whose strict transform meets E3 once, away from the")
print("special points, and misses the branch point:")
st = Stratum(pairs=(), branches=(), point_mults=(0, 0, 1))
nh = nhat(st, cusp)
w = w_of(nh, cusp)
print("  nhat =", nh)
print("  w = nhat . M =", [str(x) for x in w])
print("  v (order along the branch) =", [str(x) for x in v_of(st, cusp)])
print("  hoskin_deligne(w) =", hoskin_deligne(w, cusp))
print("  deg(A.A) =", deg_AA(nh, cusp), "  deg(A.K) =", deg_AK(nh, cusp))
print("  consistency: hD = -(AA + AK)/2 =",
      -(deg_AA(nh, cusp) + deg_AK(nh, cusp)) / 2)
print("  F =", codim_F(st, cusp), " (the expanded formula agrees:",
      codim_F_literal(st, cusp), ")")
print()

print("Maximal contact with the branch (t' = t'' = 1):")
st = Stratum(pairs=(), branches=(1,), point_mults=(0, 0, 0), branch_mults=((1, 1),))
print("  nhat =", nhat(st, cusp), " v =", [str(x) for x in v_of(st, cusp)],
      " F =", codim_F(st, cusp))
print()

print("Branch-free strata have a divisorial codimension, and it agrees:")
st = Stratum(pairs=((1, 3),), branches=(), point_mults=(0, 0, 0), pair_mults=((1, 1),))
print("  F =", codim_F(st, cusp), "  F_D =", codim_FD(st, cusp))
print()

print("With residue degree 2 the values can leave the integers:")
chain = build(json.loads((HERE / "graphs" / "chain2_h12.json").read_text()))
st = Stratum(pairs=(), branches=(), point_mults=(0, 1))
w = w_of(nhat(st, chain), chain)
print("  w =", [str(x) for x in w], " integral:", w.integral_flags)
print("  F =", codim_F(st, chain), "-- carried exactly, never rounded.")
