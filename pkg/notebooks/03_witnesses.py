"""
Explicit witnesses
==================

Separating commutators, the nc sentence on Z towers, and minimal abelian
detection.
"""

# %%
from fractions import Fraction

from lperm import PLMap, example_nc_decide, lemma31_witnesses, minimal_abelian, pl_interpolate, wreath
from lperm.wreath import ChainSpec, wr_meet

# %%
h = PLMap.bump(0, Fraction(1, 2), Fraction(3, 4), 1)
g = pl_interpolate([0, 1], [2, 3])
inst = lemma31_witnesses(h, g)
print("case:", inst.case)
print("check point", inst.check_point, "-> w1 w2:", inst.lhs, " w2 w1:", inst.rhs)

# %%
for mode in ("default", "restricted"):
    verdict, res = example_nc_decide(ChainSpec(("Z", "Z"), mode))
    print(mode, verdict, "-", res.note)
# the first candidate translates the top coordinate, so it is shown inside a taller tower
r = res.refutations[0]
print("g =", r["g"], "\nh =", r["h"], "\ng ^ h =", wr_meet(r["g"], r["h"]), "lifted:", r["lifted"])

# %%
print(minimal_abelian(wreath(["Z", "Z"])).witness)
print(len(minimal_abelian(wreath(["PLQ", "PLQ"])).counterexamples), "counterexamples in PLQ wr PLQ")
