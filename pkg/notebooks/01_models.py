"""
Two computable models
=====================

PL automorphisms of Q and finite wreath towers, side by side.
"""

# %%
from fractions import Fraction

from lperm import PLMap, pl_support, pl_is_irreducible, wreath
from lperm.wreath import wr_apply, wr_join, wr_mul, wr_inv

# %% [markdown]
# A bump moves every point of its carrier in one direction. Maps act on the
# right, so ``f * g`` runs ``f`` first.

# %%
f = PLMap.bump(0, 1, 2, 4)
g = PLMap.bump(1, 2, Fraction(5, 2), 3)
print("f(1) =", f(1), " (f*g)(1) =", (f * g)(1), " (g*f)(1) =", (g * f)(1))
print("support of f:", pl_support(f)[0])

# %%
two = f * PLMap.bump(6, 7, 8, 9)
ok, (g1, g2) = pl_is_irreducible(two, with_witness=True)
print("irreducible:", ok, "\nsplit into", g1, "and", g2)

# %% [markdown]
# In Z wr Z a point is a pair (outer, inner).  An outer translation and an
# inner one at prefix 0 do not commute.

# %%
ZZ = wreath(["Z", "Z"])
outer, inner = ZZ.element({(): 1}), ZZ.element({(0,): 1})
print(wr_apply(wr_mul(outer, inner), (0, 0)), wr_apply(wr_mul(inner, outer), (0, 0)))

# %%
a = wr_mul(outer, inner)
print("|a| =", wr_join(a, wr_inv(a)))
