"""
Formulas and bounded evaluation
===============================
"""

# %%
from lperm import SearchBudget, evaluate, paper_formula, parse, print_formula, wreath
from lperm.formula import quantifier_count, quantifier_depth
from lperm.evaluator import gamma_oracle
from lperm.blocks import OBlock, element_at

# %%
gamma = paper_formula("gamma", ["h", "x"])
print(print_formula(gamma))
full = paper_formula("gamma", ["h", "x"], expand_all=True)
print("expanded:", quantifier_count(full), "quantifiers, depth", quantifier_depth(full))

# %% [markdown]
# The oracle answers gamma exactly.  Bounded syntactic search is sound but
# mostly returns Unknown beyond the trivial cases.

# %%
ZZ = wreath(["Z", "Z"])
h = element_at(ZZ, OBlock(1, (0,)), 1)
budget = SearchBudget(max_elements=12, depth=2)
for x in (ZZ.identity(), element_at(ZZ, OBlock(1, (0,)), 2), ZZ.element({(): 1})):
    syn = evaluate(gamma, {"h": h, "x": x}, ZZ, budget, mode="syntactic")
    print(f"{str(x):40s} oracle={gamma_oracle(h, x, ZZ)!s:5s} syntactic={syn}")

# %%
for text in ("A f,g. [f,g] = 1", "E g. g > 1"):
    print(text, "->", evaluate(parse(text), {}, ZZ, budget))
