"""
Relativization on mixed towers
==============================

The relativized abelian sentence is compared with the component verdict at
each level.  The two disagree at Z levels; see the decisions ledger.
"""

# %%
from lperm import SearchBudget, evaluate, parse, print_formula, relativize, wreath
from lperm.blocks import OBlock, element_at, origin, standard_bump
from lperm.evaluator import component_evaluate

# %%
sigma = parse("A f,g. [f,g] = 1")
rel = relativize(sigma, "h")
print(print_formula(rel))

# %%
budget = SearchBudget(max_elements=20, depth=3)
for levels in (["Z", "PLQ"], ["PLQ", "Z"]):
    G = wreath(levels)
    for level, kind in enumerate(levels):
        h = element_at(G, OBlock(level, origin(G)[:level]), standard_bump(kind))
        got = evaluate(rel, {"h": h}, G, budget)
        want = component_evaluate(sigma, kind, budget)
        print(f"{'wr'.join(levels):8s} level {level} ({kind:3s}): relativized={got!s:5s} component={want}")
