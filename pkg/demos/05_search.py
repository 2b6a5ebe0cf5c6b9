"""
Searching for root-group elements
=================================

A bounded breadth-first search over short words in x, y and their
inverses. Hits are only reported after the unipotency, integrality and
classification checks.
"""

from orthohyp.golden import CASE1
from orthohyp.search import Budget, search_unipotents
from orthohyp.words import evaluate_word, parse_word

x, y, lam = CASE1["x"], CASE1["y"], CASE1["lambdas"]

# %%
# A modest budget. The ORTHOHYP_NODE_LIMIT environment variable
# overrides the node limit.
res = search_unipotents(x, y, lam, Budget(max_len=8, node_limit=5000))
print("%d nodes, node limit reached: %s" % (res.nodes, res.exhausted))
for h in res.hits[:10]:
    print("U_%-12s x = %-5s  %s" % (h.element.name, h.element.param, h.word))

# %%
# Each reported word is valid word-script syntax, so the hit can be
# re-derived independently.
h = res.hits[0]
print(evaluate_word(parse_word(h.word), x, y) == h.element.matrix)
