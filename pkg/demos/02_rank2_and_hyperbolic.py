"""
Isotropic vectors and a hyperbolic basis
========================================

Two orthogonal isotropic vectors certify Q-rank 2. From them we build a
basis in which the form is anti-diagonal.
"""

from orthohyp.cases import get_case
from orthohyp.exact_linalg import congruence, vec
from orthohyp.invariant_form import compute_form
from orthohyp.monodromy import build_triple
from orthohyp.quadric import (
    IsotropicPair, eval_form, hyperbolic_basis, iter_isotropic, verify_rank2_certificate,
)

case = get_case(5)
q = compute_form(build_triple(case.params)).N_int
print("Q =\n%s" % q)

# %%
# The tabulated pair passes the certificate check.
v1, v2 = vec(case.iso1), vec(case.iso2)
print("Q(v1,v1) = %s, Q(v2,v2) = %s, Q(v1,v2) = %s"
      % (eval_form(q, v1, v1), eval_form(q, v2, v2), eval_form(q, v1, v2)))
print("rank 2 certificate:", verify_rank2_certificate(q, v1, v2))

# %%
# A small exhaustive search finds isotropic vectors too, in a fixed order.
for w in list(iter_isotropic(q, 2))[:6]:
    print("isotropic:", [int(e) for e in w])

# %%
# Seeded with the pair, the basis construction needs no search.
hb = hyperbolic_basis(q, seed=IsotropicPair(v1, v2, q))
print("K =\n%s" % hb.K)
print("K^t Q K =\n%s" % congruence(hb.K, q))
print("lambdas:", [str(l) for l in hb.lambdas])

# %%
# Without a seed both isotropic vectors are searched for.
hb = hyperbolic_basis(q, height=3)
print("unseeded lambdas:", [str(l) for l in hb.lambdas])
