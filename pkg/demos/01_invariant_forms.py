"""
Invariant quadratic forms from hypergeometric parameters
========================================================

Start from the parameters, build the companion matrices, and recover the
integral quadratic form that both generators preserve.
"""

from orthohyp.cases import CASES
from orthohyp.invariant_form import compute_form, invariant_form_oracle, monodromy_vector
from orthohyp.monodromy import HGParams, build_triple, classify_form, poly_str, signature

# %%
# alpha is all zero (maximally unipotent at infinity); beta picks the case.
p = HGParams((0, 0, 0, 0, 0), ("1/6", "1/6", "5/6", "5/6", "1/2"))
t = build_triple(p)
print("f =", poly_str(t.f))
print("g =", poly_str(t.g))
print("pair type:", classify_form(t.f, t.g).value)

# %%
# C = A^-1 B is a reflection; v spans the image of C - I.
print("C =\n%s" % t.C)
print("v =", [str(e) for e in monodromy_vector(t)])

# %%
# The Gram matrix on the orbit v, Bv, ..., B^4 v is Toeplitz. Moving it
# back to the standard basis and clearing denominators gives the form.
form = compute_form(t)
print("M_Q =\n%s" % form.M_Q)
print("N_int = %s * N_Q =\n%s" % (form.scale, form.N_int))

# %%
# A direct cross-check: solve g^t X g = X for both generators.
print("oracle agrees:", invariant_form_oracle(t.A, t.B) == form.N_int)
print("signature: %s (up to order)" % (signature(p),))

# %%
# All fourteen orthogonal cases with f = (X - 1)^5.
for case in CASES:
    q = compute_form(build_triple(case.params)).N_int
    print("%2d  beta = %-26s  first row %s" % (case.id, case.beta_str(), [int(e) for e in q.row(0)]))
