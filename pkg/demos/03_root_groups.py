"""
Root groups in a hyperbolic basis
=================================

In the basis (e1, e2, u, e2*, e1*) the diagonal torus is
diag(t1, t2, 1, 1/t2, 1/t1) and there are eight one-parameter unipotent
root groups. Each is given by an explicit template.
"""

from orthohyp.exact_linalg import congruence, mat_inv, mat_mul
from orthohyp.quadric import antidiagonal_form
from orthohyp.root_system import (
    NEGATIVE_ROOTS, POSITIVE_ROOTS, character, classify_unipotent, root_name,
    root_template, torus,
)

lam = (1, 1, -8)
form = antidiagonal_form(*lam)

# %%
# Every template preserves the form and is additive in its parameter.
for root in POSITIVE_ROOTS + NEGATIVE_ROOTS:
    u = root_template(root, 3, lam)
    ok = congruence(u, form) == form
    add = mat_mul(root_template(root, 1, lam), root_template(root, 2, lam)) == u
    print("U_%-12s preserves form: %s, U(1) U(2) = U(3): %s" % (root_name(root), ok, add))

# %%
# The torus acts on U_alpha(x) by scaling x with the character alpha(t).
t = torus(2, 3)
u = root_template((1, 1), 1, lam)
conj = mat_mul(mat_mul(t, u), mat_inv(t))
print("t U(1) t^-1 is U(%s); t1 t2 = %s" % (classify_unipotent(conj, lam).param, character((1, 1), 2, 3)))

# %%
# Classification reads the parameter off a pivot entry and checks the
# whole template.
print(root_template((0, -1), 8, lam))
el = classify_unipotent(root_template((0, -1), 8, lam), lam)
print("classified as U_%s(%s)" % (el.name, el.param))
