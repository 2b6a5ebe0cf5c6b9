"""
Replaying the arithmeticity certificates
========================================

For two cases a fixed hyperbolic basis K and a script of words in
x = K^-1 A K and y = K^-1 B K produce a non-trivial integral element in
every root group on one side. That is the density certificate.
"""

from orthohyp.certify import replay_case
from orthohyp.words import format_script, load_script

# %%
# The word script for case 1. Later words refer to earlier ones.
print(format_script(load_script("case1")))

# %%
# Replay diffs every intermediate matrix against the recorded values.
report = replay_case(1)
print(report.to_text())

# %%
# Case 5 covers the positive roots instead. Note that x and y have
# fractional entries here while the certificate words are integral.
report = replay_case(5)
print("x =\n%s" % report.matrices["x"])
for word, el in report.elements:
    print("%-4s integral: %s, in U_%s with x = %s"
          % (word, report.matrices[word].is_integral(), el.name, el.param))
print("density certificate:", report.certificate)
