"""
The 14 orthogonal pairs with f = (X - 1)^5.

Each record carries the beta parameters, the first row of the primitive
integral invariant form, and two orthogonal isotropic vectors.
"""

from dataclasses import dataclass
from fractions import Fraction as F

from .monodromy import HGParams

ARITHMETIC = "arithmetic"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class CaseRecord:
    id: int
    beta: tuple
    first_row: tuple
    iso1: tuple
    iso2: tuple
    status: str = UNKNOWN
    proof_words: str = None

    @property
    def alpha(self):
        return (F(0),) * 5

    @property
    def params(self):
        return HGParams(self.alpha, self.beta)

    def beta_str(self):
        return ",".join(str(b) for b in self.beta)


def _b(*qs):
    return tuple(F(q) for q in qs) + (F(1, 2),)


CASES = (
    CaseRecord(1, _b("1/6", "1/6", "5/6", "5/6"), (57, 39, -7, -57, -71),
               (1, 0, 0, 1, 0), (-1, -2, 5, -7, 3), ARITHMETIC, "case1"),
    CaseRecord(2, _b("1/2", "1/2", "1/2", "1/2"), (3, 0, -5, 0, 35),
               (18, 83, 149, 129, 45), (1, 4, 7, 8, 0)),
    CaseRecord(3, _b("1/3", "1/3", "2/3", "2/3"), (27, 5, -37, -27, 155),
               (2, 2, 3, 4, 1), (-1, 0, -1, -2, 0)),
    CaseRecord(4, _b("1/2", "1/2", "1/3", "2/3"), (67, 7, -101, -41, 547),
               (118, 365, 551, 463, 111), (1028, 2527, 4360, 4265, 0)),
    CaseRecord(5, _b("1/4", "1/4", "3/4", "3/4"), (17, 7, -15, -25, 17),
               (1, 1, 1, 1, 0), (0, 1, 1, 1, 1), ARITHMETIC, "case5"),
    CaseRecord(6, _b("1/2", "1/2", "1/4", "3/4"), (11, 3, -13, -13, 43),
               (-1, -2, 0, -2, 5), (6, 17, 15, 22, 0)),
    CaseRecord(7, _b("1/3", "2/3", "1/4", "3/4"), (115, 37, -125, -155, 307),
               (32, 41, 59, 45, 27), (211, 175, 265, 117, 0)),
    CaseRecord(8, _b("1/5", "2/5", "3/5", "4/5"), (89, 39, -71, -121, 89),
               (27, 74, 43, 8, 68), (-1793, -1902, 3675, -3760, 0)),
    CaseRecord(9, _b("1/2", "1/2", "1/6", "5/6"), (27, 15, -13, -33, -5),
               (60, 103, 25, 37, 119), (-2723, -3423, 2247, -3605, 0)),
    CaseRecord(10, _b("1/3", "2/3", "1/6", "5/6"), (265, 151, -119, -329, -119),
               (2, 1, -1, 6, -2), (4, -9, 12, -7, 0)),
    CaseRecord(11, _b("1/4", "3/4", "1/6", "5/6"), (35, 21, -13, -43, -29),
               (2, 3, 1, 3, 3), (7, 3, -7, 21, 0)),
    CaseRecord(12, _b("1/8", "3/8", "5/8", "7/8"), (65, 47, 1, -49, -63),
               (4, -3, 1, 1, 1), (-7, 9, -7, 1, 0)),
    CaseRecord(13, _b("1/10", "3/10", "7/10", "9/10"), (141, 115, 45, -45, -115),
               (-4, 6, -4, 1, -1), (-7, 16, -13, 4, 0)),
    CaseRecord(14, _b("1/12", "5/12", "7/12", "11/12"), (257, 223, 129, -1, -127),
               (9, 9, -17, -2, 15), (7, 7, -23, 17, 0)),
)


def get_case(case_id):
    for c in CASES:
        if c.id == case_id:
            return c
    raise KeyError("no case %r (valid: 1-14)" % (case_id,))
