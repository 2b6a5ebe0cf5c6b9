"""
Bounded search for root-group elements in the group generated by x, y.

Breadth-first over freely reduced words in x, x^-1, y, y^-1, deduplicated on
the exact matrix. Each new element g and its small powers g^k are tested
for unipotency; unipotent hits are then combined by commutators. Anything
returned has been checked to be integral, unipotent and a single
root-group element, but the search is not complete.

Internally an element is (numerators, d): a flat tuple of ints and a
positive common denominator, kept reduced.
"""

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .exact_linalg import Matrix, is_unipotent, mat_inv
from .root_system import ROOTS, RootElement, classify_unipotent

NODE_LIMIT_ENV = "ORTHOHYP_NODE_LIMIT"

LETTERS = ("x", "X", "y", "Y")  # capital = inverse
_INVERSE_LETTER = {"x": "X", "X": "x", "y": "Y", "Y": "y"}


@dataclass(frozen=True)
class Budget:
    max_len: int = 8
    max_power: int = 6
    max_commutator_depth: int = 1
    node_limit: int = 10 ** 5


@dataclass(frozen=True)
class SearchHit:
    element: RootElement
    word: str
    length: int


@dataclass
class SearchResult:
    hits: list
    nodes: int
    exhausted: bool  # True when the node limit cut the search short


def budget_from_env(budget):
    raw = os.environ.get(NODE_LIMIT_ENV)
    if raw is None:
        return budget
    return Budget(budget.max_len, budget.max_power, budget.max_commutator_depth, int(raw))


# -- integer matrices with a common denominator --

def _pack(m):
    d = reduce(lambda a, b: a * b // gcd(a, b), (e.denominator for row in m.rows for e in row), 1)
    return tuple(int(e * d) for row in m.rows for e in row), d


def _unpack(g, n):
    nums, d = g
    return Matrix([[Fraction(nums[i * n + j], d) for j in range(n)] for i in range(n)])


def _reduce(nums, d):
    g = reduce(gcd, nums, d)
    if g > 1:
        return tuple(v // g for v in nums), d // g
    return nums, d


def _mul(a, b, n):
    an, ad = a
    bn, bd = b
    out = []
    for i in range(n):
        row = an[i * n:(i + 1) * n]
        for j in range(n):
            s = 0
            for k in range(n):
                r = row[k]
                if r:
                    s += r * bn[k * n + j]
            out.append(s)
    if ad == 1 and bd == 1:
        return tuple(out), 1
    return _reduce(tuple(out), ad * bd)


def _trace_is_n(g, n):
    nums, d = g
    return sum(nums[i * n + i] for i in range(n)) == n * d


def _is_unipotent_int(g, n):
    # (g - I)^n == 0  <=>  (nums - d I)^n == 0
    nums, d = g
    if not _trace_is_n(g, n):
        return False
    nil = list(nums)
    for i in range(n):
        nil[i * n + i] -= d
    nil = (tuple(nil), 1)
    p = nil
    for _ in range(n - 1):
        p = _mul(p, nil, n)
        if not any(p[0]):
            return True
    return not any(p[0])


def _is_identity(g, n):
    nums, d = g
    return d == 1 and all(nums[i * n + j] == (i == j) for i in range(n) for j in range(n))


# -- words --

def format_word(letters):
    """('y','y','X') -> 'y^2 x^-1'."""
    out = []
    i = 0
    while i < len(letters):
        c = letters[i]
        j = i
        while j < len(letters) and letters[j] == c:
            j += 1
        k = j - i
        gen = c.lower()
        exp = -k if c.isupper() else k
        out.append(gen if exp == 1 else "%s^%d" % (gen, exp))
        i = j
    return " ".join(out)


def search_unipotents(x, y, lambdas, budget=None):
    """Look for root-group elements among short words in x, y.

    Returns a SearchResult; hits are sorted by (root, |param|, word length).
    """
    budget = budget_from_env(budget or Budget())
    n = x.nrows
    gens = {"x": _pack(x), "X": _pack(mat_inv(x)), "y": _pack(y), "Y": _pack(mat_inv(y))}

    seen = set()
    pool = []  # (packed, word, length): unipotent, non-identity
    pool_seen = set()
    nodes = 0
    exhausted = False
    # keep a tenth of the budget for the commutator stage
    bfs_limit = budget.node_limit - budget.node_limit // 10

    def note_unipotent(g, word, length):
        if g not in pool_seen and not _is_identity(g, n):
            pool_seen.add(g)
            pool.append((g, word, length))

    ident = (tuple(int(i == j) for i in range(n) for j in range(n)), 1)
    seen.add(ident)
    queue = deque([(ident, ())])
    while queue:
        g, word = queue.popleft()
        if len(word) >= budget.max_len:
            continue
        for c in LETTERS:
            if word and word[-1] == _INVERSE_LETTER[c]:
                continue
            h = _mul(g, gens[c], n)
            if h in seen:
                continue
            if nodes >= bfs_limit:
                exhausted = True
                queue.clear()
                break
            seen.add(h)
            nodes += 1
            w = word + (c,)
            queue.append((h, w))
            p = h
            for k in range(1, budget.max_power + 1):
                if k > 1:
                    p = _mul(p, h, n)
                if _is_unipotent_int(p, n):
                    if len(set(w)) == 1:
                        label = format_word(w * k)
                    else:
                        label = format_word(w)
                        if k > 1:
                            label = "(%s)^%d" % (label, k)
                    note_unipotent(p, label, k * len(w))
                    break

    # commutators of unipotent hits
    frontier = list(pool)
    for _ in range(budget.max_commutator_depth):
        new = []
        inverses = {}
        for g, _w, _l in pool:
            inverses[g] = _pack(mat_inv(_unpack(g, n)))
        for a, wa, la in frontier:
            for b, wb, lb in pool:
                if a == b:
                    continue
                if nodes >= budget.node_limit:
                    exhausted = True
                    break
                nodes += 1
                c = _mul(_mul(a, b, n), _mul(inverses[a], inverses[b], n), n)
                if c in pool_seen or _is_identity(c, n):
                    continue
                if _is_unipotent_int(c, n):
                    new.append((c, "[%s, %s]" % (wa, wb), 2 * (la + lb)))
                    pool_seen.add(c)
        pool.extend(new)
        frontier = new
        if not new or exhausted:
            break

    hits = []
    found = set()
    for g, word, length in pool:
        if g[1] != 1 or g in found:
            continue  # not integral
        m = _unpack(g, n)
        el = classify_unipotent(m, lambdas)
        if el is None:
            continue
        assert is_unipotent(m) and m.is_integral()
        found.add(g)
        hits.append(SearchHit(el, word, length))
    order = {r: i for i, r in enumerate(ROOTS)}
    hits.sort(key=lambda h: (order[h.element.root], abs(h.element.param), h.length, h.word))
    return SearchResult(hits=hits, nodes=nodes, exhausted=exhausted)

