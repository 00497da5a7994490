"""Derived forms and the combinatorial degree of maps V -> F.

The s-th derived form of f is the alternating subset sum

    D^s f(v_1, ..., v_s) = sum over subsets {i_1 < ... < i_m}
                           of (-1)^(s-m) f(v_{i_1} + ... + v_{i_m}),

the empty subset contributing (-1)^s f(0).  It can equally be computed by
the recursion D^{s+1} f(v_1, v_2, rest) = D^s f(v_1+v_2, rest)
- D^s f(v_1, rest) - D^s f(v_2, rest) with D^1 f(v) = f(v) - f(0); both
routes are implemented and tested against each other.

The combinatorial degree of f is the largest s with D^s f not identically
zero (0 for the zero map, INFINITY when f(0) != 0).  Two independent routes
compute it: comb_degree_oracle scans derived forms exhaustively, while
comb_degree_formula reads it off a reduced polynomial as the maximal sum of
base-p digit sums of the exponents.

Also here: base-p digit sums, binomial coefficients mod p via digitwise
products, coefficients of multiexponent pairs, and regular chains of
multiexponents (strictly decreasing chains whose consecutive coefficients
do not vanish mod p).
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Callable, Sequence

from .field import Field, FieldElement, is_prime
from .poly import ReducedPoly, enumerate_points

ORACLE_POINT_CAP = 81  # max q^n for exhaustive derived-form scans
ORACLE_LEVEL_BUDGET = 2_000_000  # max sorted tuples per scanned level


class _InfiniteDegree:
    """Sentinel for an infinite combinatorial degree; larger than any int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other):
        if isinstance(other, (int, _InfiniteDegree)):
            return not isinstance(other, _InfiniteDegree)
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _InfiniteDegree)):
            return True
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, _InfiniteDegree)):
            return False
        return NotImplemented

    def __le__(self, other):
        return isinstance(other, _InfiniteDegree)

    def __repr__(self):
        return "INFINITY"


INFINITY = _InfiniteDegree()


def _as_function(f, vectors):
    """Normalize a map argument to (callable, field, n)."""
    if isinstance(f, ReducedPoly):
        return f.evaluate, f.field, f.n
    if not callable(f):
        raise TypeError("f must be a ReducedPoly or a callable on points")
    if not vectors:
        raise ValueError("at least one vector is required")
    first = vectors[0]
    if not first:
        raise ValueError("vectors must have at least one coordinate")
    return f, first[0].field, len(first)


def _check_vectors(vectors, field, n):
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector {v} has {len(v)} coordinates, expected {n}")
        for c in v:
            if not isinstance(c, FieldElement) or c.field != field:
                raise ValueError("vector coordinates must belong to the map's field")


def derived_form_eval(f, vectors: Sequence) -> FieldElement:
    """D^s f at the given s-tuple by the direct subset sum (s = len(vectors)).

    Positions are distinguished, so repeated vectors are fine.
    """
    func, field, n = _as_function(f, vectors)
    s = len(vectors)
    if s < 1:
        raise ValueError("the derived form needs at least one argument")
    _check_vectors(vectors, field, n)
    zero_vec = tuple(field.zero for _ in range(n))
    minus_one = -field.one
    total = field.zero
    for mask in range(1 << s):
        pt = zero_vec
        m = 0
        for i in range(s):
            if mask >> i & 1:
                pt = tuple(a + b for a, b in zip(pt, vectors[i]))
                m += 1
        val = func(pt)
        if (s - m) % 2:
            val = minus_one * val
        total = total + val
    return total


def derived_form_recursive(f, vectors: Sequence) -> FieldElement:
    """D^s f at the given s-tuple by the two-argument recursion."""
    func, field, n = _as_function(f, vectors)
    if len(vectors) < 1:
        raise ValueError("the derived form needs at least one argument")
    _check_vectors(vectors, field, n)
    zero_vec = tuple(field.zero for _ in range(n))

    def rec(vecs):
        if len(vecs) == 1:
            return func(vecs[0]) - func(zero_vec)
        v1, v2, rest = vecs[0], vecs[1], vecs[2:]
        merged = tuple(a + b for a, b in zip(v1, v2))
        return rec((merged,) + rest) - rec((v1,) + rest) - rec((v2,) + rest)

    return rec(tuple(tuple(v) for v in vectors))


def _normalize_to_table(f, field, n):
    if isinstance(f, ReducedPoly):
        field, n = f.field, f.n
        table = [v.enc for v in f.value_table()]
    elif callable(f):
        if field is None or n is None:
            raise ValueError("field and n are required for a callable map")
        table = [f(pt).enc for pt in enumerate_points(field, n)]
    else:
        if field is None or n is None:
            raise ValueError("field and n are required for a value table")
        table = [v.enc if isinstance(v, FieldElement) else int(v) for v in f]
        if len(table) != field.q ** n:
            raise ValueError(f"table has {len(table)} entries, expected {field.q ** n}")
    return table, field, n


def comb_degree_oracle(f, field: Field | None = None, n: int | None = None):
    """Combinatorial degree by exhaustive derived-form evaluation.

    Accepts a ReducedPoly, a value table in enumeration order, or a callable
    (the latter two need explicit field and n).  Returns an int or INFINITY.

    Levels are scanned upward until D^s f vanishes identically; the
    recursion makes vanishing monotone in s, and f(0) = 0 bounds the answer
    by n*e*(p-1), so the scan always terminates.  Derived forms are
    symmetric in their arguments, so only sorted index tuples are visited.
    Requires q^n <= ORACLE_POINT_CAP; a level whose sorted-tuple count
    exceeds ORACLE_LEVEL_BUDGET is refused rather than ground through.
    """
    table, field, n = _normalize_to_table(f, field, n)
    qn = field.q ** n
    if qn > ORACLE_POINT_CAP:
        raise ValueError(f"q^n = {qn} exceeds the oracle cap {ORACLE_POINT_CAP}")
    if table[0] != 0:
        return INFINITY
    if all(v == 0 for v in table):
        return 0

    q = field.q
    elems = list(field.elements())
    add_enc = [[(elems[a] + elems[b]).enc for b in range(q)] for a in range(q)]
    sub_enc = [[(elems[a] - elems[b]).enc for b in range(q)] for a in range(q)]
    digits = []
    for idx in range(qn):
        d, k = [], idx
        for _ in range(n):
            d.append(k % q)
            k //= q
        digits.append(tuple(reversed(d)))
    index_of = {d: i for i, d in enumerate(digits)}
    add_pt = [
        [index_of[tuple(add_enc[a][b] for a, b in zip(digits[i], digits[j]))] for j in range(qn)]
        for i in range(qn)
    ]

    bound = n * field.e * (field.p - 1)
    level = {(i,): table[i] for i in range(qn)}
    s = 1
    while True:
        tuples = comb(qn + s, s + 1)
        if tuples > ORACLE_LEVEL_BUDGET:
            raise ValueError(
                f"level-{s + 1} scan needs {tuples} tuples, over the budget "
                f"{ORACLE_LEVEL_BUDGET}"
            )
        nxt = {}
        any_nonzero = False
        for t in itertools.combinations_with_replacement(range(qn), s + 1):
            i, j, rest = t[0], t[1], t[2:]
            merged = tuple(sorted((add_pt[i][j],) + rest))
            v = sub_enc[sub_enc[level[merged]][level[(i,) + rest]]][level[(j,) + rest]]
            nxt[t] = v
            if v:
                any_nonzero = True
        if not any_nonzero:
            return s
        level = nxt
        s += 1
        if s > bound:
            raise AssertionError("derived forms failed to vanish within the degree bound")


def p_weight(m: int, p: int) -> int:
    """Digit sum of m in base p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    total = 0
    while m:
        total += m % p
        m //= p
    return total


def lucas_binomial(m: int, k: int, p: int) -> int:
    """binom(m, k) mod p via digitwise products of base-p digits.

    Digit pairs with m_i < k_i make the whole product vanish.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    result = 1
    while k or m:
        mi, ki = m % p, k % p
        if mi < ki:
            return 0
        result = result * comb(mi, ki) % p
        m //= p
        k //= p
    return result


def monomial_coeff(a: Sequence[int], b: Sequence[int], p: int) -> int:
    """Product over coordinates of binom(a_i, b_i) mod p."""
    if len(a) != len(b):
        raise ValueError(f"multiexponent lengths differ: {len(a)} vs {len(b)}")
    result = 1
    for ai, bi in zip(a, b):
        result = result * lucas_binomial(ai, bi, p) % p
        if result == 0:
            return 0
    return result


def multiexp_lt(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise strict order: a <= b everywhere and a < b somewhere."""
    return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))


class RegularChain:
    """A strictly decreasing chain of multiexponents with nonvanishing
    consecutive coefficients mod p; validated on construction."""

    __slots__ = ("p", "chain")

    def __init__(self, p: int, chain: Sequence):
        chain = tuple(tuple(a) for a in chain)
        if not chain:
            raise ValueError("chain must be nonempty")
        for a in chain:
            if not any(a):
                raise ValueError("chain elements must be nonzero multiexponents")
        for cur, nxt in zip(chain, chain[1:]):
            if not multiexp_lt(nxt, cur):
                raise ValueError(f"{nxt} does not strictly decrease from {cur}")
            if monomial_coeff(cur, nxt, p) == 0:
                raise ValueError(f"coefficient of {cur} -> {nxt} vanishes mod {p}")
        self.p = p
        self.chain = chain

    def __len__(self):
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)

    def __eq__(self, other):
        return isinstance(other, RegularChain) and self.p == other.p and self.chain == other.chain

    def __repr__(self):
        return f"RegularChain(p={self.p}, {' > '.join(str(a) for a in self.chain)})"


def longest_regular_chain(a: Sequence[int], p: int) -> RegularChain:
    """A maximum-length regular chain headed by a; its length is the sum of
    the base-p digit sums of the coordinates.

    Deterministic tie-break: each step clears the lowest nonzero base-p
    digit of the lowest-index nonzero coordinate by one.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    a = tuple(a)
    if not any(a):
        raise ValueError("the zero multiexponent heads no chain")
    if any(x < 0 for x in a):
        raise ValueError("multiexponent entries must be nonnegative")
    chain = [a]
    cur = list(a)
    while sum(p_weight(x, p) for x in cur) > 1:
        i = next(idx for idx, x in enumerate(cur) if x)
        step = 1
        while cur[i] % (step * p) == 0:
            step *= p
        cur[i] -= step
        chain.append(tuple(cur))
    result = RegularChain(p, chain)
    assert len(result) == sum(p_weight(x, p) for x in a)
    return result


def comb_degree_formula(poly: ReducedPoly):
    """Combinatorial degree read off a reduced polynomial.

    Zero map -> 0; nonzero constant term -> INFINITY; otherwise the maximum
    over monomials of the summed base-p digit sums of the exponents.  Over a
    prime field this equals the total degree.
    """
    if poly.is_zero():
        return 0
    if not poly.constant_term().is_zero():
        return INFINITY
    p = poly.field.p
    return max(sum(p_weight(a, p) for a in exps) for exps, _ in poly.terms)


def monomial_p_weight(exps: Sequence[int], p: int) -> int:
    """Summed base-p digit sums of one multiexponent."""
    return sum(p_weight(a, p) for a in exps)
