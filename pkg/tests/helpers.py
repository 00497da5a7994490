"""Shared sampling and conversion utilities for the test suite."""

import itertools

from codeloops import Field, ReducedPoly


def mask_point(field: Field, mask: int, n: int):
    """GF(2) point with coordinate i+1 taken from bit i of the mask."""
    elems = (field.zero, field.one)
    return tuple(elems[mask >> i & 1] for i in range(n))


def gf2_table_by_mask(poly: ReducedPoly) -> list[int]:
    """Value bits of a GF(2) polynomial indexed by coordinate masks."""
    return [poly.evaluate(mask_point(poly.field, m, poly.n)).enc for m in range(1 << poly.n)]


def table_function(poly: ReducedPoly):
    """Dict-backed callable equal to the polynomial as a map."""
    table = {}
    elems = list(poly.field.elements())
    for pt in itertools.product(elems, repeat=poly.n):
        table[pt] = poly.evaluate(pt)
    return table.__getitem__


def random_gf2_poly(rng, field: Field, n: int, max_degree=None, min_degree=None,
                    cover_all=False, constant_free=True) -> ReducedPoly:
    """Random GF(2) polynomial by monomial-support coin flips, resampled
    until the degree window and coverage constraints hold."""
    one = field.one
    while True:
        terms = []
        supports = []
        for mask in range(1, 1 << n):
            if rng.getrandbits(1):
                supports.append(mask)
                terms.append((tuple(mask >> i & 1 for i in range(n)), one))
        if not constant_free and rng.getrandbits(1):
            terms.append(((0,) * n, one))
        if not terms:
            continue
        deg = max(s.bit_count() for s in supports) if supports else 0
        if max_degree is not None and deg > max_degree:
            continue
        if min_degree is not None and deg < min_degree:
            continue
        if cover_all:
            union = 0
            for s in supports:
                union |= s
            if union != (1 << n) - 1:
                continue
        return ReducedPoly.from_terms(field, n, terms)


def random_table(rng, field: Field, n: int) -> list[int]:
    """Random value table in enumeration order, as encodings."""
    return [rng.randrange(field.q) for _ in range(field.q ** n)]


def factor_set_conditions_hold(eta) -> bool:
    """Full enumeration of the three factor-set conditions over C."""
    code = eta.code
    size = 1 << code.dim
    cw = [code.encode(m) for m in range(size)]
    for x in range(size):
        if eta(x, x) != cw[x].bit_count() // 4 % 2:
            return False
    for x in range(size):
        for y in range(size):
            if eta(x, y) ^ eta(y, x) != (cw[x] & cw[y]).bit_count() // 2 % 2:
                return False
    for x in range(size):
        for y in range(size):
            cxy = cw[x] & cw[y]
            for z in range(size):
                lhs = eta(x, y) ^ eta(x ^ y, z) ^ eta(y, z) ^ eta(x, y ^ z)
                if lhs != (cxy & cw[z]).bit_count() % 2:
                    return False
    return True
