"""Binary linear codes with weight, level and intersection queries, and the
construction turning a constant-free GF(2) polynomial of combinatorial
degree r+1 into a code of divisibility level r with prescribed weight
congruences.

Codewords are ints: bit i holds coordinate i+1, so the string "1000111"
parses to bits {0, 4, 5, 6}.  Generator matrices are tuples of such rows.

The builder concatenates blocks drawn from a simplex code D (the dual of
the Hamming code): every subset J in the complemented ANF of P contributes
one block, the D-codeword of the coefficient vector (x_{j1}, ..., x_{jt},
0, ..., 0).  Each block weighs 0 or 2^r, which forces 2^r | w and
w/2^r = P(x) mod 2 pointwise.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .field import Field
from .poly import ReducedPoly, SubsetFamily, to_complemented_anf
from .polarization import INFINITY, comb_degree_formula

MAX_LEVEL_DIM = 20  # largest dimension whose codewords we will enumerate
MAX_SIMPLEX_DIM = 16

# The worked-example generator matrix for the dual Hamming code of
# dimension 3 (rows of H^T); selectable as --preset paper-example.
SIMPLEX_PRESETS = {
    "paper-example": ("1000111", "0101011", "0011101"),
}


def weight(c: int) -> int:
    """Hamming weight: the number of nonzero coordinates."""
    return c.bit_count()


def intersection(x: int, y: int) -> int:
    """Coordinatewise AND of two binary vectors."""
    return x & y


def codeword_from_str(s: str) -> int:
    """Parse a row of '0'/'1' characters; commas and spaces are ignored."""
    bits = s.replace(",", "").replace(" ", "")
    c = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            c |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid character {ch!r} in codeword string")
    return c


def codeword_to_str(c: int, length: int, block: int | None = None) -> str:
    s = "".join("1" if c >> i & 1 else "0" for i in range(length))
    if block:
        s = ",".join(s[i:i + block] for i in range(0, length, block))
    return s


def gf2_basis(rows: Sequence[int]) -> list[int]:
    """Row basis of the span, one row per leading bit."""
    basis: dict[int, int] = {}
    for r in rows:
        cur = r
        while cur:
            lead = cur.bit_length() - 1
            if lead not in basis:
                basis[lead] = cur
                break
            cur ^= basis[lead]
    return [basis[lead] for lead in sorted(basis, reverse=True)]


def gf2_rank(rows: Sequence[int]) -> int:
    return len(gf2_basis(rows))


def level_of_rows(rows: Sequence[int]):
    """Largest r with 2^r dividing every weight in the row span.

    INFINITY for the zero code (every r divides 0).
    """
    basis = gf2_basis(rows)
    k = len(basis)
    if k == 0:
        return INFINITY
    if k > MAX_LEVEL_DIM:
        raise ValueError(f"dimension {k} exceeds the level-enumeration cap {MAX_LEVEL_DIM}")
    best = None
    cur = 0
    for i in range(1, 1 << k):
        cur ^= basis[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        v = (w & -w).bit_length() - 1
        if best is None or v < best:
            best = v
            if best == 0:
                break
    return best


def weight_distribution(rows: Sequence[int]) -> dict[int, int]:
    """Weight -> count over all codewords of the row span."""
    basis = gf2_basis(rows)
    k = len(basis)
    if k > MAX_LEVEL_DIM:
        raise ValueError(f"dimension {k} exceeds the enumeration cap {MAX_LEVEL_DIM}")
    dist = {0: 1}
    cur = 0
    for i in range(1, 1 << k):
        cur ^= basis[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        dist[w] = dist.get(w, 0) + 1
    return dist


class BinaryCode:
    """A binary linear code given by an independent generator matrix.

    rows are basis codewords; the codeword set is their span, of size
    2^dim.  Rejects dependent rows, so dim always equals the rank.
    """

    __slots__ = ("length", "rows")

    def __init__(self, length: int, rows: Sequence[int]):
        rows = tuple(rows)
        for r in rows:
            if r < 0 or r >> length:
                raise ValueError(f"row {r:#x} does not fit in length {length}")
        if gf2_rank(rows) != len(rows):
            raise ValueError("generator rows are linearly dependent")
        self.length = length
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BinaryCode":
        parsed = [codeword_from_str(r) for r in rows]
        lengths = {len(r.replace(",", "").replace(" ", "")) for r in rows}
        if len(lengths) > 1:
            raise ValueError("generator rows have unequal lengths")
        return cls(lengths.pop() if lengths else 0, parsed)

    def encode(self, mask: int) -> int:
        """Codeword of a coefficient vector, given as a bitmask."""
        if mask < 0 or mask >> self.dim:
            raise ValueError(f"coefficient mask {mask} out of range for dimension {self.dim}")
        c = 0
        for i in range(self.dim):
            if mask >> i & 1:
                c ^= self.rows[i]
        return c

    def codewords(self) -> Iterator[int]:
        """All codewords, in coefficient-vector counting order."""
        for mask in range(1 << self.dim):
            yield self.encode(mask)

    def level(self):
        return level_of_rows(self.rows)

    def to_strings(self, block: int | None = None) -> list[str]:
        return [codeword_to_str(r, self.length, block) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, BinaryCode)
            and self.length == other.length
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"BinaryCode(length={self.length}, dim={self.dim})"


def simplex_code(m: int, matrix: Sequence | None = None) -> BinaryCode:
    """The dual Hamming code of dimension m and length 2^m - 1.

    The parity-check matrix H of the Hamming code lists all nonzero vectors
    of GF(2)^m as rows; this code is generated by H^T.  The default row
    order is counting order 1, ..., 2^m - 1 with the low bit in the first
    coordinate; pass an explicit generator matrix (rows of H^T) to fix a
    different order.  Every nonzero codeword has weight 2^(m-1).
    """
    if not 1 <= m <= MAX_SIMPLEX_DIM:
        raise ValueError(f"simplex dimension {m} outside [1, {MAX_SIMPLEX_DIM}]")
    length = (1 << m) - 1
    if matrix is None:
        rows = []
        for i in range(m):
            r = 0
            for j in range(length):
                if (j + 1) >> i & 1:
                    r |= 1 << j
            rows.append(r)
    else:
        rows = [codeword_from_str(r) if isinstance(r, str) else int(r) for r in matrix]
        if len(rows) != m:
            raise ValueError(f"expected {m} generator rows, got {len(rows)}")
        columns = []
        for j in range(length):
            col = 0
            for i in range(m):
                if rows[i] >> j & 1:
                    col |= 1 << i
            columns.append(col)
        if sorted(columns) != list(range(1, length + 1)):
            raise ValueError("matrix columns must be the nonzero vectors of GF(2)^m, each once")
    return BinaryCode(length, rows)


def weight_congruence(d_mask: int, m: int) -> int:
    """w(d . H^T) / 2^(m-1) mod 2, computed as 1 + prod(1 + d_i).

    The product vanishes for every nonzero coefficient vector.
    """
    prod = 1
    for i in range(m):
        prod = prod * (1 ^ (d_mask >> i & 1)) % 2
    return (1 + prod) % 2


class CodeBuild:
    """Result of build_code: the code, the embedding, and its ingredients."""

    __slots__ = ("poly", "subsets", "simplex", "r", "code")

    def __init__(self, poly, subsets, simplex, r, code):
        self.poly = poly
        self.subsets = subsets
        self.simplex = simplex
        self.r = r
        self.code = code

    @property
    def block_length(self) -> int:
        return self.simplex.length

    def map(self, x_mask: int) -> int:
        """The embedding pi: concatenation over the ordered subset family of
        simplex codewords of the padded coordinate selections."""
        if x_mask < 0 or x_mask >> self.poly.n:
            raise ValueError(f"point mask {x_mask} out of range for n = {self.poly.n}")
        word = 0
        for b, subset in enumerate(self.subsets):
            d = 0
            for pos, j in enumerate(subset):
                if x_mask >> (j - 1) & 1:
                    d |= 1 << pos
            word |= self.simplex.encode(d) << (b * self.block_length)
        return word

    def verify(self) -> dict:
        return verify_build(self.poly, self.code, r=self.r)


def build_code(
    poly: ReducedPoly,
    j_order: Sequence | SubsetFamily | None = None,
    simplex_matrix: Sequence | None = None,
    level: int | None = None,
) -> CodeBuild:
    """Build the level-r code of a constant-free GF(2) polynomial.

    With cdeg P = r + 1 (finite, >= 1), returns a code C isomorphic to V
    with generator rows pi(e_1), ..., pi(e_n), ambient length
    |J| * (2^(r+1) - 1), level exactly r, and w(pi(x))/2^r = P(x) mod 2 for
    every x.  Every variable must occur in P, otherwise pi is not injective
    and no code isomorphic to V exists under this construction.

    j_order reorders the subset family (default: canonical order);
    simplex_matrix fixes the dual Hamming generator (default: counting
    order); level forces a target level r larger than cdeg P - 1, which
    still satisfies all congruences (used by prescribe_cg).
    """
    if poly.field.q != 2:
        raise ValueError("code construction requires a polynomial over GF(2)")
    cdeg = comb_degree_formula(poly)
    if cdeg is INFINITY:
        raise ValueError("P(0) != 0: combinatorial degree is infinite, no code exists")
    if cdeg == 0:
        raise ValueError("P is the zero map: combinatorial degree 0, nothing to build")
    r = cdeg - 1 if level is None else level
    if r + 1 < cdeg:
        raise ValueError(f"target level {r} too small for combinatorial degree {cdeg}")
    if r + 1 > MAX_SIMPLEX_DIM:
        raise ValueError(f"level {r} exceeds the simplex cap {MAX_SIMPLEX_DIM - 1}")

    subsets = to_complemented_anf(poly)
    if j_order is not None:
        if not isinstance(j_order, SubsetFamily):
            j_order = SubsetFamily(poly.n, j_order, canonical=False)
        subsets = subsets.reordered(j_order)
    covered = set()
    for s in subsets:
        covered.update(s)
    missing = sorted(set(range(1, poly.n + 1)) - covered)
    if missing:
        names = ", ".join(f"x{i}" for i in missing)
        raise ValueError(
            f"variables {names} do not occur in P; the built code would not be "
            f"isomorphic to V (drop the unused variables or lower n)"
        )

    simplex = simplex_code(r + 1, matrix=simplex_matrix)
    build = CodeBuild(poly, subsets, simplex, r, None)
    rows = [build.map(1 << i) for i in range(poly.n)]
    build.code = BinaryCode(len(subsets) * simplex.length, rows)
    return build


def verify_build(poly: ReducedPoly, code, r: int | None = None, length: int | None = None) -> dict:
    """Check a claimed build against its polynomial; returns a report.

    code may be a BinaryCode, a CodeBuild, or raw generator rows (ints or
    '0'/'1' strings, which may be dependent, e.g. a tampered matrix).  The
    report {"level", "length", "dim", "violations"} lists every failed
    check: divisibility and congruence at all 2^n points, dim = n, level
    exactly r, and ambient length |J| * (2^(r+1) - 1).  Pass length when
    giving int rows whose top coordinates may all be zero.
    """
    if isinstance(code, CodeBuild):
        if r is None:
            r = code.r
        code = code.code
    if isinstance(code, BinaryCode):
        rows, length = list(code.rows), code.length
    else:
        rows = [codeword_from_str(x) if isinstance(x, str) else int(x) for x in code]
        if length is None:
            if isinstance(code, Sequence) and code and isinstance(code[0], str):
                length = len(str(code[0]).replace(",", "").replace(" ", ""))
            else:
                length = max((x.bit_length() for x in rows), default=0)

    cdeg = comb_degree_formula(poly)
    if cdeg is INFINITY or cdeg == 0:
        raise ValueError("verification requires finite nonzero combinatorial degree")
    if r is None:
        r = cdeg - 1

    violations = []
    n = poly.n
    if len(rows) != n:
        violations.append(f"expected {n} generator rows, found {len(rows)}")

    two = poly.field
    points = {}
    for mask in range(1 << n):
        pt = tuple(two.element(mask >> i & 1) for i in range(n))
        points[mask] = poly.evaluate(pt).enc

    for mask in range(1 << min(n, len(rows))):
        c = 0
        for i in range(len(rows)):
            if mask >> i & 1:
                c ^= rows[i]
        w = c.bit_count()
        if w % (1 << r):
            violations.append(f"w(pi(x)) = {w} not divisible by 2^{r} at x = {mask:0{n}b}")
        elif (w >> r) % 2 != points[mask]:
            violations.append(
                f"w(pi(x))/2^{r} = {(w >> r) % 2} differs from P(x) = {points[mask]} "
                f"at x = {mask:0{n}b}"
            )

    dim = gf2_rank(rows)
    if dim != n:
        violations.append(f"code dimension {dim} differs from n = {n}")

    lvl = level_of_rows(rows)
    if lvl != r:
        violations.append(f"code level {lvl} differs from target level {r}")

    subsets = to_complemented_anf(poly)
    expected_length = len(subsets) * ((1 << (r + 1)) - 1)
    if length != expected_length:
        violations.append(
            f"ambient length {length} differs from |J|*(2^(r+1)-1) = {expected_length}"
        )

    return {"level": lvl, "length": length, "dim": dim, "violations": violations}


def prescribe_cg(alpha: Sequence[int], beta, gamma) -> CodeBuild:
    """Doubly even code with prescribed basis weight congruences.

    alpha[i], beta[i][j], gamma[i][j][k] are bits prescribing w(c_i)/4,
    w(c_i n c_j)/2 and w(c_i n c_j n c_k) mod 2 on the basis images, for
    distinct indices.  beta must be symmetric and gamma totally symmetric;
    entries with a repeated index are forced to 0 by double evenness and
    must be given as 0.  Realized through the cubic polynomial with these
    polarization values, built at level 2.
    """
    n = len(alpha)
    for i in range(n):
        if alpha[i] not in (0, 1):
            raise ValueError("alpha entries must be bits")
    for i in range(n):
        for j in range(n):
            if beta[i][j] not in (0, 1):
                raise ValueError("beta entries must be bits")
            if beta[i][j] != beta[j][i]:
                raise ValueError(f"beta is not symmetric at ({i + 1}, {j + 1})")
            if i == j and beta[i][j]:
                raise ValueError("beta diagonal must vanish: w(c_i)/2 is always even")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                g = gamma[i][j][k]
                if g not in (0, 1):
                    raise ValueError("gamma entries must be bits")
                if g != gamma[j][i][k] or g != gamma[i][k][j]:
                    raise ValueError(f"gamma is not totally symmetric at ({i + 1}, {j + 1}, {k + 1})")
                if len({i, j, k}) < 3 and g:
                    raise ValueError(
                        "gamma entries with repeated indices must vanish: "
                        "w(c_i n c_j) is always even"
                    )

    two = Field(2)
    one = two.one
    terms = []
    for i in range(n):
        if alpha[i]:
            exps = [0] * n
            exps[i] = 1
            terms.append((tuple(exps), one))
    for i in range(n):
        for j in range(i + 1, n):
            if beta[i][j]:
                exps = [0] * n
                exps[i] = exps[j] = 1
                terms.append((tuple(exps), one))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if gamma[i][j][k]:
                    exps = [0] * n
                    exps[i] = exps[j] = exps[k] = 1
                    terms.append((tuple(exps), one))
    poly = ReducedPoly.from_terms(two, n, terms)
    if poly.is_zero():
        raise ValueError(
            "all-zero prescription: the realization is the zero code, which has "
            "no basis; nothing to build"
        )
    return build_code(poly, level=2)
