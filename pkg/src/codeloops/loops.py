"""Code loops over doubly even binary codes.

Given a doubly even code C, a factor set eta: C x C -> GF(2) satisfying

    eta(x, x) = w(x)/4
    eta(x, y) + eta(y, x) = w(x n y)/2
    eta(x, y) + eta(x+y, z) + eta(y, z) + eta(x, y+z) = w(x n y n z)

(all mod 2) turns L = C x GF(2) with (x, a)(y, b) = (x+y, a+b+eta(x, y))
into a Moufang loop with at most two squares.

solve_eta constructs eta in closed form.  Writing codewords in basis
coordinates, w(x)/4 mod 2 expands by inclusion-exclusion into a cubic
polynomial whose coefficients are the basis statistics w(c_i)/4,
w(c_i n c_j)/2 and w(c_i n c_j n c_k); eta is assembled from one fixed
bilinear/cubic template per monomial (x_i y_i for x_i, x_j y_i for x_i x_j,
and x_i x_j y_l + x_i x_l y_j + x_j x_l y_i for x_i x_j x_l).  The three
conditions are linear in the statistics, so the sum of templates satisfies
them; the solver still certifies all three by full enumeration and treats
any failure as an internal error.

Codewords are indexed by coefficient masks (bit i = basis row i), loop
elements by (mask, bit) with deterministic index 2*mask + bit.
"""

from __future__ import annotations

from typing import Sequence

from .codes import BinaryCode
from .field import Field
from .poly import interpolate
from .polarization import comb_degree_formula, derived_form_eval

MAX_ETA_DIM = 6
MAX_LOOP_ORDER = 1 << 7


def _exact_div(value: int, divisor: int, what: str) -> int:
    if value % divisor:
        raise ValueError(f"{what} = {value} is not divisible by {divisor}")
    return value // divisor


class EtaTable:
    """A factor set on C x C, stored as 2^k bit-rows over the second index."""

    __slots__ = ("code", "bits")

    def __init__(self, code: BinaryCode, bits: Sequence[int]):
        if len(bits) != 1 << code.dim:
            raise ValueError("eta table size does not match the code dimension")
        self.code = code
        self.bits = tuple(bits)

    def __call__(self, x_mask: int, y_mask: int) -> int:
        return self.bits[x_mask] >> y_mask & 1

    def matrix(self) -> list[list[int]]:
        size = 1 << self.code.dim
        return [[self.bits[x] >> y & 1 for y in range(size)] for x in range(size)]


def solve_eta(code: BinaryCode) -> EtaTable:
    """A factor set satisfying all three conditions, normalized so that
    eta(0, y) = eta(y, 0) = 0.

    Requires a doubly even code of dimension at most MAX_ETA_DIM.  The
    result is certified against all three conditions by full enumeration
    over pairs and triples before being returned.
    """
    k = code.dim
    if k > MAX_ETA_DIM:
        raise ValueError(f"code dimension {k} exceeds the factor-set cap {MAX_ETA_DIM}")
    lvl = code.level()
    if not lvl >= 2:
        raise ValueError(f"code has level {lvl}; a doubly even code (level >= 2) is required")

    size = 1 << k
    cw = [code.encode(m) for m in range(size)]

    lin = []
    for i in range(k):
        lin.append(_exact_div(cw[1 << i].bit_count(), 4, "basis weight") % 2)
    quad = {}
    for i in range(k):
        for j in range(i + 1, k):
            inter = cw[1 << i] & cw[1 << j]
            quad[(i, j)] = _exact_div(inter.bit_count(), 2, "pairwise intersection weight") % 2
    cubic = {}
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                inter = cw[1 << i] & cw[1 << j] & cw[1 << l]
                cubic[(i, j, l)] = inter.bit_count() % 2

    quad_terms = [key for key, bit in quad.items() if bit]
    cubic_terms = [key for key, bit in cubic.items() if bit]
    lin_terms = [i for i in range(k) if lin[i]]

    bits = []
    for x in range(size):
        row = 0
        for y in range(size):
            acc = 0
            for i in lin_terms:
                acc ^= (x >> i) & (y >> i) & 1
            for i, j in quad_terms:
                acc ^= (x >> j) & (y >> i) & 1
            for i, j, l in cubic_terms:
                acc ^= (x >> i) & (x >> j) & (y >> l) & 1
                acc ^= (x >> i) & (x >> l) & (y >> j) & 1
                acc ^= (x >> j) & (x >> l) & (y >> i) & 1
            row |= acc << y
        bits.append(row)
    eta = EtaTable(code, bits)

    # certification; a failure here would contradict the construction
    for x in range(size):
        if eta(x, x) != _exact_div(cw[x].bit_count(), 4, "codeword weight") % 2:
            raise RuntimeError(f"factor set violates the diagonal condition at {x}")
    for x in range(size):
        for y in range(size):
            want = _exact_div((cw[x] & cw[y]).bit_count(), 2, "intersection weight") % 2
            if eta(x, y) ^ eta(y, x) != want:
                raise RuntimeError(f"factor set violates the symmetrization condition at {x, y}")
    for x in range(size):
        ex = eta.bits[x]
        for y in range(size):
            cxy = cw[x] & cw[y]
            exy = eta.bits[x ^ y]
            ey = eta.bits[y]
            base = ex >> y & 1
            for z in range(size):
                want = (cxy & cw[z]).bit_count() & 1
                got = base ^ (exy >> z & 1) ^ (ey >> z & 1) ^ (ex >> (y ^ z) & 1)
                if got != want:
                    raise RuntimeError(f"factor set violates the cocycle condition at {x, y, z}")
    return eta


class CodeLoop:
    """The loop C x GF(2) with multiplication twisted by a factor set.

    Elements are (mask, bit) pairs; the neutral element is (0, 0).  The full
    multiplication table is materialized for the exhaustive checks.
    """

    __slots__ = ("eta", "code", "k", "order", "_cayley")

    def __init__(self, eta: EtaTable):
        self.eta = eta
        self.code = eta.code
        self.k = eta.code.dim
        self.order = 1 << (self.k + 1)
        if self.order > MAX_LOOP_ORDER:
            raise ValueError(f"loop order {self.order} exceeds the cap {MAX_LOOP_ORDER}")
        self._cayley = None

    def elements(self) -> list[tuple[int, int]]:
        """All elements in deterministic index order 2*mask + bit."""
        return [(m, b) for m in range(1 << self.k) for b in (0, 1)]

    @staticmethod
    def index(el: tuple[int, int]) -> int:
        return el[0] * 2 + el[1]

    def element_at(self, idx: int) -> tuple[int, int]:
        return idx >> 1, idx & 1

    def _check(self, el):
        m, b = el
        if not (0 <= m < (1 << self.k) and b in (0, 1)):
            raise ValueError(f"{el} is not an element of this loop")

    def mul(self, u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
        self._check(u)
        self._check(v)
        return u[0] ^ v[0], u[1] ^ v[1] ^ self.eta(u[0], v[0])

    def left_div(self, u, w):
        """The unique x with u * x = w."""
        m = u[0] ^ w[0]
        return m, w[1] ^ u[1] ^ self.eta(u[0], m)

    def right_div(self, w, v):
        """The unique x with x * v = w."""
        m = w[0] ^ v[0]
        return m, w[1] ^ v[1] ^ self.eta(m, v[0])

    def commutator(self, u, v):
        """The unique c with uv = (vu) c."""
        return self.left_div(self.mul(v, u), self.mul(u, v))

    def associator(self, u, v, w):
        """The unique s with (uv)w = (u(vw)) s."""
        return self.left_div(self.mul(u, self.mul(v, w)), self.mul(self.mul(u, v), w))

    def squares(self) -> set[tuple[int, int]]:
        return {self.mul(u, u) for u in self.elements()}

    def cayley(self) -> list[list[int]]:
        """order x order table of element indices."""
        if self._cayley is None:
            els = self.elements()
            self._cayley = [
                [self.index(self.mul(u, v)) for v in els] for u in els
            ]
        return self._cayley

    def commutator_bit(self, x_mask: int, y_mask: int) -> int:
        return self.eta(x_mask, y_mask) ^ self.eta(y_mask, x_mask)

    def associator_bit(self, x_mask: int, y_mask: int, z_mask: int) -> int:
        return (
            self.eta(x_mask, y_mask)
            ^ self.eta(x_mask ^ y_mask, z_mask)
            ^ self.eta(y_mask, z_mask)
            ^ self.eta(x_mask, y_mask ^ z_mask)
        )


def loop_mul(loop: CodeLoop, u, v):
    """Functional form of CodeLoop.mul."""
    return loop.mul(u, v)


def latin_square_report(loop: CodeLoop) -> dict:
    """Checks that every row and column of the Cayley table is a permutation."""
    table = loop.cayley()
    full = set(range(loop.order))
    violations = []
    for i, row in enumerate(table):
        if set(row) != full:
            violations.append(f"row {i} is not a permutation")
    for j in range(loop.order):
        if {table[i][j] for i in range(loop.order)} != full:
            violations.append(f"column {j} is not a permutation")
    return {"ok": not violations, "violations": violations}


def is_moufang(loop: CodeLoop) -> dict:
    """Checks x(y(xz)) = ((xy)x)z on all order^3 triples; reports the first
    violation if any."""
    table = loop.cayley()
    n = loop.order
    for x in range(n):
        tx = table[x]
        for y in range(n):
            lhs_outer = tx
            xy_x = table[table[x][y]][x]
            row_right = table[xy_x]
            ty = table[y]
            for z in range(n):
                if lhs_outer[ty[tx[z]]] != row_right[z]:
                    return {
                        "ok": False,
                        "violation": [loop.element_at(x), loop.element_at(y), loop.element_at(z)],
                        "triples_checked": n * n * n,
                    }
    return {"ok": True, "violation": None, "triples_checked": n * n * n}


def verify_loop_identities(loop: CodeLoop) -> dict:
    """Exhaustive verification of the square, commutator and associator
    structure of a loop with at most two squares.

    Checks, over all elements: x^2 = (0, w(x)/4); commutators and
    associators computed by division are central bits matching
    w(x n y)/2 and w(x n y n z); (xy)^2 = x^2 y^2 [x,y];
    [xy,z] = [x,z][y,z][x,y,z]; [vx,y,z] = [v,y,z][x,y,z]; |L^2| <= 2; and
    that the loop is elementary abelian iff |L^2| = 1.
    """
    k = loop.k
    size = 1 << k
    cw = [loop.code.encode(m) for m in range(size)]
    els = loop.elements()
    report: dict = {"violations": []}
    bad = report["violations"]

    for m, b in els:
        sq = loop.mul((m, b), (m, b))
        want = (0, _exact_div(cw[m].bit_count(), 4, "codeword weight") % 2)
        if sq != want:
            bad.append(f"square of {(m, b)} is {sq}, expected {want}")
    report["square_formula"] = not bad

    # commutators/associators by division must be the central mask bits
    ok = True
    for u in els:
        for v in els:
            c = loop.commutator(u, v)
            want_bit = _exact_div((cw[u[0]] & cw[v[0]]).bit_count(), 2, "intersection") % 2
            if c != (0, loop.commutator_bit(u[0], v[0])) or c != (0, want_bit):
                bad.append(f"commutator of {u}, {v} is {c}")
                ok = False
    report["commutator_central"] = ok

    ok = True
    for u in els:
        for v in els:
            for w in els:
                a = loop.associator(u, v, w)
                want_bit = (cw[u[0]] & cw[v[0]] & cw[w[0]]).bit_count() % 2
                if a != (0, loop.associator_bit(u[0], v[0], w[0])) or a != (0, want_bit):
                    bad.append(f"associator of {u}, {v}, {w} is {a}")
                    ok = False
    report["associator_central"] = ok

    # (xy)^2 = x^2 y^2 [x,y]
    ok = True
    for u in els:
        for v in els:
            uv = loop.mul(u, v)
            lhs = loop.mul(uv, uv)
            rhs = loop.mul(
                loop.mul(loop.mul(u, u), loop.mul(v, v)), loop.commutator(u, v)
            )
            if lhs != rhs:
                bad.append(f"(xy)^2 != x^2 y^2 [x,y] at {u}, {v}")
                ok = False
    report["square_product"] = ok

    # bilinearity-with-correction, on masks since the bits are central:
    # [xy,z] = [x,z][y,z][x,y,z] and [vx,y,z] = [v,y,z][x,y,z]
    comm_rows = [0] * size
    for x in range(size):
        row = 0
        for z in range(size):
            row |= loop.commutator_bit(x, z) << z
        comm_rows[x] = row
    assoc_flat = [0] * size  # bit index y * size + z
    assoc_z_rows = [[0] * size for _ in range(size)]
    for x in range(size):
        flat = 0
        for y in range(size):
            row = 0
            for z in range(size):
                row |= loop.associator_bit(x, y, z) << z
            assoc_z_rows[x][y] = row
            flat |= row << (y * size)
        assoc_flat[x] = flat
    ok = True
    for x in range(size):
        for y in range(size):
            if comm_rows[x ^ y] != comm_rows[x] ^ comm_rows[y] ^ assoc_z_rows[x][y]:
                bad.append(f"[xy,z] identity fails at masks {x}, {y}")
                ok = False
    report["commutator_expansion"] = ok
    ok = True
    for v in range(size):
        for x in range(size):
            if assoc_flat[v ^ x] != assoc_flat[v] ^ assoc_flat[x]:
                bad.append(f"[vx,y,z] identity fails at masks {v}, {x}")
                ok = False
    report["associator_expansion"] = ok

    squares = loop.squares()
    report["squares"] = sorted(squares)
    if len(squares) > 2:
        bad.append(f"|L^2| = {len(squares)} exceeds 2")
    report["two_squares"] = len(squares) <= 2

    elementary = (
        all(loop.mul(u, u) == (0, 0) for u in els)
        and all(comm_rows[x] == 0 for x in range(size))
        and all(assoc_flat[x] == 0 for x in range(size))
    )
    if elementary != (len(squares) == 1):
        bad.append("elementary abelian iff |L^2| = 1 fails")
    report["elementary_abelian_iff_one_square"] = elementary == (len(squares) == 1)

    report["ok"] = not bad
    return report


def p_from_loop(loop: CodeLoop) -> list[int]:
    """The squaring map of a loop with at most two squares, as a bit table
    over coefficient masks.

    Verifies that its second and third derived forms are the commutator and
    associator bits and that its combinatorial degree is at most 3.
    """
    squares = loop.squares()
    if len(squares) > 2:
        raise ValueError(f"|L^2| = {len(squares)} exceeds 2; the squaring map does not descend")
    k = loop.k
    size = 1 << k
    table = []
    for m in range(size):
        sq = loop.mul((m, 0), (m, 0))
        assert sq[0] == 0
        table.append(sq[1])

    two = Field(2)
    elems = (two.zero, two.one)

    def as_point(mask):
        return tuple(elems[mask >> i & 1] for i in range(k))

    def func(point):
        mask = 0
        for i, c in enumerate(point):
            if not c.is_zero():
                mask |= 1 << i
        return elems[table[mask]]

    for x in range(size):
        for y in range(size):
            d2 = derived_form_eval(func, (as_point(x), as_point(y)))
            if d2.enc != loop.commutator_bit(x, y):
                raise RuntimeError(f"second derived form mismatch at masks {x}, {y}")
    for x in range(size):
        for y in range(size):
            for z in range(size):
                d3 = derived_form_eval(func, (as_point(x), as_point(y), as_point(z)))
                if d3.enc != loop.associator_bit(x, y, z):
                    raise RuntimeError(f"third derived form mismatch at masks {x}, {y}, {z}")

    # enumeration order has the last coordinate fastest; masks use bit i for
    # coordinate i+1, so index and mask orders coincide after bit reversal
    ordered = [table[_reverse_bits(idx, k)] for idx in range(size)]
    cdeg = comb_degree_formula(interpolate(two, k, ordered))
    if not 0 <= cdeg <= 3:
        raise RuntimeError(f"squaring map has combinatorial degree {cdeg}")
    return table


def _reverse_bits(value: int, width: int) -> int:
    out = 0
    for i in range(width):
        if value >> i & 1:
            out |= 1 << (width - 1 - i)
    return out


def loop_to_json(loop: CodeLoop) -> dict:
    """Deterministic export: order, eta bit matrix, Cayley index table."""
    return {
        "order": loop.order,
        "eta": loop.eta.matrix(),
        "cayley": loop.cayley(),
    }
