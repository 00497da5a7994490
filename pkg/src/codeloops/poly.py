"""Maps V -> F as reduced multivariate polynomials.

A map from GF(q)^n to GF(q) has a unique polynomial representative in which
every exponent lies in [0, q-1] and all multiexponents are distinct (the
"reduced" form).  ReducedPoly stores exactly that shape: a tuple of
(multiexponent, nonzero coefficient) pairs in descending graded-lex order,
so two polynomials are equal as maps iff they are structurally equal.

Exponent folding uses x^q = x: an exponent a >= q with a > 0 is replaced by
the unique a' in [1, q-1] congruent to a mod q-1; a = 0 stays 0.

Text grammar (CLI and files): terms joined by "+", term = [coeff "*"]
factors, factor = "x<i>" ["^" <exp>], coeff an integer element encoding,
e.g. "x1^3*x2^7 + x1*x2*x3^5".  Value tables travel as JSON
{"field": "p^e", "n": n, "table": [...]} with the q^n points enumerated in
integer-encoding lexicographic order (last coordinate fastest) and values
given as element encodings.

Over GF(2) a constant-free polynomial also has a "complemented ANF": a set
family J with P(x) = sum over J of (1 + prod_{j in J} (1 + x_j)).  That form
is what the code construction in codes.py consumes.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

from .field import Field, FieldElement

INTERPOLATION_CAP = 1 << 14  # max number of table points


def fold_exponent(a: int, q: int) -> int:
    """Reduce a single exponent by x^q = x; 0 stays 0."""
    if a < 0:
        raise ValueError(f"negative exponent {a}")
    if a < q:
        return a
    return (a - 1) % (q - 1) + 1


def _grlex_key(exps):
    return (sum(exps), exps)


class ReducedPoly:
    """A reduced polynomial over a Field in n variables.

    Immutable; construct via from_terms (which reduces arbitrary input) or
    interpolate.  Structural equality coincides with equality as maps.
    """

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: Field, n: int, terms: tuple):
        # terms must already be canonical; use from_terms for raw input
        self.field = field
        self.n = n
        self.terms = terms

    @classmethod
    def from_terms(cls, field: Field, n: int, raw_terms: Iterable) -> "ReducedPoly":
        """Build from (exponent vector, coefficient) pairs with arbitrary
        exponents; folds exponents, merges like terms, drops zeros."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        acc: dict[tuple, FieldElement] = {}
        for exps, coeff in raw_terms:
            if len(exps) != n:
                raise ValueError(f"multiexponent {exps} has length {len(exps)}, expected {n}")
            if isinstance(coeff, int):
                coeff = field.element(coeff)
            key = tuple(fold_exponent(a, field.q) for a in exps)
            if key in acc:
                acc[key] = acc[key] + coeff
            else:
                acc[key] = coeff
        items = [(e, c) for e, c in acc.items() if not c.is_zero()]
        items.sort(key=lambda t: _grlex_key(t[0]), reverse=True)
        return cls(field, n, tuple(items))

    @classmethod
    def zero(cls, field: Field, n: int) -> "ReducedPoly":
        return cls(field, n, ())

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> FieldElement:
        zero_exp = (0,) * self.n
        for exps, coeff in self.terms:
            if exps == zero_exp:
                return coeff
        return self.field.zero

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=0)

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        """Value at a point of V, with the convention 0^0 = 1."""
        if len(point) != self.n:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.n}")
        for v in point:
            if not isinstance(v, FieldElement) or v.field != self.field:
                raise ValueError("point coordinates must belong to the polynomial's field")
        total = self.field.zero
        for exps, coeff in self.terms:
            prod = coeff
            for v, a in zip(point, exps):
                if a:
                    prod = prod * v ** a
            total = total + prod
        return total

    def value_table(self) -> list[FieldElement]:
        """Values on all q^n points in enumeration order."""
        return [self.evaluate(pt) for pt in enumerate_points(self.field, self.n)]

    def __add__(self, other: "ReducedPoly") -> "ReducedPoly":
        if not isinstance(other, ReducedPoly):
            return NotImplemented
        if self.field != other.field or self.n != other.n:
            raise ValueError("polynomial field/arity mismatch")
        return ReducedPoly.from_terms(self.field, self.n, list(self.terms) + list(other.terms))

    def __eq__(self, other):
        return (
            isinstance(other, ReducedPoly)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.n, self.terms))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"ReducedPoly({self.field!r}, {self.n}, {format_poly(self)!r})"


def reduce_poly(field: Field, n: int, raw_terms: Iterable) -> ReducedPoly:
    """Functional alias for ReducedPoly.from_terms."""
    return ReducedPoly.from_terms(field, n, raw_terms)


# ---------------------------------------------------------------------------
# point enumeration and interpolation
# ---------------------------------------------------------------------------

def enumerate_points(field: Field, n: int) -> Iterator[tuple]:
    """All points of V = F^n in integer-encoding lexicographic order.

    The last coordinate varies fastest: index = sum enc(v_i) * q^(n-1-i).
    """
    elems = list(field.elements())
    for combo in itertools.product(elems, repeat=n):
        yield combo


def _polymul_field(a, b, field):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def _inverse_evaluation_matrix(field: Field):
    """q x q matrix M with M[k][u] = coefficient of x^k in 1 - (x - u)^(q-1).

    Applying M to a univariate value vector recovers the coefficient vector
    of the unique reduced representative.
    """
    q = field.q
    cols = []
    for u in field.elements():
        poly = [field.one]
        lin = [-u, field.one]
        for _ in range(q - 1):
            poly = _polymul_field(poly, lin, field)
        delta = [-c for c in poly] + [field.zero] * (q - len(poly))
        delta[0] = delta[0] + field.one
        cols.append(delta)
    return [[cols[u][k] for u in range(q)] for k in range(q)]


def interpolate(field: Field, n: int, table: Sequence) -> ReducedPoly:
    """The unique ReducedPoly whose evaluation reproduces the table.

    The table must cover all q^n points in enumeration order; entries may be
    FieldElement or integer encodings.  Inverts evaluation one axis at a
    time, which costs n * q^(n+1) field operations.
    """
    q, qn = field.q, field.q ** n
    if qn > INTERPOLATION_CAP:
        raise ValueError(f"table size {qn} exceeds the interpolation cap {INTERPOLATION_CAP}")
    if len(table) != qn:
        raise ValueError(f"table has {len(table)} entries, expected {qn}")
    data = [field.element(v) if isinstance(v, int) else v for v in table]
    for v in data:
        if not isinstance(v, FieldElement) or v.field != field:
            raise ValueError("table values must belong to the target field")
    m = _inverse_evaluation_matrix(field)
    for axis in range(n):
        stride = q ** (n - 1 - axis)
        for base in range(qn):
            if (base // stride) % q:
                continue
            vals = [data[base + u * stride] for u in range(q)]
            for k in range(q):
                acc = field.zero
                for u in range(q):
                    if not vals[u].is_zero():
                        acc = acc + m[k][u] * vals[u]
                data[base + k * stride] = acc
    terms = []
    for idx, coeff in enumerate(data):
        if coeff.is_zero():
            continue
        exps = []
        k = idx
        for _ in range(n):
            exps.append(k % q)
            k //= q
        terms.append((tuple(reversed(exps)), coeff))
    terms.sort(key=lambda t: _grlex_key(t[0]), reverse=True)
    return ReducedPoly(field, n, tuple(terms))


# ---------------------------------------------------------------------------
# complemented algebraic normal form over GF(2)
# ---------------------------------------------------------------------------

class SubsetFamily:
    """A family of nonempty subsets of {1, ..., n}, order-significant.

    The canonical order sorts by size, then lexicographically on the sorted
    elements; constructions that depend on the ordering accept an explicit
    override instead.
    """

    __slots__ = ("n", "sets")

    def __init__(self, n: int, sets: Iterable, canonical: bool = True):
        norm = []
        seen = set()
        for s in sets:
            t = tuple(sorted(set(s)))
            if not t:
                raise ValueError("subsets must be nonempty")
            if t[0] < 1 or t[-1] > n:
                raise ValueError(f"subset {t} not within [1, {n}]")
            if t in seen:
                raise ValueError(f"duplicate subset {t}")
            seen.add(t)
            norm.append(t)
        if canonical:
            norm.sort(key=lambda t: (len(t), t))
        self.n = n
        self.sets = tuple(norm)

    def reordered(self, order: Iterable) -> "SubsetFamily":
        """Same family with an explicit ordering; must be a permutation."""
        fam = SubsetFamily(self.n, order, canonical=False)
        if sorted(fam.sets) != sorted(self.sets):
            raise ValueError("ordering override is not a permutation of the family")
        return fam

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __eq__(self, other):
        return isinstance(other, SubsetFamily) and self.n == other.n and self.sets == other.sets

    def __hash__(self):
        return hash((self.n, self.sets))

    def to_text(self) -> str:
        return ";".join(",".join(str(j) for j in s) for s in self.sets)

    @classmethod
    def from_text(cls, n: int, text: str, canonical: bool = False) -> "SubsetFamily":
        text = text.strip()
        if not text:
            return cls(n, [], canonical=canonical)
        parts = [p for p in text.split(";") if p.strip()]
        sets = []
        for p in parts:
            try:
                sets.append([int(tok) for tok in p.split(",")])
            except ValueError:
                raise ValueError(f"malformed subset {p!r} in family spec") from None
        return cls(n, sets, canonical=canonical)

    def __repr__(self):
        return f"SubsetFamily({self.n}, {self.to_text()!r})"


def _require_gf2(field: Field):
    if field.q != 2:
        raise ValueError("operation requires the two-element field")


def to_complemented_anf(poly: ReducedPoly) -> SubsetFamily:
    """The family J with P(x) = sum_{J} (1 + prod_{j in J} (1 + x_j)).

    Requires GF(2) and P(0) = 0.  Each monomial support I contributes every
    nonempty subset of I, accumulated by symmetric difference; the family is
    returned in canonical order.  For nonzero P the maximal subset size
    equals deg P.
    """
    _require_gf2(poly.field)
    if not poly.constant_term().is_zero():
        raise ValueError("polynomial must have zero constant term")
    acc: set[tuple] = set()
    for exps, _ in poly.terms:
        support = [i + 1 for i, a in enumerate(exps) if a]
        for size in range(1, len(support) + 1):
            for sub in itertools.combinations(support, size):
                acc.symmetric_difference_update({sub})
    family = SubsetFamily(poly.n, acc)
    if poly.terms:
        assert max(len(s) for s in family) == poly.degree()
    return family


def from_complemented_anf(family: SubsetFamily, field: Field | None = None) -> ReducedPoly:
    """Inverse transform: expand sum_{J} (1 + prod_{j in J}(1 + x_j))."""
    if field is None:
        field = Field(2)
    _require_gf2(field)
    supports: set[tuple] = set()
    for subset in family:
        for size in range(1, len(subset) + 1):
            for sub in itertools.combinations(subset, size):
                supports.symmetric_difference_update({sub})
    one = field.one
    terms = []
    for sup in supports:
        exps = [0] * family.n
        for j in sup:
            exps[j - 1] = 1
        terms.append((tuple(exps), one))
    return ReducedPoly.from_terms(field, family.n, terms)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

class PolyParseError(ValueError):
    """Parse failure with the offending position in the input string."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(x(\d+))|(\d+)|(\^)|(\*)|(\+)|(\S))")


def parse_poly(field: Field, text: str, n: int | None = None) -> ReducedPoly:
    """Parse the polynomial grammar; n defaults to the largest variable index."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(7):
            raise PolyParseError(f"unexpected character {m.group(7)!r}", m.start(7))
        if m.group(1):
            tokens.append(("var", int(m.group(2)), m.start(1)))
        elif m.group(3):
            tokens.append(("int", int(m.group(3)), m.start(3)))
        elif m.group(4):
            tokens.append(("pow", None, m.start(4)))
        elif m.group(5):
            tokens.append(("mul", None, m.start(5)))
        elif m.group(6):
            tokens.append(("plus", None, m.start(6)))
        pos = m.end()
    if not tokens:
        raise PolyParseError("empty polynomial", 0)

    # split on plus tokens
    groups: list[list] = [[]]
    for tok in tokens:
        if tok[0] == "plus":
            groups.append([])
        else:
            groups[-1].append(tok)

    raw_terms = []
    max_var = 0
    for group in groups:
        if not group:
            idx = tokens[-1][2] if group is groups[-1] else 0
            raise PolyParseError("empty term", idx)
        coeff_enc = None
        exps: dict[int, int] = {}
        i = 0
        expect_factor = True
        while i < len(group):
            kind, value, at = group[i]
            if not expect_factor:
                raise PolyParseError("expected '*' or '+' between factors", at)
            if kind == "int":
                if coeff_enc is not None or exps:
                    raise PolyParseError("coefficient must come first in a term", at)
                if not 0 <= value < field.q:
                    raise PolyParseError(
                        f"coefficient {value} is not an element encoding of GF({field.q})", at
                    )
                coeff_enc = value
                i += 1
            elif kind == "var":
                var = value
                if var < 1:
                    raise PolyParseError("variable indices start at 1", at)
                exp = 1
                i += 1
                if i < len(group) and group[i][0] == "pow":
                    i += 1
                    if i >= len(group) or group[i][0] != "int":
                        raise PolyParseError("'^' must be followed by an integer", group[i - 1][2])
                    exp = group[i][1]
                    i += 1
                exps[var] = exps.get(var, 0) + exp
                max_var = max(max_var, var)
            else:
                raise PolyParseError("expected a coefficient or variable", at)
            expect_factor = False
            if i < len(group) and group[i][0] == "mul":
                i += 1
                expect_factor = True
        if expect_factor:
            raise PolyParseError("dangling '*'", group[-1][2])
        raw_terms.append((coeff_enc, exps))

    if n is None:
        n = max_var
    elif max_var > n:
        raise PolyParseError(f"variable x{max_var} exceeds arity {n}", 0)

    built = []
    for coeff_enc, exps in raw_terms:
        coeff = field.one if coeff_enc is None else field.element(coeff_enc)
        vec = [0] * n
        for var, exp in exps.items():
            vec[var - 1] = exp
        built.append((tuple(vec), coeff))
    return ReducedPoly.from_terms(field, n, built)


def format_poly(poly: ReducedPoly) -> str:
    """Canonical text form: descending graded-lex, '+'-joined."""
    if poly.is_zero():
        return "0"
    parts = []
    for exps, coeff in poly.terms:
        factors = []
        for i, a in enumerate(exps):
            if a == 1:
                factors.append(f"x{i + 1}")
            elif a > 1:
                factors.append(f"x{i + 1}^{a}")
        enc = coeff.enc
        if not factors:
            parts.append(str(enc))
        elif enc == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{enc}*" + "*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# value-table JSON format
# ---------------------------------------------------------------------------

def value_table_to_json(field: Field, n: int, table: Sequence) -> dict:
    encs = [v.enc if isinstance(v, FieldElement) else int(v) for v in table]
    return {"field": field.spec_string(), "n": n, "table": encs}


def value_table_from_json(obj: dict) -> tuple[Field, int, list[FieldElement]]:
    try:
        field = Field.from_spec(str(obj["field"]))
        n = int(obj["n"])
        raw = obj["table"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed value-table object: {exc}") from None
    if n < 0:
        raise ValueError("n must be nonnegative")
    expected = field.q ** n
    if len(raw) != expected:
        raise ValueError(f"table has {len(raw)} entries, expected {expected}")
    return field, n, [field.element(int(v)) for v in raw]
