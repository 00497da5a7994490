import random

import pytest

from codeloops import (
    INFINITY,
    SIMPLEX_PRESETS,
    BinaryCode,
    build_code,
    codeword_from_str,
    codeword_to_str,
    derived_form_eval,
    gf2_rank,
    intersection,
    level_of_rows,
    parse_poly,
    prescribe_cg,
    simplex_code,
    verify_build,
    weight,
    weight_congruence,
)
from helpers import mask_point, random_gf2_poly

PAPER_P = "x2 + x1*x3 + x1*x2*x3"


@pytest.fixture(scope="module")
def paper_build(gf2):
    poly = parse_poly(gf2, PAPER_P)
    return build_code(poly, simplex_matrix=SIMPLEX_PRESETS["paper-example"])


# -- weight and intersection -------------------------------------------------

def test_weight_basics():
    assert weight(0) == 0
    assert weight(codeword_from_str("1000111")) == 4


def test_intersection_basics():
    x = codeword_from_str("1100")
    y = codeword_from_str("0110")
    assert intersection(x, x) == x
    assert intersection(x, 0) == 0
    assert codeword_to_str(intersection(x, y), 4) == "0100"


def test_weight_identity_seeded_pairs():
    rng = random.Random(0)
    for _ in range(1000):
        length = rng.randrange(1, 65)
        u = rng.getrandbits(length)
        v = rng.getrandbits(length)
        assert weight(u ^ v) == weight(u) + weight(v) - 2 * weight(u & v)


def test_codeword_str_roundtrip():
    s = "1000111,0000000,1000111"
    c = codeword_from_str(s)
    assert codeword_to_str(c, 21, block=7) == s
    with pytest.raises(ValueError):
        codeword_from_str("10x")


# -- level ------------------------------------------------------------------

def test_zero_code_level():
    assert level_of_rows([]) is INFINITY
    assert level_of_rows([0, 0]) is INFINITY


def test_simplex_level():
    d = simplex_code(3)
    assert d.level() == 2


def test_level_cap():
    with pytest.raises(ValueError):
        level_of_rows([1 << i for i in range(21)])


def test_level_of_paper_code(paper_build):
    assert paper_build.code.level() == 2


# -- BinaryCode --------------------------------------------------------------

def test_binary_code_rejects_dependent_rows():
    with pytest.raises(ValueError):
        BinaryCode(3, [0b011, 0b110, 0b101])


def test_binary_code_rejects_overlong_rows():
    with pytest.raises(ValueError):
        BinaryCode(2, [0b100])


def test_binary_code_encode_and_enumerate():
    code = BinaryCode(4, [0b0011, 0b1100])
    words = list(code.codewords())
    assert words == [0b0000, 0b0011, 0b1100, 0b1111]
    assert code.encode(0b11) == 0b1111
    with pytest.raises(ValueError):
        code.encode(4)


def test_gf2_rank():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0


def test_binary_code_from_strings():
    code = BinaryCode.from_strings(["1000111,0000000,1000111", "0101011,1000111,0101011"])
    assert code.length == 21 and code.dim == 2
    with pytest.raises(ValueError):
        BinaryCode.from_strings(["101", "10"])


# -- simplex codes -----------------------------------------------------------

def test_simplex_m1():
    d = simplex_code(1)
    assert d.length == 1 and d.dim == 1
    assert sorted(d.codewords()) == [0, 1]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_simplex_weight_law(m):
    d = simplex_code(m)
    for mask in range(1, 1 << m):
        assert weight(d.encode(mask)) == 1 << (m - 1)


def test_simplex_paper_override():
    d = simplex_code(3, matrix=SIMPLEX_PRESETS["paper-example"])
    assert d.to_strings() == ["1000111", "0101011", "0011101"]
    for mask in range(1, 8):
        assert weight(d.encode(mask)) == 4


def test_simplex_rejects_bad_matrix():
    with pytest.raises(ValueError):
        simplex_code(3, matrix=["1000111", "1000111", "0011101"])
    with pytest.raises(ValueError):
        simplex_code(2, matrix=["1000111", "0101011", "0011101"])
    with pytest.raises(ValueError):
        simplex_code(0)


def test_weight_congruence():
    assert weight_congruence(0, 3) == 0
    for d in range(1, 8):
        assert weight_congruence(d, 3) == 1
    dual = simplex_code(3)
    for d in range(8):
        assert weight(dual.encode(d)) // 4 % 2 == weight_congruence(d, 3)


# -- the code construction ---------------------------------------------------

def test_build_paper_example_rows(paper_build):
    assert paper_build.subsets.sets == ((1, 2), (2, 3), (1, 2, 3))
    assert paper_build.code.to_strings(block=7) == [
        "1000111,0000000,1000111",
        "0101011,1000111,0101011",
        "0000000,0101011,0011101",
    ]


def test_build_paper_example_weights(paper_build, gf2):
    poly = paper_build.poly
    c3 = paper_build.map(0b100)
    assert weight(c3) == 8
    assert weight(c3) // 4 % 2 == poly.evaluate(mask_point(gf2, 0b100, 3)).enc == 0
    csum = paper_build.map(0b111)
    assert codeword_to_str(csum, 21, block=7) == "1101100,1101100,1110001"
    assert weight(csum) == 12
    assert weight(csum) // 4 % 2 == poly.evaluate(mask_point(gf2, 0b111, 3)).enc == 1


def test_build_verify_paper(paper_build):
    report = paper_build.verify()
    assert report["violations"] == []
    assert report["level"] == 2
    assert report["length"] == 21 == 3 * 7
    assert report["dim"] == 3


def test_build_default_simplex_also_verifies(gf2):
    poly = parse_poly(gf2, PAPER_P)
    build = build_code(poly)
    assert build.verify()["violations"] == []


def test_build_map_linear_and_injective(paper_build):
    images = [paper_build.map(x) for x in range(8)]
    assert len(set(images)) == 8
    for x in range(8):
        for y in range(8):
            assert paper_build.map(x ^ y) == images[x] ^ images[y]


def test_build_level_one(gf2):
    build = build_code(parse_poly(gf2, "x1*x2"))
    assert build.r == 1
    assert build.code.level() == 1
    assert build.verify()["violations"] == []


def test_build_forced_level(gf2):
    build = build_code(parse_poly(gf2, "x1*x2"), level=2)
    assert build.code.level() == 2
    assert verify_build(build.poly, build.code, r=2)["violations"] == []


def test_build_j_order_override(gf2):
    poly = parse_poly(gf2, PAPER_P)
    build = build_code(
        poly,
        j_order=[(1, 2, 3), (2, 3), (1, 2)],
        simplex_matrix=SIMPLEX_PRESETS["paper-example"],
    )
    assert build.subsets.sets == ((1, 2, 3), (2, 3), (1, 2))
    assert build.verify()["violations"] == []
    # blocks travel with their subsets: e3's blocks appear in reversed order
    assert build.map(0b100) == codeword_from_str("0011101,0101011,0000000")


def test_build_rejects_degenerate(gf2):
    with pytest.raises(ValueError):
        build_code(parse_poly(gf2, "0"))
    with pytest.raises(ValueError):
        build_code(parse_poly(gf2, "1 + x1"))
    with pytest.raises(ValueError):
        build_code(parse_poly(gf2, "x1*x3"))  # x2 missing from P
    with pytest.raises(ValueError):
        build_code(parse_poly(gf2, "x1*x2"), level=0)


def test_build_random_suite(gf2):
    rng = random.Random(41)
    for _ in range(15):
        poly = random_gf2_poly(rng, gf2, 4, min_degree=2, max_degree=4, cover_all=True)
        build = build_code(poly)
        report = build.verify()
        assert report["violations"] == []
        assert report["dim"] == 4
        assert report["level"] == build.r
        assert report["length"] == len(build.subsets) * ((1 << (build.r + 1)) - 1)


# -- verification of foreign matrices ----------------------------------------

def test_verify_tampered_matrix(paper_build, gf2):
    rows = list(paper_build.code.rows)
    rows[0] ^= 1  # flip one bit
    report = verify_build(paper_build.poly, rows)
    assert report["violations"]


def test_verify_dependent_rows(gf2):
    poly = parse_poly(gf2, PAPER_P)
    good = build_code(poly, simplex_matrix=SIMPLEX_PRESETS["paper-example"]).code.rows
    rows = [good[0], good[1], good[0] ^ good[1]]
    report = verify_build(poly, rows)
    assert any("dimension" in v for v in report["violations"])


def test_verify_accepts_strings(paper_build):
    rows = paper_build.code.to_strings(block=7)
    report = verify_build(paper_build.poly, rows)
    assert report["violations"] == []


def test_verify_rejects_degenerate_poly(gf2):
    with pytest.raises(ValueError):
        verify_build(parse_poly(gf2, "0"), [])


# -- prescribed weight congruences -------------------------------------------

def zeros(n):
    return [[0] * n for _ in range(n)]


def zeros3(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def test_prescribe_rejects_zero():
    with pytest.raises(ValueError):
        prescribe_cg([0], zeros(1), zeros3(1))


def test_prescribe_single_generator():
    build = prescribe_cg([1], zeros(1), zeros3(1))
    c1 = build.code.rows[0]
    assert weight(c1) % 4 == 0
    assert weight(c1) // 4 % 2 == 1
    assert build.code.level() == 2


def test_prescribe_matches_paper_polynomial(gf2):
    # extract the prescription from P by polarization, rebuild, and compare
    # the basis statistics of the resulting doubly even code
    poly = parse_poly(gf2, PAPER_P)
    n = 3
    basis = [mask_point(gf2, 1 << i, n) for i in range(n)]
    alpha = [poly.evaluate(basis[i]).enc for i in range(n)]
    beta = zeros(n)
    gamma = zeros3(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                beta[i][j] = derived_form_eval(poly, (basis[i], basis[j])).enc
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) == 3:
                    gamma[i][j][k] = derived_form_eval(
                        poly, (basis[i], basis[j], basis[k])
                    ).enc

    build = prescribe_cg(alpha, beta, gamma)
    rows = build.code.rows
    assert build.code.level() == 2
    for i in range(n):
        assert weight(rows[i]) // 4 % 2 == alpha[i]
        for j in range(i + 1, n):
            assert weight(rows[i] & rows[j]) // 2 % 2 == beta[i][j]
    assert weight(rows[0] & rows[1] & rows[2]) % 2 == gamma[0][1][2]


def test_prescribe_validation():
    beta = zeros(2)
    beta[0][1] = 1  # asymmetric
    with pytest.raises(ValueError):
        prescribe_cg([1, 1], beta, zeros3(2))
    beta_diag = zeros(2)
    beta_diag[0][0] = 1
    with pytest.raises(ValueError):
        prescribe_cg([1, 1], beta_diag, zeros3(2))
    gamma = zeros3(3)
    gamma[0][1][2] = 1  # not totally symmetric
    with pytest.raises(ValueError):
        prescribe_cg([1, 1, 1], zeros(3), gamma)
    with pytest.raises(ValueError):
        prescribe_cg([2], zeros(1), zeros3(1))
