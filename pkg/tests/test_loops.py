import pytest

from codeloops import (
    INFINITY,
    SIMPLEX_PRESETS,
    BinaryCode,
    CodeLoop,
    build_code,
    codeword_from_str,
    is_moufang,
    latin_square_report,
    loop_mul,
    loop_to_json,
    p_from_loop,
    parse_poly,
    solve_eta,
    verify_loop_identities,
    weight,
)
from helpers import gf2_table_by_mask, factor_set_conditions_hold

PAPER_P = "x2 + x1*x3 + x1*x2*x3"


@pytest.fixture(scope="module")
def repetition_loop():
    # C = {0000, 1111}: the smallest doubly even code with a nonzero word
    code = BinaryCode(4, [codeword_from_str("1111")])
    return CodeLoop(solve_eta(code))


@pytest.fixture(scope="module")
def paper_loop(gf2):
    poly = parse_poly(gf2, PAPER_P)
    build = build_code(poly, simplex_matrix=SIMPLEX_PRESETS["paper-example"])
    return CodeLoop(solve_eta(build.code))


@pytest.fixture(scope="module")
def abelian_loop():
    # level-3 code: all weights divisible by 8, so the squaring map vanishes
    code = BinaryCode(8, [codeword_from_str("11111111")])
    return CodeLoop(solve_eta(code))


# -- factor sets -------------------------------------------------------------

def test_eta_repetition_code(repetition_loop):
    eta = repetition_loop.eta
    assert eta(1, 1) == 1  # w(1111)/4 = 1
    assert eta(0, 0) == eta(0, 1) == eta(1, 0) == 0
    assert factor_set_conditions_hold(eta)


def test_eta_zero_code():
    code = BinaryCode(4, [])
    eta = solve_eta(code)
    assert eta(0, 0) == 0
    loop = CodeLoop(eta)
    assert loop.order == 2
    rep = verify_loop_identities(loop)
    assert rep["ok"]
    assert len(rep["squares"]) == 1


def test_eta_paper_code(paper_loop):
    assert factor_set_conditions_hold(paper_loop.eta)


def test_eta_normalization(paper_loop):
    eta = paper_loop.eta
    for y in range(8):
        assert eta(0, y) == 0
        assert eta(y, 0) == 0


def test_eta_requires_doubly_even():
    odd = BinaryCode(3, [codeword_from_str("111")])  # weight 3, level 0
    with pytest.raises(ValueError):
        solve_eta(odd)


def test_eta_dimension_cap():
    rows = [0b1111 << (4 * i) for i in range(7)]
    code = BinaryCode(28, rows)
    assert code.level() == 2
    with pytest.raises(ValueError):
        solve_eta(code)


def test_eta_level_three_code_is_trivial(abelian_loop):
    # every basis statistic vanishes mod 2, so the template sum is zero
    assert all(b == 0 for b in abelian_loop.eta.bits)
    assert factor_set_conditions_hold(abelian_loop.eta)


# -- loop multiplication -----------------------------------------------------

def test_neutral_element(repetition_loop):
    for u in repetition_loop.elements():
        assert loop_mul(repetition_loop, (0, 0), u) == u
        assert loop_mul(repetition_loop, u, (0, 0)) == u


def test_repetition_loop_is_cyclic_of_order_four(repetition_loop):
    u = (1, 0)
    sq = repetition_loop.mul(u, u)
    assert sq == (0, 1)
    cube = repetition_loop.mul(sq, u)
    fourth = repetition_loop.mul(cube, u)
    assert cube != (0, 0) and fourth == (0, 0)


def test_mul_membership_check(repetition_loop):
    with pytest.raises(ValueError):
        repetition_loop.mul((2, 0), (0, 0))
    with pytest.raises(ValueError):
        repetition_loop.mul((0, 2), (0, 0))


def test_divisions_solve_equations(paper_loop):
    els = paper_loop.elements()
    for u in els[:8]:
        for w in els:
            x = paper_loop.left_div(u, w)
            assert paper_loop.mul(u, x) == w
            y = paper_loop.right_div(w, u)
            assert paper_loop.mul(y, u) == w


# -- commutators and associators ----------------------------------------------

def test_commutator_self_is_identity(paper_loop):
    for u in paper_loop.elements():
        assert paper_loop.commutator(u, u) == (0, 0)


def test_commutator_weight_formula(paper_loop):
    cw = [paper_loop.code.encode(m) for m in range(8)]
    for u in paper_loop.elements():
        for v in paper_loop.elements():
            expected = (0, weight(cw[u[0]] & cw[v[0]]) // 2 % 2)
            assert paper_loop.commutator(u, v) == expected


def test_associator_weight_formula(paper_loop):
    cw = [paper_loop.code.encode(m) for m in range(8)]
    for u in paper_loop.elements():
        for v in paper_loop.elements():
            for w in paper_loop.elements():
                expected = (0, weight(cw[u[0]] & cw[v[0]] & cw[w[0]]) % 2)
                assert paper_loop.associator(u, v, w) == expected


# -- structural checks ---------------------------------------------------------

def test_latin_square(paper_loop):
    assert latin_square_report(paper_loop)["ok"]


def test_moufang_elementary_abelian(abelian_loop):
    assert is_moufang(abelian_loop)["ok"]


def test_moufang_cyclic(repetition_loop):
    assert is_moufang(repetition_loop)["ok"]


def test_moufang_paper(paper_loop):
    report = is_moufang(paper_loop)
    assert report["ok"]
    assert report["triples_checked"] == 16 ** 3


def test_moufang_reports_violations():
    # a broken factor set: flip one off-diagonal entry of the paper table
    code = BinaryCode(4, [codeword_from_str("1111")])
    eta = solve_eta(code)
    bits = list(eta.bits)
    bits[1] ^= 0b01  # eta(1, 0) becomes 1: (0,0) is no longer neutral
    broken = CodeLoop(type(eta)(code, bits))
    assert not is_moufang(broken)["ok"] or not latin_square_report(broken)["ok"] \
        or not verify_loop_identities(broken)["ok"]


def test_identities_paper(paper_loop):
    report = verify_loop_identities(paper_loop)
    assert report["ok"], report["violations"]
    assert report["squares"] == [(0, 0), (0, 1)]


def test_identities_abelian(abelian_loop):
    report = verify_loop_identities(abelian_loop)
    assert report["ok"]
    assert report["squares"] == [(0, 0)]
    assert report["elementary_abelian_iff_one_square"]


def test_identities_cyclic(repetition_loop):
    report = verify_loop_identities(repetition_loop)
    assert report["ok"]
    assert report["squares"] == [(0, 0), (0, 1)]


# -- the squaring map ----------------------------------------------------------

def test_p_from_loop_roundtrip(paper_loop, gf2):
    poly = parse_poly(gf2, PAPER_P)
    assert p_from_loop(paper_loop) == gf2_table_by_mask(poly)


def test_p_from_loop_abelian(abelian_loop):
    assert p_from_loop(abelian_loop) == [0, 0]


def test_p_from_loop_cyclic(repetition_loop):
    assert p_from_loop(repetition_loop) == [0, 1]


def test_p_from_loop_rejects_many_squares():
    class Fake:
        def squares(self):
            return {(0, 0), (0, 1), (1, 0)}

    with pytest.raises(ValueError):
        p_from_loop(Fake())


# -- export -------------------------------------------------------------------

def test_loop_json_shape(repetition_loop):
    obj = loop_to_json(repetition_loop)
    assert obj["order"] == 4
    assert len(obj["eta"]) == 2 and len(obj["eta"][0]) == 2
    assert len(obj["cayley"]) == 4 and sorted(obj["cayley"][0]) == [0, 1, 2, 3]
    # row of the neutral element is the identity permutation
    assert obj["cayley"][0] == [0, 1, 2, 3]


def test_element_indexing(paper_loop):
    els = paper_loop.elements()
    assert els[0] == (0, 0) and els[1] == (0, 1) and els[2] == (1, 0)
    for i, el in enumerate(els):
        assert paper_loop.index(el) == i
        assert paper_loop.element_at(i) == el
