import itertools

import pytest

from codeloops import Field, is_prime


def test_prime_field_construction(gf2):
    assert gf2.p == 2 and gf2.e == 1 and gf2.q == 2
    assert gf2.modulus == (0, 1)  # identity polynomial t
    assert [el.enc for el in gf2.elements()] == [0, 1]


def test_gf9_modulus_is_t_squared_plus_one(gf9):
    # lexicographically smallest monic irreducible over GF(3): t^2 + 1
    assert gf9.modulus == (1, 0, 1)


def test_gf9_t_times_t(gf9):
    # with modulus t^2 + 1: t * t = -1 = 2, frozen from direct polynomial
    # multiplication mod (t^2 + 1) and mod 3
    t = gf9.from_coeffs((0, 1))
    assert (t * t).enc == 2


def test_gf4_modulus(gf4):
    assert gf4.modulus == (1, 1, 1)  # t^2 + t + 1, the only irreducible


def test_non_prime_p_rejected():
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(1)


def test_bad_extension_degree_rejected():
    with pytest.raises(ValueError):
        Field(3, 0)


def test_size_cap():
    with pytest.raises(ValueError):
        Field(2, 17)


def test_gf2_characteristic(gf2):
    assert (gf2.one + gf2.one).is_zero()


def test_field_spec_roundtrip(gf9):
    assert Field.from_spec("3^2") == gf9
    assert Field.from_spec("2").q == 2
    assert Field.from_spec(" 5 ").q == 5
    with pytest.raises(ValueError):
        Field.from_spec("six")


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, e):
    field = Field(p, e)
    els = list(field.elements())
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)])
def test_inverse_law(p, e):
    field = Field(p, e)
    for a in field.elements():
        if a.is_zero():
            with pytest.raises(ZeroDivisionError):
                a.inv()
        else:
            assert a * a.inv() == field.one


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)])
def test_multiplicative_group_cyclic(p, e):
    field = Field(p, e)
    target = field.q - 1

    def order(a):
        k, acc = 1, a
        while acc != field.one:
            acc = acc * a
            k += 1
        return k

    orders = [order(a) for a in field.elements() if not a.is_zero()]
    assert all(target % k == 0 for k in orders)
    assert target in orders


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)])
def test_frobenius(p, e):
    field = Field(p, e)
    for a, b in itertools.product(field.elements(), repeat=2):
        assert (a + b) ** p == a ** p + b ** p


@pytest.mark.parametrize("p,e", [(2, 1), (3, 2), (2, 4), (7, 1)])
def test_encoding_roundtrip(p, e):
    field = Field(p, e)
    for k in range(field.q):
        assert field.element(k).enc == k


def test_pow_conventions(gf9):
    zero, one = gf9.zero, gf9.one
    assert zero ** 0 == one
    for a in gf9.elements():
        assert a ** 0 == one
        assert a ** 1 == a
        assert a ** 2 == a * a
    with pytest.raises(ValueError):
        one ** -1


def test_sub_neg(gf9):
    for a in gf9.elements():
        assert a - a == gf9.zero
        assert a + (-a) == gf9.zero


def test_ctx_mismatch_rejected(gf2, gf3):
    with pytest.raises(ValueError):
        gf2.one + gf3.one
    with pytest.raises(TypeError):
        gf2.one + 1


def test_element_encoding_range(gf9):
    with pytest.raises(ValueError):
        gf9.element(9)
    with pytest.raises(ValueError):
        gf9.element(-1)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
