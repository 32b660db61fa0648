from itertools import product

import pytest

from projspace.field import (
    BUILTIN_MODULI,
    FieldElement,
    FieldSpec,
    MixedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedOrder,
    ZeroInverse,
    field_add,
    field_from_order,
    field_inv,
    field_make,
    field_mul,
    field_sub,
)

SUPPORTED_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27]


def test_prime_field():
    F = field_make(2, 1)
    assert F.order == 2 and F.modulus == ()


def test_gf4_with_explicit_modulus():
    F = field_make(2, 2, [1, 1, 1])
    assert F.order == 4


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x + 1)^2 over GF(2); x = 1 is a root.
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, [1, 0, 1])


def test_reducible_quartic_without_roots_rejected():
    # (x^2 + x + 1)^2 = x^4 + x^2 + 1 has no root in GF(2) but is reducible.
    with pytest.raises(ReducibleModulus):
        field_make(2, 4, [1, 0, 1, 0, 1])


@pytest.mark.parametrize("p", [1, 4, 6, 9, 15])
def test_non_prime_characteristic(p):
    with pytest.raises(NonPrimeCharacteristic):
        field_make(p, 1)


@pytest.mark.parametrize("p, m", [(2, 5), (29, 1), (3, 4)])
def test_orders_above_cap(p, m):
    with pytest.raises(UnsupportedOrder):
        field_make(p, m)


def test_from_order_rejects_non_prime_powers():
    with pytest.raises(UnsupportedOrder):
        field_from_order(6)


def test_small_products():
    F2, F3, F4 = field_from_order(2), field_from_order(3), field_from_order(4)
    assert field_add(F2.element(1), F2.element(1)).index == 0
    # index 2 is x, index 3 is x + 1
    assert field_mul(F4.element(2), F4.element(2)).index == 3
    assert field_mul(F3.element(2), F3.element(2)).index == 1
    assert field_sub(F3.element(0), F3.element(1)).index == 2


def test_inverses():
    F2, F3, F4 = field_from_order(2), field_from_order(3), field_from_order(4)
    assert field_inv(F2.element(1)).index == 1
    assert field_inv(F3.element(2)).index == 2
    # from the multiplication table: x * (x + 1) = x^2 + x = 1
    assert field_inv(F4.element(2)).index == 3


def test_zero_inverse():
    with pytest.raises(ZeroInverse):
        field_inv(field_from_order(5).element(0))


def test_mixed_fields():
    with pytest.raises(MixedFields):
        field_add(field_from_order(2).element(1), field_from_order(3).element(1))


def test_operators_match_functions():
    F = field_from_order(9)
    a, b = F.element(5), F.element(7)
    assert a + b == field_add(a, b)
    assert a * b == field_mul(a, b)
    assert (a / b) * b == a
    assert -a + a == F.element(0)


def test_builtin_table_is_irreducible():
    for q, modulus in BUILTIN_MODULI.items():
        F = field_from_order(q)
        assert F.modulus == modulus


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_from_order(q)
    add, mul = F.add_table, F.mul_table
    els = range(q)
    for a, b in product(els, repeat=2):
        assert add[a][b] == add[b][a]
        assert mul[a][b] == mul[b][a]
    for a, b, c in product(els, repeat=3):
        assert add[add[a][b]][c] == add[a][add[b][c]]
        assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
        assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    for a in els:
        assert add[a][0] == a and mul[a][1] == a
        assert add[a][F.neg(a)] == 0
        if a:
            assert mul[a][F.inv(a)] == 1
            assert F.inv(F.inv(a)) == a


def test_json_round_trip():
    F = field_from_order(27)
    assert F.to_json() == {"p": 3, "m": 3, "modulus": [1, 2, 0, 1]}
    assert FieldSpec.from_json(F.to_json()) == F


def test_element_index_range():
    with pytest.raises(ValueError):
        FieldElement(field_from_order(4), 4)
