import pytest
from pydantic import ValidationError

from qsymflow import load_basis
from qsymflow.coeff import q, t
from qsymflow.exceptions import BasisMismatchError, UnknownBasisError
from qsymflow.qsym import (
    L_TAG,
    M_TAG,
    BasisTag,
    QSymElement,
    TensorElement,
    antipode,
    comul,
    convert,
    counit_left,
    counit_right,
    from_M,
    mul,
    mul_antipode_id,
    specialize,
    tensor_mul,
    to_M,
)

D = BasisTag(name="D")
G = BasisTag(name="G")
MQ = BasisTag(name="Mq")


def el(tag, *terms):
    out = QSymElement(tag)
    for alpha, c in terms:
        out = out + QSymElement.basis_element(tag, alpha, c)
    return out


def test_basis_tag_validation():
    assert str(BasisTag(name="K", nu=3)) == "K(nu=3)"
    with pytest.raises(ValidationError):
        BasisTag(name="K")
    with pytest.raises(ValidationError):
        BasisTag(name="K", nu=1)
    with pytest.raises(ValidationError):
        BasisTag(name="D", nu=2)


def test_load_basis():
    assert load_basis("K", nu=3) is load_basis(BasisTag(name="K", nu=3))
    with pytest.raises(UnknownBasisError):
        load_basis("X")


def test_element_rendering():
    x = el(D, ((2, 3), q + t), ((1,), -1))
    assert str(x) == "-D[1] + (q + t)*D[2,3]"
    assert str(QSymElement.basis_element(BasisTag(name="K", nu=3), (2, 1))) == "K[2,1](nu=3)"
    assert str(QSymElement(M_TAG)) == "0"


def test_monomial_product():
    x = QSymElement.basis_element(M_TAG, (1,))
    assert mul(x, x) == el(M_TAG, ((1, 1), 2), ((2,), 1))
    assert str(mul(x, x)) == "M[2] + 2*M[1,1]"


def test_dqt_product():
    x, y = QSymElement.basis_element(D, (2, 1)), QSymElement.basis_element(D, (2,))
    expected = el(
        D,
        ((2, 1, 2), 1),
        ((2, 2, 1), 2),
        ((2, 3), q + 2 * t),
        ((4, 1), q + 2 * t),
        ((5,), t * (q + t)),
    )
    assert mul(x, y) == expected
    assert specialize(to_M(mul(x, y)), 1, 0) == mul(
        QSymElement.basis_element(M_TAG, (2, 1)), QSymElement.basis_element(M_TAG, (2,))
    )


def test_dqt_to_monomial():
    x = to_M(QSymElement.basis_element(D, (2, 1)))
    assert x == el(M_TAG, ((2, 1), 1 / q), ((3,), -t / q ** 2))


def test_unit_and_mismatch():
    x = QSymElement.basis_element(D, (1, 2))
    assert mul(QSymElement.unit(D), x) == x
    with pytest.raises(BasisMismatchError):
        mul(x, QSymElement.basis_element(M_TAG, (1,)))
    with pytest.raises(BasisMismatchError):
        x + QSymElement.basis_element(L_TAG, (1,))


def test_fundamental_to_monomial():
    assert to_M(QSymElement.basis_element(L_TAG, (1, 2))) == el(M_TAG, ((1, 2), 1), ((1, 1, 1), 1))
    assert convert(QSymElement.basis_element(M_TAG, (1, 2)), L_TAG) == el(L_TAG, ((1, 2), 1), ((1, 1, 1), -1))


def test_antipode():
    assert antipode(QSymElement.basis_element(M_TAG, (1, 2))) == el(M_TAG, ((2, 1), 1), ((3,), 1))
    x = QSymElement.basis_element(M_TAG, (2, 1))
    assert not mul_antipode_id(comul(x))
    y = QSymElement.basis_element(D, (1, 1))
    assert convert(antipode(convert(antipode(y), M_TAG)), D) == y


def test_bialgebra_in_monomials():
    x, y = QSymElement.basis_element(M_TAG, (1,)), QSymElement.basis_element(M_TAG, (2, 1))
    assert comul(mul(x, y)) == tensor_mul(comul(x), comul(y))
    assert counit_left(comul(y)) == y and counit_right(comul(y)) == y


@pytest.mark.parametrize("name", ["M", "L", "E", "LambdaStar", "Eta", "EtaQ", "D", "G", "Mq"])
def test_round_trip_through_monomials(name):
    tag = BasisTag(name=name)
    x = el(tag, ((1, 2), q), ((3,), 1), ((2, 1, 1), t - 1))
    assert from_M(to_M(x), tag) == x


def test_round_trip_kappa():
    tag = BasisTag(name="K", nu=3)
    x = el(tag, ((1, 2), 2), ((3,), 1))
    assert from_M(to_M(x), tag) == x


@pytest.mark.parametrize("gamma", [(1, 2, 1), (2, 2), (3,)])
def test_hall_littlewood_coproduct_specializations(gamma):
    delta = comul(QSymElement.basis_element(G, gamma))
    assert specialize(delta, 0).terms == comul(QSymElement.basis_element(L_TAG, gamma)).terms
    assert specialize(delta, 1).terms == comul(QSymElement.basis_element(M_TAG, gamma)).terms


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((1, 1), (2,)), ((2,), (1, 1))])
def test_hall_littlewood_and_qmonomial_products_specialize(alpha, beta):
    for tag in (G, MQ):
        x, y = QSymElement.basis_element(tag, alpha), QSymElement.basis_element(tag, beta)
        at_zero = specialize(mul(x, y), 0).terms
        assert at_zero == mul(QSymElement.basis_element(L_TAG, alpha), QSymElement.basis_element(L_TAG, beta)).terms
        at_one = specialize(mul(x, y), 1).terms
        assert at_one == mul(QSymElement.basis_element(M_TAG, alpha), QSymElement.basis_element(M_TAG, beta)).terms


def test_hall_littlewood_at_zero_is_fundamental():
    x = convert(QSymElement.basis_element(G, (1, 2, 1)), L_TAG)
    assert specialize(x, 0) == QSymElement.basis_element(L_TAG, (1, 2, 1))


def test_hall_littlewood_product():
    x, y = QSymElement.basis_element(G, (2,)), QSymElement.basis_element(G, (1, 1))
    assert mul(x, y) == el(
        G,
        ((1, 3), 1),
        ((2, 2), 1 - q),
        ((3, 1), 1),
        ((1, 1, 2), 1),
        ((1, 2, 1), 1 - q + q ** 2),
        ((2, 1, 1), 1 + q ** 2 - q ** 3),
    )


def test_hall_littlewood_coproduct():
    expected = TensorElement(G, G, {
        ((), (1, 2, 1)): 1,
        ((1,), (2, 1)): 1,
        ((1,), (1, 1, 1)): q * (1 - q),
        ((1, 2), (1,)): 1,
        ((1, 2, 1), ()): 1,
        ((1, 1), (1, 1)): 1 - q ** 2,
    })
    assert comul(QSymElement.basis_element(G, (1, 2, 1))) == expected


def test_fundamental_in_hall_littlewood_basis():
    assert convert(QSymElement.basis_element(L_TAG, (3,)), G) == el(
        G, ((3,), 1), ((1, 2), q), ((2, 1), q), ((1, 1, 1), q ** 3)
    )
    for alpha in [(3,), (1, 2), (2, 1, 1), (1, 1, 2)]:
        x = QSymElement.basis_element(G, alpha)
        assert convert(convert(x, L_TAG), G) == x


def test_grade_part():
    x = el(D, ((1,), 1), ((2,), q), ((1, 1), t))
    assert x.grades() == (1, 2)
    assert x.grade_part(2) == el(D, ((2,), q), ((1, 1), t))
