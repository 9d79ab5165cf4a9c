import pytest

from qsymflow.BaseSuite import product_pairs
from qsymflow.exceptions import CompositionError, NotQuasisymmetricError
from qsymflow.oracle import TruncPoly, expand, expand_M, extract_all, extract_M, oracle_M_product, verify_product
from qsymflow.qsym import BasisTag, QSymElement, to_M


def test_expand_monomial():
    p = expand_M((1, 2), 3)
    assert p.terms == {(1, 2, 0): 1, (1, 0, 2): 1, (0, 1, 2): 1}
    with pytest.raises(CompositionError):
        expand_M((1, 1, 1), 2)


def test_oracle_monomial_product():
    assert oracle_M_product((1,), (1,), 2) == (((1, 1), 2), ((2,), 1))


def test_extract_rejects_non_quasisymmetric():
    with pytest.raises(NotQuasisymmetricError):
        extract_M(TruncPoly(2, {(1, 0): 1}), 1)


def test_extract_inverts_expand():
    x = QSymElement.basis_element(BasisTag(name="D"), (2, 1))
    assert extract_all(expand(x, 3)) == to_M(x)


def test_truncation_drops_high_degrees():
    p = TruncPoly(2, {(1, 0): 1, (0, 1): 1}, max_degree=1)
    assert (p * p).terms == {}


@pytest.mark.parametrize("name", ["M", "L", "E", "LambdaStar", "Eta", "EtaQ", "D", "G", "Mq"])
def test_product_rules_match_oracle(name):
    for alpha, beta in product_pairs(4):
        check = verify_product(BasisTag(name=name), alpha, beta)
        assert check.passed, check.diffs


def test_kappa_product_matches_oracle():
    for alpha, beta in product_pairs(3):
        assert verify_product(BasisTag(name="K", nu=2), alpha, beta).passed


def test_verify_at_a_point():
    check = verify_product(BasisTag(name="D"), (1,), (2,), point=(2, 3))
    assert check.passed and check.nvars == 3
