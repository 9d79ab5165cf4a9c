import random
from fractions import Fraction

import pytest

from qsymflow.combinat import comp_of, position_sets, preshuffle, set_of, subsets
from qsymflow.exceptions import BasisMismatchError, CompositionError
from qsymflow.qsym import L_TAG, QSymElement, comul, mul
from qsymflow.scf import (
    ONE_ATOM,
    REG_ATOM,
    ScfTensor,
    bracket,
    ch,
    ch_tensor,
    check_nu,
    chi,
    chi_dot,
    coprod,
    expand_in_G,
    hall_inner,
    kappa,
    kappa_coproduct,
    kappa_product,
    m,
    m_A,
    mk_phi_If,
    phi_If_G_coefficients,
    random_classfunction,
    unit,
)


def test_atoms():
    x = chi_dot(frozenset(), 2, 3)
    assert x.value(frozenset()) == 1
    assert x.value({1}) == Fraction(-1, 2)
    assert chi(frozenset(), 2, 3).value(frozenset()) == 2


def test_bad_inputs():
    with pytest.raises(ValueError):
        check_nu(1)
    with pytest.raises(CompositionError):
        kappa({3}, 3, 2)
    with pytest.raises(BasisMismatchError):
        kappa(frozenset(), 2, 2) + kappa(frozenset(), 3, 2)


@pytest.mark.parametrize("nu", [2, 3])
def test_chi_dot_product(nu):
    m_, n_ = 4, 3
    for I in ({1, 3}, {2}):
        for J in ({1}, {1, 2}):
            x, y = chi_dot(I, m_, nu), chi_dot(J, n_, nu)
            for A in position_sets(m_ + n_, n_):
                _, shuffled = preshuffle(frozenset(I), frozenset(J), A, m_, n_)
                assert m_A(x, y, A) == chi_dot(shuffled, m_ + n_, nu)


@pytest.mark.parametrize("nu", [2, 3])
def test_chi_dot_product_at_one_position_set(nu):
    x, y = chi_dot({2, 3}, 4, nu), chi_dot({2}, 3, nu)
    product = m_A(x, y, {1, 3, 4})
    assert product == chi_dot({1, 3, 4, 5, 6}, 7, nu)
    atoms = {i: ONE_ATOM for i in range(1, 7)}
    atoms[2] = REG_ATOM
    assert product == bracket(nu, atoms, n=7)


def test_kappa_coproduct_fixture():
    expected = ScfTensor(2, {
        ((0, frozenset()), (6, frozenset({1, 4}))): 1,
        ((2, frozenset({1})), (4, frozenset({2}))): 1,
        ((3, frozenset({1})), (3, frozenset({1}))): 1,
        ((5, frozenset({1, 4})), (1, frozenset())): 1,
        ((6, frozenset({1, 4})), (0, frozenset())): 1,
    })
    assert kappa_coproduct((1, 3, 2), 2) == expected
    assert coprod(kappa(set_of((1, 3, 2)), 6, 2)) == expected


@pytest.mark.parametrize("nu", [2, 3, 5])
def test_kappa_product_formula(nu):
    for m_, n_ in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        for I in subsets(m_ - 1):
            for J in subsets(n_ - 1):
                assert kappa_product(I, J, m_, n_, nu) == m(kappa(I, m_, nu), kappa(J, n_, nu))


def test_characteristic_map_on_supercharacters():
    for n in range(4):
        for I in subsets(max(n - 1, 0)):
            assert ch(chi_dot(I, n, 3)) == QSymElement.basis_element(L_TAG, comp_of(I, n))
    assert ch(unit(2)) == QSymElement.unit(L_TAG)


@pytest.mark.parametrize("nu", [2, 3])
def test_characteristic_map_is_a_morphism(nu):
    rng = random.Random(7)
    for a, b in [(0, 2), (1, 1), (2, 2), (1, 3)]:
        phi, psi = random_classfunction(a, nu, rng), random_classfunction(b, nu, rng)
        assert ch(m(phi, psi)) == mul(ch(phi), ch(psi))
        joint = random_classfunction(a + b, nu, rng)
        assert ch_tensor(coprod(joint)) == comul(ch(joint))


def test_hall_orthogonality():
    nu, n = 3, 4
    for I in subsets(n - 1):
        for J in subsets(n - 1):
            expected = Fraction((nu - 1) ** (n - 1 - len(I))) if I == J else 0
            assert hall_inner(chi(I, n, nu), chi(J, n, nu)) == expected


def test_phi_family_in_hall_littlewood_coordinates():
    def f(i):
        return Fraction(i, 3)

    for I in subsets(3):
        assert expand_in_G(mk_phi_If(I, f, 4, 2)) == phi_If_G_coefficients(I, f, 4, 2)
    assert phi_If_G_coefficients(frozenset(), f, 2, 2) == {frozenset(): 1, frozenset({1}): Fraction(7, 3)}
