"""
The characteristic map ch_ν as a Hopf morphism from supercharacter functions to QSym.

Besides the morphism checks on random class functions, the suite covers the explicit
product and coproduct of the normalised supercharacters χ̇^I, the images of the 𝔾_I and
𝕄_I families, the 𝔾-expansion of the φ^{I,f} family and the Hall orthogonality relations.
"""

import random
from fractions import Fraction

from qsymflow.BaseSuite import BaseSuite, outcome
from qsymflow.combinat import comp_of, position_sets, preshuffle, subsets, translate
from qsymflow.qsym import BasisTag, QSymElement, comul, mul, specialize, to_M
from qsymflow.scf import (
    ScfTensor,
    ch,
    ch_tensor,
    chi,
    chi_dot,
    coprod,
    coprod_k,
    expand_in_G,
    hall_inner,
    kappa,
    m,
    m_A,
    mk_G_classfn,
    mk_M_classfn,
    mk_phi_If,
    phi_If_G_coefficients,
    random_classfunction,
)

GRADE_CAP = 5


def _shift_weight(i: int) -> Fraction:
    return Fraction(i % 3 - 1, 2)


class ScfMorphismSuite(BaseSuite):
    name = "scf-morphism"
    description = "ch_ν respects products and coproducts; χ̇, 𝔾, 𝕄 and φ^{I,f} identities"

    def get_cases(self, config):
        grade = min(config.max_grade, GRADE_CAP)
        for nu in config.nus:
            for m_, n_ in ((a, b) for a in range(1, grade) for b in range(1, grade - a + 1)):
                for I in subsets(m_ - 1):
                    for J in subsets(n_ - 1):
                        yield f"ν={nu}:χ̇ product {sorted(I)},{sorted(J)} ({m_},{n_})", ("chi-product", nu, I, J, m_, n_)
            for n in range(grade + 1):
                for I in subsets(max(n - 1, 0)):
                    yield f"ν={nu}:χ̇ coproduct {sorted(I)} ({n})", ("chi-coproduct", nu, I, n)
                    yield f"ν={nu}:families {sorted(I)} ({n})", ("families", nu, I, n)
                yield f"ν={nu}:orthogonality ({n})", ("orthogonality", nu, n)
            rng = random.Random(config.seed + nu)
            for index in range(config.cases):
                a = rng.randint(0, grade)
                b = rng.randint(0, grade - a)
                yield f"ν={nu}:random #{index} ({a},{b})", ("random", nu, a, b, rng.randrange(2 ** 32))

    def check_case(self, payload, config):
        kind, nu, *args = payload
        return getattr(self, "_" + kind.replace("-", "_"))(nu, *args)

    def _chi_product(self, nu, I, J, m_, n_):
        x, y = chi_dot(I, m_, nu), chi_dot(J, n_, nu)
        bad = [sorted(A) for A in position_sets(m_ + n_, n_)
               if m_A(x, y, A) != chi_dot(preshuffle(I, J, A, m_, n_)[1], m_ + n_, nu)]
        return outcome(not bad, failing_positions=bad)

    def _chi_coproduct(self, nu, I, n):
        x = chi_dot(I, n, nu)
        bad = []
        for k in range(n + 1):
            if k == 0:
                expected = ScfTensor.simple(chi_dot((), 0, nu), x)
            elif k == n:
                expected = ScfTensor.simple(x, chi_dot((), 0, nu))
            else:
                left = chi_dot([i for i in I if i < k], k, nu)
                right = chi_dot(translate([i for i in I if i > k], k), n - k, nu)
                expected = ScfTensor.simple(left, right)
            if coprod_k(x, k) != expected:
                bad.append(k)
        return outcome(not bad, failing_cuts=bad)

    def _families(self, nu, I, n):
        alpha = comp_of(I, n)
        G = specialize(to_M(QSymElement.basis_element(BasisTag(name="G"), alpha)), nu)
        Mq = specialize(to_M(QSymElement.basis_element(BasisTag(name="Mq"), alpha)), nu)
        g_ok = to_M(ch(mk_G_classfn(I, n, nu))) == G
        m_ok = to_M(ch(mk_M_classfn(I, n, nu))) == Mq
        phi_ok = expand_in_G(mk_phi_If(I, _shift_weight, n, nu)) == phi_If_G_coefficients(I, _shift_weight, n, nu)
        return outcome(g_ok and m_ok and phi_ok, G=g_ok, Mq=m_ok, phi=phi_ok)

    def _orthogonality(self, nu, n):
        labels = subsets(max(n - 1, 0))
        bad = []
        for I in labels:
            for J in labels:
                expected = Fraction((nu - 1) ** (max(n - 1, 0) - len(I))) if I == J else Fraction(0)
                if hall_inner(chi(I, n, nu), chi(J, n, nu)) != expected:
                    bad.append((sorted(I), sorted(J)))
            size = Fraction((nu - 1) ** len(I), nu ** max(n - 1, 0))
            if hall_inner(kappa(I, n, nu), kappa(I, n, nu)) != size:
                bad.append(("κ", sorted(I)))
        total = sum((Fraction((nu - 1) ** len(K)) for K in labels), Fraction(0))
        return outcome(not bad and total == nu ** max(n - 1, 0), failing=bad)

    def _random(self, nu, a, b, seed):
        rng = random.Random(seed)
        phi, psi = random_classfunction(a, nu, rng), random_classfunction(b, nu, rng)
        product_ok = ch(m(phi, psi)) == mul(ch(phi), ch(psi))
        joint = random_classfunction(a + b, nu, rng)
        coproduct_ok = ch_tensor(coprod(joint)) == comul(ch(joint))
        return outcome(product_ok and coproduct_ok, product=product_ok, coproduct=coproduct_ok)
