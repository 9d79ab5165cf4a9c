from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import ONE, accumulate, cq, poly_to_ratfunc, q
from qsymflow.combinat import (
    REVERSE_RUNS,
    comp_of,
    concat_or_near,
    des,
    descent_representative,
    sdes_and_sw,
    set_of,
    shift_word,
    shuffles,
    stat_g,
    stat_s,
    subsets_between,
    wt,
)


class HallLittlewoodBasis(BaseBasis):
    """
    Quasisymmetric Hall-Littlewood functions G_I(q), converted through L:

        G_I = Σ_{J⊇I} (-1)^{|J∖I|} q^{s(I,J)} L_J,    L_I = Σ_{J⊇I} q^{g(I,J)} G_J.

    The product sums over the shuffles w of two descent-class representatives u, v[m];
    the result does not depend on which representatives are chosen.
    """
    name = "G"
    via = "L"
    representative_rule = REVERSE_RUNS

    def expand_term(self, alpha):
        n, I = sum(alpha), set_of(alpha)
        return {
            comp_of(J, n): (-1) ** len(J - I) * q ** stat_s(I, J)
            for J in subsets_between(I, frozenset(range(1, n)))
        }

    def collect_term(self, alpha):
        n, I = sum(alpha), set_of(alpha)
        return {comp_of(J, n): q ** stat_g(I, J) for J in subsets_between(I, frozenset(range(1, n)))}

    def product_term(self, alpha, beta):
        return self.product_with_representatives(alpha, beta, self.representative_rule)

    def product_with_representatives(self, alpha, beta, rule):
        m, n = sum(alpha), sum(beta)
        N = m + n
        I, J = set_of(alpha), set_of(beta)
        u = descent_representative(I, m, rule)
        v = shift_word(descent_representative(J, n, rule), m)
        full = frozenset(range(1, N))
        out = {}
        for w in shuffles(u, v):
            low, high, sw = sdes_and_sw(w, m)
            c_w = ONE
            for i in low - I:
                c_w *= 1 - q ** wt(I, i)
            for j in high - J:
                c_w *= 1 - q ** wt(J, j)
            if not c_w:
                continue
            D = des(w)
            for K in subsets_between(D, full):
                coeff = c_w
                for i in K - D:
                    coeff *= q ** wt(K, i) - sw[i - 1]
                accumulate(out, comp_of(K, N), coeff)
        self.logger.debug(f"G product {alpha} * {beta}: {len(out)} terms with rule {rule}")
        return out

    def coproduct_term(self, gamma):
        out = {}
        for a, b, is_concat in concat_or_near(gamma):
            nb, B = sum(b), set_of(b)
            for B_fine in subsets_between(B, frozenset(range(1, nb))):
                b_fine = comp_of(B_fine, nb)
                d = cq(len(a), len(b_fine) - len(b) + (0 if is_concat else 1))
                if d:
                    accumulate(out, (a, b_fine), q ** stat_g(B, B_fine) * poly_to_ratfunc(d))
        return out
