from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import ONE, accumulate, q
from qsymflow.combinat import comp_of, concat_or_near, interval_stats, position_sets, preshuffle, set_of, subsets_between


class QMonomialBasis(BaseBasis):
    """M_α(q) = Σ_{β⪯α} (-q)^{ℓ(β)-ℓ(α)} L_β; q = 0 gives L_α and q = 1 gives M_α."""
    name = "Mq"
    via = "L"

    def expand_term(self, alpha):
        n, I = sum(alpha), set_of(alpha)
        return {comp_of(K, n): (-q) ** len(K - I) for K in subsets_between(I, frozenset(range(1, n)))}

    def collect_term(self, alpha):
        n, I = sum(alpha), set_of(alpha)
        return {comp_of(K, n): q ** len(K - I) for K in subsets_between(I, frozenset(range(1, n)))}

    def product_term(self, alpha, beta):
        m, n = sum(alpha), sum(beta)
        N = m + n
        I, J = set_of(alpha), set_of(beta)
        out = {}
        for A in position_sets(N, n):
            stats = interval_stats(A, N)
            sharp, shuffled = preshuffle(I, J, A, m, n)
            # z_A lies in ē(A) but never in I #_A J
            factor = (1 - q) ** (len(stats.e_bar - sharp) - 1)
            for S in subsets_between(frozenset(), stats.e_c):
                accumulate(out, comp_of(shuffled | S, N), factor * q ** len(S))
        return out

    def coproduct_term(self, gamma):
        return {(a, b): ONE if is_concat else 1 - q for a, b, is_concat in concat_or_near(gamma)}
