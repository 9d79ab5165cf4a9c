from fractions import Fraction

from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import accumulate, const
from qsymflow.combinat import (
    comp_of,
    interval_stats,
    near_factorizations,
    position_sets,
    preshuffle,
    set_of,
    subsets,
    subsets_between,
)


class KappaBasis(BaseBasis):
    """K_α(ν) = ch_ν(κ_{set(α)}(ν) / (ν-1)^{|set(α)|}), one basis per integer ν >= 2."""
    name = "K"

    def _full(self, n):
        return frozenset(range(1, n))

    def expand_term(self, alpha):
        nu, n, J = self.nu, sum(alpha), set_of(alpha)
        scale = Fraction(1, 1 - nu) ** len(J)
        out = {}
        for I in subsets_between(frozenset(), self._full(n) - J):
            exponent = max(n - 1, 0) - len(I)
            out[comp_of(I, n)] = const(scale * Fraction(nu - 1, nu) ** exponent)
        return out

    def collect_term(self, alpha):
        nu, n, I = self.nu, sum(alpha), set_of(alpha)
        out = {}
        for J in subsets_between(self._full(n) - I, self._full(n)):
            out[comp_of(J, n)] = const((-nu) ** len(J - I) * (nu - 1) ** len(I & J))
        return out

    def product_term(self, alpha, beta):
        nu = self.nu
        m, n = sum(alpha), sum(beta)
        N = m + n
        I, J = set_of(alpha), set_of(beta)
        out = {}
        for A in position_sets(N, n):
            stats = interval_stats(A, N)
            sharp, _ = preshuffle(I, J, A, m, n)
            if sharp & stats.e_bar:
                continue
            for K in subsets_between(sharp, sharp | stats.e_bar):
                accumulate(out, comp_of(K, N), (-1) ** len(K & stats.e_c) * (nu - 1) ** len(K & stats.e))
        return out

    def coproduct_term(self, gamma):
        return {pair: const(1) for pair in near_factorizations(gamma)}

    def l_to_k_row(self, I, n):
        """L_{comp(I)} = Σ_J (-1)^{|J∖I|} (ν-1)^{|I∩J|} K_{comp(J)}."""
        nu = self.nu
        return {comp_of(J, n): const((-1) ** len(J - I) * (nu - 1) ** len(I & J)) for J in subsets(max(n - 1, 0))}

    def k_to_l_row(self, J, n):
        """K_{comp(J)} = ν^{-(n-1)} Σ_I (-1)^{|J∖I|} (ν-1)^{|(I∪J)^c|} L_{comp(I)}."""
        nu, full = self.nu, self._full(n)
        scale = Fraction(1, nu ** max(n - 1, 0))
        return {
            comp_of(I, n): const(scale * (-1) ** len(J - I) * (nu - 1) ** len(full - (I | J)))
            for I in subsets(max(n - 1, 0))
        }
