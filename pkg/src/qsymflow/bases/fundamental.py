from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import ONE, accumulate, const
from qsymflow.combinat import comp_of, concat_or_near, position_sets, preshuffle, refinements, set_of


class FundamentalBasis(BaseBasis):
    """
    L_α = Σ_{β⪯α} M_β.
    Products use the subset form L_I L_J = Σ_A L_{I ⧢_A J} over A ∈ C([m+n], n).
    """
    name = "L"

    def expand_term(self, alpha):
        return {beta: ONE for beta in refinements(alpha)}

    def collect_term(self, alpha):
        return {beta: const((-1) ** (len(beta) - len(alpha))) for beta in refinements(alpha)}

    def product_term(self, alpha, beta):
        m, n = sum(alpha), sum(beta)
        I, J = set_of(alpha), set_of(beta)
        out = {}
        for A in position_sets(m + n, n):
            _, shuffled = preshuffle(I, J, A, m, n)
            accumulate(out, comp_of(shuffled, m + n), ONE)
        return out

    def coproduct_term(self, gamma):
        return {(a, b): ONE for a, b, _ in concat_or_near(gamma)}
