from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import ONE, accumulate, q, t
from qsymflow.combinat import coarsenings, d_product_terms_by_position_sets, deconcatenations, two_way_shuffles


class DqtBasis(BaseBasis):
    """
    D_α(q, t) = Σ_{β⪰α} q^{ℓ(β)-|α|} (-t)^{ℓ(α)-ℓ(β)} M_β.
    Structure constants: D_α D_β = Σ_γ (q+t)^{c₁(γ)} t^{c₂(γ)} D_{γ⁺} over two-way overlapping
    shuffles γ, and ΔD_γ is deconcatenation.
    """
    name = "D"

    def expand_term(self, alpha):
        n = sum(alpha)
        return {beta: q ** len(beta) / q ** n * (-t) ** (len(alpha) - len(beta)) for beta in coarsenings(alpha)}

    def collect_term(self, alpha):
        n = sum(alpha)
        return {beta: q ** (n - len(alpha)) * t ** (len(alpha) - len(beta)) for beta in coarsenings(alpha)}

    def product_term(self, alpha, beta):
        out = {}
        for gamma in two_way_shuffles(alpha, beta):
            accumulate(out, gamma.plus(), (q + t) ** gamma.c1 * t ** gamma.c2)
        return out

    def product_term_by_position_sets(self, alpha, beta):
        """The same structure constants summed over admissible position sets."""
        out = {}
        for gamma, counts in d_product_terms_by_position_sets(alpha, beta).items():
            for (plus1, plus2), mult in counts.items():
                accumulate(out, gamma, mult * (q + t) ** plus1 * t ** plus2)
        return out

    def coproduct_term(self, gamma):
        return {pair: ONE for pair in deconcatenations(gamma)}
