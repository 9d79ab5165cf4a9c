from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import ONE, accumulate
from qsymflow.combinat import deconcatenations, overlapping_shuffles


class MonomialBasis(BaseBasis):
    """M_α: the monomial quasisymmetric functions."""
    name = "M"

    def expand_term(self, alpha):
        return {alpha: ONE}

    def collect_term(self, alpha):
        return {alpha: ONE}

    def product_term(self, alpha, beta):
        out = {}
        for gamma in overlapping_shuffles(alpha, beta):
            accumulate(out, gamma, ONE)
        return out

    def coproduct_term(self, gamma):
        return {pair: ONE for pair in deconcatenations(gamma)}
