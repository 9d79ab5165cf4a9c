"""
Specializations of D(q, t) that expand over coarsenings:

    X_α = sign(α) Σ_{β⪰α} w^{ℓ(β)} M_β

E (w = 1), Λ* (w = 1, sign (-1)^{|α|-ℓ(α)}), η (w = 2) and η^(q) (w = q + 1).
Products run over two-way overlapping shuffles, coproducts are deconcatenation.
"""

from typing import Optional

from qsymflow.BaseBasis import BaseBasis
from qsymflow.coeff import ONE, RatFunc, accumulate, const, q
from qsymflow.combinat import TwoWayShuffle, coarsenings, deconcatenations, two_way_shuffles


class CoarseningBasis(BaseBasis):
    def weight(self) -> RatFunc:
        return ONE

    def sign(self, alpha) -> int:
        return 1

    def shuffle_coefficient(self, gamma: TwoWayShuffle) -> Optional[RatFunc]:
        raise NotImplementedError

    def expand_term(self, alpha):
        w, s = self.weight(), self.sign(alpha)
        return {beta: s * w ** len(beta) for beta in coarsenings(alpha)}

    def collect_term(self, alpha):
        w = self.weight()
        return {
            beta: const((-1) ** (len(alpha) - len(beta)) * self.sign(beta)) / w ** len(alpha)
            for beta in coarsenings(alpha)
        }

    def product_term(self, alpha, beta):
        out = {}
        for gamma in two_way_shuffles(alpha, beta):
            c = self.shuffle_coefficient(gamma)
            if c is not None:
                accumulate(out, gamma.plus(), c)
        return out

    def coproduct_term(self, gamma):
        return {pair: ONE for pair in deconcatenations(gamma)}


class EnrichedBasis(CoarseningBasis):
    """E_α = D_α(1, -1)."""
    name = "E"

    def shuffle_coefficient(self, gamma):
        if gamma.c1:
            return None
        return const((-1) ** gamma.c2)


class LambdaStarBasis(CoarseningBasis):
    """Λ*_α = D_α(-1, 1)."""
    name = "LambdaStar"

    def sign(self, alpha):
        return (-1) ** (sum(alpha) - len(alpha))

    def shuffle_coefficient(self, gamma):
        return None if gamma.c2 else ONE


class EtaBasis(CoarseningBasis):
    """η_α = 2^{|α|} D_α(2, -1)."""
    name = "Eta"

    def weight(self):
        return const(2)

    def shuffle_coefficient(self, gamma):
        return const((-1) ** gamma.c2)


class EtaQBasis(CoarseningBasis):
    """η^(q)_α = (q+1)^{|α|} D_α(q+1, -1)."""
    name = "EtaQ"

    def weight(self):
        return q + 1

    def shuffle_coefficient(self, gamma):
        return (-1) ** gamma.c2 * q ** gamma.c1
