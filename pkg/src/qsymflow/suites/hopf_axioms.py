import random

from qsymflow.BaseSuite import BaseSuite, basis_tags, outcome, product_pairs
from qsymflow.combinat import all_compositions
from qsymflow.qsym import (
    M_TAG,
    QSymElement,
    comul,
    comul_left,
    comul_right,
    counit_left,
    counit_right,
    mul,
    mul_antipode_id,
    tensor_mul,
)

GRADE_CAP = 4
TRIPLES_PER_BASIS = 8


class HopfAxiomsSuite(BaseSuite):
    """Bialgebra and antipode axioms in M; (co)associativity and counit in every basis."""
    name = "hopf-axioms"
    description = "associativity, coassociativity, compatibility, counit and antipode"

    def get_cases(self, config):
        grade = min(config.max_grade, GRADE_CAP)
        rng = random.Random(config.seed)
        for gamma in all_compositions(grade):
            yield f"M:{gamma}", ("single", M_TAG, gamma)
        for a, b in product_pairs(grade):
            yield f"M:{a}*{b}", ("pair", M_TAG, a, b)
        nonempty = all_compositions(grade, min_size=1)
        triples = [(a, b, c) for a in nonempty for b in nonempty for c in nonempty if sum(a) + sum(b) + sum(c) <= grade]
        for tag in basis_tags(config.nus):
            chosen = triples if len(triples) <= TRIPLES_PER_BASIS else rng.sample(triples, TRIPLES_PER_BASIS)
            for a, b, c in chosen:
                yield f"{tag}:{a}*{b}*{c}", ("triple", tag, a, b, c)
            for gamma in nonempty:
                yield f"{tag}:Δ{gamma}", ("coalgebra", tag, gamma)

    def check_case(self, payload, config):
        kind, tag, *comps = payload
        elems = [QSymElement.basis_element(tag, c) for c in comps]
        if kind == "single":
            x = elems[0]
            return outcome(
                self._coalgebra_ok(x) and mul_antipode_id(comul(x)) == QSymElement.unit(M_TAG).scale(x.counit()),
                element=x,
            )
        if kind == "pair":
            x, y = elems
            compatible = comul(mul(x, y)) == tensor_mul(comul(x), comul(y))
            return outcome(compatible and mul(x, y) == mul(y, x), left=x, right=y)
        if kind == "triple":
            x, y, z = elems
            associative = mul(mul(x, y), z) == mul(x, mul(y, z))
            return outcome(associative and mul(x, y) == mul(y, x), factors=comps)
        return outcome(self._coalgebra_ok(elems[0]), element=elems[0])

    @staticmethod
    def _coalgebra_ok(x):
        delta = comul(x)
        return comul_left(delta) == comul_right(delta) and counit_left(delta) == x and counit_right(delta) == x
