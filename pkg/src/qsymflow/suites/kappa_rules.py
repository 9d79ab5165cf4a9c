from qsymflow.BaseSuite import BaseSuite, outcome
from qsymflow.combinat import all_compositions, set_of
from qsymflow.scf import coprod, kappa, kappa_coproduct, kappa_product, m

GRADE_CAP = 5


class KappaRulesSuite(BaseSuite):
    """Closed product and coproduct formulas for superclass identifiers against the structural maps."""
    name = "kappa-rules"
    description = "𝐦(κ_I, κ_J) and ▲κ_K from their closed formulas"

    def get_cases(self, config):
        grade = min(config.max_grade, GRADE_CAP)
        comps = all_compositions(grade)
        for nu in config.nus:
            for a in comps:
                for b in comps:
                    if sum(a) + sum(b) <= grade:
                        yield f"ν={nu}:κ{a}·κ{b}", ("product", nu, a, b)
            for gamma in comps:
                yield f"ν={nu}:▲κ{gamma}", ("coproduct", nu, gamma)

    def check_case(self, payload, config):
        kind, nu, *comps = payload
        if kind == "product":
            a, b = comps
            m_, n_ = sum(a), sum(b)
            I, J = set_of(a), set_of(b)
            return outcome(kappa_product(I, J, m_, n_, nu) == m(kappa(I, m_, nu), kappa(J, n_, nu)), left=a, right=b)
        gamma = comps[0]
        return outcome(kappa_coproduct(gamma, nu) == coprod(kappa(set_of(gamma), sum(gamma), nu)), composition=gamma)
