from qsymflow.BaseSuite import BaseSuite, product_pairs
from qsymflow.coeff import format_ratfunc, is_nonnegative_integral
from qsymflow.load_basis import load_basis


class PositivitySuite(BaseSuite):
    """D(q, t) structure constants lie in N[q, t]."""
    name = "positivity"
    description = "every D(q,t) product coefficient is a polynomial with nonnegative integer coefficients"

    def get_cases(self, config):
        for a, b in product_pairs(config.max_grade):
            yield f"D{a}·D{b}", (a, b)

    def check_case(self, payload, config):
        a, b = payload
        terms = load_basis("D").product_term(a, b)
        bad = {str(list(g)): format_ratfunc(c) for g, c in terms.items() if not is_nonnegative_integral(c)}
        return {"passed": not bad, "log": bad, "metrics": {"terms": len(terms)}}
