from qsymflow.BaseSuite import BaseSuite, outcome, product_pairs
from qsymflow.combinat import BLOCK_VALUES, REVERSE_RUNS
from qsymflow.load_basis import load_basis


class GRepresentativeIndependenceSuite(BaseSuite):
    """The G product rule gives the same structure constants for any descent-class representatives."""
    name = "g-representative-independence"
    description = "G product under reverse-runs and block-values representatives"

    def get_cases(self, config):
        for a, b in product_pairs(config.max_grade):
            yield f"G{a}·G{b}", (a, b)

    def check_case(self, payload, config):
        a, b = payload
        G = load_basis("G")
        first = G.product_with_representatives(a, b, REVERSE_RUNS)
        second = G.product_with_representatives(a, b, BLOCK_VALUES)
        return outcome(first == second, left=a, right=b)
