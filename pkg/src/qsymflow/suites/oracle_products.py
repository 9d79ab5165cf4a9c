from qsymflow.BaseSuite import BaseSuite, basis_tags, product_pairs
from qsymflow.oracle import verify_product

PRODUCT_BASES = ("M", "L", "E", "LambdaStar", "Eta", "EtaQ", "D", "G", "Mq", "K")


class OracleProductsSuite(BaseSuite):
    """Every combinatorial product rule against truncated-polynomial multiplication."""
    name = "oracle-products"
    description = "product rules equal the polynomial oracle, symbolically in q and t"

    def get_cases(self, config):
        for tag in basis_tags(config.nus, PRODUCT_BASES):
            for a, b in product_pairs(config.max_grade):
                yield f"{tag}:{a}*{b}", (tag, a, b)

    def check_case(self, payload, config):
        tag, a, b = payload
        check = verify_product(tag, a, b, nvars=config.oracle_vars)
        return {
            "passed": check.passed,
            "log": {"diffs": [d.model_dump() for d in check.diffs]},
            "metrics": {"nvars": check.nvars, "differences": len(check.diffs)},
        }
