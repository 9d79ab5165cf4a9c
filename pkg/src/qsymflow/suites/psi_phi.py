"""
The bijection between admissible position sets and composition shuffles, and the two
multiset identities it yields.
"""

from collections import Counter

from qsymflow.BaseSuite import BaseSuite, outcome, product_pairs
from qsymflow.combinat import (
    BLOCK_VALUES,
    REVERSE_RUNS,
    admissible_sets,
    as_multiset,
    comp_of,
    comp_shuffle_by,
    comp_shuffles,
    d_product_terms_by_position_sets,
    des,
    descent_representative,
    interval_stats,
    phi,
    position_sets,
    preshuffle,
    psi,
    set_of,
    shift_word,
    shuffle_by,
    two_way_shuffles,
)
from qsymflow.load_basis import load_basis

GRADE_CAP = 7
TWO_WAY_CAP = 6


class PsiPhiSuite(BaseSuite):
    name = "psi-phi"
    description = "Ψ/Φ bijection, shuffle multisets, D product by position sets, descent-set shuffles"

    def get_cases(self, config):
        grade = min(config.max_grade + 1, GRADE_CAP)
        for a, b in product_pairs(grade):
            yield f"{a}⧢{b}", (a, b)

    def check_case(self, payload, config):
        a, b = payload
        m_, n_ = sum(a), sum(b)
        N = m_ + n_
        I, J = set_of(a), set_of(b)
        admissible = admissible_sets(a, b)

        inverse = all(phi(psi(A, a, b), a, b) == A for A in admissible)
        image = all(
            comp_of(preshuffle(I, J, A, m_, n_)[0] | {interval_stats(A, N).z}, N) == comp_shuffle_by(a, b, psi(A, a, b))
            for A in admissible
        )
        shuffles_a = as_multiset(
            comp_of(preshuffle(I, J, A, m_, n_)[0] | {interval_stats(A, N).z}, N) for A in admissible
        ) == as_multiset(comp_shuffles(a, b))
        checks = {"inverse": inverse, "image": image, "multiset_a": shuffles_a}

        if N <= TWO_WAY_CAP:
            by_sets = Counter()
            for gamma, counts in d_product_terms_by_position_sets(a, b).items():
                for key, mult in counts.items():
                    by_sets[(gamma, key)] += mult
            two_way = as_multiset((g.plus(), (g.c1, g.c2)) for g in two_way_shuffles(a, b))
            checks["multiset_b"] = by_sets == two_way
            D = load_basis("D")
            checks["d_position_sets"] = D.product_term_by_position_sets(a, b) == D.product_term(a, b)

        checks["descents"] = all(
            des(shuffle_by(descent_representative(I, m_, rule), shift_word(descent_representative(J, n_, rule), m_), A))
            == preshuffle(I, J, A, m_, n_)[1]
            for rule in (REVERSE_RUNS, BLOCK_VALUES)
            for A in position_sets(N, n_)
        )
        return outcome(all(checks.values()), **checks)
