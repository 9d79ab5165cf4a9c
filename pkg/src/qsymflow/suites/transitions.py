from fractions import Fraction

from qsymflow.BaseSuite import BaseSuite, basis_tags, outcome
from qsymflow.coeff import q, substitute, t
from qsymflow.combinat import all_compositions, complement, comp_of, set_of, stat_g, stat_g_bre, stat_s, stat_s_bre, subsets, subsets_between
from qsymflow.load_basis import load_basis
from qsymflow.qsym import (
    D_TAG,
    L_TAG,
    M_TAG,
    TRANSITION_DIRECTIONS,
    BasisTag,
    QSymElement,
    convert,
    expand_by_rows,
    from_M,
    specialize,
    to_M,
    transitions_DL,
)
from qsymflow.scf import ch, kappa
from qsymflow.tables import table_as_element_rows, transition_table

SOURCE_OF = {"L-to-D": L_TAG, "D-to-L": D_TAG, "M-to-D": M_TAG}
ETAQ_TAG = BasisTag(name="EtaQ")
G_TAG = BasisTag(name="G")


class TransitionsSuite(BaseSuite):
    """Closed-form transition matrices against conversion through M, and conversion round trips."""
    name = "transitions"
    description = "L↔K, D↔L, M→D, G↔L transition rows; κ and D bridges; round trips in every basis"

    def get_cases(self, config):
        for n in range(config.max_grade + 1):
            for nu in config.nus:
                yield f"ν={nu}:L↔K ({n})", ("kappa_rows", n, nu)
                yield f"ν={nu}:κ bridges ({n})", ("kappa_bridges", n, nu)
            for direction in TRANSITION_DIRECTIONS:
                yield f"{direction} ({n})", ("dl_rows", n, direction)
            yield f"η^(q) from D ({n})", ("etaq", n)
            yield f"G↔L ({n})", ("g_rows", n)
        for tag in basis_tags(config.nus):
            for alpha in all_compositions(config.max_grade):
                yield f"{tag}:round trip {alpha}", ("round_trip", tag, alpha)

    def check_case(self, payload, config):
        kind, *args = payload
        return getattr(self, "_" + kind)(*args)

    def _kappa_rows(self, n, nu):
        K = load_basis("K", nu=nu)
        bad = []
        for S in subsets(max(n - 1, 0)):
            alpha = comp_of(S, n)
            l_row = QSymElement(K.tag, K.l_to_k_row(S, n))
            k_row = QSymElement(L_TAG, K.k_to_l_row(S, n))
            if convert(QSymElement.basis_element(L_TAG, alpha), K.tag) != l_row:
                bad.append(("L-to-K", alpha))
            if convert(QSymElement.basis_element(K.tag, alpha), L_TAG) != k_row:
                bad.append(("K-to-L", alpha))
            back = QSymElement(L_TAG)
            for beta, c in l_row.terms.items():
                back = back + QSymElement(L_TAG, K.k_to_l_row(set_of(beta), n)).scale(c)
            if back != QSymElement.basis_element(L_TAG, alpha):
                bad.append(("inverse", alpha))
        return outcome(not bad, failing=bad)

    def _kappa_bridges(self, n, nu):
        """ch_ν(κ_I)/(ν-1)^{|I|} = K_{comp(I)} and D_{α^c}(-ν, ν-1) = K_α(ν), both in M."""
        tag = BasisTag(name="K", nu=nu)
        bad = []
        for I in subsets(max(n - 1, 0)):
            alpha = comp_of(I, n)
            K_alpha = to_M(QSymElement.basis_element(tag, alpha))
            if to_M(ch(kappa(I, n, nu).scale(Fraction(1, (nu - 1) ** len(I))))) != K_alpha:
                bad.append(("ch κ", alpha))
            D = to_M(QSymElement.basis_element(D_TAG, complement(alpha)))
            if specialize(D, -nu, nu - 1) != K_alpha:
                bad.append(("D bridge", alpha))
        return outcome(not bad, failing=bad)

    def _dl_rows(self, n, direction):
        source = SOURCE_OF[direction]
        bad = [
            alpha
            for alpha, row in transitions_DL(direction, n).items()
            if convert(QSymElement.basis_element(source, alpha), row.basis) != row
        ]
        return outcome(not bad, direction=direction, failing=bad)

    def _etaq(self, n):
        """L_α = Σ_β c_β(q+1, -1) (q+1)^{-n} η^(q)_β when L_α = Σ_β c_β(q, t) D_β."""
        bad = []
        for alpha, row in transitions_DL("L-to-D", n).items():
            terms = {beta: substitute(c, q + 1, -1) / (q + 1) ** n for beta, c in row.terms.items()}
            if convert(QSymElement.basis_element(L_TAG, alpha), ETAQ_TAG) != QSymElement(ETAQ_TAG, terms):
                bad.append(alpha)
        return outcome(not bad, failing=bad)

    def _g_rows(self, n):
        """The s and g statistics agree with their block-position forms and G↔L invert each other."""
        full = frozenset(range(1, n))
        stats_ok = all(
            stat_s(I, J) == stat_s_bre(I, J, n) and stat_g(I, J) == stat_g_bre(I, J, n)
            for J in subsets(max(n - 1, 0))
            for I in subsets_between(frozenset(), J)
        )
        inverse_ok = tables_ok = True
        g_to_l = table_as_element_rows(transition_table("G-to-L", n))
        l_to_g = table_as_element_rows(transition_table("L-to-G", n))
        for I in subsets(max(n - 1, 0)):
            alpha = comp_of(I, n)
            G = QSymElement.basis_element(G_TAG, alpha)
            L = QSymElement.basis_element(L_TAG, alpha)
            expected_l = {
                comp_of(J, n): (-1) ** len(J - I) * q ** stat_s(I, J) for J in subsets_between(I, full)
            }
            expected_g = {comp_of(J, n): q ** stat_g(I, J) for J in subsets_between(I, full)}
            inverse_ok &= convert(G, L_TAG) == QSymElement(L_TAG, expected_l)
            inverse_ok &= convert(L, G_TAG) == QSymElement(G_TAG, expected_g)
            inverse_ok &= convert(convert(G, L_TAG), G_TAG) == G
            tables_ok &= g_to_l[alpha] == QSymElement(L_TAG, expected_l)
            tables_ok &= expand_by_rows(l_to_g[alpha], lambda _: g_to_l, L_TAG) == L
        ok = stats_ok and inverse_ok and tables_ok
        return outcome(ok, statistics=stats_ok, inverse=inverse_ok, tables=tables_ok)

    def _round_trip(self, tag, alpha):
        x = QSymElement.basis_element(tag, alpha, q + t)
        return outcome(from_M(to_M(x), tag) == x, element=x)
