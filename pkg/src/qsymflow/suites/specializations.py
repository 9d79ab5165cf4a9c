from fractions import Fraction

from qsymflow.BaseSuite import BaseSuite, outcome
from qsymflow.coeff import const, evaluate, q, t
from qsymflow.combinat import all_compositions, set_of
from qsymflow.qsym import BasisTag, QSymElement, specialize, to_M

POINTS = [(Fraction(2), Fraction(1)), (Fraction(3), Fraction(5)), (Fraction(1, 2), Fraction(1, 3)),
          (Fraction(-2), Fraction(5)), (Fraction(7), Fraction(-3))]
ONE_VARIABLE_CAP = 5
ONE_PARAMETER = {
    "G(0)=L": ("G", 0, "L"),
    "G(1)=M": ("G", 1, "M"),
    "Mq(0)=L": ("Mq", 0, "L"),
    "Mq(1)=M": ("Mq", 1, "M"),
}


def _M(name, alpha):
    return to_M(QSymElement.basis_element(BasisTag(name=name), alpha))


class SpecializationsSuite(BaseSuite):
    """D(q, t), G(q) and M(q) at special parameter values, compared as M-expansions."""
    name = "specializations"
    description = "D(1,0)=M, D(-1,1)=Λ*, D(1,-1)=E, 2ⁿD(2,-1)=η, (q+1)ⁿD(q+1,-1)=η^(q), G and Mq at 0 and 1"

    IDENTITIES = ("D(1,0)=M", "D(-1,1)=LambdaStar", "D(1,-1)=E", "D(2,-1)=Eta", "D(q+1,-1)=EtaQ",
                  "G(0)=L", "G(1)=M", "Mq(0)=L", "Mq(1)=M", "D one variable")

    def get_cases(self, config):
        for alpha in all_compositions(config.max_grade):
            for identity in self.IDENTITIES:
                if identity == "D one variable" and sum(alpha) > ONE_VARIABLE_CAP:
                    continue
                yield f"{identity}:{alpha}", (identity, alpha)

    def check_case(self, payload, config):
        identity, alpha = payload
        n = sum(alpha)
        D = _M("D", alpha)
        if identity == "D(1,0)=M":
            ok = specialize(D, 1, 0) == _M("M", alpha)
        elif identity == "D(-1,1)=LambdaStar":
            ok = specialize(D, -1, 1) == _M("LambdaStar", alpha)
        elif identity == "D(1,-1)=E":
            ok = specialize(D, 1, -1) == _M("E", alpha)
        elif identity == "D(2,-1)=Eta":
            ok = specialize(D, 2, -1).scale(2 ** n) == _M("Eta", alpha)
        elif identity == "D(q+1,-1)=EtaQ":
            ok = specialize(D, q + 1, -1).scale((q + 1) ** n) == _M("EtaQ", alpha)
        elif identity in ONE_PARAMETER:
            name, value, target = ONE_PARAMETER[identity]
            ok = specialize(_M(name, alpha), value) == _M(target, alpha)
        else:
            ok = self._one_variable(D, alpha)
        return outcome(ok, identity=identity, composition=alpha)

    @staticmethod
    def _one_variable(D, alpha):
        """D_{comp(I)}(q,t) = (-q-t)^{-|I^c|} D_{comp(I)}(-Q, Q-1) with Q = q/(q+t)."""
        n = sum(alpha)
        missing = max(n - 1, 0) - len(set_of(alpha))
        Q = q / (q + t)
        rhs = specialize(D, -Q, Q - 1).scale(const(1) / (-q - t) ** missing)
        for q0, t0 in POINTS:
            for gamma in set(D.terms) | set(rhs.terms):
                if evaluate(D.coefficient(gamma), q0, t0) != evaluate(rhs.coefficient(gamma), q0, t0):
                    return False
        return True
