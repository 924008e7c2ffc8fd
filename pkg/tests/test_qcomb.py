from fractions import Fraction

from qtetra.qcoeff import ONE, Q, QCoeff, ZERO
from qtetra.qcomb import bracket, bracket_fact, curly, poch, poch_ratio, qbinom, qmultinom


def qp(n):
    return QCoeff.q_power(n)


def test_bracket_small():
    assert bracket(0, 2, 1) == ZERO
    assert bracket(1, 2, 1) == ONE
    assert bracket(1, 1, -1) == ONE
    # expand the definition directly as the oracle
    assert bracket(2, 2, 1) == Q + Q.inverse()
    assert bracket(2, 2, -1) == Q.inverse() - Q


def test_bracket_definition_oracle():
    # ((pi q^d)^k - q^(-dk)) / (pi q^d - q^(-d)), cross-checked by expansion
    for k in range(5):
        for d2 in (1, 2, -1):
            for pi in (1, -1):
                sgn = 1 if (pi == 1 or k % 2 == 0) else -1
                num = QCoeff.s_power(d2 * k, (sgn, 0)) - QCoeff.s_power(-d2 * k)
                den = QCoeff.s_power(d2, (pi, 0)) - QCoeff.s_power(-d2)
                assert bracket(k, d2, pi) * den == num


def test_bracket_palindromic():
    # classical q-integer: invariant under q -> 1/q
    for k in range(1, 6):
        b = bracket(k, 2, 1)
        assert b == b.subst_s_power(-1)


def test_bracket_fact():
    assert bracket_fact(0, 2, 1) == ONE
    assert bracket_fact(2, 2, 1) == Q + Q.inverse()
    assert bracket_fact(2, 2, -1) == Q.inverse() - Q
    assert bracket_fact(3, 2, 1) == (Q + Q.inverse()) * (Q**2 + ONE + Q.inverse() ** 2)


def test_poch_and_qbinom():
    assert poch(0) == ONE
    assert poch(2) == (ONE - Q) * (ONE - Q * Q)
    assert poch(2, 2) == (ONE - qp(2)) * (ONE - qp(4))
    assert qbinom(2, 1) == ONE + Q
    assert qbinom(1, 3) == ZERO
    assert qbinom(3, -1) == ZERO
    for l in range(6):
        for m in range(l + 1):
            assert qbinom(l, m) == qbinom(l, l - m)
            assert qbinom(l, m).crystal_limit() == (Fraction(1), Fraction(0))


def test_curly():
    assert curly([1], [1]) == ONE
    assert curly([2], [1, 1]) == ONE + Q
    assert curly([1], [-1]) == ZERO
    assert curly([3, 2], [1, 1, 2, 1]) == poch(3) * poch(2) / (
        poch(1) ** 3 * poch(2)
    )


def test_poch_ratio_and_multinom():
    for hi in range(5):
        for lo in range(5):
            assert poch_ratio(hi, lo) * poch(lo) == poch(hi)
            assert poch_ratio(hi, lo, 2) * poch(lo, 2) == poch(hi, 2)
    for n in range(5):
        for a in range(n + 1):
            for b in range(n - a + 1):
                assert qmultinom(n, a, b) * poch(a) * poch(b) * poch(
                    n - a - b
                ) == poch(n)
    assert qmultinom(2, 2, 1) == ZERO
