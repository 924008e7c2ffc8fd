"""Recurrence engines for the two four-slot families derived from plain-power
word expansions.

``z_raw`` computes the expansion coefficients Z for the all-bosonic diagram
by the staged reduction: lower the fourth upper exponent d to 0, then the
third (c) keeping d = 0, then the second (b) keeping c = d = 0, finishing at
the diagonal seed Z(i,0,0,0 -> i,0,0,0) = 1.  Termination is manifest: the
upper triple (d, c, b) strictly decreases lexicographically at every
recursive call, and the conserved form b + 2c + d never grows, which bounds
the intermediate growth of c during the first stage.  ``z_gamma`` turns raw
values into operator elements via the divided-power factorial ratio followed
by full index reversal.

``x_raw`` is the analogous engine for the doubly-isotropic diagram and
serves as an independent oracle for the closed-form X family.  Its
recurrences lower d, then b, then a; the terminal upper words are 1 (all
zero) and the single cubic root vector, whose expansion in the opposite
basis is the three-term seed hardcoded below (obtained by straightening
e2*e21 - e21*e2 against the basis words e2^2*e1, e2*e1*e2, e1*e2^2).
``x_oracle`` converts raw values into operator-X elements.
"""

from __future__ import annotations

from .qcoeff import ONE, QCoeff, ZERO
from .qcomb import bracket, bracket_fact
from .tensor import BOSON, FERMION, WeightedFamily


def qp(n):
    return QCoeff.q_power(n)


def sp(n):
    return QCoeff.s_power(n)


def mqp(n):
    v = qp(n)
    return -v if n % 2 else v


def _geo(n, step=1):
    """(1 - q^(step*n)) / (1 - q^step) expanded as a polynomial."""
    out = ZERO
    for t in range(n):
        out = out + qp(step * t)
    return out


_ONE_PLUS_Q = ONE + qp(1)
_ONE_MINUS_Q = ONE - qp(1)
_ONE_MINUS_Q2 = ONE - qp(2)

_z_memo: dict = {}
_x_memo: dict = {}


def clear_memos():
    _z_memo.clear()
    _x_memo.clear()


def z_raw(i, j, k, l, a, b, c, d):
    """Plain-power expansion coefficient Z_{i,j,k,l}^{a,b,c,d}."""
    if min(i, j, k, l, a, b, c, d) < 0:
        return ZERO
    if i + j + k != a + b + c or j + 2 * k + l != b + 2 * c + d:
        return ZERO
    # weight conservation bounds every upper exponent by the lower weights
    assert b <= j + 2 * k + l and 2 * c <= j + 2 * k + l and d <= j + 2 * k + l
    key = (i, j, k, l, a, b, c, d)
    v = _z_memo.get(key)
    if v is not None:
        return v
    if d >= 1:
        v = (
            z_raw(i, j, k, l - 1, a, b, c, d - 1)
            - bracket(a, 2, 1) * z_raw(i, j, k, l, a - 1, b + 1, c, d - 1)
            - sp(2 * (a - b) + 1)
            * (ONE - mqp(b))
            * z_raw(i, j, k, l, a, b - 1, c + 1, d - 1)
        ) * qp(c - a)
        if b % 2:
            v = -v
    elif c >= 1:
        v = qp(b) * (
            sp(2 * (l - j) - 3) * _ONE_MINUS_Q2 * z_raw(i - 1, j, k, l - 2, a, b, c - 1, d)
            + qp(l - 2 * k - 2)
            * (ONE - qp(2 * k + 2))
            * z_raw(i, j - 2, k + 1, l - 2, a, b, c - 1, d)
            + sp(2 * (l - k) - 1)
            * _ONE_MINUS_Q
            * z_raw(i, j - 1, k, l - 1, a, b, c - 1, d)
            - qp(l + 1) * z_raw(i, j, k - 1, l, a, b, c - 1, d)
            - _geo(a, 2) * sp(-4 * a + 3) * z_raw(i, j, k, l, a - 1, b + 2, c - 1, d)
        )
    elif b >= 1:
        sgn_l = -ONE if l % 2 else ONE
        v = qp(a) * (
            qp(l - j - 1) * _ONE_MINUS_Q2 * z_raw(i - 1, j, k, l - 1, a, b - 1, c, d)
            + sp(2 * (l - 2 * k) - 3)
            * (ONE - qp(2 * k + 2))
            * z_raw(i, j - 2, k + 1, l - 1, a, b - 1, c, d)
            - sgn_l
            * qp(-k)
            * (ONE - mqp(l) * _ONE_MINUS_Q)
            * z_raw(i, j - 1, k, l, a, b - 1, c, d)
            - sgn_l * sp(1) * (ONE - mqp(l + 1)) * z_raw(i, j, k - 1, l + 1, a, b - 1, c, d)
        )
    else:
        # b = c = d = 0: conservation forces j = k = l = 0 and i = a
        v = ONE
    _z_memo[key] = v
    return v


def _fact_z(w, x, y, z):
    return (
        bracket_fact(w, 2, 1)
        * bracket_fact(x, 1, -1)
        * bracket_fact(y, 2, 1)
        * bracket_fact(z, 1, -1)
    )


def z_gamma(sub, sup):
    """3D-Z operator element for in-tuple ``sub`` and out-tuple ``sup``."""
    i, j, k, l = sub
    a, b, c, d = sup
    raw = z_raw(l, k, j, i, d, c, b, a)
    if raw.is_zero():
        return ZERO
    return _fact_z(l, k, j, i) / _fact_z(d, c, b, a) * raw


class ZFamily(WeightedFamily):
    """All-bosonic four-slot family, evaluated through the recurrences."""

    signature = (BOSON, BOSON, BOSON, BOSON)
    weight_forms = ((1, 2, 1, 0), (0, 1, 1, 1))
    name = "Z"

    def _element(self, sub, sup):
        return z_gamma(sub, sup)


# ---------------------------------------------------------------------------
# X oracle
# ---------------------------------------------------------------------------


def x_raw(i, j, k, l, a, b, c, d):
    """Plain-power expansion coefficient X_{i,j,k,l}^{a,b,c,d}.

    Positions 1 and 3 of both tuples sit at isotropic roots, so any value
    above 1 there annihilates the word or falls outside the basis.
    """
    if min(i, j, k, l, a, b, c, d) < 0:
        return ZERO
    if i > 1 or k > 1 or a > 1 or c > 1:
        return ZERO
    if i + j + k != a + b + c or j + 2 * k + l != b + 2 * c + d:
        return ZERO
    key = (i, j, k, l, a, b, c, d)
    v = _x_memo.get(key)
    if v is not None:
        return v
    if d >= 1:
        v = (
            qp(c - a) * x_raw(i, j, k, l - 1, a, b, c, d - 1)
            - sp(2 * c - 1) * (ONE - mqp(b)) * x_raw(i, j, k, l, a, b - 1, c + 1, d - 1)
        )
        if a % 2:
            v = v - qp(c - 1) * x_raw(i, j, k, l, a - 1, b + 1, c, d - 1)
    elif b >= 1:
        sgn = -ONE if (j + k + a) % 2 else ONE
        mqa = mqp(-a)
        v = (
            sgn
            * qp(j + 2 * k + l - a - 1)
            * _ONE_MINUS_Q2
            * x_raw(i - 1, j, k, l - 1, a, b - 1, c, d)
            + mqp(k - a) * (ONE - _ONE_PLUS_Q * qp(l)) * x_raw(i, j - 1, k, l, a, b - 1, c, d)
            - mqa
            * sp(1)
            * _ONE_PLUS_Q
            * _geo(l + 1)
            * x_raw(i, j, k - 1, l + 1, a, b - 1, c, d)
        )
        if k % 2 == 0:
            v = v - mqa * sp(4 * k + 2 * l - 1) * _ONE_MINUS_Q2 * x_raw(
                i, j - 2, k + 1, l - 1, a, b - 1, c, d
            )
    elif a >= 1:
        sgn = -ONE if (j + k) % 2 else ONE
        v = (
            sgn * qp(j + 2 * k + l) * x_raw(i - 1, j, k, l, a - 1, b, c, d)
            + _geo(l + 1) * mqp(k) * x_raw(i, j - 1, k, l + 1, a - 1, b, c, d)
            + _geo(l + 1)
            * _geo(l + 2)
            * sp(-2 * l - 1)
            * x_raw(i, j, k - 1, l + 2, a - 1, b, c, d)
        )
        if k % 2 == 0:
            v = v - sp(4 * k + 2 * l + 1) * x_raw(i, j - 2, k + 1, l, a - 1, b, c, d)
    elif c == 0:
        v = ONE  # conservation forces the all-zero tuple here
    else:
        # upper word is the cubic root vector itself; straightened expansion
        if (i, j, k, l) == (0, 0, 1, 0):
            v = qp(1)
        elif (i, j, k, l) == (0, 1, 0, 1):
            v = -(sp(1) * _ONE_MINUS_Q)
        elif (i, j, k, l) == (1, 0, 0, 2):
            v = sp(1) * _ONE_MINUS_Q * _ONE_MINUS_Q
        else:
            v = ZERO
    _x_memo[key] = v
    return v


def _fact_x(w, z):
    return bracket_fact(w, -1, -1) * bracket_fact(z, 1, 1)


def x_oracle(sub, sup):
    """Operator-X element predicted by the recurrence engine."""
    i, j, k, l = sub
    a, b, c, d = sup
    raw = x_raw(l, k, j, i, d, c, b, a)
    if raw.is_zero():
        return ZERO
    return _fact_x(k, i) / _fact_x(c, a) * raw


class XOracleFamily(WeightedFamily):
    """Recurrence-backed twin of the closed-form X family."""

    signature = (BOSON, FERMION, BOSON, FERMION)
    weight_forms = ((1, 2, 1, 0), (0, 1, 1, 1))
    name = "Xoracle"

    def _element(self, sub, sup):
        return x_oracle(sub, sup)
