"""q-combinatorial building blocks shared by the operator formulas.

Three families coexist because the source material mixes them freely:

* the (possibly signed) bracket ``[k]_{q^d,pi}`` and its factorial, used in
  divided-power normalizations (d may be a half-integer, realized in s);
* the q-Pochhammer ``(q)_m`` together with the q-binomial with its
  "0 otherwise" branch;
* the curly-brace ratio of Pochhammers, again 0 whenever any argument is
  negative, so summation bounds never need separate clamping.
"""

from __future__ import annotations

from functools import lru_cache

from .qcoeff import ONE, QCoeff, ZERO


@lru_cache(maxsize=None)
def bracket(k: int, d2: int, pi: int) -> QCoeff:
    """[k]_{q^d,pi} with q^d = s^d2 (d2 twice the exponent, so d may be 1/2).

    [k]_{q^d,pi} = ((pi*q^d)^k - q^(-d*k)) / (pi*q^d - q^(-d)).
    """
    if k < 0:
        raise ValueError("bracket needs k >= 0")
    if k == 0:
        return ZERO
    if pi not in (1, -1):
        raise ValueError("pi must be +-1")
    sign = 1 if (pi == 1 or k % 2 == 0) else -1
    num = QCoeff.s_power(d2 * k, (sign, 0)) - QCoeff.s_power(-d2 * k)
    den = QCoeff.s_power(d2, (pi, 0)) - QCoeff.s_power(-d2)
    return num / den


@lru_cache(maxsize=None)
def bracket_fact(m: int, d2: int, pi: int) -> QCoeff:
    """[m]_{q^d,pi}! with the convention that the empty product is 1."""
    if m < 0:
        raise ValueError("bracket_fact needs m >= 0")
    out = ONE
    for k in range(1, m + 1):
        out = out * bracket(k, d2, pi)
    return out


@lru_cache(maxsize=None)
def poch(m: int, step: int = 1) -> QCoeff:
    """(q^step)_m = prod_{k=1..m} (1 - q^(step*k)); step=2 gives (q^2)_m."""
    if m < 0:
        raise ValueError("poch needs m >= 0")
    out = ONE
    for k in range(1, m + 1):
        out = out * (ONE - QCoeff.q_power(step * k))
    return out


@lru_cache(maxsize=None)
def qbinom(l: int, m: int, step: int = 1) -> QCoeff:
    """Binomial (l choose m) in q^step, zero outside 0 <= m <= l."""
    if m < 0 or m > l:
        return ZERO
    return poch(l, step) / (poch(l - m, step) * poch(m, step))


def curly(top, bot, step: int = 1) -> QCoeff:
    """prod (q)_t / prod (q)_b over the two argument lists, 0 on negatives."""
    if any(t < 0 for t in top) or any(b < 0 for b in bot):
        return ZERO
    num = ONE
    for t in top:
        num = num * poch(t, step)
    den = ONE
    for b in bot:
        den = den * poch(b, step)
    return num / den


@lru_cache(maxsize=None)
def poch_ratio(hi: int, lo: int, step: int = 1) -> QCoeff:
    """(q^step)_hi / (q^step)_lo as an explicit product (both args >= 0)."""
    if hi < 0 or lo < 0:
        raise ValueError("poch_ratio needs nonnegative arguments")
    if hi >= lo:
        out = ONE
        for k in range(lo + 1, hi + 1):
            out = out * (ONE - QCoeff.q_power(step * k))
        return out
    return poch_ratio(lo, hi, step).inverse()


@lru_cache(maxsize=None)
def qmultinom(n: int, alpha: int, beta: int, step: int = 1) -> QCoeff:
    """(q^step)_n / ((q^step)_alpha (q^step)_beta (q^step)_{n-alpha-beta})."""
    if alpha < 0 or beta < 0 or n - alpha - beta < 0:
        return ZERO
    return qbinom(n, alpha, step) * qbinom(n - alpha, beta, step)
