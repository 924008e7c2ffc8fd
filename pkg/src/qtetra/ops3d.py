"""Closed-form constructors for the 3D operator families.

Families R, L, M, N, L-tilde act on three slots, J, K, X, Y on four.  Each
family declares its slot kinds and the two conserved weight forms; elements
are produced lazily and cached, so equation networks can pull arbitrary
finite blocks on demand.

q-variants (q -> 1/q, q -> -q, q -> q^2) are realized by s-substitutions on
the coefficients at element-construction time.
"""

from __future__ import annotations

from .qcoeff import GI, ONE, QCoeff, ZERO
from .qcomb import bracket, poch, poch_ratio, qbinom, qmultinom
from .tensor import BOSON, FERMION, WeightedFamily


def qp(n):
    """q^n (any integer n)."""
    return QCoeff.q_power(n)


def sp(n):
    """s^n = q^(n/2)."""
    return QCoeff.s_power(n)


def mqp(n):
    """(-q)^n."""
    v = qp(n)
    return -v if n % 2 else v


def sgn(n):
    return ONE if n % 2 == 0 else -ONE


ONE_PLUS_Q = ONE + qp(1)
ONE_MINUS_Q = ONE - qp(1)


class RFamily(WeightedFamily):
    """Bosonic three-slot solution of the tetrahedron equation."""

    signature = (BOSON, BOSON, BOSON)
    weight_forms = ((1, 1, 0), (0, 1, 1))
    name = "R"

    def _element(self, sub, sup):
        i, j, k = sub
        a, b, c = sup
        # weight deltas hold by construction; sum over lam + mu = b
        total = ZERO
        for lam in range(b + 1):
            mu = b - lam
            binom_i = qbinom(i, mu, 2)
            if binom_i.is_zero():
                continue
            binom_j = qbinom(j, lam, 2)
            if binom_j.is_zero():
                continue
            term = (
                sgn(lam)
                * qp(i * (c - j) + (k + 1) * lam + mu * (mu - k))
                * poch_ratio(c + mu, c, 2)
                * binom_i
                * binom_j
            )
            total = total + term
        return total


class LFamily(WeightedFamily):
    """Fermion-fermion-boson solution paired with R."""

    signature = (FERMION, FERMION, BOSON)
    weight_forms = ((1, 1, 0), (0, 1, 1))
    name = "L"

    def _element(self, sub, sup):
        i, j, k = sub
        a, b, c = sup
        if (i, j) == (a, b):
            if k != c:
                return ZERO
            if (i, j) in ((0, 0), (1, 1)):
                return ONE
            if (i, j) == (0, 1):
                return -qp(k + 1)
            return qp(k)
        if (i, j, a, b) == (1, 0, 0, 1) and c == k - 1:
            return ONE - qp(2 * k)
        if (i, j, a, b) == (0, 1, 1, 0) and c == k + 1:
            return ONE
        return ZERO


class MFamily(WeightedFamily):
    """Index reversal of L."""

    signature = (BOSON, FERMION, FERMION)
    weight_forms = ((1, 1, 0), (0, 1, 1))
    name = "M"

    def __init__(self, base_l):
        super().__init__()
        self._l = base_l

    def _element(self, sub, sup):
        i, j, k = sub
        a, b, c = sup
        return self._l.element((k, j, i), (c, b, a))


class NFamily(WeightedFamily):
    """Fermion-boson-fermion family from the doubly isotropic diagram."""

    signature = (FERMION, BOSON, FERMION)
    weight_forms = ((1, 1, 0), (0, 1, 1))
    name = "N"

    def _element(self, sub, sup):
        i, j, k = sub
        a, b, c = sup
        if (i, k) == (a, c):
            if j != b:
                return ZERO
            if (i, k) == (0, 0):
                return qp(j)
            if (i, k) == (1, 1):
                return -qp(j + 1)
            return ONE
        if (i, k, a, c) == (1, 1, 0, 0) and b == j + 1:
            return qp(j) * (ONE - qp(2))
        if (i, k, a, c) == (0, 0, 1, 1) and b == j - 1:
            return bracket(j, 2, 1)
        return ZERO


class LtildeFamily(WeightedFamily):
    """Cyclic relabeling of L at -q; all elements stay Gaussian-real."""

    signature = (BOSON, FERMION, FERMION)
    # inherited through the index cycle: conserves x2+x3 and x1+x3
    weight_forms = ((0, 1, 1), (1, 0, 1))
    name = "Ltilde"

    def __init__(self, base_l):
        super().__init__()
        self._l = base_l

    def _element(self, sub, sup):
        i, j, k = sub
        a, b, c = sup
        v = self._l.element((j, k, i), (b, c, a)).subst_s_unit(GI)
        if not v.imag_part_is_zero():
            raise ArithmeticError("L-tilde element acquired an imaginary part")
        return v


class JFamily(WeightedFamily):
    """Four-slot bosonic family from the rank-2 B-type transition matrix."""

    signature = (BOSON, BOSON, BOSON, BOSON)
    weight_forms = ((1, 2, 1, 0), (0, 1, 1, 1))
    name = "J"

    def __init__(self):
        super().__init__()
        self._inner_cache = {}

    def _element(self, sub, sup):
        i, j, k, l = sub
        a, b, c, d = sup
        total = ZERO
        pref = poch_ratio(l, d, 2)
        for alpha in range(min(a, c, j) + 1):
            for beta in range(min(b, j - alpha) + 1):
                # the sole denominator of the (alpha, gamma) batch
                batch = ZERO
                for gamma in range(b - beta + 1):
                    sigma = alpha + beta + gamma
                    poly = qmultinom(j, alpha, beta) * qbinom(b - beta, gamma)
                    if poly.is_zero():
                        continue
                    poly = (
                        poly
                        * poch_ratio(j + k - alpha - beta, c - alpha)
                        * poch_ratio(i + j - alpha - beta, a - alpha)
                    )
                    inner = self._inner(
                        a + b - sigma,
                        b + c - sigma,
                        d,
                        i + j - sigma,
                        j + k - sigma,
                        l,
                    )
                    if inner.is_zero():
                        continue
                    psi1 = (
                        alpha * (alpha + 2 * b - 2 * beta - 1)
                        + (2 * beta - b) * (a + b + c)
                        + gamma * (gamma - 1)
                        - j * (i + j + k)
                    )
                    batch = batch + sgn(alpha + gamma) * sp(psi1) * inner * poly
                if not batch.is_zero():
                    total = total + batch / poch(b - beta, 2)
        return pref * total

    def _inner(self, i, k, l, a, c, d):
        """Middle-slot-free element J_{i,0,k,l}^{a,0,c,d} (a polynomial)."""
        if min(i, k, a, c) < 0:
            return ZERO
        if i + k != a + c or k + l != c + d:
            return ZERO
        key = (i, k, l, a, c, d)
        total = self._inner_cache.get(key)
        if total is not None:
            return total
        total = ZERO
        for lam in range(max(0, c - k), min(i, c) + 1):
            binoms = qbinom(i, lam) * qbinom(k, c - lam)
            if binoms.is_zero():
                continue
            psi2 = (l + d + 1) * (i + c - 2 * lam) + c - i
            total = total + sgn(c + lam) * poch_ratio(d + lam, d, 2) * sp(psi2) * binoms
        self._inner_cache[key] = total
        return total


class KFamily(WeightedFamily):
    """Full index reversal of J at q^2."""

    signature = (BOSON, BOSON, BOSON, BOSON)
    weight_forms = ((0, 1, 2, 1), (1, 1, 1, 0))
    name = "K"

    def __init__(self, base_j):
        super().__init__()
        self._j = base_j

    def _element(self, sub, sup):
        v = self._j.element(tuple(reversed(sub)), tuple(reversed(sup)))
        return v.subst_s_power(2)


class XFamily(WeightedFamily):
    """Boson-fermion-boson-fermion family; sixteen closed-form branches."""

    signature = (BOSON, FERMION, BOSON, FERMION)
    weight_forms = ((1, 2, 1, 0), (0, 1, 1, 1))
    name = "X"

    def _element(self, sub, sup):
        i, j, k, l = sub
        a, b, c, d = sup
        key = (j, l, b, d)
        if key == (0, 0, 0, 0):
            if (i, k) != (a, c):
                return ZERO
            return ONE - (ONE - mqp(c)) * qp(a)
        if key == (1, 0, 0, 0):
            if (i, k) != (a - 1, c - 1):
                return ZERO
            return sgn(c) * sp(a + c - 1) * ONE_PLUS_Q
        if key == (0, 1, 0, 0):
            if (i, k) != (a + 1, c - 1):
                return ZERO
            return sgn(c + 1) * sp(a + c - 1) * ONE_PLUS_Q * (ONE - qp(a + 1))
        if key == (1, 1, 0, 0):
            if (i, k) != (a, c - 2):
                return ZERO
            return qp(a + c - 1) * ONE_PLUS_Q * ONE_PLUS_Q
        if key == (0, 0, 1, 0):
            if (i, k) != (a + 1, c + 1):
                return ZERO
            return (
                sgn(c + 1)
                * sp(a - c + 1)
                * (ONE - qp(a + 1))
                * (ONE - mqp(c + 1))
                / ONE_PLUS_Q
            )
        if key == (1, 0, 1, 0):
            if (i, k) != (a, c):
                return ZERO
            return qp(a + 1)
        if key == (0, 1, 1, 0):
            if (i, k) != (a + 2, c):
                return ZERO
            return (ONE - qp(a + 1)) * (ONE - qp(a + 2))
        if key == (1, 1, 1, 0):
            if (i, k) != (a + 1, c - 1):
                return ZERO
            return sgn(c) * sp(a + c + 1) * ONE_PLUS_Q * (ONE - qp(a + 1))
        if key == (0, 0, 0, 1):
            if (i, k) != (a - 1, c + 1):
                return ZERO
            return sgn(c) * sp(a - c - 1) * (ONE - mqp(c + 1)) / ONE_PLUS_Q
        if key == (1, 0, 0, 1):
            if (i, k) != (a - 2, c):
                return ZERO
            return ONE
        if key == (0, 1, 0, 1):
            if (i, k) != (a, c):
                return ZERO
            return qp(a)
        if key == (1, 1, 0, 1):
            if (i, k) != (a - 1, c - 1):
                return ZERO
            return sgn(c + 1) * sp(a + c - 1) * ONE_PLUS_Q
        if key == (0, 0, 1, 1):
            if (i, k) != (a, c + 2):
                return ZERO
            return (
                qp(a - c)
                * (ONE - mqp(c + 1))
                * (ONE - mqp(c + 2))
                / (ONE_PLUS_Q * ONE_PLUS_Q)
            )
        if key == (1, 0, 1, 1):
            if (i, k) != (a - 1, c + 1):
                return ZERO
            return sgn(c + 1) * sp(a - c + 1) * (ONE - mqp(c + 1)) / ONE_PLUS_Q
        if key == (0, 1, 1, 1):
            if (i, k) != (a + 1, c + 1):
                return ZERO
            return (
                sgn(c)
                * sp(a - c + 1)
                * (ONE - qp(a + 1))
                * (ONE - mqp(c + 1))
                / ONE_PLUS_Q
            )
        # key == (1, 1, 1, 1)
        if (i, k) != (a, c):
            return ZERO
        return ONE - (ONE - mqp(c + 1)) * qp(a + 1)


class YFamily(WeightedFamily):
    """Companion of X for the anisotropic-tail diagram; carries signs."""

    signature = (BOSON, FERMION, BOSON, FERMION)
    weight_forms = ((1, 2, 1, 0), (0, 1, 1, 1))
    name = "Y"

    def _element(self, sub, sup):
        i, j, k, l = sub
        a, b, c, d = sup
        key = (j, l, b, d)
        if key == (0, 0, 0, 0):
            if (i, k) != (a, c):
                return ZERO
            return ONE - (ONE - qp(c)) * mqp(a)
        if key == (1, 0, 0, 0):
            if (i, k) != (a - 1, c - 1):
                return ZERO
            return sp(a + c - 1) * ONE_PLUS_Q
        if key == (0, 1, 0, 0):
            if (i, k) != (a + 1, c - 1):
                return ZERO
            return sgn(a) * sp(a + c - 1) * ONE_MINUS_Q * (ONE - mqp(a + 1))
        if key == (1, 1, 0, 0):
            if (i, k) != (a, c - 2):
                return ZERO
            return sgn(a) * qp(a + c - 1) * (ONE - qp(2))
        if key == (0, 0, 1, 0):
            if (i, k) != (a + 1, c + 1):
                return ZERO
            return (
                sgn(a + 1)
                * sp(a - c + 1)
                * (ONE - mqp(a + 1))
                * (ONE - qp(c + 1))
                / ONE_PLUS_Q
            )
        if key == (1, 0, 1, 0):
            if (i, k) != (a, c):
                return ZERO
            return mqp(a + 1)
        if key == (0, 1, 1, 0):
            if (i, k) != (a + 2, c):
                return ZERO
            return (
                sgn(a)
                * ONE_MINUS_Q
                * (ONE - mqp(a + 1))
                * (ONE - mqp(a + 2))
                / ONE_PLUS_Q
            )
        if key == (1, 1, 1, 0):
            if (i, k) != (a + 1, c - 1):
                return ZERO
            return sgn(a) * sp(a + c + 1) * ONE_MINUS_Q * (ONE - mqp(a + 1))
        if key == (0, 0, 0, 1):
            if (i, k) != (a - 1, c + 1):
                return ZERO
            return sp(a - c - 1) * (ONE - qp(c + 1)) / ONE_MINUS_Q
        if key == (1, 0, 0, 1):
            if (i, k) != (a - 2, c):
                return ZERO
            return sgn(a) * ONE_PLUS_Q / ONE_MINUS_Q
        if key == (0, 1, 0, 1):
            if (i, k) != (a, c):
                return ZERO
            return mqp(a)
        if key == (1, 1, 0, 1):
            if (i, k) != (a - 1, c - 1):
                return ZERO
            return -(sp(a + c - 1) * ONE_PLUS_Q)
        if key == (0, 0, 1, 1):
            if (i, k) != (a, c + 2):
                return ZERO
            return (
                sgn(a + 1)
                * qp(a - c)
                * (ONE - qp(c + 1))
                * (ONE - qp(c + 2))
                / (ONE - qp(2))
            )
        if key == (1, 0, 1, 1):
            if (i, k) != (a - 1, c + 1):
                return ZERO
            return sp(a - c + 1) * (ONE - qp(c + 1)) / ONE_MINUS_Q
        if key == (0, 1, 1, 1):
            if (i, k) != (a + 1, c + 1):
                return ZERO
            return (
                sgn(a)
                * sp(a - c + 1)
                * (ONE - mqp(a + 1))
                * (ONE - qp(c + 1))
                / ONE_PLUS_Q
            )
        # key == (1, 1, 1, 1)
        if (i, k) != (a, c):
            return ZERO
        return ONE - (ONE - qp(c + 1)) * mqp(a + 1)


class SubstFamily(WeightedFamily):
    """q-variant wrapper: applies an s-substitution to a base family."""

    def __init__(self, base, power, name):
        super().__init__()
        self._base = base
        self._power = power
        self.signature = base.signature
        self.weight_forms = base.weight_forms
        self.name = name

    def _element(self, sub, sup):
        return self._base.element(sub, sup).subst_s_power(self._power)


_BASE_CACHE: dict = {}


def family(name):
    """Shared registry of closed-form families (q-variants included)."""
    fam = _BASE_CACHE.get(name)
    if fam is not None:
        return fam
    if name == "R":
        fam = RFamily()
    elif name == "L":
        fam = LFamily()
    elif name == "M":
        fam = MFamily(family("L"))
    elif name == "N":
        fam = NFamily()
    elif name == "Ltilde":
        fam = LtildeFamily(family("L"))
    elif name == "J":
        fam = JFamily()
    elif name == "K":
        fam = KFamily(family("J"))
    elif name == "X":
        fam = XFamily()
    elif name == "Y":
        fam = YFamily()
    elif name.endswith("inv"):
        fam = SubstFamily(family(name[:-3]), -1, name)
    else:
        raise KeyError(f"unknown operator family {name!r}")
    _BASE_CACHE[name] = fam
    return fam


def xy_transfer(x_fam, sub, sup):
    """Predict a Y element from the matching X element.

    Applies q -> -q together with the unit phase and the (1+q)/(1-q) power
    dictated by the change of divided-power normalizations between the two
    diagrams; the result must be Gaussian-real.
    """
    i, j, k, l = sub
    a, b, c, d = sup
    tri = lambda n: n * (n - 1) // 2
    phase_pow = (tri(i) - tri(k) - tri(a) + tri(c) + j - b) % 4
    phase = QCoeff.gauss(*[(1, 0), (0, 1), (-1, 0), (0, -1)][phase_pow])
    ratio = ((ONE + qp(1)) / (ONE - qp(1))) ** (j - b)
    v = phase * ratio * x_fam.element(sub, sup).subst_s_unit(GI)
    if not v.imag_part_is_zero():
        raise ArithmeticError("X->Y transfer left an imaginary residue")
    return v
