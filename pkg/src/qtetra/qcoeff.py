"""Exact coefficient field for all matrix elements.

Every coefficient in this package is a ratio of Laurent polynomials in a
single formal variable ``s`` with Gaussian-integer coefficients.  The
convention ``q = s^2`` lets half-integer powers of q live as ordinary
monomials (``q^(1/2) = s``), and the Gaussian units make the substitution
``s -> i*s`` (i.e. ``q -> -q``) an internal ring operation.

Equality is decided by cross-multiplication and never depends on any
normalization.  Reduction (content stripping, s-power stripping, polynomial
gcd cancellation, unit normalization of the denominator) is performed on
construction so that equal values share one canonical representation; this
is what makes the printed form deterministic.
"""

from __future__ import annotations

from fractions import Fraction

# ---------------------------------------------------------------------------
# Gaussian integers as (re, im) tuples of plain ints
# ---------------------------------------------------------------------------

GZERO = (0, 0)
GONE = (1, 0)
GMINUS = (-1, 0)
GI = (0, 1)
GMINUS_I = (0, -1)

UNITS = (GONE, GI, GMINUS, GMINUS_I)


def gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def gmul(a, b):
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def gneg(a):
    return (-a[0], -a[1])


def gnorm(a):
    return a[0] * a[0] + a[1] * a[1]


def gdivmod(a, b):
    """Rounded division in Z[i]: a = q*b + r with N(r) <= N(b)/2."""
    br, bi = b
    n = br * br + bi * bi
    if n == 0:
        raise ZeroDivisionError("gaussian division by zero")
    ar, ai = a
    xr = ar * br + ai * bi
    xi = ai * br - ar * bi
    # round to nearest integer
    qr = (2 * xr + n) // (2 * n) if xr >= 0 else -((-2 * xr + n) // (2 * n))
    qi = (2 * xi + n) // (2 * n) if xi >= 0 else -((-2 * xi + n) // (2 * n))
    q = (qr, qi)
    return q, gsub(a, gmul(q, b))


def ggcd(a, b):
    while b != GZERO:
        _, r = gdivmod(a, b)
        a, b = b, r
    return gcanon(a)


def gcanon(a):
    """Canonical associate: the rotation with re > 0 and im >= 0 (unique)."""
    for _ in range(4):
        if (a[0] > 0 and a[1] >= 0) or a == GZERO:
            return a
        a = gmul(a, GI)
    return a


def gexactdiv(a, b):
    q, r = gdivmod(a, b)
    if r != GZERO:
        raise ArithmeticError("not divisible in Z[i]")
    return q


# ---------------------------------------------------------------------------
# Laurent polynomials in s: dict {exponent: gauss}, zero coeffs never stored
# ---------------------------------------------------------------------------

LZERO: dict = {}
LONE = {0: GONE}


def lterm(exp, coeff=GONE):
    if coeff == GZERO:
        return {}
    return {exp: coeff}


def ladd(p, r):
    out = dict(p)
    for e, c in r.items():
        v = gadd(out.get(e, GZERO), c)
        if v == GZERO:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def lneg(p):
    return {e: gneg(c) for e, c in p.items()}


def lsub(p, r):
    return ladd(p, lneg(r))


def lmul(p, r):
    if not p or not r:
        return {}
    if len(p) > len(r):
        p, r = r, p
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = e1 + e2
            v = gadd(out.get(e, GZERO), gmul(c1, c2))
            if v == GZERO:
                out.pop(e, None)
            else:
                out[e] = v
    return out


def lscale(p, g):
    if g == GZERO:
        return {}
    return {e: gmul(c, g) for e, c in p.items()}


def lshift(p, k):
    if k == 0:
        return p
    return {e + k: c for e, c in p.items()}


def lminexp(p):
    return min(p) if p else 0


def lcontent(p):
    g = GZERO
    for c in p.values():
        g = ggcd(g, c)
        if g == GONE:
            break
    return g


def lsubst_unit(p, u):
    """s -> u*s for a Gaussian unit u: coefficient at s^k picks up u^k."""
    if u == GONE:
        return p
    pow_cache = {0: GONE}

    def upow(k):
        k4 = k % 4
        v = pow_cache.get(k4)
        if v is None:
            v = GONE
            for _ in range(k4):
                v = gmul(v, u)
            pow_cache[k4] = v
        return v

    out = {}
    for e, c in p.items():
        out[e] = gmul(c, upow(e))
    return out


def lsubst_power(p, m):
    """s -> s^m (m a nonzero integer, possibly negative)."""
    return {e * m: c for e, c in p.items()}


# -- division helpers over Q(i) ---------------------------------------------


def _fr(g):
    return (Fraction(g[0]), Fraction(g[1]))


def _frmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _frsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _frdiv(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    if n == 0:
        raise ZeroDivisionError
    return ((a[0] * b[0] + a[1] * b[1]) / n, (a[1] * b[0] - a[0] * b[1]) / n)


def _primitive(p):
    """Divide out the Gaussian content (canonical associate)."""
    if not p:
        return p
    cont = lcontent(p)
    if cont in (GZERO, GONE):
        return p
    return {e: gexactdiv(c, cont) for e, c in p.items()}


def _prem_primitive(a, b):
    """Primitive pseudo-remainder of a modulo b over Z[i] (deg a >= deg b)."""
    db = max(b)
    lb = b[db]
    r = a
    while r:
        dr = max(r)
        if dr < db:
            break
        lr = r[dr]
        new = {}
        for e, c in r.items():
            if e != dr:
                new[e] = gmul(c, lb)
        sh = dr - db
        for e, c in b.items():
            if e == db:
                continue
            ee = e + sh
            v = gsub(new.get(ee, GZERO), gmul(lr, c))
            if v == GZERO:
                new.pop(ee, None)
            else:
                new[ee] = v
        r = _primitive(new)
    return r


def lgcd(p, r):
    """Primitive gcd in Z[i][s] of two polynomials with min exponent 0."""
    a, b = _primitive(p), _primitive(r)
    if not a:
        return b
    if not b:
        return a
    if max(a) < max(b):
        a, b = b, a
    while b:
        a, b = b, _prem_primitive(a, b)
    return a


def lexactdiv(p, d):
    """Exact quotient p/d in Z[i][s] with Z[i] coefficients, or None.

    Complete whenever d is primitive (Gauss's lemma); d is primitive at
    every call site (it is a primitive gcd).
    """
    if not p:
        return {}
    dd = max(d)
    ld = d[dd]
    r = dict(p)
    quot = {}
    while r:
        dr = max(r)
        if dr < dd:
            return None
        qc, rem = gdivmod(r[dr], ld)
        if rem != GZERO:
            return None
        qe = dr - dd
        quot[qe] = qc
        for e, c in d.items():
            ee = e + qe
            v = gsub(r.get(ee, GZERO), gmul(qc, c))
            if v == GZERO:
                r.pop(ee, None)
            else:
                r[ee] = v
    return quot


# ---------------------------------------------------------------------------
# QCoeff: num/den with canonical reduction
# ---------------------------------------------------------------------------


class Divergent:
    """Sentinel value returned by crystal_limit when the s->0 limit blows up."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Divergent"


DIVERGENT = Divergent()


class QCoeff:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = LONE
        if not den:
            raise ZeroDivisionError("QCoeff denominator is zero")
        if reduce:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def from_int(n):
        return QCoeff(lterm(0, (n, 0)), LONE, reduce=False) if n else _ZERO

    @staticmethod
    def gauss(re, im=0):
        return QCoeff(lterm(0, (re, im)))

    @staticmethod
    def s_power(k, coeff=GONE):
        """coeff * s^k."""
        return QCoeff(lterm(k, coeff))

    @staticmethod
    def q_power(k):
        """q^k = s^(2k)."""
        return QCoeff(lterm(2 * k))

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    # -- field arithmetic ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QCoeff):
            return NotImplemented
        if self.den == other.den:
            return QCoeff(ladd(self.num, other.num), self.den)
        return QCoeff(
            ladd(lmul(self.num, other.den), lmul(other.num, self.den)),
            lmul(self.den, other.den),
        )

    def __sub__(self, other):
        if not isinstance(other, QCoeff):
            return NotImplemented
        if self.den == other.den:
            return QCoeff(lsub(self.num, other.num), self.den)
        return QCoeff(
            lsub(lmul(self.num, other.den), lmul(other.num, self.den)),
            lmul(self.den, other.den),
        )

    def __neg__(self):
        return QCoeff(lneg(self.num), self.den, reduce=False)

    def __mul__(self, other):
        if not isinstance(other, QCoeff):
            return NotImplemented
        if not self.num or not other.num:
            return _ZERO
        return QCoeff(lmul(self.num, other.num), lmul(self.den, other.den))

    def __truediv__(self, other):
        if not isinstance(other, QCoeff):
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("QCoeff division by zero")
        if not self.num:
            return _ZERO
        return QCoeff(lmul(self.num, other.den), lmul(self.den, other.num))

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("QCoeff division by zero")
        return QCoeff(self.den, self.num)

    def __pow__(self, n):
        if n == 0:
            return _ONE
        base = self if n > 0 else self.inverse()
        out = _ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- equality by cross-multiplication --------------------------------

    def __eq__(self, other):
        if not isinstance(other, QCoeff):
            return NotImplemented
        if self.num is other.num and self.den is other.den:
            return True
        return lmul(self.num, other.den) == lmul(other.num, self.den)

    def __hash__(self):
        # hash the fully reduced representation so equal values agree
        if self._hash is None:
            num, den = _reduce(self.num, self.den, full=True)
            self._hash = hash((frozenset(num.items()), frozenset(den.items())))
        return self._hash

    # -- substitutions ----------------------------------------------------

    def subst_s_unit(self, u):
        """s -> u*s for u in {1, i, -1, -i} (as (re, im) tuples)."""
        if u not in UNITS:
            raise ValueError(f"not a Gaussian unit: {u!r}")
        return QCoeff(lsubst_unit(self.num, u), lsubst_unit(self.den, u))

    def subst_s_power(self, m):
        """s -> s^m; m = 2 realizes q -> q^2, m = -1 realizes q -> 1/q."""
        if m == 0:
            raise ValueError("s -> s^0 is not invertible")
        return QCoeff(lsubst_power(self.num, m), lsubst_power(self.den, m))

    # -- limits and numerics ----------------------------------------------

    def crystal_limit(self):
        """lim_{s->0+} as a Gaussian rational (Fraction pair) or DIVERGENT."""
        if not self.num:
            return (Fraction(0), Fraction(0))
        vn, vd = min(self.num), min(self.den)
        if vn > vd:
            return (Fraction(0), Fraction(0))
        if vn < vd:
            return DIVERGENT
        return _frdiv(_fr(self.num[vn]), _fr(self.den[vd]))

    def eval_numeric(self, s0, tol=1e-12):
        """Floating evaluation at s = s0; spot checks only."""
        num = _leval(self.num, s0)
        den = _leval(self.den, s0)
        scale = max(abs(c[0]) + abs(c[1]) for c in self.den.values())
        if abs(den) < tol * scale:
            raise ZeroDivisionError("denominator vanishes near s0")
        return num / den

    def imag_part_is_zero(self):
        num, den = _reduce(self.num, self.den, full=True)
        return all(c[1] == 0 for c in num.values()) and all(
            c[1] == 0 for c in den.values()
        )

    # -- canonical string ---------------------------------------------------

    def __repr__(self):
        return self.canonical()

    def canonical(self):
        num, den = _reduce(self.num, self.den, full=True)
        ns = _lformat(num)
        if den == LONE:
            return f"({ns})"
        return f"({ns})/({_lformat(den)})"

    @staticmethod
    def parse(text):
        return _parse_qcoeff(text)


def _leval(p, s0):
    return sum(complex(c[0], c[1]) * s0**e for e, c in p.items()) if p else 0j


# full gcd cancellation is triggered lazily: always for display (canonical
# form), otherwise only once a representation grows past this many terms
_GCD_THRESHOLD = 24


def _reduce(num, den, full=False):
    if not num:
        return {}, LONE
    # strip s powers: denominator minimal exponent becomes 0
    shift = lminexp(den)
    if shift:
        den = lshift(den, -shift)
        num = lshift(num, -shift)
    # joint Gaussian content
    cont = ggcd(lcontent(num), lcontent(den))
    if cont not in (GZERO, GONE):
        num = {e: gexactdiv(c, cont) for e, c in num.items()}
        den = {e: gexactdiv(c, cont) for e, c in den.items()}
    if len(den) > 1 and (full or len(num) + len(den) > _GCD_THRESHOLD):
        nshift = lminexp(num)
        g = lgcd(lshift(num, -nshift), den)
        if g and (len(g) > 1 or g.get(0) != GONE):
            num = lshift(lexactdiv(lshift(num, -nshift), g), nshift)
            den = lexactdiv(den, g)
    # unit-normalize: lowest denominator coefficient gets re > 0 (tie: im > 0)
    low = den[lminexp(den)]
    if low != gcanon(low):
        for u in (GI, GMINUS, GMINUS_I):
            if gcanon(low) == gmul(low, u):
                num = lscale(num, u)
                den = lscale(den, u)
                break
    return num, den


_ZERO = QCoeff({}, LONE, reduce=False)
_ONE = QCoeff(dict(LONE), LONE, reduce=False)


# ---------------------------------------------------------------------------
# printing / parsing of the canonical form
# ---------------------------------------------------------------------------


def _gformat(c):
    re, im = c
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    istr = "i" if abs(im) == 1 else f"{abs(im)}i"
    return f"({re}{sign}{istr})"


def _lformat(p):
    if not p:
        return "0"
    parts = []
    for e in sorted(p):
        c = p[e]
        cs = _gformat(c)
        if e == 0:
            term = cs
        elif cs == "1":
            term = f"s^{e}"
        elif cs == "-1":
            term = f"-s^{e}"
        else:
            term = f"{cs}*s^{e}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-") and not term.startswith("-("):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def _parse_gauss(tok):
    tok = tok.strip()
    if tok.startswith("(") and tok.endswith(")"):
        tok = tok[1:-1].strip()
    # forms: "3", "-3", "i", "-i", "2i", "-2i", "1+2i", "1-i"
    if tok.endswith("i"):
        body = tok[:-1]
        # find a top-level +/- separating re and im (not a leading sign)
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-":
                re = int(body[:pos])
                imtok = body[pos:]
                im = 1 if imtok == "+" else -1 if imtok == "-" else int(imtok)
                return (re, im)
        im = 1 if body in ("", "+") else -1 if body == "-" else int(body)
        return (0, im)
    return (int(tok), 0)


def _parse_laurent(text):
    text = text.strip()
    if text == "0":
        return {}
    # split on top-level " + " / " - "
    terms = []
    depth = 0
    cur = ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text[i : i + 3] in (" + ", " - "):
            terms.append(cur)
            cur = "-" if text[i + 1] == "-" else ""
            i += 3
            continue
        cur += ch
        i += 1
    terms.append(cur)
    out = {}
    for term in terms:
        term = term.strip()
        if "s^" in term:
            head, _, etok = term.rpartition("s^")
            e = int(etok)
            head = head.rstrip("*").strip()
            if head in ("", "+"):
                c = GONE
            elif head == "-":
                c = GMINUS
            else:
                c = _parse_gauss(head)
        else:
            e = 0
            c = _parse_gauss(term)
        prev = out.get(e, GZERO)
        v = gadd(prev, c)
        if v == GZERO:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _parse_qcoeff(text):
    text = text.strip()
    # split "( num )/( den )" at the top-level "/("
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            ns, ds = text[:i], text[i + 1 :]
            return QCoeff(
                _parse_laurent(ns.strip()[1:-1]), _parse_laurent(ds.strip()[1:-1])
            )
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return QCoeff(_parse_laurent(text))


# convenient module-level constants
ZERO = _ZERO
ONE = _ONE
Q = QCoeff.q_power(1)
S = QCoeff.s_power(1)
