"""Rank-2 and rank-3 nilpotent quantum-superalgebra engine.

Words in the free superalgebra over the generators e_1..e_r are straightened
against the defining relations (Serre relations per Cartan datum, squares of
isotropic generators, commuting far pairs, and the quartic relation around
an isotropic middle node).  Base relations are oriented into rewrite rules
by degree-lexicographic order with e_r > ... > e_1 and completed by
resolving overlaps up to a degree cap; confluence is checked empirically,
never assumed, and the transition-matrix solver validates its own answer
independently of completeness.

Transition matrices between the two PBW bases of a rank-2 diagram are
obtained by expanding both families of ordered root-vector monomials to
normal form and solving the exact linear system in the word basis.  This is
the algebraic oracle the closed-form operator families are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .qcoeff import ONE, QCoeff, ZERO
from .qcomb import bracket_fact


def qp(n):
    return QCoeff.q_power(n)


def sp(n):
    return QCoeff.s_power(n)


S_NORM = QCoeff.s_power(1) + QCoeff.s_power(-1)  # q^(1/2) + q^(-1/2)


@dataclass(frozen=True)
class CartanData:
    key: str
    da: tuple  # symmetrized Cartan matrix, rows of ints
    parity: tuple
    kind: str  # "A" or "B"

    @property
    def rank(self):
        return len(self.parity)

    def bilin(self, m1, m2):
        return sum(
            m1[i] * self.da[i][j] * m2[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def word_weight(self, word):
        w = [0] * self.rank
        for g in word:
            w[g - 1] += 1
        return tuple(w)

    def weight_parity(self, w):
        return sum(wi * pi for wi, pi in zip(w, self.parity)) % 2

    def root_type(self, w):
        p = self.weight_parity(w)
        norm2 = self.bilin(w, w)
        if p == 0:
            return "even"
        return "iso" if norm2 == 0 else "aniso"


DIAGRAMS = {
    # rank 2, type A
    "A:oo": CartanData("A:oo", ((2, -1), (-1, 2)), (0, 0), "A"),
    "A:ox": CartanData("A:ox", ((2, -1), (-1, 0)), (0, 1), "A"),
    "A:xo": CartanData("A:xo", ((0, -1), (-1, 2)), (1, 0), "A"),
    "A:xx": CartanData("A:xx", ((0, -1), (-1, 0)), (1, 1), "A"),
    # rank 2, type B
    "B:oo": CartanData("B:oo", ((2, -1), (-1, 1)), (0, 0), "B"),
    "B:xo": CartanData("B:xo", ((0, -1), (-1, 1)), (1, 0), "B"),
    "B:xb": CartanData("B:xb", ((0, -1), (-1, 1)), (1, 1), "B"),
    "B:ob": CartanData("B:ob", ((2, -1), (-1, 1)), (0, 1), "B"),
    # rank 3, type A
    "A3:ooo": CartanData(
        "A3:ooo", ((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (0, 0, 0), "A"
    ),
    "A3:oox": CartanData(
        "A3:oox", ((2, -1, 0), (-1, 2, -1), (0, -1, 0)), (0, 0, 1), "A"
    ),
    "A3:oxx": CartanData(
        "A3:oxx", ((2, -1, 0), (-1, 0, 1), (0, 1, 0)), (0, 1, 1), "A"
    ),
    "A3:oxo": CartanData(
        "A3:oxo", ((2, -1, 0), (-1, 0, 1), (0, 1, -2)), (0, 1, 0), "A"
    ),
    "A3:xox": CartanData(
        "A3:xox", ((0, -1, 0), (-1, 2, -1), (0, -1, 0)), (1, 0, 1), "A"
    ),
    "A3:xxx": CartanData(
        "A3:xxx", ((0, 1, 0), (1, 0, -1), (0, -1, 0)), (1, 1, 1), "A"
    ),
    # rank 3, type B
    "B3:ooo": CartanData(
        "B3:ooo", ((2, -1, 0), (-1, 2, -1), (0, -1, 1)), (0, 0, 0), "B"
    ),
    "B3:xoo": CartanData(
        "B3:xoo", ((0, -1, 0), (-1, 2, -1), (0, -1, 1)), (1, 0, 0), "B"
    ),
    "B3:xxo": CartanData(
        "B3:xxo", ((0, 1, 0), (1, 0, -1), (0, -1, 1)), (1, 1, 0), "B"
    ),
    "B3:oob": CartanData(
        "B3:oob", ((2, -1, 0), (-1, 2, -1), (0, -1, 1)), (0, 0, 1), "B"
    ),
    "B3:oxb": CartanData(
        "B3:oxb", ((2, -1, 0), (-1, 0, 1), (0, 1, -1)), (0, 1, 1), "B"
    ),
    "B3:oxo": CartanData(
        "B3:oxo", ((2, -1, 0), (-1, 0, 1), (0, 1, -1)), (0, 1, 0), "B"
    ),
    "B3:xob": CartanData(
        "B3:xob", ((0, -1, 0), (-1, 2, -1), (0, -1, 1)), (1, 0, 1), "B"
    ),
    "B3:xxb": CartanData(
        "B3:xxb", ((0, 1, 0), (1, 0, -1), (0, -1, 1)), (1, 1, 1), "B"
    ),
}


# ---------------------------------------------------------------------------
# free-algebra elements: dict {word tuple: QCoeff}
# ---------------------------------------------------------------------------


def el_gen(i):
    return {(i,): ONE}


def el_scale(c, x):
    if c.is_zero():
        return {}
    return {w: c * v for w, v in x.items()}


def el_add(x, y):
    out = dict(x)
    for w, c in y.items():
        s = out.get(w)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s
    return out


def el_sub(x, y):
    return el_add(x, el_scale(-ONE, y))


def el_mul(x, y):
    out = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = w1 + w2
            c = c1 * c2
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
    return out


def el_pow(x, n):
    out = {(): ONE}
    for _ in range(n):
        out = el_mul(out, x)
    return out


def _homog_weight(cd, x):
    ws = {cd.word_weight(w) for w in x}
    if len(ws) != 1:
        raise ValueError("element is not weight-homogeneous")
    return ws.pop()


def qcom(cd, x, y, q_on=True):
    """[x, y]_q = xy - (-1)^(p p') q^(-(wx, wy)) yx; q_on=False gives [x, y]."""
    if not x or not y:
        return {}
    wx, wy = _homog_weight(cd, x), _homog_weight(cd, y)
    sign = (-1) ** (cd.weight_parity(wx) * cd.weight_parity(wy))
    coef = QCoeff.from_int(sign)
    if q_on:
        coef = coef * sp(-2 * cd.bilin(wx, wy))
    return el_sub(el_mul(x, y), el_scale(coef, el_mul(y, x)))


# ---------------------------------------------------------------------------
# word order and rewriting
# ---------------------------------------------------------------------------


def _wkey(word):
    return (len(word), word)


def leading_word(x):
    return max(x, key=_wkey)


class RewriteSystem:
    """Oriented homogeneous rules; leading words strictly dominate deglex."""

    def __init__(self, cd, max_degree=8):
        self.cd = cd
        self.rules = []  # list of (lead word, replacement element)
        self._index = {}  # first letter -> [(lead, repl)]
        self.max_degree = max_degree
        for rel in defining_relations(cd):
            self.add_rule(rel)
        self._complete()

    def add_rule(self, element):
        element = self.reduce(element)
        if not element:
            return False
        lead = leading_word(element)
        lc = element[lead]
        repl = {
            w: -(c / lc) for w, c in element.items() if w != lead
        }
        for w in repl:
            if _wkey(w) >= _wkey(lead):
                raise ValueError("rule does not decrease the word order")
        self.rules.append((lead, repl))
        self._index.setdefault(lead[0], []).append((lead, repl))
        return True

    def reduce(self, x):
        """Normal form: no surviving word contains any rule's leading word.

        Words are processed largest-first, which makes the whole completion
        trajectory independent of hash seeds (byte-identical runs).
        """
        work = dict(x)
        out = {}
        while work:
            w = max(work, key=_wkey)
            c = work.pop(w)
            hit = self._first_match(w)
            if hit is None:
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
                continue
            pos, lead, repl = hit
            pre, post = w[:pos], w[pos + len(lead) :]
            for rw, rc in repl.items():
                nw = pre + rw + post
                nc = c * rc
                s = work.get(nw)
                s = nc if s is None else s + nc
                if s.is_zero():
                    work.pop(nw, None)
                else:
                    work[nw] = s
        return out

    def _first_match(self, w):
        n = len(w)
        index = self._index
        for pos in range(n):
            cands = index.get(w[pos])
            if not cands:
                continue
            for lead, repl in cands:
                m = len(lead)
                if pos + m <= n and w[pos : pos + m] == lead:
                    return pos, lead, repl
        return None

    def _complete(self):
        """Resolve overlaps of leading words (bounded diamond-lemma pass).

        Incremental: every new rule is queued against all existing rules,
        so each critical pair is examined once.
        """
        queue = list(range(len(self.rules)))
        done = set()
        while queue:
            a = queue.pop(0)
            for b in range(len(self.rules)):
                for pair in ((a, b), (b, a)):
                    if pair in done:
                        continue
                    done.add(pair)
                    l1, r1 = self.rules[pair[0]]
                    l2, r2 = self.rules[pair[1]]
                    for s_elem in self._spolys(l1, r1, l2, r2):
                        if not s_elem:
                            continue
                        if len(leading_word(s_elem)) > self.max_degree:
                            continue
                        if self.add_rule(s_elem):
                            queue.append(len(self.rules) - 1)

    def _spolys(self, l1, r1, l2, r2):
        out = []
        e1 = dict(r1)
        e1[l1] = -ONE  # rule as element: lead - repl, times -1; sign cancels
        e2 = dict(r2)
        e2[l2] = -ONE
        # suffix of l1 equals prefix of l2
        for k in range(1, min(len(l1), len(l2))):
            if l1[len(l1) - k :] == l2[:k]:
                w = l1 + l2[k:]
                if len(w) > self.max_degree:
                    continue
                a = el_mul(e1, {l2[k:]: ONE})
                b = el_mul({l1[: len(l1) - k]: ONE}, e2)
                out.append(el_sub(a, b))
        # l2 occurs strictly inside l1
        if l1 != l2:
            for pos in range(len(l1) - len(l2) + 1):
                if l1[pos : pos + len(l2)] == l2:
                    pre, post = l1[:pos], l1[pos + len(l2) :]
                    b = el_mul(el_mul({pre: ONE}, e2), {post: ONE})
                    out.append(el_sub(e1, b))
        return out

    def confluence_report(self, degree):
        """Empirical check: all overlaps up to the degree reduce to zero."""
        bad = []
        for (l1, r1) in self.rules:
            for (l2, r2) in self.rules:
                for s_elem in self._spolys(l1, r1, l2, r2):
                    if s_elem and len(leading_word(s_elem)) <= degree:
                        if self.reduce(s_elem):
                            bad.append((l1, l2))
        return bad


def leading_word_or(x):
    return leading_word(x) if x else ()


def defining_relations(cd):
    """Serre relations, isotropic squares, far commutators, quartic middles."""
    rels = []
    r = cd.rank
    types = [cd.root_type(tuple(1 if k == i else 0 for k in range(r))) for i in range(r)]
    for i in range(r):
        if types[i] == "iso":
            rels.append({(i + 1, i + 1): ONE})
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            aij_num = cd.da[i][j]
            if aij_num == 0:
                if j < i:
                    sign = (-1) ** (cd.parity[i] * cd.parity[j])
                    rels.append(
                        el_sub(
                            el_mul(el_gen(i + 1), el_gen(j + 1)),
                            el_scale(
                                QCoeff.from_int(sign),
                                el_mul(el_gen(j + 1), el_gen(i + 1)),
                            ),
                        )
                    )
                continue
            if types[i] == "iso":
                continue
            rels.append(serre_element(cd, i, j))
    if r == 3 and types[1] == "iso" and cd.da[0][1] != 0 and cd.da[1][2] != 0:
        rels.append(quartic_middle(cd))
    return rels


def serre_element(cd, i, j):
    """General higher Serre relation for a non-isotropic node i against j."""
    d2 = cd.da[i][i]  # (alpha_i, alpha_i) = 2 d_i
    assert d2 != 0 and (cd.da[i][j] * 2) % d2 == 0
    n = abs(cd.da[i][j] * 2 // d2)  # |a_ij| = |(alpha_i, alpha_j)| / d_i
    pi_, pj_ = cd.parity[i], cd.parity[j]
    piu = -1 if pi_ else 1
    ei, ej = el_gen(i + 1), el_gen(j + 1)
    total = {}
    for nu in range(n + 2):
        sign = (-1) ** (nu + pi_ * nu * (nu - 1) // 2 + nu * pi_ * pj_)
        denom = bracket_fact(n + 1 - nu, d2, piu) * bracket_fact(nu, d2, piu)
        coef = QCoeff.from_int(sign) / denom
        word = el_mul(el_mul(el_pow(ei, n + 1 - nu), ej), el_pow(ei, nu))
        total = el_add(total, el_scale(coef, word))
    return total


def quartic_middle(cd):
    """Extra relation when the middle node of a rank-3 chain is isotropic."""
    p1, p3 = cd.parity[0], cd.parity[2]
    phi = p1 + p3
    vphi = p1 * p3
    e1, e2, e3 = el_gen(1), el_gen(2), el_gen(3)
    m = lambda *els: _chain_mul(els)
    total = m(e1, e2, e3, e2)
    total = el_add(total, el_scale(QCoeff.from_int((-1) ** phi), m(e2, e1, e2, e3)))
    total = el_add(total, el_scale(QCoeff.from_int((-1) ** vphi), m(e2, e3, e2, e1)))
    total = el_add(
        total, el_scale(QCoeff.from_int((-1) ** (phi + vphi)), m(e3, e2, e1, e2))
    )
    total = el_sub(
        total,
        el_scale(
            QCoeff.from_int((-1) ** p1) * (qp(1) + qp(-1)), m(e2, e1, e3, e2)
        ),
    )
    return total


def _chain_mul(els):
    out = {(): ONE}
    for e in els:
        out = el_mul(out, e)
    return out


@lru_cache(maxsize=None)
def rewrite_system(key, max_degree=12):
    return RewriteSystem(DIAGRAMS[key], max_degree=max_degree)


# ---------------------------------------------------------------------------
# root vectors and PBW monomials
# ---------------------------------------------------------------------------


@dataclass
class RootVector:
    name: str
    raw: dict  # commutator expansion before scalar normalization
    scalar: QCoeff  # overall prefactor (1 or 1/(q^(1/2)+q^(-1/2)))
    coeffs: tuple  # root in the simple-root lattice
    rcount: int  # multiplicity of the last letter (normalization bookkeeping)

    @property
    def element(self):
        return el_scale(self.scalar, self.raw) if not self.scalar.is_one() else self.raw


class RootBuilder:
    def __init__(self, cd):
        self.cd = cd

    def gen(self, i):
        coeffs = tuple(1 if k == i - 1 else 0 for k in range(self.cd.rank))
        return RootVector(
            str(i), el_gen(i), ONE, coeffs, 1 if i == self.cd.rank else 0
        )

    def qc(self, x, y):
        """Root vector [x, y]_q with the type-B normalization rule: divide by
        q^(1/2)+q^(-1/2) at the node where the last letter's count reaches 2.

        The scalar prefactor is tracked separately so that straightening can
        run on polynomial coefficients.
        """
        raw = qcom(self.cd, x.raw, y.raw)
        scalar = x.scalar * y.scalar
        rcount = x.rcount + y.rcount
        if self.cd.kind == "B" and rcount == 2 and x.rcount < 2 and y.rcount < 2:
            scalar = scalar / S_NORM
        coeffs = tuple(a + b for a, b in zip(x.coeffs, y.coeffs))
        return RootVector(f"({x.name}{y.name})", raw, scalar, coeffs, rcount)


def rank2_bases(key):
    """The two ordered root-vector lists (B1, B2) of a rank-2 diagram."""
    cd = DIAGRAMS[key]
    rb = RootBuilder(cd)
    e1, e2 = rb.gen(1), rb.gen(2)
    if cd.kind == "A":
        b1 = [e1, rb.qc(e2, e1), e2]
        b2 = [e2, rb.qc(e1, e2), e1]
    else:
        e21 = rb.qc(e2, e1)
        e12 = rb.qc(e1, e2)
        b1 = [e1, e21, rb.qc(e2, e21), e2]
        b2 = [e2, rb.qc(e12, e2), e12, e1]
    return b1, b2


def root_divided_norm(cd, rv, a):
    """Divided-power denominator [a]_{q^d, pi}! for the root vector."""
    rtype = cd.root_type(rv.coeffs)
    if rtype == "iso":
        if a > 1:
            raise ValueError(f"exponent {a} > 1 at isotropic root {rv.name}")
        return ONE
    d2 = cd.bilin(rv.coeffs, rv.coeffs)
    piu = 1 if cd.weight_parity(rv.coeffs) == 0 else -1
    return bracket_fact(a, d2, piu)


def exponent_domains(cd, basis):
    return ["01" if cd.root_type(rv.coeffs) == "iso" else "nat" for rv in basis]


_POWER_NF: dict = {}


def _raw_power_nf(key, which, t, a):
    """Cached normal form of the t-th root vector's plain a-th power."""
    ck = (key, which, t, a)
    v = _POWER_NF.get(ck)
    if v is None:
        rv = rank2_bases(key)[which - 1][t]
        rs = rewrite_system(key)
        v = rs.reduce(el_pow(rv.raw, a))
        _POWER_NF[ck] = v
    return v


def monomial_scalar(key, which, exponents):
    """Prefactor turning the plain-power normal form into the PBW monomial."""
    cd = DIAGRAMS[key]
    basis = rank2_bases(key)[which - 1]
    s = ONE
    for rv, a in zip(basis, exponents):
        if a == 0:
            continue
        s = s * rv.scalar**a / root_divided_norm(cd, rv, a)
    return s


def pbw_monomial_raw(key, which, exponents):
    """Normal form of the plain-power product (polynomial coefficients).

    Reduction is interleaved with multiplication so intermediates stay at
    the size of straightened elements rather than free expansions.
    """
    basis = rank2_bases(key)[which - 1]
    if len(exponents) != len(basis):
        raise ValueError("wrong number of exponents")
    rs = rewrite_system(key)
    out = {(): ONE}
    for t, a in enumerate(exponents):
        if a == 0:
            continue
        out = rs.reduce(el_mul(out, _raw_power_nf(key, which, t, a)))
    return out


def pbw_monomial(key, which, exponents):
    """Ordered product of divided root-vector powers, fully straightened."""
    cd = DIAGRAMS[key]
    basis = rank2_bases(key)[which - 1]
    for rv, a in zip(basis, exponents):
        root_divided_norm(cd, rv, a)  # validates isotropic exponent domains
    return el_scale(
        monomial_scalar(key, which, tuple(exponents)),
        pbw_monomial_raw(key, which, tuple(exponents)),
    )


def _basis_tuples(cd, basis, mu):
    """Exponent tuples (basis order) whose roots sum to the multidegree mu."""
    doms = exponent_domains(cd, basis)
    out = []
    tup = [0] * len(basis)

    def rec(t, rem):
        if t == len(basis):
            if all(r == 0 for r in rem):
                out.append(tuple(tup))
            return
        rv = basis[t]
        hi = 1 if doms[t] == "01" else None
        for p in range(cd.rank):
            if rv.coeffs[p] > 0:
                b = rem[p] // rv.coeffs[p]
                hi = b if hi is None else min(hi, b)
        for v in range((hi or 0) + 1):
            tup[t] = v
            nxt = tuple(r - rv.coeffs[p] * v for p, r in enumerate(rem))
            if all(r >= 0 for r in nxt):
                rec(t + 1, nxt)

    rec(0, mu)
    return out


class _MonomialCache:
    def __init__(self):
        self.data = {}

    def get(self, key, which, exps):
        k = (key, which, exps)
        v = self.data.get(k)
        if v is None:
            v = pbw_monomial_raw(key, which, exps)
            self.data[k] = v
        return v


_MONOS = _MonomialCache()


def transition_block(key, sup, backward=False):
    """Transition coefficients for one target monomial.

    Forward (default): expand the basis-2 monomial with exponent tuple
    ``sup`` over basis-1 monomials; returns {sub: coeff} keyed in the
    operator index convention (sub reversed relative to basis-1 order).
    Backward: the mirrored expansion (basis 1 over basis 2).

    The linear solve runs on plain-power normal forms; divided-power and
    normalizer scalars are reinstated on the solved coefficients.
    """
    cd = DIAGRAMS[key]
    b1, b2 = rank2_bases(key)
    src, dst, dwhich = (b1, b2, 2) if backward else (b2, b1, 1)
    swhich = 1 if backward else 2
    sup = tuple(sup)
    mu = tuple(
        sum(rv.coeffs[p] * a for rv, a in zip(src, sup)) for p in range(cd.rank)
    )
    target = _MONOS.get(key, swhich, sup)
    s_sup = monomial_scalar(key, swhich, sup)
    subs_basis = _basis_tuples(cd, dst, mu)
    columns = [_MONOS.get(key, dwhich, t) for t in subs_basis]
    lambdas = _solve(columns, target, key)
    out = {}
    for t, lam in zip(subs_basis, lambdas):
        if lam.is_zero():
            continue
        g = lam * s_sup / monomial_scalar(key, dwhich, t)
        # operator index convention lists the destination exponents reversed
        out[tuple(reversed(t))] = g
    return out


def _solve(columns, target, ctx=""):
    """Solve sum_j g_j col_j = target exactly in the word basis.

    Straightened monomials carry pairwise distinct leading words, which
    makes the system triangular: peel the maximal residual word against the
    unique column leading there.  If leads ever collided the generic
    elimination below would still decide the system.
    """
    tri = _solve_triangular(columns, target)
    if tri is not None:
        return tri
    return _solve_dense(columns, target, ctx)


def _solve_triangular(columns, target):
    leads = {}
    for idx, col in enumerate(columns):
        if not col:
            continue
        w = leading_word(col)
        if w in leads:
            return None  # collision: fall back to elimination
        leads[w] = idx
    sol = [ZERO] * len(columns)
    residual = dict(target)
    while residual:
        w = leading_word(residual)
        idx = leads.get(w)
        if idx is None:
            raise ArithmeticError(
                "inconsistent transition system: stray word survives"
            )
        col = columns[idx]
        lam = residual[w] / col[w]
        sol[idx] = lam
        for cw, cc in col.items():
            v = residual.get(cw, ZERO) - lam * cc
            if v.is_zero():
                residual.pop(cw, None)
            else:
                residual[cw] = v
    return sol


def _solve_dense(columns, target, ctx=""):
    words = set(target)
    for col in columns:
        words.update(col)
    words = sorted(words, key=_wkey)
    ncols = len(columns)
    rows = [
        [col.get(w, ZERO) for col in columns] + [target.get(w, ZERO)]
        for w in words
    ]
    piv_cols = []
    rix = 0
    for c in range(ncols):
        pivot = None
        for r in range(rix, len(rows)):
            if not rows[r][c].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rix], rows[pivot] = rows[pivot], rows[rix]
        pr = rows[rix]
        inv = pr[c].inverse()
        rows[rix] = pr = [v * inv for v in pr]
        for r in range(len(rows)):
            if r != rix and not rows[r][c].is_zero():
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        piv_cols.append(c)
        rix += 1
    sol = [ZERO] * ncols
    for r, c in enumerate(piv_cols):
        sol[c] = rows[r][ncols]
    for r in range(rix, len(rows)):
        if not rows[r][ncols].is_zero():
            raise ArithmeticError(
                f"inconsistent transition system ({ctx}): basis defect"
            )
    # uniqueness: all columns must be pivotal (linear independence of the basis)
    if len(piv_cols) != ncols:
        free = set(range(ncols)) - set(piv_cols)
        raise ArithmeticError(
            f"underdetermined transition system ({ctx}): columns {free}"
        )
    return sol


# ---------------------------------------------------------------------------
# higher-order relation suite (rank 3)
# ---------------------------------------------------------------------------


def _serre_sq(x, y):
    """x^2 y - (q + 1/q) x y x + y x^2."""
    coef = qp(1) + qp(-1)
    return el_add(
        el_sub(_chain_mul((x, x, y)), el_scale(coef, _chain_mul((x, y, x)))),
        _chain_mul((y, x, x)),
    )


def _serre_cub(x, y):
    """x^3 y - (q+1+1/q)(x^2 y x - x y x^2) - y x^3."""
    coef = qp(1) + ONE + qp(-1)
    out = _chain_mul((x, x, x, y))
    out = el_sub(out, el_scale(coef, _chain_mul((x, x, y, x))))
    out = el_add(out, el_scale(coef, _chain_mul((x, y, x, x))))
    return el_sub(out, _chain_mul((y, x, x, x)))


def _serre_aniso(x, y, sgn):
    """x^3 y + sgn (1-q-1/q)(x^2 y x) + (1-q-1/q) x y x^2 + sgn y x^3."""
    coef = ONE - qp(1) - qp(-1)
    sg = QCoeff.from_int(sgn)
    out = _chain_mul((x, x, x, y))
    out = el_add(out, el_scale(sg * coef, _chain_mul((x, x, y, x))))
    out = el_add(out, el_scale(coef, _chain_mul((x, y, x, x))))
    return el_add(out, el_scale(sg, _chain_mul((y, x, x, x))))


def _sq(x):
    return el_mul(x, x)


def higher_order_relations(key):
    """Named relation elements that must straighten to zero for the diagram.

    Returns a list of (name, element); conditions on root types are already
    applied, so every returned element is claimed to lie in the ideal.
    """
    cd = DIAGRAMS[key]
    if cd.rank != 3:
        raise ValueError("relation suite is defined for rank-3 diagrams")
    rb = RootBuilder(cd)
    e1, e2, e3 = rb.gen(1), rb.gen(2), rb.gen(3)
    qc = rb.qc
    p1, p2, p3 = cd.parity
    s13 = QCoeff.from_int((-1) ** (p1 * p3))
    rt = cd.root_type
    even = lambda *c: rt(tuple(c)) == "even"
    iso = lambda *c: rt(tuple(c)) == "iso"
    aniso = lambda *c: rt(tuple(c)) == "aniso"

    e21, e23 = qc(e2, e1), qc(e2, e3)
    e12, e32 = qc(e1, e2), qc(e3, e2)
    out = []

    def eq(name, x, y, sign=None):
        rhs = y.element if hasattr(y, "element") else y
        lhs = x.element if hasattr(x, "element") else x
        if sign is not None:
            rhs = el_scale(sign, rhs)
        out.append((name, el_sub(lhs, rhs)))

    def com0(name, x, y):
        lhs = x.element if hasattr(x, "element") else x
        rhs = y.element if hasattr(y, "element") else y
        out.append((name, qcom(cd, lhs, rhs, q_on=False)))

    if cd.kind == "A":
        e123 = qc(qc(e1, e2), e3)
        e321 = qc(qc(e3, e2), e1)
        eq("swap_low", qc(e21, e3), qc(e23, e1), s13)
        com0("far_pair_low", e12.element, e32.element)
        com0("center_vs_triple_low", e2.element, e123.element)
        eq("swap_high", qc(e3, e12), qc(e1, e32), s13)
        com0("far_pair_high", e21.element, e23.element)
        com0("center_vs_triple_high", e2.element, e321.element)
        serre_pairs = [
            ("serre_1_23", e1, e23, even(1, 0, 0)),
            ("serre_23_1", e23, e1, even(0, 1, 1)),
            ("serre_3_21", e3, e21, even(0, 0, 1)),
            ("serre_21_3", e21, e3, even(1, 1, 0)),
            ("serre_1_32", e1, e32, even(1, 0, 0)),
            ("serre_32_1", e32, e1, even(0, 1, 1)),
            ("serre_3_12", e3, e12, even(0, 0, 1)),
            ("serre_12_3", e12, e3, even(1, 1, 0)),
        ]
        for name, x, y, cond in serre_pairs:
            if cond:
                out.append((name, _serre_sq(x.element, y.element)))
        for name, v, cond in [
            ("square_12", e12, iso(1, 1, 0)),
            ("square_23", e23, iso(0, 1, 1)),
            ("square_21", e21, iso(1, 1, 0)),
            ("square_32", e32, iso(0, 1, 1)),
        ]:
            if cond:
                out.append((name, _sq(v.element)))
        return out

    # type B
    e123 = qc(qc(e1, e2), e3)
    e321 = qc(qc(e3, e2), e1)
    e233 = qc(e23, e3)
    e332 = qc(e3, e32)
    e1233 = qc(e123, e3)
    e213_3 = qc(qc(e21, e3), e3)
    e3321 = qc(e332, e1)
    e3_3_21 = qc(e3, qc(e3, e21))
    e3_3_12 = qc(e3, qc(e3, e12))
    sgn5 = QCoeff.from_int((-1) ** ((p1 + p2 + p3) * p2))
    sgn6 = QCoeff.from_int((-1) ** (p1 * p3 + (p1 + p2) * (p2 + p3)))

    eq("swap_low", qc(e23, e1), qc(e21, e3), s13)
    eq("assoc_1233", e1233, qc(e1, e233))
    eq("slide_2331", qc(e233, e1), e213_3)
    eq("braid_12323", qc(qc(e1, e23), e23), qc(e2, e1233), sgn5)
    eq("braid_23_231", qc(e23, qc(e23, e1)), qc(e21, e233), sgn6)
    eq("slide_23321", qc(e233, e21), qc(e2, e3_3_21))
    com0("com_2_123", e2.element, e123.element)
    com0("com_21_23", e21.element, e23.element)
    com0("com_23_1233", e23.element, e1233.element)
    com0("com_231_233", qc(e23, e1).element, e233.element)
    com0("com_3_23321", e3.element, qc(e233, e21).element)

    eq("swap_high", qc(e1, e32), qc(e3, e12), s13)
    eq("assoc_3321", e3_3_21, e3321)
    eq("slide_13332", qc(e1, e332), e3_3_12)
    eq("braid_32321", qc(e32, qc(e32, e1)), qc(e3_3_21, e2), sgn5)
    eq("braid_13232", qc(qc(e1, e32), e32), qc(e332, e12), sgn6)
    eq("slide_12332", qc(e12, e332), qc(e1233, e2))
    com0("com_2_321", e2.element, e321.element)
    com0("com_12_32", e12.element, e32.element)
    com0("com_32_3321", e32.element, e3_3_21.element)
    com0("com_332_132", e332.element, qc(e1, e32).element)
    com0("com_3_12332", e3.element, qc(e12, e332).element)

    serre_sq_pairs = [
        ("serre_1_23", e1, e23, even(1, 0, 0)),
        ("serre_21_3", e21, e3, even(1, 1, 0)),
        ("serre_1_233", e1, e233, even(1, 0, 0)),
        ("serre_233_1", e233, e1, even(0, 1, 2)),
        ("serre_2_1233", e2, e1233, even(0, 1, 0)),
        ("serre_1233_2", e1233, e2, even(1, 1, 2)),
        ("serre_21_233", e21, e233, even(1, 1, 0)),
        ("serre_233_21", e233, e21, even(0, 1, 2)),
        ("serre_1_32", e1, e32, even(1, 0, 0)),
        ("serre_12_3", e12, e3, even(1, 1, 0)),
        ("serre_1_332", e1, e332, even(1, 0, 0)),
        ("serre_332_1", e332, e1, even(0, 1, 2)),
        ("serre_2_3321", e2, e3_3_21, even(0, 1, 0)),
        ("serre_3321_2", e3_3_21, e2, even(1, 1, 2)),
        ("serre_12_332", e12, e332, even(1, 1, 0)),
        ("serre_332_12", e332, e12, even(0, 1, 2)),
    ]
    for name, x, y, cond in serre_sq_pairs:
        if cond:
            out.append((name, _serre_sq(x.element, y.element)))
    for name, x, y, cond in [
        ("serre3_23_1", e23, e1, even(0, 1, 1)),
        ("serre3_3_21", e3, e21, even(0, 0, 1)),
        ("serre3_32_1", e32, e1, even(0, 1, 1)),
        ("serre3_3_12", e3, e12, even(0, 0, 1)),
    ]:
        if cond:
            out.append((name, _serre_cub(x.element, y.element)))
    for name, x, y, sg, cond in [
        ("aniso_23_1", e23, e1, (-1) ** p1, aniso(0, 1, 1)),
        ("aniso_3_21", e3, e21, (-1) ** (p1 + p2), aniso(0, 0, 1)),
        ("aniso_32_1", e32, e1, (-1) ** p1, aniso(0, 1, 1)),
        ("aniso_3_12", e3, e12, (-1) ** (p1 + p2), aniso(0, 0, 1)),
    ]:
        if cond:
            out.append((name, _serre_aniso(x.element, y.element, sg)))
    for name, v, cond in [
        ("square_21", e21, iso(1, 1, 0)),
        ("square_233", e233, iso(0, 1, 2)),
        ("square_1233", e1233, iso(1, 1, 2)),
        ("square_12", e12, iso(1, 1, 0)),
        ("square_332", e332, iso(0, 1, 2)),
        ("square_3321", e3_3_21, iso(1, 1, 2)),
    ]:
        if cond:
            out.append((name, _sq(v.element)))
    return out


def check_higher_order(key):
    """Reduce every applicable relation; returns the list of failures."""
    rs = rewrite_system(key)
    bad = []
    for name, element in higher_order_relations(key):
        if rs.reduce(element):
            bad.append(name)
    return bad


def linear_independent_monomials(key, which, mu):
    """Rank check: normal forms of all basis monomials in a weight class."""
    cd = DIAGRAMS[key]
    basis = rank2_bases(key)[which - 1]
    tuples_ = _basis_tuples(cd, basis, mu)
    cols = [_MONOS.get(key, which, t) for t in tuples_]
    words = sorted({w for col in cols for w in col}, key=_wkey)
    rows = [[col.get(w, ZERO) for col in cols] for w in words]
    rank = 0
    ncols = len(cols)
    used = [False] * len(rows)
    for c in range(ncols):
        piv = None
        for r in range(len(rows)):
            if not used[r] and not rows[r][c].is_zero():
                piv = r
                break
        if piv is None:
            return False
        used[piv] = True
        pr = rows[piv]
        inv = pr[c].inverse()
        pr = [v * inv for v in pr]
        rows[piv] = pr
        for r in range(len(rows)):
            if r != piv and not rows[r][c].is_zero():
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
    return rank == ncols
