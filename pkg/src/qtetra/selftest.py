"""Golden-element suite: every explicitly listed matrix element, rebuilt
from its displayed expression and compared by canonical string, with a
completeness sweep confirming no family has stray nonzero elements.
"""

from __future__ import annotations

from . import equations
from .qcoeff import ONE, QCoeff
from .zrec import z_gamma


def qp(n):
    return QCoeff.q_power(n)


def sp(n):
    return QCoeff.s_power(n)


def mqp(n):
    v = qp(n)
    return -v if n % 2 else v


def sgn(n):
    return ONE if n % 2 == 0 else -ONE


PQ = ONE + qp(1)
MQ = ONE - qp(1)


def _expected_l(bound):
    """Element list of the fermion-fermion-boson family."""
    out = {}
    for k in range(bound + 1):
        out[((0, 0, k), (0, 0, k))] = ONE
        out[((1, 1, k), (1, 1, k))] = ONE
        out[((0, 1, k), (0, 1, k))] = -qp(k + 1)
        out[((1, 0, k), (1, 0, k))] = qp(k)
        if k >= 1:
            out[((1, 0, k), (0, 1, k - 1))] = ONE - qp(2 * k)
        out[((0, 1, k), (1, 0, k + 1))] = ONE
    return out


def _expected_n(bound):
    out = {}
    for j in range(bound + 1):
        out[((0, j, 0), (0, j, 0))] = qp(j)
        out[((1, j, 1), (1, j, 1))] = -qp(j + 1)
        out[((0, j, 1), (0, j, 1))] = ONE
        out[((1, j, 0), (1, j, 0))] = ONE
        out[((1, j, 1), (0, j + 1, 0))] = qp(j) * (ONE - qp(2))
        if j >= 1:
            out[((0, j, 0), (1, j - 1, 1))] = (qp(j) - qp(-j)) / (qp(1) - qp(-1))
    return out


# (j, l, b, d) -> (i - a, k - c, value(a, c))
X_PATTERNS = {
    (0, 0, 0, 0): (0, 0, lambda a, c: ONE - (ONE - mqp(c)) * qp(a)),
    (1, 0, 0, 0): (-1, -1, lambda a, c: sgn(c) * sp(a + c - 1) * PQ),
    (0, 1, 0, 0): (1, -1, lambda a, c: sgn(c + 1) * sp(a + c - 1) * PQ * (ONE - qp(a + 1))),
    (1, 1, 0, 0): (0, -2, lambda a, c: qp(a + c - 1) * PQ * PQ),
    (0, 0, 1, 0): (1, 1, lambda a, c: sgn(c + 1) * sp(a - c + 1) * (ONE - qp(a + 1)) * (ONE - mqp(c + 1)) / PQ),
    (1, 0, 1, 0): (0, 0, lambda a, c: qp(a + 1)),
    (0, 1, 1, 0): (2, 0, lambda a, c: (ONE - qp(a + 1)) * (ONE - qp(a + 2))),
    (1, 1, 1, 0): (1, -1, lambda a, c: sgn(c) * sp(a + c + 1) * PQ * (ONE - qp(a + 1))),
    (0, 0, 0, 1): (-1, 1, lambda a, c: sgn(c) * sp(a - c - 1) * (ONE - mqp(c + 1)) / PQ),
    (1, 0, 0, 1): (-2, 0, lambda a, c: ONE),
    (0, 1, 0, 1): (0, 0, lambda a, c: qp(a)),
    (1, 1, 0, 1): (-1, -1, lambda a, c: sgn(c + 1) * sp(a + c - 1) * PQ),
    (0, 0, 1, 1): (0, 2, lambda a, c: qp(a - c) * (ONE - mqp(c + 1)) * (ONE - mqp(c + 2)) / (PQ * PQ)),
    (1, 0, 1, 1): (-1, 1, lambda a, c: sgn(c + 1) * sp(a - c + 1) * (ONE - mqp(c + 1)) / PQ),
    (0, 1, 1, 1): (1, 1, lambda a, c: sgn(c) * sp(a - c + 1) * (ONE - qp(a + 1)) * (ONE - mqp(c + 1)) / PQ),
    (1, 1, 1, 1): (0, 0, lambda a, c: ONE - (ONE - mqp(c + 1)) * qp(a + 1)),
}

Y_PATTERNS = {
    (0, 0, 0, 0): (0, 0, lambda a, c: ONE - (ONE - qp(c)) * mqp(a)),
    (1, 0, 0, 0): (-1, -1, lambda a, c: sp(a + c - 1) * PQ),
    (0, 1, 0, 0): (1, -1, lambda a, c: sgn(a) * sp(a + c - 1) * MQ * (ONE - mqp(a + 1))),
    (1, 1, 0, 0): (0, -2, lambda a, c: sgn(a) * qp(a + c - 1) * (ONE - qp(2))),
    (0, 0, 1, 0): (1, 1, lambda a, c: sgn(a + 1) * sp(a - c + 1) * (ONE - mqp(a + 1)) * (ONE - qp(c + 1)) / PQ),
    (1, 0, 1, 0): (0, 0, lambda a, c: mqp(a + 1)),
    (0, 1, 1, 0): (2, 0, lambda a, c: sgn(a) * MQ * (ONE - mqp(a + 1)) * (ONE - mqp(a + 2)) / PQ),
    (1, 1, 1, 0): (1, -1, lambda a, c: sgn(a) * sp(a + c + 1) * MQ * (ONE - mqp(a + 1))),
    (0, 0, 0, 1): (-1, 1, lambda a, c: sp(a - c - 1) * (ONE - qp(c + 1)) / MQ),
    (1, 0, 0, 1): (-2, 0, lambda a, c: sgn(a) * PQ / MQ),
    (0, 1, 0, 1): (0, 0, lambda a, c: mqp(a)),
    (1, 1, 0, 1): (-1, -1, lambda a, c: -(sp(a + c - 1) * PQ)),
    (0, 0, 1, 1): (0, 2, lambda a, c: sgn(a + 1) * qp(a - c) * (ONE - qp(c + 1)) * (ONE - qp(c + 2)) / (ONE - qp(2))),
    (1, 0, 1, 1): (-1, 1, lambda a, c: sp(a - c + 1) * (ONE - qp(c + 1)) / MQ),
    (0, 1, 1, 1): (1, 1, lambda a, c: sgn(a) * sp(a - c + 1) * (ONE - mqp(a + 1)) * (ONE - qp(c + 1)) / PQ),
    (1, 1, 1, 1): (0, 0, lambda a, c: ONE - (ONE - qp(c + 1)) * mqp(a + 1)),
}


def _expected_xy(patterns, bound):
    out = {}
    for a in range(bound + 1):
        for c in range(bound + 1):
            for (j, l, b, d), (di, dk, f) in patterns.items():
                i, k = a + di, c + dk
                if i < 0 or k < 0:
                    continue
                v = f(a, c)
                if not v.is_zero():
                    out[((i, j, k, l), (a, b, c, d))] = v
    return out


Z_GOLDEN = {
    # all nonzero elements for in-tuple (0,1,1,2)
    ((0, 1, 1, 2), (0, 0, 3, 1)): qp(4) * PQ * PQ * (ONE + qp(2)),
    ((0, 1, 1, 2), (0, 1, 1, 2)): -(qp(2) * (ONE - qp(4) - sp(14))),
    ((0, 1, 1, 2), (1, 0, 2, 2)): -(qp(3) * PQ * (ONE + qp(1) + qp(2) + qp(3) + qp(5))),
    ((0, 1, 1, 2), (1, 1, 0, 3)): ONE - qp(4) - sp(14),
    ((0, 1, 1, 2), (2, 0, 1, 3)): -(qp(5) * (ONE + qp(3)) / MQ),
    ((0, 1, 1, 2), (3, 0, 0, 4)): qp(2) * PQ / MQ,
    # all nonzero elements for in-tuple (2,0,1,0)
    ((2, 0, 1, 0), (2, 0, 1, 0)): -(ONE - qp(2) + qp(3)),
    ((2, 0, 1, 0), (1, 1, 0, 0)): qp(1) * MQ * MQ,
    ((2, 0, 1, 0), (3, 0, 0, 1)): qp(1),
}

Z_GOLDEN_STRINGS = {
    ((0, 1, 1, 2), (0, 0, 3, 1)): "(s^8 + 2*s^10 + 2*s^12 + 2*s^14 + s^16)",
    ((0, 1, 1, 2), (0, 1, 1, 2)): "(-s^4 + s^12 + s^18)",
    ((0, 1, 1, 2), (1, 0, 2, 2)): "(-s^6 - 2*s^8 - 2*s^10 - 2*s^12 - s^14 - s^16 - s^18)",
    ((0, 1, 1, 2), (1, 1, 0, 3)): "(1 - s^8 - s^14)",
    ((0, 1, 1, 2), (2, 0, 1, 3)): "(-s^10 - s^16)/(1 - s^2)",
    ((0, 1, 1, 2), (3, 0, 0, 4)): "(s^4 + s^6)/(1 - s^2)",
    ((2, 0, 1, 0), (2, 0, 1, 0)): "(-1 + s^4 - s^6)",
    ((2, 0, 1, 0), (1, 1, 0, 0)): "(s^2 - 2*s^4 + s^6)",
    ((2, 0, 1, 0), (3, 0, 0, 1)): "(s^2)",
}


def _check_family(fam, expected, sups, label, verbose, failures):
    got = {}
    for sup in sups:
        for sub, c in fam.rows_for_sup(sup):
            got[(sub, sup)] = c
    want = {k: v for k, v in expected.items() if k[1] in set(sups)}
    ok = True
    for key in set(got) | set(want):
        g, w = got.get(key), want.get(key)
        if g is None or w is None or g.canonical() != w.canonical():
            failures.append((label, key, g and g.canonical(), w and w.canonical()))
            ok = False
    if verbose:
        print(f"golden {label}: {'ok' if ok else 'FAIL'} ({len(want)} elements)")
    return ok


def run(bound=4, verbose=False):
    fams = equations.families()
    failures = []

    sups3 = [
        (a, b, c)
        for a in (0, 1)
        for b in (0, 1)
        for c in range(bound + 1)
    ]
    _check_family(fams["L"], _expected_l(bound + 2), sups3, "L", verbose, failures)

    # M is the index reversal of L
    expected_m = {
        (tuple(reversed(sub)), tuple(reversed(sup))): v
        for (sub, sup), v in _expected_l(bound + 2).items()
    }
    sups_m = [tuple(reversed(s)) for s in sups3]
    _check_family(fams["M"], expected_m, sups_m, "M", verbose, failures)

    sups_n = [
        (a, b, c)
        for a in (0, 1)
        for b in range(bound + 1)
        for c in (0, 1)
    ]
    _check_family(fams["N"], _expected_n(bound + 2), sups_n, "N", verbose, failures)

    sups4 = [
        (a, b, c, d)
        for a in range(bound + 1)
        for b in (0, 1)
        for c in range(bound + 1)
        for d in (0, 1)
    ]
    _check_family(
        fams["X"], _expected_xy(X_PATTERNS, bound), sups4, "X", verbose, failures
    )
    _check_family(
        fams["Y"], _expected_xy(Y_PATTERNS, bound), sups4, "Y", verbose, failures
    )

    # the five coincidences between R and L on fermionic-range indices
    rl_ok = True
    pats = [((0, 0), (0, 0)), ((0, 1), (0, 1)), ((1, 0), (1, 0)),
            ((1, 0), (0, 1)), ((0, 1), (1, 0))]
    for (i, j), (a, b) in pats:
        for k in range(bound + 1):
            for c in range(bound + 1):
                r = fams["R"].element((i, j, k), (a, b, c)).canonical()
                l = fams["L"].element((i, j, k), (a, b, c)).canonical()
                if r != l:
                    failures.append(("RL", ((i, j, k), (a, b, c)), r, l))
                    rl_ok = False
    if verbose:
        print(f"golden R~L coincidences: {'ok' if rl_ok else 'FAIL'}")

    z_ok = True
    for (sub, sup), v in Z_GOLDEN.items():
        got = z_gamma(sub, sup).canonical()
        want = v.canonical()
        frozen = Z_GOLDEN_STRINGS[(sub, sup)]
        if got != want or got != frozen:
            failures.append(("Z", (sub, sup), got, f"{want} / {frozen}"))
            z_ok = False
    for sub in ((0, 1, 1, 2), (2, 0, 1, 0)):
        found = {s for s, _ in fams["Z"].cols_for_sub(sub)}
        listed = {sup for (s, sup) in Z_GOLDEN if s == sub}
        if found != listed:
            failures.append(("Z-support", sub, sorted(found), sorted(listed)))
            z_ok = False
    if verbose:
        print(f"golden Z examples: {'ok' if z_ok else 'FAIL'} ({len(Z_GOLDEN)} values)")

    if failures and verbose:
        for f in failures[:20]:
            print("  FAIL:", f)
    return 1 if failures else 0
