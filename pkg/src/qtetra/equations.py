"""Registry of equation networks and the verification drivers.

The two template networks (six outer slots with four factors, nine outer
slots with seven factors) carry the generic wire structure shared by every
instance; a registry entry supplies the operator assignment, the sign data
(rho, eta), and the fermionic slot set.  Matrix-form equations with no
nonlocal signs are generated mechanically from their factor chains.

Verification contracts both sides row by row (all external inputs for a
fixed external output) and compares exactly; a report lists every mismatch.
"""

from __future__ import annotations

import json
from multiprocessing import Pool

from . import crystal, ops3d, zrec
from .tensor import (
    BOSON,
    FERMION,
    EquationSpec,
    FactorTerm,
    VerificationReport,
    WeightedFamily,
    is_involution,
    matrix_chain_spec,
    tuples_up_to,
    verify_equation,
)


def te_spec(name, lhs_ops, rhs_ops, rho=(0, 0, 0), fermionic=(), status="theorem"):
    """Six-slot network: four factors per side plus rho sign monomials."""
    slots = tuple(FERMION if k + 1 in fermionic else BOSON for k in range(6))
    lhs = [
        FactorTerm(lhs_ops[0], ("x1", "x2", "x3"), ("o1", "o2", "o3")),
        FactorTerm(lhs_ops[1], ("i1", "x4", "x5"), ("x1", "o4", "o5")),
        FactorTerm(lhs_ops[2], ("i2", "i4", "x6"), ("x2", "x4", "o6")),
        FactorTerm(lhs_ops[3], ("i3", "i5", "i6"), ("x3", "x5", "x6")),
    ]
    rhs = [
        FactorTerm(rhs_ops[0], ("x3", "x5", "x6"), ("o3", "o5", "o6")),
        FactorTerm(rhs_ops[1], ("x2", "x4", "i6"), ("o2", "o4", "x6")),
        FactorTerm(rhs_ops[2], ("x1", "i4", "i5"), ("o1", "x4", "x5")),
        FactorTerm(rhs_ops[3], ("i1", "i2", "i3"), ("x1", "x2", "x3")),
    ]
    r1, r2, r3 = rho
    lhs_signs, rhs_signs = [], []
    if r1:
        lhs_signs += [("i1", "o6"), ("x4",)]
        rhs_signs += [("o1", "i6"), ("x4",)]
    if r2:
        lhs_signs += [("x2", "x5")]
        rhs_signs += [("x2", "x5")]
    if r3:
        lhs_signs += [("i3", "i4")]
        rhs_signs += [("o3", "o4")]
    return EquationSpec(name, slots, lhs, rhs, lhs_signs, rhs_signs, status)


def tre_spec(
    name, lhs_ops, rhs_ops, rho=(0, 0, 0), eta=(0, 0, 0), fermionic=(), status="theorem"
):
    """Nine-slot boundary network: seven factors per side, rho/eta signs."""
    slots = tuple(FERMION if k + 1 in fermionic else BOSON for k in range(9))
    lhs = [
        FactorTerm(lhs_ops[0], ("y4", "y5", "y6"), ("o4", "o5", "o6")),
        FactorTerm(lhs_ops[1], ("x4", "y8", "y9"), ("y4", "o8", "o9")),
        FactorTerm(lhs_ops[2], ("x3", "x5", "x7", "x9"), ("o3", "y5", "o7", "y9")),
        FactorTerm(lhs_ops[3], ("y2", "x6", "i9"), ("o2", "y6", "x9")),
        FactorTerm(lhs_ops[4], ("x2", "i5", "x8"), ("y2", "x5", "y8")),
        FactorTerm(lhs_ops[5], ("x1", "i6", "i7", "i8"), ("o1", "x6", "x7", "x8")),
        FactorTerm(lhs_ops[6], ("i1", "i2", "i3", "i4"), ("x1", "x2", "x3", "x4")),
    ]
    rhs = [
        FactorTerm(rhs_ops[0], ("x1", "y2", "x3", "y4"), ("o1", "o2", "o3", "o4")),
        FactorTerm(rhs_ops[1], ("i1", "y6", "x7", "y8"), ("x1", "o6", "o7", "o8")),
        FactorTerm(rhs_ops[2], ("x2", "y5", "x8"), ("y2", "o5", "y8")),
        FactorTerm(rhs_ops[3], ("i2", "x6", "y9"), ("x2", "y6", "o9")),
        FactorTerm(rhs_ops[4], ("i3", "x5", "i7", "x9"), ("x3", "y5", "x7", "y9")),
        FactorTerm(rhs_ops[5], ("x4", "i8", "i9"), ("y4", "x8", "x9")),
        FactorTerm(rhs_ops[6], ("i4", "i5", "i6"), ("x4", "x5", "x6")),
    ]
    r1, r2, r3 = rho
    e1, e2, e3 = eta
    lhs_signs, rhs_signs = [], []
    if r1:
        lhs_signs += [("o1", "i9"), ("x5",), ("x7",)]
        rhs_signs += [("i1", "o9"), ("x7",), ("y5",)]
    if r2:
        lhs_signs += [("x3", "y8"), ("x5",)]
        rhs_signs += [("x3", "x8"), ("y5",)]
    if r3:
        lhs_signs += [("y4", "o7"), ("y5",)]
        rhs_signs += [("x4", "i7"), ("x5",)]
    if e1:
        lhs_signs += [("x1", "i5")]
        rhs_signs += [("x1", "o5")]
    if e2:
        lhs_signs += [("o3", "y6")]
        rhs_signs += [("i3", "x6")]
    if e3:
        lhs_signs += [("y2", "x7")]
        rhs_signs += [("x2", "x7")]
    return EquationSpec(name, slots, lhs, rhs, lhs_signs, rhs_signs, status)


def _llmm_spec():
    slots = (BOSON, FERMION, FERMION, FERMION, FERMION, BOSON)
    lhs = [("Ltilde", (1, 3, 5)), ("Ltilde", (1, 2, 4)), ("L", (4, 5, 6)), ("L", (2, 3, 6))]
    rhs = list(reversed(lhs))
    return matrix_chain_spec("TE_LLMM", slots, lhs, rhs)


def _ko12_spec():
    slots = (BOSON,) * 9
    lhs = [
        ("R", (4, 5, 6)),
        ("R", (4, 8, 9)),
        ("K", (3, 5, 7, 9)),
        ("R", (2, 6, 9)),
        ("R", (2, 5, 8)),
        ("K", (1, 6, 7, 8)),
        ("K", (1, 2, 3, 4)),
    ]
    rhs = list(reversed(lhs))
    return matrix_chain_spec("RE_KO12", slots, lhs, rhs)


def _ko13_matrix_spec():
    """Matrix-form KO13 network; cross-checks the template encoding."""
    slots = (BOSON,) * 9
    lhs = [
        ("R", (4, 5, 6)),
        ("R", (4, 8, 9)),
        ("J", (3, 5, 7, 9)),
        ("R", (2, 6, 9)),
        ("R", (2, 5, 8)),
        ("J", (1, 6, 7, 8)),
        ("J", (1, 2, 3, 4)),
    ]
    rhs = list(reversed(lhs))
    return matrix_chain_spec("RE_KO13_matrix", slots, lhs, rhs)


def build_registry():
    reg = {}

    def add(spec):
        reg[spec.name] = spec

    add(te_spec("TE_KV94", ("R",) * 4, ("R",) * 4))
    add(
        te_spec(
            "TE_BS06",
            ("L", "L", "L", "R"),
            ("R", "L", "L", "L"),
            fermionic={1, 2, 4},
        )
    )
    add(_llmm_spec())
    add(
        te_spec(
            "TE_C3",
            ("Ninv", "Ninv", "R", "L"),
            ("L", "R", "Ninv", "Ninv"),
            fermionic={1, 3, 5},
        )
    )
    add(
        te_spec(
            "TE_C4",
            ("Minv", "Minv", "L", "L"),
            ("L", "L", "Minv", "Minv"),
            rho=(0, 1, 1),
            fermionic={2, 3, 4, 5},
        )
    )
    add(
        te_spec(
            "TE_C5",
            ("L", "N", "N", "M"),
            ("M", "N", "N", "L"),
            rho=(1, 1, 0),
            fermionic={1, 2, 5, 6},
        )
    )
    add(
        te_spec(
            "TE_C6",
            ("N", "L", "Minv", "Ninv"),
            ("Ninv", "Minv", "L", "N"),
            rho=(1, 0, 1),
            fermionic={1, 3, 4, 6},
        )
    )
    add(
        tre_spec(
            "RE_KO13",
            ("R", "R", "J", "R", "R", "J", "J"),
            ("J", "J", "R", "R", "J", "R", "R"),
        )
    )
    add(_ko12_spec())
    add(_ko13_matrix_spec())
    add(
        tre_spec(
            "RE_B2",
            ("M", "M", "X", "M", "M", "X", "J"),
            ("J", "X", "M", "M", "X", "M", "M"),
            fermionic={5, 6, 8, 9},
        )
    )
    add(
        tre_spec(
            "RE_B3",
            ("L", "Ninv", "Yinv", "Ninv", "L", "J", "X"),
            ("X", "J", "L", "Ninv", "Yinv", "Ninv", "L"),
            fermionic={2, 4, 5, 9},
        )
    )
    add(
        tre_spec(
            "RE_B4",
            ("R", "R", "Z", "R", "R", "Z", "Z"),
            ("Z", "Z", "R", "R", "Z", "R", "R"),
        )
    )
    add(
        tre_spec(
            "RE_B5",
            ("Ninv", "L", "J", "L", "Ninv", "Yinv", "Yinv"),
            ("Yinv", "Yinv", "Ninv", "L", "J", "L", "Ninv"),
            fermionic={2, 4, 6, 8},
        )
    )
    add(
        tre_spec(
            "RE_B6",
            ("Ninv", "L", "Z", "L", "Ninv", "Xinv", "Xinv"),
            ("Xinv", "Xinv", "Ninv", "L", "Z", "L", "Ninv"),
            rho=(0, 1, 1),
            eta=(0, 1, 1),
            fermionic={2, 4, 6, 8},
        )
    )
    add(
        tre_spec(
            "RE_B7",
            ("M", "M", "Y", "M", "M", "Y", "Z"),
            ("Z", "Y", "M", "M", "Y", "M", "M"),
            rho=(1, 1, 0),
            eta=(1, 1, 0),
            fermionic={5, 6, 8, 9},
        )
    )
    add(
        tre_spec(
            "RE_B8",
            ("L", "Ninv", "Xinv", "Ninv", "L", "Z", "Y"),
            ("Y", "Z", "L", "Ninv", "Xinv", "Ninv", "L"),
            rho=(1, 0, 1),
            eta=(1, 0, 1),
            fermionic={2, 4, 5, 9},
        )
    )
    # crystal (q -> 0) instances
    add(
        te_spec(
            "CRYS_TE_BS06",
            ("cL", "cL", "cL", "cR"),
            ("cR", "cL", "cL", "cL"),
            fermionic={1, 2, 4},
        )
    )
    add(
        te_spec(
            "CRYS_TE_C5",
            ("cL", "cN", "cN", "cM"),
            ("cM", "cN", "cN", "cL"),
            rho=(1, 1, 0),
            fermionic={1, 2, 5, 6},
        )
    )
    add(
        tre_spec(
            "CRYS_RE_B2",
            ("cM", "cM", "cX", "cM", "cM", "cX", "cJ"),
            ("cJ", "cX", "cM", "cM", "cX", "cM", "cM"),
            fermionic={5, 6, 8, 9},
        )
    )
    add(
        tre_spec(
            "CRYS_RE_CONJ1",
            ("cR", "cR", "cZ", "cR", "cR", "cZ", "cZ"),
            ("cZ", "cZ", "cR", "cR", "cZ", "cR", "cR"),
            status="conjecture",
        )
    )
    add(
        tre_spec(
            "CRYS_RE_CONJ2",
            ("cM", "cM", "cY", "cM", "cM", "cY", "cZ"),
            ("cZ", "cY", "cM", "cM", "cY", "cM", "cM"),
            rho=(1, 1, 0),
            eta=(1, 1, 0),
            fermionic={5, 6, 8, 9},
            status="conjecture",
        )
    )
    return reg


REGISTRY = build_registry()


class _NegatedFamily(WeightedFamily):
    """Mutation control: one factor with a globally flipped sign."""

    def __init__(self, base):
        super().__init__()
        self._base = base
        self.signature = base.signature
        self.weight_forms = base.weight_forms
        self.name = f"neg({base.name})"

    def _element(self, sub, sup):
        return -self._base.element(sub, sup)


def operator_families():
    fams = {}
    for name in ("R", "L", "M", "N", "Ltilde", "J", "K", "X", "Y"):
        fams[name] = ops3d.family(name)
    for name in ("Minv", "Ninv", "Xinv", "Yinv"):
        fams[name] = ops3d.family(name)
    fams["Z"] = zrec.ZFamily()
    fams["Xoracle"] = zrec.XOracleFamily()
    fams.update(crystal.crystal_families())
    return fams


_FAMS = None


def families():
    global _FAMS
    if _FAMS is None:
        _FAMS = operator_families()
        for spec in REGISTRY.values():
            spec.validate(_FAMS)
    return _FAMS


def mutated_spec(name, kind="sign"):
    """Deliberately corrupted copy of a registry entry (mutation control)."""
    spec = REGISTRY[name]
    if kind == "sign":
        return EquationSpec(
            spec.name + "_mut",
            spec.slots,
            spec.lhs,
            spec.rhs,
            spec.lhs_signs + [("o1", "i1")],
            spec.rhs_signs,
            spec.status,
        )
    if kind == "coeff":
        fams = dict(families())
        op = spec.lhs[0].op
        fams[op + "_neg"] = _NegatedFamily(fams[op])
        lhs = [
            FactorTerm(op + "_neg", spec.lhs[0].sub, spec.lhs[0].sup)
        ] + spec.lhs[1:]
        mspec = EquationSpec(
            spec.name + "_mut",
            spec.slots,
            lhs,
            spec.rhs,
            spec.lhs_signs,
            spec.rhs_signs,
            spec.status,
        )
        return mspec, fams
    raise ValueError(f"unknown mutation kind {kind!r}")


# ---------------------------------------------------------------------------
# drivers
# ---------------------------------------------------------------------------


def _verify_chunk(args):
    name, bound, outs, fail_fast = args
    spec = REGISTRY[name]
    rep = verify_equation(spec, bound, families(), fail_fast=fail_fast, outs=outs)
    return rep.externals, rep.mismatches


def verify(name, bound, jobs=1, fail_fast=False):
    """Contract-and-compare an equation over all external outputs <= bound."""
    spec = REGISTRY[name]
    outs = tuples_up_to(spec.slots, bound)
    if jobs <= 1 or len(outs) < 4 * jobs:
        return verify_equation(spec, bound, families(), fail_fast=fail_fast)
    chunks = [outs[k::jobs] for k in range(jobs)]
    report = VerificationReport(spec.name, bound, status=spec.status)
    with Pool(jobs) as pool:
        for externals, mism in pool.imap(
            _verify_chunk, [(name, bound, ch, fail_fast) for ch in chunks]
        ):
            report.externals += externals
            report.mismatches.extend(mism)
    report.mismatches.sort()
    return report


def verify_mutated(name, bound, kind="sign"):
    if kind == "coeff":
        spec, fams = mutated_spec(name, kind)
        return verify_equation(spec, bound, fams, fail_fast=True)
    spec = mutated_spec(name, kind)
    return verify_equation(spec, bound, families(), fail_fast=True)


RELATIONS = (
    "RL_similar",
    "L_vs_N",
    "M_from_L",
    "K_from_J_q2",
    "Ltilde_from_L",
    "X_to_Y",
    "X_vs_oracle",
)


def verify_relation(name, bound=4):
    """Element-by-element cross-operator identities on a finite block."""
    fams = families()
    rep = VerificationReport(name, bound)

    def check(sub, sup, lhs, rhs):
        rep.externals += 1
        if lhs != rhs:
            rep.mismatches.append((tuple(sup), tuple(sub), str(lhs), str(rhs)))

    rng = range(bound + 1)
    if name == "RL_similar":
        pats = [((0, 0), (0, 0)), ((0, 1), (0, 1)), ((1, 0), (1, 0)),
                ((1, 0), (0, 1)), ((0, 1), (1, 0))]
        for (i, j), (a, b) in pats:
            for k in rng:
                for c in rng:
                    check((i, j, k), (a, b, c),
                          fams["R"].element((i, j, k), (a, b, c)),
                          fams["L"].element((i, j, k), (a, b, c)))
    elif name == "L_vs_N":
        from .qcomb import bracket_fact

        for i in (0, 1):
            for k in (0, 1):
                for a in (0, 1):
                    for c in (0, 1):
                        for j in rng:
                            for b in rng:
                                lhs = fams["N"].element((i, j, k), (a, b, c))
                                rhs = (
                                    bracket_fact(j, 2, 1)
                                    / bracket_fact(b, 2, 1)
                                    * fams["L"].element((1 - a, c, b), (1 - i, k, j))
                                )
                                check((i, j, k), (a, b, c), lhs, rhs)
    elif name == "M_from_L":
        for sup in tuples_up_to(fams["M"].signature, bound):
            for sub, c in fams["M"].rows_for_sup(sup):
                check(sub, sup, c, fams["L"].element(
                    tuple(reversed(sub)), tuple(reversed(sup))))
    elif name == "K_from_J_q2":
        # all pairs in the index box with matching weights
        from .tensor import weight_values

        K = fams["K"]
        box = tuples_up_to(K.signature, bound)
        by_w = {}
        for t in box:
            by_w.setdefault(weight_values(K.weight_forms, t), []).append(t)
        for sup in box:
            for sub in by_w.get(weight_values(K.weight_forms, sup), ()):
                check(sub, sup, K.element(sub, sup), fams["J"].element(
                    tuple(reversed(sub)), tuple(reversed(sup))).subst_s_power(2))
    elif name == "Ltilde_from_L":
        from .qcoeff import GI

        for sup in tuples_up_to(fams["Ltilde"].signature, bound):
            a, b, c = sup
            for sub, v in fams["Ltilde"].rows_for_sup(sup):
                i, j, k = sub
                w = fams["L"].element((j, k, i), (b, c, a)).subst_s_unit(GI)
                check(sub, sup, v, w)
                if not v.imag_part_is_zero():
                    rep.mismatches.append((sup, sub, str(v), "imag!=0"))
    elif name == "X_to_Y":
        for sup in tuples_up_to(fams["Y"].signature, bound):
            for sub, v in fams["Y"].rows_for_sup(sup):
                check(sub, sup, v, ops3d.xy_transfer(fams["X"], sub, sup))
    elif name == "X_vs_oracle":
        for sup in tuples_up_to(fams["X"].signature, bound):
            if sum(sup) > 6:
                continue
            from .tensor import enumerate_weighted, weight_values

            targets = weight_values(fams["X"].weight_forms, sup)
            for sub in enumerate_weighted(
                fams["X"].signature, fams["X"].weight_forms, targets
            ):
                check(sub, sup, fams["X"].element(sub, sup),
                      fams["Xoracle"].element(sub, sup))
    else:
        raise KeyError(f"unknown relation {name!r}")
    return rep


INVOLUTIVE = ("L", "N", "X", "Y")


def verify_involutions(bound=3, names=INVOLUTIVE):
    """Each family composed with itself is the identity on every weight
    class that meets the box of entries <= bound."""
    fams = families()
    rep = VerificationReport("involutions", bound)
    from .tensor import weight_values

    for fname in names:
        fam = fams[fname]
        targets = sorted(
            {
                weight_values(fam.weight_forms, t)
                for t in tuples_up_to(fam.signature, bound)
            }
        )
        for t in targets:
            rep.externals += 1
            if not is_involution(fam, t):
                rep.mismatches.append((t, (), fname, "not involutive"))
    return rep


def report_to_json(report, path):
    with open(path, "w") as fh:
        json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
