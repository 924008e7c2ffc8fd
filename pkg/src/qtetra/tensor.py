"""Mixed bosonic/fermionic index spaces, sparse operators, signed networks.

Bosonic slots range over nonnegative integers, fermionic slots over {0,1}.
Every operator declares linear weight forms w with w(out) = w(in) on all
nonzero elements; these forms are what makes every internal sum in an
equation network finite, so contraction is exact with no cutoff error.

Equations are verified in component form: one scalar identity per external
(out, in) pair.  The sign-variant equations carry (-1) powers in products of
wire variables, which is why a side is a list of factors with explicit wire
labels rather than a matrix product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .qcoeff import QCoeff, ZERO

BOSON = "b"
FERMION = "f"


def enumerate_weighted(signature, forms, targets):
    """All index tuples of the given kinds with form.x = target for each form.

    Every bosonic slot must carry a positive coefficient in at least one
    form; otherwise the solution set is infinite and we refuse.
    """
    n = len(signature)
    for p in range(n):
        if signature[p] == BOSON and not any(f[p] > 0 for f in forms):
            raise ValueError(f"bosonic slot {p + 1} unbounded by weight forms")
    out = []
    idx = [0] * n

    def rec(p, rem):
        if p == n:
            if all(r == 0 for r in rem):
                out.append(tuple(idx))
            return
        hi = 1 if signature[p] == FERMION else None
        for f, r in zip(forms, rem):
            if f[p] > 0:
                b = r // f[p]
                hi = b if hi is None else min(hi, b)
        if hi is None:
            hi = 0
        for v in range(hi + 1):
            idx[p] = v
            nxt = tuple(r - f[p] * v for f, r in zip(forms, rem))
            if all(r >= 0 for r in nxt):
                rec(p + 1, nxt)

    rec(0, tuple(targets))
    return out


def tuples_up_to(signature, bound):
    """All index tuples with bosonic entries <= bound (fermionic full)."""
    ranges = [range(2) if k == FERMION else range(bound + 1) for k in signature]
    out = [()]
    for r in ranges:
        out = [t + (v,) for t in out for v in r]
    return out


def weight_values(forms, idx):
    return tuple(sum(f[p] * idx[p] for p in range(len(idx))) for f in forms)


class WeightedFamily:
    """Lazy operator family: elements on demand, rows/cols via weight forms."""

    signature: tuple = ()
    weight_forms: tuple = ()
    name = "?"

    def __init__(self):
        self._elements = {}
        self._rows = {}
        self._cols = {}

    def _element(self, sub, sup):  # pragma: no cover - abstract
        raise NotImplementedError

    def element(self, sub, sup):
        self._check(sub)
        self._check(sup)
        key = (sub, sup)
        v = self._elements.get(key)
        if v is None:
            if weight_values(self.weight_forms, sub) != weight_values(
                self.weight_forms, sup
            ):
                v = ZERO
            else:
                v = self._element(sub, sup)
            self._elements[key] = v
        return v

    def rows_for_sup(self, sup):
        """Nonzero (sub, coeff) pairs with the given output tuple."""
        rows = self._rows.get(sup)
        if rows is None:
            targets = weight_values(self.weight_forms, sup)
            rows = []
            for sub in enumerate_weighted(self.signature, self.weight_forms, targets):
                c = self.element(sub, sup)
                if not _is_zero(c):
                    rows.append((sub, c))
            self._rows[sup] = rows
        return rows

    def cols_for_sub(self, sub):
        """Nonzero (sup, coeff) pairs with the given input tuple."""
        cols = self._cols.get(sub)
        if cols is None:
            targets = weight_values(self.weight_forms, sub)
            cols = []
            for sup in enumerate_weighted(self.signature, self.weight_forms, targets):
                c = self.element(sub, sup)
                if not _is_zero(c):
                    cols.append((sup, c))
            self._cols[sub] = cols
        return cols

    def _check(self, idx):
        if len(idx) != len(self.signature):
            raise ValueError(f"{self.name}: arity mismatch for index {idx}")
        for v, k in zip(idx, self.signature):
            if v < 0 or (k == FERMION and v > 1):
                raise ValueError(f"{self.name}: index {idx} violates slot kinds")

    def block(self, targets):
        """Materialize the finite weight class with the given form values."""
        elements = {}
        for sup in enumerate_weighted(self.signature, self.weight_forms, targets):
            for sub, c in self.rows_for_sup(sup):
                elements[(sup, sub)] = c
        return SparseOp(self.signature, self.weight_forms, elements, self.name)


def _is_zero(c):
    return c.is_zero() if isinstance(c, QCoeff) else c == 0


@dataclass
class SparseOp:
    """Materialized sparse operator; keys are (out, in) index pairs."""

    signature: tuple
    weight_forms: tuple
    elements: dict
    name: str = "?"

    def element(self, sub, sup):
        return self.elements.get((sup, sub), ZERO)

    def check_weights(self):
        for (sup, sub) in self.elements:
            if weight_values(self.weight_forms, sup) != weight_values(
                self.weight_forms, sub
            ):
                return False
        return True

    def dump(self, fh):
        header = {
            "family": self.name,
            "signature": list(self.signature),
            "weights": [list(w) for w in self.weight_forms],
        }
        fh.write(json.dumps(header) + "\n")
        for (sup, sub) in sorted(self.elements):
            rec = {
                "out": list(sup),
                "in": list(sub),
                "coeff": _coeff_str(self.elements[(sup, sub)]),
            }
            fh.write(json.dumps(rec) + "\n")

    @staticmethod
    def parse(fh):
        header = json.loads(fh.readline())
        elements = {}
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            elements[(tuple(rec["out"]), tuple(rec["in"]))] = QCoeff.parse(
                rec["coeff"]
            )
        return SparseOp(
            tuple(header["signature"]),
            tuple(tuple(w) for w in header["weights"]),
            elements,
            header.get("family", "?"),
        )

    def __eq__(self, other):
        if not isinstance(other, SparseOp):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.weight_forms == other.weight_forms
            and self.elements == other.elements
        )


def compose(a, b, targets):
    """(a o b) restricted to the weight class: apply b first, then a."""
    if a.signature != b.signature:
        raise ValueError("signature mismatch in compose")
    elements = {}
    for sub in enumerate_weighted(a.signature, a.weight_forms, targets):
        acc = {}
        for mid, cb in b.cols_for_sub(sub):
            for sup, ca in a.cols_for_sub(mid):
                prev = acc.get(sup)
                acc[sup] = ca * cb if prev is None else prev + ca * cb
        for sup, c in acc.items():
            if not _is_zero(c):
                elements[(sup, sub)] = c
    return SparseOp(a.signature, a.weight_forms, elements, f"{a.name}o{b.name}")


def is_involution(fam, targets):
    """a o a = identity on the weight class with the given form values."""
    sq = compose(fam, fam, targets)
    members = enumerate_weighted(fam.signature, fam.weight_forms, targets)
    for sub in members:
        for sup in members:
            want = QCoeff.one() if sub == sup else ZERO
            if sq.element(sub, sup) != want:
                return False
    return True


# ---------------------------------------------------------------------------
# Equation networks
# ---------------------------------------------------------------------------


def _label_slot(label):
    """Slot number carried by a wire label ("x12" -> 12, "w3_4" -> 4)."""
    if "_" in label:
        return int(label.rsplit("_", 1)[1])
    return int(label[1:])


@dataclass(frozen=True)
class FactorTerm:
    op: str
    sub: tuple
    sup: tuple


@dataclass
class EquationSpec:
    """Two-sided signed tensor network in component form.

    Wire labels follow the source notation: o* external outputs, i* external
    inputs, x*/y* internal.  A label's slot number is its numeric suffix and
    fixes its kind.  Signs are lists of exponent monomials, each a product
    of one or two wire labels, contributing (-1)^(sum mod 2) per summand.
    """

    name: str
    slots: tuple
    lhs: list
    rhs: list
    lhs_signs: list = field(default_factory=list)
    rhs_signs: list = field(default_factory=list)
    status: str = "theorem"

    @property
    def n(self):
        return len(self.slots)

    def out_labels(self):
        return tuple(f"o{k}" for k in range(1, self.n + 1))

    def in_labels(self):
        return tuple(f"i{k}" for k in range(1, self.n + 1))

    def label_kind(self, label):
        return self.slots[_label_slot(label) - 1]

    def validate(self, families):
        """Structural check: sups computable in order, subs bind every label
        once, both sides expose the same externals, internal wires bounded."""
        for side in (self.lhs, self.rhs):
            bound = set(self.out_labels())
            for f in side:
                fam = families[f.op]
                if len(fam.signature) != len(f.sub):
                    raise ValueError(f"{self.name}: arity mismatch on {f.op}")
                for lab, kind in zip(f.sub + f.sup, fam.signature * 2):
                    if self.label_kind(lab) != kind:
                        raise ValueError(
                            f"{self.name}: slot kind clash at {lab} on {f.op}"
                        )
                for lab in f.sup:
                    if lab not in bound:
                        raise ValueError(
                            f"{self.name}: wire {lab} used before bound"
                        )
                for lab in f.sub:
                    bound.add(lab)
            missing = set(self.in_labels()) - bound
            if missing:
                raise ValueError(f"{self.name}: unbound externals {missing}")
        return True


def contract_side(factors, signs, families, out_tuple, ring_one=None):
    """Evaluate one side for a fixed external output tuple.

    Returns a dict mapping external input tuples to exact coefficients; the
    enumeration is driven entirely by the factors' weight forms, so the
    result is the complete, finite row of the side.
    """
    env = {}
    for k, v in enumerate(out_tuple):
        env[f"o{k + 1}"] = v
    n = len(out_tuple)
    in_labels = [f"i{k + 1}" for k in range(n)]
    acc = {}
    one = ring_one if ring_one is not None else QCoeff.one()

    def rec(t, coeff):
        if t == len(factors):
            par = 0
            for mono in signs:
                v = 1
                for lab in mono:
                    v *= env[lab]
                par += v
            if par % 2:
                coeff = -coeff
            key = tuple(env[l] for l in in_labels)
            prev = acc.get(key)
            acc[key] = coeff if prev is None else prev + coeff
            return
        f = factors[t]
        fam = families[f.op]
        sup = tuple(env[l] for l in f.sup)
        for sub, c in fam.rows_for_sup(sup):
            added = []
            ok = True
            for lab, v in zip(f.sub, sub):
                if lab in env:
                    if env[lab] != v:
                        ok = False
                        break
                else:
                    env[lab] = v
                    added.append(lab)
            if ok:
                rec(t + 1, coeff * c)
            for lab in added:
                del env[lab]

    rec(0, one)
    return {k: v for k, v in acc.items() if not _is_zero(v)}


def contract_pair(spec, families, out_tuple, in_tuple):
    """Both sides of one scalar identity: the (out, in) component values."""
    lhs = contract_side(spec.lhs, spec.lhs_signs, families, out_tuple)
    rhs = contract_side(spec.rhs, spec.rhs_signs, families, out_tuple)
    zero = QCoeff.zero()
    return lhs.get(in_tuple, zero), rhs.get(in_tuple, zero)


@dataclass
class VerificationReport:
    name: str
    bound: int
    externals: int = 0
    mismatches: list = field(default_factory=list)
    status: str = "theorem"

    @property
    def passed(self):
        return not self.mismatches

    def outcome(self):
        if self.status == "conjecture":
            return "conjecture-consistent" if self.passed else "conjecture-violated"
        return "pass" if self.passed else "fail"

    def to_dict(self):
        return {
            "name": self.name,
            "bound": self.bound,
            "externals_checked": self.externals,
            "outcome": self.outcome(),
            "mismatches": [
                {
                    "out": list(o),
                    "in": list(i),
                    "lhs": lhs,
                    "rhs": rhs,
                }
                for (o, i, lhs, rhs) in self.mismatches
            ],
        }


def verify_equation(spec, bound, families, fail_fast=False, outs=None, ring_one=None):
    """Contract both sides row by row and compare exactly."""
    report = VerificationReport(spec.name, bound, status=spec.status)
    if outs is None:
        outs = tuples_up_to(spec.slots, bound)
    for out in outs:
        lhs = contract_side(spec.lhs, spec.lhs_signs, families, out, ring_one)
        rhs = contract_side(spec.rhs, spec.rhs_signs, families, out, ring_one)
        keys = set(lhs) | set(rhs)
        report.externals += len(keys)
        for key in sorted(keys):
            lv = lhs.get(key)
            rv = rhs.get(key)
            if lv is None or rv is None or lv != rv:
                report.mismatches.append(
                    (out, key, _coeff_str(lv), _coeff_str(rv))
                )
                if fail_fast:
                    return report
    return report


def _coeff_str(c):
    if c is None:
        return "(0)"
    return c.canonical() if isinstance(c, QCoeff) else f"({c})"


def matrix_chain_spec(name, slots, lhs_chain, rhs_chain, status="theorem"):
    """Build an EquationSpec from matrix form: products of (op, slot...) acting
    as compositions, first factor outermost (closest to the output)."""

    def side(chain, tag):
        touched = {s for _, op_slots in chain for s in op_slots}
        if touched != set(range(1, len(slots) + 1)):
            raise ValueError(f"{name}: every slot must be touched on each side")
        factors = []
        cur = {s: f"o{s}" for s in range(1, len(slots) + 1)}
        wid = [0]

        def fresh(s):
            wid[0] += 1
            return f"{tag}{wid[0]}_{s}"

        for op, op_slots in chain:
            sup = tuple(cur[s] for s in op_slots)
            sub = []
            for s in op_slots:
                lab = fresh(s)
                sub.append(lab)
                cur[s] = lab
            factors.append(FactorTerm(op, tuple(sub), sup))
        # relabel dangling wires as the external inputs
        rename = {cur[s]: f"i{s}" for s in range(1, len(slots) + 1)}
        out = []
        for f in factors:
            out.append(
                FactorTerm(
                    f.op,
                    tuple(rename.get(l, l) for l in f.sub),
                    tuple(rename.get(l, l) for l in f.sup),
                )
            )
        return out

    spec = EquationSpec(
        name, tuple(slots), side(lhs_chain, "w"), side(rhs_chain, "v"), status=status
    )
    return spec
