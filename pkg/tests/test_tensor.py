import io
import itertools

import pytest

from qtetra.ops3d import family
from qtetra.qcoeff import ONE, QCoeff, ZERO
from qtetra.tensor import (
    BOSON,
    FERMION,
    SparseOp,
    compose,
    enumerate_weighted,
    is_involution,
    tuples_up_to,
    weight_values,
)


def brute_force(signature, forms, targets, cutoff):
    ranges = [range(2) if k == FERMION else range(cutoff + 1) for k in signature]
    out = []
    for tup in itertools.product(*ranges):
        if weight_values(forms, tup) == tuple(targets):
            out.append(tup)
    return out


def test_enumeration_matches_brute_force():
    cases = [
        ((BOSON, BOSON, BOSON), ((1, 1, 0), (0, 1, 1))),
        ((FERMION, FERMION, BOSON), ((1, 1, 0), (0, 1, 1))),
        ((BOSON, FERMION, BOSON, FERMION), ((1, 2, 1, 0), (0, 1, 1, 1))),
        ((BOSON, FERMION, FERMION), ((0, 1, 1), (1, 0, 1))),
    ]
    for sig, forms in cases:
        for t1 in range(4):
            for t2 in range(4):
                got = sorted(enumerate_weighted(sig, forms, (t1, t2)))
                want = sorted(brute_force(sig, forms, (t1, t2), 3 + t1 + t2))
                assert got == want, (sig, forms, t1, t2)


def test_unbounded_slot_rejected():
    with pytest.raises(ValueError):
        enumerate_weighted((BOSON, BOSON), ((1, 0),), (2,))


def test_element_lookup_and_kinds():
    L = family("L")
    assert L.element((0, 0, 2), (0, 0, 2)) == ONE
    # absent pair -> exact zero
    assert L.element((0, 0, 2), (1, 1, 2)).is_zero()
    # weight-violating pair -> forced zero
    assert L.element((1, 0, 0), (0, 0, 3)).is_zero()
    with pytest.raises(ValueError):
        L.element((2, 0, 0), (2, 0, 0))  # fermionic slot out of range
    with pytest.raises(ValueError):
        L.element((0, 0), (0, 0, 0))


def test_rows_visit_exact_support():
    # weight-driven enumeration reproduces brute force up to cutoff 3
    for name in ("L", "N", "R", "X"):
        fam = family(name)
        for sup in tuples_up_to(fam.signature, 2):
            rows = dict(fam.rows_for_sup(sup))
            for sub in tuples_up_to(fam.signature, 3):
                v = fam.element(sub, sup)
                if v.is_zero():
                    assert sub not in rows
                else:
                    assert rows[sub] == v


def test_weight_forms_hold_on_support():
    for name in ("R", "L", "M", "N", "Ltilde", "J", "K", "X", "Y"):
        fam = family(name)
        bound = 2 if len(fam.signature) == 4 else 3
        for sup in tuples_up_to(fam.signature, bound):
            if sum(sup) > 5:
                continue
            for sub, _ in fam.rows_for_sup(sup):
                assert weight_values(fam.weight_forms, sub) == weight_values(
                    fam.weight_forms, sup
                )


def test_compose_and_involution():
    L = family("L")
    assert is_involution(L, (1, 1))
    sq = compose(L, L, (1, 1))
    members = enumerate_weighted(L.signature, L.weight_forms, (1, 1))
    for m in members:
        assert sq.element(m, m) == ONE


def test_dump_round_trip():
    L = family("L")
    block = L.block((1, 2))
    buf = io.StringIO()
    block.dump(buf)
    buf.seek(0)
    back = SparseOp.parse(buf)
    assert back == block
    assert back.check_weights()
