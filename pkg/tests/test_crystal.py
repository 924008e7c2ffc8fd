import itertools

import pytest

from qtetra import equations
from qtetra.crystal import (
    CrystalDivergence,
    crystal_j_image,
    crystal_operator,
    crystal_r_image,
)
from qtetra.qcoeff import ONE
from qtetra.tensor import tuples_up_to, weight_values


def _value(fams, name, sub, sup):
    v = fams[name].element(sub, sup)
    if v.is_zero():
        return 0
    return 1 if v == ONE else -1


def test_crystal_l_proposition():
    fams = equations.families()
    for k, c in itertools.product(range(4), range(4)):
        for i, j, a, b in itertools.product((0, 1), repeat=4):
            got = _value(fams, "cL", (i, j, k), (a, b, c))
            want = 0
            if (i, j) == (a, b) and (i, j) in ((0, 0), (1, 1)) and k == c:
                want = 1
            elif (i, j, a, b) == (0, 1, 1, 0) and c == k + 1:
                want = 1
            elif (i, j, a, b) == (1, 0, 1, 0) and k == c == 0:
                want = 1
            elif (i, j, a, b) == (1, 0, 0, 1) and c == k - 1:
                want = 1
            assert got == want


def test_crystal_m_is_reversed_l():
    fams = equations.families()
    for sup in tuples_up_to(fams["cM"].signature, 2):
        for sub, v in fams["cM"].rows_for_sup(sup):
            assert v == fams["cL"].element(
                tuple(reversed(sub)), tuple(reversed(sup))
            )


def test_crystal_n_proposition():
    fams = equations.families()
    for j, b in itertools.product(range(4), range(4)):
        for i, k, a, c in itertools.product((0, 1), repeat=4):
            got = _value(fams, "cN", (i, j, k), (a, b, c))
            want = 0
            if (i, k) == (a, c) and (i, k) in ((0, 1), (1, 0)) and j == b:
                want = 1
            elif (i, k, a, c) == (0, 0, 1, 1) and b == j - 1:
                want = 1
            elif (i, k, a, c) == (0, 0, 0, 0) and j == b == 0:
                want = 1
            elif (i, k, a, c) == (1, 1, 0, 0) and b == j + 1:
                want = 1
            assert got == want


def _theta(cond):
    return 1 if cond else 0


def test_crystal_x_proposition():
    fams = equations.families()
    for a, c in itertools.product(range(4), range(4)):
        for j, l, b, d in itertools.product((0, 1), repeat=4):
            # proposition lists images keyed by the fermionic labels
            table = {
                (0, 0, 0, 0): (0, 0, _theta(a >= 1 or a == c == 0)),
                (0, 1, 0, 0): (1, -1, _theta(a == 0)),
                (0, 1, 1, 0): (2, 0, 1),
                (0, 0, 0, 1): (-1, 1, _theta(a == 1)),
                (1, 0, 0, 1): (-2, 0, 1),
                (0, 1, 0, 1): (0, 0, _theta(a == 0)),
                (1, 1, 1, 1): (0, 0, 1),
            }
            entry = table.get((j, l, b, d))
            for i in range(6):
                for k in range(6):
                    got = _value(fams, "cX", (i, j, k, l), (a, b, c, d))
                    want = 0
                    if entry and (i, k) == (a + entry[0], c + entry[1]):
                        want = entry[2]
                    assert got == want, ((i, j, k, l), (a, b, c, d))


def test_crystal_y_signs():
    fams = equations.families()
    # (-1)^a entries of the proposition
    for a in range(4):
        for c in range(3):
            got = _value(fams, "cY", (a + 2, 0, c, 1), (a, 1, c, 0))
            assert got == (1 if a % 2 == 0 else -1)
            got = _value(fams, "cY", (a - 2, 1, c, 0), (a, 0, c, 1)) if a >= 2 else 0
            if a >= 2:
                assert got == (1 if a % 2 == 0 else -1)


def test_sign_free_families():
    fams = equations.families()
    for name in ("cL", "cM", "cN", "cR", "cJ", "cX"):
        fam = fams[name]
        bound = 2 if len(fam.signature) == 4 else 3
        for sup in tuples_up_to(fam.signature, bound):
            for _, v in fam.rows_for_sup(sup):
                assert v == ONE, name


def test_closed_forms_match_limits():
    fams = equations.families()
    for t in tuples_up_to(fams["cR"].signature, 3):
        hits = fams["cR"].cols_for_sub(t)
        assert hits == [(crystal_r_image(*t), ONE)]
    for t in tuples_up_to(fams["cJ"].signature, 1):
        hits = fams["cJ"].cols_for_sub(t)
        assert hits == [(crystal_j_image(*t), ONE)]


def test_bijectivity_per_class():
    fams = equations.families()
    for name in ("cL", "cN", "cX", "cY"):
        fam = fams[name]
        targets = sorted(
            {
                weight_values(fam.weight_forms, t)
                for t in tuples_up_to(fam.signature, 2)
            }
        )
        for tgt in targets:
            cmap = crystal_operator(name, tgt, fams)
            assert cmap.is_class_bijection(tgt), (name, tgt)


def test_crystal_z_spots():
    fams = equations.families()
    assert fams["cZ"].cols_for_sub((0, 1, 1, 2)) == [((1, 1, 0, 3), ONE)]
    assert fams["cZ"].cols_for_sub((2, 0, 1, 0)) == [((2, 0, 1, 0), -ONE)]


def test_divergence_is_loud():
    # N without its prefactor diverges; the error carries the indices
    from qtetra.crystal import CrystalFamily
    from qtetra.ops3d import family

    bare = CrystalFamily(family("N"), name="cN_bare")
    with pytest.raises(CrystalDivergence):
        for sup in tuples_up_to(bare.signature, 3):
            bare.rows_for_sup(sup)


def test_combinatorial_equations_small():
    for name, bound in (
        ("CRYS_TE_BS06", 2),
        ("CRYS_TE_C5", 2),
        ("CRYS_RE_B2", 1),
    ):
        rep = equations.verify(name, bound)
        assert rep.passed, (name, rep.mismatches[:2])


def test_conjecture_status():
    rep = equations.verify("CRYS_RE_CONJ1", 0)
    assert rep.outcome() == "conjecture-consistent"
