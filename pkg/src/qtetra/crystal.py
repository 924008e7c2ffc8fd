"""q -> 0 limits of the operator families and their combinatorial checks.

Limits are taken symbolically by valuation comparison, never numerically,
because the surviving values carry signs that must be exact.  Each family
gets the normalization that makes its limit finite: no prefactor for L, M,
R, J, Z; the bracket-factorial ratios below for N, X, Y (they amount to
using unnormalized or partially unnormalized monomial bases).

A finite crystal family is a signed partial bijection: within any weight
class the unsigned map permutes the class.  Signs other than +1 appear only
for the Y and Z families.
"""

from __future__ import annotations

from . import ops3d, zrec
from .qcoeff import DIVERGENT, ONE, ZERO
from .qcomb import bracket_fact
from .tensor import WeightedFamily, enumerate_weighted


class CrystalDivergence(ArithmeticError):
    """A crystal limit blew up: the normalization does not fit the family."""


_MINUS_ONE = -ONE


class CrystalFamily(WeightedFamily):
    """Signed 0/±1 family obtained as the s -> 0 limit of a base family."""

    def __init__(self, base, prefactor=None, name=None):
        super().__init__()
        self._base = base
        self._prefactor = prefactor
        self.signature = base.signature
        self.weight_forms = base.weight_forms
        self.name = name or f"c{base.name}"

    def _element(self, sub, sup):
        v = self._base.element(sub, sup)
        if v.is_zero():
            return ZERO
        if self._prefactor is not None:
            v = self._prefactor(sub, sup) * v
        lim = v.crystal_limit()
        if lim is DIVERGENT:
            raise CrystalDivergence(
                f"{self.name}: divergent limit at in={sub} out={sup}"
            )
        re, im = lim
        if im != 0 or re.denominator != 1 or abs(re) > 1:
            raise CrystalDivergence(
                f"{self.name}: limit {lim} outside {{0,+1,-1}} at {sub}->{sup}"
            )
        n = int(re)
        return ZERO if n == 0 else (ONE if n == 1 else _MINUS_ONE)


def _pref_n(sub, sup):
    return bracket_fact(sup[1], 2, 1) / bracket_fact(sub[1], 2, 1)


def _pref_x(sub, sup):
    return bracket_fact(sup[2], -1, -1) / bracket_fact(sub[2], -1, -1)


def _pref_y(sub, sup):
    return bracket_fact(sup[2], -1, 1) / bracket_fact(sub[2], -1, 1)


def crystal_families():
    fams = {
        "cR": CrystalFamily(ops3d.family("R")),
        "cL": CrystalFamily(ops3d.family("L")),
        "cM": CrystalFamily(ops3d.family("M")),
        "cN": CrystalFamily(ops3d.family("N"), _pref_n),
        "cJ": CrystalFamily(ops3d.family("J")),
        "cX": CrystalFamily(ops3d.family("X"), _pref_x),
        "cY": CrystalFamily(ops3d.family("Y"), _pref_y),
        "cZ": CrystalFamily(zrec.ZFamily()),
    }
    return fams


# ---------------------------------------------------------------------------
# closed combinatorial forms for the R and J limits
# ---------------------------------------------------------------------------


def crystal_r_image(i, j, k):
    m = min(i, k)
    return (i + j - m, m, j + k - m)


def crystal_j_image(i, j, k, l):
    x1 = min(i + 2 * min(j, l), k + 2 * l)
    x2 = min(i + min(j, l), k + l)
    return (i + 2 * j + k - x1, x1 - x2, 2 * x2 - x1, j + k + l - x2)


# ---------------------------------------------------------------------------
# signed combinatorial maps
# ---------------------------------------------------------------------------


class CombMap:
    """Signed partial bijection on multi-indices, built per weight class."""

    def __init__(self, signature, weight_forms, entries, name="?"):
        self.signature = signature
        self.weight_forms = weight_forms
        self.entries = entries  # {in tuple: (out tuple, sign)}
        self.name = name

    def is_class_bijection(self, targets):
        members = enumerate_weighted(self.signature, self.weight_forms, targets)
        images = []
        for m in members:
            if m not in self.entries:
                return False
            images.append(self.entries[m][0])
        return sorted(images) == sorted(members)

    def signs_used(self):
        return sorted({s for (_, s) in self.entries.values()})


def crystal_operator(name, targets, fams=None):
    """Materialize the signed map of one crystal family on a weight class."""
    fams = fams or crystal_families()
    fam = fams[name]
    entries = {}
    for sub in enumerate_weighted(fam.signature, fam.weight_forms, targets):
        hits = [(sup, c) for sup, c in fam.cols_for_sub(sub)]
        if not hits:
            continue
        if len(hits) > 1:
            raise CrystalDivergence(
                f"{name}: {sub} has {len(hits)} images; not a partial bijection"
            )
        sup, c = hits[0]
        entries[sub] = (sup, 1 if c == ONE else -1)
    return CombMap(fam.signature, fam.weight_forms, entries, name)
