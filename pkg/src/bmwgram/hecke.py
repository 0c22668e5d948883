"""The Hecke algebra of the symmetric group on the permutation basis.

Elements are finite maps {permutation: LaurentPoly} with the usual rule
g_w g_i = g_{w s_i} when the length goes up and g_{w s_i} + w g_w when it
goes down (w here is the localization parameter q - q^{-1}).

The Murphy basis x_{st} = g_{d(s)}^* X_lam g_{d(t)} expands with support
{d(s)^{-1} x d(t) : x in the Young subgroup}, all products length-additive;
its lex-longest member d(s)^{-1} w_lam d(t) identifies (lam, s, t) uniquely,
which makes straightening a triangular pass by decreasing length.
"""

from __future__ import annotations

from functools import lru_cache
import itertools

from .coeff import LaurentPoly
from .combin import (apply_right_s, d_of, perm_id, perm_inv, perm_len,
                     perm_word, right_ascent, std_tableaux)
from .exactla import gf_rank

OMEGA = LaurentPoly.omega()


class HeckeElem:
    """Linear combination of permutation basis elements g_w."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def one(cls, m):
        return cls(m, {perm_id(m): LaurentPoly.one()})

    @classmethod
    def gen(cls, m, i):
        if not 1 <= i <= m - 1:
            raise ValueError("generator index out of range")
        return cls(m, {apply_right_s(perm_id(m), i): LaurentPoly.one()})

    @classmethod
    def basis(cls, m, w):
        return cls(m, {w: LaurentPoly.one()})

    def __eq__(self, other):
        return self.m == other.m and self.terms == other.terms

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, LaurentPoly.zero()) + c
        return HeckeElem(self.m, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.integer(-1))

    def scale(self, c):
        return HeckeElem(self.m, {w: c * x for w, x in self.terms.items()})

    def times_gen(self, i):
        out = {}
        for w, c in self.terms.items():
            ws = apply_right_s(w, i)
            if right_ascent(w, i):
                out[ws] = out.get(ws, LaurentPoly.zero()) + c
            else:
                out[ws] = out.get(ws, LaurentPoly.zero()) + c
                out[w] = out.get(w, LaurentPoly.zero()) + OMEGA * c
        return HeckeElem(self.m, out)

    def times_basis_word(self, word):
        out = self
        for i in word:
            out = out.times_gen(i)
        return out

    def __mul__(self, other):
        if self.m != other.m:
            raise ValueError("degree mismatch")
        out = HeckeElem(self.m)
        for w, c in other.terms.items():
            out = out + self.scale(c).times_basis_word(perm_word(w))
        return out

    def star(self):
        """The anti-involution fixing the generators: g_w -> g_{w^{-1}}."""
        return HeckeElem(self.m, {perm_inv(w): c for w, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "HeckeElem(0)"
        bits = ["(%s)*g%s" % (c, list(w)) for w, c in sorted(self.terms.items())]
        return "HeckeElem(%s)" % " + ".join(bits)


def hecke_mul(x, y):
    return x * y


@lru_cache(maxsize=None)
def young_subgroup(lam, m):
    """Elements of the Young subgroup of S_m attached to the rows of lam."""
    blocks = []
    start = 1
    for part in lam:
        blocks.append(list(range(start, start + part)))
        start += part
    if start - 1 != m:
        raise ValueError("partition does not fill the degree")
    elems = []
    pools = [list(itertools.permutations(block)) for block in blocks]
    for choice in itertools.product(*pools):
        w = list(range(1, m + 1))
        for block, img in zip(blocks, choice):
            for pos, val in zip(block, img):
                w[pos - 1] = val
        elems.append(tuple(w))
    return tuple(elems)


def x_lambda(lam, m=None):
    """X_lam = sum over the Young subgroup of q^{length} g_w."""
    if m is None:
        m = sum(lam)
    terms = {}
    for w in young_subgroup(lam, m):
        terms[w] = LaurentPoly.q(perm_len(w))
    return HeckeElem(m, terms)


def signed_symmetrizer(mu, m):
    """n_mu = sum over the Young subgroup of (-q)^{-length} g_w, the
    q-antisymmetrizer: g_i n_mu = -q^{-1} n_mu for row generators of mu."""
    terms = {}
    for w in young_subgroup(mu, m):
        l = perm_len(w)
        terms[w] = LaurentPoly.monomial((-1) ** (l % 2), -l, 0)
    return HeckeElem(m, terms)


def column_superstandard(lam):
    """The standard tableau filled 1, 2, ... down successive columns."""
    rows = [[0] * part for part in lam]
    conj = tuple(sum(1 for part in lam if part > j) for j in range(lam[0] if lam else 0))
    num = 1
    for j, height in enumerate(conj):
        for i in range(height):
            rows[i][j] = num
            num += 1
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def _cell_probe(lam, m):
    """Data for reading the X_lam-coefficient of elements of the two-sided
    cell generated by X_lam, modulo higher cells.

    Pairing any such element on the right with T_{d(t_col)} n_{lam'} kills
    everything above the cell and sends X_lam to the fixed nonzero probe
    element z; the coefficient is recovered by exact division.
    """
    from .combin import conjugate

    wcol = perm_word(d_of(column_superstandard(lam)))
    n_el = signed_symmetrizer(conjugate(lam), m)
    z = x_lambda(lam, m).times_basis_word(wcol) * n_el
    if z.is_zero():
        raise AssertionError("degenerate cell probe for %r" % (lam,))
    zref = max(z.terms, key=lambda w: (perm_len(w), w))
    return wcol, n_el, z, zref


def cell_coefficient(elem, lam):
    """Coefficient c with elem = c * X_lam modulo higher cells.

    elem must lie in X_lam * H * X_lam + (higher cells); the result is
    exact and the full proportionality is checked.
    """
    wcol, n_el, z, zref = _cell_probe(lam, elem.m)
    paired = elem.times_basis_word(wcol) * n_el
    if paired.is_zero():
        return LaurentPoly.zero()
    num = paired.terms.get(zref, LaurentPoly.zero())
    c = _ratio(num, z.terms[zref])
    if not (paired - z.scale(c)).is_zero():
        raise AssertionError("element is not in the expected cell span")
    return c


def _ratio(a, b):
    """Exact quotient a / b in the localized Laurent ring."""
    from .exactla import _divexact
    anum = LaurentPoly(dict(a.terms))
    bnum = LaurentPoly(dict(b.terms))
    if a.wexp >= b.wexp:
        quo = _divexact(anum, bnum)
        return LaurentPoly(dict(quo.terms), a.wexp - b.wexp)
    anum = anum * (LaurentPoly.omega() ** (b.wexp - a.wexp))
    return _divexact(anum, bnum)


def specht_gram(lam, m=None):
    """Gram matrix of the invariant form on the cell module of shape lam.

    Entry (s, t) is the coefficient of X_lam inside
    X_lam g_{d(s)} (g_{d(t)})^* X_lam, modulo higher cells.
    """
    if m is None:
        m = sum(lam)
    return [list(row) for row in _specht_gram_cached(tuple(lam), m)]


@lru_cache(maxsize=None)
def _specht_gram_cached(lam, m):
    tabs = std_tableaux(lam)
    x = x_lambda(lam, m)
    rows = [x.times_basis_word(perm_word(d_of(t))) for t in tabs]
    size = len(tabs)
    gram = [[None] * size for _ in range(size)]
    for si in range(size):
        for ti in range(si, size):
            prod = rows[si] * rows[ti].star()
            val = cell_coefficient(prod, lam)
            gram[si][ti] = val
            gram[ti][si] = val
    return tuple(tuple(row) for row in gram)


def specht_rank(lam, spec):
    """Dimension of the simple head: rank of the specialized Gram matrix."""
    if not spec.is_concrete():
        raise ValueError("rank needs a concrete spec")
    gram = specht_gram(lam)
    p, q0 = spec.p, spec.q0
    rows = [[e.specialize(p, q0, 1) for e in row] for row in gram]
    return gf_rank(rows, p)
