"""Cell modules: Gram matrices, determinants and ranks.

A cell is (f, lam) with lam a partition of n - 2f.  The module has basis
indexed by standard tableaux of shape lam times the dangle transversal;
the Gram entry for ((s,u),(t,v)) is the coefficient of E^{f,n} X_lam in

    E^{f,n} X_lam T_{d(s)} T_u  *  (E^{f,n} X_lam T_{d(t)} T_v)^*

modulo higher cells, which reduces to a Hecke-cell coefficient extraction
on the level-f part of the product.
"""

from __future__ import annotations

from .bmw import fold_T, mul_elems, star_elem
from .coeff import LaurentPoly
from .combin import (d_of, dfn, partitions, perm_id, perm_word,
                     std_tableaux)
from .exactla import bareiss_det, gf_rank
from .hecke import (HeckeElem, cell_coefficient, hecke_mul, x_lambda,
                    young_subgroup)
from . import bmw as _bmw

SYMBOLIC_DET_LIMIT = 64


class CellIndex:
    __slots__ = ("n", "f", "lam")

    def __init__(self, n, f, lam):
        lam = tuple(lam)
        if not (0 <= 2 * f <= n) or sum(lam) != n - 2 * f:
            raise ValueError("invalid cell (%d, %r) for degree %d" % (f, lam, n))
        self.n = n
        self.f = f
        self.lam = lam

    def __eq__(self, other):
        return (self.n, self.f, self.lam) == (other.n, other.f, other.lam)

    def __hash__(self):
        return hash((self.n, self.f, self.lam))

    def __repr__(self):
        return "CellIndex(n=%d, f=%d, lam=%r)" % (self.n, self.f, self.lam)


class GramMatrix:
    __slots__ = ("cell", "labels", "entries")

    def __init__(self, cell, labels, entries):
        self.cell = cell
        self.labels = labels
        self.entries = entries

    def dim(self):
        return len(self.labels)

    def substitute_r(self, sign, a):
        ent = [[e.substitute_r(sign, a) for e in row] for row in self.entries]
        return GramMatrix(self.cell, self.labels, ent)

    def to_json(self):
        return {
            "cell": {"n": self.cell.n, "f": self.cell.f,
                     "lambda": list(self.cell.lam)},
            "labels": [[list(map(list, t)), list(v)] for t, v in self.labels],
            "entries": [[str(e) for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        from .coeff import parse_poly
        cell = CellIndex(data["cell"]["n"], data["cell"]["f"],
                         tuple(data["cell"]["lambda"]))
        labels = [(tuple(tuple(row) for row in t), tuple(v))
                  for t, v in data["labels"]]
        entries = [[parse_poly(s) for s in row] for row in data["entries"]]
        return cls(cell, labels, entries)


def cell_labels(cell):
    tabs = std_tableaux(cell.lam)
    return [(t, v) for t in tabs for v in dfn(cell.f, cell.n)]


def cell_dims(n):
    """dim of every cell module: |Std(lam)| * |D_{f,n}|."""
    from .combin import num_std_tableaux, dfn_size
    out = {}
    for f in range(n // 2 + 1):
        for lam in partitions(n - 2 * f):
            out[CellIndex(n, f, lam)] = num_std_tableaux(lam) * dfn_size(f, n)
    return out


def _seed_element(cell):
    """E^{f,n} X_lam as an algebra element."""
    n, f, lam = cell.n, cell.f, cell.lam
    m = n - 2 * f
    terms = {}
    for x in young_subgroup(lam, m):
        from .combin import perm_len
        terms[(f, perm_id(n), x, perm_id(n))] = LaurentPoly.q(perm_len(x))
    return terms


def _row_elements(cell):
    n = cell.n
    seed = _seed_element(cell)
    rows = []
    for t, v in cell_labels(cell):
        elem = fold_T(n, seed, perm_word(d_of(t)))
        elem = fold_T(n, elem, perm_word(v))
        rows.append(elem)
    return rows


def _level_hecke_part(cell, elem):
    """The (f, 1, w, 1)-coefficients of elem as a Hecke element."""
    n, f = cell.n, cell.f
    idn = perm_id(n)
    terms = {}
    for (ff, uu, ww, vv), c in elem.items():
        if ff == f and uu == idn and vv == idn:
            terms[ww] = c
    return HeckeElem(n - 2 * f, terms)


def _extract(cell, elem):
    return cell_coefficient(_level_hecke_part(cell, elem), cell.lam)


def gram_matrix(cell):
    """Gram matrix of the invariant form, computed inside the algebra."""
    n = cell.n
    labels = cell_labels(cell)
    rows = _row_elements(cell)
    cols = [star_elem(rw) for rw in rows]
    size = len(labels)
    entries = [[None] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            prod = mul_elems(n, rows[a], cols[b])
            val = _extract(cell, prod)
            entries[a][b] = val
            entries[b][a] = val
    return GramMatrix(cell, labels, entries)


def gram_via_inflation(cell):
    """Gram matrix assembled from the tower bilinear form and the Hecke
    layer: entry = coefficient of X_lam in
    X_lam g_{d(s)} phi_f(u, v) g_{d(t)}^* X_lam."""
    if cell.f < 1:
        raise ValueError("inflation backend needs f >= 1")
    n, f, lam = cell.n, cell.f, cell.lam
    m = n - 2 * f
    labels = cell_labels(cell)
    x = x_lambda(lam, m)
    lefts = {}
    for t in std_tableaux(lam):
        lefts[t] = x.times_basis_word(perm_word(d_of(t)))
    phis = {}
    for u in dfn(f, n):
        for v in dfn(f, n):
            phis[(u, v)] = _bmw.phi_f(u, v, f, n)
    size = len(labels)
    entries = [[None] * size for _ in range(size)]
    for a, (s, u) in enumerate(labels):
        for b, (t, v) in enumerate(labels):
            if b < a:
                continue
            mid = hecke_mul(lefts[s], phis[(u, v)])
            prod = hecke_mul(mid, lefts[t].star())
            val = cell_coefficient(prod, lam)
            entries[a][b] = val
            entries[b][a] = val
    return GramMatrix(cell, labels, entries)


def gram_det(gram):
    if gram.dim() > SYMBOLIC_DET_LIMIT:
        raise ValueError("symbolic determinant limited to dimension %d"
                         % SYMBOLIC_DET_LIMIT)
    return bareiss_det(gram.entries)


def gram_rank(cell, spec):
    """Rank of the specialized Gram matrix over GF(p): dim of the simple
    head of the cell module."""
    if not spec.is_concrete():
        raise ValueError("rank needs a concrete spec")
    gram = gram_matrix(cell)
    return specialized_rank(gram, spec)


def specialized_rank(gram, spec):
    p, q0, r0 = spec.p, spec.q0, spec.r0
    rows = [[e.specialize(p, q0, r0) for e in row] for row in gram.entries]
    return gf_rank(rows, p)


def central_element(n):
    """The product of the Jucys-Murphy elements (a central element)."""
    z = _bmw.jucys_murphy(1, n)
    for i in range(2, n + 1):
        z = z * _bmw.jucys_murphy(i, n)
    return z


def central_scalar(cell):
    """Expected scalar of the central element on the cell module: the
    product of the node contents r q^{2(j-i)} over the diagram."""
    from .combin import cells as diagram_cells
    out = LaurentPoly.one()
    for (i, j) in diagram_cells(cell.lam):
        out = out * LaurentPoly({(2 * (j - i), 1): 1})
    return out


def central_twisted_gram(cell, z_elem=None):
    """Entries extract(row_a * Z * col_b): equals scalar * Gram when the
    central element acts by that scalar."""
    n = cell.n
    if z_elem is None:
        z_elem = central_element(n)
    labels = cell_labels(cell)
    rows = _row_elements(cell)
    cols = [star_elem(rw) for rw in rows]
    size = len(labels)
    entries = [[None] * size for _ in range(size)]
    for a in range(size):
        ra = mul_elems(n, rows[a], z_elem.terms)
        for b in range(size):
            prod = mul_elems(n, ra, cols[b])
            entries[a][b] = _extract(cell, prod)
    return GramMatrix(cell, labels, entries)
