"""Exact linear algebra kernels: fraction-free determinants and prime-field
ranks.  No floating point anywhere."""

from __future__ import annotations

from .coeff import LaurentPoly


def _divexact(a, b):
    """Exact division of Laurent polynomials (lex order on exponents)."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    if a.wexp or b.wexp:
        raise ValueError("divexact expects cleared denominators")
    rem = dict(a.terms)
    bl = max(b.terms)
    blc = b.terms[bl]
    b_lo = min(b.terms)
    a_lo = min(a.terms)
    lo_bound = (a_lo[0] - b_lo[0], a_lo[1] - b_lo[1])
    quo = {}
    while rem:
        al = max(rem)
        alc = rem[al]
        key = (al[0] - bl[0], al[1] - bl[1])
        if alc % blc or key < lo_bound:
            raise ArithmeticError("inexact division")
        c = alc // blc
        quo[key] = c
        for (x, y), bc in b.terms.items():
            k2 = (x + key[0], y + key[1])
            nv = rem.get(k2, 0) - c * bc
            if nv:
                rem[k2] = nv
            elif k2 in rem:
                del rem[k2]
    return LaurentPoly(quo)


def bareiss_det(matrix):
    """Exact determinant of a square matrix of LaurentPoly entries.

    Clears w-denominators first, then runs fraction-free elimination over
    the Laurent ring; the cleared powers are divided back out at the end.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    k = max((e.wexp for row in matrix for e in row), default=0)
    wk = LaurentPoly.omega() ** k
    m = [[e * wk for e in row] for row in matrix]
    sign = 1
    prev = LaurentPoly.one()
    for col in range(n - 1):
        piv = None
        for row in range(col, n):
            if not m[row][col].is_zero():
                piv = row
                break
        if piv is None:
            return LaurentPoly.zero()
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for row in range(col + 1, n):
            for j in range(col + 1, n):
                num = m[row][j] * m[col][col] - m[row][col] * m[col][j]
                m[row][j] = _divexact(num, prev)
            m[row][col] = LaurentPoly.zero()
        prev = m[col][col]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return LaurentPoly(det.terms, det.wexp + k * n)


def gf_rank(rows, p):
    """Rank over GF(p) of an integer matrix (list of row lists)."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for row in range(rank, len(m)):
            if m[row][col]:
                piv = row
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for row in range(len(m)):
            if row != rank and m[row][col]:
                c = m[row][col]
                m[row] = [(a - c * b) % p for a, b in zip(m[row], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def gf_det(rows, p):
    """Determinant over GF(p) of a square integer matrix."""
    m = [[x % p for x in row] for row in rows]
    n = len(m)
    det = 1
    for col in range(n):
        piv = None
        for row in range(col, n):
            if m[row][col]:
                piv = row
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det % p
        det = det * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for row in range(col + 1, n):
            if m[row][col]:
                c = m[row][col] * inv % p
                m[row] = [(a - c * b) % p for a, b in zip(m[row], m[col])]
    return det % p
