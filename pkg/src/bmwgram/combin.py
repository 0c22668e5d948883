"""Partitions, tableaux, permutations and the dangle-coset combinatorics.

Permutations are one-line tuples acting on points from the right:
(x)w = w[x-1], and (x)(uv) = ((x)u)v, so reduced words concatenate under
this product.  Right multiplication by s_i swaps the values i, i+1;
left multiplication swaps positions i, i+1.
"""

from __future__ import annotations

from functools import lru_cache

from .coeff import LaurentPoly

INF = None  # spelled e=None / p=None throughout


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def perm_id(n):
    return tuple(range(1, n + 1))

def perm_mul(u, v):
    return tuple(v[x - 1] for x in u)

def perm_inv(u):
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x - 1] = i + 1
    return tuple(out)

def perm_len(u):
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])

def apply_right_s(u, i):
    """u * s_i: swap the values i and i+1."""
    out = list(u)
    a = out.index(i)
    b = out.index(i + 1)
    out[a], out[b] = out[b], out[a]
    return tuple(out)

def right_ascent(u, i):
    """True iff l(u s_i) = l(u) + 1."""
    return u.index(i) < u.index(i + 1)

def perm_word(u):
    """Canonical reduced word (letters i meaning s_i), built by peeling
    the smallest right descent."""
    word = []
    cur = u
    while True:
        for i in range(1, len(cur)):
            if not right_ascent(cur, i):
                word.append(i)
                cur = apply_right_s(cur, i)
                break
        else:
            break
    word.reverse()
    return tuple(word)

def perm_from_word(n, word):
    u = perm_id(n)
    for i in word:
        u = apply_right_s(u, i)
    return u

def s_range(n, i, j):
    """s_{i,j}: the cycle sending i to j (paper-style chain of adjacent
    transpositions); identity when i = j."""
    if i == j:
        return perm_id(n)
    if i < j:
        word = list(range(i, j))
    else:
        word = list(range(i - 1, j - 1, -1))
    return perm_from_word(n, word)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def partitions(m):
    """All partitions of m, lexicographically descending; () for m = 0."""
    if m == 0:
        return [()]
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, maxpart), 0, -1):
            rec(rest - part, part, prefix + [part])

    rec(m, m, [])
    return out


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def dominates(lam, mu):
    """lam dominates mu (both partitions of the same size)."""
    if sum(lam) != sum(mu):
        return False
    pa = pb = 0
    for i in range(max(len(lam), len(mu))):
        pa += lam[i] if i < len(lam) else 0
        pb += mu[i] if i < len(mu) else 0
        if pa < pb:
            return False
    return True


def contains(lam, mu):
    """lam contains mu as Young diagrams."""
    if len(mu) > len(lam):
        return False
    return all(lam[i] >= mu[i] for i in range(len(mu)))


def cells(lam):
    return [(i + 1, j + 1) for i, part in enumerate(lam) for j in range(part)]


def hook_lengths(lam):
    """Map (i, j) -> hook length lam_i - j + lam'_j - i + 1 (1-based)."""
    conj = conjugate(lam)
    return {(i, j): lam[i - 1] - j + conj[j - 1] - i + 1 for (i, j) in cells(lam)}


def num_std_tableaux(lam):
    n = sum(lam)
    prod = 1
    for h in hook_lengths(lam).values():
        prod *= h
    f = 1
    for k in range(2, n + 1):
        f *= k
    return f // prod


def is_e_restricted(lam, e):
    """lam_i - lam_{i+1} < e for all i (trailing part against 0)."""
    if e is INF:
        return True
    parts = list(lam) + [0]
    return all(parts[i] - parts[i + 1] < e for i in range(len(lam)))


def nu_ep(h, e, p):
    """nu_p(h/e) when e is finite and divides h, else -1; nu_infinity = 0."""
    if e is INF or h % e != 0:
        return -1
    if p is INF:
        return 0
    x = h // e
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def content(lam, node):
    """Content of a node: r * q^{2(j - i)}."""
    i, j = node
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError("node %r outside diagram of %r" % (node, lam))
    return LaurentPoly({(2 * (j - i), 1): 1})


def content_exponent(node):
    i, j = node
    return 2 * (j - i)


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------

def std_tableaux(lam):
    """All standard tableaux of shape lam as row tuples; the row-reading
    superstandard tableau comes first."""
    n = sum(lam)
    if n == 0:
        return [()]
    rows = [[0] * part for part in lam]
    out = []

    def fill_all(num):
        # next number goes to the first empty cell of any row whose upper
        # neighbour is filled; trying rows top-down yields t^lam first
        if num > n:
            out.append(tuple(tuple(row) for row in rows))
            return
        for i, row in enumerate(rows):
            js = [j for j in range(len(row)) if not row[j]]
            if not js:
                continue
            j = js[0]
            if i and not rows[i - 1][j]:
                continue
            row[j] = num
            fill_all(num + 1)
            row[j] = 0

    fill_all(1)
    return out


def tableau_shape(t):
    return tuple(len(row) for row in t)


def d_of(t):
    """The permutation w with t^lam · w = t: its one-line notation is the
    row reading word of t."""
    word = tuple(x for row in t for x in row)
    return word


def superstandard(lam):
    out = []
    k = 1
    for part in lam:
        out.append(tuple(range(k, k + part)))
        k += part
    return tuple(out)


# ---------------------------------------------------------------------------
# dangle cosets D_{f,n}
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def dfn(f, n):
    """Enumerate D_{f,n} by the defining nested products.

    Elements are products s_{n-2f+1,i_f} s_{n-2f+2,j_f} ... s_{n-1,i_1}
    s_{n,j_1} with 1 <= i_k < j_k <= n-2k+2 and i_f < ... < i_1.
    """
    if not (0 <= 2 * f <= n):
        raise ValueError("need 0 <= 2f <= n")
    if f == 0:
        return (perm_id(n),)
    out = []

    def rec(k, min_i, acc):
        # k runs f, f-1, ..., 1; factors are appended left to right
        if k == 0:
            out.append(acc)
            return
        bound = n - 2 * k + 2
        for i in range(min_i + 1, bound + 1):
            for j in range(i + 1, bound + 1):
                fac = perm_mul(s_range(n, n - 2 * k + 1, i),
                               s_range(n, n - 2 * k + 2, j))
                rec(k - 1, i, perm_mul(acc, fac))

    rec(f, 0, perm_id(n))
    return tuple(out)


def dfn_size(f, n):
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = (2 ** f)
    for k in range(2, f + 1):
        den *= k
    for k in range(2, n - 2 * f + 1):
        den *= k
    return num // den


def dangle_data(n, f, v):
    """(through value tuple, sorted pair tuple) of a D_{f,n} element."""
    m = n - 2 * f
    thr = tuple(v[:m])
    prs = tuple(tuple(sorted((v[m + 2 * k], v[m + 2 * k + 1])))
                for k in range(f))
    return thr, prs


def dangle_from_data(n, f, through_set, pairs):
    """Canonical D_{f,n} element with the given through targets and
    bottom pairs: through values sorted, pairs increasing, sorted by min."""
    thr = tuple(sorted(through_set))
    prs = sorted(tuple(sorted(pr)) for pr in pairs)
    flat = list(thr)
    for pr in prs:
        flat.extend(pr)
    return tuple(flat)


# ---------------------------------------------------------------------------
# admissible skew configurations
# ---------------------------------------------------------------------------

def _skew_components(lam, mu):
    """Connected components (by edge adjacency) of the skew diagram."""
    boxes = set(cells(lam)) - set(cells(mu))
    comps = []
    left = set(boxes)
    while left:
        seed = left.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            (i, j) = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in left:
                    left.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    return comps


def _matchings(nodes):
    """All perfect matchings of the node list."""
    if not nodes:
        yield ()
        return
    first = nodes[0]
    for k in range(1, len(nodes)):
        rest = nodes[1:k] + nodes[k + 1:]
        for sub in _matchings(rest):
            yield ((first, nodes[k]),) + sub


def is_admissible(lam, mu, f, spec):
    """Whether lam is an admissible extension of mu under the regime.

    Requires a perfect pairing of the skew nodes with content product 1 for
    each pair, such that within each connected component the number of
    marked vertical dominoes (top content q) is even and the number of
    marked horizontal dominoes (left content -q^{-1}) is even.  The marked
    dominoes are the columns and rows of the drawn strip configurations;
    this reading is validated against the vanishing loci of symbolic Gram
    determinants and the rank data of the oracle sweep.
    """
    if sum(lam) != sum(mu) + 2 * f:
        raise ValueError("size mismatch: |lam| != |mu| + 2f")
    if not contains(lam, mu):
        return False
    if f == 0:
        return lam == mu
    nodes = sorted(set(cells(lam)) - set(cells(mu)))
    if spec.is_concrete():
        p, q0, r0 = spec.p, spec.q0, spec.r0

        def pair_ok(p1, p2):
            d1 = p1[1] - p1[0]
            d2 = p2[1] - p2[0]
            return r0 * r0 * pow(q0, 2 * (d1 + d2), p) % p == 1 % p

        def vert_marked(top):
            return (r0 * pow(q0, 2 * (top[1] - top[0]), p) - q0) % p == 0

        def horiz_marked(left):
            val = r0 * pow(q0, 2 * (left[1] - left[0]), p) % p
            return (val + pow(q0, -1, p)) % p == 0
    else:
        if spec.r_sign == 0:
            return False
        sign, aexp = spec.r_sign, spec.r_exp

        def _decide(value):
            if value is None:
                raise ValueError("undetermined parameter regime")
            return value

        def pair_ok(p1, p2):
            d1 = p1[1] - p1[0]
            d2 = p2[1] - p2[0]
            return _decide(spec.q_power_is(2 * (aexp + d1 + d2), 1))

        def vert_marked(top):
            return _decide(spec.unit_eq_one(sign,
                                            aexp + 2 * (top[1] - top[0]) - 1))

        def horiz_marked(left):
            return _decide(spec.unit_eq_one(-sign,
                                            aexp + 2 * (left[1] - left[0]) + 1))

    comp_of = {}
    for idx, comp in enumerate(_skew_components(lam, mu)):
        for node in comp:
            comp_of[node] = idx
    for matching in _matchings(nodes):
        if not all(pair_ok(p1, p2) for p1, p2 in matching):
            continue
        vcount = {}
        hcount = {}
        for p1, p2 in matching:
            lo, hi = min(p1, p2), max(p1, p2)
            if hi == (lo[0] + 1, lo[1]) and vert_marked(lo):
                vcount[comp_of[lo]] = vcount.get(comp_of[lo], 0) + 1
            elif hi == (lo[0], lo[1] + 1) and horiz_marked(lo):
                hcount[comp_of[lo]] = hcount.get(comp_of[lo], 0) + 1
        if all(c % 2 == 0 for c in vcount.values()) and \
                all(c % 2 == 0 for c in hcount.values()):
            return True
    return False


def generic_admissible_r(lam, mu, f):
    """Signed q-exponents (sign, a) with lam an (f, mu)-admissible extension
    over the complex field with q^2 of infinite order.

    Generically a pairing has content product 1 iff every pair's diagonal
    sum equals -a; the parity conditions mark adjacent pairs by the sign.
    """
    if sum(lam) != sum(mu) + 2 * f or f == 0 or not contains(lam, mu):
        return set()
    nodes = sorted(set(cells(lam)) - set(cells(mu)))
    comp_of = {}
    for idx, comp in enumerate(_skew_components(lam, mu)):
        for node in comp:
            comp_of[node] = idx
    out = set()
    for matching in _matchings(nodes):
        sums = {(p1[1] - p1[0]) + (p2[1] - p2[0]) for p1, p2 in matching}
        if len(sums) != 1:
            continue
        a = -sums.pop()
        # generically a vertical pair has top content ±q (marked when +)
        # and a horizontal pair left content ±q^{-1} (marked when -)
        vcount = {}
        hcount = {}
        for p1, p2 in matching:
            lo, hi = min(p1, p2), max(p1, p2)
            if hi == (lo[0] + 1, lo[1]):
                vcount[comp_of[lo]] = vcount.get(comp_of[lo], 0) + 1
            elif hi == (lo[0], lo[1] + 1):
                hcount[comp_of[lo]] = hcount.get(comp_of[lo], 0) + 1
        if all(c % 2 == 0 for c in vcount.values()):
            out.add((1, a))
        if all(c % 2 == 0 for c in hcount.values()):
            out.add((-1, a))
    return out


def forbidden_r_values(f, lam, n):
    """All signed powers r = ±q^a forced by some admissible extension of
    lam in levels 0 <= l < f (generic q over the complex numbers)."""
    out = set()
    for level in range(f):
        g = f - level
        for nu in partitions(n - 2 * level):
            out |= generic_admissible_r(nu, lam, g)
    return out
