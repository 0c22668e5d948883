import itertools
import random

import pytest

from bmwgram import bmw as B
from bmwgram.coeff import LaurentPoly
from bmwgram.combin import dfn, perm_id
from bmwgram.hecke import HeckeElem, hecke_mul

L = LaurentPoly
R = L.r()
RINV = L.r(-1)


def gens(n):
    T = {i: B.generator("T", i, n) for i in range(1, n)}
    E = {i: B.generator("E", i, n) for i in range(1, n)}
    Ti = {i: B.generator("T_inv", i, n) for i in range(1, n)}
    return T, E, Ti


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_defining_relations(n):
    one = B.BmwElem.one(n)
    T, E, Ti = gens(n)
    for i in range(1, n):
        cubic = (T[i] - one.scale(L.q())) * (T[i] + one.scale(L.q(-1))) \
            * (T[i] - one.scale(RINV))
        assert cubic.is_zero()
        assert E[i] * T[i] == E[i].scale(RINV)
        assert T[i] * E[i] == E[i].scale(RINV)
        assert T[i] * Ti[i] == one and Ti[i] * T[i] == one
        assert one - (T[i] - Ti[i]).scale(L.omega_inv()) == E[i]
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) == 1:
                assert T[i] * T[j] * T[i] == T[j] * T[i] * T[j]
                assert E[i] * T[j] * E[i] == E[i].scale(R)
                assert E[i] * Ti[j] * E[i] == E[i].scale(RINV)
            elif abs(i - j) >= 2:
                assert T[i] * T[j] == T[j] * T[i]
                assert E[i] * T[j] == T[j] * E[i]
                assert E[i] * E[j] == E[j] * E[i]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_derived_identities(n):
    T, E, Ti = gens(n)
    for i in range(1, n):
        assert E[i] * E[i] == E[i].scale(B.DELTA)
        for j in (i - 1, i + 1):
            if 1 <= j <= n - 1:
                assert E[i] * E[j] * E[i] == E[i]
                assert T[i] * T[j] * E[i] == E[j] * E[i]
                assert E[i] * T[j] * T[i] == E[i] * E[j]


def test_delta_agrees_with_fraction():
    num = (L.q() + R) * (L.q() * R - L.one())
    den = R * (L.q() + L.one()) * (L.q() - L.one())
    assert B.DELTA * den == num


def test_generator_normal_forms():
    t1 = B.generator("T", 1, 2)
    assert sorted(t1.terms) == [(0, (1, 2), (2, 1), (1, 2))]
    e1 = B.generator("E", 1, 2)
    assert sorted(e1.terms) == [(1, (1, 2), (), (1, 2))]
    ti = B.generator("T_inv", 1, 2)
    expect = t1 + B.BmwElem.one(2).scale(-L.omega()) + e1.scale(L.omega())
    assert ti == expect


def test_e_fn():
    assert sorted(B.e_fn(1, 3).terms) == [(1, (1, 2, 3), (1,), (1, 2, 3))]
    assert B.e_fn(0, 3) == B.BmwElem.one(3)
    e2 = B.generator("E", 3, 4) * B.generator("E", 1, 4)
    assert B.e_fn(2, 4) == e2


def test_dimension_closure():
    for n in (2, 3, 4, 5):
        words = list(B.all_words(n))
        assert len(words) == len(set(words)) == B.basis_size(n)


def test_associativity_exhaustive_n3():
    words = list(B.all_words(3))
    elems = {w: B.BmwElem.from_word(3, w) for w in words}
    for a, b, c in itertools.product(words, repeat=3):
        assert (elems[a] * elems[b]) * elems[c] == \
            elems[a] * (elems[b] * elems[c])


@pytest.mark.parametrize("n,samples", [(4, 1000), (5, 1000)])
def test_associativity_random(n, samples):
    words = list(B.all_words(n))
    rng = random.Random(1234 + n)
    for _ in range(samples):
        ws = [rng.choice(words) for _ in range(3)]
        x, y, z = (B.BmwElem.from_word(n, w) for w in ws)
        assert (x * y) * z == x * (y * z), ws


@pytest.mark.parametrize("n", [3, 4, 5])
def test_star_involution(n):
    words = list(B.all_words(n))
    rng = random.Random(9)
    for _ in range(60):
        w1, w2 = rng.choice(words), rng.choice(words)
        x, y = B.BmwElem.from_word(n, w1), B.BmwElem.from_word(n, w2)
        assert (x * y).star() == y.star() * x.star()
        assert x.star().star() == x
    assert B.generator("E", 1, n).star() == B.generator("E", 1, n)
    t12 = B.generator("T", 1, n) * B.generator("T", 2, n)
    assert t12.star() == B.generator("T", 2, n) * B.generator("T", 1, n)


@pytest.mark.parametrize("n", [3, 4])
def test_filtration(n):
    words = list(B.all_words(n))
    rng = random.Random(31)
    for _ in range(100):
        w1, w2 = rng.choice(words), rng.choice(words)
        prod = B.BmwElem.from_word(n, w1) * B.BmwElem.from_word(n, w2)
        if prod.terms:
            assert min(wd[0] for wd in prod.terms) >= max(w1[0], w2[0])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jucys_murphy(n):
    Ls = [B.jucys_murphy(i, n) for i in range(1, n + 1)]
    assert Ls[0] == B.BmwElem.one(n).scale(R)
    if n >= 2:
        t1 = B.generator("T", 1, n)
        assert Ls[1] == t1 * B.BmwElem.one(n).scale(R) * t1
    for a, b in itertools.combinations(range(n), 2):
        assert Ls[a] * Ls[b] == Ls[b] * Ls[a]
    z = Ls[0]
    for x in Ls[1:]:
        z = z * x
    for kind in ("T", "E"):
        for i in range(1, n):
            g = B.generator(kind, i, n)
            assert z * g == g * z


@pytest.mark.parametrize("n", [3, 4])
def test_hecke_image_homomorphism(n):
    words = list(B.all_words(n))
    rng = random.Random(77)
    assert B.hecke_image(B.generator("T", 1, n)) == HeckeElem.gen(n, 1)
    assert B.hecke_image(B.generator("E", 1, n)).is_zero()
    for _ in range(40):
        w1, w2 = rng.choice(words), rng.choice(words)
        x, y = B.BmwElem.from_word(n, w1), B.BmwElem.from_word(n, w2)
        assert B.hecke_image(x * y) == \
            hecke_mul(B.hecke_image(x), B.hecke_image(y))


def test_phi_f_examples():
    ph = B.phi_f(perm_id(2), perm_id(2), 1, 2)
    assert ph.m == 0 and list(ph.terms.values()) == [B.DELTA]
    ph = B.phi_f(perm_id(3), perm_id(3), 1, 3)
    assert ph.m == 1 and list(ph.terms.values()) == [B.DELTA]


@pytest.mark.parametrize("n,f", [(2, 1), (3, 1), (4, 1), (4, 2)])
def test_phi_f_symmetry(n, f):
    for u in dfn(f, n):
        for v in dfn(f, n):
            assert B.phi_f(u, v, f, n).star() == B.phi_f(v, u, f, n)


def test_cache_roundtrip(tmp_path):
    n = 3
    B.warm(n)
    path = tmp_path / "cache.jsonl"
    B.save_cache(n, str(path))
    saved_wt = {k: v for k, v in B._WT.items() if k[0] == n}
    saved_we = {k: v for k, v in B._WE.items() if k[0] == n}
    for key in list(B._WT):
        if key[0] == n:
            del B._WT[key]
    for key in list(B._WE):
        if key[0] == n:
            del B._WE[key]
    assert B.load_cache(n, str(path)) is True
    for k, v in saved_wt.items():
        assert B._WT[k] == v
    for k, v in saved_we.items():
        assert B._WE[k] == v
    # version mismatch is refused
    lines = path.read_text().splitlines()
    import json
    header = json.loads(lines[0])
    header["format"] = 99
    path.write_text("\n".join([json.dumps(header)] + lines[1:]))
    assert B.load_cache(n, str(path)) is False
