"""Brute-force singularity oracle over prime fields.

The parameters are singular exactly when some tower form degenerates on an
irreducible module of the small Hecke algebra, which happens iff for some
f >= 1 and some e-restricted lam of n-2f the induced module
|D_{f,n}| * dim D^lam is strictly bigger than the simple head of the cell
module, i.e. the rank of its specialized Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cellmod import CellIndex, cell_dims, gram_matrix, specialized_rank
from .coeff import ParamSpec
from .combin import dfn_size, is_e_restricted, partitions
from .hecke import specht_rank

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)
DEFAULT_MAX_N = 7


@dataclass
class OracleReport:
    spec: ParamSpec
    n: int
    singular: bool
    table: list = field(default_factory=list)
    first_witness: object = None

    def to_json(self):
        return {
            "spec": str(self.spec),
            "n": self.n,
            "singular": self.singular,
            "table": [{"f": f, "lambda": list(lam), "dim_induced": a,
                       "dim_simple": b} for (f, lam, a, b) in self.table],
            "first_witness": (list(self.first_witness)
                              if self.first_witness else None),
        }


_GRAM_CACHE = {}


def _gram(n, f, lam):
    key = (n, f, lam)
    if key not in _GRAM_CACHE:
        _GRAM_CACHE[key] = gram_matrix(CellIndex(n, f, lam))
    return _GRAM_CACHE[key]


def singular_oracle(n, spec, max_n=DEFAULT_MAX_N):
    """Scan every level f >= 1 and e-restricted shape, comparing induced
    and simple dimensions."""
    if not spec.is_concrete():
        raise ValueError("the oracle needs a concrete spec")
    if n > max_n:
        raise ValueError("degree %d above the oracle bound %d" % (n, max_n))
    e = spec.order_qsq()
    table = []
    first = None
    singular = False
    for f in range(1, n // 2 + 1):
        for lam in partitions(n - 2 * f):
            if not is_e_restricted(lam, e):
                continue
            dim_head = specht_rank(lam, spec) if lam else 1
            dim_induced = dfn_size(f, n) * dim_head
            dim_simple = specialized_rank(_gram(n, f, lam), spec)
            table.append((f, lam, dim_induced, dim_simple))
            if dim_simple > dim_induced:
                raise AssertionError("quotient bound violated at %r" %
                                     ((f, lam),))
            if dim_induced > dim_simple and first is None:
                first = (f, lam)
                singular = True
    return OracleReport(spec=spec, n=n, singular=singular, table=table,
                        first_witness=first)


def radical_dims(n, spec):
    """dim of the radical of each cell module under the spec."""
    if not spec.is_concrete():
        raise ValueError("needs a concrete spec")
    out = {}
    for cell, dim in cell_dims(n).items():
        rank = specialized_rank(_gram(n, cell.f, cell.lam), spec)
        out[cell] = dim - rank
    return out


def sweep_specs(primes=DEFAULT_PRIMES):
    """All admissible concrete specs (q0^2 != 1) for the given primes."""
    out = []
    for p in primes:
        for q0 in range(2, p - 1):
            if q0 * q0 % p == 1:
                continue
            for r0 in range(1, p):
                out.append(ParamSpec.concrete(p, q0, r0))
    return out


def dedup_key(n, spec):
    """Regime invariants sufficient for the classification at degree n:
    ord(q^2), sign of q^e, the set of signed powers with r = ±q^a, and the
    root conditions entering the exceptional clauses."""
    e = spec.order_qsq()
    rels = []
    acc = 1
    p, q0, r0 = spec.p, spec.q0, spec.r0
    for a in range(e):
        if r0 == acc:
            rels.append((1, a))
        if (r0 + acc) % p == 0:
            rels.append((-1, a))
        acc = acc * q0 % p
    conds = tuple(spec.q_power_is(m, -1) for m in (4, 6, 8))
    return (e, spec.sign_q_to_e(), tuple(rels), p == 2, conds)


def agreement_sweep(ns=(2, 3, 4, 5), primes=DEFAULT_PRIMES, dedup=False):
    """Compare the oracle against the closed-form classification.

    Returns (rows, disagreements): rows are (n, spec, oracle verdict,
    classifier verdict).
    """
    from .classify import classify_bmw
    rows = []
    disagreements = []
    for n in ns:
        seen = set()
        for spec in sweep_specs(primes):
            if dedup:
                key = (n,) + dedup_key(n, spec)
                if key in seen:
                    continue
                seen.add(key)
            rep = singular_oracle(n, spec)
            verdict = classify_bmw(n, spec)
            rows.append((n, spec, rep.singular, verdict.singular))
            if rep.singular != verdict.singular:
                disagreements.append((n, spec, rep, verdict))
    return rows, disagreements
