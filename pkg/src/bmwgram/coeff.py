"""Exact coefficient arithmetic for the BMW parameter ring.

Every symbolic quantity in this package lives in Z[q^{±1}, r^{±1}] localized
at w = q - q^{-1}: an integer Laurent polynomial together with a power of w
in the denominator.  Values are immutable and kept canonical (no zero
coefficients, minimal w-denominator), so equality is structural equality.

Concrete computations happen in prime fields GF(p); `ParamSpec` bundles
either a symbolic parameter regime (order of q^2, characteristic, the shape
of r) or a concrete one (p, q0, r0).
"""

from __future__ import annotations

from dataclasses import dataclass


def _strip(terms):
    return {k: c for k, c in terms.items() if c}


def _slice_by_r(terms):
    out = {}
    for (a, b), c in terms.items():
        out.setdefault(b, {})[a] = c
    return out


def _div_omega(terms):
    """Exact division by w = q - q^{-1}; None if not divisible."""
    if not terms:
        return {}
    out = {}
    for b, sl in _slice_by_r(terms).items():
        # divide the q-slice by q - q^-1, i.e. multiply by q, divide by q^2 - 1
        num = {a + 1: c for a, c in sl.items()}
        hi = max(num)
        lo = min(num)
        quo = {}
        carry = dict(num)
        for k in range(hi, lo + 1, -1):
            c = carry.get(k, 0)
            if c:
                quo[k - 2] = c
                carry[k - 2] = carry.get(k - 2, 0) + c
                del carry[k]
        if any(carry.get(k, 0) for k in list(carry)):
            return None
        for a, c in quo.items():
            if c:
                out[(a, b)] = c
    return out


class LaurentPoly:
    """Element of Z[q^±1, r^±1][w^{-1}], canonical form.

    terms maps (a, b) -> nonzero int and stands for sum c * q^a * r^b;
    wexp >= 0 is the power of w dividing the element.
    """

    __slots__ = ("terms", "wexp")

    def __init__(self, terms=None, wexp=0):
        terms = _strip(terms or {})
        if not terms:
            wexp = 0
        while wexp > 0:
            quo = _div_omega(terms)
            if quo is None:
                break
            terms = quo
            wexp -= 1
        self.terms = terms
        self.wexp = wexp

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def integer(cls, c):
        return cls({(0, 0): int(c)})

    @classmethod
    def monomial(cls, c, a=0, b=0):
        return cls({(a, b): int(c)})

    @classmethod
    def q(cls, a=1):
        return cls({(a, 0): 1})

    @classmethod
    def r(cls, b=1):
        return cls({(0, b): 1})

    @classmethod
    def omega(cls):
        return cls({(1, 0): 1, (-1, 0): -1})

    @classmethod
    def omega_inv(cls, k=1):
        return cls({(0, 0): 1}, wexp=k)

    @classmethod
    def qbracket(cls, a):
        """Quantum integer [a] = (q^a - q^-a)/(q - q^-1)."""
        return cls({(a, 0): 1, (-a, 0): -1}, wexp=1)

    # -- ring structure --------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.wexp == other.wexp and self.terms == other.terms

    def __hash__(self):
        return hash((self.wexp, frozenset(self.terms.items())))

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.wexp)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        k = max(self.wexp, other.wexp)
        a = self._scaled_numerator(k - self.wexp)
        b = other._scaled_numerator(k - other.wexp)
        for key, c in b.items():
            a[key] = a.get(key, 0) + c
        return LaurentPoly(a, k)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.integer(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out, self.wexp + other.wexp)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers only via explicit units")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _scaled_numerator(self, extra_w):
        """Numerator terms after multiplying the denominator by w^extra_w."""
        terms = dict(self.terms)
        for _ in range(extra_w):
            out = {}
            for (a, b), c in terms.items():
                out[(a + 1, b)] = out.get((a + 1, b), 0) + c
                out[(a - 1, b)] = out.get((a - 1, b), 0) - c
            terms = _strip(out)
        return terms

    # -- structure -------------------------------------------------------
    def omega_valuation(self):
        """Largest k with w^k dividing self (0 for zero input)."""
        if not self.terms:
            return 0
        k = 0
        cur = self.terms
        while True:
            quo = _div_omega(cur)
            if quo is None:
                return k
            cur = quo
            k += 1

    def normalize_unit(self):
        """Write self = unit * core with unit = ±q^a r^b w^c.

        The core is an integer polynomial with lowest q-degree 0, lowest
        r-degree 0 and positive coefficient on its lex-leading term.
        """
        if not self.terms:
            raise ValueError("zero has no unit normalization")
        k = self.omega_valuation()
        core_terms = self.terms
        for _ in range(k):
            core_terms = _div_omega(core_terms)
        amin = min(a for (a, _b) in core_terms)
        bmin = min(b for (_a, b) in core_terms)
        core_terms = {(a - amin, b - bmin): c for (a, b), c in core_terms.items()}
        lead = max(core_terms)
        sign = 1 if core_terms[lead] > 0 else -1
        if sign < 0:
            core_terms = {key: -c for key, c in core_terms.items()}
        wpow = k - self.wexp
        unit = LaurentPoly.monomial(sign, amin, bmin)
        if wpow >= 0:
            unit = unit * (LaurentPoly.omega() ** wpow)
        else:
            unit = unit * LaurentPoly.omega_inv(-wpow)
        return unit, LaurentPoly(core_terms)

    def unit_core(self):
        return self.normalize_unit()[1]

    # -- specialization ---------------------------------------------------
    def substitute_r(self, sign, a):
        """Replace r by sign * q^a; result is a Laurent polynomial in q."""
        out = {}
        for (x, b), c in self.terms.items():
            key = (x + a * b, 0)
            out[key] = out.get(key, 0) + c * (sign ** (b % 2) if sign < 0 else 1)
        return LaurentPoly(out, self.wexp)

    def specialize(self, p, q0, r0):
        """Evaluation at q = q0, r = r0 over GF(p); returns an int residue."""
        q0 %= p
        r0 %= p
        if q0 == 0 or r0 == 0:
            raise ValueError("q0 and r0 must be invertible")
        w0 = (q0 - pow(q0, -1, p)) % p
        if w0 == 0:
            raise ValueError("w = q - q^-1 must be invertible (q0^2 != 1)")
        acc = 0
        for (a, b), c in self.terms.items():
            acc = (acc + c * pow(q0, a, p) * pow(r0, b, p)) % p
        if self.wexp:
            acc = acc * pow(w0, -self.wexp, p) % p
        return acc

    # -- rendering ---------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        body = render_terms(self.terms)
        if self.wexp == 0:
            return body
        if len(self.terms) == 1:
            return "%s*w^-%d" % (body, self.wexp)
        return "(%s)*w^-%d" % (body, self.wexp)

    def __repr__(self):
        return "LaurentPoly(%s)" % str(self)


def render_terms(terms):
    parts = []
    for (a, b) in sorted(terms, reverse=True):
        c = terms[(a, b)]
        factors = []
        if a:
            factors.append("q^%d" % a if a != 1 else "q")
        if b:
            factors.append("r^%d" % b if b != 1 else "r")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        mono = "*".join(factors)
        if not parts:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append((" + " if c > 0 else " - ") + mono)
    return "".join(parts)


# ---------------------------------------------------------------------------
# parsing: sums of products of powers of integers, q, r and w
# ---------------------------------------------------------------------------

def _tokenize(s):
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            toks.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(int(s[i:j]))
            i = j
        elif ch in "qrw":
            toks.append(ch)
            i += 1
        else:
            raise ValueError("bad character %r in %r" % (ch, s))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse_expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        acc = self.parse_term() * LaurentPoly.integer(sign)
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.next() == "-":
                    sign = -sign
            acc = acc + self.parse_term() * LaurentPoly.integer(sign)
        return acc

    def parse_term(self):
        acc = self.parse_factor()
        while True:
            if self.peek() == "*":
                self.next()
                acc = acc * self.parse_factor()
            elif self.peek() in ("q", "r", "w", "(") or isinstance(self.peek(), int):
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self):
        t = self.next()
        if t == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ValueError("unbalanced parenthesis")
            base = inner
        elif isinstance(t, int):
            base = LaurentPoly.integer(t)
        elif t in ("q", "r", "w"):
            base = {"q": LaurentPoly.q(), "r": LaurentPoly.r(),
                    "w": LaurentPoly.omega()}[t]
        else:
            raise ValueError("unexpected token %r" % (t,))
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            e = self.next()
            if not isinstance(e, int):
                raise ValueError("exponent must be an integer")
            e *= sign
            if e >= 0:
                base = base ** e
            else:
                if t == "q":
                    base = LaurentPoly.q(e)
                elif t == "r":
                    base = LaurentPoly.r(e)
                elif t == "w":
                    base = LaurentPoly.omega_inv(-e)
                else:
                    raise ValueError("negative power of a non-unit")
        return base


def parse_poly(s):
    """Parse the canonical text form back into a LaurentPoly."""
    p = _Parser(_tokenize(s))
    out = p.parse_expr()
    if p.peek() is not None:
        raise ValueError("trailing tokens in %r" % s)
    return out


# ---------------------------------------------------------------------------
# prime field elements
# ---------------------------------------------------------------------------

def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeFieldElem:
    residue: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("modulus %d is not prime" % self.p)
        object.__setattr__(self, "residue", self.residue % self.p)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.residue
        return int(other)

    def __add__(self, other):
        return PrimeFieldElem(self.residue + self._coerce(other), self.p)

    def __sub__(self, other):
        return PrimeFieldElem(self.residue - self._coerce(other), self.p)

    def __mul__(self, other):
        return PrimeFieldElem(self.residue * self._coerce(other), self.p)

    def inv(self):
        if self.residue == 0:
            raise ZeroDivisionError("0 has no inverse")
        return PrimeFieldElem(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        o = PrimeFieldElem(self._coerce(other), self.p)
        return self * o.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        return PrimeFieldElem(pow(self.residue, k, self.p), self.p)


def multiplicative_order(x, p):
    x %= p
    if x == 0:
        raise ValueError("0 has no multiplicative order")
    k = 1
    acc = x
    while acc != 1:
        acc = acc * x % p
        k += 1
    return k


# ---------------------------------------------------------------------------
# parameter regimes
# ---------------------------------------------------------------------------

GENERIC = "generic"


@dataclass(frozen=True)
class ParamSpec:
    """A parameter regime, symbolic or concrete.

    Symbolic: e = ord(q^2) (None for infinite), characteristic p (None for
    char 0), r either GENERIC or a signed power (sign, a) meaning r = ±q^a,
    and qe_sign = sign of q^e (0 when unknown; only meaningful for odd
    finite e away from char 2).

    Concrete: prime p with q0, r0 in GF(p)*, q0^2 != 1.
    """

    mode: str
    e: int | None = None
    p: int | None = None
    r_sign: int = 0
    r_exp: int = 0
    qe_sign: int = 0
    q0: int | None = None
    r0: int | None = None

    @classmethod
    def symbolic(cls, e=None, p=None, r=GENERIC, qe=0):
        if e is not None and e < 2:
            raise ValueError("e = ord(q^2) must be >= 2 or None")
        if p is not None and not is_prime(p):
            raise ValueError("p must be prime or None")
        if r == GENERIC:
            sign, exp = 0, 0
        else:
            sign, exp = r
            if sign not in (1, -1):
                raise ValueError("r sign must be +1 or -1")
            if p == 2:
                sign = 1
            if e is not None:
                exp %= 2 * e
        if e is not None and e % 2 == 0:
            qe = 1 if p == 2 else -1
        elif p == 2:
            qe = 1
        return cls("symbolic", e=e, p=p, r_sign=sign, r_exp=exp, qe_sign=qe)

    @classmethod
    def concrete(cls, p, q0, r0):
        if not is_prime(p):
            raise ValueError("p must be prime")
        q0 %= p
        r0 %= p
        if q0 == 0 or r0 == 0:
            raise ValueError("q0 and r0 must be nonzero")
        if q0 * q0 % p == 1:
            raise ValueError("q0^2 = 1 makes w = q - q^-1 vanish")
        return cls("concrete", p=p, q0=q0, r0=r0)

    # -- shared views ------------------------------------------------------
    def is_concrete(self):
        return self.mode == "concrete"

    def char(self):
        return self.p

    def order_qsq(self):
        """ord(q^2); None means infinite order."""
        if self.is_concrete():
            return multiplicative_order(self.q0 * self.q0 % self.p, self.p)
        return self.e

    def sign_q_to_e(self):
        """Sign of q^e in {+1, -1, 0=unknown}; char 2 counts as +1."""
        if self.is_concrete():
            e = self.order_qsq()
            v = pow(self.q0, e, self.p)
            return 1 if v == 1 else -1
        return self.qe_sign

    # q^m = sign decision; True / False / None(undetermined)
    def q_power_is(self, m, sign):
        if self.is_concrete():
            v = pow(self.q0, m % (2 * self.order_qsq()), self.p)
            target = 1 if sign > 0 else self.p - 1
            return v == target
        return eval_sign_condition(m, sign, self)

    def unit_eq_one(self, sign, m):
        """Decide sign * q^m = 1 (folding signs away in char 2)."""
        if self.is_concrete():
            want = 1 if sign > 0 else self.p - 1
            e = self.order_qsq()
            return pow(self.q0, m % (2 * e), self.p) == want % self.p
        if self.p == 2:
            return self.q_power_is(m, 1)
        return self.q_power_is(m, sign)

    def r_defined(self):
        if self.is_concrete():
            return True
        return self.r_sign != 0

    def r_equals(self, sign, a):
        """Decide r = sign * q^a; None if symbolic data cannot tell."""
        if self.is_concrete():
            return (sign * pow(self.q0, a % (2 * self.order_qsq()), self.p)
                    - self.r0) % self.p == 0
        if self.r_sign == 0:
            return False
        return self.unit_eq_one(self.r_sign * sign, self.r_exp - a)

    def r_in_inverse_pair(self):
        """Decide r in {q^-1, -q}."""
        e1 = self.r_equals(1, -1)
        if e1 is True:
            return True
        e2 = self.r_equals(-1, 1)
        if e2 is True:
            return True
        if e1 is None or e2 is None:
            return None
        return False

    def r_signed_power(self):
        """Decide r in {q^a, -q^b : a, b integers}."""
        if self.is_concrete():
            p, q0, r0 = self.p, self.q0, self.r0
            acc = 1
            for _ in range(multiplicative_order(q0, p)):
                if r0 == acc or (r0 + acc) % p == 0:
                    return True
                acc = acc * q0 % p
            return False
        return self.r_sign != 0

    def reduced_r_exponent(self, n_range=None):
        """Return (sign, a) with r = sign*q^a and 0 <= a < e.

        Requires a signed-power r and finite e; raises when the q^e sign
        is needed but unknown.
        """
        e = self.order_qsq()
        if e is None:
            raise ValueError("requires finite e")
        if self.is_concrete():
            q0, p = self.q0, self.p
            acc = 1
            for a in range(e):
                if self.r0 == acc:
                    return (1, a)
                if (self.r0 + acc) % p == 0:
                    return (-1, a)
                acc = acc * q0 % p
            raise ValueError("r0 is not ±(a power of q0)")
        if self.r_sign == 0:
            raise ValueError("r is generic")
        sign, a = self.r_sign, self.r_exp % (2 * e)
        flips, a = divmod(a, e)
        if flips % 2:
            s = self.sign_q_to_e()
            if s == 0:
                raise ValueError("q^e sign unknown; cannot reduce exponent")
            sign *= s
        if self.p == 2:
            sign = 1
        return (sign, a)

    # -- rendering ----------------------------------------------------------
    def __str__(self):
        if self.is_concrete():
            return "p=%d q0=%d r0=%d" % (self.p, self.q0, self.r0)
        parts = []
        if self.r_sign == 0:
            parts.append("r=generic")
        else:
            parts.append("r=%sq^%d" % ("-" if self.r_sign < 0 else "", self.r_exp))
        parts.append("e=%s" % (self.e if self.e is not None else 0))
        parts.append("p=%s" % (self.p if self.p is not None else 0))
        if self.qe_sign:
            parts.append("qe=%+d" % self.qe_sign)
        return " ".join(parts)


def eval_sign_condition(m, sign, spec):
    """Decide q^m = 1 (sign=+1) or q^m = -1 (sign=-1) for a symbolic spec.

    Returns True, False or None; None only when the answer depends on the
    unknown sign of q^e.  In char 2 the target -1 is never reported true
    (callers fold 2 = 0 separately).
    """
    if spec.is_concrete():
        return spec.q_power_is(m, sign)
    e, p = spec.e, spec.p
    if sign < 0 and p == 2:
        return False
    if e is None:
        if sign > 0:
            return m == 0
        return False
    if m % e != 0:
        return False
    t = m // e
    s = spec.sign_q_to_e()
    if t % 2 == 0:
        val = 1
    elif s == 0:
        return None
    else:
        val = s
    return val == sign


# spec-facing functional aliases ------------------------------------------

def lp_arith(x, y, op):
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError("unknown op %r" % op)


def lp_normalize_unit(x):
    return x.normalize_unit()


def lp_substitute_r(x, sign, a):
    return x.substitute_r(sign, a)


def lp_specialize(x, spec):
    if not spec.is_concrete():
        raise ValueError("specialization needs a concrete spec")
    return PrimeFieldElem(x.specialize(spec.p, spec.q0, spec.r0), spec.p)
