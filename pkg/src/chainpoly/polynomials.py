"""Exact univariate polynomials over the rationals.

Besides arithmetic, this module decides real-rootedness and interlacing
exactly (Sturm sequences on squarefree parts, rational bisection) and
provides the Eulerian-type generators used throughout the package.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from itertools import permutations, product
from typing import Iterable, Sequence

Rational = Fraction


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c.strip())
    return Fraction(c)


class Poly:
    """Dense polynomial, coefficients in ascending degree.

    Instances are immutable. The zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    # -- basic protocol ----------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                cstr = "" if mag == 1 else (f"({mag})" if mag.denominator != 1 else str(mag))
                term = cstr + ("x" if k == 1 else f"x^{k}")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append((" - " if c < 0 else " + ") + term)
        return "".join(parts)

    def int_coeffs(self) -> list[int]:
        """Coefficients as Python ints; raises if any is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return out

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _frac(other)
            return Poly(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[k + j] -= c * cb
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Poly([0] * k + list(self.coeffs))

    def reversed(self, n: int | None = None) -> "Poly":
        """x**n * p(1/x) with n defaulting to the degree."""
        if n is None:
            n = self.degree
        if self.degree > n:
            raise ValueError("degree exceeds reversal length")
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs))

    # -- serialization ------------------------------------------------
    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str] | str) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Fraction(s) for s in data)


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


def _int_coeffs_primitive(p: Poly) -> list[int]:
    """Coprime integer coefficients of a positive multiple of p (ascending)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def _prem_primitive(a: list[int], b: list[int]) -> list[int]:
    """Primitive part of |lc(b)|^k a mod b over the integers, k = deg a - deg b + 1.

    The multiplier is positive, so the result is a positive multiple of a % b.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    k = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        k -= 1
        while r and r[-1] == 0:
            r.pop()
    if r and k > 0:
        r = [c * lb ** k for c in r]
    if r and lb < 0 and (len(a) - len(b) + 1) % 2:
        r = [-c for c in r]
    g = 0
    for v in r:
        g = gcd(g, v)
    return [v // g for v in r] if g > 1 else r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x, y = _int_coeffs_primitive(a), _int_coeffs_primitive(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _prem_primitive(x, y)
    return Poly(x).monic()


def h_transform(f: Poly, n: int) -> Poly:
    """Return (1-x)^n f(x/(1-x)) for deg f <= n."""
    if f.degree > n:
        raise ValueError("degree of f exceeds n")
    one_minus = Poly((1, -1))
    out = Poly()
    for i, c in enumerate(f.coeffs):
        if c:
            out = out + (one_minus ** (n - i)).shift_degree(i) * c
    return out


# -- squarefree machinery -------------------------------------------

def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p.monic() if not p.is_zero() else p
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic, pairwise coprime squarefree factors with multiplicities."""
    if p.degree <= 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        k += 1
    return out


# -- Sturm sequences ------------------------------------------------

def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm sequence of p, each term rescaled by a positive constant to primitive integers."""
    if p.is_zero():
        return []
    seq = [_int_coeffs_primitive(p)]
    d = p.derivative()
    if not d.is_zero():
        seq.append(_int_coeffs_primitive(d))
        while True:
            r = _prem_primitive(seq[-2], seq[-1])
            if not r:
                break
            seq.append([-c for c in r])
    return [Poly(q) for q in seq]


class _IntSeq:
    """Sturm sequence held as integer coefficient tuples for fast sign evaluation."""

    __slots__ = ("polys", "at_pos", "at_neg")

    def __init__(self, seq: Sequence[Poly]):
        self.polys = [tuple(int(c) for c in q.coeffs) for q in seq]
        self.at_pos = _sign_changes(q[-1] for q in self.polys)
        self.at_neg = _sign_changes(q[-1] * (-1) ** (len(q) - 1) for q in self.polys)

    def variations(self, x) -> int:
        if x == POS_INF:
            return self.at_pos
        if x == NEG_INF:
            return self.at_neg
        num, den = x.numerator, x.denominator
        vals = []
        for c in self.polys:
            # sign of q(num/den) equals sign of den^deg * q(num/den)
            acc = 0
            scale = 1
            for coef in reversed(c):
                acc = acc * num + coef * scale
                scale *= den
            vals.append(acc)
        return _sign_changes(vals)


def _sign_changes(values) -> int:
    count, last = 0, 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def _compile(seq) -> _IntSeq:
    return seq if isinstance(seq, _IntSeq) else _IntSeq(seq)


NEG_INF = float("-inf")
POS_INF = float("inf")


def _sturm_count_seq(seq, lo, hi) -> int:
    seq = _compile(seq)
    return seq.variations(lo) - seq.variations(hi)


def sturm_count(p: Poly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if lo != NEG_INF:
        lo = _frac(lo)
    if hi != POS_INF:
        hi = _frac(hi)
    if hi != POS_INF and lo != NEG_INF and hi < lo:
        raise ValueError("empty interval")
    s = squarefree_part(p)
    if s.degree <= 0:
        return 0
    return _sturm_count_seq(sturm_sequence(s), lo, hi)


def is_real_rooted(p: Poly) -> bool:
    """True when every complex root of ``p`` is real (the zero polynomial counts)."""
    if p.degree <= 0:
        return True
    s = squarefree_part(p)
    return _sturm_count_seq(sturm_sequence(s), NEG_INF, POS_INF) == s.degree


def cauchy_bound(p: Poly) -> Fraction:
    """Rational B with every root of p in (-B, B)."""
    lc = abs(p.lead)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint half-open intervals (lo, hi], one distinct real root each, ascending."""

    poly: Poly
    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]

    def refine(self, width) -> "RootIsolation":
        """Bisect every interval until hi - lo <= width."""
        width = _frac(width)
        if width <= 0:
            raise ValueError("width must be positive")
        seq = _compile(sturm_sequence(squarefree_part(self.poly)))
        out = []
        for lo, hi in self.intervals:
            while hi - lo > width:
                mid = (lo + hi) / 2
                if _sturm_count_seq(seq, lo, mid):
                    hi = mid
                else:
                    lo = mid
            out.append((lo, hi))
        return RootIsolation(self.poly, tuple(out), self.multiplicities)

    def is_real_rooted(self) -> bool:
        return sum(self.multiplicities) == self.poly.degree

    def to_json(self) -> dict:
        return {
            "intervals": [[f"{a.numerator}/{a.denominator}", f"{b.numerator}/{b.denominator}"]
                          for a, b in self.intervals],
            "multiplicities": list(self.multiplicities),
        }


def _isolate_squarefree(s: Poly) -> list[tuple[Fraction, Fraction]]:
    seq = _compile(sturm_sequence(s))
    bound = cauchy_bound(s)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = _sturm_count_seq(seq, lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def isolate_roots(p: Poly) -> RootIsolation:
    """Isolating intervals of the distinct real roots of ``p`` with multiplicities."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return RootIsolation(p, (), ())
    factors = [(_compile(sturm_sequence(f)), k) for f, k in squarefree_decomposition(p)]
    s = squarefree_part(p)
    intervals = _isolate_squarefree(s)
    mults = []
    for lo, hi in intervals:
        m = 0
        for f, k in factors:
            if _sturm_count_seq(f, lo, hi):
                m = k
                break
        mults.append(m)
    return RootIsolation(p, tuple(intervals), tuple(mults))


def interlaces(f: Poly, g: Poly) -> bool:
    """Does ``f`` interlace ``g``?

    Both must be real-rooted; with roots a1 >= a2 >= ... of f and
    b1 >= b2 >= ... of g the chain ... <= a2 <= b2 <= a1 <= b1 must hold.
    The zero polynomial interlaces, and is interlaced by, every real-rooted
    polynomial.
    """
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return False
    if f.is_zero() or g.is_zero():
        return True
    if f.degree == 0 and g.degree == 0:
        return True
    fg = f * g
    iso = _isolate_squarefree(squarefree_part(fg))
    ffac = [(_compile(sturm_sequence(fac)), k) for fac, k in squarefree_decomposition(f)]
    gfac = [(_compile(sturm_sequence(fac)), k) for fac, k in squarefree_decomposition(g)]

    def mult(factors, lo, hi):
        for seq, k in factors:
            if _sturm_count_seq(seq, lo, hi):
                return k
        return 0

    # Walk the distinct roots from the largest down; the merged sequence
    # must read g, f, g, f, ... with ties allowed inside a block.
    pos = 0
    for lo, hi in reversed(iso):
        a = mult(ffac, lo, hi)
        b = mult(gfac, lo, hi)
        length = a + b
        evens = (pos + length + 1) // 2 - (pos + 1) // 2
        if evens != b:
            return False
        pos += length
    return True


def is_interlacing_sequence(fs: Sequence[Poly]) -> bool:
    fs = list(fs)
    return all(interlaces(fs[i], fs[j]) for i in range(len(fs)) for j in range(i + 1, len(fs)))


def lemma_combine(fs: Sequence[Poly]) -> list[Poly]:
    """g_k = x * (f_0 + ... + f_{k-1}) + (f_k + ... + f_m), k = 0..m+1."""
    fs = list(fs)
    if not fs:
        raise ValueError("lemma_combine needs a nonempty sequence")
    total = sum(fs, Poly())
    out = []
    head = Poly()
    for k in range(len(fs) + 1):
        out.append(head.shift_degree(1) + (total - head))
        if k < len(fs):
            head = head + fs[k]
    return out


class SymmetryError(ValueError):
    pass


def gamma_decompose(p: Poly, n: int) -> list[Fraction]:
    """Coefficients gamma_i with p = sum gamma_i x^i (1+x)^(n-2i).

    Raises SymmetryError unless a_i = a_{n-i} for all i.
    """
    if p.degree > n:
        raise SymmetryError(f"degree {p.degree} exceeds {n}")
    for i in range(n + 1):
        if p[i] != p[n - i]:
            raise SymmetryError(f"a_{i} = {p[i]} but a_{n - i} = {p[n - i]}")
    rest = p
    gammas = []
    one_plus = Poly((1, 1))
    for i in range(n // 2 + 1):
        g = rest[i]
        gammas.append(g)
        if g:
            rest = rest - (one_plus ** (n - 2 * i)).shift_degree(i) * g
    if not rest.is_zero():
        raise SymmetryError("residual after gamma expansion")
    return gammas


def gamma_expand(gammas: Sequence, n: int) -> Poly:
    one_plus = Poly((1, 1))
    out = Poly()
    for i, g in enumerate(gammas):
        out = out + (one_plus ** (n - 2 * i)).shift_degree(i) * g
    return out


# -- Eulerian polynomials -------------------------------------------

@lru_cache(maxsize=None)
def eulerian_A(n: int) -> Poly:
    """A_n(x) = sum over permutations of [n] of x^des, via the Eulerian-number recurrence."""
    if n <= 0:
        raise ValueError("n must be positive")
    row = [1]
    for m in range(2, n + 1):
        new = [0] * m
        for k in range(m):
            a = row[k] if k < len(row) else 0
            b = row[k - 1] if 0 < k <= len(row) else 0
            new[k] = (k + 1) * a + (m - k) * b
        row = new
    return Poly(row)


@lru_cache(maxsize=None)
def eulerian_B(n: int) -> Poly:
    """Type-B Eulerian polynomial, descents of signed permutations with w_0 = 0."""
    if n <= 0:
        raise ValueError("n must be positive")
    row = [1, 1]
    for m in range(2, n + 1):
        new = [0] * (m + 1)
        for k in range(m + 1):
            a = row[k] if k < len(row) else 0
            b = row[k - 1] if 0 < k <= len(row) else 0
            new[k] = (2 * k + 1) * a + (2 * m - 2 * k + 1) * b
        row = new
    return Poly(row)


def eulerian_Aq_rows(n: int, q) -> list[Poly]:
    """The polynomials A_{n,k}(x;q), k = 1..n, permutations of [n] ending in k."""
    if n <= 0:
        raise ValueError("n must be positive")
    q = _frac(q)
    if q <= 0:
        raise ValueError("q must be positive")
    rows = [ONE]
    for m in range(1, n):
        # rows holds A_{m,1..m}; build A_{m+1,k} for k in [m+1]
        new = []
        for k in range(1, m + 2):
            low = sum(rows[: k - 1], Poly())
            high = sum(rows[k - 1:], Poly())
            new.append((low + high.shift_degree(1)) * q ** (m + 1 - k))
        rows = new
    return rows


def eulerian_Aq(n: int, q) -> Poly:
    """A_n(x;q) = sum_w q^inv(w) x^des(w), through the last-letter recurrence."""
    return eulerian_Aq_rows(n + 1, q)[-1]


# -- brute-force oracles (small n) ------------------------------------

def descents(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def eulerian_A_bruteforce(n: int) -> Poly:
    counts = [0] * n
    for w in permutations(range(1, n + 1)):
        counts[descents(w)] += 1
    return Poly(counts)


def eulerian_B_bruteforce(n: int) -> Poly:
    counts = [0] * (n + 1)
    for w in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            s = (0,) + tuple(a * b for a, b in zip(signs, w))
            counts[descents(s)] += 1
    return Poly(counts)


def eulerian_Aq_bruteforce(n: int, q) -> Poly:
    q = _frac(q)
    out = Poly()
    for w in permutations(range(1, n + 1)):
        out = out + Poly.monomial(descents(w), q ** inversions(w))
    return out
