"""Exact polynomial arithmetic and sequence analyzers.

Binomial coefficients use the polynomial convention
binom(x, d) = x(x-1)...(x-d+1)/d!, defined for every integer x, so that
expressions like binom(n-s, d) evaluate correctly below their support.
Everything here is arbitrary-precision integer or Fraction arithmetic;
no floats.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from invpoly.errors import InputError


def binom(n: int, k: int) -> int:
    """Falling-factorial binomial: n(n-1)...(n-k+1)/k!, any integer n."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= n - t
    return num // math.factorial(k)


@dataclass(frozen=True)
class BinomialPoly:
    """Sum of terms c * binom(n - s, d), normalized by (d, s)."""

    terms: tuple[tuple[int, int, int], ...]  # (coeff, shift, degree)

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for c, s, d in self.terms:
            if d < 0:
                raise InputError(f"negative degree in term ({c},{s},{d})")
            merged[(d, s)] = merged.get((d, s), 0) + c
        norm = tuple(
            (c, s, d) for (d, s), c in sorted(merged.items()) if c != 0
        )
        object.__setattr__(self, "terms", norm)

    def __call__(self, n: int) -> int:
        return sum(c * binom(n - s, d) for c, s, d in self.terms)

    def __add__(self, other: "BinomialPoly") -> "BinomialPoly":
        return BinomialPoly(self.terms + other.terms)

    def to_monomial(self) -> "MonomialPoly":
        """Exact conversion to the monomial basis in n."""
        total: list[Fraction] = []
        for c, s, d in self.terms:
            # expand c/d! * (n-s)(n-s-1)...(n-s-d+1)
            poly = [Fraction(c, math.factorial(d))]
            for t in range(d):
                root = s + t
                poly = [Fraction(0)] + poly
                for p in range(len(poly) - 1):
                    poly[p] -= root * poly[p + 1]
            if len(total) < len(poly):
                total += [Fraction(0)] * (len(poly) - len(total))
            for p, coef in enumerate(poly):
                total[p] += coef
        return MonomialPoly(tuple(total))

    def to_json(self) -> dict:
        return {"terms": [{"c": c, "s": s, "d": d} for c, s, d in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "BinomialPoly":
        return cls(tuple((t["c"], t["s"], t["d"]) for t in data["terms"]))

    @classmethod
    def constant(cls, c: int) -> "BinomialPoly":
        return cls(((c, 0, 0),))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for c, s, d in self.terms:
            shift = f"n-{s}" if s > 0 else ("n" if s == 0 else f"n+{-s}")
            bits.append(f"{c}*C({shift},{d})")
        return " + ".join(bits)


@dataclass(frozen=True)
class MonomialPoly:
    """Dense polynomial in n with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def degree(self) -> int:
        """Degree, with the zero polynomial assigned degree 0."""
        return max(len(self.coeffs) - 1, 0)

    def __call__(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def to_json(self) -> dict:
        return {
            "num": [c.numerator for c in self.coeffs],
            "den": [c.denominator for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonomialPoly":
        return cls(tuple(Fraction(n, d) for n, d in zip(data["num"], data["den"])))

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for p, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if p == 0:
                bits.append(str(c))
            elif p == 1:
                bits.append(f"{c}*n")
            else:
                bits.append(f"{c}*n^{p}")
        return " + ".join(bits)


@dataclass(frozen=True)
class QPoly:
    """Dense exact-integer polynomial in q (also used for the Poincare t)."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPoly":
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPoly":
        """Generating function sum q^e over a multiset of exponents."""
        exps = list(exponents)
        if not exps:
            return cls.zero()
        cs = [0] * (max(exps) + 1)
        for e in exps:
            cs[e] += 1
        return cls(tuple(cs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for p, c in enumerate(b):
            out[p] += c
        return QPoly(tuple(out))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + QPoly(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for p, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for r, b in enumerate(other.coeffs):
                out[p + r] += a * b
        return QPoly(tuple(out))

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls(tuple(data["coeffs"]))

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for p, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if p == 0:
                bits.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                bits.append(f"{head}q^{p}" if p > 1 else f"{head}q")
        return " + ".join(bits)


def eval_binomial_poly(p: BinomialPoly, n: int) -> int:
    return p(n)


def to_monomial(p: BinomialPoly) -> MonomialPoly:
    return p.to_monomial()


def q_binom(n: int, k: int) -> QPoly:
    """Gaussian binomial via the Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].

    Division-free and exact; the subset-length model of q_binom_subset_model
    is the independent cross-check.
    """
    if k < 0 or k > n:
        return QPoly.zero()
    row = [QPoly.one()]  # row for n' = 0
    for np in range(1, n + 1):
        new = [QPoly.one()]
        for kp in range(1, min(np, k) + 1):
            left = row[kp - 1]
            right = row[kp] if kp < np else QPoly.zero()
            new.append(left + QPoly.monomial(kp) * right)
        row = new
    return row[k]


def subset_length(A: Iterable[int], lo: int, hi: int) -> int:
    """Pairs (a, b) in [lo, hi]^2 with a > b, a in A, b not in A."""
    aset = set(A)
    if not aset <= set(range(lo, hi + 1)):
        raise InputError(f"subset {sorted(aset)} not contained in [{lo},{hi}]")
    return sum(
        1
        for a in aset
        for b in range(lo, a)
        if b not in aset
    )


def q_binom_subset_model(n: int, k: int) -> QPoly:
    """Subset-length generating function: sum over k-subsets A of [1, n] of
    q^len(A).  Equals q_binom(n, k) and serves as its oracle."""
    if k < 0 or k > n:
        return QPoly.zero()
    return QPoly.from_exponents(
        subset_length(A, 1, n)
        for A in itertools.combinations(range(1, n + 1), k)
    )


def is_log_concave(values: Sequence[int]) -> bool:
    """Weak log-concavity: a_i^2 >= a_{i-1} a_{i+1} at every interior index.

    The strict form fails on constant sequences like (1, 1, 1) which the
    theory explicitly covers, so the weak form is the operative one.
    """
    return all(
        values[i] * values[i] >= values[i - 1] * values[i + 1]
        for i in range(1, len(values) - 1)
    )


def has_no_internal_zeros(values: Sequence[int]) -> bool:
    """Support of the sequence is a contiguous index interval."""
    support = [i for i, v in enumerate(values) if v != 0]
    if not support:
        return True
    return all(values[i] != 0 for i in range(support[0], support[-1] + 1))


def is_pf2(values: Sequence[int]) -> bool:
    """All 2x2 minors of the shifted two-row arrays are nonnegative.

    Finite criterion: a_j a_{i+k} - a_i a_{j+k} >= 0 for all i < j, k >= 0,
    with out-of-range entries read as 0.  Equivalent to weakly log-concave
    with contiguous support for nonnegative sequences.
    """
    vals = list(values)
    if any(v < 0 for v in vals):
        raise InputError("PF2 test requires nonnegative entries")
    L = len(vals)

    def at(p):
        return vals[p] if 0 <= p < L else 0

    for i in range(L):
        for j in range(i + 1, L):
            for k in range(L - i):
                if at(j) * at(i + k) - at(i) * at(j + k) < 0:
                    return False
    return True


def q_seq_strongly_log_concave(fs: Sequence[QPoly]) -> bool:
    """Coefficientwise f_i f_j - f_{i-1} f_{j+1} >= 0 for all i <= j.

    Out-of-range entries are the zero polynomial.
    """
    L = len(fs)

    def at(p):
        return fs[p] if 0 <= p < L else QPoly.zero()

    for i in range(L):
        for j in range(i, L):
            if not (at(i) * at(j) - at(i - 1) * at(j + 1)).is_nonnegative():
                return False
    return True
