"""Closed-form expansions of the restricted inversion polynomial.

Three routes to the same polynomial: one term per fiber base point, the
b-coefficients (last-window entry statistics), and the a-coefficients
(high-entry prefix statistics).  Each result carries the smallest n at
which its formula is guaranteed to count; evaluating as a count below
that floor raises, while raw polynomial evaluation is always available.
"""

from __future__ import annotations

from dataclasses import dataclass

from invpoly.enumeration import a_counts, b_counts, fiber_data
from invpoly.errors import (
    BelowValidityFloorError,
    InadmissibleSetError,
    InputError,
)
from invpoly.model import HSequence, PairSet, is_admissible
from invpoly.polynomials import BinomialPoly, binom
from invpoly.posets import build_poset


@dataclass(frozen=True)
class CoeffSeq:
    """Integer coefficients with an explicit starting index."""

    values: tuple[int, ...]
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __getitem__(self, k: int) -> int:
        if not self.start <= k < self.start + len(self.values):
            raise IndexError(k)
        return self.values[k - self.start]

    def indices(self) -> range:
        return range(self.start, self.start + len(self.values))

    def to_json(self) -> dict:
        return {str(k): self[k] for k in self.indices()}


@dataclass(frozen=True)
class ExpansionResult:
    basis: str  # "fiber", "b", or "a"
    poly: BinomialPoly
    coeffs: CoeffSeq
    validity_floor: int

    def count_at(self, n: int) -> int:
        """Value as a permutation count; refuses n below the floor."""
        if n < self.validity_floor:
            raise BelowValidityFloorError(
                f"{self.basis}-expansion counts only for n >= "
                f"{self.validity_floor}, got {n}"
            )
        return self.poly(n)

    def eval_raw(self, n: int) -> int:
        """Value of the polynomial itself, any integer n."""
        return self.poly(n)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coeffs": self.coeffs.to_json(),
            "binomial_terms": self.poly.to_json()["terms"],
            "monomial": self.poly.to_monomial().to_json(),
            "validity_floor": self.validity_floor,
        }


def _require_admissible(h: HSequence, S: PairSet) -> None:
    if not S:
        raise InputError("expansion requested for the empty set; "
                         "use the constant-1 special case upstream")
    if not is_admissible(h, S):
        raise InadmissibleSetError(f"{S} is not h-admissible")


def _empty_result(basis: str) -> ExpansionResult:
    # Only the identity has no restricted inversions, at every n.
    return ExpansionResult(basis, BinomialPoly.constant(1), CoeffSeq((), 0), 1)


def fiber_expansion(h: HSequence, S: PairSet) -> ExpansionResult:
    """One term binom(n - t(sigma), j - t(sigma)) per base point sigma."""
    if not S:
        return _empty_result("fiber")
    _require_admissible(h, S)
    j = S.j()
    data = fiber_data(h, S)
    terms = tuple((1, fd.t_value, j - fd.t_value) for fd in data)
    t_counts: dict[int, int] = {}
    for fd in data:
        t_counts[fd.t_value] = t_counts.get(fd.t_value, 0) + 1
    lo = min(t_counts)
    coeffs = CoeffSeq(
        tuple(t_counts.get(t, 0) for t in range(lo, max(t_counts) + 1)), lo
    )
    return ExpansionResult("fiber", BinomialPoly(terms), coeffs, j)


def b_expansion(h: HSequence, S: PairSet) -> ExpansionResult:
    """b_k = #B_k(S, h(m)) for k = h(m)-m .. h(m)."""
    if not S:
        return _empty_result("b")
    _require_admissible(h, S)
    m = S.m()
    hm = h.h(m)
    coeffs = CoeffSeq(b_counts(h, S), hm - m)
    terms = tuple(
        (coeffs[k], k, hm - k) for k in coeffs.indices() if coeffs[k]
    )
    return ExpansionResult("b", BinomialPoly(terms), coeffs, hm)


def a_expansion(h: HSequence, S: PairSet) -> ExpansionResult:
    """a_k = #A*_k over the window m + h(m) - 1, for k = 0 .. m."""
    if not S:
        return _empty_result("a")
    _require_admissible(h, S)
    m = S.m()
    hm = h.h(m)
    aks = a_counts(h, S)
    coeffs = CoeffSeq(aks, 0)
    terms = tuple((aks[k], hm - 1, k) for k in range(m + 1) if aks[k])
    return ExpansionResult("a", BinomialPoly(terms), coeffs, hm)


def a_from_b(b: CoeffSeq, m: int, hm: int) -> CoeffSeq:
    """Convert b-coefficients to a-coefficients.

    a_0 = b_{h(m)} and a_k = sum over j = k..m of binom(j-1, k-1) * b_{h(m)-j}.
    """
    if b.start != hm - m or len(b.values) != m + 1:
        raise InputError(
            f"b-coefficients must be indexed {hm - m}..{hm}, "
            f"got start {b.start} with {len(b.values)} values"
        )
    if any(v < 0 for v in b.values):
        raise InputError("b-coefficients must be nonnegative")
    out = [b[hm]]
    for k in range(1, m + 1):
        out.append(sum(binom(j - 1, k - 1) * b[hm - j] for j in range(k, m + 1)))
    return CoeffSeq(tuple(out), 0)


def degree_of(h: HSequence, S: PairSet) -> int:
    """Degree of the inversion polynomial: h(m) - d_S."""
    from invpoly.posets import d_S_of

    if not S:
        return 0
    _require_admissible(h, S)
    return h.h(S.m()) - d_S_of(h, S)


def is_constant(h: HSequence, S: PairSet) -> bool:
    """Whether the inversion polynomial is constant in n.

    Checked two equivalent ways: the condition scan over i <= m (no i is
    both S-saturated above and S-free below) and the poset criterion
    (h(m) is the unique maximal element).  A disagreement would be a bug.
    """
    if not S:
        return True
    _require_admissible(h, S)
    m = S.m()
    s_pairs = set(S.pairs)

    def scan_hit(i: int) -> bool:
        full_above = all(
            (i, j) in s_pairs for j in range(i + 1, h.h(i) + 1)
        )
        free_below = all(
            (k, i) not in s_pairs for k in range(1, i) if i <= h.h(k)
        )
        return full_above and free_below

    by_scan = not any(scan_hit(i) for i in range(1, m + 1))

    P = build_poset(h, S)
    by_poset = P.maximal_elements() == {h.h(m)}
    if by_scan != by_poset:
        raise RuntimeError(
            f"constancy criteria disagree on {S}: scan {by_scan}, poset {by_poset}"
        )
    return by_scan
