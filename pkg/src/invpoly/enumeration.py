"""Brute-force oracle over S_n and the constructive permutation sets.

Everything here enumerates honestly: a full sweep over S_n for the oracle
entry points, and a structured sweep (entries after the maximum descent
kept increasing, which every member of the target set satisfies) for the
larger windows needed by the coefficient sets.  The sweeps run through
the selected kernel backend (see invpoly.kernels).
"""

from __future__ import annotations

from dataclasses import dataclass

from invpoly import config, kernels
from invpoly.errors import BoundExceededError, InputError
from invpoly.model import (
    HSequence,
    PairSet,
    Permutation,
    inv_h,
    possible_pairs,
)
from invpoly.polynomials import QPoly


def _check_bound(n: int, bound: int | None) -> None:
    cap = config.max_n() if bound is None else bound
    if n > cap:
        raise BoundExceededError(
            f"brute-force enumeration at n={n} exceeds the cap {cap}"
        )


def _pair_window(h: HSequence, n: int) -> tuple[tuple[int, int], ...]:
    return possible_pairs(h, n).pairs


def _mask_of(S: PairSet, window: tuple[tuple[int, int], ...]) -> int | None:
    """Bitmask of S relative to the candidate-pair window; None if S leaks."""
    index = {p: b for b, p in enumerate(window)}
    mask = 0
    for p in S:
        b = index.get(p)
        if b is None:
            return None
        mask |= 1 << b
    return mask


def _unmask(mask: int, window: tuple[tuple[int, int], ...]) -> PairSet:
    return PairSet(p for b, p in enumerate(window) if mask >> b & 1)


def enumerate_Ih(
    h: HSequence, S: PairSet, n: int, bound: int | None = None
) -> list[Permutation]:
    """All permutations of [n] with restricted inversion set exactly S."""
    _check_bound(n, bound)
    window = _pair_window(h, n)
    mask = _mask_of(S, window)
    if mask is None:
        return []
    perms = kernels.matching_perms(n, window, mask)
    return [Permutation(p) for p in sorted(perms)]


def enumerate_Ih_structured(h: HSequence, S: PairSet, n: int) -> list[Permutation]:
    """Same set as enumerate_Ih for nonempty admissible S, but sweeping only
    words that increase after position m(S).  Not bound-capped: the sweep
    size is n!/(n-m)!, not n!."""
    if not S:
        return [Permutation.identity(n)]
    m = S.m()
    window = _pair_window(h, n)
    mask = _mask_of(S, window)
    if mask is None:
        return []
    perms = kernels.matching_perms_sorted_suffix(n, m, window, mask)
    return [Permutation(p) for p in sorted(perms)]


def t_of(sigma: Permutation, h: HSequence, S: PairSet) -> int:
    """max sigma_k over positions k with k < j(S)+1 <= h(k)."""
    j = S.j()
    return max(sigma.word[k - 1] for k in range(1, j + 1) if h.h(k) >= j + 1)


@dataclass(frozen=True)
class FiberDatum:
    sigma: Permutation
    t_value: int


def fiber_data(h: HSequence, S: PairSet, bound: int | None = None) -> list[FiberDatum]:
    """One datum per element of I_h(S, j(S)): the base point and its t-value."""
    j = S.j()
    return [
        FiberDatum(sigma, t_of(sigma, h, S))
        for sigma in enumerate_Ih(h, S, j, bound)
    ]


def B_k_set(
    h: HSequence, S: PairSet, n: int, k: int, bound: int | None = None
) -> list[Permutation]:
    """Members of I_h(S, n) whose entry at position h(m(S)) equals k."""
    hm = h.h(S.m())
    if n < hm:
        raise InputError(f"B_k sets need n >= h(m) = {hm}, got n={n}")
    pos = hm - 1
    return [
        pi for pi in enumerate_Ih_structured(h, S, n) if pi.word[pos] == k
    ]


def b_counts(h: HSequence, S: PairSet) -> tuple[int, ...]:
    """Sizes of B_k(S, h(m)) for k = h(m)-m .. h(m), in one sweep."""
    m = S.m()
    hm = h.h(m)
    counts = [0] * (m + 1)
    for pi in enumerate_Ih_structured(h, S, hm):
        k = pi.word[hm - 1]
        if hm - m <= k <= hm:
            counts[k - (hm - m)] += 1
    return tuple(counts)


def a_counts(h: HSequence, S: PairSet) -> tuple[int, ...]:
    """Sizes of A*_k for k = 0 .. m, in one sweep of the window m+h(m)-1."""
    m = S.m()
    hm = h.h(m)
    counts = [0] * (m + 1)
    for pi in enumerate_Ih_structured(h, S, m + hm - 1):
        high = sorted(v for v in pi.word[:m] if v >= hm)
        if high == list(range(hm, hm + len(high))):
            counts[len(high)] += 1
    return tuple(counts)


def A_star_set(h: HSequence, S: PairSet, k: int) -> list[Permutation]:
    """Members of I_h(S, m + h(m) - 1) whose large entries among the first m
    positions form exactly the interval [h(m), h(m)+k-1]."""
    m = S.m()
    hm = h.h(m)
    N = m + hm - 1
    want = frozenset(range(hm, hm + k))
    out = []
    for pi in enumerate_Ih_structured(h, S, N):
        high = frozenset(v for v in pi.word[:m] if v >= hm)
        if high == want:
            out.append(pi)
    return out


def enumerate_admissible(
    h: HSequence, n: int, bound: int | None = None
) -> dict[PairSet, int]:
    """Group S_n by restricted inversion set; counts sum to n!."""
    _check_bound(n, bound)
    window = _pair_window(h, n)
    counts = kernels.admissible_counts(n, window)
    return {_unmask(mask, window): c for mask, c in counts.items()}


def poincare(h: HSequence, n: int, bound: int | None = None) -> QPoly:
    """Generating function sum over S_n of t^(2 * #inv_h(pi)).

    For an indecomposable Hessenberg function this is the Poincare
    polynomial of the associated regular semisimple Hessenberg variety.
    """
    _check_bound(n, bound)
    window = _pair_window(h, n)
    counts = kernels.admissible_counts(n, window)
    exps: dict[int, int] = {}
    for mask, c in counts.items():
        e = 2 * mask.bit_count()
        exps[e] = exps.get(e, 0) + c
    cs = [0] * (max(exps) + 1 if exps else 1)
    for e, c in exps.items():
        cs[e] = c
    return QPoly(tuple(cs))


def graded_Ih_oracle(
    h: HSequence, S: PairSet, n: int, bound: int | None = None
) -> QPoly:
    """Length generating function over I_h(S, n)."""
    return QPoly.from_exponents(
        pi.length() for pi in enumerate_Ih(h, S, n, bound)
    )
