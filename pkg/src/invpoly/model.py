"""Core value types: h-sequences, permutations, and pair sets.

An h-sequence is a weakly increasing sequence of positive integers with
h(i) > i for every i, presented finitely as an explicit prefix followed by
an affine tail h(i) = i + t.  A pair set collects index pairs (i, j) with
i < j; the interesting ones are the restricted inversion sets of
permutations, i.e. inversions (i, j) with j <= h(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from invpoly.errors import InputError, NoDescentError


@dataclass(frozen=True)
class HSequence:
    """Finitely presented h-sequence: prefix values, then h(i) = i + t."""

    prefix: tuple[int, ...] = ()
    tail_offset: int = 1

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if self.tail_offset < 1:
            raise InputError(f"tail offset must be >= 1, got {self.tail_offset}")
        prev = 0
        for i, v in enumerate(self.prefix, start=1):
            if v <= i:
                raise InputError(f"h({i}) = {v} must exceed {i}")
            if v < prev:
                raise InputError("h-sequence must be weakly increasing")
            prev = v
        L = len(self.prefix)
        if L and self.prefix[-1] > (L + 1) + self.tail_offset:
            raise InputError(
                f"h({L}) = {self.prefix[-1]} exceeds the tail value "
                f"h({L + 1}) = {L + 1 + self.tail_offset}"
            )

    def h(self, i: int) -> int:
        """Value h(i), defined for every positive integer i."""
        if i < 1:
            raise InputError(f"index must be positive, got {i}")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return i + self.tail_offset

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "tail_offset": self.tail_offset}

    @classmethod
    def from_json(cls, data: dict) -> "HSequence":
        try:
            return cls(tuple(data["prefix"]), int(data["tail_offset"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad h-sequence JSON: {data!r}") from exc

    def __repr__(self):
        return f"HSequence(prefix={list(self.prefix)}, tail_offset={self.tail_offset})"


@dataclass(frozen=True)
class Permutation:
    """Permutation of [n] in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of [{n}]: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def inversions(self) -> "PairSet":
        w = self.word
        return PairSet(
            (i, j)
            for i, j in itertools.combinations(range(1, self.n + 1), 2)
            if w[i - 1] > w[j - 1]
        )

    def length(self) -> int:
        """Number of ordinary inversions."""
        w = self.word
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if w[i] > w[j]
        )

    def flatten(self, k: int) -> "Permutation":
        """Relabel the first k entries to a permutation of [k], keeping order."""
        if not 1 <= k <= self.n:
            raise InputError(f"flattening window {k} out of range for n={self.n}")
        head = self.word[:k]
        rank = {v: r for r, v in enumerate(sorted(head), start=1)}
        return Permutation(tuple(rank[v] for v in head))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.word, start=1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def to_json(self) -> list[int]:
        return list(self.word)

    @classmethod
    def from_json(cls, data) -> "Permutation":
        return cls(tuple(data))

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ".".join(str(v) for v in self.word)


class PairSet:
    """Canonically sorted finite set of pairs (i, j) with i < j."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        seen = set()
        for i, j in pairs:
            if i >= j:
                raise InputError(f"pair ({i},{j}) must have i < j")
            if i < 1:
                raise InputError(f"pair ({i},{j}) must have positive indices")
            seen.add((i, j))
        object.__setattr__(self, "pairs", tuple(sorted(seen)))

    def __setattr__(self, name, value):
        raise AttributeError("PairSet is immutable")

    def __reduce__(self):
        return (PairSet, (self.pairs,))

    def __contains__(self, pair) -> bool:
        return pair in set(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PairSet) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __le__(self, other: "PairSet") -> bool:
        return set(self.pairs) <= set(other.pairs)

    def minus(self, other: "PairSet") -> "PairSet":
        return PairSet(set(self.pairs) - set(other.pairs))

    def j(self) -> int:
        """Largest second index appearing in any pair."""
        if not self.pairs:
            raise InputError("j(S) is undefined for the empty set")
        return max(j for _, j in self.pairs)

    def m(self) -> int:
        """Largest i with (i, i+1) in the set (the maximum descent)."""
        descents = [i for i, j in self.pairs if j == i + 1]
        if not descents:
            if not self.pairs:
                raise InputError("m(S) is undefined for the empty set")
            raise NoDescentError(f"{self} contains no descent pair")
        return max(descents)

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in self.pairs]

    @classmethod
    def from_json(cls, data) -> "PairSet":
        try:
            return cls((int(i), int(j)) for i, j in data)
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad pair-set JSON: {data!r}") from exc

    def __repr__(self):
        inner = ", ".join(f"({i},{j})" for i, j in self.pairs)
        return "{" + inner + "}"


def j_of(S: PairSet) -> int:
    return S.j()


def m_of(S: PairSet) -> int:
    return S.m()


def possible_pairs(h: HSequence, n: int) -> PairSet:
    """All pairs (i, j) with i < j <= min(n, h(i)): the window of P_h."""
    if n < 1:
        raise InputError(f"window must be positive, got {n}")
    return PairSet(
        (i, j)
        for i in range(1, n)
        for j in range(i + 1, min(n, h.h(i)) + 1)
    )


def inv_h(h: HSequence, pi: Permutation) -> PairSet:
    """Restricted inversion set: inversions (i, j) of pi with j <= h(i)."""
    w = pi.word
    return PairSet(
        (i, j)
        for i in range(1, pi.n)
        for j in range(i + 1, min(pi.n, h.h(i)) + 1)
        if w[i - 1] > w[j - 1]
    )


def length(pi: Permutation) -> int:
    return pi.length()


def flatten(pi: Permutation, k: int) -> Permutation:
    return pi.flatten(k)


def is_h_closed(h: HSequence, pairs: PairSet, window: int) -> bool:
    """Closure under composition within the possible-pair window.

    Whenever (i, j) and (j, k) are in the set and (i, k) is a possible
    pair (k <= min(h(i), window)), (i, k) must be in the set too.
    """
    have = set(pairs.pairs)
    by_first: dict[int, list[int]] = {}
    for i, j in pairs:
        by_first.setdefault(i, []).append(j)
    for i, j in pairs:
        for k in by_first.get(j, ()):
            if k <= min(h.h(i), window) and (i, k) not in have:
                return False
    return True


def is_admissible(h: HSequence, S: PairSet) -> bool:
    """Whether S is the restricted inversion set of some permutation.

    Characterized by closure of S and of its complement within the
    possible pairs.  The complement is taken in the window [j(S)]; pairs
    with a larger second index can never interact with S, so widening the
    window cannot change the answer (exercised by the test suite against
    window j(S) + 2).
    """
    if not S:
        return True
    window = S.j()
    P = possible_pairs(h, window)
    if not S <= P:
        return False
    if not is_h_closed(h, S, window):
        return False
    return is_h_closed(h, P.minus(S), window)
