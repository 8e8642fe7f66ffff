"""Pure-Python permutation-sweep kernels.

Each kernel walks permutations of [n] and classifies them by which of the
supplied candidate pairs (i, j) are inversions.  The classification is a
bitmask over the pair list, so callers compare sets with integer equality.
These are the reference implementations; invpoly._core provides compiled
equivalents with identical signatures and outputs.
"""

import itertools


def _indexed(pairs):
    return [(i - 1, j - 1, 1 << b) for b, (i, j) in enumerate(pairs)]


def admissible_counts(n, pairs):
    """Map inversion-bitmask -> number of permutations of [n] attaining it."""
    idx = _indexed(pairs)
    counts = {}
    for perm in itertools.permutations(range(1, n + 1)):
        mask = 0
        for a, b, bit in idx:
            if perm[a] > perm[b]:
                mask |= bit
        counts[mask] = counts.get(mask, 0) + 1
    return counts


def matching_perms(n, pairs, target):
    """All permutations of [n] whose inversion bitmask equals target."""
    idx = _indexed(pairs)
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        mask = 0
        for a, b, bit in idx:
            if perm[a] > perm[b]:
                mask |= bit
        if mask == target:
            out.append(perm)
    return out


def matching_perms_sorted_suffix(n, m, pairs, target):
    """Like matching_perms, restricted to words increasing after position m.

    Only valid when every matching permutation is known to have that shape
    (true when target encodes an admissible set with maximum descent m).
    """
    idx = _indexed(pairs)
    universe = range(1, n + 1)
    # pairs inside the prefix are decided once their later position is
    # placed; group them by that depth so contradicted heads prune early
    by_depth = [[] for _ in range(m)]
    for a, b, bit in idx:
        if b < m:
            by_depth[max(a, b)].append((a, b, bit))
    out = []

    def extend(head, used):
        depth = len(head)
        if depth == m:
            perm = tuple(head) + tuple(v for v in universe if v not in used)
            mask = 0
            for a, b, bit in idx:
                if perm[a] > perm[b]:
                    mask |= bit
            if mask == target:
                out.append(perm)
            return
        for v in universe:
            if v in used:
                continue
            head.append(v)
            if all(
                (head[a] > head[b]) == bool(target & bit)
                for a, b, bit in by_depth[depth]
            ):
                used.add(v)
                extend(head, used)
                used.remove(v)
            head.pop()

    extend([], set())
    return out
