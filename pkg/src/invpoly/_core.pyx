# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation-sweep kernels.

Same contracts as invpoly._pure; masks are kept in a C uint64, so these
kernels only accept up to 64 candidate pairs.  The dispatcher falls back
to the pure implementation beyond that.
"""

from libc.stdint cimport uint64_t

MAX_PAIRS = 64
MAX_N = 16


cdef bint _next_perm(int* a, int n) noexcept:
    # Lexicographic successor in place; returns False after the last word.
    cdef int i = n - 2
    cdef int j, tmp, lo, hi
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    lo = i + 1; hi = n - 1
    while lo < hi:
        tmp = a[lo]; a[lo] = a[hi]; a[hi] = tmp
        lo += 1; hi -= 1
    return True


cdef int _load_pairs(object pairs, int* pa, int* pb) except -1:
    cdef int npairs = len(pairs)
    cdef int t
    if npairs > MAX_PAIRS:
        raise ValueError("compiled kernel supports at most 64 candidate pairs")
    for t in range(npairs):
        pa[t] = pairs[t][0] - 1
        pb[t] = pairs[t][1] - 1
    return npairs


def admissible_counts(int n, pairs):
    cdef int pa[64]
    cdef int pb[64]
    cdef int perm[16]
    cdef int npairs, t, k
    cdef uint64_t mask
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 16")
    npairs = _load_pairs(pairs, pa, pb)
    for k in range(n):
        perm[k] = k + 1
    counts = {}
    while True:
        mask = 0
        for t in range(npairs):
            if perm[pa[t]] > perm[pb[t]]:
                mask |= (<uint64_t>1) << t
        counts[mask] = counts.get(mask, 0) + 1
        if not _next_perm(perm, n):
            break
    return counts


def matching_perms(int n, pairs, object target):
    cdef int pa[64]
    cdef int pb[64]
    cdef int perm[16]
    cdef int npairs, t, k
    cdef uint64_t mask, want
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 16")
    npairs = _load_pairs(pairs, pa, pb)
    want = <uint64_t>target
    for k in range(n):
        perm[k] = k + 1
    out = []
    while True:
        mask = 0
        for t in range(npairs):
            if perm[pa[t]] > perm[pb[t]]:
                mask |= (<uint64_t>1) << t
        if mask == want:
            out.append(tuple([perm[k] for k in range(n)]))
        if not _next_perm(perm, n):
            break
    return out


def matching_perms_sorted_suffix(int n, int m, pairs, object target):
    # Backtracks over ordered prefixes of length m; the suffix is the
    # complement in increasing order.
    cdef int pa[64]
    cdef int pb[64]
    cdef int perm[16]
    cdef bint used[17]
    cdef int stack[16]
    cdef int dep_off[17]
    cdef int dep_pairs[64]
    cdef int npairs, t, k, depth, v, pos, d, w, ok
    cdef uint64_t mask, want
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 16")
    npairs = _load_pairs(pairs, pa, pb)
    want = <uint64_t>target
    out = []
    if m < 0 or m > n:
        return out
    # pairs with both positions in the prefix are decided as soon as the
    # later position is placed; group them by that depth for early pruning
    pos = 0
    for d in range(m):
        dep_off[d] = pos
        for t in range(npairs):
            if pb[t] < m and (pa[t] if pa[t] > pb[t] else pb[t]) == d:
                dep_pairs[pos] = t
                pos += 1
    dep_off[m] = pos
    if m == 0:
        mask = 0
        for k in range(n):
            perm[k] = k + 1
        for t in range(npairs):
            if perm[pa[t]] > perm[pb[t]]:
                mask |= (<uint64_t>1) << t
        if mask == want:
            out.append(tuple([perm[k] for k in range(n)]))
        return out
    for v in range(n + 1):
        used[v] = False
    depth = 0
    stack[0] = 0  # value currently placed at this depth (0 = none yet)
    while depth >= 0:
        v = stack[depth]
        if v > 0:
            used[v] = False
        v += 1
        while v <= n and used[v]:
            v += 1
        if v > n:
            stack[depth] = 0
            depth -= 1
            continue
        stack[depth] = v
        perm[depth] = v
        used[v] = True
        ok = 1
        for k in range(dep_off[depth], dep_off[depth + 1]):
            t = dep_pairs[k]
            if (perm[pa[t]] > perm[pb[t]]) != ((want >> t) & 1):
                ok = 0
                break
        if not ok:
            continue
        if depth == m - 1:
            # fill suffix with unused values ascending and test
            pos = m
            for k in range(1, n + 1):
                if not used[k]:
                    perm[pos] = k
                    pos += 1
            mask = 0
            for t in range(npairs):
                if perm[pa[t]] > perm[pb[t]]:
                    mask |= (<uint64_t>1) << t
            if mask == want:
                out.append(tuple([perm[k] for k in range(n)]))
        else:
            depth += 1
            stack[depth] = 0
    return out
