# cython: boundscheck=False, wraparound=False
"""Compiled matching kernels; same contract as brauer._matchops."""

cdef int MAXN = 512

def compose_partners(lower, int k, int mid, upper, int top):
    cdef int n = k + top
    cdef int[512] res
    cdef int[512] low
    cdef int[512] upp
    cdef int[512] mid_seen
    cdef int i, start, node, p, j, j2, cur, end, loops, in_upper

    if n > MAXN or k + mid > MAXN or mid + top > MAXN:
        from brauer import _matchops
        return _matchops.compose_partners(lower, k, mid, upper, top)

    for i in range(k + mid):
        low[i] = lower[i]
    for i in range(mid + top):
        upp[i] = upper[i]
    for i in range(n):
        res[i] = -1
    for i in range(mid):
        mid_seen[i] = 0

    for start in range(n):
        if res[start] >= 0:
            continue
        if start < k:
            in_upper = 0
            node = start
        else:
            in_upper = 1
            node = mid + (start - k)
        end = -1
        while end < 0:
            if in_upper:
                p = upp[node]
                if p >= mid:
                    end = k + (p - mid)
                else:
                    mid_seen[p] = 1
                    in_upper = 0
                    node = k + p
            else:
                p = low[node]
                if p < k:
                    end = p
                else:
                    j = p - k
                    mid_seen[j] = 1
                    in_upper = 1
                    node = j
        res[start] = end
        res[end] = start

    loops = 0
    for j in range(mid):
        if mid_seen[j]:
            continue
        loops += 1
        cur = j
        while True:
            mid_seen[cur] = 1
            j2 = low[k + cur] - k
            mid_seen[j2] = 1
            cur = upp[j2]
            if cur == j:
                break
    return loops, tuple([res[i] for i in range(n)])


def closure_cycles(partner, int r):
    cdef int n = 2 * r
    cdef int[512] part
    cdef int[512] seen
    cdef int i, s, cur, p, cycles

    if n > MAXN:
        from brauer import _matchops
        return _matchops.closure_cycles(partner, r)

    for i in range(n):
        part[i] = partner[i]
        seen[i] = 0
    cycles = 0
    for s in range(n):
        if seen[s]:
            continue
        cycles += 1
        cur = s
        while not seen[cur]:
            seen[cur] = 1
            p = part[cur]
            seen[p] = 1
            if p < r:
                cur = p + r
            else:
                cur = p - r
    return cycles
