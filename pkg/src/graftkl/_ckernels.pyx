# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; a drop-in replacement for ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int32_t, uint64_t

cdef enum:
    NONE = -2147483647

UNREACHABLE = -1
MAX_DP_TERMINALS = 20
MAX_SCAN_EDGES = 30
MAX_TABLE_VERTICES = 20


cdef struct Csr:
    int n
    int *start
    int *nbr
    int *eidx


cdef int build_csr(Csr *g, int n, list tails, list heads) except -1:
    cdef int m = len(tails)
    cdef int k, a, b
    g.n = n
    g.start = <int *> malloc((n + 1) * sizeof(int))
    g.nbr = <int *> malloc((2 * m + 1) * sizeof(int))
    g.eidx = <int *> malloc((2 * m + 1) * sizeof(int))
    if g.start == NULL or g.nbr == NULL or g.eidx == NULL:
        free_csr(g)
        raise MemoryError()
    for k in range(n + 1):
        g.start[k] = 0
    for k in range(m):
        g.start[<int> tails[k] + 1] += 1
        g.start[<int> heads[k] + 1] += 1
    for k in range(n):
        g.start[k + 1] += g.start[k]
    cdef int *fill = <int *> malloc((n + 1) * sizeof(int))
    if fill == NULL:
        free_csr(g)
        raise MemoryError()
    for k in range(n):
        fill[k] = g.start[k]
    for k in range(m):
        a = tails[k]
        b = heads[k]
        g.nbr[fill[a]] = b
        g.eidx[fill[a]] = k
        fill[a] += 1
        g.nbr[fill[b]] = a
        g.eidx[fill[b]] = k
        fill[b] += 1
    free(fill)
    return 0


cdef void free_csr(Csr *g):
    free(g.start)
    free(g.nbr)
    free(g.eidx)
    g.start = NULL
    g.nbr = NULL
    g.eidx = NULL


def all_pairs_bfs(int n, list tails, list heads):
    cdef Csr g
    build_csr(&g, n, tails, heads)
    cdef int *d = <int *> malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    cdef int s, x, y, p, head, tail
    out = []
    try:
        for s in range(n):
            for x in range(n):
                d[x] = -1
            d[s] = 0
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            while head < tail:
                x = queue[head]
                head += 1
                for p in range(g.start[x], g.start[x + 1]):
                    y = g.nbr[p]
                    if d[y] < 0:
                        d[y] = d[x] + 1
                        queue[tail] = y
                        tail += 1
            out.append([d[x] for x in range(n)])
    finally:
        free(d)
        free(queue)
        free_csr(&g)
    return out


cdef int32_t dp_best(uint64_t state, int k, int32_t *d, int32_t *memo):
    if memo[state] != NONE:
        return memo[state]
    cdef int i = 0
    while not (state >> i) & 1:
        i += 1
    cdef uint64_t rest = state & ~((<uint64_t> 1) << i)
    cdef int32_t value = -1
    cdef int32_t sub, c
    cdef int j
    for j in range(i + 1, k):
        if not (rest >> j) & 1:
            continue
        if d[i * k + j] < 0:
            continue
        sub = dp_best(rest & ~((<uint64_t> 1) << j), k, d, memo)
        if sub < 0:
            continue
        c = d[i * k + j] + sub
        if value < 0 or c < value:
            value = c
    memo[state] = value
    return value


def pair_matching(dist, list terms):
    cdef int k = len(terms)
    if k % 2:
        return -1, []
    if k > MAX_DP_TERMINALS:
        raise ValueError(f"{k} terminals exceeds the DP bound {MAX_DP_TERMINALS}")
    if k == 0:
        return 0, []
    cdef uint64_t full = ((<uint64_t> 1) << k) - 1
    cdef int32_t *d = <int32_t *> malloc(k * k * sizeof(int32_t))
    cdef int32_t *memo = <int32_t *> malloc((full + 1) * sizeof(int32_t))
    cdef uint64_t s, state, rest
    cdef int i, j
    cdef int32_t cost, target, sub
    pairs = []
    if d == NULL or memo == NULL:
        free(d)
        free(memo)
        raise MemoryError()
    try:
        for i in range(k):
            row = dist[terms[i]]
            for j in range(k):
                d[i * k + j] = row[terms[j]]
        for s in range(full + 1):
            memo[s] = NONE
        memo[0] = 0
        cost = dp_best(full, k, d, memo)
        if cost < 0:
            return -1, []
        state = full
        while state:
            i = 0
            while not (state >> i) & 1:
                i += 1
            rest = state & ~((<uint64_t> 1) << i)
            target = memo[state]
            for j in range(i + 1, k):
                if not (rest >> j) & 1 or d[i * k + j] < 0:
                    continue
                sub = dp_best(rest & ~((<uint64_t> 1) << j), k, d, memo)
                if sub >= 0 and d[i * k + j] + sub == target:
                    pairs.append((terms[i], terms[j]))
                    state = rest & ~((<uint64_t> 1) << j)
                    break
        return cost, pairs
    finally:
        free(d)
        free(memo)


cdef inline int lowest_bit(uint64_t x):
    cdef int b = 0
    while not (x >> b) & 1:
        b += 1
    return b


def join_size_table(int n, list tails, list heads):
    cdef int m = len(tails)
    if m > MAX_SCAN_EDGES or n > MAX_TABLE_VERTICES:
        raise ValueError("instance too large for exhaustive scan")
    cdef uint64_t *masks = <uint64_t *> malloc((m + 1) * sizeof(uint64_t))
    cdef int32_t *table = <int32_t *> malloc(((<uint64_t> 1) << n) * sizeof(int32_t))
    cdef uint64_t step, parity = 0, chosen = 0, limit = (<uint64_t> 1) << m
    cdef int bit, size = 0, k
    if masks == NULL or table == NULL:
        free(masks)
        free(table)
        raise MemoryError()
    try:
        for k in range(m):
            masks[k] = ((<uint64_t> 1) << <int> tails[k]) | ((<uint64_t> 1) << <int> heads[k])
        for step in range((<uint64_t> 1) << n):
            table[step] = -1
        table[0] = 0
        step = 1
        while step < limit:
            bit = lowest_bit(step)
            parity ^= masks[bit]
            chosen ^= (<uint64_t> 1) << bit
            if (chosen >> bit) & 1:
                size += 1
            else:
                size -= 1
            if table[parity] < 0 or size < table[parity]:
                table[parity] = size
            step += 1
        return [table[step] for step in range((<uint64_t> 1) << n)]
    finally:
        free(masks)
        free(table)


def scan_joins(int n, list tails, list heads, target):
    cdef int m = len(tails)
    if m > MAX_SCAN_EDGES:
        raise ValueError("instance too large for exhaustive scan")
    cdef uint64_t want = target
    cdef uint64_t *masks = <uint64_t *> malloc((m + 1) * sizeof(uint64_t))
    cdef uint64_t step, parity = 0, chosen = 0, limit = (<uint64_t> 1) << m
    cdef int bit, k
    if masks == NULL:
        raise MemoryError()
    found = [0] if want == 0 else []
    try:
        for k in range(m):
            masks[k] = ((<uint64_t> 1) << <int> tails[k]) | ((<uint64_t> 1) << <int> heads[k])
        step = 1
        while step < limit:
            bit = lowest_bit(step)
            parity ^= masks[bit]
            chosen ^= (<uint64_t> 1) << bit
            if parity == want:
                found.append(chosen)
            step += 1
    finally:
        free(masks)
    found.sort()
    return found


cdef void walk_paths(Csr *g, int *w, int x, int acc, char *on_path,
                     int *best, char *seen):
    cdef int p, y, val
    for p in range(g.start[x], g.start[x + 1]):
        y = g.nbr[p]
        if on_path[y]:
            continue
        val = acc + w[g.eidx[p]]
        if not seen[y] or val < best[y]:
            best[y] = val
            seen[y] = 1
        on_path[y] = 1
        walk_paths(g, w, y, val, on_path, best, seen)
        on_path[y] = 0


cdef int *int_array(list xs) except NULL:
    cdef int k, m = len(xs)
    cdef int *out = <int *> malloc((m + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for k in range(m):
        out[k] = xs[k]
    return out


def path_minima(int n, list tails, list heads, list weights, int source):
    cdef Csr g
    build_csr(&g, n, tails, heads)
    cdef int *w = int_array(weights)
    cdef int *best = <int *> malloc((n + 1) * sizeof(int))
    cdef char *on_path = <char *> malloc(n + 1)
    cdef char *seen = <char *> malloc(n + 1)
    cdef int x
    try:
        for x in range(n):
            best[x] = 0
            on_path[x] = 0
            seen[x] = 0
        seen[source] = 1
        on_path[source] = 1
        walk_paths(&g, w, source, 0, on_path, best, seen)
        return [best[x] if seen[x] else None for x in range(n)]
    finally:
        free(w)
        free(best)
        free(on_path)
        free(seen)
        free_csr(&g)


cdef void walk_circuits(Csr *g, int *w, int s, int x, int acc, int first,
                        char *on_path, int *best, char *found):
    cdef int p, y, k, val
    for p in range(g.start[x], g.start[x + 1]):
        y = g.nbr[p]
        k = g.eidx[p]
        if y == s:
            if k != first:
                val = acc + w[k]
                if not found[0] or val < best[0]:
                    best[0] = val
                    found[0] = 1
            continue
        if y < s or on_path[y]:
            continue
        on_path[y] = 1
        walk_circuits(g, w, s, y, acc + w[k], k if first < 0 else first,
                      on_path, best, found)
        on_path[y] = 0


def min_circuit(int n, list tails, list heads, list weights):
    cdef Csr g
    build_csr(&g, n, tails, heads)
    cdef int *w = int_array(weights)
    cdef char *on_path = <char *> malloc(n + 1)
    cdef int best = 0
    cdef char found = 0
    cdef int s
    try:
        for s in range(n):
            on_path[s] = 0
        for s in range(n):
            on_path[s] = 1
            walk_circuits(&g, w, s, s, 0, -1, on_path, &best, &found)
            on_path[s] = 0
        return best if found else None
    finally:
        free(w)
        free(on_path)
        free_csr(&g)
