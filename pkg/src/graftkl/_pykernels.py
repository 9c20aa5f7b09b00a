"""Pure-Python kernels.  Signatures and results match ``_ckernels`` exactly.

Graphs are passed as ``(n, tails, heads)``: vertex count plus two parallel
lists of endpoint indices, one entry per edge.  Edge sets are bitmasks over
edge positions and terminal sets are bitmasks over vertex indices.
"""

UNREACHABLE = -1
MAX_DP_TERMINALS = 20
MAX_SCAN_EDGES = 30
MAX_TABLE_VERTICES = 20


def _adjacency(n, tails, heads):
    adj = [[] for _ in range(n)]
    for k, (a, b) in enumerate(zip(tails, heads)):
        adj[a].append((b, k))
        adj[b].append((a, k))
    return adj


def all_pairs_bfs(n, tails, heads):
    """Unit-weight distances; ``UNREACHABLE`` between components."""
    adj = _adjacency(n, tails, heads)
    out = []
    for s in range(n):
        d = [UNREACHABLE] * n
        d[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y, _ in adj[x]:
                    if d[y] < 0:
                        d[y] = d[x] + 1
                        nxt.append(y)
            frontier = nxt
        out.append(d)
    return out


def pair_matching(dist, terms):
    """Minimum-cost perfect pairing of ``terms`` under ``dist``.

    Returns ``(cost, pairs)``; ``cost`` is -1 when no pairing with finite
    cost exists.  Among optimal pairings the lexicographically smallest one
    (lowest terminal paired with its lowest feasible partner) is returned.
    """
    k = len(terms)
    if k % 2:
        return -1, []
    if k > MAX_DP_TERMINALS:
        raise ValueError(f"{k} terminals exceeds the DP bound {MAX_DP_TERMINALS}")
    d = [[dist[a][b] for b in terms] for a in terms]
    memo = {0: 0}

    def best(state):
        hit = memo.get(state)
        if hit is not None:
            return hit
        i = (state & -state).bit_length() - 1
        rest = state & ~(1 << i)
        value = -1
        row = d[i]
        j_bits = rest
        while j_bits:
            low = j_bits & -j_bits
            j = low.bit_length() - 1
            j_bits ^= low
            if row[j] < 0:
                continue
            sub = best(rest & ~low)
            if sub < 0:
                continue
            c = row[j] + sub
            if value < 0 or c < value:
                value = c
        memo[state] = value
        return value

    full = (1 << k) - 1
    cost = best(full)
    if cost < 0:
        return -1, []
    pairs = []
    state = full
    while state:
        i = (state & -state).bit_length() - 1
        rest = state & ~(1 << i)
        target = memo[state]
        for j in range(i + 1, k):
            if not rest >> j & 1 or d[i][j] < 0:
                continue
            sub = best(rest & ~(1 << j))
            if sub >= 0 and d[i][j] + sub == target:
                pairs.append((terms[i], terms[j]))
                state = rest & ~(1 << j)
                break
    return cost, pairs


def _edge_masks(tails, heads):
    return [(1 << a) | (1 << b) for a, b in zip(tails, heads)]


def join_size_table(n, tails, heads):
    """Entry ``t`` is the fewest edges whose odd-degree vertex set is ``t``.

    Computed by walking all ``2**m`` edge subsets in Gray-code order; -1
    marks odd-degree sets no edge subset realizes.
    """
    m = len(tails)
    if m > MAX_SCAN_EDGES or n > MAX_TABLE_VERTICES:
        raise ValueError("instance too large for exhaustive scan")
    masks = _edge_masks(tails, heads)
    table = [-1] * (1 << n)
    table[0] = 0
    parity = 0
    size = 0
    chosen = 0
    for step in range(1, 1 << m):
        bit = (step & -step).bit_length() - 1
        parity ^= masks[bit]
        chosen ^= 1 << bit
        size += 1 if chosen >> bit & 1 else -1
        cur = table[parity]
        if cur < 0 or size < cur:
            table[parity] = size
    return table


def scan_joins(n, tails, heads, target):
    """All edge-subset masks whose odd-degree vertex set equals ``target``."""
    m = len(tails)
    if m > MAX_SCAN_EDGES:
        raise ValueError("instance too large for exhaustive scan")
    masks = _edge_masks(tails, heads)
    found = [0] if target == 0 else []
    parity = 0
    chosen = 0
    for step in range(1, 1 << m):
        bit = (step & -step).bit_length() - 1
        parity ^= masks[bit]
        chosen ^= 1 << bit
        if parity == target:
            found.append(chosen)
    found.sort()
    return found


def path_minima(n, tails, heads, weights, source):
    """Minimum weight over all simple paths from ``source`` to each vertex.

    ``None`` marks unreachable vertices.  Exponential: enumerates every
    simple path by depth-first search.
    """
    adj = _adjacency(n, tails, heads)
    best = [None] * n
    best[source] = 0
    on_path = [False] * n
    on_path[source] = True

    def walk(x, acc):
        for y, k in adj[x]:
            if on_path[y]:
                continue
            w = acc + weights[k]
            if best[y] is None or w < best[y]:
                best[y] = w
            on_path[y] = True
            walk(y, w)
            on_path[y] = False

    walk(source, 0)
    return best


def min_circuit(n, tails, heads, weights):
    """Minimum total weight over all circuits; ``None`` for a forest."""
    adj = _adjacency(n, tails, heads)
    best = None
    on_path = [False] * n

    for s in range(n):
        on_path[s] = True

        def walk(x, acc, first):
            nonlocal best
            for y, k in adj[x]:
                if y == s:
                    if k != first:
                        w = acc + weights[k]
                        if best is None or w < best:
                            best = w
                    continue
                if y < s or on_path[y]:
                    continue
                on_path[y] = True
                walk(y, acc + weights[k], k if first < 0 else first)
                on_path[y] = False

        walk(s, 0, -1)
        on_path[s] = False
    return best
