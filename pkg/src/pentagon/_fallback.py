"""Pure-Python kernels. Same contract as the compiled ``_kernels`` module."""

from __future__ import annotations


def induced_cycles(bits, k, limit=None, count_only=False):
    """Chordless ``k``-cycles as vertex tuples in canonical orientation.

    Returns ``(cycles, count, complete)``.

    ``bits[v]`` is the neighbor bitset of ``v``. Paths are grown from an
    anchor ``v0`` through vertices larger than ``v0``; a candidate at an
    inner position must avoid the anchor and every path vertex except the
    current tail, and the closing vertex must touch the anchor. Emission
    requires ``path[1] < path[-1]`` so each cycle appears once. Anchors and
    candidates are visited in ascending order, so the output is already
    sorted lexicographically.

    With ``limit`` set, the search stops once more than ``limit`` cycles are
    seen and ``complete`` is False. ``count_only`` skips storing cycles.
    """
    n = len(bits)
    out = []
    found = 0
    full = (1 << n) - 1
    last_pos = k - 1

    for v0 in range(n):
        higher = full ^ ((1 << (v0 + 1)) - 1)
        adj0 = bits[v0] & higher
        if adj0 == 0 or (adj0 & (adj0 - 1)) == 0:
            continue
        not_adj0 = ~bits[v0]
        path = [v0, 0]

        # explicit stack of (candidate bitset, blocked, used) per depth
        stack = [(adj0, 0, (1 << v0))]
        while stack:
            cand, blocked, used = stack[-1]
            if cand == 0:
                stack.pop()
                continue
            low = cand & -cand
            w = low.bit_length() - 1
            stack[-1] = (cand ^ low, blocked, used)
            depth = len(stack)  # position of w in the path
            if depth == last_pos:
                if path[1] < w:
                    found += 1
                    if not count_only:
                        out.append((*path[:depth], w))
                    if limit is not None and found > limit:
                        return out, found, False
                continue
            del path[depth:]
            path.append(w)
            tail_prev = path[depth - 1]
            nblocked = blocked | bits[tail_prev] if depth >= 2 else blocked
            nused = used | low
            nxt = bits[w] & higher & ~nused & ~nblocked
            if depth + 1 == last_pos:
                nxt &= bits[v0]
            else:
                nxt &= not_adj0
            stack.append((nxt, nblocked, nused))
    return out, found, True


def intersection_pairs(cycles, n):
    """Pairs ``(a, b)``, ``a < b``, of cycle indices sharing at least one edge."""
    buckets: dict[int, list[int]] = {}
    for idx, cyc in enumerate(cycles):
        k = len(cyc)
        for i in range(k):
            u, v = cyc[i], cyc[(i + 1) % k]
            if u > v:
                u, v = v, u
            buckets.setdefault(u * n + v, []).append(idx)
    pairs = set()
    for members in buckets.values():
        m = len(members)
        for i in range(m):
            a = members[i]
            for j in range(i + 1, m):
                pairs.add((a, members[j]))
    return sorted(pairs)
