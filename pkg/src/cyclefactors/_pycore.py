"""Pure-Python kernels.

Same functions and return shapes as the compiled ``_core`` extension; used
when the extension is not built or ``CYCLEFACTORS_PURE_PYTHON`` is set.

Elements are passed by global index (edges first, then arcs) as parallel
``tails``/``heads``/``is_arc`` sequences.
"""

import sys

ANY, ALL_ODD, ALL_EVEN, EXISTS_ODD, EXISTS_EVEN = range(5)
FIRST, ALL, SIGNATURES = range(3)


class _Exceeded(Exception):
    pass


def factor_search(n, tails, heads, is_arc, required, constraint, mode,
                  node_limit, conflicts=()):
    """Exhaustive backtracking over cycle-factors covering ``required``.

    The uncovered required vertex of minimum id roots the next cycle, which
    is grown through incident elements in index order.  Arcs run tail to
    head only; an edge-only cycle is kept in the orientation whose first
    element index is below its last, so each factor is produced once.

    Returns ``(nodes, exceeded, result)``: ``result`` is a list of factors
    (at most one for FIRST), each a list of ``(vertices, elements)`` tuples,
    or a set of ``(even, odd)`` pairs for SIGNATURES.
    """
    m = len(tails)
    adj = [[] for _ in range(n)]
    for k in range(m):
        u, v = tails[k], heads[k]
        adj[u].append((k, v, True))
        adj[v].append((k, u, not is_arc[k]))
    for lst in adj:
        lst.sort()
    conf = [[] for _ in range(m)]
    for a, b in conflicts:
        conf[a].append(b)
        conf[b].append(a)
    arcflag = [1 if x else 0 for x in is_arc]
    req = [bool(x) for x in required]
    blocked = [0] * m
    used = [False] * n
    pv = []
    pe = []
    bounds = []
    counts = [0, 0]
    nodes = 0
    out = set() if mode == SIGNATURES else []

    def viable(start):
        for v in range(start, n):
            if not req[v] or used[v]:
                continue
            ne = no = ni = 0
            for k, w, fwd in adj[v]:
                if used[w] or blocked[k]:
                    continue
                if not arcflag[k]:
                    ne += 1
                elif fwd:
                    no += 1
                else:
                    ni += 1
            if ne + no + ni < 2 or ne + no == 0 or ne + ni == 0:
                return False
        return True

    def emit():
        if mode == SIGNATURES:
            out.add((counts[0], counts[1]))
            return
        cycles = []
        for i, b in enumerate(bounds):
            end = bounds[i + 1] if i + 1 < len(bounds) else len(pv)
            cycles.append((tuple(pv[b:end]), tuple(pe[b:end])))
        out.append(cycles)

    def next_cycle(start):
        r = start
        while r < n and (used[r] or not req[r]):
            r += 1
        if r == n:
            if constraint == EXISTS_ODD and counts[1] == 0:
                return False
            if constraint == EXISTS_EVEN and counts[0] == 0:
                return False
            emit()
            return mode == FIRST
        if not viable(r):
            return False
        used[r] = True
        pv.append(r)
        stop = extend(r, r, len(pv) - 1, 0)
        pv.pop()
        used[r] = False
        return stop

    def extend(r, x, base, arcs):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise _Exceeded
        plen = len(pv) - base
        for k, y, fwd in adj[x]:
            if not fwd or blocked[k]:
                continue
            if y == r:
                if plen < 2:
                    continue
                first = pe[base]
                if k == first:
                    continue
                if arcs == 0 and not arcflag[k] and first > k:
                    continue
                odd = plen & 1
                if constraint == ALL_ODD and not odd:
                    continue
                if constraint == ALL_EVEN and odd:
                    continue
                pe.append(k)
                for c in conf[k]:
                    blocked[c] += 1
                bounds.append(base)
                counts[odd] += 1
                stop = next_cycle(r)
                counts[odd] -= 1
                bounds.pop()
                for c in conf[k]:
                    blocked[c] -= 1
                pe.pop()
                if stop:
                    return True
            elif not used[y]:
                used[y] = True
                pv.append(y)
                pe.append(k)
                for c in conf[k]:
                    blocked[c] += 1
                stop = extend(r, y, base, arcs + arcflag[k])
                for c in conf[k]:
                    blocked[c] -= 1
                pe.pop()
                pv.pop()
                used[y] = False
                if stop:
                    return True
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * n + 200))
    try:
        next_cycle(0)
        exceeded = False
    except _Exceeded:
        exceeded = True
    finally:
        sys.setrecursionlimit(old)
    return nodes, exceeded, out


def blossom_matching(n, adjacency):
    """Maximum-cardinality matching by Edmonds' blossom algorithm, O(n^3).

    ``adjacency[v]`` lists the distinct neighbours of ``v`` in increasing
    order.  Returns the mate array (``-1`` for exposed vertices).  A greedy
    pass in vertex order seeds the matching; augmenting searches then run
    from each exposed vertex in increasing id order.
    """
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adjacency[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    def lca(a, b, base, parent):
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, base, parent, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adjacency[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to, base, parent)
                    blossom = [False] * n
                    mark_path(v, cur, to, base, parent, blossom)
                    mark_path(to, cur, v, base, parent, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_path(root)
        v = end
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match
