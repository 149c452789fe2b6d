# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exhaustive cycle-factor search and blossom matching.

Function-for-function twin of ``_pycore``; see there for the contracts.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

ANY, ALL_ODD, ALL_EVEN, EXISTS_ODD, EXISTS_EVEN = range(5)
FIRST, ALL, SIGNATURES = range(3)

cdef enum:
    C_ANY = 0
    C_ALL_ODD = 1
    C_ALL_EVEN = 2
    C_EXISTS_ODD = 3
    C_EXISTS_EVEN = 4

cdef enum:
    M_FIRST = 0
    M_ALL = 1
    M_SIGNATURES = 2


cdef int* _ialloc(Py_ssize_t size) except NULL:
    cdef int* p = <int*>PyMem_Malloc((size if size > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


cdef class _Search:
    cdef int n, m, constraint, mode
    cdef long long nodes, limit
    cdef bint exceeded
    cdef int* adj_start
    cdef int* adj_k
    cdef int* adj_y
    cdef int* adj_fwd
    cdef int* conf_start
    cdef int* conf_k
    cdef int* arcflag
    cdef int* req
    cdef int* blocked
    cdef int* used
    cdef int* pv
    cdef int* pe
    cdef int* bounds
    cdef int plen_total, nbounds
    cdef int counts[2]
    cdef object out

    def __cinit__(self):
        self.adj_start = NULL
        self.adj_k = NULL
        self.adj_y = NULL
        self.adj_fwd = NULL
        self.conf_start = NULL
        self.conf_k = NULL
        self.arcflag = NULL
        self.req = NULL
        self.blocked = NULL
        self.used = NULL
        self.pv = NULL
        self.pe = NULL
        self.bounds = NULL

    def __dealloc__(self):
        PyMem_Free(self.adj_start)
        PyMem_Free(self.adj_k)
        PyMem_Free(self.adj_y)
        PyMem_Free(self.adj_fwd)
        PyMem_Free(self.conf_start)
        PyMem_Free(self.conf_k)
        PyMem_Free(self.arcflag)
        PyMem_Free(self.req)
        PyMem_Free(self.blocked)
        PyMem_Free(self.used)
        PyMem_Free(self.pv)
        PyMem_Free(self.pe)
        PyMem_Free(self.bounds)

    def __init__(self, int n, tails, heads, is_arc, required, int constraint,
                 int mode, long long limit, conflicts):
        cdef int k, u, v, i, pos, a, b
        cdef int m = len(tails)
        self.n = n
        self.m = m
        self.constraint = constraint
        self.mode = mode
        self.limit = limit
        self.nodes = 0
        self.exceeded = False
        self.counts[0] = 0
        self.counts[1] = 0
        self.plen_total = 0
        self.nbounds = 0
        self.adj_start = _ialloc(n + 1)
        self.adj_k = _ialloc(2 * m)
        self.adj_y = _ialloc(2 * m)
        self.adj_fwd = _ialloc(2 * m)
        self.arcflag = _ialloc(m)
        self.req = _ialloc(n)
        self.blocked = _ialloc(m)
        self.used = _ialloc(n)
        self.pv = _ialloc(n + 1)
        self.pe = _ialloc(n + 1)
        self.bounds = _ialloc(n + 1)
        for i in range(n + 1):
            self.adj_start[i] = 0
        for i in range(n):
            self.req[i] = 1 if required[i] else 0
            self.used[i] = 0
        for k in range(m):
            self.arcflag[k] = 1 if is_arc[k] else 0
            self.blocked[k] = 0
            self.adj_start[<int>tails[k] + 1] += 1
            self.adj_start[<int>heads[k] + 1] += 1
        for i in range(n):
            self.adj_start[i + 1] += self.adj_start[i]
        cdef int* fill = _ialloc(n)
        try:
            for i in range(n):
                fill[i] = self.adj_start[i]
            # increasing k keeps every adjacency list sorted by element index
            for k in range(m):
                u = tails[k]
                v = heads[k]
                pos = fill[u]
                fill[u] += 1
                self.adj_k[pos] = k
                self.adj_y[pos] = v
                self.adj_fwd[pos] = 1
                pos = fill[v]
                fill[v] += 1
                self.adj_k[pos] = k
                self.adj_y[pos] = u
                self.adj_fwd[pos] = 0 if self.arcflag[k] else 1
        finally:
            PyMem_Free(fill)
        pairs = list(conflicts)
        self.conf_start = _ialloc(m + 1)
        self.conf_k = _ialloc(2 * len(pairs))
        for i in range(m + 1):
            self.conf_start[i] = 0
        for a, b in pairs:
            self.conf_start[a + 1] += 1
            self.conf_start[b + 1] += 1
        for i in range(m):
            self.conf_start[i + 1] += self.conf_start[i]
        fill = _ialloc(m)
        try:
            for i in range(m):
                fill[i] = self.conf_start[i]
            for a, b in pairs:
                self.conf_k[fill[a]] = b
                fill[a] += 1
                self.conf_k[fill[b]] = a
                fill[b] += 1
        finally:
            PyMem_Free(fill)
        self.out = set() if mode == M_SIGNATURES else []

    cdef inline void _block(self, int k, int delta):
        cdef int i
        for i in range(self.conf_start[k], self.conf_start[k + 1]):
            self.blocked[self.conf_k[i]] += delta

    cdef bint _viable(self, int start):
        cdef int v, i, k, ne, no, ni
        for v in range(start, self.n):
            if not self.req[v] or self.used[v]:
                continue
            ne = 0
            no = 0
            ni = 0
            for i in range(self.adj_start[v], self.adj_start[v + 1]):
                k = self.adj_k[i]
                if self.used[self.adj_y[i]] or self.blocked[k]:
                    continue
                if not self.arcflag[k]:
                    ne += 1
                elif self.adj_fwd[i]:
                    no += 1
                else:
                    ni += 1
            if ne + no + ni < 2 or ne + no == 0 or ne + ni == 0:
                return False
        return True

    cdef void _emit(self) except *:
        cdef int i, j, b, end
        if self.mode == M_SIGNATURES:
            self.out.add((self.counts[0], self.counts[1]))
            return
        cycles = []
        for i in range(self.nbounds):
            b = self.bounds[i]
            end = self.bounds[i + 1] if i + 1 < self.nbounds else self.plen_total
            cycles.append((
                tuple([self.pv[j] for j in range(b, end)]),
                tuple([self.pe[j] for j in range(b, end)]),
            ))
        self.out.append(cycles)

    cdef int _next_cycle(self, int start) except -1:
        cdef int r = start
        cdef int stop
        while r < self.n and (self.used[r] or not self.req[r]):
            r += 1
        if r == self.n:
            if self.constraint == C_EXISTS_ODD and self.counts[1] == 0:
                return 0
            if self.constraint == C_EXISTS_EVEN and self.counts[0] == 0:
                return 0
            self._emit()
            return 1 if self.mode == M_FIRST else 0
        if not self._viable(r):
            return 0
        self.used[r] = 1
        self.pv[self.plen_total] = r
        self.plen_total += 1
        stop = self._extend(r, r, self.plen_total - 1, 0)
        self.plen_total -= 1
        self.used[r] = 0
        return stop

    cdef int _extend(self, int r, int x, int base, int arcs) except -1:
        cdef int i, k, y, plen, first, odd, stop
        self.nodes += 1
        if self.nodes > self.limit:
            self.exceeded = True
            return 1
        plen = self.plen_total - base
        for i in range(self.adj_start[x], self.adj_start[x + 1]):
            if not self.adj_fwd[i]:
                continue
            k = self.adj_k[i]
            if self.blocked[k]:
                continue
            y = self.adj_y[i]
            if y == r:
                if plen < 2:
                    continue
                first = self.pe[base]
                if k == first:
                    continue
                if arcs == 0 and not self.arcflag[k] and first > k:
                    continue
                odd = plen & 1
                if self.constraint == C_ALL_ODD and not odd:
                    continue
                if self.constraint == C_ALL_EVEN and odd:
                    continue
                self.pe[self.plen_total - 1] = k
                self._block(k, 1)
                self.bounds[self.nbounds] = base
                self.nbounds += 1
                self.counts[odd] += 1
                stop = self._next_cycle(r)
                self.counts[odd] -= 1
                self.nbounds -= 1
                self._block(k, -1)
                if stop:
                    return 1
            elif not self.used[y]:
                self.used[y] = 1
                self.pe[self.plen_total - 1] = k
                self.pv[self.plen_total] = y
                self.plen_total += 1
                self._block(k, 1)
                stop = self._extend(r, y, base, arcs + self.arcflag[k])
                self._block(k, -1)
                self.plen_total -= 1
                self.used[y] = 0
                if stop:
                    return 1
        return 0


def factor_search(int n, tails, heads, is_arc, required, int constraint,
                  int mode, long long node_limit, conflicts=()):
    cdef _Search s = _Search(n, tails, heads, is_arc, required, constraint,
                             mode, node_limit, conflicts)
    s._next_cycle(0)
    return s.nodes, bool(s.exceeded), s.out


cdef int _lca(int n, int a, int b, int* base, int* parent, int* match, int* mark):
    cdef int i
    for i in range(n):
        mark[i] = 0
    while True:
        a = base[a]
        mark[a] = 1
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if mark[b]:
            return b
        b = parent[match[b]]


cdef void _mark_path(int v, int b, int child, int* base, int* parent,
                     int* match, int* blossom):
    while base[v] != b:
        blossom[base[v]] = 1
        blossom[base[match[v]]] = 1
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def blossom_matching(int n, adjacency):
    cdef int i, v, u, to, cur, head, tail, root, end, pv, ppv
    cdef int total = 0
    for lst in adjacency:
        total += len(lst)
    cdef int* start = _ialloc(n + 1)
    cdef int* nbr = _ialloc(total)
    cdef int* match = _ialloc(n)
    cdef int* used = _ialloc(n)
    cdef int* parent = _ialloc(n)
    cdef int* base = _ialloc(n)
    cdef int* queue = _ialloc(n)
    cdef int* blossom = _ialloc(n)
    cdef int* mark = _ialloc(n)
    try:
        start[0] = 0
        for v in range(n):
            lst = adjacency[v]
            start[v + 1] = start[v] + len(lst)
            for i in range(len(lst)):
                nbr[start[v] + i] = lst[i]
        for v in range(n):
            match[v] = -1
        for v in range(n):
            if match[v] == -1:
                for i in range(start[v], start[v + 1]):
                    u = nbr[i]
                    if match[u] == -1:
                        match[v] = u
                        match[u] = v
                        break
        for root in range(n):
            if match[root] != -1:
                continue
            for i in range(n):
                used[i] = 0
                parent[i] = -1
                base[i] = i
            used[root] = 1
            queue[0] = root
            head = 0
            tail = 1
            end = -1
            while head < tail and end == -1:
                v = queue[head]
                head += 1
                for i in range(start[v], start[v + 1]):
                    to = nbr[i]
                    if base[v] == base[to] or match[v] == to:
                        continue
                    if to == root or (match[to] != -1 and parent[match[to]] != -1):
                        cur = _lca(n, v, to, base, parent, match, mark)
                        for u in range(n):
                            blossom[u] = 0
                        _mark_path(v, cur, to, base, parent, match, blossom)
                        _mark_path(to, cur, v, base, parent, match, blossom)
                        for u in range(n):
                            if blossom[base[u]]:
                                base[u] = cur
                                if not used[u]:
                                    used[u] = 1
                                    queue[tail] = u
                                    tail += 1
                    elif parent[to] == -1:
                        parent[to] = v
                        if match[to] == -1:
                            end = to
                            break
                        used[match[to]] = 1
                        queue[tail] = match[to]
                        tail += 1
            v = end
            while v != -1:
                pv = parent[v]
                ppv = match[pv]
                match[v] = pv
                match[pv] = v
                v = ppv
        return [match[i] for i in range(n)]
    finally:
        PyMem_Free(start)
        PyMem_Free(nbr)
        PyMem_Free(match)
        PyMem_Free(used)
        PyMem_Free(parent)
        PyMem_Free(base)
        PyMem_Free(queue)
        PyMem_Free(blossom)
        PyMem_Free(mark)
