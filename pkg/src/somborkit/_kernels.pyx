# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scan kernels; see ``_kernels_py`` for the contract."""

from libc.math cimport sqrt, INFINITY

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 10
    MAXP = 45

KIND_BRIDGES = 0
KIND_KAPPA = 1
KIND_LAMBDA = 2
MAX_SCAN_ORDER = MAXN

IMPLEMENTATION = "cython"


cdef struct Tables:
    int n
    int npairs
    int pi[MAXP]
    int pj[MAXP]
    double root[MAXN][MAXN]


cdef void _init_tables(Tables* t, int n):
    cdef int i, j, b = 0
    t.n = n
    for j in range(1, n):
        for i in range(j):
            t.pi[b] = i
            t.pj[b] = j
            b += 1
    t.npairs = b
    for i in range(MAXN):
        for j in range(MAXN):
            t.root[i][j] = sqrt(<double>(i * i + j * j))


cdef inline void _rows(Tables* t, u64 mask, u64* rows) noexcept nogil:
    cdef int b, i
    for i in range(t.n):
        rows[i] = 0
    while mask:
        b = __builtin_ctzll(mask)
        rows[t.pi[b]] |= (<u64>1) << t.pj[b]
        rows[t.pj[b]] |= (<u64>1) << t.pi[b]
        mask &= mask - 1


cdef inline u64 _closure(u64* rows, u64 start, u64 allowed) noexcept nogil:
    cdef u64 seen = start, frontier = start, nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[__builtin_ctzll(f)]
            f &= f - 1
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef int _count_bridges(Tables* t, u64* rows, int* deg, u64 full) noexcept nogil:
    cdef int u, v, count = 0
    cdef u64 nb
    for u in range(t.n):
        nb = rows[u] >> (u + 1)
        v = u + 1
        while nb:
            if nb & 1:
                if deg[u] == 1 or deg[v] == 1:
                    count += 1
                else:
                    rows[u] ^= (<u64>1) << v
                    rows[v] ^= (<u64>1) << u
                    if not ((_closure(rows, (<u64>1) << u, full) >> v) & 1):
                        count += 1
                    rows[u] ^= (<u64>1) << v
                    rows[v] ^= (<u64>1) << u
            nb >>= 1
            v += 1
    return count


cdef int _kappa(u64* rows, int n, u64 full, int mindeg, u64* subsets, int nsub) noexcept nogil:
    cdef int idx, size
    cdef u64 s, allowed
    if mindeg == n - 1:
        return n - 1
    for idx in range(nsub):
        s = subsets[idx]
        size = __builtin_popcountll(s)
        if size >= mindeg:
            break
        allowed = full & ~s
        if _closure(rows, allowed & (~allowed + 1), allowed) != allowed:
            return size
    return mindeg


cdef int _lambda(u64* rows, int n, int mindeg) noexcept nogil:
    cdef int best = mindeg, cut
    cdef u64 rest, side, f
    for rest in range(((<u64>1) << (n - 1)) - 1):
        side = (rest << 1) | 1
        cut = 0
        f = side
        while f and cut < best:
            cut += __builtin_popcountll(rows[__builtin_ctzll(f)] & ~side)
            f &= f - 1
        if cut < best:
            best = cut
    return best


cdef double _sombor(Tables* t, u64* rows, int* deg) noexcept nogil:
    cdef int hist[MAXN][MAXN]
    cdef int u, v, a, b
    cdef u64 nb
    cdef double total = 0.0
    for a in range(t.n):
        for b in range(t.n):
            hist[a][b] = 0
    for u in range(t.n):
        nb = rows[u] >> (u + 1)
        v = u + 1
        while nb:
            if nb & 1:
                a = deg[u]
                b = deg[v]
                if a <= b:
                    hist[a][b] += 1
                else:
                    hist[b][a] += 1
            nb >>= 1
            v += 1
    for a in range(t.n):
        for b in range(a, t.n):
            if hist[a][b]:
                total += hist[a][b] * t.root[a][b]
    return total


def _check_order(int n):
    if not 1 <= n <= MAXN:
        raise ValueError(f"scan order must be in 1..{MAXN}, got {n}")


def _subsets_by_size(int n):
    return sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))


def mask_sombor(int n, u64 mask):
    cdef Tables t
    cdef u64 rows[MAXN]
    cdef int deg[MAXN]
    cdef int i
    _check_order(n)
    _init_tables(&t, n)
    _rows(&t, mask, rows)
    for i in range(n):
        deg[i] = __builtin_popcountll(rows[i])
    return _sombor(&t, rows, deg)


def mask_class(int n, u64 mask, int kind):
    cdef Tables t
    cdef u64 rows[MAXN]
    cdef u64 subsets[1 << MAXN]
    cdef int deg[MAXN]
    cdef int i, mindeg = MAXN
    cdef u64 full = ((<u64>1) << n) - 1
    _check_order(n)
    _init_tables(&t, n)
    _rows(&t, mask, rows)
    for i in range(n):
        deg[i] = __builtin_popcountll(rows[i])
        if deg[i] < mindeg:
            mindeg = deg[i]
    if kind == KIND_BRIDGES:
        return _count_bridges(&t, rows, deg, full)
    if kind == KIND_KAPPA:
        for i, s in enumerate(_subsets_by_size(n)):
            subsets[i] = s
        return _kappa(rows, n, full, mindeg, subsets, 1 << n)
    return _lambda(rows, n, mindeg)


def connected_masks(int n, u64 lo, u64 hi):
    cdef Tables t
    cdef u64 rows[MAXN]
    cdef u64 mask
    cdef u64 full = ((<u64>1) << n) - 1
    _check_order(n)
    _init_tables(&t, n)
    out = []
    for mask in range(lo, hi):
        _rows(&t, mask, rows)
        if _closure(rows, 1, full) == full:
            out.append(mask)
    return out


cdef class _Acc:
    cdef public long long count
    cdef public double lo
    cdef public double hi
    cdef public list lo_hits
    cdef public list hi_hits

    def __init__(self):
        self.count = 0
        self.lo = INFINITY
        self.hi = -INFINITY
        self.lo_hits = []
        self.hi_hits = []

    cdef void push(self, double value, u64 mask, double tol):
        self.count += 1
        if value < self.lo - tol:
            self.lo = value
            self.lo_hits = [(value, mask)]
        elif value <= self.lo + tol:
            self.lo_hits.append((value, mask))
            if value < self.lo:
                self.lo = value
                self.lo_hits = [h for h in self.lo_hits if h[0] <= value + tol]
        if value > self.hi + tol:
            self.hi = value
            self.hi_hits = [(value, mask)]
        elif value >= self.hi - tol:
            self.hi_hits.append((value, mask))
            if value > self.hi:
                self.hi = value
                self.hi_hits = [h for h in self.hi_hits if h[0] >= value - tol]


def scan_range(int n, u64 lo, u64 hi, int kind, int kmin=0, double tol=1e-9):
    cdef Tables t
    cdef u64 rows[MAXN]
    cdef u64 subsets[1 << MAXN]
    cdef int deg[MAXN]
    cdef u64 mask
    cdef u64 full = ((<u64>1) << n) - 1
    cdef int i, c, mindeg
    cdef int nsub = 1 << n
    cdef double value
    cdef _Acc acc
    _check_order(n)
    if kind not in (KIND_BRIDGES, KIND_KAPPA, KIND_LAMBDA):
        raise ValueError(f"unknown scan kind {kind}")
    _init_tables(&t, n)
    for i, s in enumerate(_subsets_by_size(n)):
        subsets[i] = s
    accs = [_Acc() for _ in range(n)]
    for mask in range(lo, hi):
        _rows(&t, mask, rows)
        if _closure(rows, 1, full) != full:
            continue
        mindeg = n
        for i in range(n):
            deg[i] = __builtin_popcountll(rows[i])
            if deg[i] < mindeg:
                mindeg = deg[i]
        if kind == KIND_BRIDGES:
            c = _count_bridges(&t, rows, deg, full)
        elif kind == KIND_KAPPA:
            if mindeg < kmin:
                continue
            c = _kappa(rows, n, full, mindeg, subsets, nsub)
        else:
            c = _lambda(rows, n, mindeg)
        value = _sombor(&t, rows, deg)
        acc = <_Acc>accs[c]
        acc.push(value, mask, tol)
    return [[a.count, a.lo, a.lo_hits, a.hi, a.hi_hits] for a in accs]
