# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``tdrl._purepy``.

Scans over Pi(n) pack a permutation into a uint64 key (4 bits per symbol),
so those kernels accept n <= 16 only.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free, qsort

NAME = "cython"

cdef int MAX_PACKED = 16


cdef class _Table:
    cdef int count
    cdef int width
    cdef int *data
    cdef object orders

    def __cinit__(self, orders):
        cdef Py_ssize_t a, i
        self.orders = orders
        self.count = len(orders)
        self.width = len(orders[0]) if self.count else 0
        self.data = <int *> malloc(max(1, self.count * self.width) * sizeof(int))
        if self.data == NULL:
            raise MemoryError()
        for a in range(self.count):
            row = orders[a]
            for i in range(self.width):
                self.data[a * self.width + i] = row[i]

    def __dealloc__(self):
        free(self.data)


cdef dict _tables = {}


cdef _Table _table(orders):
    cdef _Table t = _tables.get(id(orders))
    if t is not None and t.orders is orders:
        return t
    if len(_tables) > 64:
        _tables.clear()
    t = _Table(orders)
    _tables[id(orders)] = t
    return t


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t *> a)[0]
    cdef uint64_t y = (<const uint64_t *> b)[0]
    return (x > y) - (x < y)


cdef inline uint64_t _key(const int *q, const int *order, int n) noexcept nogil:
    cdef uint64_t key = 0
    cdef int i
    for i in range(n):
        key |= (<uint64_t> (q[order[i]] - 1)) << (4 * i)
    return key


cdef inline bint _next_perm(int *q, int n) noexcept nogil:
    cdef int i = n - 2, j, tmp
    while i >= 0 and q[i] >= q[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while q[j] <= q[i]:
        j -= 1
    tmp = q[i]; q[i] = q[j]; q[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = q[i]; q[i] = q[j]; q[j] = tmp
        i += 1
        j -= 1
    return True


cdef inline bint _contains(const uint64_t *arr, int size, uint64_t key) noexcept nogil:
    cdef int lo = 0, hi = size - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if arr[mid] == key:
            return True
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid - 1
    return False


cdef long long _factorial(int n):
    cdef long long f = 1
    cdef int i
    for i in range(2, n + 1):
        f *= i
    return f


cdef void _ball_keys(const int *q, _Table t, uint64_t *out) noexcept:
    cdef int a
    for a in range(t.count):
        out[a] = _key(q, t.data + a * t.width, t.width)
    qsort(out, t.count, sizeof(uint64_t), _cmp_u64)


cdef _check_packed(int n, _Table t):
    if n > MAX_PACKED:
        raise ValueError(f"compiled scans support n <= {MAX_PACKED}, got {n}")
    if t.width != n:
        raise ValueError(f"order width {t.width} does not match n={n}")


def gather(seq, orders):
    """Set of ``seq`` rearranged by every order."""
    cdef tuple s = tuple(seq)
    cdef _Table t = _table(orders)
    cdef int a, i, w = t.width
    cdef tuple tup
    cdef object item
    if len(s) != w:
        raise ValueError(f"sequence length {len(s)} does not match order width {w}")
    out = set()
    for a in range(t.count):
        tup = PyTuple_New(w)
        for i in range(w):
            item = <object> PyTuple_GET_ITEM(s, t.data[a * w + i])
            Py_INCREF(item)
            PyTuple_SET_ITEM(tup, i, item)
        out.add(tup)
    return out


def overlap_scan(int n, orders, ref):
    """``|ball(ref) & ball(q)|`` for every q of Pi(n), in lexicographic order of q."""
    cdef _Table t = _table(orders)
    _check_packed(n, t)
    cdef int m = t.count, a, i, hits
    cdef int *q = <int *> malloc(n * sizeof(int))
    cdef int *r = <int *> malloc(n * sizeof(int))
    cdef uint64_t *target = <uint64_t *> malloc(max(1, m) * sizeof(uint64_t))
    result = []
    try:
        for i in range(n):
            q[i] = i + 1
            r[i] = ref[i]
        _ball_keys(r, t, target)
        while True:
            hits = 0
            for a in range(m):
                if _contains(target, m, _key(q, t.data + a * n, n)):
                    hits += 1
            result.append(hits)
            if not _next_perm(q, n):
                break
    finally:
        free(q)
        free(r)
        free(target)
    return result


def pairwise_max(int n, orders):
    """Largest ball overlap over unordered pairs of distinct permutations.

    Returns ``(size, i, j)`` with i < j the lexicographic ranks of the first
    pair (in scan order) attaining the maximum.
    """
    cdef _Table t = _table(orders)
    _check_packed(n, t)
    cdef long long total = _factorial(n), i, j
    cdef int m = t.count, x, y, size, best = -1
    cdef long long bi = -1, bj = -1
    cdef int *q = <int *> malloc(n * sizeof(int))
    cdef uint64_t *balls = <uint64_t *> malloc(max(1, total * m) * sizeof(uint64_t))
    cdef uint64_t *a
    cdef uint64_t *b
    if q == NULL or balls == NULL:
        free(q)
        free(balls)
        raise MemoryError()
    try:
        for x in range(n):
            q[x] = x + 1
        i = 0
        while True:
            _ball_keys(q, t, balls + i * m)
            i += 1
            if not _next_perm(q, n):
                break
        with nogil:
            for i in range(total):
                a = balls + i * m
                for j in range(i + 1, total):
                    b = balls + j * m
                    x = 0
                    y = 0
                    size = 0
                    while x < m and y < m:
                        if a[x] == b[y]:
                            size += 1
                            x += 1
                            y += 1
                        elif a[x] < b[y]:
                            x += 1
                        else:
                            y += 1
                    if size > best:
                        best = size
                        bi = i
                        bj = j
    finally:
        free(q)
        free(balls)
    return best, bi, bj


cdef long long _rank(const int *q, int n, const long long *fact) noexcept nogil:
    cdef long long rank = 0
    cdef int i, j, smaller
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if q[j] < q[i]:
                smaller += 1
        rank += smaller * fact[n - 1 - i]
    return rank


def greedy_pack(int n, orders):
    """Lexicographic greedy packing of pairwise-disjoint balls."""
    cdef _Table t = _table(orders)
    if t.width != n:
        raise ValueError(f"order width {t.width} does not match n={n}")
    if n > 20:
        raise ValueError(f"compiled greedy packing supports n <= 20, got {n}")
    cdef long long total = _factorial(n)
    cdef int m = t.count, a, i
    cdef bint free_ball
    cdef long long fact[21]
    cdef int *q = <int *> malloc(n * sizeof(int))
    cdef int *img = <int *> malloc(n * sizeof(int))
    cdef long long *ranks = <long long *> malloc(max(1, m) * sizeof(long long))
    cdef unsigned char *covered = <unsigned char *> calloc(total, 1)
    cdef const int *order
    words = []
    if q == NULL or img == NULL or ranks == NULL or covered == NULL:
        free(q); free(img); free(ranks); free(covered)
        raise MemoryError()
    try:
        fact[0] = 1
        for i in range(1, n + 1):
            fact[i] = fact[i - 1] * i
        for i in range(n):
            q[i] = i + 1
        while True:
            free_ball = True
            for a in range(m):
                order = t.data + a * n
                for i in range(n):
                    img[i] = q[order[i]]
                ranks[a] = _rank(img, n, fact)
                if covered[ranks[a]]:
                    free_ball = False
                    break
            if free_ball:
                for a in range(m):
                    covered[ranks[a]] = 1
                words.append(tuple([q[i] for i in range(n)]))
            if not _next_perm(q, n):
                break
    finally:
        free(q); free(img); free(ranks); free(covered)
    return words
