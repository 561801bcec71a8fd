# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled partition kernel for machine-integer weight sequences.

Same contract as _kernel_py (the pure-Python twin); callers are expected to
pre-scale rationals to integers and to check that alternating sums fit in
64 bits (sum of |weights| < 2^62).
"""

from libc.stdlib cimport malloc, free, qsort

BACKEND_NAME = "native"


cdef int _cmp_desc(const void* pa, const void* pb) noexcept nogil:
    cdef long long a = (<const long long*> pa)[0]
    cdef long long b = (<const long long*> pb)[0]
    if a < b:
        return 1
    if a > b:
        return -1
    return 0


cdef struct Buffers:
    long long* a
    long long* rev
    long long* w1
    long long* w2
    Py_ssize_t* e1
    Py_ssize_t* e2


cdef int _alloc(Buffers* b, Py_ssize_t n) except -1:
    cdef Py_ssize_t cap = n + 2
    b.a = <long long*> malloc(cap * sizeof(long long))
    b.rev = <long long*> malloc(cap * sizeof(long long))
    b.w1 = <long long*> malloc(cap * sizeof(long long))
    b.w2 = <long long*> malloc(cap * sizeof(long long))
    b.e1 = <Py_ssize_t*> malloc(cap * sizeof(Py_ssize_t))
    b.e2 = <Py_ssize_t*> malloc(cap * sizeof(Py_ssize_t))
    if (b.a == NULL or b.rev == NULL or b.w1 == NULL or b.w2 == NULL
            or b.e1 == NULL or b.e2 == NULL):
        _free(b)
        raise MemoryError()
    return 0


cdef void _free(Buffers* b) noexcept:
    if b.a != NULL:
        free(b.a)
    if b.rev != NULL:
        free(b.rev)
    if b.w1 != NULL:
        free(b.w1)
    if b.w2 != NULL:
        free(b.w2)
    if b.e1 != NULL:
        free(b.e1)
    if b.e2 != NULL:
        free(b.e2)
    b.a = NULL
    b.rev = NULL
    b.w1 = NULL
    b.w2 = NULL
    b.e1 = NULL
    b.e2 = NULL


cdef int _fill(long long* arr, object seq, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = seq[i]
    return 0


cdef Py_ssize_t _split_left_c(long long* a, Py_ssize_t lo, Py_ssize_t hi,
                              long long* wbuf, Py_ssize_t* ebuf,
                              Py_ssize_t* ncuts) noexcept nogil:
    """Split slices off the left of a[lo:hi].  Cut end indices go to ebuf,
    weights to wbuf; returns the new lo."""
    cdef Py_ssize_t i = lo, k, minj
    cdef long long s, minval
    cdef bint found, have_min
    ncuts[0] = 0
    while i < hi:
        s = 0
        found = False
        have_min = False
        minj = -1
        minval = 0
        for k in range(i, hi):
            if (k - i) % 2 == 0:
                s += a[k]
                if (not have_min) or s <= minval:
                    minval = s
                    minj = k
                    have_min = True
            else:
                s -= a[k]
                if s > 0:
                    found = True
                    break
        if not found:
            break
        wbuf[ncuts[0]] = minval
        ebuf[ncuts[0]] = minj + 1
        ncuts[0] += 1
        i = minj + 1
    return i


cdef void _argmin_odd_c(long long* a, Py_ssize_t lo, Py_ssize_t hi,
                        Py_ssize_t* out_j, long long* out_min) noexcept nogil:
    cdef Py_ssize_t k, minj = -1
    cdef long long s = 0, minval = 0
    cdef bint have_min = False
    for k in range(lo, hi):
        if (k - lo) % 2 == 0:
            s += a[k]
            if (not have_min) or s <= minval:
                minval = s
                minj = k
                have_min = True
        else:
            s -= a[k]
    out_j[0] = minj
    out_min[0] = minval


cdef long long _alt_sum_c(long long* a, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    cdef Py_ssize_t k
    cdef long long s = 0
    for k in range(lo, hi):
        if (k - lo) % 2 == 0:
            s += a[k]
        else:
            s -= a[k]
    return s


cdef Py_ssize_t _tes_weights_c(Buffers* b, Py_ssize_t n) noexcept nogil:
    """Slice weights of tes(b.a[0:n]) into b.w1 (U-shaped order); returns count."""
    cdef Py_ssize_t nl = 0, nr = 0, i, hi, k, q, j, m
    cdef long long minval
    i = _split_left_c(b.a, 0, n, b.w1, b.e1, &nl)
    for k in range(n - i):
        b.rev[k] = b.a[n - 1 - k]
    hi = n - _split_left_c(b.rev, 0, n - i, b.w2, b.e2, &nr)
    m = nl
    q = hi - i
    if q > 0:
        if q % 2 == 1:
            b.w1[m] = _alt_sum_c(b.a, i, hi)
            m += 1
        else:
            _argmin_odd_c(b.a, i, hi, &j, &minval)
            b.w1[m] = minval
            m += 1
            b.w1[m] = _alt_sum_c(b.a, j + 1, hi)
            m += 1
    for k in range(nr - 1, -1, -1):
        b.w1[m] = b.w2[k]
        m += 1
    return m


cdef long long _menu_value_c(long long* w, Py_ssize_t m) noexcept nogil:
    cdef Py_ssize_t k
    cdef long long s = 0
    qsort(w, m, sizeof(long long), _cmp_desc)
    for k in range(m):
        if k % 2 == 0:
            s += w[k]
        else:
            s -= w[k]
    return s


def tes_partition(seq):
    """Mirror of _kernel_py.tes_partition for integer sequences."""
    cdef Py_ssize_t n = len(seq)
    if n == 0:
        return [], []
    cdef Buffers b
    cdef list cuts = []
    cdef list weights = []
    cdef list rcuts = []
    cdef Py_ssize_t nl = 0, nr = 0, i, hi, k, q, j, prev
    cdef long long minval
    _alloc(&b, n)
    try:
        _fill(b.a, seq, n)
        i = _split_left_c(b.a, 0, n, b.w1, b.e1, &nl)
        prev = 0
        for k in range(nl):
            cuts.append((prev, b.e1[k]))
            weights.append(b.w1[k])
            prev = b.e1[k]
        for k in range(n - i):
            b.rev[k] = b.a[n - 1 - k]
        hi = n - _split_left_c(b.rev, 0, n - i, b.w2, b.e2, &nr)
        q = hi - i
        if q > 0:
            if q % 2 == 1:
                cuts.append((i, hi))
                weights.append(_alt_sum_c(b.a, i, hi))
            else:
                _argmin_odd_c(b.a, i, hi, &j, &minval)
                cuts.append((i, j + 1))
                weights.append(minval)
                cuts.append((j + 1, hi))
                weights.append(_alt_sum_c(b.a, j + 1, hi))
        prev = 0
        for k in range(nr):
            rcuts.append((n - b.e2[k], n - prev))
            prev = b.e2[k]
        for k in range(nr - 1, -1, -1):
            cuts.append(rcuts[k])
            weights.append(b.w2[k])
        return cuts, weights
    finally:
        _free(&b)


def stack_partition(seq):
    """Mirror of _kernel_py.stack_partition for integer sequences."""
    cdef Py_ssize_t n = len(seq)
    if n == 0:
        return [], [], 0, 0
    cdef Buffers b
    cdef list cuts = []
    cdef list weights = []
    cdef Py_ssize_t nl = 0, i, k, q, j, prev
    cdef long long minval, x
    _alloc(&b, n)
    try:
        _fill(b.a, seq, n)
        i = _split_left_c(b.a, 0, n, b.w1, b.e1, &nl)
        prev = 0
        for k in range(nl):
            cuts.append((prev, b.e1[k]))
            weights.append(b.w1[k])
            prev = b.e1[k]
        q = n - i
        if q % 2 == 1:
            _argmin_odd_c(b.a, i, n, &j, &minval)
            cuts.append((i, j + 1))
            weights.append(minval)
            i = j + 1
        x = -_alt_sum_c(b.a, i, n)
        return cuts, weights, i, x
    finally:
        _free(&b)


def menu_value(weights):
    cdef Py_ssize_t m = len(weights)
    if m == 0:
        return 0
    cdef long long* w = <long long*> malloc(m * sizeof(long long))
    if w == NULL:
        raise MemoryError()
    try:
        _fill(w, weights, m)
        return _menu_value_c(w, m)
    finally:
        free(w)


def tes_value(seq):
    cdef Py_ssize_t n = len(seq)
    if n == 0:
        return 0
    cdef Buffers b
    cdef Py_ssize_t m
    _alloc(&b, n)
    try:
        _fill(b.a, seq, n)
        m = _tes_weights_c(&b, n)
        return _menu_value_c(b.w1, m)
    finally:
        _free(&b)


def stack_value(seq):
    cuts, weights, i, x = stack_partition(seq)
    mv = menu_value(weights)
    return mv - x if len(weights) % 2 == 0 else mv + x


def cycle_outcomes(seq, candidates):
    """For each candidate index v: seq[v] − tes_value(rest of the cycle
    clockwise from v).  The hot loop of the quadratic cycle solver."""
    cdef Py_ssize_t n = len(seq)
    cdef list out = []
    if n == 0:
        return out
    cdef Buffers b
    cdef long long* full = <long long*> malloc(n * sizeof(long long))
    if full == NULL:
        raise MemoryError()
    cdef Py_ssize_t v, k, m
    cdef long long val
    _alloc(&b, n)
    try:
        _fill(full, seq, n)
        for v in candidates:
            for k in range(n - 1):
                b.a[k] = full[(v + 1 + k) % n]
            m = _tes_weights_c(&b, n - 1)
            val = _menu_value_c(b.w1, m)
            out.append(full[v] - val)
        return out
    finally:
        free(full)
        _free(&b)
