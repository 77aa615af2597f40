# cython: language_level=3
"""Compiled versions of the hot kernels; mirrors ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef inline long _floordiv(long a, long b) nogil:
    cdef long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long _labs(long x) nogil:
    return -x if x < 0 else x


cdef inline long _minimize(long n, long i, long image) nogil:
    cdef long d = _labs(i - image)
    if _labs(i - (image + n)) < d:
        return image + n
    if _labs(i - (image - n)) < d:
        return image - n
    return image


cdef long _shi(long* m, long n) nogil:
    cdef long p, q, x, total = 0
    for p in range(n):
        x = m[p]
        for q in range(p + 1, n):
            total += _labs(_floordiv(m[q] - x, n))
    return total


def minimize_path(long n, long i, long image):
    return _minimize(n, i, image)


def nearest_lift(window):
    cdef long n = len(window)
    cdef long p
    return [_minimize(n, p + 1, window[p]) for p in range(n)]


def shi_length(images):
    cdef long n = len(images)
    cdef long p
    cdef long* m = <long*> malloc(n * sizeof(long))
    if m == NULL:
        raise MemoryError()
    try:
        for p in range(n):
            m[p] = images[p]
        return _shi(m, n)
    finally:
        free(m)


def frame_scan(window):
    """Minimum Shi length of nearest lifts over all 2n frames.

    Returns ``(length, rotation, flipped, lifted)`` for the first frame in
    scan order attaining the minimum.
    """
    cdef long n = len(window)
    cdef long p, q, k, f, idx, length
    cdef long best = -1, best_k = 0, best_f = 0
    cdef long* w = <long*> malloc(n * sizeof(long))
    cdef long* m = <long*> malloc(n * sizeof(long))
    cdef long* keep = <long*> malloc(n * sizeof(long))
    if w == NULL or m == NULL or keep == NULL:
        free(w); free(m); free(keep)
        raise MemoryError()
    try:
        for p in range(n):
            w[p] = window[p]
        with nogil:
            for f in range(2):
                for k in range(n):
                    for q in range(n):
                        if f:
                            idx = (k - q) % n
                        else:
                            idx = (q - k) % n
                        if idx < 0:
                            idx += n
                        m[q] = _minimize(n, q + 1, w[idx])
                    length = _shi(m, n)
                    if best < 0 or length < best:
                        best = length
                        best_k = k
                        best_f = f
                        for q in range(n):
                            keep[q] = m[q]
        return best, best_k, bool(best_f), tuple([keep[q] for q in range(n)])
    finally:
        free(w); free(m); free(keep)


def uncross(images):
    """Sort a nearest-lift configuration by swapping the first crossed pair.

    Returns generator letters (1-based, in the configuration's own frame).
    """
    cdef long n = len(images)
    cdef long p, q, r, tmp, count = 0
    cdef long cap = n * (n - 1)
    cdef bint swapped
    cdef long* m = <long*> malloc(n * sizeof(long))
    cdef long* d = <long*> malloc(n * sizeof(long))
    if m == NULL or d == NULL:
        free(m); free(d)
        raise MemoryError()
    word = []
    try:
        for p in range(n):
            m[p] = images[p]
            d[p] = m[p] - (p + 1)
        while True:
            swapped = False
            for p in range(n):
                q = (p + 1) % n
                if d[p] > d[q]:
                    if q == 0:
                        tmp = m[p]
                        m[p] = m[q] + n
                        m[q] = tmp - n
                    else:
                        tmp = m[p]
                        m[p] = m[q]
                        m[q] = tmp
                    word.append(p + 1)
                    count += 1
                    if count > cap:
                        raise RuntimeError("uncrossing exceeded its iteration cap")
                    for r in (p, q):
                        m[r] = _minimize(n, r + 1, m[r])
                        d[r] = m[r] - (r + 1)
                    swapped = True
                    break
            if not swapped:
                return word
    finally:
        free(m); free(d)
