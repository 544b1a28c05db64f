# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backend for the exhaustive enumeration kernels.

Same contracts as hullforge._purecore (the reference implementation);
tables arrive as flat uint16 buffers, spaces are walked as mixed-radix
odometers with incremental updates.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND_NAME = "fast"


cdef int *_alloc(Py_ssize_t count) except NULL:
    cdef int *buf = <int *> PyMem_Malloc(count * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


def min_weight(unsigned short[:] gen, int k, int n, int q,
               unsigned short[:] mul, unsigned short[:] add,
               unsigned short[:] neg):
    cdef long long total = 1, step
    cdef int i, j, pos, old, new_, prev, cur, g, d, dq, base
    cdef int weight = 0, best = n + 1
    cdef int *cw = _alloc(n)
    cdef int *digits = _alloc(k)
    for j in range(n):
        cw[j] = 0
    for i in range(k):
        digits[i] = 0
        total *= q
    try:
        for step in range(total - 1):
            pos = k - 1
            while True:
                old = digits[pos]
                new_ = 0 if old == q - 1 else old + 1
                digits[pos] = new_
                d = add[new_ * q + neg[old]]
                base = pos * n
                dq = d * q
                for j in range(n):
                    g = gen[base + j]
                    if g:
                        prev = cw[j]
                        cur = add[prev * q + mul[dq + g]]
                        cw[j] = cur
                        if prev:
                            if cur == 0:
                                weight -= 1
                        elif cur:
                            weight += 1
                if new_:
                    break
                pos -= 1
            if weight < best:
                best = weight
                if best == 1:
                    break
        return best
    finally:
        PyMem_Free(cw)
        PyMem_Free(digits)


def orthogonal_count(unsigned short[:] gen, int k, int n, int q,
                     unsigned short[:] mul, unsigned short[:] add,
                     unsigned short[:] neg):
    cdef long long total = 1, step, count = 1
    cdef int i, j, r, pos, old, new_, g, c, d, dq, base, s
    cdef bint ok
    cdef int *cw = _alloc(n)
    cdef int *digits = _alloc(k)
    for j in range(n):
        cw[j] = 0
    for i in range(k):
        digits[i] = 0
        total *= q
    try:
        for step in range(total - 1):
            pos = k - 1
            while True:
                old = digits[pos]
                new_ = 0 if old == q - 1 else old + 1
                digits[pos] = new_
                d = add[new_ * q + neg[old]]
                base = pos * n
                dq = d * q
                for j in range(n):
                    g = gen[base + j]
                    if g:
                        cw[j] = add[cw[j] * q + mul[dq + g]]
                if new_:
                    break
                pos -= 1
            ok = True
            for r in range(k):
                base = r * n
                s = 0
                for j in range(n):
                    c = cw[j]
                    if c:
                        g = gen[base + j]
                        if g:
                            s = add[s * q + mul[c * q + g]]
                if s:
                    ok = False
                    break
            if ok:
                count += 1
        return count
    finally:
        PyMem_Free(cw)
        PyMem_Free(digits)


cdef bint _is_singular(int *gram, int k, int q,
                       unsigned short[:] mul, unsigned short[:] add,
                       unsigned short[:] neg, unsigned short[:] inv,
                       int *scr) noexcept:
    cdef int i, col, r, c, piv, pinv, f, nf, nfq, v, tmp, a, b
    cdef int kk = k * k
    for i in range(kk):
        scr[i] = gram[i]
    for col in range(k):
        piv = -1
        for r in range(col, k):
            if scr[r * k + col]:
                piv = r
                break
        if piv < 0:
            return True
        if piv != col:
            a = piv * k
            b = col * k
            for c in range(col, k):
                tmp = scr[a + c]
                scr[a + c] = scr[b + c]
                scr[b + c] = tmp
        pinv = inv[scr[col * k + col]]
        for r in range(col + 1, k):
            f = scr[r * k + col]
            if f:
                nf = neg[mul[f * q + pinv]]
                nfq = nf * q
                a = r * k
                b = col * k
                for c in range(col, k):
                    v = scr[b + c]
                    if v:
                        scr[a + c] = add[scr[a + c] * q + mul[nfq + v]]
    return False


def first_singular_class(unsigned short[:] terms, int n, int k, int q,
                         unsigned short[:] classes,
                         unsigned short[:] mul, unsigned short[:] add,
                         unsigned short[:] neg, unsigned short[:] inv,
                         long long start, long long stop):
    cdef int s = classes.shape[0]
    cdef int kk = k * k
    cdef long long r = start, rank
    cdef int i, t, idx, pos, old, new_, u, d, dq, uq, base, v
    cdef int *digits = _alloc(n)
    cdef int *gram = _alloc(kk)
    cdef int *scr = _alloc(kk)
    for i in range(n - 1, -1, -1):
        digits[i] = <int> (r % s)
        r //= s
    for idx in range(kk):
        gram[idx] = 0
    try:
        for t in range(n):
            u = classes[digits[t]]
            base = t * kk
            uq = u * q
            for idx in range(kk):
                v = terms[base + idx]
                if v:
                    gram[idx] = add[gram[idx] * q + mul[uq + v]]
        for rank in range(start, stop):
            if _is_singular(gram, k, q, mul, add, neg, inv, scr):
                return rank
            if rank + 1 == stop:
                break
            pos = n - 1
            while True:
                old = digits[pos]
                new_ = 0 if old == s - 1 else old + 1
                digits[pos] = new_
                d = add[classes[new_] * q + neg[classes[old]]]
                base = pos * kk
                dq = d * q
                for idx in range(kk):
                    v = terms[base + idx]
                    if v:
                        gram[idx] = add[gram[idx] * q + mul[dq + v]]
                if new_:
                    break
                pos -= 1
        return -1
    finally:
        PyMem_Free(digits)
        PyMem_Free(gram)
        PyMem_Free(scr)
