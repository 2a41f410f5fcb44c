# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled word kernels; same surface as ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    STACK = 256


cdef inline long* _load(tuple w, long* stackbuf, Py_ssize_t n) except NULL:
    cdef long* buf = stackbuf
    cdef Py_ssize_t i
    if n > STACK:
        buf = <long*> malloc(n * sizeof(long))
        if buf == NULL:
            raise MemoryError()
    for i in range(n):
        buf[i] = <long> w[i]
    return buf


def occurrences(tuple u, tuple v):
    cdef Py_ssize_t k = len(u), n = len(v), i, j
    cdef long ub[STACK]
    cdef long vb[STACK]
    cdef long* up
    cdef long* vp
    out = []
    if k == 0 or k > n:
        return [i for i in range(n + 1)] if k == 0 else out
    up = _load(u, ub, k)
    vp = _load(v, vb, n)
    try:
        for i in range(n - k + 1):
            for j in range(k):
                if vp[i + j] != up[j]:
                    break
            else:
                out.append(i)
    finally:
        if up != ub:
            free(up)
        if vp != vb:
            free(vp)
    return out


def overlap_lengths(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), m, k, j
    cdef long abuf[STACK]
    cdef long bbuf[STACK]
    cdef long* ap
    cdef long* bp
    out = []
    m = la if la < lb else lb
    if m < 2:
        return out
    ap = _load(a, abuf, la)
    bp = _load(b, bbuf, lb)
    try:
        for k in range(1, m):
            for j in range(k):
                if ap[la - k + j] != bp[j]:
                    break
            else:
                out.append(k)
    finally:
        if ap != abuf:
            free(ap)
        if bp != bbuf:
            free(bp)
    return out


def weighted_degree(tuple word, tuple weights):
    cdef long total = 0
    cdef Py_ssize_t i
    for i in range(len(word)):
        total += <long> weights[<long> word[i]]
    return total


cdef class LMIndex:
    cdef Py_ssize_t count
    cdef long* data
    cdef Py_ssize_t* offsets
    cdef public list lms

    def __cinit__(self, lms):
        cdef Py_ssize_t total = 0, i, j, pos = 0
        self.lms = [tuple(w) for w in lms]
        self.count = len(self.lms)
        for w in self.lms:
            if len(w) == 0:
                raise ValueError("empty leading word")
            total += len(w)
        self.data = <long*> malloc((total + 1) * sizeof(long))
        self.offsets = <Py_ssize_t*> malloc((self.count + 1) * sizeof(Py_ssize_t))
        if self.data == NULL or self.offsets == NULL:
            raise MemoryError()
        for i in range(self.count):
            self.offsets[i] = pos
            w = self.lms[i]
            for j in range(len(w)):
                self.data[pos] = <long> w[j]
                pos += 1
        self.offsets[self.count] = pos

    def __dealloc__(self):
        free(self.data)
        free(self.offsets)

    def __len__(self):
        return self.count

    def find(self, tuple word):
        cdef Py_ssize_t n = len(word), idx, k, pos, j, start
        cdef long wb[STACK]
        cdef long* wp
        cdef long* u
        if n == 0:
            return None
        wp = _load(word, wb, n)
        try:
            for idx in range(self.count):
                start = self.offsets[idx]
                k = self.offsets[idx + 1] - start
                if k > n:
                    continue
                u = self.data + start
                for pos in range(n - k + 1):
                    if wp[pos] != u[0]:
                        continue
                    for j in range(1, k):
                        if wp[pos + j] != u[j]:
                            break
                    else:
                        return idx, pos
            return None
        finally:
            if wp != wb:
                free(wp)
