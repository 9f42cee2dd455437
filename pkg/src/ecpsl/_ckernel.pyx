# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled interval sweep kernels; same contract as ``_pykernel``.

Scales up to 2**62 run on C integers; larger scales take the generic
object path so arbitrary-precision endpoints stay exact.
"""

from libc.stdlib cimport malloc, free

cdef int SMALL_EXP = 62

cdef inline bint _keep(int op, bint in_a, bint in_b) nogil:
    if op == 0:
        return in_a and in_b
    if op == 1:
        return in_a or in_b
    if op == 2:
        return in_a and not in_b
    return in_a != in_b


cdef tuple _combine_small(tuple a, tuple b, int op):
    cdef Py_ssize_t na = len(a), nb = len(b), i = 0, j = 0, k = 0
    cdef long long *pa = <long long *> malloc((na + nb + 1) * 3 * sizeof(long long))
    if pa == NULL:
        raise MemoryError()
    cdef long long *pb = pa + na
    cdef long long *po = pb + nb
    cdef long long x
    cdef bint inside = False, now
    try:
        for i in range(na):
            pa[i] = a[i]
        for j in range(nb):
            pb[j] = b[j]
        i = 0
        j = 0
        while i < na or j < nb:
            if j >= nb or (i < na and pa[i] < pb[j]):
                x = pa[i]
            else:
                x = pb[j]
            if i < na and pa[i] == x:
                i += 1
            if j < nb and pb[j] == x:
                j += 1
            now = _keep(op, i & 1, j & 1)
            if now != inside:
                po[k] = x
                k += 1
                inside = now
        return tuple([po[i] for i in range(k)])
    finally:
        free(pa)


cdef tuple _combine_obj(tuple a, tuple b, int op):
    cdef Py_ssize_t na = len(a), nb = len(b), i = 0, j = 0
    cdef list out = []
    cdef bint inside = False, now
    cdef object x
    while i < na or j < nb:
        if j >= nb or (i < na and a[i] < b[j]):
            x = a[i]
        else:
            x = b[j]
        if i < na and a[i] == x:
            i += 1
        if j < nb and b[j] == x:
            j += 1
        now = _keep(op, i & 1, j & 1)
        if now != inside:
            out.append(x)
            inside = now
    return tuple(out)


def combine(tuple a, tuple b, int op):
    cdef object top = 1 << SMALL_EXP
    if (not a or a[len(a) - 1] <= top) and (not b or b[len(b) - 1] <= top):
        return _combine_small(a, b, op)
    return _combine_obj(a, b, op)


def rescale(tuple ends, int shift):
    if shift == 0:
        return ends
    return tuple([e << shift for e in ends])


def reduce_scale(tuple ends, object exp):
    cdef object acc = 0
    for e in ends:
        acc |= e
    if acc == 0:
        return ends, 0
    tz = (acc & -acc).bit_length() - 1
    shift = min(tz, exp)
    if shift == 0:
        return ends, exp
    return tuple([e >> shift for e in ends]), exp - shift
