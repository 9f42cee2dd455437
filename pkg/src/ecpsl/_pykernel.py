"""Pure-Python interval sweep kernels.

Endpoint sequences are flat tuples ``(lo0, hi0, lo1, hi1, ...)`` of integers
at a common dyadic scale, strictly increasing.  The compiled module
``_ckernel`` exposes the same functions.
"""

OP_AND = 0
OP_OR = 1
OP_DIFF = 2
OP_XOR = 3


def _keep(op, in_a, in_b):
    if op == OP_AND:
        return in_a and in_b
    if op == OP_OR:
        return in_a or in_b
    if op == OP_DIFF:
        return in_a and not in_b
    return in_a != in_b


def combine(a, b, op):
    """Apply a boolean operation to two endpoint sequences at the same scale.

    The result is normalized: touching intervals come out merged.
    """
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    inside = False
    while i < na or j < nb:
        if j >= nb or (i < na and a[i] < b[j]):
            x = a[i]
        else:
            x = b[j]
        if i < na and a[i] == x:
            i += 1
        if j < nb and b[j] == x:
            j += 1
        now = _keep(op, i & 1 == 1, j & 1 == 1)
        if now != inside:
            out.append(x)
            inside = now
    return tuple(out)


def rescale(ends, shift):
    """Multiply every endpoint by ``2**shift``."""
    if shift == 0:
        return ends
    return tuple(e << shift for e in ends)


def reduce_scale(ends, exp):
    """Return ``(ends, exp)`` with the smallest exponent representing the same set."""
    acc = 0
    for e in ends:
        acc |= e
    if acc == 0:
        return ends, 0
    tz = (acc & -acc).bit_length() - 1
    shift = min(tz, exp)
    if shift == 0:
        return ends, exp
    return tuple(e >> shift for e in ends), exp - shift
