# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled solver kernels. Mirrors satqubo._kernels_py exactly (same RNG,
same iteration order, same tie-breaking) so both backends are interchangeable.
"""

from libc.math cimport exp
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc


cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15u


cdef inline uint64_t splitmix64(uint64_t z) noexcept:
    z = z + GOLDEN
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9u
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBu
    return z ^ (z >> 31)


cdef inline uint64_t xorshift64star(uint64_t* s) noexcept:
    cdef uint64_t x = s[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    s[0] = x
    return x * 0x2545F4914F6CDD1Du


cdef inline uint64_t seed_state(uint64_t seed, uint64_t stream) noexcept:
    cdef uint64_t s = splitmix64(seed ^ stream)
    return s if s != 0 else GOLDEN


def maxsat(int n, pos, neg):
    cdef int m = len(pos)
    cdef uint64_t* posm = <uint64_t*>malloc(m * sizeof(uint64_t))
    cdef uint64_t* negm = <uint64_t*>malloc(m * sizeof(uint64_t))
    cdef int c
    cdef uint64_t a, total
    cdef int sat, best_count = -1
    cdef uint64_t best_mask = 0
    if m == 0:
        free(posm)
        free(negm)
        return 0, 0
    if posm == NULL or negm == NULL:
        free(posm)
        free(negm)
        raise MemoryError()
    try:
        for c in range(m):
            posm[c] = pos[c]
            negm[c] = neg[c]
        total = (<uint64_t>1) << n
        a = 0
        while a < total:
            sat = 0
            for c in range(m):
                if (a & posm[c]) != 0 or (a & negm[c]) != negm[c]:
                    sat += 1
            if sat > best_count:
                best_count = sat
                best_mask = a
            a += 1
    finally:
        free(posm)
        free(negm)
    return best_count, best_mask


def exhaustive(int k, double[:] diag, int64_t[:] off, int64_t[:] idx,
               double[:] w, bint collect):
    cdef uint64_t gray = 0, best_mask = 0, c, total, cc
    cdef double cur_e = 0.0, best_e = 0.0, acc
    cdef int p, i
    cdef int64_t t
    cdef list minima = [0] if collect else None
    total = (<uint64_t>1) << k
    c = 1
    while c < total:
        cc = c
        p = 0
        while not cc & 1:
            cc >>= 1
            p += 1
        i = k - 1 - p
        acc = diag[i]
        for t in range(off[i], off[i + 1]):
            if (gray >> (k - 1 - idx[t])) & 1:
                acc += w[t]
        if (gray >> p) & 1:
            cur_e -= acc
        else:
            cur_e += acc
        gray ^= (<uint64_t>1) << p
        if cur_e < best_e:
            best_e = cur_e
            best_mask = gray
            if collect:
                minima = [gray]
        elif cur_e == best_e:
            if gray < best_mask:
                best_mask = gray
            if collect:
                minima.append(gray)
        c += 1
    return best_mask, best_e, minima


cdef double _energy(int k, double[:] diag, int64_t[:] off, int64_t[:] idx,
                    double[:] w, unsigned char[:] x) noexcept:
    cdef double e = 0.0
    cdef int i
    cdef int64_t t, j
    for i in range(k):
        if x[i]:
            e += diag[i]
            for t in range(off[i], off[i + 1]):
                j = idx[t]
                if j > i and x[j]:
                    e += w[t]
    return e


def sa_run(int k, double[:] diag, int64_t[:] off, int64_t[:] idx, double[:] w,
           int sweeps, int restarts, double t0, double ratio, uint64_t seed):
    cdef bytearray xb = bytearray(k)
    cdef unsigned char[:] x = xb
    cdef bytes best_x = bytes(k)
    cdef double best_e = 0.0, e, acc, delta, temp, u
    cdef uint64_t state
    cdef int r, s, i
    cdef int64_t t
    cdef bint accept
    for r in range(restarts):
        state = seed_state(seed, <uint64_t>r)
        for i in range(k):
            x[i] = <unsigned char>(xorshift64star(&state) >> 63)
        e = _energy(k, diag, off, idx, w, x)
        if e < best_e or (e == best_e and bytes(xb) < best_x):
            best_e = e
            best_x = bytes(xb)
        temp = t0
        for s in range(sweeps):
            for i in range(k):
                acc = diag[i]
                for t in range(off[i], off[i + 1]):
                    if x[idx[t]]:
                        acc += w[t]
                delta = -acc if x[i] else acc
                if delta <= 0.0:
                    accept = True
                else:
                    u = (xorshift64star(&state) >> 11) * (1.0 / 9007199254740992.0)
                    accept = u < exp(-delta / temp)
                if accept:
                    x[i] ^= 1
                    e += delta
                    if e < best_e or (e == best_e and bytes(xb) < best_x):
                        best_e = e
                        best_x = bytes(xb)
            temp *= ratio
    return best_x, best_e
