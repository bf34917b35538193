"""Pure-Python solver kernels (fallback when the compiled extension is not
built). Algorithms, RNG streams, and tie-breaking match satqubo._kernels
exactly; only speed differs.

QUBO problems arrive pre-flattened: diag[i] is the diagonal weight of qubit
i, and (off, idx, w) is a symmetric CSR adjacency (each coupling appears in
both endpoints' neighbor lists, neighbors sorted by index).
"""

import math

from .rng import seed_state, xorshift64star


def maxsat(n, pos, neg):
    """Exhaustive MAX-SAT count over all 2^n assignments.

    pos/neg are per-clause variable bitmasks with variable j at bit
    (n - 1 - j); enumeration order is therefore lexicographic and the first
    maximum found is the lexicographically smallest witness.
    """
    m = len(pos)
    best_count = -1
    best_mask = 0
    for a in range(1 << n):
        sat = 0
        for c in range(m):
            if (a & pos[c]) != 0 or (a & neg[c]) != neg[c]:
                sat += 1
        if sat > best_count:
            best_count = sat
            best_mask = a
    return best_count, best_mask


def exhaustive(k, diag, off, idx, w, collect):
    """Global QUBO minimum over all 2^k states via Gray-code enumeration.

    Bit p of the state integer holds x_{k-1-p}, so the integer value of a
    state equals its lexicographic rank and ties resolve to the smallest
    integer. Returns (best_mask, best_energy, minima) where minima is the
    list of all minimizing masks when collect is true, else None.
    """
    gray = 0
    cur_e = 0.0
    best_e = 0.0
    best_mask = 0
    minima = [0] if collect else None
    for c in range(1, 1 << k):
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
        gray ^= 1 << p
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
    return best_mask, best_e, minima


def _energy(k, diag, off, idx, w, x):
    e = 0.0
    for i in range(k):
        if x[i]:
            e += diag[i]
            for t in range(off[i], off[i + 1]):
                j = idx[t]
                if j > i and x[j]:
                    e += w[t]
    return e


def sa_run(k, diag, off, idx, w, sweeps, restarts, t0, ratio, seed):
    """Best-of-restarts single-flip Metropolis annealing, geometric cooling.

    Restart r draws from an xorshift64* stream seeded from (seed XOR r).
    The all-zero state is always a candidate, and energy ties resolve to the
    lexicographically smallest bit-vector. Returns (bits, best_energy).
    """
    best_x = bytes(k)
    best_e = 0.0
    x = bytearray(k)
    for r in range(restarts):
        state = seed_state(seed, r)
        for i in range(k):
            state, out = xorshift64star(state)
            x[i] = out >> 63
        e = _energy(k, diag, off, idx, w, x)
        if e < best_e or (e == best_e and bytes(x) < best_x):
            best_e = e
            best_x = bytes(x)
        temp = t0
        for _ in range(sweeps):
            for i in range(k):
                acc = diag[i]
                for t in range(off[i], off[i + 1]):
                    if x[idx[t]]:
                        acc += w[t]
                delta = -acc if x[i] else acc
                if delta <= 0.0:
                    accept = True
                else:
                    state, out = xorshift64star(state)
                    u = (out >> 11) * (1.0 / 9007199254740992.0)
                    accept = u < math.exp(-delta / temp)
                if accept:
                    x[i] ^= 1
                    e += delta
                    if e < best_e or (e == best_e and bytes(x) < best_x):
                        best_e = e
                        best_x = bytes(x)
            temp *= ratio
    return best_x, best_e
