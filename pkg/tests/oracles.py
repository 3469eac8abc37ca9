"""Independent naive oracles used to cross-check the bit-packed paths.

Everything here works on unpacked list-of-lists (or plain combinations
streams) and deliberately shares no code with the package: elimination,
products and subset filters are re-derived from scratch so the two routes
can disagree when one is wrong.
"""

from itertools import combinations, permutations


def vec_of(enc, n):
    return [(enc >> i) & 1 for i in range(n)]


def enc_of(coords):
    return sum(b << i for i, b in enumerate(coords))


def dot_naive(x, y):
    return sum(a * b for a, b in zip(x, y)) % 2


def transpose_naive(A):
    return [list(r) for r in zip(*A)]


def identity_naive(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul_naive(A, B):
    m, p = len(A), len(B)
    n = len(B[0]) if B else 0
    return [[sum(A[i][l] * B[l][j] for l in range(p)) % 2 for j in range(n)]
            for i in range(m)]


def rank_naive(A):
    M = [row[:] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(m):
            if i != r and M[i][c]:
                M[i] = [(a + b) % 2 for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def inverse_naive(A):
    n = len(A)
    M = [A[i][:] + identity_naive(n)[i] for i in range(n)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if M[i][c]), None)
        if piv is None:
            return None
        M[r], M[piv] = M[piv], M[r]
        for i in range(n):
            if i != r and M[i][c]:
                M[i] = [(a + b) % 2 for a, b in zip(M[i], M[r])]
        r += 1
    return [row[n:] for row in M]


def frame_S_naive(encs, n):
    rows = [vec_of(e, n) for e in encs]
    if not rows:
        return [[0] * n for _ in range(n)]
    return matmul_naive(transpose_naive(rows), rows)


def frame_G_naive(encs, n):
    rows = [vec_of(e, n) for e in encs]
    return matmul_naive(rows, transpose_naive(rows))


def is_parseval_naive(encs, n):
    return frame_S_naive(encs, n) == identity_naive(n)


def parseval_subsets_bruteforce(n, k):
    """Test every k-subset of the nonzero vectors; no pruning anywhere.

    The frame operator of a subset is the XOR of per-vector rank-one
    contributions, tabulated once up front.
    """
    full = (1 << n) - 1
    outer = [None] * (full + 1)
    for v in range(1, full + 1):
        rows = tuple(v if (v >> i) & 1 else 0 for i in range(n))
        outer[v] = rows
    ident = tuple(1 << i for i in range(n))
    hits = []
    for sub in combinations(range(1, full + 1), k):
        acc = [0] * n
        for v in sub:
            ov = outer[v]
            for i in range(n):
                acc[i] ^= ov[i]
        if tuple(acc) == ident:
            hits.append(sub)
    return hits


def reconstruction_sweep_naive(encs, duals, n):
    """y = sum((y, d_j) f_j) checked over all 2^n vectors y."""
    for y in range(1 << n):
        yv = vec_of(y, n)
        acc = [0] * n
        for f, d in zip(encs, duals):
            if dot_naive(yv, vec_of(d, n)):
                acc = [(a + b) % 2 for a, b in zip(acc, vec_of(f, n))]
        if acc != yv:
            return False
    return True


def upper_tri_string(G, perm):
    k = len(G)
    return tuple(G[perm[i]][perm[j]] for i in range(k) for j in range(i, k))


def min_lex_bruteforce(G):
    """Factorial minimization of the upper-triangle string (pure python)."""
    k = len(G)
    best = None
    for p in permutations(range(k)):
        s = upper_tri_string(G, p)
        if best is None or s < best:
            best = s
    return best


def min_lex_bruteforce_np(G):
    """Vectorized factorial minimization, usable up to k = 8."""
    import numpy as np
    k = len(G)
    A = np.array(G, dtype=np.uint8)
    perms = np.array(list(permutations(range(k))), dtype=np.intp)
    conj = A[perms[:, :, None], perms[:, None, :]]
    iu = np.triu_indices(k)
    tri = conj[:, iu[0], iu[1]]
    return tuple(min(bytes(row) for row in tri))


def pack_bits_msb(bits):
    """Pack a bit tuple into bytes, MSB-first, trailing zeros."""
    out = bytearray((len(bits) + 7) // 8)
    for t, b in enumerate(bits):
        if b:
            out[t >> 3] |= 0x80 >> (t & 7)
    return bytes(out)


_UNITARY_CACHE = {}


def all_unitaries(n):
    """Every U with U*U = I over GF(2), by trying all 2^(n*n) matrices.

    Returned as list-of-lists. Used to generate test stimuli (n <= 4), so
    the membership test runs on packed words for speed; the packed check
    is itself validated elsewhere against dot-product preservation.
    """
    if n in _UNITARY_CACHE:
        return _UNITARY_CACHE[n]
    out = []
    mask = (1 << n) - 1
    ident = tuple(1 << i for i in range(n))
    for bits in range(1 << (n * n)):
        rows = [(bits >> (n * i)) & mask for i in range(n)]
        cols = [sum(((rows[i] >> j) & 1) << i for i in range(n))
                for j in range(n)]
        utu = []
        for j in range(n):
            acc = 0
            w = cols[j]
            while w:
                i = (w & -w).bit_length() - 1
                acc ^= rows[i]
                w &= w - 1
            utu.append(acc)
        if tuple(utu) == ident:
            out.append([[(r >> j) & 1 for j in range(n)] for r in rows])
    _UNITARY_CACHE[n] = out
    return out


def apply_matrix(U, enc, n):
    """Left-multiply the encoded vector by the list-of-lists matrix."""
    x = vec_of(enc, n)
    return enc_of([sum(U[i][j] * x[j] for j in range(n)) % 2 for i in range(n)])
