"""Unitary and switching equivalence of Parseval frames.

Two Parseval frames are unitarily equivalent exactly when their Grammians
are equal, and switching equivalent exactly when their Grammians are
conjugate by a permutation matrix. The permutation-conjugation orbit is
fingerprinted by a canonical key: the lexicographically minimal row-major
upper triangle over all simultaneous row/column permutations.

The Grammian criteria are only proven for Parseval frames, so the
equivalence operations refuse other inputs instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BinMatrix, BinVector, is_unitary, mat_mul, mat_vec
from .frames import Frame, frame_operators, grammian, is_parseval


class ShapeMismatchError(ValueError):
    """Frames of unequal dimension or size were compared."""


class NotParsevalError(ValueError):
    """An equivalence test received a non-Parseval frame."""


class RepeatsPresentError(ValueError):
    """Set-theoretic complement of a family with repeated vectors."""


class DimensionTooSmallError(ValueError):
    """Complement duality needs n >= 3."""


def is_trivially_redundant(frame: Frame) -> bool:
    """True iff the family contains the zero vector or a repeated vector."""
    encs = frame.encodings
    return 0 in encs or len(set(encs)) < len(encs)


@dataclass(frozen=True)
class CanonicalKey:
    """Stable fingerprint of a Grammian's permutation-conjugation orbit.

    The packed bytes hold the upper triangle (row-major, diagonal
    included) of the minimal conjugate, MSB-first within each byte. The
    text form `k<size>:<hex>` is the class identifier used in catalogs.
    """

    size: int
    packed: bytes

    def __str__(self) -> str:
        return f"k{self.size}:{self.packed.hex()}"

    @classmethod
    def from_bits(cls, size: int, bits: tuple[int, ...]) -> "CanonicalKey":
        assert len(bits) == size * (size + 1) // 2
        out = bytearray((len(bits) + 7) // 8)
        for t, b in enumerate(bits):
            if b:
                out[t >> 3] |= 0x80 >> (t & 7)
        return cls(size, bytes(out))


def _min_lex_form(rows: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimal upper-triangle string of a symmetric bit matrix.

    rows[i] holds row i with column j at bit j. Returns (bits, perm) with
    bits the row-major upper triangle of the minimum over all simultaneous
    permutations, and perm the witness: min[i][j] = G[perm[i]][perm[j]].

    Backtracking over an ordered partition of the indices: the next fixed
    index must come from the first cell, and the remaining cells refine by
    adjacency to it (zeros first). Cells have constant adjacency to every
    fixed index, so each step determines one whole row of the string and
    pruning compares exact contiguous prefixes against the incumbent.
    Candidate order is (diagonal, produced row), which lands a near-minimal
    incumbent on the first descent.
    """
    k = len(rows)
    if k == 0:
        return (), ()
    diag = [(rows[i] >> i) & 1 for i in range(k)]
    best: list[int] | None = None
    best_perm: tuple[int, ...] = ()

    def dfs(fixed: list[int], cells: list[list[int]], built: list[int]) -> None:
        nonlocal best, best_perm
        if best is not None and built > best[:len(built)]:
            return
        if not cells:
            if best is None or built < best:
                best = list(built)
                best_perm = tuple(fixed)
            return
        head = cells[0]
        # interchangeable candidates (identical rows off their own columns)
        # produce identical subtrees; keep the first of each group
        cands: list[int] = []
        for v in head:
            for u in cands:
                mask = ~((1 << v) | (1 << u))
                if diag[v] == diag[u] and (rows[v] & mask) == (rows[u] & mask):
                    break
            else:
                cands.append(v)
        options = []
        for v in cands:
            rest = [u for u in head if u != v]
            new_cells = []
            row = [diag[v]]
            for cell in ([rest] if rest else []) + cells[1:]:
                c0 = [u for u in cell if not (rows[v] >> u) & 1]
                c1 = [u for u in cell if (rows[v] >> u) & 1]
                if c0:
                    new_cells.append(c0)
                    row.extend([0] * len(c0))
                if c1:
                    new_cells.append(c1)
                    row.extend([1] * len(c1))
            options.append((row, v, new_cells))
        options.sort(key=lambda t: (t[0], t[1]))
        for row, v, new_cells in options:
            fixed.append(v)
            dfs(fixed, new_cells, built + row)
            fixed.pop()

    dfs([], [list(range(k))], [])
    assert best is not None
    return tuple(best), best_perm


def canonical_key(G: BinMatrix) -> CanonicalKey:
    """Canonical key of a symmetric matrix; equal keys iff the matrices
    are conjugate by a permutation matrix."""
    if not G.is_symmetric():
        raise ValueError("canonical key needs a symmetric square matrix")
    bits, _ = _min_lex_form(G.row_bits)
    return CanonicalKey.from_bits(G.rows, bits)


def _require_comparable(F: Frame, H: Frame) -> None:
    if F.dim != H.dim or F.size != H.size:
        raise ShapeMismatchError(
            f"cannot compare {F.size} vectors in Z_2^{F.dim} "
            f"with {H.size} vectors in Z_2^{H.dim}")
    if not is_parseval(F) or not is_parseval(H):
        raise NotParsevalError(
            "the Grammian criterion is only proven for Parseval frames")


def unitary_equivalent(F: Frame, H: Frame) -> BinMatrix | None:
    """Unitary U with U f_i = h_i for all i, or None.

    For Parseval frames this succeeds exactly when the Grammians are
    equal, and then U = synthesis(H) * analysis(F) is a witness.
    """
    _require_comparable(F, H)
    if grammian(F).row_bits != grammian(H).row_bits:
        return None
    U = mat_mul(frame_operators(H).synthesis, F.analysis_matrix())
    assert is_unitary(U)
    assert all(mat_vec(U, f) == h for f, h in zip(F.vectors, H.vectors))
    return U


def switching_equivalent(F: Frame, H: Frame) -> tuple[BinMatrix, tuple[int, ...]] | None:
    """Witness (U, pi) with f_j = U h_pi(j) for all j, or None.

    pi is a 0-based tuple. Both Grammians are aligned to their canonical
    form; equal keys yield the permutation between them, and the unitary
    comes from the unitary-equivalence construction applied to the
    permuted family. The witness is verified before it is returned.
    """
    _require_comparable(F, H)
    bits_f, perm_f = _min_lex_form(grammian(F).row_bits)
    bits_h, perm_h = _min_lex_form(grammian(H).row_bits)
    if bits_f != bits_h:
        return None
    k = F.size
    inv_f = [0] * k
    for pos, idx in enumerate(perm_f):
        inv_f[idx] = pos
    pi = tuple(perm_h[inv_f[j]] for j in range(k))
    permuted = Frame(H.dim, tuple(H.vectors[pi[j]] for j in range(k)))
    U = unitary_equivalent(permuted, F)
    assert U is not None  # Grammians agree by construction of pi
    assert all(mat_vec(U, H.vectors[pi[j]]) == F.vectors[j] for j in range(k))
    return U, pi


def complement(frame: Frame, drop_zero: bool = False) -> Frame:
    """Set-theoretic complement in Z_2^n, vectors in ascending encoding.

    For n >= 3 the complement of a no-repeat Parseval frame is again
    Parseval (with or without the zero vector, which contributes nothing
    to the frame operator), and complements preserve switching
    equivalence. Both facts need set semantics, so repeated vectors are
    rejected.
    """
    if frame.dim < 3:
        raise DimensionTooSmallError(
            f"complement duality needs n >= 3, got n = {frame.dim}")
    encs = frame.encodings
    present = set(encs)
    if len(present) < len(encs):
        raise RepeatsPresentError("complement of a family with repeated vectors")
    rest = [v for v in range(1 << frame.dim) if v not in present]
    if drop_zero:
        rest = [v for v in rest if v != 0]
    return Frame.from_encodings(frame.dim, rest)
