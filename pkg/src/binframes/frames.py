"""Frames and Parseval frames over binary vector spaces.

A family of vectors in Z_2^n is a frame when it spans. A Parseval frame
additionally reconstructs every x as the sum of (x, f_j) f_j, which holds
exactly when the frame operator S equals the identity. The type admits
non-frames, repeats and zero vectors on purpose: the properties in this
module are exercised on degenerate inputs rather than forbidding them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .gf2 import BinMatrix, BinVector, dot, inverse, mat_mul, rank, select_basis


@dataclass(frozen=True)
class Frame:
    """Ordered finite family of vectors in Z_2^n; order is significant."""

    dim: int
    vectors: tuple[BinVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        for v in self.vectors:
            if v.dim != self.dim:
                raise ValueError(
                    f"vector of dimension {v.dim} in frame over Z_2^{self.dim}")

    @classmethod
    def from_encodings(cls, dim: int, encodings: Sequence[int]) -> "Frame":
        return cls(dim, tuple(BinVector(dim, e) for e in encodings))

    @property
    def size(self) -> int:
        return len(self.vectors)

    @property
    def encodings(self) -> tuple[int, ...]:
        return tuple(v.bits for v in self.vectors)

    def analysis_matrix(self) -> BinMatrix:
        """The k x n matrix with the frame vectors as rows."""
        return BinMatrix(self.size, self.dim, self.encodings)


def parse_frame(text: str) -> Frame:
    """Parse the frame literal grammar `n; v1,v2,...,vk`.

    Whitespace-insensitive; the vector list may be empty. This exact
    grammar is shared by the CLI and the golden files.
    """
    head, sep, tail = text.partition(";")
    if not sep:
        raise ValueError(f"missing ';' in frame literal {text!r}")
    try:
        dim = int(head.strip())
    except ValueError:
        raise ValueError(f"bad dimension in frame literal {text!r}") from None
    if dim < 1:
        raise ValueError(f"dimension must be positive in {text!r}")
    tail = tail.strip()
    if not tail:
        return Frame(dim, ())
    try:
        encodings = [int(p.strip()) for p in tail.split(",")]
    except ValueError:
        raise ValueError(f"bad vector list in frame literal {text!r}") from None
    limit = 1 << dim
    for e in encodings:
        if not 0 <= e < limit:
            raise ValueError(f"encoding {e} out of range for Z_2^{dim}")
    return Frame.from_encodings(dim, encodings)


def format_frame(frame: Frame) -> str:
    if not frame.vectors:
        return f"{frame.dim};"
    return f"{frame.dim}; " + ",".join(str(e) for e in frame.encodings)


@dataclass(frozen=True)
class FrameOperators:
    """Analysis, synthesis, frame and Grammian operators of one family."""

    analysis: BinMatrix    # k x n, frame vectors as rows
    synthesis: BinMatrix   # n x k, transpose of analysis
    frame_op: BinMatrix    # n x n, S = synthesis * analysis
    grammian: BinMatrix    # k x k, G = analysis * synthesis


def frame_operators(frame: Frame) -> FrameOperators:
    theta = frame.analysis_matrix()
    theta_star = theta.transpose()
    return FrameOperators(
        analysis=theta,
        synthesis=theta_star,
        frame_op=mat_mul(theta_star, theta),
        grammian=mat_mul(theta, theta_star),
    )


def grammian(frame: Frame) -> BinMatrix:
    """The k x k Grammian; entry (i, j) is (f_j, f_i)."""
    theta = frame.analysis_matrix()
    return mat_mul(theta, theta.transpose())


def is_frame(frame: Frame) -> bool:
    """True iff the family spans Z_2^n."""
    return rank(frame.analysis_matrix()) == frame.dim


def is_parseval(frame: Frame) -> bool:
    """True iff the frame operator S equals the identity.

    The matrix route costs O(k n^2) words; the equivalent reconstruction
    sweep over all 2^n vectors is kept in parseval_by_sweep as an
    independent check.
    """
    ops = frame_operators(frame)
    return ops.frame_op.row_bits == BinMatrix.identity(frame.dim).row_bits


def parseval_by_sweep(frame: Frame) -> bool:
    """Check x = sum((x, f_j) f_j) directly for every x in Z_2^n."""
    n = frame.dim
    encs = frame.encodings
    for x in range(1 << n):
        acc = 0
        for e in encs:
            if (x & e).bit_count() & 1:
                acc ^= e
        if acc != x:
            return False
    return True


def compute_dual(frame: Frame) -> Optional[tuple[BinVector, ...]]:
    """Construct a dual family giving y = sum((y, g_j) f_j), or None.

    When the family spans, the duals are zero outside the
    lexicographically-first basis subset; on that subset they are the
    columns of the inverse of the n x n basis submatrix (the dual basis).
    Returns None when the family is not a frame.
    """
    n = frame.dim
    basis_idx = select_basis(list(frame.vectors), n)
    if basis_idx is None:
        return None
    sub = BinMatrix(n, n, tuple(frame.vectors[i - 1].bits for i in basis_idx))
    inv = inverse(sub)
    assert inv is not None  # select_basis returned an independent subset
    inv_t = inv.transpose()
    duals = [BinVector(n, 0)] * frame.size
    for col, i in enumerate(basis_idx):
        duals[i - 1] = inv_t.row(col)
    out = tuple(duals)
    assert verify_reconstruction(frame, list(out))
    return out


def verify_reconstruction(frame: Frame, duals: Sequence[BinVector]) -> bool:
    """True iff y = sum((y, d_j) f_j) for every y in Z_2^n.

    By bilinearity it suffices to check the n standard basis vectors; the
    full sweep over 2^n vectors is only used as a test oracle.
    """
    if len(duals) != frame.size:
        raise ValueError(
            f"family size mismatch: {frame.size} vectors, {len(duals)} duals")
    n = frame.dim
    for d in duals:
        if d.dim != n:
            raise ValueError(f"dual of dimension {d.dim} against Z_2^{n}")
    for i in range(n):
        e = 1 << i
        acc = 0
        for f, d in zip(frame.encodings, duals):
            if (e & d.bits).bit_count() & 1:
                acc ^= f
        if acc != e:
            return False
    return True


def parseval_identity_holds(frame: Frame) -> bool:
    """Scalar identity sum((x, f_j)^2) = (x, x) checked over all 2^n x.

    Weaker than being a Parseval frame: some non-spanning families satisfy
    it, see weight_two_family.
    """
    n = frame.dim
    encs = frame.encodings
    for x in range(1 << n):
        lhs = 0
        for e in encs:
            lhs ^= (x & e).bit_count() & 1
        if lhs != x.bit_count() & 1:
            return False
    return True


def weight_two_family(n: int) -> Frame:
    """The standard family satisfying the scalar identity without spanning.

    For even n, all C(n, 2) vectors with exactly two ones (every
    coordinate appears in n-1 of them, an odd count). For odd n, the first
    standard basis vector together with the weight-two family on
    coordinates 2..n. Linear combinations keep an even weight on the
    relevant coordinates, so the family never spans.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    lo = 2 if n % 2 else 1
    pairs = [(1 << (i - 1)) | (1 << (j - 1))
             for i in range(lo, n + 1) for j in range(i + 1, n + 1)]
    encs = ([1] + pairs) if n % 2 else pairs
    return Frame.from_encodings(n, encs)


def shift_matrix(n: int) -> BinMatrix:
    """Length-preserving but rank-deficient map: (Ax, Ax) = (x, x) always.

    Entry (i, j) is 1 when i = j = 1 or j - i = 1, so A sends
    (a_1, ..., a_n) to (a_1 + a_2, a_3, ..., a_n, 0). The last row is
    zero, hence rank n-1 and no inverse, yet the quadratic form is
    preserved; no unitary behaves this way over the reals.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    rows = []
    for i in range(1, n + 1):
        word = 0
        for j in range(1, n + 1):
            if (i == 1 and j == 1) or j - i == 1:
                word |= 1 << (j - 1)
        rows.append(word)
    return BinMatrix(n, n, tuple(rows))
