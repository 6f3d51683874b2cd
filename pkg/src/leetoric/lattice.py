"""Exact integer arithmetic and radius-1 Lee-sphere geometry on Z_q^n.

Vectors are plain tuples of Python ints and matrices are sequences of
row vectors, so every computation in this module is exact; nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

IntVector = tuple[int, ...]


def canonical_rep(x: int, q: int) -> int:
    """Centered representative of the residue x, in (-q/2, q/2].

    q must be odd so the range has no tie; x must already be reduced,
    i.e. 0 <= x < q.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {q}")
    if not 0 <= x < q:
        raise ValueError(f"residue {x} out of range [0, {q})")
    return x if x <= (q - 1) // 2 else x - q


def centered(v: Sequence[int], q: int) -> IntVector:
    """Entrywise centered representatives of a residue vector."""
    return tuple(canonical_rep(x, q) for x in v)


def mannheim_weight(v: Sequence[int], q: int) -> int:
    """Sum of |canonical_rep(entry)| over the entries of a residue vector."""
    return sum(abs(canonical_rep(x, q)) for x in v)


def lee_distance(u: Sequence[int], v: Sequence[int], q: int) -> int:
    """Mannheim weight of (u - v) mod q; a metric on Z_q^n."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(abs(canonical_rep((a - b) % q, q)) for a, b in zip(u, v))


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free (Bareiss) elimination: every division below is exact,
    so the result is correct for arbitrarily large integer entries.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    m = [[int(x) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def slot_offset(b: int, n: int) -> IntVector:
    """Offset vector of Lee-sphere slot b.

    Slot 0 is the center; slot 2i-1 is +e_i and slot 2i is -e_i, for
    i = 1..n.  This fixed order is shared by LeeSphere.members and the
    interleaver's super-block layout.
    """
    if not 0 <= b <= 2 * n:
        raise ValueError(f"slot {b} out of range [0, {2 * n}]")
    off = [0] * n
    if b > 0:
        i = (b + 1) // 2
        off[i - 1] = 1 if b % 2 == 1 else -1
    return tuple(off)


@dataclass(frozen=True)
class LeeSphere:
    """A center point of Z_q^n together with its 2n unit neighbours."""

    center: IntVector
    q: int
    members: tuple[IntVector, ...]


def lee_sphere(center: Sequence[int], q: int) -> LeeSphere:
    """Radius-1 Lee sphere around center, members listed in slot order."""
    n = len(center)
    center = tuple(center)
    _check_residues(center, q)
    members = tuple(
        tuple((c + d) % q for c, d in zip(center, slot_offset(b, n)))
        for b in range(2 * n + 1)
    )
    return LeeSphere(center, q, members)


def hypercube_lin_index(z: Sequence[int], q: int) -> int:
    """Linear index of a hypercube coordinate, big-endian in coordinate 1.

    lin(z) = z_1 q^{n-1} + z_2 q^{n-2} + ... + z_n, so a contiguous index
    range corresponds to a fixed first coordinate (a cross-section).
    """
    idx = 0
    for x in z:
        if not 0 <= x < q:
            raise ValueError(f"coordinate {x} out of range [0, {q})")
        idx = idx * q + x
    return idx


def hypercube_from_lin(idx: int, q: int, n: int) -> IntVector:
    """Inverse of hypercube_lin_index."""
    if not 0 <= idx < q**n:
        raise ValueError(f"index {idx} out of range [0, {q**n})")
    out = [0] * n
    for i in range(n - 1, -1, -1):
        idx, out[i] = divmod(idx, q)
    return tuple(out)


def _check_residues(v: Sequence[int], q: int) -> None:
    for x in v:
        if not 0 <= x < q:
            raise ValueError(f"coordinate {x} out of range [0, {q})")
