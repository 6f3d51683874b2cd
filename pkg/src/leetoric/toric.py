"""Toric-code parameter calculus and face indexing of the q^n lattice.

Qubits sit on the 2-faces of the hypercubic lattice.  A face is owned by
the hypercube at its minimal corner, so each hypercube owns exactly
alpha = n(n-1)/2 faces (one per unordered axis pair) and the lattice has
alpha * q^n faces in total, even though each face geometrically touches
2^{n-2} hypercubes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import IntVector, hypercube_from_lin, hypercube_lin_index
from .leecode import PerfectLeeCode, generator_matrix


@dataclass(frozen=True)
class ToricParams:
    """[[N, k, d]] plus derived rate and gain of the component code."""

    n: int
    q: int
    N: int
    k: int
    d: int
    t: int
    R: Fraction
    G: Fraction


def code_params(n: int, code: PerfectLeeCode | None = None) -> ToricParams:
    """Parameters of the toric code built on one Lee-sphere region.

    N counts the faces of the radius-1 Lee sphere (alpha faces on each
    of its q hypercubes), k is one alpha per handle of the n-torus, and
    d is computed by the minimum-Mannheim-distance sphere search rather
    than assumed.
    """
    if n < 5:
        raise ValueError(f"unsupported dimension: n must be >= 5, got {n}")
    if code is None:
        code = generator_matrix(n)
    scan = code.min_mannheim_distance()
    if not scan.exact:
        raise AssertionError("minimum distance exceeded the search radius")
    d = scan.distance
    q = code.q
    alpha = code.alpha
    N = alpha * q
    t = (d - 1) // 2
    R = Fraction(alpha, N)
    return ToricParams(n=n, q=q, N=N, k=alpha, d=d, t=t, R=R, G=R * (t + 1))


def face_count(n: int) -> int:
    """Total number of faces of the q^n hypercubic lattice, q = 2n + 1."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    q = 2 * n + 1
    return (n * (n - 1) // 2) * q**n


def pair_rank(a: int, b: int, n: int) -> int:
    """Lexicographic rank of the axis pair (a, b), 1 <= a < b <= n."""
    if not 1 <= a < b <= n:
        raise ValueError(f"malformed axis pair ({a}, {b}) for dimension {n}")
    return (a - 1) * n - a * (a - 1) // 2 + (b - a - 1)


def pair_from_rank(o: int, n: int) -> tuple[int, int]:
    """Inverse of pair_rank."""
    if not 0 <= o < n * (n - 1) // 2:
        raise ValueError(f"orientation {o} out of range [0, {n * (n - 1) // 2})")
    a = 1
    while o >= n - a:
        o -= n - a
        a += 1
    return a, a + 1 + o


@dataclass(frozen=True)
class FaceIndex:
    """One qubit slot: the owning hypercube plus an unordered axis pair."""

    anchor: IntVector
    axes: tuple[int, int]

    def __post_init__(self) -> None:
        a, b = self.axes
        if not 1 <= a < b <= len(self.anchor):
            raise ValueError(
                f"malformed axis pair ({a}, {b}) for dimension {len(self.anchor)}"
            )

    @property
    def orientation(self) -> int:
        return pair_rank(*self.axes, len(self.anchor))


def face_lin_index(face: FaceIndex, q: int) -> int:
    """Linear face index: hypercube index * alpha + orientation."""
    n = len(face.anchor)
    alpha = n * (n - 1) // 2
    return hypercube_lin_index(face.anchor, q) * alpha + face.orientation


def face_from_lin(idx: int, n: int, q: int) -> FaceIndex:
    """Inverse of face_lin_index."""
    alpha = n * (n - 1) // 2
    if not 0 <= idx < alpha * q**n:
        raise ValueError(f"face index {idx} out of range [0, {alpha * q**n})")
    lin, o = divmod(idx, alpha)
    return FaceIndex(hypercube_from_lin(lin, q, n), pair_from_rank(o, n))


@dataclass(frozen=True)
class StabilizerCheck2D:
    """Vertex and plaquette operator supports of the 2D code on a torus.

    Edge layout on the q x q torus: horizontal edge (x, y) has index
    y*q + x, vertical edge (x, y) has index q^2 + y*q + x.
    """

    q: int
    n_edges: int
    params: tuple[int, int, int]
    vertex_supports: tuple[tuple[int, int, int, int], ...]
    face_supports: tuple[tuple[int, int, int, int], ...]
    all_commute: bool
    odd_overlaps: tuple[tuple[int, int], ...]


def kitaev_2d_stabilizers(q: int) -> StabilizerCheck2D:
    """Build all vertex/face operator supports on the q x q torus.

    Commutation is verified pairwise by brute force: every vertex-face
    support overlap must have even size.
    """
    if q < 2:
        raise ValueError(f"torus size must be >= 2, got {q}")

    def h_edge(x: int, y: int) -> int:
        return (y % q) * q + (x % q)

    def v_edge(x: int, y: int) -> int:
        return q * q + (y % q) * q + (x % q)

    vertex_supports = tuple(
        (h_edge(x, y), h_edge(x - 1, y), v_edge(x, y), v_edge(x, y - 1))
        for y in range(q)
        for x in range(q)
    )
    face_supports = tuple(
        (h_edge(x, y), h_edge(x, y + 1), v_edge(x, y), v_edge(x + 1, y))
        for y in range(q)
        for x in range(q)
    )
    odd = []
    vertex_sets = [set(s) for s in vertex_supports]
    face_sets = [set(s) for s in face_supports]
    for vi, vs in enumerate(vertex_sets):
        for fi, fs in enumerate(face_sets):
            if len(vs & fs) % 2:
                odd.append((vi, fi))
    return StabilizerCheck2D(
        q=q,
        n_edges=2 * q * q,
        params=(2 * q * q, 2, q),
        vertex_supports=vertex_supports,
        face_supports=face_supports,
        all_commute=not odd,
        odd_overlaps=tuple(odd),
    )
