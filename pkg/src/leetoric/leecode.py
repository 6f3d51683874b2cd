"""Single-error-correcting perfect Lee codes on Z_q^n with q = 2n + 1.

The code is the mod-q kernel of the check functional h = (1, 2, ..., n):
a point is a codeword iff h.x = 0 (mod q).  The same set arises as the
mod-q reduction of the integer sublattice spanned by the generator rows
assembled in ``generator_matrix``; that sublattice has index q in Z^n,
which is why the q^{n-1} radius-1 Lee spheres centred on the codewords
tile the q^n torus exactly once.  Perfection makes the syndrome decoder
total: every point is within Lee distance 1 of exactly one codeword.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .lattice import (
    IntVector,
    _check_residues,
    canonical_rep,
    determinant,
    hypercube_lin_index,
    lee_sphere,
    LeeSphere,
    slot_offset,
)


def check_functional(n: int) -> IntVector:
    """The row functional h = (1, 2, ..., n).

    Its residues cover Z_q: {0} u {+-h_i mod q} = {0, 1, ..., 2n}, which
    is exactly the certificate that single-error syndromes are unique.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    return tuple(range(1, n + 1))


def syndrome_slot_table(n: int) -> np.ndarray:
    """Sphere slot selected by each syndrome value.

    Syndrome 0 is the center, s <= n means error +e_s (slot 2s-1) and
    s > n means error -e_{q-s} (slot 2(q-s)).  Used by the vectorized
    sweeps; the scalar decoder applies the same rule inline.
    """
    q = 2 * n + 1
    table = np.zeros(q, dtype=np.int64)
    for s in range(1, q):
        table[s] = 2 * s - 1 if s <= n else 2 * (q - s)
    return table


@dataclass(frozen=True)
class GeneratorSet:
    """The n generator rows of the code lattice.

    ``middle`` holds v_2 ... v_{n-2}; v_k has ones exactly at positions
    k..n-1 (1-indexed) and its last coordinate is the centered residue
    that makes it orthogonal to the check functional mod q.
    """

    n: int
    q: int
    v: IntVector
    v1: IntVector
    middle: tuple[IntVector, ...]
    v_last: IntVector

    def rows(self) -> tuple[IntVector, ...]:
        """Rows in matrix order: v, v1, v_2, ..., v_{n-2}, v_{n-1}."""
        return (self.v, self.v1) + self.middle + (self.v_last,)


def build_generators(n: int) -> GeneratorSet:
    """Construct the generator rows for dimension n >= 5."""
    if n < 5:
        raise ValueError(f"unsupported dimension: n must be >= 5, got {n}")
    q = 2 * n + 1
    v = (0,) * (n - 2) + (1, 2 * n - 2)
    v1 = (0,) * (n - 2) + (1, -3)
    v_last = (1,) + (0,) * (n - 2) + (2,)
    middle = []
    for k in range(2, n - 1):
        i = n - k
        row = [0] * n
        row[k - 1 : n - 1] = [1] * (n - k)
        row[n - 1] = canonical_rep((-i * (i + 2)) % q, q)
        middle.append(tuple(row))
    return GeneratorSet(n, q, v, v1, tuple(middle), v_last)


@dataclass(frozen=True)
class Codeword:
    """A codeword point with its cross-section label and in-section rank."""

    point: IntVector
    section: int
    rank: int


@dataclass(frozen=True)
class TileAssignment:
    """The unique (codeword, sphere slot) pair covering a hypercube."""

    codeword: Codeword
    slot: int


@dataclass(frozen=True)
class MinDistanceResult:
    """Outcome of the bounded-radius minimum-distance search.

    When ``exact`` is False no codeword of weight <= radius_cap exists
    and ``distance`` is only a lower bound (radius_cap + 1).
    """

    distance: int
    witness: IntVector | None
    exact: bool


class PerfectLeeCode:
    """The perfect Lee code of dimension n, with q = 2n + 1.

    Immutable after construction; all methods are pure.
    """

    def __init__(self, generators: GeneratorSet, h: IntVector | None = None):
        self.n = generators.n
        self.q = generators.q
        self.generators = generators
        self.matrix = generators.rows()
        self.h = check_functional(self.n) if h is None else h
        self.alpha = self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"PerfectLeeCode(n={self.n}, q={self.q})"

    @property
    def n_codewords(self) -> int:
        return self.q ** (self.n - 1)

    @property
    def codewords_per_section(self) -> int:
        return self.q ** (self.n - 2)

    # -- lattice-side operations (integer vectors) --------------------

    def lattice_membership(self, x: Sequence[int]) -> bool:
        """True iff the integer vector x lies in the code lattice.

        Membership equals orthogonality to h mod q: the lattice has
        index q in Z^n and is contained in the kernel of h, which also
        has index q, so the two coincide.
        """
        if len(x) != self.n:
            raise ValueError(f"expected length {self.n}, got {len(x)}")
        return sum(a * b for a, b in zip(self.h, x)) % self.q == 0

    # -- code operations (residue vectors) ----------------------------

    def syndrome(self, x: Sequence[int]) -> int:
        """h.x mod q; zero iff x is a codeword."""
        _check_residues(x, self.q)
        return sum(a * b for a, b in zip(self.h, x)) % self.q

    def decode_single(self, x: Sequence[int]) -> tuple[Codeword, IntVector]:
        """Split x into (codeword, error) with error of Mannheim weight <= 1.

        Total map: the syndrome s picks the unique unit error, +e_s for
        1 <= s <= n and -e_{q-s} for n < s < q.
        """
        s = self.syndrome(x)
        err = [0] * self.n
        if s != 0:
            if s <= self.n:
                err[s - 1] = 1
            else:
                err[self.q - s - 1] = -1
        point = tuple((a - e) % self.q for a, e in zip(x, err))
        return self.codeword_at(point), tuple(err)

    def tile_assign(self, z: Sequence[int]) -> TileAssignment:
        """The unique (codeword, slot) with codeword + slot offset = z."""
        cw, err = self.decode_single(z)
        slot = 0
        for i, e in enumerate(err):
            if e:
                slot = 2 * (i + 1) - (1 if e == 1 else 0)
                break
        return TileAssignment(cw, slot)

    def sphere_of(self, cw: Codeword) -> LeeSphere:
        """The fundamental region tiled around a codeword."""
        return lee_sphere(cw.point, self.q)

    # -- enumeration ---------------------------------------------------

    def codeword_from_rank(self, j: int, r: int) -> Codeword:
        """Codeword number r of cross-section j.

        r is read in base q as digits (m_v, m_2, ..., m_{n-2}), least
        significant first; the point is j*v_{n-1} + m_v*v + sum m_k v_k
        reduced mod q.  The v-digit varies fastest, so consecutive ranks
        walk along the in-section generation order.
        """
        q, n = self.q, self.n
        if not 0 <= j < q:
            raise ValueError(f"section {j} out of range [0, {q})")
        if not 0 <= r < self.codewords_per_section:
            raise ValueError(f"rank {r} out of range [0, {self.codewords_per_section})")
        rows = self.matrix
        rr, m_v = divmod(r, q)
        point = [j * last + m_v * a for a, last in zip(rows[0], rows[-1])]
        for k in range(2, n - 1):
            rr, m_k = divmod(rr, q)
            if m_k:
                row = rows[k]
                for a_idx in range(n):
                    point[a_idx] += m_k * row[a_idx]
        return Codeword(tuple(p % q for p in point), j, r)

    def rank_of(self, point: Sequence[int]) -> tuple[int, int]:
        """Inverse of codeword_from_rank; raises if point is not a codeword.

        Peels the triangular generator structure: coordinate 1 fixes the
        section, coordinates 2..n-2 fix the middle digits one by one,
        coordinate n-1 fixes the v-digit, and the last coordinate must
        then vanish.
        """
        q, n = self.q, self.n
        _check_residues(point, q)
        rows = self.matrix
        j = point[0]
        x = [(a - j * b) % q for a, b in zip(point, rows[-1])]
        digits = []
        for k in range(2, n - 1):
            m_k = x[k - 1]
            digits.append(m_k)
            if m_k:
                row = rows[k]
                x = [(a - m_k * b) % q for a, b in zip(x, row)]
        m_v = x[n - 2]
        x = [(a - m_v * b) % q for a, b in zip(x, rows[0])]
        if any(x):
            raise ValueError(f"{tuple(point)} is not a codeword")
        r = 0
        for m_k in reversed(digits):
            r = r * q + m_k
        r = r * q + m_v
        return j, r

    def codeword_at(self, point: Sequence[int]) -> Codeword:
        """Wrap a codeword point with its (section, rank) labels."""
        j, r = self.rank_of(point)
        return Codeword(tuple(point), j, r)

    def iter_codewords(self) -> Iterator[Codeword]:
        """All q^{n-1} codewords, section-major then rank order."""
        for j in range(self.q):
            for r in range(self.codewords_per_section):
                yield self.codeword_from_rank(j, r)

    # -- distance certificates -----------------------------------------

    def min_mannheim_distance(self, radius_cap: int = 4) -> MinDistanceResult:
        """Smallest Mannheim weight of a nonzero codeword.

        Sphere search: enumerate every centered vector of weight
        1..radius_cap and test membership, so no codeword enumeration is
        needed.  The first weight with a hit is the exact minimum.
        """
        for w in range(1, radius_cap + 1):
            for vec in weight_w_vectors(self.n, w, self.q):
                if sum(a * b for a, b in zip(self.h, vec)) % self.q == 0:
                    return MinDistanceResult(w, vec, True)
        return MinDistanceResult(radius_cap + 1, None, False)

    def codewords_of_weight(self, w: int) -> list[IntVector]:
        """All codewords of exact Mannheim weight w, as centered vectors."""
        return [
            vec
            for vec in weight_w_vectors(self.n, w, self.q)
            if sum(a * b for a, b in zip(self.h, vec)) % self.q == 0
        ]

    def section_subcode_distance(self) -> int:
        """Minimum Mannheim weight over the q x q cross-section subcode.

        Exhausts the q^2 combinations a*v + b*v1 mod q.
        """
        q = self.q
        v, v1 = self.matrix[0], self.matrix[1]
        best: int | None = None
        for a in range(q):
            for b in range(q):
                point = tuple((a * u + b * w) % q for u, w in zip(v, v1))
                if not any(point):
                    continue
                weight = sum(abs(canonical_rep(x, q)) for x in point)
                if best is None or weight < best:
                    best = weight
        assert best is not None
        return best

    # -- packing verification --------------------------------------------

    def verify_perfect_packing(
        self, mode: str = "exhaustive", samples: int = 10**6, seed: int = 0
    ) -> "PackingReport":
        """Certify that the codeword spheres tile Z_q^n exactly once.

        ``exhaustive`` enumerates every codeword sphere, counts occupancy
        over all q^n hypercubes, and re-checks tile_assign on every
        hypercube.  ``sampled`` checks tile assignment validity on
        ``samples`` seeded-random hypercubes (vectorized, with a scalar
        cross-check on a small subsample).
        """
        if mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown verification mode: {mode!r}")
        n, q = self.n, self.q
        report = PackingReport(n=n, q=q, mode=mode)

        cover = sorted({0} | {h % q for h in self.h} | {(-h) % q for h in self.h})
        report.residue_coverage_ok = cover == list(range(q))
        if not report.residue_coverage_ok:
            report.add_violation(f"syndrome residues cover only {cover}")

        if mode == "exhaustive":
            occupancy = bytearray(q**n)
            offsets = [slot_offset(b, n) for b in range(q)]
            for cw in self.iter_codewords():
                report.spheres_placed += 1
                for off in offsets:
                    idx = hypercube_lin_index(
                        [(c + d) % q for c, d in zip(cw.point, off)], q
                    )
                    if occupancy[idx]:
                        report.add_violation(
                            f"hypercube index {idx} covered more than once"
                        )
                    else:
                        occupancy[idx] = 1
            gaps = occupancy.count(0)
            if gaps:
                report.add_violation(f"{gaps} hypercubes not covered by any sphere")
            for z in itertools.product(range(q), repeat=n):
                report.hypercubes_checked += 1
                if not self._tile_assign_consistent(z):
                    report.add_violation(f"tile_assign broken at {z}")
            return report

        rng = np.random.default_rng(seed)
        z = rng.integers(0, q, size=(samples, n), dtype=np.int64)
        h = np.array(self.h, dtype=np.int64)
        slot_of = syndrome_slot_table(n)
        offsets = np.array([slot_offset(b, n) for b in range(q)], dtype=np.int64)
        point = (z - offsets[slot_of[(z @ h) % q]]) % q
        report.hypercubes_checked = samples
        for i in np.nonzero((point @ h) % q)[0]:
            report.add_violation(
                f"tile_assign broken at {tuple(int(x) for x in z[i])}"
            )
        for row in z[: min(1000, samples)]:
            zt = tuple(int(x) for x in row)
            if not self._tile_assign_consistent(zt):
                report.add_violation(f"tile_assign broken at {zt}")
        return report

    def _tile_assign_consistent(self, z: tuple[int, ...]) -> bool:
        try:
            ta = self.tile_assign(z)
        except ValueError:
            # decoded point rejected by rank_of: not on the generator lattice
            return False
        rebuilt = tuple(
            (c + d) % self.q
            for c, d in zip(ta.codeword.point, slot_offset(ta.slot, self.n))
        )
        return rebuilt == z and self.syndrome(ta.codeword.point) == 0


@dataclass
class PackingReport:
    """Result of a perfect-packing verification sweep."""

    n: int
    q: int
    mode: str
    hypercubes_checked: int = 0
    spheres_placed: int = 0
    residue_coverage_ok: bool = True
    violation_count: int = 0
    violations: list[str] = field(default_factory=list)

    _MAX_STORED = 10

    def add_violation(self, message: str) -> None:
        self.violation_count += 1
        if len(self.violations) < self._MAX_STORED:
            self.violations.append(message)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0 and self.residue_coverage_ok


def generator_matrix(n: int) -> PerfectLeeCode:
    """Build and validate the perfect Lee code for dimension n >= 5."""
    code = PerfectLeeCode(build_generators(n))
    det = determinant(code.matrix)
    if abs(det) != code.q:
        raise AssertionError(f"|det| = {abs(det)} != q = {code.q}")
    for row in code.matrix:
        if not code.lattice_membership(row):
            raise AssertionError(f"generator {row} not orthogonal to h mod q")
    cover = {0} | {h % code.q for h in code.h} | {(-h) % code.q for h in code.h}
    if cover != set(range(code.q)):
        raise AssertionError("syndrome residues do not cover Z_q")
    return code


def weight_w_vectors(n: int, w: int, q: int) -> Iterator[IntVector]:
    """All length-n vectors of exact Mannheim weight w, centered entries.

    Enumerates supports of size s <= min(w, n), all compositions of w
    into s positive magnitudes capped at (q-1)/2, and all sign choices.
    """
    cap = (q - 1) // 2
    for s in range(1, min(w, n) + 1):
        for support in itertools.combinations(range(n), s):
            for mags in _compositions(w, s, cap):
                for signs in itertools.product((1, -1), repeat=s):
                    vec = [0] * n
                    for pos, mag, sign in zip(support, mags, signs):
                        vec[pos] = sign * mag
                    yield tuple(vec)


def _compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers <= cap summing to total."""
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(1, min(total - parts + 1, cap) + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest
