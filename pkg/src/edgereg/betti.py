"""Multigraded Betti numbers and regularity of monomial ideals.

``beta_{i,a}(I)`` is the rank of reduced homology in degree i-1 of the
upper Koszul complex ``K^a(I) = {W ⊆ supp(a) : x^a / x_W ∈ I}``.  Only
multidegrees in the lcm lattice of I can carry nonzero Betti numbers, so
those are the only ones examined.

The main path evaluates every lattice point at once with numpy and
computes homology once per distinct complex.  :func:`taylor_strand_betti`
is an independent route through the Taylor resolution, used to
cross-check the main path on small ideals.
"""

from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ResourceError
from .linalg import rank
from .monomials import Monomial, MonomialIdeal

LATTICE_CAP = 200_000
TAYLOR_CAP = 12
# Largest exponent box for which membership is tabulated densely.
BOX_CAP = 8_000_000


class LatticeCapError(ResourceError):
    pass


class OracleUnavailable(ResourceError):
    """The Taylor oracle declines ideals with too many generators."""


# ---------------------------------------------------------------------------
# Simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``vertices`` stored by its facets.

    The void complex has no facets at all; the empty complex ``{∅}`` has
    the single facet ``frozenset()``.
    """

    vertices: tuple[int, ...]
    facets: frozenset[frozenset[int]]

    @classmethod
    def from_faces(cls, vertices: Iterable[int], faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = {frozenset(f) for f in faces}
        facets = frozenset(f for f in faces if not any(f < g for g in faces))
        return cls(tuple(sorted(vertices)), facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for F in self.facets:
            items = sorted(F)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return out

    def dimension(self) -> int:
        if not self.facets:
            return -2
        return max(len(F) for F in self.facets) - 1

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """Matrix of the boundary map from d-faces to (d-1)-faces; rows are
        (d-1)-faces, columns d-faces, both in sorted order."""
        faces = self.faces()
        top = sorted(sorted(F) for F in faces if len(F) == d + 1)
        low = sorted(sorted(F) for F in faces if len(F) == d)
        row = {tuple(F): i for i, F in enumerate(low)}
        M = [[0] * len(top) for _ in low]
        for j, F in enumerate(top):
            for pos in range(len(F)):
                M[row[tuple(F[:pos] + F[pos + 1:])]][j] = -1 if pos % 2 else 1
        return M


def _face_masks(K: SimplicialComplex) -> frozenset[int]:
    index = {v: i for i, v in enumerate(K.vertices)}
    return frozenset(sum(1 << index[v] for v in F) for F in K.faces())


def _homology_from_masks(masks: frozenset[int], field: int) -> tuple[int, ...]:
    """Reduced homology ranks, index 0 holding degree -1."""
    if not masks:
        return (0,)
    by_size: dict[int, list[int]] = defaultdict(list)
    for m in masks:
        by_size[bin(m).count("1")].append(m)
    top = max(by_size)
    ranks_out = [0] * (top + 1)
    # Cones are acyclic.
    ground = 0
    for m in masks:
        ground |= m
    v = ground
    while v:
        bit = v & -v
        v ^= bit
        if all(m | bit in masks for m in masks):
            return tuple(ranks_out)
    index = {k: {m: i for i, m in enumerate(sorted(by_size[k]))} for k in by_size}

    def boundary_rank(k: int) -> int:
        # map from size-k faces to size-(k-1) faces
        if k not in by_size or k - 1 not in by_size:
            return 0
        low = index[k - 1]
        M = [[0] * len(by_size[k]) for _ in low]
        for j, F in enumerate(sorted(by_size[k])):
            pos = 0
            rest = F
            while rest:
                bit = rest & -rest
                rest ^= bit
                M[low[F ^ bit]][j] = -1 if pos % 2 else 1
                pos += 1
        return rank(M, field)

    drank = {k: boundary_rank(k) for k in range(1, top + 2)}
    for k in range(0, top + 1):
        dim_c = len(by_size.get(k, ()))
        ranks_out[k] = dim_c - drank.get(k, 0) - drank.get(k + 1, 0)
    return tuple(ranks_out)


def reduced_homology_ranks(K: SimplicialComplex, field: int = 0) -> tuple[int, ...]:
    """Ranks of reduced homology of K; entry 0 is degree -1, entry 1 degree 0,
    and so on.  The void complex gives ``(0,)``."""
    return _homology_from_masks(_face_masks(K), field)


# ---------------------------------------------------------------------------
# Lattice and upper Koszul complexes


@dataclass(frozen=True)
class LcmLattice:
    n: int
    elements: frozenset[Monomial]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return tuple(a) in self.elements


def _check_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ValueError("the zero ideal has no Betti numbers here")
    if I.is_unit:
        raise ValueError("the unit ideal has no Betti numbers here")


class _Box:
    """Dense view of I restricted to the variables it actually uses."""

    def __init__(self, I: MonomialIdeal):
        gens = np.array(sorted(I.gens), dtype=np.int64)
        self.n = I.n
        self.active = [i for i in range(I.n) if gens[:, i].max() > 0]
        self.gens = gens[:, self.active]
        self.shape = tuple(int(e) + 1 for e in self.gens.max(axis=0))
        self.size = math.prod(self.shape)
        self.member = None
        if self.size <= BOX_CAP:
            member = np.zeros(self.shape, dtype=bool)
            member[tuple(self.gens.T)] = True
            for axis in range(len(self.shape)):
                np.logical_or.accumulate(member, axis=axis, out=member)
            self.member = member
        self._ideal = I

    def keys(self, vecs: np.ndarray) -> np.ndarray:
        return np.ravel_multi_index(tuple(vecs.T), self.shape)

    def contains(self, vecs: np.ndarray) -> np.ndarray:
        if self.member is not None:
            return self.member[tuple(vecs.T)]
        return np.array(
            [self._ideal.gens and any(np.all(g <= v) for g in self.gens) for v in vecs],
            dtype=bool,
        )

    def lift(self, vec) -> Monomial:
        full = [0] * self.n
        for i, e in zip(self.active, vec):
            full[i] = int(e)
        return tuple(full)


def _lattice_array(box: _Box, cap: int) -> np.ndarray:
    gens = box.gens
    frontier = np.unique(gens, axis=0)
    seen = np.sort(box.keys(frontier))
    parts = [frontier]
    while len(frontier):
        joins = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, gens.shape[1])
        keys, first = np.unique(box.keys(joins), return_index=True)
        fresh = ~np.isin(keys, seen, assume_unique=True)
        frontier = joins[first[fresh]]
        if len(frontier):
            seen = np.union1d(seen, keys[fresh])
            parts.append(frontier)
        if len(seen) > cap:
            raise LatticeCapError(f"lcm lattice exceeds cap of {cap} elements")
    return np.concatenate(parts)


def lcm_lattice(I: MonomialIdeal, cap: int = LATTICE_CAP) -> LcmLattice:
    _check_proper(I)
    box = _Box(I)
    arr = _lattice_array(box, cap)
    return LcmLattice(I.n, frozenset(box.lift(a) for a in arr))


def upper_koszul(I: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    alpha = tuple(alpha)
    if len(alpha) != I.n or any(a < 0 for a in alpha):
        raise ValueError(f"bad multidegree {alpha}")
    supp = [i for i, a in enumerate(alpha) if a]
    faces = []
    for k in range(len(supp) + 1):
        for W in combinations(supp, k):
            m = list(alpha)
            for i in W:
                m[i] -= 1
            if tuple(m) in I:
                faces.append(W)
    return SimplicialComplex.from_faces(supp, faces)


# ---------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True)
class BettiTable:
    n: int
    entries: Mapping[tuple[int, Monomial], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if v})

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(sum(a) - i for i, a in self.entries)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), b in self.entries.items():
            out[(i, sum(a))] += b
        return dict(out)

    def total(self, i: int) -> int:
        return sum(b for (j, _), b in self.entries.items() if j == i)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def render(self) -> str:
        rows = sorted((i, sum(a), a, b) for (i, a), b in self.entries.items())
        return "\n".join(
            f"{i} {d} {','.join(map(str, a))} {b}" for i, d, a, b in rows
        )


_HOMOLOGY_CACHE: dict[tuple[int, bytes, int], tuple[int, ...]] = {}


def _subset_masks(a: int) -> np.ndarray:
    return np.array(
        [[(w >> i) & 1 for i in range(a)] for w in range(1 << a)], dtype=np.int64
    )


def _homology_task(args) -> tuple[int, ...]:
    masks, field_ = args
    return _homology_from_masks(masks, field_)


def betti_table(
    I: MonomialIdeal, field: int = 0, lattice_cap: int = LATTICE_CAP, jobs: int = 1
) -> BettiTable:
    """All nonzero multigraded Betti numbers of I over Q (``field=0``) or
    GF(p)."""
    _check_proper(I)
    box = _Box(I)
    lattice = _lattice_array(box, lattice_cap)
    a = lattice.shape[1]
    subsets = _subset_masks(a)

    faces = np.zeros((len(lattice), len(subsets)), dtype=bool)
    for w, e in enumerate(subsets):
        shifted = lattice - e
        ok = np.all(shifted >= 0, axis=1)
        if ok.any():
            faces[ok, w] = box.contains(shifted[ok])

    packed = np.packbits(faces, axis=1)
    distinct, inverse = np.unique(packed, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)

    todo = []
    results: list[tuple[int, ...] | None] = [None] * len(distinct)
    for u, row in enumerate(distinct):
        key = (a, row.tobytes(), field)
        hit = _HOMOLOGY_CACHE.get(key)
        if hit is None:
            bits = np.unpackbits(row)[: len(subsets)]
            todo.append((u, key, frozenset(np.flatnonzero(bits).tolist())))
        else:
            results[u] = hit
    if todo:
        tasks = [(masks, field) for _, _, masks in todo]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                computed = list(pool.map(_homology_task, tasks, chunksize=8))
        else:
            computed = [_homology_task(t) for t in tasks]
        for (u, key, _), h in zip(todo, computed):
            _HOMOLOGY_CACHE[key] = h
            results[u] = h

    entries: dict[tuple[int, Monomial], int] = {}
    for u, h in enumerate(results):
        if not any(h):
            continue
        for idx in np.flatnonzero(inverse == u):
            alpha = box.lift(lattice[idx])
            for k, b in enumerate(h):
                if b:
                    # homology in degree k-1 gives beta_k
                    entries[(k, alpha)] = b
    return BettiTable(I.n, entries)


def regularity(
    I: MonomialIdeal, field: int = 0, lattice_cap: int = LATTICE_CAP, jobs: int = 1
) -> int:
    """Regularity of the ideal I (reg S/I is one less)."""
    return betti_table(I, field, lattice_cap, jobs).regularity()


def betti_table_direct(I: MonomialIdeal, field: int = 0, lattice_cap: int = LATTICE_CAP) -> BettiTable:
    """Same as :func:`betti_table` but one :func:`upper_koszul` call per lattice
    point, with no vectorization or caching.  Slow; for cross-checks."""
    entries = {}
    for alpha in lcm_lattice(I, lattice_cap).elements:
        h = reduced_homology_ranks(upper_koszul(I, alpha), field)
        for k, b in enumerate(h):
            if b:
                entries[(k, alpha)] = b
    return BettiTable(I.n, entries)


def taylor_strand_betti(I: MonomialIdeal, field: int = 0, cap: int = TAYLOR_CAP) -> BettiTable:
    """Betti numbers from the multidegree strands of the Taylor complex.

    After tensoring the Taylor resolution with the field, a face σ in
    multidegree lcm(σ) maps only to the facets of σ with the same lcm.
    """
    _check_proper(I)
    gens = sorted(I.gens)
    r = len(gens)
    if r > cap:
        raise OracleUnavailable(f"{r} generators exceeds the Taylor oracle cap of {cap}")
    lcms: list[Monomial | None] = [None] * (1 << r)
    strands: dict[Monomial, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    for sigma in range(1, 1 << r):
        low = sigma & -sigma
        j = low.bit_length() - 1
        rest = sigma ^ low
        g = gens[j]
        lcms[sigma] = g if not rest else tuple(max(x, y) for x, y in zip(lcms[rest], g))
        strands[lcms[sigma]][bin(sigma).count("1")].append(sigma)

    entries = {}
    for alpha, by_size in strands.items():
        index = {k: {s: i for i, s in enumerate(v)} for k, v in by_size.items()}

        def drank(k: int) -> int:
            # from size-k faces to size-(k-1) faces inside the strand
            if k < 2 or k not in by_size or k - 1 not in by_size:
                return 0
            low = index[k - 1]
            M = [[0] * len(by_size[k]) for _ in low]
            for col, sigma in enumerate(by_size[k]):
                pos = 0
                rest = sigma
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    face = sigma ^ bit
                    if face in low:
                        M[low[face]][col] = -1 if pos % 2 else 1
                    pos += 1
            return rank(M, field)

        for k, faces in by_size.items():
            b = len(faces) - drank(k) - drank(k + 1)
            if b:
                entries[(k - 1, alpha)] = b
    return BettiTable(I.n, entries)
