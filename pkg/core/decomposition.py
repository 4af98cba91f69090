"""
Cycle Decompositions and Parallel Families

Edge-disjoint cycle decompositions of K_n, the families of surfaces they
induce on the 2-skeleton of H_n, and the coordinate permutations that carry
T(1..n) onto T(Z).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Optional, Sequence

import networkx as nx

from core.cube_complex import (
    Bicolor,
    enumerate_cells,
    relabel_coordinates,
    validate_dimension,
)
from core.errors import DomainError, InconsistencyError
from core.surface import (
    ColorCycle,
    Surface,
    SurfaceIntersection,
    build_cycle_surface,
    build_surface,
    surface_intersection,
)
from core.topology import ComponentReport, component_reports

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleDecomposition:
    """
    Cycles of K_n, canonicalized and sorted.

    Use create() or from_list() to build one; the constructor expects the
    cycles already in canonical order.
    """
    n: int
    cycles: tuple[ColorCycle, ...]

    @classmethod
    def create(cls, n: int, cycles: Iterable[ColorCycle]) -> "CycleDecomposition":
        validate_dimension(n)
        cycles = tuple(sorted(cycles, key=lambda c: c.seq))
        for c in cycles:
            if max(c.seq) > n:
                raise DomainError(f"Cycle {c} uses colors outside 1..{n}")
        return cls(n, cycles)

    @classmethod
    def from_list(cls, n: int, data: Iterable[Sequence[int]]) -> "CycleDecomposition":
        """From a JSON list of color sequences."""
        return cls.create(n, (ColorCycle(tuple(seq)) for seq in data))

    @classmethod
    def parse(cls, n: int, text: str) -> "CycleDecomposition":
        """From '123;145;2435' (cycles separated by ';')."""
        parts = [p for p in text.split(";") if p.strip()]
        if not parts:
            raise DomainError(f"Empty decomposition string: {text!r}")
        return cls.create(n, (ColorCycle.parse(p) for p in parts))

    def to_list(self) -> list[list[int]]:
        return [c.to_list() for c in self.cycles]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


@dataclass(frozen=True)
class DecompositionCertificate:
    edge_disjoint: bool
    complete: bool

    @property
    def passed(self) -> bool:
        return self.edge_disjoint and self.complete

    def to_dict(self) -> dict[str, bool]:
        return {"edge_disjoint": self.edge_disjoint, "complete": self.complete}


@dataclass(frozen=True)
class CoordinatePermutation:
    """
    Bijection on {1..n}; mapping[k-1] is the image of k.

    Acting on H_n it moves coordinate k to coordinate mapping[k-1].
    """
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise DomainError(f"Not a permutation of 1..{len(mapping)}: {list(mapping)}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n: int) -> "CoordinatePermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycle(cls, z: ColorCycle) -> "CoordinatePermutation":
        """k -> i_k for Z = i_1 ... i_n in canonical order."""
        return cls(z.seq)

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def inverse(self) -> "CoordinatePermutation":
        inverse = [0] * self.size
        for k, image in enumerate(self.mapping, start=1):
            inverse[image - 1] = k
        return CoordinatePermutation(tuple(inverse))


@dataclass(frozen=True)
class FamilyCertificate:
    """
    Certificate for a family of surfaces built from a cycle decomposition.

    pairwise_intersection_is_qn and members_isometric are None for general
    (non-Hamiltonian) decompositions, where they are not claimed.
    """
    face_disjoint: bool
    full_coverage: bool
    pairwise_intersection_is_qn: Optional[bool]
    members_isometric: Optional[bool] = None

    @property
    def passed(self) -> bool:
        flags = (
            self.face_disjoint,
            self.full_coverage,
            self.pairwise_intersection_is_qn,
            self.members_isometric,
        )
        return all(flag is not False for flag in flags)

    def to_dict(self) -> dict[str, Optional[bool]]:
        return {
            "face_disjoint": self.face_disjoint,
            "full_coverage": self.full_coverage,
            "pairwise_intersection_is_qn": self.pairwise_intersection_is_qn,
            "members_isometric": self.members_isometric,
        }


@dataclass(frozen=True)
class ParallelFamily:
    n: int
    decomposition: CycleDecomposition
    surfaces: tuple[Surface, ...]
    certificate: FamilyCertificate
    intersections: tuple[tuple[int, int, SurfaceIntersection], ...] = ()
    components: tuple[tuple[ComponentReport, ...], ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        members = []
        for k, s in enumerate(self.surfaces):
            member = {
                "index": k,
                "cycle": s.cycle.to_list() if s.cycle else None,
                "face_count": len(s),
            }
            if self.components:
                member["components"] = [c.to_dict() for c in self.components[k]]
            members.append(member)
        return {
            "n": self.n,
            "decomposition": self.decomposition.to_list(),
            "members": members,
            "certificate": self.certificate.to_dict(),
            "pairwise_intersections": [
                {
                    "pair": [a, b],
                    "shared_face_count": len(x.shared_faces),
                    "contains_all_of_qn": x.contains_all_of_qn,
                }
                for a, b, x in self.intersections
            ],
        }


def hamiltonian_decomposition(n: int) -> CycleDecomposition:
    """
    (n-1)/2 edge-disjoint Hamiltonian cycles of K_n, n odd.

    Round-table construction on n = 2m+1 seats: one fixed seat plus the
    residues mod 2m. Cycle k visits the fixed seat, then k, k+1, k-1, k+2,
    k-2, ..., k+m. Residue r is color r+1 and the fixed seat is color n.
    The result is checked with verify_decomposition before it is returned.

    Raises:
        DomainError: If n is even or below 3
        InconsistencyError: If the construction fails its own certificate
    """
    validate_dimension(n)
    if n < 3 or n % 2 == 0:
        raise DomainError(
            f"A Hamiltonian decomposition of K_n needs odd n >= 3, got n={n}: "
            f"for even n every vertex of K_n has odd degree {n - 1}, "
            f"so its edges cannot split into cycles, each of which uses 2 edges per vertex"
        )
    m = (n - 1) // 2
    cycles = []
    for k in range(m):
        seats = [k]
        for t in range(1, m):
            seats += [(k + t) % (2 * m), (k - t) % (2 * m)]
        seats.append((k + m) % (2 * m))
        cycles.append(ColorCycle((n,) + tuple(r + 1 for r in seats)))

    decomposition = CycleDecomposition.create(n, cycles)
    certificate = verify_decomposition(decomposition)
    if not certificate.passed or not all(c.is_hamiltonian(n) for c in decomposition):
        raise InconsistencyError(
            f"Round-table decomposition of K_{n} failed its certificate: {certificate.to_dict()}"
        )
    logger.debug(f"Hamiltonian decomposition of K_{n}: {decomposition.to_list()}")
    return decomposition


def verify_decomposition(d: CycleDecomposition) -> DecompositionCertificate:
    """Edge-disjointness and completeness of d's cycles as edge sets of K_n."""
    usage = Counter(edge for c in d.cycles for edge in c.edges)
    complete_graph = nx.complete_graph(range(1, d.n + 1))
    required = {Bicolor.of(a, b) for a, b in complete_graph.edges()}
    return DecompositionCertificate(
        edge_disjoint=all(count == 1 for count in usage.values()),
        complete=set(usage) == required,
    )


def apply_isometry(sigma: CoordinatePermutation, s: Surface) -> Surface:
    """
    Image of s under the coordinate permutation sigma.

    Raises:
        DomainError: If sigma does not act on 1..s.n
    """
    if sigma.size != s.n:
        raise DomainError(f"Permutation of size {sigma.size} cannot act on H_{s.n}")
    faces = [relabel_coordinates(f, sigma.mapping) for f in s.faces]
    cycle = ColorCycle(tuple(sigma(c) for c in s.cycle.seq)) if s.cycle else None
    return Surface(s.n, faces, cycle=cycle)


def _require_certified(d: CycleDecomposition) -> DecompositionCertificate:
    certificate = verify_decomposition(d)
    if not certificate.passed:
        raise DomainError(
            f"Decomposition of K_{d.n} is not a partition of its edges: {certificate.to_dict()}"
        )
    return certificate


def _coverage(n: int, surfaces: Sequence[Surface]) -> tuple[bool, bool]:
    total = sum(len(s) for s in surfaces)
    union = frozenset().union(*(s.face_set for s in surfaces))
    face_disjoint = total == len(union)
    full_coverage = union == frozenset(enumerate_cells(n, 2))
    return face_disjoint, full_coverage


def _pairwise(surfaces: Sequence[Surface]) -> list[tuple[int, int, SurfaceIntersection]]:
    return [
        (a, b, surface_intersection(surfaces[a], surfaces[b]))
        for a, b in combinations(range(len(surfaces)), 2)
    ]


def parallel_family(n: int, d: Optional[CycleDecomposition] = None) -> ParallelFamily:
    """
    The surfaces T(Z_k) for a Hamiltonian decomposition of K_n.

    Defaults to hamiltonian_decomposition(n) when d is omitted.

    Raises:
        DomainError: If d fails its certificate or has a non-Hamiltonian cycle
    """
    if d is None:
        d = hamiltonian_decomposition(n)
    if d.n != n:
        raise DomainError(f"Decomposition is over K_{d.n}, expected K_{n}")
    _require_certified(d)
    if not all(c.is_hamiltonian(n) for c in d):
        raise DomainError("parallel_family needs Hamiltonian cycles; use general_parallel_family")

    surfaces = tuple(build_surface(n, z) for z in d)
    face_disjoint, full_coverage = _coverage(n, surfaces)
    intersections = _pairwise(surfaces)
    pairwise_qn = all(
        not x.shared_faces and x.contains_all_of_qn for _, _, x in intersections
    )

    reference = build_surface(n, ColorCycle.identity(n))
    members_isometric = all(
        apply_isometry(CoordinatePermutation.from_cycle(s.cycle), reference) == s
        for s in surfaces
    )

    certificate = FamilyCertificate(face_disjoint, full_coverage, pairwise_qn, members_isometric)
    logger.debug(f"Parallel family for n={n}: {certificate.to_dict()}")
    return ParallelFamily(n, d, surfaces, certificate, tuple(intersections))


def general_parallel_family(n: int, d: CycleDecomposition) -> ParallelFamily:
    """
    Cycle surfaces for a decomposition of K_n into cycles of any length.

    Certifies face-disjointness and coverage; the pairwise intersections are
    recorded as computed. Each member carries one report per component.

    Raises:
        DomainError: If d fails its certificate
    """
    if d.n != n:
        raise DomainError(f"Decomposition is over K_{d.n}, expected K_{n}")
    _require_certified(d)

    surfaces = tuple(build_cycle_surface(n, c) for c in d)
    face_disjoint, full_coverage = _coverage(n, surfaces)
    intersections = _pairwise(surfaces)

    hamiltonian = all(c.is_hamiltonian(n) for c in d)
    pairwise_qn: Optional[bool] = None
    if hamiltonian:
        pairwise_qn = all(not x.shared_faces and x.contains_all_of_qn for _, _, x in intersections)

    components = tuple(tuple(component_reports(s)) for s in surfaces)
    certificate = FamilyCertificate(face_disjoint, full_coverage, pairwise_qn)
    logger.debug(f"General family for n={n}: {certificate.to_dict()}")
    return ParallelFamily(n, d, surfaces, certificate, tuple(intersections), components)
