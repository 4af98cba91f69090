"""
Topology Certification

Checks that a face set is a closed orientable surface and computes its
genus two independent ways: Euler's formula on cell counts, and face
tracing over the rotation system read off the vertex links.

Orientation convention:
    A face's sign is relative to its canonical boundary order
    (cube_complex.cell_boundary). Two faces sharing an edge are coherent
    when, after applying their signs, they traverse the edge in opposite
    directions.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Union

import networkx as nx

from core.cube_complex import (
    CubeCell,
    Parity,
    cell_boundary,
    edge_between,
    edge_color,
    edge_endpoints,
    enumerate_cells,
    square_corners,
    square_edges_at,
    validate_dimension,
    vertex_parity,
)
from core.errors import DomainError, InconsistencyError
from core.formulas import genus_from_counts
from core.surface import Surface, build_cycle_surface, split_components

logger = logging.getLogger(__name__)

MOBIUS_SEARCH_DEPTH = 12


# =============================================================================
# Reports and certificates
# =============================================================================

@dataclass(frozen=True)
class ManifoldReport:
    """
    Closed-surface check of a face set.

    Attributes:
        edge_degrees_ok: Every edge lies in exactly two faces
        links_ok: Every vertex link is a single cycle
        connected: The face-adjacency graph is connected
        component_count: Number of face-adjacency components
        v, e, f: Cells incident to the surface
        bad_edges: Edges whose face count is not 2
        bad_vertices: Vertices whose link is not a single cycle
    """
    edge_degrees_ok: bool
    links_ok: bool
    connected: bool
    component_count: int
    v: int
    e: int
    f: int
    bad_edges: int = 0
    bad_vertices: int = 0

    @property
    def is_closed_surface(self) -> bool:
        return self.edge_degrees_ok and self.links_ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "edge_degrees_ok": self.edge_degrees_ok,
            "links_ok": self.links_ok,
            "connected": self.connected,
            "component_count": self.component_count,
            "v": self.v,
            "e": self.e,
            "f": self.f,
            "bad_edges": self.bad_edges,
            "bad_vertices": self.bad_vertices,
        }


@dataclass(frozen=True)
class OrientationAssignment:
    """Per-face sign: True keeps the canonical boundary order, False reverses it."""
    signs: Mapping[CubeCell, bool]

    def sign(self, face: CubeCell) -> int:
        return 1 if self.signs[face] else -1

    def traversal(self, face: CubeCell) -> list[CubeCell]:
        """Corners of `face` in oriented order."""
        corners = square_corners(face)
        if self.signs[face]:
            return corners
        return [corners[0]] + corners[:0:-1]

    def flipped(self) -> "OrientationAssignment":
        return OrientationAssignment({f: not s for f, s in self.signs.items()})

    def is_coherent(self, s: Surface) -> bool:
        """Every edge with two faces is traversed oppositely by them."""
        for e, faces in s.edge_faces.items():
            if len(faces) != 2:
                continue
            a, b = faces
            if self.sign(a) * boundary_direction(a, e) == self.sign(b) * boundary_direction(b, e):
                return False
        return True

    def to_dict(self) -> dict[str, Any]:
        return {
            "orientable": True,
            "signs": {str(f): self.sign(f) for f in sorted(self.signs)},
        }


@dataclass(frozen=True)
class MobiusWitness:
    """
    A closed chain of faces f_1, e_1, ..., f_k, e_k along which orientation
    propagation comes back reversed. e_i is shared by f_i and f_(i+1 mod k).
    """
    faces: tuple[CubeCell, ...]
    edges: tuple[CubeCell, ...]

    @property
    def length(self) -> int:
        return len(self.faces)

    @property
    def reversals(self) -> int:
        """Steps where the two canonical orders run the same way along the edge."""
        count = 0
        for k, e in enumerate(self.edges):
            f, g = self.faces[k], self.faces[(k + 1) % len(self.faces)]
            if boundary_direction(f, e) == boundary_direction(g, e):
                count += 1
        return count

    def verify(self) -> bool:
        """Consecutive faces share the listed edge and the reversal count is odd."""
        k = len(self.faces)
        if k < 2 or len(self.edges) != k:
            return False
        for idx, e in enumerate(self.edges):
            f, g = self.faces[idx], self.faces[(idx + 1) % k]
            if f == g or e not in cell_boundary(f) or e not in cell_boundary(g):
                return False
        return self.reversals % 2 == 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "orientable": False,
            "length": self.length,
            "reversals": self.reversals,
            "faces": [str(f) for f in self.faces],
            "edges": [str(e) for e in self.edges],
        }


@dataclass(frozen=True)
class RotationSystem:
    """
    Cyclic order of surface edges at every vertex.

    corners[v][k] is the face between rotations[v][k] and rotations[v][k+1].
    """
    rotations: Mapping[CubeCell, tuple[CubeCell, ...]]
    corners: Mapping[CubeCell, tuple[CubeCell, ...]]

    def colors_at(self, v: CubeCell) -> tuple[int, ...]:
        return tuple(edge_color(e) for e in self.rotations[v])

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations.values()) // 2

    def to_dict(self) -> dict[str, Any]:
        return {v.word: list(self.colors_at(v)) for v in sorted(self.rotations)}


@dataclass(frozen=True)
class ComponentReport:
    """Manifold check, orientability and genus of one connected component."""
    surface: Surface
    report: ManifoldReport
    orientable: Optional[bool]
    genus: Optional[int]

    def to_dict(self) -> dict[str, Any]:
        return {
            "face_count": len(self.surface),
            "manifold": self.report.to_dict(),
            "orientable": self.orientable,
            "genus": self.genus,
        }


OrientationResult = Union[OrientationAssignment, MobiusWitness]


# =============================================================================
# Local geometry
# =============================================================================

def boundary_direction(f: CubeCell, e: CubeCell) -> int:
    """
    +1 if the canonical boundary of square f runs along e from its 0-end to
    its 1-end, -1 otherwise.
    """
    i, j = f.active
    c = edge_color(e)
    if c == i:
        return 1 if e.bit(j) == 0 else -1
    if c == j:
        return 1 if e.bit(i) == 1 else -1
    raise DomainError(f"Edge {e} is not on the boundary of {f}")


def _link_is_cycle(v: CubeCell, faces: tuple[CubeCell, ...]) -> bool:
    link = nx.Graph()
    for f in faces:
        a, b = square_edges_at(f, v)
        link.add_edge(("face", f), ("edge", a))
        link.add_edge(("face", f), ("edge", b))
    if link.number_of_nodes() == 0:
        return False
    return all(d == 2 for _, d in link.degree()) and nx.is_connected(link)


# =============================================================================
# Operations
# =============================================================================

def check_closed_surface(s: Surface) -> ManifoldReport:
    """
    Edge-degree, vertex-link and connectivity check.

    Never raises on a negative outcome; failures are carried by the report.
    """
    bad_edges = sum(1 for faces in s.edge_faces.values() if len(faces) != 2)
    bad_vertices = sum(
        1 for v, faces in s.vertex_faces.items() if not _link_is_cycle(v, faces)
    )
    components = s.component_count
    report = ManifoldReport(
        edge_degrees_ok=bad_edges == 0,
        links_ok=bad_vertices == 0,
        connected=components == 1,
        component_count=components,
        v=len(s.vertices),
        e=len(s.edges),
        f=len(s.faces),
        bad_edges=bad_edges,
        bad_vertices=bad_vertices,
    )
    logger.debug(f"Manifold check for {s!r}: {report.to_dict()}")
    return report


def propagate_orientation(s: Surface) -> OrientationResult:
    """
    Breadth-first sign propagation over the face-adjacency graph.

    Each component is rooted at its smallest face with sign +1. Works on any
    face set (boundary allowed); every pair of faces sharing an edge is
    constrained. Returns the odd cycle through the first conflict when no
    coherent assignment exists.
    """
    dual = s.dual_graph
    signs: dict[CubeCell, int] = {}
    parent: dict[CubeCell, Optional[CubeCell]] = {}

    for root in s.faces:
        if root in signs:
            continue
        signs[root] = 1
        parent[root] = None
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for g in sorted(dual.neighbors(f)):
                e = dual.edges[f, g]["edge"]
                required = -signs[f] * boundary_direction(f, e) * boundary_direction(g, e)
                if g not in signs:
                    signs[g] = required
                    parent[g] = f
                    queue.append(g)
                elif signs[g] != required:
                    witness = _witness_from_conflict(s, f, g, parent)
                    logger.debug(f"Orientation conflict in {s!r}: cycle of {witness.length} faces")
                    return witness

    return OrientationAssignment({f: signs[f] == 1 for f in s.faces})


def _witness_from_conflict(
    s: Surface,
    f: CubeCell,
    g: CubeCell,
    parent: Mapping[CubeCell, Optional[CubeCell]],
) -> MobiusWitness:
    def path_to(face: CubeCell) -> list[CubeCell]:
        path = []
        node: Optional[CubeCell] = face
        while node is not None:
            path.append(node)
            node = parent[node]
        return path[::-1]

    path_f, path_g = path_to(f), path_to(g)
    common = 0
    while common < min(len(path_f), len(path_g)) and path_f[common] == path_g[common]:
        common += 1
    faces = path_f[common - 1:] + path_g[common:][::-1]
    edges = [
        s.dual_graph.edges[faces[k], faces[(k + 1) % len(faces)]]["edge"]
        for k in range(len(faces))
    ]
    witness = MobiusWitness(tuple(faces), tuple(edges))
    if not witness.verify():
        raise InconsistencyError("Orientation conflict did not yield an odd face cycle")
    return witness


def orient(s: Surface) -> OrientationResult:
    """
    Coherent orientation of a closed surface, or a Möbius witness.

    Raises:
        DomainError: If s is not a closed surface
    """
    report = check_closed_surface(s)
    if not report.is_closed_surface:
        raise DomainError(
            f"orient needs a closed surface: {report.bad_edges} bad edges, "
            f"{report.bad_vertices} bad vertex links"
        )
    return propagate_orientation(s)


def black_vertex_orientation(s: Surface) -> OrientationAssignment:
    """
    Orientation by the right-hand rule at black vertices.

    At a black corner of a face bicolored {x, y}, with y following x in the
    surface's cycle, the boundary leaves the corner along the x-edge.

    Raises:
        DomainError: If s was not built from a color cycle
    """
    z = s.cycle
    if z is None:
        raise DomainError("black_vertex_orientation needs a surface built from a color cycle")
    if max(z.seq) > s.n or s.face_set != build_cycle_surface(s.n, z).face_set:
        raise DomainError(f"Surface faces do not match the cycle surface of {z}")

    signs = {}
    for f in s.faces:
        i, j = f.active
        if z.successor(i) == j:
            x = i
        elif z.successor(j) == i:
            x = j
        else:
            raise DomainError(f"Face {f} is not bicolored by an edge of {z}")
        v = next(c for c in square_corners(f) if vertex_parity(c) == Parity.BLACK)
        leaves_along_i = v.bit(i) == v.bit(j)
        signs[f] = (x == i) == leaves_along_i
    return OrientationAssignment(signs)


def orientations_agree(a: OrientationAssignment, b: OrientationAssignment, s: Surface) -> bool:
    """True if a and b differ by at most one global flip on each component."""
    for component in nx.connected_components(s.dual_graph):
        relation = {a.signs[f] == b.signs[f] for f in component}
        if len(relation) > 1:
            return False
    return True


def euler_genus(r: ManifoldReport) -> int:
    """
    (2 - v + e - f) / 2 for a closed connected surface.

    Raises:
        DomainError: If the report is not a closed connected surface
        InconsistencyError: If the Euler numerator is odd
    """
    if not r.is_closed_surface:
        raise DomainError("euler_genus needs a closed surface")
    if not r.connected:
        raise DomainError(
            f"euler_genus needs a connected surface, got {r.component_count} components"
        )
    return genus_from_counts(r.v, r.e, r.f)


def rotation_system(s: Surface) -> RotationSystem:
    """
    Walk every vertex link (edge, face, edge, ...) to get the cyclic edge order.

    Raises:
        DomainError: If s is not a closed surface
    """
    report = check_closed_surface(s)
    if not report.is_closed_surface:
        raise DomainError("rotation_system needs a closed surface")

    rotations: dict[CubeCell, tuple[CubeCell, ...]] = {}
    corners: dict[CubeCell, tuple[CubeCell, ...]] = {}
    for v, faces in s.vertex_faces.items():
        faces_at_edge: dict[CubeCell, list[CubeCell]] = {}
        sides: dict[CubeCell, tuple[CubeCell, CubeCell]] = {}
        for f in faces:
            sides[f] = square_edges_at(f, v)
            for e in sides[f]:
                faces_at_edge.setdefault(e, []).append(f)

        start = min(faces_at_edge)
        edge, face = start, min(faces_at_edge[start])
        edge_order, face_order = [], []
        while True:
            edge_order.append(edge)
            face_order.append(face)
            a, b = sides[face]
            edge = b if a == edge else a
            if edge == start:
                break
            face = next(g for g in faces_at_edge[edge] if g != face)
        rotations[v] = tuple(edge_order)
        corners[v] = tuple(face_order)

    return RotationSystem(rotations, corners)


def _oriented_successors(
    rs: RotationSystem,
    orientation: OrientationAssignment,
) -> dict[CubeCell, dict[CubeCell, CubeCell]]:
    successors: dict[CubeCell, dict[CubeCell, CubeCell]] = {}
    for v, edges in rs.rotations.items():
        faces = rs.corners.get(v, ())
        if len(faces) != len(edges) or len(edges) < 2:
            raise DomainError(f"Malformed rotation at vertex {v.word}")
        votes = set()
        for k, f in enumerate(faces):
            e_from, e_to = edges[k], edges[(k + 1) % len(edges)]
            if f not in orientation.signs:
                raise DomainError(f"Orientation has no sign for {f}")
            walk = orientation.traversal(f)
            if v not in walk:
                raise DomainError(f"Face {f} is not at vertex {v.word}")
            p = walk.index(v)
            e_in = edge_between(walk[p - 1], v)
            e_out = edge_between(v, walk[(p + 1) % 4])
            if (e_in, e_out) == (e_from, e_to):
                votes.add(1)
            elif (e_in, e_out) == (e_to, e_from):
                votes.add(-1)
            else:
                raise DomainError(f"Face {f} does not join consecutive edges at {v.word}")
        if len(votes) != 1:
            raise DomainError(f"Orientation is not coherent around vertex {v.word}")
        ordered = edges if votes.pop() == 1 else edges[::-1]
        successors[v] = {ordered[k]: ordered[(k + 1) % len(ordered)] for k in range(len(ordered))}
    return successors


def trace_faces(rs: RotationSystem, orientation: OrientationAssignment) -> list[tuple[CubeCell, ...]]:
    """
    Trace the boundary walks of the embedding given by rs and an orientation.

    A dart (v, e) leaves v along e. After arriving at w along e, the walk
    continues with the edge that follows e in the oriented rotation at w.
    Walks start from the least unused dart; each walk is returned as its
    vertex sequence.

    Raises:
        DomainError: If the rotation system is malformed or incoherent
    """
    successors = _oriented_successors(rs, orientation)
    darts = sorted((v, e) for v, edges in rs.rotations.items() for e in edges)
    used: set[tuple[CubeCell, CubeCell]] = set()
    walks = []
    for start in darts:
        if start in used:
            continue
        walk = []
        dart = start
        while True:
            if dart in used:
                raise InconsistencyError(f"Face tracing revisited dart at {dart[0].word}")
            used.add(dart)
            v, e = dart
            walk.append(v)
            low, high = edge_endpoints(e)
            w = high if v == low else low
            if w not in successors:
                raise DomainError(f"Rotation system has no entry for vertex {w.word}")
            dart = (w, successors[w][e])
            if dart == start:
                break
        walks.append(tuple(walk))
    logger.debug(f"Traced {len(walks)} face walks")
    return walks


def traced_genus(rs: RotationSystem, walks: list[tuple[CubeCell, ...]]) -> int:
    """Genus from the traced embedding: v and e from rs, f = number of walks."""
    return genus_from_counts(len(rs.rotations), rs.edge_count, len(walks))


def walks_match_faces(walks: list[tuple[CubeCell, ...]], s: Surface) -> bool:
    """True if every walk is a quadrilateral and the walks are exactly the faces."""
    if any(len(w) != 4 for w in walks):
        return False
    traced = sorted(tuple(sorted(w)) for w in walks)
    expected = sorted(tuple(sorted(square_corners(f))) for f in s.faces)
    return traced == expected


def component_reports(s: Surface) -> list[ComponentReport]:
    """Manifold check, orientability and genus per connected component."""
    reports = []
    for component in split_components(s):
        report = check_closed_surface(component)
        orientable: Optional[bool] = None
        genus: Optional[int] = None
        if report.is_closed_surface:
            orientable = isinstance(propagate_orientation(component), OrientationAssignment)
            if orientable:
                genus = euler_genus(report)
        reports.append(ComponentReport(component, report, orientable, genus))
    return reports


def find_mobius_strip(n: int, max_length: int = MOBIUS_SEARCH_DEPTH) -> Optional[MobiusWitness]:
    """
    Search the full 2-skeleton of H_n for an orientation-reversing face strip.

    Strips are closed chains of distinct faces joined through distinct edges,
    entering and leaving each face by different edges. Every square of H_n
    is equivalent under the cube's symmetries, so the search is rooted at
    the first square. Lengths 3..max_length are tried in turn and the first
    witness found is returned.
    """
    validate_dimension(n)
    skeleton = Surface(n, enumerate_cells(n, 2))
    root = skeleton.faces[0]
    for length in range(3, max_length + 1):
        found = _extend_strip(skeleton, [root], [], False, length)
        if found:
            faces, edges = found
            witness = MobiusWitness(tuple(faces), tuple(edges))
            if not witness.verify():
                raise InconsistencyError("Strip search produced an unverified witness")
            logger.info(f"Found Möbius strip of {length} faces in H_{n}")
            return witness
    logger.info(f"No Möbius strip up to length {max_length} in H_{n}")
    return None


def _extend_strip(
    skeleton: Surface,
    path: list[CubeCell],
    edges: list[CubeCell],
    reversed_so_far: bool,
    length: int,
) -> Optional[tuple[list[CubeCell], list[CubeCell]]]:
    f = path[-1]
    for e in cell_boundary(f):
        if e in edges:
            continue
        direction = boundary_direction(f, e)
        for g in skeleton.edge_faces[e]:
            if g == f:
                continue
            parity = reversed_so_far ^ (direction == boundary_direction(g, e))
            if g == path[0]:
                if len(path) == length and parity:
                    return path, edges + [e]
                continue
            if len(path) < length and g not in path:
                found = _extend_strip(skeleton, path + [g], edges + [e], parity, length)
                if found:
                    return found
    return None
