"""
Cube Complex

Cells (k-faces) of the n-cube H_n and the hypercube graph Q_n.

A k-face is the product of k active unit intervals and n-k inactive
coordinates pinned to 0 or 1. Vertices (k=0), edges (k=1) and squares (k=2)
share the single type CubeCell.

Bit layout:
    Coordinates are 1-based. Coordinate i is stored at bit (n - i) of both
    `active_mask` and `fixed`, so the vertex word read left to right is
    coordinate 1 .. coordinate n and `int("1010", 2)` is the vertex 1010.
    This layout is part of the serialized format and must not change.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence, Union

import networkx as nx

from core.errors import DomainError

logger = logging.getLogger(__name__)

MIN_DIMENSION = 2
MAX_DIMENSION = 24

_CELL_PATTERN = re.compile(
    r"^(?P<k>\d+)-face\[n=(?P<n>\d+); active=\{(?P<active>[\d,]*)\}; fixed=(?P<fixed>[01*]+)\]$"
)


def validate_dimension(n: int) -> int:
    """
    Check 2 <= n <= MAX_DIMENSION.

    Raises:
        DomainError: If n is not an integer in range
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"Dimension must be an integer, got {n!r}")
    if not MIN_DIMENSION <= n <= MAX_DIMENSION:
        raise DomainError(
            f"Dimension n={n} out of range [{MIN_DIMENSION}, {MAX_DIMENSION}]"
        )
    return n


def coordinate_bit(n: int, i: int) -> int:
    """Mask of coordinate i (1-based) in an n-bit word."""
    return 1 << (n - i)


def _coordinates(n: int, mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, n + 1) if mask & coordinate_bit(n, i))


class Parity(str, Enum):
    """Bipartition class of a vertex of Q_n."""
    BLACK = "black"  # odd number of 1's
    WHITE = "white"  # even number of 1's


@total_ordering
@dataclass(frozen=True)
class CubeCell:
    """
    A k-face of H_n in canonical form.

    Attributes:
        n: Cube dimension
        active_mask: Bits of the active (interval) coordinates
        fixed: 0/1 values of the inactive coordinates; zero on active bits
    """
    n: int
    active_mask: int
    fixed: int

    def __post_init__(self):
        validate_dimension(self.n)
        full = (1 << self.n) - 1
        if not 0 <= self.active_mask <= full or not 0 <= self.fixed <= full:
            raise DomainError(f"Cell words exceed {self.n} bits")
        if self.fixed & self.active_mask:
            raise DomainError("Fixed bits must be zero on active coordinates")

    @classmethod
    def from_coordinates(cls, n: int, active: Iterable[int], fixed: int = 0) -> "CubeCell":
        """Build a cell from 1-based active coordinates and a fixed word."""
        mask = 0
        for i in active:
            if not 1 <= i <= n:
                raise DomainError(f"Coordinate {i} out of range 1..{n}")
            mask |= coordinate_bit(n, i)
        return cls(n, mask, fixed)

    @property
    def active(self) -> tuple[int, ...]:
        """Sorted active coordinates."""
        return _coordinates(self.n, self.active_mask)

    @property
    def dim(self) -> int:
        return self.active_mask.bit_count()

    @property
    def sort_key(self) -> tuple[tuple[int, ...], int]:
        """Canonical order: (sorted active set, fixed word as unsigned int)."""
        return (self.active, self.fixed)

    def __lt__(self, other: "CubeCell") -> bool:
        if not isinstance(other, CubeCell):
            return NotImplemented
        return (self.n, self.sort_key) < (other.n, other.sort_key)

    def bit(self, i: int) -> int:
        """Value of inactive coordinate i (0 for active coordinates)."""
        return 1 if self.fixed & coordinate_bit(self.n, i) else 0

    @property
    def word(self) -> str:
        """Coordinate string, '*' at active positions."""
        return "".join(
            "*" if self.active_mask & coordinate_bit(self.n, i) else str(self.bit(i))
            for i in range(1, self.n + 1)
        )

    def __str__(self) -> str:
        active = ",".join(str(i) for i in self.active)
        return f"{self.dim}-face[n={self.n}; active={{{active}}}; fixed={self.word}]"


@dataclass(frozen=True, order=True)
class Bicolor:
    """Unordered pair of edge colors bounding a square, stored with i < j."""
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise DomainError(f"Bicolor needs two distinct colors >= 1, got ({self.i}, {self.j})")

    @classmethod
    def of(cls, a: int, b: int) -> "Bicolor":
        if a == b:
            raise DomainError(f"Bicolor needs two distinct colors, got {a} twice")
        return cls(min(a, b), max(a, b))

    def __str__(self) -> str:
        return f"{{{self.i},{self.j}}}"


# --- Construction ---

def vertex(n: int, word: Union[int, str]) -> CubeCell:
    """Vertex from an integer word or a binary string (leftmost = coordinate 1)."""
    if isinstance(word, str):
        if len(word) != n or set(word) - {"0", "1"}:
            raise DomainError(f"Vertex string {word!r} is not an {n}-bit binary word")
        word = int(word, 2)
    return CubeCell(n, 0, word)


def parse_cell(text: str) -> CubeCell:
    """
    Decode the debug form produced by str(cell).

    Example: '2-face[n=5; active={1,3}; fixed=*0*10]'
    """
    if not isinstance(text, str):
        raise DomainError(f"Malformed cell: expected a string, got {text!r}")
    match = _CELL_PATTERN.match(text.strip())
    if not match:
        raise DomainError(f"Malformed cell string: {text!r}")
    n = int(match.group("n"))
    pattern = match.group("fixed")
    active = [int(a) for a in match.group("active").split(",") if a]
    if len(pattern) != n:
        raise DomainError(f"Fixed word {pattern!r} does not have {n} positions")
    stars = [i for i, ch in enumerate(pattern, start=1) if ch == "*"]
    if stars != sorted(active) or int(match.group("k")) != len(active):
        raise DomainError(f"Active set and '*' positions disagree in {text!r}")
    fixed = int(pattern.replace("*", "0"), 2)
    return CubeCell.from_coordinates(n, active, fixed)


# --- Enumeration ---

def cell_count(n: int, k: int) -> int:
    """Number of k-faces of H_n: C(n,k) * 2^(n-k)."""
    validate_dimension(n)
    if not 0 <= k <= n:
        raise DomainError(f"Cell dimension k={k} out of range 0..{n}")
    return comb(n, k) * 2 ** (n - k)


def iter_cells(n: int, k: int) -> Iterator[CubeCell]:
    """Yield the k-faces of H_n in canonical order."""
    cell_count(n, k)
    for active in combinations(range(1, n + 1), k):
        mask = 0
        for i in active:
            mask |= coordinate_bit(n, i)
        # least significant bit first, so deposited words come out increasing
        free_bits = [coordinate_bit(n, i) for i in range(n, 0, -1) if i not in active]
        for j in range(2 ** (n - k)):
            fixed = 0
            for position, bit in enumerate(free_bits):
                if j >> position & 1:
                    fixed |= bit
            yield CubeCell(n, mask, fixed)


def enumerate_cells(n: int, k: int) -> list[CubeCell]:
    """
    All k-faces of H_n in canonical order.

    Raises:
        DomainError: If n is out of range or k is not in 0..n
    """
    cells = list(iter_cells(n, k))
    logger.debug(f"Enumerated {len(cells)} {k}-faces of H_{n}")
    return cells


def squares_with_bicolor(n: int, bicolor: Bicolor) -> list[CubeCell]:
    """The 2^(n-2) squares of H_n bicolored {i, j}, in canonical order."""
    validate_dimension(n)
    if bicolor.j > n:
        raise DomainError(f"Bicolor {bicolor} uses a color above n={n}")
    mask = coordinate_bit(n, bicolor.i) | coordinate_bit(n, bicolor.j)
    full = (1 << n) - 1
    return [
        CubeCell(n, mask, fixed)
        for fixed in range(full + 1)
        if not fixed & mask
    ]


# --- Incidence ---

def cell_boundary(c: CubeCell) -> list[CubeCell]:
    """
    The 2k facets of a k-cell.

    For a square with active {i, j}, i < j, the four edges come in cyclic
    order starting at the corner where x_i = x_j = 0:
    color i (x_j=0), color j (x_i=1), color i (x_j=1), color j (x_i=0).
    For other k the facets are listed by active coordinate, bit 0 then bit 1.

    Raises:
        DomainError: For vertices, which have empty boundary
    """
    if c.dim == 0:
        raise DomainError("A vertex has no boundary facets")
    n = c.n
    if c.dim == 2:
        i, j = c.active
        bi, bj = coordinate_bit(n, i), coordinate_bit(n, j)
        return [
            CubeCell(n, c.active_mask & ~bj, c.fixed),
            CubeCell(n, c.active_mask & ~bi, c.fixed | bi),
            CubeCell(n, c.active_mask & ~bj, c.fixed | bj),
            CubeCell(n, c.active_mask & ~bi, c.fixed),
        ]
    facets = []
    for i in c.active:
        bit = coordinate_bit(n, i)
        facets.append(CubeCell(n, c.active_mask & ~bit, c.fixed))
        facets.append(CubeCell(n, c.active_mask & ~bit, c.fixed | bit))
    return facets


def square_corners(f: CubeCell) -> list[CubeCell]:
    """Corners of a square in the same cyclic order as its boundary edges."""
    _require_dim(f, 2, "square_corners")
    i, j = f.active
    bi, bj = coordinate_bit(f.n, i), coordinate_bit(f.n, j)
    return [
        CubeCell(f.n, 0, f.fixed),
        CubeCell(f.n, 0, f.fixed | bi),
        CubeCell(f.n, 0, f.fixed | bi | bj),
        CubeCell(f.n, 0, f.fixed | bj),
    ]


def cell_vertices(c: CubeCell) -> list[CubeCell]:
    """All 2^k corner vertices of a cell, sorted."""
    words = [c.fixed]
    for i in c.active:
        bit = coordinate_bit(c.n, i)
        words += [w | bit for w in words]
    return sorted(CubeCell(c.n, 0, w) for w in words)


def edge_endpoints(e: CubeCell) -> tuple[CubeCell, CubeCell]:
    """Endpoints of an edge, the one with bit 0 in the edge color first."""
    _require_dim(e, 1, "edge_endpoints")
    return CubeCell(e.n, 0, e.fixed), CubeCell(e.n, 0, e.fixed | e.active_mask)


def edge_between(u: CubeCell, w: CubeCell) -> CubeCell:
    """The edge joining two adjacent vertices."""
    _require_dim(u, 0, "edge_between")
    _require_dim(w, 0, "edge_between")
    diff = u.fixed ^ w.fixed
    if u.n != w.n or diff.bit_count() != 1:
        raise DomainError(f"Vertices {u.word} and {w.word} are not adjacent")
    return CubeCell(u.n, diff, u.fixed & ~diff)


def square_edges_at(f: CubeCell, v: CubeCell) -> tuple[CubeCell, CubeCell]:
    """The two edges of square f that meet at its corner v, by color."""
    _require_dim(f, 2, "square_edges_at")
    if not contains(f, v):
        raise DomainError(f"Vertex {v.word} is not a corner of {f}")
    edges = []
    for i in f.active:
        bit = coordinate_bit(f.n, i)
        edges.append(CubeCell(f.n, bit, v.fixed & ~bit))
    return edges[0], edges[1]


def contains(a: CubeCell, b: CubeCell) -> bool:
    """True if cell b is a face of cell a (b is contained in a)."""
    if a.n != b.n:
        return False
    if b.active_mask & ~a.active_mask:
        return False
    return (b.fixed & ~a.active_mask) == a.fixed


def cofaces(c: CubeCell, k: int) -> list[CubeCell]:
    """
    All k-cells containing c, in canonical order.

    For n=5, the two facets through a 3-face or the five facets through a
    vertex.
    """
    if not c.dim <= k <= c.n:
        raise DomainError(f"Coface dimension {k} must lie in {c.dim}..{c.n}")
    inactive = [i for i in range(1, c.n + 1) if not c.active_mask & coordinate_bit(c.n, i)]
    result = []
    for extra in combinations(inactive, k - c.dim):
        mask = 0
        for i in extra:
            mask |= coordinate_bit(c.n, i)
        result.append(CubeCell(c.n, c.active_mask | mask, c.fixed & ~mask))
    return sorted(result)


def opposite_facet(c: CubeCell) -> CubeCell:
    """The facet parallel to an (n-1)-cell."""
    _require_dim(c, c.n - 1, "opposite_facet")
    inactive = ((1 << c.n) - 1) & ~c.active_mask
    return CubeCell(c.n, c.active_mask, c.fixed ^ inactive)


def relabel_coordinates(c: CubeCell, mapping: Sequence[int]) -> CubeCell:
    """
    Move coordinate k to coordinate mapping[k-1].

    The image of vertex x is y with y_{mapping(k)} = x_k.
    """
    n = c.n
    active = 0
    fixed = 0
    for k in range(1, n + 1):
        src = coordinate_bit(n, k)
        dst = coordinate_bit(n, mapping[k - 1])
        if c.active_mask & src:
            active |= dst
        if c.fixed & src:
            fixed |= dst
    return CubeCell(n, active, fixed)


# --- Coloring and bipartition ---

def edge_color(e: CubeCell) -> int:
    """Color of an edge: the coordinate in which its endpoints differ."""
    _require_dim(e, 1, "edge_color")
    return e.active[0]


def face_bicolor(f: CubeCell) -> Bicolor:
    """The pair of edge colors around a square."""
    _require_dim(f, 2, "face_bicolor")
    i, j = f.active
    return Bicolor(i, j)


def vertex_parity(v: CubeCell) -> Parity:
    """Black iff the vertex word has an odd number of 1's."""
    _require_dim(v, 0, "vertex_parity")
    return Parity.BLACK if v.fixed.bit_count() % 2 else Parity.WHITE


def hypercube_graph(n: int) -> nx.Graph:
    """
    Q_n as a networkx graph.

    Nodes are vertex cells with a `parity` attribute; every edge carries its
    `color` and its `cell`.
    """
    graph = nx.Graph()
    for v in iter_cells(n, 0):
        graph.add_node(v, parity=vertex_parity(v))
    for e in iter_cells(n, 1):
        low, high = edge_endpoints(e)
        graph.add_edge(low, high, color=edge_color(e), cell=e)
    return graph


def _require_dim(c: CubeCell, k: int, operation: str) -> None:
    if c.dim != k:
        raise DomainError(f"{operation} expects a {k}-cell, got {c}")
