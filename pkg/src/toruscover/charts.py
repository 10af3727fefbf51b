"""
Covering charts over the standard torus and the turning operation.

A surface link sitting in a tubular neighbourhood of the standard torus as a
simple branched covering is described combinatorially by a chart drawn on
the torus.  The data kept here is the part that drives the invariants: the
covering degree m, the two boundary braids read along the meridian and
longitude directions, and counts of the chart decorations (free edges,
loops, black and white vertices).  When the chart has no black vertices the
link is determined by the boundary braid pair alone, and that pair must
commute in B_m; the constructor enforces this.

Three standard families are provided.  The spun chart of a braid b is the
pair (b, e), the turned spun chart is (b, b), and the symmetry-spun chart is
(b^2, b).  Turning a vertex-free chart replaces (v, h) by (v, h v); applied
to a spun chart it produces the turned spun chart of the same braid.

Regluing the torus neighbourhood is encoded by a 3x3 integer matrix acting
on the homology basis (l, s, r) of its boundary.  Such a matrix extends
over the complement exactly when the first row is (+-1, 0, 0) and the lower
right 2x2 block is unimodular with even entry sum; the turning matrix fails
this parity test while its square passes, so turning twice is a regluing
that extends.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal

from .braids import BraidWord, concat, format_braid, invert, parse_braid, permutation, power
from .garside import commute


class ChartValidationError(ValueError):
    """A chart violates one of its structural invariants."""


@dataclass(frozen=True)
class TorusCoveringChart:
    """Covering degree, boundary braid pair, and decoration counts."""

    degree: int
    v_braid: BraidWord
    h_braid: BraidWord
    free_edges: tuple[int, ...] = ()
    loops: tuple[int, ...] = ()
    black_vertices: int = 0
    white_vertices: int = 0

    def is_vertex_free(self) -> bool:
        return self.black_vertices == 0 and self.white_vertices == 0


def new_chart(
    degree: int,
    v_braid: BraidWord,
    h_braid: BraidWord,
    free_edges=(),
    loops=(),
    black_vertices: int = 0,
    white_vertices: int = 0,
) -> TorusCoveringChart:
    """Build and validate a chart.

    Raises ChartValidationError when degrees disagree, a label is outside
    1..m-1, the black vertex count cannot host the free edges (each free
    edge has two black endpoints), or the chart has no black vertices but
    the boundary braids fail to commute.
    """
    if v_braid.degree != degree or h_braid.degree != degree:
        raise ChartValidationError(
            f"degree mismatch: chart degree {degree}, boundary braids of degree "
            f"{v_braid.degree} and {h_braid.degree}"
        )
    free_edges = tuple(free_edges)
    loops = tuple(loops)
    for label in (*free_edges, *loops):
        if not 1 <= label <= degree - 1:
            raise ChartValidationError(
                f"edge label {label} outside 1..{degree - 1} for degree {degree}"
            )
    if black_vertices < 0 or white_vertices < 0:
        raise ChartValidationError("vertex counts must be non-negative")
    if black_vertices < 2 * len(free_edges):
        raise ChartValidationError(
            f"{len(free_edges)} free edges need at least {2 * len(free_edges)} black "
            f"vertices, chart declares {black_vertices}"
        )
    if black_vertices == 0 and not commute(v_braid, h_braid):
        raise ChartValidationError(
            "boundary braids do not commute: a chart without black vertices requires "
            f"commuting boundary braids, got {format_braid(v_braid)} and {format_braid(h_braid)}"
        )
    return TorusCoveringChart(
        degree, v_braid, h_braid, free_edges, loops, black_vertices, white_vertices
    )


def spun_chart(beta: BraidWord) -> TorusCoveringChart:
    """The chart (beta, e) describing the spun torus link of cl(beta)."""
    trivial = BraidWord(beta.degree)
    return new_chart(beta.degree, beta, trivial)


def turned_spun_chart(beta: BraidWord, h_inverse: bool = False) -> TorusCoveringChart:
    """The chart (beta, beta) of the turned spun torus link of cl(beta).

    With h_inverse=True the second boundary braid is beta^-1 instead; both
    pairs arise as turned spun presentations and both commute, but no claim
    is made here that the two charts describe equivalent links.
    """
    h = invert(beta) if h_inverse else beta
    return new_chart(beta.degree, beta, h)


def symmetry_spun_chart(beta: BraidWord) -> TorusCoveringChart:
    """The chart (beta^2, beta); the boundary braids commute automatically."""
    return new_chart(beta.degree, power(beta, 2), beta)


def turn(chart: TorusCoveringChart) -> TorusCoveringChart:
    """Turning: (v, h) becomes (v, h v) for vertex-free charts.

    This is pinned so that turning a spun chart yields the turned spun
    chart of the same braid.  Charts with vertices are rejected: the
    chart-level effect of turning is only defined here without them.
    """
    if not chart.is_vertex_free():
        raise ChartValidationError(
            "turning is only defined for vertex-free charts "
            f"(black={chart.black_vertices}, white={chart.white_vertices})"
        )
    return new_chart(
        chart.degree,
        chart.v_braid,
        concat(chart.h_braid, chart.v_braid),
        chart.free_edges,
        chart.loops,
        chart.black_vertices,
        chart.white_vertices,
    )


ChartClass = Literal[
    "unknotted_presentation", "vertex_free", "only_free_edges_and_loops", "general"
]


def classify(chart: TorusCoveringChart) -> ChartClass:
    """Coarse chart shape, keyed by what the bound machinery can use.

    unknotted_presentation: trivial boundary braids and nothing but free
    edges (each accounting for two black vertices).  vertex_free: no
    decorations at all.  only_free_edges_and_loops: no white vertices.
    Anything else is general.
    """
    trivial_boundaries = chart.v_braid.is_trivial_word() and chart.h_braid.is_trivial_word()
    if (
        trivial_boundaries
        and not chart.loops
        and chart.white_vertices == 0
        and chart.black_vertices == 2 * len(chart.free_edges)
    ):
        return "unknotted_presentation"
    if chart.is_vertex_free() and not chart.free_edges and not chart.loops:
        return "vertex_free"
    if chart.white_vertices == 0:
        return "only_free_edges_and_loops"
    return "general"


def component_count(chart: TorusCoveringChart) -> int:
    """Components of the covering link: orbits of the boundary monodromies.

    The two boundary braids act on the m sheets through their permutations;
    components correspond to orbits of the subgroup they generate.  Only
    defined for charts without black vertices (no branch points merging
    sheets off the boundary).
    """
    if chart.black_vertices != 0:
        raise ChartValidationError("component count requires a chart without black vertices")
    m = chart.degree
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for braid in (chart.v_braid, chart.h_braid):
        images = permutation(braid).images
        for x in range(m):
            rx, ry = find(x), find(images[x] - 1)
            if rx != ry:
                parent[rx] = ry
    return len({find(x) for x in range(m)})


# --- regluing matrices -----------------------------------------------------


@dataclass(frozen=True)
class GluingMatrix:
    """A 3x3 integer matrix acting on the homology basis (l, s, r)."""

    rows: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("gluing matrix must be 3x3")
        if abs(self.det()) != 1:
            raise ValueError(f"gluing matrix must be unimodular, determinant {self.det()}")

    @classmethod
    def identity(cls) -> GluingMatrix:
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def turning(cls) -> GluingMatrix:
        """The unipotent matrix implementing one turn of the torus neighbourhood."""
        return cls(((1, 0, 0), (0, 1, 1), (0, 0, 1)))

    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def __matmul__(self, other: GluingMatrix) -> GluingMatrix:
        rows = tuple(
            tuple(
                sum(self.rows[r][k] * other.rows[k][c] for k in range(3)) for c in range(3)
            )
            for r in range(3)
        )
        return GluingMatrix(rows)

    def inverse(self) -> GluingMatrix:
        d = self.det()
        (a, b, c), (e, f, g), (h, i, j) = self.rows
        cof = (
            (f * j - g * i, c * i - b * j, b * g - c * f),
            (g * h - e * j, a * j - c * h, c * e - a * g),
            (e * i - f * h, b * h - a * i, a * f - b * e),
        )
        return GluingMatrix(tuple(tuple(v * d for v in row) for row in cof))


def is_extendable(matrix: GluingMatrix) -> bool:
    """Whether the regluing extends over the torus complement.

    True exactly when the first row is (+-1, 0, 0) and the lower right 2x2
    block (alpha gamma; beta delta) is unimodular with alpha + beta + gamma
    + delta even.  The turning matrix has entry sum 3 there and fails; its
    square has sum 4 and passes.
    """
    first = matrix.rows[0]
    if first not in ((1, 0, 0), (-1, 0, 0)):
        return False
    alpha, gamma = matrix.rows[1][1], matrix.rows[1][2]
    beta, delta = matrix.rows[2][1], matrix.rows[2][2]
    if abs(alpha * delta - gamma * beta) != 1:
        return False
    return (alpha + beta + gamma + delta) % 2 == 0


# --- chart file format ------------------------------------------------------


def chart_to_dict(chart: TorusCoveringChart) -> dict:
    return {
        "degree": chart.degree,
        "v_braid": format_braid(chart.v_braid),
        "h_braid": format_braid(chart.h_braid),
        "free_edges": list(chart.free_edges),
        "loops": list(chart.loops),
        "black_vertices": chart.black_vertices,
        "white_vertices": chart.white_vertices,
    }


def chart_from_dict(data: dict) -> TorusCoveringChart:
    try:
        degree = int(data["degree"])
        v_braid = parse_braid(data["v_braid"], degree)
        h_braid = parse_braid(data["h_braid"], degree)
    except KeyError as missing:
        raise ValueError(f"chart document missing field {missing}") from None
    return new_chart(
        degree,
        v_braid,
        h_braid,
        tuple(data.get("free_edges", ())),
        tuple(data.get("loops", ())),
        int(data.get("black_vertices", 0)),
        int(data.get("white_vertices", 0)),
    )


def load_chart(path) -> TorusCoveringChart:
    with open(path, "r", encoding="utf-8") as handle:
        return chart_from_dict(json.load(handle))


def save_chart(chart: TorusCoveringChart, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(chart_to_dict(chart), handle, indent=2)
        handle.write("\n")
