"""
Unknotting-number bounds for torus-covering links.

The unknotting number of a surface link is the least number of oriented
1-handle surgeries turning it into a trivial link.  Two bounds are computed
from a chart:

Upper bound from the chart shape.  A chart consisting of free edges alone
presents an unknotted link, and adding a free edge is itself a 1-handle
surgery; a chart of degree m without white vertices can be completed to a
free-edge chart with m - 1 added free edges, so such links unknot in at
most m - 1 surgeries.  A chart already presenting an unknotted
configuration gives the bound 0.

Lower bound from dihedral colorings.  For a vertex-free chart describing a
knot, let Phi be the number of color vectors fixed simultaneously by both
boundary braid actions over the dihedral quandle R_3.  For spun charts
(b, e) and turned spun charts (b, b) or (b, b^-1) this equals the coloring
count of the classical closure of b.  A 1-handle surgery identifies the
colors of two sheets, which at the diagram level pins two arcs to the same
color: the count either survives or drops by exactly a factor of 3, and a
trivial surface knot admits exactly 3 colorings.  Hence at least
log3(Phi) - 1 surgeries are needed.  handle_surgery_experiment measures the
drop for every arc pair directly.

For the family of braids s1^3 s2^3 ... sn^3 on n+1 strands the two bounds
meet: both the spun and the turned spun covering knots have Phi = 3**(n+1),
so their unknotting number is exactly n.

Free-edge costs under turning (documentation only, not computed): writing
uF(S) for the least number of free edges whose addition makes the chart of
S present an unknotted link, the unknotting number of the turned link is at
most uF(S), the unknotting number of S is at most uF(turned S), and
uF(S) = uF(turned S) since turning twice restores the original link.  No
algorithm for uF itself is provided here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .braids import BraidWord, format_braid, invert
from .charts import (
    ChartValidationError,
    TorusCoveringChart,
    classify,
    component_count,
    spun_chart,
    turned_spun_chart,
)
from .garside import is_trivial, words_equal
from .quandles import (
    ColoringSystem,
    GridPosition,
    Quandle,
    _check_state_cap,
    coloring_count,
    constrained_count,
    dihedral,
    dihedral_coloring_count_fast,
    propagate_grid,
)


@dataclass(frozen=True)
class BoundsReport:
    """Combined lower/upper unknotting bounds with the coloring count behind them."""

    lower: int
    upper: int | None
    exact: int | None
    coloring_count: int
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "coloring_count": self.coloring_count,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> BoundsReport:
        return cls(
            lower=data["lower"],
            upper=data["upper"],
            exact=data["exact"],
            coloring_count=data["coloring_count"],
            notes=tuple(data.get("notes", ())),
        )


def chart_coloring_count(chart: TorusCoveringChart, quandle: Quandle) -> int:
    """Vectors fixed by both boundary braid actions (brute force)."""
    _check_state_cap(quandle.order, chart.degree)
    count = 0
    for start in itertools.product(range(quandle.order), repeat=chart.degree):
        if propagate_grid(quandle, chart.v_braid, start)[-1] != start:
            continue
        if propagate_grid(quandle, chart.h_braid, start)[-1] != start:
            continue
        count += 1
    return count


def _classical_reduction_applies(chart: TorusCoveringChart) -> bool:
    """True when the h braid is trivial, equals v, or equals v^-1 in B_m.

    In those cases every vector fixed by the v action is automatically fixed
    by the h action, so the simultaneous count equals the coloring count of
    the classical closure of v.
    """
    h, v = chart.h_braid, chart.v_braid
    if is_trivial(h):
        return True
    return words_equal(h, v) or words_equal(h, invert(v))


def _chart_phi(chart: TorusCoveringChart, p: int, method: str) -> tuple[int, str, bool]:
    """Coloring count of the chart plus the method used and whether it is classical."""
    reduces = _classical_reduction_applies(chart)
    if method == "auto":
        method = "fast" if reduces and p**chart.degree > 3**8 else "brute"
    if method == "fast":
        if not reduces:
            raise ValueError(
                "fast path needs the classical reduction (h trivial, h = v, or h = v^-1)"
            )
        phi = dihedral_coloring_count_fast(p, chart.v_braid)
    elif method == "brute":
        phi = chart_coloring_count(chart, dihedral(p))
        if reduces:
            # Check the reduction instead of assuming it.
            classical = coloring_count(dihedral(p), chart.v_braid)
            if phi != classical:
                raise AssertionError(
                    f"simultaneous count {phi} disagrees with classical count {classical}"
                )
    else:
        raise ValueError(f"unknown method {method!r}")
    return phi, method, reduces


def _log_p(phi: int, p: int) -> int:
    """Exact logarithm; raises if phi is not a positive power of p."""
    exponent = 0
    remaining = phi
    while remaining > 1 and remaining % p == 0:
        remaining //= p
        exponent += 1
    if remaining != 1 or exponent < 1:
        raise AssertionError(f"coloring count {phi} is not a positive power of {p}")
    return exponent


def coloring_lower_bound(chart: TorusCoveringChart, p: int = 3, method: str = "auto") -> int:
    """Minimum 1-handle surgeries implied by the dihedral coloring count.

    Requires a vertex-free chart describing a knot.  Returns log_p(Phi) - 1
    where Phi is the simultaneous fixed-vector count; Phi is always a power
    of p here and a trivial covering knot has Phi = p.
    """
    if chart.black_vertices != 0:
        raise ChartValidationError("coloring lower bound requires a chart without black vertices")
    components = component_count(chart)
    if components != 1:
        raise ChartValidationError(
            f"coloring lower bound is only defined for knots; chart has {components} components"
        )
    phi, _method, _reduces = _chart_phi(chart, p, method)
    return _log_p(phi, p) - 1


def free_edge_upper_bound(chart: TorusCoveringChart) -> int | None:
    """Upper bound read off the chart shape, or None when none applies.

    0 for an unknotted presentation; m - 1 when the chart has no white
    vertices (it can be completed to a free-edge chart by adding one free
    edge per label).
    """
    shape = classify(chart)
    if shape == "unknotted_presentation":
        return 0
    if shape in ("only_free_edges_and_loops", "vertex_free"):
        return chart.degree - 1
    return None


def unknotting_bounds(chart: TorusCoveringChart, p: int = 3, method: str = "auto") -> BoundsReport:
    """Combine the coloring lower bound and the chart-shape upper bound."""
    if chart.black_vertices != 0:
        raise ChartValidationError("unknotting bounds require a chart without black vertices")
    components = component_count(chart)
    if components != 1:
        raise ChartValidationError(
            f"unknotting bounds are only computed for knots; chart has {components} components"
        )
    phi, chosen, reduces = _chart_phi(chart, p, method)
    lower = _log_p(phi, p) - 1
    notes = [
        f"lower: log{p}(coloring count {phi}) - 1 = {lower}, computed by {chosen} enumeration"
    ]
    if reduces:
        notes.append("coloring count equals the classical count of cl(v_braid)")
    else:
        notes.append(
            "heuristic coloring count: boundary pair is not spun or turned spun, "
            "simultaneous fixed vectors are not known to equal a classical count"
        )
    upper = free_edge_upper_bound(chart)
    if upper is None:
        notes.append("upper: no free-edge bound for this chart shape")
    elif upper == 0:
        notes.append("upper: 0, the chart presents an unknotted configuration")
    else:
        notes.append(
            f"upper: {upper} = degree - 1 free edges complete the chart to an unknotted one"
        )
    exact = lower if upper is not None and lower == upper else None
    return BoundsReport(
        lower=lower, upper=upper, exact=exact, coloring_count=phi, notes=tuple(notes)
    )


# --- 1-handle surgery experiments -------------------------------------------


def grid_positions(word: BraidWord) -> list[GridPosition]:
    """All (level, strand) positions of the closed-braid grid of the word."""
    return [
        (level, strand)
        for level in range(len(word.letters) + 1)
        for strand in range(1, word.degree + 1)
    ]


def handle_surgery_experiment(
    word: BraidWord, p: int = 3
) -> list[tuple[tuple[GridPosition, GridPosition], int]]:
    """Constrained coloring count for every unordered pair of grid positions.

    Identifying the colors of two positions is the diagram-level effect of
    one 1-handle surgery.  Pairs within one arc (including a position with
    itself) leave the count unchanged; the interesting pairs may divide it
    by p.  Results are exact brute-force counts.
    """
    quandle = dihedral(p)
    _check_state_cap(quandle.order, word.degree)
    fixed_grids = []
    for start in itertools.product(range(quandle.order), repeat=word.degree):
        levels = propagate_grid(quandle, word, start)
        if levels[-1] == start:
            fixed_grids.append(levels)
    positions = grid_positions(word)
    results = []
    for a in range(len(positions)):
        l1, s1 = positions[a]
        for b in range(a, len(positions)):
            l2, s2 = positions[b]
            count = sum(
                1 for levels in fixed_grids if levels[l1][s1 - 1] == levels[l2][s2 - 1]
            )
            results.append(((positions[a], positions[b]), count))
    return results


def phi_drop_satisfied(word: BraidWord, p: int = 3) -> bool:
    """Check that every single arc-pair constraint leaves Phi or divides it by p."""
    phi = coloring_count(dihedral(p), word)
    return all(
        count == phi or count * p == phi
        for _pair, count in handle_surgery_experiment(word, p)
    )


def constrained_count_for_pairs(word: BraidWord, pairs, p: int = 3) -> int:
    """Coloring count of the closure with several position identifications."""
    system = ColoringSystem(dihedral(p), word, tuple(pairs))
    return constrained_count(system)


# --- the staircase family ----------------------------------------------------


def triple_twist_chain(n: int) -> BraidWord:
    """The braid s1^3 s2^3 ... sn^3 on n+1 strands; its closure is a knot."""
    if n < 0:
        raise ValueError("chain length must be non-negative")
    letters = tuple((i, 1) for i in range(1, n + 1) for _ in range(3))
    return BraidWord(n + 1, letters)


def unknotting_table(max_n: int, p: int = 3, brute_limit: int = 6) -> list[dict]:
    """Bounds for spun and turned spun charts of the triple twist chains.

    Rows carry n, the chart kind, the coloring count Phi, and the combined
    bounds.  Brute-force enumeration is used up to n = brute_limit; beyond
    that the dihedral fast path takes over.
    """
    rows = []
    for n in range(1, max_n + 1):
        beta = triple_twist_chain(n)
        method = "brute" if n <= brute_limit else "fast"
        for kind, chart in (
            ("spun", spun_chart(beta)),
            ("turned-spun", turned_spun_chart(beta)),
        ):
            report = unknotting_bounds(chart, p=p, method=method)
            rows.append(
                {
                    "n": n,
                    "chart": kind,
                    "braid": format_braid(beta),
                    "coloring_count": report.coloring_count,
                    "lower": report.lower,
                    "upper": report.upper,
                    "exact": report.exact,
                }
            )
    return rows
