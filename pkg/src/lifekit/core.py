"""Core Life state: patterns, topologies, square symmetries, and B3/S23 stepping.

Coordinate convention used everywhere in this package: x grows rightward,
y grows downward, matching RLE reading order.

Two interchangeable steppers are provided.  ``engine="fast"`` runs a
bit-parallel stepper (whole grid packed into one big integer, see
``_bitlife``); ``engine="reference"`` is a naive per-cell neighbour count.
They must agree bit-exactly on every input; the test suite and the
acceptance suite enforce this.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

Cell = tuple[int, int]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_NEIGHBOUR_OFFSETS = (
    (-1, -1), (0, -1), (1, -1),
    (-1, 0), (1, 0),
    (-1, 1), (0, 1), (1, 1),
)


class LifeError(Exception):
    """Base class for errors raised by this package."""


class CoordinateOverflowError(LifeError):
    """A coordinate left (or would leave) the signed 64-bit range."""


class TopologyError(LifeError):
    """A pattern violates its topology's bounds or the topology is invalid."""


def _check_cell(cell: Cell) -> None:
    x, y = cell
    if not (INT64_MIN <= x <= INT64_MAX and INT64_MIN <= y <= INT64_MAX):
        raise CoordinateOverflowError(f"cell {cell!r} outside signed 64-bit range")


@dataclass(frozen=True)
class Pattern:
    """A finite set of live cells on the integer plane.

    Immutable value type; all operations return new patterns.  Equality is
    exact set equality (position-sensitive).
    """

    cells: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        for cell in self.cells:
            _check_cell(cell)

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Pattern":
        return cls(frozenset((int(x), int(y)) for x, y in cells))

    @property
    def population(self) -> int:
        return len(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __bool__(self) -> bool:
        return bool(self.cells)

    def bounding_box(self) -> tuple[int, int, int, int] | None:
        """(x0, y0, x1, y1) inclusive, or None for the empty pattern."""
        if not self.cells:
            return None
        xs = [x for x, _ in self.cells]
        ys = [y for _, y in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    def translate(self, dx: int, dy: int) -> "Pattern":
        return Pattern(frozenset((x + dx, y + dy) for x, y in self.cells))

    def normalized(self) -> "Pattern":
        """Translate so the bounding box's top-left corner sits at (0, 0)."""
        box = self.bounding_box()
        if box is None:
            return self
        x0, y0, _, _ = box
        return self.translate(-x0, -y0)


@dataclass(frozen=True)
class Plane:
    """The infinite plane."""


@dataclass(frozen=True)
class Torus:
    """A finite width x height universe that wraps around on its edges."""

    width: int
    height: int

    def __post_init__(self) -> None:
        # Below 3x3 a cell's 8-neighbourhood would wrap onto itself.
        if self.width < 3 or self.height < 3:
            raise TopologyError(
                f"torus must be at least 3x3, got {self.width}x{self.height}"
            )

    def contains(self, p: Pattern) -> bool:
        return all(0 <= x < self.width and 0 <= y < self.height for x, y in p.cells)


Topology = Plane | Torus

PLANE = Plane()


# ---------------------------------------------------------------------------
# D8: the eight symmetries of the square, plus a translation.

# Linear parts as integer matrices: (x, y) -> (a*x + b*y, c*x + d*y).
_D8_LINEAR: dict[str, tuple[int, int, int, int]] = {
    "identity": (1, 0, 0, 1),
    "rot90": (0, -1, 1, 0),
    "rot180": (-1, 0, 0, -1),
    "rot270": (0, 1, -1, 0),
    "flip_x": (-1, 0, 0, 1),
    "flip_y": (1, 0, 0, -1),
    "flip_diag": (0, 1, 1, 0),
    "flip_anti": (0, -1, -1, 0),
}

D8_NAMES = tuple(_D8_LINEAR)


@dataclass(frozen=True)
class D8Transform:
    """A square symmetry followed by a translation.

    The linear part maps (x, y) to (a*x + b*y, c*x + d*y); the translation
    (dx, dy) is added afterwards.
    """

    a: int = 1
    b: int = 0
    c: int = 0
    d: int = 1
    dx: int = 0
    dy: int = 0

    @classmethod
    def named(cls, name: str, dx: int = 0, dy: int = 0) -> "D8Transform":
        a, b, c, d = _D8_LINEAR[name]
        return cls(a, b, c, d, dx, dy)

    @classmethod
    def identity(cls) -> "D8Transform":
        return cls()

    @classmethod
    def translation(cls, dx: int, dy: int) -> "D8Transform":
        return cls(dx=dx, dy=dy)

    @property
    def linear_name(self) -> str:
        for name, mat in _D8_LINEAR.items():
            if mat == (self.a, self.b, self.c, self.d):
                return name
        raise ValueError("linear part is not a square symmetry")

    def apply_cell(self, cell: Cell) -> Cell:
        x, y = cell
        out = (self.a * x + self.b * y + self.dx, self.c * x + self.d * y + self.dy)
        _check_cell(out)
        return out

    def compose(self, other: "D8Transform") -> "D8Transform":
        """self after other: (self.compose(other)).apply == self(other(.))."""
        return D8Transform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.a * other.dx + self.b * other.dy + self.dx,
            self.c * other.dx + self.d * other.dy + self.dy,
        )

    def inverse(self) -> "D8Transform":
        # The linear parts are orthogonal with determinant +-1.
        det = self.a * self.d - self.b * self.c
        ia, ib = self.d // det, -self.b // det
        ic, id_ = -self.c // det, self.a // det
        return D8Transform(
            ia, ib, ic, id_,
            -(ia * self.dx + ib * self.dy),
            -(ic * self.dx + id_ * self.dy),
        )


D8_ELEMENTS: tuple[D8Transform, ...] = tuple(
    D8Transform.named(name) for name in D8_NAMES
)


def transform(p: Pattern, g: D8Transform) -> Pattern:
    """Apply the symmetry then the translation to every cell."""
    return Pattern(frozenset(g.apply_cell(c) for c in p.cells))


def d8_orbit(p: Pattern) -> list[Pattern]:
    """The eight symmetry images of a pattern (not translation-normalized)."""
    return [transform(p, g) for g in D8_ELEMENTS]


def canonical_cells(cells: frozenset[Cell]) -> tuple[Cell, ...]:
    """Lexicographically least normalized cell tuple over all D8 images."""
    if not cells:
        return ()
    best: tuple[Cell, ...] | None = None
    for a, b, c, d in _D8_LINEAR.values():
        image = [(a * x + b * y, c * x + d * y) for x, y in cells]
        x0 = min(x for x, _ in image)
        y0 = min(y for _, y in image)
        cand = tuple(sorted((x - x0, y - y0) for x, y in image))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Stepping.


def _check_plane_headroom(p: Pattern) -> None:
    box = p.bounding_box()
    if box is None:
        return
    x0, y0, x1, y1 = box
    if (
        x0 <= INT64_MIN + 1 or y0 <= INT64_MIN + 1
        or x1 >= INT64_MAX - 1 or y1 >= INT64_MAX - 1
    ):
        raise CoordinateOverflowError(
            "pattern touches the representable boundary; refusing to step"
        )


def _naive_step_plane(cells: frozenset[Cell]) -> frozenset[Cell]:
    counts: Counter[Cell] = Counter()
    for x, y in cells:
        for dx, dy in _NEIGHBOUR_OFFSETS:
            counts[(x + dx, y + dy)] += 1
    return frozenset(
        c for c, n in counts.items() if n == 3 or (n == 2 and c in cells)
    )


def _naive_step_torus(cells: frozenset[Cell], width: int, height: int) -> frozenset[Cell]:
    counts: Counter[Cell] = Counter()
    for x, y in cells:
        for dx, dy in _NEIGHBOUR_OFFSETS:
            counts[((x + dx) % width, (y + dy) % height)] += 1
    return frozenset(
        c for c, n in counts.items() if n == 3 or (n == 2 and c in cells)
    )


def _require_in_torus(p: Pattern, t: Torus) -> None:
    if not t.contains(p):
        raise TopologyError("pattern does not lie within the torus bounds")


def step(p: Pattern, topology: Topology = PLANE, engine: str = "fast") -> Pattern:
    """One B3/S23 generation."""
    return step_n(p, topology, 1, engine=engine)


def step_n(
    p: Pattern, topology: Topology = PLANE, n: int = 1, engine: str = "fast"
) -> Pattern:
    """n-fold composition of step; step_n(p, t, 0) == p."""
    if n < 0:
        raise ValueError("generation count must be non-negative")
    if isinstance(topology, Torus):
        _require_in_torus(p, topology)
    if n == 0:
        return p
    if engine == "reference":
        cells = p.cells
        for _ in range(n):
            if isinstance(topology, Torus):
                cells = _naive_step_torus(cells, topology.width, topology.height)
            else:
                _check_plane_headroom(Pattern(cells))
                cells = _naive_step_plane(cells)
        return Pattern(cells)
    if engine != "fast":
        raise ValueError(f"unknown engine {engine!r}")
    from . import _bitlife

    _check_plane_headroom(p)
    grid = _bitlife.BitGrid(topology, p)
    for _ in range(n):
        grid.advance()
    return grid.to_pattern()


def evolve(
    p: Pattern, topology: Topology = PLANE, engine: str = "fast"
) -> Iterator[Pattern]:
    """Yield successive generations (starting after the first step), forever.

    Keeps the fast engine's grid alive across generations, so iterating this
    is much cheaper than repeated step() calls.
    """
    if isinstance(topology, Torus):
        _require_in_torus(p, topology)
    if engine == "reference":
        cells = p.cells
        while True:
            if isinstance(topology, Torus):
                cells = _naive_step_torus(cells, topology.width, topology.height)
            else:
                _check_plane_headroom(Pattern(cells))
                cells = _naive_step_plane(cells)
            yield Pattern(cells)
    elif engine == "fast":
        from . import _bitlife

        _check_plane_headroom(p)
        grid = _bitlife.BitGrid(topology, p)
        while True:
            grid.advance()
            yield grid.to_pattern()
    else:
        raise ValueError(f"unknown engine {engine!r}")
