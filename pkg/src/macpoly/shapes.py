"""Diagrams, fillings, and the tableau statistics behind every formula.

Conventions used throughout the package (French notation):

* a diagram is a sequence of bottom-justified columns; ``heights[i]`` is the
  number of cells in column i+1, and zero-height columns are allowed;
* cells are 1-based ``(col, row)`` pairs; row 0 is the optional basement,
  filled either with the infinity sentinel or with a permutation;
* triples come in two types, each read as entries (a, b, c): type A, for a
  left column at least as tall, from cells (v,r), (u,r), (u,r-1) with u < v;
  type B, for a strictly taller right column, from cells (v,r-1), (u,r),
  (u,r-1) with v < u, so the L-shape sits in the right column.  The
  counterclockwise test is the cyclic-order disjunction a < b <= c, or
  c < a < b, or b <= c < a.

Which column pairs contribute which triple type, and how the basement row
participates, is calibrated against the shipped statistics fixtures and the
cross-formula identities exercised by the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterator, Mapping, NamedTuple, Sequence

#: basement sentinel that compares greater than every positive entry
INFINITY = float("inf")

#: marker selecting the infinity basement on a Filling
INF_BASEMENT = "inf"


class ShapeError(ValueError):
    """A diagram does not satisfy the precondition of an operation."""


class Cell(NamedTuple):
    col: int
    row: int


@dataclass(frozen=True)
class Diagram:
    """Column-height vector; column i (1-based) holds heights[i-1] cells."""

    heights: tuple[int, ...]

    def __post_init__(self):
        if any(h < 0 for h in self.heights):
            raise ShapeError(f"negative column height in {self.heights}")

    @property
    def n_cols(self) -> int:
        return len(self.heights)

    @property
    def size(self) -> int:
        return sum(self.heights)

    def height(self, col: int) -> int:
        return self.heights[col - 1]

    def cells(self) -> list[Cell]:
        return [
            Cell(c, r)
            for c in range(1, self.n_cols + 1)
            for r in range(1, self.heights[c - 1] + 1)
        ]

    def contains(self, cell: Cell) -> bool:
        c, r = cell
        return 1 <= c <= self.n_cols and 1 <= r <= self.heights[c - 1]

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.heights, self.heights[1:]))

    def is_weakly_increasing(self) -> bool:
        return all(a <= b for a, b in zip(self.heights, self.heights[1:]))


def diagram(heights: Sequence[int]) -> Diagram:
    return Diagram(tuple(heights))


@dataclass(frozen=True)
class Filling:
    """Entry assignment for a diagram, with an optional basement row.

    ``basement`` is None (no row 0), the string "inf" (row 0 all infinity),
    or a permutation tuple giving the row-0 entry per column.
    """

    shape: Diagram
    entries: Mapping[Cell, int]
    basement: tuple[int, ...] | str | None = None

    def __post_init__(self):
        cells = set(self.shape.cells())
        keys = {Cell(*k) for k in self.entries}
        if keys != cells:
            raise ShapeError("entries do not cover the diagram exactly")
        if isinstance(self.basement, tuple) and len(self.basement) != self.shape.n_cols:
            raise ShapeError("permutation basement length != number of columns")

    def __getitem__(self, cell) -> int:
        return self.entries[Cell(*cell)]

    def basement_entry(self, col: int):
        if self.basement is None:
            return None
        if self.basement == INF_BASEMENT:
            return INFINITY
        return self.basement[col - 1]

    def south(self, cell):
        """Entry directly below: a diagram entry, a basement entry, or None."""
        c, r = cell
        if r > 1:
            return self.entries[Cell(c, r - 1)]
        return self.basement_entry(c)

    def column(self, col: int) -> tuple[int, ...]:
        """Column entries read bottom to top."""
        return tuple(
            self.entries[Cell(col, r)] for r in range(1, self.shape.height(col) + 1)
        )

    def x_exponents(self, n: int) -> tuple[int, ...]:
        """Exponent vector of the monomial weight in x_1..x_n."""
        exps = [0] * n
        for value in self.entries.values():
            if value > n:
                raise ValueError(f"entry {value} outside alphabet 1..{n}")
            exps[value - 1] += 1
        return tuple(exps)


# -- composition bookkeeping ---------------------------------------------------


class CompositionStats(NamedTuple):
    """Derived data of a weak composition, computed once and shared."""

    inc: tuple[int, ...]
    dec: tuple[int, ...]
    beta: tuple[int, ...]
    plus: tuple[int, ...]
    ell: int
    mult: Mapping[int, int]


def composition_stats(alpha: Sequence[int]) -> CompositionStats:
    """Sorting data and the maximal-length sorting permutation of alpha.

    ``beta`` is 1-based: position i of the increasing rearrangement draws
    the part alpha[beta[i]-1], and among permutations doing so it has maximal
    length (equal parts are taken in reverse position order).
    """
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        raise ShapeError(f"negative part in {alpha}")
    inc = tuple(sorted(alpha))
    dec = tuple(sorted(alpha, reverse=True))
    beta = tuple(
        sorted(range(1, len(alpha) + 1), key=lambda i: (alpha[i - 1], -i))
    )
    plus = tuple(a for a in alpha if a > 0)
    mult: dict[int, int] = {}
    for a in plus:
        mult[a] = mult.get(a, 0) + 1
    return CompositionStats(inc, dec, beta, plus, len(plus), mult)


def conjugate(partition: Sequence[int]) -> tuple[int, ...]:
    """Transpose of a partition diagram."""
    parts = tuple(partition)
    if any(a < b for a, b in zip(parts, parts[1:])) or any(p < 0 for p in parts):
        raise ShapeError(f"{parts} is not a partition")
    parts = tuple(p for p in parts if p > 0)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= r) for r in range(1, parts[0] + 1))


# -- cell statistics -----------------------------------------------------------


def leg(shape: Diagram, cell) -> int:
    """Number of cells above `cell` in its column."""
    cell = Cell(*cell)
    if not shape.contains(cell):
        raise ShapeError(f"cell {cell} outside {shape.heights}")
    return shape.height(cell.col) - cell.row


def arm_partition(shape: Diagram, cell) -> int:
    """Number of cells to the right in the same row (partition shapes)."""
    cell = Cell(*cell)
    if not shape.is_partition():
        raise ShapeError("arm_partition needs weakly decreasing heights")
    if not shape.contains(cell):
        raise ShapeError(f"cell {cell} outside {shape.heights}")
    return sum(1 for v in range(cell.col + 1, shape.n_cols + 1)
               if shape.height(v) >= cell.row)


def arm_composition(shape: Diagram, cell) -> int:
    """Composition-shape arm: weakly-shorter columns to the right in this row,
    plus strictly-shorter columns to the left owning a cell one row below."""
    cell = Cell(*cell)
    if not shape.contains(cell):
        raise ShapeError(f"cell {cell} outside {shape.heights}")
    h = shape.height(cell.col)
    right = sum(
        1
        for v in range(cell.col + 1, shape.n_cols + 1)
        if cell.row <= shape.height(v) <= h
    )
    left = 0
    if cell.row > 1:
        left = sum(
            1
            for v in range(1, cell.col)
            if cell.row - 1 <= shape.height(v) < h
        )
    return right + left


# -- triple classification -------------------------------------------------------


def is_counterclockwise(a, b, c) -> bool:
    """Cyclic-order test: a < b <= c, or c < a < b, or b <= c < a."""
    return (a < b <= c) or (c < a < b) or (b <= c < a)


def is_clockwise(a, b, c) -> bool:
    """Strict reversed cyclic order: a > b > c, or c > a > b, or b > c > a."""
    return (a > b > c) or (c > a > b) or (b > c > a)


def classify_triple_A(a, b, c) -> str:
    """Classify a type-A entry triple; infinity compares above every entry."""
    if is_counterclockwise(a, b, c):
        return "counterclockwise"
    if is_clockwise(a, b, c):
        return "clockwise"
    return "neither"


def classify_triple_B(a, b, c) -> bool:
    """Whether a type-B entry triple matches the counterclockwise pattern."""
    return is_counterclockwise(a, b, c)


# -- filling statistics ----------------------------------------------------------


def _require_inf_basement(f: Filling) -> None:
    if f.basement != INF_BASEMENT:
        raise ShapeError("statistic requires the infinity basement")


def count_triples_partition(f: Filling) -> int:
    """Total number of triples (degenerate ones included) on a partition shape."""
    h = f.shape.heights
    return sum(h[v] for u in range(len(h)) for v in range(u + 1, len(h)))


def inv(f: Filling) -> int:
    """Counterclockwise triples, degenerate row-1 pairs included."""
    _require_inf_basement(f)
    if not f.shape.is_partition():
        raise ShapeError("inv is defined on partition shapes")
    h = f.shape.heights
    total = 0
    for u in range(1, f.shape.n_cols + 1):
        for v in range(u + 1, f.shape.n_cols + 1):
            for r in range(1, h[v - 1] + 1):
                if r == 1:
                    total += f[(u, 1)] > f[(v, 1)]
                else:
                    total += is_counterclockwise(
                        f[(v, r)], f[(u, r)], f[(u, r - 1)]
                    )
    return total


def coinv_partition(f: Filling) -> int:
    """Triples that are not counterclockwise."""
    return count_triples_partition(f) - inv(f)


def des(f: Filling) -> set[Cell]:
    """Cells whose entry strictly exceeds the entry below them.

    Against the infinity basement no row-1 cell descends; against a
    permutation basement row-1 cells compare with the basement entry; with
    no basement row-1 cells never descend.
    """
    out = set()
    for cell in f.shape.cells():
        below = f.south(cell)
        if below is not None and f[cell] > below:
            out.add(cell)
    return out


def maj(f: Filling) -> int:
    """Sum of leg + 1 over the descent cells."""
    return sum(leg(f.shape, cell) + 1 for cell in des(f))


def coinv_comp(f: Filling) -> int:
    """Clockwise triples of types A and B on a composition shape.

    Column pairs split by height: the left column at least as tall gives type
    A (L-shape on the left), a strictly taller right column gives type B
    (L-shape on the right).  On nonattacking fillings the clockwise count
    coincides with "all triples minus the counterclockwise ones", since the
    entry patterns that could tell the two apart are exactly the attacking
    ones.  Row-1 type-A pairs count degenerately: a strictly increasing pair
    when there is no permutation basement, the row-0-completed triple
    otherwise.
    """
    h = f.shape.heights
    perm_base = isinstance(f.basement, tuple)
    total = 0
    for left in range(1, f.shape.n_cols + 1):
        hl = h[left - 1]
        for right in range(left + 1, f.shape.n_cols + 1):
            hr = h[right - 1]
            if hl >= hr:
                # type A
                for r in range(2, hr + 1):
                    total += is_clockwise(
                        f[(right, r)], f[(left, r)], f[(left, r - 1)]
                    )
                if hr >= 1:
                    if perm_base:
                        total += is_clockwise(
                            f[(right, 1)], f[(left, 1)], f.basement_entry(left)
                        )
                    else:
                        total += f[(left, 1)] < f[(right, 1)]
            else:
                # type B
                for r in range(2, min(hl + 1, hr) + 1):
                    total += is_clockwise(
                        f[(left, r - 1)], f[(right, r)], f[(right, r - 1)]
                    )
                if perm_base and hr >= 1:
                    total += is_clockwise(
                        f.basement_entry(left),
                        f[(right, 1)],
                        f.basement_entry(right),
                    )
    return total


def is_nonattacking(f: Filling) -> bool:
    """No equal entries in a row, nor in adjacent rows with the rightmost cell
    strictly above the other.

    A permutation basement participates as row 0, which pins every row-1
    entry to the basement value below it on weakly increasing shapes.
    """
    h = f.shape.heights
    ncols = f.shape.n_cols
    for left in range(1, ncols + 1):
        for right in range(left + 1, ncols + 1):
            top = min(h[left - 1], h[right - 1])
            for r in range(1, top + 1):
                if f[(left, r)] == f[(right, r)]:
                    return False
            # rightmost strictly above: (right, r) against (left, r-1)
            for r in range(2, h[right - 1] + 1):
                if r - 1 <= h[left - 1] and f[(right, r)] == f[(left, r - 1)]:
                    return False
            if isinstance(f.basement, tuple) and h[right - 1] >= 1:
                if f[(right, 1)] == f.basement[left - 1]:
                    return False
    return True


def is_ordered(f: Filling) -> bool:
    """Bottom-row entries under equal-height column blocks strictly decrease."""
    if not f.shape.is_weakly_increasing():
        raise ShapeError("ordered fillings live on weakly increasing shapes")
    h = f.shape.heights
    for col in range(1, f.shape.n_cols):
        if h[col - 1] >= 1 and h[col - 1] == h[col]:
            if not f[(col, 1)] > f[(col + 1, 1)]:
                return False
    return True


def is_packed(f: Filling) -> bool:
    """Entries above the basement form an initial segment 1..k."""
    values = set(f.entries.values())
    return values == set(range(1, len(values) + 1))


def enumerate_fillings(
    shape: Diagram,
    alphabet_max: int,
    predicate: Callable[[Filling], bool] | None = None,
    basement: tuple[int, ...] | str | None = None,
) -> Iterator[Filling]:
    """Yield every filling with entries in 1..alphabet_max passing `predicate`.

    Deterministic order: colexicographic on the entry vector indexed by cells
    sorted by (col, row), i.e. the first cell varies fastest.
    """
    if alphabet_max < 1:
        raise ValueError("alphabet_max must be at least 1")
    cells = shape.cells()
    if not cells:
        f = Filling(shape, {}, basement)
        if predicate is None or predicate(f):
            yield f
        return
    for combo in iproduct(range(1, alphabet_max + 1), repeat=len(cells)):
        entries = dict(zip(cells, reversed(combo)))
        f = Filling(shape, entries, basement)
        if predicate is None or predicate(f):
            yield f


# -- fixture files ----------------------------------------------------------------


def filling_from_fixture(obj: Mapping) -> tuple[Filling, Mapping]:
    """Build a Filling from the JSON fixture schema; returns (filling, expected).

    Schema: {"shape": [heights], "basement": "inf"|"none"|[perm],
             "entries": [[col,row,value],...], "expected": {...}}.
    """
    base = obj.get("basement", "none")
    basement: tuple[int, ...] | str | None
    if base == "none":
        basement = None
    elif base == "inf":
        basement = INF_BASEMENT
    else:
        basement = tuple(base)
    entries = {Cell(c, r): v for c, r, v in obj["entries"]}
    return Filling(diagram(obj["shape"]), entries, basement), obj.get("expected", {})
