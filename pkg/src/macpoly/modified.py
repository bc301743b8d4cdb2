"""Modified Macdonald polynomials: the all-fillings formula and its compact
sorted-tableaux form.

The compact route groups fillings by rearrangements of equal-height columns.
Each group has a unique representative whose columns are sorted under the
column order: columns compare at their first differing entry, cyclically
relative to the shared entry just below (the infinity basement below row 1
makes that first comparison the plain numeric one).  The t-multinomial
``multiplicity_t`` restores each group's inversion-statistic mass, which is what
makes the two routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product as iproduct
from typing import Iterator, Sequence

from .polyring import Monomial, MPoly, t_multinomial
from .shapes import (
    INF_BASEMENT,
    Cell,
    Diagram,
    Filling,
    ShapeError,
    conjugate,
    diagram,
    inv,
    maj,
)


def _wrap_key(below: int, value: int) -> tuple[int, int]:
    # order values cyclically starting just above `below`
    return (0, value) if value > below else (1, value)


def column_sort_key(column: Sequence[int]) -> tuple:
    """Sort key realizing the column order on equal-height columns.

    First entries compare numerically (the cell below row 1 is the infinity
    basement); each later entry compares cyclically relative to the entry
    below it, which is exactly the no-counterclockwise-triple tie rule.
    """
    if not column:
        return ()
    key: list = [column[0]]
    for below, value in zip(column, column[1:]):
        key.append(_wrap_key(below, value))
    return tuple(key)


def column_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Weak column order; requires equal heights."""
    if len(a) != len(b):
        raise ShapeError("columns of different heights are incomparable")
    return column_sort_key(a) <= column_sort_key(b)


def _height_blocks(shape: Diagram) -> list[tuple[int, int, int]]:
    """Maximal runs of equal-height columns as (height, first_col, count)."""
    blocks = []
    col = 1
    while col <= shape.n_cols:
        h = shape.height(col)
        end = col
        while end + 1 <= shape.n_cols and shape.height(end + 1) == h:
            end += 1
        blocks.append((h, col, end - col + 1))
        col = end + 1
    return blocks


def is_sorted_tableau(f: Filling) -> bool:
    """Columns of each height weakly increase left to right in column order."""
    if not f.shape.is_partition():
        raise ShapeError("sorted tableaux live on partition shapes")
    for _, first, count in _height_blocks(f.shape):
        keys = [column_sort_key(f.column(c)) for c in range(first, first + count)]
        if any(k1 > k2 for k1, k2 in zip(keys, keys[1:])):
            return False
    return True


def iter_sorted_tableaux(shape: Diagram, n: int) -> Iterator[Filling]:
    """All sorted tableaux of `shape` with entries in 1..n.

    Generated directly: per height block, weakly increasing column sequences
    are combinations-with-replacement over the key-sorted column alphabet.
    """
    if not shape.is_partition():
        raise ShapeError("sorted tableaux live on partition shapes")
    blocks = _height_blocks(shape)
    per_block = []
    for h, _, count in blocks:
        if h == 0:
            per_block.append([()])
            continue
        columns = sorted(iproduct(range(1, n + 1), repeat=h), key=column_sort_key)
        per_block.append(list(combinations_with_replacement(columns, count)))
    for choice in iproduct(*per_block):
        entries = {}
        col = 0
        for (h, _, count), block_cols in zip(blocks, choice):
            for column in block_cols if h else [()] * count:
                col += 1
                for r, value in enumerate(column, start=1):
                    entries[Cell(col, r)] = value
        yield Filling(shape, entries, INF_BASEMENT)


@dataclass(frozen=True)
class SortedTableau:
    """A filling certified sorted, with its per-block identical-column runs."""

    filling: Filling
    block_multiplicities: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def certify(cls, f: Filling) -> "SortedTableau":
        if not is_sorted_tableau(f):
            raise ShapeError("filling is not a sorted tableau")
        blocks = []
        for h, first, count in _height_blocks(f.shape):
            runs: list[int] = []
            prev = None
            for c in range(first, first + count):
                col = f.column(c)
                if col == prev:
                    runs[-1] += 1
                else:
                    runs.append(1)
                    prev = col
            blocks.append((h, tuple(runs)))
        return cls(f, tuple(blocks))

    def multiplicity_t(self, n_ambient: int = 0) -> MPoly:
        """Product over height blocks of the Gaussian multinomials of runs."""
        out = MPoly.one(n_ambient)
        for _, runs in self.block_multiplicities:
            out = out * t_multinomial(sum(runs), runs, n=n_ambient)
        return out


def multiplicity_t(f: Filling, n_ambient: int = 0) -> MPoly:
    return SortedTableau.certify(f).multiplicity_t(n_ambient)


def _as_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p <= 0 for p in lam):
        raise ShapeError(f"{lam} is not a partition with positive parts")
    return lam


def htilde_plain(lam: Sequence[int], n: int) -> MPoly:
    """Sum of x^sigma q^inv t^maj over all fillings with entries in 1..n."""
    lam = _as_partition(lam)
    shape = diagram(lam)
    cells = shape.cells()
    acc: dict[Monomial, int] = {}
    for combo in iproduct(range(1, n + 1), repeat=len(cells)):
        f = Filling(shape, dict(zip(cells, combo)), INF_BASEMENT)
        exps = f.x_exponents(n)
        mono = Monomial(exps, inv(f), maj(f))
        acc[mono] = acc.get(mono, 0) + 1
    return MPoly(n, acc)


def htilde_compact(lam: Sequence[int], n: int) -> MPoly:
    """Same polynomial as :func:`htilde_plain`, summed over the sorted tableaux
    of the conjugate diagram with weight x^sigma t^inv q^maj multiplicity_t."""
    lam = _as_partition(lam)
    shape = diagram(conjugate(lam))
    total = MPoly.zero(n)
    for f in iter_sorted_tableaux(shape, n):
        st = SortedTableau.certify(f)
        weight = st.multiplicity_t(n).mul_monomial(
            x=f.x_exponents(n), q=maj(f), t=inv(f)
        )
        total = total + weight
    return total
