"""Shifted skew shapes and semistandard shifted tableaux.

Row r of a shifted diagram (1-indexed, top row first) occupies columns
r .. r+outer_r-1; a skew shape removes the first inner_r of those columns.
Semistandardness: rows and columns weakly increase in the letter order,
an unprimed value appears at most once per column, a primed value at most
once per row, and the first letter of each value in reading order (rows
bottom to top, left to right) is unprimed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BrokenSemistandard, NotContained, NotStrict
from .words import (
    Codes,
    Letter,
    WeightVector,
    Word,
    canonical_codes,
    is_primed,
    value_of,
    weight_of_codes,
)

StrictPartition = tuple[int, ...]


def check_strict(parts) -> StrictPartition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise NotStrict(f"parts must be positive: {parts}")
    for a, b in zip(parts, parts[1:]):
        if a <= b:
            raise NotStrict(f"parts must strictly decrease: {parts}")
    return parts


def strict_partitions(total: int) -> list[StrictPartition]:
    """All strict partitions of ``total`` (descending parts)."""

    def gen(remaining: int, maximum: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maximum), 0, -1):
            for rest in gen(remaining - first, first - 1):
                yield (first,) + rest

    return list(gen(total, total))


@dataclass(frozen=True)
class SkewShape:
    outer: StrictPartition
    inner: StrictPartition = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", check_strict(self.outer))
        object.__setattr__(self, "inner", check_strict(self.inner))
        if len(self.inner) > len(self.outer):
            raise NotContained(f"inner {self.inner} has more rows than outer {self.outer}")
        for r, mu in enumerate(self.inner):
            if mu > self.outer[r]:
                raise NotContained(f"inner {self.inner} exceeds outer {self.outer} in row {r + 1}")

    @property
    def nrows(self) -> int:
        return len(self.outer)

    def inner_part(self, row: int) -> int:
        return self.inner[row - 1] if row <= len(self.inner) else 0

    def row_span(self, row: int) -> tuple[int, int]:
        """Columns (first, last+1) occupied by 1-indexed ``row``."""
        return row + self.inner_part(row), row + self.outer[row - 1]

    def cells(self) -> list[tuple[int, int]]:
        """All cells in storage order (top row first, left to right)."""
        out = []
        for r in range(1, self.nrows + 1):
            lo, hi = self.row_span(r)
            out.extend((r, c) for c in range(lo, hi))
        return out

    def reading_cells(self) -> list[tuple[int, int]]:
        """Cells in reading order: rows bottom to top, left to right."""
        out = []
        for r in range(self.nrows, 0, -1):
            lo, hi = self.row_span(r)
            out.extend((r, c) for c in range(lo, hi))
        return out

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self) -> str:
        inner = ",".join(map(str, self.inner))
        outer = ",".join(map(str, self.outer)) or "()"
        return f"{outer}/{inner}" if inner else outer


def make_skew_shape(outer, inner=()) -> SkewShape:
    """Validated shifted skew shape; raises NotStrict / NotContained."""
    return SkewShape(tuple(outer), tuple(inner))


@dataclass(frozen=True)
class ShiftedTableau:
    """A semistandard shifted filling, rows stored top to bottom."""

    shape: SkewShape
    rows: tuple[Codes, ...]
    n: int

    def __post_init__(self) -> None:
        _validate(self.shape, self.rows, self.n)

    def entry(self, row: int, col: int) -> Letter:
        lo, hi = self.shape.row_span(row)
        if not lo <= col < hi:
            raise KeyError((row, col))
        return Letter.from_code(self.rows[row - 1][col - lo])

    @property
    def entries(self) -> dict[tuple[int, int], Letter]:
        out = {}
        for r in range(1, self.shape.nrows + 1):
            lo, _ = self.shape.row_span(r)
            for j, c in enumerate(self.rows[r - 1]):
                out[(r, lo + j)] = Letter.from_code(c)
        return out

    def reading_codes(self) -> Codes:
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    @property
    def size(self) -> int:
        return self.shape.size

    def weight(self) -> WeightVector:
        return weight_of_codes(self.reading_codes(), self.n)

    def __str__(self) -> str:
        lines = []
        for r in range(1, self.shape.nrows + 1):
            tokens = ["."] * self.shape.inner_part(r)
            tokens.extend(str(Letter.from_code(c)) for c in self.rows[r - 1])
            lines.append(" ".join(tokens))
        return "\n".join(lines)


def _validate(shape: SkewShape, rows: tuple[Codes, ...], n: int) -> None:
    if len(rows) != shape.nrows:
        raise BrokenSemistandard("row count does not match shape")
    for r in range(1, shape.nrows + 1):
        lo, hi = shape.row_span(r)
        row = rows[r - 1]
        if len(row) != hi - lo:
            raise BrokenSemistandard(f"row {r} has wrong length")
        for c in row:
            if not 1 <= value_of(c) <= n:
                raise BrokenSemistandard(f"letter {Letter.from_code(c)} exceeds bound {n}")
        for a, b in zip(row, row[1:]):
            if a > b:
                raise BrokenSemistandard(f"row {r} is not weakly increasing")
            if a == b and is_primed(a):
                raise BrokenSemistandard(f"primed letter repeats in row {r}")
    for r in range(1, shape.nrows):
        lo_hi = shape.row_span(r)
        lo2_hi2 = shape.row_span(r + 1)
        for col in range(max(lo_hi[0], lo2_hi2[0]), min(lo_hi[1], lo2_hi2[1])):
            a = rows[r - 1][col - lo_hi[0]]
            b = rows[r][col - lo2_hi2[0]]
            if a > b:
                raise BrokenSemistandard(f"column {col} is not weakly increasing")
            if a == b and not is_primed(a):
                raise BrokenSemistandard(f"unprimed letter repeats in column {col}")
    word: list[int] = []
    for row in reversed(rows):
        word.extend(row)
    if tuple(word) != canonical_codes(tuple(word)):
        raise BrokenSemistandard("first family letter in reading order is primed")


def reading_word(t: ShiftedTableau) -> Word:
    """Concatenation of the rows from bottom to top."""
    return Word(t.reading_codes(), t.n)


def from_reading_codes(shape: SkewShape, codes: Codes, n: int) -> ShiftedTableau:
    """Refill ``shape`` with a word in reading order; validates the result."""
    if len(codes) != shape.size:
        raise BrokenSemistandard("word length does not match shape size")
    rows: list[Codes] = []
    pos = 0
    for r in range(shape.nrows, 0, -1):
        lo, hi = shape.row_span(r)
        width = hi - lo
        rows.append(tuple(codes[pos : pos + width]))
        pos += width
    return ShiftedTableau(shape, tuple(reversed(rows)), n)


def _enumerate_rows(
    shape: SkewShape,
    n: int,
    canonical: bool,
    diagonal_unprimed: bool,
) -> list[tuple[Codes, ...]]:
    """Backtracking enumeration over cells in reading order.

    ``canonical=True`` enforces the first-family-letter-unprimed rule (the
    tableaux of this package); ``canonical=False, diagonal_unprimed=True``
    gives the classical decorated fillings behind the Schur P-polynomials.
    """
    cells = shape.reading_cells()
    spans = {r: shape.row_span(r) for r in range(1, shape.nrows + 1)}
    grid: dict[tuple[int, int], int] = {}
    results: list[tuple[Codes, ...]] = []
    family_seen = [False] * (n + 1)

    def place(k: int) -> None:
        if k == len(cells):
            rows = tuple(
                tuple(grid[(r, c)] for c in range(*spans[r]))
                for r in range(1, shape.nrows + 1)
            )
            results.append(rows)
            return
        r, c = cells[k]
        left = grid.get((r, c - 1))
        below = grid.get((r + 1, c))
        lo = left if left is not None else 1
        hi = below if below is not None else 2 * n
        for code in range(lo, hi + 1):
            primed = is_primed(code)
            if left is not None and code == left and primed:
                continue  # primed repeat in row
            if below is not None and code == below and not primed:
                continue  # unprimed repeat in column
            v = value_of(code)
            if primed and canonical and not family_seen[v]:
                continue
            if primed and diagonal_unprimed and c == r and shape.inner_part(r) == 0:
                continue
            newly_seen = not family_seen[v]
            family_seen[v] = True
            grid[(r, c)] = code
            place(k + 1)
            del grid[(r, c)]
            if newly_seen:
                family_seen[v] = False

    place(0)
    return results


def enumerate_tableaux(shape: SkewShape, n: int) -> list[ShiftedTableau]:
    """All canonical-form semistandard fillings, sorted by reading word."""
    tableaux = [
        ShiftedTableau(shape, rows, n)
        for rows in _enumerate_rows(shape, n, canonical=True, diagonal_unprimed=False)
    ]
    tableaux.sort(key=lambda t: t.reading_codes())
    return tableaux


def decorated_filling_weights(
    shape: SkewShape, n: int, diagonal_unprimed: bool = True
) -> list[WeightVector]:
    """Weights of the classical prime-decorated semistandard fillings
    (no canonical-form condition; optionally no primes on the diagonal)."""
    out = []
    for rows in _enumerate_rows(shape, n, canonical=False, diagonal_unprimed=diagonal_unprimed):
        codes: list[int] = []
        for row in rows:
            codes.extend(row)
        out.append(weight_of_codes(tuple(codes), n))
    return out


def is_special(t: ShiftedTableau) -> bool:
    """Exactly one 2-family letter sitting in the top row, a nonempty second
    row, and no 3' in the top row (alphabet bound 3)."""
    if t.shape.nrows < 2 or not t.rows[1]:
        return False
    two_family = [
        (r, j) for r, row in enumerate(t.rows, start=1) for j, c in enumerate(row) if value_of(c) == 2
    ]
    if len(two_family) != 1 or two_family[0][0] != 1:
        return False
    three_prime = 2 * 3 - 1
    return three_prime not in t.rows[0]


def parse_tableau(text: str, n: int) -> ShiftedTableau:
    """Parse the row format: one line per row, top row first, entries
    space-separated, ``.`` for inner cells."""
    from .words import _parse_token

    lines = [line for line in text.splitlines() if line.strip()]
    outer = []
    inner = []
    rows = []
    for line in lines:
        tokens = line.split()
        dots = 0
        while dots < len(tokens) and tokens[dots] == ".":
            dots += 1
        entries = tokens[dots:]
        if any(tok == "." for tok in entries):
            raise BrokenSemistandard("inner cells must precede all entries in a row")
        inner.append(dots)
        outer.append(dots + len(entries))
        rows.append(tuple(_parse_token(tok) for tok in entries))
    shape = SkewShape(tuple(outer), tuple(p for p in inner if p > 0))
    if list(shape.inner) + [0] * (len(outer) - len(shape.inner)) != inner:
        raise NotContained(f"inner dots {inner} do not form a strict partition prefix")
    return ShiftedTableau(shape, tuple(rows), n)


def rows_from_strings(rows: list[str], n: int) -> ShiftedTableau:
    """Build a straight or skew tableau from row strings like "1 1 2' / 2"."""
    return parse_tableau("\n".join(rows), n)
