"""Lattice walks, critical substrings, and the operators F_i, E_i, F_i', E_i'.

All four families act on the {i, i', i+1, (i+1)'}-subword of a word, with
those letters relabeled 1', 1, 2', 2.  The i-th lattice walk turns each
subword letter into a unit step: on the axes primed and unprimed letters
behave alike (1-family east, 2-family north); in the open quadrant 1 goes
south, 1' east, 2 north, 2' west.  The unprimed operators locate the final
critical substring over all representatives (highest start, longest on a
tie) and transform it per the type tables; the primed operators re-prime
the last i / last (i+1)' when it sits right of its counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .errors import InvalidIndex
from .tableaux import ShiftedTableau, from_reading_codes, reading_word
from .words import (
    Codes,
    RawWord,
    Word,
    canonical_codes,
    standardize_codes,
    value_of,
    weight_of_codes,
)

FAMILIES = ("F", "E", "F'", "E'")

# Relabeled letter codes inside a subword.
_1P, _1, _2P, _2 = 1, 2, 3, 4

_F_KINDS = ("1F", "2F", "3F", "4F", "5F")
_E_KINDS = ("1E", "2E", "3E", "4E", "5E")


@dataclass(frozen=True)
class OpKind:
    family: str  # one of F, E, F', E'
    index: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown operator family {self.family!r}")
        if self.index < 1:
            raise InvalidIndex(f"index must be >= 1, got {self.index}")

    @property
    def primed(self) -> bool:
        return self.family.endswith("'")

    @property
    def lowering(self) -> bool:
        return self.family.startswith("F")

    def __str__(self) -> str:
        return f"{self.family}_{self.index}"


@dataclass(frozen=True)
class Walk:
    """The i-th lattice walk: one point per step boundary, one step per
    subword letter.  ``positions`` are the full-word indices (0-based) of
    the subword letters."""

    index: int
    positions: tuple[int, ...]
    points: tuple[tuple[int, int], ...]
    steps: tuple[str, ...]

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.points[-1]


@dataclass(frozen=True)
class CriticalMatch:
    """A located critical substring inside one representative."""

    kind: str  # 1F..5F or 1E..5E
    representative: RawWord
    positions: tuple[int, ...]  # full-word indices of the substring letters
    location: tuple[int, int]  # walk point just before the substring

    @property
    def start_index(self) -> int:
        return self.positions[0]

    @property
    def length(self) -> int:
        return len(self.positions)

    @property
    def defined(self) -> bool:
        return self.kind not in ("5F", "5E")


def _subword(codes: Codes, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Relabeled {i,i+1}-subword and the full-word positions of its letters."""
    shift = 2 * (i - 1)
    sub = []
    pos = []
    lo, hi = 2 * i - 1, 2 * (i + 1)
    for p, c in enumerate(codes):
        if lo <= c <= hi:
            sub.append(c - shift)
            pos.append(p)
    return tuple(sub), tuple(pos)


def _walk_points(sub: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    x = y = 0
    points = [(0, 0)]
    for c in sub:
        if c == _1:
            if x == 0 or y == 0:
                x += 1
            else:
                y -= 1
        elif c == _1P:
            x += 1
        elif c == _2:
            y += 1
        else:  # _2P
            if x == 0 or y == 0:
                y += 1
            else:
                x -= 1
        points.append((x, y))
    return tuple(points)


_STEP_NAME = {(1, 0): "E", (-1, 0): "W", (0, 1): "N", (0, -1): "S"}


def lattice_walk(w: RawWord, i: int) -> Walk:
    """Walk of the given representative (a canonical Word walks its canonical
    representative)."""
    _check_index(i, w.n)
    sub, pos = _subword(w.codes, i)
    points = _walk_points(sub)
    steps = tuple(
        _STEP_NAME[(b[0] - a[0], b[1] - a[1])] for a, b in zip(points, points[1:])
    )
    return Walk(i, pos, points, steps)


def _scan_matches(sub: tuple[int, ...], points, lower: bool):
    """All critical substrings of one representative, as
    (subword start, length, kind) triples."""
    m = len(sub)
    out = []
    for j in range(m):
        c = sub[j]
        x, y = points[j]
        if lower:
            if c == _1 and y == 0:
                out.append((j, 1, "3F"))
            if c == _1P and x == 0:
                out.append((j, 1, "4F"))
            if (c == _1 or c == _2P) and x == 1 and y >= 1:
                out.append((j, 1, "5F"))
            if c == _1 and (y == 0 or (y == 1 and x >= 1)):
                k = j + 1
                while k < m and sub[k] == _1P:
                    k += 1
                if k < m and sub[k] == _2P:
                    out.append((j, k - j + 1, "1F"))
            if c == _1 and (x == 0 or (x == 1 and y >= 1)):
                k = j + 1
                while k < m and sub[k] == _2:
                    k += 1
                if k < m and sub[k] == _1P:
                    out.append((j, k - j + 1, "2F"))
        else:
            if c == _2P and x == 0:
                out.append((j, 1, "3E"))
            if c == _2 and y == 0:
                out.append((j, 1, "4E"))
            if (c == _1 or c == _2P) and y == 1 and x >= 1:
                out.append((j, 1, "5E"))
            if c == _2P and (x == 0 or (x == 1 and y >= 1)):
                k = j + 1
                while k < m and sub[k] == _2:
                    k += 1
                if k < m and sub[k] == _1:
                    out.append((j, k - j + 1, "1E"))
            if c == _2P and (y == 0 or (y == 1 and x >= 1)):
                k = j + 1
                while k < m and sub[k] == _1P:
                    k += 1
                if k < m and sub[k] == _2:
                    out.append((j, k - j + 1, "2E"))
    return out


def _transform(kind: str, piece: tuple[int, ...]) -> tuple[int, ...]:
    if kind == "1F":  # 1 (1')* 2'  ->  2' (1')* 2
        return (_2P,) + piece[1:-1] + (_2,)
    if kind == "2F":  # 1 (2)* 1'  ->  2' (2)* 1
        return (_2P,) + piece[1:-1] + (_1,)
    if kind == "3F":
        return (_2,)
    if kind == "4F":
        return (_2P,)
    if kind == "1E":  # 2' (2)* 1  ->  1 (2)* 1'
        return (_1,) + piece[1:-1] + (_1P,)
    if kind == "2E":  # 2' (1')* 2  ->  1 (1')* 2'
        return (_1,) + piece[1:-1] + (_2P,)
    if kind == "3E":
        return (_1P,)
    if kind == "4E":
        return (_1,)
    raise ValueError(f"type {kind} has no transformation")


def _family_toggles(codes: Codes, i: int):
    """Representative variants that differ on first occurrences of i, i+1.

    Toggling other values never touches the subword, so these four variants
    cover everything the full 2^k representative search can see.
    """
    firsts = []
    for v in (i, i + 1):
        for p, c in enumerate(codes):
            if value_of(c) == v:
                firsts.append(p)
                break
    variants = []
    for mask in product((0, 1), repeat=len(firsts)):
        cs = list(codes)
        for pos, bit in zip(firsts, mask):
            if bit:
                cs[pos] -= 1
        variants.append(tuple(cs))
    return variants


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= max(n - 1, 0):
        raise InvalidIndex(f"index {i} outside 1..{n - 1}")


@lru_cache(maxsize=1 << 18)
def _best_matches(codes: Codes, i: int, lower: bool):
    """Final critical substrings: all matches tied at (max start, max length).

    Returns (subword positions tuple, list of (variant codes, subword start,
    length, kind)) or None when no representative has a critical substring.
    """
    sub, pos = _subword(codes, i)
    if not sub:
        return None
    best_key = None
    best: list[tuple[Codes, int, int, str]] = []
    for variant in _family_toggles(codes, i):
        vsub = tuple(variant[p] - 2 * (i - 1) for p in pos)
        points = _walk_points(vsub)
        for j, length, kind in _scan_matches(vsub, points, lower):
            key = (j, length)
            if best_key is None or key > best_key:
                best_key = key
                best = [(variant, j, length, kind)]
            elif key == best_key:
                best.append((variant, j, length, kind))
    if not best:
        return None
    return pos, best


def final_critical_substring(w: Word, i: int, lower: bool = True) -> CriticalMatch | None:
    """The final F_i- (or E_i-) critical substring over all representatives:
    highest start index, longest on a tie.  Type 5 matches are returned as
    values; ``None`` means no representative has any critical substring."""
    _check_index(i, w.n)
    found = _best_matches(w.codes, i, lower)
    if found is None:
        return None
    pos, best = found
    variant, j, length, kind = best[0]
    points = _walk_points(tuple(variant[p] - 2 * (i - 1) for p in pos))
    return CriticalMatch(
        kind=kind,
        representative=RawWord(variant, w.n),
        positions=pos[j : j + length],
        location=points[j],
    )


@lru_cache(maxsize=1 << 18)
def _apply_unprimed(codes: Codes, i: int, lower: bool) -> Codes | None:
    found = _best_matches(codes, i, lower)
    if found is None:
        return None
    pos, best = found
    results = set()
    for variant, j, length, kind in best:
        if kind in ("5F", "5E"):
            results.add(None)
            continue
        piece = tuple(variant[p] - 2 * (i - 1) for p in pos[j : j + length])
        replaced = _transform(kind, piece)
        out = list(variant)
        for p, c in zip(pos[j : j + length], replaced):
            out[p] = c + 2 * (i - 1)
        results.add(canonical_codes(tuple(out)))
    assert len(results) == 1, (
        f"tied final critical substrings disagree on {codes} i={i}: {results}"
    )
    return results.pop()


@lru_cache(maxsize=1 << 18)
def _apply_primed(codes: Codes, i: int, lower: bool) -> Codes | None:
    unprimed_i = 2 * i
    primed_i1 = 2 * (i + 1) - 1
    results = set()
    for variant in _family_toggles(codes, i):
        last_i = last_i1p = None
        for p, c in enumerate(variant):
            if c == unprimed_i:
                last_i = p
            elif c == primed_i1:
                last_i1p = p
        if lower:
            # last i strictly right of last (i+1)' (vacuous without (i+1)')
            if last_i is None or (last_i1p is not None and last_i < last_i1p):
                continue
            out = list(variant)
            out[last_i] = primed_i1
        else:
            if last_i1p is None or (last_i is not None and last_i1p < last_i):
                continue
            out = list(variant)
            out[last_i1p] = unprimed_i
        results.add(canonical_codes(tuple(out)))
    if not results:
        return None
    assert len(results) == 1, (
        f"qualifying representatives disagree on {codes} i={i}: {results}"
    )
    return results.pop()


def apply(kind: OpKind, w: Word) -> Word | None:
    """Apply one operator to a canonical word; ``None`` when undefined.

    Length is always preserved; the weight moves by -alpha_i for the F side
    and +alpha_i for the E side.
    """
    _check_index(kind.index, w.n)
    if kind.primed:
        out = _apply_primed(w.codes, kind.index, kind.lowering)
    else:
        out = _apply_unprimed(w.codes, kind.index, kind.lowering)
    return None if out is None else Word(out, w.n)


def apply_to_tableau(kind: OpKind, t: ShiftedTableau) -> ShiftedTableau | None:
    """Act through the reading word; the result is refilled into the same
    shape and revalidated (BrokenSemistandard would mean a bug, as the
    operators are closed on each ShST(shape, n))."""
    out = apply(kind, reading_word(t))
    if out is None:
        return None
    return from_reading_codes(t.shape, out.codes, t.n)


def _canonical_words_with_weight(wt: tuple[int, ...]):
    values = []
    for v, count in enumerate(wt, start=1):
        values.extend([v] * count)
    seen_arrangements = set()
    for arrangement in permutations(values):
        if arrangement in seen_arrangements:
            continue
        seen_arrangements.add(arrangement)
        positions: dict[int, list[int]] = {}
        for p, v in enumerate(arrangement):
            positions.setdefault(v, []).append(p)
        later = [p for v, ps in positions.items() for p in ps[1:]]
        for mask in product((0, 1), repeat=len(later)):
            codes = [2 * v for v in arrangement]
            for p, bit in zip(later, mask):
                if bit:
                    codes[p] -= 1
            yield tuple(codes)


def primed_by_standardization(w: Word, i: int, lower: bool = True) -> Word | None:
    """Brute-force oracle for the primed operators: the unique word of the
    same standardization whose weight moved by -alpha_i (lower) or +alpha_i
    (raise); ``None`` when no such word exists."""
    _check_index(i, w.n)
    wt = list(weight_of_codes(w.codes, w.n))
    delta = -1 if lower else 1
    wt[i - 1] += delta
    wt[i] -= delta
    if wt[i - 1] < 0 or wt[i] < 0:
        return None
    target_std = standardize_codes(w.codes)
    hits = []
    for codes in _canonical_words_with_weight(tuple(wt)):
        if standardize_codes(codes) == target_std:
            hits.append(codes)
    assert len(hits) <= 1, f"standardization oracle found several words for {w}"
    return Word(hits[0], w.n) if hits else None


def alternate_E2prime(w: Word) -> Word | None:
    """The alternate E_2' rule: change the last 3' (counting the first 3,
    which may be primed in a representative) to a 2, with a prime swap when
    the word holds a single 2-family letter left of that 3'."""
    if w.n < 3:
        raise InvalidIndex("alternate rule needs alphabet bound 3")
    three_prime, three = 5, 6
    codes = w.codes
    primes3 = [p for p, c in enumerate(codes) if c == three_prime]
    if primes3:
        x = primes3[-1]
        base = list(codes)
    else:
        first3 = next((p for p, c in enumerate(codes) if c == three), None)
        if first3 is None:
            return None
        x = first3
        base = list(codes)
        base[x] = three_prime
    two_family = [p for p, c in enumerate(codes) if value_of(c) == 2]
    if len(two_family) == 1 and x < two_family[0]:
        y = two_family[0]
        base[x] = 4
        base[y] = 3
        return Word(canonical_codes(tuple(base)), w.n)
    cand = list(base)
    cand[x] = 4
    if standardize_codes(tuple(cand)) == standardize_codes(codes):
        return Word(canonical_codes(tuple(cand)), w.n)
    return None
