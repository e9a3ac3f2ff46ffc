"""Letters and words over the primed alphabet 1' < 1 < 2' < 2 < ... < n' < n.

A letter is internally a single integer code ``2*value - primed`` so that the
alphabet order is plain integer order.  A word is a tuple of codes together
with its alphabet bound ``n``.  Canonical form means the leftmost occurrence
of each value (primed or not) is unprimed; a representative is any re-priming
of those first occurrences, and words are really equivalence classes of their
representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import product

PRIME = "'"

Codes = tuple[int, ...]
WeightVector = tuple[int, ...]
StandardWord = tuple[int, ...]


def code_of(value: int, primed: bool) -> int:
    return 2 * value - (1 if primed else 0)


def value_of(code: int) -> int:
    return (code + 1) // 2


def is_primed(code: int) -> bool:
    return code % 2 == 1


@total_ordering
@dataclass(frozen=True)
class Letter:
    """A value with an optional prime; 1' < 1 < 2' < 2 < ..."""

    value: int
    primed: bool = False

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"letter value must be positive, got {self.value}")

    @property
    def code(self) -> int:
        return code_of(self.value, self.primed)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(value_of(code), is_primed(code))

    def __lt__(self, other: "Letter") -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        return f"{self.value}{PRIME if self.primed else ''}"


def _parse_token(token: str) -> int:
    primed = token.endswith(PRIME)
    digits = token[:-1] if primed else token
    if not digits.isdigit() or int(digits) < 1:
        raise ValueError(f"bad letter token {token!r}")
    return code_of(int(digits), primed)


def parse_codes(text: str) -> Codes:
    """Parse the apostrophe syntax, e.g. ``3111'21'12'``.

    Values with several digits must be space-separated (needed when n > 9);
    spaces are accepted in all cases.
    """
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        return tuple(_parse_token(tok) for tok in text.split())
    codes = []
    i = 0
    while i < len(text):
        if not text[i].isdigit():
            raise ValueError(f"bad word text {text!r}")
        j = i + 1
        if j < len(text) and text[j] == PRIME:
            j += 1
        codes.append(_parse_token(text[i:j]))
        i = j
    return tuple(codes)


def codes_to_str(codes: Codes) -> str:
    tokens = [str(Letter.from_code(c)) for c in codes]
    if any(value_of(c) > 9 for c in codes):
        return " ".join(tokens)
    return "".join(tokens)


@dataclass(frozen=True)
class RawWord:
    """A concrete representative: any priming of the letters, bounded by n."""

    codes: Codes
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("alphabet bound must be nonnegative")
        for c in self.codes:
            if not 1 <= value_of(c) <= self.n:
                raise ValueError(
                    f"letter {Letter.from_code(c)} outside alphabet bound {self.n}"
                )

    @classmethod
    def parse(cls, text: str, n: int) -> "RawWord":
        return cls(parse_codes(text), n)

    @classmethod
    def from_letters(cls, letters, n: int) -> "RawWord":
        return cls(tuple(l.code for l in letters), n)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __str__(self) -> str:
        return codes_to_str(self.codes)


@dataclass(frozen=True)
class Word(RawWord):
    """A word in canonical form: the first occurrence of each value is unprimed."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.codes != canonical_codes(self.codes):
            raise ValueError(f"word {codes_to_str(self.codes)} is not in canonical form")

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        return cls(parse_codes(text), n)


def canonical_codes(codes: Codes) -> Codes:
    out = list(codes)
    seen: set[int] = set()
    for i, c in enumerate(out):
        v = value_of(c)
        if v not in seen:
            seen.add(v)
            if is_primed(c):
                out[i] = c + 1
    return tuple(out)


def canonicalize(w: RawWord) -> Word:
    """Unprime the first occurrence of each value; all other letters untouched."""
    return Word(canonical_codes(w.codes), w.n)


def first_occurrences(codes: Codes) -> dict[int, int]:
    """Position of the first letter of each value, in value order."""
    firsts: dict[int, int] = {}
    for i, c in enumerate(codes):
        v = value_of(c)
        if v not in firsts:
            firsts[v] = i
    return dict(sorted(firsts.items()))


def representatives(w: Word) -> list[RawWord]:
    """All 2^k re-primings of the first occurrence of each of the k values."""
    firsts = list(first_occurrences(w.codes).values())
    reps = []
    for mask in product((False, True), repeat=len(firsts)):
        codes = list(w.codes)
        for pos, toggle in zip(firsts, mask):
            if toggle:
                codes[pos] -= 1
        reps.append(RawWord(tuple(codes), w.n))
    return reps


def weight_of_codes(codes: Codes, n: int) -> WeightVector:
    counts = [0] * n
    for c in codes:
        counts[value_of(c) - 1] += 1
    return tuple(counts)


def weight(w: RawWord) -> WeightVector:
    """Counts of i and i' together, per value 1..n."""
    return weight_of_codes(w.codes, w.n)


def standardize_codes(codes: Codes) -> StandardWord:
    order = sorted(
        range(len(codes)),
        key=lambda p: (codes[p], p if not is_primed(codes[p]) else -p),
    )
    ranks = [0] * len(codes)
    for rank, pos in enumerate(order, start=1):
        ranks[pos] = rank
    return tuple(ranks)


def standardize(w: RawWord) -> StandardWord:
    """Rank letters smallest to largest; ties go forward for unprimed letters
    and backward for primed ones.  Constant across representatives of a word.
    """
    return standardize_codes(w.codes)


def eta_codes(codes: Codes, n: int) -> Codes:
    flipped = tuple(code_of(n + 1 - value_of(c), not is_primed(c)) for c in codes)
    return canonical_codes(flipped)


def eta(w: Word, n: int | None = None) -> Word:
    """The weight-reversing involution: i -> (n+1-i)' and vice versa, recanonicalized."""
    bound = w.n if n is None else n
    if any(value_of(c) > bound for c in w.codes):
        raise ValueError("letters exceed the requested alphabet bound")
    return Word(eta_codes(w.codes, bound), bound)
