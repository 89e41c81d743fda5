"""Framed spherical braid words.

A braid word on d marked points of the sphere is written in the grammar

    input := "d=" INT ";" token*
    token := ("s" | "t") INT ("^-1")?

where ``s<i>`` is the Artin half-twist exchanging the marked points i and
i+1 (valid for 1 <= i <= d-1) and ``t<k>`` is the framing twist of the
disc around marked point k (valid for 1 <= k <= d).  Words are kept in
free reduction normal form: a letter never sits next to its own inverse.
No other braid relations are applied, so two BraidWord values compare
equal exactly when their reduced words coincide, not when they present
the same group element.

Composition convention, used consistently by everything this word
induces (permutations, free group endomorphisms): a word composes like
functions written left to right, so in ``a.compose(b)`` (the word "a b")
the right factor b acts first and a acts on its output.  Under this
convention the word ``s1 s2 ... s<d-1>`` induces the standard cycle
(1 2 ... d), which is what the strict transitivity test checks for.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

ARTIN = "s"
TWIST = "t"


class BraidError(ValueError):
    """Base class for braid input problems."""


class BraidSyntaxError(BraidError):
    """Malformed braid text.  ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BraidIndexError(BraidError):
    """A letter index outside the valid range for the given d."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: token {token!r} (at position {position})")
        self.token = token
        self.position = position


class NonTransitiveBraidError(BraidError):
    """Raised by constructions that only exist for transitive braids."""


@dataclass(frozen=True)
class BraidLetter:
    kind: str   # ARTIN ("s") or TWIST ("t")
    index: int  # 1-based; Artin: 1..d-1, twist: 1..d
    sign: int   # +1 or -1

    def __post_init__(self) -> None:
        if self.kind not in (ARTIN, TWIST):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +-1, got {self.sign}")
        if self.index < 1:
            raise ValueError(f"letter index must be positive, got {self.index}")

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.kind, self.index, -self.sign)

    def token(self) -> str:
        return f"{self.kind}{self.index}" + ("^-1" if self.sign < 0 else "")


def _free_reduce(letters: Iterable[BraidLetter]) -> tuple[BraidLetter, ...]:
    out: list[BraidLetter] = []
    for x in letters:
        if out and out[-1].kind == x.kind and out[-1].index == x.index \
                and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in Artin generators and framing twists."""

    d: int
    letters: tuple[BraidLetter, ...]

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"need at least two marked points, got d={self.d}")
        for x in self.letters:
            limit = self.d - 1 if x.kind == ARTIN else self.d
            if x.index > limit:
                raise ValueError(f"letter {x.token()} out of range for d={self.d}")
        if self.letters != _free_reduce(self.letters):
            raise ValueError("letters are not freely reduced; use from_letters")

    @classmethod
    def from_letters(cls, d: int, letters: Iterable[BraidLetter]) -> "BraidWord":
        return cls(d, _free_reduce(letters))

    @classmethod
    def identity(cls, d: int) -> "BraidWord":
        return cls(d, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def compose(self, other: "BraidWord") -> "BraidWord":
        """Concatenate; in the result the right factor acts first."""
        if self.d != other.d:
            raise ValueError(f"strand count mismatch: d={self.d} vs d={other.d}")
        return BraidWord.from_letters(self.d, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.d, tuple(x.inverse() for x in reversed(self.letters)))

    def to_text(self) -> str:
        head = f"d={self.d};"
        if not self.letters:
            return head
        return head + " " + " ".join(x.token() for x in self.letters)

    def __str__(self) -> str:
        return self.to_text()


_HEADER = re.compile(r"\s*d=(\d+);")
_TOKEN = re.compile(r"([st])(\d+)(\^-1)?\Z")


def parse_braid(text: str) -> BraidWord:
    """Parse the ``d=<INT>; token*`` grammar, with offsets in errors."""
    m = _HEADER.match(text)
    if m is None:
        raise BraidSyntaxError("expected header of the form 'd=<int>;'", 0)
    d = int(m.group(1))
    if d < 2:
        raise BraidIndexError("need at least two marked points", f"d={d}", m.start(1))
    letters = []
    for tok in re.finditer(r"\S+", text[m.end():]):
        pos = m.end() + tok.start()
        t = _TOKEN.match(tok.group())
        if t is None:
            raise BraidSyntaxError(f"bad token {tok.group()!r}", pos)
        kind, index, inv = t.group(1), int(t.group(2)), t.group(3)
        limit = d - 1 if kind == ARTIN else d
        if not 1 <= index <= limit:
            what = "Artin generator" if kind == ARTIN else "framing twist"
            raise BraidIndexError(
                f"{what} index must lie in 1..{limit} for d={d}", tok.group(), pos)
        letters.append(BraidLetter(kind, index, -1 if inv else 1))
    return BraidWord.from_letters(d, letters)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., d} stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.images)
        if sorted(self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a permutation of 1..{d}: {self.images}")

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other (other acts first)."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self(other(k)) for k in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for k, v in enumerate(self.images, start=1):
            images[v - 1] = k
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def fixed_point_count(self) -> int:
        return sum(1 for k, v in enumerate(self.images, start=1) if v == k)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each rotated to start at its minimum, sorted."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return tuple(sorted(out))

    def is_standard_cycle(self) -> bool:
        """True iff this is the cycle (1 2 ... d) on the nose."""
        d = self.degree
        return self.images == tuple(range(2, d + 1)) + (1,)

    def is_transitive(self) -> bool:
        """True iff a single orbit, i.e. some d-cycle."""
        return len(self.cycles()) == 1 and self.degree >= 1


def induced_permutation(b: BraidWord) -> Permutation:
    """Permutation of the marked points induced by the braid.

    Each Artin letter contributes the transposition (i, i+1) regardless of
    sign; framing twists contribute nothing.  Letters combine under the
    composition convention of this module, which amounts to swapping the
    entries i, i+1 of the image tuple as the word is scanned left to right.
    """
    images = list(range(1, b.d + 1))
    for x in b.letters:
        if x.kind == ARTIN:
            i = x.index - 1
            images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def is_transitive(b: BraidWord, relaxed: bool = False) -> bool:
    """Strict mode: the induced permutation equals (1 2 ... d) exactly.

    Relaxed mode accepts any single d-cycle; use standard_relabeling to
    recover the conjugating relabeling in that case.
    """
    sigma = induced_permutation(b)
    return sigma.is_transitive() if relaxed else sigma.is_standard_cycle()


def standard_relabeling(b: BraidWord) -> Permutation | None:
    """A relabeling rho with rho . sigma . rho^-1 = (1 2 ... d).

    Returns None when the braid is not transitive.  The relabeling sends
    the orbit 1, sigma(1), sigma^2(1), ... to 1, 2, 3, ...
    """
    sigma = induced_permutation(b)
    if not sigma.is_transitive():
        return None
    images = [0] * sigma.degree
    k = 1
    for j in range(sigma.degree):
        images[k - 1] = j + 1
        k = sigma(k)
    return Permutation(tuple(images))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    return a.compose(b)


def invert(b: BraidWord) -> BraidWord:
    return b.inverse()
