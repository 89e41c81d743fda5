"""Free group words, braid-induced endomorphisms, and Fox calculus.

Words in the free group of rank n on x1..xn are stored as tuples of
nonzero signed indices (+j for xj, -j for xj^-1) in free reduction
normal form.  The fundamental group of the d-punctured sphere is the
quotient of the rank d free group by x1 x2 ... xd = 1; eliminating xd
via xd = (x1 ... x<d-1>)^-1 identifies it with the free group of rank
d-1, and that is where braid-induced endomorphisms live.

The Artin half-twist s_i acts on the punctured-disc group by

    x_i |-> x_i x_{i+1} x_i^-1,   x_{i+1} |-> x_i,   others fixed,

framing twists act trivially (they are invisible to the fundamental
group; every invariant computed downstream is framing-blind, and reports
say so).  Words of letters act under the package-wide composition
convention: the rightmost letter is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .braids import ARTIN, BraidWord
from .snf import IntMatrix


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; letters are signed 1-based generator indices."""

    rank: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("negative rank")
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        if self.letters != _reduce(self.letters):
            raise ValueError("letters are not freely reduced; use from_letters")

    @classmethod
    def from_letters(cls, rank: int, letters: Iterable[int]) -> "FreeWord":
        return cls(rank, _reduce(letters))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, j: int, power: int = 1) -> "FreeWord":
        if not 1 <= j <= rank:
            raise ValueError(f"generator index {j} out of range")
        sign = 1 if power >= 0 else -1
        return cls(rank, (sign * j,) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord.from_letters(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_vector(self) -> tuple[int, ...]:
        out = [0] * self.rank
        for x in self.letters:
            out[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(out)

    def cyclically_reduced(self) -> "FreeWord":
        letters = self.letters
        i = 0
        while i * 2 < len(letters) - 1 and letters[i] == -letters[-1 - i]:
            i += 1
        return FreeWord(self.rank, letters[i:len(letters) - i])

    def to_text(self, names: tuple[str, ...] | None = None) -> str:
        """Print like ``x1 x2^-1``; the identity prints as ``1``."""
        if not self.letters:
            return "1"
        def name(j: int) -> str:
            return names[j - 1] if names else f"x{j}"
        return " ".join(name(abs(x)) + ("^-1" if x < 0 else "")
                        for x in self.letters)

    def __str__(self) -> str:
        return self.to_text()


def substitute(word: FreeWord, images: "list[FreeWord] | tuple[FreeWord, ...]") -> FreeWord:
    """Replace each letter +-j by images[j-1]^{+-1}, reducing on the fly."""
    out: list[int] = []
    for x in word.letters:
        img = images[abs(x) - 1].letters
        seq = img if x > 0 else tuple(-y for y in reversed(img))
        for y in seq:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    rank = images[0].rank if images else 0
    return FreeWord(rank, tuple(out))


@dataclass(frozen=True)
class FreeGroupEndo:
    """An endomorphism of a free group, given by generator images."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError("need one image per generator")
        for w in self.images:
            if w.rank != self.rank:
                raise ValueError("image rank mismatch")

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupEndo":
        return cls(rank, tuple(FreeWord.generator(rank, j) for j in range(1, rank + 1)))

    def apply(self, word: FreeWord) -> FreeWord:
        if word.rank != self.rank:
            raise ValueError("rank mismatch")
        return substitute(word, self.images)

    def compose(self, other: "FreeGroupEndo") -> "FreeGroupEndo":
        """self after other: (self.compose(other))(w) = self(other(w))."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeGroupEndo(self.rank, tuple(self.apply(w) for w in other.images))


def artin_disc_endo(b: BraidWord) -> FreeGroupEndo:
    """Action on the rank d punctured-disc group, before the sphere relation.

    Scanning the word left to right and precomposing keeps the package
    convention (rightmost letter acts first): after processing g1 .. gk
    the images describe phi_g1 o ... o phi_gk.
    """
    d = b.d
    imgs = [FreeWord.generator(d, j) for j in range(1, d + 1)]
    for x in b.letters:
        if x.kind != ARTIN:
            continue
        i = x.index - 1
        if x.sign > 0:
            new_i = imgs[i] * imgs[i + 1] * imgs[i].inverse()
            imgs[i], imgs[i + 1] = new_i, imgs[i]
        else:
            new_next = imgs[i + 1].inverse() * imgs[i] * imgs[i + 1]
            imgs[i], imgs[i + 1] = imgs[i + 1], new_next
    return FreeGroupEndo(d, tuple(imgs))


def artin_endo(b: BraidWord) -> FreeGroupEndo:
    """Braid action on the punctured-sphere group, rank d-1.

    Eliminates the last puncture loop via xd = (x1 ... x<d-1>)^-1, which
    the Artin action preserves exactly (it fixes the product x1 ... xd).
    """
    d = b.d
    disc = artin_disc_endo(b)
    last = FreeWord(d, tuple(range(1, d))).inverse()  # xd in the quotient
    with_last = tuple(FreeWord.generator(d, j) for j in range(1, d)) + (last,)
    out = []
    for j in range(d - 1):
        image = substitute(disc.images[j], with_last)
        out.append(FreeWord(d - 1, image.letters))  # no letter +-d remains
    return FreeGroupEndo(d - 1, tuple(out))


class GroupRingElement:
    """An element of the integral group ring Z[F], a finite formal sum.

    Immutable by convention; all operations return fresh elements and
    zero coefficients are dropped eagerly.
    """

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[FreeWord, int] | None = None):
        self.rank = rank
        clean: dict[FreeWord, int] = {}
        for word, coeff in (terms or {}).items():
            if word.rank != rank:
                raise ValueError("word rank mismatch")
            if coeff:
                clean[word] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, rank: int) -> "GroupRingElement":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "GroupRingElement":
        return cls(rank, {FreeWord.identity(rank): 1})

    @classmethod
    def from_word(cls, word: FreeWord, coeff: int = 1) -> "GroupRingElement":
        return cls(word.rank, {word: coeff})

    def items(self) -> list[tuple[FreeWord, int]]:
        return list(self._terms.items())

    def coefficient(self, word: FreeWord) -> int:
        return self._terms.get(word, 0)

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupRingElement)
                and self.rank == other.rank and self._terms == other._terms)

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.rank, {w: -c for w, c in self._terms.items()})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElement(self.rank, terms)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement | FreeWord | int") -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement(self.rank, {w: c * other for w, c in self._terms.items()})
        if isinstance(other, FreeWord):
            other = GroupRingElement.from_word(other)
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        terms: dict[FreeWord, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 * w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return GroupRingElement(self.rank, terms)

    def __rmul__(self, other: "FreeWord | int") -> "GroupRingElement":
        if isinstance(other, int):
            return self * other
        return GroupRingElement.from_word(other) * self

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for w, c in sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0].letters)):
            sign = "-" if c < 0 else ("+" if bits else "")
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            bits.append(f"{sign} {mag}{w}" if bits else f"{sign}{mag}{w}")
        return " ".join(bits)


def fox_derivative(word: FreeWord, j: int) -> GroupRingElement:
    """The Fox free derivative d(word)/d(xj).

    Defined by d(xj)/d(xj) = 1, d(xi)/d(xj) = 0 for i != j, and the
    product rule d(uv) = du + u*dv; consequently d(xj^-1)/d(xj) = -xj^-1.
    """
    if not 1 <= j <= word.rank:
        raise IndexError(f"generator index {j} out of range for rank {word.rank}")
    terms: dict[FreeWord, int] = {}
    prefix: list[int] = []
    for x in word.letters:
        if x == j:
            w = FreeWord(word.rank, tuple(prefix))
            terms[w] = terms.get(w, 0) + 1
        elif x == -j:
            w = FreeWord.from_letters(word.rank, prefix + [-j])
            terms[w] = terms.get(w, 0) - 1
        # prefix is reduced since word is; appending keeps it reduced
        prefix.append(x)
    return GroupRingElement(word.rank, terms)


def abelianization_matrix(e: FreeGroupEndo) -> IntMatrix:
    """Column j is the exponent vector of the image of xj."""
    cols = [w.exponent_vector() for w in e.images]
    return IntMatrix.from_rows(zip(*cols))
