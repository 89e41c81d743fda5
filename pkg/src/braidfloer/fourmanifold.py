"""Fundamental group and characteristic number bookkeeping for the fiber sum.

The four-manifold under study is glued from a mapping torus piece (the
product of a circle with the three-dimensional mapping torus of the
braid monodromy), a four-torus, and two K3 surfaces, fiber-summed along
square-zero tori named H1/H1p, H3/H3p, H4/H4p.

Fundamental group.  The mapping torus piece has

    pi1 = < l1, l2, x1..x<d-1> | [l1, l2], [l1, xi], l2 xi l2^-1 = phi(xi) >

with l1 the surface-direction circle, l2 the base loop of the mapping
torus and phi the braid action.  Gluing in the other side kills the
meridian of the surgered torus and its second longitude.  Conventions,
fixed once: the meridian is the puncture loop x1; the second longitude
reads l2^d (the surgered torus is the closed orbit of the marked points,
which covers the base circle d times).  Any fiber-word correction to the
longitude, which depends on framing and basepoint bookkeeping, lies in
the normal closure of the meridian classes: transitivity makes the
monodromy relators sweep the relator x1 through every puncture class, so
every xi already dies in the quotient and the assembled group, hence its
certified abelianization Z + Z/d, does not depend on that choice.

Characteristic numbers.  Euler characteristic and signature add under
fiber sum along tori, c2 = chi and c1^2 = 2 chi + 3 sigma; the piece
invariants live in a configuration table, not in code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .braids import BraidWord, NonTransitiveBraidError, is_transitive
from .freegroup import FreeWord, artin_endo
from .snf import AbelianGroup, IntMatrix, cokernel


@dataclass(frozen=True)
class PresentedGroup:
    """Generators by name, relators as words over them (freely and
    cyclically reduced)."""

    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for r in self.relators:
            if r.rank != len(self.generators):
                raise ValueError("relator rank does not match generator count")
            if r.is_identity() or r != r.cyclically_reduced():
                raise ValueError("relators must be cyclically reduced and nonempty")

    @classmethod
    def make(cls, generators: Iterable[str],
             relators: Iterable[FreeWord]) -> "PresentedGroup":
        gens = tuple(generators)
        cleaned = []
        for r in relators:
            r = r.cyclically_reduced()
            if not r.is_identity():
                cleaned.append(r)
        return cls(gens, tuple(cleaned))

    def relator_texts(self) -> tuple[str, ...]:
        return tuple(r.to_text(self.generators) for r in self.relators)

    def to_dict(self) -> dict:
        return {"generators": list(self.generators),
                "relators": list(self.relator_texts())}


def _commutator(rank: int, i: int, j: int) -> FreeWord:
    return FreeWord(rank, (i, j, -i, -j))


def mapping_torus_presentation(b: BraidWord) -> PresentedGroup:
    """pi1 of (circle) x (mapping torus of the braid action), minus the
    surgered torus.  Rejects non-transitive braids: the construction
    surgers a single closed orbit of the marked points."""
    if not is_transitive(b):
        raise NonTransitiveBraidError(
            f"braid {b.to_text()!r} does not induce the standard cycle")
    d = b.d
    e = artin_endo(b)
    n = d + 1  # l1, l2, x1..x<d-1>
    gens = ("l1", "l2") + tuple(f"x{i}" for i in range(1, d))
    relators = [_commutator(n, 1, 2)]
    for i in range(1, d):
        relators.append(_commutator(n, 1, 2 + i))
    for i in range(1, d):
        image = FreeWord(n, tuple((2 if y > 0 else -2) + y for y in e.images[i - 1].letters))
        twist = FreeWord.from_letters(
            n, (2, 2 + i, -2) + image.inverse().letters)
        relators.append(twist)
    return PresentedGroup.make(gens, relators)


def assemble_pi1(b: BraidWord) -> PresentedGroup:
    """Kill the meridian (x1) and the second longitude (l2^d) of the
    surgered torus; the other gluing side contributes no new generators
    (its group is the Z already identified with l1)."""
    base = mapping_torus_presentation(b)
    n = len(base.generators)
    extra = (FreeWord(n, (3,)),            # meridian: puncture loop x1
             FreeWord(n, (2,) * b.d))      # second longitude: l2^d
    return PresentedGroup.make(base.generators, base.relators + extra)


def _cyclic_key(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of a cyclic word up to rotation and inversion."""
    if not letters:
        return letters
    inv = tuple(-x for x in reversed(letters))
    candidates = [letters[i:] + letters[:i] for i in range(len(letters))]
    candidates += [inv[i:] + inv[:i] for i in range(len(inv))]
    return min(candidates)


def _substitute_generator(letters: tuple[int, ...], g: int,
                          value: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        seq = ((x,) if abs(x) != g
               else (value if x > 0 else tuple(-y for y in reversed(value))))
        for y in seq:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def tietze_simplify(g: PresentedGroup, effort_budget: int = 100) -> PresentedGroup:
    """Deterministic, budgeted presentation shrinking.

    Moves, in priority order, each consuming one unit of budget:
      1. eliminate a generator that occurs exactly once in some relator
         (shortest relator first, then lowest generator index);
      2. shorten a relator by replacing more than half of another relator
         (viewed cyclically, either orientation) with the complementary
         shorter piece.
    Free and cyclic reduction and duplicate removal run between moves for
    free.  Simplification preserves the group, in particular its
    abelianization; if the budget runs out the best form so far is
    returned.
    """
    names = list(g.generators)
    relators = [r.letters for r in g.relators]

    def normalize() -> None:
        seen: set[tuple[int, ...]] = set()
        out = []
        for letters in relators:
            word = FreeWord.from_letters(len(names), letters).cyclically_reduced()
            if word.is_identity():
                continue
            key = _cyclic_key(word.letters)
            if key in seen:
                continue
            seen.add(key)
            out.append(word.letters)
        relators[:] = out

    def try_eliminate() -> bool:
        candidates = []
        for ri, letters in enumerate(relators):
            counts: dict[int, int] = {}
            for x in letters:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for gen, cnt in counts.items():
                if cnt == 1:
                    candidates.append((len(letters), gen, ri))
        if not candidates:
            return False
        _, gen, ri = min(candidates)
        letters = relators[ri]
        pos = next(i for i, x in enumerate(letters) if abs(x) == gen)
        rotated = letters[pos:] + letters[:pos]  # starts with +-gen
        rest = rotated[1:]
        # rotated = gen^e * rest = 1, so gen^e = rest^-1
        value = tuple(-y for y in reversed(rest))
        if rotated[0] < 0:
            value = tuple(-y for y in reversed(value))
        del relators[ri]
        relators[:] = [_substitute_generator(r, gen, value) for r in relators]
        # drop the generator and renumber the ones above it
        del names[gen - 1]
        def shift(x: int) -> int:
            a = abs(x) - (1 if abs(x) > gen else 0)
            return a if x > 0 else -a
        relators[:] = [tuple(shift(x) for x in r) for r in relators]
        return True

    def try_shorten() -> bool:
        best = None  # (gain, target index, result letters)
        for si, s in enumerate(relators):
            inv = tuple(-x for x in reversed(s))
            variants = (s,) if inv == s else (s, inv)
            for var in variants:
                for k in range(len(var)):
                    rot = var[k:] + var[:k]
                    cut = len(rot) // 2 + 1
                    head, tail = rot[:cut], rot[cut:]
                    repl = tuple(-y for y in reversed(tail))
                    for ri, r in enumerate(relators):
                        if ri == si:
                            continue
                        doubled = r + r  # occurrences across the cyclic seam
                        for p in range(len(r)):
                            if doubled[p:p + len(head)] == head and len(head) <= len(r):
                                new = doubled[p + len(head):p + len(r)] + repl
                                new = FreeWord.from_letters(len(names), new)
                                new = new.cyclically_reduced().letters
                                gain = len(r) - len(new)
                                if gain > 0 and (best is None or gain > best[0]
                                                 or (gain == best[0] and ri < best[1])):
                                    best = (gain, ri, new)
        if best is None:
            return False
        relators[best[1]] = best[2]
        return True

    normalize()
    budget = effort_budget
    while budget > 0:
        if try_eliminate():
            budget -= 1
            normalize()
            continue
        if try_shorten():
            budget -= 1
            normalize()
            continue
        break
    return PresentedGroup.make(
        tuple(names),
        tuple(FreeWord.from_letters(len(names), r) for r in relators))


def standard_form_order(g: PresentedGroup) -> int | None:
    """If g is syntactically < u, v | [u,v], v^k > (up to generator order,
    rotation and inversion of relators), return k; else None."""
    if len(g.generators) != 2 or len(g.relators) != 2:
        return None
    comm = _cyclic_key((1, 2, -1, -2))
    keys = [_cyclic_key(r.letters) for r in g.relators]
    for i in (0, 1):
        if keys[i] != comm:
            continue
        other = g.relators[1 - i].letters
        gens = {abs(x) for x in other}
        signs = {x > 0 for x in other}
        if len(gens) == 1 and len(signs) == 1:
            return len(other)
    return None


def abelianization(g: PresentedGroup) -> AbelianGroup:
    """Z^generators modulo the relator exponent vectors, via SNF."""
    n = len(g.generators)
    cols = [r.exponent_vector() for r in g.relators]
    if not cols:
        cols = [(0,) * n]
    return cokernel(IntMatrix.from_rows(zip(*cols)))


# ---------------------------------------------------------------------------
# gluing configuration and characteristic numbers

KNOWN_KINDS = {"mapping_torus": (0, 0), "four_torus": (0, 0), "k3": (24, -16)}


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class GluingPiece:
    """A closed piece of the fiber sum with its named square-zero tori.

    ``tori`` pairs a torus name with its volume (the pairing number used
    to match the two sides of a gluing).  For the standard kinds the
    (chi, sigma) values are checked against the table above.
    """

    name: str
    kind: str
    euler_char: int
    signature: int
    tori: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        expected = KNOWN_KINDS.get(self.kind)
        if expected is not None and (self.euler_char, self.signature) != expected:
            raise ConfigurationError(
                f"piece {self.name!r} of kind {self.kind!r} must have "
                f"(chi, sigma) = {expected}, got "
                f"{(self.euler_char, self.signature)}")
        names = [t for t, _ in self.tori]
        if len(set(names)) != len(names):
            raise ConfigurationError(f"piece {self.name!r} repeats a torus name")


@dataclass(frozen=True)
class SumConfiguration:
    pieces: tuple[GluingPiece, ...]
    pairings: tuple[tuple[str, str], ...]

    def torus_volumes(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for piece in self.pieces:
            for torus, vol in piece.tori:
                if torus in out:
                    raise ConfigurationError(f"torus {torus!r} appears on two pieces")
                out[torus] = vol
        return out

    def validate(self) -> None:
        volumes = self.torus_volumes()
        used: set[str] = set()
        for a, b in self.pairings:
            for t in (a, b):
                if t not in volumes:
                    raise ConfigurationError(f"pairing references unknown torus {t!r}")
                if t in used:
                    raise ConfigurationError(f"torus {t!r} used in two pairings")
                used.add(t)
            if volumes[a] != volumes[b]:
                raise ConfigurationError(
                    f"volume mismatch in pairing ({a!r}, {b!r}): "
                    f"{volumes[a]} != {volumes[b]}")
        unpaired = sorted(set(volumes) - used)
        if unpaired:
            raise ConfigurationError(f"unpaired tori: {', '.join(unpaired)}")


class CharacteristicNumbers(NamedTuple):
    chi: int
    sigma: int
    c2: int
    c1_squared: int


def characteristic_numbers(cfg: SumConfiguration) -> CharacteristicNumbers:
    """chi and sigma add under fiber sum along tori (chi(T^2) = 0 and
    Novikov additivity); then c2 = chi and c1^2 = 2 chi + 3 sigma."""
    cfg.validate()
    chi = sum(p.euler_char for p in cfg.pieces)
    sigma = sum(p.signature for p in cfg.pieces)
    return CharacteristicNumbers(chi=chi, sigma=sigma, c2=chi,
                                 c1_squared=2 * chi + 3 * sigma)


def default_configuration(d: int) -> SumConfiguration:
    """Mapping torus piece + four-torus + two K3 surfaces, glued along
    H1/H1p, H3p/H3, H4p/H4.  The surgered torus H1 covers the base circle
    d times, whence its volume d."""
    if d < 2:
        raise ValueError("need d >= 2")
    return SumConfiguration(
        pieces=(
            GluingPiece("M1", "mapping_torus", 0, 0, (("H1", d),)),
            GluingPiece("M2", "four_torus", 0, 0,
                        (("H1p", d), ("H3p", 1), ("H4p", 1))),
            GluingPiece("M3", "k3", 24, -16, (("H3", 1),)),
            GluingPiece("M4", "k3", 24, -16, (("H4", 1),)),
        ),
        pairings=(("H1", "H1p"), ("H3p", "H3"), ("H4p", "H4")),
    )


def configuration_from_dict(data: dict, d: int) -> SumConfiguration:
    """Build a configuration from parsed JSON; the volume token "d"
    resolves to the braid's strand count."""
    def vol(x) -> int:
        if x == "d":
            return d
        if isinstance(x, int) and not isinstance(x, bool):
            return x
        raise ConfigurationError(f"bad torus volume {x!r}")
    try:
        pieces = tuple(
            GluingPiece(
                name=p["name"],
                kind=p.get("kind", "custom"),
                euler_char=int(p["chi"]),
                signature=int(p["sigma"]),
                tori=tuple((t, vol(v)) for t, v in p.get("tori", {}).items()),
            )
            for p in data["pieces"])
        pairings = tuple((a, b) for a, b in data["pairings"])
    except (KeyError, TypeError) as exc:
        raise ConfigurationError(f"malformed configuration: {exc}") from exc
    return SumConfiguration(pieces=pieces, pairings=pairings)


def configuration_to_dict(cfg: SumConfiguration) -> dict:
    return {
        "pieces": [
            {"name": p.name, "kind": p.kind, "chi": p.euler_char,
             "sigma": p.signature, "tori": {t: v for t, v in p.tori}}
            for p in cfg.pieces],
        "pairings": [list(pair) for pair in cfg.pairings],
    }


class AnticanonicalTori(NamedTuple):
    total: int
    h1_parallel: int
    h3_copies: int
    h4_copies: int


def anticanonical_tori(d: int) -> AnticanonicalTori:
    """-d times the canonical class is represented by 6d - 2 disjoint
    tori: 2d - 2 parallel copies of H1 and 2d copies each of H3, H4."""
    if d < 2:
        raise ValueError("need d >= 2")
    out = AnticanonicalTori(total=6 * d - 2, h1_parallel=2 * d - 2,
                            h3_copies=2 * d, h4_copies=2 * d)
    assert out.h1_parallel + out.h3_copies + out.h4_copies == out.total
    return out
