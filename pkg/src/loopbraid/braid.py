"""
braid: words in the extended loop braid group on n strands.

Generators are sigma_i^{+-1} and rho_i for 1 <= i <= n-1, and tau_i for 1 <= i <= n.
Text syntax: ``s1``, ``s1^-1``, ``r2``, ``t3`` separated by whitespace; ``1`` is the
empty word.

Words are plain syntax and are never simplified.  Equality is decided through the
faithful representation `nu` into Aut(F_n): two words are equal in the group iff
their images have identical reduced generator images.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import random
import re
from typing import Iterable, Iterator, Sequence

from .freegroup import (
    FreeAut,
    FreeWord,
    SignedPerm,
    StrandCountMismatch,
    abelianize,
    aut_equal,
    compose,
)


class WordSyntaxError(ValueError):
    """A token of a braid word could not be parsed."""


class StrandIndexError(IndexError):
    """A generator index is out of range for the strand count."""


class Kind(enum.Enum):
    SIGMA = "s"
    RHO = "r"
    TAU = "t"


@dataclasses.dataclass(frozen=True)
class GenLetter:
    kind: Kind
    index: int
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {self.exponent}")
        if self.kind is not Kind.SIGMA and self.exponent != 1:
            # rho_i and tau_i are involutions
            object.__setattr__(self, "exponent", 1)

    def check(self, n: int) -> None:
        top = n if self.kind is Kind.TAU else n - 1
        if not 1 <= self.index <= top:
            raise StrandIndexError(f"{self} has index out of range for n={n}")

    def inverse(self) -> GenLetter:
        if self.kind is Kind.SIGMA:
            return GenLetter(Kind.SIGMA, self.index, -self.exponent)
        return self

    def __str__(self) -> str:
        s = f"{self.kind.value}{self.index}"
        return s + "^-1" if self.exponent == -1 else s


def sigma(i: int, exponent: int = 1) -> GenLetter:
    return GenLetter(Kind.SIGMA, i, exponent)


def rho(i: int) -> GenLetter:
    return GenLetter(Kind.RHO, i)


def tau(i: int) -> GenLetter:
    return GenLetter(Kind.TAU, i)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[GenLetter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be at least 1, got {self.n}")
        letters = tuple(self.letters)
        for g in letters:
            g.check(self.n)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def empty(cls, n: int) -> BraidWord:
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GenLetter]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise StrandCountMismatch(f"strand counts differ: {self.n} != {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __invert__(self) -> BraidWord:
        return invert_word(self)

    def __str__(self) -> str:
        return format_word(self)

    def with_strands(self, n: int) -> BraidWord:
        """The same letters read on `n` strands."""
        return BraidWord(n, self.letters)


_TOKEN = re.compile(r"([srt])(\d+)(\^-1)?")


def parse_word(text: str, n: int) -> BraidWord:
    tokens = text.split()
    if tokens == ["1"]:
        return BraidWord.empty(n)
    letters = []
    for tok in tokens:
        m = _TOKEN.fullmatch(tok)
        if m is None or (m.group(3) and m.group(1) != "s"):
            raise WordSyntaxError(f"bad token {tok!r}")
        g = GenLetter(Kind(m.group(1)), int(m.group(2)), -1 if m.group(3) else 1)
        try:
            g.check(n)
        except StrandIndexError:
            raise StrandIndexError(f"token {tok!r} out of range for n={n}") from None
        letters.append(g)
    return BraidWord(n, tuple(letters))


def format_word(b: BraidWord) -> str:
    return " ".join(str(g) for g in b.letters) if b.letters else "1"


def word(text: str, n: int) -> BraidWord:
    """Shorthand for `parse_word`."""
    return parse_word(text, n)


def generators(n: int) -> list[GenLetter]:
    """All 3n-2 generators plus sigma inverses, in canonical search order."""
    out = []
    for i in range(1, n):
        out += [sigma(i), sigma(i, -1)]
    out += [rho(i) for i in range(1, n)]
    out += [tau(i) for i in range(1, n + 1)]
    return out


@functools.lru_cache(maxsize=None)
def generator_aut(g: GenLetter, n: int) -> FreeAut:
    g.check(n)
    x = [FreeWord._trusted(n, ((j, 1),)) for j in range(1, n + 1)]
    i = g.index
    if g.kind is Kind.TAU:
        x[i - 1] = FreeWord._trusted(n, ((i, -1),))
    elif g.kind is Kind.RHO:
        x[i - 1], x[i] = x[i], x[i - 1]
    elif g.exponent == 1:
        # x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        x[i - 1] = FreeWord._trusted(n, ((i + 1, 1),))
        x[i] = FreeWord._trusted(n, ((i + 1, -1), (i, 1), (i + 1, 1)))
    else:
        # inverse: x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
        x[i - 1] = FreeWord._trusted(n, ((i, 1), (i + 1, 1), (i, -1)))
        x[i] = FreeWord._trusted(n, ((i, 1),))
    return FreeAut(n, tuple(x))


def nu(b: BraidWord) -> FreeAut:
    """The image of `b` in Aut(F_n); nu(uv) = compose(nu(u), nu(v))."""
    phi = FreeAut.identity(b.n)
    # Right-multiplying by a generator only rewrites the one or two images it moves.
    for g in b.letters:
        phi = compose(phi, generator_aut(g, b.n))
    return phi


def _check_same_n(*words: BraidWord) -> None:
    ns = {w.n for w in words}
    if len(ns) != 1:
        raise StrandCountMismatch(f"strand counts differ: {sorted(ns)}")


def word_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same_n(u, v)
    return aut_equal(nu(u), nu(v))


def invert_word(b: BraidWord) -> BraidWord:
    return BraidWord(b.n, tuple(g.inverse() for g in reversed(b.letters)))


def permutation(b: BraidWord) -> SignedPerm:
    """Strand permutation of `b` together with per-strand wen parity."""
    return abelianize(nu(b))


def is_pure(b: BraidWord) -> bool:
    return permutation(b).is_identity_perm()


def sigma_parity(b: BraidWord) -> int:
    """Sum of sigma exponents mod 2; a class function on the group."""
    return sum(1 for g in b.letters if g.kind is Kind.SIGMA) % 2


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    gens = generators(n)
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(length)))


# --- tau pushing -------------------------------------------------------------
#
# To move tau_j leftwards through the tau-free part, every sigma-type letter is
# tracked in one of four forms:
#     (i, +1, False) = sigma_i              (i, -1, False) = sigma_i^-1
#     (i, +1, True)  = rho_i sigma_i^-1 rho_i   (i, -1, True) = rho_i sigma_i rho_i
# With these the swap  x tau_j = tau_j' x'  never lengthens the word:
#     sigma_i tau_i        = tau_{i+1} (rho_i sigma_i^-1 rho_i)
#     sigma_i tau_{i+1}    = tau_i sigma_i
#     sigma_i^-1 tau_i     = tau_{i+1} sigma_i^-1
#     sigma_i^-1 tau_{i+1} = tau_i (rho_i sigma_i rho_i)
#     (rho_i sigma_i^-1 rho_i) tau_i     = tau_{i+1} sigma_i
#     (rho_i sigma_i^-1 rho_i) tau_{i+1} = tau_i (rho_i sigma_i^-1 rho_i)
#     (rho_i sigma_i rho_i) tau_i        = tau_{i+1} (rho_i sigma_i rho_i)
#     (rho_i sigma_i rho_i) tau_{i+1}    = tau_i sigma_i^-1
#     rho_i tau_i = tau_{i+1} rho_i,   rho_i tau_{i+1} = tau_i rho_i
# and every letter commutes with tau_j when j is not i or i+1.

_SIGMA_SWAP = {
    # (exponent, twisted, tau on left strand?) -> (new exponent, new twisted)
    (1, False, True): (1, True),
    (1, False, False): (1, False),
    (-1, False, True): (-1, False),
    (-1, False, False): (-1, True),
    (1, True, True): (1, False),
    (1, True, False): (1, True),
    (-1, True, True): (-1, True),
    (-1, True, False): (-1, False),
}


def swap_rules(i: int) -> list[tuple[list[GenLetter], list[GenLetter]]]:
    """The (lhs, rhs) letter lists of every swap used by `tau_normal_form`, at index i."""
    s, si, r = sigma(i), sigma(i, -1), rho(i)
    tw = {1: [r, si, r], -1: [r, s, r]}
    plain = {1: [s], -1: [si]}
    rules = []
    for (e, twisted, left), (e2, tw2) in _SIGMA_SWAP.items():
        lhs = (tw[e] if twisted else plain[e]) + [tau(i if left else i + 1)]
        rhs = [tau(i + 1 if left else i)] + (tw[e2] if tw2 else plain[e2])
        rules.append((lhs, rhs))
    rules.append(([r, tau(i)], [tau(i + 1), r]))
    rules.append(([r, tau(i + 1)], [tau(i), r]))
    return rules


def tau_normal_form(b: BraidWord) -> tuple[BraidWord, BraidWord]:
    """
    Split `b` as (tau prefix, tau-free word) with b == prefix * rest in the group.
    The prefix has each tau_i at most once, indices ascending.
    """
    n = b.n
    # alpha items: ("r", i) or ("s", i, exponent, twisted)
    alpha: list[tuple] = []
    wens = [0] * (n + 1)
    for g in b.letters:
        if g.kind is Kind.SIGMA:
            alpha.append(("s", g.index, g.exponent, False))
        elif g.kind is Kind.RHO:
            alpha.append(("r", g.index))
        else:
            j = g.index
            for k in range(len(alpha) - 1, -1, -1):
                item = alpha[k]
                i = item[1]
                if j != i and j != i + 1:
                    continue
                if item[0] == "s":
                    e2, tw2 = _SIGMA_SWAP[(item[2], item[3], j == i)]
                    alpha[k] = ("s", i, e2, tw2)
                j = i + 1 if j == i else i
            wens[j] ^= 1
    prefix = BraidWord(n, tuple(tau(j) for j in range(1, n + 1) if wens[j]))
    expanded: list[GenLetter] = []
    for item in alpha:
        if item[0] == "r":
            expanded.append(rho(item[1]))
        elif item[3]:
            expanded += [rho(item[1]), sigma(item[1], -item[2]), rho(item[1])]
        else:
            expanded.append(sigma(item[1], item[2]))
    # cancel g g^-1 (including rho_i rho_i) left by the twisted forms
    out: list[GenLetter] = []
    for g in expanded:
        if out and out[-1] == g.inverse():
            out.pop()
        else:
            out.append(g)
    return prefix, BraidWord(n, tuple(out))


# --- relation suite ------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class RelationFamily:
    id: int
    text: str
    arity: int
    # builds (lhs, rhs) letter lists from the index tuple
    build: object
    # index ranges and side condition, given n
    domain: object


def _s(i, e=1):
    return sigma(i, e)


def _far(a, b):
    return lambda n: [(i, j) for i in range(1, a(n) + 1) for j in range(1, b(n) + 1) if abs(i - j) > 1]


def _adjacent(n):
    return [(i,) for i in range(1, n - 1)]


def _edges(n):
    return [(i,) for i in range(1, n)]


_E = lambda n: n - 1  # noqa: E731
_V = lambda n: n  # noqa: E731

RELATION_FAMILIES: tuple[RelationFamily, ...] = (
    RelationFamily(1, "s_i s_j = s_j s_i  (|i-j| > 1)", 2,
                   lambda i, j: ([_s(i), _s(j)], [_s(j), _s(i)]), _far(_E, _E)),
    RelationFamily(2, "s_i s_i+1 s_i = s_i+1 s_i s_i+1", 1,
                   lambda i: ([_s(i), _s(i + 1), _s(i)], [_s(i + 1), _s(i), _s(i + 1)]), _adjacent),
    RelationFamily(3, "r_i r_j = r_j r_i  (|i-j| > 1)", 2,
                   lambda i, j: ([rho(i), rho(j)], [rho(j), rho(i)]), _far(_E, _E)),
    RelationFamily(4, "r_i r_i+1 r_i = r_i+1 r_i r_i+1", 1,
                   lambda i: ([rho(i), rho(i + 1), rho(i)], [rho(i + 1), rho(i), rho(i + 1)]), _adjacent),
    RelationFamily(5, "r_i^2 = 1", 1,
                   lambda i: ([rho(i), rho(i)], []), _edges),
    RelationFamily(6, "r_i s_j = s_j r_i  (|i-j| > 1)", 2,
                   lambda i, j: ([rho(i), _s(j)], [_s(j), rho(i)]), _far(_E, _E)),
    RelationFamily(7, "r_i+1 r_i s_i+1 = s_i r_i+1 r_i", 1,
                   lambda i: ([rho(i + 1), rho(i), _s(i + 1)], [_s(i), rho(i + 1), rho(i)]), _adjacent),
    RelationFamily(8, "s_i+1 s_i r_i+1 = r_i s_i+1 s_i", 1,
                   lambda i: ([_s(i + 1), _s(i), rho(i + 1)], [rho(i), _s(i + 1), _s(i)]), _adjacent),
    RelationFamily(9, "t_i t_j = t_j t_i  (i != j)", 2,
                   lambda i, j: ([tau(i), tau(j)], [tau(j), tau(i)]),
                   lambda n: [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]),
    RelationFamily(10, "t_i^2 = 1", 1,
                   lambda i: ([tau(i), tau(i)], []), lambda n: [(i,) for i in range(1, n + 1)]),
    RelationFamily(11, "s_i t_j = t_j s_i  (|i-j| > 1)", 2,
                   lambda i, j: ([_s(i), tau(j)], [tau(j), _s(i)]), _far(_E, _V)),
    RelationFamily(12, "r_i t_j = t_j r_i  (|i-j| > 1)", 2,
                   lambda i, j: ([rho(i), tau(j)], [tau(j), rho(i)]), _far(_E, _V)),
    RelationFamily(13, "t_i r_i = r_i t_i+1", 1,
                   lambda i: ([tau(i), rho(i)], [rho(i), tau(i + 1)]), _edges),
    RelationFamily(14, "t_i s_i = s_i t_i+1", 1,
                   lambda i: ([tau(i), _s(i)], [_s(i), tau(i + 1)]), _edges),
    RelationFamily(15, "t_i+1 s_i = r_i s_i^-1 r_i t_i", 1,
                   lambda i: ([tau(i + 1), _s(i)], [rho(i), _s(i, -1), rho(i), tau(i)]), _edges),
)


def relation_instances(n: int) -> Iterator[tuple[RelationFamily, tuple[int, ...], BraidWord, BraidWord]]:
    """Every index instantiation of every family, ordered by family then indices."""
    for fam in RELATION_FAMILIES:
        for idx in fam.domain(n):
            lhs, rhs = fam.build(*idx)
            yield fam, idx, BraidWord(n, tuple(lhs)), BraidWord(n, tuple(rhs))


@dataclasses.dataclass(frozen=True)
class RelationCheck:
    family: int
    relation: str
    indices: tuple[int, ...]
    passed: bool


@dataclasses.dataclass(frozen=True)
class RelationReport:
    n: int
    entries: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[RelationCheck]:
        return [e for e in self.entries if not e.passed]

    def to_rows(self) -> list[dict]:
        return [
            {
                "family": e.family,
                "relation": e.relation,
                "indices": list(e.indices),
                "status": "pass" if e.passed else "fail",
            }
            for e in self.entries
        ]

    def to_table(self) -> str:
        lines = ["family\trelation\tindices\tstatus"]
        for row in self.to_rows():
            idx = ",".join(str(i) for i in row["indices"])
            lines.append(f"{row['family']}\t{row['relation']}\t{idx}\t{row['status']}")
        return "\n".join(lines)


def relation_suite(n: int) -> RelationReport:
    if n < 1:
        raise ValueError(f"strand count must be at least 1, got {n}")
    entries = [
        RelationCheck(fam.id, fam.text, idx, aut_equal(nu(lhs), nu(rhs)))
        for fam, idx, lhs, rhs in relation_instances(n)
    ]
    return RelationReport(n, tuple(entries))


def concat_words(words: Iterable[BraidWord]) -> BraidWord:
    words = list(words)
    _check_same_n(*words)
    return BraidWord(words[0].n, tuple(g for w in words for g in w.letters))
