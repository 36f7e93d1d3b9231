"""
freegroup: exact arithmetic in the free group F_n and on its endomorphisms.

A `FreeWord` is a freely reduced word in the generators x_1, ..., x_n, stored as a
tuple of (index, exponent) pairs with exponent in {+1, -1}.  A `FreeAut` is an
endomorphism of F_n given by the images of the generators.

Composition convention: ``compose(phi, psi)`` is the endomorphism ``phi o psi``,
so ``apply(compose(phi, psi), u) == apply(phi, apply(psi, u))``.  This is the
orientation under which the braid representation in `loopbraid.braid` is a
homomorphism from left-to-right braid words (nu(uv) = compose(nu(u), nu(v))), and
the relation suite checks it.

Automorphisms in the image of the braid representation all have the shape
x_i -> w_i^-1 x_{pi(i)}^{+-1} w_i; `extract_pc_form` recovers (pi, signs, w).
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

Letter = tuple[int, int]


class StrandCountMismatch(ValueError):
    """Two objects that must live over the same n do not."""


class PCFormError(ValueError):
    """The automorphism is not of the form x_i -> w_i^-1 x_{pi(i)}^{+-1} w_i."""


class ImageNotConjugateOfGenerator(PCFormError):
    pass


class NotAPermutation(PCFormError):
    pass


def _check_n(a, b) -> None:
    if a.n != b.n:
        raise StrandCountMismatch(f"generator counts differ: {a.n} != {b.n}")


@dataclasses.dataclass(frozen=True)
class FreeWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"free group rank must be positive, got {self.n}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        prev = None
        for i, e in letters:
            if not 1 <= i <= self.n:
                raise IndexError(f"generator index {i} out of range [1, {self.n}]")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            if prev == (i, -e):
                raise ValueError("letters are not freely reduced")
            prev = (i, e)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _trusted(cls, n: int, letters: tuple[Letter, ...]) -> FreeWord:
        # Skips validation; callers guarantee a reduced, in-range tuple.
        w = object.__new__(cls)
        object.__setattr__(w, "n", n)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def identity(cls, n: int) -> FreeWord:
        return cls._trusted(n, ())

    @classmethod
    def generator(cls, n: int, i: int, exponent: int = 1) -> FreeWord:
        return cls(n, ((i, exponent),))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return concat(self, other)

    def __invert__(self) -> FreeWord:
        return invert(self)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return format_free_word(self)


def _reduce_letters(raw: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for i, e in raw:
        if stack and stack[-1][0] == i and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((i, e))
    return tuple(stack)


def reduce(raw: Iterable[Sequence[int]], n: int) -> FreeWord:
    """Freely reduce a sequence of (index, exponent) pairs into a `FreeWord` over F_n."""
    letters = []
    for i, e in raw:
        if not 1 <= i <= n:
            raise IndexError(f"generator index {i} out of range [1, {n}]")
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e}")
        letters.append((i, e))
    return FreeWord._trusted(n, _reduce_letters(letters))


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    _check_n(u, v)
    a, b = u.letters, v.letters
    # Only the junction can cancel.
    k = 0
    m = min(len(a), len(b))
    while k < m and a[-1 - k][0] == b[k][0] and a[-1 - k][1] == -b[k][1]:
        k += 1
    return FreeWord._trusted(u.n, a[: len(a) - k] + b[k:])


def invert(u: FreeWord) -> FreeWord:
    return FreeWord._trusted(u.n, tuple((i, -e) for i, e in reversed(u.letters)))


def format_free_word(u: FreeWord) -> str:
    if not u.letters:
        return "1"
    return " ".join(f"x{i}" if e == 1 else f"x{i}^-1" for i, e in u.letters)


_FREE_TOKEN = re.compile(r"x(\d+)(\^-1)?")


def parse_free_word(text: str, n: int) -> FreeWord:
    """Parse ``"x1 x2^-1"`` (or ``"1"`` for the empty word); the result is reduced."""
    tokens = text.split()
    if tokens == ["1"]:
        return FreeWord.identity(n)
    raw = []
    for tok in tokens:
        m = _FREE_TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"bad free-group token {tok!r}")
        raw.append((int(m.group(1)), -1 if m.group(2) else 1))
    return reduce(raw, n)


@dataclasses.dataclass(frozen=True)
class FreeAut:
    """An endomorphism of F_n; ``images[i]`` is the image of x_{i+1}."""

    n: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(images)}")
        for w in images:
            if w.n != self.n:
                raise StrandCountMismatch(f"image over F_{w.n} in an endomorphism of F_{self.n}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, n: int, images: tuple[FreeWord, ...]) -> FreeAut:
        a = object.__new__(cls)
        object.__setattr__(a, "n", n)
        object.__setattr__(a, "images", images)
        return a

    @classmethod
    def identity(cls, n: int) -> FreeAut:
        return cls(n, tuple(FreeWord._trusted(n, ((i, 1),)) for i in range(1, n + 1)))

    @classmethod
    def from_strings(cls, images: Sequence[str]) -> FreeAut:
        n = len(images)
        return cls(n, tuple(parse_free_word(s, n) for s in images))

    def key(self) -> tuple[tuple[Letter, ...], ...]:
        """Hashable canonical key; equal keys iff equal endomorphisms."""
        return tuple(w.letters for w in self.images)

    def to_dict(self) -> dict:
        return {"n": self.n, "images": [format_free_word(w) for w in self.images]}

    def __str__(self) -> str:
        return ", ".join(f"x{i} -> {w}" for i, w in enumerate(self.images, 1))


def apply(phi: FreeAut, u: FreeWord) -> FreeWord:
    """Substitute the images of `phi` into `u` and reduce."""
    _check_n(phi, u)
    images = phi.images
    stack: list[Letter] = []
    for i, e in u.letters:
        seq = images[i - 1].letters
        if e == 1:
            for j, f in seq:
                if stack and stack[-1][0] == j and stack[-1][1] == -f:
                    stack.pop()
                else:
                    stack.append((j, f))
        else:
            for j, f in reversed(seq):
                if stack and stack[-1][0] == j and stack[-1][1] == f:
                    stack.pop()
                else:
                    stack.append((j, -f))
    return FreeWord._trusted(u.n, tuple(stack))


def compose(phi: FreeAut, psi: FreeAut) -> FreeAut:
    """The endomorphism ``phi o psi``: apply `psi` to a word, then `phi`."""
    _check_n(phi, psi)
    images = []
    for w in psi.images:
        letters = w.letters
        if len(letters) == 1 and letters[0][1] == 1:
            images.append(phi.images[letters[0][0] - 1])
        else:
            images.append(apply(phi, w))
    return FreeAut._trusted(phi.n, tuple(images))


def aut_equal(phi: FreeAut, psi: FreeAut) -> bool:
    _check_n(phi, psi)
    return phi.key() == psi.key()


@dataclasses.dataclass(frozen=True)
class SignedPerm:
    """
    A permutation with a sign per point: the abelianized shadow of a PC automorphism.
    ``pi[i-1]`` is pi(i) and ``signs[i-1]`` the sign attached to point i.

    Under the composition convention of this module the product ``a * b`` (a after b)
    is i -> a.pi(b.pi(i)) with sign b.sign(i) * a.sign(b.pi(i)).
    """

    n: int
    pi: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        pi, signs = tuple(self.pi), tuple(self.signs)
        if sorted(pi) != list(range(1, self.n + 1)):
            raise NotAPermutation(f"{pi} is not a permutation of 1..{self.n}")
        if len(signs) != self.n or any(s not in (1, -1) for s in signs):
            raise ValueError(f"bad sign vector {signs}")
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(n, tuple(range(1, n + 1)), (1,) * n)

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        _check_n(self, other)
        pi = tuple(self.pi[other.pi[i] - 1] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.pi[i] - 1] for i in range(self.n))
        return SignedPerm(self.n, pi, signs)

    def is_identity_perm(self) -> bool:
        return self.pi == tuple(range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles of pi, each starting at its least point, ordered by that point."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.pi[i - 1]
            out.append(tuple(cyc))
        return out

    def cycle_signs(self) -> list[tuple[int, int]]:
        """(length, product of signs) for every cycle, sorted descending."""
        data = []
        for cyc in self.cycles():
            s = 1
            for i in cyc:
                s *= self.signs[i - 1]
            data.append((len(cyc), s))
        return sorted(data, reverse=True)


@dataclasses.dataclass(frozen=True)
class PCForm:
    n: int
    pi: tuple[int, ...]
    signs: tuple[int, ...]
    conjugators: tuple[FreeWord, ...]

    def to_aut(self) -> FreeAut:
        """Rebuild x_i -> w_i^-1 x_{pi(i)}^{sign_i} w_i."""
        images = []
        for j, s, w in zip(self.pi, self.signs, self.conjugators):
            images.append(concat(concat(invert(w), FreeWord._trusted(self.n, ((j, s),))), w))
        return FreeAut(self.n, tuple(images))

    def signed_perm(self) -> SignedPerm:
        return SignedPerm(self.n, self.pi, self.signs)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pi": list(self.pi),
            "signs": list(self.signs),
            "conjugators": [format_free_word(w) for w in self.conjugators],
        }


def extract_pc_form(phi: FreeAut) -> PCForm:
    """
    Write each image as w^-1 x_j^{+-1} w with w reduced.  A reduced conjugate of a
    letter has odd length 2k+1 and mirrored flanks, and the middle letter is the core,
    so the decomposition (and w, of length k) is unique.
    """
    pi, signs, conj = [], [], []
    for idx, img in enumerate(phi.images, 1):
        letters = img.letters
        if len(letters) % 2 == 0:
            raise ImageNotConjugateOfGenerator(
                f"image of x{idx} has even length {len(letters)}: {format_free_word(img)}"
            )
        k = len(letters) // 2
        prefix, (j, s), suffix = letters[:k], letters[k], letters[k + 1 :]
        if prefix != tuple((i, -e) for i, e in reversed(suffix)):
            raise ImageNotConjugateOfGenerator(
                f"image of x{idx} is not a conjugate of a generator: {format_free_word(img)}"
            )
        pi.append(j)
        signs.append(s)
        conj.append(FreeWord._trusted(phi.n, suffix))
    if len(set(pi)) != phi.n:
        raise NotAPermutation(f"core generators {pi} are not a permutation")
    return PCForm(phi.n, tuple(pi), tuple(signs), tuple(conj))


def abelianize(phi: FreeAut) -> SignedPerm:
    return extract_pc_form(phi).signed_perm()
