"""
markov: tube closure at the word level and the Markov moves.

The closure of a braid is never built as a surface.  Its components are the cycles
of the strand permutation, and the wen count of a component is read off the sign
vector of the braid's image in Aut(F_n): a tau_i inverts exactly one generator, so
the product of signs along a cycle is (-1)^(wens on that component).  A braid closes
only when every component carries an even number of wens.
"""

from __future__ import annotations

import dataclasses
import enum

from .braid import (
    BraidWord,
    Kind,
    invert_word,
    permutation,
    rho,
    sigma,
    sigma_parity,
)
from .freegroup import SignedPerm, StrandCountMismatch


class NotClosable(ValueError):
    """Some closed component would carry an odd number of wens."""


class NotDestabilizable(ValueError):
    pass


class StabKind(enum.Enum):
    SIGMA_PLUS = "plus"
    SIGMA_MINUS = "minus"
    RHO_TYPE = "rho"


@dataclasses.dataclass(frozen=True)
class ClosureInvariant:
    n: int
    components: int
    cycle_data: tuple[tuple[int, int], ...]  # (length, sign product), sorted descending
    sigma_parity: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": self.components,
            "cycles": [list(c) for c in self.cycle_data],
            "sigma_parity": self.sigma_parity,
        }


def _closable(perm: SignedPerm) -> bool:
    return all(sign == 1 for _, sign in perm.cycle_signs())


def is_closable(b: BraidWord) -> bool:
    return _closable(permutation(b))


def closure_invariants(b: BraidWord) -> ClosureInvariant:
    perm = permutation(b)
    data = tuple(perm.cycle_signs())
    if any(sign != 1 for _, sign in data):
        raise NotClosable(f"{b} has a closed component with an odd number of wens")
    return ClosureInvariant(b.n, len(data), data, sigma_parity(b))


def closure_components(b: BraidWord) -> list[dict]:
    """Strands and wen parity of each closed component (closable or not)."""
    perm = permutation(b)
    out = []
    for cyc in perm.cycles():
        odd = sum(1 for i in cyc if perm.signs[i - 1] == -1) % 2
        out.append({"strands": list(cyc), "wen_parity": odd})
    return out


def conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """The word g b g^-1 (move M1)."""
    if b.n != g.n:
        raise StrandCountMismatch(f"strand counts differ: {b.n} != {g.n}")
    return BraidWord(b.n, g.letters + b.letters + invert_word(g).letters)


def stabilize(b: BraidWord, kind: StabKind) -> BraidWord:
    """Move M2: add a strand and append sigma_n, sigma_n^-1 or rho_n."""
    n = b.n
    last = {
        StabKind.SIGMA_PLUS: sigma(n),
        StabKind.SIGMA_MINUS: sigma(n, -1),
        StabKind.RHO_TYPE: rho(n),
    }[kind]
    return BraidWord(n + 1, b.letters + (last,))


def destabilize(b: BraidWord) -> BraidWord:
    """
    Inverse of `stabilize`, on words of stabilized shape only: the last letter is
    sigma_{n-1}^{+-1} or rho_{n-1}, and no other letter involves strand n.
    """
    n = b.n
    if n < 2 or not b.letters:
        raise NotDestabilizable(f"{b} on {n} strands has no final stabilizing letter")
    *rest, last = b.letters
    if last.kind is Kind.TAU or last.index != n - 1:
        raise NotDestabilizable(f"last letter {last} is not sigma_{n-1}^+-1 or rho_{n-1}")
    for g in rest:
        top = g.index if g.kind is Kind.TAU else g.index + 1
        if top >= n:
            raise NotDestabilizable(f"letter {g} involves strand {n}")
    return BraidWord(n - 1, tuple(rest))
