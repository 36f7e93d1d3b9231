"""
conjugacy: desk-scale conjugacy decisions for braid words.

`refute` compares cheap class functions and reports the first one that differs.
`search_witness` runs a breadth-first search over conjugators gamma, grown one
letter at a time on the left, and tracks nu(gamma b1 gamma^-1) directly.  States
are deduplicated by their reduced generator images.  Since nu is faithful, the
search visits group elements, not words.  A failed search is reported as
`Unknown`, never as "not conjugate".
"""

from __future__ import annotations

import dataclasses
from typing import Optional, Union

from .braid import (
    BraidWord,
    GenLetter,
    generator_aut,
    generators,
    nu,
    permutation,
    sigma_parity,
    tau_normal_form,
)
from .freegroup import FreeAut, StrandCountMismatch, aut_equal, compose
from .markov import closure_invariants, conjugate


@dataclasses.dataclass(frozen=True)
class Conjugate:
    witness: BraidWord
    radius: int

    def to_dict(self) -> dict:
        return {"verdict": "conjugate", "witness": str(self.witness), "radius": self.radius}


@dataclasses.dataclass(frozen=True)
class Distinguished:
    invariant: str
    values: tuple
    radius: int = 0

    def to_dict(self) -> dict:
        return {
            "verdict": "distinguished",
            "invariant": self.invariant,
            "values": list(self.values),
            "radius": self.radius,
        }


@dataclasses.dataclass(frozen=True)
class Unknown:
    radius: int

    def to_dict(self) -> dict:
        return {"verdict": "unknown", "radius": self.radius}


ConjugacyVerdict = Union[Conjugate, Distinguished, Unknown]


@dataclasses.dataclass(frozen=True)
class SearchConfig:
    radius: int = 3
    budget: int = 1_000_000
    # None means every generator and sigma inverse, in `generators` order.
    alphabet: Optional[tuple[GenLetter, ...]] = None

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError(f"radius must be non-negative, got {self.radius}")
        if self.budget < 1:
            raise ValueError(f"budget must be at least 1, got {self.budget}")


def _same_n(*words: BraidWord) -> None:
    if len({w.n for w in words}) != 1:
        raise StrandCountMismatch(f"strand counts differ: {[w.n for w in words]}")


def invariant_values(b: BraidWord) -> dict:
    """The class functions `refute` compares, by name, in comparison order."""
    perm = permutation(b)
    cycles = perm.cycle_signs()
    closable = all(s == 1 for _, s in cycles)
    return {
        "sigma_parity": sigma_parity(b),
        "signed_cycle_type": [list(c) for c in cycles],
        "closure_invariants": closure_invariants(b).to_dict() if closable else None,
        "closable": closable,
    }


def refute(b1: BraidWord, b2: BraidWord) -> Optional[Distinguished]:
    _same_n(b1, b2)
    v1, v2 = invariant_values(b1), invariant_values(b2)
    for name in ("sigma_parity", "signed_cycle_type", "closure_invariants", "closable"):
        if name == "closure_invariants" and (v1[name] is None or v2[name] is None):
            continue
        if v1[name] != v2[name]:
            return Distinguished(name, (v1[name], v2[name]))
    return None


def _conjugate_by_letter(state: FreeAut, g: GenLetter) -> FreeAut:
    n = state.n
    return compose(compose(generator_aut(g, n), state), generator_aut(g.inverse(), n))


def search_witness(b1: BraidWord, b2: BraidWord, cfg: SearchConfig = SearchConfig()) -> ConjugacyVerdict:
    """Look for gamma with gamma b1 gamma^-1 == b2, by conjugator length up to cfg.radius."""
    _same_n(b1, b2)
    reason = refute(b1, b2)
    if reason is not None:
        return reason
    n = b1.n
    alphabet = cfg.alphabet if cfg.alphabet is not None else tuple(generators(n))
    target = nu(b2).key()
    start = nu(b1)
    if start.key() == target:
        return Conjugate(BraidWord.empty(n), 0)
    seen = {start.key()}
    frontier: list[tuple[FreeAut, tuple[GenLetter, ...]]] = [(start, ())]
    for r in range(1, cfg.radius + 1):
        nxt = []
        for state, gamma in frontier:
            for g in alphabet:
                new = _conjugate_by_letter(state, g)
                key = new.key()
                if key in seen:
                    continue
                seen.add(key)
                if key == target:
                    return Conjugate(BraidWord(n, (g,) + gamma), r)
                if len(seen) >= cfg.budget:
                    return Unknown(r - 1)
                nxt.append((new, (g,) + gamma))
        frontier = nxt
        if not frontier:
            # the whole conjugacy class has been exhausted without meeting b2
            break
    return Unknown(cfg.radius)


def check_certificate(b1: BraidWord, b2: BraidWord, gamma: BraidWord) -> bool:
    _same_n(b1, b2, gamma)
    return aut_equal(nu(conjugate(b1, gamma)), nu(b2))


def normal_form_conjugator(gamma: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Factor gamma as (wens only) * (wen-free), so conjugating by gamma is
    conjugating by the wen-free part inside conjugation by the wens."""
    return tau_normal_form(gamma)
