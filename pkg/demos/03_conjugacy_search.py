"""
Conjugacy search
================

Closed ribbon braids in B^3 x S^1 are isotopic exactly when the braids are
conjugate.  Cheap class functions can prove that two braids are not conjugate.
A bounded breadth-first search can find an explicit conjugator.
"""

import random

from loopbraid import (
    SearchConfig,
    check_certificate,
    conjugate,
    normal_form_conjugator,
    parse_word,
    random_word,
    refute,
    search_witness,
)

s1, s1_inv, r1 = (parse_word(t, 2) for t in ("s1", "s1^-1", "r1"))

# different sigma parity: never conjugate
print(refute(s1, r1))

# no invariant separates s1 from its inverse, and the search finds a witness
verdict = search_witness(s1, s1_inv, SearchConfig(radius=4))
print(verdict.to_dict())
print(check_certificate(s1, s1_inv, verdict.witness))

# the witness splits into wens followed by a wen-free conjugator
wens, rest = normal_form_conjugator(verdict.witness)
print(wens, "|", rest)

# planted instances
rng = random.Random(0)
for _ in range(5):
    beta = random_word(4, 8, rng)
    gamma = random_word(4, 3, rng)
    v = search_witness(beta, conjugate(beta, gamma))
    print(beta, "| planted", gamma, "| found", v.witness)
