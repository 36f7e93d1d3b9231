"""
Closures and Markov moves
=========================

A braid closes only if each closed component carries an even number of wens.
The closure is never drawn.  Its invariants come from the signed strand
permutation.
"""

from loopbraid import (
    StabKind,
    closure_invariants,
    conjugate,
    destabilize,
    is_closable,
    parse_word,
    stabilize,
)
from loopbraid.markov import closure_components

# one wen on a one-strand braid: not closable; two wens cancel
print(is_closable(parse_word("t1", 1)), is_closable(parse_word("t1 t1", 1)))

# t1 s1 closes to a single component through both strands with one wen on it
print(closure_components(parse_word("t1 s1", 2)))

beta = parse_word("s1 s2 t1 t3 s2^-1", 3)
print(is_closable(beta), closure_invariants(beta).to_dict())

# M1: conjugation leaves the closure invariants alone
gamma = parse_word("r1 t2 s2", 3)
print(closure_invariants(conjugate(beta, gamma)) == closure_invariants(beta))

# M2: right stabilization of each type adds a strand but not a component
for kind in StabKind:
    s = stabilize(beta, kind)
    print(kind.value, s, closure_invariants(s).components)
    assert destabilize(s) == beta
