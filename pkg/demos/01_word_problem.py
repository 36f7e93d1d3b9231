"""
The word problem through free-group automorphisms
==================================================

Each extended loop braid acts on the free group F_n.  The action is faithful,
so two words are equal exactly when they act the same way.
"""

from loopbraid import extract_pc_form, nu, parse_word, relation_suite, word_equal

# sigma_1 on two strands: x1 -> x2, x2 -> x2^-1 x1 x2
print(nu(parse_word("s1", 2)))

# the wen tau_1 inverts x1
print(nu(parse_word("t1", 2)))

# a mixed relation between wens and classical crossings holds...
print(word_equal(parse_word("t2 s1", 2), parse_word("r1 s1^-1 r1 t1", 2)))

# ...but a classical and a welded crossing are different elements
print(word_equal(parse_word("s1", 2), parse_word("r1", 2)))

# Every image is a conjugate of a generator or its inverse.  The PC form lists
# the permutation, the signs and the conjugating words.
b = parse_word("s1 t2 r2 s2^-1", 3)
pc = extract_pc_form(nu(b))
print(pc.to_dict())
assert pc.to_aut() == nu(b)

# All defining relations, every index instantiation, checked through the action
for n in range(1, 7):
    report = relation_suite(n)
    print(f"n={n}: {len(report.entries)} checks, all pass: {report.passed}")
