"""
Independent reference computations used to freeze expected values and to
cross-check the library.  Nothing here imports loopbraid's arithmetic.
"""

from __future__ import annotations


def naive_reduce(letters):
    """Delete adjacent inverse pairs one at a time, stepping back after each deletion."""
    w = list(letters)
    k = 0
    while k < len(w) - 1:
        if w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1]:
            del w[k : k + 2]
            k = max(k - 1, 0)
        else:
            k += 1
    return w


def naive_gen_images(kind, i, e, n):
    """Generator images written out from the defining formulas (dict j -> letters)."""
    img = {j: [(j, 1)] for j in range(1, n + 1)}
    if kind == "t":
        img[i] = [(i, -1)]
    elif kind == "r":
        img[i], img[i + 1] = [(i + 1, 1)], [(i, 1)]
    elif e == 1:
        img[i], img[i + 1] = [(i + 1, 1)], [(i + 1, -1), (i, 1), (i + 1, 1)]
    else:
        img[i], img[i + 1] = [(i, 1), (i + 1, 1), (i, -1)], [(i, 1)]
    return img


def naive_substitute(img, letters):
    out = []
    for j, f in letters:
        if f == 1:
            out += img[j]
        else:
            out += [(a, -b) for a, b in reversed(img[j])]
    return out


def parse_tokens(text):
    """'s1 s2^-1 r1 t3' -> [('s', 1, 1), ('s', 2, -1), ('r', 1, 1), ('t', 3, 1)]"""
    if text.strip() == "1":
        return []
    out = []
    for tok in text.split():
        e = -1 if tok.endswith("^-1") else 1
        out.append((tok[0], int(tok[1:].replace("^-1", "")), e))
    return out


def naive_nu(tokens, n):
    """Images of x_1..x_n under nu(g_1 ... g_k) = nu(g_1) o ... o nu(g_k)."""
    result = []
    for j in range(1, n + 1):
        w = [(j, 1)]
        for kind, i, e in reversed(tokens):
            w = naive_reduce(naive_substitute(naive_gen_images(kind, i, e, n), w))
        result.append(tuple(naive_reduce(w)))
    return tuple(result)


def trace_closure(tokens, n):
    """
    Follow strands through the diagram.  Returns (components, wen counts per
    component) where components are the strand cycles of the closed diagram.
    """
    at = list(range(1, n + 1))  # at[p-1] = strand currently at position p
    wens = [0] * (n + 1)
    for kind, i, _ in tokens:
        if kind == "t":
            wens[at[i - 1]] += 1
        else:
            at[i - 1], at[i] = at[i], at[i - 1]
    # closing joins the strand ending at bottom position p to the strand starting at top p
    nxt = {at[p - 1]: p for p in range(1, n + 1)}
    seen, comps = set(), []
    for s in range(1, n + 1):
        if s in seen:
            continue
        comp = []
        while s not in seen:
            seen.add(s)
            comp.append(s)
            s = nxt[s]
        comps.append(comp)
    return comps, [sum(wens[s] for s in c) for c in comps]
