#!/usr/bin/env python3
"""Brute-force reference values for the C++ test suite.

Independent of the library: circles are traced by walking half-edges of the
smoothed diagram (no union-find), Jones is assembled from explicit state
sums, and Z/2 Khovanov dimensions come from Python-int bitset elimination.

Usage: python3 bracket_oracle.py   (prints the frozen values)
"""
from collections import defaultdict
from itertools import product


def parse(code):
    """Return (word, signs) where word is the list of chord labels in order."""
    toks = code.replace("@closed", "").split()
    word, signs = [], {}
    for t in toks:
        k, s = int(t[1:-1]), (1 if t[-1] == "+" else -1)
        word.append(k)
        signs[k] = s
    return word, signs


def circles(word, signs, markers):
    """Count circles of a closed state by walking half-edges.

    Half-edge (p, 'in') is the end of the strand arriving at position p,
    (p, 'out') is the start of the strand leaving position p.
    """
    m = len(word)
    if m == 0:
        return 1, []
    pos = defaultdict(list)
    for p, k in enumerate(word):
        pos[k].append(p)
    partner = {}
    for k, (u, v) in pos.items():
        oriented = (signs[k] > 0) == (markers[k] > 0)
        if oriented:
            pairs = [((u, "in"), (v, "out")), ((v, "in"), (u, "out"))]
        else:
            pairs = [((u, "in"), (v, "in")), ((u, "out"), (v, "out"))]
        for a, b in pairs:
            partner[a] = b
            partner[b] = a
    # strand s runs from (s,'out') to ((s+1)%m,'in'); strands are the
    # vertices of a graph whose edges are the smoothing joins.
    adj = defaultdict(set)
    for s in range(m):
        for he in ((s, "out"), ((s + 1) % m, "in")):
            q = partner[he]
            t = q[0] if q[1] == "out" else (q[0] - 1) % m
            adj[s].add(t)
            adj[t].add(s)
    seen = set()
    comps = []
    for s in range(m):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return len(comps), comps


def padd(a, b, scale=1):
    for e, c in b.items():
        a[e] = a.get(e, 0) + scale * c
        if a[e] == 0:
            del a[e]


def pmul(a, b):
    r = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            r[e1 + e2] = r.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in r.items() if c}


def bracket(word, signs):
    chords = sorted(signs)
    delta = {2: -1, -2: -1}
    total = {}
    for ms in product((1, -1), repeat=len(chords)):
        markers = dict(zip(chords, ms))
        c, _ = circles(word, signs, markers)
        sigma = sum(ms)
        term = {sigma: 1}
        for _ in range(c - 1):
            term = pmul(term, delta)
        padd(total, term)
    return total


def jones(word, signs):
    w = sum(signs.values())
    b = bracket(word, signs)
    # (-A^3)^(-w)
    return {e - 3 * w: c * (-1) ** (w % 2) for e, c in b.items()}


def rank_gf2(rows):
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        piv = rows.pop()
        if not piv:
            continue
        rank += 1
        low = piv & -piv
        rows = [r ^ piv if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def khovanov(word, signs):
    chords = sorted(signs)
    n = len(chords)
    w = sum(signs.values())
    gens = {}  # (markers tuple, labels tuple) -> (i, j)
    states = {}
    for ms in product((1, -1), repeat=n):
        markers = dict(zip(chords, ms))
        c, comps = circles(word, signs, markers)
        states[ms] = comps
        sigma = sum(ms)
        i = (w - sigma) // 2
        for labels in product((1, -1), repeat=c):  # 1 = "1", -1 = "x"
            gens[(ms, labels)] = (i, w + i + sum(labels))
    index = defaultdict(dict)
    for g, ij in gens.items():
        index[ij][g] = len(index[ij])

    def image(g):
        ms, labels = g
        comps = states[ms]
        out = []
        for k in range(n):
            if ms[k] != 1:
                continue
            ms2 = tuple(-1 if t == k else ms[t] for t in range(n))
            comps2 = states[ms2]
            if len(comps2) == len(comps):
                continue
            lab = {}
            for cc, l in zip(comps, labels):
                for s in cc:
                    lab[s] = l
            if n == 0:
                continue
            set1 = [frozenset(c) for c in comps]
            set2 = [frozenset(c) for c in comps2]
            if len(comps2) < len(comps):
                # merge
                new = []
                for c2 in set2:
                    parts = [l for c1, l in zip(set1, labels) if c1 <= c2]
                    if len(parts) == 1:
                        new.append(parts[0])
                    else:
                        a, b = parts
                        if a == -1 and b == -1:
                            new = None
                            break
                        new.append(-1 if -1 in (a, b) else 1)
                if new is not None:
                    out.append((ms2, tuple(new)))
            else:
                src = None
                for c1, l in zip(set1, labels):
                    if c1 not in set2:
                        src = (c1, l)
                pieces = [t for t, c2 in enumerate(set2) if c2 <= src[0]]
                base = []
                for c2 in set2:
                    parts = [l for c1, l in zip(set1, labels) if c2 <= c1]
                    base.append(parts[0])
                if src[1] == -1:
                    nl = list(base)
                    for t in pieces:
                        nl[t] = -1
                    out.append((ms2, tuple(nl)))
                else:
                    for xpos in pieces:
                        nl = list(base)
                        for t in pieces:
                            nl[t] = -1 if t == xpos else 1
                        out.append((ms2, tuple(nl)))
        return out

    rank_out = {}
    for (i, j), members in index.items():
        tgt = index.get((i + 1, j), {})
        rows = []
        for g in members:
            v = 0
            for h in image(g):
                assert gens[h] == (i + 1, j)
                v ^= 1 << tgt[h]
            rows.append(v)
        rank_out[(i, j)] = rank_gf2(rows)
    dims = {}
    for (i, j), members in index.items():
        d = len(members) - rank_out[(i, j)] - rank_out.get((i - 1, j), 0)
        if d:
            dims[(i, j)] = d
    return dict(sorted(dims.items()))


def fmt(p):
    return sorted(p.items())


CASES = {
    "kink+": "O1+ U1+",
    "kink-": "O1- U1-",
    "trefoil": "O1+ U2+ O3+ U1+ O2+ U3+",
    "virtual_trefoil": "O1+ O2+ U1+ U2+",
    "figure_eight": "O1+ U2- O3- U1+ O4+ U3- O2- U4+",
    "trefoil_ip": "O1+ U2- O3+ U1+ O2- U3+",
}

if __name__ == "__main__":
    for name, code in CASES.items():
        word, signs = parse(code)
        print(f"{name}: {code}")
        print("  bracket:", fmt(bracket(word, signs)))
        print("  jones  :", fmt(jones(word, signs)))
        print("  kh     :", khovanov(word, signs))
