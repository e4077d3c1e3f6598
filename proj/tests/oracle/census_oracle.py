#!/usr/bin/env python3
"""Brute-force census oracle.

Explores every component reachable from seeds with |entries| <= M over all
vertices of norm <= NORM_CAP, then reads the structural fingerprint off the
whole explored region (not just the neighbourhood of the bases). The class is
assigned from the fingerprint alone. Used to freeze the expected census counts
in tests/test_explorer.cpp and the acceptance suite.
"""
import itertools
import sys

import networkx as nx

NORM_CAP = 20000


def canon(t):
    return tuple(sorted(t))


def norm(t):
    return sum(abs(x) for x in t)


def raw_neighbors(t):
    a, b, c = t
    return [canon((3 * b * c - a, b, c)),
            canon((a, 3 * a * c - b, c)),
            canon((a, b, 3 * a * b - c))]


def degree(t):
    return len({u for u in raw_neighbors(t) if u != t})


def component(seed):
    seen = {seed}
    queue = [seed]
    finite = True
    while queue:
        v = queue.pop()
        for u in raw_neighbors(v):
            if u == v or u in seen:
                continue
            if norm(u) > NORM_CAP:
                finite = False
                continue
            seen.add(u)
            queue.append(u)
    return seen, finite


def fingerprint(region, finite):
    g = nx.Graph()
    g.add_nodes_from(region)
    for v in region:
        for u in raw_neighbors(v):
            if u != v and u in region:
                g.add_edge(u, v)
    degs = [degree(v) for v in region]
    circuit = len(nx.cycle_basis(g)) > 0
    return (len(region) if finite else None, degs.count(1), degs.count(2), circuit)


def class_of(sig):
    size, d1, d2, circ = sig
    if size == 1:
        return 1
    if size == 2:
        return 2
    if size is not None:
        raise ValueError(sig)
    if circ:
        return 3
    table = {(0, 4): 4, (1, 1): 5, (0, 2): 6, (1, 0): 7, (0, 1): 8, (0, 0): 9}
    return table[(d1, d2)]


def census(m):
    comp_of = {}
    comps = []
    rng = range(-m, m + 1)
    seeds = {}
    for raw in itertools.product(rng, repeat=3):
        t = canon(raw)
        if t not in comp_of:
            region, finite = component(t)
            lo = min(norm(v) for v in region)
            bases = tuple(sorted(v for v in region if norm(v) == lo))
            cls = class_of(fingerprint(region, finite))
            idx = len(comps)
            comps.append((bases, cls))
            for v in region:
                comp_of[v] = idx
        idx = comp_of[t]
        seeds[idx] = seeds.get(idx, 0) + 1
    per_class = {}
    for idx, count in seeds.items():
        cls = comps[idx][1]
        c, s = per_class.get(cls, (0, 0))
        per_class[cls] = (c + 1, s + count)
    return per_class


if __name__ == "__main__":
    for m in map(int, sys.argv[1:] or ["1", "4", "6"]):
        res = census(m)
        print(f"M={m}")
        for cls in sorted(res):
            print(f"  class {cls}: components={res[cls][0]} seeds={res[cls][1]}")
