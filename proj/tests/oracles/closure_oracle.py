#!/usr/bin/env python3
#
# ms4wb - Copyright 2026 The ms4wb Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Independent oracle for the growth fixtures used by the C++ test suites.

Builds the corpus frames from scratch (no shared code with the C++ library)
and computes
  * |<g>| on the m x m Erdos-Tarski grid with operators {E1-sat, E2-sat},
  * |<endpoint>| on alternating snakes,
  * distinct-set counts of s_{n+1} = Ex Dia s_n - d on the three-layer frame.

Subalgebra sizes come from a naive set-family worklist closure (complement,
pairwise intersection, every operator) whenever the family stays small. For
larger families the closure is computed as the Boolean algebra spanned by a
growing family of sets: atoms are the classes of points with identical
membership vectors, and operator images of atoms are added to the family
until nothing new appears. Both routes are cross-checked where both run.

Usage: closure_oracle.py [--check FIXTURE_JSON] [--write FIXTURE_JSON]
"""

import argparse
import itertools
import json
import sys

NAIVE_LIMIT = 1 << 12


def saturate(blocks_of, subset):
    out = set()
    for x in subset:
        out |= blocks_of[x]
    return frozenset(out)


def naive_closure(points, gens, ops):
    universe = frozenset(points)
    family = {frozenset(), universe}
    work = [frozenset(g) for g in gens] + [frozenset(), universe]
    family |= set(work)
    while work:
        a = work.pop()
        cand = [universe - a] + [op(a) for op in ops]
        cand += [a & b for b in list(family)]
        for c in cand:
            if c not in family:
                family.add(c)
                work.append(c)
        if len(family) > NAIVE_LIMIT:
            return None
    return len(family)


def spanned_closure(points, gens, ops):
    family = [frozenset(g) for g in gens]
    while True:
        signature = {}
        for x in points:
            key = tuple(x in s for s in family)
            signature.setdefault(key, set()).add(x)
        atoms = [frozenset(v) for v in signature.values()]
        grown = False
        known = set(family)
        for atom in atoms:
            for op in ops:
                img = op(atom)
                if img not in known:
                    family.append(img)
                    known.add(img)
                    grown = True
        if not grown:
            return 2 ** len(atoms)


def subalgebra_size(points, gens, ops):
    spanned = spanned_closure(points, gens, ops)
    naive = naive_closure(points, gens, ops) if spanned <= NAIVE_LIMIT else None
    if naive is not None and naive != spanned:
        raise SystemExit(f"oracle routes disagree: naive={naive} spanned={spanned}")
    return spanned


def et_grid(m):
    points = [(i, j) for j in range(m) for i in range(m)]
    rows = {p: {q for q in points if q[1] == p[1]} for p in points}
    cols = {p: {q for q in points if q[0] == p[0]} for p in points}
    g = frozenset(p for p in points if p[0] <= p[1])
    ops = [lambda s: saturate(rows, s), lambda s: saturate(cols, s)]
    return points, g, ops


def snake(m):
    points = list(range(m))
    e2 = {p: {p, p ^ 1} for p in points}
    e1 = {}
    for p in points:
        mate = p + 1 if p % 2 == 1 else p - 1
        e1[p] = {p, mate} if 0 <= mate < m else {p}
    ops = [lambda s: saturate(e1, s), lambda s: saturate(e2, s)]
    return points, frozenset({0}), ops


def three_layer(k):
    classes = range(2 * k + 1)
    points = []
    edges = []
    for c in classes:
        points += [("t", c), ("a", c)]
        edges.append((("a", c), ("t", c)))
        if c % 2 == 1:
            points.append(("e", c))
            edges.append((("e", c), ("t", c)))
            edges.append((("a", c - 1), ("a", c)))
            edges.append((("a", c), ("a", c - 1)))
        if c % 2 == 0 and c >= 2:
            points.append(("b", c))
            edges.append((("b", c), ("e", c - 1)))
        if c > 0:
            edges.append((("t", c - 1), ("t", c)))
            edges.append((("t", c), ("t", c - 1)))
    succ = {p: {p} for p in points}
    for x, y in edges:
        succ[x].add(y)
    changed = True
    while changed:
        changed = False
        for p in points:
            grown = set(succ[p])
            for q in succ[p]:
                grown |= succ[q]
            if grown != succ[p]:
                succ[p] = grown
                changed = True
    col = {p: {q for q in points if q[1] == p[1]} for p in points}

    def dia(s):
        return frozenset(p for p in points if succ[p] & s)

    def ex(s):
        return saturate(col, s)

    g = frozenset({("a", 0)})
    d = frozenset(p for p in points if p[0] == "t")
    return points, g, d, dia, ex


def sn_distinct(k):
    _, g, d, dia, ex = three_layer(k)
    seen = []
    s = g
    while s not in seen:
        seen.append(s)
        s = ex(dia(s)) - d
    return len(seen)


def compute():
    et = {}
    for m in range(1, 6):
        points, g, ops = et_grid(m)
        et[str(m)] = subalgebra_size(points, [g], ops)
    sn = {}
    for m in range(2, 11, 2):
        points, g, ops = snake(m)
        sn[str(m)] = subalgebra_size(points, [g], ops)
    chain = {str(k): sn_distinct(k) for k in range(2, 9)}
    return {"et_grid_one_generated": et, "snake_endpoint": sn,
            "three_layer_sn_distinct": chain}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check")
    ap.add_argument("--write")
    args = ap.parse_args()
    result = compute()
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.write:
        with open(args.write, "w") as fh:
            fh.write(text)
    if args.check:
        with open(args.check) as fh:
            frozen = json.load(fh)
        if frozen != result:
            print("fixture mismatch", file=sys.stderr)
            print(text, file=sys.stderr)
            return 1
    if not args.write and not args.check:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
