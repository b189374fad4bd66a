#!/usr/bin/env python3
# Copyright 2026 The skein-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force skein expansion oracle, independent of the C++ engine.

Works on PD codes directly with sympy rational functions and no memo. PD
tuples (a, b, c, d) list the ends clockwise from the incoming under edge.
Smoothings identify edge labels; a label identified with itself closes a
free loop.

Prints the values frozen into tests/test_oracles.cpp in canonical form
(`c*l^a*m^b` terms sorted by exponent pair, joined by " + ").

Usage: python3 skein_oracle.py
"""

import sympy as sp

l, m, a, z = sp.symbols("l m a z")
DELTA_P = -(l + 1 / l) / m
DELTA_F = (a + 1 / a) / z - 1

# A crossing is (labels, under_ac, ins): labels are the four edge labels
# clockwise, under_ac says the under strand uses positions 0 and 2, and ins
# holds the positions where the strands enter. Switching flips under_ac and
# never moves labels, so a position-based traversal is stable under it.


def strand_positions(x, under):
    return (0, 2) if x[1] == under else (1, 3)


def entry(x, pair):
    return pair[0] if pair[0] in x[2] else pair[1]


def oriented_sign(x, u_in, o_in):
    return 1 if o_in == (u_in + 1) % 4 else -1


def sign(x):
    u = strand_positions(x, True)
    o = strand_positions(x, False)
    return oriented_sign(x, entry(x, u), entry(x, o))


def identify(crossings, loops, e1, e2):
    if e1 == e2:
        still_used = any(e1 in x[0] for x in crossings)
        return crossings, loops + (0 if still_used else 1)
    out = [(tuple(e1 if e == e2 else e for e in x[0]), x[1], x[2]) for x in crossings]
    return out, loops


def switch(crossings, k):
    labels, under_ac, ins = crossings[k]
    return crossings[:k] + [(labels, not under_ac, ins)] + crossings[k + 1:]


def join_pairs(crossings, loops, k, pairs):
    labels = crossings[k][0]
    rest = crossings[:k] + crossings[k + 1:]
    alias = {}
    for p, q in pairs:
        e1 = alias.get(labels[p], labels[p])
        e2 = alias.get(labels[q], labels[q])
        rest, loops = identify(rest, loops, e1, e2)
        for key, val in list(alias.items()):
            if val == e2:
                alias[key] = e1
        alias[e2] = e1
    return rest, loops


def smooth_oriented(crossings, loops, k):
    x = crossings[k]
    u = strand_positions(x, True)
    o = strand_positions(x, False)
    u_in, o_in = entry(x, u), entry(x, o)
    u_out, o_out = (u_in + 2) % 4, (o_in + 2) % 4
    return join_pairs(crossings, loops, k, [(u_in, o_out), (o_in, u_out)])


def smooth_unoriented(crossings, loops, k):
    x = crossings[k]
    u = strand_positions(x, True)
    o = strand_positions(x, False)
    u_in, o_in = entry(x, u), entry(x, o)
    u_out, o_out = (u_in + 2) % 4, (o_in + 2) % 4
    return join_pairs(crossings, loops, k, [(u_in, o_in), (u_out, o_out)])


def traverse(crossings):
    """Components as lists of (crossing, is_over, entry position). Each is
    walked from its smallest edge label into the first of its two ends."""
    where = {}
    for i, x in enumerate(crossings):
        for p in range(4):
            where.setdefault(x[0][p], []).append((i, p))
    seen = set()
    comps = []
    for e in sorted(where):
        if e in seen:
            continue
        comp = []
        start = min(where[e])
        i, p = start
        while True:
            x = crossings[i]
            seen.add(x[0][p])
            comp.append((i, p not in strand_positions(x, True), p))
            out_p = (p + 2) % 4
            nxt = x[0][out_p]
            seen.add(nxt)
            i, p = [q for q in where[nxt] if q != (i, out_p)][0]
            if (i, p) == start:
                break
        comps.append(comp)
    return comps


def walk_writhe(crossings, comps):
    entered = {(i, p) for comp in comps for (i, _, p) in comp}
    w = 0
    for i, x in enumerate(crossings):
        u = strand_positions(x, True)
        o = strand_positions(x, False)
        u_in = u[0] if (i, u[0]) in entered else u[1]
        o_in = o[0] if (i, o[0]) in entered else o[1]
        w += oriented_sign(x, u_in, o_in)
    return w


def first_bad(comps):
    seen = set()
    for comp in comps:
        for (i, is_over, _) in comp:
            if i in seen:
                continue
            if not is_over:
                return i
            seen.add(i)
    return None


def homfly(crossings, loops=0):
    """Oriented skein recursion. A diagram that is descending (or ascending)
    along the walk is an unlink."""
    if not crossings:
        return DELTA_P ** (loops - 1)
    comps = traverse(crossings)
    k = first_bad(comps)
    if k is None:
        return DELTA_P ** (len(comps) + loops - 1)
    s = sign(crossings[k])
    p0 = homfly(*smooth_oriented(crossings, loops, k))
    psw = homfly(switch(crossings, k), loops)
    if s > 0:
        return -l * m * p0 - l**2 * psw
    return -m / l * p0 - psw / l**2


def lam(crossings, loops=0):
    """Kauffman's regular isotopy invariant. Orientation flags are only used
    to pick smoothings; signs come from the walk."""
    if not crossings:
        return DELTA_F ** (loops - 1)
    comps = traverse(crossings)
    k = first_bad(comps)
    if k is None:
        return a ** walk_writhe(crossings, comps) * DELTA_F ** (len(comps) + loops - 1)
    s0 = lam(*smooth_oriented(crossings, loops, k))
    s1 = lam(*smooth_unoriented(crossings, loops, k))
    sw = lam(switch(crossings, k), loops)
    return z * (s0 + s1) - sw


def writhe(crossings):
    return sum(sign(x) for x in crossings)


def canonical(expr, x, y):
    expr = sp.expand(sp.simplify(expr))
    num, den = sp.fraction(sp.together(expr))
    # den is a monomial; peel its exponents off.
    poly = sp.Poly(sp.expand(num), x, y)
    dpoly = sp.Poly(den, x, y)
    (dex, dey), dc = dpoly.terms()[0]
    assert len(dpoly.terms()) == 1
    terms = sorted((ex - dex, ey - dey, int(c / dc)) for (ex, ey), c in poly.terms())
    if not terms:
        return "0"
    return " + ".join(f"{c}*{x}^{e1}*{y}^{e2}" for e1, e2, c in terms)


def pd(*xs):
    """PD tuples to crossings; the over strand runs b -> d when d follows b
    along the labels."""
    top = max(e for x in xs for e in x)
    out = []
    for (a_, b, c, d) in xs:
        forward = (d - b == 1) or (b == top and d == 1)
        out.append(((a_, b, c, d), True, frozenset({0, 1 if forward else 3})))
    return out


def main():
    trefoil = pd((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
    figure8 = pd((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8))
    kink = [((1, 2, 2, 1), True, frozenset({0, 1}))]
    kink_neg = [((1, 1, 2, 2), True, frozenset({0, 3}))]
    assert sign(kink[0]) == 1 and sign(kink_neg[0]) == -1

    p_unknot = homfly(kink)
    # One skein step at the kink: l^-1 P(+kink) + l P(-kink) = -m P(L0).
    p_unlink2_relation = sp.simplify(-(p_unknot / l + l * homfly(kink_neg)) / m)
    p_unlink2_direct = homfly([], 2)
    assert sp.simplify(p_unlink2_relation - p_unlink2_direct) == 0

    values = {
        "P_unknot": canonical(p_unknot, l, m),
        "P_unlink2": canonical(p_unlink2_relation, l, m),
        "P_trefoil": canonical(homfly(trefoil), l, m),
        "P_figure_eight": canonical(homfly(figure8), l, m),
        "F_trefoil": canonical(a ** (-writhe(trefoil)) * lam(trefoil), a, z),
        "F_figure_eight": canonical(a ** (-writhe(figure8)) * lam(figure8), a, z),
    }
    for k, v in values.items():
        print(f"{k}\t{v}")


if __name__ == "__main__":
    main()
