#!/usr/bin/env python3
# Copyright 2026 The dyperm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values pinned in the C++ tests.

Exact rational arithmetic; run with `python3 derive_values.py`.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations
import math


def perm_from_counts(i, d, e_max, e_neig):
    if d == 0:
        return Fraction(0)
    c_in = Fraction(e_neig, i * (i - 1) // 2) if i >= 2 else Fraction(0)
    if e_max == 0:
        return Fraction(i, d)
    return Fraction(i, e_max * d) - (1 - c_in)


def adjacency(edges, nodes=()):
    adj = {u: set() for u in nodes}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def vertex_perm(adj, label, u):
    internal = [w for w in adj[u] if label[w] == label[u]]
    ext = Counter(label[w] for w in adj[u] if label[w] != label[u])
    e_max = max(ext.values(), default=0)
    e_neig = sum(1 for a, b in combinations(internal, 2) if b in adj[a])
    return perm_from_counts(len(internal), len(adj[u]), e_max, e_neig)


def community_sum(adj, label, c):
    return sum(vertex_perm(adj, label, u) for u in adj if label[u] == c)


def labels_of(groups):
    return {u: c for c, g in enumerate(groups) for u in g}


def nmi(a, b):
    n = len(a)
    ca, cb, joint = Counter(a), Counter(b), Counter(zip(a, b))
    h = lambda cnt: -sum(c / n * math.log(c / n) for c in cnt.values())
    mi = sum(c / n * math.log(c * n / (ca[x] * cb[y])) for (x, y), c in joint.items())
    return 2 * mi / (h(ca) + h(cb))


def ari_pairs(a, b):
    ss = sd = ds = dd = 0
    for i, j in combinations(range(len(a)), 2):
        sa, sb = a[i] == a[j], b[i] == b[j]
        ss += sa and sb
        sd += sa and not sb
        ds += sb and not sa
        dd += not sa and not sb
    num = 2 * (ss * dd - sd * ds)
    den = (ss + sd) * (sd + dd) + (ss + ds) * (ds + dd)
    return Fraction(num, den)


def show(name, value):
    print(f"{name} = {value} ({float(value):.17g})")


def main():
    show("perm(d=5,I=3,e_neig=2,e_max=2)", perm_from_counts(3, 5, 2, 2))

    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    bridged = adjacency(tri + [(2, 3)])
    sep = labels_of([[0, 1, 2], [3, 4, 5]])
    merged = labels_of([[0, 1, 2, 3, 4, 5]])
    show("bridged two triangles, community {0,1,2} sum", community_sum(bridged, sep, 0))
    show("bridged two triangles, separate total", community_sum(bridged, sep, 0) + community_sum(bridged, sep, 1))
    show("bridged two triangles, merged total", community_sum(bridged, merged, 0))
    # Best single-node proposal across the bridge: 2 joins {3,4,5}.
    moved = labels_of([[0, 1], [2, 3, 4, 5]])
    show("bridge proposal 2 -> {3,4,5}", sum(vertex_perm(bridged, moved, u) for u in bridged))

    # Lone pair {5,6} gaining an edge 5-0 into triangle {0,1,2}.
    pair_tri = adjacency([(0, 1), (1, 2), (0, 2), (5, 6), (0, 5)])
    for name, groups in [("status quo", [[0, 1, 2], [5, 6]]),
                         ("5 joins triangle", [[0, 1, 2, 5], [6]]),
                         ("5,6 join triangle", [[0, 1, 2, 5, 6]]),
                         ("0 joins pair", [[1, 2], [0, 5, 6]])]:
        lab = labels_of(groups)
        show(f"pair+triangle {name} total", sum(vertex_perm(pair_tri, lab, u) for u in pair_tri))

    # Two triangles joined only by the deleted edge (2,3), one community.
    two = adjacency(tri)
    show("two triangles unsplit sum", community_sum(two, merged, 0))
    show("two triangles split sum", community_sum(two, sep, 0) + community_sum(two, sep, 1))

    # 4-clique minus edge (0,1); every 2-way split vs whole.
    k4 = adjacency([(a, b) for a, b in combinations(range(4), 2) if (a, b) != (0, 1)])
    whole = community_sum(k4, {u: 0 for u in range(4)}, 0)
    show("4-clique minus one edge, whole", whole)
    best = None
    for r in (1, 2):
        for part in combinations(range(4), r):
            lab = {u: (1 if u in part else 0) for u in range(4)}
            s = community_sum(k4, lab, 0) + community_sum(k4, lab, 1)
            best = s if best is None else max(best, s)
    show("4-clique minus one edge, best 2-way split", best)

    # Path 0-1-2 community after deleting (1,2).
    path = adjacency([(0, 1)], nodes=[2])
    show("path unsplit", community_sum(path, {0: 0, 1: 0, 2: 0}, 0))
    show("path split", community_sum(path, {0: 0, 1: 0, 2: 1}, 0) + community_sum(path, {0: 0, 1: 0, 2: 1}, 1))

    # 4-clique plus pendant 4 attached to 0.
    kp = adjacency([(a, b) for a, b in combinations(range(4), 2)] + [(0, 4)])
    for name, lab in [("pendant alone", {0: 0, 1: 0, 2: 0, 3: 0, 4: 1}),
                      ("pendant joins", {u: 0 for u in range(5)})]:
        show(f"clique+pendant {name} pendant perm", vertex_perm(kp, lab, 4))
        show(f"clique+pendant {name} mean", sum(vertex_perm(kp, lab, u) for u in kp) / 5)

    # Single edge.
    e = adjacency([(0, 1)])
    show("single edge together mean", sum(vertex_perm(e, {0: 0, 1: 0}, u) for u in e) / 2)
    show("single edge singletons mean", sum(vertex_perm(e, {0: 0, 1: 1}, u) for u in e) / 2)

    # Star hub 0 with leaves 1..4 plus triangle {5,6,7}; hub gains edges to 5,6.
    star = adjacency([(0, 1), (0, 2), (0, 3), (0, 4), (5, 6), (6, 7), (5, 7), (0, 5), (0, 6)])
    for name, groups in [("status quo", [[0, 1, 2, 3, 4], [5, 6, 7]]),
                         ("hub only", [[1, 2, 3, 4], [0, 5, 6, 7]]),
                         ("hub and leaves", [[0, 1, 2, 3, 4, 5, 6, 7]])]:
        lab = labels_of(groups)
        show(f"star+triangle {name} total", sum(vertex_perm(star, lab, u) for u in star))

    print(f"nmi a={{01|23}} b={{0|123}} = {nmi([0, 0, 1, 1], [0, 1, 1, 1]):.17g}")
    show("ari a={01|23} b={02|13}", ari_pairs([0, 0, 1, 1], [0, 1, 0, 1]))
    show("ari a={01|23} b={0|123}", ari_pairs([0, 0, 1, 1], [0, 1, 1, 1]))


if __name__ == "__main__":
    main()
