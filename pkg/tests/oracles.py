"""Slow, obviously-correct reference computations.

None of these touch the elimination code in ``knotcolor.exactla``.
"""

import itertools
import math

from knotcolor.coloring import crossing_strands


def permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows):
    n = len(rows)
    return sum(
        permutation_sign(p) * math.prod(rows[i][p[i]] for i in range(n))
        for p in itertools.permutations(range(n))
    )


def delete(rows, i, j):
    return [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(rows) if k != i]


def solutions_bruteforce(rows, cols, n):
    """All x in (Z/n)^cols with rows . x = 0 mod n."""
    return [
        x for x in itertools.product(range(n), repeat=cols)
        if all(sum(a * b for a, b in zip(r, x)) % n == 0 for r in rows)
    ]


def nullity_by_count(rows, cols, p):
    count = len(solutions_bruteforce(rows, cols, p))
    k = round(math.log(count, p))
    assert p**k == count
    return k


def search_colorings(d, n, first=0, stop_at_nontrivial=False):
    """Exhaustive backtracking over strand colors with strand 0 fixed to
    ``first``; every coloring is a translate of one of these.

    Under-strands are forced once the other two strands of a crossing are
    known, which keeps the search small on diagrams with a dozen strands.
    """
    eqs = crossing_strands(d)
    k = max(d.crossing_count, 1)
    colors = [None] * k
    colors[0] = first % n
    found = []

    def consistent():
        for a, y, b in eqs:
            if None not in (colors[a], colors[y], colors[b]):
                if (colors[a] + colors[b] - 2 * colors[y]) % n:
                    return False
        return True

    def propagate(trail):
        changed = True
        while changed:
            changed = False
            for a, y, b in eqs:
                for u, v in ((a, b), (b, a)):
                    if colors[u] is None and colors[y] is not None and colors[v] is not None:
                        colors[u] = (2 * colors[y] - colors[v]) % n
                        trail.append(u)
                        changed = True
        return consistent()

    def rec():
        trail = []
        ok = propagate(trail)
        if ok:
            free = next((s for s in range(k) if colors[s] is None), None)
            if free is None:
                found.append(tuple(colors))
                if stop_at_nontrivial and len(set(colors)) > 1:
                    return True
            else:
                for c in range(n):
                    colors[free] = c
                    if rec():
                        return True
                    colors[free] = None
        for s in trail:
            colors[s] = None
        return False

    rec()
    return found


def edge_colors(d, col):
    from knotcolor.diagram import edge_strand_map
    return {e: col[s] for e, s in edge_strand_map(d).items()}


def alternating_sum(colors, edges, n):
    return sum((-1) ** k * colors[e] for k, e in enumerate(edges)) % n


def dual_tree(rc, root=0):
    """BFS tree of the region dual graph: region -> edge path from ``root``,
    plus the dual edges left out of the tree."""
    paths = {root: []}
    queue = [root]
    adj = {}
    for e, a, b in rc.dual_edges():
        adj.setdefault(a, []).append((e, b))
        adj.setdefault(b, []).append((e, a))
    used = set()
    while queue:
        r = queue.pop(0)
        for e, s in adj.get(r, []):
            if s not in paths:
                paths[s] = paths[r] + [e]
                used.add(e)
                queue.append(s)
    extra = [(e, a, b) for e, a, b in rc.dual_edges() if e not in used]
    return paths, extra


def fundamental_cycle_sums(d, rc, col, root=0):
    """Alternating color sum around every fundamental cycle of the dual graph."""
    paths, extra = dual_tree(rc, root)
    colors = edge_colors(d, col)
    n = col.modulus
    return [
        alternating_sum(colors, paths[a] + [e] + paths[b][::-1], n) for e, a, b in extra
    ]


def path_difference(d, rc, col, i, j):
    """Alternating sum along the tree path from region i to region j."""
    paths, _ = dual_tree(rc, i)
    return alternating_sum(edge_colors(d, col), paths[j], col.modulus)
