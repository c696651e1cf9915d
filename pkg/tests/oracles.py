"""Reference implementations used only by the tests.

They share no code with the package beyond the move semantics they check.
"""

from itertools import permutations

from picturecube.puzzle import apply_move, enumerate_moves


def cycle_map(cycles):
    """Point map of a product of disjoint cycles given as tuples."""
    out = {k: k for k in range(1, 10)}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a] = b
    return out


def then(p, q):
    """Apply dict-permutation p, then q."""
    return {k: q[p[k]] for k in p}


def inverse(p):
    return {v: k for k, v in p.items()}


def sign_by_inversions(images):
    n = len(images)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])
    return -1 if inv % 2 else 1


def even_perms(n):
    return {p for p in permutations(range(1, n + 1)) if sign_by_inversions(p) == 1}


def brute_force_bfs(spec):
    """BFS over Configuration objects with plain dicts."""
    start = spec.identity()
    dist = {start: 0}
    frontier = [start]
    moves = enumerate_moves(spec)
    while frontier:
        nxt = []
        for c in frontier:
            for mv in moves:
                y = apply_move(spec, c, mv)
                if y not in dist:
                    dist[y] = dist[c] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def histogram(dist):
    counts = {}
    for d in dist.values():
        counts[d] = counts.get(d, 0) + 1
    return tuple(sorted(counts.items()))
