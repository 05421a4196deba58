"""Brute-force reference computations, deliberately independent of the package code paths."""

from itertools import combinations_with_replacement, permutations, product


def brute_certificate(genera, mults, adj):
    """Minimum over all vertex orderings of the canonical block sequence, plus its encoding."""
    k = len(genera)
    val = [sum(adj[i][j] for j in range(k)) + adj[i][i] for i in range(k)]
    best = None
    best_perm = None
    for perm in permutations(range(k)):
        cert = []
        for j, v in enumerate(perm):
            cert.append((genera[v], mults[v], val[v], *(-adj[perm[i]][v] for i in range(j)), -adj[v][v]))
        if best is None or cert < best:
            best, best_perm = cert, perm
    verts = ",".join(f"{genera[v]}/{mults[v]}" for v in best_perm)
    edges = [
        f"{i}-{j}:{adj[best_perm[i]][best_perm[j]]}"
        for j in range(k)
        for i in range(j + 1)
        if adj[best_perm[i]][best_perm[j]]
    ]
    return (verts + "|" + ",".join(edges)).encode()


def config_to_matrix(config):
    idx = {c.id: i for i, c in enumerate(config.components)}
    k = len(idx)
    adj = [[0] * k for _ in range(k)]
    for n in config.nodes:
        i, j = idx[n.left], idx[n.right]
        adj[i][j] += 1
        if i != j:
            adj[j][i] += 1
    return [c.genus for c in config.components], [c.multiplicity for c in config.components], adj


def brute_canonical(config):
    return brute_certificate(*config_to_matrix(config))


def _connected(k, adj):
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in range(k):
            if adj[v][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


def brute_stable_graphs(g, max_vertices):
    """Every genus labeling and every edge multiset, filtered by genus and stability."""
    found = set()
    for k in range(1, max_vertices + 1):
        slots = [(i, j) for i in range(k) for j in range(i, k)]
        for genera in product(range(g + 1), repeat=k):
            edges = g - sum(genera) + k - 1
            if edges < 0:
                continue
            for multiset in combinations_with_replacement(range(len(slots)), edges):
                adj = [[0] * k for _ in range(k)]
                for s in multiset:
                    i, j = slots[s]
                    adj[i][j] += 1
                    if i != j:
                        adj[j][i] += 1
                if not _connected(k, adj):
                    continue
                val = [sum(adj[i]) + adj[i][i] for i in range(k)]
                if all(2 * genera[i] - 2 + val[i] > 0 for i in range(k)):
                    found.add(brute_certificate(list(genera), [1] * k, adj))
    return sorted(found)


def euler_characteristic_genus(genus, branch_points, degree, points_over):
    """Genus of a degree-``degree`` cover of a genus-``genus`` curve, via Euler characteristics.

    ``points_over`` lists how many points lie above each of the ``branch_points``.
    """
    chi_base_open = 2 - 2 * genus - branch_points
    chi = degree * chi_base_open + sum(points_over)
    assert chi % 2 == 0
    return (2 - chi) // 2
