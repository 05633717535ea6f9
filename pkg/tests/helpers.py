"""Shared test utilities: random graphs and brute-force oracles.

The oracles here are deliberately naive (whole-permutation-group searches,
full subset scans) so they stay independent of the library's optimized
implementations.
"""

from itertools import combinations, permutations

from fspectra.graph_core import Graph


def random_connected_graph(rng, n, extra_edges=0):
    """Random spanning tree plus extra random edges; always connected."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(pool)
    edges.update(pool[:extra_edges])
    return Graph(n, edges)


def relabeled(G, perm):
    """Copy of G with vertex v renamed perm[v]."""
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges])


def brute_canonical(G):
    """Min edge-set encoding over all n! permutations. Oracle only."""
    best = None
    for perm in permutations(range(G.n)):
        enc = tuple(sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in G.edges
        ))
        if best is None or enc < best:
            best = enc
    return (G.n, best)


def brute_is_isomorphic(G, H):
    if G.n != H.n or G.m != H.m:
        return False
    return brute_canonical(G) == brute_canonical(H)


def brute_contains_induced(G, H):
    """Subset-and-permutation scan. Oracle only; fine for n <= 7 hosts."""
    if H.n > G.n:
        return False
    h_edges = H.edges
    for subset in combinations(range(G.n), H.n):
        sub_edges = frozenset(
            (min(a, b), max(a, b))
            for a, b in combinations(subset, 2)
            if G.has_edge(a, b)
        )
        if len(sub_edges) != len(h_edges):
            continue
        pos = {v: i for i, v in enumerate(subset)}
        rel = Graph(H.n, [(pos[a], pos[b]) for a, b in sub_edges])
        if brute_is_isomorphic(rel, H):
            return True
    return False


def brute_connected_classes(n, m):
    """All connected n-vertex m-edge graphs up to isomorphism, by full scan.

    Enumerates every m-subset of the n*(n-1)/2 possible edges; dedups with
    the permutation-group canonical oracle. Usable for n <= 6.
    """
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    classes = set()
    for chosen in combinations(all_pairs, m):
        G = Graph(n, chosen)
        if not _connected(G):
            continue
        classes.add(brute_canonical(G))
    return classes


def _connected(G):
    if G.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in G.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n


def family_corpus(max_n=10):
    """A spread of named-family graphs with 3 <= n <= max_n.

    Contains paths, cycles, stars, stars-plus-edge, double stars, pendant
    triangles and squares, pendant theta(1,2,2), every pendant-free
    bicyclic shape, and the two fixed five-vertex fixtures.
    """
    from fspectra.families import FamilySpec, make
    from fspectra.search import enumerate_pendant_free_bicyclic

    out = []
    for n in range(3, max_n + 1):
        out.append(make(FamilySpec("path", (n,))))
        out.append(make(FamilySpec("cycle", (n,))))
        out.append(make(FamilySpec("star", (n,))))
        out.append(make(FamilySpec("sn_plus_e", (n,))))
        out.append(make(FamilySpec("double_star", ((n + 1) // 2, n // 2))))
        if n >= 4:
            out.append(make(FamilySpec("c3_pendants", ((n - 2) // 2, (n - 3) // 2, 0))))
            out.append(make(FamilySpec("theta122_pendants", ((n - 3) // 2, (n - 4) // 2))))
            out.extend(make(s) for s in enumerate_pendant_free_bicyclic(n))
        if n >= 5:
            out.append(make(FamilySpec("c4_pendants", (n - 4, 0, 0, 0))))
    out.append(make(FamilySpec("c3_dot_p3")))
    out.append(make(FamilySpec("k5_minus_p4")))
    return out
