"""Small test corpora: graphs up to isomorphism, uniform matroids, duals."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, permutations

from .matroid import Matroid, dual, graphic_matroid, relabel, uniform_matroid


def _connected(vertex_count: int, edges) -> bool:
    seen, stack = {1}, [1]
    adj = {v: set() for v in range(1, vertex_count + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == vertex_count


def _canonical(vertex_count: int, edges) -> tuple:
    best = None
    for perm in permutations(range(1, vertex_count + 1)):
        p = dict(zip(range(1, vertex_count + 1), perm))
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def small_graphs(max_vertices: int = 4, max_edges: int = 6, loops: bool = True,
                 multi: bool = True) -> list:
    """Connected (multi)graphs up to isomorphism, as (vertex_count, edge list)."""
    out = []
    for nv in range(1, max_vertices + 1):
        kinds = [(u, v) for u in range(1, nv + 1) for v in range(u, nv + 1)
                 if loops or u != v]
        seen = set()
        for m in range(0, max_edges + 1):
            for edges in combinations_with_replacement(kinds, m):
                if not multi and len(set(edges)) < len(edges):
                    continue
                if not _connected(nv, edges):
                    continue
                key = _canonical(nv, edges)
                if key in seen:
                    continue
                seen.add(key)
                out.append((nv, list(key)))
    return out


def graph_corpus(max_vertices: int = 4, max_edges: int = 6) -> list:
    return [graphic_matroid(nv, edges) for nv, edges in small_graphs(max_vertices, max_edges)]


def uniform_corpus(max_n: int = 7) -> list:
    return [uniform_matroid(r, n) for n in range(0, max_n + 1) for r in range(0, n + 1)]


def corpus(max_vertices: int = 4, max_edges: int = 6, max_uniform: int = 7,
           with_duals: bool = True) -> list:
    """Graphs, uniform matroids and (optionally) all their duals, deduplicated."""
    base = graph_corpus(max_vertices, max_edges) + uniform_corpus(max_uniform)
    out, seen = [], set()
    for M in base + ([dual(M) for M in base] if with_duals else []):
        if M not in seen:
            seen.add(M)
            out.append(M)
    return out


def random_relabelings(M: Matroid, count: int = 5, seed: int = 0) -> list:
    """``count`` copies of ``M`` with the ground set reordered at random."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        labels = list(M.ground)
        rng.shuffle(labels)
        out.append(relabel(M, dict(zip(M.ground, labels))))
    return out
