"""Inversion graphs and desk-scale graph machinery: induced-subgraph and
isomorphism search, structural predicates, primality, automorphisms, and
permutation preimages.

Graphs are simple and undirected on vertices ``1..n``, optionally carrying
one label per vertex.  Induced-subgraph embedding compares labels by a
poset's ``<=``; isomorphism compares labels by identity.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .guards import check_size
from .labels import FinitePoset
from .perm import (
    Perm,
    all_perms,
    inverse,
    is_sum_indecomposable,
    rc_inverse,
    reverse_complement,
)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``1..n`` with optional labels."""

    n: int
    edges: frozenset
    labels: Optional[tuple] = None

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = e
            if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
                raise ValueError(f"bad edge {e!r} for vertex range 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"got {len(self.labels)} labels for {self.n} vertices")

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, u: int) -> list:
        return [v for v in range(1, self.n + 1) if self.has_edge(u, v)]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degree_sequence(self) -> tuple:
        return tuple(sorted(self.degree(v) for v in range(1, self.n + 1)))

    def label(self, v: int):
        return None if self.labels is None else self.labels[v - 1]

    def induced(self, vertices: tuple) -> "Graph":
        """The subgraph induced by the given vertices, relabeled 1..k in the
        given order (labels carried along)."""
        index = {v: i + 1 for i, v in enumerate(vertices)}
        edges = frozenset(
            (index[u], index[v])
            for u in vertices
            for v in vertices
            if u < v and self.has_edge(u, v)
        )
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v - 1] for v in vertices)
        return Graph(len(vertices), edges, labels)


def graph_from_edges(n: int, edges, labels=None) -> Graph:
    return Graph(n, frozenset(tuple(e) for e in edges), labels)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)])


def edgeless_graph(n: int) -> Graph:
    return graph_from_edges(n, [])


def inversion_graph(pi: Perm, labels=None) -> Graph:
    """Vertices ``1..n`` with an edge ``{i, j}`` whenever positions ``i < j``
    hold an inversion (``pi[i] > pi[j]``).

    >>> sorted(inversion_graph((2, 5, 4, 1, 3)).edges)
    [(1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]
    """
    n = len(pi)
    edges = frozenset(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if pi[i] > pi[j]
    )
    return Graph(n, edges, labels)


# ---------------------------------------------------------------------------
# embedding, isomorphism, automorphisms


def induced_embeds(
    h: Graph, g: Graph, poset: Optional[FinitePoset] = None
) -> Optional[tuple]:
    """A vertex map (1-based tuple: image of each h-vertex) embedding ``h``
    as an induced subgraph of ``g``, or ``None``.

    When both graphs carry labels, the embedding must dominate: the h-label
    is required to lie below the image's g-label in ``poset`` (identity
    comparison when no poset is given).
    """
    if h.n > g.n:
        return None
    use_labels = h.labels is not None and g.labels is not None

    def label_ok(hv: int, gv: int) -> bool:
        if not use_labels:
            return True
        if poset is None:
            return h.label(hv) == g.label(gv)
        return poset.leq(h.label(hv), g.label(gv))

    hdeg = {v: h.degree(v) for v in range(1, h.n + 1)}
    gdeg = {v: g.degree(v) for v in range(1, g.n + 1)}
    # order h-vertices by decreasing degree for earlier pruning
    order = sorted(range(1, h.n + 1), key=lambda v: -hdeg[v])
    mapping = {}
    used = set()

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        hv = order[idx]
        for gv in range(1, g.n + 1):
            if gv in used or gdeg[gv] < hdeg[hv] or not label_ok(hv, gv):
                continue
            if all(
                h.has_edge(hv, prev_h) == g.has_edge(gv, prev_g)
                for prev_h, prev_g in mapping.items()
            ):
                mapping[hv] = gv
                used.add(gv)
                if backtrack(idx + 1):
                    return True
                del mapping[hv]
                used.remove(gv)
        return False

    if backtrack(0):
        return tuple(mapping[v] for v in range(1, h.n + 1))
    return None


def _iso_maps(g: Graph, h: Graph, labels_identity: bool) -> Iterator[tuple]:
    """All isomorphisms g -> h as tuples (image of each g-vertex)."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return
    if g.degree_sequence() != h.degree_sequence():
        return
    gdeg = {v: g.degree(v) for v in range(1, g.n + 1)}
    hdeg = {v: h.degree(v) for v in range(1, h.n + 1)}
    order = sorted(range(1, g.n + 1), key=lambda v: -gdeg[v])
    mapping = {}
    used = set()

    def backtrack(idx: int) -> Iterator[tuple]:
        if idx == len(order):
            yield tuple(mapping[v] for v in range(1, g.n + 1))
            return
        gv = order[idx]
        for hv in range(1, h.n + 1):
            if hv in used or hdeg[hv] != gdeg[gv]:
                continue
            if labels_identity and g.labels is not None and h.labels is not None:
                if g.label(gv) != h.label(hv):
                    continue
            if all(
                g.has_edge(gv, prev_g) == h.has_edge(hv, prev_h)
                for prev_g, prev_h in mapping.items()
            ):
                mapping[gv] = hv
                used.add(hv)
                yield from backtrack(idx + 1)
                del mapping[gv]
                used.remove(hv)

    yield from backtrack(0)


def find_isomorphism(g: Graph, h: Graph) -> Optional[tuple]:
    """One isomorphism (labels compared by identity when both present)."""
    return next(_iso_maps(g, h, labels_identity=True), None)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff the graphs are isomorphic; when both carry labels the
    isomorphism must preserve them exactly (element identity)."""
    return find_isomorphism(g, h) is not None


def all_isomorphisms(g: Graph, h: Graph) -> list:
    """Every isomorphism g -> h (labels by identity when both present)."""
    return list(_iso_maps(g, h, labels_identity=True))


def automorphisms(g: Graph, max_n: Optional[int] = None) -> list:
    """All automorphisms by backtracking, as vertex-image tuples.

    >>> len(automorphisms(complete_graph(3)))
    6
    """
    check_size("automorphisms", g.n, 10, max_n)
    return all_isomorphisms(g, g)


# ---------------------------------------------------------------------------
# structural predicates


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {1}
    frontier = [1]
    while frontier:
        u = frontier.pop()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return len(seen) == g.n


def is_bipartite(g: Graph) -> bool:
    color = {}
    for start in range(1, g.n + 1):
        if start in color:
            continue
        color[start] = 0
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for v in g.neighbors(u):
                if v not in color:
                    color[v] = 1 - color[u]
                    frontier.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_forest(g: Graph) -> bool:
    parent = list(range(g.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_linear_forest(g: Graph) -> bool:
    return is_forest(g) and all(g.degree(v) <= 2 for v in range(1, g.n + 1))


def is_path(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and is_linear_forest(g)


def is_cycle(g: Graph) -> bool:
    return (
        g.n >= 3
        and is_connected(g)
        and all(g.degree(v) == 2 for v in range(1, g.n + 1))
    )


def is_cograph(g: Graph) -> bool:
    """True iff no 4 vertices induce a path (P4-freeness)."""
    for quad in itertools.combinations(range(1, g.n + 1), 4):
        sub = g.induced(quad)
        if len(sub.edges) == 3 and sub.degree_sequence() == (1, 1, 2, 2) and is_connected(sub):
            return False
    return True


def _smallest_module_containing(g: Graph, u: int, v: int) -> set:
    """Grow {u, v} until no outside vertex distinguishes the set."""
    block = {u, v}
    changed = True
    while changed:
        changed = False
        for w in range(1, g.n + 1):
            if w in block:
                continue
            links = {g.has_edge(w, x) for x in block}
            if len(links) > 1:
                block.add(w)
                changed = True
    return block


def is_prime(g: Graph) -> bool:
    """True iff the graph has no module ``X`` with ``1 < |X| < n`` (a vertex
    set every outside vertex attaches to uniformly)."""
    for u, v in itertools.combinations(range(1, g.n + 1), 2):
        if len(_smallest_module_containing(g, u, v)) < g.n:
            return False
    return True


def classify(g: Graph) -> dict:
    """All structural flags at once."""
    return {
        "is_path": is_path(g),
        "is_cycle": is_cycle(g),
        "is_linear_forest": is_linear_forest(g),
        "is_forest": is_forest(g),
        "is_bipartite": is_bipartite(g),
        "is_connected": is_connected(g),
        "is_cograph": is_cograph(g),
        "is_prime": is_prime(g),
    }


def has_long_induced_cycle(g: Graph, min_length: int = 5) -> bool:
    """True iff some >= ``min_length`` vertices induce a cycle."""
    for k in range(min_length, g.n + 1):
        for sub_vertices in itertools.combinations(range(1, g.n + 1), k):
            if is_cycle(g.induced(sub_vertices)):
                return True
    return False


# ---------------------------------------------------------------------------
# preimages


def preimages(g: Graph, n: int, max_n: Optional[int] = None) -> set:
    """All permutations of length ``n`` whose inversion graph is isomorphic
    to ``g`` (ignoring labels).

    >>> sorted(preimages(path_graph(4), 4))
    [(2, 4, 1, 3), (3, 1, 4, 2)]
    """
    check_size("preimages", n, 8, max_n)
    if g.n != n:
        return set()
    plain = Graph(g.n, g.edges)
    target_edges = len(plain.edges)
    target_degrees = plain.degree_sequence()
    out = set()
    for pi in all_perms(n):
        inv_count = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if pi[i] > pi[j]
        )
        if inv_count != target_edges:
            continue
        candidate = inversion_graph(pi)
        if candidate.degree_sequence() != target_degrees:
            continue
        if is_isomorphic(candidate, plain):
            out.add(pi)
    return out


def symmetry_automorphism_maps(sigma: Perm) -> dict:
    """The vertex maps induced on the inversion graph by the symmetries that
    fix ``sigma``: position ``i`` maps to ``sigma(i)`` when the 'inverse'
    symmetry fixes sigma, to ``n+1-i`` for 'reverse-complement', and to
    ``n+1-sigma(i)`` for 'rc-inverse'.  Always includes the identity."""
    n = len(sigma)
    out = {"identity": tuple(range(1, n + 1))}
    if inverse(sigma) == sigma:
        out["inverse"] = tuple(sigma[i] for i in range(n))
    if reverse_complement(sigma) == sigma:
        out["reverse-complement"] = tuple(n - i for i in range(n))
    if rc_inverse(sigma) == sigma:
        out["rc-inverse"] = tuple(n + 1 - sigma[i] for i in range(n))
    return out


# ---------------------------------------------------------------------------
# serialization


def to_dot(g: Graph, name: str = "G") -> str:
    """Deterministic DOT output; vertex labels become DOT labels."""
    lines = [f"graph {name} {{"]
    for v in range(1, g.n + 1):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v - 1]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    """Adjacency-list JSON."""
    data = {
        "n": g.n,
        "adjacency": [sorted(g.neighbors(v)) for v in range(1, g.n + 1)],
    }
    if g.labels is not None:
        data["labels"] = list(g.labels)
    return data


def graph_from_json(data) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    n = data["n"]
    edges = {
        (min(u, v), max(u, v))
        for u, neigh in enumerate(data["adjacency"], start=1)
        for v in neigh
    }
    labels = tuple(data["labels"]) if "labels" in data else None
    return Graph(n, frozenset(edges), labels)
