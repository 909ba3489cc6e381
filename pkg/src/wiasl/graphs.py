"""Simple undirected graphs, named family generators, and small structural
parameters (vertex cover, independence number, bipartition).

Vertices are always 0..n-1.  Generators use a fixed numbering so labeling
schemes can address ring vertices, attached vertices and the hub directly:
ring/clique vertices come first (0..n-1), attached vertices follow aligned
by index (n..2n-1), and a hub/apex vertex, when present, comes last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping


class InvalidParameterError(ValueError):
    """A family parameter is outside the documented bounds."""


class SizeLimitError(ValueError):
    """The graph is too large for an exact-search operation."""


FAMILY_MIN_N: dict[str, int] = {
    "path": 2,
    "cycle": 3,
    "complete": 2,
    "wheel": 3,
    "helm": 3,
    "friendship": 1,
    "sunlet": 3,
    "sun": 3,
    "complete_sun": 3,
}

FAMILIES: tuple[str, ...] = tuple(FAMILY_MIN_N)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameter n, as used in the defining formulas.

    Note n counts the ring/clique/triangle parameter, not always the vertex
    count: wheel(n) has n+1 vertices, helm(n) and friendship(n) have 2n+1,
    sunlet/sun/complete_sun(n) have 2n.
    """

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in FAMILY_MIN_N:
            raise InvalidParameterError(
                f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}"
            )
        lo = FAMILY_MIN_N[self.family]
        if self.n < lo:
            raise InvalidParameterError(
                f"family {self.family!r} requires n >= {lo}, got {self.n}"
            )


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    `edges` holds unordered pairs normalized to (u, v) with u < v.
    `roles` optionally tags vertices by structural position
    ("cycle", "pendant", "hub", "apex") keyed by role name.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    roles: Mapping[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{self.n - 1}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        roles: Mapping[str, tuple[int, ...]] | None = None,
    ) -> "Graph":
        return cls(n=n, edges=frozenset(edges), roles=dict(roles or {}))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.adjacency_masks[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.adjacency_masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def has_isolated_vertices(self) -> bool:
        return any(self.degree(v) == 0 for v in range(self.n))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical family graph with deterministic numbering.

    path:         0-1-2-...-(n-1)
    cycle:        0..n-1 cyclically
    complete:     all pairs over 0..n-1
    wheel:        cycle 0..n-1 plus hub n adjacent to every ring vertex
    helm:         wheel with pendant n+i attached to ring vertex i; hub is 2n
    friendship:   triangles (i, n+i, 2n) sharing apex 2n, for i in 0..n-1
    sunlet:       cycle 0..n-1 with pendant n+i attached to ring vertex i
    sun:          cycle 0..n-1 plus independent vertex n+i adjacent to
                  ring vertices i and (i+1) mod n
    complete_sun: sun with the cycle replaced by a clique on 0..n-1
    """
    f, n = spec.family, spec.n
    edges: list[tuple[int, int]] = []
    roles: dict[str, tuple[int, ...]] = {}

    if f == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
        size = n
    elif f == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
        roles = {"cycle": tuple(range(n))}
        size = n
    elif f == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        size = n
    elif f == "wheel":
        edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
        roles = {"cycle": tuple(range(n)), "hub": (n,)}
        size = n + 1
    elif f == "helm":
        edges = (
            [(i, (i + 1) % n) for i in range(n)]
            + [(i, 2 * n) for i in range(n)]
            + [(i, n + i) for i in range(n)]
        )
        roles = {
            "cycle": tuple(range(n)),
            "pendant": tuple(range(n, 2 * n)),
            "hub": (2 * n,),
        }
        size = 2 * n + 1
    elif f == "friendship":
        for i in range(n):
            edges += [(i, n + i), (i, 2 * n), (n + i, 2 * n)]
        roles = {"apex": (2 * n,)}
        size = 2 * n + 1
    elif f == "sunlet":
        edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)]
        roles = {"cycle": tuple(range(n)), "pendant": tuple(range(n, 2 * n))}
        size = 2 * n
    elif f == "sun":
        edges = [(i, (i + 1) % n) for i in range(n)]
        for i in range(n):
            edges += [(i, n + i), ((i + 1) % n, n + i)]
        roles = {"cycle": tuple(range(n)), "pendant": tuple(range(n, 2 * n))}
        size = 2 * n
    elif f == "complete_sun":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for i in range(n):
            edges += [(i, n + i), ((i + 1) % n, n + i)]
        roles = {"cycle": tuple(range(n)), "pendant": tuple(range(n, 2 * n))}
        size = 2 * n
    else:  # pragma: no cover - guarded by FamilySpec
        raise InvalidParameterError(f"unknown family {f!r}")

    return Graph.from_edges(size, edges, roles)


EXACT_COVER_LIMIT = 24


def vertex_cover_number(g: Graph) -> int:
    """Size of a minimum vertex cover, by exact branch and bound.

    Branches on a highest-degree vertex: either it joins the cover or all
    of its remaining neighbors do.
    """
    if g.n > EXACT_COVER_LIMIT:
        raise SizeLimitError(
            f"exact vertex cover limited to {EXACT_COVER_LIMIT} vertices, got {g.n}"
        )
    adj = g.adjacency_masks
    best = [g.n]

    def bnb(covered: int, size: int) -> None:
        if size >= best[0]:
            return
        v_star, d_star = -1, 0
        for v in range(g.n):
            if covered >> v & 1:
                continue
            d = (adj[v] & ~covered).bit_count()
            if d > d_star:
                v_star, d_star = v, d
        if v_star < 0:
            best[0] = size
            return
        bnb(covered | (1 << v_star), size + 1)
        nb = adj[v_star] & ~covered
        bnb(covered | nb, size + nb.bit_count())

    bnb(0, 0)
    return best[0]


def independence_number(g: Graph) -> int:
    """n - vertex_cover_number(g): complements of covers are independent sets."""
    return g.n - vertex_cover_number(g)


@dataclass(frozen=True)
class BipartitionResult:
    """Either a 2-coloring (parts) or an explicit odd-cycle witness."""

    parts: tuple[frozenset[int], frozenset[int]] | None
    odd_cycle: tuple[int, ...] | None

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


def bipartition(g: Graph) -> BipartitionResult:
    """2-color g if bipartite, else return an odd cycle as witness.

    BFS from the smallest unvisited vertex; part 0 is the side containing
    each component's root.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartitionResult(None, _odd_cycle(u, v, parent))
    part0 = frozenset(v for v in range(g.n) if color[v] == 0)
    part1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return BipartitionResult((part0, part1), None)


def _odd_cycle(u: int, v: int, parent: list[int]) -> tuple[int, ...]:
    path_u, path_v = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(path_u)
        path_u.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        path_v.append(x)
    # x is the lowest common ancestor
    cycle = path_u[: seen[x] + 1] + path_v[-2::-1]
    assert len(cycle) % 2 == 1, "witness cycle must be odd"
    return tuple(cycle)


def brute_force_vertex_cover(g: Graph) -> int:
    """Reference oracle: try every vertex subset in increasing size.

    Only sensible for tiny graphs; used to cross-check the branch and bound.
    """
    if g.n > 16:
        raise SizeLimitError("brute force cover check limited to 16 vertices")
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return size
    return g.n


def graph_to_json(g: Graph) -> dict:
    data: dict = {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}
    if g.roles:
        data["roles"] = {k: list(v) for k, v in sorted(g.roles.items())}
    return data


def graph_from_json(data: dict) -> Graph:
    roles = {k: tuple(v) for k, v in data.get("roles", {}).items()}
    return Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]], roles)


def graph_to_dot(g: Graph, node_text: Mapping[int, str] | None = None) -> str:
    """Render as Graphviz 'graph' source; node_text overrides node labels."""
    role_of: dict[int, str] = {}
    for role, vs in g.roles.items():
        for v in vs:
            role_of[v] = role
    lines = ["graph G {"]
    for v in range(g.n):
        txt = node_text[v] if node_text and v in node_text else str(v)
        if v in role_of:
            txt += f" ({role_of[v]})"
        lines.append(f'  {v} [label="{txt}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
