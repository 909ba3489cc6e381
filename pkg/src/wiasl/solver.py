"""Exact bounded-universe search for weak set-labelings.

The search exploits the structure of weak labelings: the singleton-labeled
vertices of any valid labeling form a vertex cover (an edge between two
non-singleton labels breaks the cardinality equation), so it enumerates
candidate singleton-carrier covers in increasing size, assigns distinct
singleton values to the cover and distinct larger subsets to the
independent remainder, and prunes on ground-set escapes, injectivity
breaks, repeated edge labels (WIASI) and cardinality mismatches (uniform).

Minimality verdicts are always relative to an explicit universe bound;
"optimal-within-universe" never claims unbounded optimality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator, Sequence

from .constructors import claimed_value, construct
from .graphs import FamilySpec, Graph, SizeLimitError, generate, vertex_cover_number
from .intset import DEFAULT_UNIVERSE_BOUND, IntSet
from .labeling import SetLabeling

STATUS_OPTIMAL = "optimal-within-universe"
STATUS_TIMEOUT = "timeout"
STATUS_INFEASIBLE = "infeasible-within-universe"

MODES = ("WIASL", "WIASI", "UNIFORM")
UNIVERSES = ("segment", "all-subsets")


class SolveTimeout(RuntimeError):
    """The time budget ran out before the search finished."""


class InfeasibleWithinUniverseError(RuntimeError):
    """No labeling exists inside the supplied universe."""


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for the exact search.

    mode selects the labeling class (UNIFORM also needs uniform_k).
    universe picks between segments {1..m} (or {0..m-1} with allow_zero)
    and all m-subsets of {lo..universe_bound}, lo being 0 or 1 by the zero
    convention.  require_non_uniform excludes all-singleton labelings,
    matching the usual blanket assumption for weak labelings; UNIFORM mode
    ignores it (an explicit 1-uniform request wins).
    """

    mode: str = "WIASL"
    uniform_k: int | None = None
    universe: str = "segment"
    universe_bound: int | None = None
    allow_zero: bool = False
    require_non_uniform: bool = True
    max_label_size: int | None = None
    max_vertices: int = 12
    time_budget: float | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; known: {MODES}")
        if self.universe not in UNIVERSES:
            raise ValueError(f"unknown universe {self.universe!r}; known: {UNIVERSES}")
        if self.mode == "UNIFORM" and (self.uniform_k is None or self.uniform_k < 1):
            raise ValueError("UNIFORM mode needs uniform_k >= 1")
        if self.universe_bound is not None and (
            self.universe_bound < 1 or self.universe_bound >= DEFAULT_UNIVERSE_BOUND
        ):
            raise ValueError(
                f"universe_bound must be in [1, {DEFAULT_UNIVERSE_BOUND}), "
                f"got {self.universe_bound}"
            )


@dataclass(frozen=True)
class SolveResult:
    minimum: int | None
    witness: SetLabeling | None
    universe_bound: int
    status: str
    nodes_explored: int
    mode: str
    universe: str
    allow_zero: bool

    @property
    def optimal(self) -> bool:
        return self.status == STATUS_OPTIMAL


class _Stats:
    __slots__ = ("nodes",)

    def __init__(self) -> None:
        self.nodes = 0


def _bit_positions(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SolveTimeout("time budget exceeded")


def _cover_sizes(g: Graph, opts: SolveOptions) -> Sequence[int]:
    n = g.n
    alpha = vertex_cover_number(g)
    if opts.mode == "UNIFORM":
        if opts.uniform_k == 1:
            return [n]
        return range(alpha, n)  # all-singleton can never be k-uniform, k >= 2
    hi = n - 1 if opts.require_non_uniform else n
    return range(alpha, hi + 1)


def _search(
    g: Graph,
    xmask: int,
    opts: SolveOptions,
    deadline: float | None,
    stats: _Stats,
    sizes: Sequence[int] | None = None,
) -> dict[int, int] | None:
    """Find vertex -> label-mask for a valid labeling with labels inside
    xmask, or None.  Deterministic: covers by increasing size then lex
    order, singleton values ascending, subset candidates by size then lex.
    """
    n = g.n
    adj = g.adjacency_masks
    elements = _bit_positions(xmask)
    full = (1 << n) - 1
    mode, k = opts.mode, opts.uniform_k
    max_size = opts.max_label_size if opts.max_label_size is not None else len(elements)
    track_edges = mode == "WIASI"

    if sizes is None:
        sizes = _cover_sizes(g, opts)

    for size in sizes:
        for cover in combinations(range(n), size):
            _check_deadline(deadline)
            cmask = 0
            for v in cover:
                cmask |= 1 << v
            rest_mask = full & ~cmask
            # the complement must be independent, i.e. cover is a vertex cover
            ok = True
            mm = rest_mask
            while mm:
                low = mm & -mm
                if adj[low.bit_length() - 1] & rest_mask:
                    ok = False
                    break
                mm ^= low
            if not ok:
                continue
            if mode == "UNIFORM" and k is not None and k >= 2:
                # a cover-internal edge would get a singleton label
                if any(adj[v] & cmask for v in cover):
                    continue
            found = _assign_labels(
                g, xmask, elements, cover, rest_mask, opts, deadline, stats,
                max_size, track_edges,
            )
            if found is not None:
                return found
    return None


def _assign_labels(
    g: Graph,
    xmask: int,
    elements: list[int],
    cover: tuple[int, ...],
    rest_mask: int,
    opts: SolveOptions,
    deadline: float | None,
    stats: _Stats,
    max_size: int,
    track_edges: bool,
) -> dict[int, int] | None:
    adj = g.adjacency_masks
    mode, k = opts.mode, opts.uniform_k
    rest = _bit_positions(rest_mask)
    value: dict[int, int] = {}
    used_values: set[int] = set()
    used_edge: set[int] = set()
    used_labels: set[int] = set()

    prior_nbrs = [
        [u for u in cover[:idx] if adj[v] >> u & 1] for idx, v in enumerate(cover)
    ]

    def place_singles(idx: int) -> dict[int, int] | None:
        if idx == len(cover):
            return start_rest()
        v = cover[idx]
        for val in elements:
            if val in used_values:
                continue
            stats.nodes += 1
            if stats.nodes & 1023 == 0:
                _check_deadline(deadline)
            new_edges: list[int] = []
            ok = True
            for u in prior_nbrs[idx]:
                s = value[u] + val
                if not xmask >> s & 1:
                    ok = False
                    break
                if track_edges:
                    em = 1 << s
                    if em in used_edge:
                        ok = False
                        break
                    used_edge.add(em)
                    new_edges.append(em)
            if ok:
                value[v] = val
                used_values.add(val)
                found = place_singles(idx + 1)
                if found is not None:
                    return found
                used_values.discard(val)
                del value[v]
            for em in new_edges:
                used_edge.discard(em)
        return None

    def start_rest() -> dict[int, int] | None:
        pools: list[int] = []
        need = k if mode == "UNIFORM" else 2
        for v in rest:
            allowed = xmask
            mm = adj[v]
            while mm:
                low = mm & -mm
                allowed &= xmask >> value[low.bit_length() - 1]
                mm ^= low
            if allowed.bit_count() < need:
                return None
            pools.append(allowed)
        return place_rest(0, pools)

    def place_rest(idx: int, pools: list[int]) -> dict[int, int] | None:
        if idx == len(rest):
            result = {v: 1 << val for v, val in value.items()}
            for i, u in enumerate(rest):
                result[u] = rest_label[i]
            return result
        v = rest[idx]
        els = _bit_positions(pools[idx])
        if mode == "UNIFORM":
            size_lo = size_hi = k if k is not None else 2
        else:
            size_lo, size_hi = 2, min(max_size, len(els))
        for size in range(size_lo, size_hi + 1):
            if size > len(els):
                break
            for combo in combinations(els, size):
                stats.nodes += 1
                if stats.nodes & 1023 == 0:
                    _check_deadline(deadline)
                m = 0
                for e in combo:
                    m |= 1 << e
                if m in used_labels:
                    continue
                new_edges: list[int] = []
                ok = True
                if track_edges:
                    mm = adj[v]
                    while mm:
                        low = mm & -mm
                        em = m << value[low.bit_length() - 1]
                        mm ^= low
                        if em in used_edge:
                            ok = False
                            break
                        used_edge.add(em)
                        new_edges.append(em)
                if ok:
                    used_labels.add(m)
                    rest_label.append(m)
                    found = place_rest(idx + 1, pools)
                    if found is not None:
                        return found
                    rest_label.pop()
                    used_labels.discard(m)
                for em in new_edges:
                    used_edge.discard(em)
        return None

    rest_label: list[int] = []
    return place_singles(0)


def _validate_instance(g: Graph, opts: SolveOptions) -> None:
    if g.n > opts.max_vertices:
        raise SizeLimitError(
            f"exact search limited to {opts.max_vertices} vertices, got {g.n} "
            "(raise SolveOptions.max_vertices to override)"
        )
    if g.has_isolated_vertices():
        raise ValueError("labelings are defined for graphs without isolated vertices")


def exists_labeling(
    g: Graph, x: IntSet, opts: SolveOptions | None = None
) -> SetLabeling | None:
    """A labeling of g valid for opts.mode with all labels inside x, or None.

    Exhaustive within x: the cover-based decomposition loses no solutions
    because singleton carriers of any valid weak labeling cover the edges.
    """
    opts = opts or SolveOptions()
    _validate_instance(g, opts)
    if not x:
        raise ValueError("candidate ground set must be non-empty")
    deadline = (
        time.monotonic() + opts.time_budget if opts.time_budget is not None else None
    )
    stats = _Stats()
    found = _search(g, x.bits, opts, deadline, stats)
    if found is None:
        return None
    labels = {v: IntSet.from_bits(m) for v, m in found.items()}
    return SetLabeling(g, labels, x)


def _distinct_label_lower_bound(n: int) -> int:
    m = 1
    while (1 << m) - 1 < n:
        m += 1
    return m


def min_ground_set(g: Graph, opts: SolveOptions) -> SolveResult:
    """Minimum ground-set cardinality admitting a labeling of the given mode.

    Sweeps cardinalities m upward from a distinct-label lower bound.  In
    segment universe mode each m tests {1..m} ({0..m-1} with allow_zero);
    in all-subsets mode every m-subset of {lo..universe_bound} is tested in
    lexicographic order.  The verdict is relative to universe_bound.
    """
    opts = opts or SolveOptions()
    if opts.universe_bound is None:
        raise ValueError("min_ground_set needs an explicit universe_bound")
    _validate_instance(g, opts)
    bound = opts.universe_bound
    lo = 0 if opts.allow_zero else 1

    lb = _distinct_label_lower_bound(g.n)
    if opts.mode == "UNIFORM" and opts.uniform_k is not None:
        lb = max(lb, opts.uniform_k)
    elif opts.require_non_uniform:
        lb = max(lb, 2)

    deadline = (
        time.monotonic() + opts.time_budget if opts.time_budget is not None else None
    )
    stats = _Stats()

    def result(minimum: int | None, witness: SetLabeling | None, status: str) -> SolveResult:
        return SolveResult(
            minimum=minimum,
            witness=witness,
            universe_bound=bound,
            status=status,
            nodes_explored=stats.nodes,
            mode=opts.mode,
            universe=opts.universe,
            allow_zero=opts.allow_zero,
        )

    try:
        if opts.universe == "segment":
            for m in range(lb, bound + 1):
                x = IntSet(range(lo, lo + m))
                found = _search(g, x.bits, opts, deadline, stats)
                if found is not None:
                    labels = {v: IntSet.from_bits(b) for v, b in found.items()}
                    return result(m, SetLabeling(g, labels, x), STATUS_OPTIMAL)
        else:
            values = list(range(lo, bound + 1))
            for m in range(lb, len(values) + 1):
                for subset in combinations(values, m):
                    x = IntSet(subset)
                    found = _search(g, x.bits, opts, deadline, stats)
                    if found is not None:
                        labels = {v: IntSet.from_bits(b) for v, b in found.items()}
                        return result(m, SetLabeling(g, labels, x), STATUS_OPTIMAL)
    except SolveTimeout:
        return result(None, None, STATUS_TIMEOUT)
    return result(None, None, STATUS_INFEASIBLE)


def min_singleton_count(
    g: Graph,
    x: IntSet,
    *,
    max_vertices: int = 12,
    time_budget: float | None = None,
) -> int:
    """Minimum number of singleton-labeled vertices over all weak labelings
    within x.  All-singleton labelings are admitted here (more singletons
    never lower the minimum, so the blanket 1-uniform exclusion is moot).
    """
    opts = SolveOptions(
        mode="WIASL",
        require_non_uniform=False,
        max_vertices=max_vertices,
        time_budget=time_budget,
    )
    _validate_instance(g, opts)
    if not x:
        raise ValueError("candidate ground set must be non-empty")
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    stats = _Stats()
    alpha = vertex_cover_number(g)
    for size in range(alpha, g.n + 1):
        found = _search(g, x.bits, opts, deadline, stats, sizes=[size])
        if found is not None:
            return size
    raise InfeasibleWithinUniverseError(
        f"no weak labeling of this graph exists within {x.to_list()}"
    )


@dataclass(frozen=True)
class AuditRow:
    """One formula-vs-oracle comparison.

    relation compares the oracle minimum to the claimed closed form:
    '=' match, '<' the claim is beatable, '>' the claim is unreachable
    within this universe, '?' the oracle did not finish.
    """

    family: str
    n: int
    claimed: int
    construction_size: int
    construction_exception: str | None
    oracle_minimum: int | None
    relation: str
    status: str
    universe_bound: int
    allow_zero: bool
    nodes_explored: int

    CSV_HEADER = (
        "family,n,claimed,construction,exception,oracle,relation,"
        "status,universe_bound,allow_zero,nodes"
    )

    def as_csv(self) -> str:
        exc = self.construction_exception or ""
        oracle = "" if self.oracle_minimum is None else str(self.oracle_minimum)
        return (
            f"{self.family},{self.n},{self.claimed},{self.construction_size},"
            f'"{exc}",{oracle},{self.relation},{self.status},'
            f"{self.universe_bound},{self.allow_zero},{self.nodes_explored}"
        )

    def as_text(self) -> str:
        oracle = "?" if self.oracle_minimum is None else str(self.oracle_minimum)
        flag = " *" if self.construction_exception else ""
        return (
            f"{self.family:<13} n={self.n:<3} claimed={self.claimed:<3} "
            f"construction={self.construction_size:<3} oracle={oracle:<3} "
            f"relation={self.relation:<2} status={self.status}"
            f" U={self.universe_bound}{flag}"
        )


def audit(spec: FamilySpec, opts: SolveOptions | None = None) -> AuditRow:
    """Compare the claimed value, the construction size and the oracle
    minimum for one family instance.  Never asserts the claim is right;
    records the relation.
    """
    built = construct(spec)
    claimed = built.claimed
    base = opts or SolveOptions()
    bound = base.universe_bound if base.universe_bound is not None else 2 * claimed + 2
    solve_opts = replace(base, universe_bound=bound)
    g = generate(spec)
    res = min_ground_set(g, solve_opts)
    if res.minimum is None:
        relation = "?"
    elif res.minimum == claimed:
        relation = "="
    elif res.minimum < claimed:
        relation = "<"
    else:
        relation = ">"
    return AuditRow(
        family=spec.family,
        n=spec.n,
        claimed=claimed,
        construction_size=built.ground_size,
        construction_exception=built.exception,
        oracle_minimum=res.minimum,
        relation=relation,
        status=res.status,
        universe_bound=bound,
        allow_zero=solve_opts.allow_zero,
        nodes_explored=res.nodes_explored,
    )


def audit_range(
    family: str, n_from: int, n_to: int, opts: SolveOptions | None = None
) -> Iterator[AuditRow]:
    """Stream audit rows for n_from..n_to inclusive."""
    for n in range(n_from, n_to + 1):
        yield audit(FamilySpec(family, n), opts)


def claimed_for(family: str, n: int) -> int:
    return claimed_value(FamilySpec(family, n))
