"""Closed-form weak set-labelings for the nine named families.

Each family has a published closed-form value for the minimum ground-set
size (`claimed_value`).  `construct` returns an explicitly verified weak
labeling together with that claim.  Where the published scheme is broken
or its value is unreachable, the builder uses a repaired scheme and flags
the instance as a documented exception; the solver module independently
audits every claim, so nothing here is trusted blindly.

Repairs applied (all rediscovered by exact search at small n):

* paths: the even scheme's first vertex collides with another label at
  n = 2 and n = 4 (fixed with a different two-element label, same ground
  set).  For odd n >= 5 no weak labeling exists inside {1..2+n//2} at all;
  those instances use {1..3+n//2} and carry an exception flag.
* cycles: the published value 2+n//2 is unreachable with ground sets of
  positive integers for every n; all cycles use {1..n//2+3}, flagged.
* wheels: the published hub label breaks the cardinality equation.  A hub
  labeled {0} fixes even wheels at the published size but needs a
  zero-based ground set {0..n//2+2}; odd wheels need one extra element
  even then, and wheel(3) is the 4-clique (needs 5, not 4).
* complete graphs: the published scheme only works for n >= 4; K_2 and
  K_3 need ground sets of size 3 and 4.
* helm / sunlet / sun: ring singletons are placed in zigzag value order
  (1, n, 2, n-1, ...) so adjacent ring sums stay at n+2; the published
  ascending order overshoots for n >= 5.  Published sizes hold for all n.
* friendship: published scheme works verbatim for all n >= 1.
* complete sun: clique edges force pairwise singleton sums up to 2n-1,
  which exceeds the published n+3 once n >= 5; those instances use
  {1..2n-1}, flagged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graphs import FamilySpec, Graph, bipartition, generate
from .intset import IntSet, sumset
from .labeling import SetLabeling, minimal_ground_set, verify


class NotBipartiteError(ValueError):
    """k-uniform labeling with k >= 2 was requested for a non-bipartite graph."""

    def __init__(self, message: str, odd_cycle: tuple[int, ...]):
        super().__init__(message)
        self.odd_cycle = odd_cycle


@dataclass(frozen=True)
class ClaimedFormula:
    family: str
    formula: Callable[[int], int]
    expression: str


CLAIMED_FORMULAS: dict[str, ClaimedFormula] = {
    "path": ClaimedFormula("path", lambda n: 2 + n // 2, "2 + floor(n/2)"),
    "cycle": ClaimedFormula("cycle", lambda n: 2 + n // 2, "2 + floor(n/2)"),
    "complete": ClaimedFormula("complete", lambda n: 2 * n - 3, "2n - 3"),
    "wheel": ClaimedFormula("wheel", lambda n: 3 + n // 2, "3 + floor(n/2)"),
    "helm": ClaimedFormula("helm", lambda n: n + 3, "n + 3"),
    "friendship": ClaimedFormula("friendship", lambda n: n + 3, "n + 3"),
    "sunlet": ClaimedFormula("sunlet", lambda n: n + 2, "n + 2"),
    "sun": ClaimedFormula("sun", lambda n: n + 3, "n + 3"),
    "complete_sun": ClaimedFormula("complete_sun", lambda n: n + 3, "n + 3"),
}


def claimed_value(spec: FamilySpec) -> int:
    """Evaluate the published closed-form minimum for the family instance."""
    return CLAIMED_FORMULAS[spec.family].formula(spec.n)


def construction_exception(family: str, n: int) -> str | None:
    """Documented exception list: reason construct() deviates from
    "ground set exactly {1..claimed}", or None when it does not.
    """
    if family == "path" and n >= 5 and n % 2 == 1:
        return "odd paths need one extra element over positive segments"
    if family == "cycle":
        return "cycles need one extra element over positive segments"
    if family == "complete" and n == 2:
        return "claimed 2n-3 = 1 cannot label two vertices; actual size 3"
    if family == "complete" and n == 3:
        return "published scheme's edge labels escape {1,2,3}; actual size 4"
    if family == "wheel" and n == 3:
        return "wheel(3) is the 4-clique; actual size 5"
    if family == "wheel" and n % 2 == 0:
        return "claimed size holds only with the zero-based ground set {0..claimed-1}"
    if family == "wheel":
        return "odd wheels need one extra element under either zero convention"
    if family == "complete_sun" and n >= 5:
        return "clique edge sums force ground sets of size 2n-1"
    return None


@dataclass(frozen=True)
class Construction:
    """A constructed labeling plus the claim it is measured against."""

    labeling: SetLabeling
    claimed: int
    exception: str | None = None

    @property
    def ground_size(self) -> int:
        return len(self.labeling.ground_set)

    @property
    def is_exception(self) -> bool:
        return self.exception is not None


def _zigzag(n: int) -> list[int]:
    """Values 1..n in cyclic order 1, n, 2, n-1, ... (adjacent sums <= n+2)."""
    order = []
    lo, hi = 1, n
    while lo <= hi:
        order.append(lo)
        lo += 1
        if lo <= hi:
            order.append(hi)
            hi -= 1
    return order


def _straddle_labels(pair_maxes: list[int], top: int) -> list[set[int]]:
    """Two-element labels for vertices astride ring pairs.

    A vertex astride a ring pair whose larger singleton value is t may use
    any label with maximum at most top - t.  Each bound occurs at most
    twice around the ring; the first taker gets {b-1, b}, the second
    {b-2, b}, keeping all labels distinct.
    """
    taken: dict[int, int] = {}
    out: list[set[int]] = []
    for t in pair_maxes:
        b = top - t
        count = taken.get(b, 0)
        if count == 0:
            out.append({b - 1, b})
        elif count == 1:
            out.append({b - 2, b})
        else:  # pragma: no cover - zigzag order guarantees <= 2
            raise AssertionError(f"bound {b} needed more than twice")
        taken[b] = count + 1
    return out


def _path_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    """Returns (labels, first ground element, last ground element)."""
    r = n // 2
    if n == 2:
        return {0: {1, 2}, 1: {1}}, 1, 3
    if n == 3:
        return {0: {2}, 1: {1}, 2: {1, 2}}, 1, 3
    if n == 4:
        return {0: {1, 3}, 1: {1}, 2: {1, 2}, 3: {2}}, 1, 4
    labels: dict[int, set[int]] = {}
    if n % 2 == 0:
        # singletons on odd positions, descending two-element labels between
        for i in range(1, r + 1):
            labels[2 * i - 1] = {i}
        for i in range(2, r + 1):
            labels[2 * i - 2] = {r + 1 - i, r + 2 - i}
        labels[0] = {1, r}
        return labels, 1, r + 2
    # odd n >= 5: same shape, one extra element (flagged exception)
    for i in range(1, r + 1):
        labels[2 * i - 1] = {i}
    for i in range(1, r + 1):
        labels[2 * i] = {r + 1 - i, r + 2 - i}
    labels[0] = {r, r + 2}
    return labels, 1, r + 3


def _cycle_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    r = n // 2
    labels: dict[int, set[int]] = {}
    if n % 2 == 0:
        for i in range(1, r + 1):
            labels[2 * i - 1] = {i}
        for i in range(1, r):
            labels[2 * i] = {r + 1 - i, r + 2 - i}
        labels[0] = {1, 2}
    else:
        for j in range(r + 1):
            labels[2 * j] = {j + 1}
        for i in range(1, r + 1):
            labels[2 * i - 1] = {r + 1 - i, r + 2 - i}
    return labels, 1, r + 3


def _complete_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    if n == 2:
        return {0: {1}, 1: {1, 2}}, 1, 3
    if n == 3:
        return {0: {1}, 1: {2}, 2: {1, 2}}, 1, 4
    labels: dict[int, set[int]] = {i: {i + 1} for i in range(n - 1)}
    labels[n - 1] = {1, 2}
    return labels, 1, 2 * n - 3


def _wheel_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    r = n // 2
    labels: dict[int, set[int]] = {}
    if n == 3:
        return {0: {1}, 1: {2}, 2: {3}, 3: {1, 2}}, 1, 5
    if n % 2 == 0:
        # hub {0} contributes nothing to sums; ring alternates as for cycles
        labels[n] = {0}
        for i in range(r):
            labels[2 * i] = {i + 1}
        for i in range(1, r):
            labels[2 * i - 1] = {r - i, r + 1 - i}
        labels[n - 1] = {0, 2}
        return labels, 0, r + 2
    # odd n >= 5: hub {1}, ring singletons 2..r+2, two-element labels between
    labels[n] = {1}
    for i in range(r + 1):
        labels[2 * i] = {i + 2}
    for i in range(r):
        labels[2 * i + 1] = {r - i, r + 1 - i}
    return labels, 1, r + 4


def _helm_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    z = _zigzag(n)
    labels: dict[int, set[int]] = {}
    for i in range(n):
        s = z[i]
        labels[i] = {s}
        labels[n + i] = {n + 1 - s, n + 2 - s}
    labels[2 * n] = {1, 3}
    return labels, 1, n + 3


def _friendship_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    labels: dict[int, set[int]] = {2 * n: {1}}
    for i in range(n):
        labels[i] = {i + 2}
        labels[n + i] = {n - i, n + 1 - i}
    return labels, 1, n + 3


def _sunlet_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    z = _zigzag(n)
    labels: dict[int, set[int]] = {}
    for i in range(n):
        s = z[i]
        labels[i] = {s}
        labels[n + i] = {n + 1 - s, n + 2 - s}
    return labels, 1, n + 2


def _sun_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    z = _zigzag(n)
    labels: dict[int, set[int]] = {i: {z[i]} for i in range(n)}
    pair_maxes = [max(z[i], z[(i + 1) % n]) for i in range(n)]
    for i, lab in enumerate(_straddle_labels(pair_maxes, n + 3)):
        labels[n + i] = lab
    return labels, 1, n + 3


def _complete_sun_labels(n: int) -> tuple[dict[int, set[int]], int, int]:
    labels: dict[int, set[int]] = {i: {i + 1} for i in range(n)}
    if n <= 4:
        pair_maxes = [max(i + 1, (i + 1) % n + 1) for i in range(n)]
        for i, lab in enumerate(_straddle_labels(pair_maxes, n + 3)):
            labels[n + i] = lab
        return labels, 1, n + 3
    for i in range(n - 1):
        labels[n + i] = {2 * n - 4 - i, 2 * n - 3 - i}
    labels[2 * n - 1] = {n - 3, n - 1}
    return labels, 1, 2 * n - 1


_BUILDERS = {
    "path": _path_labels,
    "cycle": _cycle_labels,
    "complete": _complete_labels,
    "wheel": _wheel_labels,
    "helm": _helm_labels,
    "friendship": _friendship_labels,
    "sunlet": _sunlet_labels,
    "sun": _sun_labels,
    "complete_sun": _complete_sun_labels,
}


def construct(spec: FamilySpec) -> Construction:
    """Build a verified weak labeling for the family instance.

    The ground set is {1..claimed_value} exactly, except at the documented
    exceptions (see construction_exception), where the actual ground set
    and an exception reason are reported instead of a silently wrong size.
    Every returned labeling is checked here: it verifies as WIASL and its
    label/edge-label union equals the declared ground set.
    """
    g = generate(spec)
    raw, lo, hi = _BUILDERS[spec.family](spec.n)
    labels = {v: IntSet(vals) for v, vals in raw.items()}
    ground = IntSet(range(lo, hi + 1))
    labeling = SetLabeling(g, labels, ground)

    report = verify(labeling, "WIASL")
    assert report.valid, (
        f"builder bug for {spec.family} n={spec.n}:\n{report.summary()}"
    )
    assert minimal_ground_set(labeling) == ground, (
        f"builder bug for {spec.family} n={spec.n}: ground set not tight"
    )

    reason = construction_exception(spec.family, spec.n)
    claimed = claimed_value(spec)
    if reason is None:
        assert ground == IntSet(range(1, claimed + 1)), (
            f"builder bug for {spec.family} n={spec.n}: "
            f"unflagged ground set differs from 1..{claimed}"
        )
    return Construction(labeling, claimed, reason)


def construct_k_uniform(g: Graph, k: int) -> SetLabeling:
    """Labeling whose edge labels all have cardinality exactly k.

    k = 1 labels every vertex with a distinct singleton (any graph).  For
    k >= 2 the graph must be bipartite: one part gets distinct singletons,
    the other distinct k-element windows, so every edge label is a
    translated window of size k.  The ground set is the label/edge union.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.has_isolated_vertices():
        raise ValueError("k-uniform labeling needs a graph without isolated vertices")

    labels: dict[int, IntSet]
    if k == 1:
        labels = {v: IntSet([v + 1]) for v in range(g.n)}
    else:
        parts = bipartition(g)
        if not parts.is_bipartite:
            assert parts.odd_cycle is not None
            raise NotBipartiteError(
                f"{k}-uniform labeling impossible: graph has an odd cycle "
                f"{list(parts.odd_cycle)}",
                parts.odd_cycle,
            )
        a, b = parts.parts  # type: ignore[misc]
        if 0 not in a:
            a, b = b, a
        labels = {}
        for i, v in enumerate(sorted(a)):
            labels[v] = IntSet([i + 1])
        for j, v in enumerate(sorted(b)):
            labels[v] = IntSet(range(j + 1, j + 1 + k))

    bits = 0
    for v in range(g.n):
        bits |= labels[v].bits
    for u, v in g.edges:
        bits |= sumset(labels[u], labels[v]).bits
    result = SetLabeling(g, labels, IntSet.from_bits(bits))
    report = verify(result, "UNIFORM", k)
    assert report.valid, f"k-uniform builder bug:\n{report.summary()}"
    return result
