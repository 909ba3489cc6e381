"""Set-labelings of graphs, induced edge labels, and validity verdicts.

A labeling assigns each vertex a non-empty subset of a declared ground set;
the label of an edge uv is the sumset f(u) + f(v) and is always derived,
never stored.  `verify` checks a labeling against one of the classes:

  IASL      injective non-empty vertex labels, all vertex and edge labels
            inside the ground set
  IASI      IASL with injective edge labels
  WIASL     IASL where every edge label's cardinality equals the larger
            endpoint cardinality (equivalently: every edge has a
            singleton-labeled endpoint)
  WIASI     WIASL with injective edge labels
  UNIFORM   WIASL whose edge labels all have cardinality exactly k
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .graphs import Graph
from .intset import IntSet, sumset

CLASSES = ("IASL", "IASI", "WIASL", "WIASI", "UNIFORM")

MAX_REPORTED_VIOLATIONS = 64


class NotAnEdgeError(ValueError):
    """edge_label was asked about a vertex pair that is not an edge."""


class InvalidLabelingError(ValueError):
    """An operation required a valid labeling and got an invalid one."""


@dataclass(frozen=True)
class SetLabeling:
    """A graph, one IntSet per vertex, and the declared ground set."""

    graph: Graph
    vertex_labels: Mapping[int, IntSet]
    ground_set: IntSet

    def __post_init__(self) -> None:
        missing = [v for v in range(self.graph.n) if v not in self.vertex_labels]
        if missing:
            raise ValueError(f"vertices without labels: {missing}")
        extra = [v for v in self.vertex_labels if not 0 <= v < self.graph.n]
        if extra:
            raise ValueError(f"labels for unknown vertices: {extra}")

    def label(self, v: int) -> IntSet:
        return self.vertex_labels[v]

    def with_ground_set(self, ground: IntSet) -> "SetLabeling":
        return SetLabeling(self.graph, dict(self.vertex_labels), ground)


def edge_label(f: SetLabeling, u: int, v: int) -> IntSet:
    """Induced label of edge uv: the sumset f(u) + f(v)."""
    if not f.graph.has_edge(u, v):
        raise NotAnEdgeError(f"({u},{v}) is not an edge")
    return sumset(f.label(u), f.label(v))


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    checked_class: str
    violations: tuple[Violation, ...] = field(default_factory=tuple)
    truncated: bool = False

    @property
    def valid(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.valid:
            return f"valid {self.checked_class}"
        head = f"invalid {self.checked_class} ({len(self.violations)} violation(s)"
        head += ", truncated)" if self.truncated else ")"
        lines = [head]
        for v in self.violations:
            lines.append(f"  {v.rule} at {v.witness}: {v.detail}")
        return "\n".join(lines)


def verify(
    f: SetLabeling,
    labeling_class: str = "WIASL",
    k: int | None = None,
    *,
    max_violations: int = MAX_REPORTED_VIOLATIONS,
) -> VerifyReport:
    """Check f against a labeling class; report every violation (capped).

    Invalidity is a report, not an error.  For UNIFORM a positive k is
    required and the reported class reads like "2-uniform".
    """
    if labeling_class not in CLASSES:
        raise ValueError(f"unknown labeling class {labeling_class!r}")
    if labeling_class == "UNIFORM":
        if k is None or k < 1:
            raise ValueError("UNIFORM verification needs k >= 1")
        shown = f"{k}-uniform"
    else:
        shown = labeling_class

    violations: list[Violation] = []
    truncated = False

    def add(rule: str, witness: tuple[int, ...], detail: str) -> bool:
        nonlocal truncated
        if len(violations) >= max_violations:
            truncated = True
            return False
        violations.append(Violation(rule, witness, detail))
        return True

    ground = f.ground_set
    want_card = labeling_class in ("WIASL", "WIASI", "UNIFORM")
    want_edge_injective = labeling_class in ("IASI", "WIASI")

    for v in range(f.graph.n):
        lab = f.label(v)
        if not lab:
            add("empty-label", (v,), "vertex label is empty")
        elif not lab.issubset(ground):
            add(
                "label-not-in-ground",
                (v,),
                f"label {lab.to_list()} not a subset of ground set",
            )

    seen: dict[int, int] = {}
    for v in range(f.graph.n):
        bits = f.label(v).bits
        if bits in seen:
            add(
                "labels-not-injective",
                (seen[bits], v),
                f"both labeled {f.label(v).to_list()}",
            )
        else:
            seen[bits] = v

    edge_labels: dict[tuple[int, int], IntSet] = {}
    for u, v in f.graph.sorted_edges():
        lu, lv = f.label(u), f.label(v)
        if not lu or not lv:
            continue  # already reported as empty-label
        lab = sumset(lu, lv)
        edge_labels[(u, v)] = lab
        if not lab.issubset(ground):
            add(
                "edge-label-not-in-ground",
                (u, v),
                f"edge label {lab.to_list()} not a subset of ground set",
            )
        if want_card and len(lab) != max(len(lu), len(lv)):
            add(
                "edge-cardinality",
                (u, v),
                f"|label|={len(lab)}, expected max(|f(u)|,|f(v)|)="
                f"{max(len(lu), len(lv))}",
            )
        if labeling_class == "UNIFORM" and len(lab) != k:
            add("edge-not-uniform", (u, v), f"|label|={len(lab)}, expected k={k}")

    if want_edge_injective:
        first: dict[int, tuple[int, int]] = {}
        for e, lab in edge_labels.items():
            if lab.bits in first:
                add(
                    "edge-labels-not-injective",
                    first[lab.bits] + e,
                    f"edges share label {lab.to_list()}",
                )
            else:
                first[lab.bits] = e

    return VerifyReport(shown, tuple(violations), truncated)


def minimal_ground_set(f: SetLabeling) -> IntSet:
    """Union of all vertex labels and all induced edge labels.

    This is the smallest ground set under which f keeps its verdict.
    """
    bits = 0
    for v in range(f.graph.n):
        bits |= f.label(v).bits
    for u, v in f.graph.edges:
        lu, lv = f.label(u), f.label(v)
        if lu and lv:
            bits |= sumset(lu, lv).bits
    return IntSet.from_bits(bits)


def singleton_cover(f: SetLabeling) -> frozenset[int]:
    """Vertices carrying singleton labels, for a WIASL-valid labeling.

    For any valid weak labeling these vertices form a vertex cover (every
    edge needs a singleton endpoint to satisfy the cardinality equation);
    that is asserted before returning.
    """
    report = verify(f, "WIASL")
    if not report.valid:
        raise InvalidLabelingError(
            f"singleton_cover needs a WIASL-valid labeling:\n{report.summary()}"
        )
    singles = frozenset(v for v in range(f.graph.n) if len(f.label(v)) == 1)
    for u, v in f.graph.edges:
        assert u in singles or v in singles, "singleton set must cover every edge"
    return singles


def iter_edge_labels(f: SetLabeling) -> Iterator[tuple[tuple[int, int], IntSet]]:
    for u, v in f.graph.sorted_edges():
        yield (u, v), edge_label(f, u, v)


def labeling_to_json(f: SetLabeling, labeling_class: str = "WIASL") -> dict:
    from .graphs import graph_to_json

    return {
        "graph": graph_to_json(f.graph),
        "labels": {str(v): f.label(v).to_list() for v in range(f.graph.n)},
        "ground_set": f.ground_set.to_list(),
        "class": labeling_class,
    }


def labeling_from_json(data: dict) -> tuple[SetLabeling, str]:
    from .graphs import graph_from_json

    g = graph_from_json(data["graph"])
    labels = {int(v): IntSet(vals) for v, vals in data["labels"].items()}
    ground = IntSet(data["ground_set"])
    return SetLabeling(g, labels, ground), data.get("class", "WIASL")
