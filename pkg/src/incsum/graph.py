"""Sentence similarity graph: an edge wherever cosine exceeds a threshold."""

from __future__ import annotations

from dataclasses import dataclass, field

from .textcore import Document, cosine_sim

DEFAULT_THRESHOLD = 0.001


@dataclass
class SentenceGraph:
    """Undirected weighted adjacency over sentence indices.

    Edges are keyed (i, j) with i < j; every stored weight is strictly above
    the threshold. Immutable after construction.
    """

    node_count: int
    edges: dict[tuple[int, int], float]
    threshold: float = DEFAULT_THRESHOLD
    _adjacency: list[list[tuple[int, float]]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        adjacency: list[list[tuple[int, float]]] = [[] for _ in range(self.node_count)]
        for (i, j), weight in self.edges.items():
            adjacency[i].append((j, weight))
            adjacency[j].append((i, weight))
        for row in adjacency:
            row.sort()
        self._adjacency = adjacency

    def neighbors(self, i: int) -> list[tuple[int, float]]:
        """Adjacent nodes of i with edge weights, in ascending index order.

        The returned list is shared internal state; callers must not mutate it.
        """
        if not 0 <= i < self.node_count:
            raise IndexError(f"node {i} out of range for graph of {self.node_count} nodes")
        return self._adjacency[i]


def build_graph(doc: Document, threshold: float = DEFAULT_THRESHOLD) -> SentenceGraph:
    """Compare every sentence pair; keep edges with similarity > threshold."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    sentences = doc.sentences
    edges: dict[tuple[int, int], float] = {}
    for i in range(len(sentences)):
        for j in range(i + 1, len(sentences)):
            weight = cosine_sim(sentences[i], sentences[j])
            if weight > threshold:
                edges[(i, j)] = weight
    return SentenceGraph(node_count=len(sentences), edges=edges, threshold=threshold)


def dump_edges(g: SentenceGraph) -> str:
    """Tab-separated "i j weight" lines, ascending (i, j)."""
    lines = [f"{i}\t{j}\t{w!r}" for (i, j), w in sorted(g.edges.items())]
    return "\n".join(lines) + ("\n" if lines else "")
