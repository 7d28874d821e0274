"""
Edge-list graph files and graph helpers.

File format: first line `n=<int>`, then one `i j` edge per line; `#` starts
a comment.
"""
import networkx as nx

from models.errors import PresentationSyntaxError
from models.presentation import Graph


def parse_graph(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0].strip()
        if not raw:
            continue
        if n is None:
            key, sep, value = raw.partition("=")
            if key.strip() != "n" or not sep or not value.strip().isdigit():
                raise PresentationSyntaxError("first line must be 'n=<int>'", line_no, 1)
            n = int(value)
            continue
        parts = raw.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise PresentationSyntaxError("expected an edge 'i j'", line_no, 1)
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise PresentationSyntaxError("missing 'n=<int>' line", 1, 1)
    try:
        return Graph(n=n, edges=edges)
    except ValueError as exc:
        raise PresentationSyntaxError(str(exc), 1, 1) from exc


def serialize_graph(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    shift = g1.n
    edges = list(g1.edges)
    edges += [(i + shift, j + shift) for i, j in g2.edges]
    edges += [(i, j + shift) for i in range(g1.n) for j in range(g2.n)]
    return Graph(n=g1.n + g2.n, edges=edges)


def complete_graph(n: int) -> Graph:
    return Graph(n=n, edges=[(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n=n, edges=[(i, i + 1) for i in range(n - 1)])


def from_networkx(graph: nx.Graph) -> Graph:
    """Relabel nodes to 0..n-1 in sorted order."""
    nodes = sorted(graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(n=len(nodes), edges=[(index[u], index[v]) for u, v in graph.edges()])


def isomorphism_classes(max_vertices: int) -> list[Graph]:
    """One representative per isomorphism class with 1..max_vertices vertices."""
    return [from_networkx(graph) for graph in nx.graph_atlas_g() if 0 < graph.number_of_nodes() <= max_vertices]
