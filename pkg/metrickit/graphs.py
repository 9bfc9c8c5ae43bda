"""
Path-length distance on connected graphs, unweighted and weighted
"""

import math
import heapq
import logging
from collections import deque

from .config import SETTINGS
from .errors import GraphError, DisconnectedGraphError, InvalidVertexError, MissingWeightError, InputError
from .utilities import make_rng

logger = logging.getLogger(__name__)

def _edge(v, w):
    return (v, w) if v < w else (w, v)

class Graph():
    """
    Undirected graph on the vertices 0, ..., n - 1 with optional positive
    edge weights
    """

    def __init__(self, vertex_count, edges=(), weights=None):
        """
        Keywords
        --------
        vertex_count : int
            Number of vertices
        edges : iterable of pairs
            Unordered pairs of distinct vertices
        weights : dict or None
            Maps each edge (in either orientation) to a positive weight
        """

        if isinstance(vertex_count, bool) or not isinstance(vertex_count, int) or vertex_count < 1:
            raise GraphError(f'A graph needs a positive vertex count, got {vertex_count!r}')
        self._vertex_count = vertex_count

        normalized = set()
        for pair in edges:
            if len(pair) != 2:
                raise GraphError(f'An edge joins exactly two vertices, got {pair!r}')
            v, w = (self._check_vertex(vertex) for vertex in pair)
            if v == w:
                raise GraphError(f'Self-loop at vertex {v}')
            edge = _edge(v, w)
            if edge in normalized:
                raise GraphError(f'Duplicate edge {edge}')
            normalized.add(edge)
        self._edges = frozenset(normalized)

        self._weights = None
        if weights is not None:
            self._weights = {}
            for pair, weight in weights.items():
                edge = _edge(*(self._check_vertex(vertex) for vertex in pair))
                if edge not in self._edges:
                    raise GraphError(f'Weight given for a missing edge {edge}')
                if edge in self._weights:
                    raise GraphError(f'Weight given twice for edge {edge}')
                weight = float(weight)
                if not (math.isfinite(weight) and weight > 0):
                    raise GraphError(f'Edge {edge} has a nonpositive weight {weight}')
                self._weights[edge] = weight
            missing = self._edges - set(self._weights)
            if missing:
                raise MissingWeightError(f'Edges without a weight: {sorted(missing)}')

        self._neighbours = {vertex: [] for vertex in range(vertex_count)}
        for v, w in sorted(self._edges):
            self._neighbours[v].append(w)
            self._neighbours[w].append(v)

        return

    def _check_vertex(self, vertex):
        if isinstance(vertex, bool) or not isinstance(vertex, int) or not 0 <= vertex < self._vertex_count:
            raise InvalidVertexError(f'{vertex!r} is not a vertex of a graph with {self._vertex_count} vertices')
        return vertex

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def edges(self):
        return self._edges

    @property
    def weights(self):
        return None if self._weights is None else dict(self._weights)

    @property
    def weighted(self):
        return self._weights is not None

    def neighbours(self, vertex):
        return list(self._neighbours[self._check_vertex(vertex)])

    def weight(self, v, w):
        if self._weights is None:
            raise MissingWeightError('The graph carries no edge weights')
        return self._weights[_edge(v, w)]

    def with_unit_weights(self):
        return Graph(self._vertex_count, self._edges, {edge: 1.0 for edge in self._edges})

    @classmethod
    def from_json(cls, document):
        """
        Build a graph from {"n": int, "edges": [[u, v], ...], "weights": {"u-v": w}}
        """

        try:
            n = document['n']
            edges = [tuple(edge) for edge in document.get('edges', [])]
            weights = None
            if document.get('weights') is not None:
                weights = {}
                for key, value in document['weights'].items():
                    u, v = key.split('-')
                    weights[(int(u), int(v))] = value
        except (KeyError, TypeError, AttributeError, ValueError) as error:
            raise InputError(f'Malformed graph document: {error}') from None

        return cls(n, edges, weights)

    def to_json(self):
        document = {
            'n'     : self._vertex_count,
            'edges' : [list(edge) for edge in sorted(self._edges)]
        }
        if self._weights is not None:
            document['weights'] = {f'{v}-{w}': weight for (v, w), weight in sorted(self._weights.items())}

        return document

    def __repr__(self):
        return f'Graph(n={self._vertex_count}, edges={len(self._edges)}, weighted={self.weighted})'

def _breadth_first(g, source):
    """
    Hop counts from source to every reachable vertex
    """

    hops = {source: 0}
    frontier = deque([source])
    while frontier:
        vertex = frontier.popleft()
        for neighbour in g.neighbours(vertex):
            if neighbour not in hops:
                hops[neighbour] = hops[vertex] + 1
                frontier.append(neighbour)

    return hops

def is_connected(g):
    """
    Whether every vertex is reachable from vertex 0
    """

    return len(_breadth_first(g, 0)) == g.vertex_count

def _require_connected(g):
    if not is_connected(g):
        raise DisconnectedGraphError(f'{g!r} is not connected, so its path distance is undefined')

def graph_distance(g, v, w):
    """
    Fewest edges on a path from v to w
    """

    g._check_vertex(v)
    g._check_vertex(w)
    _require_connected(g)

    return _breadth_first(g, v)[w]

def _shortest_weights(g, source):
    """
    Smallest total weight from source to every vertex (priority-queue search)
    """

    best = {source: 0.0}
    heap = [(0.0, source)]
    settled = set()
    while heap:
        total, vertex = heapq.heappop(heap)
        if vertex in settled:
            continue
        settled.add(vertex)
        for neighbour in g.neighbours(vertex):
            candidate = total + g.weight(vertex, neighbour)
            if neighbour not in best or candidate < best[neighbour]:
                best[neighbour] = candidate
                heapq.heappush(heap, (candidate, neighbour))

    return best

def weighted_graph_distance(g, v, w):
    """
    Smallest total edge weight on a path from v to w
    """

    if not g.weighted:
        raise MissingWeightError('weighted_graph_distance needs a weight on every edge')
    g._check_vertex(v)
    g._check_vertex(w)
    _require_connected(g)

    return _shortest_weights(g, v)[w]

def distance_matrix(g, weighted=False):
    """
    All-pairs distances as a list of rows
    """

    _require_connected(g)
    search = _shortest_weights if weighted else _breadth_first
    if weighted and not g.weighted:
        raise MissingWeightError('The graph carries no edge weights')

    rows = []
    for source in range(g.vertex_count):
        reached = search(g, source)
        rows.append([reached[target] for target in range(g.vertex_count)])

    return rows

def random_connected_graph(n, rng=None, edge_probability=None, weighted=False):
    """
    Random spanning tree plus independent extra edges
    """

    rng = make_rng(rng)
    if edge_probability is None:
        edge_probability = SETTINGS['graphs']['edge_probability']

    order = [int(vertex) for vertex in rng.permutation(n)]
    edges = set()
    for index in range(1, n):
        parent = order[int(rng.integers(0, index))]
        edges.add(_edge(order[index], parent))
    for v in range(n):
        for w in range(v + 1, n):
            if (v, w) not in edges and rng.uniform() < edge_probability:
                edges.add((v, w))

    weights = None
    if weighted:
        weights = {edge: float(rng.uniform(0.1, 10.0)) for edge in sorted(edges)}
    logger.debug(f'Random connected graph with {n} vertices and {len(edges)} edges')

    return Graph(n, sorted(edges), weights)
