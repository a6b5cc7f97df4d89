"""Finite abstract simplicial complexes with a fixed total vertex order.

A complex stores every nonempty face as a tuple of vertex labels sorted by
rank (position in the vertex order).  Keeping the full face set makes
membership tests O(1), which the pair-cell constructions downstream depend
on; everything here runs at desk scale.

The vertex order is part of the data, not a per-call argument.  The meshing
cocycles read it, so two complexes with the same faces but different orders
are different objects.  All types are immutable values and all operations
are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices over an ordered vertex set.

    vertices: labels in rank order (rank = index, contiguous from 0).
    faces: every nonempty face, each a tuple sorted by rank.

    The empty complex has dimension -1.  The empty simplex is never stored.
    """

    vertices: tuple
    faces: frozenset

    @cached_property
    def rank(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    @cached_property
    def _by_dim(self) -> dict:
        buckets: dict = {}
        for f in self.faces:
            buckets.setdefault(len(f) - 1, []).append(f)
        rk = self.rank
        return {
            d: tuple(sorted(fs, key=lambda f: tuple(rk[v] for v in f)))
            for d, fs in buckets.items()
        }

    def faces_of_dim(self, k: int) -> tuple:
        return self._by_dim.get(k, ())

    def sort_face(self, vertices) -> tuple:
        rk = self.rank
        vs = tuple(vertices)
        for v in vs:
            if v not in rk:
                raise ValueError(f"unknown vertex {v!r}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in {vs!r}")
        return tuple(sorted(vs, key=rk.__getitem__))

    def __contains__(self, face) -> bool:
        return tuple(face) in self.faces

    def has_face(self, vertices) -> bool:
        try:
            return self.sort_face(vertices) in self.faces
        except ValueError:
            return False

    def maximal_faces(self) -> tuple:
        out = []
        for f in self.faces:
            fs = set(f)
            if not any(fs < set(g) for g in self.faces if len(g) == len(f) + 1):
                out.append(f)
        rk = self.rank
        return tuple(sorted(out, key=lambda f: (len(f), tuple(rk[v] for v in f))))

    def face_counts(self) -> tuple:
        return tuple(len(self.faces_of_dim(k)) for k in range(self.dim + 1))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.faces <= other.faces

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self.faces)

    def validate(self) -> None:
        """Check the structural invariants; raises on violation."""
        rk = self.rank
        if len(rk) != len(self.vertices):
            raise ValueError("repeated vertex label")
        for f in self.faces:
            if not f:
                raise ValueError("empty simplex stored")
            if list(f) != sorted(f, key=rk.__getitem__):
                raise ValueError(f"face {f!r} not sorted by rank")
            if len(set(f)) != len(f):
                raise ValueError(f"face {f!r} has a repeated vertex")
            for i in range(len(f)):
                sub = f[:i] + f[i + 1 :]
                if sub and sub not in self.faces:
                    raise ValueError(f"face closure fails at {f!r} / {sub!r}")
        for v in self.vertices:
            if (v,) not in self.faces:
                raise ValueError(f"vertex {v!r} is not a stored 0-face")


def _closure(simplices) -> set:
    out: set = set()
    for s in simplices:
        n = len(s)
        for r in range(1, n + 1):
            out.update(combinations(s, r))
    return out


def make_complex(faces, vertex_order=None) -> SimplicialComplex:
    """Build the face closure of `faces` with a given or derived vertex order.

    Vertex order defaults to first appearance in the input.
    """
    faces = [tuple(f) for f in faces]
    for f in faces:
        if len(set(f)) != len(f):
            raise ValueError(f"repeated vertex within simplex {f!r}")
    if vertex_order is None:
        seen: dict = {}
        for f in faces:
            for v in f:
                seen.setdefault(v, None)
        vertex_order = tuple(seen)
    else:
        vertex_order = tuple(vertex_order)
        if len(set(vertex_order)) != len(vertex_order):
            raise ValueError("repeated vertex in vertex_order")
        missing = {v for f in faces for v in f} - set(vertex_order)
        if missing:
            raise ValueError(f"vertex_order is missing {sorted(map(repr, missing))}")
    rk = {v: i for i, v in enumerate(vertex_order)}
    closed = {tuple(sorted(f, key=rk.__getitem__)) for f in _closure(faces)}
    used = sorted({v for f in closed for v in f}, key=rk.__getitem__)
    return SimplicialComplex(vertices=tuple(used), faces=frozenset(closed))


def from_maximal_simplices(simplices, vertex_order=None) -> SimplicialComplex:
    return make_complex(simplices, vertex_order)


def from_graph(vertices, edges) -> SimplicialComplex:
    """The graph itself as a 1-dimensional complex (no clique filling)."""
    faces = [(v,) for v in vertices] + [tuple(e) for e in edges]
    return make_complex(faces, vertex_order=tuple(vertices))


def _all_cliques(vertex_order, adjacency):
    """Yield every clique (as a rank-sorted tuple), smaller cliques first.

    Standard max-vertex extension, so each clique appears exactly once.
    """
    rank = {v: i for i, v in enumerate(vertex_order)}
    level = [((v,), {u for u in adjacency[v] if rank[u] > rank[v]}) for v in vertex_order]
    while level:
        for clique, _ in level:
            yield clique
        nxt = []
        for clique, cands in level:
            for u in sorted(cands, key=rank.__getitem__):
                nxt.append((clique + (u,), {w for w in cands & adjacency[u] if rank[w] > rank[u]}))
        level = nxt


def _adjacency(vertices, edges) -> dict:
    adj = {v: set() for v in vertices}
    for e in edges:
        u, v = tuple(e)
        if u == v:
            raise ValueError(f"loop edge {e!r}")
        if u not in adj or v not in adj:
            raise ValueError(f"edge {e!r} uses an unknown vertex")
        adj[u].add(v)
        adj[v].add(u)
    return adj


def flag_completion(vertices, edges) -> SimplicialComplex:
    """The flag complex on a simple graph: faces are the cliques."""
    vertices = tuple(vertices)
    adj = _adjacency(vertices, edges)
    faces = list(_all_cliques(vertices, adj))
    return SimplicialComplex(vertices=vertices, faces=frozenset(faces))


@dataclass(frozen=True)
class FlagWitness:
    """Result of a flag test: `missing_clique` is a minimal non-face whose
    1-skeleton is complete, present exactly when the complex is not flag."""

    complex: SimplicialComplex
    missing_clique: tuple | None

    @property
    def flag(self) -> bool:
        return self.missing_clique is None


def is_flag(K: SimplicialComplex) -> FlagWitness:
    adj = {v: set() for v in K.vertices}
    for e in K.faces_of_dim(1):
        adj[e[0]].add(e[1])
        adj[e[1]].add(e[0])
    # Scan cliques in increasing size; the first non-face found is minimal
    # because every smaller clique was already verified to be a face.
    current_size = 1
    missing: list = []
    for clique in _all_cliques(K.vertices, adj):
        if len(clique) > current_size:
            if missing:
                break
            current_size = len(clique)
        if clique not in K.faces:
            missing.append(clique)
    if missing:
        rk = K.rank
        best = min(missing, key=lambda c: tuple(rk[v] for v in c))
        return FlagWitness(K, best)
    return FlagWitness(K, None)


def link(K: SimplicialComplex, sigma) -> SimplicialComplex:
    s = K.sort_face(sigma)
    if s not in K.faces:
        raise ValueError(f"simplex {sigma!r} is not a face")
    ss = set(s)
    rk = K.rank
    faces = {f for f in K.faces if not (set(f) & ss) and tuple(sorted(f + s, key=rk.__getitem__)) in K.faces}
    verts = tuple(v for v in K.vertices if (v,) in faces)
    return SimplicialComplex(vertices=verts, faces=frozenset(faces))


def star(K: SimplicialComplex, sigma) -> SimplicialComplex:
    """Closed star: all faces of all cofaces of sigma."""
    s = K.sort_face(sigma)
    if s not in K.faces:
        raise ValueError(f"simplex {sigma!r} is not a face")
    rk = K.rank
    faces = {f for f in K.faces if tuple(sorted(set(f) | set(s), key=rk.__getitem__)) in K.faces}
    verts = tuple(v for v in K.vertices if (v,) in faces)
    return SimplicialComplex(vertices=verts, faces=frozenset(faces))


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertex order is A's order followed by B's."""
    if set(A.vertices) & set(B.vertices):
        raise ValueError("join factors must have disjoint vertex sets")
    faces = set(A.faces) | set(B.faces)
    for fa, fb in product(A.faces, B.faces):
        faces.add(fa + fb)
    return SimplicialComplex(vertices=A.vertices + B.vertices, faces=frozenset(faces))


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    faces = frozenset(f for f in K.faces if len(f) - 1 <= k)
    verts = tuple(v for v in K.vertices if (v,) in faces)
    return SimplicialComplex(vertices=verts, faces=faces)


def full_subcomplex(K: SimplicialComplex, vertex_subset) -> SimplicialComplex:
    w = set(vertex_subset)
    faces = frozenset(f for f in K.faces if set(f) <= w)
    verts = tuple(v for v in K.vertices if v in w and (v,) in faces)
    return SimplicialComplex(vertices=verts, faces=faces)


def relabeled(K: SimplicialComplex, mapping) -> SimplicialComplex:
    """Rename vertices through `mapping`, preserving the order."""
    verts = tuple(mapping[v] for v in K.vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("relabeling is not injective")
    faces = frozenset(tuple(mapping[v] for v in f) for f in K.faces)
    return SimplicialComplex(vertices=verts, faces=faces)


def subdivision_vertex(sigma: tuple) -> tuple:
    """Label of the new vertex introduced inside `sigma`."""
    return ("subdiv", sigma)


def partial_barycentric_subdivision(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Subdivide K away from a flag subcomplex L.

    Every simplex of K outside L (of positive dimension) is coned from a
    new interior vertex, by induction on skeleta.  The result is flag and
    contains L as a full subcomplex; L itself is left untouched.

    New vertices rank after all original ones, ordered by (dimension,
    rank tuple) of the simplex they subdivide, so the output is
    deterministic.
    """
    if not L.faces <= K.faces:
        raise ValueError("L is not a subcomplex of K")
    w = is_flag(L)
    if not w.flag:
        raise ValueError(f"L is not flag (missing clique {w.missing_clique!r})")

    memo: dict = {}

    def tops(sigma: tuple) -> tuple:
        """Maximal simplices of the subdivision of `sigma`."""
        if sigma in L.faces or len(sigma) == 1:
            return (sigma,)
        if sigma in memo:
            return memo[sigma]
        apex = subdivision_vertex(sigma)
        boundary = []
        for i in range(len(sigma)):
            boundary.extend(tops(sigma[:i] + sigma[i + 1 :]))
        out = tuple(t + (apex,) for t in boundary)
        memo[sigma] = out
        return out

    top_cells = [t for m in K.maximal_faces() for t in tops(m)]
    rk = K.rank
    new_vertices = sorted(
        {subdivision_vertex(s) for s in memo},
        key=lambda lbl: (len(lbl[1]), tuple(rk[v] for v in lbl[1])),
    )
    order = K.vertices + tuple(new_vertices)
    return make_complex(top_cells, vertex_order=order)
