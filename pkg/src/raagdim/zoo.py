"""Generator zoo: named families of small complexes with expected values.

Every expected value carries the name of the rule that predicts it, so the
test suite can assert provenance alongside the number.  Randomized
families are deterministic functions of their seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, flag_completion, from_maximal_simplices, join, relabeled


def simplex(k: int) -> SimplicialComplex:
    return from_maximal_simplices([tuple(f"v{i}" for i in range(k + 1))])


def points(n: int) -> SimplicialComplex:
    return from_maximal_simplices([(f"p{i}",) for i in range(n)])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = [f"c{i}" for i in range(n)]
    return from_maximal_simplices([(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n: int) -> SimplicialComplex:
    vs = [f"p{i}" for i in range(n)]
    if n == 1:
        return from_maximal_simplices([(vs[0],)])
    return from_maximal_simplices([(vs[i], vs[i + 1]) for i in range(n - 1)])


def tree(n: int, seed: int = 0) -> SimplicialComplex:
    """Random labelled tree from a seeded Pruefer sequence."""
    if n == 1:
        return points(1)
    if n == 2:
        return path(2)
    rng = random.Random(seed)
    pruefer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in pruefer:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for x in pruefer:
        leaf = heapq.heappop(leaves)
        edges.append((f"t{leaf}", f"t{x}"))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)
    edges.append((f"t{u}", f"t{v}"))
    return from_maximal_simplices([(f"t{i}",) for i in range(n)] + edges)


def octahedron_boundary(k: int) -> SimplicialComplex:
    """Join of k+1 two-point sets: the k-dimensional cross-polytope boundary."""
    out = None
    for i in range(k + 1):
        part = from_maximal_simplices([(f"o{i}a",), (f"o{i}b",)])
        out = part if out is None else join(out, part)
    return out


def cone(K: SimplicialComplex, apex: str = "apex") -> SimplicialComplex:
    return join(from_maximal_simplices([(apex,)]), _prefixed(K, "c."))


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    poles = from_maximal_simplices([("north",), ("south",)])
    return join(poles, _prefixed(K, "s."))


def random_flag(n: int, p: float, seed: int) -> SimplicialComplex:
    rng = random.Random(seed)
    vs = [f"r{i}" for i in range(n)]
    edges = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return flag_completion(vs, edges)


def _prefixed(K: SimplicialComplex, prefix: str) -> SimplicialComplex:
    return relabeled(K, {v: f"{prefix}{v}" for v in K.vertices})


@dataclass(frozen=True)
class ZooEntry:
    """A named generator with its expected report values.

    `expected` maps quantity names to (value, rule) pairs; rules name the
    bound machinery that certifies the value.
    """

    name: str
    build: object
    expected: dict = field(default_factory=dict)
    flag: bool = True

    def complex(self) -> SimplicialComplex:
        return self.build()


ZOO = (
    ZooEntry("point", lambda: points(1),
             expected={"actdim": (1, "free-abelian"), "vkdim": (-1, "octahedral-sphere")}),
    ZooEntry("points2", lambda: points(2),
             expected={"actdim": (2, "obstructor"), "vkdim": (0, "covering-chain-certificate")}),
    ZooEntry("points3", lambda: points(3),
             expected={"actdim": (2, "obstructor"), "vkdim": (0, "covering-chain-certificate")}),
    ZooEntry("edge", lambda: simplex(1),
             expected={"actdim": (2, "free-abelian"), "vkdim": (0, "octahedral-sphere")}),
    ZooEntry("simplex2", lambda: simplex(2),
             expected={"actdim": (3, "free-abelian"), "vkdim": (1, "octahedral-sphere")}),
    ZooEntry("path3", lambda: path(3),
             expected={"actdim": (3, "obstructor"), "vkdim": (1, "star-link")}),
    ZooEntry("path4", lambda: path(4),
             expected={"actdim": (3, "obstructor"), "vkdim": (1, "star-link")}),
    ZooEntry("path5", lambda: path(5),
             expected={"actdim": (3, "obstructor"), "vkdim": (1, "star-link")}),
    ZooEntry("tree6", lambda: tree(6, seed=0),
             expected={"actdim": (3, "obstructor"), "vkdim": (1, "star-link")}),
    ZooEntry("cycle4", lambda: cycle(4),
             expected={"actdim": (4, "obstructor"), "vkdim": (2, "covering-chain-certificate")}),
    ZooEntry("cycle5", lambda: cycle(5),
             expected={"actdim": (4, "obstructor"), "vkdim": (2, "covering-chain-certificate")}),
    ZooEntry("cycle6", lambda: cycle(6),
             expected={"actdim": (4, "obstructor"), "vkdim": (2, "covering-chain-certificate")}),
    ZooEntry("cycle3", lambda: cycle(3), flag=False,
             expected={"vkdim": (1, "star-link")}),
    ZooEntry("octahedron1", lambda: octahedron_boundary(1),
             expected={"actdim": (4, "obstructor"), "vkdim": (2, "covering-chain-certificate")}),
    ZooEntry("octahedron2", lambda: octahedron_boundary(2),
             expected={"actdim": (6, "obstructor"), "vkdim": (4, "covering-chain-certificate")}),
    ZooEntry("cone_c4", lambda: cone(cycle(4)),
             expected={"vkdim": (3, "star-link")}),
    ZooEntry("suspension_c4", lambda: suspension(cycle(4)),
             expected={"actdim": (6, "obstructor"), "vkdim": (4, "covering-chain-certificate")}),
    ZooEntry("random_flag_a", lambda: random_flag(7, 0.4, seed=11)),
    ZooEntry("random_flag_b", lambda: random_flag(8, 0.35, seed=23)),
)


GENERATORS = {
    "simplex": simplex,
    "points": points,
    "cycle": cycle,
    "path": path,
    "tree": tree,
    "octahedron_boundary": octahedron_boundary,
    "random_flag": random_flag,
}


def build_named(expr: str) -> SimplicialComplex:
    """Build a complex from an expression like 'cycle(4)' or
    'join(points(2),points(2))'; joins relabel factors to stay disjoint."""
    expr = expr.strip()
    if "(" not in expr:
        entry = next((e for e in ZOO if e.name == expr), None)
        if entry is None:
            raise ValueError(f"unknown zoo entry {expr!r}")
        return entry.complex()
    name, _, rest = expr.partition("(")
    if not rest.endswith(")"):
        raise ValueError(f"unbalanced parentheses in {expr!r}")
    body = rest[:-1]
    name = name.strip()
    if name == "join":
        parts = _split_args(body)
        if len(parts) < 2:
            raise ValueError("join needs at least two factors")
        out = None
        for i, part in enumerate(parts):
            factor = _prefixed(build_named(part), f"j{i}.")
            out = factor if out is None else join(out, factor)
        return out
    if name == "cone":
        return cone(build_named(body))
    if name == "suspension":
        return suspension(build_named(body))
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    args = [a for a in _split_args(body) if a]
    values = []
    for a in args:
        try:
            values.append(int(a))
        except ValueError:
            values.append(float(a))
    return GENERATORS[name](*values)


def _split_args(body: str) -> list:
    parts = []
    depth = 0
    cur = []
    for ch in body:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    if cur or not parts:
        parts.append("".join(cur).strip())
    return parts
