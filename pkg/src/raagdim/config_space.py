"""Deleted products and configuration spaces of a simplicial complex.

The simplicial deleted product is the regular cell complex of ordered
pairs (sigma, tau) of disjoint closed simplices, with the product boundary

    d(sigma x tau) = d(sigma) x tau + (-1)^dim(sigma) sigma x d(tau).

The configuration space is its quotient by the factor swap, which acts on
an oriented product cell with the sign (-1)^(dim sigma * dim tau).  Cells
of the quotient are unordered pairs; the stored representative puts the
simplex with the lower-ranked minimal vertex first, and every sign in the
quotient boundary is derived from that single convention.

Chains are plain dicts {cell: int}; GF(2) chains are frozensets of cells.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex
from .homology import simplex_boundary


def pair_cell_boundary(cell):
    """Signed boundary of an ordered product cell (a, b)."""
    a, b = cell
    out = []
    for sub, sign in simplex_boundary(a):
        out.append(((sub, b), sign))
    flip = (-1) ** (len(a) - 1)
    for sub, sign in simplex_boundary(b):
        out.append(((a, sub), flip * sign))
    return out


def chain_boundary(chain, boundary_fn, mod: int | None = None) -> dict:
    """Boundary of a chain given a per-cell boundary function."""
    items = chain.items() if isinstance(chain, dict) else ((c, 1) for c in chain)
    acc: dict = {}
    for cell, coeff in items:
        for sub, sign in boundary_fn(cell):
            acc[sub] = acc.get(sub, 0) + coeff * sign
    if mod:
        return {c: v % mod for c, v in acc.items() if v % mod}
    return {c: v for c, v in acc.items() if v}


class DeletedProduct:
    """Ordered disjoint pairs of simplices of K, as a cell complex."""

    def __init__(self, K: SimplicialComplex):
        self.K = K

    @property
    def dim(self) -> int:
        return max((d for d in range(2 * self.K.dim + 1) if self.cells_of_degree(d)), default=-1)

    def cells_of_degree(self, d: int):
        cells = []
        for i in range(d + 1):
            j = d - i
            for a in self.K.faces_of_dim(i):
                sa = set(a)
                for b in self.K.faces_of_dim(j):
                    if not (sa & set(b)):
                        cells.append((a, b))
        return tuple(cells)

    @staticmethod
    def boundary(cell):
        return pair_cell_boundary(cell)


class ConfigurationSpace:
    """Unordered disjoint pairs {sigma, tau}; the quotient cell complex."""

    def __init__(self, K: SimplicialComplex):
        self.K = K
        self._cells: dict = {}

    def canonical(self, a: tuple, b: tuple):
        """Canonical representative and the sign relating (a, b) to it."""
        rk = self.K.rank
        if rk[a[0]] < rk[b[0]]:
            return (a, b), 1
        return (b, a), (-1) ** ((len(a) - 1) * (len(b) - 1))

    def cell_key(self, cell):
        rk = self.K.rank
        a, b = cell
        return (len(a), len(b), tuple(rk[v] for v in a), tuple(rk[v] for v in b))

    def cells_of_degree(self, d: int) -> tuple:
        if d in self._cells:
            return self._cells[d]
        found = []
        for i in range(d + 1):
            j = d - i
            if i < j:
                continue
            fi = self.K.faces_of_dim(i)
            fj = self.K.faces_of_dim(j)
            if i > j:
                for a in fi:
                    sa = set(a)
                    for b in fj:
                        if not (sa & set(b)):
                            found.append(self.canonical(a, b)[0])
            else:
                for a, b in combinations(fi, 2):
                    if not (set(a) & set(b)):
                        found.append(self.canonical(a, b)[0])
        cells = tuple(sorted(found, key=self.cell_key))
        self._cells[d] = cells
        return cells

    @property
    def top_degree(self) -> int:
        return max((d for d in range(2 * self.K.dim + 1) if self.cells_of_degree(d)), default=-1)

    def contains(self, cell) -> bool:
        a, b = cell
        return a in self.K.faces and b in self.K.faces and not (set(a) & set(b))

    def boundary(self, cell):
        acc: dict = {}
        for (a, b), sign in pair_cell_boundary(cell):
            rep, flip = self.canonical(a, b)
            acc[rep] = acc.get(rep, 0) + sign * flip
        return tuple((c, v) for c, v in sorted(acc.items(), key=lambda cv: self.cell_key(cv[0])) if v)

    def count_cells_up_to(self, limit: int):
        """Total cell count across degrees, or None once `limit` is passed."""
        total = 0
        for d in range(2 * self.K.dim + 1):
            total += len(self.cells_of_degree(d))
            if total > limit:
                return None
        return total


def transfer(chain, space: ConfigurationSpace) -> dict:
    """Lift a quotient chain back to the ordered deleted product.

    Each unordered cell maps to the sum of its two ordered representatives,
    the swapped one carrying the orientation sign of the swap.
    """
    items = chain.items() if isinstance(chain, dict) else ((c, 1) for c in chain)
    out: dict = {}
    for (a, b), coeff in items:
        sign = (-1) ** ((len(a) - 1) * (len(b) - 1))
        out[(a, b)] = out.get((a, b), 0) + coeff
        out[(b, a)] = out.get((b, a), 0) + sign * coeff
    return {c: v for c, v in out.items() if v}
