"""Octahedralization: doubling every vertex of a complex into a signed pair.

A signed vertex is the tuple (base_label, sign) with sign in {-1, +1}.
The vertex order on the doubled complex interleaves the base order:

    v0-, v0+, v1-, v1+, ..., vn-, vn+

and nothing downstream is allowed to use any other order, because the
meshing cocycles read it.  Projection onto the base forgets the sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .complexes import SimplicialComplex, full_subcomplex, make_complex

MINUS = -1
PLUS = +1


def project(face: tuple) -> tuple:
    """Base simplex under the sign-forgetting projection."""
    return tuple(v for v, _s in face)


def signed_lift(face: tuple, signs) -> tuple:
    return tuple((v, s) for v, s in zip(face, signs))


def minus_lift(face: tuple) -> tuple:
    return signed_lift(face, (MINUS,) * len(face))


@dataclass(frozen=True)
class Octahedralization:
    """The doubled complex together with its base and the projection."""

    base: SimplicialComplex
    complex: SimplicialComplex

    @property
    def rank(self) -> dict:
        return self.complex.rank

    def lifts(self, face: tuple) -> tuple:
        """All signed lifts of a base face, in sign-pattern order."""
        return tuple(signed_lift(face, signs) for signs in product((MINUS, PLUS), repeat=len(face)))


def octahedralize(L: SimplicialComplex) -> Octahedralization:
    """Double the vertices of L; a set of signed vertices spans a face
    exactly when its bases are distinct and span a face of L."""
    verts = []
    for v in L.vertices:
        verts.append((v, MINUS))
        verts.append((v, PLUS))
    faces = set()
    for f in L.faces:
        for signs in product((MINUS, PLUS), repeat=len(f)):
            faces.add(signed_lift(f, signs))
    doubled = SimplicialComplex(vertices=tuple(verts), faces=frozenset(faces))
    return Octahedralization(base=L, complex=doubled)


def minus_copy(octa: Octahedralization) -> SimplicialComplex:
    """The full subcomplex on the minus vertices; isomorphic to the base."""
    return full_subcomplex(octa.complex, {(v, MINUS) for v in octa.base.vertices})


@dataclass(frozen=True)
class DoubledComplex:
    """A cycle support doubled over one of its simplices.

    complex: full subcomplex of the octahedralized support on the minus
    copy of the cycle plus both lifts of the chosen simplex.  Keeps back
    references so certificates are self-describing.
    """

    complex: SimplicialComplex
    cycle: frozenset
    delta: tuple
    support: SimplicialComplex
    octa: Octahedralization

    @property
    def degree(self) -> int:
        return len(self.delta) - 1


def double_over(octa: Octahedralization, cycle, delta) -> DoubledComplex:
    """Build the doubled complex for a GF(2) cycle and a simplex in it.

    `cycle` is a set of k-simplices of the base carrying coefficient 1;
    `delta` must be one of them.  Faces of the result are the signed lifts
    of faces of the chain's support whose plus vertices all lie over
    `delta`.  Cycle-ness of the chain is the caller's business (the
    certificate paths check it); the doubling itself is purely structural.
    """
    L = octa.base
    cycle = frozenset(L.sort_face(f) for f in cycle)
    delta = L.sort_face(delta)
    if delta not in cycle:
        raise ValueError("the chosen simplex does not lie in the cycle")
    dims = {len(f) for f in cycle}
    if len(dims) != 1:
        raise ValueError("cycle support must be pure of one dimension")
    if not cycle <= L.faces:
        raise ValueError("cycle contains simplices outside the complex")

    support = make_complex(sorted(cycle), vertex_order=L.vertices)
    delta_set = set(delta)
    faces = set()
    for f in support.faces:
        options = [((v, MINUS), (v, PLUS)) if v in delta_set else ((v, MINUS),) for v in f]
        for lift in product(*options):
            faces.add(lift)
    doubled = SimplicialComplex(
        vertices=tuple(sv for sv in octa.complex.vertices if (sv,) in faces),
        faces=frozenset(faces),
    )
    return DoubledComplex(complex=doubled, cycle=cycle, delta=delta, support=support, octa=octa)
