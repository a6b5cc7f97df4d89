"""Dimension bound engine for right-angled Artin groups.

Given a flag complex L, combines exact homology, nonvanishing certificates,
coboundary solves, the join formula and the star/link recursion into
certified intervals for the van Kampen dimension of the octahedralization,
the embedding dimension, and the action dimension of the associated group.
Every emitted bound re-checks its hypothesis and carries a named rule;
bounds resting on an unprovable step carry caveats and, when the step is
genuinely open (the dimension-2 completeness gap), stay out of the
certified interval.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, is_flag, link
from .homology import mod2_betti, rational_betti
from .obstruction import CycleCertificate, VanishingResult, certify_nonvanishing, certify_vanishing

CAVEAT_DIM2_INCOMPLETE = "top-obstruction-incomplete-in-dim-2"
CAVEAT_CODIMENSION = "codimension-hypothesis-unverified"
CAVEAT_MOD2_ONLY = "mod-2-vanishing-only"


@dataclass(frozen=True)
class BoundRecord:
    quantity: str  # 'vkdim' | 'embdim' | 'actdim'
    kind: str  # 'lower' | 'upper'
    value: int
    rule: str
    detail: str
    caveats: tuple = ()
    in_interval: bool = True

    def to_json(self) -> dict:
        return {
            "quantity": self.quantity,
            "kind": self.kind,
            "value": self.value,
            "rule": self.rule,
            "detail": self.detail,
            "caveats": list(self.caveats),
            "certified": self.in_interval,
        }


@dataclass(frozen=True)
class DimensionReport:
    vertices: int
    dim: int
    flag: bool
    missing_clique: tuple | None
    gd: int
    l2dim: int | None
    mod2_betti: tuple
    rational_betti: tuple
    vkdim: tuple
    embdim: tuple
    actdim: tuple | None
    conjecture_status: str | None
    records: tuple
    certificate: CycleCertificate | None
    sub_certificates: tuple
    vanishing: VanishingResult | None
    warnings: tuple = ()

    @property
    def determined(self) -> bool:
        spans = [self.vkdim, self.embdim] + ([self.actdim] if self.flag else [])
        return all(s is not None and s[0] == s[1] for s in spans)


def geometric_dimension(L: SimplicialComplex) -> int:
    """dim L + 1 for a nonempty L; the trivial group gets 0."""
    if L.dim < 0:
        return 0
    return L.dim + 1


def l2_dimension(L: SimplicialComplex) -> int | None:
    """1 + the top degree with nonzero reduced rational homology, or None
    when every reduced Betti number vanishes."""
    betti = rational_betti(L)
    nonzero = [i for i, b in enumerate(betti) if b]
    if not nonzero:
        return None
    return 1 + max(nonzero)


def join_lemma_bound(interval_a, interval_b) -> tuple:
    """Interval arithmetic for the join formula: dimensions add plus two."""
    (la, ua), (lb, ub) = interval_a, interval_b
    return (la + lb + 2, ua + ub + 2)


def is_full_simplex(L: SimplicialComplex) -> bool:
    return L.dim >= 0 and len(L.vertices) == L.dim + 1


def vkdim_lower(L: SimplicialComplex, depth: int = 3, search_budget: int = 2, _cache=None):
    """Certified lower bound for the van Kampen dimension of the
    octahedralization, from certificates in all degrees and the star/link
    recursion over vertices (capped at `depth`).

    Returns (value, explanation).  The floor for a nonempty complex is -1
    (the octahedralization of a vertex is a 0-sphere).
    """
    if _cache is None:
        _cache = {}
    if L in _cache:
        return _cache[L]
    if L.dim < 0:
        return None, "empty complex"
    best = (-1, "sphere floor: the doubled vertex pair")
    if is_full_simplex(L):
        best = (L.dim - 1, f"octahedral sphere of dimension {L.dim}")
    for degree in range(L.dim, -1, -1):
        if 2 * degree <= best[0]:
            break
        cert = certify_nonvanishing(L, degree, search_budget=search_budget)
        if cert is not None:
            if 2 * degree > best[0]:
                best = (2 * degree, f"covering-chain certificate in degree {degree}")
            break
    if depth > 0:
        for v in L.vertices:
            lk = link(L, (v,))
            if lk.dim < 0:
                continue
            sub, why = vkdim_lower(lk, depth - 1, search_budget, _cache)
            cand = sub + 1
            if cand > best[0]:
                best = (cand, f"star/link at vertex {v!r}: link gives {sub} ({why})")
    _cache[L] = best
    return best


def star_link_bound(L: SimplicialComplex, vertex, depth: int = 3, search_budget: int = 2):
    """Lower bound on the octahedralization's van Kampen dimension through
    one vertex star: the link bound plus one."""
    lk = link(L, (vertex,))
    if lk.dim < 0:
        return -1, "isolated vertex: bare 0-sphere"
    sub, why = vkdim_lower(lk, depth - 1, search_budget)
    return sub + 1, why


def analyze(
    L: SimplicialComplex,
    allow_non_flag: bool = False,
    search_budget: int = 2,
    star_depth: int = 3,
    integral: bool = False,
    max_cells: int = 10**6,
) -> DimensionReport:
    """Assemble the full dimension report for a complex.

    Flag complexes get group-level conclusions; non-flag inputs (accepted
    only when `allow_non_flag`) get the octahedralization bounds and a
    warning, since the group dictionary needs flagness.
    """
    if L.dim < 0:
        raise ValueError("empty complex: the associated group is trivial")
    witness = is_flag(L)
    if not witness.flag and not allow_non_flag:
        raise ValueError(
            f"complex is not flag (missing clique {witness.missing_clique!r}); "
            "pass allow_non_flag to analyze the octahedralization only"
        )
    warnings: list = []
    records: list = []
    k = L.dim
    gd = geometric_dimension(L)
    l2 = l2_dimension(L)
    betti2 = mod2_betti(L)
    bettiq = rational_betti(L)

    # --- van Kampen dimension of the octahedralization -----------------
    vk_lo = -1
    vk_hi = 2 * k
    records.append(BoundRecord("vkdim", "upper", 2 * k,
                               "top-degree", "pair cells stop at twice the complex dimension"))
    sphere = is_full_simplex(L)
    if sphere:
        vk_lo = max(vk_lo, k - 1)
        vk_hi = min(vk_hi, k - 1)
        records.append(BoundRecord("vkdim", "lower", k - 1, "octahedral-sphere",
                                   f"the octahedralization is the {k}-sphere"))
        records.append(BoundRecord("vkdim", "upper", k - 1, "octahedral-sphere",
                                   f"the octahedralization is the {k}-sphere"))

    certificate = certify_nonvanishing(L, k, search_budget=search_budget)
    if certificate is not None:
        vk_lo = max(vk_lo, 2 * k)
        records.append(BoundRecord("vkdim", "lower", 2 * k, "covering-chain-certificate",
                                   "top cocycle pairs to 1 with the certificate cycle"))

    sub_certs: list = []
    if certificate is None:
        for degree in range(k - 1, -1, -1):
            if 2 * degree <= vk_lo:
                break
            c = certify_nonvanishing(L, degree, search_budget=search_budget)
            if c is not None:
                sub_certs.append(c)
                vk_lo = max(vk_lo, 2 * degree)
                records.append(BoundRecord("vkdim", "lower", 2 * degree,
                                           "covering-chain-certificate",
                                           f"certificate on the {degree}-skeleton"))
                break

    if star_depth > 0:
        cache: dict = {}
        for v in L.vertices:
            lk = link(L, (v,))
            if lk.dim < 0:
                continue
            sub, why = vkdim_lower(lk, star_depth - 1, search_budget, cache)
            cand = sub + 1
            if cand > vk_lo:
                vk_lo = cand
                records.append(BoundRecord("vkdim", "lower", cand, "star-link",
                                           f"link of {v!r} gives {sub}: {why}"))

    vanishing = None
    if certificate is None and k >= 1:
        vanishing = certify_vanishing(L, integral=integral, max_cells=max_cells)
        if vanishing.status == "primitive":
            vk_hi = min(vk_hi, 2 * k - 1)
            records.append(BoundRecord("vkdim", "upper", 2 * k - 1, "top-cocycle-coboundary",
                                       "the top cocycle is a coboundary mod 2"))
        elif vanishing.status == "obstructed":
            vk_lo = max(vk_lo, 2 * k)
            records.append(BoundRecord("vkdim", "lower", 2 * k, "cocycle-pairing-witness",
                                       "unsolvability witness cycle pairs to 1"))
        else:
            warnings.append(f"coboundary solve skipped: {vanishing.reason}")

    vanished = vanishing is not None and vanishing.status == "primitive"
    top_h_zero = k < 0 or (betti2[k] == 0 if k < len(betti2) else True)

    # --- embedding dimension of the octahedralization ------------------
    emb_lo = vk_lo + 1
    records.append(BoundRecord("embdim", "lower", emb_lo, "embdim-above-vkdim",
                               "embedding dimension exceeds the van Kampen dimension"))
    if sphere:
        emb_hi = k
        records.append(BoundRecord("embdim", "upper", emb_hi, "octahedral-sphere",
                                   "a sphere embeds in itself"))
        emb_lo = max(emb_lo, emb_hi)
    else:
        emb_hi = 2 * k + 1
        records.append(BoundRecord("embdim", "upper", emb_hi, "general-position",
                                   "any k-complex embeds in dimension 2k+1"))
    if vanished:
        caveats = []
        in_interval = k != 2
        if k == 2:
            caveats.append(CAVEAT_DIM2_INCOMPLETE)
        if not top_h_zero and not (vanishing.integral_checked and vanishing.integral_primitive is not None):
            caveats.append(CAVEAT_MOD2_ONLY)
        records.append(BoundRecord("embdim", "upper", 2 * k, "vanishing-route",
                                   "vanishing top obstruction is complete away from dimension 2",
                                   caveats=tuple(caveats), in_interval=in_interval and not caveats))
        if in_interval and not caveats:
            emb_hi = min(emb_hi, 2 * k)

    # --- action dimension of the group ----------------------------------
    actdim = None
    conjecture = None
    if witness.flag:
        act_lo = max(gd, vk_lo + 2)
        records.append(BoundRecord("actdim", "lower", gd, "classifying-space",
                                   "a proper action on a contractible n-manifold yields an n-dimensional classifying space"))
        if vk_lo + 2 > gd:
            records.append(BoundRecord("actdim", "lower", vk_lo + 2, "obstructor",
                                       "the octahedralization sits in the boundary at infinity"))
        act_hi = 2 * gd
        records.append(BoundRecord("actdim", "upper", 2 * gd, "double-geometric-dimension",
                                   "thicken a classifying space to a manifold of twice its dimension"))
        if sphere:
            act_hi = min(act_hi, gd)
            records.append(BoundRecord("actdim", "upper", gd, "free-abelian",
                                       "a full simplex gives a free abelian group acting on euclidean space"))
        if vanished and k != 2:
            caveats = [CAVEAT_CODIMENSION] if 2 * k <= k + 2 else []
            if not top_h_zero and not (vanishing.integral_checked and vanishing.integral_primitive is not None):
                caveats.append(CAVEAT_MOD2_ONLY)
            usable = CAVEAT_MOD2_ONLY not in caveats
            records.append(BoundRecord("actdim", "upper", 2 * k + 1, "vanishing-route",
                                       "vanishing top obstruction caps the action dimension at 2k+1",
                                       caveats=tuple(caveats), in_interval=usable))
            if usable:
                act_hi = min(act_hi, 2 * k + 1)
        elif vanished and k == 2:
            records.append(BoundRecord("actdim", "upper", 2 * k + 1, "vanishing-route",
                                       "would follow if the top obstruction were complete in dimension 2",
                                       caveats=(CAVEAT_DIM2_INCOMPLETE,), in_interval=False))
        actdim = (act_lo, act_hi)
        if l2 is None:
            conjecture = "vacuous"
        elif act_lo >= 2 * l2:
            conjecture = "verified"
        else:
            conjecture = "open-here"
    else:
        warnings.append("input is not flag: group-level conclusions are omitted")

    for lo, hi in filter(None, ((vk_lo, vk_hi), (emb_lo, emb_hi), actdim)):
        if lo > hi:
            raise RuntimeError(f"inconsistent certified bounds: [{lo}, {hi}]")

    return DimensionReport(
        vertices=len(L.vertices),
        dim=k,
        flag=witness.flag,
        missing_clique=witness.missing_clique,
        gd=gd,
        l2dim=l2,
        mod2_betti=betti2,
        rational_betti=bettiq,
        vkdim=(vk_lo, vk_hi),
        embdim=(emb_lo, emb_hi),
        actdim=actdim,
        conjecture_status=conjecture,
        records=tuple(records),
        certificate=certificate,
        sub_certificates=tuple(sub_certs),
        vanishing=vanishing,
        warnings=tuple(warnings),
    )
