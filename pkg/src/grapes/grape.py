"""Recognition of grape decompositions with replayable certificates.

A grape is a simplicial complex admitting a recursive vertex decomposition:
some pivot vertex has link and deletion that are again grapes, plus a
variant-specific gluing condition.  The four variants decided here:

* strong: the link or the deletion is a cone;
* combinatorial: the link fits inside a cone inside the deletion
  (decided as: some element x with every link facet F giving a face F + {x}
  of the deletion -- the cone over the link with apex x then sits inside);
* weak: some intermediate complex between link and deletion is
  simple-homotopy trivial (tested by collapsibility, so inconclusive
  searches surface as "unknown", never as "no");
* strong-weak: the link or deletion itself is simple-homotopy trivial
  (same collapsibility caveat).

Grape status depends only on the vertex set, so recognition normalizes the
ground set to the vertices at every node.  Every "yes" comes with a
certificate tree that replays without searching; strong certificates also
drive the simple-homotopy classification (void, or a cross-polytope
boundary whose dimension the recursion computes).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .collapse import (
    ReplayError,
    collapse_search,
    cone_sequence,
    replay,
    sequence_from_json,
    sequence_to_json,
)
from .complexes import (
    Complex,
    InputError,
    _maximal,
    alexander_dual,
    cone_apexes,
    deletion,
    link,
    restrict_ground,
)
from .homology import SHClass

DEFAULT_BUDGET = 10**6
EXHAUSTIVE_GAMMA_MAX_GROUND = 6


class GrapeVariant(Enum):
    STRONG = "strong"
    COMBINATORIAL = "comb"
    WEAK = "weak"
    STRONG_WEAK = "strong-weak"


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class StrongWitness:
    """Which of link/deletion is a cone, with the apexes found."""

    cone_side: str  # "link" | "deletion" | "both"
    link_apex: Optional[str] = None
    deletion_apex: Optional[str] = None


@dataclass(frozen=True)
class ConeContainmentWitness:
    """Element x whose cone over the link lies inside the deletion."""

    cone_element: str


@dataclass(frozen=True)
class TrivialIntermediateWitness:
    """Collapsible complex squeezed between link and deletion."""

    gamma_facets: frozenset
    sequence: tuple


@dataclass(frozen=True)
class TrivialSideWitness:
    """Side (link or deletion) that collapses to void, with its sequence."""

    side: str  # "link" | "deletion"
    sequence: tuple


@dataclass(frozen=True)
class CertificateTree:
    """Recursive witness that a complex is a grape of some variant.

    Either a base leaf (at most one vertex: "void", "irrelevant" or
    "point") or a split node carrying the pivot, the variant witness, and
    certificates for the link and the deletion.
    """

    base: Optional[str] = None
    pivot: Optional[str] = None
    witness: Optional[object] = None
    link_cert: Optional["CertificateTree"] = None
    del_cert: Optional["CertificateTree"] = None

    @property
    def is_base(self) -> bool:
        return self.base is not None


@dataclass(frozen=True)
class GrapeVerdict:
    verdict: str  # "yes" | "no" | "unknown"
    certificate: Optional[CertificateTree] = None
    reason: Optional[str] = None
    nodes: int = 0

    @property
    def is_yes(self) -> bool:
        return self.verdict == "yes"


class _BudgetExceeded(Exception):
    pass


# -- recognition -------------------------------------------------------------


def _base_kind(c: Complex) -> Optional[str]:
    if c.is_void:
        return "void"
    if c.is_irrelevant:
        return "irrelevant"
    if len(c.vertices()) == 1:
        return "point"
    return None


def _cone_complex(base: Complex, apex: str) -> Complex:
    """The join of a complex with {void face, apex}, on the same ground."""
    return Complex(base.ground, _maximal(f | {apex} for f in base.facets))


def _cone_fits(lk: Complex, dl: Complex, x: str) -> bool:
    """Does the cone over lk with apex x sit inside dl?"""
    if lk.is_void:
        return dl.has_face(frozenset({x}))
    return all(dl.has_face(f | {x}) for f in lk.facets)


def _between_complexes(lk: Complex, dl: Complex):
    """All complexes G with lk <= G <= dl (face-wise), as facet families.

    Enumerates the downward-closed subsets of faces(dl) - faces(lk) by
    adding faces in size order, requiring each face's codimension-1
    subfaces to be present already.
    """
    lk_faces = lk.faces()
    extra = sorted(dl.faces() - lk_faces, key=lambda f: (len(f), tuple(sorted(f))))

    def closed(face, have):
        return all(
            (face - {y}) in lk_faces or (face - {y}) in have for y in face
        )

    def rec(i: int, have: set):
        if i == len(extra):
            yield frozenset(lk_faces | have)
            return
        yield from rec(i + 1, have)
        face = extra[i]
        if closed(face, have):
            have.add(face)
            yield from rec(i + 1, have)
            have.remove(face)

    yield from rec(0, set())


def check_grape(
    c: Complex,
    variant: GrapeVariant,
    budget: int = DEFAULT_BUDGET,
    exhaustive_gamma: bool = False,
    collapse_budget: int = DEFAULT_BUDGET,
) -> GrapeVerdict:
    """Decide grape membership for one variant, with a certificate on yes.

    Strong and combinatorial answers are definitive.  The weak variants test
    simple-homotopy triviality by collapsibility, which under-approximates
    it, so a "no" needs the exhaustive_gamma opt-in: for the weak variant
    the whole intermediate-complex family is then swept (gated to at most
    EXHAUSTIVE_GAMMA_MAX_GROUND vertices per node), and for the strong-weak
    variant both sides' searches must have run to exhaustion.  Anything
    less conclusive is reported "unknown", never guessed.

    The budget counts recognition nodes (pivot expansions and intermediate
    candidates); collapse searches carry their own collapse_budget.
    """
    state = {"nodes": 0}
    memo: dict = {}

    def tick() -> None:
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _BudgetExceeded

    def witness(cr: Complex, lk: Complex, dl: Complex):
        """Variant gluing condition at one pivot: (status, witness or reason)."""
        if variant is GrapeVariant.STRONG:
            lk_apexes = cone_apexes(lk)
            dl_apexes = cone_apexes(dl)
            if lk_apexes and dl_apexes:
                return "yes", StrongWitness(
                    "both",
                    min(lk_apexes, key=lk.index),
                    min(dl_apexes, key=dl.index),
                )
            if lk_apexes:
                return "yes", StrongWitness("link", link_apex=min(lk_apexes, key=lk.index))
            if dl_apexes:
                return "yes", StrongWitness(
                    "deletion", deletion_apex=min(dl_apexes, key=dl.index)
                )
            return "no", "neither side is a cone"

        if variant is GrapeVariant.COMBINATORIAL:
            for x in dl.ground:
                if _cone_fits(lk, dl, x):
                    return "yes", ConeContainmentWitness(x)
            return "no", "no cone over the link fits inside the deletion"

        if variant is GrapeVariant.STRONG_WEAK:
            inconclusive = False
            for side, side_c in (("link", lk), ("deletion", dl)):
                r = collapse_search(side_c, collapse_budget, exhaustive=True)
                if r.is_yes:
                    return "yes", TrivialSideWitness(side, r.sequence)
                if r.verdict == "unknown":
                    inconclusive = True
            if inconclusive:
                return "unknown", "collapsibility searches ran out of budget"
            if not exhaustive_gamma:
                # a side that fails to collapse might still be
                # simple-homotopy trivial; "no" needs the explicit opt-in
                return "unknown", "neither side collapses (collapse-only test)"
            return "no", "neither side collapses (collapse-only test)"

        # weak: look for a collapsible complex between link and deletion
        inconclusive = False
        for candidate in (lk, dl):
            r = collapse_search(candidate, collapse_budget, exhaustive=True)
            if r.is_yes:
                return "yes", TrivialIntermediateWitness(candidate.facets, r.sequence)
            if r.verdict == "unknown":
                inconclusive = True
        for x in dl.ground:
            if _cone_fits(lk, dl, x):
                gamma = _cone_complex(lk, x)
                seq = tuple(cone_sequence(gamma)) if not gamma.is_void else ()
                return "yes", TrivialIntermediateWitness(gamma.facets, seq)
        if not exhaustive_gamma:
            return "unknown", "no collapsible intermediate in the fast family"
        if len(cr.ground) > EXHAUSTIVE_GAMMA_MAX_GROUND:
            return "unknown", "too many vertices for the exhaustive sweep"
        for faces in _between_complexes(lk, dl):
            tick()
            gamma = Complex(dl.ground, _maximal(faces))
            r = collapse_search(gamma, collapse_budget, exhaustive=True)
            if r.is_yes:
                return "yes", TrivialIntermediateWitness(gamma.facets, r.sequence)
            if r.verdict == "unknown":
                inconclusive = True
        if inconclusive:
            return "unknown", "some collapsibility searches ran out of budget"
        return "no", "no intermediate complex collapses (exhaustive sweep)"

    def solve(cr: Complex):
        key = cr.facets
        if key in memo:
            return memo[key]
        tick()
        kind = _base_kind(cr)
        if kind is not None:
            result = ("yes", CertificateTree(base=kind))
            memo[key] = result
            return result
        some_unknown = False
        for a in cr.ground:
            lk = link(cr, a)
            dl = deletion(cr, a)
            status, payload = witness(cr, lk, dl)
            if status == "no":
                continue
            lk_status, lk_payload = solve(restrict_ground(lk))
            if lk_status == "no":
                continue
            dl_status, dl_payload = solve(restrict_ground(dl))
            if dl_status == "no":
                continue
            if status == lk_status == dl_status == "yes":
                cert = CertificateTree(
                    pivot=a,
                    witness=payload,
                    link_cert=lk_payload,
                    del_cert=dl_payload,
                )
                memo[key] = ("yes", cert)
                return memo[key]
            some_unknown = True
        result = ("unknown", None) if some_unknown else ("no", None)
        memo[key] = result
        return result

    try:
        status, payload = solve(restrict_ground(c))
    except _BudgetExceeded:
        return GrapeVerdict("unknown", reason="recognition budget exhausted", nodes=state["nodes"])
    if status == "yes":
        return GrapeVerdict("yes", certificate=payload, nodes=state["nodes"])
    if status == "no":
        return GrapeVerdict("no", nodes=state["nodes"])
    return GrapeVerdict("unknown", reason="search inconclusive", nodes=state["nodes"])


# -- certificate replay --------------------------------------------------------


def verify_certificate(c: Complex, variant: GrapeVariant, cert: CertificateTree) -> None:
    """Replay a certificate against a complex; raises ReplayError on any gap.

    Verification is independent of the search: pivot legality, the variant
    witness, and both sub-certificates are all checked from scratch.
    """
    cr = restrict_ground(c)
    if cert.is_base:
        kind = _base_kind(cr)
        if kind != cert.base:
            raise ReplayError(f"base leaf says {cert.base!r} but complex is {kind!r}")
        return
    a = cert.pivot
    if a is None or not cr.has_face(frozenset({a})):
        raise ReplayError(f"pivot {a!r} is not a vertex")
    lk = link(cr, a)
    dl = deletion(cr, a)
    _verify_witness(variant, cert.witness, lk, dl)
    if cert.link_cert is None or cert.del_cert is None:
        raise ReplayError("split node is missing a sub-certificate")
    verify_certificate(lk, variant, cert.link_cert)
    verify_certificate(dl, variant, cert.del_cert)


def _verify_witness(variant: GrapeVariant, witness: object, lk: Complex, dl: Complex) -> None:
    if variant is GrapeVariant.STRONG:
        if not isinstance(witness, StrongWitness):
            raise ReplayError("strong certificate needs a cone-side witness")
        if witness.cone_side not in ("link", "deletion", "both"):
            raise ReplayError(f"unknown cone side {witness.cone_side!r}")
        if witness.cone_side in ("link", "both"):
            if witness.link_apex not in cone_apexes(lk):
                raise ReplayError("claimed link apex does not cone the link")
        if witness.cone_side in ("deletion", "both"):
            if witness.deletion_apex not in cone_apexes(dl):
                raise ReplayError("claimed deletion apex does not cone the deletion")
        return
    if variant is GrapeVariant.COMBINATORIAL:
        if not isinstance(witness, ConeContainmentWitness):
            raise ReplayError("combinatorial certificate needs a cone element")
        x = witness.cone_element
        if x not in dl.ground:
            raise ReplayError(f"cone element {x!r} is not in the deletion ground set")
        if not _cone_fits(lk, dl, x):
            raise ReplayError(f"cone over the link with apex {x!r} does not fit the deletion")
        return
    if variant is GrapeVariant.WEAK:
        if not isinstance(witness, TrivialIntermediateWitness):
            raise ReplayError("weak certificate needs an intermediate complex")
        try:
            gamma = Complex(dl.ground, _maximal(witness.gamma_facets))
        except InputError as exc:
            raise ReplayError(f"intermediate complex is malformed: {exc}") from None
        for f in lk.facets:
            if not gamma.has_face(f):
                raise ReplayError("link is not contained in the intermediate complex")
        for f in gamma.facets:
            if not dl.has_face(f):
                raise ReplayError("intermediate complex is not contained in the deletion")
        if not replay(gamma, witness.sequence).is_void:
            raise ReplayError("intermediate complex does not collapse to void")
        return
    if variant is GrapeVariant.STRONG_WEAK:
        if not isinstance(witness, TrivialSideWitness):
            raise ReplayError("strong-weak certificate needs a collapsing side")
        if witness.side not in ("link", "deletion"):
            raise ReplayError(f"unknown side {witness.side!r}")
        side = lk if witness.side == "link" else dl
        if not replay(side, witness.sequence).is_void:
            raise ReplayError(f"{witness.side} does not collapse to void")
        return
    raise ReplayError(f"unknown variant {variant!r}")


# -- classification ------------------------------------------------------------


def classify_strong(c: Complex, cert: CertificateTree, prefer: str = "deletion") -> SHClass:
    """Simple-homotopy class of a strong grape, read off its certificate.

    Deletion-is-cone steps suspend the class of the link; link-is-cone steps
    keep the class of the deletion.  When both sides are cones the branch
    named by ``prefer`` is taken (the result is the same either way; the
    default mirrors the deterministic search).
    """
    if prefer not in ("deletion", "link"):
        raise InputError('prefer must be "deletion" or "link"')
    cr = restrict_ground(c)
    if cert.is_base:
        if cert.base in ("void", "point"):
            return SHClass(None)
        if cert.base == "irrelevant":
            return SHClass(0)
        raise ReplayError(f"unknown base kind {cert.base!r}")
    w = cert.witness
    if not isinstance(w, StrongWitness):
        raise ReplayError("classification needs a strong certificate")
    side = w.cone_side if w.cone_side != "both" else prefer
    if side == "deletion":
        return classify_strong(link(cr, cert.pivot), cert.link_cert, prefer).suspend()
    return classify_strong(deletion(cr, cert.pivot), cert.del_cert, prefer)


def predicted_wedge(c: Complex, cert: CertificateTree) -> dict:
    """Predicted reduced Betti numbers from a certificate tree.

    At every split the complex is homotopy equivalent to the deletion wedged
    with the suspended link, so predictions add up recursively: the empty
    dict means contractible, otherwise dimension -> sphere multiplicity.
    Meaningful for combinatorial and weak certificates (and the stronger
    ones, whose witnesses imply the same wedge splitting).
    """
    cr = restrict_ground(c)
    if cert.is_base:
        if cert.base in ("void", "point"):
            return {}
        if cert.base == "irrelevant":
            return {-1: 1}
        raise ReplayError(f"unknown base kind {cert.base!r}")
    if cert.pivot is None or cert.link_cert is None or cert.del_cert is None:
        raise ReplayError("malformed split node")
    from_del = predicted_wedge(deletion(cr, cert.pivot), cert.del_cert)
    from_lk = predicted_wedge(link(cr, cert.pivot), cert.link_cert)
    out = dict(from_del)
    for k, mult in from_lk.items():
        out[k + 1] = out.get(k + 1, 0) + mult
    return out


# -- duality transfer ------------------------------------------------------------


def verify_dual_invariance(
    c: Complex,
    variant: GrapeVariant,
    budget: int = DEFAULT_BUDGET,
    exhaustive_gamma: bool = False,
) -> dict:
    """Check that the Alexander dual is a grape of the same variant.

    Requires the primal verdict to be yes.  For the strong variant the
    simple-homotopy classes must additionally match across duality: the
    void class maps to itself and a cross-polytope boundary of dimension n
    maps to dimension |X| - n - 1 (only asserted for nonempty ground sets).
    Weak-variant duals may come back "unknown"; this is tolerated, flagged.
    """
    primal = check_grape(c, variant, budget, exhaustive_gamma)
    if not primal.is_yes:
        raise InputError("dual-invariance check needs a yes instance")
    dual = alexander_dual(c)
    dual_verdict = check_grape(dual, variant, budget, exhaustive_gamma)
    weak_family = variant in (GrapeVariant.WEAK, GrapeVariant.STRONG_WEAK)
    ok = dual_verdict.is_yes or (weak_family and dual_verdict.verdict == "unknown")
    report = {
        "variant": variant.value,
        "ground_size": len(c.ground),
        "dual_verdict": dual_verdict.verdict,
        "unknown_tolerated": weak_family and dual_verdict.verdict == "unknown",
        "pass": ok,
    }
    if variant is GrapeVariant.STRONG and dual_verdict.is_yes and len(c.ground) > 0:
        primal_class = classify_strong(c, primal.certificate)
        dual_class = classify_strong(dual, dual_verdict.certificate)
        expected = primal_class.dual_expected(len(c.ground))
        report["class"] = str(primal_class)
        report["dual_class"] = str(dual_class)
        report["expected_dual_class"] = str(expected)
        if dual_class != expected:
            report["pass"] = False
    return report


# -- certificate JSON --------------------------------------------------------------


def _witness_to_json(w: object) -> dict:
    if isinstance(w, StrongWitness):
        out: dict = {"kind": "strong", "cone_side": w.cone_side}
        if w.link_apex is not None:
            out["link_apex"] = w.link_apex
        if w.deletion_apex is not None:
            out["deletion_apex"] = w.deletion_apex
        return out
    if isinstance(w, ConeContainmentWitness):
        return {"kind": "combinatorial", "cone_element": w.cone_element}
    if isinstance(w, TrivialIntermediateWitness):
        return {
            "kind": "weak",
            "gamma_facets": sorted(sorted(f) for f in w.gamma_facets),
            "collapse": sequence_to_json(w.sequence),
        }
    if isinstance(w, TrivialSideWitness):
        return {
            "kind": "strong-weak",
            "side": w.side,
            "collapse": sequence_to_json(w.sequence),
        }
    raise InputError(f"cannot serialize witness {w!r}")


def _witness_from_json(data: object) -> object:
    if not isinstance(data, dict):
        raise InputError("witness must be an object")
    kind = data.get("kind")
    if kind == "strong":
        return StrongWitness(
            data.get("cone_side", ""),
            data.get("link_apex"),
            data.get("deletion_apex"),
        )
    if kind == "combinatorial":
        x = data.get("cone_element")
        if not isinstance(x, str):
            raise InputError('combinatorial witness needs a "cone_element" string')
        return ConeContainmentWitness(x)
    if kind == "weak":
        facets = data.get("gamma_facets")
        if not isinstance(facets, list):
            raise InputError('weak witness needs a "gamma_facets" array')
        return TrivialIntermediateWitness(
            frozenset(frozenset(f) for f in facets),
            sequence_from_json(data.get("collapse", {})),
        )
    if kind == "strong-weak":
        side = data.get("side")
        if side not in ("link", "deletion"):
            raise InputError('strong-weak witness needs "side": "link" or "deletion"')
        return TrivialSideWitness(side, sequence_from_json(data.get("collapse", {})))
    raise InputError(f"unknown witness kind {kind!r}")


def certificate_to_json(cert: CertificateTree) -> dict:
    if cert.is_base:
        return {"base": cert.base}
    return {
        "pivot": cert.pivot,
        "witness": _witness_to_json(cert.witness),
        "link": certificate_to_json(cert.link_cert),
        "deletion": certificate_to_json(cert.del_cert),
    }


def certificate_from_json(data: object) -> CertificateTree:
    if not isinstance(data, dict):
        raise InputError("certificate must be an object")
    if "base" in data:
        if data["base"] not in ("void", "irrelevant", "point"):
            raise InputError(f"unknown base kind {data['base']!r}")
        return CertificateTree(base=data["base"])
    pivot = data.get("pivot")
    if not isinstance(pivot, str):
        raise InputError('split node needs a "pivot" string')
    return CertificateTree(
        pivot=pivot,
        witness=_witness_from_json(data.get("witness")),
        link_cert=certificate_from_json(data.get("link")),
        del_cert=certificate_from_json(data.get("deletion")),
    )


def certificate_variant(cert: CertificateTree) -> Optional[GrapeVariant]:
    """Variant implied by the witnesses in a tree; None for base-only trees."""
    if cert.is_base:
        return None
    w = cert.witness
    if isinstance(w, StrongWitness):
        return GrapeVariant.STRONG
    if isinstance(w, ConeContainmentWitness):
        return GrapeVariant.COMBINATORIAL
    if isinstance(w, TrivialIntermediateWitness):
        return GrapeVariant.WEAK
    if isinstance(w, TrivialSideWitness):
        return GrapeVariant.STRONG_WEAK
    return None
