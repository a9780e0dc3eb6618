"""Special presentations: the direct graph-theoretic test, the closed-form
criteria in terms of difference multisets, and group-property flags."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .freeword import (
    SignClass,
    Word,
    exponent_sums,
    invert,
    is_proper_power,
    root,
    shift,
    sign_class,
    subscript_gcd,
)
from .presentation import (
    CyclicPresentation,
    RedundancyKind,
    _rotations,
    classify_redundancy,
    is_nonorientable,
)
from .stargraph import (
    DifferenceMultisets,
    Flavor,
    are_isomorphic,
    difference_multisets,
    is_bipartite,
    metrics,
    recognize,
    star_graph,
)


def is_perfect_difference_set(D: Sequence[int]) -> bool:
    """True iff the k(k-1) differences of D hit each nonzero residue mod k^2-k+1 once."""
    k = len(D)
    if k < 2:
        raise ValueError(f"a perfect difference set needs at least 2 elements, got {k}")
    N = k * k - k + 1
    residues = [d % N for d in D]
    if len(set(residues)) != k:
        return False
    seen = set()
    for a in residues:
        for b in residues:
            if a != b:
                seen.add((a - b) % N)
    return len(seen) == N - 1


# -- direct test ------------------------------------------------------------


@dataclass(frozen=True)
class ComponentInfo:
    vertices: int
    girth: float
    diameter: int
    min_degree: int
    recognized_as: str

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "girth": None if self.girth == math.inf else int(self.girth),
            "diameter": self.diameter,
            "min_degree": self.min_degree,
            "recognized_as": self.recognized_as,
        }


@dataclass(frozen=True)
class SpecialCertificate:
    is_special: bool
    k: int
    m: Optional[int] = None
    nu: Optional[int] = None
    per_component: tuple[ComponentInfo, ...] = ()
    reason: Optional[str] = None
    witness: dict = field(default_factory=dict)

    @property
    def triple(self) -> Optional[tuple[int, int, int]]:
        return (self.m, self.k, self.nu) if self.is_special else None

    def to_json(self) -> dict:
        out = {
            "special": self.is_special,
            "m": self.m,
            "k": self.k,
            "nu": self.nu,
            "components": [c.to_json() for c in self.per_component],
            "witness": dict(self.witness),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def is_special_direct(P: CyclicPresentation) -> SpecialCertificate:
    """Check the definition on the star graph itself."""
    k = len(P.w)
    G = star_graph(P)
    degs = G.degrees()
    if k < 3:
        return SpecialCertificate(False, k, reason="relator length below 3")
    if min(degs.values()) < 3:
        return SpecialCertificate(False, k, reason="vertex of degree below 3")
    comps = [G.subgraph(c) for c in G.components()]
    infos = []
    for C in comps:
        if not is_bipartite(C):
            return SpecialCertificate(False, k, reason="component not bipartite")
        mt = metrics(C)
        infos.append(
            ComponentInfo(len(C.vertices), mt.girth, mt.diameter_per_component[0], min(mt.degree_sequence), "")
        )
    m = infos[0].diameter
    for info in infos:
        if info.diameter != m or info.girth != 2 * m:
            return SpecialCertificate(False, k, per_component=tuple(infos), reason="not generalized polygon")
    if m < 2:
        return SpecialCertificate(False, k, per_component=tuple(infos), reason="diameter below 2")
    if m == 2 and k < 4:
        return SpecialCertificate(False, k, per_component=tuple(infos), reason="m = 2 needs k >= 4")
    for C in comps[1:]:
        if not are_isomorphic(comps[0], C):
            return SpecialCertificate(False, k, per_component=tuple(infos), reason="components not isomorphic")
    infos = [
        ComponentInfo(i.vertices, i.girth, i.diameter, i.min_degree, recognize(C).describe())
        for i, C in zip(infos, comps)
    ]
    return SpecialCertificate(True, k, m, len(comps), tuple(infos))


# -- closed-form criteria ---------------------------------------------------


class Verdict(enum.Enum):
    SPECIAL = "special"
    NOT_SPECIAL = "not_special"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class TheoremVerdict:
    name: str
    verdict: Verdict
    m: Optional[int] = None
    k: Optional[int] = None
    nu: Optional[int] = None
    failed_clause: Optional[str] = None
    witness: dict = field(default_factory=dict)

    @property
    def special(self) -> bool:
        return self.verdict is Verdict.SPECIAL

    @property
    def applicable(self) -> bool:
        return self.verdict is not Verdict.NOT_APPLICABLE

    @property
    def triple(self) -> Optional[tuple[int, int, int]]:
        return (self.m, self.k, self.nu) if self.special else None

    def to_json(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict.value}
        if self.failed_clause is not None:
            out["failed_clause"] = self.failed_clause
        return out


def is_irreducible(P: CyclicPresentation) -> bool:
    return subscript_gcd(P.w) == 1


def _odd_multiples(n: int, step: int) -> set[int]:
    return {(j * step) % n for j in range(1, n // step, 2)}


def matches_pm_form(values: Sequence[int], target: set[int], n: int) -> bool:
    """A equals the signed set-form T: no repeats, A and -A cover T, and no
    residue appears together with its negative unless it is self-inverse."""
    s = [v % n for v in values]
    if len(set(s)) != len(s):
        return False
    ss = set(s)
    for a in ss:
        if (-a) % n != a and (-a) % n in ss:
            return False
    return ss | {(-a) % n for a in ss} == set(target)


def _is_coset(values: Sequence[int], step: int, n: int) -> bool:
    """values is, without repeats, a full coset of the subgroup generated by step."""
    s = {v % n for v in values}
    if len(s) != len(values) or n % step:
        return False
    return len(s) == n // step and len({v % step for v in s}) == 1


def _not_applicable(name: str, why: str) -> TheoremVerdict:
    return TheoremVerdict(name, Verdict.NOT_APPLICABLE, failed_clause=why)


def _fail(name: str, clause: str, k: int) -> TheoremVerdict:
    return TheoremVerdict(name, Verdict.NOT_SPECIAL, k=k, failed_clause=clause)


def _root_presentation(P: CyclicPresentation) -> CyclicPresentation:
    return CyclicPresentation(P.n, root(P.w).root)


def check_3knu(P: CyclicPresentation) -> TheoremVerdict:
    """Difference-set criterion for (3, k, nu)-special presentations."""
    name = "orientable-positive-3"
    k = len(P.w)
    R = _root_presentation(P)
    sc = sign_class(R.w)
    if sc is SignClass.MIXED:
        return _not_applicable(name, "w is neither positive nor negative")
    if sc is SignClass.NEGATIVE:
        R = CyclicPresentation(P.n, invert(R.w))
    if not is_irreducible(R):
        return _not_applicable(name, "not irreducible")
    if len(R.w) < 3:
        return _not_applicable(name, "root shorter than 3")
    report = classify_redundancy(R)
    ms = difference_multisets(report, P.n)
    l = ms.l_u
    if l < 3:
        return _fail(name, "l(u) >= 3", k)
    N = l * l - l + 1
    if P.n % N:
        return _fail(name, "(a) n = nu N", k)
    nu = P.n // N
    Q = ms.Q
    if not is_perfect_difference_set(Q):
        return _fail(name, "(b) Q perfect difference set", k)
    if len({q % nu for q in Q}) != 1:
        return _fail(name, "(c) Q congruent mod nu", k)
    if k % nu:
        raise AssertionError(f"nu={nu} does not divide k={k} for {P}")
    return TheoremVerdict(name, Verdict.SPECIAL, 3, k, nu, witness={"pds": sorted(q % N for q in Q), "N": N})


def _check_orientable_positive(P: CyclicPresentation, ms: DifferenceMultisets, k: int) -> TheoremVerdict:
    name = "orientable-positive-2"
    n, l = P.n, ms.l_u
    if n % l:
        return _fail(name, "n = nu l(u)", k)
    nu = n // l
    if l < 3:
        return _fail(name, "l(u) >= 3", k)
    if not _is_coset(ms.Q, nu, n):
        return _fail(name, "Q = q0 + nu Z_n", k)
    q0 = min(ms.Q)
    if math.gcd(q0, nu) != 1:
        return _fail(name, "gcd(q0, nu) = 1", k)
    return TheoremVerdict(
        name, Verdict.SPECIAL, 2, k, nu,
        witness={"q0": q0, "circulant_form": f"Q = {{q0 + j*{nu}}}, components K_{{{l},{l}}}"},
    )


def _check_orientable_alternating(P: CyclicPresentation, ms: DifferenceMultisets, k: int) -> TheoremVerdict:
    name = "orientable-alternating-2"
    n, l = P.n, ms.l_u
    if n != 2 * l:
        return _fail(name, "n = 2 l(u)", k)
    if l < 3:
        return _fail(name, "l(u) >= 3", k)
    target = _odd_multiples(n, 1)
    if not matches_pm_form(ms.A, target, n):
        return _fail(name, "A = {+-1, +-3, ...}", k)
    if not matches_pm_form(ms.B, target, n):
        return _fail(name, "B = {+-1, +-3, ...}", k)
    return TheoremVerdict(
        name, Verdict.SPECIAL, 2, k, 2,
        witness={"circulant_form": f"circ_{n}(odd residues), components K_{{{l},{l}}}"},
    )


def _check_orientable_mixed(P: CyclicPresentation, ms: DifferenceMultisets, k: int) -> TheoremVerdict:
    name = "orientable-mixed-2"
    n, l = P.n, ms.l_u
    if n % l or l % 4:
        return _fail(name, "(a) n = nu l(u), 4 | l(u)", k)
    nu = n // l
    target = _odd_multiples(n, nu)
    if not matches_pm_form(ms.A, target, n):
        return _fail(name, "(b) A = {+-nu, +-3nu, ...}", k)
    if not matches_pm_form(ms.B, target, n):
        return _fail(name, "(b) B = {+-nu, +-3nu, ...}", k)
    if set(ms.Qplus) & set(ms.Qminus):
        return _fail(name, "(c) Q+ and Q- disjoint", k)
    if not _is_coset(ms.Q, 2 * nu, n):
        return _fail(name, "(c) Q = q0 + 2nu Z_n", k)
    q0 = min(ms.Q)
    if math.gcd(q0, nu) != 1:
        return _fail(name, "(c) gcd(q0, nu) = 1", k)
    return TheoremVerdict(
        name, Verdict.SPECIAL, 2, k, nu,
        witness={"q0": q0, "circulant_form": f"A, B odd multiples of {nu}, components K_{{{l},{l}}}"},
    )


def _check_nonorientable_alternating(P: CyclicPresentation, ms: DifferenceMultisets, k: int) -> TheoremVerdict:
    name = "nonorientable-alternating-2"
    n, l = P.n, ms.l_u
    if l != n // 2 or l < 3 or l % 2 == 0:
        return _fail(name, "l(u) = n/2 >= 3 odd", k)
    target = _odd_multiples(n, 1)
    if not matches_pm_form(ms.A, target, n):
        return _fail(name, "Abar = {+-1, ..., n/2}", k)
    if not matches_pm_form(ms.B, target, n):
        return _fail(name, "Bbar = {+-1, ..., n/2}", k)
    return TheoremVerdict(
        name, Verdict.SPECIAL, 2, k, 2,
        witness={"circulant_form": f"circ'_{n}(odd residues), components K_{{{l},{l}}}"},
    )


def _check_nonorientable_nonalternating(P: CyclicPresentation, ms: DifferenceMultisets, k: int) -> TheoremVerdict:
    name = "nonorientable-nonalternating-2"
    n, l = P.n, ms.l_u
    if n % l or l % 4 != 2 or l < 6:
        return _fail(name, "(a) n = nu l(u), l(u) = 2 mod 4, l(u) >= 6", k)
    nu = n // l
    target = _odd_multiples(n, nu)
    if not matches_pm_form(ms.A, target, n):
        return _fail(name, "(b) Abar = {+-nu, ..., n/2}", k)
    if not matches_pm_form(ms.B, target, n):
        return _fail(name, "(b) Bbar = {+-nu, ..., n/2}", k)
    if not _is_coset(ms.Q, 2 * nu, n):
        return _fail(name, "(c) Qbar = q0 + 2nu Z_n", k)
    starts = [q for q in sorted(set(ms.Q)) if q > 0 and math.gcd(q, nu) == 1]
    if not starts:
        return _fail(name, "(c) gcd(q0, nu) = 1", k)
    return TheoremVerdict(
        name, Verdict.SPECIAL, 2, k, nu,
        witness={"q0": starts[0], "circulant_form": f"Abar, Bbar odd multiples of {nu}, components K_{{{l},{l}}}"},
    )


def check_2knu(P: CyclicPresentation) -> TheoremVerdict:
    """Dispatch to the (2, k, nu) criterion matching the shape of P."""
    k = len(P.w)
    R = _root_presentation(P)
    if not is_irreducible(R):
        return _not_applicable("m2", "not irreducible")
    report = classify_redundancy(R)
    ms = difference_multisets(report, P.n)
    if ms.flavor is Flavor.NON_ORIENTABLE:
        if ms.alternating:
            return _check_nonorientable_alternating(P, ms, k)
        if ms.l_u < 3:
            return _not_applicable("nonorientable-nonalternating-2", "l(u) < 3")
        return _check_nonorientable_nonalternating(P, ms, k)
    if k < 4:
        return _not_applicable("m2", "k < 4")
    sc = sign_class(report.period.u)
    if sc is SignClass.NEGATIVE:
        R = CyclicPresentation(P.n, invert(R.w))
        ms = difference_multisets(classify_redundancy(R), P.n)
        sc = SignClass.POSITIVE
    if sc is SignClass.POSITIVE:
        return _check_orientable_positive(P, ms, k)
    if ms.alternating:
        return _check_orientable_alternating(P, ms, k)
    return _check_orientable_mixed(P, ms, k)


def theorem_verdict(P: CyclicPresentation) -> TheoremVerdict:
    """Run every criterion whose hypotheses match; a special verdict wins."""
    results = []
    if sign_class(P.w) is not SignClass.MIXED:
        results.append(check_3knu(P))
    results.append(check_2knu(P))
    for r in results:
        if r.special:
            return r
    for r in reversed(results):
        if r.applicable:
            return r
    return results[-1]


# -- group flags ------------------------------------------------------------


class Large(enum.Enum):
    YES = "yes"
    UNKNOWN = "unknown"


class Tits(enum.Enum):
    FREE_SUBGROUP = "free_subgroup"
    SOLVABLE_Z = "solvable_Z"
    SOLVABLE_Z2 = "solvable_Z2"
    SOLVABLE_BS = "solvable_BS(1,-1)"
    CONJECTURAL_FREE_SUBGROUP = "conjectural_free_subgroup"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class GroupFlags:
    large: Large
    tits: Tits
    hyperbolic_if_special: bool

    def to_json(self) -> dict:
        return {"large": self.large.value, "tits": self.tits.value, "hyperbolic": self.hyperbolic_if_special}


def _is_rotation_of(w: Word, candidates: Sequence[tuple[int, ...]]) -> bool:
    rots = _rotations(w)
    return any(c in rots for c in candidates)


def _half_words(w: Word) -> list[Word]:
    """Every u with some cyclic permutation of w equal to u theta^{n/2}(u)^-1."""
    n, k = w.rank, len(w)
    if n % 2 or k % 2:
        return []
    out = []
    c = w.codes
    for s in range(k):
        r = c[s:] + c[:s]
        u = Word(n, r[: k // 2])
        if u.codes + invert(shift(u, n // 2)).codes == r:
            out.append(u)
    return out


def _sequence_root(c: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # u need not be cyclically reduced, so root() does not apply
    k = len(c)
    for d in range(1, k + 1):
        if k % d == 0 and c[:d] * (k // d) == c:
            return k // d, c[:d]
    return 1, c


def _odd_zigzag(u: Word) -> bool:
    c = u.codes
    return len(c) >= 3 and len(c) % 2 == 1 and all(x == (0 if j % 2 == 0 else 2) for j, x in enumerate(c))


def _tits_nonorientable_2(w: Word) -> Tits:
    x0, x1 = 0, 2
    if is_proper_power(w):
        return Tits.FREE_SUBGROUP
    variants = [w, shift(w, 1), invert(w), shift(invert(w), 1)]
    halves = [u for v in variants for u in _half_words(v)]
    u = halves[0]
    if len(u) == 1:
        return Tits.SOLVABLE_Z
    commutators = [(x0, x1, x0 ^ 1, x1 ^ 1), (x1, x0, x1 ^ 1, x0 ^ 1)]
    if _is_rotation_of(w, commutators):
        return Tits.SOLVABLE_Z2
    power, base = _sequence_root(u.codes)
    if power > 1:
        if power == 2 and len(base) == 1:
            return Tits.SOLVABLE_BS
        return Tits.FREE_SUBGROUP
    e = exponent_sums(u)
    if e[0] == e[1]:
        return Tits.FREE_SUBGROUP
    if any(_odd_zigzag(h) for h in halves):
        return Tits.FREE_SUBGROUP
    return Tits.CONJECTURAL_FREE_SUBGROUP


def group_property_flags(P: CyclicPresentation, certificate: Optional[SpecialCertificate] = None) -> GroupFlags:
    report = classify_redundancy(P)
    cert = certificate if certificate is not None else is_special_direct(P)
    hyperbolic = bool(cert.is_special and 2 / cert.k + 1 / cert.m < 1)
    if not report.redundant:
        return GroupFlags(Large.UNKNOWN, Tits.UNKNOWN, hyperbolic)
    n, w = P.n, P.w
    large = n >= 3 or (n == 2 and is_proper_power(w))
    if large:
        return GroupFlags(Large.YES, Tits.FREE_SUBGROUP, hyperbolic)
    if report.orientable:
        for eps in (0, 1):
            a, b = 0 | eps, 2 | eps
            if _is_rotation_of(w, [(a, b)]):
                return GroupFlags(Large.UNKNOWN, Tits.SOLVABLE_Z, hyperbolic)
            if _is_rotation_of(w, [(a, a, b, b)]):
                return GroupFlags(Large.UNKNOWN, Tits.SOLVABLE_BS, hyperbolic)
        return GroupFlags(Large.UNKNOWN, Tits.FREE_SUBGROUP, hyperbolic)
    return GroupFlags(Large.UNKNOWN, _tits_nonorientable_2(w), hyperbolic)


def certificate_json(P: CyclicPresentation) -> dict:
    cert = is_special_direct(P)
    tv = theorem_verdict(P)
    flags = group_property_flags(P, cert)
    out = cert.to_json()
    out["witness"] = dict(tv.witness)
    out["theorem_checker"] = tv.to_json()
    out["flags"] = flags.to_json()
    return out


def verdicts_agree(cert: SpecialCertificate, tv: TheoremVerdict) -> bool:
    """Direct and criterion verdicts agree, or the criterion does not apply."""
    if not tv.applicable:
        return True
    return cert.triple == tv.triple
