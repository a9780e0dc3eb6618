"""Exhaustive enumeration of defining words and the batch oracle runs built on it.

Work is split into partitions keyed by ``(n, k, prefix)``; each partition is
processed independently (optionally in a process pool) and results are
released through a reorder buffer in partition order, so output does not
depend on the worker count.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import kernels
from .freeword import Word, cyclic_permute, format_word, invert, is_proper_power, sign_class, SignClass, shift
from .presentation import (
    CyclicPresentation,
    RedundancyKind,
    classify_redundancy,
    concise_refinement,
    freely_redundant_oracle,
)
from .special import (
    Large,
    SpecialCertificate,
    group_property_flags,
    is_irreducible,
    is_special_direct,
    theorem_verdict,
    verdicts_agree,
)
from .stargraph import (
    Flavor,
    build_star_graph,
    difference_multisets,
    girth,
    predicted_components,
    star_graph,
    structural_star_graph,
)

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    n_range: tuple[int, int]
    k_range: tuple[int, int]
    cyclically_reduced: bool = True
    not_proper_power: bool = False
    positive_only: bool = False
    irreducible_only: bool = False
    up_to_symmetry: bool = True
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        for lo, hi in (self.n_range, self.k_range):
            if lo < 1 or hi < lo:
                raise ValueError(f"bad range {lo}..{hi}")

    def raw_candidates(self) -> int:
        per = 1 if self.positive_only else 2
        return sum(
            (per * n) ** k
            for n in range(self.n_range[0], self.n_range[1] + 1)
            for k in range(self.k_range[0], self.k_range[1] + 1)
        )


@dataclass(frozen=True)
class Partition:
    n: int
    k: int
    prefix: tuple[int, ...]


def partitions(spec: EnumSpec) -> list[Partition]:
    raw = spec.raw_candidates()
    if raw > spec.budget:
        raise BudgetExceeded(f"{raw} raw candidates exceed budget {spec.budget}")
    out = []
    step = 2 if spec.positive_only else 1
    for n in range(spec.n_range[0], spec.n_range[1] + 1):
        for k in range(spec.k_range[0], spec.k_range[1] + 1):
            if spec.up_to_symmetry:
                if k == 1:
                    out.append(Partition(n, k, (0,)))
                else:
                    out.extend(Partition(n, k, (0, c)) for c in range(0, 2 * n, step))
            else:
                out.extend(Partition(n, k, (c,)) for c in range(0, 2 * n, step))
    return out


def _partition_words(spec: EnumSpec, part: Partition) -> list[Word]:
    codes = kernels.enumerate_prefix(
        part.n, part.k, part.prefix, spec.cyclically_reduced, spec.up_to_symmetry, spec.positive_only
    )
    out = []
    for c in codes:
        w = Word(part.n, c)
        if spec.not_proper_power and is_proper_power(w):
            continue
        if spec.irreducible_only and not is_irreducible(CyclicPresentation(part.n, w)):
            continue
        out.append(w)
    return out


def enumerate_words(spec: EnumSpec) -> Iterator[Word]:
    """Words passing the filters, ordered by (n, k, code sequence)."""
    for part in partitions(spec):
        yield from _partition_words(spec, part)


def worker_count() -> int:
    env = os.environ.get("CYCPRES_THREADS")
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("CYCPRES_THREADS must be positive")
        return value
    return os.cpu_count() or 1


class ReorderBuffer:
    """Accept results keyed by sequence number in any order; release in order."""

    def __init__(self):
        self._pending: dict[int, object] = {}
        self._next = 0

    def put(self, index: int, item) -> list:
        if index < self._next or index in self._pending:
            raise ValueError(f"duplicate result for partition {index}")
        self._pending[index] = item
        ready = []
        while self._next in self._pending:
            ready.append(self._pending.pop(self._next))
            self._next += 1
        return ready

    def __len__(self) -> int:
        return len(self._pending)


def _run_parts(job: Callable, spec: EnumSpec, workers: Optional[int] = None) -> Iterator:
    parts = partitions(spec)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(parts) <= 1:
        for part in parts:
            yield job(spec, part)
        return
    buf = ReorderBuffer()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(job, spec, part): i for i, part in enumerate(parts)}
        for fut in as_completed(futures):
            yield from buf.put(futures[fut], fut.result())


# -- cross-validation -------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    check: str
    n: int
    word: str
    detail: str

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class CrossValidationReport:
    words: int = 0
    checks: Counter = field(default_factory=Counter)
    counterexamples: list[Counterexample] = field(default_factory=list)
    observations: list[Counterexample] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def violations(self, check: str) -> list[Counterexample]:
        return [c for c in self.counterexamples if c.check == check]

    def summary(self) -> dict:
        return {
            "summary": {
                "words": self.words,
                "checks": dict(sorted(self.checks.items())),
                "counterexamples": len(self.counterexamples),
                "observations": len(self.observations),
                "wall_time": round(self.wall_time, 3),
            }
        }

    def jsonl(self) -> str:
        lines = [json.dumps(c.to_json(), sort_keys=True) for c in self.counterexamples]
        lines += [json.dumps(dict(c.to_json(), observation=True), sort_keys=True) for c in self.observations]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines) + "\n"


def verdict_signature(P: CyclicPresentation) -> tuple:
    """Everything that must be constant on a symmetry orbit."""
    r = classify_redundancy(P)
    cert = is_special_direct(P)
    flags = group_property_flags(P, cert)
    return (r.kind, r.refinement_size, cert.triple, flags)


def check_word(
    P: CyclicPresentation, checks: Counter, notes: Optional[list] = None
) -> list[Counterexample]:
    """Run every oracle comparison on one presentation.

    Failures are returned; facts that are recorded but not claimed by any
    result (currently: girth 2 with equal end signs) go to ``notes``.
    """
    n, w = P.n, P.w
    text = format_word(w)
    bad: list[Counterexample] = []

    def fail(check: str, detail: str):
        bad.append(Counterexample(check, n, text, detail))

    report = classify_redundancy(P)
    root_p = CyclicPresentation(n, report.root)

    # (i) redundancy classification against the greedy oracle
    checks["redundancy"] += 1
    redundant = freely_redundant_oracle(P.relators)
    expected = set(range(report.refinement_size, n))
    if redundant != expected:
        fail("redundancy", f"oracle redundant {sorted(redundant)}, classifier t={report.refinement_size}")

    # refinement soundness
    checks["refinement"] += 1
    trunc = concise_refinement(P)
    G = star_graph(P)
    if freely_redundant_oracle(trunc.relators):
        fail("refinement", "refinement still has a freely redundant relator")
    if build_star_graph(trunc.relators, n) != G:
        fail("refinement", "refinement changes the star graph")

    # (ii) structural star graph and component law
    checks["structure"] += 1
    ms = difference_multisets(report, n)
    H = structural_star_graph(ms, n, ms.l_u)
    if H != G:
        fail("structure", f"edge multisets differ: {ms}")
    degs = set(G.degrees().values())
    if degs != {ms.l_u}:
        fail("structure", f"degrees {sorted(degs)} but l(u) = {ms.l_u}")
    predicted = set(predicted_components(ms).components)
    actual = {frozenset(c) for c in G.components()}
    if predicted != actual:
        fail("structure", "component partition differs from prediction")

    # (iii) congruence on the period witness
    if ms.flavor is Flavor.ORIENTABLE:
        checks["eq2"] += 1
        if not ms.eq2_holds():
            fail("eq2", f"residue {ms.eq2_residue()} != h = {ms.h}")

    # (iv) girth bounds
    g = girth(G)
    if ms.flavor is Flavor.ORIENTABLE and ms.l_u >= 3:
        checks["girth"] += 1
        u = report.period.u
        mixed3 = ms.l_u == 3 and sign_class(u) is SignClass.MIXED
        bound = 8 if mixed3 else 6
        if g > bound:
            fail("girth", f"orientable girth {g} > {bound}")
    elif ms.flavor is Flavor.NON_ORIENTABLE and ms.l_u >= 2:
        checks["girth"] += 1
        if g > 4:
            fail("girth", f"non-orientable girth {g} > 4")
        opposite = ms.eps_iota * ms.eps_tau == -1
        detail = (
            f"girth {g}, eps_iota*eps_tau = {ms.eps_iota * ms.eps_tau}, "
            f"A'={ms.A_prime}, B'={ms.B_prime}, Q={ms.Q}"
        )
        if opposite and g != 2:
            fail("girth-2", detail)
        elif g == 2 and not opposite and notes is not None:
            notes.append(Counterexample("girth-2-converse", n, text, detail))

    # (v) direct special test against the criteria
    checks["special"] += 1
    cert = is_special_direct(P)
    tv = theorem_verdict(P)
    if not verdicts_agree(cert, tv):
        fail("special", f"direct {cert.triple} vs {tv.name} {tv.triple} ({tv.failed_clause})")
    if cert.is_special:
        checks["m-forcing"] += 1
        if cert.m >= 3 and (cert.m != 3 or not report.orientable or sign_class(w) is SignClass.MIXED):
            fail("m-forcing", f"m = {cert.m}, kind {report.kind.value}")
        if not report.orientable and cert.m != 2:
            fail("m-forcing", f"non-orientable with m = {cert.m}")
        if n < 3 or (cert.m == 2 and cert.k < 4):
            fail("m-forcing", f"special with n = {n}, (m, k) = ({cert.m}, {cert.k})")
        if report.redundant and not 2 / cert.k + 1 / cert.m < 1:
            fail("m-forcing", "redundant special without 2/k + 1/m < 1")
        if cert.m == 3 and tv.special and cert.k % cert.nu:
            fail("m-forcing", "nu does not divide k")

    # group flags
    checks["flags"] += 1
    flags = group_property_flags(P, cert)
    if report.redundant and n >= 3 and flags.large is not Large.YES:
        fail("flags", "redundant with n >= 3 but not large")
    if flags.large is Large.YES and not report.redundant:
        fail("flags", "large claimed for a concise presentation")
    return bad


def _crossvalidate_part(spec: EnumSpec, part: Partition):
    checks: Counter = Counter()
    bad: list[Counterexample] = []
    notes: list[Counterexample] = []
    words = _partition_words(spec, part)
    for w in words:
        bad.extend(check_word(CyclicPresentation(part.n, w), checks, notes))
    return len(words), checks, bad, notes


def random_orbit_member(w: Word, rng: random.Random) -> Word:
    v = shift(w, rng.randrange(w.rank))
    v = cyclic_permute(v, rng.randrange(len(v)))
    return invert(v) if rng.random() < 0.5 else v


def crossvalidate(
    spec: EnumSpec,
    workers: Optional[int] = None,
    orbit_samples: int = 100,
    seed: int = 0,
) -> CrossValidationReport:
    start = time.perf_counter()
    rep = CrossValidationReport()
    for count, checks, bad, notes in _run_parts(_crossvalidate_part, spec, workers):
        rep.words += count
        rep.checks.update(checks)
        rep.counterexamples.extend(bad)
        rep.observations.extend(notes)
    if orbit_samples and spec.up_to_symmetry:
        # Reservoir-free: draw from the enumerated list deterministically.
        words = list(enumerate_words(spec))
        rng = random.Random(seed)
        for _ in range(min(orbit_samples, len(words))):
            w = words[rng.randrange(len(words))]
            v = random_orbit_member(w, rng)
            rep.checks["orbit"] += 1
            a = verdict_signature(CyclicPresentation(w.rank, w))
            b = verdict_signature(CyclicPresentation(v.rank, v))
            if a != b:
                rep.counterexamples.append(
                    Counterexample("orbit", w.rank, format_word(w), f"member {format_word(v)}: {a} != {b}")
                )
    rep.wall_time = time.perf_counter() - start
    return rep


# -- special hunt -----------------------------------------------------------


@dataclass(frozen=True)
class SpecialHit:
    n: int
    word: Word
    certificate: SpecialCertificate

    def to_json(self) -> dict:
        out = {"n": self.n, "word": format_word(self.word)}
        out.update(self.certificate.to_json())
        return out


def _special_part(spec: EnumSpec, part: Partition):
    hits = []
    for w in _partition_words(spec, part):
        cert = is_special_direct(CyclicPresentation(part.n, w))
        if cert.is_special:
            hits.append(SpecialHit(part.n, w, cert))
    return hits


def find_special(spec: EnumSpec, workers: Optional[int] = None) -> list[SpecialHit]:
    hits = [h for chunk in _run_parts(_special_part, spec, workers) for h in chunk]
    return sorted(hits, key=lambda h: (h.n, len(h.word), h.word.codes))


def special_jsonl(hits: Sequence[SpecialHit], wall_time: float) -> str:
    lines = [json.dumps(h.to_json(), sort_keys=True) for h in hits]
    lines.append(json.dumps({"summary": {"hits": len(hits), "wall_time": round(wall_time, 3)}}, sort_keys=True))
    return "\n".join(lines) + "\n"
