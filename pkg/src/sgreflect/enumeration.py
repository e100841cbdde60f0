"""Exhaustive generation of finite semigroups up to isomorphism, corpus
caching, and counterexample surveys.

Generation is cell-by-cell backtracking over the multiplication table with
incremental associativity pruning: a partial table is rejected as soon as
some fully determined triple fails.  Cell (0,0) is pinned to 0, which is
sound because every nonempty finite semigroup has an idempotent and the
canonical form relabels one to element 0.  Completed tables are
canonicalized and deduplicated, so corpora are exactly the isomorphism
classes in increasing table order.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from functools import cache
from itertools import product as iter_product
from pathlib import Path
from typing import Iterator, Sequence

from . import __version__
from .core import FiniteSemigroup, Table, canonical_form, enumerate_homomorphisms
from .errors import OracleDisagreement, OrderTooLarge
from .galois import (
    PropertyReport,
    check_localization_condition,
    check_semi_left_exact,
    check_simple,
    check_stable_units_pair,
    oracle_pullback_preserved,
    oracle_semi_left_exact,
    oracle_stable_units,
)
from .reflection import Identity, VarietyConfig, format_identity, satisfies_identities

# Naive table space at order 5 is 5^25; nothing in scope needs it.
HARD_ORDER_BOUND = 4


@dataclass(frozen=True)
class Corpus:
    """All semigroups of one order up to isomorphism, optionally filtered."""

    order: int
    variety_filter: frozenset[Identity] | None
    tables: tuple[Table, ...]
    provenance: str


def filter_tag(ids: frozenset[Identity] | None) -> str:
    if not ids:
        return "none"
    names = sorted(format_identity(i) for i in ids)
    if names == ["xx=x"]:
        return "band"
    if names == ["xx=x", "xy=yx"]:
        return "slat"
    return hashlib.sha256(";".join(names).encode()).hexdigest()[:8]


def _associative_tables(n: int) -> Iterator[Table]:
    """Backtracking generator; yields every associative table with t[0][0]=0."""
    if n == 0:
        yield ()
        return
    t = [[-1] * n for _ in range(n)]
    t[0][0] = 0
    cells = [(i, j) for i in range(n) for j in range(n)][1:]
    rn = range(n)

    def consistent(a: int, b: int) -> bool:
        # Check every triple (i,j,k) that cell (a,b) can complete, in any of
        # its four roles: (i,j), (j,k), (i*j, k) or (i, j*k).
        v = t[a][b]
        for k in rn:
            q = t[b][k]
            if q >= 0:
                pk = t[v][k]
                if pk >= 0:
                    iq = t[a][q]
                    if iq >= 0 and pk != iq:
                        return False
        for i in rn:
            p = t[i][a]
            if p >= 0:
                pk = t[p][b]
                if pk >= 0:
                    iq = t[i][v]
                    if iq >= 0 and pk != iq:
                        return False
        for i in rn:
            ti = t[i]
            for j in rn:
                if ti[j] == a:
                    q = t[j][b]
                    if q >= 0:
                        iq = ti[q]
                        if iq >= 0 and v != iq:
                            return False
        ta = t[a]
        for j in rn:
            tj = t[j]
            p = ta[j]
            if p < 0:
                continue
            tp = t[p]
            for k in rn:
                if tj[k] == b:
                    pk = tp[k]
                    if pk >= 0 and pk != v:
                        return False
        return True

    last = len(cells)

    def fill(idx: int) -> Iterator[Table]:
        if idx == last:
            yield tuple(tuple(row) for row in t)
            return
        a, b = cells[idx]
        for v in rn:
            t[a][b] = v
            if consistent(a, b):
                yield from fill(idx + 1)
        t[a][b] = -1

    yield from fill(0)


def _naive_tables(n: int) -> Iterator[Table]:
    """Scan all n^(n*n) tables; independent oracle for the pruned generator."""
    for flat in iter_product(range(n), repeat=n * n):
        table = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if _is_associative(table, n):
            yield table


def _is_associative(t: Table, n: int) -> bool:
    for i in range(n):
        for j in range(n):
            ij = t[i][j]
            for k in range(n):
                if t[ij][k] != t[i][t[j][k]]:
                    return False
    return True


def _provenance(n: int, ids: frozenset[Identity] | None, count: int) -> str:
    return (f"sgreflect {__version__} order={n} filter={filter_tag(ids)} "
            f"generator=backtracking count={count}")


def enumerate_semigroups(
    n: int, identity_filter: frozenset[Identity] | None = None, *, naive: bool = False
) -> Corpus:
    """All semigroups of order n up to isomorphism, in increasing table order.

    With naive=True the exhaustive table scan is used instead of the pruned
    backtracking generator (cross-check only; infeasible past order 3).
    """
    if n > HARD_ORDER_BOUND:
        raise OrderTooLarge(f"order {n} exceeds the enumeration bound {HARD_ORDER_BOUND}")
    ids = frozenset(identity_filter) if identity_filter else None
    generator = _naive_tables(n) if naive else _associative_tables(n)
    seen = {canonical_form(FiniteSemigroup(n, t)) for t in generator}
    tables = sorted(seen)
    if ids:
        tables = [t for t in tables
                  if satisfies_identities(FiniteSemigroup(n, t), ids)]
    return Corpus(n, ids, tuple(tables), _provenance(n, ids, len(tables)))


def corpus_members(corpus: Corpus) -> list[FiniteSemigroup]:
    return [FiniteSemigroup(corpus.order, t) for t in corpus.tables]


@cache
def cached_corpus(n: int, identity_filter: frozenset[Identity] | None = None) -> Corpus:
    """In-process memo of enumerate_semigroups; corpora are immutable."""
    return enumerate_semigroups(n, identity_filter)


# -- corpus cache ------------------------------------------------------------

def default_cache_dir() -> Path:
    env = os.environ.get("REFLECT_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "sgreflect"


def corpus_filename(order: int, ids: frozenset[Identity] | None) -> str:
    return f"order{order}-{filter_tag(ids)}.sgt"


def corpus_to_text(corpus: Corpus) -> str:
    from .sgt import format_sgt  # local import; sgt depends only on core

    return format_sgt(
        [(None, FiniteSemigroup(corpus.order, t)) for t in corpus.tables],
        provenance=corpus.provenance,
    )


def corpus_from_text(text: str, order: int, ids: frozenset[Identity] | None) -> Corpus:
    from .sgt import parse_sgt

    doc = parse_sgt(text)
    tables = tuple(block.semigroup.table for block in doc.blocks)
    return Corpus(order, ids, tables, doc.provenance or "")


def load_or_generate(
    order: int,
    identity_filter: frozenset[Identity] | None = None,
    cache_dir: Path | None = None,
    use_cache: bool = True,
) -> Corpus:
    """Cached corpus lookup; regenerates when the provenance header does not
    match the current code version and parameters."""
    ids = frozenset(identity_filter) if identity_filter else None
    if not use_cache:
        return enumerate_semigroups(order, ids)
    cache_dir = cache_dir or default_cache_dir()
    path = cache_dir / corpus_filename(order, ids)
    if path.exists():
        corpus = corpus_from_text(path.read_text(), order, ids)
        if corpus.provenance == _provenance(order, ids, len(corpus.tables)):
            return corpus
    corpus = enumerate_semigroups(order, ids)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path.write_text(corpus_to_text(corpus))
    return corpus


def corpora_up_to(
    max_order: int,
    identity_filter: frozenset[Identity] | None = None,
    cache_dir: Path | None = None,
    use_cache: bool = True,
) -> list[Corpus]:
    return [load_or_generate(n, identity_filter, cache_dir, use_cache)
            for n in range(max_order + 1)]


def corpus_hash(corpora: Sequence[Corpus]) -> str:
    digest = hashlib.sha256()
    for corpus in corpora:
        digest.update(corpus_to_text(corpus).encode())
    return digest.hexdigest()


# -- surveys -----------------------------------------------------------------

@dataclass
class SurveyResult:
    variety: str
    max_order: int
    reports: list[PropertyReport]
    corpus_counts: dict[int, int]
    corpus_hash: str


def _survey_members(V: VarietyConfig, max_order: int, cache_dir, use_cache):
    ids = V.domain_identities if V.domain_identities else None
    corpora = corpora_up_to(max_order, ids, cache_dir, use_cache)
    members = [m for c in corpora for m in corpus_members(c)]
    counts = {c.order: len(c.tables) for c in corpora}
    return members, counts, corpus_hash(corpora)


def survey(
    V: VarietyConfig,
    max_order: int,
    properties: Sequence[str],
    *,
    include_oracles: bool = False,
    oracle_bound: int = 3,
    max_witnesses: int | None = None,
    cache_dir: Path | None = None,
    use_cache: bool = True,
) -> SurveyResult:
    """Run the requested property checks over every corpus member, pair, or
    cospan within bounds, in deterministic order.

    max_witnesses stops a cospan sweep early once that many counterexamples
    have been recorded (the scan order is fixed, so results stay
    deterministic).  With include_oracles the definitional oracles are run
    alongside the component-based checks and any disagreement raises
    OracleDisagreement.
    """
    unknown = [p for p in properties if p not in
               ("semi_left_exact", "stable_units", "simple",
                "localization_sufficient", "left_exact_oracle")]
    if unknown:
        raise ValueError(f"unknown properties {unknown}")
    members, counts, digest = _survey_members(V, max_order, cache_dir, use_cache)
    base_bounds = {"max_order": max_order, "corpus_counts": dict(counts)}
    reports = []

    def bounds(**extra) -> dict:
        out = dict(base_bounds)
        out.update(extra)
        return out

    if "semi_left_exact" in properties:
        witnesses = []
        for C in members:
            rep = check_semi_left_exact(C, V)
            if include_oracles:
                oracle = oracle_semi_left_exact(C, V, oracle_bound)
                if oracle.verdict != rep.verdict:
                    raise OracleDisagreement(
                        f"semi_left_exact on {C.rows()}: "
                        f"check={rep.verdict} oracle={oracle.verdict}")
            witnesses.extend(rep.witnesses)
        reports.append(PropertyReport(
            V.name, "semi_left_exact", not witnesses, witnesses,
            bounds(oracles=include_oracles)))

    if "stable_units" in properties:
        witnesses = []
        for i, C in enumerate(members):
            for D in members[i:]:
                witnesses.extend(check_stable_units_pair(C, D, V).witnesses)
            if include_oracles:
                oracle = oracle_stable_units(C, V, oracle_bound)
                pairwise = all(
                    check_stable_units_pair(C, D, V).verdict
                    for D in _member_corpus_cached(V, oracle_bound))
                if oracle.verdict != pairwise:
                    raise OracleDisagreement(
                        f"stable_units on {C.rows()}: "
                        f"pairwise={pairwise} oracle={oracle.verdict}")
        reports.append(PropertyReport(
            V.name, "stable_units", not witnesses, witnesses,
            bounds(oracles=include_oracles)))

    if "simple" in properties:
        witnesses = []
        for A in members:
            for B in members:
                for f in enumerate_homomorphisms(A, B):
                    witnesses.extend(check_simple(f, V).witnesses)
        reports.append(PropertyReport(
            V.name, "simple", not witnesses, witnesses, bounds()))

    for prop, per_cospan in (
        ("localization_sufficient", check_localization_condition),
        ("left_exact_oracle", oracle_pullback_preserved),
    ):
        if prop not in properties:
            continue
        witnesses = []
        scanned = 0
        stopped = False
        for C in members:
            incoming = [(A, f) for A in members
                        for f in enumerate_homomorphisms(A, C)]
            for _, f in incoming:
                for _, g in incoming:
                    scanned += 1
                    witnesses.extend(per_cospan(f, g, V).witnesses)
                    if max_witnesses is not None and len(witnesses) >= max_witnesses:
                        stopped = True
                        break
                if stopped:
                    break
            if stopped:
                break
        reports.append(PropertyReport(
            V.name, prop, not witnesses, witnesses,
            bounds(scanned_cospans=scanned, max_witnesses=max_witnesses,
                   stopped_early=stopped)))

    return SurveyResult(V.name, max_order, reports, counts, digest)


def _member_corpus_cached(V: VarietyConfig, max_order: int) -> list[FiniteSemigroup]:
    ids = V.domain_identities if V.domain_identities else None
    out = []
    for n in range(max_order + 1):
        out.extend(corpus_members(cached_corpus(n, ids)))
    return out
