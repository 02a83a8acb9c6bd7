"""Exhaustive desk-scale machinery: free-tree generation, sequence filtering,
extremality verification, formula auditing, caterpillar counting, and the
conjecture explorer for the hyper-Wiener and lambda-Wiener indices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .extremal import (
    caterpillar_subtree_closed_form,
    extremal_spec,
    extremal_tree,
    max_subtrees_printed_detail,
    min_wiener_derivation,
    min_wiener_printed,
    printed_wiener_delta,
    spec_decomposition,
)
from .invariants import hyper_wiener, subtree_count, wiener_lambda, wiener_pairwise
from .sequence import (
    EccSequence,
    eccentric_sequence,
    require_valid,
    validate_tree_sequence,
)
from .tree import Tree, canonical_code, tree_to_text

LAMBDA_TOL = 1e-9  # relative tolerance for lambda-Wiener minimiser ties
DEFAULT_BUDGET = 12


class BudgetExceededError(ValueError):
    """Requested enumeration exceeds the configured order budget."""


def free_trees(n: int) -> list[Tree]:
    """All pairwise nonisomorphic trees on n vertices, sorted by canonical
    code.  Generation is delegated to networkx's free-tree generator; tests
    cross-check the counts against labelled enumeration plus dedup."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [Tree(1, ())]
    trees = [
        Tree(n, tuple(g.edges())) for g in nx.nonisomorphic_trees(n)
    ]
    trees.sort(key=canonical_code)
    return trees


def trees_with_sequence(s: EccSequence) -> list[Tree]:
    """The free trees on sum(m) vertices whose eccentric sequence is s."""
    if not validate_tree_sequence(s):
        return []
    return [t for t in free_trees(s.n) if eccentric_sequence(t) == s]


def valid_sequences(max_n: int, min_n: int = 3) -> list[EccSequence]:
    """All valid tree eccentric sequences with min_n <= n <= max_n,
    generated directly from the compact-form characterisation."""
    out = []
    for n in range(min_n, max_n + 1):
        for b1 in range(1, n):
            # m_1 = 1, diameter 2*b1, l = b1 + 1 distinct values
            out.extend(_sequences_for(n, b1, m1=1, l=b1 + 1))
            # m_1 = 2, diameter 2*b1 - 1, l = b1 distinct values
            if b1 >= 2:
                out.extend(_sequences_for(n, b1, m1=2, l=b1))
    out.sort(key=lambda s: (s.n, s.raw))
    return out


def _sequences_for(n: int, b1: int, m1: int, l: int) -> list[EccSequence]:
    parts = l - 1
    rest = n - m1
    if parts < 1 or rest < 2 * parts:
        return []
    result = []
    for combo in _compositions(rest, parts, minimum=2):
        result.append(EccSequence.from_compact(b1, (m1,) + combo))
    return result


def _compositions(total: int, parts: int, minimum: int = 0):
    """Ordered compositions of total into parts entries, each >= minimum."""
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


@dataclass(frozen=True)
class ExtremalityReport:
    sequence: EccSequence
    n: int
    trees_examined: int
    min_wiener: int
    min_wiener_achievers: tuple[bytes, ...]
    max_subtrees: int
    max_subtrees_achievers: tuple[bytes, ...]
    construction_is_min_w: bool
    construction_is_max_n: bool
    unique_min_w: bool
    unique_max_n: bool

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence.compact_str(),
            "n": self.n,
            "trees_examined": self.trees_examined,
            "min_wiener": self.min_wiener,
            "min_wiener_achievers": [c.decode() for c in self.min_wiener_achievers],
            "max_subtrees": str(self.max_subtrees),
            "max_subtrees_achievers": [c.decode() for c in self.max_subtrees_achievers],
            "construction_is_min_w": self.construction_is_min_w,
            "construction_is_max_n": self.construction_is_max_n,
            "unique_min_w": self.unique_min_w,
            "unique_max_n": self.unique_max_n,
        }


def _scan_invariants(trees: list[Tree], jobs: int = 1) -> list[tuple[bytes, int, int]]:
    """(canonical code, W, N) per tree, merged deterministically.

    The tree list is split into per-worker slices by position; results are
    re-sorted by canonical code, so the output is identical at any job count.
    """
    if jobs > 1 and len(trees) > 1:
        from multiprocessing import Pool

        chunks = [trees[k::jobs] for k in range(jobs)]
        with Pool(jobs) as pool:
            parts = pool.map(_scan_chunk, chunks)
        rows = [row for part in parts for row in part]
    else:
        rows = _scan_chunk(trees)
    rows.sort(key=lambda row: row[0])
    return rows


def _scan_chunk(trees: list[Tree]) -> list[tuple[bytes, int, int]]:
    return [(canonical_code(t), wiener_pairwise(t), subtree_count(t)) for t in trees]


def verify_extremal(
    s: EccSequence, max_n: int = DEFAULT_BUDGET, jobs: int = 1
) -> ExtremalityReport:
    """Enumerate every tree with sequence s and check that the constructed
    caterpillar is the unique Wiener minimiser and subtree maximiser."""
    require_valid(s)
    if s.n > max_n:
        raise BudgetExceededError(
            f"sequence order {s.n} exceeds enumeration budget {max_n}"
        )
    rows = _scan_invariants(trees_with_sequence(s), jobs=jobs)
    construction_code = canonical_code(extremal_tree(s))
    min_w = min(w for _, w, _ in rows)
    max_nsub = max(nsub for _, _, nsub in rows)
    min_achievers = tuple(code for code, w, _ in rows if w == min_w)
    max_achievers = tuple(code for code, _, nsub in rows if nsub == max_nsub)
    return ExtremalityReport(
        sequence=s,
        n=s.n,
        trees_examined=len(rows),
        min_wiener=min_w,
        min_wiener_achievers=min_achievers,
        max_subtrees=max_nsub,
        max_subtrees_achievers=max_achievers,
        construction_is_min_w=construction_code in min_achievers,
        construction_is_max_n=construction_code in max_achievers,
        unique_min_w=len(min_achievers) == 1,
        unique_max_n=len(max_achievers) == 1,
    )


def caterpillars_with_sequence(s: EccSequence) -> list[Tree]:
    """All nonisomorphic caterpillars with eccentric sequence s, generated
    directly from pendant distributions along the backbone."""
    if not validate_tree_sequence(s):
        return []
    q = s.bl - 1
    total = s.n - q  # pendants, path ends included
    seen: dict[bytes, Tree] = {}
    for c in _compositions(total, q, minimum=0):
        if q == 1:
            if c[0] < 2:
                continue
        elif c[0] < 1 or c[-1] < 1:
            continue
        t = _caterpillar_from_counts(c)
        if eccentric_sequence(t) == s:
            seen.setdefault(canonical_code(t), t)
    return [seen[code] for code in sorted(seen)]


def _caterpillar_from_counts(c: tuple[int, ...]) -> Tree:
    """Caterpillar with backbone 0..q-1 and c_i pendants at position i."""
    q = len(c)
    edges = [(i, i + 1) for i in range(q - 1)]
    next_id = q
    for pos, count in enumerate(c):
        for _ in range(count):
            edges.append((pos, next_id))
            next_id += 1
    return Tree(next_id, tuple(edges))


def count_caterpillars(s: EccSequence) -> int:
    """Number of nonisomorphic caterpillars with eccentric sequence s."""
    return len(caterpillars_with_sequence(s))


@dataclass(frozen=True)
class AuditRow:
    sequence: EccSequence
    n: int
    oracle_w: int
    derivation_w: int
    printed_w: int
    delta_w: int
    delta_w_identity_ok: bool
    oracle_n: int
    decomposition_n: int
    printed_n: Fraction
    delta_n: Fraction
    printed_n_truncated: bool

    @property
    def printed_w_matches(self) -> bool:
        return self.delta_w == 0

    @property
    def printed_n_matches(self) -> bool:
        return self.delta_n == 0

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence.compact_str(),
            "n": self.n,
            "oracle_W": self.oracle_w,
            "derivation_W": self.derivation_w,
            "printed_W": self.printed_w,
            "delta_W": self.delta_w,
            "delta_W_identity_ok": self.delta_w_identity_ok,
            "oracle_N": str(self.oracle_n),
            "decomposition_N": str(self.decomposition_n),
            "printed_N": str(self.printed_n),
            "delta_N": str(self.delta_n),
            "printed_N_truncated": self.printed_n_truncated,
        }


@dataclass(frozen=True)
class AuditReport:
    max_n: int
    rows: tuple[AuditRow, ...]

    @property
    def mismatching_rows(self) -> tuple[AuditRow, ...]:
        return tuple(
            r for r in self.rows if not (r.printed_w_matches and r.printed_n_matches)
        )

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "rows": [r.to_dict() for r in self.rows],
            "mismatching_sequences": [
                r.sequence.compact_str() for r in self.mismatching_rows
            ],
        }


def audit_formulas(max_n: int) -> AuditReport:
    """Compare printed theorem formulas against brute-force oracles for every
    valid sequence up to max_n.

    The derivation-based Wiener formula and the subtree decomposition are hard
    requirements: a mismatch with the oracle raises.  The printed formulas are
    only reported, with their deltas.
    """
    rows = []
    for s in valid_sequences(max_n):
        t = extremal_tree(s)
        oracle_w = wiener_pairwise(t)
        derivation_w = min_wiener_derivation(s)
        if derivation_w != oracle_w:
            raise AssertionError(
                f"derivation Wiener formula disagrees with oracle on {s.compact_str()}"
            )
        oracle_n = subtree_count(t)
        decomposition_n = caterpillar_subtree_closed_form(
            spec_decomposition(extremal_spec(s))
        )
        if decomposition_n != oracle_n:
            raise AssertionError(
                f"subtree decomposition disagrees with oracle on {s.compact_str()}"
            )
        printed_w = min_wiener_printed(s)
        printed_n, truncated = max_subtrees_printed_detail(s)
        rows.append(
            AuditRow(
                sequence=s,
                n=s.n,
                oracle_w=oracle_w,
                derivation_w=derivation_w,
                printed_w=printed_w,
                delta_w=derivation_w - printed_w,
                delta_w_identity_ok=(
                    derivation_w - printed_w == printed_wiener_delta(s)
                ),
                oracle_n=oracle_n,
                decomposition_n=decomposition_n,
                printed_n=printed_n,
                delta_n=oracle_n - printed_n,
                printed_n_truncated=truncated,
            )
        )
    return AuditReport(max_n=max_n, rows=tuple(rows))


@dataclass(frozen=True)
class ConjectureRow:
    sequence: EccSequence
    index: str  # "HW" or "lambda=<value>"
    minimizers: tuple[bytes, ...]
    construction_is_min: bool
    unique_min: bool
    counterexamples: tuple[str, ...]  # tree files, when the construction loses

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence.compact_str(),
            "index": self.index,
            "minimizers": [c.decode() for c in self.minimizers],
            "construction_is_min": self.construction_is_min,
            "unique_min": self.unique_min,
            "counterexamples": list(self.counterexamples),
        }


@dataclass(frozen=True)
class ConjectureReport:
    max_n: int
    lambdas: tuple[float, ...]
    rows: tuple[ConjectureRow, ...]

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "lambdas": list(self.lambdas),
            "rows": [r.to_dict() for r in self.rows],
        }


def explore_conjecture(max_n: int, lambdas: tuple[float, ...]) -> ConjectureReport:
    """For each valid sequence up to max_n, report which trees minimise the
    hyper-Wiener index and each lambda-Wiener index.  Evidence only: nothing
    is asserted about the open conjecture."""
    rows = []
    for n in range(3, max_n + 1):
        groups: dict[EccSequence, list[Tree]] = {}
        for t in free_trees(n):
            groups.setdefault(eccentric_sequence(t), []).append(t)
        for s in sorted(groups, key=lambda s: s.raw):
            trees = groups[s]
            construction_code = canonical_code(extremal_tree(s))
            # hyper-Wiener: exact integers, exact ties
            hw = [(canonical_code(t), hyper_wiener(t), t) for t in trees]
            rows.append(_conjecture_row(s, "HW", hw, construction_code, exact=True))
            for lam in lambdas:
                wl = [(canonical_code(t), wiener_lambda(t, lam), t) for t in trees]
                rows.append(
                    _conjecture_row(
                        s, f"lambda={lam:g}", wl, construction_code, exact=False
                    )
                )
    return ConjectureReport(max_n=max_n, lambdas=tuple(lambdas), rows=tuple(rows))


def _conjecture_row(s, index, scored, construction_code, exact):
    scored = sorted(scored, key=lambda row: row[0])
    best = min(value for _, value, _ in scored)
    if exact:
        winners = [(code, t) for code, value, t in scored if value == best]
    else:
        cutoff = best * (1 + LAMBDA_TOL) + LAMBDA_TOL
        winners = [(code, t) for code, value, t in scored if value <= cutoff]
    codes = tuple(code for code, _ in winners)
    is_min = construction_code in codes
    counterexamples = ()
    if not is_min:
        counterexamples = tuple(tree_to_text(t) for _, t in winners)
    return ConjectureRow(
        sequence=s,
        index=index,
        minimizers=codes,
        construction_is_min=is_min,
        unique_min=len(codes) == 1,
        counterexamples=counterexamples,
    )
