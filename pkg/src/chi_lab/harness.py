"""Batch engines: verify proven bounds over graph streams, scan for Reed
violators and connectivity-dichotomy failures, persist per-graph records.

Graphs are processed independently, optionally by a worker pool sized via
the CHI_LAB_THREADS environment variable. Results are emitted strictly in
input order and every solver is deterministic, so identical inputs and
options produce byte-identical record output regardless of worker count.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import os
import sys
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import IO, Iterable, Iterator, Optional, Union

from .bounds import (
    BOUND_IDS,
    BoundEvaluation,
    Q4,
    cor5_quarters,
    cor6_quarters,
    cor7_quarters,
    cor9_quarters,
    cor10_quarters,
    cor11_quarters,
    eps_bound,
    eps_bound_holds,
    prop1_quarters,
    prop2_quarters,
    prop3_quarters,
    prop4_quarters,
    prop12_threshold,
    prop12_threshold_met,
    reed_bound,
)
from .graphs import (
    Graph,
    complement,
    component_count,
    encode_graph6,
    graph_from_edge_mask,
    induced_subgraph,
    iter_bits,
    parse_graph6,
)
from .invariants import (
    InvariantReport,
    chromatic_number,
    clique_number,
    independence_number,
    invariant_report,
    vertex_connectivity,
)

ENUMERATION_GUARD = 7


class HarnessAbort(RuntimeError):
    """Run aborted (fail-fast on a skipped or violating graph)."""


@dataclass(frozen=True)
class HarnessOptions:
    """Shared engine options; ``threads=0`` resolves via CHI_LAB_THREADS."""

    with_excess: bool = False
    strategy: str = "heuristic"
    fail_fast: bool = False
    max_n: Optional[int] = None
    threads: int = 0
    eps: tuple[tuple[int, int], ...] = ()
    corrupt_bound: Optional[str] = None
    emit: bool = False
    enum_n: Optional[int] = None

    @property
    def solver_guard(self) -> int:
        if self.max_n is not None:
            return self.max_n
        return 12 if self.with_excess else 16


@dataclass(frozen=True)
class EnumerateSource:
    """Marker source: all labeled graphs on n vertices, edge-bitmask order."""

    n: int


@dataclass(frozen=True)
class StrategyPlan:
    """Parameter sets the harness feeds to the subgraph-dependent bounds."""

    h_sets: tuple[int, ...]
    cut_sets: tuple[int, ...]
    prop1_families: tuple[tuple[int, ...], ...]


@dataclass
class Violation:
    graph6: str
    bound_id: str
    params: dict
    value: str
    chi: int

    def line(self) -> str:
        params = json.dumps(self.params, separators=(",", ":"))
        return (
            f"VIOLATION graph6={self.graph6} bound={self.bound_id} "
            f"params={params} value={self.value} chi={self.chi}"
        )


@dataclass
class VerificationSummary:
    graphs_processed: int = 0
    bound_checks: int = 0
    violations: list[Violation] = field(default_factory=list)
    skipped: int = 0
    lemma_upper_skipped: int = 0  # graphs with alpha < 3, logged not asserted
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class ReedViolator:
    graph6: str
    chi: int
    reed: int
    kappa_bar: int
    ratio: Optional[float]

    def line(self) -> str:
        return (
            f"VIOLATOR graph6={self.graph6} chi={self.chi} reed={self.reed} "
            f"kappa_bar={self.kappa_bar} kappa_log_ratio={self.ratio}"
        )


@dataclass
class ReedScanSummary:
    graphs_processed: int = 0
    violators: list[ReedViolator] = field(default_factory=list)
    min_kappa_log_ratio: Optional[float] = None
    skipped: int = 0
    elapsed: float = 0.0


@dataclass
class EpsScanSummary:
    graphs_processed: int = 0
    eps: tuple[str, ...] = ()
    bound_hold_counts: dict = field(default_factory=dict)
    dichotomy_failures: list[tuple[str, str]] = field(default_factory=list)
    skipped: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.dichotomy_failures


# -- subgraph strategy ------------------------------------------------------------


def minimal_cut_sets(g: Graph) -> list[int]:
    """All minimal vertex cut-sets of g (no proper subset is a cut-set).

    When g is disconnected the only minimal cut-set is the empty set.
    Exponential scan; intended for the exhaustive strategy at small n.
    """
    cuts = set()
    for k in range(1 << g.n):
        if component_count(g, removed=k) >= 2:
            cuts.add(k)
    minimal = []
    for k in sorted(cuts):
        if k == 0:
            minimal.append(k)
            continue
        sub = (k - 1) & k  # largest proper submask
        is_minimal = True
        while True:
            if sub in cuts:
                is_minimal = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & k
        if is_minimal:
            minimal.append(k)
    return minimal


def greedy_independent_partition(g: Graph) -> list[int]:
    """Partition vertices into independent sets, greedily by lowest index."""
    remaining = g.all_mask
    parts = []
    while remaining:
        s = 0
        for v in iter_bits(remaining):
            if g.adj[v] & s == 0:
                s |= 1 << v
        parts.append(s)
        remaining &= ~s
    return parts


def subgraph_strategy(g: Graph, r: InvariantReport, strategy: str) -> StrategyPlan:
    """Instantiate the H sets, cut-sets K, and independent-set families.

    "exhaustive": all non-empty H plus every minimal cut-set of the
    complement (guarded to n <= 8). "heuristic": H from the whole graph and
    the independence/excess witnesses; K from the minimum-cut witness of
    the complement when it is non-empty.
    """
    if strategy == "exhaustive":
        if g.n > 8:
            raise HarnessAbort(f"exhaustive strategy supports n <= 8, got n={g.n}")
        h_sets = tuple(range(1, 1 << g.n))
        cut_sets = tuple(minimal_cut_sets(complement(g)))
    elif strategy == "heuristic":
        candidates = [g.all_mask, r.independent_set]
        if r.excess_set is not None:
            candidates.append(r.excess_set)
        h_sets = tuple(dict.fromkeys(m for m in candidates if m))
        cut_sets = (r.min_cut_bar,) if r.min_cut_bar else ()
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    families = (
        (r.independent_set,),
        tuple(1 << v for v in range(g.n)),
        tuple(greedy_independent_partition(g)),
    )
    return StrategyPlan(h_sets=h_sets, cut_sets=cut_sets, prop1_families=families)


# -- per-graph evaluation ------------------------------------------------------------


def _evaluate_bounds(
    g: Graph, r: InvariantReport, plan: StrategyPlan, corrupt: Optional[str]
) -> list[BoundEvaluation]:
    """Every proven-bound instance the plan describes, in a fixed order."""
    n = g.n
    omega, delta = r.clique, r.max_degree
    alpha, kappa_bar = r.independence, r.kappa_bar
    chi_cache = {g.all_mask: r.chromatic}

    def chi_of(mask: int) -> int:
        c = chi_cache.get(mask)
        if c is None:
            c = chromatic_number(induced_subgraph(g, mask))[0]
            chi_cache[mask] = c
        return c

    evals: list[BoundEvaluation] = []

    def add(bound_id: str, params: dict, quarters: int) -> None:
        if corrupt == bound_id:
            quarters -= 4
        evals.append(BoundEvaluation(bound_id, params, Q4(quarters)))

    for fam in plan.prop1_families:
        total = sum(s.bit_count() for s in fam)
        add("prop1", {"sets": list(fam)}, prop1_quarters(omega, n, total, len(fam)))
    add("prop2", {}, prop2_quarters(omega, n, delta))
    for h in plan.h_sets:
        add("prop3", {"h": h}, prop3_quarters(omega, n, delta, chi_of(h), h.bit_count()))
    for k in plan.cut_sets:
        chi_k = chi_of(k) if k else 0
        for h in plan.h_sets:
            rest = h & ~k
            if rest == 0:
                continue
            add(
                "prop4",
                {"k": k, "h": h},
                prop4_quarters(omega, delta, chi_k, chi_of(rest), rest.bit_count()),
            )
    for h in plan.h_sets:
        add(
            "cor5",
            {"h": h},
            cor5_quarters(omega, delta, kappa_bar, chi_of(h), h.bit_count()),
        )
    for k in plan.cut_sets:
        if k:
            chi_k = chi_of(k)
            alpha_k = independence_number(induced_subgraph(g, k))[0]
        else:
            chi_k = alpha_k = 0
        add("cor6", {"k": k}, cor6_quarters(omega, delta, chi_k, alpha_k, alpha))
    add("cor7", {}, cor7_quarters(omega, delta, kappa_bar, alpha))
    if r.excess is not None:
        add("cor9", {}, cor9_quarters(omega, n, delta, r.excess))
        add("cor10", {}, cor10_quarters(omega, delta, r.delta_bar, r.excess))
        add("cor11", {}, cor11_quarters(omega, delta, kappa_bar, r.excess))
    return evals


def _jsonable_params(params: dict) -> dict:
    out = {}
    for key, value in params.items():
        if key in ("h", "k"):
            out[key] = sorted(iter_bits(value))
        elif key == "sets":
            out[key] = [sorted(iter_bits(s)) for s in value]
        else:
            out[key] = value
    return out


def _reed_evaluation(r: InvariantReport, corrupt: Optional[str]) -> tuple[int, BoundEvaluation]:
    value = reed_bound(r)
    if corrupt == "reed":
        value -= 1
    ev = BoundEvaluation("reed", {}, Q4.from_int(value), sound=value >= r.chromatic)
    return value, ev


def build_record(
    g6: str,
    r: InvariantReport,
    evaluations: list[BoundEvaluation],
    reed_value: int,
    eps_verdicts: Optional[list[dict]] = None,
) -> dict:
    """Assemble one ScanRecord dict with a fixed field order."""
    for ev in evaluations:
        ev.params = _jsonable_params(ev.params)
    return {
        "graph6": g6,
        "invariants": r.to_dict(),
        "evaluations": [ev.to_dict() for ev in evaluations],
        "reed_violation": r.chromatic > reed_value,
        "kappa_log_ratio": (r.kappa_bar / math.log2(r.n)) if r.n >= 2 else None,
        "eps_verdicts": eps_verdicts if eps_verdicts is not None else [],
    }


def _collapse_tightest(evals: list[BoundEvaluation]) -> list[BoundEvaluation]:
    """Tightest (minimum value) instance per bound id, in BOUND_IDS order."""
    best: dict[str, BoundEvaluation] = {}
    for ev in evals:
        cur = best.get(ev.bound_id)
        if cur is None or ev.value.quarters < cur.value.quarters:
            best[ev.bound_id] = ev
    return [best[bid] for bid in BOUND_IDS if bid in best]


# -- worker plumbing -------------------------------------------------------------------

_WORKER_OPTS: Optional[HarnessOptions] = None


def _init_worker(opts: HarnessOptions) -> None:
    global _WORKER_OPTS
    _WORKER_OPTS = opts


def _item_graph(item: Union[str, int]) -> Graph:
    if isinstance(item, str):
        return parse_graph6(item)
    assert _WORKER_OPTS is not None and _WORKER_OPTS.enum_n is not None
    return graph_from_edge_mask(_WORKER_OPTS.enum_n, item)


def _invariants_worker(item):
    opts = _WORKER_OPTS
    g = _item_graph(item)
    if g.n > opts.solver_guard:
        return ("skip", g.n)
    r = invariant_report(g, with_excess=opts.with_excess)
    reed_value, reed_ev = _reed_evaluation(r, opts.corrupt_bound)
    return ("ok", build_record(encode_graph6(g), r, [reed_ev], reed_value))


def _bounds_worker(item):
    opts = _WORKER_OPTS
    g = _item_graph(item)
    if g.n > opts.solver_guard or (opts.strategy == "exhaustive" and g.n > 8):
        return ("skip", g.n)
    r = invariant_report(g, with_excess=opts.with_excess)
    plan = subgraph_strategy(g, r, opts.strategy)
    evals = _evaluate_bounds(g, r, plan, opts.corrupt_bound)
    for ev in evals:
        ev.sound = ev.value.at_least(r.chromatic)
    reed_value, reed_ev = _reed_evaluation(r, opts.corrupt_bound)
    evals.append(reed_ev)
    return ("ok", build_record(encode_graph6(g), r, evals, reed_value))


def _verify_worker(item):
    opts = _WORKER_OPTS
    g = _item_graph(item)
    if g.n > opts.solver_guard or (opts.strategy == "exhaustive" and g.n > 8):
        return ("skip", g.n)
    r = invariant_report(g, with_excess=opts.with_excess)
    plan = subgraph_strategy(g, r, opts.strategy)
    evals = _evaluate_bounds(g, r, plan, opts.corrupt_bound)
    chi = r.chromatic
    checks = 0
    violations: list[tuple] = []
    g6: Optional[str] = None

    def graph6() -> str:
        nonlocal g6
        if g6 is None:
            g6 = encode_graph6(g)
        return g6

    for ev in evals:
        sound = ev.value.quarters >= 4 * chi
        ev.sound = sound
        checks += 1
        if not sound:
            violations.append(
                (graph6(), ev.bound_id, _jsonable_params(ev.params), ev.value.exact_str(), chi)
            )
    lemma_upper_skipped = 0
    if r.excess is not None:
        eta, alpha, n = r.excess, r.independence, r.n
        q9 = cor9_quarters(r.clique, n, r.max_degree, eta)
        q10 = cor10_quarters(r.clique, r.max_degree, r.delta_bar, eta)
        checks += 1
        if q9 != q10:
            violations.append(
                (graph6(), "cor9_cor10_identity", {}, f"{q9}/4 != {q10}/4", chi)
            )
        checks += 1
        if eta < alpha - 3:
            violations.append(
                (graph6(), "lemma_alpha_excess", {}, f"eta={eta} < alpha-3={alpha - 3}", chi)
            )
        checks += 1
        if eta < n - 3 * chi:
            violations.append(
                (graph6(), "lemma_order_excess", {}, f"eta={eta} < n-3chi={n - 3 * chi}", chi)
            )
        if alpha >= 3:
            checks += 1
            if eta * alpha > (alpha - 3) * n:
                violations.append(
                    (
                        graph6(),
                        "lemma_excess_upper",
                        {},
                        f"eta={eta} > (alpha-3)n/alpha={(alpha - 3) * n}/{alpha}",
                        chi,
                    )
                )
        else:
            lemma_upper_skipped = 1
    record = None
    if opts.emit:
        reed_value, reed_ev = _reed_evaluation(r, opts.corrupt_bound)
        tightest = _collapse_tightest(evals)
        tightest.append(reed_ev)
        record = build_record(graph6(), r, tightest, reed_value)
    return ("ok", checks, violations, lemma_upper_skipped, record)


def _reed_worker(item):
    opts = _WORKER_OPTS
    g = _item_graph(item)
    if g.n > opts.solver_guard:
        return ("skip", g.n)
    violator = None
    record = None
    if opts.emit:
        r = invariant_report(g, with_excess=opts.with_excess)
        reed_value, reed_ev = _reed_evaluation(r, opts.corrupt_bound)
        record = build_record(encode_graph6(g), r, [reed_ev], reed_value)
        chi, kappa_bar = r.chromatic, r.kappa_bar
    else:
        chi = chromatic_number(g)[0]
        omega = clique_number(g)[0]
        reed_value = (omega + g.max_degree() + 1 + 1) // 2
        if opts.corrupt_bound == "reed":
            reed_value -= 1
        kappa_bar = None
    if chi > reed_value:
        if kappa_bar is None:
            kappa_bar = vertex_connectivity(complement(g))[0]
        ratio = kappa_bar / math.log2(g.n) if g.n >= 2 else None
        violator = (encode_graph6(g), chi, reed_value, kappa_bar, ratio)
    return ("ok", violator, record)


def _eps_worker(item):
    opts = _WORKER_OPTS
    g = _item_graph(item)
    if g.n > opts.solver_guard:
        return ("skip", g.n)
    r = None
    if opts.emit:
        r = invariant_report(g, with_excess=opts.with_excess)
        chi, omega, delta = r.chromatic, r.clique, r.max_degree
        kappa_bar: Optional[int] = r.kappa_bar
    else:
        chi = chromatic_number(g)[0]
        omega = clique_number(g)[0]
        delta = g.max_degree()
        kappa_bar = None
    holds = []
    failures = []
    verdicts: Optional[list[dict]] = [] if opts.emit else None
    for num, den in opts.eps:
        ok = eps_bound_holds(chi, omega, delta, num, den)
        holds.append(ok)
        eps_str = f"{num}/{den}"
        met: Optional[bool] = None
        if not ok:
            if kappa_bar is None:
                kappa_bar = vertex_connectivity(complement(g))[0]
            met = prop12_threshold_met(g.n, Fraction(num, den), kappa_bar)
            if not met:
                failures.append(eps_str)
        if verdicts is not None:
            threshold = prop12_threshold(g.n, Fraction(num, den)) if g.n >= 2 else None
            verdicts.append(
                {
                    "eps": eps_str,
                    "bound_holds": ok,
                    "threshold": threshold,
                    "threshold_holds": met,
                }
            )
    record = None
    g6 = encode_graph6(g) if (failures or opts.emit) else None
    if opts.emit:
        assert r is not None
        reed_value, reed_ev = _reed_evaluation(r, opts.corrupt_bound)
        evals = [reed_ev]
        for num, den in opts.eps:
            value = eps_bound(r, Fraction(num, den))
            evals.append(
                BoundEvaluation(
                    "eps", {"eps": f"{num}/{den}"}, value, sound=value >= chi
                )
            )
        record = build_record(g6, r, evals, reed_value, eps_verdicts=verdicts)
    return ("ok", tuple(holds), failures, g6, record)


_WORKERS = {
    "invariants": _invariants_worker,
    "bounds": _bounds_worker,
    "verify": _verify_worker,
    "reed": _reed_worker,
    "eps": _eps_worker,
}


def resolve_threads(requested: int = 0) -> int:
    """Explicit request wins, then CHI_LAB_THREADS, then hardware count."""
    if requested and requested > 0:
        return requested
    env = os.environ.get("CHI_LAB_THREADS", "").strip()
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("CHI_LAB_THREADS must be >= 1")
        return value
    return os.cpu_count() or 1


def _finalize_opts(opts: HarnessOptions, emit: bool) -> HarnessOptions:
    corrupt = opts.corrupt_bound or os.environ.get("CHI_LAB_CORRUPT_BOUND") or None
    return replace(
        opts,
        threads=resolve_threads(opts.threads),
        emit=emit,
        corrupt_bound=corrupt,
    )


def _prepare_source(
    source: Union[EnumerateSource, Iterable], opts: HarnessOptions
) -> tuple[Iterable, HarnessOptions, Optional[int]]:
    if isinstance(source, EnumerateSource):
        if not 1 <= source.n <= ENUMERATION_GUARD:
            raise HarnessAbort(
                f"enumeration supports 1 <= n <= {ENUMERATION_GUARD}, got {source.n}"
            )
        total = 1 << (source.n * (source.n - 1) // 2)
        return range(total), replace(opts, enum_n=source.n), total

    def lines() -> Iterator[str]:
        for entry in source:
            if isinstance(entry, Graph):
                yield encode_graph6(entry)
            else:
                s = str(entry).strip()
                if not s or s.startswith(">>"):
                    continue
                yield s

    return lines(), opts, None


def _pool_results(kind: str, opts: HarnessOptions, items: Iterable, total: Optional[int]):
    worker = _WORKERS[kind]
    if opts.threads <= 1:
        _init_worker(opts)
        for item in items:
            yield worker(item)
        return
    if total is not None:
        chunksize = max(1, min(4096, total // (opts.threads * 8) or 1))
    else:
        chunksize = 64
    with multiprocessing.Pool(
        opts.threads, initializer=_init_worker, initargs=(opts,)
    ) as pool:
        yield from pool.imap(worker, items, chunksize)


# -- record output -------------------------------------------------------------------

CSV_COLUMNS = [
    "graph6",
    "n",
    "max_degree",
    "chromatic",
    "clique",
    "independence",
    "kappa_bar",
    "delta_bar",
    "excess",
    "witnesses",
    "evaluations",
    "reed_violation",
    "kappa_log_ratio",
    "eps_verdicts",
]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


class RecordWriter:
    """Streams record dicts as jsonl or csv with a fixed field layout."""

    def __init__(self, fh: IO[str], fmt: str = "jsonl"):
        if fmt not in ("jsonl", "csv"):
            raise ValueError(f"unknown record format {fmt!r}")
        self.fh = fh
        self.fmt = fmt
        if fmt == "csv":
            fh.write(",".join(CSV_COLUMNS) + "\n")

    def write(self, record: dict) -> None:
        if self.fmt == "jsonl":
            self.fh.write(json.dumps(record, separators=(",", ":")) + "\n")
            return
        inv = record["invariants"]
        row = [
            _csv_cell(record["graph6"]),
            _csv_cell(inv["n"]),
            _csv_cell(inv["max_degree"]),
            _csv_cell(inv["chromatic"]),
            _csv_cell(inv["clique"]),
            _csv_cell(inv["independence"]),
            _csv_cell(inv["kappa_bar"]),
            _csv_cell(inv["delta_bar"]),
            _csv_cell(inv["excess"]),
            _csv_cell(inv["witnesses"]),
            _csv_cell(record["evaluations"]),
            _csv_cell(record["reed_violation"]),
            _csv_cell(record["kappa_log_ratio"]),
            _csv_cell(record["eps_verdicts"]),
        ]
        out = []
        for cell in row:
            if "," in cell or '"' in cell:
                cell = '"' + cell.replace('"', '""') + '"'
            out.append(cell)
        self.fh.write(",".join(out) + "\n")


def write_records(records: Iterable[dict], format: str = "jsonl", path: str = "-") -> None:
    """Write records one per line; '-' streams to stdout."""
    if path == "-":
        writer = RecordWriter(sys.stdout, format)
        for record in records:
            writer.write(record)
        return
    with open(path, "w", encoding="utf-8") as fh:
        writer = RecordWriter(fh, format)
        for record in records:
            writer.write(record)


# -- engines ---------------------------------------------------------------------------


def _warn_skip(n: int, guard: int) -> None:
    print(f"warning: skipping graph with n={n} above guard {guard}", file=sys.stderr)


def invariant_records(
    source: Union[EnumerateSource, Iterable], opts: HarnessOptions
) -> Iterator[dict]:
    """Per-graph invariant records, in input order."""
    opts = _finalize_opts(opts, emit=True)
    items, opts, total = _prepare_source(source, opts)
    for result in _pool_results("invariants", opts, items, total):
        if result[0] == "skip":
            _warn_skip(result[1], opts.solver_guard)
            if opts.fail_fast:
                raise HarnessAbort(f"graph with n={result[1]} above solver guard")
            continue
        yield result[1]


def bound_records(
    source: Union[EnumerateSource, Iterable], opts: HarnessOptions
) -> Iterator[dict]:
    """Per-graph records with every bound evaluation of the chosen strategy."""
    opts = _finalize_opts(opts, emit=True)
    items, opts, total = _prepare_source(source, opts)
    for result in _pool_results("bounds", opts, items, total):
        if result[0] == "skip":
            _warn_skip(result[1], opts.solver_guard)
            if opts.fail_fast:
                raise HarnessAbort(f"graph with n={result[1]} above solver guard")
            continue
        yield result[1]


def verify_all(
    source: Union[EnumerateSource, Iterable],
    opts: HarnessOptions,
    record_file: Optional[IO[str]] = None,
    record_format: str = "jsonl",
) -> VerificationSummary:
    """Check every applicable proven bound on every stream graph.

    Records (tightest instance per bound, plus the Reed value) are written
    to ``record_file`` when given. Any bound value below chi, any cor9/cor10
    mismatch, or any failed excess lemma is collected as a violation.
    """
    start = time.monotonic()
    opts = _finalize_opts(opts, emit=record_file is not None)
    items, opts, total = _prepare_source(source, opts)
    writer = RecordWriter(record_file, record_format) if record_file else None
    summary = VerificationSummary()
    results = _pool_results("verify", opts, items, total)
    for result in results:
        if result[0] == "skip":
            summary.skipped += 1
            _warn_skip(result[1], opts.solver_guard)
            if opts.fail_fast:
                raise HarnessAbort(f"graph with n={result[1]} above solver guard")
            continue
        _, checks, violations, lemma_skip, record = result
        summary.graphs_processed += 1
        summary.bound_checks += checks
        summary.lemma_upper_skipped += lemma_skip
        for graph6, bound_id, params, value, chi in violations:
            summary.violations.append(Violation(graph6, bound_id, params, value, chi))
        if writer and record is not None:
            writer.write(record)
        if summary.violations and opts.fail_fast:
            break
    summary.elapsed = time.monotonic() - start
    return summary


def scan_reed(
    source: Union[EnumerateSource, Iterable],
    opts: HarnessOptions,
    record_file: Optional[IO[str]] = None,
    record_format: str = "jsonl",
) -> ReedScanSummary:
    """Scan for graphs with chi above the conjectured Reed ceiling.

    Violators are reported, never asserted absent: each one gets a VIOLATOR
    stderr line and the summary tracks min kappa_bar / log2(n) over them.
    """
    start = time.monotonic()
    opts = _finalize_opts(opts, emit=record_file is not None)
    items, opts, total = _prepare_source(source, opts)
    writer = RecordWriter(record_file, record_format) if record_file else None
    summary = ReedScanSummary()
    for result in _pool_results("reed", opts, items, total):
        if result[0] == "skip":
            summary.skipped += 1
            _warn_skip(result[1], opts.solver_guard)
            continue
        _, violator, record = result
        summary.graphs_processed += 1
        if violator is not None:
            v = ReedViolator(*violator)
            summary.violators.append(v)
            print(v.line(), file=sys.stderr)
        if writer and record is not None:
            writer.write(record)
    ratios = [v.ratio for v in summary.violators if v.ratio is not None]
    summary.min_kappa_log_ratio = min(ratios) if ratios else None
    summary.elapsed = time.monotonic() - start
    return summary


def scan_eps(
    source: Union[EnumerateSource, Iterable],
    eps_list: Iterable,
    opts: HarnessOptions,
    record_file: Optional[IO[str]] = None,
    record_format: str = "jsonl",
) -> EpsScanSummary:
    """Verify the relaxed-bound / complement-connectivity dichotomy.

    For each graph and epsilon, either the relaxed bound holds or
    kappa_bar must meet the derived threshold; a graph failing both is a
    hard violation and fails the run.
    """
    start = time.monotonic()
    eps_pairs = tuple(
        (Fraction(e).numerator, Fraction(e).denominator) for e in eps_list
    )
    if not eps_pairs:
        raise ValueError("need at least one epsilon")
    for num, den in eps_pairs:
        if num <= 0:
            raise ValueError("epsilon values must be positive")
    opts = _finalize_opts(
        replace(opts, eps=eps_pairs), emit=record_file is not None
    )
    items, opts, total = _prepare_source(source, opts)
    writer = RecordWriter(record_file, record_format) if record_file else None
    eps_strs = tuple(f"{num}/{den}" for num, den in eps_pairs)
    summary = EpsScanSummary(eps=eps_strs)
    summary.bound_hold_counts = {e: 0 for e in eps_strs}
    for result in _pool_results("eps", opts, items, total):
        if result[0] == "skip":
            summary.skipped += 1
            _warn_skip(result[1], opts.solver_guard)
            continue
        _, holds, failures, g6, record = result
        summary.graphs_processed += 1
        for eps_str, ok in zip(eps_strs, holds):
            if ok:
                summary.bound_hold_counts[eps_str] += 1
        for eps_str in failures:
            summary.dichotomy_failures.append((g6, eps_str))
        if writer and record is not None:
            writer.write(record)
    summary.elapsed = time.monotonic() - start
    return summary
