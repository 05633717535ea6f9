"""Exhaustive small-order enumeration and extremal verification.

Connected graphs are enumerated one per isomorphism class by growing: all
trees by leaf addition, then one edge at a time, deduplicating through
canonical forms at every level. Every connected graph with m >= n edges
has a non-bridge edge, so removing it reaches m - 1 keeping connectivity;
the level-by-level growth is therefore exhaustive.

Candidate evaluation may fan out over a thread pool sized by the
FSPECTRA_THREADS environment variable (unset/1 = sequential, 0 = one per
CPU); results are reduced in canonical order, so reports are deterministic
regardless of schedule.
"""

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BadParams, MissingTableEntry, SizeLimit
from .families import FamilySpec, forbidden_fixtures, identify_pendant_free_bicyclic, make
from .graph_core import (
    Graph,
    base_graph,
    canonical_form,
    canonical_relabel,
    contains_induced,
    degrees,
    is_isomorphic,
)
from .spectral import f_spectral_radius

ENUMERATION_MAX_ORDER = 9
TIE_TOL = 1e-7

SEARCH_CLASSES = ("trees", "unicyclic", "bicyclic", "pendant_free_bicyclic")

THEOREMS = (
    "theta-infty-equality",
    "base-graph-reduction",
    "theta-minimal",
    "infty-minimal",
    "infty-star-domination",
    "main-bicyclic",
    "forbidden-subgraphs",
    "max-unicyclic-base",
    "max-bicyclic-base",
    "conjecture-pstarstar",
)


def _worker_count():
    raw = os.environ.get("FSPECTRA_THREADS", "").strip()
    if raw == "" or raw == "1":
        return 1
    k = int(raw)
    if k < 0:
        raise BadParams("FSPECTRA_THREADS must be >= 0")
    if k == 0:
        return os.cpu_count() or 1
    return k


def _map_candidates(fn, items):
    workers = _worker_count()
    items = list(items)
    if workers <= 1 or len(items) < 4:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def enumerate_pendant_free_bicyclic(n):
    """Family specs of all pendant-free bicyclic graphs of order n.

    Theta(l1<=l2<=l3) with l1+l2+l3 = n+1 (at most one length 1),
    infty(l1<=l2, l3) with cycles >= 3 and path >= 1, and
    infty_star(l1<=l2) with cycles summing to n+1. No two specs are
    isomorphic.
    """
    if n < 4:
        raise BadParams("pendant-free bicyclic graphs need order >= 4")
    total = n + 1
    specs = []
    for l1 in range(1, total // 3 + 1):
        for l2 in range(max(l1, 2), (total - l1) // 2 + 1):
            l3 = total - l1 - l2
            if l3 < l2:
                continue
            specs.append(FamilySpec("theta", (l1, l2, l3)))
    for l1 in range(3, total + 1):
        for l2 in range(l1, total + 1):
            l3 = total - l1 - l2
            if l3 >= 1:
                specs.append(FamilySpec("infty", (l1, l2, l3)))
    for l1 in range(3, total // 2 + 1):
        l2 = total - l1
        if l2 >= l1:
            specs.append(FamilySpec("infty_star", (l1, l2)))
    return specs


def _dedup(graphs):
    out = {}
    for G in graphs:
        key = canonical_form(G)
        if key not in out:
            out[key] = canonical_relabel(G)
    return tuple(out[k] for k in sorted(out))


@lru_cache(maxsize=None)
def _trees(n):
    if n == 1:
        return (Graph(1, []),)
    grown = []
    for T in _trees(n - 1):
        for v in range(T.n):
            grown.append(Graph(T.n + 1, list(T.edges) + [(v, T.n)]))
    return _dedup(grown)


@lru_cache(maxsize=None)
def enumerate_connected(n, m):
    """All connected graphs with n vertices and m edges, one per iso class.

    Returns canonical representatives sorted by canonical form; cached, so
    treat the result as read-only.
    """
    if n > ENUMERATION_MAX_ORDER:
        raise SizeLimit(f"enumeration supports order <= {ENUMERATION_MAX_ORDER}")
    if n < 1 or m < 0 or m > n * (n - 1) // 2:
        raise BadParams(f"no simple graphs with n={n}, m={m}")
    if m < n - 1:
        return ()
    if m == n - 1:
        return _trees(n)
    grown = []
    for G in enumerate_connected(n, m - 1):
        present = G.edges
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in present:
                    grown.append(Graph(n, list(present) + [(u, v)]))
    return _dedup(grown)


def class_graphs(class_name, n):
    """The isomorph-free list of graphs making up a search class at order n."""
    if class_name == "trees":
        return list(enumerate_connected(n, n - 1))
    if class_name == "unicyclic":
        return list(enumerate_connected(n, n))
    if class_name == "bicyclic":
        return list(enumerate_connected(n, n + 1))
    if class_name == "pendant_free_bicyclic":
        return [make(s) for s in enumerate_pendant_free_bicyclic(n)]
    raise BadParams(f"unknown search class {class_name!r}")


@dataclass
class SearchReport:
    """Extremal outcome over one enumerated class.

    ``winners`` collects every graph within ``tie_tol`` of the extremal
    value, sorted by canonical form. ``skipped`` counts candidates a table
    weight could not evaluate (missing degree pairs); they are excluded
    from the optimum.
    """

    class_name: str
    order: int
    weight: object
    objective: str
    winners: list
    value: float
    examined: int
    skipped: int
    elapsed: float
    tie_tol: float = TIE_TOL


def _rho_or_none(G, f):
    try:
        return f_spectral_radius(G, f).rho
    except MissingTableEntry:
        return None


def extremal(class_name, n, f, objective="min", tie_tol=TIE_TOL):
    """Exact extremal set of rho_f over an enumerated class."""
    if objective not in ("min", "max"):
        raise BadParams("objective must be 'min' or 'max'")
    start = time.perf_counter()
    graphs = class_graphs(class_name, n)
    values = _map_candidates(lambda G: _rho_or_none(G, f), graphs)
    scored = [(v, G) for v, G in zip(values, graphs) if v is not None]
    skipped = len(graphs) - len(scored)
    if not scored:
        raise BadParams(f"no evaluable graphs in class {class_name} at n={n}")
    best = min(v for v, _ in scored) if objective == "min" else max(v for v, _ in scored)
    winners = [
        (canonical_form(G), G, v) for v, G in scored if abs(v - best) <= tie_tol
    ]
    winners.sort(key=lambda t: t[0])
    elapsed = time.perf_counter() - start
    return SearchReport(
        class_name=class_name,
        order=n,
        weight=f,
        objective=objective,
        winners=[G for _, G, _ in winners],
        value=best,
        examined=len(scored),
        skipped=skipped,
        elapsed=elapsed,
        tie_tol=tie_tol,
    )


def report_records(report):
    """Machine-readable rows: (canonical encoding, rho, family tag)."""
    rows = []
    for G in report.winners:
        n, bits = canonical_form(G)
        enc = f"{n}:" + "".join(str(b) for b in bits)
        spec = identify_pendant_free_bicyclic(G)
        rho = f_spectral_radius(G, report.weight).rho
        rows.append((enc, rho, str(spec) if spec else "-"))
    return rows


def report_tsv(report):
    head = (
        f"# class={report.class_name}\torder={report.order}"
        f"\tweight={report.weight}\tobjective={report.objective}"
    )
    lines = [head]
    for enc, rho, tag in report_records(report):
        lines.append(f"{rho:.6f}\t{tag}\t{enc}")
    lines.append(
        f"# value={report.value:.6f}\texamined={report.examined}"
        f"\tskipped={report.skipped}\telapsed={report.elapsed:.3f}s"
    )
    return "\n".join(lines) + "\n"


@dataclass
class CheckLine:
    status: str  # PASS | FAIL | OBS
    text: str


@dataclass
class TheoremReport:
    """Structured verification outcome: one CheckLine per instance checked.

    ``passed`` is None for observational (conjecture) runs, which never
    assert.
    """

    theorem: str
    passed: bool | None
    checks: list = field(default_factory=list)

    def add(self, ok, text):
        self.checks.append(CheckLine("PASS" if ok else "FAIL", text))

    def observe(self, text):
        self.checks.append(CheckLine("OBS", text))

    def finalize(self):
        statuses = {c.status for c in self.checks}
        self.passed = None if statuses <= {"OBS"} else "FAIL" not in statuses
        return self


def _balanced_split(m):
    """The (s, t) with 2s + t = m and |s - t| <= 1."""
    for s in range(1, m):
        t = m - 2 * s
        if t >= 1 and abs(s - t) <= 1:
            return s, t
    raise BadParams(f"no balanced split for m={m}")


def _winner_specs(report):
    out = set()
    for G in report.winners:
        spec = identify_pendant_free_bicyclic(G)
        out.add(str(spec) if spec else repr(G))
    return out


def verify_theorem(
    theorem,
    weights,
    s_values=(3, 4, 5),
    t_values=(2, 3, 4),
    n_values=(8,),
    m_values=(9,),
    class_names=("trees", "unicyclic", "bicyclic"),
    tie_tol=TIE_TOL,
):
    """Run one named verification and return a TheoremReport.

    ``weights`` is a list of WeightSpec. Callers pick ranges small enough
    for exhaustive checking; everything here is desk scale.
    """
    if theorem not in THEOREMS:
        raise BadParams(f"unknown theorem id {theorem!r}")
    rep = TheoremReport(theorem, None)

    if theorem == "theta-infty-equality":
        for f in weights:
            for s in s_values:
                for t in t_values:
                    a = f_spectral_radius(make(FamilySpec("theta", (s, s, t))), f).rho
                    b = f_spectral_radius(make(FamilySpec("infty", (s, s, t))), f).rho
                    rep.add(
                        abs(a - b) <= tie_tol,
                        f"{f} theta({s},{s},{t})={a:.9f} infty({s},{s},{t})={b:.9f}",
                    )
        return rep.finalize()

    if theorem == "base-graph-reduction":
        for f in weights:
            for n in n_values:
                report = extremal("bicyclic", n, f, "min", tie_tol)
                for G in report.winners:
                    rep.add(
                        min(degrees(G)) >= 2,
                        f"{f} n={n}: min winner pendant-free (rho={report.value:.6f})",
                    )
        return rep.finalize()

    if theorem in ("theta-minimal", "infty-minimal"):
        kind = "theta" if theorem == "theta-minimal" else "infty"
        for f in weights:
            for m in m_values:
                s, t = _balanced_split(m)
                if kind == "theta":
                    expect = str(FamilySpec("theta", tuple(sorted((s, s, t)))))
                else:
                    expect = str(FamilySpec("infty", (s, s, t)))
                specs = [
                    sp
                    for sp in enumerate_pendant_free_bicyclic(m - 1)
                    if sp.kind == kind
                ]
                scored = []
                for sp in specs:
                    rho = _rho_or_none(make(sp), f)
                    if rho is not None:
                        scored.append((rho, sp))
                best = min(v for v, _ in scored)
                winners = {str(sp) for v, sp in scored if abs(v - best) <= tie_tol}
                rep.add(
                    winners == {expect},
                    f"{f} m={m}: min {kind}-type winners {sorted(winners)} expected [{expect}]",
                )
        return rep.finalize()

    if theorem == "infty-star-domination":
        for f in weights:
            for m in m_values:
                if m < 9:
                    raise BadParams("infty-star domination needs size >= 9")
                theta_best = min(
                    v
                    for v in (
                        _rho_or_none(make(sp), f)
                        for sp in enumerate_pendant_free_bicyclic(m - 1)
                        if sp.kind == "theta"
                    )
                    if v is not None
                )
                for l1 in range(3, m // 2 + 1):
                    l2 = m - l1
                    if l2 < l1:
                        continue
                    rho = _rho_or_none(make(FamilySpec("infty_star", (l1, l2))), f)
                    if rho is None:
                        continue
                    rep.add(
                        theta_best < rho - tie_tol,
                        f"{f} m={m}: best theta {theta_best:.6f} < infty-star({l1},{l2}) {rho:.6f}",
                    )
        return rep.finalize()

    if theorem == "main-bicyclic":
        for f in weights:
            for n in n_values:
                if n < 8:
                    raise BadParams("main theorem instances need order >= 8")
                s, t = _balanced_split(n + 1)
                expect = {
                    str(FamilySpec("theta", tuple(sorted((s, s, t))))),
                    str(FamilySpec("infty", (s, s, t))),
                }
                report = extremal("pendant_free_bicyclic", n, f, "min", tie_tol)
                winners = _winner_specs(report)
                rep.add(
                    winners == expect,
                    f"{f} n={n}: winners {sorted(winners)} expected {sorted(expect)}",
                )
        return rep.finalize()

    if theorem == "forbidden-subgraphs":
        fixtures = forbidden_fixtures()
        for f in weights:
            for class_name in class_names:
                for n in n_values:
                    report = extremal(class_name, n, f, "max", tie_tol)
                    for G in report.winners:
                        bad = [i for i, H in enumerate(fixtures) if contains_induced(G, H)]
                        rep.add(
                            not bad,
                            f"{f} {class_name} n={n}: max winner avoids all six fixtures",
                        )
        return rep.finalize()

    if theorem == "max-unicyclic-base":
        c3 = make(FamilySpec("cycle", (3,)))
        for f in weights:
            for n in n_values:
                report = extremal("unicyclic", n, f, "max", tie_tol)
                for G in report.winners:
                    rep.add(
                        is_isomorphic(base_graph(G), c3),
                        f"{f} n={n}: max unicyclic winner has base C3",
                    )
        return rep.finalize()

    if theorem == "max-bicyclic-base":
        targets = [
            make(FamilySpec("theta", (1, 2, 2))),
            make(FamilySpec("theta", (2, 2, 2))),
        ]
        for f in weights:
            for n in n_values:
                report = extremal("bicyclic", n, f, "max", tie_tol)
                for G in report.winners:
                    B = base_graph(G)
                    rep.add(
                        any(is_isomorphic(B, T) for T in targets),
                        f"{f} n={n}: max bicyclic winner has base theta(1,2,2) or theta(2,2,2)",
                    )
        return rep.finalize()

    if theorem == "conjecture-pstarstar":
        for f in weights:
            for class_name in class_names:
                for n in n_values:
                    if class_name == "trees":
                        target = make(FamilySpec("double_star", (math.ceil(n / 2), n // 2)))
                        label = f"double-star:{math.ceil(n / 2)},{n // 2}"
                    elif class_name == "unicyclic":
                        target = make(
                            FamilySpec("c3_pendants", (math.ceil((n - 3) / 2), (n - 3) // 2, 0))
                        )
                        label = f"c3:{math.ceil((n - 3) / 2)},{(n - 3) // 2},0"
                    elif class_name == "bicyclic":
                        target = make(
                            FamilySpec("theta122_pendants", (math.ceil((n - 4) / 2), (n - 4) // 2))
                        )
                        label = f"theta122:{math.ceil((n - 4) / 2)},{(n - 4) // 2}"
                    else:
                        raise BadParams(f"conjecture check has no target for {class_name!r}")
                    report = extremal(class_name, n, f, "max", tie_tol)
                    match = any(is_isomorphic(G, target) for G in report.winners)
                    rep.observe(
                        f"{f} {class_name} n={n}: observed max "
                        f"{'matches' if match else 'differs from'} conjectured {label} "
                        f"(rho={report.value:.6f})"
                    )
        return rep.finalize()

    raise BadParams(f"unhandled theorem {theorem!r}")
