"""Exhaustive canonical backtracking search for strength-2 orthogonal arrays.

The search enumerates arrays whose rows are in nondecreasing lexicographic
order (one representative per row multiset), with an optional forced
multiplicity m that pins the first m rows to all-zeros.  Sorting makes the
first two columns a function of the row index alone, so only cells from
column 2 on branch.  A k*k*n*n table of remaining pair capacities drives
the pruning: every ordered symbol pair in every column pair must be used
exactly lambda times, a capacity may never go negative, and a Hall-type
availability argument discards rows whose remaining demand cannot be met.

Within a cell, candidate symbols are tried in descending order; the visit
order of a fully traversed tree does not affect which nodes are visited
(pruning depends only on the partial assignment), but descending order
reaches witnesses for the hardest in-scope instances far sooner.

Node budgets are exact: a search stops the moment the node counter would
pass the budget, and the multi-worker mode replays per-subtree node counts
in candidate order so that status, witness, and node count are identical to
the single-worker run for any worker count.
"""

import time
from dataclasses import dataclass
from multiprocessing import get_context

from .arrays import OrthogonalArray, row_multiplicities, strength_lambda
from .bounds import max_multiplicity
from .errors import BudgetExceeded, CeilingExceeded, UnsupportedParameters

__all__ = [
    "FOUND",
    "EXHAUSTED",
    "BUDGET_EXCEEDED",
    "DEFAULT_CEILING",
    "SearchProblem",
    "SearchResult",
    "search_oa",
    "oracle_max_multiplicity",
    "generate_linear_oa",
]

FOUND = "found"
EXHAUSTED = "exhausted-no-solution"
BUDGET_EXCEEDED = "budget-exceeded"

DEFAULT_CEILING = 36


@dataclass(frozen=True)
class SearchProblem:
    """Parameters and limits of one search run.

    `m` = 0 leaves multiplicity free; m >= 1 forces the first m rows to
    all-zeros.  `mode` is "exists" (stop at the first solution) or "count"
    (traverse everything and count canonical solutions).  `node_budget` and
    `wall_budget` (seconds) cap the run; the row count lambda*n**2 must not
    exceed `ceiling`.
    """

    n: int
    k: int
    lam: int
    t: int = 2
    m: int = 0
    mode: str = "exists"
    node_budget: int = None
    wall_budget: float = None
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if self.t != 2:
            raise UnsupportedParameters("search supports strength 2 only")
        if self.n < 2 or self.k < 2 or self.lam < 1:
            raise ValueError("need n >= 2, k >= 2, lambda >= 1")
        if self.mode not in ("exists", "count"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.m <= self.N:
            raise ValueError("forced multiplicity out of range")
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node budget must be nonnegative")
        if self.N > self.ceiling:
            raise CeilingExceeded(
                f"{self.N} rows exceeds the configured ceiling of {self.ceiling}"
            )

    @property
    def N(self):
        return self.lam * self.n * self.n


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search: status, witness, and exact node count.

    `achieved_multiplicity` is the maximum row multiplicity of the witness
    (0 when there is none); `solution_count` is meaningful in count mode
    and equals 1/0 in exists mode.
    """

    status: str
    witness: object
    nodes_explored: int
    achieved_multiplicity: int
    solution_count: int


class _Stop(Exception):
    """Internal signal: a budget ran out mid-traversal."""


def _kernel(n, k, lam, prefix, mode, node_budget, deadline, collect_children=False):
    """Canonical DFS below a fixed row prefix.

    Returns a dict with keys status/nodes/witness/solutions/children.  With
    collect_children=True the first free row is enumerated (in candidate
    order, applying all pruning) without recursing, for the parallel driver.
    """
    N = lam * n * n
    lns = lam * n
    n2 = n * n
    pidx = [[0] * k for _ in range(k)]
    npairs = 0
    for a in range(k):
        for b in range(a + 1, k):
            pidx[a][b] = npairs
            npairs += 1
    cap = [lam] * (npairs * n2)
    colcap = [lns] * (k * n)
    # Sorted rows force the first two columns as functions of the row index.
    f0 = [r // lns for r in range(N)]
    f1 = [(r % lns) // lam for r in range(N)]
    # avail0[r][s]: rows >= r whose forced column 0 equals s; slots2 likewise
    # for the forced (column 0, column 1) pair.
    avail0 = []
    slots2 = []
    for r in range(N + 1):
        a0 = [0] * n
        s2 = [0] * n2
        for s in range(n):
            lo = s * lns
            a0[s] = max(0, lo + lns - max(r, lo))
        for s0 in range(n):
            for s1 in range(n):
                lo = s0 * lns + s1 * lam
                s2[s0 * n + s1] = max(0, lo + lam - max(r, lo))
        avail0.append(a0)
        slots2.append(s2)

    out = {
        "status": EXHAUSTED,
        "nodes": 0,
        "witness": None,
        "solutions": 0,
        "children": [] if collect_children else None,
    }

    grid = [[0] * k for _ in range(N)]
    for i, prow in enumerate(prefix):
        if prow[0] != f0[i] or prow[1] != f1[i]:
            return out
        if i and tuple(prow) < tuple(prefix[i - 1]):
            return out
        for c in range(k):
            s = prow[c]
            if colcap[c * n + s] <= 0:
                return out
            for a in range(c):
                if cap[pidx[a][c] * n2 + prow[a] * n + s] <= 0:
                    return out
        for c in range(k):
            s = prow[c]
            colcap[c * n + s] -= 1
            for a in range(c):
                cap[pidx[a][c] * n2 + prow[a] * n + s] -= 1
        grid[i] = list(prow)
    start_r = len(prefix)

    def hall(r_next):
        # Each remaining demand cap[(a,b)][sa][sb] must fit under both the
        # availability of forced column values and the propagated capacity
        # through columns 0 and 1 (a min-sum relaxation of a flow bound).
        a0 = avail0[r_next]
        s2 = slots2[r_next]
        for b in range(1, k):
            base0b = pidx[0][b] * n2
            if b >= 2:
                base1b = pidx[1][b] * n2
                for s0 in range(n):
                    lim = a0[s0]
                    s2row = s0 * n
                    for sb in range(n):
                        c = cap[base0b + s0 * n + sb]
                        if c > lim:
                            return False
                        if c:
                            ub = 0
                            for s1 in range(n):
                                avail = s2[s2row + s1]
                                q = cap[base1b + s1 * n + sb]
                                ub += avail if avail < q else q
                                if ub >= c:
                                    break
                            if c > ub:
                                return False
            else:
                for s0 in range(n):
                    lim = a0[s0]
                    for sb in range(n):
                        if cap[base0b + s0 * n + sb] > lim:
                            return False
        for b in range(2, k):
            base1b = pidx[1][b] * n2
            base0b = pidx[0][b] * n2
            for s1 in range(n):
                for sb in range(n):
                    c = cap[base1b + s1 * n + sb]
                    if c:
                        ub = 0
                        for s0 in range(n):
                            avail = s2[s0 * n + s1]
                            q = cap[base0b + s0 * n + sb]
                            ub += avail if avail < q else q
                            if ub >= c:
                                break
                        if c > ub:
                            return False
        for a in range(2, k):
            base0a = pidx[0][a] * n2
            base1a = pidx[1][a] * n2
            for b in range(a + 1, k):
                baseab = pidx[a][b] * n2
                base0b = pidx[0][b] * n2
                base1b = pidx[1][b] * n2
                for sa in range(n):
                    for sb in range(n):
                        c = cap[baseab + sa * n + sb]
                        if c:
                            ub = 0
                            for s0 in range(n):
                                x = cap[base0a + s0 * n + sa]
                                y = cap[base0b + s0 * n + sb]
                                ub += x if x < y else y
                                if ub >= c:
                                    break
                            if c > ub:
                                return False
                            ub = 0
                            for s1 in range(n):
                                x = cap[base1a + s1 * n + sa]
                                y = cap[base1b + s1 * n + sb]
                                ub += x if x < y else y
                                if ub >= c:
                                    break
                            if c > ub:
                                return False
        return True

    if start_r < N and not hall(start_r):
        return out

    found = [False]

    def dfs(r):
        if node_budget is not None and out["nodes"] == node_budget:
            raise _Stop
        out["nodes"] += 1
        if deadline is not None and not out["nodes"] & 1023:
            if time.monotonic() > deadline:
                raise _Stop
        if r == N:
            out["solutions"] += 1
            if out["witness"] is None:
                out["witness"] = [tuple(row) for row in grid]
            found[0] = True
            return
        row = grid[r]
        prev = grid[r - 1] if r > 0 else None
        c = 0
        tight = [True] + [False] * k
        row[0] = -1
        while c >= 0:
            if c == k:
                if collect_children and r == start_r:
                    if hall(r + 1):
                        out["children"].append(tuple(row))
                else:
                    if hall(r + 1):
                        dfs(r + 1)
                    if found[0] and mode == "exists":
                        return
                c -= 1
                s = row[c]
                for a in range(c):
                    cap[pidx[a][c] * n2 + row[a] * n + s] += 1
                colcap[c * n + s] += 1
                continue
            forced = f0[r] if c == 0 else (f1[r] if c == 1 else -1)
            lo = prev[c] if (prev is not None and tight[c]) else 0
            if forced >= 0:
                usable = row[c] < forced and forced >= lo
                cands = (forced,) if usable else ()
            else:
                start = row[c] - 1 if row[c] >= 0 else n - 1
                cands = range(start, lo - 1, -1)
            placed = False
            for s in cands:
                if colcap[c * n + s] <= 0:
                    continue
                ok = True
                for a in range(c):
                    if cap[pidx[a][c] * n2 + row[a] * n + s] <= 0:
                        ok = False
                        break
                if not ok:
                    continue
                row[c] = s
                for a in range(c):
                    cap[pidx[a][c] * n2 + row[a] * n + s] -= 1
                colcap[c * n + s] -= 1
                tight[c + 1] = tight[c] and (prev is not None and s == prev[c])
                placed = True
                break
            if placed:
                c += 1
                if c < k:
                    row[c] = -1
            else:
                row[c] = -1
                c -= 1
                if c >= 0:
                    s = row[c]
                    for a in range(c):
                        cap[pidx[a][c] * n2 + row[a] * n + s] += 1
                    colcap[c * n + s] += 1

    try:
        dfs(start_r)
    except _Stop:
        out["status"] = BUDGET_EXCEEDED
        return out
    out["status"] = FOUND if out["witness"] is not None else EXHAUSTED
    return out


def _subtree_worker(args):
    n, k, lam, prefix, mode, node_budget, wall_budget = args
    deadline = None if wall_budget is None else time.monotonic() + wall_budget
    return _kernel(n, k, lam, prefix, mode, node_budget, deadline)


def _finish(problem, status, witness_rows, nodes, solutions):
    witness = None
    achieved = 0
    if witness_rows is not None:
        witness = OrthogonalArray(problem.n, problem.k, tuple(witness_rows))
        strength_lambda(witness, 2)
        achieved = row_multiplicities(witness).max_multiplicity
    return SearchResult(status, witness, nodes, achieved, solutions)


def search_oa(problem, workers=1):
    """Run the canonical search; results are identical for any worker count.

    With workers > 1, the first free row's candidate values are enumerated
    once, each resulting subtree runs in its own process, and the subtree
    results are merged by replaying them in candidate order with the exact
    single-worker budget accounting.  A found witness therefore is the one
    the sequential search would report, and exhaustion still means the full
    canonical tree was traversed.
    """
    p = problem
    prefix = tuple(tuple([0] * p.k) for _ in range(p.m))
    deadline = None if p.wall_budget is None else time.monotonic() + p.wall_budget
    if workers <= 1:
        raw = _kernel(p.n, p.k, p.lam, prefix, p.mode, p.node_budget, deadline)
        return _finish(p, raw["status"], raw["witness"], raw["nodes"], raw["solutions"])

    if p.node_budget == 0:
        return SearchResult(BUDGET_EXCEEDED, None, 0, 0, 0)
    probe = _kernel(p.n, p.k, p.lam, prefix, p.mode, None, None, collect_children=True)
    children = probe["children"]
    if probe["nodes"] == 0 or not children:
        raw = _kernel(p.n, p.k, p.lam, prefix, p.mode, p.node_budget, deadline)
        return _finish(p, raw["status"], raw["witness"], raw["nodes"], raw["solutions"])

    budget = p.node_budget
    task_budget = None if budget is None else budget - 1
    pool = get_context().Pool(processes=workers)
    try:
        pending = [
            pool.apply_async(
                _subtree_worker,
                ((p.n, p.k, p.lam, prefix + (child,), p.mode, task_budget, p.wall_budget),),
            )
            for child in children
        ]
        cum = 1
        solutions = 0
        witness = None
        for handle in pending:
            res = handle.get()
            avail = None if budget is None else budget - cum
            over = avail is not None and res["nodes"] > avail
            if res["status"] == BUDGET_EXCEEDED or over:
                nodes = budget if budget is not None else cum + res["nodes"]
                return SearchResult(BUDGET_EXCEEDED, None, nodes, 0, 0)
            cum += res["nodes"]
            solutions += res["solutions"]
            if witness is None and res["witness"] is not None:
                witness = res["witness"]
            if p.mode == "exists" and res["status"] == FOUND:
                pool.terminate()
                return _finish(p, FOUND, witness, cum, solutions)
        status = FOUND if witness is not None else EXHAUSTED
        return _finish(p, status, witness, cum, solutions)
    finally:
        pool.terminate()
        pool.join()


def oracle_max_multiplicity(
    n, k, lam, node_budget=None, wall_budget=None, ceiling=DEFAULT_CEILING, workers=1
):
    """Largest multiplicity m for which a witness array exists, with witness.

    Descends from the counting bound's floor; every `no` along the way is
    an exhaustive traversal, so the answer is ground truth, never a guess.
    Returns (0, None) when no array with these parameters exists at all.
    Raises BudgetExceeded if any stage hits its budget, since a truncated
    search cannot certify nonexistence.
    """
    bound = max_multiplicity(k, n, lam)
    for m in range(bound.integer_form, 0, -1):
        problem = SearchProblem(
            n,
            k,
            lam,
            m=m,
            mode="exists",
            node_budget=node_budget,
            wall_budget=wall_budget,
            ceiling=ceiling,
        )
        result = search_oa(problem, workers=workers)
        if result.status == BUDGET_EXCEEDED:
            raise BudgetExceeded(
                f"search with forced multiplicity {m} exceeded its budget",
                nodes=result.nodes_explored,
            )
        if result.status == FOUND:
            return m, result.witness
    return 0, None


def generate_linear_oa(q, k):
    """Index-1 strength-2 array over a prime alphabet from affine functions.

    Rows are indexed by (x, b) in Z_q x Z_q; the first column records x and
    column a+1 records a*x + b mod q for slopes a = 0..k-2.  Any two columns
    determine (x, b) uniquely, so every symbol pair appears exactly once.
    """
    if k < 2:
        raise UnsupportedParameters("need at least two columns")
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise UnsupportedParameters(f"alphabet size {q} is not prime")
    if k > q + 1:
        raise UnsupportedParameters(f"at most q+1 = {q + 1} columns exist for q = {q}")
    rows = []
    for x in range(q):
        for b in range(q):
            rows.append(tuple([x] + [(a * x + b) % q for a in range(k - 1)]))
    return OrthogonalArray(q, k, tuple(rows))
