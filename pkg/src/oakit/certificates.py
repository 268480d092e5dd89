"""Mechanical audits of existence-proof techniques on concrete arrays.

Each audit re-executes one counting or linear-algebra argument on a given
array, checks every intermediate identity in exact integer or rational
arithmetic, and reports the inequality the argument establishes for that
instance.  A report serializes to one `CHECK <id> <lhs> <rhs> PASS|FAIL`
line per identity plus a final `IMPLIES <lhs><=<rhs> PASS|FAIL|TIGHT` line.

All the audits of a strength-2 array with index lambda over n symbols and
k columns normalize to the same comparison, recorded in `canonical` form as
m(k(n-1)+1) <= N (with m = 1 where no repeated row is involved), so their
conclusions can be cross-checked for agreement.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrays import normalize_to_row, row_multiplicities, strength_lambda, symbol_counts
from .bounds import johnson_R, oa_to_cwc_params
from .cyclotomic import reduce_root_sum
from .errors import (
    EquationViolated,
    IdentityViolated,
    InnerProductMismatch,
    LemmaViolated,
    NonintegralIndex,
    NonOrthogonal,
    NonpositiveDeterminant,
    RankDeficient,
    WeightMismatch,
)
from .linalg import integer_det, integer_rank

__all__ = [
    "Check",
    "AuditReport",
    "VarianceAudit",
    "TransversalDesign",
    "IncidenceMatrix",
    "RootCountVector",
    "RootVectorFamily",
    "ConstantWeightCodeFamily",
    "variance_audit",
    "to_transversal_design",
    "incidence_matrix",
    "check_span_equations",
    "rank_bound_certificate",
    "gram_certificate",
    "root_vector_family",
    "orthogonality_certificate",
    "shortened_family_certificate",
    "extract_cwc",
    "cwc_certificate",
]


def _fmt(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x)) if isinstance(x, Fraction) else str(x)


def _fmt_vec(v):
    return "(" + ",".join(str(e) for e in v) + ")"


def _fmt_poly(p):
    if not p:
        return "0"
    if len(p) == 1:
        return str(p[0])
    return _fmt_vec(p)


@dataclass(frozen=True)
class Check:
    """One verified identity: `lhs` is computed, `rhs` predicted."""

    check_id: str
    lhs: str
    rhs: str
    passed: bool


@dataclass(frozen=True)
class AuditReport:
    """Outcome of one audit method.

    `implied_lhs <= implied_rhs` is the inequality the method proves for
    this instance (values exact, Fraction or int).  `canonical` restates it
    as an integer pair (m(k(n-1)+1), N)-style so different methods can be
    compared.  `notes` are informational lines emitted as `#` comments.
    """

    method: str
    checks: tuple
    implied_lhs: object
    implied_rhs: object
    canonical: tuple
    notes: tuple = ()

    @property
    def checks_passed(self):
        return all(c.passed for c in self.checks)

    @property
    def holds(self):
        return self.implied_lhs <= self.implied_rhs

    @property
    def passed(self):
        return self.checks_passed and self.holds

    @property
    def tight(self):
        return self.passed and self.implied_lhs == self.implied_rhs

    def verdict(self):
        if not self.passed:
            return "FAIL"
        return "TIGHT" if self.implied_lhs == self.implied_rhs else "PASS"

    def lines(self):
        out = [f"# {note}" for note in self.notes]
        for c in self.checks:
            out.append(f"CHECK {c.check_id} {c.lhs} {c.rhs} {'PASS' if c.passed else 'FAIL'}")
        out.append(f"IMPLIES {_fmt(self.implied_lhs)}<={_fmt(self.implied_rhs)} {self.verdict()}")
        return out


def _eq_check(check_id, lhs, rhs):
    return Check(check_id, _fmt(lhs), _fmt(rhs), lhs == rhs)


def _first_failure(checks):
    return next((c for c in checks if not c.passed), None)


def _index_of(array):
    if array.N % (array.n * array.n):
        raise NonintegralIndex(array.N, array.n, 2)
    return array.N // (array.n * array.n)


# ---------------------------------------------------------------------------
# Variance (counting) audit.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VarianceAudit:
    """Full record of the counting argument on one array.

    `counts` holds the per-row designated-symbol counts a_i over the
    non-repeated rows; `sums` pairs each of the three power sums with its
    predicted closed form; `ssd` is the exact sum of squared deviations
    from the mean `abar`.
    """

    m: int
    counts: tuple
    sums: tuple
    abar: Fraction
    ssd: Fraction
    implied_bound: Fraction
    equality_case: bool
    report: AuditReport


def variance_audit(array, m=1):
    """Audit the repeated-row counting argument with claimed multiplicity m.

    Normalizes so the repeated row is all-zeros and last, counts the
    designated symbol per remaining row, and checks the three power-sum
    identities exactly.  The nonnegativity of the squared deviations then
    implies k <= (lambda*n^2 - m)/(m(n-1)).  Any identity failure means the
    input is not an orthogonal array of the claimed shape and raises
    IdentityViolated.
    """
    if m < 1:
        raise ValueError("multiplicity m must be at least 1")
    lam = _index_of(array)
    n, k, N = array.n, array.k, array.N
    census = row_multiplicities(array)
    target = next(
        (i for i, row in enumerate(array.rows) if census.counts[row] >= m), None
    )
    if target is None:
        raise ValueError(f"no row has multiplicity >= {m}")
    normalized = normalize_to_row(array, target)
    counts = symbol_counts(normalized, exclude_last=m)

    sum_a = sum(counts)
    sum_pairs = sum(a * (a - 1) for a in counts)
    sum_sq = sum(a * a for a in counts)
    pred_a = k * (lam * n - m)
    pred_pairs = k * (k - 1) * (lam - m)
    pred_sq = k * (k * (lam - m) + lam * (n - 1))
    abar = Fraction(k * (lam * n - m), lam * n * n - m)
    ssd = Fraction(sum_sq) - Fraction(sum_a * sum_a, N - m)

    checks = [
        _eq_check("sum-a", sum_a, pred_a),
        _eq_check("sum-a(a-1)", sum_pairs, pred_pairs),
        _eq_check("sum-a^2", sum_sq, pred_sq),
        Check("ssd-nonnegative", _fmt(ssd), "0", ssd >= 0),
    ]
    equality = ssd == 0
    if equality:
        off = sum(1 for a in counts if Fraction(a) != abar)
        checks.append(_eq_check("equality-counts", off, 0))

    implied = Fraction(lam * n * n - m, m * (n - 1))
    report = AuditReport(
        "variance",
        tuple(checks),
        k,
        implied,
        (m * (k * (n - 1) + 1), N),
    )
    bad = _first_failure(checks)
    if bad is not None:
        raise IdentityViolated(
            f"{bad.check_id}: computed {bad.lhs}, predicted {bad.rhs}",
            report=report,
            check_id=bad.check_id,
        )
    sums = ((sum_a, pred_a), (sum_pairs, pred_pairs), (sum_sq, pred_sq))
    return VarianceAudit(m, counts, sums, abar, ssd, implied, equality, report)


# ---------------------------------------------------------------------------
# Transversal design, incidence matrix, span equations, rank.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransversalDesign:
    """Point/group/block view of a strength-2 array.

    Point (symbol s, column j) gets index j*n + s; group j is the n points
    of column j; block i is the k points selected by row i.
    """

    n: int
    k: int
    lam: int
    groups: tuple
    blocks: tuple

    @property
    def N(self):
        return len(self.blocks)


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 incidence of blocks and groups (rows) against points (columns)."""

    n: int
    k: int
    lam: int
    row_labels: tuple
    matrix: tuple

    @property
    def N(self):
        return len(self.matrix) - self.k


def to_transversal_design(array):
    """Reinterpret a strength-2 array as a transversal design.

    Verifies the strength first (raising NotAnOA otherwise), since the
    design properties are exactly the strength-2 conditions.
    """
    lam = strength_lambda(array, 2)
    n, k = array.n, array.k
    groups = tuple(tuple(j * n + s for s in range(n)) for j in range(k))
    blocks = tuple(tuple(j * n + row[j] for j in range(k)) for row in array.rows)
    return TransversalDesign(n, k, lam, groups, blocks)


def incidence_matrix(td):
    """(N+k) x nk incidence matrix: block rows first, then group rows."""
    nk = td.n * td.k
    labels = []
    rows = []
    for i, block in enumerate(td.blocks):
        row = [0] * nk
        for p in block:
            row[p] = 1
        rows.append(tuple(row))
        labels.append(("block", i))
    for j, group in enumerate(td.groups):
        row = [0] * nk
        for p in group:
            row[p] = 1
        rows.append(tuple(row))
        labels.append(("group", j))
    return IncidenceMatrix(td.n, td.k, td.lam, tuple(labels), tuple(rows))


def check_span_equations(td):
    """Verify the three incidence-vector identities of a transversal design.

    With B_i, G_j the block/group indicator vectors and u all-ones:
      eq1:  sum_i B_i = lambda*n*u
      eq2:  sum_j G_j = u
      eq3:  lambda*G_{g(x)} + sum_{i: x in B_i} B_i = lambda*u + lambda*n*x_hat
    for every point x.  Together these place every coordinate vector in the
    row span of the incidence matrix, which is what the rank certificate
    then measures; the implied inequality is nk <= N+k-1.
    """
    n, k, lam, N = td.n, td.k, td.lam, td.N
    nk = n * k
    blocks = [[0] * nk for _ in range(N)]
    for i, block in enumerate(td.blocks):
        for p in block:
            blocks[i][p] = 1
    groups = [[0] * nk for _ in range(k)]
    for j, group in enumerate(td.groups):
        for p in group:
            groups[j][p] = 1

    checks = []
    total_blocks = tuple(sum(col) for col in zip(*blocks))
    expect1 = tuple([lam * n] * nk)
    checks.append(Check("eq1", _fmt_vec(total_blocks), _fmt_vec(expect1), total_blocks == expect1))
    total_groups = tuple(sum(col) for col in zip(*groups))
    expect2 = tuple([1] * nk)
    checks.append(Check("eq2", _fmt_vec(total_groups), _fmt_vec(expect2), total_groups == expect2))
    for x in range(nk):
        lhs = [lam * g for g in groups[x // n]]
        for i in range(N):
            if blocks[i][x]:
                for p in range(nk):
                    lhs[p] += blocks[i][p]
        rhs = [lam + (lam * n if p == x else 0) for p in range(nk)]
        checks.append(
            Check(f"eq3@{x}", _fmt_vec(lhs), _fmt_vec(rhs), lhs == rhs)
        )

    report = AuditReport(
        "span-equations", tuple(checks), nk, N + k - 1, (k * (n - 1) + 1, N)
    )
    bad = _first_failure(checks)
    if bad is not None:
        coord = None
        if bad.check_id.startswith("eq3@"):
            coord = int(bad.check_id.split("@")[1])
        raise EquationViolated(
            f"{bad.check_id}: {bad.lhs} != {bad.rhs}",
            report=report,
            check_id=bad.check_id,
            coordinate=coord,
        )
    return report


def rank_bound_certificate(incidence):
    """Exact-rank certificate for the incidence matrix of a strength-2 array.

    The matrix must have full column rank nk, and must keep rank nk after
    deleting the last group row (that row lies in the span of the others),
    so the other N+k-1 rows span an nk-dimensional space: nk <= N+k-1.
    """
    n, k, N = incidence.n, incidence.k, incidence.N
    nk = n * k
    full = integer_rank(incidence.matrix)
    reduced = integer_rank(incidence.matrix[:-1])
    checks = (
        _eq_check("rank", full, nk),
        _eq_check("rank-without-last-group", reduced, nk),
    )
    report = AuditReport(
        "td-rank", checks, nk, N + k - 1, (k * (n - 1) + 1, N)
    )
    bad = _first_failure(checks)
    if bad is not None:
        raise RankDeficient(
            f"{bad.check_id}: rank {bad.lhs}, expected {bad.rhs}",
            report=report,
            check_id=bad.check_id,
        )
    return report


# ---------------------------------------------------------------------------
# Gram-matrix audit.
# ---------------------------------------------------------------------------


def gram_certificate(array):
    """Exact Gram-matrix certificate for a strength-2 array.

    Builds the (nk+1) x (nk+1) Gram matrix of the point incidence vectors
    (group contributions carrying an exact factor lambda, so no irrational
    scaling appears) together with the adjoined groups-indicator vector,
    checks it equals lambda*J + diag(lambda*n, ..., lambda*n, (k-1)*lambda)
    entrywise, and certifies det > 0 by fraction-free integer elimination.
    The nk+1 vectors are then independent in an (N+k)-dimensional space,
    so nk+1 <= N+k.
    """
    lam = _index_of(array)
    n, k, N = array.n, array.k, array.N
    nk = n * k
    cooc = [[0] * nk for _ in range(nk)]
    for row in array.rows:
        points = [j * n + row[j] for j in range(k)]
        for a in points:
            for b in points:
                cooc[a][b] += 1

    size = nk + 1
    gram = [[0] * size for _ in range(size)]
    for p in range(nk):
        for q in range(nk):
            gram[p][q] = cooc[p][q] + (lam if p // n == q // n else 0)
        gram[p][nk] = gram[nk][p] = lam
    gram[nk][nk] = k * lam

    expected = [[lam] * size for _ in range(size)]
    for p in range(nk):
        expected[p][p] += lam * n
    expected[nk][nk] += (k - 1) * lam

    mismatches = sum(
        1 for p in range(size) for q in range(size) if gram[p][q] != expected[p][q]
    )
    det = integer_det(gram)
    checks = (
        _eq_check("lemma-entrywise", mismatches, 0),
        Check("det-positive", str(det), "0", det > 0),
    )
    report = AuditReport("gram", checks, nk + 1, N + k, (k * (n - 1) + 1, N))
    if mismatches:
        bad = next(
            (p, q)
            for p in range(size)
            for q in range(size)
            if gram[p][q] != expected[p][q]
        )
        raise LemmaViolated(
            f"Gram entry {bad}: got {gram[bad[0]][bad[1]]}, "
            f"expected {expected[bad[0]][bad[1]]}",
            report=report,
            check_id="lemma-entrywise",
        )
    if det <= 0:
        raise NonpositiveDeterminant(
            f"Gram determinant {det} is not positive",
            report=report,
            check_id="det-positive",
        )
    return report


# ---------------------------------------------------------------------------
# Roots-of-unity audit.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootCountVector:
    """A sum of n-th roots of unity, stored as the count of each exponent."""

    n: int
    counts: tuple

    def reduced(self):
        """Remainder of sum(counts[s] * x^s) modulo the n-th cyclotomic polynomial."""
        return reduce_root_sum(self.counts, self.n)

    def is_zero(self):
        return not self.reduced()


@dataclass(frozen=True)
class RootVectorFamily:
    """Exponent vectors whose pairwise hermitian products certify a bound.

    One length-N vector per (column, multiplier) pair plus the all-zeros
    vector: entry i of vector (j, m) is m * array[i][j] mod n.  `weights`
    gives each coordinate's multiplicity (all 1 for the plain family; the
    merged coordinate of a shortened family carries weight m).
    """

    n: int
    k: int
    N: int
    labels: tuple
    vectors: tuple
    weights: tuple

    def product(self, a, b):
        """Hermitian product of vectors a and b as a RootCountVector."""
        counts = [0] * self.n
        for u, v, w in zip(self.vectors[a], self.vectors[b], self.weights):
            counts[(u - v) % self.n] += w
        return RootCountVector(self.n, tuple(counts))


def root_vector_family(array):
    """The 1 + k(n-1) exponent vectors attached to an array."""
    n, k = array.n, array.k
    labels = ["C0"]
    vectors = [tuple([0] * array.N)]
    for j in range(k):
        for mult in range(1, n):
            labels.append(f"{mult}C{j + 1}")
            vectors.append(tuple((mult * row[j]) % n for row in array.rows))
    weights = tuple([1] * array.N)
    return RootVectorFamily(n, k, array.N, tuple(labels), tuple(vectors), weights)


def _orthogonality_report(family, method, implied_rhs, canonical, notes=()):
    n, k = family.n, family.k
    size = len(family.vectors)
    total = sum(family.weights)
    checks = [_eq_check("family-size", size, 1 + k * (n - 1))]
    for a in range(size):
        reduced = family.product(a, a).reduced()
        checks.append(
            Check(
                f"self@{family.labels[a]}",
                _fmt_poly(reduced),
                str(total),
                reduced == (total,),
            )
        )
    failures = []
    for a, b in combinations(range(size), 2):
        reduced = family.product(a, b).reduced()
        ok = reduced == ()
        checks.append(
            Check(
                f"orth@{family.labels[a]},{family.labels[b]}",
                _fmt_poly(reduced),
                "0",
                ok,
            )
        )
        if not ok:
            failures.append((family.labels[a], family.labels[b], reduced))
    report = AuditReport(
        method, tuple(checks), 1 + k * (n - 1), implied_rhs, canonical, notes
    )
    bad = _first_failure(checks)
    if bad is not None:
        pair = residual = None
        if failures:
            la, lb, residual = failures[0]
            pair = (la, lb)
        raise NonOrthogonal(
            f"{bad.check_id}: reduced to {bad.lhs}, expected {bad.rhs}",
            report=report,
            check_id=bad.check_id,
            pair=pair,
            residual=residual,
        )
    return report


def orthogonality_certificate(family):
    """Verify all pairwise orthogonality relations of a root-vector family.

    Every product is reduced modulo the n-th cyclotomic polynomial with
    exact integer coefficients; off-diagonal products must vanish and
    self-products must equal the coordinate count N.  The family is then
    1 + k(n-1) mutually orthogonal nonzero vectors in C^N: 1+k(n-1) <= N.
    """
    return _orthogonality_report(
        family,
        "roots",
        family.N,
        (family.k * (family.n - 1) + 1, family.N),
    )


def shortened_family_certificate(array, m):
    """Orthogonality certificate after merging the m repeated coordinates.

    Normalizes so the m copies of a repeated row sit last; those m identical
    coordinates of every vector are merged into a single coordinate of
    integer weight m, which preserves every hermitian product exactly while
    dropping the dimension to N-m+1.  Hence 1+k(n-1) <= N-m+1.  This route
    only strengthens the bound additively; the counting argument's factor-m
    bound m(k(n-1)+1) <= N is stronger for m >= 2.
    """
    if m < 1:
        raise ValueError("multiplicity m must be at least 1")
    census = row_multiplicities(array)
    target = next(
        (i for i, row in enumerate(array.rows) if census.counts[row] >= m), None
    )
    if target is None:
        raise ValueError(f"no row has multiplicity >= {m}")
    normalized = normalize_to_row(array, target)
    n, k, N = array.n, array.k, array.N

    base = root_vector_family(normalized)
    vectors = tuple(v[: N - m] + (v[N - m],) for v in base.vectors)
    weights = tuple([1] * (N - m) + [m])
    family = RootVectorFamily(n, k, N, base.labels, vectors, weights)
    notes = (
        f"coordinate merging proves k(n-1)+m = {k * (n - 1) + m} <= N = {N}; "
        f"the counting bound sharpens this to m(k(n-1)+1) = {m * (k * (n - 1) + 1)} <= N",
    )
    return _orthogonality_report(
        family, "shortened", N - m + 1, (k * (n - 1) + m, N), notes
    )


# ---------------------------------------------------------------------------
# Constant-weight-code extraction.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantWeightCodeFamily:
    """k binary vectors of length ell, weight w, pairwise inner product mu."""

    ell: int
    w: int
    mu: int
    vectors: tuple


def _cwc_vectors(array, m):
    zero = tuple([0] * array.k)
    for i in range(array.N - m, array.N):
        if array.rows[i] != zero:
            raise ValueError(
                f"row {i} is not all the designated symbol; normalize first"
            )
    kept = array.rows[: array.N - m]
    return tuple(
        tuple(1 if row[j] == 0 else 0 for row in kept) for j in range(array.k)
    )


def cwc_certificate(array, m=1):
    """Audit the constant-weight-code argument on a normalized array.

    Columns restricted to the non-repeated rows, with the designated symbol
    mapped to 1, must form k binary vectors of weight lambda*n - m and
    pairwise inner product lambda - m in length lambda*n^2 - m.  The
    pair-bound hypothesis margin w^2 - ell*mu equals lambda*m(n-1)^2 > 0,
    and the resulting maximum-family-size bound coincides exactly with the
    repeated-row bound k <= (lambda*n^2 - m)/(m(n-1)).
    """
    if m < 1:
        raise ValueError("multiplicity m must be at least 1")
    lam = _index_of(array)
    n, k, N = array.n, array.k, array.N
    if lam < m:
        raise ValueError("claimed multiplicity exceeds the index")
    vectors = _cwc_vectors(array, m)
    ell, w, mu = oa_to_cwc_params(k, n, lam, m)

    checks = []
    for j, vec in enumerate(vectors):
        checks.append(_eq_check(f"weight@{j + 1}", sum(vec), w))
    for a, b in combinations(range(k), 2):
        ip = sum(x * y for x, y in zip(vectors[a], vectors[b]))
        checks.append(_eq_check(f"ip@{a + 1},{b + 1}", ip, mu))
    margin = w * w - ell * mu
    checks.append(Check("johnson-hypothesis", str(margin), "0", margin > 0))
    checks.append(_eq_check("hypothesis-margin", margin, lam * m * (n - 1) ** 2))
    bound = johnson_R(ell, w, mu)
    implied = Fraction(lam * n * n - m, m * (n - 1))
    checks.append(_eq_check("johnson-equals-rr-bound", bound.value, implied))

    report = AuditReport(
        "cwc", tuple(checks), k, implied, (m * (k * (n - 1) + 1), N)
    )
    bad = _first_failure(checks)
    if bad is not None:
        message = f"{bad.check_id}: got {bad.lhs}, expected {bad.rhs}"
        if bad.check_id.startswith("weight@"):
            raise WeightMismatch(message, report=report, check_id=bad.check_id)
        raise InnerProductMismatch(message, report=report, check_id=bad.check_id)
    return report


def extract_cwc(array, m):
    """Extract and fully verify the constant-weight code of a normalized array."""
    report = cwc_certificate(array, m)
    lam = _index_of(array)
    ell, w, mu = oa_to_cwc_params(array.k, array.n, lam, m)
    assert report.passed
    return ConstantWeightCodeFamily(ell, w, mu, _cwc_vectors(array, m))
