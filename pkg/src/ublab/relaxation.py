"""Brute-force solvers for three small minimization programs over leg-length
tuples, with exact rational arithmetic.

Each program minimizes an explicit expression over nonincreasing tuples
(n_1, ..., n_k) of prescribed sum:

* ``e1`` — half-integral tuples summing to n - 1 with n/2 >= n_1 and
  n_k >= 1; the objective is the short-range unbalancedness expression of a
  spider with those (possibly fractional) leg lengths.
* ``case12`` — integral tuples summing to n - 1 whose first entry exceeds
  n/2; the objective is the same expression with the long first leg folded
  over.
* ``case2`` — integral tuples summing to n' - 1 (the legs hanging off one
  branch vertex of a larger tree of order n >= 2n'); the objective is the
  guaranteed drop in short-range unbalancedness when those legs are
  replaced by one pendant path.

For each program the expected minimizer has a closed form, as does its
value; the solvers enumerate every feasible tuple and report whether the
expectation matches the truth. All arithmetic uses ``fractions.Fraction``
(denominators never exceed 4), so comparisons are exact.
"""

from dataclasses import dataclass
from fractions import Fraction

from ublab.errors import InfeasibleError

__all__ = [
    "RelaxationInstance",
    "RelaxationSolution",
    "objective_e1",
    "claimed_e1",
    "solve_e1",
    "e1_value_identity",
    "case12_objective",
    "claimed_case12",
    "solve_case12",
    "case12_value_identity",
    "case2_objective",
    "claimed_case2",
    "case2_bound",
    "solve_case2",
    "case2_value_identity",
    "iter_sweep_solutions",
    "sweep_claims",
    "solution_to_json",
    "rational_to_json",
]

_PROBLEMS = ("e1", "case12", "case2")


@dataclass(frozen=True)
class RelaxationInstance:
    """One solver instance: problem tag, order(s), and leg count.

    ``n_prime`` is used by case2 only. ``step`` is 'half' for e1 and
    'integer' otherwise.
    """

    problem: str
    n: int
    k: int
    n_prime: "int | None" = None

    def __post_init__(self):
        if self.problem not in _PROBLEMS:
            raise InfeasibleError(f"unknown problem tag {self.problem!r}")
        if self.k < 2:
            raise InfeasibleError(f"leg count must be at least 2, got {self.k}")
        if self.problem == "case2":
            if self.n_prime is None:
                raise InfeasibleError("case2 requires n_prime")
            if self.n_prime < self.k + 1:
                raise InfeasibleError(
                    f"need n_prime >= k+1 for k legs of length >= 1, "
                    f"got n_prime={self.n_prime}, k={self.k}"
                )
            if 2 * self.n_prime > self.n:
                raise InfeasibleError(
                    f"need 2*n_prime <= n, got n_prime={self.n_prime}, n={self.n}"
                )
        else:
            if self.n_prime is not None:
                raise InfeasibleError(f"{self.problem} does not take n_prime")
            if self.n < self.k + 1:
                raise InfeasibleError(
                    f"need n >= k+1 for k legs of length >= 1, got n={self.n}, k={self.k}"
                )
            if self.problem == "case12" and self.n <= 2 * self.k:
                raise InfeasibleError(
                    f"case12 needs n > 2k for a first leg longer than n/2, "
                    f"got n={self.n}, k={self.k}"
                )

    @property
    def step(self):
        return "half" if self.problem == "e1" else "integer"


@dataclass(frozen=True)
class RelaxationSolution:
    """Solver outcome for one instance.

    ``optimum_tuple`` is the lexicographically greatest minimizer;
    ``claim_holds`` records whether the expected tuple/value matched
    (for e1 the expected tuple must itself be the lex-max minimizer; for
    the integral programs it must attain the minimum, with lex-maximality
    recorded separately in ``claimed_is_lex_max``).
    """

    instance: RelaxationInstance
    optimum_value: Fraction
    optimum_tuple: tuple
    claimed_tuple: tuple
    claimed_value: Fraction
    claim_holds: bool
    claimed_is_lex_max: bool


def _check_tuple(values, k_min=2):
    values = tuple(values)
    if len(values) < k_min:
        raise InfeasibleError(f"need at least {k_min} legs, got {len(values)}")
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise InfeasibleError(f"tuple {values} is not nonincreasing")
    if values[-1] < 1:
        raise InfeasibleError(f"leg lengths must be at least 1, got {values}")
    return values


def _leg_term(n, x):
    """Per-leg expression (2x - 1) n - x (2x + 1) + 1, exact."""
    return (2 * x - 1) * n - x * (2 * x + 1) + 1


def _nonincreasing_tuples(k, total, lo, hi):
    """Nonincreasing integer k-tuples with entries in [lo, hi] summing to
    total, in decreasing lexicographic order."""
    if k == 1:
        if lo <= total <= hi:
            yield (total,)
        return
    first_max = min(hi, total - lo * (k - 1))
    first_min = -(-total // k)
    if first_min < lo:
        first_min = lo
    for first in range(first_max, first_min - 1, -1):
        for rest in _nonincreasing_tuples(k - 1, total - first, lo, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Program e1: half-integral legs, n/2 >= n_1 >= ... >= n_k >= 1
# ---------------------------------------------------------------------------

def objective_e1(n, values):
    """Exact objective of program e1 at a feasible half-integral tuple:
    sum of per-leg terms plus the gap n_1 - n_2."""
    values = _check_tuple(tuple(Fraction(v) for v in values))
    if any((2 * v).denominator != 1 for v in values):
        raise InfeasibleError(f"tuple {values} is not half-integral")
    if sum(values) != n - 1:
        raise InfeasibleError(f"tuple {values} does not sum to n-1 = {n - 1}")
    if 2 * values[0] > n:
        raise InfeasibleError(f"first entry {values[0]} exceeds n/2 = {n}/2")
    total = sum(_leg_term(n, v) for v in values)
    return total + (values[0] - values[1])


def claimed_e1(n, k):
    """Expected minimizer and value of program e1.

    For n >= 2k the minimizer is (n/2, n/2 - k + 1, 1, ..., 1) with value
    (n-1)(n-2) + (n-2k)(k-2); for n < 2k it is (n-k, 1, ..., 1) with value
    (n-1)(n-2) + (2k-n)(n-k-1).
    """
    RelaxationInstance("e1", n, k)
    if n >= 2 * k:
        tup = (Fraction(n, 2), Fraction(n, 2) - k + 1) + (Fraction(1),) * (k - 2)
        value = Fraction((n - 1) * (n - 2) + (n - 2 * k) * (k - 2))
    else:
        tup = (Fraction(n - k),) + (Fraction(1),) * (k - 1)
        value = Fraction((n - 1) * (n - 2) + (2 * k - n) * (n - k - 1))
    return tup, value


def solve_e1(n, k):
    """Minimize program e1 by enumerating every feasible half-integral tuple."""
    instance = RelaxationInstance("e1", n, k)
    best_value = None
    best_tuple = None
    for doubled in _nonincreasing_tuples(k, 2 * (n - 1), 2, n):
        values = tuple(Fraction(m, 2) for m in doubled)
        value = objective_e1(n, values)
        if best_value is None or value < best_value:
            best_value = value
            best_tuple = values
    claimed_tuple, claimed_value = claimed_e1(n, k)
    holds = claimed_value == best_value and claimed_tuple == best_tuple
    return RelaxationSolution(
        instance=instance,
        optimum_value=best_value,
        optimum_tuple=best_tuple,
        claimed_tuple=claimed_tuple,
        claimed_value=claimed_value,
        claim_holds=holds,
        claimed_is_lex_max=claimed_tuple == best_tuple,
    )


def e1_value_identity(n, k):
    """True when the e1 objective at the expected tuple equals its closed form."""
    tup, value = claimed_e1(n, k)
    return objective_e1(n, tup) == value


# ---------------------------------------------------------------------------
# Program case12: integral legs with a long first leg (n_1 > n/2)
# ---------------------------------------------------------------------------

def case12_objective(n, values):
    """Exact objective of the long-leg program: the folded first-leg term
    (n-1)(n-2)/2 + (2 n_1 - n)(2 n_1 - n + 1)/2, per-leg terms for the
    rest, plus the gaps sum of (n_1 - n_i) over i >= 2."""
    values = _check_tuple(values)
    if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
        raise InfeasibleError(f"tuple {values} must be integral")
    if sum(values) != n - 1:
        raise InfeasibleError(f"tuple {values} does not sum to n-1 = {n - 1}")
    if 2 * values[0] <= n:
        raise InfeasibleError(f"first entry {values[0]} must exceed n/2 = {n}/2")
    n1 = values[0]
    k = len(values)
    over = 2 * n1 - n
    total = (n - 1) * (n - 2) // 2 + over * (over + 1) // 2
    total += (k - 1) * n1
    for v in values[1:]:
        total += _leg_term(n, v) - v
    return Fraction(total)


def claimed_case12(n, k):
    """Expected minimizer (n-k, 1, ..., 1) of the long-leg program and its
    value (n-1)(n-2) + (k-1)(k-2)."""
    RelaxationInstance("case12", n, k)
    tup = (n - k,) + (1,) * (k - 1)
    return tup, Fraction((n - 1) * (n - 2) + (k - 1) * (k - 2))


def solve_case12(n, k):
    """Minimize the long-leg program over all feasible integral tuples."""
    instance = RelaxationInstance("case12", n, k)
    best_value = None
    best_tuple = None
    lo_first = n // 2 + 1
    for values in _nonincreasing_tuples(k, n - 1, 1, n - k):
        if values[0] < lo_first:
            continue
        value = case12_objective(n, values)
        if best_value is None or value < best_value:
            best_value = value
            best_tuple = values
    if best_value is None:
        raise InfeasibleError(f"no feasible tuple for n={n}, k={k}")
    claimed_tuple, claimed_value = claimed_case12(n, k)
    return RelaxationSolution(
        instance=instance,
        optimum_value=best_value,
        optimum_tuple=best_tuple,
        claimed_tuple=claimed_tuple,
        claimed_value=claimed_value,
        claim_holds=claimed_value == best_value,
        claimed_is_lex_max=claimed_tuple == best_tuple,
    )


def case12_value_identity(n, k):
    """True when the long-leg objective at (n-k, 1, ..., 1) equals
    (n-1)(n-2) + (k-1)(k-2)."""
    tup, value = claimed_case12(n, k)
    return case12_objective(n, tup) == value


# ---------------------------------------------------------------------------
# Program case2: legs at one branch vertex of a tree of order n >= 2n'
# ---------------------------------------------------------------------------

def case2_objective(n, n_prime, values):
    """Exact guaranteed decrease when the k legs (summing to n' - 1) at a
    branch vertex of an n-vertex tree are replaced by one pendant path of
    the same total order."""
    values = _check_tuple(values)
    if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
        raise InfeasibleError(f"tuple {values} must be integral")
    if sum(values) != n_prime - 1:
        raise InfeasibleError(
            f"tuple {values} does not sum to n_prime-1 = {n_prime - 1}"
        )
    RelaxationInstance("case2", n, len(values), n_prime)
    total = 0
    for v in values:
        total += _leg_term(n, v) + (n - n_prime) - v
    total -= (2 * n_prime - 2) * n - n_prime * (2 * n_prime - 1) + 1
    return Fraction(total)


def case2_bound(n_prime, k):
    """Closed-form lower bound (3 n' - 2k - 3)(k - 1) for the decrease."""
    return (3 * n_prime - 2 * k - 3) * (k - 1)


def claimed_case2(n_prime, k):
    """Expected minimizer (n'-k, 1, ..., 1) of the decrease expression and
    its value, which equals the closed-form bound."""
    tup = (n_prime - k,) + (1,) * (k - 1)
    return tup, Fraction(case2_bound(n_prime, k))


def solve_case2(n, n_prime, k):
    """Minimize the decrease expression over all feasible integral tuples."""
    instance = RelaxationInstance("case2", n, k, n_prime)
    best_value = None
    best_tuple = None
    for values in _nonincreasing_tuples(k, n_prime - 1, 1, n_prime - k):
        value = case2_objective(n, n_prime, values)
        if best_value is None or value < best_value:
            best_value = value
            best_tuple = values
    claimed_tuple, claimed_value = claimed_case2(n_prime, k)
    return RelaxationSolution(
        instance=instance,
        optimum_value=best_value,
        optimum_tuple=best_tuple,
        claimed_tuple=claimed_tuple,
        claimed_value=claimed_value,
        claim_holds=claimed_value == best_value,
        claimed_is_lex_max=claimed_tuple == best_tuple,
    )


def case2_value_identity(n, n_prime, k):
    """True when the decrease expression at (n'-k, 1, ..., 1) equals the
    closed-form bound."""
    tup, value = claimed_case2(n_prime, k)
    return case2_objective(n, n_prime, tup) == value


# ---------------------------------------------------------------------------
# Claim sweep
# ---------------------------------------------------------------------------

def rational_to_json(value):
    """Render a Fraction as an int when integral, else as 'p/q' text."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return f"{frac.numerator}/{frac.denominator}"


def solution_to_json(sol):
    """Fixed-field JSON dict for one solution; n_prime appears only when
    the problem carries one."""
    entry = {
        "problem": sol.instance.problem,
        "n": sol.instance.n,
        "k": sol.instance.k,
        "optimum_value": rational_to_json(sol.optimum_value),
        "optimum_tuple": [rational_to_json(v) for v in sol.optimum_tuple],
        "claimed_tuple": [rational_to_json(v) for v in sol.claimed_tuple],
        "claim_holds": sol.claim_holds,
    }
    if sol.instance.n_prime is not None:
        entry["n_prime"] = sol.instance.n_prime
    return entry


def iter_sweep_solutions(max_n):
    """Solve every feasible instance with n <= max_n, in a fixed order.

    Yields e1 for 3 <= n <= max_n and 2 <= k <= n-1, case12 whenever
    additionally n > 2k, then case2 for 6 <= n <= max_n over
    k+1 <= n' <= n/2.
    """
    if max_n < 6:
        raise InfeasibleError(f"sweep needs max_n >= 6, got {max_n}")
    for n in range(3, max_n + 1):
        for k in range(2, n):
            yield solve_e1(n, k)
            if 2 * k < n:
                yield solve_case12(n, k)
    for n in range(6, max_n + 1):
        for n_prime in range(3, n // 2 + 1):
            for k in range(2, n_prime):
                yield solve_case2(n, n_prime, k)


def _sweep_violation(sol):
    """Reason text when a solution breaks its sweep-level requirement,
    else None.

    e1 and case12 optima must match the expectation and stay at or above
    (n-1)(n-2); the case2 optimum must match and be positive.
    """
    problem = sol.instance.problem
    if not sol.claim_holds:
        return f"{problem}: expected configuration/value is not the optimum"
    if problem == "case2":
        if sol.optimum_value <= 0:
            return "case2: decrease bound is not positive"
    else:
        floor_value = (sol.instance.n - 1) * (sol.instance.n - 2)
        if sol.optimum_value < floor_value:
            return f"{problem}: optimum fell below (n-1)(n-2)"
    return None


def sweep_claims(max_n):
    """Check every feasible instance with n <= max_n against its expected
    minimizer, expected value, and lower bounds.

    Returns a JSON-ready report with instance counts per problem and a list
    of violations (empty on success); violations are collected, not raised.
    """
    report = {
        "max_n": max_n,
        "instances": {"e1": 0, "case12": 0, "case2": 0},
        "violations": [],
    }
    for sol in iter_sweep_solutions(max_n):
        report["instances"][sol.instance.problem] += 1
        reason = _sweep_violation(sol)
        if reason is not None:
            entry = solution_to_json(sol)
            entry["claimed_value"] = rational_to_json(sol.claimed_value)
            entry["reason"] = reason
            report["violations"].append(entry)
    report["ok"] = not report["violations"]
    return report
