"""Machine checks of the classical identities around Petrie functions.

Each check returns a :class:`VerifyReport`; a failed report always carries
a counterexample string.  Reports serialize to JSON lines and are
deterministic apart from the elapsed-time field.

The scans honor the PETRIE_THREADS environment variable (default: the
number of cores) as an upper bound on worker threads; every task is a
pure function, so the results do not depend on the schedule.
"""

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .gkm import det_int, petrie_g, pieri_expand
from .hopf import bernstein, v_map
from .partitions import (
    Partition,
    dominates,
    make_partition,
    partitions_of,
    unparse,
)
from .symfunc import (
    SymFunc,
    add,
    gen,
    multiply,
    scale,
    to_basis,
)


@dataclass
class VerifyReport:
    name: str
    range: str
    passed: bool
    counterexample: str | None
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        data = {"name": self.name, "range": self.range, "passed": self.passed}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        data["elapsed_ms"] = self.elapsed_ms
        return data

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict())


def thread_count() -> int:
    env = os.environ.get("PETRIE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _parallel_map(fn, items):
    items = list(items)
    workers = min(thread_count(), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _report(name: str, range_text: str, failures: list, started: float) -> VerifyReport:
    elapsed = int((time.perf_counter() - started) * 1000)
    counterexample = failures[0] if failures else None
    return VerifyReport(name, range_text, not failures, counterexample, elapsed)


def _h_of(n: int) -> SymFunc:
    return gen("h", (n,) if n else ())


def _p_in_h(n: int) -> SymFunc:
    return to_basis(gen("p", (n,)), "h")


def _hook_schur(row: int, column_height: int) -> SymFunc:
    """s_{(row, 1^column_height)}"""
    return gen("s", (row,) + (1,) * column_height)


def check_liu_polo(n: int) -> VerifyReport:
    """The dominance-filtered monomial sum below (n-1, n-1, 1) in degree
    2n - 1 equals the alternating hook-augmented Schur sum, along with the
    intermediate identities the equality factors through:

      LHS = G(n, 2n-1)
          = h_{2n-1} - h_{n-1} p_n
          = B_{n-1}(h_n - p_n)            (Bernstein operator)
      h_n - p_n = sum_i (-1)^i s_{(n-1-i, 1^{i+1})}
      RHS = sum_{i=0}^{n-2} (-1)^i s_{(n-1, n-1-i, 1^{i+1})}
    """
    if n <= 1:
        raise ValueError("n must be at least 2")
    started = time.perf_counter()
    failures: list[str] = []
    degree = 2 * n - 1
    top = (n - 1, n - 1, 1)

    lhs = SymFunc(
        "m", {lam: 1 for lam in partitions_of(degree) if dominates(top, lam)}
    )
    bounded = SymFunc(
        "m", {lam: 1 for lam in partitions_of(degree) if all(x < n for x in lam)}
    )
    if lhs != bounded:
        failures.append("dominance filter disagrees with the part-bound description")

    if lhs != petrie_g(n, degree):
        failures.append(f"LHS != G({n},{degree})")

    h_expr = _h_of(degree) - multiply(_h_of(n - 1), _p_in_h(n))
    if to_basis(h_expr, "m") != lhs:
        failures.append(f"LHS != h_{degree} - h_{n-1} p_{n}")

    core = _h_of(n) - _p_in_h(n)
    b_expr = bernstein(n - 1, core)
    if b_expr != h_expr:
        failures.append(f"B_{n-1}(h_{n} - p_{n}) != h_{degree} - h_{n-1} p_{n}")

    hook_sum = SymFunc.zero("s")
    for i in range(n - 1):
        hook_sum = add(hook_sum, scale((-1) ** i, _hook_schur(n - 1 - i, i + 1)))
    if to_basis(hook_sum, "h") != core:
        failures.append(f"h_{n} - p_{n} != alternating hook sum")

    rhs = SymFunc.zero("s")
    for i in range(n - 1):
        rhs = add(
            rhs, scale((-1) ** i, gen("s", (n - 1, n - 1 - i) + (1,) * (i + 1)))
        )
    if b_expr != to_basis(rhs, "h"):
        failures.append(f"B_{n-1}(h_{n} - p_{n}) != RHS")
    if to_basis(rhs, "m") != lhs:
        failures.append("LHS != RHS")

    return _report("liu_polo", f"n={n}", failures, started)


def _gessel_coefficient(m: int, n: int) -> int:
    base = 2 if (m - n) % 3 == 0 else -1
    return base if (m - n) % 2 == 0 else -base


def check_gessel(d_max: int) -> VerifyReport:
    """Degreewise comparison of G(3, d) with the quadratic expansion in the
    elementary functions: sum_n e_n^2 + sum_{m<n} c_{m,n} e_m e_n with
    c_{m,n} = (-1)^{m-n} (2 if 3 | m-n else -1)."""
    started = time.perf_counter()
    failures: list[str] = []
    for d in range(d_max + 1):
        terms: dict[Partition, int] = {}
        if d % 2 == 0:
            half = d // 2
            terms[(half, half) if half else ()] = 1
        for m in range((d + 1) // 2):
            n = d - m
            if m == n:
                continue
            key = tuple(x for x in (n, m) if x)
            terms[key] = terms.get(key, 0) + _gessel_coefficient(m, n)
        expected = SymFunc("e", terms)
        if to_basis(expected, "m") != petrie_g(3, d):
            failures.append(f"degree {d}: e-quadratic expansion != G(3,{d})")
    return _report("gessel", f"d<={d_max}", failures, started)


def check_genset(k: int, n_max: int) -> VerifyReport:
    """In each degree n <= n_max, the products G(k, kappa_1) G(k, kappa_2)...
    over partitions kappa of n form a basis: the transition matrix to the
    monomial basis is invertible over the rationals.  For k = 2 the family
    is a Z-basis and the determinant must be +-1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    started = time.perf_counter()
    failures: list[str] = []
    for n in range(1, n_max + 1):
        ps = partitions_of(n)
        rows = []
        for kappa in ps:
            product = SymFunc.one("m")
            for p in kappa:
                product = multiply(product, petrie_g(k, p))
            rows.append([product.terms.get(mu, 0) for mu in ps])
        det = det_int(rows)
        if det == 0:
            failures.append(f"degree {n}: transition matrix singular")
        elif k == 2 and det not in (-1, 1):
            failures.append(f"degree {n}: k=2 determinant {det} not unimodular")
    return _report("genset", f"k={k}, n<={n_max}", failures, started)


# Schur expansions of the first power sums, used to expand G(k,m) * p_j
# through the Pieri rule: p_j = sum_i (-1)^i s_{(j-i, 1^i)}.
_P2_HOOKS = (((2,), 1), ((1, 1), -1))
_P3_HOOKS = (((3,), 1), ((2, 1), -1), ((1, 1, 1), 1))


def _petrie_times_hooks(k: int, m: int, hooks) -> SymFunc:
    out = SymFunc.zero("s")
    for mu, sign in hooks:
        out = add(out, scale(sign, pieri_expand(k, m, mu)))
    return out


def scan_alexandersson(bound: int) -> VerifyReport:
    """Every coefficient of G(k, m) * p_2 in the Schur basis lies in
    {-1, 0, 1}, scanned over k >= 1, m >= 0 with k + m <= bound.  Also
    confirms that p_3 breaks the pattern: G(3, 4) * p_3 has a coefficient
    -2 on s_{(2,2,2,1)}."""
    started = time.perf_counter()
    pairs = [
        (k, m) for k in range(1, bound + 1) for m in range(0, bound - k + 1)
    ]

    def scan_pair(pair):
        k, m = pair
        f = _petrie_times_hooks(k, m, _P2_HOOKS)
        bad = [
            (lam, c) for lam, c in f.sorted_terms() if c not in (-1, 0, 1)
        ]
        if bad:
            lam, c = bad[0]
            return f"G({k},{m})*p_2 has coefficient {c} on s[{unparse(lam)}]"
        return None

    failures = [msg for msg in _parallel_map(scan_pair, pairs) if msg]

    g34p3 = _petrie_times_hooks(3, 4, _P3_HOOKS)
    if g34p3.terms.get((2, 2, 2, 1)) != -2:
        failures.append("G(3,4)*p_3 does not have coefficient -2 on s[2,2,2,1]")

    return _report("alexandersson", f"k+m<={bound}", failures, started)


def petriefication(k: int, lam) -> tuple[SymFunc, bool]:
    """V_k(s_lam) in the Schur basis, plus a flag telling whether all of its
    coefficients lie in {-1, 0, 1}."""
    lam = make_partition(lam)
    image = to_basis(v_map(k, gen("s", lam)), "s")
    flag = all(c in (-1, 0, 1) for c in image.terms.values())
    return image, flag


def check_petriefication_one(k: int, lam) -> VerifyReport:
    """Report whether V_k(s_lam) has all Schur coefficients in {-1, 0, 1};
    when it does not, the offending coefficient is the counterexample."""
    started = time.perf_counter()
    lam = make_partition(lam)
    image, flag = petriefication(k, lam)
    failures = []
    if not flag:
        bad = [(mu, c) for mu, c in image.sorted_terms() if c not in (-1, 0, 1)]
        mu, c = bad[0]
        failures.append(f"V_{k}(s[{unparse(lam)}]) has coefficient {c} on s[{unparse(mu)}]")
    return _report(
        "petriefication", f"k={k}, lambda=[{unparse(lam)}]", failures, started
    )


# The images V_k(s_lam) are not always {-1,0,1}-combinations of Schur
# functions; these are the smallest known failures.
PETRIEFICATION_COUNTEREXAMPLES = ((3, (4, 4, 4)), (4, (4, 4)), (4, (5, 1, 1, 1, 1)))


def check_petriefication_known_cases() -> VerifyReport:
    """Single rows and single columns always pass the {-1,0,1} test (they
    are Petrie functions resp. their antipode images); the recorded
    counterexamples must fail it."""
    started = time.perf_counter()
    failures: list[str] = []

    def check_true(pair):
        k, lam = pair
        _, flag = petriefication(k, lam)
        return None if flag else f"V_{k}(s[{unparse(lam)}]) unexpectedly outside {{-1,0,1}}"

    true_cases = []
    for k in range(2, 5):
        for m in range(0, 7):
            true_cases.append((k, (m,) if m else ()))
            if m:
                true_cases.append((k, (1,) * m))
    failures.extend(msg for msg in _parallel_map(check_true, true_cases) if msg)

    for k, lam in PETRIEFICATION_COUNTEREXAMPLES:
        _, flag = petriefication(k, lam)
        if flag:
            failures.append(
                f"V_{k}(s[{unparse(lam)}]) expected to leave {{-1,0,1}} but did not"
            )
    return _report("petriefication", "known cases", failures, started)
