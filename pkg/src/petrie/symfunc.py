"""Symmetric functions with exact rational coefficients.

A :class:`SymFunc` is a basis-tagged sparse map from partitions to
coefficients.  The five classical bases are supported:

    m  monomial            m_lam
    h  complete homogeneous h_lam = h_{lam_1} h_{lam_2} ...
    e  elementary           e_lam = e_{lam_1} e_{lam_2} ...
    p  power sum            p_lam = p_{lam_1} p_{lam_2} ...
    s  Schur                s_lam

Coefficients are Python ints with an exact :class:`fractions.Fraction`
fallback (the p basis is only a basis over the rationals; everything else
stays integral and is kept as ints).

Internally the h basis is the pivot: the h_n are free commutative
generators, so multiplication is concatenation of keys, and the other
bases convert to/from h:

  * e <-> h and h <-> e via the Newton-type recurrence coming from
    (sum (-1)^n e_n t^n)(sum h_n t^n) = 1;
  * p <-> h via Newton's identity n h_n = sum_{i=1}^{n} p_i h_{n-i};
  * s -> h via the Jacobi-Trudi determinant (the dual elementary-side
    determinant is used when the shape is taller than wide);
  * h -> m via the expansion of h_lam into monomial functions, computed
    by repeated multiplication with single h_n (a closed product-of-
    binomials formula counts the monomial placements);
  * m -> h by solving the h->m transition system per degree (its inverse
    is integral, which we exploit and assert);
  * m -> s by back-substitution against the s->m matrix, which is
    unitriangular in reverse-lexicographic order.
"""

from fractions import Fraction
from functools import cache
from itertools import permutations
from math import comb

from .partitions import (
    Partition,
    concat_sort,
    display_key,
    make_partition,
    partitions_of,
    size,
    transpose,
    unparse,
)

Coeff = int | Fraction

BASES = ("m", "h", "e", "p", "s")


def _norm(c: Coeff) -> Coeff:
    """Collapse integral Fractions to ints (the integer fast path)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _clean(terms: dict) -> dict:
    return {k: _norm(c) for k, c in terms.items() if c != 0}


class SymFunc:
    """A symmetric function, stored sparsely in a fixed basis.

    Instances are treated as immutable; all operations return new values.
    Equality is structural (same basis and same terms), except that zero
    compares equal across bases.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[Partition, Coeff]):
        basis = basis.lower()
        if basis not in BASES:
            raise ValueError(f"unknown basis tag {basis!r}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", _clean(terms))

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @staticmethod
    def zero(basis: str = "m") -> "SymFunc":
        return SymFunc(basis, {})

    @staticmethod
    def one(basis: str = "m") -> "SymFunc":
        return SymFunc(basis, {(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest key size (0 for the zero function)."""
        return max((size(k) for k in self.terms), default=0)

    def coefficient(self, lam) -> Coeff:
        return self.terms.get(make_partition(lam), 0)

    def sorted_terms(self) -> list[tuple[Partition, Coeff]]:
        """Terms sorted by (size, reverse-lexicographic partition)."""
        return sorted(self.terms.items(), key=lambda kv: display_key(kv[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        return add(self, other)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return add(self, scale(-1, other))

    def __neg__(self) -> "SymFunc":
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {pretty(self)!r})"


def gen(basis: str, lam) -> SymFunc:
    """The basis element indexed by lam, e.g. gen('h', (2, 1)) = h_2 h_1."""
    return SymFunc(basis, {make_partition(lam): 1})


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.basis != g.basis:
        raise ValueError(f"cannot add {f.basis!r}-basis and {g.basis!r}-basis terms")
    terms = dict(f.terms)
    for k, c in g.terms.items():
        terms[k] = terms.get(k, 0) + c
    return SymFunc(f.basis, terms)


def scale(c: Coeff, f: SymFunc) -> SymFunc:
    if c == 0:
        return SymFunc(f.basis, {})
    return SymFunc(f.basis, {k: c * v for k, v in f.terms.items()})


def degree_component(f: SymFunc, d: int) -> SymFunc:
    return SymFunc(f.basis, {k: c for k, c in f.terms.items() if size(k) == d})


# --------------------------------------------------------------------------
# generator expansions (all cached, all exact)

@cache
def _e_in_h(n: int) -> dict:
    """Expansion of e_n in the h basis: e_n = sum_{j>=1} (-1)^{j-1} e_{n-j} h_j."""
    if n == 0:
        return {(): 1}
    out: dict = {}
    for j in range(1, n + 1):
        sign = 1 if j % 2 else -1
        for key, c in _e_in_h(n - j).items():
            nk = concat_sort(key, (j,))
            out[nk] = out.get(nk, 0) + sign * c
    return _clean(out)


@cache
def _h_in_e(n: int) -> dict:
    """Expansion of h_n in the e basis (the same recurrence with roles swapped)."""
    if n == 0:
        return {(): 1}
    out: dict = {}
    for j in range(1, n + 1):
        sign = 1 if j % 2 else -1
        for key, c in _h_in_e(n - j).items():
            nk = concat_sort(key, (j,))
            out[nk] = out.get(nk, 0) + sign * c
    return _clean(out)


@cache
def _p_in_h(n: int) -> dict:
    """Newton's identity solved for p_n: p_n = n h_n - sum_{i<n} p_i h_{n-i}."""
    out: dict = {(n,): n}
    for i in range(1, n):
        for key, c in _p_in_h(i).items():
            nk = concat_sort(key, (n - i,))
            out[nk] = out.get(nk, 0) - c
    return _clean(out)


@cache
def _h_in_p(n: int) -> dict:
    """Newton's identity solved for h_n: h_n = (1/n) sum_{i=1}^n p_i h_{n-i}."""
    if n == 0:
        return {(): 1}
    out: dict = {}
    inv_n = Fraction(1, n)
    for i in range(1, n + 1):
        for key, c in _h_in_p(n - i).items():
            nk = concat_sort(key, (i,))
            out[nk] = out.get(nk, 0) + inv_n * c
    return _clean(out)


def _make_key_expander(gen_exp):
    """Expand a multiplicative key lam_1 >= lam_2 >= ... by multiplying the
    per-generator expansions; products concatenate keys in the target basis."""

    @cache
    def expand(key: Partition) -> dict:
        if not key:
            return {(): 1}
        out: dict = {}
        for k1, c1 in expand(key[:-1]).items():
            for k2, c2 in gen_exp(key[-1]).items():
                nk = concat_sort(k1, k2)
                out[nk] = out.get(nk, 0) + c1 * c2
        return _clean(out)

    return expand


_e_key_in_h = _make_key_expander(_e_in_h)
_h_key_in_e = _make_key_expander(_h_in_e)
_p_key_in_h = _make_key_expander(_p_in_h)
_h_key_in_p = _make_key_expander(_h_in_p)


# --------------------------------------------------------------------------
# h -> m

@cache
def _placements(mu: Partition, nu: Partition) -> int:
    """Number of ways to place the parts of mu into distinct slots of nu
    (slot i accepts parts <= nu_i).  Equivalently: the number of weak
    compositions beta rearranging mu with beta <= nu componentwise.

    The slot sets for the part values are nested (nu is sorted), so the
    count is a product of binomials, largest value first.
    """
    if not mu:
        return 1
    if mu[0] > nu[0]:
        return 0
    geq = transpose(nu)  # geq[v-1] = number of slots with nu_i >= v
    ways = 1
    used = 0
    i = 0
    while i < len(mu):
        v = mu[i]
        j = i
        while j < len(mu) and mu[j] == v:
            j += 1
        mult = j - i
        choose = comb(geq[v - 1] - used, mult)
        if choose == 0:
            return 0
        ways *= choose
        used += mult
        i = j
    return ways


def _mul_m_exp_by_h(exp: dict, n: int) -> dict:
    """Multiply an m-basis expansion of a homogeneous function by h_n."""
    if not exp:
        return {}
    d = size(next(iter(exp)))
    out: dict = {}
    for nu in partitions_of(d + n):
        total = 0
        for mu, c in exp.items():
            r = _placements(mu, nu)
            if r:
                total += c * r
        if total:
            out[nu] = total
    return out


@cache
def _h_key_to_m(key: Partition) -> dict:
    """m-basis expansion of h_key, built one h factor at a time."""
    if not key:
        return {(): 1}
    return _mul_m_exp_by_h(_h_key_to_m(key[:-1]), key[-1])


# --------------------------------------------------------------------------
# Jacobi-Trudi determinants

def _det_of_subscripts(subs: list[list[int]]) -> dict:
    """Determinant of the matrix (g_{subs[i][j]}) over the free commutative
    algebra with generators g_1, g_2, ...; g_0 = 1 and g_v = 0 for v < 0.

    Returns a sparse map {key: coeff}; keys are sorted tuples of the
    generator subscripts occurring in each product.  Cofactor expansion
    along rows, memoized on the surviving column set.
    """
    ell = len(subs)
    memo: dict = {}

    def minor(i: int, cols: tuple) -> dict:
        if i == ell:
            return {(): 1}
        state = (i, cols)
        if state in memo:
            return memo[state]
        acc: dict = {}
        for idx, j in enumerate(cols):
            v = subs[i][j]
            if v < 0:
                continue
            sub = minor(i + 1, cols[:idx] + cols[idx + 1 :])
            sign = -1 if idx % 2 else 1
            if v == 0:
                for key, c in sub.items():
                    acc[key] = acc.get(key, 0) + sign * c
            else:
                for key, c in sub.items():
                    nk = tuple(sorted(key + (v,), reverse=True))
                    acc[nk] = acc.get(nk, 0) + sign * c
        acc = {k: c for k, c in acc.items() if c}
        memo[state] = acc
        return acc

    return minor(0, tuple(range(ell)))


def _jt_h_subscripts(lam: Partition, mu: Partition, ell: int) -> list[list[int]]:
    return [
        [(lam[i] if i < len(lam) else 0) - (mu[j] if j < len(mu) else 0) - i + j
         for j in range(ell)]
        for i in range(ell)
    ]


@cache
def _s_key_to_h(lam: Partition) -> dict:
    """h-basis expansion of the Schur function s_lam via Jacobi-Trudi.

    Uses whichever of the two determinant forms is smaller: the h-form has
    len(lam) rows, the dual e-form (applied to the transpose) has lam_1 rows.
    """
    if not lam:
        return {(): 1}
    if len(lam) <= lam[0]:
        return _det_of_subscripts(_jt_h_subscripts(lam, (), len(lam)))
    t = transpose(lam)
    edet = _det_of_subscripts(_jt_h_subscripts(t, (), len(t)))
    out: dict = {}
    for ekey, c in edet.items():
        for hkey, c2 in _e_key_in_h(ekey).items():
            out[hkey] = out.get(hkey, 0) + c * c2
    return _clean(out)


def skew_schur(lam, mu) -> SymFunc:
    """The skew Schur function s_{lam/mu} as the Jacobi-Trudi determinant
    det(h_{lam_i - mu_j - i + j}), in the h basis.

    Vanishes when mu is not contained in lam; equals s_lam for mu empty.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    ell = max(len(lam), len(mu))
    return SymFunc("h", _det_of_subscripts(_jt_h_subscripts(lam, mu, ell)))


def jacobi_trudi_e(lam) -> SymFunc:
    """The determinant det(e_{lam_i - i + j}), in the e basis.

    By the dual Jacobi-Trudi formula this equals s_{lam^t}.
    """
    lam = make_partition(lam)
    return SymFunc("e", _det_of_subscripts(_jt_h_subscripts(lam, (), len(lam))))


# --------------------------------------------------------------------------
# per-degree transition matrices and linear solves

@cache
def _h2m_inverse(d: int) -> tuple[tuple[Coeff, ...], ...]:
    """Inverse of the h->m transition matrix in degree d (rows/cols in
    reverse-lexicographic order).  The matrix has determinant 1, so the
    inverse is integral; we verify that."""
    ps = partitions_of(d)
    n = len(ps)
    a = [[Fraction(_h_key_to_m(lam).get(mu, 0)) for mu in ps] for lam in ps]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("h->m transition matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        pval = a[col][col]
        if pval != 1:
            a[col] = [x / pval for x in a[col]]
            inv[col] = [x / pval for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    for row in inv:
        assert all(x.denominator == 1 for x in row), "h->m inverse not integral"
    return tuple(tuple(int(x) for x in row) for row in inv)


def _m_terms_to_h(terms: dict) -> dict:
    """Convert an m-basis sparse map to the h basis (per-degree solve)."""
    out: dict = {}
    by_degree: dict[int, dict] = {}
    for k, c in terms.items():
        by_degree.setdefault(size(k), {})[k] = c
    for d, component in by_degree.items():
        ps = partitions_of(d)
        inv = _h2m_inverse(d)
        b = [component.get(mu, 0) for mu in ps]
        for i, lam in enumerate(ps):
            x = sum(inv[i][j] * b[j] for j in range(len(ps)) if b[j])
            if x:
                out[lam] = x
    if all(isinstance(c, int) for c in terms.values()):
        assert all(isinstance(c, int) for c in out.values())
    return out


@cache
def _s_to_m_row(lam: Partition) -> dict:
    """m-basis expansion of s_lam (Jacobi-Trudi, then h -> m)."""
    out: dict = {}
    for hkey, c in _s_key_to_h(lam).items():
        for mu, c2 in _h_key_to_m(hkey).items():
            out[mu] = out.get(mu, 0) + c * c2
    return _clean(out)


def _m_terms_to_s(terms: dict) -> dict:
    """Convert an m-basis sparse map to the s basis by back-substitution.

    In reverse-lexicographic order the s->m matrix is unitriangular (the
    Kostka matrix), so one forward sweep suffices.
    """
    out: dict = {}
    by_degree: dict[int, dict] = {}
    for k, c in terms.items():
        by_degree.setdefault(size(k), {})[k] = c
    for d, component in by_degree.items():
        b = dict(component)
        for lam in partitions_of(d):
            c = b.get(lam, 0)
            if c == 0:
                continue
            out[lam] = c
            for mu, k in _s_to_m_row(lam).items():
                b[mu] = b.get(mu, 0) - c * k
        assert all(v == 0 for v in b.values()), "m->s back-substitution failed"
    return out


# --------------------------------------------------------------------------
# basis conversion

def _terms_to_h(terms: dict, basis: str) -> dict:
    if basis == "h":
        return dict(terms)
    if basis in ("e", "p"):
        expander = _e_key_in_h if basis == "e" else _p_key_in_h
        out: dict = {}
        for key, c in terms.items():
            for hk, c2 in expander(key).items():
                out[hk] = out.get(hk, 0) + c * c2
        return _clean(out)
    if basis == "s":
        out = {}
        for key, c in terms.items():
            for hk, c2 in _s_key_to_h(key).items():
                out[hk] = out.get(hk, 0) + c * c2
        return _clean(out)
    if basis == "m":
        return _m_terms_to_h(terms)
    raise ValueError(f"unknown basis tag {basis!r}")


def _h_terms_to(terms: dict, basis: str) -> dict:
    if basis == "h":
        return dict(terms)
    if basis == "m":
        out: dict = {}
        for key, c in terms.items():
            for mu, c2 in _h_key_to_m(key).items():
                out[mu] = out.get(mu, 0) + c * c2
        return _clean(out)
    if basis in ("e", "p"):
        expander = _h_key_in_e if basis == "e" else _h_key_in_p
        out = {}
        for key, c in terms.items():
            for k2, c2 in expander(key).items():
                out[k2] = out.get(k2, 0) + c * c2
        return _clean(out)
    if basis == "s":
        return _m_terms_to_s(_h_terms_to(terms, "m"))
    raise ValueError(f"unknown basis tag {basis!r}")


def to_basis(f: SymFunc, target: str) -> SymFunc:
    """Re-express f in another basis.  Conversions are exact; converting an
    integral function into any of m/h/e/s stays integral."""
    target = target.lower()
    if target not in BASES:
        raise ValueError(f"unknown basis tag {target!r}")
    if target == f.basis:
        return f
    if f.basis == "m" and target == "s":
        return SymFunc("s", _m_terms_to_s(f.terms))
    return SymFunc(target, _h_terms_to(_terms_to_h(f.terms, f.basis), target))


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the ring of symmetric functions, returned in the basis of f.

    Both factors are taken to the h basis, where multiplication is
    concatenation of keys.
    """
    fh = _terms_to_h(f.terms, f.basis)
    gh = _terms_to_h(g.terms, g.basis)
    out: dict = {}
    for k1, c1 in fh.items():
        for k2, c2 in gh.items():
            nk = concat_sort(k1, k2)
            out[nk] = out.get(nk, 0) + c1 * c2
    return SymFunc(f.basis, _h_terms_to(_clean(out), f.basis))


def hall(f: SymFunc, g: SymFunc) -> Coeff:
    """The Hall inner product, evaluated through the dual pair
    (h_lam, m_mu) = delta_{lam,mu}."""
    fh = _terms_to_h(f.terms, f.basis)
    gm = _h_terms_to(_terms_to_h(g.terms, g.basis), "m") if g.basis != "m" else g.terms
    total = 0
    for key, c in fh.items():
        c2 = gm.get(key)
        if c2 is not None:
            total += c * c2
    return _norm(total)


def alpha_eval(k: int, f: SymFunc) -> Coeff:
    """The algebra map sending h_i to [i < k], evaluated on f.

    On an h-basis key this is [all parts < k], so the value is the sum of
    the h-coefficients over keys with all parts below k.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    total = 0
    for key, c in _terms_to_h(f.terms, f.basis).items():
        if not key or key[0] < k:
            total += c
    return _norm(total)


def skew_apply(f: SymFunc, g: SymFunc) -> SymFunc:
    """The skewing operator f^perp applied to g, via adjointness to
    multiplication: the s_nu coefficient of f^perp(g) is (f s_nu, g).

    For f = s_mu and g = s_lam this recovers the skew Schur function
    s_{lam/mu}.
    """
    fh = _terms_to_h(f.terms, f.basis)
    gm = _h_terms_to(_terms_to_h(g.terms, g.basis), "m") if g.basis != "m" else g.terms
    fh_by_deg: dict[int, dict] = {}
    for key, c in fh.items():
        fh_by_deg.setdefault(size(key), {})[key] = c
    g_degrees = {size(key) for key in gm}
    out: dict = {}
    for a, fa in fh_by_deg.items():
        for b in g_degrees:
            if b < a:
                continue
            for nu in partitions_of(b - a):
                # (f_a s_nu, g) through the h/m dual pair
                c = 0
                for k1, c1 in fa.items():
                    for k2, c2 in _s_key_to_h(nu).items():
                        c3 = gm.get(concat_sort(k1, k2))
                        if c3 is not None:
                            c += c1 * c2 * c3
                if c:
                    out[nu] = out.get(nu, 0) + c
    return SymFunc("s", out)


# --------------------------------------------------------------------------
# brute-force multiplication oracle

def _weak_compositions(n: int, slots: int):
    """All tuples of `slots` nonnegative integers summing to n."""
    if slots == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in _weak_compositions(n - first, slots - 1):
            yield (first,) + rest


def _ssyt_contents(shape: Partition, nvars: int):
    """Content vectors of all semistandard tableaux of the given shape with
    entries in 1..nvars (rows weakly increase, columns strictly increase)."""

    def fill(row_idx: int, prev_row: tuple, content: list):
        if row_idx == len(shape):
            yield tuple(content)
            return
        width = shape[row_idx]

        def build_row(col: int, row: tuple):
            if col == width:
                for c in row:
                    content[c - 1] += 1
                yield from fill(row_idx + 1, row, content)
                for c in row:
                    content[c - 1] -= 1
                return
            lo = row[col - 1] if col > 0 else 1
            if col < len(prev_row):
                lo = max(lo, prev_row[col] + 1)
            for v in range(lo, nvars + 1):
                yield from build_row(col + 1, row + (v,))

        yield from build_row(0, ())

    yield from fill(0, (), [0] * nvars)


def _poly_of_generator(basis: str, n: int, nvars: int) -> dict:
    """A single generator expanded as an honest polynomial in nvars variables."""
    if n == 0:
        return {(0,) * nvars: 1}
    out: dict = {}
    if basis == "h":
        for expo in _weak_compositions(n, nvars):
            out[expo] = 1
    elif basis == "e":
        if n <= nvars:
            for expo in _weak_compositions(n, nvars):
                if all(x <= 1 for x in expo):
                    out[expo] = 1
    elif basis == "p":
        for i in range(nvars):
            expo = [0] * nvars
            expo[i] = n
            out[tuple(expo)] = 1
    else:
        raise ValueError(basis)
    return out


def _poly_multiply(p1: dict, p2: dict) -> dict:
    out: dict = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _expand_poly(f: SymFunc, nvars: int) -> dict:
    """Expand f as a polynomial in nvars variables.  Faithful for all
    homogeneous components of degree <= nvars.

    Each basis is expanded from its own monomial description (orbit sums,
    degree-n monomials, squarefree monomials, variable powers, tableaux),
    independently of the transition-matrix machinery.
    """
    zero_expo = (0,) * nvars
    out: dict = {}
    for key, coeff in f.terms.items():
        if f.basis == "m":
            if len(key) > nvars:
                continue
            padded = key + (0,) * (nvars - len(key))
            for expo in set(permutations(padded)):
                out[expo] = out.get(expo, 0) + coeff
        elif f.basis == "s":
            for content in _ssyt_contents(key, nvars):
                out[content] = out.get(content, 0) + coeff
        else:
            poly = {zero_expo: 1}
            for n in key:
                poly = _poly_multiply(poly, _poly_of_generator(f.basis, n, nvars))
            for expo, c in poly.items():
                out[expo] = out.get(expo, 0) + coeff * c
    return {k: c for k, c in out.items() if c}


def multiply_oracle(f: SymFunc, g: SymFunc) -> SymFunc:
    """Brute-force product: expand both factors as polynomials in
    degree(f) + degree(g) variables, multiply, and re-collect the m basis.

    A symmetric function of degree d is represented faithfully by d
    variables, so this is an independent check of :func:`multiply`.
    """
    if f.is_zero() or g.is_zero():
        return SymFunc("m", {})
    nvars = f.degree() + g.degree()
    if nvars == 0:
        return SymFunc("m", {(): f.terms.get((), 0) * g.terms.get((), 0)})
    prod = _poly_multiply(_expand_poly(f, nvars), _expand_poly(g, nvars))
    out: dict = {}
    for expo, c in prod.items():
        # the m_lam coefficient is read off the sorted representative monomial
        if all(expo[i] >= expo[i + 1] for i in range(len(expo) - 1)):
            out[tuple(x for x in expo if x)] = c
    return SymFunc("m", out)


# --------------------------------------------------------------------------
# rendering and JSON

def _coeff_str(c: Coeff) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _coeff_parse(s: str) -> Coeff:
    if "/" in s:
        return _norm(Fraction(s))
    return int(s)


def pretty(f: SymFunc) -> str:
    """One-line rendering, terms sorted by (size, reverse-lex):
    'h[2,1]: 3, h[1,1,1]: -1'; the constant term prints as a bare number."""
    if f.is_zero():
        return "0"
    pieces = []
    for lam, c in f.sorted_terms():
        if lam:
            pieces.append(f"{f.basis}[{unparse(lam)}]: {_coeff_str(c)}")
        else:
            pieces.append(_coeff_str(c))
    return ", ".join(pieces)


def to_json_dict(f: SymFunc) -> dict:
    return {
        "basis": f.basis,
        "terms": [
            {"partition": list(lam), "coeff": _coeff_str(c)}
            for lam, c in f.sorted_terms()
        ],
    }


def from_json_dict(data: dict) -> SymFunc:
    terms = {
        make_partition(t["partition"]): _coeff_parse(t["coeff"])
        for t in data["terms"]
    }
    return SymFunc(data["basis"], terms)
