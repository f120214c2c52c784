"""Petrie symmetric functions G(k, m) and k-Petrie numbers.

G(k, m) is the sum of all degree-m monomials whose exponents are all
smaller than k; equivalently the sum of m_lam over partitions lam of m
with every part below k.  It interpolates between the complete
homogeneous functions (k > m) and the elementary ones (k = 2).

The coefficient of s_lam in G(k, m) s_mu is the k-Petrie number
pet_k(lam, mu), a determinant of a 0/1 Petrie matrix, hence always in
{-1, 0, 1} (Gordon-Wilkinson).  Three independent routes to it live here:

  * :func:`pet_det` -- the defining integer determinant;
  * :func:`pet_explicit` -- a closed-form sign/vanishing rule for
    mu = empty, via the transpose partition;
  * :func:`pet_alpha` -- evaluation of the skew Schur function
    s_{lam/mu} under the algebra map h_i -> [i < k].
"""

import enum
from dataclasses import dataclass

from . import hopf
from .partitions import (
    Partition,
    make_partition,
    part,
    partitions_of,
    size,
    transpose,
)
from .symfunc import SymFunc, add, alpha_eval, gen, multiply, scale, skew_schur, to_basis

IntMatrix = list[list[int]]


def petrie_g(k: int, m: int) -> SymFunc:
    """G(k, m): sum of m_lam over lam of size m with all parts < k (m basis)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return SymFunc("m", {lam: 1 for lam in partitions_of(m, k - 1)})


def petrie_modified(k: int, kp: int, m: int) -> SymFunc:
    """The two-sided variant: sum of m_lam over lam of size m whose parts all
    lie in [kp, k-1].  The lower bound constrains parts only (zero exponents
    are exempt, otherwise no monomial at all would qualify)."""
    if k < 1 or kp < 1:
        raise ValueError("k and kp must be positive integers")
    if kp > k:
        raise ValueError("kp must not exceed k")
    terms = {
        lam: 1
        for lam in partitions_of(m, k - 1)
        if not lam or lam[-1] >= kp
    }
    return SymFunc("m", terms)


def pet_matrix(k: int, lam, mu, ell: int | None = None) -> IntMatrix:
    """The 0/1 matrix ([0 <= lam_i - mu_j - i + j < k]) of size ell
    (default: max of the lengths).  Its determinant is pet_k(lam, mu)."""
    lam, mu = make_partition(lam), make_partition(mu)
    if ell is None:
        ell = max(len(lam), len(mu))
    elif ell < max(len(lam), len(mu)):
        raise ValueError("ell must cover both partitions")
    return [
        [
            1 if 0 <= part(lam, i + 1) - part(mu, j + 1) - i + j < k else 0
            for j in range(ell)
        ]
        for i in range(ell)
    ]


def det_int(mat: IntMatrix) -> int:
    """Exact determinant of an integer matrix by fraction-free Bareiss
    elimination (all intermediate divisions are exact)."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def is_petrie_matrix(mat: IntMatrix) -> bool:
    """Whether all entries are 0/1 and the 1s in each column are contiguous."""
    if not mat:
        return True
    for row in mat:
        for x in row:
            if x not in (0, 1):
                return False
    for j in range(len(mat[0])):
        ones = [i for i in range(len(mat)) if mat[i][j] == 1]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


def pet_det(k: int, lam, mu) -> int:
    """The k-Petrie number pet_k(lam, mu) as an integer determinant.

    The value does not depend on zero-padding of the two partitions and
    always lies in {-1, 0, 1}.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    return det_int(pet_matrix(k, lam, mu))


class VanishingReason(enum.Enum):
    MU_K_NONZERO = "mu_k_nonzero"
    GAMMA_COLLISION = "gamma_collision"
    NONE = "none"


@dataclass(frozen=True)
class PetrieExplicitData:
    """Diagnostics of the closed-form evaluation of pet_k(lam, empty):
    which clause fired, and the intermediate tuples when it did not vanish."""

    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    g: int
    vanishing_reason: VanishingReason


def pet_explicit(k: int, lam) -> tuple[int, PetrieExplicitData]:
    """Closed-form evaluation of pet_k(lam, empty).

    With mu = lam^t: the value is 0 if mu_k != 0; otherwise set
    beta_i = mu_i - i and gamma_i = 1 + (beta_i - 1) % k for i < k.  The
    value is 0 if the gamma_i collide, else (-1)^(sum beta + g + sum gamma)
    where g counts pairs i < j with gamma_i < gamma_j.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    lam = make_partition(lam)
    mu = transpose(lam)
    if part(mu, k) != 0:
        return 0, PetrieExplicitData((), (), 0, VanishingReason.MU_K_NONZERO)
    beta = tuple(part(mu, i) - i for i in range(1, k))
    gamma = tuple(1 + (b - 1) % k for b in beta)
    g = sum(
        1
        for i in range(len(gamma))
        for j in range(i + 1, len(gamma))
        if gamma[i] < gamma[j]
    )
    if len(set(gamma)) != len(gamma):
        return 0, PetrieExplicitData(beta, gamma, g, VanishingReason.GAMMA_COLLISION)
    value = (-1) ** (sum(beta) + g + sum(gamma))
    return value, PetrieExplicitData(beta, gamma, g, VanishingReason.NONE)


def pet_alpha(k: int, lam, mu) -> int:
    """pet_k(lam, mu) as the image of the skew Schur function s_{lam/mu}
    under the algebra map h_i -> [i < k]."""
    value = alpha_eval(k, skew_schur(lam, mu))
    assert isinstance(value, int)
    return value


def pet_nonzero_criterion(k: int, lam) -> bool:
    """Vanishing test for pet_k(lam, empty), assuming all parts of lam are < k.

    With B = {lam_i - i : i >= 1} and W the set of integers below k - 1,
    the Petrie number is nonzero iff every residue class mod k meets
    W \\ B in at most one element.  Every integer below -len(lam) lies in
    B, so W \\ B sits inside a finite window.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    lam = make_partition(lam)
    if lam and lam[0] >= k:
        raise ValueError("criterion requires all parts of lam to be below k")
    b_window = {lam[i] - (i + 1) for i in range(len(lam))}
    missing = [
        z for z in range(-len(lam), k - 1) if z not in b_window
    ]
    counts: dict[int, int] = {}
    for z in missing:
        counts[z % k] = counts.get(z % k, 0) + 1
    return all(c <= 1 for c in counts.values())


def pieri_expand(k: int, m: int, mu) -> SymFunc:
    """Schur expansion of G(k, m) * s_mu: the coefficient of s_lam is
    pet_k(lam, mu), summed over lam of size m + |mu| (s basis)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if m < 0:
        raise ValueError("m must be nonnegative")
    mu = make_partition(mu)
    terms = {}
    for lam in partitions_of(m + size(mu)):
        c = pet_det(k, lam, mu)
        if c:
            terms[lam] = c
    return SymFunc("s", terms)


def petrie_via_frobenius(k: int, m: int) -> SymFunc:
    """G(k, m) as the alternating sum of h_{m-ki} * f_k(e_i) over i >= 0,
    where f_k raises every variable to its k-th power (m basis)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = SymFunc.zero("h")
    i = 0
    while m - k * i >= 0:
        h_factor = gen("h", (m - k * i,) if m - k * i else ())
        term = multiply(h_factor, hopf.frobenius(k, gen("e", (i,) if i else ())))
        total = add(total, scale((-1) ** i, term))
        i += 1
    return to_basis(total, "m")


def pet_json_dict(k: int, lam: Partition, mu: Partition, value: int, method: str) -> dict:
    """The serialized form of one Petrie-number evaluation."""
    return {
        "k": k,
        "lambda": list(lam),
        "mu": list(mu),
        "pet": value,
        "method": method,
    }
