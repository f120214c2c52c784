"""Hopf-algebra structure maps on symmetric functions.

The coproduct is taken on the h generators, Delta(h_n) = sum h_i (x) h_{n-i},
and extended as an algebra map; tensors are stored sparsely in the
h (x) h basis (:class:`TensorFunc`).  On top of it sit the antipode
S(h_n) = (-1)^n e_n, the Frobenius map f_k (raise every variable to the
k-th power), its Hall-adjoint Verschiebung v_k (divide h indices by k
when possible), the composite U_k = f_k . S . v_k, the convolution
V_k = id * U_k which sends h_m to the Petrie function G(k, m), and the
Bernstein row-creation operators B_m.
"""

from fractions import Fraction
from typing import Callable

from .partitions import Partition, concat_sort, make_partition, size, unparse
from .symfunc import (
    Coeff,
    SymFunc,
    _clean,
    _coeff_parse,
    _coeff_str,
    _terms_to_h,
    add,
    gen,
    multiply,
    scale,
    skew_apply,
    to_basis,
)

TensorKey = tuple[Partition, Partition]


class TensorFunc:
    """A sparse element of Lambda (x) Lambda in the h (x) h basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[TensorKey, Coeff]):
        object.__setattr__(self, "terms", _clean(terms))

    def __setattr__(self, name, value):
        raise AttributeError("TensorFunc is immutable")

    @staticmethod
    def zero() -> "TensorFunc":
        return TensorFunc({})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorFunc):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TensorFunc") -> "TensorFunc":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return TensorFunc(terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorFunc({k: other * c for k, c in self.terms.items()})
        if isinstance(other, TensorFunc):
            out: dict[TensorKey, Coeff] = {}
            for (l1, r1), c1 in self.terms.items():
                for (l2, r2), c2 in other.terms.items():
                    key = (concat_sort(l1, l2), concat_sort(r1, r2))
                    out[key] = out.get(key, 0) + c1 * c2
            return TensorFunc(out)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        pieces = [
            f"h[{unparse(l)}](x)h[{unparse(r)}]: {_coeff_str(c)}"
            for (l, r), c in sorted(self.terms.items())
        ]
        return "TensorFunc(" + (", ".join(pieces) or "0") + ")"

    def to_json_dict(self) -> dict:
        keys = sorted(self.terms, key=lambda lr: (size(lr[0]) + size(lr[1]), lr))
        return {
            "terms": [
                {"left": list(l), "right": list(r), "coeff": _coeff_str(self.terms[(l, r)])}
                for l, r in keys
            ]
        }

    @staticmethod
    def from_json_dict(data: dict) -> "TensorFunc":
        return TensorFunc(
            {
                (make_partition(t["left"]), make_partition(t["right"])): _coeff_parse(
                    t["coeff"]
                )
                for t in data["terms"]
            }
        )


def tensor(f: SymFunc, g: SymFunc) -> TensorFunc:
    """The pure tensor f (x) g in the h (x) h basis."""
    fh = _terms_to_h(f.terms, f.basis)
    gh = _terms_to_h(g.terms, g.basis)
    return TensorFunc(
        {(kl, kr): cl * cr for kl, cl in fh.items() for kr, cr in gh.items()}
    )


def _coproduct_h_generator(n: int) -> TensorFunc:
    return TensorFunc(
        {((i,) if i else (), (n - i,) if n - i else ()): 1 for i in range(n + 1)}
    )


def coproduct(f: SymFunc) -> TensorFunc:
    """Delta(f): expand f over h keys and apply Delta(h_n) = sum h_i (x) h_{n-i}
    multiplicatively."""
    out = TensorFunc.zero()
    for key, c in _terms_to_h(f.terms, f.basis).items():
        prod = TensorFunc({((), ()): 1})
        for n in key:
            prod = prod * _coproduct_h_generator(n)
        out = out + prod * c
    return out


def antipode(f: SymFunc) -> SymFunc:
    """The antipode: the algebra map with S(h_n) = (-1)^n e_n (h basis)."""
    fh = _terms_to_h(f.terms, f.basis)
    signed_e = SymFunc("e", {key: (-1) ** size(key) * c for key, c in fh.items()})
    return to_basis(signed_e, "h")


def frobenius(k: int, f: SymFunc) -> SymFunc:
    """The Frobenius endomorphism f_k: substitute x_i -> x_i^k, i.e. multiply
    every part of every monomial key by k (m basis)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    fm = to_basis(f, "m")
    return SymFunc("m", {tuple(k * x for x in key): c for key, c in fm.terms.items()})


def verschiebung(k: int, f: SymFunc) -> SymFunc:
    """The Verschiebung endomorphism v_k: on h keys, divide every part by k
    when k divides all of them, otherwise the term dies (h basis)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    out: dict = {}
    for key, c in _terms_to_h(f.terms, f.basis).items():
        if all(x % k == 0 for x in key):
            nk = tuple(x // k for x in key)
            out[nk] = out.get(nk, 0) + c
    return SymFunc("h", out)


def u_map(k: int, f: SymFunc) -> SymFunc:
    """U_k = f_k . S . v_k (h basis)."""
    return to_basis(frobenius(k, antipode(verschiebung(k, f))), "h")


def convolve_with_identity(op: Callable[[SymFunc], SymFunc], f: SymFunc) -> SymFunc:
    """(id * op)(f): apply op to the right tensor legs of Delta(f) and
    multiply back, i.e. sum a . op(b) over Delta(f) = sum a (x) b."""
    out = SymFunc.zero("h")
    op_cache: dict[Partition, SymFunc] = {}
    for (left, right), c in coproduct(f).terms.items():
        if right not in op_cache:
            op_cache[right] = to_basis(op(SymFunc("h", {right: 1})), "h")
        term = multiply(SymFunc("h", {left: 1}), op_cache[right])
        out = add(out, scale(c, term))
    return out


def v_map(k: int, f: SymFunc) -> SymFunc:
    """V_k = id * U_k, the Hopf endomorphism with V_k(h_m) = G(k, m) (h basis)."""
    return convolve_with_identity(lambda g: u_map(k, g), f)


def bernstein(m: int, f: SymFunc) -> SymFunc:
    """The Bernstein creation operator B_m(f) = sum_i (-1)^i h_{m+i} e_i^perp f.

    The sum is finite since e_i^perp kills components of degree < i.  For a
    Schur function s_lam with m >= lam_1 this prepends a row of length m to
    lam (h basis).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = SymFunc.zero("h")
    for i in range(f.degree() + 1):
        skewed = skew_apply(gen("e", (i,) if i else ()), f)
        if skewed.is_zero():
            continue
        term = multiply(gen("h", (m + i,) if m + i else ()), skewed)
        out = add(out, scale((-1) ** i, term))
    return out


def apply_to_legs(
    t: TensorFunc,
    left_op: Callable[[SymFunc], SymFunc] | None = None,
    right_op: Callable[[SymFunc], SymFunc] | None = None,
) -> TensorFunc:
    """Apply linear maps to the tensor legs (used by the coassociativity and
    morphism checks in the test suite)."""
    out = TensorFunc.zero()
    for (left, right), c in t.terms.items():
        lf = SymFunc("h", {left: 1})
        rf = SymFunc("h", {right: 1})
        if left_op is not None:
            lf = to_basis(left_op(lf), "h")
        if right_op is not None:
            rf = to_basis(right_op(rf), "h")
        out = out + tensor(lf, rf) * c
    return out
