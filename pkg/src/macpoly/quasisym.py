"""Quasisymmetric values G, the quasisymmetry checker, their Schur-like
specializations, and an independent tableau oracle for cross-validation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .polyring import MPoly, QtRational
from .nonsymmetric import EResult, f_poly
from .shapes import ShapeError


def _strong_composition(gamma: Sequence[int]) -> tuple[int, ...]:
    gamma = tuple(gamma)
    if not all(p > 0 for p in gamma):
        raise ShapeError(f"{gamma} must have positive parts only")
    return gamma


def compositions_with_support(gamma: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Weak compositions of length n whose positive parts read gamma in order."""
    gamma = _strong_composition(gamma)
    if len(gamma) > n:
        raise ValueError(f"{gamma} is longer than n={n}")
    out = []
    for support in combinations(range(n), len(gamma)):
        alpha = [0] * n
        for pos, part in zip(support, gamma):
            alpha[pos] = part
        out.append(tuple(alpha))
    return out


def g_poly(gamma: Sequence[int], n: int) -> EResult:
    """Sum of f_poly over every placement of gamma's parts among n slots."""
    total = EResult(n)
    for alpha in compositions_with_support(gamma, n):
        total = total + f_poly(alpha)
    return total


@dataclass
class QSymDecomposition:
    """Outcome of the quasisymmetry check with the monomial-basis breakdown."""

    is_quasisymmetric: bool
    monomial_coeffs: dict[tuple[int, ...], object]
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None


def _coefficient_table(p: Union[MPoly, EResult]):
    if isinstance(p, EResult):
        return dict(p.coeffs), QtRational.zero(), p.n
    return p.qt_coefficients(), MPoly.zero(0), p.n


def qsym_decompose(p: Union[MPoly, EResult], n: int | None = None) -> QSymDecomposition:
    """Check invariance of coefficients along increasing variable supports.

    A value is quasisymmetric when, for every strong composition gamma, the
    coefficient of x_{i_1}^{g_1}..x_{i_k}^{g_k} is the same for every strictly
    increasing choice of indices.  When it is, the common coefficients per
    gamma reassemble the input from monomial quasisymmetric sums.
    """
    table, zero, ambient = _coefficient_table(p)
    if n is None:
        n = ambient
    by_gamma: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
    for exps, coeff in table.items():
        gamma = tuple(e for e in exps if e)
        support = tuple(i for i, e in enumerate(exps) if e)
        by_gamma.setdefault(gamma, {})[support] = coeff

    coeffs: dict[tuple[int, ...], object] = {}
    for gamma, supports in sorted(by_gamma.items()):
        if not gamma:
            coeffs[gamma] = supports.get((), zero)
            continue
        reference = None
        ref_support = None
        for support in combinations(range(n), len(gamma)):
            value = supports.get(support, zero)
            if reference is None:
                reference, ref_support = value, support
            elif value != reference:
                def embed(sup):
                    exps = [0] * n
                    for pos, part in zip(sup, gamma):
                        exps[pos] = part
                    return tuple(exps)

                return QSymDecomposition(False, {}, (embed(ref_support), embed(support)))
        coeffs[gamma] = reference
    return QSymDecomposition(True, coeffs)


def schur_ssyt(lam: Sequence[int], n: int) -> MPoly:
    """Classical tableau generating function: rows weakly increase, columns
    strictly increase, entries in 1..n.  Used purely as an external oracle."""
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p <= 0 for p in lam):
        raise ShapeError(f"{lam} is not a partition with positive parts")
    total = MPoly.zero(n)
    if not lam:
        return MPoly.one(n)
    rows = [[0] * width for width in lam]

    def fill(r: int, c: int) -> None:
        nonlocal total
        if r == len(lam):
            exps = [0] * n
            for row in rows:
                for v in row:
                    exps[v - 1] += 1
            total = total + MPoly.monomial(n, x=tuple(exps))
            return
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            fill(nr, nc)
        rows[r][c] = 0

    fill(0, 0)
    return total


def qs_schur(gamma: Sequence[int], n: int) -> MPoly:
    """The q = t = 0 specialization of :func:`g_poly`."""
    return g_poly(gamma, n).specialize(q=0, t=0)


def rearrangement_classes(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct orderings of the parts of lam (strong compositions)."""
    from itertools import permutations

    return sorted(set(permutations(tuple(lam))))


def t_atom_check(alpha: Sequence[int]) -> bool:
    """Two checkable consequences of the q = 0 atom specialization: the
    coefficients land in Z[t], and the full sorting class of alpha recovers
    the tableau oracle at t = 0."""
    alpha = tuple(alpha)
    n = len(alpha)
    fq0 = f_poly(alpha).specialize_q_zero()
    if any(value.den for value in fq0.coeffs.values()):
        return False
    lam = tuple(sorted((a for a in alpha if a > 0), reverse=True))
    if not lam:
        return all(not any(exps) for exps in fq0.coeffs)
    from .integral import compositions_rearranging

    total = MPoly.zero(n)
    for beta in compositions_rearranging(lam, n):
        total = total + f_poly(beta).specialize(q=0, t=0)
    return total == schur_ssyt(lam, n)
