"""Scalar products of Bethe vectors through the sum formula, and W extraction.

The sum formula expands the scalar product over balanced splits of both
families; each term is a product of two highest coefficients, gamma factors,
f denominators and the vacuum ratios ``alpha_k``.  ``extract_w`` recovers the
split weights from chain-model scalar products alone, by solving a linear
system over several models.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bethe import scalar_product_oracle
from .errors import IdentifiabilityError
from .fock import ChainModel, vacuum_data
from .hc import HcRoute, hc
from .kernels import Kernels
from .linsolve import solve_exact
from .partitions import BetheFamily, balanced_split_indices, split_sets

AlphaEvaluator = Callable[[int, Fraction], Fraction]


def model_alpha(model: ChainModel) -> AlphaEvaluator:
    return lambda k, u: vacuum_data(model, u).alpha[k - 1]


def w_coefficient(sig, c, s_split, t_split, route=HcRoute.REC_S1) -> Fraction:
    """Weight of one balanced split; ``s_split = (s_I, s_II)`` and ``t_split = (t_I, t_II)``."""
    (sI, sII), (tI, tII) = s_split, t_split
    kn = Kernels(sig, c)
    N = sig.N
    w = hc(sig, c, sI, tI, route) * hc(sig, c, tII, sII, route)
    if not w:
        return w
    for k in range(1, N + 1):
        w *= kn.gamma_set(k, sII[k - 1], sI[k - 1]) * kn.gamma_set(k, tI[k - 1], tII[k - 1])
    for j in range(1, N):
        w /= kn.f_set(sII[j], sI[j - 1], j + 1) * kn.f_set(tI[j], tII[j - 1], j + 1)
    return w


def _alpha_monomial(alpha, sI, tII):
    out = Fraction(1)
    for k, (a, b) in enumerate(zip(sI, tII), 1):
        for u in a + b:
            out *= alpha(k, u)
    return out


def sum_formula(sig, c, s_family: BetheFamily, t_family: BetheFamily, alpha: AlphaEvaluator,
                route=HcRoute.REC_S1) -> Fraction:
    s, t = s_family.sets, t_family.sets
    if s_family.r != t_family.r:
        return Fraction(0)
    total = Fraction(0)
    for s_idx, t_idx in balanced_split_indices(s, t):
        s_parts, t_parts = split_sets(s, s_idx), split_sets(t, t_idx)
        w = w_coefficient(sig, c, s_parts, t_parts, route)
        if w:
            total += w * _alpha_monomial(alpha, s_parts[0], t_parts[1])
    return total


@dataclass
class Extraction:
    splits: list       # (s_I index tuple per color, t_I index tuple per color)
    values: list       # extracted W, aligned with ``splits``
    equations: int

    def as_dict(self):
        return dict(zip(self.splits, self.values))


def extract_w(models, s_family: BetheFamily, t_family: BetheFamily) -> Extraction:
    """Solve ``sum_split W * alpha-monomial = S_model`` over all supplied models.

    Splits whose monomials agree on every model cannot be told apart; they are
    merged into classes, and an IdentifiabilityError reports the classes along
    with the solved class sums when that reduced system is regular.
    """
    s, t = s_family.sets, t_family.sets
    splits = list(balanced_split_indices(s, t))
    rhs = [scalar_product_oracle(model, s_family, t_family) for model in models]
    columns = []
    for s_idx, t_idx in splits:
        sI, _ = split_sets(s, s_idx)
        _, tII = split_sets(t, t_idx)
        columns.append(tuple(_alpha_monomial(model_alpha(mo), sI, tII) for mo in models))
    classes = {}
    for pos, col in enumerate(columns):
        classes.setdefault(col, []).append(pos)
    if len(classes) < len(splits):
        keys = list(classes)
        rows = [[col[r] for col in keys] for r in range(len(models))]
        sol, _, _ = solve_exact(rows, rhs)
        groups = [[splits[p] for p in classes[k]] for k in keys]
        raise IdentifiabilityError(groups, sol)
    rows = [[col[r] for col in columns] for r in range(len(models))]
    sol, rank, consistent = solve_exact(rows, rhs)
    if sol is None:
        if not consistent:
            raise ArithmeticError("inconsistent system: the data admit no split weights")
        raise IdentifiabilityError([[sp] for sp in splits], None)
    return Extraction(splits, sol, len(models))
