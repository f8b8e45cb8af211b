"""Bethe vectors and dual Bethe vectors inside a chain model.

Vectors are built by peeling one parameter off either the lowest or the
highest nonempty color and expanding over single-element splits of the
neighbouring colors.  Colors that are empty below (or above) the active block
are handled as bookkeeping: kernel gradings always use the absolute color
index of the ambient gl(m|n).
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import EmptyColorError
from .fock import (ChainModel, SparseCoState, SparseState, covacuum, monodromy_entry, split_model,
                   tensor_costates, tensor_states, vacuum, vacuum_data)
from .partitions import BetheFamily, bipartitions, single_split_indices
from .series import Laurent


class Route(Enum):
    LOW_COLOR = "low"
    HIGH_COLOR = "high"


class Side(Enum):
    KET = "ket"
    BRA = "bra"


def _without(seq, pos):
    return seq[:pos] + seq[pos + 1:]


class BetheBuilder:
    """Memoized constructions for one model.

    ``count_new_in_dual_sign`` selects how the sign of a dual recursion step is
    read: by default it counts the parameters of the peeled color other than
    the one removed.  The alternative exists only so tests can show it fails.
    """

    count_new_in_dual_sign = False

    def __init__(self, model: ChainModel):
        self.model = model
        self.sig = model.sig
        self.kn = model.kernels
        self._ket = {}
        self._bra = {}

    def lam(self, i, u):
        return vacuum_data(self.model, u).lam[i - 1]

    def alpha(self, k, u):
        return vacuum_data(self.model, u).alpha[k - 1]

    def T(self, i, j, u):
        return monodromy_entry(self.model, i, j, u)

    def _delta_m(self, k):
        return 1 if k == self.sig.m else 0

    def _dual_sign(self, k, rest):
        count = len(rest) + (1 if self.count_new_in_dual_sign else 0)
        return -1 if (self._delta_m(k) and count % 2) else 1

    # ------------------------------------------------------------ kets

    def ket(self, sets, route: Route) -> SparseState:
        key = (sets, route)
        if key not in self._ket:
            active = [k for k in range(1, self.sig.N + 1) if sets[k - 1]]
            if not active:
                out = vacuum(self.model)
            elif route is Route.LOW_COLOR:
                out = self._ket_low(sets, active[0])
            else:
                out = self._ket_high(sets, active[-1])
            self._ket[key] = out
        return self._ket[key]

    def _ket_low(self, sets, a):
        kn, N = self.kn, self.sig.N
        z, rest = sets[a - 1][0], sets[a - 1][1:]
        den = kn.h_set(rest, [z]) ** self._delta_m(a) * self.lam(a + 1, z)
        out = SparseState()
        for j in range(a + 1, N + 2):
            acc = SparseState()
            try:
                choices = list(single_split_indices(sets, a + 1, j - 1))
            except EmptyColorError:
                break
            for idx in choices:
                new = list(sets)
                new[a - 1] = rest
                prev_I = z
                w = 1 / kn.f_set(sets[a], [z], a + 1) if a < N else Fraction(1)
                for nu, pos in zip(range(a + 1, j), idx):
                    tI = sets[nu - 1][pos]
                    tII = _without(sets[nu - 1], pos)
                    new[nu - 1] = tII
                    w *= self.alpha(nu, tI) * kn.g(tI, prev_I, nu) * kn.gamma_set(nu, tII, [tI])
                    if nu < N:
                        w /= kn.f_set(sets[nu], [tI], nu + 1)
                    prev_I = tI
                acc.add_scaled(self.ket(tuple(new), Route.LOW_COLOR), w)
            if acc:
                out.add_scaled(self.T(a, j, z).apply(acc), 1 / den)
        return out

    def _ket_high(self, sets, b):
        kn = self.kn
        z, rest = sets[b - 1][0], sets[b - 1][1:]
        den = kn.h_set(rest, [z]) ** self._delta_m(b) * self.lam(b + 1, z)
        out = SparseState()
        for j in range(b, 0, -1):
            acc = SparseState()
            try:
                choices = list(single_split_indices(sets, j, b - 1))
            except EmptyColorError:
                break
            for idx in choices:
                new = list(sets)
                new[b - 1] = rest
                singles = {b: z}
                for nu, pos in zip(range(j, b), idx):
                    singles[nu] = sets[nu - 1][pos]
                    new[nu - 1] = _without(sets[nu - 1], pos)
                w = Fraction(1)
                for nu in range(j, b):
                    w *= kn.g(singles[nu + 1], singles[nu], nu + 1) * kn.gamma_hat_set(nu, [singles[nu]], new[nu - 1])
                for nu in range(j, b + 1):
                    if nu > 1:
                        w /= kn.f_set([singles[nu]], sets[nu - 2], nu)
                acc.add_scaled(self.ket(tuple(new), Route.HIGH_COLOR), w)
            if acc:
                out.add_scaled(self.T(j, b + 1, z).apply(acc), 1 / den)
        return out

    # ------------------------------------------------------------ bras

    def bra(self, sets, route: Route) -> SparseCoState:
        key = (sets, route)
        if key not in self._bra:
            active = [k for k in range(1, self.sig.N + 1) if sets[k - 1]]
            if not active:
                out = covacuum(self.model)
            elif route is Route.LOW_COLOR:
                out = self._bra_low(sets, active[0])
            else:
                out = self._bra_high(sets, active[-1])
            self._bra[key] = out
        return self._bra[key]

    def _bra_low(self, sets, a):
        kn, N = self.kn, self.sig.N
        z, rest = sets[a - 1][0], sets[a - 1][1:]
        den = kn.h_set(rest, [z]) ** self._delta_m(a) * self.lam(a + 1, z)
        sign = self._dual_sign(a, rest)
        out = SparseCoState()
        for j in range(a + 1, N + 2):
            acc = SparseCoState()
            try:
                choices = list(single_split_indices(sets, a + 1, j - 1))
            except EmptyColorError:
                break
            for idx in choices:
                new = list(sets)
                new[a - 1] = rest
                prev_I = z
                w = 1 / kn.f_set(sets[a], [z], a + 1) if a < N else Fraction(1)
                for nu, pos in zip(range(a + 1, j), idx):
                    sI = sets[nu - 1][pos]
                    sII = _without(sets[nu - 1], pos)
                    new[nu - 1] = sII
                    w *= self.alpha(nu, sI) * kn.g(sI, prev_I, nu) * kn.gamma_hat_set(nu, sII, [sI])
                    if nu < N:
                        w /= kn.f_set(sets[nu], [sI], nu + 1)
                    prev_I = sI
                acc.add_scaled(self.bra(tuple(new), Route.LOW_COLOR), w)
            if acc:
                out.add_scaled(self.T(j, a, z).rapply(acc), sign / den)
        return out

    def _bra_high(self, sets, b):
        kn = self.kn
        z, rest = sets[b - 1][0], sets[b - 1][1:]
        den = kn.h_set(rest, [z]) ** self._delta_m(b) * self.lam(b + 1, z)
        sign = self._dual_sign(b, rest)
        out = SparseCoState()
        for j in range(b, 0, -1):
            acc = SparseCoState()
            try:
                choices = list(single_split_indices(sets, j, b - 1))
            except EmptyColorError:
                break
            for idx in choices:
                new = list(sets)
                new[b - 1] = rest
                singles = {b: z}
                for nu, pos in zip(range(j, b), idx):
                    singles[nu] = sets[nu - 1][pos]
                    new[nu - 1] = _without(sets[nu - 1], pos)
                w = Fraction(1)
                for nu in range(j, b):
                    w *= kn.g(singles[nu + 1], singles[nu], nu + 1) \
                        * kn.gamma_set(nu, [singles[nu]], new[nu - 1])
                for nu in range(j, b + 1):
                    if nu > 1:
                        w /= kn.f_set([singles[nu]], sets[nu - 2], nu)
                acc.add_scaled(self.bra(tuple(new), Route.HIGH_COLOR), w)
            if acc:
                out.add_scaled(self.T(b + 1, j, z).rapply(acc), sign / den)
        return out



@lru_cache(maxsize=64)
def builder(model: ChainModel) -> BetheBuilder:
    return BetheBuilder(model)


def _route(route):
    return route if isinstance(route, Route) else Route(route)


def build_bethe_vector(model: ChainModel, family: BetheFamily, route=Route.LOW_COLOR) -> SparseState:
    _check_family(model, family)
    return builder(model).ket(family.sets, _route(route))


def build_dual_bethe_vector(model: ChainModel, family: BetheFamily, route=Route.LOW_COLOR) -> SparseCoState:
    _check_family(model, family)
    return builder(model).bra(family.sets, _route(route))


def _check_family(model, family):
    if family.sig != model.sig:
        raise ValueError(f"family is over gl({family.sig}), model over gl({model.sig})")


def main_term(model: ChainModel, family: BetheFamily, side=Side.KET):
    """Product of nearest-neighbour creation (or annihilation) operators on the vacuum,
    normalized so that it is the leading term of the Bethe vector."""
    _check_family(model, family)
    b = builder(model)
    kn, sig, N = b.kn, model.sig, model.sig.N
    sets = family.sets
    norm = Fraction(1)
    for i in range(1, N + 1):
        for t in sets[i - 1]:
            norm *= b.lam(i + 1, t)
        if i < N:
            norm *= kn.f_set(sets[i], sets[i - 1], i + 1)
    side = side if isinstance(side, Side) else Side(side)
    if side is Side.KET:
        state = vacuum(model)
        for i in range(N, 0, -1):
            ts = sets[i - 1]
            for t in reversed(ts):
                state = b.T(i, i + 1, t).apply(state)
            if i == sig.m:
                for x in range(len(ts)):
                    for y in range(x + 1, len(ts)):
                        norm *= kn.h(ts[y], ts[x])
        return state / norm
    state = covacuum(model)
    for i in range(N, 0, -1):
        ts = sets[i - 1]
        for t in ts:
            state = b.T(i + 1, i, t).rapply(state)
        if i == sig.m:
            for x in range(len(ts)):
                for y in range(x + 1, len(ts)):
                    norm *= kn.h(ts[x], ts[y])
    rm = len(sets[sig.m - 1]) if 1 <= sig.m <= N else 0
    if (rm * (rm - 1) // 2) % 2:
        norm = -norm
    return state / norm


@dataclass
class ActionExpansion:
    direct_state: SparseState
    formula_state: SparseState

    @property
    def residual(self):
        return self.direct_state - self.formula_state

    @property
    def ok(self):
        return not self.residual


def apply_t1j_action(model: ChainModel, j: int, z, family: BetheFamily, shifts=None) -> ActionExpansion:
    """``T_1j(z) B(t)`` computed directly and through the action formula.

    The formula involves vectors carrying ``z`` in several neighbouring colors.
    They are evaluated as the limit where the copy in color ``k`` is
    ``z + shifts[k-1] * eps`` and ``eps -> 0`` (default shifts ``0, 1, 2, ...``).
    """
    _check_family(model, family)
    sig, N = model.sig, model.sig.N
    if not 2 <= j <= N + 1:
        raise ValueError(f"j must lie in 2..{N + 1}")
    z = Fraction(z)
    b = builder(model)
    kn = b.kn
    sets = family.sets
    color = lambda k: sets[k - 1] if 1 <= k <= N else ()
    direct = b.T(1, j, z).apply(b.ket(sets, Route.LOW_COLOR))

    shifts = tuple(shifts) if shifts is not None else tuple(range(N))
    eps = Laurent.eps()
    zc = [z + d * eps if d else z for d in shifts]

    pj = sig.parity(j)
    tm = color(sig.m)
    base = tuple((zc[k - 1],) + s if k < j else s for k, s in enumerate(sets, 1))
    eta = b.lam(j, z) * kn.f_set(color(j), [z], j) * kn.h_set(tm, [z]) ** pj
    formula = b.ket(base, Route.LOW_COLOR) * eta
    for q in range(j + 1, N + 2):
        try:
            choices = list(single_split_indices(sets, j, q - 1))
        except EmptyColorError:
            break
        pq = sig.parity(q)
        for idx in choices:
            new = list(base)
            single, rest = {}, {}
            for nu, pos in zip(range(j, q), idx):
                single[nu] = sets[nu - 1][pos]
                rest[nu] = _without(sets[nu - 1], pos)
                new[nu - 1] = (zc[nu - 1],) + rest[nu]
            H = kn.f_set(color(q), [z], q) * kn.h_set(tm, [z]) ** pj * b.lam(q, z)
            if pq != pj:
                H *= kn.h_set(rest[sig.m], [z]) ** (pq - pj)
            H *= kn.g(z, single[q - 1], j)
            for nu in range(j + 1, q):
                H *= kn.g(single[nu], single[nu - 1], nu)
            for nu in range(j, q):
                H *= b.alpha(nu, single[nu]) * kn.gamma_set(nu, rest[nu], [single[nu]])
                H /= kn.f_set(color(nu + 1), [single[nu]], nu + 1)
            formula.add_scaled(b.ket(tuple(new), Route.LOW_COLOR), H)
    limit = {x: (v.constant_term() if isinstance(v, Laurent) else v) for x, v in formula.items()}
    return ActionExpansion(direct, SparseState(limit))


def scalar_product_oracle(model: ChainModel, s_family: BetheFamily, t_family: BetheFamily,
                          route=Route.LOW_COLOR) -> Fraction:
    """Pairing of the dual Bethe vector with the Bethe vector, computed in the chain."""
    bra = build_dual_bethe_vector(model, s_family, route)
    ket = build_bethe_vector(model, t_family, route)
    return bra.pair(ket)


@dataclass
class CoproductReport:
    residual: SparseState
    partitions: int

    @property
    def ok(self):
        return not self.residual


def verify_coproduct(model: ChainModel, cut: int, family: BetheFamily, side=Side.KET) -> CoproductReport:
    """Compare the Bethe vector with its expansion over the two halves of a cut chain."""
    _check_family(model, family)
    side = side if isinstance(side, Side) else Side(side)
    m1, m2 = split_model(model, cut)
    b1, b2 = builder(m1), builder(m2)
    kn, N = builder(model).kn, model.sig.N
    count = 0
    if side is Side.KET:
        total = SparseState()
        for ti, tii in bipartitions(family.sets):
            w = Fraction(1)
            for nu in range(1, N + 1):
                for t in ti[nu - 1]:
                    w *= b2.alpha(nu, t)
                w *= kn.gamma_set(nu, tii[nu - 1], ti[nu - 1])
                if nu < N:
                    w /= kn.f_set(tii[nu], ti[nu - 1], nu + 1)
            total.add_scaled(tensor_states(b1.ket(ti, Route.LOW_COLOR), b2.ket(tii, Route.LOW_COLOR)), w)
            count += 1
        return CoproductReport(builder(model).ket(family.sets, Route.LOW_COLOR) - total, count)
    total = SparseCoState()
    for si, sii in bipartitions(family.sets):
        w = Fraction(1)
        for nu in range(1, N + 1):
            for s in sii[nu - 1]:
                w *= b1.alpha(nu, s)
            w *= kn.gamma_set(nu, si[nu - 1], sii[nu - 1])
            if nu < N:
                w /= kn.f_set(si[nu], sii[nu - 1], nu + 1)
        total.add_scaled(tensor_costates(b1.bra(si, Route.LOW_COLOR), b2.bra(sii, Route.LOW_COLOR)), w)
        count += 1
    return CoproductReport(builder(model).bra(family.sets, Route.LOW_COLOR) - total, count)
