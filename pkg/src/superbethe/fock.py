"""Brute-force realization of the monodromy matrix on a graded spin chain.

The chain has ``L`` sites carrying the vector representation of gl(m|n), an
inhomogeneity per site and a diagonal twist.  The monodromy matrix is

    T(u) = D R_{0L}(u, xi_L) ... R_{01}(u, xi_1),   R = 1 + g(u,v) P,

and its entries act on sparse states (kets) from the left and on sparse
co-states (bras) from the right.  Basis vectors are tuples of 1-based site
labels; the vacuum has every site in state 1.

Sign conventions.  An operator ``E_ab`` sitting on site ``s`` picks up the
Koszul sign of moving past the sites in front of it.  Products of monodromy
factors follow the graded rule

    (A B)_{ik} = sum_j (-1)^{([i]+[j])([j]+[k])} A_{ij} B_{jk}.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
import random

from .errors import DegenerateModelError, NotEigenvectorError
from .kernels import Kernels
from .rational import format_rational, generic_points, parse_rational, random_rational
from .series import as_number
from .signature import AlgebraSignature


# ---------------------------------------------------------------- states

class SparseState:
    """Ket: a map from basis tuples to nonzero rational amplitudes."""

    __slots__ = ("amps",)

    def __init__(self, amps=None):
        self.amps = {k: Fraction(v) for k, v in (amps or {}).items() if v}

    @classmethod
    def _raw(cls, amps):
        out = cls.__new__(cls)
        out.amps = {k: v for k, v in amps.items() if v}
        return out

    def copy(self):
        return self._raw(self.amps)

    def __bool__(self):
        return bool(self.amps)

    def __len__(self):
        return len(self.amps)

    def items(self):
        return self.amps.items()

    def __eq__(self, other):
        return type(self) is type(other) and self.amps == other.amps

    def __hash__(self):
        return hash(frozenset(self.amps.items()))

    def add_scaled(self, other, coeff=1):
        """In-place ``self += coeff * other``."""
        if type(other) is not type(self):
            raise TypeError("cannot mix kets and bras")
        a = self.amps
        for k, v in other.amps.items():
            w = a.get(k, 0) + coeff * v
            if w:
                a[k] = w
            else:
                a.pop(k, None)
        return self

    def __add__(self, other):
        return self.copy().add_scaled(other, 1)

    def __sub__(self, other):
        return self.copy().add_scaled(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, coeff):
        return self._raw({k: v * coeff for k, v in self.amps.items()})

    __rmul__ = __mul__

    def __truediv__(self, coeff):
        return self * (1 / Fraction(coeff))

    def __repr__(self):
        body = ", ".join(f"{k}: {format_rational(v)}" for k, v in sorted(self.amps.items()))
        return f"{type(self).__name__}({{{body}}})"


class SparseCoState(SparseState):
    """Bra; pairs with a ket by plain contraction of amplitudes."""

    __slots__ = ()

    def pair(self, ket: SparseState) -> Fraction:
        small, big = (self.amps, ket.amps) if len(self.amps) < len(ket.amps) else (ket.amps, self.amps)
        return sum((v * big[k] for k, v in small.items() if k in big), Fraction(0))

    __matmul__ = pair


def pairing(bra: SparseCoState, ket: SparseState) -> Fraction:
    return bra.pair(ket)


def tensor_states(first: SparseState, second: SparseState) -> SparseState:
    """``first (x) second`` on the concatenated chain; kets carry no extra sign."""
    return SparseState._raw({a + b: x * y for a, x in first.amps.items() for b, y in second.amps.items()})


def state_parity(sig, basis) -> int:
    return sum(sig.parity(a) for a in basis) & 1


def tensor_costates(first: SparseCoState, second: SparseCoState) -> SparseCoState:
    """Bra on the concatenated chain with amplitudes ``<first|x1> <second|x2>``.

    Bras are row vectors in the site basis, so no Koszul sign enters here; the
    grading is carried entirely by the operators.
    """
    return SparseCoState._raw({a + b: x * y for a, x in first.amps.items() for b, y in second.amps.items()})


# ---------------------------------------------------------------- models

@dataclass(frozen=True)
class ChainModel:
    sig: AlgebraSignature
    c: Fraction
    xi: tuple
    twist: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "xi", tuple(Fraction(x) for x in self.xi))
        tw = self.twist if self.twist is not None else (1,) * self.sig.size
        object.__setattr__(self, "twist", tuple(Fraction(d) for d in tw))
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if len(set(self.xi)) != len(self.xi):
            raise ValueError("inhomogeneities must be pairwise distinct")
        if len(self.twist) != self.sig.size or any(d == 0 for d in self.twist):
            raise ValueError(f"twist needs {self.sig.size} nonzero entries")

    @property
    def L(self) -> int:
        return len(self.xi)

    @cached_property
    def kernels(self) -> Kernels:
        return Kernels(self.sig, self.c)

    @cached_property
    def _par(self):
        return (0,) + tuple(self.sig.parity(i) for i in range(1, self.sig.size + 1))

    def basis(self):
        return product(range(1, self.sig.size + 1), repeat=self.L)

    def to_json(self):
        return {"algebra": str(self.sig), "c": format_rational(self.c),
                "xi": [format_rational(x) for x in self.xi],
                "twist": [format_rational(d) for d in self.twist]}

    @classmethod
    def from_json(cls, data):
        return cls(AlgebraSignature.parse(data["algebra"]), parse_rational(data["c"]),
                   tuple(parse_rational(x) for x in data["xi"]),
                   tuple(parse_rational(d) for d in data.get("twist") or ["1"] * (
                       AlgebraSignature.parse(data["algebra"]).size)))

    @classmethod
    def random(cls, sig, c, L, rng: random.Random, avoid=()):
        """Inhomogeneities generic with respect to ``avoid`` and each other; random nonzero twist."""
        xi = generic_points(rng, L, c, avoid)
        twist = []
        while len(twist) < sig.size:
            d = random_rational(rng, 5, 5)
            if d:
                twist.append(d)
        return cls(sig, Fraction(c), tuple(xi), tuple(twist))


def vacuum(model: ChainModel) -> SparseState:
    return SparseState._raw({(1,) * model.L: Fraction(1)})


def covacuum(model: ChainModel) -> SparseCoState:
    return SparseCoState._raw({(1,) * model.L: Fraction(1)})


def split_model(model: ChainModel, cut: int):
    """Sites ``1..cut`` with trivial twist, and the remaining sites with the full twist."""
    if not 0 <= cut <= model.L:
        raise ValueError(f"cut {cut} outside 0..{model.L}")
    first = ChainModel(model.sig, model.c, model.xi[:cut], (1,) * model.sig.size)
    second = ChainModel(model.sig, model.c, model.xi[cut:], model.twist)
    return first, second


# ---------------------------------------------------------------- monodromy

def _add(d, k, v):
    w = d.get(k, 0) + v
    if w:
        d[k] = w
    else:
        d.pop(k, None)


def _column(model: ChainModel, j: int, u, amps) -> dict:
    """``{i: T_ij(u) |amps>}`` for every row i, as raw amplitude maps."""
    par, kn = model._par, model.kernels
    cols = {j: dict(amps)}
    pj = par[j]
    for s, x_s in enumerate(model.xi):
        gs = kn.g(u, x_s)
        new = defaultdict(dict)
        for k, vec in cols.items():
            pk = par[k]
            tgt_k = new[k]
            for x, coef in vec.items():
                _add(tgt_k, x, coef)
                i = x[s]
                pi = par[i]
                e = (pi + pk) * (pk + pj) + pk
                if pi != pk:
                    e += sum(par[a] for a in x[:s])
                val = gs * coef
                _add(new[i], x[:s] + (k,) + x[s + 1:], -val if e & 1 else val)
        cols = new
    return {i: {x: model.twist[i - 1] * v for x, v in vec.items()} for i, vec in cols.items() if vec}


def _row(model: ChainModel, i: int, u, amps) -> dict:
    """``{j: <amps| T_ij(u)}`` for every column j."""
    par, kn = model._par, model.kernels
    d = model.twist[i - 1]
    rows = {i: {y: d * v for y, v in amps.items()}}
    pi = par[i]
    for s in range(model.L - 1, -1, -1):
        gs = kn.g(u, model.xi[s])
        new = defaultdict(dict)
        for k, vec in rows.items():
            pk = par[k]
            tgt_k = new[k]
            for y, coef in vec.items():
                _add(tgt_k, y, coef)
                q = y[s]
                pq = par[q]
                e = (pi + pk) * (pk + pq) + pq
                if pq != pk:
                    e += sum(par[a] for a in y[:s])
                val = gs * coef
                _add(new[q], y[:s] + (k,) + y[s + 1:], -val if e & 1 else val)
        rows = new
    return {j: vec for j, vec in rows.items() if vec}


@dataclass(frozen=True)
class MonodromyEntryOp:
    """Handle for ``T_ij(u)`` of a given model."""

    model: ChainModel
    i: int
    j: int
    u: Fraction

    @property
    def parity(self) -> int:
        return (self.model.sig.parity(self.i) + self.model.sig.parity(self.j)) & 1

    def __call__(self, state: SparseState) -> SparseState:
        return self.apply(state)

    def apply(self, state: SparseState) -> SparseState:
        if isinstance(state, SparseCoState):
            raise TypeError("use rapply for bras")
        return SparseState._raw(_column(self.model, self.j, self.u, state.amps).get(self.i, {}))

    def rapply(self, costate: SparseCoState) -> SparseCoState:
        if not isinstance(costate, SparseCoState):
            raise TypeError("rapply acts on bras")
        return SparseCoState._raw(_row(self.model, self.i, self.u, costate.amps).get(self.j, {}))


def monodromy_entry(model: ChainModel, i: int, j: int, u) -> MonodromyEntryOp:
    M = model.sig.size
    if not (1 <= i <= M and 1 <= j <= M):
        raise ValueError(f"entry ({i},{j}) outside 1..{M}")
    u = as_number(u)
    for x in model.xi:
        model.kernels.g(u, x)  # raises on u = xi
    return MonodromyEntryOp(model, i, j, u)


# ---------------------------------------------------------------- vacuum

@dataclass(frozen=True)
class VacuumData:
    lam: tuple
    alpha: tuple


@lru_cache(maxsize=None)
def vacuum_data(model: ChainModel, u) -> VacuumData:
    """Eigenvalues of the diagonal entries on the vacuum, read off from the operator action."""
    u = as_number(u)
    vac = vacuum(model)
    key = (1,) * model.L
    lam = []
    for i in range(1, model.sig.size + 1):
        out = monodromy_entry(model, i, i, u).apply(vac)
        val = out.amps.get(key, Fraction(0))
        if out != vac * val:
            raise DegenerateModelError(f"vacuum is not an eigenvector of T_{i}{i}({u})")
        lam.append(val)
    alpha = []
    for k in range(1, model.sig.size):
        if lam[k] == 0:
            raise DegenerateModelError(f"lambda_{k + 1}({u}) vanishes")
        alpha.append(lam[k - 1] / lam[k])
    return VacuumData(tuple(lam), tuple(alpha))


def lam(model, i, u):
    return vacuum_data(model, as_number(u)).lam[i - 1]


def alpha(model, k, u):
    return vacuum_data(model, as_number(u)).alpha[k - 1]


# ---------------------------------------------------------------- charges

def charges_of(sig, basis) -> tuple:
    """Number of sites with label at most j, for j = 1..N."""
    return tuple(sum(1 for a in basis if a <= j) for j in range(1, sig.size))


def color_charge(sig: AlgebraSignature, state: SparseState) -> list:
    """Common eigenvalues of the color charges ``h_1..h_N`` on ``state``."""
    if not state:
        raise ValueError("zero state has no charge")
    it = iter(state.amps)
    first = next(it)
    ref = charges_of(sig, first)
    for b in it:
        ch = charges_of(sig, b)
        if ch != ref:
            raise NotEigenvectorError((first, ref), (b, ch))
    return list(ref)


def check_charge_commutator(model: ChainModel, z) -> list:
    """Check ``[h_j, T_kl(z)] = eps_j(k,l) T_kl(z)`` on every basis vector; returns violations."""
    sig = model.sig
    bad = []
    for x in model.basis():
        hx = charges_of(sig, x)
        for l in range(1, sig.size + 1):
            cols = _column(model, l, Fraction(z), {x: Fraction(1)})
            for k, vec in cols.items():
                for j in range(1, sig.size):
                    eps = -1 if k <= j < l else (1 if l <= j < k else 0)
                    for y in vec:
                        if charges_of(sig, y)[j - 1] - hx[j - 1] != eps:
                            bad.append((x, k, l, j, y))
    return bad


# ---------------------------------------------------------------- dense checks

class Operator:
    """Finite matrix stored column-wise: ``cols[x] = {y: <y|A|x>}``."""

    __slots__ = ("cols",)

    def __init__(self, cols):
        self.cols = {x: {y: v for y, v in col.items() if v} for x, col in cols.items()}

    @classmethod
    def identity(cls, basis, scale=1):
        return cls({x: {x: Fraction(scale)} for x in basis})

    @classmethod
    def zero(cls):
        return cls({})

    def __matmul__(self, other):
        out = {}
        for x, col in other.cols.items():
            acc = {}
            for y, v in col.items():
                for w, a in self.cols.get(y, {}).items():
                    _add(acc, w, a * v)
            out[x] = acc
        return Operator(out)

    def __add__(self, other):
        out = {x: dict(col) for x, col in self.cols.items()}
        for x, col in other.cols.items():
            tgt = out.setdefault(x, {})
            for y, v in col.items():
                _add(tgt, y, v)
        return Operator(out)

    def __mul__(self, s):
        return Operator({x: {y: v * s for y, v in col.items()} for x, col in self.cols.items()})

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + other * -1

    def max_abs(self):
        return max((abs(v) for col in self.cols.values() for v in col.values()), default=Fraction(0))


def entry_matrix(model: ChainModel, i: int, j: int, u) -> Operator:
    u = Fraction(u)
    return Operator({x: _column(model, j, u, {x: Fraction(1)}).get(i, {}) for x in model.basis()})


def monodromy_matrices(model: ChainModel, u) -> dict:
    u = Fraction(u)
    out = {(i, j): {} for i in range(1, model.sig.size + 1) for j in range(1, model.sig.size + 1)}
    for x in model.basis():
        for j in range(1, model.sig.size + 1):
            for i, vec in _column(model, j, u, {x: Fraction(1)}).items():
                out[(i, j)][x] = vec
    return {k: Operator(v) for k, v in out.items()}


def build_r_matrix(sig: AlgebraSignature, c, u, v) -> dict:
    """Matrix of ``1 + g(u,v) P`` on ``C^{m|n} (x) C^{m|n}``: ``{(row, col): entry}``.

    Rows and columns are pairs of labels.  ``E_ij (x) E_ji`` acts on ``e_x (x) e_y``
    with the Koszul sign of ``E_ji`` passing ``e_x``.
    """
    g = Kernels(sig, c).g(Fraction(u), Fraction(v))
    M = sig.size
    p = sig.parity
    out = {}
    for x in range(1, M + 1):
        for y in range(1, M + 1):
            out[((x, y), (x, y))] = out.get(((x, y), (x, y)), 0) + 1
            # only E_{y x} (x) E_{x y} survives on e_x (x) e_y
            sgn = (-1) ** (p(x) + ((p(y) + p(x)) * p(x)))
            key = ((y, x), (x, y))
            out[key] = out.get(key, 0) + sgn * g
    return {k: Fraction(v) for k, v in out.items() if v}


@dataclass
class RttReport:
    max_violation: Fraction
    entry: tuple | None
    components: int

    @property
    def ok(self):
        return self.max_violation == 0


def _triple_mul(A, B, par):
    """Product in End(V) (x) End(V) (x) End(H); components keyed by (i,j,k,l)."""
    by_left = defaultdict(list)
    for (i2, j2, k2, l2), Y in B.items():
        by_left[(i2, k2)].append((j2, l2, Y, par[i2] + par[j2], par[k2] + par[l2]))
    out = {}
    for (i, j, k, l), X in A.items():
        px = par[i] + par[j] + par[k] + par[l]
        pkl = par[k] + par[l]
        for j2, l2, Y, pa, pb in by_left.get((j, l), ()):
            e = px * (pa + pb) + pkl * pa
            term = X @ Y
            if e & 1:
                term = term * -1
            key = (i, j2, k, l2)
            out[key] = out[key] + term if key in out else term
    return out


def check_rtt(model: ChainModel, u, v) -> RttReport:
    u, v = Fraction(u), Fraction(v)
    M = model.sig.size
    par = model._par
    g = model.kernels.g(u, v)
    basis = list(model.basis())
    Tu, Tv = monodromy_matrices(model, u), monodromy_matrices(model, v)
    one = Operator.identity(basis)
    R = {}
    for i in range(1, M + 1):
        for k in range(1, M + 1):
            R[(i, i, k, k)] = one
    for a in range(1, M + 1):
        for b in range(1, M + 1):
            term = Operator.identity(basis, g * (-1) ** par[b])
            key = (a, b, b, a)
            R[key] = R[key] + term if key in R else term
    T1 = {(i, j, k, k): Tu[(i, j)] for i in range(1, M + 1) for j in range(1, M + 1) for k in range(1, M + 1)}
    T2 = {(i, i, k, l): Tv[(k, l)] for i in range(1, M + 1) for k in range(1, M + 1) for l in range(1, M + 1)}
    lhs = _triple_mul(_triple_mul(R, T1, par), T2, par)
    rhs = _triple_mul(_triple_mul(T2, T1, par), R, par)
    worst, where = Fraction(0), None
    for key in set(lhs) | set(rhs):
        diff = lhs.get(key, Operator.zero()) - rhs.get(key, Operator.zero())
        m = diff.max_abs()
        if m > worst:
            worst, where = m, key
    return RttReport(worst, where, len(set(lhs) | set(rhs)))


def check_commutation_relations(model: ChainModel, u, v) -> list:
    """Both forms of the entrywise graded commutator; returns failing (line, i, j, k, l)."""
    u, v = Fraction(u), Fraction(v)
    M = model.sig.size
    p = model._par
    g = model.kernels.g(u, v)
    Tu, Tv = monodromy_matrices(model, u), monodromy_matrices(model, v)
    bad = []
    rng = range(1, M + 1)
    for i, j, k, l in product(rng, rng, rng, rng):
        A, B = Tu[(i, j)], Tv[(k, l)]
        lhs = A @ B - (B @ A) * (-1) ** ((p[i] + p[j]) * (p[k] + p[l]))
        line1 = (Tv[(k, j)] @ Tu[(i, l)] - Tu[(k, j)] @ Tv[(i, l)]) * (g * (-1) ** (p[i] * (p[k] + p[l]) + p[k] * p[l]))
        line2 = (Tu[(i, l)] @ Tv[(k, j)] - Tv[(i, l)] @ Tu[(k, j)]) * (g * (-1) ** (p[l] * (p[i] + p[j]) + p[i] * p[j]))
        if (lhs - line1).max_abs():
            bad.append((1, i, j, k, l))
        if (lhs - line2).max_abs():
            bad.append((2, i, j, k, l))
    return bad


def transfer_apply(model: ChainModel, u, state: SparseState) -> SparseState:
    """Supertrace ``sum_j (-1)^[j] T_jj(u)`` applied to a ket."""
    out = SparseState()
    for j in range(1, model.sig.size + 1):
        out.add_scaled(monodromy_entry(model, j, j, u).apply(state), (-1) ** model.sig.parity(j))
    return out


def transfer_commutator(model: ChainModel, u, v, state: SparseState) -> SparseState:
    a = transfer_apply(model, u, transfer_apply(model, v, state))
    b = transfer_apply(model, v, transfer_apply(model, u, state))
    return a - b


def check_split(model: ChainModel, cut: int, u) -> list:
    """Compare ``T_ij`` with the graded product ``T^(2) T^(1)`` on every basis vector."""
    u = Fraction(u)
    m1, m2 = split_model(model, cut)
    par = model._par
    M = model.sig.size
    bad = []
    for x in model.basis():
        x1, x2 = x[:cut], x[cut:]
        for j in range(1, M + 1):
            direct = _column(model, j, u, {x: Fraction(1)})
            first = _column(m1, j, u, {x1: Fraction(1)})
            composed = defaultdict(dict)
            for k, vec1 in first.items():
                for y1, a in vec1.items():
                    py1 = sum(par[t] for t in y1)
                    second = _column(m2, k, u, {x2: Fraction(1)})
                    for i, vec2 in second.items():
                        e = (par[i] + par[k]) * (par[k] + par[j]) + (par[i] + par[k]) * py1
                        for y2, b in vec2.items():
                            _add(composed[i], y1 + y2, -a * b if e & 1 else a * b)
            for i in range(1, M + 1):
                if direct.get(i, {}) != {y: w for y, w in composed.get(i, {}).items() if w}:
                    bad.append((x, i, j))
    return bad
