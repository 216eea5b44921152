"""Phase-space layer: Poisson brackets, second-order integrals of
motion, functional independence, the structural tensor of abundant
systems, and the quartic contraction formula its Haantjes torsion
satisfies.

Phase functions live on T*R^n with position variables x1..xn (Laurent
allowed) and momentum variables p1..pn.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from . import linalg
from .symalg import Poly, VarId
from .tensor import TensorField, TensorError, partial_derivative
from .killing import KillingFamily, PotentialSpec, family_operator
from .haantjes import OperatorField, conservation_check, haantjes


class MechanicsError(Exception):
    pass


class NotCompatible(MechanicsError):
    """The Killing tensor fails the compatibility condition d(K*dV)=0."""


class NonUniqueSolution(MechanicsError):
    """Structural-tensor system singular at the chosen point."""


class Inconsistent(MechanicsError):
    """No structural tensor reproduces the family's derivatives here."""


class DegenerateK(MechanicsError):
    """det(K) vanishes identically."""


def _x(i: int) -> VarId:
    return VarId("x", i)


def _p(i: int) -> VarId:
    return VarId("p", i)


@dataclass
class PhaseFunction:
    """Function on T*R^n: polynomial in momenta, Laurent in positions."""

    dimension: int
    poly: Poly

    def __post_init__(self):
        for m in self.poly.terms:
            for v, e in m.exps:
                if v.ns == "p" and e < 0:
                    raise MechanicsError("negative momentum exponents are not allowed")

    def __add__(self, other):
        return PhaseFunction(self.dimension, self.poly + _poly_of(other))

    def __sub__(self, other):
        return PhaseFunction(self.dimension, self.poly - _poly_of(other))

    def __eq__(self, other):
        return self.poly == _poly_of(other)

    def __str__(self):
        return str(self.poly)


def _poly_of(f) -> Poly:
    return f.poly if isinstance(f, PhaseFunction) else Poly._coerce(f)


def poisson(f: PhaseFunction, g: PhaseFunction) -> PhaseFunction:
    """Canonical Poisson bracket {f, g}."""
    if f.dimension != g.dimension:
        raise MechanicsError("phase functions live on different dimensions")
    n = f.dimension
    total = Poly.zero()
    for k in range(1, n + 1):
        total = total + f.poly.diff(_p(k)) * g.poly.diff(_x(k))
        total = total - f.poly.diff(_x(k)) * g.poly.diff(_p(k))
    return PhaseFunction(n, total)


# ---- integrals of motion ----------------------------------------------


def potential_from_coefficients(pot: PotentialSpec, coeffs: Mapping[int, object]) -> Poly:
    """Linear combination sum_r coeffs[r] * generator[r] (0-based r)."""
    v = Poly.zero()
    for r, c in coeffs.items():
        v = v + Poly._coerce(c) * pot.generators[r]
    return v


def hamiltonian(pot: PotentialSpec, coeffs: Mapping[int, object]) -> PhaseFunction:
    """H = sum p_k^2 + V for the combined potential."""
    n = pot.dimension
    h = potential_from_coefficients(pot, coeffs)
    for k in range(1, n + 1):
        h = h + Poly.variable(_p(k)) ** 2
    return PhaseFunction(n, h)


def build_integral(k: TensorField, pot: PotentialSpec, coeffs: Mapping[int, object]) -> PhaseFunction:
    """Second-order integral K^{ij} p_i p_j + W with dW = K* dV.

    W is recovered by staircase integration (integrate the first
    component in x1, correct, continue); compatibility of K with the
    combined potential is checked first and the reconstructed W is
    verified to differentiate back to K* dV exactly.
    """
    if k.valence != (0, 2):
        raise TensorError("build_integral expects a (0,2) Killing tensor")
    n = k.n
    v = potential_from_coefficients(pot, coeffs)
    a = OperatorField(TensorField(n, (1, 1), list(k.components)))
    res = conservation_check(a, v)
    if not res.is_conserved():
        raise NotCompatible("d(K*dV) != 0: the tensor is not compatible with this potential")
    grads = [v.diff(_x(i + 1)) for i in range(n)]
    omega = [sum((k[(s, i)] * grads[s] for s in range(n)), Poly.zero()) for i in range(n)]
    w = Poly.zero()
    for i in range(n):
        w = w + (omega[i] - w.diff(_x(i + 1))).integrate(_x(i + 1))
    for i in range(n):
        if w.diff(_x(i + 1)) != omega[i]:
            raise MechanicsError("potential reconstruction failed to close")
    f = w
    for i in range(n):
        for j in range(n):
            f = f + k[(i, j)] * Poly.variable(_p(i + 1)) * Poly.variable(_p(j + 1))
    return PhaseFunction(n, f)


# ---- functional independence ------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    """Small nonzero rational sample value (|num| <= 20, den <= 7)."""
    num = rng.choice([i for i in range(-20, 21) if i != 0])
    return Fraction(num, rng.randint(1, 7))


def functional_independence(fs: Sequence[PhaseFunction], trials: int = 10,
                            seed: int = 0) -> int:
    """Rank of the phase-space Jacobian, maximized over random rational
    sample points (a stable lower bound for the functional rank).

    Any non-phase parameters occurring in the functions are also bound
    to random rationals per trial.
    """
    if not fs:
        return 0
    n = fs[0].dimension
    phase_vars = [_x(i) for i in range(1, n + 1)] + [_p(i) for i in range(1, n + 1)]
    params = sorted({v for f in fs for v in f.poly.variables()
                     if v.ns not in ("x", "p")})
    jac = [[f.poly.diff(v) for v in phase_vars] for f in fs]
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        point = {v: random_rational(rng) for v in phase_vars}
        point.update({v: random_rational(rng) for v in params})
        rows = [[entry.evaluate(point) for entry in row] for row in jac]
        best = max(best, linalg.rank(rows))
        if best == min(len(fs), 2 * n):
            break
    return best


# ---- structural tensor ------------------------------------------------


@dataclass
class StructuralTensor:
    """Point value of the tensor P^{ab}_{ijk} with derivative law
    grad_k K_ij = P^{ab}_{ijk} K_ab on the family; symmetric in (a,b)
    and in (i,j)."""

    dimension: int
    point: Tuple[Fraction, ...]
    values: Dict[Tuple[int, int, int, int, int], Fraction]

    def __call__(self, a: int, b: int, i: int, j: int, k: int) -> Fraction:
        a, b = sorted((a, b))
        i, j = sorted((i, j))
        return self.values.get((a, b, i, j, k), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.values.values())


def _point_binding(x0: Sequence[Fraction]):
    return {_x(i + 1): Fraction(q) for i, q in enumerate(x0)}


def evaluate_tensor(t: TensorField, x0: Sequence[Fraction]):
    """Nested lists of the tensor's rational component values at x0."""
    binding = _point_binding(x0)

    def nest(prefix):
        if len(prefix) == t.r + t.s:
            return t[tuple(prefix)].evaluate(binding)
        return [nest(prefix + (i,)) for i in range(t.n)]

    return nest(())


def structural_tensor_at(family: KillingFamily, x0: Sequence[Fraction]) -> StructuralTensor:
    """Unique pointwise solution of grad K = P K over the family basis.

    Requires the evaluation matrix of the basis at x0 (one row per
    basis element, one column per symmetric component pair) to be
    square and invertible.
    """
    n = family.dimension
    basis = family.basis()
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    if len(basis) != len(pairs):
        raise NonUniqueSolution(
            f"family has {len(basis)} parameters but {len(pairs)} component pairs")
    binding = _point_binding(x0)
    m = []
    for elem in basis:
        row = []
        for (a, b) in pairs:
            weight = 1 if a == b else 2
            row.append(weight * elem[(a, b)].evaluate(binding))
        m.append(row)
    if linalg.rank(m) < len(pairs):
        raise NonUniqueSolution("basis evaluation matrix singular at this point")

    grads = [partial_derivative(elem) for elem in basis]
    values: Dict[Tuple[int, int, int, int, int], Fraction] = {}
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                rhs = [g[(i, j, k)].evaluate(binding) for g in grads]
                sol = linalg.solve(m, rhs)
                if sol is None:
                    raise Inconsistent("no structural tensor at this point")
                for (a, b), q in zip(pairs, sol):
                    if q:
                        values[(a, b, i, j, k)] = q
    return StructuralTensor(dimension=n, point=tuple(Fraction(q) for q in x0),
                            values=values)


# ---- abundant-system Haantjes formula ---------------------------------


def _nijenhuis_kernel(p: StructuralTensor) -> Dict[Tuple[int, ...], Fraction]:
    """Seven-index kernel U with N_ijk = U[i,c,d,a,b,j,k] K_cd K_ab."""
    n = p.dimension
    u: Dict[Tuple[int, ...], Fraction] = {}
    rng = range(n)
    for i in rng:
        for c in rng:
            for d in rng:
                for a in rng:
                    for b in rng:
                        for j in rng:
                            for k in rng:
                                val = Fraction(0)
                                if b == j:
                                    val += p(c, d, i, k, a)
                                if b == k:
                                    val -= p(c, d, i, j, a)
                                if a == i:
                                    val += p(c, d, b, j, k) - p(c, d, b, k, j)
                                if val:
                                    u[(i, c, d, a, b, j, k)] = val
    return u


def haantjes_kernel(p: StructuralTensor) -> Dict[Tuple[int, ...], Fraction]:
    """Eleven-index kernel with H_ijk = sum kernel * K_cd K_rm K_pq K_uv.

    Depends only on the structural tensor, not on the particular
    family member contracted into it.
    """
    n = p.dimension
    u = _nijenhuis_kernel(p)
    kernel: Dict[Tuple[int, ...], Fraction] = {}

    def bump(key, val):
        kernel[key] = kernel.get(key, Fraction(0)) + val
        if not kernel[key]:
            del kernel[key]

    rng = range(n)
    for (x0, c, d, r, m, y, z), w in u.items():
        # N_{b j k} K_ia K_ab  with (b,j,k) = (x0,y,z)
        for i in rng:
            for a in rng:
                bump((i, y, z, c, d, r, m, i, a, a, x0), w)
        # N_{i a b} K_aj K_bk  with (i,a,b) = (x0,y,z)
        for j in rng:
            for k in rng:
                bump((x0, j, k, c, d, r, m, y, j, z, k), w)
        # -K_ia N_{a b k} K_bj  with (a,b,k) = (x0,y,z)
        for i in rng:
            for j in rng:
                bump((i, j, z, c, d, r, m, i, x0, y, j), -w)
        # -K_ia N_{a j b} K_bk  with (a,j,b) = (x0,y,z)
        for i in rng:
            for k in rng:
                bump((i, y, k, c, d, r, m, i, x0, z, k), -w)
    return kernel


def abundant_haantjes(p: StructuralTensor, k: TensorField, x0: Sequence[Fraction]):
    """Haantjes torsion of K at x0 via the structural-tensor kernel.

    Returns nested lists H[i][j][k]; agrees with the direct torsion
    evaluation whenever grad K = P K holds at x0.
    """
    n = p.dimension
    if k.n != n:
        raise MechanicsError("dimension mismatch")
    kv = evaluate_tensor(k, x0)
    kernel = haantjes_kernel(p)
    out = [[[Fraction(0) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (i, j, kk, c, d, r, m, pq1, pq2, uv1, uv2), w in kernel.items():
        out[i][j][kk] += w * kv[c][d] * kv[r][m] * kv[pq1][pq2] * kv[uv1][uv2]
    return out


def haantjes_at(k: TensorField, x0: Sequence[Fraction]):
    """Direct Haantjes evaluation of a (0,2) tensor at a point."""
    a = OperatorField(TensorField(k.n, (1, 1), list(k.components)))
    h = haantjes(a)
    return evaluate_tensor(h, x0)


# ---- third-order-structure compatibility condition --------------------


@dataclass
class Condition6bResult:
    holds: bool
    residual: TensorField
    normalization: str


def condition_6b(k: TensorField, normalization: str = "half") -> Condition6bResult:
    """Denominator-cleared check of the quadratic derivative identity
    det(K) K_{m[k,n]l} + (1/3) Adj^{pq} K_{p[l,m]} K_{q[k,n]} = 0.

    Square brackets antisymmetrize the enclosed index pair (weight 1/2
    for "half", 1 for "raw"); K^{pq} is the inverse of K, cleared to
    its adjugate.
    """
    if k.valence != (0, 2):
        raise TensorError("condition check expects a (0,2) tensor")
    if normalization not in ("half", "raw"):
        raise MechanicsError("normalization must be 'half' or 'raw'")
    n = k.n
    s = Fraction(1, 2) if normalization == "half" else Fraction(1)
    mat = k.matrix()
    det = linalg.ring_det(mat, Poly.zero(), Poly.const(1))
    if det.is_zero():
        raise DegenerateK("det(K) vanishes identically")
    adj = linalg.ring_adjugate(mat, Poly.zero(), Poly.const(1))

    def first(p_, l_, m_):  # K_{p[l,m]}
        return (k[(p_, l_)].diff(_x(m_ + 1)) - k[(p_, m_)].diff(_x(l_ + 1))) * s

    def comp(idx):
        m_, k_, n_, l_ = idx
        lhs = (k[(m_, k_)].diff(_x(n_ + 1)).diff(_x(l_ + 1))
               - k[(m_, n_)].diff(_x(k_ + 1)).diff(_x(l_ + 1))) * s
        total = det * lhs
        for p_ in range(n):
            for q_ in range(n):
                total = total + adj[p_][q_] * first(p_, l_, m_) * first(q_, k_, n_) \
                    * Fraction(1, 3)
        return total

    residual = TensorField.from_function(n, (0, 4), comp)
    return Condition6bResult(holds=residual.is_zero(), residual=residual,
                             normalization=normalization)
