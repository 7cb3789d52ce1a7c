"""Lie algebras as exact structure-constant tensors.

Conventions, fixed package-wide:
  * [J_a, J_b] = f[a][b][c] J_c; antisymmetry is stored redundantly and
    checked at construction rather than enforced by the storage layout.
  * so(3) and so(2,1) have f_ab^c = eps_abd eta^dc with eps_{012} = +1 and
    invariant metric diag(1,1,1) resp. diag(1,-1,-1).
  * complexify(g, lam) returns the 2n-dim algebra on (J_0..J_{n-1},
    Q_0..Q_{n-1}) with [Q_a, J_b] = f_ab^c Q_c, [Q_a, Q_b] = lam f_ab^c J_c.
    Indices 0..n-1 are J and n..2n-1 are Q; downstream code relies on this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import DimensionMismatch, Matrix, Tensor3, rat, vec


class LieAlgebraError(ValueError):
    pass


class AntisymmetryViolation(LieAlgebraError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"f[{a}][{b}][{c}] != -f[{b}][{a}][{c}]")
        self.indices = (a, b, c)


class JacobiViolation(LieAlgebraError):
    def __init__(self, a: int, b: int, c: int, e: int, residual: Fraction):
        super().__init__(
            f"Jacobi identity fails at (a,b,c,e)=({a},{b},{c},{e}), residual {residual}"
        )
        self.indices = (a, b, c, e)
        self.residual = residual


class MetricNotInvariant(LieAlgebraError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"<[J_{a},J_{b}],J_{c}> + <J_{b},[J_{a},J_{c}]> != 0")
        self.indices = (a, b, c)


class MetricError(LieAlgebraError):
    pass


def check_antisymmetry(f: Tensor3) -> list[tuple[int, int, int]]:
    return sorted(
        {
            (a, b, c) if a < b else (b, a, c)
            for a, b, c, v in f.nonzero()
            if f[b, a, c] != -v
        }
    )


def _bracket_entries(f: Tensor3) -> dict[tuple[int, int], list[tuple[int, Fraction]]]:
    pairs: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
    for a, b, c, v in f.nonzero():
        pairs.setdefault((a, b), []).append((c, v))
    return pairs


def check_jacobi(f: Tensor3) -> list[tuple[int, int, int, int, Fraction]]:
    # given antisymmetry, the Jacobi sum is totally antisymmetric in (a,b,c),
    # so a < b < c covers every case
    n = f.dim
    pairs = _bracket_entries(f)
    bad = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                acc = [Fraction(0)] * n
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for d, v in pairs.get((x, y), ()):
                        for e, w in pairs.get((d, z), ()):
                            acc[e] += v * w
                for e in range(n):
                    if acc[e] != 0:
                        bad.append((a, b, c, e, acc[e]))
    return bad


def check_metric_invariance(f: Tensor3, metric: Matrix) -> list[tuple[int, int, int]]:
    n = f.dim
    pairs = _bracket_entries(f)
    bad = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                r = sum(
                    (v * metric[d, c] for d, v in pairs.get((a, b), ())),
                    Fraction(0),
                ) + sum(
                    (v * metric[b, d] for d, v in pairs.get((a, c), ())),
                    Fraction(0),
                )
                if r != 0:
                    bad.append((a, b, c))
    return bad


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra given by its structure-constant tensor.

    Elements are plain coefficient tuples X = X^a J_a of length dim.
    """

    dim: int
    f: Tensor3
    metric: Matrix | None = None

    def element(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        x = vec(coeffs)
        if len(x) != self.dim:
            raise DimensionMismatch(f"element length {len(x)} != dim {self.dim}")
        return x

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        xs, ys = self.element(x), self.element(y)
        n = self.dim
        out = []
        for c in range(n):
            acc = Fraction(0)
            for a in range(n):
                if xs[a] == 0:
                    continue
                for b in range(n):
                    if ys[b] == 0:
                        continue
                    v = self.f[a, b, c]
                    if v != 0:
                        acc += v * xs[a] * ys[b]
            out.append(acc)
        return tuple(out)

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        if self.metric is None:
            raise MetricError("algebra has no invariant metric")
        xs, ys = self.element(x), self.element(y)
        return sum(
            (
                xs[a] * self.metric[a, b] * ys[b]
                for a in range(self.dim)
                for b in range(self.dim)
            ),
            Fraction(0),
        )

    def ad(self, v: Sequence) -> Matrix:
        """Matrix of ad_V: J_b -> [V, J_b]."""
        vs = self.element(v)
        n = self.dim
        return Matrix.build(
            n,
            n,
            lambda c, b: sum((vs[a] * self.f[a, b, c] for a in range(n)), Fraction(0)),
        )

    def basis(self) -> list[tuple[Fraction, ...]]:
        return [
            tuple(Fraction(1) if i == a else Fraction(0) for i in range(self.dim))
            for a in range(self.dim)
        ]


def make_lie_algebra(f, metric=None) -> LieAlgebra:
    """Validate and build a Lie algebra; raises naming the failing indices."""
    ft = f if isinstance(f, Tensor3) else Tensor3(f)
    bad = check_antisymmetry(ft)
    if bad:
        raise AntisymmetryViolation(*bad[0])
    bad = check_jacobi(ft)
    if bad:
        raise JacobiViolation(*bad[0])
    mm = None
    if metric is not None:
        mm = metric if isinstance(metric, Matrix) else Matrix(metric)
        if mm.rows != ft.dim or mm.cols != ft.dim:
            raise MetricError(f"metric shape ({mm.rows},{mm.cols}) != dim {ft.dim}")
        if mm != mm.transpose():
            raise MetricError("metric is not symmetric")
        if mm.det() == 0:
            raise MetricError("metric is singular")
        badm = check_metric_invariance(ft, mm)
        if badm:
            raise MetricNotInvariant(*badm[0])
    return LieAlgebra(ft.dim, ft, mm)


def eps(a: int, b: int, c: int) -> int:
    """Levi-Civita symbol with eps(0,1,2) = +1."""
    if (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        return 1
    if (a, b, c) in ((0, 2, 1), (2, 1, 0), (1, 0, 2)):
        return -1
    return 0


EUCLIDEAN_METRIC = Matrix.diagonal([1, 1, 1])
LORENTZIAN_METRIC = Matrix.diagonal([1, -1, -1])


def _isometry_algebra(metric: Matrix) -> LieAlgebra:
    f = Tensor3.build(
        3,
        lambda a, b, c: sum(
            (Fraction(eps(a, b, d)) * metric[d, c] for d in range(3)), Fraction(0)
        ),
    )
    # diagonal +-1 metric: eta^{dc} = eta_{dc}
    return make_lie_algebra(f, metric)


def so3() -> LieAlgebra:
    """[J_a, J_b] = eps_abc J^c with Euclidean metric diag(1,1,1)."""
    return _isometry_algebra(EUCLIDEAN_METRIC)


def so21() -> LieAlgebra:
    """[J_a, J_b] = eps_abc J^c with Lorentzian metric diag(1,-1,-1)."""
    return _isometry_algebra(LORENTZIAN_METRIC)


def is_lorentzian(g: LieAlgebra) -> bool:
    return g.metric == LORENTZIAN_METRIC


def complexify(g: LieAlgebra, lam) -> LieAlgebra:
    """Generalised complexification g_lam on (J, Q), [Q,Q] = lam f J.

    lam = -1 is the complexification, lam = 0 the semidirect product
    g |x R^n, lam = 1 is isomorphic to g (+) g.  Jacobi is re-verified as a
    self-check even though it holds automatically.
    """
    lam = rat(lam)
    n = g.dim

    def fn(i, j, k):
        if i < n and j < n:
            return g.f[i, j, k] if k < n else Fraction(0)
        if i >= n and j < n:  # [Q_a, J_b] = f_ab^c Q_c
            return g.f[i - n, j, k - n] if k >= n else Fraction(0)
        if i < n and j >= n:  # [J_a, Q_b] = -f_ba^c Q_c
            return -g.f[j - n, i, k - n] if k >= n else Fraction(0)
        # [Q_a, Q_b] = lam f_ab^c J_c
        return lam * g.f[i - n, j - n, k] if k < n else Fraction(0)

    return make_lie_algebra(Tensor3.build(2 * n, fn))


def theta(gl: LieAlgebra, x: Sequence, lam) -> tuple[Fraction, ...]:
    """The linear map J_a -> Q_a, Q_a -> lam J_a on a complexified algebra.

    On generators theta^2 is multiplication by lam.
    """
    lam = rat(lam)
    if gl.dim % 2 != 0:
        raise DimensionMismatch("theta needs an even-dimensional (complexified) algebra")
    xs = gl.element(x)
    n = gl.dim // 2
    return tuple(lam * q for q in xs[n:]) + tuple(xs[:n])


def null_basis(g: LieAlgebra, s) -> Matrix:
    """Basis change to (N, Ntilde, J_1) with N = s(J_0+J_2), Ntilde = s(J_0-J_2).

    Columns of the returned matrix are the new basis vectors in the J-basis.
    The brackets are [Ntilde, N] = 2 s^2 J_1, [J_1, N] = N, [J_1, Ntilde] =
    -Ntilde; the conventional normalisation 1/sqrt(2) corresponds to
    2 s^2 = 1, which is irrational, so the scale is an explicit parameter.
    """
    if not is_lorentzian(g):
        raise MetricError("null basis requires the Lorentzian metric diag(1,-1,-1)")
    s = rat(s)
    if s == 0:
        raise ValueError("null basis scale must be nonzero")
    return Matrix([[s, s, 0], [0, 0, 1], [s, -s, 0]])


def outer(g: LieAlgebra, x: Sequence, y: Sequence) -> Matrix:
    """The rank-one map |x><y|: Z -> x <y, Z> as a matrix in the J-basis."""
    if g.metric is None:
        raise MetricError("outer product requires a metric")
    xs, ys = g.element(x), g.element(y)
    n = g.dim
    lowered = [
        sum((ys[c] * g.metric[c, a] for c in range(n)), Fraction(0)) for a in range(n)
    ]
    return Matrix.build(n, n, lambda b, a: xs[b] * lowered[a])
