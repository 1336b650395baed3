"""Truncated one-parameter formal deformations of a Nijenhuis Leibniz algebra.

A deformation is a pair of truncated power series: bilinear terms mu_0..mu_k
and operator terms N_0..N_k, with (mu_0, N_0) the base structure.  Everything
is order-by-order; there is no formal-completion machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .algebra import (
    BilinearTensor,
    LeibnizAlgebra,
    adjoint_representation,
    bilinear_eval,
    bilinear_tensor_is_zero,
    zero_bilinear_tensor,
)
from .cochain import (
    Cochain,
    CohomologyReport,
    NLACochain,
    cohomology_dims,
    d_nla,
)
from .errors import PreconditionError, ShapeError
from .linalg import Matrix, Vector, vec_add, vec_sub, zero_vector
from .operators import check_operator, nijenhuis


@dataclass(frozen=True)
class TruncatedDeformation:
    order: int
    mu_terms: tuple[BilinearTensor, ...]
    n_terms: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.mu_terms) != self.order + 1 or len(self.n_terms) != self.order + 1:
            raise ShapeError("need exactly order+1 terms in each series")

    @property
    def dim(self) -> int:
        return len(self.mu_terms[0])

    def mu(self, i: int, x: Vector, y: Vector) -> Vector:
        return bilinear_eval(self.mu_terms[i], x, y)


def trivial_deformation(alg: LeibnizAlgebra, n_op: Matrix, order: int) -> TruncatedDeformation:
    zero_mu = zero_bilinear_tensor(alg.dim)
    zero_n = Matrix.zero(alg.dim, alg.dim)
    return TruncatedDeformation(
        order,
        (alg.structure,) + (zero_mu,) * order,
        (n_op,) + (zero_n,) * order,
    )


def _check_base(alg: LeibnizAlgebra, n_op: Matrix, d: TruncatedDeformation) -> None:
    if d.mu_terms[0] != alg.structure or d.n_terms[0] != n_op:
        raise PreconditionError("deformation does not start at the given base structure")


def deformation_residual(
    alg: LeibnizAlgebra, n_op: Matrix, d: TruncatedDeformation, order: int
) -> tuple[tuple, BilinearTensor]:
    """LHS - RHS of the order-n Leibniz and Nijenhuis equation families,
    evaluated on all basis triples / pairs."""
    _check_base(alg, n_op, d)
    if not 0 <= order <= d.order:
        raise PreconditionError(f"order {order} outside 0..{d.order}")
    dim = alg.dim
    units = [alg.unit(i) for i in range(dim)]
    tri = []
    for x in units:
        plane = []
        for y in units:
            row = []
            for z in units:
                acc = list(zero_vector(dim))
                for i in range(order + 1):
                    j = order - i
                    lhs = d.mu(i, x, d.mu(j, y, z))
                    rhs = vec_add(d.mu(i, d.mu(j, x, y), z), d.mu(i, y, d.mu(j, x, z)))
                    for k, v in enumerate(vec_sub(lhs, rhs)):
                        acc[k] += v
                row.append(tuple(acc))
            plane.append(tuple(row))
        tri.append(tuple(plane))
    bi = []
    for u in units:
        row = []
        for v in units:
            acc = list(zero_vector(dim))
            for i, j in product(range(order + 1), repeat=2):
                k = order - i - j
                if k < 0:
                    continue
                ni, nj, nk = d.n_terms[i], d.n_terms[j], d.n_terms[k]
                lhs = d.mu(i, nj.apply(u), nk.apply(v))
                rhs = vec_add(
                    ni.apply(d.mu(j, nk.apply(u), v)),
                    ni.apply(d.mu(j, u, nk.apply(v))),
                )
                rhs = vec_sub(rhs, ni.apply(nj.apply(d.mu(k, u, v))))
                for idx, val in enumerate(vec_sub(lhs, rhs)):
                    acc[idx] += val
            row.append(tuple(acc))
        bi.append(tuple(row))
    return tuple(tri), tuple(bi)


def _tri_is_zero(tri) -> bool:
    return all(all(x == 0 for x in vec) for plane in tri for row in plane for vec in row)


@dataclass(frozen=True)
class ResidualReport:
    order: int
    first_failing_order: Optional[int]
    leibniz_residual: Optional[tuple]  # tensors at the first failing order
    nijenhuis_residual: Optional[BilinearTensor]

    @property
    def passes(self) -> bool:
        return self.first_failing_order is None


def residual_report(alg: LeibnizAlgebra, n_op: Matrix, d: TruncatedDeformation) -> ResidualReport:
    for n in range(d.order + 1):
        tri, bi = deformation_residual(alg, n_op, d, n)
        if not (_tri_is_zero(tri) and bilinear_tensor_is_zero(bi)):
            return ResidualReport(d.order, n, tri, bi)
    return ResidualReport(d.order, None, None, None)


def infinitesimal(d: TruncatedDeformation) -> NLACochain:
    """The order-1 pair as a degree-2 element of the combined complex."""
    if d.order < 1:
        raise PreconditionError("infinitesimal needs order >= 1")
    return NLACochain(
        Cochain.from_bilinear_tensor(d.mu_terms[1]),
        Cochain.from_matrix(d.n_terms[1]),
    )


@dataclass(frozen=True)
class FormalIsomorphism:
    order: int
    psi_terms: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.psi_terms) != self.order + 1:
            raise ShapeError("need exactly order+1 series terms")
        dim = self.psi_terms[0].rows
        if self.psi_terms[0] != Matrix.identity(dim):
            raise PreconditionError("formal isomorphism must start at the identity")

    @property
    def dim(self) -> int:
        return self.psi_terms[0].rows

    @classmethod
    def identity(cls, dim: int, order: int) -> "FormalIsomorphism":
        zero = Matrix.zero(dim, dim)
        return cls(order, (Matrix.identity(dim),) + (zero,) * order)

    @classmethod
    def linear(cls, psi1: Matrix, order: int) -> "FormalIsomorphism":
        """Id + t*psi1, padded with zeros up to the given order."""
        zero = Matrix.zero(psi1.rows, psi1.cols)
        terms = [Matrix.identity(psi1.rows), psi1] + [zero] * (order - 1)
        return cls(order, tuple(terms[: order + 1]))


def formal_inverse(iso: FormalIsomorphism) -> FormalIsomorphism:
    """Truncated series inverse via eta_n = -sum_{i=1..n} psi_i eta_{n-i}."""
    eta: list[Matrix] = [Matrix.identity(iso.dim)]
    for n in range(1, iso.order + 1):
        acc = Matrix.zero(iso.dim, iso.dim)
        for i in range(1, n + 1):
            acc = acc + iso.psi_terms[i] * eta[n - i]
        eta.append(-acc)
    return FormalIsomorphism(iso.order, tuple(eta))


def compose_isomorphisms(a: FormalIsomorphism, b: FormalIsomorphism) -> FormalIsomorphism:
    if a.order != b.order:
        raise ShapeError("series orders differ")
    terms = []
    for n in range(a.order + 1):
        acc = Matrix.zero(a.dim, a.dim)
        for i in range(n + 1):
            acc = acc + a.psi_terms[i] * b.psi_terms[n - i]
        terms.append(acc)
    return FormalIsomorphism(a.order, tuple(terms))


def twist_by_isomorphism(
    d: TruncatedDeformation, iso: FormalIsomorphism
) -> TruncatedDeformation:
    """The deformation (mu', N') with psi o mu' = mu o (psi x psi) and
    psi o N' = N o psi, truncated at the common order."""
    if iso.order != d.order:
        raise ShapeError("deformation and isomorphism orders differ")
    dim = d.dim
    eta = formal_inverse(iso)
    units = [tuple(Matrix.identity(dim).column(i)) for i in range(dim)]
    mu_terms = []
    for n in range(d.order + 1):
        tensor = []
        for x in units:
            row = []
            for y in units:
                acc = list(zero_vector(dim))
                for b in range(n + 1):
                    for c in range(n - b + 1):
                        for e in range(n - b - c + 1):
                            a = n - b - c - e
                            val = eta.psi_terms[a].apply(
                                d.mu(b, iso.psi_terms[c].apply(x), iso.psi_terms[e].apply(y))
                            )
                            for k, v in enumerate(val):
                                acc[k] += v
                row.append(tuple(acc))
            tensor.append(tuple(row))
        mu_terms.append(tuple(tensor))
    n_terms = []
    for n in range(d.order + 1):
        acc = Matrix.zero(dim, dim)
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                acc = acc + eta.psi_terms[a] * d.n_terms[b] * iso.psi_terms[c]
        n_terms.append(acc)
    return TruncatedDeformation(d.order, tuple(mu_terms), tuple(n_terms))


@dataclass(frozen=True)
class EquivalenceReport:
    first_failing_order: Optional[int]
    mu_residual: Optional[BilinearTensor]
    n_residual: Optional[Matrix]

    @property
    def passes(self) -> bool:
        return self.first_failing_order is None


def equivalence_check(
    d_plain: TruncatedDeformation,
    d_primed: TruncatedDeformation,
    iso: FormalIsomorphism,
) -> EquivalenceReport:
    """Exact order-by-order residuals of psi o mu' = mu o (psi x psi) and
    psi o N' = N o psi."""
    if not (d_plain.order == d_primed.order == iso.order):
        raise ShapeError("orders differ")
    dim = d_plain.dim
    units = [tuple(Matrix.identity(dim).column(i)) for i in range(dim)]
    for n in range(iso.order + 1):
        tensor = []
        for x in units:
            row = []
            for y in units:
                acc = list(zero_vector(dim))
                for i in range(n + 1):
                    val = iso.psi_terms[i].apply(d_primed.mu(n - i, x, y))
                    for k, v in enumerate(val):
                        acc[k] += v
                for i in range(n + 1):
                    for j in range(n - i + 1):
                        k = n - i - j
                        val = d_plain.mu(
                            i, iso.psi_terms[j].apply(x), iso.psi_terms[k].apply(y)
                        )
                        for idx, v in enumerate(val):
                            acc[idx] -= v
                row.append(tuple(acc))
            tensor.append(tuple(row))
        mu_res = tuple(tensor)
        n_res = Matrix.zero(dim, dim)
        for i in range(n + 1):
            n_res = n_res + iso.psi_terms[i] * d_primed.n_terms[n - i]
            n_res = n_res - d_plain.n_terms[i] * iso.psi_terms[n - i]
        if not (bilinear_tensor_is_zero(mu_res) and n_res.is_zero()):
            return EquivalenceReport(n, mu_res, n_res)
    return EquivalenceReport(None, None, None)


@dataclass(frozen=True)
class ClassDifferenceResult:
    matches: bool
    difference: NLACochain  # infinitesimal(primed) - infinitesimal(plain)
    expected: NLACochain  # d^1(psi_1, 0) under the chosen phi variant
    residual: NLACochain  # difference - expected (zero iff matches)


def infinitesimal_class_difference(
    alg: LeibnizAlgebra,
    n_op: Matrix,
    d_plain: TruncatedDeformation,
    d_primed: TruncatedDeformation,
    iso: FormalIsomorphism,
    variant: str = "full",
) -> ClassDifferenceResult:
    """Verify that equivalent deformations have infinitesimals differing by
    the coboundary of (psi_1, 0)."""
    check = equivalence_check(d_plain, d_primed, iso)
    if not check.passes:
        raise PreconditionError(
            f"deformations are not equivalent via the given isomorphism "
            f"(first failure at order {check.first_failing_order})"
        )
    rep = adjoint_representation(alg, n_op)
    diff = infinitesimal(d_primed) - infinitesimal(d_plain)
    psi1_pair = NLACochain(
        Cochain.from_matrix(iso.psi_terms[1]),
        Cochain.zero(0, alg.dim, alg.dim),
    )
    expected = d_nla(alg, n_op, rep, psi1_pair, variant)
    residual = diff - expected
    return ClassDifferenceResult(residual.is_zero(), diff, expected, residual)


@dataclass(frozen=True)
class RigidityReport:
    h2: Optional[int]
    cohomology: CohomologyReport
    criterion_satisfied: Optional[bool]  # None when a junction failure withholds the verdict


def rigidity_report(
    alg: LeibnizAlgebra, n_op: Matrix, variant: str = "full", cap: int = 4
) -> RigidityReport:
    """One-directional criterion: H^2 of the combined complex = 0 implies
    rigidity.  Nothing is claimed when H^2 is nonzero or a junction fails."""
    bad = check_operator(alg, n_op, nijenhuis())
    if bad is not None:
        raise PreconditionError(f"not a Nijenhuis operator: {bad.describe()}")
    rep = adjoint_representation(alg, n_op)
    report = cohomology_dims("nla", alg, rep, n_op, max_degree=2, variant=variant, cap=cap)
    h2 = report.entry(2).dim_h
    if h2 is None or not all(report.junctions):
        return RigidityReport(h2, report, None)
    return RigidityReport(h2, report, h2 == 0)
