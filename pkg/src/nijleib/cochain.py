"""The three cochain complexes and the comparison map.

delta is the Loday-Pirashvili coboundary of a Leibniz algebra with a
representation.  The operator complex `partial` is, by construction, delta of
the star algebra with the induced representation (a single code path, so
partial o partial = 0 is inherited).  The combined complex acts on pairs by
d(f, g) = (delta f, -partial g - phi f).

phi comes in two variants.  `printed` uses single-slot lower terms plus a
trailing N_V^2 term; `full` is the inclusion-exclusion sum over slot subsets.
They agree at degrees 0 and 2 and differ elsewhere; `full` is the default
because it is the only variant under which the chain-map identity
phi(delta f) = partial(phi f) holds (see chain_map_diagnostic).

Flattening is canonical everywhere: basis tuples in lexicographic order,
module coordinate fastest; combined-complex blocks ordered [upper; lower].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from typing import Optional, Union

from .algebra import LeibnizAlgebra, Representation
from .errors import PreconditionError, ResourceLimitError, ShapeError
from .linalg import (
    Matrix,
    Vector,
    is_zero_vector,
    kernel_basis,
    kron,
    mat_mul,
    rank,
    solve_linear,
    zero_vector,
)
from .operators import induced_bracket, induced_representation

DEGREE_CAP = 4

PHI_VARIANTS = ("full", "printed")


@lru_cache(maxsize=None)
def all_tuples(dim: int, degree: int) -> tuple[tuple[int, ...], ...]:
    return tuple(product(range(dim), repeat=degree))


def space_dim(alg_dim: int, module_dim: int, degree: int) -> int:
    return module_dim * alg_dim**degree


@dataclass(frozen=True, eq=True)
class Cochain:
    """Degree-n multilinear map g^(x)n -> V as a total table over basis tuples."""

    degree: int
    alg_dim: int
    module_dim: int
    values: dict

    def __post_init__(self):
        expected = all_tuples(self.alg_dim, self.degree)
        if set(self.values) != set(expected):
            raise ShapeError("cochain table must be total over all basis tuples")
        for v in self.values.values():
            if len(v) != self.module_dim:
                raise ShapeError("cochain values must have module dimension")

    @classmethod
    def zero(cls, degree: int, alg_dim: int, module_dim: int) -> "Cochain":
        z = zero_vector(module_dim)
        return cls(degree, alg_dim, module_dim, {t: z for t in all_tuples(alg_dim, degree)})

    @classmethod
    def from_table(cls, degree: int, alg_dim: int, module_dim: int, table: dict) -> "Cochain":
        base = {t: zero_vector(module_dim) for t in all_tuples(alg_dim, degree)}
        for t, v in table.items():
            base[tuple(t)] = tuple(Fraction(c) for c in v)
        return cls(degree, alg_dim, module_dim, base)

    @classmethod
    def basis(cls, degree: int, alg_dim: int, module_dim: int, t: tuple, coord: int) -> "Cochain":
        v = tuple(Fraction(1 if i == coord else 0) for i in range(module_dim))
        return cls.from_table(degree, alg_dim, module_dim, {tuple(t): v})

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Cochain":
        """A linear map as a degree-1 cochain (columns are basis values)."""
        return cls(1, m.cols, m.rows, {(j,): m.column(j) for j in range(m.cols)})

    @classmethod
    def from_bilinear_tensor(cls, tensor) -> "Cochain":
        dim = len(tensor)
        out_dim = len(tensor[0][0]) if dim else 0
        return cls(2, dim, out_dim, {(i, j): tensor[i][j] for i in range(dim) for j in range(dim)})

    @classmethod
    def from_vector(cls, v: Vector, alg_dim: int) -> "Cochain":
        """A module element as a degree-0 cochain."""
        return cls(0, alg_dim, len(v), {(): tuple(v)})

    def value(self, t: tuple) -> Vector:
        return self.values[tuple(t)]

    def __call__(self, *vectors: Vector) -> Vector:
        if len(vectors) != self.degree:
            raise ShapeError(f"degree-{self.degree} cochain called with {len(vectors)} arguments")
        acc = list(zero_vector(self.module_dim))
        for t in all_tuples(self.alg_dim, self.degree):
            coeff = Fraction(1)
            for slot, idx in enumerate(t):
                coeff *= vectors[slot][idx]
                if not coeff:
                    break
            if not coeff:
                continue
            for k, c in enumerate(self.values[t]):
                if c:
                    acc[k] += coeff * c
        return tuple(acc)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(
            self.degree,
            self.alg_dim,
            self.module_dim,
            {t: tuple(a + b for a, b in zip(self.values[t], other.values[t])) for t in self.values},
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(
            self.degree,
            self.alg_dim,
            self.module_dim,
            {t: tuple(a - b for a, b in zip(self.values[t], other.values[t])) for t in self.values},
        )

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return Cochain(
            self.degree,
            self.alg_dim,
            self.module_dim,
            {t: tuple(c * a for a in v) for t, v in self.values.items()},
        )

    def is_zero(self) -> bool:
        return all(is_zero_vector(v) for v in self.values.values())

    def flatten(self) -> Vector:
        out: list[Fraction] = []
        for t in all_tuples(self.alg_dim, self.degree):
            out.extend(self.values[t])
        return tuple(out)

    def as_matrix(self) -> Matrix:
        if self.degree != 1:
            raise ShapeError("only degree-1 cochains are matrices")
        return Matrix.from_columns([self.values[(j,)] for j in range(self.alg_dim)])

    def _check_compatible(self, other: "Cochain") -> None:
        if (self.degree, self.alg_dim, self.module_dim) != (
            other.degree,
            other.alg_dim,
            other.module_dim,
        ):
            raise ShapeError("incompatible cochains")


def unflatten(vec: Vector, degree: int, alg_dim: int, module_dim: int) -> Cochain:
    tuples = all_tuples(alg_dim, degree)
    if len(vec) != len(tuples) * module_dim:
        raise ShapeError("flattened vector has wrong length")
    values = {
        t: tuple(vec[idx * module_dim : (idx + 1) * module_dim]) for idx, t in enumerate(tuples)
    }
    return Cochain(degree, alg_dim, module_dim, values)


def identity_cochain(dim: int) -> Cochain:
    return Cochain.from_matrix(Matrix.identity(dim))


# ---------------------------------------------------------------------------
# Matrix assembly.  Coboundary matrices are built directly from the formula's
# term structure: each term contributes an m x m block linking one output
# tuple to one input tuple.


def _add_block(rows, out_idx: int, in_idx: int, mat: Matrix, m: int, sign: int) -> None:
    base_r, base_c = out_idx * m, in_idx * m
    for a in range(m):
        target = rows[base_r + a]
        source = mat.data[a]
        for b in range(m):
            v = source[b]
            if v:
                target[base_c + b] += sign * v


def _add_scalar_block(rows, out_idx: int, in_idx: int, coeff: Fraction, m: int) -> None:
    base_r, base_c = out_idx * m, in_idx * m
    for a in range(m):
        rows[base_r + a][base_c + a] += coeff


@lru_cache(maxsize=None)
def delta_matrix(alg: LeibnizAlgebra, rep: Representation, degree: int) -> Matrix:
    """Matrix of the Loday-Pirashvili coboundary at the given degree."""
    if rep.algebra_dim != alg.dim:
        raise ShapeError("representation does not match the algebra")
    n, m = degree, rep.module_dim
    in_tuples = all_tuples(alg.dim, n)
    out_tuples = all_tuples(alg.dim, n + 1)
    in_index = {t: idx for idx, t in enumerate(in_tuples)}
    rows = [[Fraction(0)] * (len(in_tuples) * m) for _ in range(len(out_tuples) * m)]
    for oi, t in enumerate(out_tuples):
        # left-action terms: (-1)^(i+1) l(x_i, f(..., x_i hat, ...)), i = 1..n
        for p in range(n):
            sign = 1 if p % 2 == 0 else -1
            s = t[:p] + t[p + 1 :]
            _add_block(rows, oi, in_index[s], rep.left[t[p]], m, sign)
        # right-action term: (-1)^(n+1) r(f(x_1..x_n), x_(n+1))
        sign = 1 if (n + 1) % 2 == 0 else -1
        _add_block(rows, oi, in_index[t[:n]], rep.right[t[n]], m, sign)
        # bracket-insertion double sum: (-1)^i f(..., x_i hat, ..., [x_i,x_j], ...)
        for p in range(n + 1):
            sign = -1 if (p + 1) % 2 == 1 else 1
            for q in range(p + 1, n + 1):
                c = alg.bracket_basis(t[p], t[q])
                for k, ck in enumerate(c):
                    if ck:
                        s = t[:p] + t[p + 1 : q] + (k,) + t[q + 1 :]
                        _add_scalar_block(rows, oi, in_index[s], sign * ck, m)
    return Matrix(rows)


def delta(alg: LeibnizAlgebra, rep: Representation, f: Cochain) -> Cochain:
    mat = delta_matrix(alg, rep, f.degree)
    return unflatten(mat.apply(f.flatten()), f.degree + 1, alg.dim, rep.module_dim)


@lru_cache(maxsize=None)
def star_structures(
    alg: LeibnizAlgebra, n_op: Matrix, rep: Representation
) -> tuple[LeibnizAlgebra, Representation]:
    star_alg = induced_bracket(alg, n_op)
    star_rep = induced_representation(rep, alg, n_op)
    return star_alg, star_rep


def partial_matrix(alg: LeibnizAlgebra, n_op: Matrix, rep: Representation, degree: int) -> Matrix:
    star_alg, star_rep = star_structures(alg, n_op, rep)
    return delta_matrix(star_alg, star_rep, degree)


def partial(alg: LeibnizAlgebra, n_op: Matrix, rep: Representation, f: Cochain) -> Cochain:
    mat = partial_matrix(alg, n_op, rep, f.degree)
    return unflatten(mat.apply(f.flatten()), f.degree + 1, alg.dim, rep.module_dim)


@lru_cache(maxsize=None)
def combined_partial_matrix(
    alg: LeibnizAlgebra, n_op: Matrix, rep: Representation, degree: int
) -> Matrix:
    """Operator-part differential used inside the combined complex.

    This is the plain operator differential minus the Leibniz differential of
    g composed with the module operator on the output side:

        g  |->  partial(g) - delta(N_V o g).

    The subtraction is what makes the combined differential square to zero
    and is exactly the condition cut out by split abelian extensions and by
    first-order deformations; the plain partial alone satisfies neither.
    """
    nv = rep.module_operator
    if nv is None:
        raise PreconditionError("combined complex needs a module operator")
    post = kron(Matrix.identity(alg.dim ** degree), nv) if degree > 0 else nv
    return partial_matrix(alg, n_op, rep, degree) - mat_mul(
        delta_matrix(alg, rep, degree), post
    )


def combined_partial(alg: LeibnizAlgebra, n_op: Matrix, rep: Representation, f: Cochain) -> Cochain:
    mat = combined_partial_matrix(alg, n_op, rep, f.degree)
    return unflatten(mat.apply(f.flatten()), f.degree + 1, alg.dim, rep.module_dim)


@lru_cache(maxsize=None)
def phi_matrix(n_op: Matrix, module_op: Matrix, degree: int, variant: str = "full") -> Matrix:
    """Matrix of the comparison map at the given degree.

    Built as a sum of Kronecker products: precomposition with N in a subset of
    slots tensored with a postcomposition power of N_V.  Degree 0 is the
    identity under both variants.
    """
    if variant not in PHI_VARIANTS:
        raise ValueError(f"unknown phi variant {variant!r}")
    dim, m = n_op.rows, module_op.rows
    if degree == 0:
        return Matrix.identity(m)
    nt = n_op.transpose()
    ident = Matrix.identity(dim)
    nv = module_op
    terms: list[tuple[int, list[Matrix], Matrix]] = []
    if variant == "printed":
        terms.append((1, [nt] * degree, Matrix.identity(m)))
        for j in range(degree):
            slots = [nt] * degree
            slots[j] = ident
            terms.append((-1, slots, nv))
        terms.append((1, [ident] * degree, nv * nv))
    else:
        for mask in range(1 << degree):
            slots = [nt if (mask >> a) & 1 else ident for a in range(degree)]
            missing = degree - bin(mask).count("1")
            sign = 1 if missing % 2 == 0 else -1
            terms.append((sign, slots, nv.pow(missing)))
    total = Matrix.zero(m * dim**degree, m * dim**degree)
    for sign, slots, post in terms:
        term = reduce(_sparse_kron, slots + [post])
        total = total + (term if sign == 1 else -term)
    return total


def _sparse_kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    zero_row = [Fraction(0)] * (a.cols * b.cols)
    for i in range(a.rows):
        arow = a.data[i]
        for k in range(b.rows):
            brow = b.data[k]
            row = list(zero_row)
            for j in range(a.cols):
                aij = arow[j]
                if aij:
                    base = j * b.cols
                    for col, x in enumerate(brow):
                        if x:
                            row[base + col] = aij * x
            rows.append(row)
    return Matrix(rows)


def phi_map(f: Cochain, n_op: Matrix, module_op: Matrix, variant: str = "full") -> Cochain:
    mat = phi_matrix(n_op, module_op, f.degree, variant)
    return unflatten(mat.apply(f.flatten()), f.degree, f.alg_dim, f.module_dim)


# ---------------------------------------------------------------------------
# Combined (Nijenhuis-Leibniz) complex.


@dataclass(frozen=True)
class NLACochain:
    """Element of the combined complex: (degree-n map, degree-(n-1) map)."""

    upper: Cochain
    lower: Cochain

    def __post_init__(self):
        if self.lower.degree != self.upper.degree - 1:
            raise ShapeError("lower component must have degree one less than upper")
        if (self.upper.alg_dim, self.upper.module_dim) != (
            self.lower.alg_dim,
            self.lower.module_dim,
        ):
            raise ShapeError("components live over different spaces")

    @property
    def degree(self) -> int:
        return self.upper.degree

    @classmethod
    def zero(cls, degree: int, alg_dim: int, module_dim: int) -> "NLACochain":
        return cls(
            Cochain.zero(degree, alg_dim, module_dim),
            Cochain.zero(degree - 1, alg_dim, module_dim),
        )

    def __add__(self, other: "NLACochain") -> "NLACochain":
        return NLACochain(self.upper + other.upper, self.lower + other.lower)

    def __sub__(self, other: "NLACochain") -> "NLACochain":
        return NLACochain(self.upper - other.upper, self.lower - other.lower)

    def is_zero(self) -> bool:
        return self.upper.is_zero() and self.lower.is_zero()

    def flatten(self) -> Vector:
        return self.upper.flatten() + self.lower.flatten()


def nla_space_dim(alg_dim: int, module_dim: int, degree: int) -> int:
    if degree == 0:
        return module_dim
    return space_dim(alg_dim, module_dim, degree) + space_dim(alg_dim, module_dim, degree - 1)


def nla_unflatten(vec: Vector, degree: int, alg_dim: int, module_dim: int):
    if degree == 0:
        return Cochain.from_vector(vec, alg_dim)
    split = space_dim(alg_dim, module_dim, degree)
    return NLACochain(
        unflatten(vec[:split], degree, alg_dim, module_dim),
        unflatten(vec[split:], degree - 1, alg_dim, module_dim),
    )


def nla_matrix(
    alg: LeibnizAlgebra,
    n_op: Matrix,
    rep: Representation,
    degree: int,
    variant: str = "full",
) -> Matrix:
    """Matrix of d at the given degree, blocks ordered [upper; lower].

    Degree 0 is the literal specialization d(v) = (delta v, -phi_0 v); the
    source complex is only pinned down from degree 1 on, so the degree-0
    block is diagnostic-only.
    """
    nv = rep.module_operator
    if nv is None:
        raise PreconditionError("combined complex needs a module operator")
    m = rep.module_dim
    dlt = delta_matrix(alg, rep, degree)
    if degree == 0:
        neg_ident = Matrix.identity(m).scale(-1)
        return Matrix(list(dlt.data) + list(neg_ident.data))
    phi = phi_matrix(n_op, nv, degree, variant)
    par = combined_partial_matrix(alg, n_op, rep, degree - 1)
    rows = [list(r) + [Fraction(0)] * par.cols for r in dlt.data]
    for phi_row, par_row in zip(phi.data, par.data):
        rows.append([-v for v in phi_row] + [-v for v in par_row])
    return Matrix(rows)


def d_nla(
    alg: LeibnizAlgebra,
    n_op: Matrix,
    rep: Representation,
    element: Union[NLACochain, Cochain],
    variant: str = "full",
):
    degree = element.degree
    mat = nla_matrix(alg, n_op, rep, degree, variant)
    return nla_unflatten(mat.apply(element.flatten()), degree + 1, alg.dim, rep.module_dim)


# ---------------------------------------------------------------------------
# Assembled-complex reports.

COMPLEX_KINDS = ("la", "no", "nla")


def coboundary_matrix(
    kind: str,
    alg: LeibnizAlgebra,
    rep: Representation,
    n_op: Optional[Matrix],
    degree: int,
    variant: str = "full",
    cap: int = DEGREE_CAP,
) -> Matrix:
    if kind not in COMPLEX_KINDS:
        raise ValueError(f"unknown complex kind {kind!r}")
    if degree > cap:
        raise ResourceLimitError(f"degree {degree} exceeds cap {cap}")
    if kind == "la":
        return delta_matrix(alg, rep, degree)
    if n_op is None:
        raise PreconditionError(f"complex {kind!r} needs a Nijenhuis operator")
    if kind == "no":
        return partial_matrix(alg, n_op, rep, degree)
    return nla_matrix(alg, n_op, rep, degree, variant)


@dataclass(frozen=True)
class JunctionFailure:
    degree: int
    row: int
    col: int
    value: Fraction


@dataclass(frozen=True)
class DegreeEntry:
    degree: int
    dim_c: int
    dim_z: int
    dim_b: int
    dim_h: Optional[int]  # withheld (None) when the junction below fails


@dataclass(frozen=True)
class CohomologyReport:
    kind: str
    variant: str
    max_degree: int
    degrees: tuple[DegreeEntry, ...]
    junctions: tuple[bool, ...]  # junctions[n]: D_(n+1) o D_n == 0
    failures: tuple[JunctionFailure, ...]
    degree0_caveat: bool  # nla only: H^1 depends on the literal degree-0 map

    def entry(self, degree: int) -> DegreeEntry:
        return self.degrees[degree]


def _first_nonzero(m: Matrix) -> Optional[tuple[int, int, Fraction]]:
    for i, row in enumerate(m.data):
        for j, v in enumerate(row):
            if v:
                return i, j, v
    return None


def cohomology_dims(
    kind: str,
    alg: LeibnizAlgebra,
    rep: Representation,
    n_op: Optional[Matrix] = None,
    max_degree: int = 2,
    variant: str = "full",
    cap: int = DEGREE_CAP,
    rank_fn=rank,
) -> CohomologyReport:
    """Per-degree cocycle/coboundary/cohomology dimensions with junction
    validity flags.  `rank_fn` exists so the plain-elimination oracle can be
    swapped in for cross-checks."""
    mats = [
        coboundary_matrix(kind, alg, rep, n_op, d, variant, cap) for d in range(max_degree + 1)
    ]
    junctions = []
    failures = []
    for d in range(max_degree):
        prod = mats[d + 1] * mats[d]
        witness = _first_nonzero(prod)
        junctions.append(witness is None)
        if witness is not None:
            failures.append(JunctionFailure(d, *witness))
    ranks = [rank_fn(mat) for mat in mats]
    entries = []
    for d in range(max_degree + 1):
        dim_c = mats[d].cols
        dim_z = dim_c - ranks[d]
        dim_b = ranks[d - 1] if d > 0 else 0
        ok_below = True if d == 0 else junctions[d - 1]
        entries.append(DegreeEntry(d, dim_c, dim_z, dim_b, dim_z - dim_b if ok_below else None))
    return CohomologyReport(
        kind=kind,
        variant=variant,
        max_degree=max_degree,
        degrees=tuple(entries),
        junctions=tuple(junctions),
        failures=tuple(failures),
        degree0_caveat=(kind == "nla"),
    )


@dataclass(frozen=True)
class MembershipResult:
    is_cocycle: bool
    is_coboundary: bool
    preimage: Optional[object]


def cocycle_membership(
    kind: str,
    alg: LeibnizAlgebra,
    rep: Representation,
    n_op: Optional[Matrix],
    element,
    variant: str = "full",
    cap: int = DEGREE_CAP,
) -> MembershipResult:
    degree = element.degree
    flat = element.flatten()
    out_mat = coboundary_matrix(kind, alg, rep, n_op, degree, variant, cap)
    is_cocycle = is_zero_vector(out_mat.apply(flat))
    if degree == 0:
        # no coboundaries below degree 0
        return MembershipResult(is_cocycle, is_zero_vector(flat), None)
    in_mat = coboundary_matrix(kind, alg, rep, n_op, degree - 1, variant, cap)
    sol = solve_linear(in_mat, flat)
    if sol is None:
        return MembershipResult(is_cocycle, False, None)
    if kind == "nla":
        preimage = nla_unflatten(sol, degree - 1, alg.dim, rep.module_dim)
    else:
        preimage = unflatten(sol, degree - 1, alg.dim, rep.module_dim)
    return MembershipResult(is_cocycle, True, preimage)


def sample_cocycles(
    kind: str,
    alg: LeibnizAlgebra,
    rep: Representation,
    n_op: Optional[Matrix],
    degree: int,
    variant: str = "full",
    cap: int = DEGREE_CAP,
) -> list:
    """Canonical kernel basis of the degree-n coboundary matrix, lifted back
    to cochains (or combined-complex pairs)."""
    mat = coboundary_matrix(kind, alg, rep, n_op, degree, variant, cap)
    basis = kernel_basis(mat)
    if kind == "nla":
        return [nla_unflatten(v, degree, alg.dim, rep.module_dim) for v in basis]
    return [unflatten(v, degree, alg.dim, rep.module_dim) for v in basis]


# ---------------------------------------------------------------------------
# Chain-map diagnostic.


@dataclass(frozen=True)
class ChainMapEntry:
    degree: int
    commutes: bool
    # on failure: the first basis cochain (tuple, coordinate) where the two
    # routes differ, and the exact residual cochain on that input
    witness_input: Optional[tuple[tuple[int, ...], int]] = None
    residual: Optional[Cochain] = None


def chain_map_residual(
    alg: LeibnizAlgebra,
    n_op: Matrix,
    rep: Representation,
    f: Cochain,
    variant: str = "full",
    corrected: bool = False,
) -> Cochain:
    """partial(phi f) - phi(delta f); identically zero iff phi is a chain map
    on this input.

    With corrected=True the combined-complex operator differential replaces
    the plain one; the full variant then commutes at every degree.
    """
    nv = rep.module_operator
    if nv is None:
        raise PreconditionError("chain-map residual needs a module operator")
    lower = combined_partial if corrected else partial
    lhs = lower(alg, n_op, rep, phi_map(f, n_op, nv, variant))
    rhs = phi_map(delta(alg, rep, f), n_op, nv, variant)
    return lhs - rhs


def chain_map_diagnostic(
    alg: LeibnizAlgebra,
    n_op: Matrix,
    rep: Representation,
    max_degree: int = 2,
    variant: str = "full",
    cap: int = DEGREE_CAP,
    corrected: bool = False,
) -> tuple[ChainMapEntry, ...]:
    """Compare the matrices of phi o delta and partial o phi per degree."""
    nv = rep.module_operator
    if nv is None:
        raise PreconditionError("chain-map diagnostic needs a module operator")
    if max_degree > cap:
        raise ResourceLimitError(f"degree {max_degree} exceeds cap {cap}")
    lower = combined_partial_matrix if corrected else partial_matrix
    entries = []
    for n in range(max_degree + 1):
        lhs = lower(alg, n_op, rep, n) * phi_matrix(n_op, nv, n, variant)
        rhs = phi_matrix(n_op, nv, n + 1, variant) * delta_matrix(alg, rep, n)
        diff = lhs - rhs
        if diff.is_zero():
            entries.append(ChainMapEntry(n, True))
            continue
        m = rep.module_dim
        in_tuples = all_tuples(alg.dim, n)
        col = next(j for j in range(diff.cols) if any(row[j] for row in diff.data))
        witness = (in_tuples[col // m], col % m)
        residual = unflatten(diff.column(col), n + 1, alg.dim, m)
        entries.append(ChainMapEntry(n, False, witness, residual))
    return tuple(entries)
