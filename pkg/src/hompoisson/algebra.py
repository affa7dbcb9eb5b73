"""Twisted algebras given by structure constants, and their identity checkers.

A twisted algebra is a based vector space with one or two bilinear operations
(stored as rank-3 tensors) and a linear twisting map.  Every defining identity
is multilinear in the algebra arguments, so vanishing on all basis tuples is
equivalent to vanishing identically; the ``check_*`` functions sweep basis
tuples in lexicographic order, collect at most ``MAX_WITNESSES`` failing
tuples with their exact residual vectors, and return a structured report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .linalg import (
    LinearMap,
    Trilinear,
    Vector,
    sparse_add,
    sparse_apply,
    sparse_contract,
    sparse_sub,
    sparse_to_vector,
    vector_to_sparse,
)

MAX_WITNESSES = 10

_THIRD = Fraction(1, 3)


# ---------------------------------------------------------------------------
# Data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomAlgebra:
    """One bilinear product plus a linear twisting map."""

    basis: tuple
    mu: Trilinear
    alpha: LinearMap

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        _validate_based(self.basis, self.mu, self.alpha)

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class HomPoissonAlgebra:
    """A bracket and a product sharing one twisting map.

    ``commutative`` is a claim about the product, verified by
    ``check_commutative`` rather than enforced at construction, so
    commutative and non-commutative examples share one type.
    """

    basis: tuple
    bracket: Trilinear
    mu: Trilinear
    alpha: LinearMap
    commutative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        _validate_based(self.basis, self.mu, self.alpha)
        if self.bracket.dim != len(self.basis):
            raise DimensionMismatch(
                f"bracket dim {self.bracket.dim} != basis size {len(self.basis)}")

    @property
    def dim(self) -> int:
        return len(self.basis)


def _validate_based(basis, mu, alpha):
    dim = len(basis)
    if dim == 0:
        raise ValueError("algebra must have positive dimension")
    if len(set(basis)) != dim:
        raise ValueError("basis names must be unique")
    if mu.dim != dim:
        raise DimensionMismatch(f"product dim {mu.dim} != basis size {dim}")
    if alpha.dim != dim:
        raise DimensionMismatch(f"twisting map dim {alpha.dim} != basis size {dim}")


def jacobi_tensor(algebra) -> Trilinear:
    """The operation the Jacobi-type checks apply to: the bracket when the
    algebra has one, else its single product."""
    return algebra.bracket if isinstance(algebra, HomPoissonAlgebra) else algebra.mu


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """One failing basis tuple with its exact residual."""

    indices: tuple
    residual: object  # Vector, or a polynomial-valued residual

    def as_dict(self) -> dict:
        if isinstance(self.residual, Vector):
            res = [str(e) for e in self.residual.entries]
        else:
            res = str(self.residual)
        return {"indices": list(self.indices), "residual": res}


@dataclass(frozen=True)
class CheckReport:
    identity: str
    passed: bool
    witnesses: tuple = ()
    parts: tuple = ()

    def as_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "passed": self.passed,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
        if self.parts:
            d["parts"] = [p.as_dict() for p in self.parts]
        return d

    def flat(self) -> list:
        """Leaf reports (the parts of an aggregate, or the report itself)."""
        if self.parts:
            out = []
            for p in self.parts:
                out.extend(p.flat())
            return out
        return [self]


def make_report(identity: str, witnesses=(), parts=()) -> CheckReport:
    witnesses = tuple(witnesses)
    parts = tuple(parts)
    passed = not witnesses and all(p.passed for p in parts)
    return CheckReport(identity, passed, witnesses, parts)


def aggregate_report(identity: str, parts) -> CheckReport:
    parts = tuple(parts)
    witnesses = tuple(w for p in parts for w in p.witnesses)
    return CheckReport(identity, all(p.passed for p in parts), witnesses, parts)


# ---------------------------------------------------------------------------
# Element-level operations
# ---------------------------------------------------------------------------

def hom_associator(algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """(xy)a(z) - a(x)(yz) for the algebra's product and twisting map a."""
    mu, alpha = algebra.mu, algebra.alpha
    return mu.contract(mu.contract(x, y), alpha.apply(z)) - mu.contract(alpha.apply(x), mu.contract(y, z))


def hom_jacobian(algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """Cyclic sum (xy)a(z) + (zx)a(y) + (yz)a(x) of the Jacobi operation."""
    t, alpha = jacobi_tensor(algebra), algebra.alpha
    return (
        t.contract(t.contract(x, y), alpha.apply(z))
        + t.contract(t.contract(z, x), alpha.apply(y))
        + t.contract(t.contract(y, z), alpha.apply(x))
    )


def cyclic_associator_sum(algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """as(x,y,z) + as(z,x,y) + as(y,z,x)."""
    return (
        hom_associator(algebra, x, y, z)
        + hom_associator(algebra, z, x, y)
        + hom_associator(algebra, y, z, x)
    )


def hom_leibniz_residual(algebra: HomPoissonAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """{a(x), yz} - {x,y}a(z) - a(y){x,z}."""
    br, mu, alpha = algebra.bracket, algebra.mu, algebra.alpha
    return (
        br.contract(alpha.apply(x), mu.contract(y, z))
        - mu.contract(br.contract(x, y), alpha.apply(z))
        - mu.contract(alpha.apply(y), br.contract(x, z))
    )


# ---------------------------------------------------------------------------
# Basis sweeps
# ---------------------------------------------------------------------------

def _sweep_triples(dim, residual_fn, identity: str) -> CheckReport:
    witnesses = []
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                res = residual_fn(i, j, k)
                if res:
                    witnesses.append(Witness((i, j, k), sparse_to_vector(res, dim)))
                    if len(witnesses) >= MAX_WITNESSES:
                        return make_report(identity, witnesses)
    return make_report(identity, witnesses)


def _sweep_pairs(dim, residual_fn, identity: str) -> CheckReport:
    witnesses = []
    for i in range(dim):
        for j in range(dim):
            res = residual_fn(i, j)
            if res:
                witnesses.append(Witness((i, j), sparse_to_vector(res, dim)))
                if len(witnesses) >= MAX_WITNESSES:
                    return make_report(identity, witnesses)
    return make_report(identity, witnesses)


def alpha_columns(algebra) -> list:
    """Twisting-map columns as sparse maps, precomputed once per sweep."""
    return [vector_to_sparse(algebra.alpha.column(k)) for k in range(algebra.dim)]


def check_hom_associative(algebra) -> CheckReport:
    """Product associativity twisted by the algebra's map, on all basis triples."""
    mu, alpha = algebra.mu, algebra.alpha
    cols = alpha_columns(algebra)

    def residual(i, j, k):
        left = sparse_contract(mu, mu.pair(i, j), cols[k])
        right = sparse_contract(mu, cols[i], mu.pair(j, k))
        return sparse_sub(left, right)

    return _sweep_triples(algebra.dim, residual, "hom-associative")


def check_antisymmetry(algebra) -> CheckReport:
    """Bracket antisymmetry as a structure-constant condition."""
    t = jacobi_tensor(algebra)

    def residual(i, j):
        return sparse_add(dict(t.pair(i, j)), t.pair(j, i))

    return _sweep_pairs(algebra.dim, residual, "antisymmetry")


def check_commutative(algebra) -> CheckReport:
    """Product symmetry as a structure-constant condition."""
    mu = algebra.mu

    def residual(i, j):
        return sparse_sub(dict(mu.pair(i, j)), mu.pair(j, i))

    return _sweep_pairs(algebra.dim, residual, "commutative")


def check_hom_jacobi(algebra) -> CheckReport:
    """Twisted Jacobi identity for the bracket, on all basis triples."""
    t, alpha = jacobi_tensor(algebra), algebra.alpha
    cols = alpha_columns(algebra)

    def residual(i, j, k):
        out = sparse_contract(t, t.pair(i, j), cols[k])
        out = sparse_add(out, sparse_contract(t, t.pair(k, i), cols[j]))
        out = sparse_add(out, sparse_contract(t, t.pair(j, k), cols[i]))
        return out

    return _sweep_triples(algebra.dim, residual, "hom-jacobi")


def check_hom_leibniz(algebra: HomPoissonAlgebra) -> CheckReport:
    """Twisted Leibniz compatibility between bracket and product."""
    br, mu, alpha = algebra.bracket, algebra.mu, algebra.alpha
    cols = alpha_columns(algebra)

    def residual(i, j, k):
        out = sparse_contract(br, cols[i], mu.pair(j, k))
        out = sparse_sub(out, sparse_contract(mu, br.pair(i, j), cols[k]))
        out = sparse_sub(out, sparse_contract(mu, cols[j], br.pair(i, k)))
        return out

    return _sweep_triples(algebra.dim, residual, "hom-leibniz")


def check_multiplicative(algebra) -> CheckReport:
    """The twisting map is a morphism of every operation the algebra carries."""
    alpha = algebra.alpha
    cols = alpha_columns(algebra)
    parts = []
    ops = [("mu", algebra.mu)]
    if isinstance(algebra, HomPoissonAlgebra):
        ops.insert(0, ("bracket", algebra.bracket))
    for name, t in ops:
        def residual(i, j, t=t):
            return sparse_sub(sparse_apply(alpha, t.pair(i, j)),
                              sparse_contract(t, cols[i], cols[j]))
        parts.append(_sweep_pairs(algebra.dim, residual, f"multiplicative[{name}]"))
    return aggregate_report("multiplicative", parts)


def check_morphism(f: LinearMap, source, target, weak: bool = False) -> CheckReport:
    """Does ``f`` intertwine the operations of ``source`` and ``target``?

    Checks f(op(x, y)) = op(f(x), f(y)) on all basis pairs for the product
    and, when both algebras carry one, the bracket.  Unless ``weak``, also
    requires f to commute with the twisting maps.
    """
    if source.dim != target.dim or f.dim != source.dim:
        raise DimensionMismatch("morphism check requires equal dimensions")
    fcols = [vector_to_sparse(f.column(k)) for k in range(source.dim)]
    ops = [("mu", source.mu, target.mu)]
    s_br = isinstance(source, HomPoissonAlgebra)
    t_br = isinstance(target, HomPoissonAlgebra)
    if s_br and t_br:
        ops.append(("bracket", source.bracket, target.bracket))
    elif s_br != t_br:
        raise ValueError("cannot compare a bracketed algebra with a single-product one")
    parts = []
    for name, ts, tt in ops:
        def residual(i, j, ts=ts, tt=tt):
            return sparse_sub(sparse_apply(f, ts.pair(i, j)),
                              sparse_contract(tt, fcols[i], fcols[j]))
        parts.append(_sweep_pairs(source.dim, residual, f"morphism[{name}]"))
    if not weak:
        left = f.compose(source.alpha)
        right = target.alpha.compose(f)
        witnesses = []
        for j in range(source.dim):
            diff = left.column(j) - right.column(j)
            if not diff.is_zero():
                witnesses.append(Witness((j,), diff))
                if len(witnesses) >= MAX_WITNESSES:
                    break
        parts.append(make_report("morphism[twisting]", witnesses))
    return aggregate_report("weak-morphism" if weak else "morphism", parts)


def check_hom_poisson(algebra: HomPoissonAlgebra) -> CheckReport:
    """The full defining suite: antisymmetry, twisted Jacobi, twisted
    associativity, twisted Leibniz, and product symmetry when claimed."""
    parts = [
        check_antisymmetry(algebra),
        check_hom_jacobi(algebra),
        check_hom_associative(algebra),
        check_hom_leibniz(algebra),
    ]
    if algebra.commutative:
        parts.append(check_commutative(algebra))
    return aggregate_report("hom-poisson", parts)


# ---------------------------------------------------------------------------
# Shared sparse residuals (reused by the admissibility/flexibility sweeps)
# ---------------------------------------------------------------------------

def associator_sparse(mu: Trilinear, cols, i: int, j: int, k: int) -> dict:
    """Twisted associator at basis triple (i, j, k) given twisting columns."""
    return sparse_sub(sparse_contract(mu, mu.pair(i, j), cols[k]),
                      sparse_contract(mu, cols[i], mu.pair(j, k)))


def admissibility_rhs_sparse(mu: Trilinear, cols, i: int, j: int, k: int) -> dict:
    """1/3 [ (xz)a(y) - (zx)a(y) + (yz)a(x) - (yx)a(z) ] at basis (i, j, k)."""
    rhs = sparse_contract(mu, mu.pair(i, k), cols[j])
    rhs = sparse_sub(rhs, sparse_contract(mu, mu.pair(k, i), cols[j]))
    rhs = sparse_add(rhs, sparse_contract(mu, mu.pair(j, k), cols[i]))
    rhs = sparse_sub(rhs, sparse_contract(mu, mu.pair(j, i), cols[k]))
    return {n: _THIRD * q for n, q in rhs.items()}
