"""Algebra-producing constructions and the checks that certify them.

Covers: the commutator bracket on a twisted-associative algebra, twisting by
(weak) self-morphisms, derived sequences, tensor products of commutative
algebras, untwisted beta-twistings with triviality and isomorphism tests,
polarization/depolarization, and the admissibility and flexibility checks
that characterize when a single product encodes a full bracket/product pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CheckReport,
    HomAlgebra,
    HomPoissonAlgebra,
    Witness,
    admissibility_rhs_sparse,
    aggregate_report,
    alpha_columns,
    associator_sparse,
    check_commutative,
    check_hom_associative,
    check_morphism,
    check_multiplicative,
    make_report,
    _sweep_triples,
)
from .errors import PreconditionError, SingularMatrixError
from .linalg import LinearMap, Trilinear, Vector, sparse_add, sparse_sub

_HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Commutator structure
# ---------------------------------------------------------------------------

def commutator_poisson(algebra: HomAlgebra) -> HomPoissonAlgebra:
    """Equip a twisted-associative algebra with its commutator bracket.

    The input must pass check_hom_associative; the result carries the same
    product and twisting map, with bracket mu - mu^op.
    """
    report = check_hom_associative(algebra)
    if not report.passed:
        raise PreconditionError("commutator construction requires a twisted-associative input", report)
    return HomPoissonAlgebra(
        basis=algebra.basis,
        bracket=algebra.mu - algebra.mu.op(),
        mu=algebra.mu,
        alpha=algebra.alpha,
        commutative=algebra.mu.is_symmetric(),
    )


# ---------------------------------------------------------------------------
# Twistings
# ---------------------------------------------------------------------------

def twist(algebra: HomPoissonAlgebra, beta: LinearMap, force: bool = False) -> HomPoissonAlgebra:
    """Twist both operations and the twisting map by a self-weak-morphism.

    Produces (beta{,}, beta mu, beta alpha).  The weak-morphism precondition
    is validated eagerly; ``force=True`` constructs anyway (negative tests).
    """
    if not force:
        report = check_morphism(beta, algebra, algebra, weak=True)
        if not report.passed:
            raise PreconditionError("twisting map is not a weak self-morphism", report)
    return HomPoissonAlgebra(
        basis=algebra.basis,
        bracket=algebra.bracket.map_outputs(beta),
        mu=algebra.mu.map_outputs(beta),
        alpha=beta.compose(algebra.alpha),
        commutative=algebra.commutative,
    )


def derived(algebra: HomPoissonAlgebra, n: int) -> HomPoissonAlgebra:
    """n-th member of the derived sequence: operations composed with alpha^n,
    twisting map alpha^(n+1).  Requires a multiplicative input."""
    if n < 0:
        raise ValueError("derived sequence index must be >= 0")
    report = check_multiplicative(algebra)
    if not report.passed:
        raise PreconditionError("derived sequence requires a multiplicative algebra", report)
    return twist(algebra, algebra.alpha.power(n), force=True)


def yau_twist(algebra: HomPoissonAlgebra, beta: LinearMap) -> HomPoissonAlgebra:
    """Twist an untwisted algebra by a self-morphism, making beta the twisting map."""
    if not algebra.alpha.is_identity():
        raise PreconditionError("this twist applies to algebras with identity twisting map")
    return twist(algebra, beta)


@dataclass(frozen=True)
class BetaTwisting:
    """The untwisted triple (beta{,}, beta mu) built from a self-morphism.

    Unlike ``twist``, the result keeps the identity twisting map and carries
    no guarantee of satisfying any identity.
    """

    base: HomPoissonAlgebra
    beta: LinearMap
    result: HomPoissonAlgebra


def beta_twisting(algebra: HomPoissonAlgebra, beta: LinearMap) -> BetaTwisting:
    if not algebra.alpha.is_identity():
        raise PreconditionError("beta-twisting is defined for algebras with identity twisting map")
    report = check_morphism(beta, algebra, algebra)
    if not report.passed:
        raise PreconditionError("beta-twisting requires a self-morphism", report)
    result = HomPoissonAlgebra(
        basis=algebra.basis,
        bracket=algebra.bracket.map_outputs(beta),
        mu=algebra.mu.map_outputs(beta),
        alpha=LinearMap.identity(algebra.dim),
        commutative=algebra.commutative,
    )
    return BetaTwisting(algebra, beta, result)


def is_trivial_twisting(twisting: BetaTwisting) -> bool:
    return twisting.result.bracket.is_zero() and twisting.result.mu.is_zero()


def verify_isomorphism(f: LinearMap, source, target) -> CheckReport:
    """Certify that f is an isomorphism: invertible and a morphism both ways."""
    try:
        f_inv = f.invert()
    except SingularMatrixError:
        kernel = f.kernel_vector()
        wit = (Witness((), kernel),) if kernel is not None else ()
        inv_part = CheckReport("isomorphism[invertible]", False, wit)
        return aggregate_report("isomorphism", [inv_part])
    parts = [
        make_report("isomorphism[invertible]"),
        check_morphism(f, source, target),
        check_morphism(f_inv, target, source),
    ]
    return aggregate_report("isomorphism", parts)


def nonrigidity_witness(algebra: HomPoissonAlgebra, beta: LinearMap,
                        triple, op: str = "mu") -> Vector:
    """Associator of beta*mu (or Jacobian of beta*{,}) at the given element triple.

    A nonzero value certifies that the beta-twisting fails the corresponding
    untwisted identity, hence is neither trivial nor isomorphic to the base.
    """
    report = check_morphism(beta, algebra, algebra, weak=True)
    if not report.passed:
        raise PreconditionError("non-rigidity probe requires a (weak) self-morphism", report)
    x, y, z = triple
    if op == "mu":
        t = algebra.mu.map_outputs(beta)
        return t.contract(t.contract(x, y), z) - t.contract(x, t.contract(y, z))
    if op == "bracket":
        t = algebra.bracket.map_outputs(beta)
        return (t.contract(t.contract(x, y), z)
                + t.contract(t.contract(z, x), y)
                + t.contract(t.contract(y, z), x))
    raise ValueError(f"op must be 'mu' or 'bracket', got {op!r}")


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------

def tensor(a1: HomPoissonAlgebra, a2: HomPoissonAlgebra) -> HomPoissonAlgebra:
    """Tensor product of two commutative algebras.

    The product acts factorwise; the bracket is the derivation-style mix
    {x1,y1} (x) x2 y2 + x1 y1 (x) {x2,y2}.  The product basis is ordered with
    the second factor varying fastest: (i, j) -> i * dim2 + j.
    """
    for name, a in (("first", a1), ("second", a2)):
        if not a.commutative:
            raise PreconditionError(f"tensor product requires commutative factors; {name} factor is not flagged commutative")
        rep = check_commutative(a)
        if not rep.passed:
            raise PreconditionError(f"tensor product factor claims commutativity but fails it ({name})", rep)
    d1, d2 = a1.dim, a2.dim
    dim = d1 * d2
    idx = lambda i, j: i * d2 + j

    basis = tuple(f"{b1}⊗{b2}" for b1 in a1.basis for b2 in a2.basis)

    alpha_rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(d1):
        for k in range(d1):
            e1 = a1.alpha.entry(i, k)
            if e1 == 0:
                continue
            for j in range(d2):
                for l in range(d2):
                    e2 = a2.alpha.entry(j, l)
                    if e2 != 0:
                        alpha_rows[idx(i, j)][idx(k, l)] = e1 * e2
    alpha = LinearMap(tuple(tuple(r) for r in alpha_rows))

    mu_entries: dict = {}
    for (i, k, p), q1 in a1.mu.items():
        for (j, l, r), q2 in a2.mu.items():
            key = (idx(i, j), idx(k, l), idx(p, r))
            mu_entries[key] = mu_entries.get(key, Fraction(0)) + q1 * q2

    br_entries: dict = {}
    for (i, k, p), qb in a1.bracket.items():
        for (j, l, r), qm in a2.mu.items():
            key = (idx(i, j), idx(k, l), idx(p, r))
            br_entries[key] = br_entries.get(key, Fraction(0)) + qb * qm
    for (i, k, p), qm in a1.mu.items():
        for (j, l, r), qb in a2.bracket.items():
            key = (idx(i, j), idx(k, l), idx(p, r))
            br_entries[key] = br_entries.get(key, Fraction(0)) + qm * qb

    return HomPoissonAlgebra(
        basis=basis,
        bracket=Trilinear(dim, br_entries),
        mu=Trilinear(dim, mu_entries),
        alpha=alpha,
        commutative=True,
    )


# ---------------------------------------------------------------------------
# Polarization / depolarization
# ---------------------------------------------------------------------------

def polarize(algebra: HomAlgebra) -> HomPoissonAlgebra:
    """Split one product into its antisymmetric and symmetric halves."""
    mu_op = algebra.mu.op()
    return HomPoissonAlgebra(
        basis=algebra.basis,
        bracket=(algebra.mu - mu_op).scale(_HALF),
        mu=(algebra.mu + mu_op).scale(_HALF),
        alpha=algebra.alpha,
        commutative=True,
    )


def depolarize(algebra: HomPoissonAlgebra) -> HomAlgebra:
    """Recombine bracket and product into the single product bracket + product."""
    return HomAlgebra(
        basis=algebra.basis,
        mu=algebra.bracket + algebra.mu,
        alpha=algebra.alpha,
    )


def check_admissible(algebra) -> CheckReport:
    """Is the single product's twisted associator the prescribed 1/3-combination?

    Passing is equivalent to the polarization being a full bracket/product
    structure satisfying the whole identity suite.
    """
    mu = algebra.mu
    cols = alpha_columns(algebra)

    def residual(i, j, k):
        return sparse_sub(associator_sparse(mu, cols, i, j, k),
                          admissibility_rhs_sparse(mu, cols, i, j, k))

    return _sweep_triples(algebra.dim, residual, "admissible")


def check_hom_flexible(algebra) -> CheckReport:
    """as(x,y,z) + as(z,y,x) = 0 on all basis triples."""
    mu = algebra.mu
    cols = alpha_columns(algebra)

    def residual(i, j, k):
        return sparse_add(associator_sparse(mu, cols, i, j, k),
                          associator_sparse(mu, cols, k, j, i))

    return _sweep_triples(algebra.dim, residual, "hom-flexible")
