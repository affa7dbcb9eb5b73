"""Built-in example algebras and their parametrized twisting maps.

Every entry is built from structure constants spelled out here and passes its
advertised checks at build time (verified in the test suite and by the
``catalog`` CLI subcommand).
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    HomAlgebra,
    HomPoissonAlgebra,
    Witness,
    check_antisymmetry,
    check_hom_associative,
    check_hom_jacobi,
    check_hom_poisson,
    check_multiplicative,
    make_report,
)
from .errors import HomPoissonError
from .linalg import LinearMap, Trilinear, rat
from .poisson_poly import (
    LiePoissonStructure,
    Substitution,
    SymplecticStructure,
    symplectic_bracket,
)
from .poly import Polynomial

HEISENBERG_BASIS = ("X", "Y", "Z")

# [X,Y] = Z, Z central
HEISENBERG_BRACKET = {(0, 1, 2): 1, (1, 0, 2): -1}

SL2_BASIS = ("e", "f", "h")

# [h,e] = 2e, [h,f] = -2f, [e,f] = h
SL2_BRACKET = {
    (2, 0, 0): 2, (0, 2, 0): -2,
    (2, 1, 1): -2, (1, 2, 1): 2,
    (0, 1, 2): 1, (1, 0, 2): -1,
}


def heisenberg_p31(zeta=1) -> HomPoissonAlgebra:
    """Heisenberg bracket with commutative product XY = YX = zeta Z."""
    z = rat(zeta)
    mu = {(0, 1, 2): z, (1, 0, 2): z} if z != 0 else {}
    return HomPoissonAlgebra(
        basis=HEISENBERG_BASIS,
        bracket=Trilinear(3, HEISENBERG_BRACKET),
        mu=Trilinear(3, mu),
        alpha=LinearMap.identity(3),
        commutative=True,
    )


def heisenberg_p32() -> HomPoissonAlgebra:
    """Heisenberg bracket with commutative product X^2 = Z."""
    return HomPoissonAlgebra(
        basis=HEISENBERG_BASIS,
        bracket=Trilinear(3, HEISENBERG_BRACKET),
        mu=Trilinear(3, {(0, 0, 2): 1}),
        alpha=LinearMap.identity(3),
        commutative=True,
    )


def heisenberg_morphism(a11, a12, a21, a22, a31=0, a32=0) -> LinearMap:
    """The general bracket-morphism of the Heisenberg structure.

    X and Y map into the (X, Y, Z)-span through the six parameters; Z is
    forced onto b Z with b the determinant of the 2x2 (X, Y)-block.
    """
    a11, a12, a21, a22, a31, a32 = (rat(v) for v in (a11, a12, a21, a22, a31, a32))
    b = a11 * a22 - a21 * a12
    return LinearMap((
        (a11, a12, Fraction(0)),
        (a21, a22, Fraction(0)),
        (a31, a32, b),
    ))


def matrix_algebra(n: int = 2) -> HomAlgebra:
    """Full matrix algebra on the unit-matrix basis, identity twisting map."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    basis = tuple(f"E{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))
    idx = lambda i, j: i * n + j  # 0-based
    entries = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                entries[(idx(a, b), idx(b, c), idx(a, c))] = 1
    return HomAlgebra(basis=basis, mu=Trilinear(n * n, entries), alpha=LinearMap.identity(n * n))


def conjugation_morphism(n: int = 2, top=Fraction(1, 2)) -> LinearMap:
    """Conjugation by diag(top, 1, ..., 1) as a map on the unit-matrix basis."""
    top = rat(top)
    d = [top] + [Fraction(1)] * (n - 1)
    diag = []
    for i in range(n):
        for j in range(n):
            diag.append(d[i] / d[j])
    return LinearMap.diagonal(diag)


def sl2_linear_poisson() -> LiePoissonStructure:
    return LiePoissonStructure(SL2_BASIS, SL2_BRACKET)


def heisenberg_linear_poisson() -> LiePoissonStructure:
    return LiePoissonStructure(HEISENBERG_BASIS, HEISENBERG_BRACKET)


def sl2_scaling(lam) -> Substitution:
    """e -> lam e, f -> lam^-1 f, h -> h; a bracket morphism for lam != 0."""
    lam = rat(lam)
    if lam == 0:
        raise ValueError("scaling parameter must be nonzero")
    e, f, h = Polynomial.variables(SL2_BASIS)
    return Substitution({"e": lam * e, "f": (1 / lam) * f, "h": h})


def free_poly_shift() -> Substitution:
    """X -> 1 + X on the one-variable polynomial ring."""
    x = Polynomial.var(("X",), "X")
    return Substitution({"X": x + 1})


def symplectic_space(n: int = 1) -> SymplecticStructure:
    return SymplecticStructure(n)


CATALOG = {
    "heisenberg-p31": (heisenberg_p31, {"zeta": Fraction(1)}),
    "heisenberg-p32": (heisenberg_p32, {}),
    "matrix": (matrix_algebra, {"n": 2}),
    "sl2-linear-poisson": (sl2_linear_poisson, {}),
    "symplectic": (symplectic_space, {"n": 1}),
    "free-poly": (free_poly_shift, {}),
}


def build_catalog(name: str, params: dict | None = None):
    """Build a named catalog entry; unknown names and parameters are errors."""
    if name not in CATALOG:
        known = ", ".join(sorted(CATALOG))
        raise HomPoissonError(f"unknown catalog entry {name!r} (known: {known})")
    builder, defaults = CATALOG[name]
    merged = dict(defaults)
    for key, value in (params or {}).items():
        if key not in defaults:
            raise HomPoissonError(f"catalog entry {name!r} takes no parameter {key!r}")
        merged[key] = value
    if "n" in merged:
        n = merged["n"]
        if isinstance(n, Fraction):
            if n.denominator != 1:
                raise HomPoissonError(f"parameter n must be an integer, got {n}")
            n = int(n)
        merged["n"] = int(n)
    return builder(**merged)


def entry_reports(name: str, obj) -> list:
    """The checks a built catalog entry advertises, as reports."""
    if isinstance(obj, HomPoissonAlgebra):
        return [check_hom_poisson(obj), check_multiplicative(obj)]
    if isinstance(obj, HomAlgebra):
        return [check_hom_associative(obj)]
    if isinstance(obj, LiePoissonStructure):
        probe = HomPoissonAlgebra(
            basis=obj.generators,
            bracket=obj.constants,
            mu=Trilinear.zero(obj.n),
            alpha=LinearMap.identity(obj.n),
        )
        return [check_antisymmetry(probe), check_hom_jacobi(probe)]
    if isinstance(obj, SymplecticStructure):
        return [_canonical_relations_report(obj)]
    if isinstance(obj, Substitution):
        return [_substitution_report(name, obj)]
    raise HomPoissonError(f"no self-check known for catalog entry {name!r}")


def _canonical_relations_report(struct: SymplecticStructure):
    """{x_i, x_{j+n}} = delta_ij and same-half brackets vanish."""
    n = struct.n
    gens = struct.generators
    var = lambda i: Polynomial.var(gens, gens[i])
    witnesses = []
    for i in range(n):
        for j in range(n):
            checks = (
                ((i, j + n), symplectic_bracket(struct, var(i), var(j + n)) - (1 if i == j else 0)),
                ((i, j), symplectic_bracket(struct, var(i), var(j))),
                ((i + n, j + n), symplectic_bracket(struct, var(i + n), var(j + n))),
            )
            for indices, residual in checks:
                if not residual.is_zero():
                    witnesses.append(Witness(indices, residual))
    return make_report("canonical-relations", witnesses)


def _substitution_report(name: str, sub: Substitution):
    """Endomorphism property on sample inputs; for the shift entry, also the
    orbit of the generator under iteration."""
    gens = next(iter(sub.images.values())).generators
    xs = Polynomial.variables(gens)
    f = xs[0] + 1
    g = xs[0] * xs[0] + 2
    witnesses = []
    if sub(f * g) != sub(f) * sub(g):
        witnesses.append(Witness((0,), sub(f * g) - sub(f) * sub(g)))
    if name == "free-poly":
        x = xs[0]
        for k in (1, 2, 3):
            residual = sub.iterate(x, k) - (x + k)
            if not residual.is_zero():
                witnesses.append(Witness((k,), residual))
    return make_report("substitution-endomorphism", witnesses)
