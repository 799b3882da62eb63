"""Relative differential characters on the mapping cone of a simplicial map.

A degree-k relative character for phi: A -> X is a quadruple: a curvature on
X, a covariant cochain on A one degree down, and a pair of lifts (on X and
A) whose failure to trivialize the pair is integral.  Evaluation happens on
cone cycles and lands in Q/Z.
"""

from __future__ import annotations

from fractions import Fraction

from diffchar.exact_linalg import kernel_basis, IntMatrix, solve_integer
from diffchar.simplicial import identity_map, mapping_cone
from diffchar.cochain import (
    Cochain,
    coboundary,
    coboundary_matrix,
    pair,
    pullback as pullback_cochain,
    zero_cochain,
)
from diffchar.characters import (
    DiffChar,
    IntegralClass,
    LowDegreeChar,
    NotIntegrallyCompatible,
    _mod1,
    integral_decomposition,
)


class NotConeClosed(ValueError):
    """The pair (curvature, cov) fails the cone cocycle condition."""


class NotAConeCycle(ValueError):
    """Relative characters only evaluate on cone cycles."""


class NoSection(ValueError):
    """The character class restricts nontrivially, so no section exists.

    Carries the obstruction as `witness`: the pulled back integral class.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class KernelConditionFailed(ValueError):
    """descend_kernel needs the underlying absolute character to vanish."""


class RelChar:
    """Relative differential character of degree k >= 1."""

    __slots__ = (
        "cone",
        "phi",
        "degree",
        "curvature",
        "cov",
        "lift_x",
        "lift_a",
        "mu_x",
        "mu_a",
    )

    def __init__(self, cone, curvature, cov, lift_x, lift_a):
        phi = cone.phi
        X, A = phi.target, phi.source
        k = curvature.degree
        if k < 1:
            raise ValueError("relative characters start in degree 1")
        if curvature.complex != X or cov.complex != A:
            raise ValueError("curvature lives on X and the covariant part on A")
        if cov.degree != k - 1:
            raise ValueError("covariant part must sit one degree down")
        if lift_x.complex != X or lift_x.degree != k - 1:
            raise ValueError("X lift has the wrong complex or degree")
        if lift_a.degree != k - 2 or (k - 2 >= 0 and lift_a.complex != A):
            raise ValueError("A lift has the wrong complex or degree")
        if not coboundary(curvature).is_zero():
            raise NotConeClosed("curvature must be closed")
        if pullback_cochain(phi, curvature) != coboundary(cov):
            raise NotConeClosed("curvature must pull back to the coboundary of cov")
        mu_x = curvature - coboundary(lift_x)
        mu_a = cov - pullback_cochain(phi, lift_x) + coboundary(lift_a)
        if not (mu_x.is_integer_valued() and mu_a.is_integer_valued()):
            raise NotIntegrallyCompatible(
                "pair minus cone coboundary of the lifts must be integral"
            )
        self.cone = cone
        self.phi = phi
        self.degree = k
        self.curvature = curvature
        self.cov = cov
        self.lift_x = lift_x
        self.lift_a = lift_a
        self.mu_x = mu_x.as_integer()
        self.mu_a = mu_a.as_integer()

    def _check_compatible(self, other):
        if self.cone != other.cone or self.degree != other.degree:
            raise ValueError("relative characters do not match")

    def __add__(self, other):
        self._check_compatible(other)
        return RelChar(
            self.cone,
            self.curvature + other.curvature,
            self.cov + other.cov,
            self.lift_x + other.lift_x,
            self.lift_a + other.lift_a,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RelChar(self.cone, -self.curvature, -self.cov, -self.lift_x, -self.lift_a)

    def scale(self, n):
        if not isinstance(n, int):
            raise TypeError("relative characters scale by integers")
        return RelChar(
            self.cone,
            self.curvature.scale(n),
            self.cov.scale(n),
            self.lift_x.scale(n),
            self.lift_a.scale(n),
        )

    def _lift_pair_on(self, cone_chain):
        return pair(self.lift_x, cone_chain.x_part) + pair(self.lift_a, cone_chain.a_part)

    def __eq__(self, other):
        """Identical pair (curvature, cov) and integral lift difference."""
        if not isinstance(other, RelChar):
            return NotImplemented
        if self.cone != other.cone or self.degree != other.degree:
            return False
        if self.curvature != other.curvature or self.cov != other.cov:
            return False
        split = self.cone.splitting(self.degree - 1)
        dax = self.lift_x - other.lift_x
        daa = self.lift_a - other.lift_a
        for vec in split.cycle_basis:
            z = self.cone.chain_from_vector(self.degree - 1, vec)
            val = pair(dax, z.x_part) + pair(daa, z.a_part)
            if Fraction(val).denominator != 1:
                return False
        return True

    def is_zero(self):
        if not (self.curvature.is_zero() and self.cov.is_zero()):
            return False
        split = self.cone.splitting(self.degree - 1)
        for vec in split.cycle_basis:
            z = self.cone.chain_from_vector(self.degree - 1, vec)
            if Fraction(self._lift_pair_on(z)).denominator != 1:
                return False
        return True

    def __repr__(self):
        return f"RelChar(deg {self.degree} for {self.phi!r})"


def new_rel_character(cone, curvature, cov, lift_x, lift_a):
    """Validated constructor; see RelChar."""
    return RelChar(cone, curvature, cov, lift_x, lift_a)


def evaluate_rel(f, cone_chain):
    """Value on a cone cycle, as a Fraction in [0,1)."""
    if cone_chain.cone != f.cone:
        raise ValueError("chain lives on a different mapping cone")
    if cone_chain.degree != f.degree - 1:
        raise ValueError("cone chain degree does not match character degree")
    if not cone_chain.is_cycle():
        raise NotAConeCycle("relative characters evaluate on cone cycles only")
    return _mod1(f._lift_pair_on(cone_chain))


def incl_flat(g, cone):
    """Relative characters from absolute ones a degree down.

    Sends a degree (k-1) character on A to the degree k relative character
    with zero X data, covariant part minus the curvature, and A lift the
    lift of g.  Degree-0 characters on A go to zero in degree 1.
    """
    phi = cone.phi
    A, X = phi.source, phi.target
    if isinstance(g, LowDegreeChar):
        if g.complex != A or g.degree != 0:
            raise ValueError("expected a degree-0 character on A")
        return RelChar(
            cone,
            zero_cochain(X, 1, "Q"),
            zero_cochain(A, 0, "Q"),
            zero_cochain(X, 0, "Q"),
            zero_cochain(A, -1, "Q"),
        )
    if g.complex != A:
        raise ValueError("character does not live on the cone's source")
    k = g.degree + 1
    return RelChar(
        cone,
        zero_cochain(X, k, "Q"),
        -g.curvature,
        zero_cochain(X, k - 1, "Q"),
        g.lift,
    )


def project(f):
    """Forget the relative data: the absolute character (curvature, X lift)."""
    return DiffChar(f.curvature, f.lift_x)


def cov_inverse(theta, cone=None):
    """Relative character on the cone of the identity with given covariant part.

    Any rational cochain theta on X yields a valid quadruple
    (d theta, theta, theta, 0); its projection is iota(theta).
    """
    X = theta.complex
    if cone is None:
        cone = mapping_cone(identity_map(X))
    else:
        if cone.phi.source != X or cone.phi.target != X or cone.phi != identity_map(X):
            raise ValueError("cone must be the mapping cone of the identity on X")
    return RelChar(
        cone,
        coboundary(theta),
        theta,
        theta,
        zero_cochain(X, theta.degree - 1, "Q"),
    )


def find_section(h, cone):
    """Lift an absolute character to a relative one when the class allows it.

    Solves for an integer cochain t on A with dt the pulled back integral
    cocycle; the covariant part is the pulled back lift plus t.  Raises
    NoSection carrying the obstruction class when no t exists.  In degree 1
    the covariant part is normalized to [0,1) at the least vertex of each
    component of A.
    """
    phi = cone.phi
    A, X = phi.source, phi.target
    if h.complex != X:
        raise ValueError("character does not live on the cone's target")
    k = h.degree
    pulled_mu = pullback_cochain(phi, h.mu)
    t_vec = solve_integer(
        coboundary_matrix(A, k - 1), [int(x) for x in pulled_mu.to_vector()]
    )
    if t_vec is None:
        raise NoSection(
            "character class pulls back nontrivially",
            IntegralClass(A, k, pulled_mu),
        )
    t = Cochain.from_vector(A, k - 1, t_vec, "Z")
    theta = pullback_cochain(phi, h.lift) + t
    if k == 1:
        shift = {}
        for comp in A.components():
            v = (min(comp),)
            base = theta.value(v)
            n = base - (base % 1)
            if n != 0:
                for u in comp:
                    shift[(u,)] = -n
        if shift:
            theta = theta + Cochain(A, 0, shift, "Z")
    return RelChar(cone, h.curvature, theta, h.lift, zero_cochain(A, k - 2, "Q"))


def descend_kernel(f):
    """Express a relative character with vanishing projection through A.

    Given f with project(f) the zero character, produce g on A a degree down
    with incl_flat(g) == f.  In degree 1 only the zero character descends.
    """
    cone = f.cone
    phi = f.phi
    A = phi.source
    k = f.degree
    absolute = project(f)
    if not absolute.is_zero():
        raise KernelConditionFailed("projection to X is a nonzero character")
    if k == 1:
        if f.is_zero():
            return LowDegreeChar(A, 0)
        raise KernelConditionFailed(
            "in degree 1 only the zero relative character descends"
        )
    s_a = integral_decomposition(f.lift_x)[1]
    b_prime = f.lift_a - pullback_cochain(phi, s_a)
    return DiffChar(-f.cov, b_prime)


def flat_class_pulled_back(u, phi):
    """Whether a circle-coefficient class on A is pulled back from X.

    Divisibility of the circle group turns this into a pairing condition:
    the class must kill every homology class of A that dies in X.  The
    kernel lattice comes from pushing the homology generators of A forward
    and solving modulo the torsion orders of X.
    """
    A, X = phi.source, phi.target
    d = u.degree
    if u.complex != A:
        raise ValueError("class does not live on the map's source")
    hom_a = A.homology(d)
    gens = [A.chain_from_vector(d, vec) for vec in hom_a.generators]
    if not gens:
        return True
    for vec in _pushforward_kernel_lattice(phi, d, gens):
        total = Fraction(0)
        for c, g in zip(vec, gens):
            if c:
                total += c * pair(u.cochain, g)
        if total % 1 != 0:
            return False
    return True


def _pushforward_kernel_lattice(phi, degree, gens):
    """Generators of the coefficient lattice killed by the pushforward.

    A vector n belongs when the class sum(n_i * gens_i) dies in the target:
    free coordinates of the pushed generators must cancel exactly, torsion
    coordinates modulo their orders.  Auxiliary columns absorb the moduli.
    """
    X = phi.target
    pres_x = X.homology(degree).presentation
    tors_pos = pres_x.torsion_positions()
    tors = pres_x.torsion
    columns = [
        pres_x.adapted_coordinates(phi.push_chain(g).to_vector()) for g in gens
    ]
    rows = []
    for i in pres_x.free_positions():
        rows.append([col[i] for col in columns] + [0] * len(tors))
    for idx, ti in enumerate(tors_pos):
        rows.append(
            [col[ti] for col in columns]
            + [tors[idx] if jj == idx else 0 for jj in range(len(tors))]
        )
    matrix = IntMatrix(len(rows), len(gens) + len(tors), rows)
    return [vec[: len(gens)] for vec in kernel_basis(matrix)]


def pushforward_injective(phi, degree):
    """Whether the induced map on degree-d homology has trivial kernel."""
    A = phi.source
    hom_a = A.homology(degree)
    gens = [A.chain_from_vector(degree, vec) for vec in hom_a.generators]
    if not gens:
        return True
    pres_a = hom_a.presentation
    for vec in _pushforward_kernel_lattice(phi, degree, gens):
        combo = [0] * len(A.simplices(degree))
        for c, g in zip(vec, gens):
            if c:
                for i, x in enumerate(g.to_vector()):
                    combo[i] += c * x
        if not pres_a.is_zero(combo):
            return False
    return True
