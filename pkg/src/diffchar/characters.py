"""Differential characters: pairs (curvature, lift) with exact arithmetic.

A degree-k character is a closed rational k-cochain (the curvature) together
with a rational (k-1)-cochain lift whose failure to trivialize the curvature
is an integer cocycle.  Evaluation on cycles lands in Q/Z, represented as
Fractions in [0,1).  Degrees k <= 0 degenerate to integral cohomology
classes carried by an integer cocycle.
"""

from __future__ import annotations

from fractions import Fraction

from diffchar.exact_linalg import solve_integer, solve_rational
from diffchar.simplicial import Chain
from diffchar.cochain import (
    Cochain,
    coboundary,
    coboundary_matrix,
    has_integral_periods,
    is_closed,
    pair,
    pullback as pullback_cochain,
    zero_cochain,
)


class NotClosed(ValueError):
    """A would-be curvature has nonzero coboundary."""


class NotIntegrallyCompatible(ValueError):
    """curvature - d(lift) is not an integer cochain."""


class NotACycle(ValueError):
    """Characters only evaluate on cycles."""


class NoTrivialization(ValueError):
    """The character class is nonzero, so no global trivialization exists."""


class NotIntegralPeriods(ValueError):
    """A closed cochain pairs non-integrally with some cycle."""


class NotFlat(ValueError):
    """The operation needs a character with vanishing curvature."""


class NotTorsion(ValueError):
    """The cycle's homology class has infinite order."""


class NotCocycle(ValueError):
    """Integer cocycle data required."""


def _mod1(x):
    return Fraction(x) % 1


class IntegralClass:
    """An integral cohomology class, stored as coordinates plus a representative."""

    __slots__ = ("complex", "degree", "representative", "free", "torsion_residues")

    def __init__(self, complex, degree, representative):
        if not representative.is_integer_valued():
            raise NotCocycle("class representative must be an integer cochain")
        rep_vec = [int(x) for x in representative.to_vector()]
        coh = complex.cohomology(degree)
        coords = coh.presentation.kernel_coordinates(rep_vec)
        if coords is None:
            raise NotCocycle("class representative must be a cocycle")
        free, tors = coh.coordinates(rep_vec)
        self.complex = complex
        self.degree = degree
        self.representative = representative
        self.free = free
        self.torsion_residues = tors

    def is_zero(self):
        return all(x == 0 for x in self.free) and all(
            x == 0 for x in self.torsion_residues
        )

    def __eq__(self, other):
        return (
            isinstance(other, IntegralClass)
            and self.complex == other.complex
            and self.degree == other.degree
            and self.free == other.free
            and self.torsion_residues == other.torsion_residues
        )

    def __repr__(self):
        return (
            f"IntegralClass(deg {self.degree}, free {list(self.free)}, "
            f"torsion {list(self.torsion_residues)})"
        )


class FlatClass:
    """A cohomology class with circle-group coefficients, degree d.

    Carried by a rational d-cochain whose coboundary is integral; two
    cochains represent the same class when their difference has integral
    periods.
    """

    __slots__ = ("complex", "degree", "cochain")

    def __init__(self, cochain):
        if not coboundary(cochain).is_integer_valued():
            raise NotCocycle("flat class needs an integral coboundary")
        self.complex = cochain.complex
        self.degree = cochain.degree
        self.cochain = cochain

    def __eq__(self, other):
        return (
            isinstance(other, FlatClass)
            and self.complex == other.complex
            and self.degree == other.degree
            and has_integral_periods(self.cochain - other.cochain)
        )

    def is_zero(self):
        return has_integral_periods(self.cochain)

    def __add__(self, other):
        return FlatClass(self.cochain + other.cochain)

    def __neg__(self):
        return FlatClass(-self.cochain)

    def __sub__(self, other):
        return FlatClass(self.cochain - other.cochain)

    def evaluate(self, cycle):
        if not cycle.is_cycle():
            raise NotACycle("flat classes evaluate on cycles only")
        return _mod1(pair(self.cochain, cycle))

    def __repr__(self):
        return f"FlatClass(deg {self.degree}, {self.cochain!r})"


class DiffChar:
    """Differential character of degree k >= 1."""

    __slots__ = ("complex", "degree", "curvature", "lift", "mu")

    def __init__(self, curvature, lift):
        if curvature.complex != lift.complex:
            raise ValueError("curvature and lift on different complexes")
        if lift.degree != curvature.degree - 1:
            raise ValueError("lift degree must be one below curvature degree")
        if curvature.degree < 1:
            raise ValueError("degree must be at least 1; use LowDegreeChar below")
        if not is_closed(curvature):
            raise NotClosed("curvature must be a closed cochain")
        mu = curvature - coboundary(lift)
        if not mu.is_integer_valued():
            raise NotIntegrallyCompatible(
                "curvature - d(lift) must be an integer cocycle"
            )
        self.complex = curvature.complex
        self.degree = curvature.degree
        self.curvature = curvature
        self.lift = lift
        self.mu = mu.as_integer()

    def __add__(self, other):
        self._check_compatible(other)
        return DiffChar(self.curvature + other.curvature, self.lift + other.lift)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DiffChar(-self.curvature, -self.lift)

    def scale(self, n):
        if not isinstance(n, int):
            raise TypeError("characters scale by integers")
        return DiffChar(self.curvature.scale(n), self.lift.scale(n))

    def _check_compatible(self, other):
        if self.complex != other.complex or self.degree != other.degree:
            raise ValueError("characters on different complexes or degrees")

    def __eq__(self, other):
        """Identical curvature and lift difference with integral periods."""
        if not isinstance(other, DiffChar):
            return NotImplemented
        if self.complex != other.complex or self.degree != other.degree:
            return False
        if self.curvature != other.curvature:
            return False
        return has_integral_periods(self.lift - other.lift)

    def is_zero(self):
        return self.curvature.is_zero() and has_integral_periods(self.lift)

    def __repr__(self):
        return f"DiffChar(deg {self.degree} on {self.complex!r})"


class LowDegreeChar:
    """Character of degree <= 0: an integral cohomology cocycle, c = identity."""

    __slots__ = ("complex", "degree", "cocycle")

    def __init__(self, complex, degree, cocycle=None):
        if degree > 0:
            raise ValueError("LowDegreeChar is for degrees <= 0")
        if degree < 0 or cocycle is None:
            cocycle = zero_cochain(complex, degree, "Z")
        if cocycle.degree != degree or cocycle.complex != complex:
            raise ValueError("cocycle degree or complex mismatch")
        if not cocycle.is_integer_valued():
            raise NotCocycle("low-degree characters carry integer cocycles")
        if not coboundary(cocycle).is_zero():
            raise NotCocycle("low-degree characters carry cocycles")
        self.complex = complex
        self.degree = degree
        self.cocycle = cocycle.as_integer()

    def __eq__(self, other):
        # In degree 0 there are no coboundaries, so cocycle equality is
        # class equality; below degree 0 everything is zero.
        return (
            isinstance(other, LowDegreeChar)
            and self.complex == other.complex
            and self.degree == other.degree
            and self.cocycle == other.cocycle
        )

    def __add__(self, other):
        if self.complex != other.complex or self.degree != other.degree:
            raise ValueError("characters on different complexes or degrees")
        return LowDegreeChar(self.complex, self.degree, self.cocycle + other.cocycle)

    def __neg__(self):
        return LowDegreeChar(self.complex, self.degree, -self.cocycle)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return self.cocycle.is_zero()

    def char_class(self):
        return IntegralClass(self.complex, self.degree, self.cocycle)

    def __repr__(self):
        return f"LowDegreeChar(deg {self.degree}, {self.cocycle!r})"


def new_character(curvature, lift):
    """Validated constructor; see DiffChar."""
    return DiffChar(curvature, lift)


def evaluate(h, cycle):
    """Value of the character on a cycle, as a Fraction in [0,1)."""
    if cycle.degree != h.degree - 1:
        raise ValueError(
            f"cycle degree {cycle.degree} does not match character degree {h.degree}"
        )
    if not cycle.is_cycle():
        raise NotACycle("characters evaluate on cycles only")
    return _mod1(pair(h.lift, cycle))


def char_class(h):
    """The integral cohomology class obstructing topological triviality."""
    if isinstance(h, LowDegreeChar):
        return h.char_class()
    return IntegralClass(h.complex, h.degree, h.mu)


def iota(eta):
    """Characters from cochains: (d eta, eta); kills closed integral cochains."""
    return DiffChar(coboundary(eta), eta)


def flat_character(u):
    """Inclusion of circle-coefficient classes as flat characters."""
    if isinstance(u, FlatClass):
        u = u.cochain
    return DiffChar(zero_cochain(u.complex, u.degree + 1, "Q"), u)


j = flat_character


def flat_holonomy_class(h):
    """The circle-coefficient class of a flat character."""
    if not h.curvature.is_zero():
        raise NotFlat("character has nonzero curvature")
    return FlatClass(h.lift)


def trivialization(h):
    """A cochain eta with iota(eta) = h, when the character class vanishes."""
    k = h.degree
    if not char_class(h).is_zero():
        raise NoTrivialization("character class is nonzero")
    delta = coboundary_matrix(h.complex, k - 1)
    t_vec = solve_integer(delta, [int(x) for x in h.mu.to_vector()])
    assert t_vec is not None, "zero class must be an integral coboundary"
    t = Cochain.from_vector(h.complex, k - 1, t_vec, "Z")
    return h.lift + t


def from_curvature(omega):
    """A character with the given curvature; right inverse of taking curvature.

    The integral cocycle in the class of the curvature comes from composing
    with the projection onto cycles, which is integer valued exactly when the
    periods are integral; the lift solves the remaining rational coboundary
    equation.
    """
    if not is_closed(omega):
        raise NotClosed("curvature must be closed")
    if not has_integral_periods(omega):
        raise NotIntegralPeriods("curvature must have integral periods")
    K = omega.complex
    k = omega.degree
    proj = K.splitting(k).projection
    vec = omega.to_vector()
    mu_vec = [
        sum(proj.data[i][j] * vec[i] for i in range(proj.rows))
        for j in range(proj.cols)
    ]
    mu = Cochain.from_vector(K, k, mu_vec, "Q").as_integer()
    rhs = [a - b for a, b in zip(vec, mu.to_vector())]
    lift_vec = solve_rational(coboundary_matrix(K, k - 1), rhs)
    assert lift_vec is not None, "cochain vanishing on cycles is a coboundary"
    lift = Cochain.from_vector(K, k - 1, lift_vec, "Q")
    return DiffChar(omega, lift)


def pullback(phi, h):
    """Character pullback along a simplicial map."""
    if isinstance(h, LowDegreeChar):
        if h.complex != phi.target:
            raise ValueError("character does not live on the map's target")
        return LowDegreeChar(
            phi.source, h.degree, pullback_cochain(phi, h.cocycle)
        )
    if h.complex != phi.target:
        raise ValueError("character does not live on the map's target")
    return DiffChar(
        pullback_cochain(phi, h.curvature), pullback_cochain(phi, h.lift)
    )


def evaluate_torsion(h, cycle):
    """Evaluation on a torsion cycle through a filling of a multiple.

    For N minimal with N*z a boundary, pick dx = N*z and return
    (curvature(x) - mu(x)) / N mod 1.  Must agree with evaluate on the nose.
    """
    if cycle.degree != h.degree - 1:
        raise ValueError("cycle degree does not match character degree")
    if not cycle.is_cycle():
        raise NotACycle("torsion evaluation needs a cycle")
    K = h.complex
    k = h.degree
    hom = K.homology(k - 1)
    order = hom.class_order(cycle.to_vector())
    if order == 0:
        raise NotTorsion("cycle class has infinite order")
    scaled = [order * x for x in cycle.to_vector()]
    x_vec = solve_integer(K.boundary_snf(k), scaled)
    assert x_vec is not None, "order * cycle must bound"
    x = K.chain_from_vector(k, x_vec)
    return _mod1(Fraction(pair(h.curvature, x) - pair(h.mu, x), order))


def integral_decomposition(a):
    """Split a cochain with integral periods as (integer part, potential).

    Returns (m, r) with a = m + dr, m integer valued.  Raises
    NotIntegralPeriods when no such splitting exists.
    """
    if not has_integral_periods(a):
        raise NotIntegralPeriods("cochain pairs non-integrally with a cycle")
    K = a.complex
    proj = K.splitting(a.degree).projection
    vec = a.to_vector()
    m_vec = [
        sum(proj.data[i][j] * vec[i] for i in range(proj.rows))
        for j in range(proj.cols)
    ]
    m = Cochain.from_vector(K, a.degree, m_vec, "Q").as_integer()
    rhs = [x - y for x, y in zip(vec, m.to_vector())]
    r_vec = solve_rational(coboundary_matrix(K, a.degree - 1), rhs)
    assert r_vec is not None
    r = Cochain.from_vector(K, a.degree - 1, r_vec, "Q")
    return m, r


def fractional_torsion_class(K, degree, index=0, numerator=1):
    """A flat class pairing to numerator/d with the index-th torsion generator.

    Built from the adapted coordinate functional composed with the projection
    onto cycles; its coboundary is integral because boundaries have adapted
    coordinates divisible by the torsion order.
    """
    hom = K.homology(degree)
    if index >= len(hom.torsion):
        raise IndexError("no such torsion factor")
    d = hom.torsion[index]
    pres = hom.presentation
    pos = pres.torsion_positions()[index]
    proj = K.splitting(degree).projection
    basis = K.simplices(degree)
    values = {}
    for jcol, s in enumerate(basis):
        col = [proj.data[i][jcol] for i in range(proj.rows)]
        w = pres.adapted_coordinates(col)
        if w[pos]:
            values[s] = Fraction(numerator * w[pos], d)
    return FlatClass(Cochain(K, degree, values, "Q"))


def class_representative_characters(K, k):
    """One character per generator of the degree-k integral cohomology."""
    coh = K.cohomology(k)
    return [
        DiffChar(Cochain.from_vector(K, k, vec, "Q"), zero_cochain(K, k - 1))
        for vec in coh.generators
    ]


def random_character(K, k, rng, denom=6, span=4):
    """Deterministic pseudo-random character: random class plus random lift."""
    coh = K.cohomology(k)
    mu_vec = [0] * len(K.simplices(k))
    for gen in coh.generators:
        c = rng.randint(-span, span)
        if c:
            mu_vec = [a + c * b for a, b in zip(mu_vec, gen)]
    below = K.simplices(k - 1)
    if below:
        t_vec = [rng.randint(-span, span) for _ in below]
        t = Cochain.from_vector(K, k - 1, t_vec, "Z")
        mu_vec = [a + int(b) for a, b in zip(mu_vec, coboundary(t).to_vector())]
    mu = Cochain.from_vector(K, k, mu_vec, "Q")
    lift_vals = [
        Fraction(rng.randint(-2 * denom, 2 * denom), rng.randint(1, denom))
        for _ in below
    ]
    lift = Cochain.from_vector(K, k - 1, lift_vals, "Q")
    return DiffChar(mu + coboundary(lift), lift)


def random_flat_character(K, k, rng, denom=6, span=3):
    """Random flat character: torsion duals plus integers plus a coboundary."""
    below = K.simplices(k - 1)
    lift = zero_cochain(K, k - 1, "Q")
    hom = K.homology(k - 1)
    for idx, d in enumerate(hom.torsion):
        c = rng.randint(0, d - 1)
        if c:
            lift = lift + fractional_torsion_class(K, k - 1, idx, c).cochain
    if below:
        ints = Cochain.from_vector(
            K, k - 1, [rng.randint(-span, span) for _ in below], "Z"
        )
        lift = lift + ints
    if k - 2 >= 0:
        lower = K.simplices(k - 2)
        if lower:
            r = Cochain.from_vector(
                K,
                k - 2,
                [Fraction(rng.randint(-denom, denom), rng.randint(1, denom)) for _ in lower],
                "Q",
            )
            lift = lift + coboundary(r)
    return flat_character(lift)
