"""Finite simplicial complexes and their integer chain calculus.

Simplices are strictly increasing tuples of vertex indices and complexes are
closed under faces.  The staircase triangulation of a product comes with the
shuffle (Eilenberg-Zilber) and front/back (Alexander-Whitney) chain maps; the
sign conventions are pinned by the mechanized identities in the test suite,
not by transcription.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from diffchar.exact_linalg import (
    IntMatrix,
    smith_normal_form,
    cycle_splitting,
    homology as _homology_engine,
    cohomology as _cohomology_engine,
)


class NotManifold(Exception):
    """The complex is not a pseudomanifold of its dimension."""


class NonOrientable(Exception):
    """No coherent orientation of the top-dimensional simplices exists."""


def _validate_simplex(simplex, num_vertices):
    if len(simplex) == 0:
        raise ValueError("empty simplex")
    for v in simplex:
        if not isinstance(v, int) or v < 0 or v >= num_vertices:
            raise ValueError(f"vertex {v!r} out of range")
    if any(simplex[i] >= simplex[i + 1] for i in range(len(simplex) - 1)):
        raise ValueError(f"simplex {simplex} is not strictly increasing")


class Complex:
    """A finite simplicial complex on vertices 0..num_vertices-1."""

    def __init__(self, num_vertices, simplices, name=""):
        self.num_vertices = num_vertices
        self.name = name
        by_dim = {}
        seen = set()
        stack = []
        for s in simplices:
            s = tuple(s)
            _validate_simplex(s, num_vertices)
            stack.append(s)
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            by_dim.setdefault(len(s) - 1, []).append(s)
            if len(s) > 1:
                for i in range(len(s)):
                    stack.append(s[:i] + s[i + 1 :])
        self._by_dim = {d: tuple(sorted(ss)) for d, ss in sorted(by_dim.items())}
        self._index = {
            s: i for d, ss in self._by_dim.items() for i, s in enumerate(ss)
        }
        self._boundary_cache = {}
        self._snf_cache = {}
        self._splitting_cache = {}
        self._homology_cache = {}
        self._cohomology_cache = {}

    @property
    def dim(self):
        return max(self._by_dim) if self._by_dim else -1

    def simplices(self, n):
        return self._by_dim.get(n, ())

    def all_simplices(self):
        for d in sorted(self._by_dim):
            yield from self._by_dim[d]

    def has_simplex(self, s):
        return tuple(s) in self._index

    def index_of(self, s):
        return self._index[tuple(s)]

    def __eq__(self, other):
        return (
            isinstance(other, Complex)
            and self.num_vertices == other.num_vertices
            and self._by_dim == other._by_dim
        )

    def __repr__(self):
        counts = ",".join(f"{d}:{len(s)}" for d, s in self._by_dim.items())
        label = self.name or "Complex"
        return f"<{label} vertices={self.num_vertices} simplices[{counts}]>"

    def boundary_matrix(self, n):
        """Matrix of the boundary map C_n -> C_{n-1} in the sorted bases."""
        if n not in self._boundary_cache:
            rows = self.simplices(n - 1)
            cols = self.simplices(n)
            row_index = {s: i for i, s in enumerate(rows)}
            data = [[0] * len(cols) for _ in rows]
            for j, s in enumerate(cols):
                for i in range(len(s)):
                    face = s[:i] + s[i + 1 :]
                    if face:
                        data[row_index[face]][j] += -1 if i % 2 else 1
            self._boundary_cache[n] = IntMatrix(len(rows), len(cols), data)
        return self._boundary_cache[n]

    def boundary_snf(self, n):
        if n not in self._snf_cache:
            self._snf_cache[n] = smith_normal_form(self.boundary_matrix(n))
        return self._snf_cache[n]

    def splitting(self, n):
        if n not in self._splitting_cache:
            self._splitting_cache[n] = cycle_splitting(self, n)
        return self._splitting_cache[n]

    def homology(self, n):
        if n not in self._homology_cache:
            self._homology_cache[n] = _homology_engine(self, n)
        return self._homology_cache[n]

    def cohomology(self, k):
        if k not in self._cohomology_cache:
            self._cohomology_cache[k] = _cohomology_engine(self, k)
        return self._cohomology_cache[k]

    def chain(self, degree, coeffs=None):
        return Chain(self, degree, coeffs or {})

    def chain_from_vector(self, degree, vec):
        basis = self.simplices(degree)
        if len(vec) != len(basis):
            raise ValueError("vector length does not match simplex count")
        return Chain(self, degree, dict(zip(basis, vec)))

    def components(self):
        """Connected components as sorted vertex lists."""
        adj = {v: set() for v in range(self.num_vertices)}
        for e in self.simplices(1):
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        seen = set()
        comps = []
        for v in range(self.num_vertices):
            if v in seen:
                continue
            comp = []
            todo = [v]
            seen.add(v)
            while todo:
                u = todo.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            comps.append(sorted(comp))
        return comps


class Chain:
    """Integer simplicial chain of a fixed degree."""

    __slots__ = ("complex", "degree", "coeffs")

    def __init__(self, complex, degree, coeffs):
        self.complex = complex
        self.degree = degree
        clean = {}
        for s, c in coeffs.items():
            s = tuple(s)
            if not isinstance(c, int):
                raise TypeError("chain coefficients must be int")
            if len(s) - 1 != degree:
                raise ValueError(f"simplex {s} does not have degree {degree}")
            if not complex.has_simplex(s):
                raise ValueError(f"simplex {s} is not in the complex")
            if c != 0:
                clean[s] = clean.get(s, 0) + c
        self.coeffs = {s: c for s, c in clean.items() if c != 0}

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.complex == other.complex
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.complex, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Chain(self.complex, self.degree, {s: -c for s, c in self.coeffs.items()})

    def scale(self, n):
        if not isinstance(n, int):
            raise TypeError("chain scaling must be by int")
        return Chain(self.complex, self.degree, {s: n * c for s, c in self.coeffs.items()})

    def _check_compatible(self, other):
        if self.complex != other.complex or self.degree != other.degree:
            raise ValueError("chains live on different complexes or degrees")

    def is_zero(self):
        return not self.coeffs

    def boundary(self):
        if self.degree == 0:
            return _zero_chain(self.complex, -1)
        out = {}
        for s, c in self.coeffs.items():
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                sign = -1 if i % 2 else 1
                out[face] = out.get(face, 0) + sign * c
        return Chain(self.complex, self.degree - 1, out)

    def is_cycle(self):
        if self.degree == 0:
            return True
        return self.boundary().is_zero()

    def to_vector(self):
        return [self.coeffs.get(s, 0) for s in self.complex.simplices(self.degree)]

    def __repr__(self):
        terms = " + ".join(f"{c}*{list(s)}" for s, c in sorted(self.coeffs.items()))
        return f"Chain(deg {self.degree}: {terms or '0'})"


class _NegOneChain(Chain):
    """Zero chain in degree -1, the boundary of 0-chains."""

    def __init__(self, complex):
        self.complex = complex
        self.degree = -1
        self.coeffs = {}


def _zero_chain(complex, degree):
    if degree == -1:
        return _NegOneChain(complex)
    return Chain(complex, degree, {})


class TensorChain:
    """Integer chain on a tensor product of two complexes.

    Terms are pairs (left simplex, right simplex) of possibly mixed
    bidegrees; the total degree of a term is the sum of the two dimensions.
    """

    __slots__ = ("left", "right", "coeffs")

    def __init__(self, left, right, coeffs):
        self.left = left
        self.right = right
        clean = {}
        for (s, t), c in coeffs.items():
            s, t = tuple(s), tuple(t)
            if not isinstance(c, int):
                raise TypeError("tensor coefficients must be int")
            if not left.has_simplex(s):
                raise ValueError(f"left simplex {s} not in complex")
            if not right.has_simplex(t):
                raise ValueError(f"right simplex {t} not in complex")
            if c != 0:
                key = (s, t)
                clean[key] = clean.get(key, 0) + c
        self.coeffs = {k: c for k, c in clean.items() if c != 0}

    def __eq__(self, other):
        return (
            isinstance(other, TensorChain)
            and self.left == other.left
            and self.right == other.right
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if self.left != other.left or self.right != other.right:
            raise ValueError("tensor chains on different products")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TensorChain(self.left, self.right, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorChain(self.left, self.right, {k: -c for k, c in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def boundary(self):
        """Tensor differential: d(s@t) = ds@t + (-1)^{dim s} s@dt."""
        out = {}

        def bump(s, t, c):
            if c != 0:
                key = (s, t)
                out[key] = out.get(key, 0) + c

        for (s, t), c in self.coeffs.items():
            p = len(s) - 1
            if p > 0:
                for i in range(len(s)):
                    face = s[:i] + s[i + 1 :]
                    bump(face, t, (-1 if i % 2 else 1) * c)
            if len(t) - 1 > 0:
                sign = -1 if p % 2 else 1
                for i in range(len(t)):
                    face = t[:i] + t[i + 1 :]
                    bump(s, face, sign * (-1 if i % 2 else 1) * c)
        return TensorChain(self.left, self.right, out)

    def __repr__(self):
        terms = " + ".join(
            f"{c}*({list(s)}@{list(t)})" for (s, t), c in sorted(self.coeffs.items())
        )
        return f"TensorChain({terms or '0'})"


def tensor(chain_left, chain_right):
    """Elementary tensor of two chains."""
    coeffs = {}
    for s, a in chain_left.coeffs.items():
        for t, b in chain_right.coeffs.items():
            coeffs[(s, t)] = coeffs.get((s, t), 0) + a * b
    return TensorChain(chain_left.complex, chain_right.complex, coeffs)


class SimplicialMap:
    """Vertex map carrying simplices to simplices (collapses allowed)."""

    __slots__ = ("source", "target", "vertex_map")

    def __init__(self, source, target, vertex_map):
        vertex_map = tuple(vertex_map)
        if len(vertex_map) != source.num_vertices:
            raise ValueError("vertex map length does not match source vertices")
        for w in vertex_map:
            if not isinstance(w, int) or w < 0 or w >= target.num_vertices:
                raise ValueError(f"target vertex {w!r} out of range")
        for s in source.all_simplices():
            image = tuple(sorted(set(vertex_map[v] for v in s)))
            if not target.has_simplex(image):
                raise ValueError(
                    f"image of simplex {s} is {image}, not a simplex of the target"
                )
        self.source = source
        self.target = target
        self.vertex_map = vertex_map

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialMap)
            and self.source == other.source
            and self.target == other.target
            and self.vertex_map == other.vertex_map
        )

    def push_simplex(self, s):
        """(sign, image simplex) or (0, None) when the image collapses."""
        image = [self.vertex_map[v] for v in s]
        if len(set(image)) != len(image):
            return 0, None
        sign = 1
        # Parity of the permutation sorting the image vertex list.
        for i in range(len(image)):
            for j in range(i + 1, len(image)):
                if image[i] > image[j]:
                    sign = -sign
        return sign, tuple(sorted(image))

    def push_chain(self, chain):
        if chain.complex != self.source:
            raise ValueError("chain does not live on the source complex")
        if chain.degree < 0:
            return _zero_chain(self.target, chain.degree)
        out = {}
        for s, c in chain.coeffs.items():
            sign, image = self.push_simplex(s)
            if sign != 0:
                out[image] = out.get(image, 0) + sign * c
        return Chain(self.target, chain.degree, out)

    def matrix(self, n):
        """Matrix of the induced chain map in degree n."""
        rows = self.target.simplices(n)
        cols = self.source.simplices(n)
        row_index = {s: i for i, s in enumerate(rows)}
        data = [[0] * len(cols) for _ in rows]
        for j, s in enumerate(cols):
            sign, image = self.push_simplex(s)
            if sign != 0:
                data[row_index[image]][j] += sign
        return IntMatrix(len(rows), len(cols), data)

    def is_monotone(self):
        """Weakly order-preserving on every simplex.

        Exactly the maps for which front/back faces commute with the induced
        chain map, hence for which cup-product naturality is strict.
        """
        for s in self.source.all_simplices():
            image = [self.vertex_map[v] for v in s]
            if any(image[i] > image[i + 1] for i in range(len(image) - 1)):
                return False
        return True

    def __repr__(self):
        return f"SimplicialMap({list(self.vertex_map)})"


def compose_maps(outer, inner):
    """outer after inner."""
    if inner.target != outer.source:
        raise ValueError("maps do not compose")
    return SimplicialMap(
        inner.source,
        outer.target,
        [outer.vertex_map[w] for w in inner.vertex_map],
    )


def identity_map(complex):
    return SimplicialMap(complex, complex, list(range(complex.num_vertices)))


class ProductComplex(Complex):
    """Staircase triangulation of a product of two complexes.

    Vertices are pairs encoded as u * (right vertex count) + v; simplices are
    the componentwise weakly monotone chains of distinct pairs whose
    projections span simplices of the factors.
    """

    def __init__(self, left, right, name=""):
        self.left = left
        self.right = right
        nr = right.num_vertices
        simplices = set()
        for s in left.all_simplices():
            p = len(s) - 1
            for t in right.all_simplices():
                q = len(t) - 1
                for left_steps in combinations(range(p + q), p):
                    left_set = set(left_steps)
                    path = [(s[0], t[0])]
                    a = b = 0
                    for step in range(p + q):
                        if step in left_set:
                            a += 1
                        else:
                            b += 1
                        path.append((s[a], t[b]))
                    simplices.add(tuple(u * nr + v for u, v in path))
        super().__init__(
            left.num_vertices * nr,
            simplices,
            name or f"({left.name}x{right.name})",
        )

    def encode(self, u, v):
        return u * self.right.num_vertices + v

    def decode(self, w):
        return divmod(w, self.right.num_vertices)

    def projection_left(self):
        return SimplicialMap(
            self, self.left, [self.decode(w)[0] for w in range(self.num_vertices)]
        )

    def projection_right(self):
        return SimplicialMap(
            self, self.right, [self.decode(w)[1] for w in range(self.num_vertices)]
        )

    def include_at_right(self, v0):
        """Inclusion u -> (u, v0) of the left factor."""
        return SimplicialMap(
            self.left, self, [self.encode(u, v0) for u in range(self.left.num_vertices)]
        )

    def include_at_left(self, u0):
        """Inclusion v -> (u0, v) of the right factor."""
        return SimplicialMap(
            self.right, self, [self.encode(u0, v) for v in range(self.right.num_vertices)]
        )


def staircase_product(left, right, name=""):
    return ProductComplex(left, right, name)


def product_map(left_map, right_map, source, target):
    """The map (u,v) -> (left u, right v) between staircase products.

    Well defined whenever the factor maps are weakly monotone on every
    simplex; otherwise some image chain is not a staircase simplex and the
    constructor rejects it.
    """
    if source.left != left_map.source or source.right != right_map.source:
        raise ValueError("source factors do not match the maps")
    if target.left != left_map.target or target.right != right_map.target:
        raise ValueError("target factors do not match the maps")
    vm = []
    for w in range(source.num_vertices):
        u, v = source.decode(w)
        vm.append(
            target.encode(left_map.vertex_map[u], right_map.vertex_map[v])
        )
    return SimplicialMap(source, target, vm)


def transpose_map(product, flipped):
    """The coordinate swap (u,v) -> (v,u) as a simplicial isomorphism."""
    if product.left != flipped.right or product.right != flipped.left:
        raise ValueError("transpose requires the same factors in swapped order")
    vm = []
    for w in range(product.num_vertices):
        u, v = product.decode(w)
        vm.append(flipped.encode(v, u))
    return SimplicialMap(product, flipped, vm)


def _shuffle_sign(left_steps, total):
    """Parity of the interleaving: inversions between left and right steps."""
    sign = 1
    left_set = set(left_steps)
    rights_seen = 0
    for step in range(total):
        if step in left_set:
            if rights_seen % 2:
                sign = -sign
        else:
            rights_seen += 1
    return sign


def eilenberg_zilber(tensor_chain, product):
    """Shuffle map from the tensor product to the staircase product.

    A chain map for the tensor differential; together with the front/back map
    it satisfies AW o EZ = id.  Both identities are enforced by tests.
    """
    if product.left != tensor_chain.left or product.right != tensor_chain.right:
        raise ValueError("tensor chain factors do not match the product")
    out = {}
    for (s, t), c in tensor_chain.coeffs.items():
        p = len(s) - 1
        q = len(t) - 1
        for left_steps in combinations(range(p + q), p):
            sign = _shuffle_sign(left_steps, p + q)
            left_set = set(left_steps)
            path = [(s[0], t[0])]
            a = b = 0
            for step in range(p + q):
                if step in left_set:
                    a += 1
                else:
                    b += 1
                path.append((s[a], t[b]))
            key = tuple(product.encode(u, v) for u, v in path)
            out[key] = out.get(key, 0) + sign * c
    degree = None
    for (s, t) in tensor_chain.coeffs:
        degree = len(s) + len(t) - 2
        break
    if degree is None:
        degree = 0
    return Chain(product, degree, out)


def ez(chain_left, chain_right, product):
    """Shuffle map of an elementary tensor of chains."""
    return eilenberg_zilber(tensor(chain_left, chain_right), product)


def alexander_whitney(chain):
    """Front/back face decomposition of a chain on a staircase product."""
    product = chain.complex
    if not isinstance(product, ProductComplex):
        raise TypeError("alexander_whitney needs a chain on a ProductComplex")
    out = {}
    for s, c in chain.coeffs.items():
        pairs = [product.decode(w) for w in s]
        d = len(pairs) - 1
        for i in range(d + 1):
            front = [u for u, _ in pairs[: i + 1]]
            back = [v for _, v in pairs[i:]]
            if any(front[a] >= front[a + 1] for a in range(len(front) - 1)):
                continue
            if any(back[a] >= back[a + 1] for a in range(len(back) - 1)):
                continue
            key = (tuple(front), tuple(back))
            out[key] = out.get(key, 0) + c
    return TensorChain(product.left, product.right, out)


def fundamental_cycle(complex):
    """Coherently oriented sum of the top simplices.

    Raises NotManifold when the complex is not pure or some codimension-one
    face has more than two cofaces, NonOrientable when no coherent
    orientation exists.  For a complex with boundary the result is a
    fundamental chain whose boundary is the fundamental cycle of the
    boundary; orientations are chosen per component starting with +1 on the
    lexicographically least top simplex.
    """
    d = complex.dim
    if d < 0:
        raise NotManifold("empty complex")
    tops = complex.simplices(d)
    top_set = set(tops)
    # Purity: every maximal simplex must be top-dimensional.
    for n in range(d):
        for s in complex.simplices(n):
            is_face = False
            for t in complex.simplices(n + 1):
                if set(s) <= set(t):
                    is_face = True
                    break
            if not is_face:
                raise NotManifold(f"simplex {s} is maximal but has dimension {n}")
    if d == 0:
        return Chain(complex, 0, {s: 1 for s in tops})
    cofaces = {}
    for t in tops:
        for i in range(len(t)):
            face = t[:i] + t[i + 1 :]
            cofaces.setdefault(face, []).append((t, -1 if i % 2 else 1))
    for face, incident in cofaces.items():
        if len(incident) > 2:
            raise NotManifold(f"face {face} has {len(incident)} cofaces")
    orientation = {}
    for start in tops:
        if start in orientation:
            continue
        orientation[start] = 1
        queue = deque([start])
        while queue:
            t = queue.popleft()
            eps = orientation[t]
            for i in range(len(t)):
                face = t[:i] + t[i + 1 :]
                s1 = -1 if i % 2 else 1
                for other, s2 in cofaces[face]:
                    if other == t:
                        continue
                    needed = -eps * s1 * s2
                    if other in orientation:
                        if orientation[other] != needed:
                            raise NonOrientable(
                                f"orientation conflict across face {face}"
                            )
                    else:
                        orientation[other] = needed
                        queue.append(other)
    assert set(orientation) == top_set
    return Chain(complex, d, orientation)


class NotFundamentalChain(Exception):
    """The chain is not a coherently oriented cover of the top simplices."""


def validate_fundamental_chain(chain):
    """Check that a chain can play the role of a fundamental chain.

    Requires top degree, coefficients +-1 on every top simplex, at most two
    top cofaces per codimension-one face, and boundary coefficients in
    {-1,0,+1} so the orientations match across interior faces.
    """
    complex = chain.complex
    d = complex.dim
    if chain.degree != d:
        raise NotFundamentalChain(
            f"chain degree {chain.degree} is not the complex dimension {d}"
        )
    for s in complex.simplices(d):
        if chain.coeffs.get(s, 0) not in (1, -1):
            raise NotFundamentalChain(f"top simplex {s} has coefficient not +-1")
    if d > 0:
        cofaces = {}
        for t in complex.simplices(d):
            for i in range(len(t)):
                face = t[:i] + t[i + 1 :]
                cofaces[face] = cofaces.get(face, 0) + 1
        for face, n in cofaces.items():
            if n > 2:
                raise NotFundamentalChain(f"face {face} has {n} top cofaces")
        for s, c in chain.boundary().coeffs.items():
            if c not in (1, -1):
                raise NotFundamentalChain(
                    f"boundary coefficient {c} on {s}; orientations clash"
                )
    return chain


class ConeChain:
    """Chain of the mapping cone of phi: a pair (s on X, t on A).

    In cone degree k the pair is (s in C_k(X), t in C_{k-1}(A)) and the cone
    boundary is (ds + phi_* t, -dt).
    """

    __slots__ = ("cone", "degree", "x_part", "a_part")

    def __init__(self, cone, degree, x_part, a_part):
        if x_part.complex != cone.phi.target or x_part.degree != degree:
            raise ValueError("X part has the wrong complex or degree")
        if a_part.degree != degree - 1 or (
            degree - 1 >= 0 and a_part.complex != cone.phi.source
        ):
            raise ValueError("A part has the wrong complex or degree")
        self.cone = cone
        self.degree = degree
        self.x_part = x_part
        self.a_part = a_part

    def __eq__(self, other):
        return (
            isinstance(other, ConeChain)
            and self.cone == other.cone
            and self.degree == other.degree
            and self.x_part == other.x_part
            and self.a_part == other.a_part
        )

    def __add__(self, other):
        if self.cone != other.cone or self.degree != other.degree:
            raise ValueError("cone chains do not match")
        return ConeChain(
            self.cone, self.degree, self.x_part + other.x_part, self.a_part + other.a_part
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ConeChain(self.cone, self.degree, -self.x_part, -self.a_part)

    def boundary(self):
        phi = self.cone.phi
        x = self.x_part.boundary() + phi.push_chain(self.a_part)
        if self.degree - 1 >= 0:
            a = -self.a_part.boundary()
        else:
            a = _zero_chain(phi.source, self.degree - 2)
        return ConeChain(self.cone, self.degree - 1, x, a)

    def is_cycle(self):
        b = self.boundary()
        return b.x_part.is_zero() and b.a_part.is_zero()

    def is_zero(self):
        return self.x_part.is_zero() and self.a_part.is_zero()

    def to_vector(self):
        return self.x_part.to_vector() + (
            self.a_part.to_vector() if self.degree - 1 >= 0 else []
        )

    def __repr__(self):
        return f"ConeChain(deg {self.degree}, X: {self.x_part!r}, A: {self.a_part!r})"


class MappingCone:
    """Mapping cone of a simplicial map phi: A -> X.

    Exposes boundary_matrix(n) in the basis (n-simplices of X, then
    (n-1)-simplices of A), so the linear algebra engine applies unchanged.
    """

    def __init__(self, phi):
        self.phi = phi
        self._boundary_cache = {}
        self._snf_cache = {}
        self._splitting_cache = {}
        self._homology_cache = {}

    def __eq__(self, other):
        return isinstance(other, MappingCone) and self.phi == other.phi

    def basis_sizes(self, n):
        x = len(self.phi.target.simplices(n))
        a = len(self.phi.source.simplices(n - 1)) if n - 1 >= 0 else 0
        return x, a

    def boundary_matrix(self, n):
        if n not in self._boundary_cache:
            X, A = self.phi.target, self.phi.source
            dx = X.boundary_matrix(n)
            rows_x, cols_x = dx.rows, dx.cols
            cols_a = len(A.simplices(n - 1)) if n - 1 >= 0 else 0
            rows_a = len(A.simplices(n - 2)) if n - 2 >= 0 else 0
            phi_block = (
                self.phi.matrix(n - 1) if n - 1 >= 0 else IntMatrix.zero(rows_x, 0)
            )
            da = A.boundary_matrix(n - 1) if n - 1 >= 1 else IntMatrix.zero(rows_a, cols_a)
            data = []
            for i in range(rows_x):
                data.append(list(dx.data[i]) + list(phi_block.data[i]))
            for i in range(rows_a):
                data.append([0] * cols_x + [-x for x in da.data[i]])
            self._boundary_cache[n] = IntMatrix(
                rows_x + rows_a, cols_x + cols_a, data
            )
        return self._boundary_cache[n]

    def boundary_snf(self, n):
        if n not in self._snf_cache:
            self._snf_cache[n] = smith_normal_form(self.boundary_matrix(n))
        return self._snf_cache[n]

    def splitting(self, n):
        if n not in self._splitting_cache:
            self._splitting_cache[n] = cycle_splitting(self, n)
        return self._splitting_cache[n]

    def homology(self, n):
        if n not in self._homology_cache:
            self._homology_cache[n] = _homology_engine(self, n)
        return self._homology_cache[n]

    def chain(self, degree, x_coeffs=None, a_coeffs=None):
        X, A = self.phi.target, self.phi.source
        x = Chain(X, degree, x_coeffs or {})
        if degree - 1 >= 0:
            a = Chain(A, degree - 1, a_coeffs or {})
        else:
            a = _zero_chain(A, degree - 1)
        return ConeChain(self, degree, x, a)

    def chain_from_vector(self, degree, vec):
        X, A = self.phi.target, self.phi.source
        nx = len(X.simplices(degree))
        x = X.chain_from_vector(degree, vec[:nx])
        if degree - 1 >= 0:
            a = A.chain_from_vector(degree - 1, vec[nx:])
        else:
            if len(vec) != nx:
                raise ValueError("vector length mismatch")
            a = _zero_chain(A, degree - 1)
        return ConeChain(self, degree, x, a)

    def __repr__(self):
        return f"MappingCone({self.phi!r})"


def mapping_cone(phi):
    return MappingCone(phi)
