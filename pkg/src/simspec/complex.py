"""Finite abstract simplicial complexes.

Simplices are kept in a canonical order (dimension first, then lexicographic
on the sorted vertex tuple). That order is the row/column order of every
matrix built elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BadVertex, EmptyInput, NotASimplex, NotOneDimensional
from .prng import SplitMix64


@dataclass(frozen=True, slots=True)
class Simplex:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise EmptyInput("a simplex needs at least one vertex")
        for a, b in zip(vs, vs[1:]):
            if a >= b:
                raise BadVertex(f"vertices must be strictly increasing: {vs}")

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Simplex":
        return cls(tuple(sorted(set(vertices))))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def omega(self) -> int:
        return 1 if len(self.vertices) % 2 else -1

    @property
    def key(self) -> tuple:
        return (len(self.vertices), self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __lt__(self, other: "Simplex") -> bool:
        return self.key < other.key

    def issubset(self, other: "Simplex") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def intersects(self, other: "Simplex") -> bool:
        return not set(self.vertices).isdisjoint(other.vertices)

    def faces(self) -> Iterator["Simplex"]:
        """All nonempty subsets, the simplex itself included."""
        vs = self.vertices
        for k in range(1, len(vs) + 1):
            for c in combinations(vs, k):
                yield Simplex(c)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.vertices)) + "}"


@dataclass(frozen=True)
class SimplexSet:
    """A family of simplices that need not be closed under taking faces."""

    members: frozenset

    @classmethod
    def of(cls, simplices: Iterable[Simplex]) -> "SimplexSet":
        return cls(frozenset(simplices))

    @property
    def chi(self) -> int:
        return sum(s.omega for s in self.members)

    def __and__(self, other: "SimplexSet") -> "SimplexSet":
        return SimplexSet(self.members & other.members)

    def __or__(self, other: "SimplexSet") -> "SimplexSet":
        return SimplexSet(self.members | other.members)

    def __sub__(self, other: "SimplexSet") -> "SimplexSet":
        return SimplexSet(self.members - other.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.members))


class Complex:
    """Downward closed family of simplices in canonical order.

    ``origin`` is set on Barycentric refinements: ``origin[i]`` is the simplex
    of ``parent`` that became vertex ``i + 1``.
    """

    __slots__ = ("simplices", "index", "fvec", "origin", "parent", "_masks")

    def __init__(self, simplices: Iterable[Simplex], origin=None, parent=None):
        self.simplices: tuple[Simplex, ...] = tuple(sorted(set(simplices)))
        self.index = {s: i for i, s in enumerate(self.simplices)}
        top = max((s.dim for s in self.simplices), default=-1)
        fvec = [0] * (top + 1)
        for s in self.simplices:
            fvec[s.dim] += 1
        self.fvec = tuple(fvec)
        self.origin: tuple[Simplex, ...] | None = tuple(origin) if origin is not None else None
        self.parent: Complex | None = parent
        self._masks = None

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __getitem__(self, i: int) -> Simplex:
        return self.simplices[i]

    def __contains__(self, x) -> bool:
        return x in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"Complex(fvec={self.fvec})"

    @property
    def dim(self) -> int:
        return len(self.fvec) - 1

    @property
    def vertices(self) -> list[int]:
        return [s.vertices[0] for s in self.simplices if len(s) == 1]

    @property
    def edges(self) -> list[Simplex]:
        return [s for s in self.simplices if len(s) == 2]

    @property
    def omegas(self) -> list[int]:
        return [s.omega for s in self.simplices]

    @property
    def is_refined(self) -> bool:
        return self.origin is not None

    def dimension_ranges(self) -> list[range]:
        """Index ranges of the k-simplices, k = 0..dim."""
        out, start = [], 0
        for count in self.fvec:
            out.append(range(start, start + count))
            start += count
        return out

    def masks(self) -> list[int]:
        """Vertex sets as integer bitmasks (bit ``v`` for vertex ``v``)."""
        if self._masks is None:
            self._masks = [sum(1 << v for v in s.vertices) for s in self.simplices]
        return self._masks

    def as_sets(self) -> list[list[int]]:
        return [list(s.vertices) for s in self.simplices]


def _check_set(raw) -> tuple[int, ...]:
    items = list(raw)
    if not items:
        raise EmptyInput("generating sets must be nonempty")
    for v in items:
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise BadVertex(f"vertex ids must be positive integers, got {v!r}")
    return tuple(sorted(set(items)))


def generate(sets: Iterable[Iterable[int]]) -> Complex:
    """Downward closure of a family of vertex sets."""
    tops = {_check_set(s) for s in sets}
    if not tops:
        raise EmptyInput("empty family of generating sets")
    closure = set()
    for top in tops:
        if top in closure:
            continue
        for k in range(1, len(top) + 1):
            closure.update(combinations(top, k))
    return Complex(Simplex(c) for c in closure)


def random_complex(n: int, m: int, seed: int) -> Complex:
    """``m`` random vertex sets on ``{1..n}``, then closed downward.

    Each draw picks a size ``k`` in ``1..n`` and then ``k`` vertices with
    replacement, so the drawn set may be smaller than ``k``.
    """
    if n < 1 or m < 1:
        raise ValueError("random_complex needs n >= 1 and m >= 1")
    rng = SplitMix64(seed)
    sets = []
    for _ in range(m):
        k = rng.randint(1, n)
        sets.append({rng.randint(1, n) for _ in range(k)})
    return generate(sets)


def random_graph(v: int, e: int, seed: int) -> Complex:
    """One-dimensional complex on vertices ``1..v`` with ``e`` random edges."""
    pairs = list(combinations(range(1, v + 1), 2))
    if v < 1 or not 0 <= e <= len(pairs):
        raise ValueError(f"cannot place {e} edges on {v} vertices")
    rng = SplitMix64(seed)
    return generate([[i] for i in range(1, v + 1)] + rng.sample(pairs, e))


def euler_characteristic(K: Complex | SimplexSet) -> int:
    return sum(s.omega for s in K)


def _member(K: Complex, x: Simplex) -> Simplex:
    if not isinstance(x, Simplex):
        x = Simplex.of(x)
    if x not in K.index:
        raise NotASimplex(f"{x!r} is not a simplex of the complex")
    return x


def star(K: Complex, x) -> SimplexSet:
    """All simplices of K containing x, x included."""
    x = _member(K, x)
    xs = set(x.vertices)
    return SimplexSet.of(z for z in K if xs.issubset(z.vertices))


def core(K: Complex, x) -> SimplexSet:
    """All faces of x; a complete complex, so its chi is 1."""
    x = _member(K, x)
    return SimplexSet.of(x.faces())


def barycentric_refine(K: Complex) -> Complex:
    """Whitney complex of the inclusion graph of K.

    Vertex ``i + 1`` of the result is ``K[i]``. Faces are chains of strictly
    nested simplices.
    """
    up: list[list[int]] = [[] for _ in K.simplices]
    for j, s in enumerate(K.simplices):
        for f in s.faces():
            if f != s:
                up[K.index[f]].append(j)

    chains = []

    def extend(chain: list[int]):
        chains.append(Simplex(tuple(i + 1 for i in chain)))
        for j in up[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in range(len(K)):
        extend([i])
    return Complex(chains, origin=K.simplices, parent=K)


def refine(K: Complex, times: int = 1) -> Complex:
    for _ in range(times):
        K = barycentric_refine(K)
    return K


def unit_sphere(K: Complex, x) -> Complex | None:
    """Unit sphere of x in the refinement graph of K, as a Whitney complex.

    Returns None when the sphere is empty (x isolated).
    """
    x = _member(K, x)
    R = barycentric_refine(K)
    vid = K.index[x] + 1
    nbrs = set()
    for e in R.edges:
        a, b = e.vertices
        if a == vid:
            nbrs.add(b)
        elif b == vid:
            nbrs.add(a)
    members = [s for s in R if nbrs.issuperset(s.vertices)]
    return Complex(members) if members else None


def unit_sphere_chi(K: Complex, x) -> int:
    S = unit_sphere(K, x)
    return 0 if S is None else euler_characteristic(S)


class UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {i: i for i in items}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def groups(self) -> int:
        return sum(1 for k, v in self.parent.items() if k == v)


def _require_1d(K: Complex):
    if K.dim > 1:
        raise NotOneDimensional(f"complex has dimension {K.dim}, need <= 1")


def components(K: Complex) -> list[set[int]]:
    """Vertex sets of the connected components."""
    uf = UnionFind(K.vertices)
    for s in K:
        for a in s.vertices[1:]:
            uf.union(s.vertices[0], a)
    out: dict[int, set[int]] = {}
    for v in K.vertices:
        out.setdefault(uf.find(v), set()).add(v)
    return sorted(out.values(), key=min)


def components_and_cycles(K: Complex) -> tuple[int, int]:
    """(b0, b1) of a graph: union-find components and cycle rank."""
    _require_1d(K)
    uf = UnionFind(K.vertices)
    edges = K.edges
    for e in edges:
        uf.union(*e.vertices)
    b0 = uf.groups()
    return b0, len(edges) - len(K.vertices) + b0


def degrees(K: Complex) -> dict[int, int]:
    deg = {v: 0 for v in K.vertices}
    for e in K.edges:
        for v in e.vertices:
            deg[v] += 1
    return deg


def zagreb_index(K: Complex) -> int:
    _require_1d(K)
    return sum(d * d for d in degrees(K).values())


def wu_characteristic(K: Complex) -> int:
    """Sum of omega(x) omega(y) over ordered intersecting pairs."""
    masks = K.masks()
    om = K.omegas
    total = 0
    for i, mi in enumerate(masks):
        row = 0
        for j, mj in enumerate(masks):
            if mi & mj:
                row += om[j]
        total += om[i] * row
    return total
