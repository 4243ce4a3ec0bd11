"""Global log canonical thresholds of toric varieties from fan data.

For a complete fan with primitive ray set R in Z^n the dual polytope is

    D = {w : <w, v> >= -1 for every v in R},

and for a finite group G of lattice automorphisms permuting R the
G-equivariant global log canonical threshold of the toric variety is

    lct = 1 / (1 + max{<w, v> : w in D^G, v in R}),

where D^G is the G-fixed part of D. The variety is assumed Q-factorial
(fan simplicial); that hypothesis is not verified here.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (DegenerateSubdivision, FanNotComplete,
                     GroupDoesNotPreserveFan, GroupNotClosed, NotWellFormed,
                     ParseError)
from .geometry import (HalfSpace, HPolytope, dot, enumerate_vertices,
                       fixed_subspace, identity_matrix, is_bounded, mat_det,
                       mat_mul, mat_rank, mat_vec, primitive_vector,
                       smith_normal_form)


@dataclass(frozen=True)
class RaySet:
    """The rays of a fan: pairwise distinct primitive integer vectors.

    Nonzero but non-primitive input vectors are divided by their gcd, with a
    warning; zero vectors and duplicates (after normalization) are rejected.
    """

    rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rays = []
        for v in self.rays:
            v = tuple(int(c) for c in v)
            if all(c == 0 for c in v):
                raise ValueError("zero vector is not a ray")
            g = 0
            for c in v:
                g = gcd(g, c)
            if g != 1:
                w = tuple(c // g for c in v)
                warnings.warn(f"ray {v} normalized to primitive {w}",
                              RuntimeWarning, stacklevel=3)
                v = w
            rays.append(v)
        if not rays:
            raise ValueError("need at least one ray")
        d = len(rays[0])
        if d < 1 or any(len(v) != d for v in rays):
            raise ValueError("rays of mixed dimension")
        if len(set(rays)) != len(rays):
            raise ValueError("rays must be pairwise distinct")
        object.__setattr__(self, "rays", tuple(rays))

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    def __iter__(self):
        return iter(self.rays)

    def __len__(self):
        return len(self.rays)


@dataclass(frozen=True)
class GroupAction:
    """A finite group of integer matrices, |det| = 1 each, closed under
    product and containing the identity."""

    elements: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        elements = tuple(tuple(tuple(int(c) for c in row) for row in g)
                         for g in self.elements)
        if not elements:
            raise ValueError("need at least one element")
        n = len(elements[0])
        for g in elements:
            if len(g) != n or any(len(row) != n for row in g):
                raise ValueError("elements must be square of one dimension")
            if abs(mat_det(g)) != 1:
                raise ValueError(f"element {g} is not unimodular")
        table = set(elements)
        if len(table) != len(elements):
            raise GroupNotClosed("repeated elements")
        if identity_matrix(n) not in table:
            raise GroupNotClosed("identity element missing")
        for g in elements:
            for h in elements:
                if mat_mul(g, h) not in table:
                    raise GroupNotClosed(
                        "element list is not closed under product")
        object.__setattr__(self, "elements", elements)

    @property
    def dim(self) -> int:
        return len(self.elements[0])

    def __len__(self):
        return len(self.elements)

    @classmethod
    def generate(cls, generators, cap: int = 10000) -> "GroupAction":
        """Closure of a generator list under product, via fixed-point
        iteration; raises GroupNotClosed when the closure exceeds cap."""
        gens = [tuple(tuple(int(c) for c in row) for row in g)
                for g in generators]
        if not gens:
            raise ValueError("need at least one generator")
        n = len(gens[0])
        for g in gens:
            if len(g) != n or any(len(row) != n for row in g):
                raise ValueError("generators must be square of one dimension")
            if abs(mat_det(g)) != 1:
                raise ValueError(f"generator {g} is not unimodular")
        elements = {identity_matrix(n)}
        frontier = list(elements)
        while frontier:
            fresh = []
            for g in frontier:
                for h in gens:
                    prod = mat_mul(g, h)
                    if prod not in elements:
                        elements.add(prod)
                        fresh.append(prod)
                        if len(elements) > cap:
                            raise GroupNotClosed(
                                f"closure exceeds cap of {cap} elements")
            frontier = fresh
        return cls(tuple(sorted(elements)))


@dataclass(frozen=True)
class ToricLctReport:
    """Result of a toric lct computation: lct = 1/(1 + max_pairing), with a
    witness pair attaining the maximum (lexicographically smallest)."""

    lct: Fraction
    max_pairing: Fraction
    witness_vertex: tuple[Fraction, ...]
    witness_ray: tuple[int, ...]

    def __post_init__(self):
        if self.lct * (1 + self.max_pairing) != 1:
            raise ValueError("report inconsistent: lct != 1/(1+max_pairing)")
        if dot(self.witness_vertex, self.witness_ray) != self.max_pairing:
            raise ValueError("report inconsistent: witness pairing")


def dual_polytope(rays: RaySet) -> HPolytope:
    """The polytope {w : <w, v> >= -1 for every ray v}."""
    return HPolytope(tuple(HalfSpace(v, Fraction(-1)) for v in rays))


def _restrict(poly: HPolytope, basis) -> HPolytope:
    # coordinates t on span(basis): w = sum t_i b_i turns <a, w> >= c into
    # <B^T a, t> >= c; constraints vanishing on the span drop out (offsets
    # here are negative, so they hold identically)
    kept = []
    for h in poly.halfspaces:
        normal = tuple(dot(h.normal, b) for b in basis)
        if all(c == 0 for c in normal):
            continue
        kept.append(HalfSpace(normal, h.offset))
    return HPolytope(tuple(kept))


def toric_lct(rays: RaySet, group: GroupAction | None = None) -> ToricLctReport:
    """Global lct of the complete toric variety with the given rays,
    equivariant under an optional finite group of lattice automorphisms.

    The dual polytope must be bounded (fan complete), else FanNotComplete.
    With a group, every element must permute the rays, else
    GroupDoesNotPreserveFan; the pairing maximum is then taken over the
    G-fixed part of the dual polytope, computed by enumerating vertices in
    coordinates on the common fixed subspace.
    """
    poly = dual_polytope(rays)
    if not is_bounded(poly):
        raise FanNotComplete("rays do not positively span the lattice")
    if group is None:
        vertices = enumerate_vertices(poly)
    else:
        if group.dim != rays.dim:
            raise ValueError("group dimension does not match rays")
        ray_set = set(rays)
        for g in group.elements:
            if {mat_vec(g, v) for v in rays} != ray_set:
                raise GroupDoesNotPreserveFan(
                    f"element {g} does not permute the rays")
        basis = fixed_subspace(group.elements)
        if not basis:
            vertices = (tuple(Fraction(0) for _ in range(rays.dim)),)
        else:
            restricted = _restrict(poly, basis)
            vertices = tuple(
                sorted(tuple(sum(Fraction(t) * Fraction(b[i]) for t, b in zip(point, basis))
                             for i in range(rays.dim))
                       for point in enumerate_vertices(restricted)))
    best = None
    for w in vertices:
        for v in rays:
            p = dot(w, v)
            if best is None or p > best[0] or (p == best[0] and (w, v) < best[1:]):
                best = (p, w, v)
    m, wv, wr = best
    return ToricLctReport(lct=Fraction(1, 1) / (1 + m), max_pairing=Fraction(m),
                          witness_vertex=wv, witness_ray=wr)


# ---------------------------------------------------------------------------
# fan constructors


def projective_space_fan(n: int) -> RaySet:
    """Rays e_1, ..., e_n, -(e_1 + ... + e_n) of projective n-space."""
    if n < 1:
        raise ValueError("need n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    return RaySet(tuple(rays))


def product_fan(a: RaySet, b: RaySet) -> RaySet:
    """Rays of the product fan: each factor's rays padded by zeros."""
    da, db = a.dim, b.dim
    rays = [v + (0,) * db for v in a]
    rays += [(0,) * da + v for v in b]
    return RaySet(tuple(rays))


def projectivized_bundle_fan(n: int, twists) -> RaySet:
    """Fan of P(O + O(-a_1) + ... + O(-a_k)) over projective n-space.

    Fiber rays e_1..e_k and -(e_1+...+e_k); base rays e_{k+1}..e_{k+n} and
    the twisted ray (-a_1, ..., -a_k, -1, ..., -1).
    """
    twists = tuple(int(a) for a in twists)
    k = len(twists)
    if n < 1 or k < 1:
        raise ValueError("need base dimension >= 1 and at least one twist")
    if any(a < 0 for a in twists):
        raise ValueError("twists must be nonnegative")
    d = k + n
    rays = [tuple(int(i == j) for j in range(d)) for i in range(k)]
    rays.append(tuple(-1 if j < k else 0 for j in range(d)))
    rays += [tuple(int(i == j) for j in range(d)) for i in range(k, d)]
    rays.append(tuple(-twists[j] if j < k else -1 for j in range(d)))
    return RaySet(tuple(rays))


def bundle_lct_closed_form(n: int, twists) -> Fraction:
    """lct of P(O + O(-a_1) + ... + O(-a_k)) over projective n-space:
    1 / (1 + max(k, n + a_1 + ... + a_k))."""
    twists = tuple(int(a) for a in twists)
    if n < 1 or len(twists) < 1:
        raise ValueError("need base dimension >= 1 and at least one twist")
    if any(a < 0 for a in twists):
        raise ValueError("twists must be nonnegative")
    return Fraction(1, 1 + max(len(twists), n + sum(twists)))


def star_subdivide(rays: RaySet, subset) -> RaySet:
    """Add the primitive part of the sum of a linearly independent subset of
    rays (the toric blow-up of the corresponding cone's stratum).

    The caller is responsible for the subset actually spanning a cone of the
    fan. Raises DegenerateSubdivision when the subset is dependent, sums to
    zero, or its primitive sum is already a ray.
    """
    subset = [tuple(int(c) for c in v) for v in subset]
    present = set(rays)
    if not subset:
        raise DegenerateSubdivision("empty subset")
    for v in subset:
        if v not in present:
            raise ValueError(f"{v} is not a ray of the fan")
    if len(set(subset)) != len(subset):
        raise DegenerateSubdivision("subset has repeated rays")
    if mat_rank(subset) != len(subset):
        raise DegenerateSubdivision("subset is linearly dependent")
    total = tuple(sum(col) for col in zip(*subset))
    if all(c == 0 for c in total):
        raise DegenerateSubdivision("subset sums to zero")
    new = primitive_vector(total)
    if new in present:
        raise DegenerateSubdivision(f"{new} is already a ray")
    return RaySet(rays.rays + (new,))


def wps_fan(weights) -> RaySet:
    """Fan of the weighted projective space P(a_0, ..., a_n).

    The rays are the images of the standard basis of Z^{n+1} in the quotient
    lattice Z^{n+1} / Z(a_0, ..., a_n), with the quotient basis read off a
    Smith normal form, so that sum a_i v_i = 0. Raises NotWellFormed unless
    every n of the weights are coprime.
    """
    weights = tuple(int(a) for a in weights)
    check_well_formed(weights)
    n = len(weights) - 1
    # square matrix with the weights in column 0; its Smith u sends the
    # weight vector to +-e_1, so the last n coordinates of u present the
    # quotient lattice
    col = tuple(tuple(weights[i] if j == 0 else 0 for j in range(n + 1))
                for i in range(n + 1))
    u = smith_normal_form(col).u
    rays = []
    for i in range(n + 1):
        v = tuple(u[r][i] for r in range(1, n + 1))
        rays.append(v)
    combo = [sum(w * v[i] for w, v in zip(weights, rays)) for i in range(n)]
    if any(combo):
        raise AssertionError("quotient basis failed: sum a_i v_i != 0")
    return RaySet(tuple(rays))


def check_well_formed(weights) -> None:
    """Raise NotWellFormed unless every n-element sub-multiset of the n+1
    positive weights has gcd 1."""
    weights = tuple(int(a) for a in weights)
    if len(weights) < 2:
        raise ValueError("need at least two weights")
    if any(a < 1 for a in weights):
        raise ValueError("weights must be positive")
    for drop in range(len(weights)):
        g = 0
        for i, a in enumerate(weights):
            if i != drop:
                g = gcd(g, a)
        if g != 1:
            raise NotWellFormed(
                f"weights {weights} share a factor {g} once {weights[drop]} is dropped")


# ---------------------------------------------------------------------------
# fan text format


def format_fan(rays: RaySet, group: GroupAction | None = None) -> str:
    """Canonical text for a fan: one ray per line as comma-separated
    integers; then, if a group is given, a blank line and one matrix per
    line as dim*dim row-major integers."""
    lines = [",".join(str(c) for c in v) for v in rays]
    if group is not None:
        lines.append("")
        for g in group.elements:
            lines.append(",".join(str(c) for row in g for c in row))
    return "\n".join(lines) + "\n"


def parse_fan(text: str) -> tuple[RaySet, GroupAction | None]:
    """Inverse of format_fan. '#' starts a comment; a blank line separates
    the ray block from the optional group block. Raises ParseError with the
    offending line number."""
    blocks: list[list[tuple[int, list[int]]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            # blank line: block separator
            if blocks[-1]:
                blocks.append([])
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue  # comment-only line
        try:
            values = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise ParseError(lineno, f"not a comma-separated integer row: {raw!r}")
        blocks[-1].append((lineno, values))
    if blocks and not blocks[-1]:
        blocks.pop()
    if not blocks:
        raise ParseError(1, "no rays")
    if len(blocks) > 2:
        raise ParseError(blocks[2][0][0], "more than two blocks")
    ray_block = blocks[0]
    dim = len(ray_block[0][1])
    for lineno, values in ray_block:
        if len(values) != dim:
            raise ParseError(lineno, f"expected {dim} coordinates")
    try:
        rays = RaySet(tuple(tuple(values) for _, values in ray_block))
    except ValueError as exc:
        raise ParseError(ray_block[0][0], str(exc))
    group = None
    if len(blocks) == 2:
        matrices = []
        for lineno, values in blocks[1]:
            if len(values) != dim * dim:
                raise ParseError(lineno,
                                 f"expected {dim * dim} row-major entries")
            matrices.append(tuple(tuple(values[r * dim:(r + 1) * dim])
                                  for r in range(dim)))
        try:
            group = GroupAction(tuple(matrices))
        except (ValueError, GroupNotClosed) as exc:
            raise ParseError(blocks[1][0][0], str(exc))
    return rays, group
