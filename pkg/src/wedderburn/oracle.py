"""Brute-force decomposition of the regular group algebra F_q[G].

Everything here is independent of character theory.  The center of F_q[G]
is spanned by the class sums; the primitive central idempotents are found by
repeatedly picking a central element, computing the minimal polynomial of
multiplication by it on each current block, factoring that polynomial, and
combining the coprime factors into finer idempotents.  A block is accepted
once some element of it has an irreducible minimal polynomial whose degree
equals the block dimension, which certifies the block center is a field.
For each primitive idempotent e the block dimension D = dim e*F_q[G] is an
exact rank computation, the center degree d = dim e*Z is read off the
splitting, and the matrix size n satisfies D = d * n^2 exactly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import ModularCaseError
from .ffield import FieldElement, FieldSpec, MatrixFq, Polynomial, factor, minpoly
from .perm import FiniteGroup

__all__ = ["AlgebraElement", "CentralSplit", "multiply", "center_basis", "split_center", "verify_split"]


class AlgebraElement:
    """An element of F_q[G]: one coefficient per group element, indexed by the
    group's enumeration order."""

    __slots__ = ("group", "spec", "coeffs")

    def __init__(self, group: FiniteGroup, spec: FieldSpec, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != group.order:
            raise ValueError(f"need {group.order} coefficients, got {len(coeffs)}")
        self.group = group
        self.spec = spec
        self.coeffs = coeffs

    @classmethod
    def zero(cls, group, spec) -> "AlgebraElement":
        return cls(group, spec, (spec.zero,) * group.order)

    @classmethod
    def unit(cls, group, spec) -> "AlgebraElement":
        coeffs = [spec.zero] * group.order
        coeffs[0] = spec.one
        return cls(group, spec, coeffs)

    @classmethod
    def from_group_index(cls, group, spec, i: int) -> "AlgebraElement":
        coeffs = [spec.zero] * group.order
        coeffs[i] = spec.one
        return cls(group, spec, coeffs)

    @classmethod
    def class_sum(cls, group, spec, class_index: int) -> "AlgebraElement":
        coeffs = [spec.zero] * group.order
        for i in group.classes[class_index].indices:
            coeffs[i] = spec.one
        return cls(group, spec, coeffs)

    def _check_compatible(self, other: "AlgebraElement"):
        if self.group is not other.group:
            raise ValueError("elements belong to different groups")
        if self.spec != other.spec:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        return AlgebraElement(self.group, self.spec, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        return AlgebraElement(self.group, self.spec, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, FieldElement):
            return AlgebraElement(self.group, self.spec, (c * other for c in self.coeffs))
        self._check_compatible(other)
        table = self.group.mul_table
        out = [self.spec.zero] * self.group.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if b:
                    k = row[j]
                    out[k] = out[k] + a * b
        return AlgebraElement(self.group, self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.group is other.group
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(tuple(c.coeffs for c in self.coeffs))

    def __repr__(self) -> str:
        support = sum(1 for c in self.coeffs if c)
        return f"AlgebraElement(support={support}/{self.group.order})"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product: the coefficient of g is sum over h of a(h) * b(h^-1 g)."""
    return a * b


def center_basis(G: FiniteGroup, spec: FieldSpec) -> list[AlgebraElement]:
    """One class sum per conjugacy class; they commute pairwise and span the center."""
    return [AlgebraElement.class_sum(G, spec, ci) for ci in range(len(G.classes))]


@dataclass(frozen=True)
class CentralSplit:
    """The primitive central idempotents together with, per block, the block
    dimension D, the center field degree d, and the matrix size n (D = d*n^2)."""

    idempotents: tuple[AlgebraElement, ...]
    block_dims: tuple[int, ...]
    center_dims: tuple[int, ...]
    matrix_sizes: tuple[int, ...]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The block multiset as (n, d) pairs sorted by (d, n)."""
        return tuple(sorted(zip(self.matrix_sizes, self.center_dims), key=lambda t: (t[1], t[0])))


class _CenterAlgebra:
    """The center of F_q[G] in the class-sum basis, with integer structure
    constants reduced into the field on demand."""

    def __init__(self, G: FiniteGroup, spec: FieldSpec):
        self.G = G
        self.spec = spec
        self.m = len(G.classes)
        raw = G.class_product_coefficients()
        self.sc = [
            [[spec.scalar(raw[i][j][k]) for k in range(self.m)] for j in range(self.m)]
            for i in range(self.m)
        ]

    def one(self) -> list[FieldElement]:
        vec = [self.spec.zero] * self.m
        vec[0] = self.spec.one  # the identity element is its own (size-1) class
        return vec

    def mul_class(self, i: int, v: list[FieldElement]) -> list[FieldElement]:
        """Product (class sum i) * v."""
        out = [self.spec.zero] * self.m
        sci = self.sc[i]
        for j, c in enumerate(v):
            if c:
                row = sci[j]
                for k in range(self.m):
                    if row[k]:
                        out[k] = out[k] + c * row[k]
        return out

    def mul(self, u: list[FieldElement], v: list[FieldElement]) -> list[FieldElement]:
        out = [self.spec.zero] * self.m
        for i, a in enumerate(u):
            if a:
                w = self.mul_class(i, v)
                for k in range(self.m):
                    if w[k]:
                        out[k] = out[k] + a * w[k]
        return out

    def is_zero(self, v) -> bool:
        return not any(v)

    def block_dimension(self, e: list[FieldElement]) -> int:
        """Dimension over F_q of e*Z, the span of the projected class sums."""
        rows = [self.mul_class(i, e) for i in range(self.m)]
        return MatrixFq(self.spec, rows).rank()

    def to_algebra(self, v: list[FieldElement]) -> AlgebraElement:
        coeffs = [v[self.G.class_index_of[i]] for i in range(self.G.order)]
        return AlgebraElement(self.G, self.spec, coeffs)


def _crt_idempotents(Z: _CenterAlgebra, e, powers, mu: Polynomial, factors, seed: int):
    """Refine the idempotent e along the coprime factorization mu = prod f_j:
    the new idempotents are h_j(w) where h_j = 1 mod f_j and 0 mod the rest."""
    spec = Z.spec
    outs = []
    for f_j, _ in factors:
        g_j = mu // f_j
        gcd, s_j, _ = g_j.xgcd(f_j)
        if gcd.degree() != 0:
            raise AssertionError("minimal polynomial factors are not coprime (bug)")
        h_j = (s_j * g_j) % mu
        vec = [spec.zero] * Z.m
        for t, c in enumerate(h_j.coeffs):
            if c:
                pw = powers[t]
                for idx in range(Z.m):
                    if pw[idx]:
                        vec[idx] = vec[idx] + c * pw[idx]
        outs.append(vec)
    acc = [spec.zero] * Z.m
    for v in outs:
        acc = [a + b for a, b in zip(acc, v)]
    if acc != list(e):
        raise AssertionError("refined idempotents do not sum to the block unit (bug)")
    for a in range(len(outs)):
        for b in range(a + 1, len(outs)):
            if not Z.is_zero(Z.mul(outs[a], outs[b])):
                raise AssertionError("refined idempotents are not orthogonal (bug)")
    return outs


def _block_minpoly(Z: _CenterAlgebra, e, mul_by):
    """Minimal polynomial of a central element acting on the block with unit e,
    together with the power sequence e, w, w^2, ... needed to evaluate
    polynomials at it."""
    powers = [list(e)]

    def apply(v):
        return mul_by(v)

    mu = minpoly(Z.spec, apply, e, Z.m)
    for _ in range(1, mu.degree()):
        powers.append(mul_by(powers[-1]))
    return mu, powers


def _try_refine(Z: _CenterAlgebra, e, rng: random.Random, seed: int, max_random: int = 40):
    """Either split the block of e into at least two finer idempotents, or
    return None once the block is certified to be a field.

    Candidates are the class sums in class order, then seeded random central
    elements.  Certification: some candidate's minimal polynomial on the
    block is irreducible with degree equal to the block dimension.
    """
    dim = Z.block_dimension(e)
    if dim == 1:
        return None
    certified = False

    def inspect(mul_by):
        nonlocal certified
        mu, powers = _block_minpoly(Z, e, mul_by)
        if not mu.is_squarefree():
            raise AssertionError("non-squarefree minimal polynomial on a semisimple block (bug)")
        facs = factor(mu, seed=seed)
        if len(facs) > 1:
            return _crt_idempotents(Z, e, powers, mu, facs, seed)
        if mu.degree() == dim:
            certified = True
        return None

    for i in range(Z.m):
        proj = Z.mul_class(i, e)
        if Z.is_zero(proj):
            continue
        split = inspect(lambda v, i=i: Z.mul_class(i, v))
        if split:
            return split
    if certified:
        return None
    for _ in range(max_random):
        z = [Z.spec.random_element(rng) for _ in range(Z.m)]
        split = inspect(lambda v: Z.mul(z, v))
        if split:
            return split
        if certified:
            return None
    raise RuntimeError("failed to split or certify a center block (bug)")


def split_center(G: FiniteGroup, spec: FieldSpec, seed: int = 0) -> CentralSplit:
    """Compute the primitive central idempotents of F_q[G] and each block's
    (matrix size, center degree) by explicit calculation in the algebra."""
    if G.order % spec.p == 0:
        raise ModularCaseError(spec.p, G.order)
    Z = _CenterAlgebra(G, spec)
    rng = random.Random(f"split:{seed}:{spec.p}:{spec.k}:{G.order}")
    work = [Z.one()]
    final = []
    while work:
        e = work.pop()
        split = _try_refine(Z, e, rng, seed)
        if split is None:
            final.append(e)
        else:
            work.extend(split)
    # deterministic block order regardless of the splitting path
    final.sort(key=lambda v: [c.index() for c in v])
    idempotents = []
    block_dims = []
    center_dims = []
    sizes = []
    for e in final:
        d = Z.block_dimension(e)
        E = Z.to_algebra(e)
        D = _right_ideal_dimension(E)
        if D % d:
            raise AssertionError("block dimension not divisible by center degree (bug)")
        n = math.isqrt(D // d)
        if n * n * d != D:
            raise AssertionError("block dimension is not d * n^2 (bug)")
        idempotents.append(E)
        block_dims.append(D)
        center_dims.append(d)
        sizes.append(n)
    order = sorted(range(len(final)), key=lambda i: (center_dims[i], sizes[i], i))
    return CentralSplit(
        idempotents=tuple(idempotents[i] for i in order),
        block_dims=tuple(block_dims[i] for i in order),
        center_dims=tuple(center_dims[i] for i in order),
        matrix_sizes=tuple(sizes[i] for i in order),
    )


def _right_ideal_dimension(E: AlgebraElement) -> int:
    """dim over F_q of E * F_q[G]: rank of the matrix whose columns are the
    right translates E * g, each a permutation of E's coefficient vector."""
    G = E.group
    n = G.order
    table = G.mul_table
    inv = G.inverse_indices
    rows = [[None] * n for _ in range(n)]
    coeffs = E.coeffs
    for g in range(n):
        gi = inv[g]
        for h in range(n):
            rows[h][g] = coeffs[table[h][gi]]
    return MatrixFq(E.spec, rows).rank()


def verify_split(split: CentralSplit) -> bool:
    """Recheck every invariant of a central splitting by explicit algebra
    multiplication and rank computation; returns False on the first failure."""
    es = split.idempotents
    if not es:
        return False
    G = es[0].group
    spec = es[0].spec
    # idempotent system: e_i e_j = delta_ij e_i and the e_i sum to 1
    total = AlgebraElement.zero(G, spec)
    for e in es:
        total = total + e
    if total != AlgebraElement.unit(G, spec):
        return False
    for i, a in enumerate(es):
        for j, b in enumerate(es):
            prod = a * b
            if i == j:
                if prod != a:
                    return False
            elif not prod.is_zero():
                return False
    # centrality, witnessed on the generators
    for gen in G.generators:
        gi = G.index(gen)
        delta = AlgebraElement.from_group_index(G, spec, gi)
        for e in es:
            if delta * e != e * delta:
                return False
    # coefficients constant on conjugacy classes
    for e in es:
        for c in G.classes:
            vals = {e.coeffs[i].coeffs for i in c.indices}
            if len(vals) > 1:
                return False
    # dimension bookkeeping: D_i = d_i * n_i^2, sum D_i = |G|, ranks agree
    if sum(split.block_dims) != G.order:
        return False
    Z = _CenterAlgebra(G, spec)
    for e, D, d, n in zip(es, split.block_dims, split.center_dims, split.matrix_sizes):
        if d * n * n != D:
            return False
        if math.isqrt(D // d) ** 2 * d != D:
            return False
        center_vec = [e.coeffs[G.index(c.representative)] for c in G.classes]
        if Z.block_dimension(center_vec) != d:
            return False
        if _right_ideal_dimension(e) != D:
            return False
    return True
