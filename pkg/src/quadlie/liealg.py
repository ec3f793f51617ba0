"""Lie algebras from exact structure constants.

Brackets are stored sparsely for basis pairs (i, j) with i < j only;
antisymmetry is enforced by construction. The Jacobi identity is checked for
every basis triple at construction time. Central-series machinery works for
an arbitrary subspace V (the relative series C^j(V), C_j(V)); V = g gives the
ordinary lower and upper central series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, SpanBuilder, Subspace, as_fraction_vector, nullspace

BracketTable = dict[tuple[int, int], dict[int, Fraction]]


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    coords: dict[int, Fraction]

    def __str__(self) -> str:
        i, j, k = self.triple
        terms = ", ".join(f"e{m + 1}: {c}" for m, c in sorted(self.coords.items()))
        return f"Jacobi fails at basis triple ({i + 1},{j + 1},{k + 1}); jacobiator {terms}"


class JacobiError(ValueError):
    def __init__(self, violation: JacobiViolation):
        super().__init__(str(violation))
        self.violation = violation


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q given by structure constants."""

    def __init__(self, dim: int, brackets=None, labels=None, check: bool = True):
        if dim < 0:
            raise ValueError("negative dimension")
        self.dim = dim
        if labels is None:
            labels = [f"e{i + 1}" for i in range(dim)]
        labels = [str(x) for x in labels]
        if len(labels) != dim:
            raise ValueError(f"expected {dim} labels, got {len(labels)}")
        self.labels = tuple(labels)
        table: BracketTable = {}
        for (i, j), terms in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket index pair ({i},{j}) out of range (need 0 <= i < j < {dim})")
            entry = {}
            for k, c in dict(terms).items():
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target index {k} out of range")
                c = Fraction(c)
                if c:
                    entry[k] = c
            if entry:
                table[(i, j)] = entry
        self.brackets = table
        if check:
            bad = validate(self)
            if bad is not None:
                raise JacobiError(bad)

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coordinate map (any i, j)."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket_basis_vec(self, i: int, vec) -> list[Fraction]:
        """[e_i, v] for a coefficient vector v."""
        out = [Fraction(0)] * self.dim
        for j, c in enumerate(vec):
            if not c:
                continue
            for k, s in self.bracket_basis(i, j).items():
                out[k] += c * s
        return out

    def bracket(self, x, y) -> tuple[Fraction, ...]:
        """Bilinear, antisymmetric extension of the structure constants."""
        xv = as_fraction_vector(x, self.dim)
        yv = as_fraction_vector(y, self.dim)
        out = [Fraction(0)] * self.dim
        for (i, j), terms in self.brackets.items():
            c = xv[i] * yv[j] - xv[j] * yv[i]
            if c:
                for k, s in terms.items():
                    out[k] += c * s
        return tuple(out)

    def ad_matrix(self, x) -> Matrix:
        """Matrix of ad_x: column m holds the coordinates of [x, e_m]."""
        xv = as_fraction_vector(x, self.dim)
        cols = []
        for m in range(self.dim):
            col = [Fraction(0)] * self.dim
            for i, c in enumerate(xv):
                if not c:
                    continue
                for k, s in self.bracket_basis(i, m).items():
                    col[k] += c * s
            cols.append(col)
        rows = tuple(
            tuple(cols[m][r] for m in range(self.dim)) for r in range(self.dim)
        )
        return Matrix(rows, self.dim)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def commutator_subspace(self) -> Subspace:
        sb = SpanBuilder(self.dim)
        for terms in self.brackets.values():
            vec = [Fraction(0)] * self.dim
            for k, c in terms.items():
                vec[k] = c
            sb.add(vec)
        return sb.subspace()

    def center(self) -> Subspace:
        return centralizer(self, self.full_space())

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.brackets)} pairs)"


def validate(g: LieAlgebra) -> JacobiViolation | None:
    """Check Jacobi on every basis triple; None when the table is consistent."""
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            cij = g.brackets.get((i, j))
            for k in range(j + 1, g.dim):
                acc: dict[int, Fraction] = {}
                for pair_terms, other in (
                    (cij, k),
                    (g.brackets.get((j, k)), i),
                    ({m: -c for m, c in (g.brackets.get((i, k)) or {}).items()}, j),
                ):
                    if not pair_terms:
                        continue
                    for m, c in pair_terms.items():
                        for t, s in g.bracket_basis(m, other).items():
                            acc[t] = acc.get(t, Fraction(0)) + c * s
                nonzero = {t: v for t, v in acc.items() if v}
                if nonzero:
                    return JacobiViolation((i, j, k), nonzero)
    return None


def bracket_space(g: LieAlgebra, v: Subspace) -> Subspace:
    """[g, V]: span of brackets of basis elements with a basis of V."""
    sb = SpanBuilder(g.dim)
    for i in range(g.dim):
        for row in v.rows:
            sb.add(g.bracket_basis_vec(i, row))
    return sb.subspace()


def centralizer(g: LieAlgebra, v: Subspace) -> Subspace:
    """z(V) = {X : [X, V] = 0}."""
    if v.ambient != g.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    if v.is_zero() or g.dim == 0:
        return g.full_space()
    rows = []
    for w in v.rows:
        # condition [X, w] = 0: row r of the matrix sends X to coord r of [X, w]
        cols = [g.bracket_basis_vec(i, w) for i in range(g.dim)]
        for r in range(g.dim):
            rows.append(tuple(cols[i][r] for i in range(g.dim)))
    return nullspace(Matrix(tuple(rows), g.dim))


def _residual_matrix(v: Subspace) -> Matrix:
    """R with ker R = V (single reduction pass against the RREF basis)."""
    n = v.ambient
    rows = [[Fraction(1 if a == b else 0) for b in range(n)] for a in range(n)]
    for row, p in zip(v.rows, v.pivots):
        for a in range(n):
            if row[a]:
                rows[a][p] -= row[a]
    return Matrix(tuple(tuple(r) for r in rows), n)


def _ascending_step(g: LieAlgebra, prev: Subspace) -> Subspace:
    """{X : [X, g] contained in prev}."""
    if prev.dim == g.dim:
        return g.full_space()
    resid = _residual_matrix(prev)
    rows = []
    for i in range(g.dim):
        # columns of ad restricted: [e_m, e_i] = -[e_i, e_m]
        cols = [
            {k: -c for k, c in g.bracket_basis(i, m).items()} for m in range(g.dim)
        ]
        for r in range(g.dim):
            rrow = resid.rows[r]
            row = []
            for m in range(g.dim):
                acc = Fraction(0)
                for k, c in cols[m].items():
                    if rrow[k]:
                        acc += rrow[k] * c
                row.append(acc)
            if any(row):
                rows.append(tuple(row))
    if not rows:
        return g.full_space()
    return nullspace(Matrix(tuple(rows), g.dim))


@dataclass(frozen=True)
class SeriesReport:
    """Relative series of a subspace V: C^j(V) descending, C_j(V) ascending."""

    descending: tuple[Subspace, ...]
    ascending: tuple[Subspace, ...]
    descending_stable: bool
    ascending_stable: bool

    @property
    def descending_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.descending)

    @property
    def ascending_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.ascending)

    @property
    def descending_stabilized_at(self) -> int:
        """Smallest j with C^j = C^(j+1) (last stored index when stable)."""
        return len(self.descending) - 1

    @property
    def ascending_stabilized_at(self) -> int:
        return len(self.ascending) - 1

    def descending_term(self, j: int) -> Subspace:
        """C^j(V), extending by the stable tail."""
        return self.descending[min(j, len(self.descending) - 1)]

    def ascending_term(self, j: int) -> Subspace:
        return self.ascending[min(j, len(self.ascending) - 1)]

    def nilpotency_class(self) -> int | None:
        """k with C^k(g) = 0, C^(k-1)(g) != 0 (None when not nilpotent)."""
        if not self.descending[-1].is_zero():
            return None
        k = len(self.descending) - 1
        while k > 0 and self.descending[k - 1].is_zero():
            k -= 1
        return k


def relative_series(g: LieAlgebra, v: Subspace, max_steps: int | None = None) -> SeriesReport:
    """Compute both series of V until stabilization.

    The descending series is C^0 = V, C^j = [g, C^(j-1)]; the ascending one is
    C_0 = 0, C_1 = z(V), C_j = {X : [X,g] in C_(j-1)}. Both are iterated until
    two consecutive terms agree (a deterministic fixed point); a safety bound
    of dim+2 steps guards non-nilpotent inputs.
    """
    if v.ambient != g.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    bound = max_steps if max_steps is not None else g.dim + 2

    desc = [v]
    desc_stable = False
    for _ in range(bound):
        nxt = bracket_space(g, desc[-1])
        if nxt == desc[-1]:
            desc_stable = True
            break
        desc.append(nxt)

    asc = [Subspace.zero(g.dim), centralizer(g, v)]
    if asc[1] == asc[0]:
        asc = asc[:1]
        asc_stable = True
    else:
        asc_stable = False
        for _ in range(bound):
            nxt = _ascending_step(g, asc[-1])
            if nxt == asc[-1]:
                asc_stable = True
                break
            asc.append(nxt)

    return SeriesReport(tuple(desc), tuple(asc), desc_stable, asc_stable)


def lower_central_series(g: LieAlgebra) -> SeriesReport:
    return relative_series(g, g.full_space())


def nilpotency_class(g: LieAlgebra) -> int | None:
    return lower_central_series(g).nilpotency_class()


def direct_sum(algebras: list[LieAlgebra]) -> LieAlgebra:
    """Block-diagonal direct sum; labels are prefixed only on collision."""
    dim = sum(g.dim for g in algebras)
    labels: list[str] = []
    flat = [lbl for g in algebras for lbl in g.labels]
    collide = len(set(flat)) != len(flat)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    offset = 0
    for bi, g in enumerate(algebras):
        for lbl in g.labels:
            labels.append(f"b{bi + 1}.{lbl}" if collide else lbl)
        for (i, j), terms in g.brackets.items():
            brackets[(i + offset, j + offset)] = {
                k + offset: c for k, c in terms.items()
            }
        offset += g.dim
    return LieAlgebra(dim, brackets, labels, check=False)


def permute_basis(g: LieAlgebra, order: list[int]) -> LieAlgebra:
    """Reindex the basis; order[i] is the old index of new basis element i."""
    if sorted(order) != list(range(g.dim)):
        raise ValueError("order must be a permutation of the basis indices")
    pos = {old: new for new, old in enumerate(order)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in g.brackets.items():
        a, b = pos[i], pos[j]
        sign = 1
        if a > b:
            a, b = b, a
            sign = -1
        brackets[(a, b)] = {pos[k]: sign * c for k, c in terms.items()}
    labels = [g.labels[old] for old in order]
    return LieAlgebra(g.dim, brackets, labels, check=False)


def heisenberg() -> LieAlgebra:
    """h3: [e1, e2] = e3."""
    return LieAlgebra(3, {(0, 1): {2: 1}})


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})
