"""Free nilpotent Lie algebras presented on a Hall basis.

Hall set convention: generators x1 < ... < xp come first; a bracket [u, v] of
Hall elements is a Hall element iff u < v and (v is a generator or v = [a, b]
with a <= u). Elements are ordered by degree, then by creation order (which is
lexicographic in the construction loops), so indices are comparable directly.
Degree-2 elements are [xi, xj] with i < j, keeping wedge-style orientation.
"""

from __future__ import annotations

from .liealg import LieAlgebra


class HallBasis:
    """Hall basis of the free Lie algebra on p generators, degrees <= k."""

    def __init__(self, p: int, k: int):
        if p < 1 or k < 1:
            raise ValueError("need p >= 1 generators and k >= 1 steps")
        self.p = p
        self.k = k
        self.degree: list[int] = []
        self.left: list[int] = []  # -1 for generators
        self.right: list[int] = []
        self.by_degree: list[list[int]] = [[] for _ in range(k + 1)]
        self._pair_index: dict[tuple[int, int], int] = {}
        self._memo: dict[tuple[int, int], dict[int, int]] = {}

        for i in range(p):
            self._new_element(1, -1, -1)
        for d in range(2, k + 1):
            for d1 in range(1, d // 2 + 1):
                d2 = d - d1
                for u in self.by_degree[d1]:
                    for v in self.by_degree[d2]:
                        if u < v and self._hall_pair(u, v):
                            idx = self._new_element(d, u, v)
                            self._pair_index[(u, v)] = idx

    def _new_element(self, degree: int, left: int, right: int) -> int:
        idx = len(self.degree)
        self.degree.append(degree)
        self.left.append(left)
        self.right.append(right)
        self.by_degree[degree].append(idx)
        return idx

    def _hall_pair(self, u: int, v: int) -> bool:
        return self.left[v] == -1 or self.left[v] <= u

    def __len__(self) -> int:
        return len(self.degree)

    @property
    def graded_dims(self) -> tuple[int, ...]:
        return tuple(len(self.by_degree[d]) for d in range(1, self.k + 1))

    def label(self, idx: int) -> str:
        if self.left[idx] == -1:
            return f"x{idx + 1}"
        return f"[{self.label(self.left[idx])},{self.label(self.right[idx])}]"

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(len(self))]

    def expand_bracket(self, a: int, b: int) -> dict[int, int]:
        """[h_a, h_b] as an integer combination of Hall elements (deg > k drops)."""
        if a == b:
            return {}
        if a > b:
            return {m: -c for m, c in self.expand_bracket(b, a).items()}
        key = (a, b)
        cached = self._memo.get(key)
        if cached is not None:
            return dict(cached)
        if self.degree[a] + self.degree[b] > self.k:
            result: dict[int, int] = {}
        elif self._hall_pair(a, b):
            result = {self._pair_index[(a, b)]: 1}
        else:
            # b = [u, v] with u > a: [a,[u,v]] = [[a,u],v] + [u,[a,v]]
            u, v = self.left[b], self.right[b]
            result = {}
            for m, c in self.expand_bracket(a, u).items():
                for t, s in self.expand_bracket(m, v).items():
                    result[t] = result.get(t, 0) + c * s
            for m, c in self.expand_bracket(a, v).items():
                for t, s in self.expand_bracket(u, m).items():
                    result[t] = result.get(t, 0) + c * s
            result = {t: c for t, c in result.items() if c}
        self._memo[key] = result
        return dict(result)


def free_nilpotent(p: int, k: int) -> LieAlgebra:
    """Free k-step nilpotent Lie algebra on p generators (Hall presentation)."""
    basis = HallBasis(p, k)
    n = len(basis)
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = basis.expand_bracket(i, j)
            if terms:
                brackets[(i, j)] = terms
    return LieAlgebra(n, brackets, basis.labels())
