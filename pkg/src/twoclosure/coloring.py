"""Orbits of a group on ordered pairs of points, as a matrix coloring.

The pair orbits of a group partition the n x n grid; two groups with the
same pair orbits have the same invariant binary relations, which is the
combinatorial object everything downstream works with.  Color ids are
assigned canonically, by first occurrence in a row-major scan of the grid,
so two colorings describe the same partition iff their matrices are equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation, PermGroup


@dataclass(frozen=True)
class PairColoring:
    """An n x n matrix of color ids; cell (i, j) colors the ordered pair (i, j)."""

    matrix: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.matrix)

    @property
    def num_colors(self) -> int:
        if not self.matrix:
            return 0
        return 1 + max(max(row) for row in self.matrix)

    def color(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def cells(self, color: int) -> tuple[tuple[int, int], ...]:
        """All pairs carrying the given color, row-major order."""
        return tuple(
            (i, j)
            for i, row in enumerate(self.matrix)
            for j, c in enumerate(row)
            if c == color
        )

    def render(self) -> str:
        """One line per row, space-separated color ids."""
        return "\n".join(" ".join(map(str, row)) for row in self.matrix)

    @staticmethod
    def parse(text: str) -> PairColoring:
        rows = [
            tuple(int(tok) for tok in line.split())
            for line in text.splitlines()
            if line.strip()
        ]
        matrix = tuple(rows)
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise ValueError("coloring matrix must be square")
        return PairColoring(matrix)


def orb2(group: PermGroup) -> PairColoring:
    """The coloring of ordered pairs by the group's orbits on them.

    Pairs (i, j) are scanned row-major; each time an uncolored pair is hit
    it seeds a fresh color, which is then spread over its orbit under the
    generators.  Diagonal pairs and off-diagonal pairs can never share an
    orbit, so the diagonal colors are exactly the colors of fixed pairs.
    """
    n = group.degree
    matrix = [[-1] * n for _ in range(n)]
    gens = group.generators
    next_color = 0
    for i in range(n):
        for j in range(n):
            if matrix[i][j] != -1:
                continue
            color = next_color
            next_color += 1
            matrix[i][j] = color
            stack = [(i, j)]
            while stack:
                a, b = stack.pop()
                for g in gens:
                    x, y = g.images[a], g.images[b]
                    if matrix[x][y] == -1:
                        matrix[x][y] = color
                        stack.append((x, y))
    return PairColoring(tuple(tuple(row) for row in matrix))


def preserves(coloring: PairColoring, perm: Permutation) -> bool:
    """True iff the permutation maps every pair to a pair of the same color."""
    if perm.degree != coloring.degree:
        raise ValueError(
            f"degree mismatch: coloring {coloring.degree} vs permutation {perm.degree}"
        )
    m = coloring.matrix
    im = perm.images
    return all(
        m[i][j] == m[im[i]][im[j]]
        for i in range(perm.degree)
        for j in range(perm.degree)
    )


def same_coloring(a: PairColoring, b: PairColoring) -> bool:
    """Partition equality; canonical ids make this plain matrix equality."""
    return a.matrix == b.matrix
