"""Permutations and finitely generated permutation groups.

Everything here works by exact enumeration: the target groups are small
(abelian, desk scale), so stabilizers, membership tests and intersections
all filter the full element set instead of using stabilizer chains.  The
element cap keeps runaway inputs from eating the machine.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterable, Optional

DEFAULT_CAP = 1_000_000


class CapExceeded(Exception):
    """Element enumeration hit the cap before the group was closed."""

    def __init__(self, cap: int, partial: int):
        super().__init__(
            f"element enumeration exceeded cap={cap} ({partial} elements found)"
        )
        self.cap = cap
        self.partial = partial


class NotInvariant(ValueError):
    """The given point set is moved off itself by some generator."""


class NotBlockSystem(ValueError):
    """A generator does not map classes of the given partition onto classes."""


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending (empty for n <= 1)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0..n-1}; ``images[i]`` is where point ``i`` goes.

    Composition is "left first": ``(p * q)(i) == q(p(i))``, matching the
    exponent convention on points, ``i^(pq) = (i^p)^q``.  This is the one
    global convention; see also :func:`compose`.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        seen = [False] * n
        for v in self.images:
            if not 0 <= v < n or seen[v]:
                raise ValueError(f"not a bijection of 0..{n - 1}: {self.images!r}")
            seen[v] = True

    @staticmethod
    def identity(degree: int) -> Permutation:
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Iterable[int]]) -> Permutation:
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            cycle = list(cycle)
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in touched:
                    raise ValueError(f"point {pt} repeated across cycles")
                touched.add(pt)
            for i, pt in enumerate(cycle):
                images[pt] = cycle[(i + 1) % len(cycle)]
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(other.images[v] for v in self.images))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for i, v in enumerate(self.images):
            images[v] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its minimal point, ordered by that point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            cycle = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.images!r})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q: ``compose(p, q).images[i] == q.images[p.images[i]]``."""
    return p * q


@dataclass(frozen=True)
class OrbitPartition:
    """The orbits of a group as a partition of {0..n-1}.

    Classes are sorted internally and listed in order of their minimal
    point, so partitions compare and render deterministically.
    """

    classes: tuple[tuple[int, ...], ...]
    point_to_class: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def index_of(self, point: int) -> int:
        return self.point_to_class[point]

    def class_of(self, point: int) -> tuple[int, ...]:
        return self.classes[self.point_to_class[point]]


class PermGroup:
    """A permutation group of fixed degree, given by generators.

    Immutable after construction.  The full element set is computed lazily
    as the breadth-first closure of the generators under composition and is
    memoized (the memo is lock-protected, so groups are safe to share
    between threads).  Duplicate and identity generators are dropped; an
    empty generator list is the trivial group, and degree 0 is legal.
    """

    __slots__ = ("degree", "generators", "_lock", "_elements", "_orbit_cache")

    def __init__(self, degree: int, generators: Iterable = ()):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        gens: list[Permutation] = []
        seen: set[Permutation] = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(tuple(g))
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._lock = threading.Lock()
        self._elements: Optional[frozenset[Permutation]] = None
        self._orbit_cache: Optional[OrbitPartition] = None

    @staticmethod
    def trivial(degree: int) -> PermGroup:
        return PermGroup(degree, ())

    @staticmethod
    def from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
        """Group whose element set is already known to be closed.

        The caller vouches for closure; the set is installed directly as
        the memoized enumeration, with the non-identity elements as
        generators.
        """
        els = frozenset(elements)
        group = PermGroup(degree, sorted(els))
        group._elements = els | {Permutation.identity(degree)}
        return group

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.degree, self.generators))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, gens=[{gens}])"

    def elements(self, cap: int = DEFAULT_CAP) -> frozenset[Permutation]:
        """All group elements: breadth-first closure of the generators.

        Raises CapExceeded with the partial count if more than ``cap``
        elements are found; the enumeration is complete iff the group
        order is at most ``cap``.
        """
        with self._lock:
            if self._elements is None:
                self._elements = self._close(cap)
            if len(self._elements) > cap:
                raise CapExceeded(cap, cap)
            return self._elements

    def _close(self, cap: int) -> frozenset[Permutation]:
        els = {self.identity()}
        els.update(self.generators)
        if len(els) > cap:
            raise CapExceeded(cap, len(els))
        frontier = list(self.generators)
        while frontier:
            new = []
            for a in frontier:
                for g in self.generators:
                    c = a * g
                    if c not in els:
                        els.add(c)
                        if len(els) > cap:
                            raise CapExceeded(cap, len(els))
                        new.append(c)
            frontier = new
        return frozenset(els)

    def order(self, cap: int = DEFAULT_CAP) -> int:
        return len(self.elements(cap))

    def is_trivial(self, cap: int = DEFAULT_CAP) -> bool:
        return not self.generators

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements()

    def orbits(self) -> OrbitPartition:
        """The orbit partition of the point set, classes ordered by minimal point."""
        with self._lock:
            if self._orbit_cache is not None:
                return self._orbit_cache
            n = self.degree
            assigned = [-1] * n
            classes = []
            for start in range(n):
                if assigned[start] != -1:
                    continue
                idx = len(classes)
                assigned[start] = idx
                orbit = [start]
                stack = [start]
                while stack:
                    x = stack.pop()
                    for g in self.generators:
                        y = g.images[x]
                        if assigned[y] == -1:
                            assigned[y] = idx
                            orbit.append(y)
                            stack.append(y)
                classes.append(tuple(sorted(orbit)))
            self._orbit_cache = OrbitPartition(tuple(classes), tuple(assigned))
            return self._orbit_cache

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def pointwise_stabilizer(self, points: Iterable[int], cap: int = DEFAULT_CAP) -> PermGroup:
        """Subgroup fixing every listed point, with its full element set as generators."""
        pts = self._check_points(points)
        stab = [
            g for g in self.elements(cap) if all(g.images[p] == p for p in pts)
        ]
        return PermGroup.from_elements(self.degree, stab)

    def setwise_stabilizer(self, points: Iterable[int], cap: int = DEFAULT_CAP) -> PermGroup:
        """Subgroup mapping the listed point set onto itself."""
        pts = frozenset(self._check_points(points))
        stab = [
            g for g in self.elements(cap) if frozenset(g.images[p] for p in pts) == pts
        ]
        return PermGroup.from_elements(self.degree, stab)

    def restriction(self, points: Iterable[int]) -> PermGroup:
        """The action induced on an invariant point set, relabeled by sorted order."""
        pts = self._check_points(points)
        index = {p: i for i, p in enumerate(pts)}
        gens = []
        for g in self.generators:
            for p in pts:
                if g.images[p] not in index:
                    raise NotInvariant(
                        f"generator {g} maps point {p} to {g.images[p]}, "
                        f"outside the given set"
                    )
            gens.append(Permutation(tuple(index[g.images[p]] for p in pts)))
        return PermGroup(len(pts), gens)

    def is_subgroup_of(self, other: PermGroup, cap: int = DEFAULT_CAP) -> bool:
        """True iff every element of this group lies in ``other`` (degrees must match)."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return self.elements(cap) <= other.elements(cap)

    def induced_on_orbits(self, inner: PermGroup) -> PermGroup:
        """The action of this group on the orbits of ``inner``.

        The orbit classes of ``inner`` (indexed by minimal point) must form
        a block system for every generator; otherwise NotBlockSystem is
        raised.  With a trivial ``inner`` this is just a relabeling onto
        singletons, an isomorphic copy.
        """
        if inner.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {inner.degree}")
        part = inner.orbits()
        gens = []
        for g in self.generators:
            images = []
            for cls in part.classes:
                j = part.point_to_class[g.images[cls[0]]]
                if any(part.point_to_class[g.images[p]] != j for p in cls):
                    raise NotBlockSystem(
                        f"generator {g} smears orbit {cls} over several classes"
                    )
                images.append(j)
            gens.append(Permutation(tuple(images)))
        return PermGroup(len(part.classes), gens)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            gens[i] * gens[j] == gens[j] * gens[i]
            for i in range(len(gens))
            for j in range(i + 1, len(gens))
        )

    def is_p_group(self, cap: int = DEFAULT_CAP) -> Optional[int]:
        """The prime p if the group order is a nontrivial p-power, else None."""
        primes = prime_factors(self.order(cap))
        if len(primes) == 1:
            return primes[0]
        return None

    def cyclic_constituents(self, cap: int = DEFAULT_CAP) -> bool:
        """True iff the action induced on every orbit is a cyclic group."""
        for cls in self.orbits().classes:
            constituent = self.restriction(cls)
            target = constituent.order(cap)
            if not any(g.order() == target for g in constituent.elements(cap)):
                return False
        return True

    def _check_points(self, points: Iterable[int]) -> tuple[int, ...]:
        pts = tuple(sorted(set(points)))
        for p in pts:
            if not 0 <= p < self.degree:
                raise ValueError(f"point {p} out of range for degree {self.degree}")
        return pts
