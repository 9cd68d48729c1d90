"""Finite groups as explicit multiplication tables.

Key class: FiniteGroup
Key functions: cyclic_group, symmetric_group, group_from_permutations
"""
from bootstrap.primary_imports import itertools
from utils.errors import StructureError


class FiniteGroup:
    """Group on indices 0..n-1 with table[g][h] = gh; the group law is verified on construction."""

    def __init__(self, name, table, labels=None):
        self.name = name
        self.table = [list(map(int, row)) for row in table]
        self.order = len(self.table)
        self.labels = list(labels) if labels is not None else [str(g) for g in range(self.order)]
        self._validate()
        self.identity = self._find_identity()
        self._inverse = [self._find_inverse(g) for g in range(self.order)]

    def _validate(self):
        n = self.order
        if n == 0:
            raise StructureError(f"group {self.name} is empty")
        for g, row in enumerate(self.table):
            if len(row) != n:
                raise StructureError(f"row {g} of group {self.name} has {len(row)} entries, expected {n}")
            for h in row:
                if not 0 <= h < n:
                    raise StructureError(f"entry {h} in row {g} of group {self.name} is out of range")
        for g, h, k in itertools.product(range(n), repeat=3):
            if self.table[self.table[g][h]][k] != self.table[g][self.table[h][k]]:
                raise StructureError(
                    f"group {self.name} is not associative at ({self.labels[g]}, {self.labels[h]}, {self.labels[k]})"
                )

    def _find_identity(self):
        for e in range(self.order):
            if all(self.table[e][g] == g and self.table[g][e] == g for g in range(self.order)):
                return e
        raise StructureError(f"group {self.name} has no identity element")

    def _find_inverse(self, g):
        for h in range(self.order):
            if self.table[g][h] == self.identity and self.table[h][g] == self.identity:
                return h
        raise StructureError(f"element {self.labels[g]} of group {self.name} has no inverse")

    def mul(self, g, h):
        return self.table[g][h]

    def inverse(self, g):
        return self._inverse[g]

    def conj(self, x, g):
        """x⁻¹ g x."""
        return self.mul(self.inverse(x), self.mul(g, x))

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def cyclic_group(n, name=None):
    """Z_n with element k the class of k; labels 'e', 'x', 'x^2', ..."""
    labels = ["e"] + ["x" if k == 1 else f"x^{k}" for k in range(1, n)]
    return FiniteGroup(name or f"Z{n}", [[(a + b) % n for b in range(n)] for a in range(n)], labels)


def group_from_permutations(name, perms, labels=None):
    """Group of the given permutations (tuples of images), composed right-to-left: (pq)(i) = p(q(i))."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    if len(index) != len(perms):
        raise StructureError(f"group {name} lists a permutation twice")
    table = []
    for p in perms:
        row = []
        for q in perms:
            pq = tuple(p[q[i]] for i in range(len(q)))
            if pq not in index:
                raise StructureError(f"permutations of group {name} are not closed under composition")
            row.append(index[pq])
        table.append(row)
    return FiniteGroup(name, table, labels or ["".join(map(str, p)) for p in perms])


def symmetric_group(m=3):
    """S_m on {0..m-1}; the identity permutation comes first."""
    perms = list(itertools.permutations(range(m)))
    return group_from_permutations(f"S{m}", perms, [_cycle_label(p) for p in perms])


def _cycle_label(p):
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = p[i]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "e"
