"""Finite crystallographic root systems of types A--G in simple-root coordinates.

Every root is stored as an integer coefficient vector over the simple roots,
so all arithmetic is exact.  Nodes follow the Bourbaki numbering: in D4 the
trivalent node is node 2, and in G2 node 1 carries the short root, so the
highest root of G2 has coefficient vector (3, 2).

The Cartan matrix convention is ``cartan_matrix[i][j] = <alpha_i, alpha_j^vee>``
(0-based rows/columns for nodes i+1, j+1), so the simple reflection acts by

    s_j(v) = v - <v, alpha_j^vee> alpha_j,   <v, alpha_j^vee> = sum_k v_k A[k][j].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidCartanType, WrongType

# A root or root-lattice vector: integer coefficients over the simple roots.
Root = tuple[int, ...]

_FAMILIES = "ABCDEFG"

# Number of positive roots per family, used as a construction cross-check.
_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class CartanType:
    """A Cartan family letter together with a rank, e.g. ``CartanType("D", 4)``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise InvalidCartanType(f"unknown family {self.family!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[self.family]
        if not ok:
            raise InvalidCartanType(f"rank {n} is not allowed for family {self.family}")

    @classmethod
    def parse(cls, label: str) -> "CartanType":
        """Parse labels like ``"A3"``, ``"d4"`` or ``"G2"`` (case-insensitive).

        >>> CartanType.parse("b3")
        CartanType(family='B', rank=3)
        """
        text = label.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidCartanType(f"cannot parse Cartan type {label!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def height(v: Root) -> int:
    """Sum of simple-root coefficients; >= 1 for positive roots."""
    return sum(v)


def is_positive(v: Root) -> bool:
    """True iff v is a nonzero vector with all coefficients >= 0."""
    return any(v) and all(c >= 0 for c in v)


def is_negative(v: Root) -> bool:
    return any(v) and all(c <= 0 for c in v)


def negate(v: Root) -> Root:
    return tuple(-c for c in v)


def _edges(ct: CartanType) -> list[tuple[int, int, int, int]]:
    """Dynkin edges as (i, j, a_ij, a_ji) with 1-based nodes, a_ij = <alpha_i, alpha_j^vee>."""
    n = ct.rank
    f = ct.family
    chain = [(i, i + 1, -1, -1) for i in range(1, n)]
    if f == "A":
        return chain
    if f == "B":  # alpha_n short
        return chain[:-1] + [(n - 1, n, -2, -1)]
    if f == "C":  # alpha_n long
        return chain[:-1] + [(n - 1, n, -1, -2)]
    if f == "D":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 2, n, -1, -1)]
    if f == "E":
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if n >= 7:
            edges.append((6, 7))
        if n == 8:
            edges.append((7, 8))
        return [(i, j, -1, -1) for i, j in edges]
    if f == "F":  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        return [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    if f == "G":  # alpha_1 short, alpha_2 long
        return [(1, 2, -1, -3)]
    raise InvalidCartanType(f.family)


def _cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(ct):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji
    return tuple(tuple(row) for row in a)


class RootSystem:
    """Cartan data plus the full positive-root list of a finite root system.

    Immutable after construction; safe to share across threads.  The private
    ``_cache`` dict holds memo tables (Bruhat order, group tables); its values
    are deterministic, so concurrent idempotent writes are harmless under the
    GIL and correctness never depends on a cache hit.
    """

    def __init__(self, cartan_type: CartanType) -> None:
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan_matrix = _cartan_matrix(cartan_type)
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if k == i else 0 for k in range(self.rank)) for i in range(self.rank)
        )
        self.simple_root_names = tuple(f"a{i + 1}" for i in range(self.rank))
        self.positive_roots = self._close_positive_roots()
        self.positive_root_set = frozenset(self.positive_roots)
        highs = [v for v in self.positive_roots if height(v) == height(self.positive_roots[-1])]
        assert len(highs) == 1, "highest root must be unique"
        self.highest_root: Root = highs[0]
        self._cache: dict = {}

    def _close_positive_roots(self) -> tuple[Root, ...]:
        # Breadth-first closure of the simple roots under simple reflections,
        # keeping positive vectors only.  Every positive root arises this way.
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            new = []
            for v in frontier:
                for i in range(1, self.rank + 1):
                    w = reflect(self, i, v)
                    if is_positive(w) and w not in seen:
                        seen.add(w)
                        new.append(w)
            frontier = new
        expected = _POSITIVE_COUNTS[self.cartan_type.family](self.rank)
        assert len(seen) == expected, (self.cartan_type, len(seen), expected)
        return tuple(sorted(seen, key=lambda v: (height(v), v)))

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def build_root_system(ct: CartanType | str) -> RootSystem:
    """Construct the root system for a Cartan type or a label like ``"D4"``."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return RootSystem(ct)


def pairing_with_coroot(rs: RootSystem, v: Root, i: int) -> int:
    """Exact value of <v, alpha_i^vee> for a root-lattice vector v."""
    col = i - 1
    return sum(v[k] * rs.cartan_matrix[k][col] for k in range(rs.rank))


def reflect(rs: RootSystem, i: int, v: Root) -> Root:
    """Apply the simple reflection s_i to a root-lattice vector.

    >>> rs = build_root_system("A2")
    >>> reflect(rs, 1, (0, 1))
    (1, 1)
    """
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple index {i} out of range for {rs.cartan_type}")
    c = pairing_with_coroot(rs, v, i)
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def cominuscule_nodes(rs: RootSystem) -> frozenset[int]:
    """Nodes whose simple root has coefficient 1 in the highest root."""
    return frozenset(i + 1 for i, c in enumerate(rs.highest_root) if c == 1)


def format_root(rs: RootSystem, v: Root) -> str:
    """Human-readable form, e.g. ``a1+2a2`` or ``-a1-a2``; ``0`` for the zero vector.

    >>> format_root(build_root_system("D4"), (1, 2, 1, 1))
    'a1+2a2+a3+a4'
    """
    parts = []
    for name, c in zip(rs.simple_root_names, v):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}{name}")
    return "".join(parts) if parts else "0"


def _epsilon_matrix(ct: CartanType) -> list[list[int]]:
    """Rows = simple roots written in the orthogonal epsilon basis (A/B/C/D only)."""
    n = ct.rank
    f = ct.family
    if f == "A":
        dim = n + 1
        rows = [[0] * dim for _ in range(n)]
        for i in range(n):
            rows[i][i], rows[i][i + 1] = 1, -1
        return rows
    if f in ("B", "C", "D"):
        rows = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            rows[i][i], rows[i][i + 1] = 1, -1
        if f == "B":
            rows[n - 1][n - 1] = 1
        elif f == "C":
            rows[n - 1][n - 1] = 2
        else:
            rows[n - 1] = [0] * n
            rows[n - 1][n - 2], rows[n - 1][n - 1] = 1, 1
        return rows
    raise WrongType(f"epsilon coordinates supported for families A-D, not {f}")


def root_to_epsilon(rs: RootSystem, v: Root) -> tuple[int, ...]:
    """Rewrite a root-lattice vector in epsilon coordinates (families A--D)."""
    mat = _epsilon_matrix(rs.cartan_type)
    dim = len(mat[0])
    return tuple(sum(v[i] * mat[i][j] for i in range(rs.rank)) for j in range(dim))


def root_from_epsilon(rs: RootSystem, eps: tuple[int, ...]) -> Root:
    """Inverse of :func:`root_to_epsilon`; raises if eps is not in the root lattice.

    >>> rs = build_root_system("D4")
    >>> root_from_epsilon(rs, (1, 1, 0, 0))   # eps1 + eps2, the highest root
    (1, 2, 1, 1)
    """
    mat = _epsilon_matrix(rs.cartan_type)
    dim = len(mat[0])
    if len(eps) != dim:
        raise WrongType(f"expected an epsilon vector of length {dim}")
    # Solve sum_i c_i * mat[i] = eps exactly over the rationals.
    aug = [[Fraction(mat[i][j]) for i in range(rs.rank)] + [Fraction(eps[j])] for j in range(dim)]
    pivots = []
    row = 0
    for col in range(rs.rank):
        piv = next((r for r in range(row, dim) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        scale = aug[row][col]
        aug[row] = [x / scale for x in aug[row]]
        for r in range(dim):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, dim):
        if aug[r][-1] != 0:
            raise WrongType(f"{eps} is not in the root lattice of {rs.cartan_type}")
    coeffs = [Fraction(0)] * rs.rank
    for r, col in enumerate(pivots):
        coeffs[col] = aug[r][-1]
    if any(c.denominator != 1 for c in coeffs):
        raise WrongType(f"{eps} is not an integer root-lattice vector")
    return tuple(int(c) for c in coeffs)
