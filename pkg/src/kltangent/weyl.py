"""Weyl group elements, words, Bruhat order, gamma-sequences and coset minima.

An element is represented by its exact integer action on the root lattice in
the simple-root basis; equality and hashing use that matrix alone, so every
representation-dependent artifact (choice of word, construction path) is
invisible.  Words are tuples of 1-based simple-reflection indices and both
act and multiply left to right: the word (1, 2) denotes s1*s2, which sends a
vector v to s1(s2(v)).

The gamma-sequence of a reduced word (s_1, ..., s_l) is

    gamma_i = s_1 ... s_{i-1}(alpha_i),

which lists the inversion set I(x^{-1}) = Phi^+ cap x Phi^- without repeats.
(A variant with prefix s_1 ... s_i also circulates in the literature, but it
produces negative vectors -- already gamma_1 = -alpha_1 -- so it cannot
enumerate I(x^{-1}); this module uses the prefix-(i-1) form and asserts
positivity and distinctness at runtime.)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .errors import GroupTooLarge, LengthBoundExceeded, LetterOutOfRange, NotReduced
from .rootsys import Root, RootSystem, is_negative, negate

Word = tuple[int, ...]

_WORD_BOUND = 16  # default guard for all_reduced_words
_GROUP_GUARD = 400_000  # default guard for whole-group enumeration; E8 refused


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: its matrix on the root lattice plus cached length."""

    rows: tuple[tuple[int, ...], ...]
    length: int = field(compare=False)

    def __repr__(self) -> str:
        return f"WeylElement(length={self.length}, rows={self.rows})"


@dataclass(frozen=True)
class GammaSequence:
    """The ordered inversion roots gamma_1..gamma_l attached to a reduced word."""

    word: Word
    gammas: tuple[Root, ...]


def parse_word(text: str) -> Word:
    """Parse ``"1 2 1"``, ``"s1 s2 s1"`` or ``"1,2,1"`` into a Word.

    >>> parse_word("s1 s2 s1")
    (1, 2, 1)
    >>> parse_word("")
    ()
    """
    tokens = text.replace(",", " ").split()
    letters = []
    for tok in tokens:
        body = tok[1:] if tok[:1] in ("s", "S") else tok
        if not body.isdigit():
            raise LetterOutOfRange(f"cannot parse word token {tok!r}")
        letters.append(int(body))
    return tuple(letters)


def _mat_mul(a: tuple[tuple[int, ...], ...], b: tuple[tuple[int, ...], ...]):
    n = len(a)
    rng = range(n)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in rng) for j in rng) for i in rng)


def act_on_root(x: WeylElement, v: Root) -> Root:
    """Image x(v) of a root-lattice vector."""
    return tuple(sum(row[k] * v[k] for k in range(len(row))) for row in x.rows)


def _length_from_rows(rs: RootSystem, rows) -> int:
    count = 0
    for beta in rs.positive_roots:
        img = tuple(sum(row[k] * beta[k] for k in range(rs.rank)) for row in rows)
        if min(img) < 0:
            count += 1
    return count


def _element(rs: RootSystem, rows, length: int | None = None) -> WeylElement:
    if length is None:
        length = _length_from_rows(rs, rows)
    return WeylElement(rows, length)


def identity_element(rs: RootSystem) -> WeylElement:
    cached = rs._cache.get("identity")
    if cached is None:
        rows = tuple(tuple(1 if i == j else 0 for j in range(rs.rank)) for i in range(rs.rank))
        cached = WeylElement(rows, 0)
        rs._cache["identity"] = cached
    return cached


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise LetterOutOfRange(f"letter {i} out of range for {rs.cartan_type}")
    table = rs._cache.get("simples")
    if table is None:
        table = {}
        for j in range(1, rs.rank + 1):
            rows = []
            for out in range(rs.rank):
                if out != j - 1:
                    rows.append(tuple(1 if k == out else 0 for k in range(rs.rank)))
                else:
                    rows.append(
                        tuple(
                            (1 if k == out else 0) - rs.cartan_matrix[k][j - 1]
                            for k in range(rs.rank)
                        )
                    )
            table[j] = WeylElement(tuple(rows), 1)
        rs._cache["simples"] = table
    return table[i]


def multiply(rs: RootSystem, x: WeylElement, y: WeylElement) -> WeylElement:
    return _element(rs, _mat_mul(x.rows, y.rows))


def has_right_ascent(x: WeylElement, i: int) -> bool:
    """True iff l(x * s_i) > l(x), i.e. x(alpha_i) is a positive root."""
    col = i - 1
    return all(row[col] >= 0 for row in x.rows)


_RMUL_MEMO_ORDER_MAX = 5_000  # memoize products only for groups this small


def _rmul_memo(rs: RootSystem) -> dict | None:
    memo = rs._cache.get("rmul")
    if memo is None:
        memo = {} if weyl_group_order(rs) <= _RMUL_MEMO_ORDER_MAX else False
        rs._cache["rmul"] = memo
    return memo if memo is not False else None


def right_multiply_simple(rs: RootSystem, x: WeylElement, i: int) -> WeylElement:
    memo = _rmul_memo(rs)
    key = (x.rows, i)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    s = simple_reflection(rs, i)
    delta = 1 if has_right_ascent(x, i) else -1
    out = WeylElement(_mat_mul(x.rows, s.rows), x.length + delta)
    if memo is not None:
        memo[key] = out
    return out


def left_multiply_simple(rs: RootSystem, x: WeylElement, i: int) -> WeylElement:
    s = simple_reflection(rs, i)
    rows = _mat_mul(s.rows, x.rows)
    delta = 1 if i not in left_descents(rs, x) else -1
    return WeylElement(rows, x.length + delta)


def word_to_element(rs: RootSystem, w: Word) -> WeylElement:
    """Left-to-right product of simple reflections; length read off the action."""
    cur = identity_element(rs)
    for letter in w:
        if not 1 <= letter <= rs.rank:
            raise LetterOutOfRange(f"letter {letter} out of range for {rs.cartan_type}")
        cur = right_multiply_simple(rs, cur, letter)
    return cur


def is_reduced(rs: RootSystem, w: Word) -> bool:
    return word_to_element(rs, w).length == len(w)


def right_descents(rs: RootSystem, x: WeylElement) -> frozenset[int]:
    return frozenset(i for i in range(1, rs.rank + 1) if not has_right_ascent(x, i))


def left_descents(rs: RootSystem, x: WeylElement) -> frozenset[int]:
    """{i : l(s_i x) < l(x)} = {i : alpha_i in I(x^{-1})}."""
    inv = inversion_set_of_inverse(rs, x)
    return frozenset(i for i, alpha in enumerate(rs.simple_roots, start=1) if alpha in inv)


def inversion_set_of_inverse(rs: RootSystem, x: WeylElement) -> frozenset[Root]:
    """I(x^{-1}) = Phi^+ cap x Phi^-, the positive roots x^{-1} makes negative."""
    out = []
    for beta in rs.positive_roots:
        img = act_on_root(x, beta)
        if is_negative(img):
            out.append(negate(img))
    assert len(out) == x.length
    return frozenset(out)


def inverse(rs: RootSystem, x: WeylElement) -> WeylElement:
    rev = tuple(reversed(canonical_reduced_word(rs, x)))
    out = word_to_element(rs, rev)
    assert out.length == x.length
    return out


def bruhat_leq(rs: RootSystem, u: WeylElement, v: WeylElement) -> bool:
    """Decide u <= v in Bruhat order by the standard descent recursion.

    With s a right descent of v:  u <= v  iff  (us <= vs when l(us) < l(u),
    else u <= vs).  Memoized per root system; results are deterministic so the
    cache tolerates concurrent idempotent writes.
    """
    memo = rs._cache.setdefault("bruhat", {})

    def rec(a: WeylElement, b: WeylElement) -> bool:
        if a.length > b.length:
            return False
        if a.length == b.length:
            return a == b
        key = (a.rows, b.rows)
        hit = memo.get(key)
        if hit is not None:
            return hit
        i = next(j for j in range(1, rs.rank + 1) if not has_right_ascent(b, j))
        bs = right_multiply_simple(rs, b, i)
        if not has_right_ascent(a, i):
            result = rec(right_multiply_simple(rs, a, i), bs)
        else:
            result = rec(a, bs)
        memo[key] = result
        return result

    return rec(u, v)


def gamma_sequence(rs: RootSystem, w: Word) -> GammaSequence:
    """gamma_i = s_1...s_{i-1}(alpha_i) for a reduced word; raises NotReduced else.

    In A2 the word (1, 2, 1) yields (alpha1, alpha1+alpha2, alpha2): the
    sequence walks through I(x^{-1}) in the order the word inverts roots.
    """
    if not is_reduced(rs, w):
        raise NotReduced(f"word {w} is not reduced over {rs.cartan_type}")
    gammas = []
    prefix = identity_element(rs)
    for letter in w:
        gammas.append(act_on_root(prefix, rs.simple_roots[letter - 1]))
        prefix = right_multiply_simple(rs, prefix, letter)
    assert all(g in rs.positive_root_set for g in gammas), "gamma formula must stay positive"
    assert len(set(gammas)) == len(gammas), "gamma values must be pairwise distinct"
    assert frozenset(gammas) == inversion_set_of_inverse(rs, prefix)
    return GammaSequence(w, tuple(gammas))


def canonical_reduced_word(rs: RootSystem, x: WeylElement) -> Word:
    """Lexicographically least reduced word, via greedy smallest left descent."""
    letters = []
    cur = x
    while cur.length:
        i = min(left_descents(rs, cur))
        letters.append(i)
        cur = left_multiply_simple(rs, cur, i)
    return tuple(letters)


def all_reduced_words(rs: RootSystem, x: WeylElement, max_length: int = _WORD_BOUND) -> list[Word]:
    """Every reduced word of x, by depth-first descent (guarded by max_length)."""
    if x.length > max_length:
        raise LengthBoundExceeded(f"l(x)={x.length} exceeds the bound {max_length}")
    memo: dict[tuple, list[Word]] = {}

    def rec(y: WeylElement) -> list[Word]:
        if y.length == 0:
            return [()]
        hit = memo.get(y.rows)
        if hit is not None:
            return hit
        words = []
        for i in sorted(left_descents(rs, y)):
            for tail in rec(left_multiply_simple(rs, y, i)):
                words.append((i,) + tail)
        memo[y.rows] = words
        return words

    return rec(x)


def is_min_coset_rep(rs: RootSystem, x: WeylElement, parabolic) -> bool:
    """True iff x(alpha_i) > 0 for every i in the parabolic generator set.

    Equivalently l(x s_i) > l(x) for all i in P, i.e. x is the minimal-length
    element of the coset x W_P.
    """
    for i in parabolic:
        if not 1 <= i <= rs.rank:
            raise LetterOutOfRange(f"parabolic node {i} out of range for {rs.cartan_type}")
        if not has_right_ascent(x, i):
            return False
    return True


def weyl_group_order(rs: RootSystem) -> int:
    n = rs.rank
    f = rs.cartan_type.family
    if f == "A":
        return factorial(n + 1)
    if f in ("B", "C"):
        return (2**n) * factorial(n)
    if f == "D":
        return (2 ** (n - 1)) * factorial(n)
    return {"E": {6: 51_840, 7: 2_903_040, 8: 696_729_600}, "F": {4: 1_152}, "G": {2: 12}}[f][n]


def enumerate_weyl_group(rs: RootSystem, guard: int = _GROUP_GUARD) -> list[WeylElement]:
    """All elements by breadth-first right multiplication, shortest first."""
    order = weyl_group_order(rs)
    if order > guard:
        raise GroupTooLarge(f"|W({rs.cartan_type})| = {order} exceeds the guard {guard}")
    e = identity_element(rs)
    seen = {e.rows}
    layer = [e]
    out = [e]
    while layer:
        nxt = []
        for x in layer:
            for i in range(1, rs.rank + 1):
                if has_right_ascent(x, i):
                    y = right_multiply_simple(rs, x, i)
                    if y.rows not in seen:
                        seen.add(y.rows)
                        nxt.append(y)
        nxt.sort(key=lambda z: z.rows)
        out.extend(nxt)
        layer = nxt
    assert len(out) == order
    return out


def longest_element(rs: RootSystem) -> WeylElement:
    cur = identity_element(rs)
    progress = True
    while progress:
        progress = False
        for i in range(1, rs.rank + 1):
            if has_right_ascent(cur, i):
                cur = right_multiply_simple(rs, cur, i)
                progress = True
                break
    assert cur.length == len(rs.positive_roots)
    return cur


class GroupTable:
    """Id-indexed multiplication tables for a whole (small) Weyl group.

    Used by the exhaustive verification suites: elements become integers,
    right/left multiplication and 0-Hecke products become list lookups, and
    Bruhat order becomes a bitmask test.  Built lazily, once per root system.
    """

    def __init__(self, rs: RootSystem, guard: int = _GROUP_GUARD) -> None:
        self.rs = rs
        self.elements = enumerate_weyl_group(rs, guard)
        self.index = {x.rows: i for i, x in enumerate(self.elements)}
        self.length = [x.length for x in self.elements]
        n = rs.rank
        size = len(self.elements)
        self.rmult = [[0] * size for _ in range(n)]
        self.lmult = [[0] * size for _ in range(n)]
        self.hecke = [[0] * size for _ in range(n)]
        for idx, x in enumerate(self.elements):
            for i in range(1, n + 1):
                r = self.index[right_multiply_simple(rs, x, i).rows]
                self.rmult[i - 1][idx] = r
                self.hecke[i - 1][idx] = r if self.length[r] > x.length else idx
                self.lmult[i - 1][idx] = self.index[left_multiply_simple(rs, x, i).rows]
        self.identity = self.index[identity_element(rs).rows]
        self._leq: list[int] | None = None

    def leq_masks(self) -> list[int]:
        """leq_masks()[v] has bit u set iff u <= v in Bruhat order."""
        if self._leq is not None:
            return self._leq
        size = len(self.elements)
        masks = [0] * size
        masks[self.identity] = 1 << self.identity
        for v in range(size):  # elements are sorted by length, shortest first
            if self.length[v] == 0:
                continue
            s = next(i for i in range(self.rs.rank) if self.length[self.rmult[i][v]] < self.length[v])
            smaller = masks[self.rmult[s][v]]
            rm = self.rmult[s]
            lv = self.length
            mask = 0
            for u in range(size):
                us = rm[u]
                ok = (smaller >> us) & 1 if lv[us] < lv[u] else (smaller >> u) & 1
                if ok:
                    mask |= 1 << u
            masks[v] = mask
        self._leq = masks
        return masks

    def leq(self, u: int, v: int) -> bool:
        return bool((self.leq_masks()[v] >> u) & 1)

    def word_of(self, idx: int) -> Word:
        return canonical_reduced_word(self.rs, self.elements[idx])

    def demazure_fold(self, letters, start: int | None = None) -> int:
        cur = self.identity if start is None else start
        for letter in letters:
            cur = self.hecke[letter - 1][cur]
        return cur

    def product_fold(self, letters, start: int | None = None) -> int:
        cur = self.identity if start is None else start
        for letter in letters:
            cur = self.rmult[letter - 1][cur]
        return cur

    def reduced_words_of(self, idx: int):
        """Yield all reduced words of the element with the given id."""
        stack = [(idx, ())]
        while stack:
            cur, prefix = stack.pop()
            if self.length[cur] == 0:
                yield prefix
                continue
            for i in range(self.rs.rank, 0, -1):
                down = self.lmult[i - 1][cur]
                if self.length[down] < self.length[cur]:
                    stack.append((down, prefix + (i,)))


def group_table(rs: RootSystem, guard: int = _GROUP_GUARD) -> GroupTable:
    table = rs._cache.get("group_table")
    if table is None:
        table = GroupTable(rs, guard)
        rs._cache["group_table"] = table
    return table
