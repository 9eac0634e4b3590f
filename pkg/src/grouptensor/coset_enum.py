"""Finitely presented groups and Todd-Coxeter coset enumeration.

Enumeration is always over the trivial subgroup, so a completed table is the
regular representation of the presented group and its coset count is the
group order.  The strategy is HLT: relators are scanned and filled at every
live coset in index order, coincidences are processed immediately through a
FIFO queue backed by a union-find with path compression, and rows are filled
after scanning so every generator image gets defined.  The whole procedure
is deterministic: identical input produces an identical table.

Words are sequences of signed 1-based generator numbers, ``+g`` for the
generator ``g-1`` and ``-g`` for its inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ConsistencyError, LimitError, SpecError
from .groups import FiniteGroup, conjugate

DEFAULT_MAX_COSETS = 1_000_000

# Generators above this group order would make the all-pairs presentation
# unmanageable (|G|^2 generators, 2|G|^3 relators).
TENSOR_PRESENTATION_MAX_ORDER = 64


@dataclass(frozen=True)
class Presentation:
    """A finite presentation: generator count plus relator words."""

    generator_count: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.generator_count < 0:
            raise SpecError("generator count must be nonnegative")
        for word in self.relators:
            if not word:
                raise SpecError("relator words must be nonempty")
            for letter in word:
                if letter == 0 or abs(letter) > self.generator_count:
                    raise SpecError(f"relator letter {letter} out of range")


COMPLETED = "completed"
EXCEEDED = "exceeded-limit"


@dataclass(frozen=True)
class CosetTable:
    """Result of an enumeration.

    ``rows[c]`` has ``2 * generator_count`` entries: column ``2g`` is the
    action of generator ``g`` on coset ``c`` and column ``2g + 1`` the action
    of its inverse.  Coset 0 is the identity coset.  For an exceeded-limit
    result the rows are absent and ``coset_count`` reports the number of live
    cosets at the point enumeration stopped.
    """

    generator_count: int
    coset_count: int
    status: str
    rows: tuple[tuple[int, ...], ...] = field(default=())

    def action(self, coset: int, letter: int) -> int:
        """Apply a signed generator letter to a coset."""
        g = abs(letter) - 1
        return self.rows[coset][2 * g + (0 if letter > 0 else 1)]


def _column(letter: int) -> int:
    g = abs(letter) - 1
    return 2 * g + (0 if letter > 0 else 1)


def todd_coxeter(
    presentation: Presentation, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """Enumerate cosets of the trivial subgroup in the presented group.

    Returns a completed, compacted, verified table, or a table whose status
    is ``exceeded-limit`` if more than ``max_cosets`` cosets would be live at
    once.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    ncols = 2 * presentation.generator_count
    # duplicate relators add nothing to the enumeration; preserve first-seen order
    words = list(
        dict.fromkeys(
            tuple(_column(letter) for letter in word)
            for word in presentation.relators
        )
    )

    table: list[list[Optional[int]]] = [[None] * ncols]
    parent = [0]  # union-find over cosets; dead cosets point below themselves
    live = 1

    def rep(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(alpha: int, col: int) -> int:
        nonlocal live
        if live >= max_cosets:
            raise _Overflow
        beta = len(table)
        table.append([None] * ncols)
        parent.append(beta)
        table[alpha][col] = beta
        table[beta][col ^ 1] = alpha
        live += 1
        return beta

    queue: deque[int] = deque()

    def merge(a: int, b: int) -> None:
        nonlocal live
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        live -= 1
        queue.append(b)

    def coincidence(a: int, b: int) -> None:
        merge(a, b)
        while queue:
            gamma = queue.popleft()
            row = table[gamma]
            for col in range(ncols):
                delta = row[col]
                if delta is None:
                    continue
                if table[delta][col ^ 1] == gamma:
                    table[delta][col ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][col] is not None:
                    merge(nu, table[mu][col])
                elif table[nu][col ^ 1] is not None:
                    merge(mu, table[nu][col ^ 1])
                else:
                    table[mu][col] = nu
                    table[nu][col ^ 1] = mu

    def scan_and_fill(alpha: int, word: tuple[int, ...]) -> None:
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                if f != b:
                    coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            f = define(f, word[i])
            i += 1

    try:
        alpha = 0
        while alpha < len(table):
            if rep(alpha) != alpha:
                alpha += 1
                continue
            for word in words:
                scan_and_fill(alpha, word)
                if rep(alpha) != alpha:
                    break
            else:
                # definitions never merge cosets, so alpha stays live here
                for col in range(ncols):
                    if table[alpha][col] is None:
                        define(alpha, col)
            alpha += 1
    except _Overflow:
        return CosetTable(
            generator_count=presentation.generator_count,
            coset_count=live,
            status=EXCEEDED,
        )

    alive = [c for c in range(len(table)) if rep(c) == c]
    renum = {old: new for new, old in enumerate(alive)}
    rows = tuple(
        tuple(renum[rep(entry)] for entry in table[old]) for old in alive
    )
    result = CosetTable(
        generator_count=presentation.generator_count,
        coset_count=len(alive),
        status=COMPLETED,
        rows=rows,
    )
    _verify_table(result, words)
    return result


class _Overflow(Exception):
    pass


def _verify_table(table: CosetTable, words: Sequence[tuple[int, ...]]) -> None:
    n = table.coset_count
    ncols = 2 * table.generator_count
    for col in range(ncols):
        seen = [table.rows[c][col] for c in range(n)]
        if sorted(seen) != list(range(n)):
            raise ConsistencyError("completed table column is not a permutation")
        for c in range(n):
            if table.rows[seen[c]][col ^ 1] != c:
                raise ConsistencyError("completed table is not inverse-consistent")
    for word in words:
        for c in range(n):
            x = c
            for col in word:
                x = table.rows[x][col]
            if x != c:
                raise ConsistencyError("relator does not trace to the identity")


def generator_element(table: CosetTable, gen: int) -> int:
    """Group element represented by a generator, as a coset index.

    In the regular representation over the trivial subgroup, coset 0 is the
    identity, so the row-0 image of a generator identifies its element; the
    generator is the identity exactly when this is 0.
    """
    if table.status != COMPLETED:
        raise RuntimeError("generator_element requires a completed table")
    if not 0 <= gen < table.generator_count:
        raise ValueError(f"generator index {gen} out of range")
    return table.rows[0][2 * gen]


# ---------------------------------------------------------------------------
# Presentations of interest
# ---------------------------------------------------------------------------


def tensor_square_presentation(group: FiniteGroup) -> Presentation:
    """The all-pairs presentation of the tensor square of a group.

    One generator per ordered pair ``(g, n)`` (index ``g * |G| + n``) and,
    writing ``(g, n)`` for the pair generator and ``^g n = g n g^-1``, the
    relators::

        (g g', n)^-1  (^g g', ^g n)  (g, n)      for every g, g', n
        (g, n n')^-1  (g, n)  (^n g, ^n n')      for every g, n, n'

    Crude (|G|^2 generators, 2|G|^3 relators) but unconditionally correct at
    the small orders this package targets.
    """
    n = group.order
    if n > TENSOR_PRESENTATION_MAX_ORDER:
        raise LimitError(
            f"tensor-square presentation limited to order "
            f"{TENSOR_PRESENTATION_MAX_ORDER}, group has {n}"
        )
    mul = group.mul

    def pair(g: int, h: int) -> int:
        return g * n + h + 1  # 1-based signed letters

    conj = [[conjugate(group, g, x) for x in range(n)] for g in range(n)]
    relators = []
    for g in range(n):
        conj_by_g = conj[g]
        for gp in range(n):
            ggp = mul[g][gp]
            cg_gp = conj_by_g[gp]
            for x in range(n):
                relators.append((-pair(ggp, x), pair(cg_gp, conj_by_g[x]), pair(g, x)))
    for g in range(n):
        for x in range(n):
            conj_by_x = conj[x]
            cx_g = conj_by_x[g]
            row = mul[x]
            for xp in range(n):
                relators.append((-pair(g, row[xp]), pair(g, x), pair(cx_g, conj_by_x[xp])))
    return Presentation(generator_count=n * n, relators=tuple(relators))


def standard_presentation(family: str, parameter: int) -> Presentation:
    """Textbook presentation for a named family (used to cross-check orders)."""
    if family == "cyclic":
        n = parameter
        if n < 1:
            raise SpecError("cyclic parameter must be >= 1")
        return Presentation(1, ((tuple([1] * n) if n > 0 else (1,)),))
    if family == "dihedral":
        order = parameter
        if order < 4 or order % 2:
            raise SpecError("dihedral order must be an even number >= 4")
        m = order // 2
        return Presentation(2, (tuple([1] * m), (2, 2), (2, 1, -2, 1)))
    if family == "quaternion":
        order = parameter
        if order not in (8, 16):
            raise SpecError("quaternion order must be 8 or 16")
        k = order // 4
        return Presentation(2, (tuple([1] * 2 * k), (2, 2) + tuple([-1] * k), (2, 1, -2, 1)))
    if family == "symmetric":
        m = parameter
        if not 1 <= m <= 5:
            raise SpecError("symmetric degree must be in 1..5")
        if m == 1:
            return Presentation(1, ((1,),))
        rel = []
        for i in range(1, m):
            rel.append((i, i))
        for i in range(1, m - 1):
            rel.append((i, i + 1) * 3)
        for i in range(1, m):
            for j in range(i + 2, m):
                rel.append((i, j) * 2)
        return Presentation(m - 1, tuple(rel))
    if family == "alternating":
        m = parameter
        if not 1 <= m <= 5:
            raise SpecError("alternating degree must be in 1..5")
        if m <= 2:
            return Presentation(1, ((1,),))
        if m == 3:
            return Presentation(1, ((1, 1, 1),))
        if m == 4:
            return Presentation(2, ((1, 1, 1), (2, 2, 2), (1, 2) * 2))
        return Presentation(2, ((1, 1, 1, 1, 1), (2, 2, 2), (1, 2) * 2))
    raise SpecError(f"no standard presentation for family {family!r}")


def dump_table(table: CosetTable) -> str:
    """Text matrix of the table: one row per coset, one column per signed generator."""
    if table.status != COMPLETED:
        return f"(no table: status {table.status}, live cosets {table.coset_count})"
    width = len(str(table.coset_count - 1))
    header = []
    for g in range(table.generator_count):
        header.append(f"g{g}".rjust(width + 2))
        header.append(f"g{g}'".rjust(width + 2))
    lines = [" " * (width + 2) + "".join(header)]
    for c, row in enumerate(table.rows):
        cells = "".join(str(x).rjust(width + 2) for x in row)
        lines.append(str(c).rjust(width + 2) + cells)
    return "\n".join(lines)
