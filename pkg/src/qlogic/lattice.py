"""Finite quantum logics.

A quantum logic here is a finite bounded lattice with an orthocomplementation
satisfying the orthomodular law.  Construction goes through :func:`build_logic`,
which closes an arbitrary generating order relation, derives total meet/join
tables, and verifies every axiom before handing out an immutable structure.
All later operations are table lookups, so a built logic can be shared freely
across threads.

Element handles are their display names (plain tokens).  The tokens "0" and
"1" are reserved for the bounds and are added to the order automatically:
authors only write the non-trivial part of the Hasse diagram.
"""

from __future__ import annotations

from .errors import (
    AxiomViolation,
    BadElementName,
    ComplementConflict,
    CycleInOrder,
    MissingBounds,
    MissingComplement,
    MissingMeetOrJoin,
    SizeOutOfRange,
    UnknownElementError,
)

ZERO = "0"
ONE = "1"

#: tables are quadratic in the element count; keep inputs desk-scale
MAX_ELEMENTS = 64


class QuantumLogic:
    """A validated finite quantum logic.

    Do not call the constructor directly; :func:`build_logic` performs the
    closure and all axiom checks.  Instances are immutable and compare
    structurally (same names, order and complementation).
    """

    __slots__ = ("names", "_index", "_leq", "_comp", "_meet", "_join")

    def __init__(self, names, leq, comp, meet, join):
        self.names: tuple[str, ...] = tuple(names)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._leq = leq    # tuple of tuples of bool
        self._comp = comp  # tuple of int
        self._meet = meet  # tuple of tuples of int
        self._join = join

    # -- basic access -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __iter__(self):
        return iter(self.names)

    def __repr__(self) -> str:
        return f"QuantumLogic({len(self)} elements: {', '.join(self.names)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumLogic):
            return NotImplemented
        return (self.names == other.names and self._leq == other._leq
                and self._comp == other._comp)

    def __hash__(self):
        return hash((self.names, self._comp))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElementError(name) from None

    @property
    def elements(self) -> tuple[str, ...]:
        return self.names

    @property
    def nonzero_elements(self) -> tuple[str, ...]:
        return tuple(n for n in self.names if n != ZERO)

    # -- order and operations ----------------------------------------------

    def leq(self, a: str, b: str) -> bool:
        return self._leq[self.index(a)][self.index(b)]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def meet(self, a: str, b: str) -> str:
        return self.names[self._meet[self.index(a)][self.index(b)]]

    def join(self, a: str, b: str) -> str:
        return self.names[self._join[self.index(a)][self.index(b)]]

    def join_all(self, elements) -> str:
        out = ZERO
        for e in elements:
            out = self.join(out, e)
        return out

    def meet_all(self, elements) -> str:
        out = ONE
        for e in elements:
            out = self.meet(out, e)
        return out

    def complement(self, a: str) -> str:
        return self.names[self._comp[self.index(a)]]

    def is_orthogonal(self, a: str, b: str) -> bool:
        """a is below the complement of b."""
        return self._leq[self.index(a)][self._comp[self.index(b)]]

    def is_compatible(self, a: str, b: str) -> bool:
        """Decide compatibility by the orthomodular-lattice identity
        a = (a ^ b) v (a ^ b'), which is equivalent to the existence of a
        joint orthogonal decomposition (the brute-force search in
        :mod:`qlogic.generators` cross-checks this equivalence)."""
        ia, ib = self.index(a), self.index(b)
        lhs = self._join[self._meet[ia][ib]][self._meet[ia][self._comp[ib]]]
        return lhs == ia

    # -- derived structure ---------------------------------------------------

    def covers(self) -> list[tuple[str, str]]:
        """Hasse edges (a, b) with a covered by b, in index order."""
        n = len(self.names)
        leq = self._leq
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not leq[i][j]:
                    continue
                if any(leq[i][k] and leq[k][j] and k != i and k != j
                       for k in range(n)):
                    continue
                out.append((self.names[i], self.names[j]))
        return out

    def atoms(self) -> tuple[str, ...]:
        zero = self.index(ZERO)
        n = len(self.names)
        leq = self._leq
        out = []
        for i in range(n):
            if i == zero:
                continue
            if all(k == zero or k == i or not leq[k][i] for k in range(n)):
                out.append(self.names[i])
        return tuple(out)


def _closure(n: int, pairs: set[tuple[int, int]]):
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[i][i] = True
    for a, b in pairs:
        leq[a][b] = True
    for k in range(n):
        row_k = leq[k]
        for i in range(n):
            if leq[i][k]:
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def _bound_table(names, leq, kind: str):
    """Total meet or join table; raises if some pair has no bound."""
    n = len(names)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if kind == "meet":
                candidates = [k for k in range(n) if leq[k][i] and leq[k][j]]
                best = [g for g in candidates
                        if all(leq[c][g] for c in candidates)]
            else:
                candidates = [k for k in range(n) if leq[i][k] and leq[j][k]]
                best = [g for g in candidates
                        if all(leq[g][c] for c in candidates)]
            if not best:
                raise MissingMeetOrJoin(kind, names[i], names[j])
            table[i][j] = best[0]
    return table


def build_logic(elements, order=(), complements=()) -> QuantumLogic:
    """Build and validate a quantum logic.

    Parameters
    ----------
    elements:
        element names; must include the bound tokens "0" and "1".
    order:
        pairs (a, b) meaning a <= b; any generating relation is fine, the
        reflexive-transitive closure is computed.  0 <= x <= 1 is implicit.
    complements:
        pairs (a, b) pairing each element with its orthocomplement; (0, 1)
        is implicit, and each pair also declares its mirror image.

    Raises the first failure found, in a deterministic element order:
    bad names, missing bounds, order cycles, missing meets/joins, missing
    or conflicting complements, then the orthocomplementation axioms.
    """
    names = tuple(elements)
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name or any(c.isspace() for c in name):
            raise BadElementName(f"element names must be non-blank tokens, got {name!r}")
        if name in seen:
            raise BadElementName(f"duplicate element name {name!r}")
        seen.add(name)
    if ZERO not in seen or ONE not in seen:
        raise MissingBounds("elements must include the bound tokens '0' and '1'")
    n = len(names)
    if n > MAX_ELEMENTS:
        raise SizeOutOfRange(f"{n} elements exceeds the supported maximum {MAX_ELEMENTS}")

    index = {name: i for i, name in enumerate(names)}

    def idx(token):
        try:
            return index[token]
        except KeyError:
            raise UnknownElementError(token) from None

    zero, one = index[ZERO], index[ONE]
    pairs = {(idx(a), idx(b)) for a, b in order}
    pairs.update((zero, i) for i in range(n))
    pairs.update((i, one) for i in range(n))
    leq = _closure(n, pairs)

    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise CycleInOrder(names[i], names[j])

    meet = _bound_table(names, leq, "meet")
    join = _bound_table(names, leq, "join")

    comp = [None] * n
    declared = list(complements) + [(ZERO, ONE)]
    for a, b in declared:
        ia, ib = idx(a), idx(b)
        for x, y in ((ia, ib), (ib, ia)):
            if comp[x] is not None and comp[x] != y:
                raise ComplementConflict(names[x], names[comp[x]], names[y])
            comp[x] = y
    for i in range(n):
        if comp[i] is None:
            raise MissingComplement(names[i])

    for i in range(n):
        if comp[comp[i]] != i:
            raise AxiomViolation("ii", f"complement is not involutive at {names[i]}",
                                 (names[i],))
    for i in range(n):
        if join[i][comp[i]] != one:
            raise AxiomViolation(
                "iii", f"{names[i]} v {names[comp[i]]} = "
                f"{names[join[i][comp[i]]]} != 1", (names[i],))
    for i in range(n):
        for j in range(n):
            if leq[i][j] and not leq[comp[j]][comp[i]]:
                raise AxiomViolation(
                    "iv", f"{names[i]} <= {names[j]} but complements are not "
                    f"reversed", (names[i], names[j]))
    for i in range(n):
        for j in range(n):
            if leq[i][j] and join[i][meet[comp[i]][j]] != j:
                raise AxiomViolation(
                    "v", f"orthomodular law fails: {names[j]} != {names[i]} v "
                    f"({names[comp[i]]} ^ {names[j]})", (names[i], names[j]))

    return QuantumLogic(
        names,
        tuple(tuple(row) for row in leq),
        tuple(comp),
        tuple(tuple(row) for row in meet),
        tuple(tuple(row) for row in join),
    )
