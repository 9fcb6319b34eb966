import logging
from collections import Counter
from functools import cached_property
from typing import Iterable, List, Sequence

import numpy as np

from cnorm import settings
from cnorm.errors import (
    GroupValidationError,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)

logger = logging.getLogger(__name__)


def index_dtype(order: int) -> type:
    """The smallest unsigned integer type that can index a group of this order."""
    if order <= 1 << 8:
        return np.uint8
    if order <= 1 << 16:
        return np.uint16
    return np.uint32


def resolve_cap(cap: int | None) -> int:
    """Fall back to the configured order cap."""
    return settings.order_cap if cap is None else cap


def check_order(order: int, cap: int | None) -> None:
    """Raise OrderCapExceeded if order is larger than the (resolved) cap."""
    cap = resolve_cap(cap)
    if order > cap:
        raise OrderCapExceeded(order, cap)


class FiniteGroup:
    """
    A finite group given by its complete multiplication table.

    Elements are dense indices into the table. A FiniteGroup is immutable once
    built; the lazily computed tables below are memoized functions of the
    multiplication table.

    Attributes:
        order: The number of elements.
        table: An order x order array; table[i, j] is the index of i*j.
        identity: The index of the identity element.
        inverse: inverse[i] is the index of the inverse of i.
        labels: Display strings for each element.

    Methods:
        mul: Multiply two elements.
        inv: Invert an element.
        conjugation_table: conjugation_table[t, x] = t^-1 x t.
        commutator_table: commutator_table[x, y] = x^-1 y^-1 x y.
        element_orders: The order of every element.
        is_abelian: Whether every pair of elements commutes.
    """

    def __init__(
        self,
        table: np.ndarray,
        identity: int,
        inverse: np.ndarray,
        labels: Sequence[str] | None = None,
    ) -> None:
        """
        Wrap an already validated table. Use from_cayley_table for untrusted
        input.

        Args:
            table: The multiplication table.
            identity: The identity index.
            inverse: The inverse of each element.
            labels: Display strings. Defaults to decimal indices.
        """
        order = len(table)
        dtype = index_dtype(order)
        self.table = np.ascontiguousarray(table, dtype=dtype)
        self.table.setflags(write=False)
        self.inverse = np.ascontiguousarray(inverse, dtype=dtype)
        self.inverse.setflags(write=False)
        self.identity = int(identity)
        self.order = order
        if labels is None:
            labels = [str(i) for i in range(order)]
        elif len(labels) != order:
            raise GroupValidationError(
                f"{len(labels)} labels supplied for a group of order {order}"
            )
        self.labels = tuple(labels)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (
            self.order == other.order
            and self.identity == other.identity
            and np.array_equal(self.table, other.table)
            and np.array_equal(self.inverse, other.inverse)
        )

    __hash__ = None

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def conjugation_table(self) -> np.ndarray:
        """conjugation_table[t, x] is t^-1 x t."""
        left = self.table[self.inverse]  # left[t, x] = t^-1 x
        conj = self.table[left, np.arange(self.order)[:, None]]
        conj.setflags(write=False)
        return conj

    @cached_property
    def commutator_table(self) -> np.ndarray:
        """commutator_table[x, y] is [x, y] = x^-1 y^-1 x y."""
        inverses = self.table[np.ix_(self.inverse, self.inverse)]
        comm = self.table[inverses, self.table]
        comm.setflags(write=False)
        return comm

    @cached_property
    def element_orders(self) -> np.ndarray:
        """The order of every element, computed by simultaneous powering."""
        orders = np.zeros(self.order, dtype=np.int64)
        everything = np.arange(self.order)
        power = everything.copy()
        for k in range(1, self.order + 1):
            done = (power == self.identity) & (orders == 0)
            orders[done] = k
            if orders.all():
                break
            power = self.table[power, everything]
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))


def _first_repeat(line: np.ndarray) -> int:
    """The smallest value occurring more than once in a line of the table."""
    counts = np.bincount(line, minlength=len(line))
    return int(np.flatnonzero(counts > 1)[0])


def _light_generators(table: np.ndarray, identity: int) -> List[int]:
    """
    Pick elements until right multiplication by them from the identity reaches
    the whole table.

    Every element is then a left-normed product of the chosen generators,
    which is all Light's associativity test needs.
    """
    order = len(table)
    generators: List[int] = []
    reached = np.zeros(order, dtype=bool)
    reached[identity] = True
    while not reached.all():
        generators.append(int(np.flatnonzero(~reached)[0]))
        reached[:] = False
        reached[identity] = True
        frontier = np.array([identity])
        while len(frontier):
            products = np.unique(table[np.ix_(frontier, generators)])
            frontier = products[~reached[products]]
            reached[frontier] = True
    return generators


def from_cayley_table(
    order: int, table: Iterable[Iterable[int]], labels: Sequence[str] | None = None
) -> FiniteGroup:
    """
    Validate a raw multiplication table and build a FiniteGroup from it.

    The identity need not be index 0; it is located. Checks run in the order
    Latin square, identity, inverses, associativity.

    Args:
        order: The number of elements.
        table: order rows of order entries in [0, order).
        labels: Optional display strings.

    Returns:
        FiniteGroup: The validated group, with indices unchanged.

    Raises:
        NotLatinSquare: A row or column repeats an entry.
        NoIdentity: No element acts as a two-sided identity.
        NoInverse: Some element has no two-sided inverse.
        NotAssociative: Associativity fails; the witness triple is reported.
    """
    if order < 1:
        raise GroupValidationError(f"group order must be positive, got {order}")
    table = np.asarray(table, dtype=np.int64)
    if table.shape != (order, order):
        raise GroupValidationError(
            f"expected a {order}x{order} table, got shape {table.shape}"
        )
    if table.min() < 0 or table.max() >= order:
        raise GroupValidationError(f"table entries must lie in [0, {order})")

    everything = np.arange(order)
    for axis, lines in (("row", table), ("column", table.T)):
        bad = np.flatnonzero(~(np.sort(lines, axis=1) == everything).all(axis=1))
        if len(bad):
            position = int(bad[0])
            raise NotLatinSquare(axis, position, _first_repeat(lines[position]))

    candidates = np.flatnonzero(
        (table == everything).all(axis=1) & (table.T == everything).all(axis=1)
    )
    if not len(candidates):
        raise NoIdentity()
    identity = int(candidates[0])

    # In a Latin square each row holds the identity exactly once.
    right_inverse = np.argmax(table == identity, axis=1)
    two_sided = table[right_inverse, everything] == identity
    if not two_sided.all():
        raise NoInverse(int(np.flatnonzero(~two_sided)[0]))

    for s in _light_generators(table, identity):
        lhs = table[table[:, s]]  # (x s) z
        rhs = table[:, table[s]]  # x (s z)
        mismatch = np.argwhere(lhs != rhs)
        if len(mismatch):
            x, z = (int(v) for v in mismatch[0])
            raise NotAssociative((x, s, z))

    logger.debug("Validated Cayley table of order %s.", order)
    return FiniteGroup(table, identity, right_inverse, labels)


def compose(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """The permutation applying first, then second."""
    return second[first]


def _check_permutation(generator: Sequence[int], degree: int) -> np.ndarray:
    perm = np.asarray(generator, dtype=np.int64)
    if perm.shape != (degree,) or not np.array_equal(np.sort(perm), np.arange(degree)):
        raise NotAPermutation(list(generator), degree)
    return perm


def from_permutation_generators(
    degree: int,
    generators: Sequence[Sequence[int]],
    cap: int | None = None,
    labels: bool = True,
) -> FiniteGroup:
    """
    Close a set of permutations under composition and tabulate the result.

    Elements are indexed in breadth-first discovery order from the identity,
    multiplying on the right by each generator in turn. The product p*q applies
    p first, then q.

    Args:
        degree: The number of points permuted.
        generators: Images lists; generator[i] is the image of point i.
        cap: The order cap. Defaults to settings.order_cap.
        labels: Whether to label elements in disjoint-cycle notation.

    Returns:
        FiniteGroup: The generated group, identity at index 0.

    Raises:
        NotAPermutation: A generator is not a bijection on [0, degree).
        OrderCapExceeded: The closure grew past the cap.
    """
    cap = resolve_cap(cap)
    gens = [_check_permutation(generator, degree) for generator in generators]

    identity = np.arange(degree)
    elements = [identity]
    index = {identity.tobytes(): 0}
    # parent[j], via[j]: element j was first reached as element parent[j] * gens[via[j]]
    parent, via = [0], [-1]
    right = []

    cursor = 0
    while cursor < len(elements):
        row = []
        for g, gen in enumerate(gens):
            product = compose(elements[cursor], gen)
            key = product.tobytes()
            if key not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded(len(elements) + 1, cap)
                index[key] = len(elements)
                elements.append(product)
                parent.append(cursor)
                via.append(g)
            row.append(index[key])
        right.append(row)
        cursor += 1

    order = len(elements)
    right = np.array(right, dtype=np.int64).reshape(order, len(gens))
    table = np.empty((order, order), dtype=np.int64)
    table[:, 0] = np.arange(order)
    # i * (parent * gen) = (i * parent) * gen, filled in discovery order.
    for j in range(1, order):
        table[:, j] = right[table[:, parent[j]], via[j]]

    inverse = np.argmax(table == 0, axis=1)
    names = [cycle_notation(element) for element in elements] if labels else None
    logger.debug("Closed %s generators of degree %s to order %s.", len(gens), degree, order)
    return FiniteGroup(table, 0, inverse, names)


def cycle_notation(perm: Sequence[int]) -> str:
    """
    Disjoint-cycle notation for a permutation, fixed points omitted.

    The identity is written "()".
    """
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = []
        point = start
        while point not in seen:
            seen.add(point)
            cycle.append(point)
            point = int(perm[point])
        if len(cycle) > 1:
            cycles.append("(" + " ".join(str(p) for p in cycle) + ")")
    return "".join(cycles) or "()"


def element_order(g: FiniteGroup, x: int) -> int:
    """
    The least k >= 1 with x^k equal to the identity.

    Args:
        g: The group.
        x: An element index of g.
    """
    power, k = x, 1
    while power != g.identity:
        power = g.mul(power, x)
        k += 1
    return k


def element_order_census(g: FiniteGroup) -> dict[int, int]:
    """Map each element order occurring in g to the number of elements of that order."""
    return dict(sorted(Counter(int(k) for k in g.element_orders).items()))


def conjugacy_classes(g: FiniteGroup) -> List[np.ndarray]:
    """
    Partition g into conjugacy classes.

    Classes are listed by their least member, which is the class's canonical
    representative and comes first in each sorted member array.
    """
    assigned = np.zeros(g.order, dtype=bool)
    classes = []
    for x in range(g.order):
        if assigned[x]:
            continue
        members = np.unique(g.conjugation_table[:, x])
        assigned[members] = True
        classes.append(members)
    return classes
