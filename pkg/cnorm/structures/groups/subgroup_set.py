from typing import Iterable, Iterator, List

import numpy as np

from cnorm.errors import ParentMismatch


class SubgroupSet:
    """
    A subgroup of a parent group, stored as a membership bitset.

    SubgroupSets are immutable and hashable, so they can be deduplicated in
    sets and used as dictionary keys. Closure is not re-checked on
    construction; see subgroups.generation.is_subgroup for that.

    Attributes:
        parent_order: The order of the parent group.
        members: A read-only boolean array of length parent_order.
        size: The number of members.
        elements: The member indices in ascending order.

    Methods:
        issubset: Whether every member is also a member of another subgroup.
        to_list: The members as a list of ints.
    """

    __slots__ = "parent_order", "members", "size", "elements", "_key"

    def __init__(self, members: np.ndarray) -> None:
        members = np.array(members, dtype=bool)
        members.setflags(write=False)
        self.members = members
        self.parent_order = len(members)
        self.elements = np.flatnonzero(members)
        self.elements.setflags(write=False)
        self.size = len(self.elements)
        self._key = np.packbits(members).tobytes()

    @classmethod
    def from_elements(cls, parent_order: int, elements: Iterable[int]) -> "SubgroupSet":
        members = np.zeros(parent_order, dtype=bool)
        members[np.fromiter(elements, dtype=np.int64)] = True
        return cls(members)

    @classmethod
    def trivial(cls, g) -> "SubgroupSet":
        return cls.from_elements(g.order, [g.identity])

    @classmethod
    def whole(cls, g) -> "SubgroupSet":
        return cls(np.ones(g.order, dtype=bool))

    def check_parent(self, other: "SubgroupSet") -> None:
        if self.parent_order != other.parent_order:
            raise ParentMismatch(self.parent_order, other.parent_order)

    def __contains__(self, x: int) -> bool:
        return bool(self.members[x])

    def __iter__(self) -> Iterator[int]:
        return (int(x) for x in self.elements)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent_order == other.parent_order and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.parent_order, self._key))

    def issubset(self, other: "SubgroupSet") -> bool:
        self.check_parent(other)
        return bool(other.members[self.elements].all())

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "SubgroupSet") -> bool:
        return self.issubset(other) and self.size < other.size

    def is_whole(self) -> bool:
        return self.size == self.parent_order

    def is_trivial(self) -> bool:
        return self.size == 1

    def to_list(self) -> List[int]:
        return [int(x) for x in self.elements]

    def __repr__(self) -> str:
        return f"SubgroupSet(size={self.size}, parent_order={self.parent_order})"
