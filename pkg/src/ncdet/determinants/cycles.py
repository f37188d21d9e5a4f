"""Left- and right-ordered cycle notation of permutations.

A permutation is a tuple of 0-based images: ``sigma[c]`` is the image of c.
The row determinant reads its monomials along the left-ordered notation
anchored at a row; the column determinant along the right-ordered notation
anchored at a column.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import permutations
from typing import Literal

from ncdet.errors import IndexOutOfRangeError, NcdetError
from ncdet.matrix.indexing import check_index, to_external

Orientation = Literal["left", "right"]


class InvalidPermutationError(NcdetError):
    """The image sequence is not a bijection on 0..n-1."""

    kind = "invalid-permutation"


def validate_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(sigma)
    if sorted(perm) != list(range(len(perm))):
        raise InvalidPermutationError(f"{[to_external(c) for c in perm]} is not a permutation.")
    return perm


def _orbit(sigma: Sequence[int], start: int) -> list[int]:
    orbit = [start]
    c = sigma[start]
    while c != start:
        orbit.append(c)
        c = sigma[c]
    return orbit


@dataclass(frozen=True)
class OrderedCycles:
    """A permutation's cycles in the normalized order anchored at ``leader``.

    ``cycles`` is stored in anchored order: the leader's cycle first, then the
    other cycles by increasing minimal element. Left-ordered cycles start with
    their anchor (the leader or the minimum); right-ordered cycles end with it
    and are written right to left, see ``written``.
    """

    cycles: tuple[tuple[int, ...], ...]
    leader: int
    n: int
    orientation: Orientation = "left"

    @property
    def r(self) -> int:
        """Number of cycles, fixed points included."""
        return len(self.cycles)

    @property
    def sign(self) -> int:
        return -1 if (self.n - self.r) % 2 else 1

    def written(self) -> tuple[tuple[int, ...], ...]:
        """Cycles in the order they are written, left to right."""
        if self.orientation == "left":
            return self.cycles
        return tuple(reversed(self.cycles))

    def anchors(self) -> tuple[int, ...]:
        """The leader, then each other cycle's minimal element."""
        pos = 0 if self.orientation == "left" else -1
        return tuple(c[pos] for c in self.cycles)

    def notation(self) -> str:
        """1-based cycle string, e.g. "(3 4)(1 2)"."""
        return "".join(
            "(" + " ".join(str(to_external(c)) for c in cycle) + ")" for cycle in self.written()
        )

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation,
            "leader": to_external(self.leader),
            "cycles": self.notation(),
            "r": self.r,
            "sign": self.sign,
        }


def _anchored_orbits(sigma: tuple[int, ...], leader: int) -> list[list[int]]:
    """Leader's orbit from the leader, then remaining orbits from their minima."""
    n = len(sigma)
    check_index(leader, n, name="leader index")
    orbits = [_orbit(sigma, leader)]
    placed = set(orbits[0])
    for m in range(n):
        if m not in placed:
            orbit = _orbit(sigma, m)
            placed.update(orbit)
            orbits.append(orbit)
    return orbits


def left_ordered(sigma: Sequence[int], i: int) -> OrderedCycles:
    """Left-ordered notation: i starts the first cycle from the left.

    Every other cycle starts with its minimal element and the cycles follow
    in increasing order of those minima.
    """
    perm = validate_permutation(sigma)
    orbits = _anchored_orbits(perm, i)
    return OrderedCycles(tuple(tuple(o) for o in orbits), i, len(perm), "left")


def right_ordered(tau: Sequence[int], j: int) -> OrderedCycles:
    """Right-ordered notation: j ends the first cycle from the right.

    Every other cycle ends with its minimal element; read right to left the
    minima increase.
    """
    perm = validate_permutation(tau)
    # rotate each orbit so that its anchor comes last
    orbits = [o[1:] + o[:1] for o in _anchored_orbits(perm, j)]
    return OrderedCycles(tuple(tuple(o) for o in orbits), j, len(perm), "right")


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    if n < 1:
        raise IndexOutOfRangeError(f"Permutation degree must be positive, got {n}.")
    return permutations(range(n))
