"""Permutations in image form, with 1-based cycle-notation input and output."""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence


class CycleNotationError(ValueError):
    """Malformed cycle notation, or data that is not a permutation."""


class Perm:
    """A permutation of {0, ..., degree-1} stored as a tuple of images.

    Composition is function-like: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise CycleNotationError(f"images {imgs} are not a bijection on 0..{len(imgs) - 1}")
        self.images = imgs

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(range(degree))

    @staticmethod
    def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build a permutation from 0-based disjoint cycles; fixed points omitted."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise CycleNotationError(f"point {point + 1} outside degree {degree}")
                if point in seen:
                    raise CycleNotationError(f"point {point + 1} repeated across cycles")
                seen.add(point)
            for pos, point in enumerate(cycle):
                images[point] = cycle[(pos + 1) % len(cycle)]
        return Perm(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in permutation product")
        simg = self.images
        return Perm(tuple(simg[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        out = []
        seen = set()
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Perm{self.cycle_string()}"


_TOKEN_RE = re.compile(r"\(([^()]*)\)|\S")


def parse_cycle_string(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)`` into a permutation.

    Whitespace or commas separate points inside parentheses; ``()`` is the identity.
    """
    stripped = text.strip()
    if not stripped:
        raise CycleNotationError("empty cycle expression")
    cycles: list[list[int]] = []
    pos = 0
    for match in _TOKEN_RE.finditer(stripped):
        if match.start() != pos and stripped[pos:match.start()].strip():
            raise CycleNotationError(f"unexpected text in {text!r}")
        pos = match.end()
        if match.group(0)[0] != "(":
            raise CycleNotationError(f"unexpected token {match.group(0)!r} in {text!r}")
        body = match.group(1).replace(",", " ")
        points = []
        for tok in body.split():
            if not tok.isdigit() or int(tok) < 1:
                raise CycleNotationError(f"bad point {tok!r} in {text!r}")
            points.append(int(tok) - 1)
        if points:
            cycles.append(points)
    if stripped[pos:].strip():
        raise CycleNotationError(f"trailing text in {text!r}")
    return Perm.from_cycles(cycles, degree)
