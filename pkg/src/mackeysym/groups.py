"""Finite permutation groups, the group-spec catalog, and generator files."""

from __future__ import annotations

from typing import Iterable, Sequence

from .permutation import CycleNotationError, Perm, parse_cycle_string

DEFAULT_ORDER_BOUND = 256


class GroupSpecError(ValueError):
    """Unparseable group spec, bad generator data, or unsupported catalog name."""


class OrderBoundExceeded(GroupSpecError):
    """Enumeration grew past the configured order bound."""


def close_under_product(generators: Sequence[Perm], degree: int,
                        order_bound: int = DEFAULT_ORDER_BOUND) -> list[Perm]:
    """Enumerate the group generated by ``generators`` by breadth-first closure."""
    for g in generators:
        if g.degree != degree:
            raise GroupSpecError(f"generator degree {g.degree} != {degree}")
    elements = {Perm.identity(degree)}
    frontier = [p for p in generators if p not in elements]
    elements.update(frontier)
    while frontier:
        new = []
        for g in generators:
            for x in frontier:
                y = g * x
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > order_bound:
                        raise OrderBoundExceeded(
                            f"group order exceeds bound {order_bound}")
        frontier = new
    return sorted(elements)


class FiniteGroup:
    """A fully enumerated permutation group with multiplication tables.

    Elements are sorted by image tuple, so index 0 is always the identity and
    the indexing is reproducible across runs.
    """

    def __init__(self, generators: Sequence[Perm], degree: int, name: str = "G",
                 order_bound: int = DEFAULT_ORDER_BOUND,
                 _elements: Sequence[Perm] | None = None):
        self.degree = degree
        self.name = name
        self.generators = tuple(generators)
        if _elements is None:
            elems = close_under_product(self.generators, degree, order_bound)
        else:
            elems = sorted(_elements)
        self.elements: tuple[Perm, ...] = tuple(elems)
        self._index: dict[Perm, int] = {p: i for i, p in enumerate(self.elements)}
        if self.elements[0] != Perm.identity(degree):
            raise GroupSpecError("identity missing from element list")
        n = len(self.elements)
        self._mul = [[0] * n for _ in range(n)]
        for i, p in enumerate(self.elements):
            row = self._mul[i]
            for j, q in enumerate(self.elements):
                prod = self._index.get(p * q)
                if prod is None:
                    raise GroupSpecError("element list not closed under product")
                row[j] = prod
        self._inv = [0] * n
        for i in range(n):
            for j in range(n):
                if self._mul[i][j] == 0:
                    self._inv[i] = j
                    break
        self.generator_indices = tuple(self._index[g] for g in self.generators)
        self._orders: list[int] | None = None

    @staticmethod
    def from_elements(elements: Iterable[Perm], degree: int, name: str = "G",
                      generators: Sequence[Perm] = ()) -> "FiniteGroup":
        """Wrap an already-closed element set (no closure pass)."""
        return FiniteGroup(tuple(generators), degree, name, _elements=tuple(elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, p: Perm) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise KeyError(f"{p!r} is not an element of {self.name}") from None

    def perm(self, i: int) -> Perm:
        return self.elements[i]

    def mul(self, i: int, j: int) -> int:
        return self._mul[i][j]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, x: int, g: int) -> int:
        """Index of g x g^-1."""
        return self._mul[self._mul[g][x]][self._inv[g]]

    def element_order(self, i: int) -> int:
        if self._orders is None:
            orders = []
            for k in range(self.order):
                o, cur = 1, k
                while cur != 0:
                    cur = self._mul[cur][k]
                    o += 1
                orders.append(o)
            self._orders = orders
        return self._orders[i]

    def is_abelian(self) -> bool:
        return all(self._mul[i][j] == self._mul[j][i]
                   for i in self.generator_indices for j in self.generator_indices)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order {self.order}, degree {self.degree})"


# ---------------------------------------------------------------------------
# catalog constructors


def trivial_group() -> FiniteGroup:
    return FiniteGroup((), 1, "trivial")


def cyclic_group(n: int, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"cyclic order must be >= 1, got {n}")
    if n > order_bound:
        raise OrderBoundExceeded(f"cyclic:{n} exceeds bound {order_bound}")
    if n == 1:
        return FiniteGroup((), 1, "cyclic:1")
    gen = Perm.from_cycles([tuple(range(n))], n)
    return FiniteGroup((gen,), n, f"cyclic:{n}", order_bound)


def symmetric_group(n: int, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"symmetric degree must be >= 1, got {n}")
    if n == 1:
        return FiniteGroup((), 1, "symmetric:1")
    gens = [Perm.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Perm.from_cycles([tuple(range(n))], n))
    return FiniteGroup(tuple(gens), n, f"symmetric:{n}", order_bound)


def alternating_group(n: int, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"alternating degree must be >= 1, got {n}")
    if n <= 2:
        return FiniteGroup((), max(n, 1), f"alternating:{n}")
    gens = [Perm.from_cycles([(0, 1, 2)], n)]
    if n > 3:
        cycle = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
        gens.append(Perm.from_cycles([cycle], n))
    return FiniteGroup(tuple(gens), n, f"alternating:{n}", order_bound)


def dihedral_group(n: int, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Dihedral group of order 2n acting on n vertices (n >= 3); small n special-cased."""
    if n < 1:
        raise GroupSpecError(f"dihedral parameter must be >= 1, got {n}")
    if n == 1:
        return FiniteGroup((Perm.from_cycles([(0, 1)], 2),), 2, "dihedral:1")
    if n == 2:
        gens = (Perm.from_cycles([(0, 1)], 4), Perm.from_cycles([(2, 3)], 4))
        return FiniteGroup(gens, 4, "dihedral:2")
    rot = Perm.from_cycles([tuple(range(n))], n)
    refl = Perm([(-i) % n for i in range(n)])
    return FiniteGroup((rot, refl), n, f"dihedral:{n}", order_bound)


def klein_four_group() -> FiniteGroup:
    gens = (Perm.from_cycles([(0, 1)], 4), Perm.from_cycles([(2, 3)], 4))
    return FiniteGroup(gens, 4, "klein4")


def quaternion_group_8() -> FiniteGroup:
    gens = (
        Perm.from_cycles([(0, 1, 2, 3), (4, 5, 6, 7)], 8),
        Perm.from_cycles([(0, 4, 2, 6), (1, 7, 3, 5)], 8),
    )
    return FiniteGroup(gens, 8, "quaternion:8")


def direct_product(a: FiniteGroup, b: FiniteGroup,
                   order_bound: int = DEFAULT_ORDER_BOUND,
                   name: str | None = None) -> FiniteGroup:
    """Direct product acting on the disjoint union of the factors' points."""
    if a.order * b.order > order_bound:
        raise OrderBoundExceeded(
            f"product order {a.order * b.order} exceeds bound {order_bound}")
    degree = a.degree + b.degree
    gens = [Perm(tuple(g.images) + tuple(range(a.degree, degree))) for g in a.generators]
    gens += [Perm(tuple(range(a.degree)) + tuple(i + a.degree for i in g.images))
             for g in b.generators]
    return FiniteGroup(tuple(gens), degree,
                       name or f"product:{a.name},{b.name}", order_bound)


def semidirect_c4xc2_by_c4() -> FiniteGroup:
    """The non-abelian group (C4 x C2) : C4 of order 32 whose semisimple
    bilinear-form determinant equals 1.

    Points 0..7 carry the regular action of C4 x C2 (point 2i+j is a^i b^j);
    the acting C4 cycles points 8..11 and twists a |-> ab on the first block.
    """
    trans_a = Perm([(2 * ((p // 2 + 1) % 4) + p % 2) for p in range(8)]
                   + [8, 9, 10, 11])
    trans_b = Perm([(2 * (p // 2) + (p % 2 + 1) % 2) for p in range(8)]
                   + [8, 9, 10, 11])
    # automorphism a^i b^j |-> a^i b^(i+j), i.e. a |-> ab, b |-> b
    twist = Perm([2 * (p // 2) + (p // 2 + p) % 2 for p in range(8)]
                 + [9, 10, 11, 8])
    return FiniteGroup((trans_a, trans_b, twist), 12, "c4xc2:c4(order32)")


# ---------------------------------------------------------------------------
# generator files and the spec grammar


def group_from_file_text(text: str, name: str,
                         order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Parse the generator-file format: a ``degree:`` line then ``gen:`` lines."""
    degree = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise GroupSpecError(f"line {lineno}: expected 'degree:' or 'gen:'")
        head, _, rest = line.partition(":")
        head = head.strip().lower()
        if head == "degree":
            try:
                degree = int(rest.strip())
            except ValueError:
                raise GroupSpecError(f"line {lineno}: bad degree {rest.strip()!r}") from None
            if degree < 1:
                raise GroupSpecError(f"line {lineno}: degree must be positive")
        elif head == "gen":
            if degree is None:
                raise GroupSpecError(f"line {lineno}: 'gen:' before 'degree:'")
            try:
                gens.append(parse_cycle_string(rest, degree))
            except CycleNotationError as exc:
                raise GroupSpecError(f"line {lineno}: {exc}") from None
        else:
            raise GroupSpecError(f"line {lineno}: unknown key {head!r}")
    if degree is None:
        raise GroupSpecError("generator file has no 'degree:' line")
    return FiniteGroup(tuple(gens), degree, name, order_bound)


def _parse_int(spec: str, arg: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise GroupSpecError(f"bad integer {arg!r} in group spec {spec!r}") from None


def _parse_segments(segments: list[str], order_bound: int) -> FiniteGroup:
    if not segments:
        raise GroupSpecError("missing group spec (dangling comma?)")
    seg = segments.pop(0)
    if seg.startswith("product:"):
        rest = seg[len("product:"):]
        segments.insert(0, rest)
        left = _parse_segments(segments, order_bound)
        right = _parse_segments(segments, order_bound)
        return direct_product(left, right, order_bound)
    return _parse_atomic(seg, order_bound)


def _parse_atomic(spec: str, order_bound: int) -> FiniteGroup:
    if spec == "trivial":
        return trivial_group()
    if spec == "klein4":
        return klein_four_group()
    if spec == "quaternion:8":
        return quaternion_group_8()
    head, _, arg = spec.partition(":")
    if head == "cyclic":
        return cyclic_group(_parse_int(spec, arg), order_bound)
    if head == "symmetric":
        return symmetric_group(_parse_int(spec, arg), order_bound)
    if head == "alternating":
        return alternating_group(_parse_int(spec, arg), order_bound)
    if head == "dihedral":
        return dihedral_group(_parse_int(spec, arg), order_bound)
    if head == "file":
        try:
            with open(arg, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GroupSpecError(f"cannot read group file {arg!r}: {exc}") from None
        return group_from_file_text(text, spec, order_bound)
    raise GroupSpecError(f"unknown group spec {spec!r}")


def parse_group(spec: str, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Parse a catalog spec: trivial | cyclic:n | klein4 | dihedral:n | symmetric:n
    | alternating:n | quaternion:8 | product:<spec>,<spec> | file:<path>.
    """
    spec = spec.strip()
    if not spec:
        raise GroupSpecError("empty group spec")
    segments = spec.split(",")
    group = _parse_segments(segments, order_bound)
    if segments:
        raise GroupSpecError(f"trailing segments {segments!r} in group spec {spec!r}")
    if group.order > order_bound:
        raise OrderBoundExceeded(
            f"group order {group.order} exceeds bound {order_bound}")
    group.name = spec
    return group
