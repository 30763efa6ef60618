"""Voltage signatures and explicit construction of lifted graphs.

A signature assigns a group element to every canonical edge (i, j), i < j, of
a base graph. The lift places a fiber of d vertices over each base vertex
(d = group order for abelian voltages acting on themselves, d = k for
symmetric-group voltages acting naturally on {1..k}) and replaces each base
edge with the perfect matching selected by its voltage: (i, a) is joined to
(j, b) exactly when the voltage maps fiber position a to fiber position b.
Traversing an edge against its stored orientation applies the inverse
element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AbelianGroup,
    BadElementText,
    BadGroupSpec,
    ElementNotInGroup,
    GroupSpec,
    SymmetricGroup,
    compose,
    format_element,
    format_group,
    parse_element,
    parse_group,
)
from .graphs import Graph, from_edge_list


class SignatureError(ValueError):
    """Base class for signature parsing and validation errors."""


class MissingEdge(SignatureError):
    """A base edge has no assignment."""


class UnknownEdge(SignatureError):
    """An assignment names a pair that is not a base edge."""


class DuplicateEdge(SignatureError):
    """An edge is assigned more than once."""


class BadElement(SignatureError):
    """An assignment's element text cannot be parsed or is out of the group."""


class BadGroupHeader(SignatureError):
    """The signature file's group header is missing or unparseable."""


class InvalidSignature(SignatureError):
    """A signature does not match the base graph it is used with."""


class NonAbelianSignature(SignatureError):
    """An abelian-only operation was given a symmetric-group signature."""


@dataclass(frozen=True)
class Signature:
    """A total map from the base graph's canonical edges to group elements."""

    base: Graph
    group: GroupSpec
    assignments: dict

    def get(self, i: int, j: int):
        if i > j:
            i, j = j, i
        return self.assignments[(i, j)]

    def items(self):
        return sorted(self.assignments.items())

    def is_abelian(self) -> bool:
        return isinstance(self.group, AbelianGroup)


def make_signature(base: Graph, group: GroupSpec, assignments: dict) -> Signature:
    """Validate and freeze a signature: every base edge exactly once, every
    element in the group."""
    edge_set = set(base.edges)
    for pair, elem in assignments.items():
        if tuple(pair) not in edge_set:
            raise UnknownEdge(f"pair {pair} is not an edge of the base graph")
        if not group.contains(elem):
            raise ElementNotInGroup(f"{elem!r} is not in {format_group(group)}")
    for edge in base.edges:
        if edge not in assignments:
            raise MissingEdge(f"edge {edge} has no assignment")
    return Signature(base, group, dict(assignments))


def constant_signature(base: Graph, group: GroupSpec, g) -> Signature:
    if not group.contains(g):
        raise ElementNotInGroup(f"{g!r} is not in {format_group(group)}")
    return Signature(base, group, {e: g for e in base.edges})


def parse_signature(text: str, base: Graph) -> Signature:
    """Parse signature text against a base graph.

    Format: first non-comment line is 'group <spec>' (e.g. 'group Z2',
    'group S3'); each following line is 'i j : <element>' with i < j,
    1-based; '#' starts a comment. Every base edge must appear exactly once.
    Error messages name the offending line.
    """
    group: GroupSpec | None = None
    assignments: dict = {}
    edge_set = set(base.edges)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if group is None:
            parts = line.split(None, 1)
            if len(parts) != 2 or parts[0] != "group":
                raise BadGroupHeader(f"line {lineno}: expected 'group <spec>', got {raw.strip()!r}")
            try:
                group = parse_group(parts[1])
            except BadGroupSpec as exc:
                raise BadGroupHeader(f"line {lineno}: {exc}") from None
            continue
        if ":" not in line:
            raise SignatureError(f"line {lineno}: expected 'i j : <element>', got {raw.strip()!r}")
        left, right = line.split(":", 1)
        parts = left.split()
        try:
            i, j = (int(p) for p in parts)
        except ValueError:
            raise SignatureError(f"line {lineno}: expected two endpoints before ':'") from None
        if i >= j:
            raise SignatureError(f"line {lineno}: edge must be written with i < j, got {i} {j}")
        if (i, j) not in edge_set:
            raise UnknownEdge(f"line {lineno}: ({i},{j}) is not an edge of the base graph")
        if (i, j) in assignments:
            raise DuplicateEdge(f"line {lineno}: edge ({i},{j}) assigned twice")
        try:
            elem = parse_element(group, right.strip())
        except (BadElementText, ElementNotInGroup) as exc:
            raise BadElement(f"line {lineno}: {exc}") from None
        assignments[(i, j)] = elem
    if group is None:
        raise BadGroupHeader("no 'group <spec>' header line found")
    for edge in base.edges:
        if edge not in assignments:
            raise MissingEdge(f"edge {edge} of the base graph has no assignment line")
    return Signature(base, group, assignments)


def emit_signature(s: Signature) -> str:
    lines = [f"group {format_group(s.group)}"]
    for (i, j), elem in s.items():
        lines.append(f"{i} {j} : {format_element(s.group, elem)}")
    return "\n".join(lines) + "\n"


def _fiber_images(group: GroupSpec, g) -> list[int]:
    """0-based fiber position a -> position b under voltage g."""
    if isinstance(group, AbelianGroup):
        elems = group.elements()
        index = {e: i for i, e in enumerate(elems)}
        return [index[compose(group, e, g)] for e in elems]
    return [g[a] - 1 for a in range(group.degree)]


def build_lift(base: Graph, s: Signature) -> Graph:
    """Construct the lifted graph selected by signature s.

    Lift vertex (i, a) gets index (i - 1) * d + a + 1 (vertex-major, 0-based
    fiber position a). The output has base.n * d vertices and |edges| * d
    edges, and construction is deterministic: identical inputs produce
    identical edge tuples.
    """
    if s.base != base:
        raise InvalidSignature("signature was built for a different base graph")
    if set(s.assignments) != set(base.edges):
        raise InvalidSignature("signature does not cover exactly the base edge set")
    d = s.group.fiber_size()
    pairs = []
    for (i, j), g in s.items():
        images = _fiber_images(s.group, g)
        for a, b in enumerate(images):
            pairs.append(((i - 1) * d + a + 1, (j - 1) * d + b + 1))
    return from_edge_list(base.n * d, pairs)


def build_constant_lift(base: Graph, group: GroupSpec, g) -> Graph:
    """Lift with the same voltage g on every edge."""
    return build_lift(base, constant_signature(base, group, g))
