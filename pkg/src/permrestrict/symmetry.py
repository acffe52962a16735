"""
The reversal, complementation, and inverse bijections on permutations and
the order-8 group they generate.

r and c commute and each squares to the identity; conjugating r by i gives
c, so <r, c, i> is dihedral of order 8.  Every element has the normal form
r^a c^b i^e with a, b, e in {0, 1}, applied right to left (inverse first,
then complement, then reversal).  Occurrence counts are equivariant: g(pi)
contains g(alpha) exactly as often as pi contains alpha, so applying a
group element to a restriction spec preserves its counting sequence.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .perms import Perm
from .restrictions import RestrictionSpec


def reverse(pi: Sequence[int]) -> Perm:
    """
    >>> reverse((3, 1, 4, 2))
    (2, 4, 1, 3)
    """
    return tuple(reversed(pi))


def complement(pi: Sequence[int]) -> Perm:
    """
    >>> complement((1, 3, 2))
    (3, 1, 2)
    """
    n = len(pi)
    return tuple(n - v + 1 for v in pi)


def invert(pi: Sequence[int]) -> Perm:
    """
    The group-theoretic inverse, as a word.

    >>> invert((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(pi)
    for pos, v in enumerate(pi):
        out[v - 1] = pos + 1
    return tuple(out)


class SymmetryOp(Enum):
    """The eight elements, in the fixed enumeration order."""

    ID = "id"
    R = "r"
    C = "c"
    RC = "rc"
    I = "i"
    RI = "ri"
    CI = "ci"
    RCI = "rci"

    def __repr__(self) -> str:
        return f"SymmetryOp.{self.name}"


GROUP: tuple[SymmetryOp, ...] = tuple(SymmetryOp)

# (uses reversal, uses complementation, uses inverse) per normal form
_FLAGS: dict[SymmetryOp, tuple[int, int, int]] = {
    SymmetryOp.ID: (0, 0, 0), SymmetryOp.R: (1, 0, 0),
    SymmetryOp.C: (0, 1, 0), SymmetryOp.RC: (1, 1, 0),
    SymmetryOp.I: (0, 0, 1), SymmetryOp.RI: (1, 0, 1),
    SymmetryOp.CI: (0, 1, 1), SymmetryOp.RCI: (1, 1, 1),
}
_BY_FLAGS = {flags: op for op, flags in _FLAGS.items()}


def parse_op(text: str) -> SymmetryOp:
    """Look up an op by its text name ("id", "r", ..., "rci")."""
    try:
        return SymmetryOp(text.strip().lower())
    except ValueError:
        names = ", ".join(op.value for op in GROUP)
        raise ValueError(f"unknown symmetry op {text!r} (expected one of {names})") from None


def compose(g: SymmetryOp, h: SymmetryOp) -> SymmetryOp:
    """
    The element acting as "h first, then g".

    Moving i past the r/c part swaps the r and c exponents (i r = c i),
    which is all the relation bookkeeping the normal form needs.
    """
    a, b, e = _FLAGS[g]
    a2, b2, e2 = _FLAGS[h]
    if e:
        a2, b2 = b2, a2
    return _BY_FLAGS[(a ^ a2, b ^ b2, e ^ e2)]


def op_inverse(g: SymmetryOp) -> SymmetryOp:
    """Group inverse; ri and ci are each other's inverses, the rest are involutions."""
    a, b, e = _FLAGS[g]
    return _BY_FLAGS[(b, a, 1)] if e else g


def apply(op: SymmetryOp, pi: Sequence[int]) -> Perm:
    """Apply the op's normal form right to left: inverse, complement, reversal."""
    a, b, e = _FLAGS[op]
    out = tuple(pi)
    if e:
        out = invert(out)
    if b:
        out = complement(out)
    if a:
        out = reverse(out)
    return out


def apply_to_spec(op: SymmetryOp, spec: RestrictionSpec) -> RestrictionSpec:
    """Apply the op to every pattern in the spec; multiplicities carry over."""
    return RestrictionSpec(
        avoid=tuple(apply(op, p) for p in spec.avoid),
        contain=tuple((apply(op, p), m) for p, m in spec.contain))


def orbit(spec: RestrictionSpec) -> frozenset[RestrictionSpec]:
    """All images of the spec under the group; the size divides 8."""
    return frozenset(apply_to_spec(op, spec) for op in GROUP)
