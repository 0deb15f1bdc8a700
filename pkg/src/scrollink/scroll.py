"""Rational normal scrolls and their Weil divisor classes.

A scroll is given by the splitting type ``(a_1, ..., a_r)`` of the bundle
``O(a_1) + ... + O(a_r)`` over the projective line.  Its dimension is ``r``,
its degree is ``f = sum(a_i)`` and it spans a projective space of dimension
``f + r - 1``.  The ``l`` zero entries produce a vertex of dimension ``l - 1``.

Ambient classes ``h*H + rr*R`` live in ``Cl(X)``; when the vertex has
codimension two the hyperplane class collapses onto ``f*R`` and the raw
coefficient pair is no longer canonical, so compare through
:func:`normalize_class` or :func:`classes_equal`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import DomainError


class ClassGroup(enum.Enum):
    FREE_RANK2 = "FreeRank2"
    CYCLIC_H_IS_FR = "CyclicHisFR"


@dataclass(frozen=True)
class ScrollType:
    degrees: tuple[int, ...]
    r: int = field(init=False)
    f: int = field(init=False)
    n_emb: int = field(init=False)
    zero_count: int = field(init=False)
    vertex_dim: int = field(init=False)

    def __post_init__(self):
        degs = tuple(sorted(int(a) for a in self.degrees))
        if len(degs) < 2:
            raise DomainError("scroll_dimension", f"need at least 2 degrees, got {len(degs)}")
        if degs[0] < 0:
            raise DomainError("nonnegative_degrees", f"negative degree in {degs}")
        if degs[-1] < 1:
            raise DomainError("positive_degree", "all splitting degrees are zero")
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "r", len(degs))
        object.__setattr__(self, "f", sum(degs))
        object.__setattr__(self, "n_emb", sum(degs) + len(degs) - 1)
        zeros = degs.count(0)
        object.__setattr__(self, "zero_count", zeros)
        object.__setattr__(self, "vertex_dim", zeros - 1)

    @property
    def smooth(self) -> bool:
        return self.zero_count == 0

    @property
    def vertex_codim(self) -> int | None:
        """Codimension of the vertex in the scroll, None when smooth."""
        if self.smooth:
            return None
        return self.r - self.vertex_dim

    def __str__(self):
        return "S(" + ",".join(map(str, self.degrees)) + ")"


@dataclass(frozen=True)
class AmbientClass:
    """Weil class ``h*H + rr*R`` on the scroll (not canonical, see module doc)."""

    h: int
    rr: int

    def __add__(self, other):
        return AmbientClass(self.h + other.h, self.rr + other.rr)

    def __neg__(self):
        return AmbientClass(-self.h, -self.rr)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return AmbientClass(k * self.h, k * self.rr)

    def __str__(self):
        return _format_class(self.h, self.rr, "H", "R")


@dataclass(frozen=True)
class ResolvedClass:
    """Picard class ``h*H~ + rr*R~`` on the canonical resolution."""

    h: int
    rr: int

    def __add__(self, other):
        return ResolvedClass(self.h + other.h, self.rr + other.rr)

    def __neg__(self):
        return ResolvedClass(-self.h, -self.rr)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return ResolvedClass(k * self.h, k * self.rr)

    def __str__(self):
        return _format_class(self.h, self.rr, "H~", "R~")


H_TILDE = ResolvedClass(1, 0)
R_TILDE = ResolvedClass(0, 1)


def _format_class(h, rr, hs, rs):
    parts = []
    for c, sym in ((h, hs), (rr, rs)):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append((sign, mag + sym))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {t}" for s, t in parts[1:])


def make_scroll(degrees) -> ScrollType:
    """Validate a splitting type; the list is sorted on the way in."""
    return ScrollType(tuple(degrees))


def parse_scroll(text: str) -> ScrollType:
    """Parse ``"0,0,3"`` into a scroll."""
    try:
        degs = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise DomainError("scroll_syntax", f"expected comma-separated integers, got {text!r}")
    return make_scroll(degs)


def class_group(scroll: ScrollType) -> ClassGroup:
    if scroll.vertex_codim == 2:
        return ClassGroup.CYCLIC_H_IS_FR
    return ClassGroup.FREE_RANK2


def normalize_class(scroll: ScrollType, c: AmbientClass) -> AmbientClass:
    if class_group(scroll) is ClassGroup.CYCLIC_H_IS_FR:
        return AmbientClass(0, c.h * scroll.f + c.rr)
    return c


def classes_equal(scroll: ScrollType, c1: AmbientClass, c2: AmbientClass) -> bool:
    return normalize_class(scroll, c1) == normalize_class(scroll, c2)


def canonical_class(scroll: ScrollType) -> AmbientClass:
    return AmbientClass(-scroll.r, scroll.f - 2)


def is_reflexive(scroll: ScrollType, a: int, b: int) -> bool:
    """Whether ``O_X(a, b)`` is reflexive on a singular scroll."""
    if scroll.smooth:
        raise DomainError("singular_scroll", "reflexivity criterion applies to singular scrolls only")
    if scroll.vertex_codim == 2:
        return b < scroll.f
    return True


def hyperplane_section_descriptor(scroll: ScrollType) -> tuple[int, int, bool]:
    """(dimension, degree, smooth) of a general hyperplane section.

    The splitting type of the section is not determined here.
    """
    if scroll.r < 3:
        raise DomainError("scroll_dimension_ge_3", "hyperplane section of a surface scroll is a curve")
    return scroll.r - 1, scroll.f, scroll.vertex_dim <= 0
