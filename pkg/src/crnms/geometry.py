"""Combinatorial certificates for two-reaction networks: β and box diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .network import Network, Reaction, negative_multiple


@dataclass(frozen=True)
class BetaVector:
    """Sign certificate of an ordered pair of reactions.

    Attributes:
        entries: ``(y' - y) * (ỹ - y)`` entrywise.
        lam: Positive scalar with ``y' - y = -lam (ỹ' - ỹ)``.
    """

    entries: tuple[int, ...]
    lam: Fraction

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple((b > 0) - (b < 0) for b in self.entries)

    @property
    def positives(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.entries) if b > 0)

    @property
    def negatives(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.entries) if b < 0)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_mixed(self) -> bool:
        return bool(self.positives) and bool(self.negatives)

    def is_one_signed(self) -> bool:
        return not self.is_zero() and not self.is_mixed()


def hadamard(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a * b for a, b in zip(u, v))


def raw_beta(first: Reaction, second: Reaction) -> tuple[int, ...]:
    """``(y' - y) * (ỹ - y)`` with no dependency check."""
    d = tuple(b - a for a, b in zip(first.reactant.coeffs, second.reactant.coeffs))
    return hadamard(first.vector, d)


def beta_of_reactions(first: Reaction, second: Reaction) -> Optional[BetaVector]:
    """β for the ordered pair, or ``None`` when the vectors are not negative multiples."""
    lam = negative_multiple(first.vector, second.vector)
    if lam is None:
        return None
    return BetaVector(raw_beta(first, second), lam)


def beta(net: Network) -> Optional[BetaVector]:
    """β of a network with exactly two directed reactions.

    Raises:
        ValueError: if the network does not have exactly two reactions.
    """
    if net.r != 2:
        raise ValueError("beta needs exactly two reactions")
    return beta_of_reactions(net.reactions[0], net.reactions[1])


class BoxForm(str, Enum):
    """Shape of a projected box diagram.

    The four zigzags follow the reactant at the smaller first coordinate: for a
    descending diagonal its arrow points up-right (1) or down-left (2); for an
    ascending diagonal it points up-left (3) or down-right (4).
    """

    ZIGZAG_1 = "ZIGZAG_1"
    ZIGZAG_2 = "ZIGZAG_2"
    ZIGZAG_3 = "ZIGZAG_3"
    ZIGZAG_4 = "ZIGZAG_4"
    NONE = "NONE"


@dataclass(frozen=True)
class BoxGeometry:
    """Projection of a two-reaction network to the ``(i, j)`` coordinate plane.

    Attributes:
        i: First species index.
        j: Second species index.
        gamma: Slope of the reaction vector, ``None`` if vertical.
        alpha: Slope of the reactant segment, ``None`` if vertical or degenerate.
        form: Zigzag form, or ``NONE``.
        box_defined: Both reactant coordinates differ.
    """

    i: int
    j: int
    gamma: Optional[Fraction]
    alpha: Optional[Fraction]
    form: BoxForm
    box_defined: bool

    @property
    def is_zigzag(self) -> bool:
        return self.form is not BoxForm.NONE

    @property
    def diagonal_slope_minus_one(self) -> bool:
        return self.alpha == -1


def slope(u: Sequence[int], i: int, j: int) -> Optional[Fraction]:
    if u[i] == 0:
        return None
    return Fraction(u[j], u[i])


def box_geometry(first: Reaction, second: Reaction, i: int = 0, j: int = 1) -> BoxGeometry:
    """Box diagram of the projection to species ``i`` and ``j``.

    The zigzag form is read off the picture: the box must be defined, the
    reaction vector must be neither horizontal nor vertical, and the arrow
    slope and the diagonal slope must have opposite signs.
    """
    y, yt = first.reactant.coeffs, second.reactant.coeffs
    v = first.vector
    d = tuple(b - a for a, b in zip(y, yt))
    box_defined = d[i] != 0 and d[j] != 0
    gamma = slope(v, i, j)
    alpha = slope(d, i, j) if d[i] != 0 else None
    form = BoxForm.NONE
    if box_defined and v[i] != 0 and v[j] != 0 and (alpha > 0) != (gamma > 0):
        # Reactant at the smaller i-coordinate and its own reaction vector.
        left_vec = v if y[i] < yt[i] else second.vector
        if alpha < 0:
            form = BoxForm.ZIGZAG_1 if left_vec[i] > 0 else BoxForm.ZIGZAG_2
        else:
            form = BoxForm.ZIGZAG_3 if left_vec[i] < 0 else BoxForm.ZIGZAG_4
    return BoxGeometry(i, j, gamma, alpha, form, box_defined)


def projected_slope_minus_one(first: Reaction, second: Reaction, i: int, j: int) -> bool:
    """Whether the reactant segment projected to ``(i, j)`` has slope -1."""
    d_i = second.reactant[i] - first.reactant[i]
    d_j = second.reactant[j] - first.reactant[j]
    return d_i != 0 and d_i == -d_j
