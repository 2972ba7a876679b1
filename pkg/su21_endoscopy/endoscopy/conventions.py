# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Normalisation conventions of the transfer identity."""

from dataclasses import asdict, dataclass, replace
from enum import Enum
from itertools import product

from ..roots import CYCLE, CYCLE_SQUARED, IDENTITY, WeylElement


class DenominatorPhase(str, Enum):
    """Which Weyl denominators enter the transfer factor."""

    UNNORMALIZED = "unnormalized"
    """prod(1 - gamma^alpha) over positive roots of G and of H."""
    RHO_NORMALIZED = "rho_normalized"
    """The gamma^rho-normalised products Delta_B and Delta_{B_H}."""


class SignPlacement(str, Enum):
    """Whether (-1)^{q(G)+q(H)} multiplies the transfer factor."""

    INCLUDED = "included"
    OMITTED = "omitted"


class CharacterArgument(str, Enum):
    """Whether characters are evaluated at gamma^-1 or at gamma."""

    INVERSE = "inverse"
    DIRECT = "direct"


class CosetIdentification(str, Enum):
    """Which coroot of kappa is attached to each non-trivial even Weyl element."""

    PAIRED = "paired"
    """c -> H12, c^2 -> H23."""
    SPLIT = "split"
    """c -> H13, c^2 -> H12."""


IDENTIFICATIONS = {
    CosetIdentification.PAIRED: {CYCLE: "H12", CYCLE_SQUARED: "H23"},
    CosetIdentification.SPLIT: {CYCLE: "H13", CYCLE_SQUARED: "H12"},
}


def coroot_label(w: WeylElement, identification: CosetIdentification) -> str | None:
    """Coroot whose kappa-value weights the even element w; None for the identity."""
    if w == IDENTITY:
        return None
    try:
        return IDENTIFICATIONS[identification][w]
    except KeyError:
        raise ValueError(f"{w.name} is not an even Weyl element.")


@dataclass(frozen=True)
class TransferConventions:
    """One choice for each of the four conventions."""

    denominator_phase: DenominatorPhase = DenominatorPhase.UNNORMALIZED
    sign_placement: SignPlacement = SignPlacement.INCLUDED
    character_argument: CharacterArgument = CharacterArgument.INVERSE
    coset_identification: CosetIdentification = CosetIdentification.PAIRED

    def to_dict(self) -> dict[str, str]:
        """Manifest entry with plain string values."""
        return {key: value.value for key, value in asdict(self).items()}

    @property
    def label(self) -> str:
        """Compact "a/b/c/d" label."""
        return "/".join(self.to_dict().values())

    def perturbations(self) -> list["TransferConventions"]:
        """The four conventions differing from this one in exactly one choice."""
        result = []
        for name, value in asdict(self).items():
            other = next(v for v in type(value) if v is not value)
            result.append(replace(self, **{name: other}))
        return result


def all_conventions() -> list[TransferConventions]:
    """All 16 combinations in a fixed order."""
    return [
        TransferConventions(*choice)
        for choice in product(
            DenominatorPhase, SignPlacement, CharacterArgument, CosetIdentification
        )
    ]


LOCKED_CONVENTIONS = TransferConventions(
    denominator_phase=DenominatorPhase.UNNORMALIZED,
    sign_placement=SignPlacement.INCLUDED,
    character_argument=CharacterArgument.INVERSE,
    coset_identification=CosetIdentification.PAIRED,
)
"""Winner of the calibration on the reference parameter."""
