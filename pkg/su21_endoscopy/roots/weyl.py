# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""The Weyl group S3, its compact subgroup and coset representatives."""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .weights import Coroot, Weight


@dataclass(frozen=True, order=True)
class WeylElement:
    """A permutation of the three coordinates.

    ``perm[k]`` is the image of position k, so ``(w.lambda)[perm[k]] = lambda[k]``.
    """

    perm: tuple[int, int, int]

    def __post_init__(self):
        """Check that perm is a permutation of 0, 1, 2."""
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"Not a permutation of three letters: {self.perm}.")

    @property
    def length(self) -> int:
        """Number of inversions."""
        p = self.perm
        return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])

    @property
    def sign(self) -> int:
        """Parity of the permutation."""
        return -1 if self.length % 2 else 1

    @property
    def is_even(self) -> bool:
        """Whether the sign is +1."""
        return self.sign == 1

    @property
    def name(self) -> str:
        """Label listing the images of 1, 2, 3."""
        return "w" + "".join(str(i + 1) for i in self.perm)

    def matrix(self) -> np.ndarray:
        """Permutation matrix P with P e_k = e_perm[k]."""
        p = np.zeros((3, 3), dtype=int)
        for k, image in enumerate(self.perm):
            p[image, k] = 1
        return p

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other."""
        return WeylElement(tuple(self.perm[other.perm[k]] for k in range(3)))

    def inverse(self) -> "WeylElement":
        """Inverse permutation."""
        result = [0, 0, 0]
        for k, image in enumerate(self.perm):
            result[image] = k
        return WeylElement(tuple(result))

    def act_coroot(self, coroot: Coroot) -> Coroot:
        """w H_kl = H_{w(k) w(l)}."""
        return Coroot(self.perm[coroot.k - 1] + 1, self.perm[coroot.l - 1] + 1)

    def act_angles(self, angles):
        """Permute an angle triple the same way as weights."""
        result = [0.0, 0.0, 0.0]
        for k, image in enumerate(self.perm):
            result[image] = angles[k]
        return tuple(result)


IDENTITY = WeylElement((0, 1, 2))
S12 = WeylElement((1, 0, 2))
"""Reflection in the compact root alpha_12; generates W_K."""

CYCLE = WeylElement((1, 2, 0))
"""The 3-cycle c sending position 1 to 2, 2 to 3 and 3 to 1."""

CYCLE_SQUARED = CYCLE.compose(CYCLE)


def weyl_group() -> list[WeylElement]:
    """All six elements, sorted by (length, perm)."""
    return sorted(
        (WeylElement(p) for p in permutations(range(3))),
        key=lambda w: (w.length, w.perm),
    )


def compact_weyl_group() -> list[WeylElement]:
    """W_K = {e, s12}."""
    return [IDENTITY, S12]


def even_elements() -> list[WeylElement]:
    """The alternating subgroup {e, c, c^2}."""
    return [IDENTITY, CYCLE, CYCLE_SQUARED]


def weyl_act(w: WeylElement, weight: Weight) -> Weight:
    """Permute the coordinates of a weight."""
    result = [None, None, None]
    for k, image in enumerate(w.perm):
        result[image] = weight.coords[k]
    return Weight(tuple(result))


def coset_representatives() -> list[WeylElement]:
    """Minimal-length representatives of the right cosets W_K w.

    The basepoint representative is the identity.
    """
    representatives = []
    seen = set()
    for w in weyl_group():
        coset = frozenset(v.compose(w) for v in compact_weyl_group())
        if coset in seen:
            continue
        seen.add(coset)
        representatives.append(min(coset, key=lambda v: (v.length, v.perm)))
    return representatives


def even_representative(w: WeylElement) -> WeylElement:
    """The unique even element of the coset W_K w."""
    return next(v.compose(w) for v in compact_weyl_group() if v.compose(w).is_even)
