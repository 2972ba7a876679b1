# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Discrete series characters on the compact Cartan, kappa and stable sums."""

import logging
from dataclasses import dataclass, field

from ..errors import ConstraintViolationError, IrregularParameterError
from ..roots import (
    ParameterClass,
    Weight,
    WeylElement,
    chamber_sign,
    classify_parameter,
    compact_weyl_group,
    coset_representatives,
    even_elements,
    weyl_act,
)
from ..roots.weyl import even_representative
from .conventions import CosetIdentification, coroot_label
from .torus import EllipticElement, h_denominator, weyl_denominator

logger = logging.getLogger(__name__)


def half_noncompact_dimension(group_dim: int, compact_dim: int) -> int:
    """q = dim(G/K) / 2."""
    if (group_dim - compact_dim) % 2:
        raise ValueError("dim G - dim K must be even.")
    return (group_dim - compact_dim) // 2


Q_G = half_noncompact_dimension(8, 4)
"""SU(2,1) has dimension 8 and K = S(U(2) x U(1)) dimension 4."""

Q_H = half_noncompact_dimension(4, 2)
"""S(U(1,1) x U(1)) has dimension 4 and its compact torus dimension 2."""


def _epsilon(weight: Weight) -> int:
    sign = chamber_sign(weight)
    if sign == 0:
        raise IrregularParameterError(f"Parameter {weight} is not regular.")
    return sign


def ds_character(weight: Weight, gamma: EllipticElement) -> complex:
    """Theta_lambda(gamma) for a parameter given directly as a weight."""
    epsilon = _epsilon(weight)
    denominator = weyl_denominator(gamma)
    numerator = sum(
        v.sign * gamma.monomial(weyl_act(v, weight)) for v in compact_weyl_group()
    )
    return (-1) ** Q_G * epsilon * numerator / denominator


def ds_character_G(mu: Weight, w: WeylElement, gamma: EllipticElement) -> complex:
    """Discrete series character of G on the compact Cartan.

    Theta_{w mu}(gamma) = (-1)^q(G) eps(w mu) sum_{v in W_K} sign(v)
    gamma^{v w mu} / Delta_B(gamma).

    Raises:
        IrregularParameterError: if mu is not regular.
        IrregularElementError: if gamma is not regular.
    """
    return ds_character(weyl_act(w, mu), gamma)


def h_epsilon(nu: Weight) -> int:
    """sign(nu_2 - nu_3), the chamber of nu for the single root of H."""
    difference = nu.coords[1] - nu.coords[2]
    if difference == 0:
        raise IrregularParameterError(f"Parameter {nu} is not regular for H.")
    return 1 if difference > 0 else -1


def ds_character_H(nu: Weight, gamma_h: EllipticElement) -> complex:
    """Discrete series character of H.

    Theta^H_nu(gamma) = (-1)^q(H) sign(nu_2 - nu_3) gamma^nu divided by
    2i sin((theta2 - theta3) / 2).

    The U(1) factor enters through gamma^nu, the SU(1,1) factor through the
    sign and the single-root denominator.
    """
    return (-1) ** Q_H * h_epsilon(nu) * gamma_h.monomial(nu) / h_denominator(gamma_h)


def stable_h_character(
    nu_base: Weight, xi: Weight, gamma_h: EllipticElement
) -> complex:
    """SO^H_{lambda + xi} = sum_{v in W_K} sign(v) Theta^H_{v lambda + xi}."""
    return sum(
        v.sign * ds_character_H(weyl_act(v, nu_base) + xi, gamma_h)
        for v in compact_weyl_group()
    )


PRINTED_KAPPA = {"H12": -1, "H13": -1}
"""kappa as printed; the value on H23 is not given."""


@dataclass(frozen=True)
class KappaCharacter:
    """Character of the coroot lattice given on H12, H23 and H13."""

    h12: int
    h23: int
    h13: int

    def __post_init__(self):
        """Values are signs and H13 = H12 + H23 is respected."""
        if any(value not in (1, -1) for value in (self.h12, self.h23, self.h13)):
            raise ConstraintViolationError("Kappa takes values in {1, -1}.")
        if self.h13 != self.h12 * self.h23:
            raise ConstraintViolationError(
                f"kappa(H13) = {self.h13} but kappa(H12) kappa(H23) = "
                f"{self.h12 * self.h23}."
            )

    @classmethod
    def trivial(cls) -> "KappaCharacter":
        """kappa = 1."""
        return cls(1, 1, 1)

    @classmethod
    def reference(cls) -> "KappaCharacter":
        """The non-trivial character with kappa(H13) = 1."""
        return cls(-1, -1, 1)

    @classmethod
    def from_printed(cls) -> "KappaCharacter":
        """Resolve the printed assignment kappa(H12) = kappa(H13) = -1.

        The printed values contradict the requirement kappa(H13) = 1, so the
        reference character is returned and the conflict is logged.
        """
        resolved = cls.reference()
        logger.warning(
            "Printed kappa(H12) = kappa(H13) = -1 contradicts kappa(H13) = 1; "
            "using %s, which differs on %s.",
            resolved.to_dict(),
            ", ".join(kappa_reconciliation(resolved)["mismatches"]),
        )
        return resolved

    @property
    def is_trivial(self) -> bool:
        """Whether every value is 1."""
        return (self.h12, self.h23, self.h13) == (1, 1, 1)

    def value(self, label: str) -> int:
        """kappa on the coroot named ``label``."""
        return {"H12": self.h12, "H23": self.h23, "H13": self.h13}[label]

    def on_weyl(
        self,
        w: WeylElement,
        identification: CosetIdentification = CosetIdentification.PAIRED,
    ) -> int:
        """kappa(w) for an even Weyl element."""
        label = coroot_label(w, identification)
        return 1 if label is None else self.value(label)

    def to_dict(self) -> dict[str, int]:
        """Values keyed by coroot name."""
        return {"H12": self.h12, "H23": self.h23, "H13": self.h13}


def kappa_reconciliation(kappa: KappaCharacter) -> dict:
    """The printed kappa next to the one in use, with the coroots they differ on."""
    used = kappa.to_dict()
    return dict(
        printed=dict(PRINTED_KAPPA),
        used=used,
        mismatches=[
            label for label, value in PRINTED_KAPPA.items() if used[label] != value
        ],
    )


def kappa_orbital_sum(
    mu: Weight,
    kappa: KappaCharacter,
    gamma: EllipticElement,
    identification: CosetIdentification = CosetIdentification.PAIRED,
) -> complex:
    """sum over even w of kappa(w) Theta_{w mu}(gamma^-1)."""
    inverse = gamma.inverse()
    return sum(
        kappa.on_weyl(w, identification) * ds_character_G(mu, w, inverse)
        for w in even_elements()
    )


def stable_character_sum(mu: Weight, gamma: EllipticElement) -> complex:
    """Sum of Theta_{r mu}(gamma^-1) over the coset representatives r of W_K in W."""
    inverse = gamma.inverse()
    return sum(ds_character_G(mu, r, inverse) for r in coset_representatives())


@dataclass(frozen=True)
class PacketMember:
    """Discrete series with parameter r mu, labelled by its coset representative."""

    representative: WeylElement
    parameter: Weight
    parameter_class: ParameterClass

    @property
    def label(self) -> str:
        """Name such as "pi[w132]"."""
        return f"pi[{self.representative.name}]"

    @property
    def even_element(self) -> WeylElement:
        """The even element of the coset W_K r."""
        return even_representative(self.representative)


@dataclass(frozen=True)
class LPacket:
    """The three discrete series sharing the infinitesimal character of mu."""

    mu: Weight
    members: tuple[PacketMember, ...] = field(init=False)

    def __post_init__(self):
        """Build one member per coset representative."""
        _epsilon(self.mu)
        parameters = [(r, weyl_act(r, self.mu)) for r in coset_representatives()]
        members = tuple(
            PacketMember(r, weight, classify_parameter(weight))
            for r, weight in parameters
        )
        if len(members) != 3:
            raise ValueError("An L-packet of SU(2,1) has three members.")
        object.__setattr__(self, "members", members)

    def kappa_sum(
        self,
        kappa: KappaCharacter,
        gamma: EllipticElement,
        identification: CosetIdentification = CosetIdentification.PAIRED,
    ) -> complex:
        """sum over members of kappa(pi) Theta_pi(gamma^-1)."""
        inverse = gamma.inverse()
        return sum(
            kappa.on_weyl(m.even_element, identification)
            * ds_character(m.parameter, inverse)
            for m in self.members
        )


@dataclass(frozen=True)
class AssemblyRow:
    """Packet sums at one grid point."""

    angles: tuple[float, float, float]
    packet_sums: list[complex]
    orbital_sums: list[complex]
    stable_sums: list[complex]
    total: complex

    @property
    def residual(self) -> float:
        """Largest gap between a packet sum and its kappa-orbital sum."""
        return max(
            (abs(a - b) for a, b in zip(self.packet_sums, self.orbital_sums)),
            default=0.0,
        )


@dataclass(frozen=True)
class AssemblyReport:
    """Regrouped kappa sums across packets on a grid."""

    mus: list[Weight]
    kappa: KappaCharacter
    rows: list[AssemblyRow]

    @property
    def max_residual(self) -> float:
        """Largest packet-versus-orbital gap over the grid."""
        return max((row.residual for row in self.rows), default=0.0)

    @property
    def additivity_residual(self) -> float:
        """Largest |total - sum of packet sums| over the grid."""
        return max(
            (abs(row.total - sum(row.orbital_sums)) for row in self.rows), default=0.0
        )


def stable_trace_assembly(
    packets: list[LPacket],
    kappa: KappaCharacter,
    gamma_grid: list[EllipticElement],
    identification: CosetIdentification = CosetIdentification.PAIRED,
) -> AssemblyReport:
    """Tabulate sum over packets of kappa(pi) Theta_pi and check it packet by packet."""
    rows = []
    for gamma in gamma_grid:
        gamma.require_regular()
        packet_sums = [p.kappa_sum(kappa, gamma, identification) for p in packets]
        rows.append(
            AssemblyRow(
                angles=gamma.angles,
                packet_sums=packet_sums,
                orbital_sums=[
                    kappa_orbital_sum(p.mu, kappa, gamma, identification)
                    for p in packets
                ],
                stable_sums=[stable_character_sum(p.mu, gamma) for p in packets],
                total=sum(packet_sums),
            )
        )
    return AssemblyReport([p.mu for p in packets], kappa, rows)


def packet_report(
    packet: LPacket,
    gamma: EllipticElement,
    kappa: KappaCharacter,
    identification: CosetIdentification = CosetIdentification.PAIRED,
) -> dict:
    """Members of a packet with their characters at gamma^-1 and both packet sums."""
    inverse = gamma.inverse()
    members = [
        dict(
            label=m.label,
            representative=m.representative.name,
            parameter=str(m.parameter),
            parameter_class=m.parameter_class.value,
            kappa=kappa.on_weyl(m.even_element, identification),
            character=ds_character(m.parameter, inverse),
        )
        for m in packet.members
    ]
    return dict(
        mu=str(packet.mu),
        angles=list(gamma.angles),
        kappa=kappa.to_dict(),
        kappa_reconciliation=kappa_reconciliation(kappa),
        members=members,
        stable_sum=stable_character_sum(packet.mu, gamma),
        kappa_sum=packet.kappa_sum(kappa, gamma, identification),
    )
