"""Jacobian parity certificates for Atkin-Lehner quotient curves.

The Poonen-Stoll criterion reduces the parity of the Shafarevich-Tate
order of a curve's jacobian to counting deficient places: places whose
completion carries no rational divisor of degree g - 1.  ``certify``
assembles genus data and a deficiency ledger for an admissible pair and
issues the verdict; every external fact the argument leans on is listed
on the certificate.

``enumerate_admissible`` scans a box for admissible pairs, and
``hyperelliptic_sieve`` applies the point-count bound that rules out
hyperellipticity of the quotient for all but finitely many pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .localpoints import DeficiencyLedger, deficiency_ledger
from .quaternion import eichler_class_number
from .shimura import (
    AdmissibilityRejection,
    AdmissiblePair,
    GenusData,
    check_admissible,
    genus_quotient,
)

__all__ = [
    "Verdict",
    "HyperellipticFlag",
    "ParityCertificate",
    "SieveReport",
    "STANDING_ASSUMPTIONS",
    "HYPERELLIPTIC_PRODUCT_BOUND",
    "F4_POINT_CAP",
    "poonen_stoll_verdict",
    "certify",
    "enumerate_admissible",
    "hyperelliptic_sieve",
]


class Verdict(Enum):
    EVEN = "even"
    ODD = "odd"


class HyperellipticFlag(Enum):
    POSSIBLY_HYPERELLIPTIC = "possibly_hyperelliptic"
    NOT_HYPERELLIPTIC = "not_hyperelliptic"


# Facts used but not recomputed; every certificate carries these labels.
STANDING_ASSUMPTIONS: tuple[str, ...] = (
    "parity criterion: the jacobian verdict is odd exactly when the deficient-place count is odd",
    "degree-2 rational divisor classes exist on the covering curve over every completion of Q",
    "degree-1 rational divisor classes exist on the covering curve over Q_l for finite l prime to the discriminant",
    "the quotient curve acquires a degree-1 rational divisor class over Q_p at its own prime via p-adic uniformization",
)

# A hyperelliptic quotient forces (p-1)(q-1) <= 240.
HYPERELLIPTIC_PRODUCT_BOUND = 240

# A hyperelliptic curve with good reduction at 2 has at most 2 * #P^1(F_4)
# points over F_4.
F4_POINT_CAP = 10


@dataclass(frozen=True)
class ParityCertificate:
    """Complete trace of one parity computation."""

    pair: AdmissiblePair
    genus: GenusData
    ledger: DeficiencyLedger
    verdict: Verdict
    assumptions: tuple[str, ...]

    def __post_init__(self) -> None:
        expected = Verdict.ODD if self.ledger.deficient_count % 2 else Verdict.EVEN
        if self.verdict is not expected:
            raise ValueError("verdict contradicts the ledger parity")
        if not self.assumptions:
            raise ValueError("a certificate always cites its assumptions")


def poonen_stoll_verdict(ledger: DeficiencyLedger) -> Verdict:
    """Odd exactly when the number of deficient places is odd."""
    return Verdict.ODD if ledger.deficient_count % 2 else Verdict.EVEN


def certify(p: int, q: int) -> ParityCertificate | AdmissibilityRejection:
    """Certify the parity verdict for V/w_p, or reject the pair.

    Only pairs satisfying the admissibility hypotheses are certified;
    outside that regime no verdict is extrapolated.
    """
    checked = check_admissible(p, q)
    if isinstance(checked, AdmissibilityRejection):
        return checked
    genus = genus_quotient(checked)
    ledger = deficiency_ledger(checked)
    return ParityCertificate(
        pair=checked,
        genus=genus,
        ledger=ledger,
        verdict=poonen_stoll_verdict(ledger),
        assumptions=STANDING_ASSUMPTIONS,
    )


def enumerate_admissible(bound: int) -> list[AdmissiblePair]:
    """All admissible (p, q) with p <= bound and q <= bound, sorted."""
    if not 0 < bound < 2**15:
        raise ValueError("bound must be a positive integer below 2^15")
    ps = [p for p in range(5, bound + 1, 24)]
    qs = [q for q in range(5, bound + 1, 12)]
    pairs = []
    for p in ps:
        for q in qs:
            checked = check_admissible(p, q)
            if isinstance(checked, AdmissiblePair):
                pairs.append(checked)
    pairs.sort(key=lambda pr: (pr.p, pr.q))
    return pairs


@dataclass(frozen=True)
class SieveReport:
    """Hyperellipticity sieve outcome with its witness numbers.

    genus_product is (p-1)(q-1); definite_class_number is H(2pq), the
    number of supersingular points of the reduction mod 2, of which at
    least supersingular_lower_bound = ceil(H/2) survive on the quotient,
    to be compared against F4_POINT_CAP.  refined_not_hyperelliptic
    reports the coarser bound ceil((p-1)(q-1)/24) > F4_POINT_CAP.
    """

    pair: AdmissiblePair
    flag: HyperellipticFlag
    genus_product: int
    definite_class_number: int
    supersingular_lower_bound: int
    refined_not_hyperelliptic: bool


def hyperelliptic_sieve(pairs: list[AdmissiblePair]) -> list[SieveReport]:
    """Flag each pair: the quotient can be hyperelliptic only if
    (p-1)(q-1) <= HYPERELLIPTIC_PRODUCT_BOUND."""
    reports = []
    for pair in pairs:
        product = (pair.p - 1) * (pair.q - 1)
        h = eichler_class_number(2 * pair.p * pair.q)
        flag = (
            HyperellipticFlag.NOT_HYPERELLIPTIC
            if product > HYPERELLIPTIC_PRODUCT_BOUND
            else HyperellipticFlag.POSSIBLY_HYPERELLIPTIC
        )
        reports.append(
            SieveReport(
                pair=pair,
                flag=flag,
                genus_product=product,
                definite_class_number=h,
                supersingular_lower_bound=math.ceil(h / 2),
                refined_not_hyperelliptic=math.ceil(product / 24) > F4_POINT_CAP,
            )
        )
    return reports
