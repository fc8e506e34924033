"""quadmorph: exact verification of polynomial maps between split quadrics.

The library covers sparse exact polynomial arithmetic over Q, F_p and
Q(i), Groebner bases with membership certificates, morphism verifiers
for the quadrics Q_n, suspension and Grothendieck-Witt endomorphism
builders, the symplectic reduction and weight-shifting replays, and the
rank-2 idempotent bundle on the Jouanolou device of P^3.
"""

from .domains import GF, QI, QQ, DomainError, GaussRat, domain_from_tag
from .groebner import (
    GroebnerBasis,
    GroebnerCapError,
    GroebnerError,
    MembershipCertificate,
    NotUnitIdealError,
    buchberger,
    contains_one,
    membership,
)
from .poly import Poly, RingError, RingSpec

__all__ = [
    "GF",
    "QI",
    "QQ",
    "DomainError",
    "GaussRat",
    "domain_from_tag",
    "GroebnerBasis",
    "GroebnerCapError",
    "GroebnerError",
    "MembershipCertificate",
    "NotUnitIdealError",
    "buchberger",
    "contains_one",
    "membership",
    "Poly",
    "RingError",
    "RingSpec",
]

__version__ = "0.1.0"
