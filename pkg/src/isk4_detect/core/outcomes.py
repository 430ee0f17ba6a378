"""Tagged results returned by the detector and the oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .certificates import Antenna, Cable, CertificatePayload, Isk4Certificate


@dataclass(frozen=True)
class Isk4Found:
    certificate: Isk4Certificate

    def to_payload(self) -> CertificatePayload:
        return CertificatePayload.from_vertices(self.certificate.vertices)


@dataclass(frozen=True)
class Isk4Free:
    def to_payload(self) -> CertificatePayload:
        return CertificatePayload.isk4_free()


@dataclass(frozen=True)
class NoRadar:
    """No (x,y,z)-radar exists in the derived graph of the claw."""


@dataclass(frozen=True)
class VertexExcluded:
    """``vertex`` lies in no (x,y,z)-radar of the derived graph and may be deleted."""

    vertex: int


@dataclass(frozen=True)
class TripleNeighbor:
    vertex: int


@dataclass(frozen=True)
class AntennaFound:
    antenna: Antenna


@dataclass(frozen=True)
class CableFound:
    cable: Cable


Verdict = Union[Isk4Found, Isk4Free]
RadarOutcome = Union[Isk4Found, NoRadar]
StructureOutcome = Union[Isk4Found, NoRadar, TripleNeighbor, AntennaFound, CableFound]
HandlerOutcome = Union[Isk4Found, NoRadar, VertexExcluded]
