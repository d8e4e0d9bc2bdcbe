"""Shared registry of analyses so quotients and products are built once per sweep."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .analysis import Analysis
from .constructions import GradedHom, direct_product, quotient
from .grading import GradedNearRing


@dataclass(frozen=True)
class Config:
    domain: str = "graded"              # quantifier domain for I, J: "graded" or "all"
    ideal_generated: bool = False       # IJ as generated ideal instead of subgroup
    graded_maximal: bool = False        # unique maximal ideal searched among graded ideals only
    cap: int | None = 5                 # counterexamples kept per claim; None keeps all
    hom_cap: int = 16                   # largest source order for homomorphism search
    factor_max_len: int = 3
    chain_max_len: int = 3
    max_order: int = 64

    def to_dict(self) -> dict:
        return asdict(self)


class World:
    def __init__(self, config: Config | None = None):
        self.config = config or Config()
        self._by_key: dict[bytes, Analysis] = {}
        self._products: dict[tuple[bytes, bytes], Analysis] = {}
        self.memo: dict = {}

    def analysis(self, gnr: GradedNearRing) -> Analysis:
        an = self._by_key.get(gnr.key)
        if an is None:
            an = Analysis(gnr, self.config.domain, self.config.ideal_generated)
            self._by_key[gnr.key] = an
        return an

    def quotient(self, an: Analysis, I: int) -> tuple[Analysis, GradedHom]:
        """N / I for a graded ideal I; may raise InducedGradingInvalid."""
        hit = an._quotients.get(I)
        if hit is None:
            qgnr, pi = quotient(an.gnr, I)
            hit = (self.analysis(qgnr), pi)
            an._quotients[I] = hit
        return hit

    def product(self, N: Analysis, M: Analysis) -> Analysis:
        key = (N.gnr.key, M.gnr.key)
        hit = self._products.get(key)
        if hit is None:
            hit = self.analysis(direct_product(N.gnr, M.gnr, self.config.max_order))
            self._products[key] = hit
        return hit

    def register_product(self, N: Analysis, M: Analysis, NM: Analysis) -> None:
        self._products[(N.gnr.key, M.gnr.key)] = NM
