from dataclasses import dataclass
from fractions import Fraction

from .multigraph import CutReport, VertexSet


@dataclass(frozen=True)
class BadSetCertificate:
    """
    Claim that `set` is a kappa-bad set (strong when its complement is connected).

    The certificate is plain data; cheeger.check_certificate re-derives it
    against a graph.
    """

    set: VertexSet
    report: CutReport
    kappa: Fraction
    strong: bool = False

    @property
    def ratio(self) -> Fraction:
        return self.report.ratio

    @property
    def volume(self) -> int:
        return self.report.volume_in

    def sort_key(self):
        """Smallest ratio first, then smallest volume, then lexicographic members"""
        return (self.report.ratio, self.report.volume_in, self.set.sorted())

    def to_dict(self) -> dict:
        return {
            "set": self.set.sorted(),
            "host_size": self.set.host_size,
            "kappa": [self.kappa.numerator, self.kappa.denominator],
            "strong": self.strong,
            **self.report.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BadSetCertificate":
        return cls(
            set=VertexSet.of(data["set"], int(data["host_size"])),
            report=CutReport.from_dict(data),
            kappa=Fraction(*data["kappa"]),
            strong=bool(data.get("strong", False)),
        )
