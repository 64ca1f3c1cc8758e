"""Decision pipeline combining every criterion into one label."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .criteria import PptReport, axis_aligned_certificate, ccnr_entangled, degree_criterion, separable_2xq
from .graph import GridGraph, all_cuts, require_edges
from .surgery import RangeVerdict, gme_verdict, range_verdict


class Label(str, enum.Enum):
    SEPARABLE = "SEPARABLE"
    NPT_ENTANGLED = "NPT_ENTANGLED"
    BOUND_ENTANGLED = "BOUND_ENTANGLED"
    GME = "GME"
    PPT_UNDECIDED = "PPT_UNDECIDED"


@dataclass(frozen=True)
class ClassificationReport:
    label: Label
    cuts: tuple[PptReport, ...]
    two_by_q: bool | None = None
    axis_aligned: bool = False
    ccnr: dict[str, float] = field(default_factory=dict)
    ranges: tuple[RangeVerdict, ...] = ()
    gme: bool | None = None
    certificates: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.certificates:
            raise ValueError(f"label {self.label.value} needs at least one certificate")

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label.value,
            "cuts": {
                str(r.cut): {"ppt": r.ppt, "witness": list(r.witness_vertex) if r.witness_vertex else None}
                for r in self.cuts
            },
            "ccnr": self.ccnr,
            "range": {
                str(r.cut): {
                    "root_rank": r.root_rank,
                    "span_bound": r.span_bound,
                    "entangled": r.entangled,
                    "no_product_vectors": r.no_product_vectors,
                }
                for r in self.ranges
            },
            "gme": self.gme,
            "certificates": list(self.certificates),
        }

    def render(self) -> str:
        lines = [f"label: {self.label.value}"]
        for r in self.cuts:
            extra = "" if r.ppt else f" (witness {r.witness_vertex})"
            lines.append(f"cut {r.cut}: {'PPT' if r.ppt else 'NPT'}{extra}")
        for cut, value in self.ccnr.items():
            lines.append(f"ccnr {cut}: {value:.6f}")
        for r in self.ranges:
            lines.append(f"range {r.cut}: rank {r.root_rank}, span bound {r.span_bound}")
        if self.gme is not None:
            lines.append(f"gme: {self.gme}")
        lines.append("certificates: " + ", ".join(self.certificates))
        return "\n".join(lines)


def classify(G: GridGraph, exhaustive: bool = False) -> ClassificationReport:
    """Run the criteria in order and stop at the first decisive one.

    NPT on any cut decides entanglement.  Separability needs an explicit
    certificate: the 2 x q rule (two parties only) or axis-aligned edges
    across every cut.  Otherwise CCNR and the range criterion are tried per
    cut, and for three or more parties the GME verdict on top.
    """
    require_edges(G)
    cuts = all_cuts(G.nparties)
    ppt = tuple(degree_criterion(G, c) for c in cuts)
    npt = [r for r in ppt if not r.ppt]
    if npt:
        certs = tuple(f"degree:{r.cut}@{r.witness_vertex}" for r in npt)
        return ClassificationReport(Label.NPT_ENTANGLED, ppt, certificates=certs)

    two_by_q = separable_2xq(G, cuts[0]) if G.nparties == 2 else None
    if two_by_q:
        return ClassificationReport(Label.SEPARABLE, ppt, two_by_q=True, certificates=("2xq",))
    axis = all(axis_aligned_certificate(G, c) for c in cuts)
    if axis:
        # every edge is then a product vector of the full party split
        return ClassificationReport(
            Label.SEPARABLE, ppt, two_by_q=two_by_q, axis_aligned=True, certificates=("axis-aligned",)
        )

    ccnr = {}
    certs = []
    for c in cuts:
        value, fired = ccnr_entangled(G, c)
        ccnr[str(c)] = value
        if fired:
            certs.append(f"ccnr:{c}")
    if G.nparties >= 3:
        report = gme_verdict(G, exhaustive=exhaustive, cuts=cuts)
        ranges = report.ranges
        gme = report.gme
    else:
        ranges = tuple(range_verdict(G, c, exhaustive=exhaustive) for c in cuts)
        gme = None
    certs += [f"range:{r.cut}" for r in ranges if r.entangled]
    common = dict(cuts=ppt, two_by_q=two_by_q, axis_aligned=False, ccnr=ccnr, ranges=ranges, gme=gme)
    if gme:
        return ClassificationReport(Label.GME, certificates=("gme:no-product-vectors-any-cut", *certs), **common)
    if certs:
        return ClassificationReport(Label.BOUND_ENTANGLED, certificates=tuple(certs), **common)
    return ClassificationReport(Label.PPT_UNDECIDED, certificates=("undecided",), **common)

