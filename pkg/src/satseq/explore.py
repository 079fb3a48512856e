"""Empirical checks of the open statements about saturation sequences.

Nothing here proves anything: each check reports what was observed on the
computed range and lists counterexamples if any turn up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import gordan, probes
from .linalg import ResourceLimitExceeded
from .saturation import SaturationEngine


@dataclass
class ExploreReport:
    d_max: int
    s_max: int
    sequences: Dict[int, List[int]] = field(default_factory=dict)
    skipped: List[int] = field(default_factory=list)
    non_increasing_counterexamples: List[int] = field(default_factory=list)
    alpha_gap_counterexamples: List[int] = field(default_factory=list)
    thresholds: Dict[int, dict] = field(default_factory=dict)
    tail_counterexamples: List[dict] = field(default_factory=list)
    quartic_conflicts: List[dict] = field(default_factory=list)

    @property
    def counterexamples_found(self) -> bool:
        return bool(self.non_increasing_counterexamples or self.alpha_gap_counterexamples
                    or self.tail_counterexamples or self.quartic_conflicts)

    def as_dict(self) -> dict:
        return {
            "d_max": self.d_max,
            "s_max": self.s_max,
            "sequences": {str(d): s for d, s in self.sequences.items()},
            "skipped": self.skipped,
            "non_increasing": {
                "checked": sorted(self.sequences),
                "counterexamples": self.non_increasing_counterexamples,
            },
            "alpha1_exceeds_alpha2": {
                "checked": [d for d in sorted(self.sequences) if len(self.sequences[d]) >= 2],
                "counterexamples": self.alpha_gap_counterexamples,
            },
            "thresholds": {str(s): t for s, t in self.thresholds.items()},
            "tail_of_threes_counterexamples": self.tail_counterexamples,
            "quartic_conflicts": self.quartic_conflicts,
            "status": "counterexample found" if self.counterexamples_found
                      else "no counterexample in the computed range (not a proof)",
        }


def explore(d_max: int, s_max: int = 3, engine: Optional[SaturationEngine] = None,
            quartic_d_max: int = 10) -> ExploreReport:
    if d_max < 4:
        raise ValueError("d_max must be >= 4")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    engine = engine or SaturationEngine()
    rep = ExploreReport(d_max, s_max)
    for d in range(4, d_max + 1):
        try:
            rec = engine.saturation_sequence(d)
        except ResourceLimitExceeded:
            rep.skipped.append(d)
            continue
        seq = list(rec.alphas)
        rep.sequences[d] = seq
        if any(a < b for a, b in zip(seq, seq[1:])):
            rep.non_increasing_counterexamples.append(d)
        if len(seq) >= 2 and not seq[0] > seq[1]:
            rep.alpha_gap_counterexamples.append(d)

    for s in range(1, s_max + 1):
        res = gordan.threshold_search(s, max(d_max, gordan.threshold_lower_limit(s)))
        rep.thresholds[s] = res.as_dict()
        # past the threshold the last s entries should all be 3
        for d, seq in rep.sequences.items():
            if d >= res.threshold and len(seq) >= s and any(a != 3 for a in seq[-s:]):
                rep.tail_counterexamples.append({"s": s, "d": d, "sequence": seq})

    # a new degree-4 invariant at index q+1 forces alpha_q > 4
    for d, seq in rep.sequences.items():
        if d > quartic_d_max:
            continue
        for q in probes.quartic_forced_alphas(d):
            if q <= len(seq) and seq[q - 1] <= 4:
                rep.quartic_conflicts.append({"d": d, "q": q, "alpha": seq[q - 1]})
    return rep
