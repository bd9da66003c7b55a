"""Exhaustive probe of the spanning question for Sigma_{g,n}.

Every freely reduced word of length at most ``max_len`` over t_k^{+-1} and
the positive crossings is reduced with both strategies.  A word counts as
reduced when at least one strategy finishes; its result must match the
wreath group algebra at q = 1.  When both finish with different results the
difference is a linear relation among Sigma words and is reported as a
collision.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from .hgn import FailureReport, HgnElement, MixedWord, sigma_reduce, specialize_q1, wreath_eval
from .laurent import ONE

PROBE_BUDGET = 2000
MAX_SAMPLES = 10


@dataclass
class ProbeReport:
    g: int
    n: int
    max_len: int
    budget: int
    total: int = 0
    reduced: int = 0
    failed: int = 0
    collisions: int = 0
    q1_mismatches: int = 0
    budget_exhausted: int = 0
    basis_words: int = 0  # distinct Sigma words met in the results
    samples: list = field(default_factory=list)

    @property
    def success_rate(self) -> float:
        return self.reduced / self.total if self.total else 1.0

    def to_json(self) -> dict:
        out = asdict(self)
        out["success_rate"] = round(self.success_rate, 6)
        return out


def alphabet(g: int, n: int) -> list[tuple[int, int, int]]:
    loops = [(k, g + 1, e) for k in range(1, g + 1) for e in (1, -1)]
    return loops + [(0, i, 1) for i in range(g + 1, g + n)]


def words(g: int, n: int, max_len: int):
    """Freely reduced words in order of length."""
    letters = alphabet(g, n)
    layer: list[MixedWord] = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1] == (x[0], x[1], -x[2]):
                    continue
                nxt.append(w + (x,))
        yield from nxt
        layer = nxt


def _text(w: MixedWord, g: int) -> str:
    parts = []
    for i, j, e in w:
        name = f"s{j}" if i == 0 else f"t{i}"
        parts.append(name if e == 1 else name + "^-1")
    return " ".join(parts) or "1"


def conjecture_probe(g: int, n: int, max_len: int, budget: int = PROBE_BUDGET, seed: int = 0) -> ProbeReport:
    """Run the probe; ``seed`` only picks which failures are kept as samples."""
    rep = ProbeReport(g, n, max_len, budget)
    failures: list[dict] = []
    seen: set = set()
    for w in words(g, n, max_len):
        rep.total += 1
        expr = [(ONE, w)]
        results = [sigma_reduce(expr, g, n, budget=budget, strategy=s) for s in ("right", "left")]
        good = [r for r in results if isinstance(r, HgnElement)]
        if not good:
            rep.failed += 1
            rep.budget_exhausted += 1
            stuck = results[0]
            assert isinstance(stuck, FailureReport)
            failures.append({"word": _text(w, g), "pending": len(stuck.stuck), "steps": stuck.steps})
            continue
        rep.reduced += 1
        seen.update(good[0].terms)
        target = wreath_eval(expr, g, n)
        if any(specialize_q1(r) != target for r in good):
            rep.q1_mismatches += 1
        if len(good) == 2 and good[0] != good[1]:
            rep.collisions += 1
            rep.samples.append({"word": _text(w, g), "kind": "collision", "right": str(good[0]), "left": str(good[1])})
    rep.basis_words = len(seen)
    rng = random.Random(seed)
    keep = failures if len(failures) <= MAX_SAMPLES else rng.sample(failures, MAX_SAMPLES)
    rep.samples.extend({"kind": "budget", **f} for f in keep)
    return rep
