"""One-shot verification suite for the reference-instance claims.

Each claim recomputes a published or derived quantity from scratch and
compares it against the frozen expectation.  Results print one line per
claim::

    CLAIM <id> <PASS|FAIL> observed=<v> expected=<v> secs=<t>

The value strings never contain spaces, so the lines split cleanly and
parse back into :class:`ClaimResult` objects.  Apart from the timing
field the output is byte-stable across runs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .digraph import Digraph, is_eulerian, second_out_neighborhood
from .enumeration import (
    canonical_code,
    search_counterexamples,
    verify_nu_eq_tau_upto,
)
from .fas import (
    feedback_arc_set_size,
    min_fas_induces_path,
    min_fas_path,
    mindeg_lower_bound,
)
from .flow import max_cycles_through, verify_universal_vertex_cycles
from .instances import (
    builtin,
    label_of,
    paper_T_backward_arcs,
    random_oriented,
    random_tournament,
    triangle_family_T,
    vertex_of,
)
from .packing import (
    Budget,
    count_triangles_through,
    is_valid_packing,
    max_cycle_packing,
    max_triangles_through,
)

CLAIM_IDS: tuple[str, ...] = (
    "TAU_T",
    "NU_T",
    "TAU_T7",
    "NU_T7",
    "TAU_TP",
    "NU_TP",
    "NU_EQ_TAU_LE6",
    "EULER_T11",
    "TRI_K_T11",
    "FLOW_K_T11",
    "UNIV_CYCLES_RANDOM",
    "MINDEG_TAU_RANDOM",
    "MINDEG_TRI_RANDOM",
    "SECOND_NBHD_LE8",
    "PACK11_T",
    "FAS_PATH_T",
)

_STATUSES = ("PASS", "FAIL", "SKIPPED")


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    status: str  # PASS / FAIL / SKIPPED
    observed: str
    expected: str
    elapsed: float

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        for field in (self.observed, self.expected):
            if not field or any(c.isspace() for c in field):
                raise ValueError(f"value string must be space-free: {field!r}")

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def format_claim(r: ClaimResult) -> str:
    return (
        f"CLAIM {r.claim_id} {r.status} "
        f"observed={r.observed} expected={r.expected} secs={r.elapsed:.3f}"
    )


def parse_claim(line: str) -> ClaimResult:
    parts = line.split()
    if len(parts) != 6 or parts[0] != "CLAIM":
        raise ValueError(f"not a claim line: {line!r}")
    fields = {}
    for part in parts[3:]:
        key, _, value = part.partition("=")
        fields[key] = value
    if set(fields) != {"observed", "expected", "secs"}:
        raise ValueError(f"not a claim line: {line!r}")
    return ClaimResult(
        claim_id=parts[1],
        status=parts[2],
        observed=fields["observed"],
        expected=fields["expected"],
        elapsed=float(fields["secs"]),
    )


# -- individual claims ------------------------------------------------
#
# Each runner returns (passed, observed, expected); the caller adds
# status and timing.  Value strings must stay space-free.

_Runner = Callable[[Budget], tuple[bool, str, str]]


def _tau_claim(name: str, expected: int) -> _Runner:
    def run(budget: Budget) -> tuple[bool, str, str]:
        tau = feedback_arc_set_size(builtin(name))
        return tau == expected, str(tau), str(expected)

    return run


def _nu_claim(name: str, expected: int) -> _Runner:
    def run(budget: Budget) -> tuple[bool, str, str]:
        rep = max_cycle_packing(builtin(name), budget)
        if not rep.optimal:
            return False, f"atleast:{rep.value};budget-exhausted", str(expected)
        return rep.value == expected, str(rep.value), str(expected)

    return run


def _sweep_le6(budget: Budget) -> tuple[bool, str, str]:
    rep = verify_nu_eq_tau_upto(6, budget)
    counts = ",".join(str(c) for c in rep.class_counts)
    observed = (
        f"counts:{counts};identity:{'ok' if rep.identity_ok else 'bad'};"
        f"violations:{len(rep.violations)}"
    )
    return rep.ok, observed, "identity:ok;violations:0"


def _euler_t11(budget: Budget) -> tuple[bool, str, str]:
    t = builtin("paper-T11")
    outs = {t.out_degree(v) for v in range(t.n)}
    eul = is_eulerian(t)
    observed = f"eulerian:{str(eul).lower()};outdeg:{','.join(map(str, sorted(outs)))}"
    return eul and outs == {5}, observed, "eulerian:true;outdeg:5"


def _tri_k_t11(budget: Budget) -> tuple[bool, str, str]:
    t = builtin("paper-T11")
    k = vertex_of(t, "k")
    value, _ = max_triangles_through(t, k)
    return value == 4, str(value), "4"


def _flow_k_t11(budget: Budget) -> tuple[bool, str, str]:
    t = builtin("paper-T11")
    k = vertex_of(t, "k")
    value, cycles = max_cycles_through(t, k)
    ok = value == 5 and len(cycles) == 5
    return ok, str(value), "5"


def _univ_cycles_random(budget: Budget) -> tuple[bool, str, str]:
    rng = random.Random(101)
    checked = 0
    violations = 0
    for _ in range(500):
        t = random_tournament(rng.randrange(3, 13), rng.randrange(1 << 32))
        rep = verify_universal_vertex_cycles(t)
        checked += len(rep.checked)
        violations += len(rep.violations)
    for _ in range(500):
        g = random_oriented(rng.randrange(3, 13), 0.5, rng.randrange(1 << 32))
        rep = verify_universal_vertex_cycles(g)
        checked += len(rep.checked)
        violations += len(rep.violations)
    observed = f"checked:{checked};violations:{violations}"
    return violations == 0, observed, "violations:0"


def _mindeg_tau_random(budget: Budget) -> tuple[bool, str, str]:
    rng = random.Random(202)
    violations = 0
    for _ in range(300):
        g = random_oriented(rng.randrange(3, 11), 0.5, rng.randrange(1 << 32))
        if feedback_arc_set_size(g) < mindeg_lower_bound(g):
            violations += 1
    return violations == 0, f"checked:300;violations:{violations}", "violations:0"


def _mindeg_tri_random(budget: Budget) -> tuple[bool, str, str]:
    # every minimum-out-degree vertex lies on at least min-out-degree
    # many triangles (counted, not packed)
    rng = random.Random(303)
    violations = 0
    for _ in range(300):
        t = random_tournament(rng.randrange(3, 13), rng.randrange(1 << 32))
        k = t.min_out_degree()
        for v in range(t.n):
            if t.out_degree(v) == k and count_triangles_through(t, v) < k:
                violations += 1
    return violations == 0, f"checked:300;violations:{violations}", "violations:0"


def _second_nbhd_le8(budget: Budget) -> tuple[bool, str, str]:
    # some vertex with |N++| >= |N+| in every tournament: all classes of
    # order <= 7, then 500 random order-8 instances
    def has_witness(t: Digraph) -> bool:
        return any(
            len(second_out_neighborhood(t, v)) >= t.out_degree(v)
            for v in range(t.n)
        )

    checked = 0
    violations = 0
    from .enumeration import enumerate_tournaments

    for n in range(1, 8):
        for t in enumerate_tournaments(n):
            checked += 1
            if not has_witness(t):
                violations += 1
    rng = random.Random(404)
    for _ in range(500):
        if not has_witness(random_tournament(8, rng.randrange(1 << 32))):
            violations += 1
        checked += 1
    return violations == 0, f"checked:{checked};violations:{violations}", "violations:0"


def _pack11_t(budget: Budget) -> tuple[bool, str, str]:
    t = builtin("paper-T")
    cycles = triangle_family_T()
    valid = is_valid_packing(t, cycles)
    used = {arc for c in cycles for arc in zip(c, c[1:] + (c[0],))}
    # which of the 12 ordering-backward arcs the family leaves uncovered
    missing = sorted(
        label_of(u) + label_of(v)
        for u, v in paper_T_backward_arcs()
        if (u, v) not in used
    )
    observed = (
        f"cycles:{len(cycles)};valid:{str(valid).lower()};"
        f"missing:{','.join(missing) if missing else 'none'}"
    )
    ok = valid and len(cycles) == 11 and missing == ["me"]
    return ok, observed, "cycles:11;valid:true;missing:me"


def _fas_path_t(budget: Budget) -> tuple[bool, str, str]:
    t = builtin("paper-T")
    arcs = paper_T_backward_arcs()
    ok = min_fas_induces_path(t, arcs)
    path = min_fas_path(t, arcs)
    word = "".join(label_of(v) for v in path) if path else "none"
    observed = f"{'ok' if ok else 'bad'};path:{word}"
    return ok and word == "mkigeca", observed, "ok;path:mkigeca"


_RUNNERS: dict[str, _Runner] = {
    "TAU_T": _tau_claim("paper-T", 12),
    "NU_T": _nu_claim("paper-T", 11),
    "TAU_T7": _tau_claim("paper-T7", 5),
    "NU_T7": _nu_claim("paper-T7", 4),
    "TAU_TP": _tau_claim("paper-Tprime", 15),
    "NU_TP": _nu_claim("paper-Tprime", 14),
    "NU_EQ_TAU_LE6": _sweep_le6,
    "EULER_T11": _euler_t11,
    "TRI_K_T11": _tri_k_t11,
    "FLOW_K_T11": _flow_k_t11,
    "UNIV_CYCLES_RANDOM": _univ_cycles_random,
    "MINDEG_TAU_RANDOM": _mindeg_tau_random,
    "MINDEG_TRI_RANDOM": _mindeg_tri_random,
    "SECOND_NBHD_LE8": _second_nbhd_le8,
    "PACK11_T": _pack11_t,
    "FAS_PATH_T": _fas_path_t,
}

assert tuple(_RUNNERS) == CLAIM_IDS


def verify_paper(
    claim_ids: Sequence[str] | None = None, budget: Budget | None = None
) -> list[ClaimResult]:
    """Run the claim suite (or a subset) in fixed order."""
    if claim_ids is None:
        selected = CLAIM_IDS
    else:
        unknown = [c for c in claim_ids if c not in _RUNNERS]
        if unknown:
            raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
        selected = tuple(c for c in CLAIM_IDS if c in set(claim_ids))
    budget = budget if budget is not None else Budget()
    results = []
    for cid in selected:
        start = time.perf_counter()
        passed, observed, expected = _RUNNERS[cid](budget)
        elapsed = time.perf_counter() - start
        results.append(
            ClaimResult(
                claim_id=cid,
                status="PASS" if passed else "FAIL",
                observed=observed,
                expected=expected,
                elapsed=elapsed,
            )
        )
    return results


def format_report(results: Iterable[ClaimResult]) -> str:
    results = list(results)
    lines = [format_claim(r) for r in results]
    n_pass = sum(r.status == "PASS" for r in results)
    n_fail = sum(r.status == "FAIL" for r in results)
    total = sum(r.elapsed for r in results)
    summary = f"{len(results)} claims: {n_pass} passed, {n_fail} failed"
    if any(r.status == "SKIPPED" for r in results):
        summary += f", {len(results) - n_pass - n_fail} skipped"
    summary += f" ({total:.1f}s)"
    return "\n".join(lines + [summary])
