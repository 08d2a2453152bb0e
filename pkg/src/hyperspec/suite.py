"""Per-algebra traceability suite: one named check per verified statement,
with a fixed list so every report has the same shape.

MUST-PASS checks decide the exit code; the preimage-primality check is
report-only by design: the engine records the computed verdict per pair and
nothing downstream assumes it.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from pathlib import Path

from . import specops as ops
from .hopfkernel import HopfData, descent_ideal, parse_builtin, verify_hopf
from .linalg import npmod

TRACE_CHECKS = (
    "hopf_axioms",
    "identity_law",
    "inverse_law",
    "reversibility",
    "weak_associativity",
    "nonempty",
    "classical_comparison",
    "descent_compatibility",
    "kernel_containment",
    "preimage_primality",
)

MUST_PASS = tuple(c for c in TRACE_CHECKS if c != "preimage_primality")

DEFAULT_SUITE = ("mu:3:2", "mu:5:4", "addetale:3:1", "addetale:3:2")


def load_algebra(spec: str) -> HopfData:
    """A builtin descriptor ("mu:p:n", "addetale:p:k") or a JSON file path."""
    if ":" in spec and not os.path.exists(spec):
        return parse_builtin(spec)
    path = Path(spec)
    if not path.exists():
        raise ValueError(f"algebra spec {spec!r} is neither a builtin nor a file")
    return HopfData.from_json(json.loads(path.read_text()))


def _status(ok: bool, report_only: bool = False) -> str:
    if report_only:
        return "report-only"
    return "pass" if ok else "fail"


def _kernel_containment(h: HopfData) -> tuple[bool, dict]:
    """The forced-zero ideal of every pair is an absorbing ideal and is
    contained in the kernel of every member of f*g."""
    p = h.algebra.field.p
    bad = None
    pairs = 0
    for f, g in product(ops.kpoints(h), repeat=2):
        pairs += 1
        res = ops.hyperop(h, f, g)
        ideal = res.forced_zero
        if not ideal.is_absorbing():
            bad = {"pair": [f.label, g.label], "reason": "forced-zero set is not an ideal"}
            break
        for m in res.members:
            if ideal.dim and npmod(m.point.resmap.mat @ ideal.basis.T, p).any():
                bad = {"pair": [f.label, g.label], "member": m.label}
                break
        if bad:
            break
    return bad is None, bad or {"pairs": pairs}


def _preimage_primality(h: HopfData) -> dict:
    entries = []
    for f, g in product(ops.kpoints(h), repeat=2):
        ideal, verdict = ops.delta_preimage_ideal(h, f, g)
        gen = ideal.generator_poly()
        entries.append(
            {
                "f": f.label,
                "g": g.label,
                "ideal": f"({gen})" if gen is not None else ideal.to_json(),
                "prime": bool(verdict),
            }
        )
    return {"pairs": entries}


def run_algebra_suite(h: HopfData, checks=None, timings: bool = False) -> dict:
    """TraceReport for one algebra: every identifier in the fixed list appears
    exactly once (selected-out checks are reported as skipped)."""
    selected = set(checks or TRACE_CHECKS)
    out: dict = {"algebra": h.name or "unnamed", "checks": {}}
    must_ok = True
    for name in TRACE_CHECKS:
        if name not in selected:
            out["checks"][name] = {"status": "skipped"}
            continue
        t0 = time.monotonic()
        detail: dict = {}
        report_only = name == "preimage_primality"
        if name == "hopf_axioms":
            rep = verify_hopf(h)
            ok = rep.ok
            detail = {"failures": rep.failures()} if not ok else {}
        elif name == "identity_law":
            rep = ops.identity_law_check(h)
            ok = rep.ok
            detail = rep.to_json() if not ok else {"identity": ops.identity_point(h).label}
        elif name == "inverse_law":
            rep = ops.inverse_law_check(h)
            ok = rep.ok
            detail = rep.to_json() if not ok else {}
        elif name == "reversibility":
            rep = ops.reversibility_check(h)
            ok = rep.ok
            detail = rep.to_json() if not ok else {}
        elif name == "weak_associativity":
            rep = ops.weak_assoc_all(h)
            ok = rep.ok
            detail = {"fully_associative": rep.checks["fully_associative"].passed}
            if not ok:
                detail.update(rep.to_json())
        elif name == "nonempty":
            rep = ops.nonempty_check(h)
            ok = rep.ok
            detail = rep.to_json() if not ok else {}
        elif name == "classical_comparison":
            rep = ops.classical_comparison(h, h.algebra.field.p)
            ok = rep.ok
            detail = {"points": list(rep.checks["classical_point_count"].witness)}
            if not ok:
                detail.update(rep.to_json())
        elif name == "descent_compatibility":
            ideal = descent_ideal(h)
            gen = ideal.generator_poly()
            rep = ops.descend_and_compare(h, ideal)
            ok = rep.ok
            detail = {"ideal": f"({gen})" if gen is not None else "0"}
            if not ok:
                detail.update(rep.to_json())
        elif name == "kernel_containment":
            ok, detail = _kernel_containment(h)
        elif name == "preimage_primality":
            ok = True
            detail = _preimage_primality(h)
        entry: dict = {"status": _status(ok, report_only)}
        if detail:
            entry["detail"] = detail
        if timings:
            entry["runtime_ms"] = round(1000 * (time.monotonic() - t0), 1)
        out["checks"][name] = entry
        if not report_only and not ok:
            must_ok = False
    out["ok"] = must_ok
    return out


def run_suite(specs, checks=None, timings: bool = False) -> dict:
    """Run the traceability suite over several algebras; thread count is
    capped by HYPERSPEC_THREADS (default 1). Reports merge in input order."""
    specs = list(specs)
    algebras = [load_algebra(s) for s in specs]
    threads = max(1, int(os.environ.get("HYPERSPEC_THREADS", "1")))
    if threads > 1 and len(algebras) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda h: run_algebra_suite(h, checks, timings), algebras))
    else:
        reports = [run_algebra_suite(h, checks, timings) for h in algebras]
    return {"suite": reports, "ok": all(r["ok"] for r in reports)}
