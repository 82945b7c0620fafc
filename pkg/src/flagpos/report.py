"""Machine (JSON lines) and human renderings of verdicts and root listings."""

from __future__ import annotations

import json

from .flagbundle import SIGN_CONVENTION, HomogeneousBundle, Verdict
from .rootsys import RootSystem, root_in_weight_coords
from .specio import format_parabolic, format_weights, serialize
from .weights import WeightMultiset


def _ms_list(ms: WeightMultiset | None):
    if ms is None:
        return None
    return [{"weight": list(w.coords), "mult": m} for w, m in ms.entries]


def verdict_record(E: HomogeneousBundle, v: Verdict) -> dict:
    fv = v.first_violation
    return {
        "label": E.label,
        "spec": serialize(E),
        "type": str(E.root_system.simple_type),
        "parabolic": sorted(E.parabolic.I),
        "bundle_rank": E.rank,
        "status": v.status.value,
        "ample": v.ample,
        "globally_generated": v.globally_generated,
        "fiber_consistent": v.fiber_consistent,
        "splitting": {str(j): list(st.degrees) for j, st in sorted(v.splitting.items())},
        "fiber_degrees": {str(j): list(st.degrees) for j, st in sorted(v.fiber_degrees.items())},
        "lambda_max": _ms_list(v.maximal),
        "lambda_max_root_order": _ms_list(v.maximal_root_order),
        "orders_agree": v.orders_agree,
        "fiber_violations": [
            {"j": x.j, "weight": list(x.weight.coords), "degree": x.degree}
            for x in v.fiber_violations
        ],
        "first_violation": None
        if fv is None
        else {"kind": fv.kind, "j": fv.j, "weight": list(fv.weight.coords), "degree": fv.degree},
        "convention": SIGN_CONVENTION,
    }


def render_machine(E: HomogeneousBundle, v: Verdict) -> str:
    return json.dumps(verdict_record(E, v), sort_keys=True, ensure_ascii=True, separators=(",", ":"))


def _weight_name(coords) -> str:
    terms = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}λ{i}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


def _mult_names(ms: WeightMultiset) -> str:
    return ", ".join(_weight_name(w.coords) + (f" (x{m})" if m > 1 else "") for w, m in ms.entries)


def render_human(E: HomogeneousBundle, v: Verdict) -> str:
    rows = [
        ("status", v.status.value),
        ("globally generated", str(v.globally_generated).lower()),
        ("fibres trivial", str(v.fiber_consistent).lower()),
    ]
    rows += [(f"E|C(α{j})", str(st)) for j, st in sorted(v.splitting.items())]
    rows += [(f"fibre C(α{j})", str(st)) for j, st in sorted(v.fiber_degrees.items())]
    rows.append(("Λmax", _mult_names(v.maximal)))
    if v.maximal_root_order is not None:
        rows.append(("Λmax (root order)", _mult_names(v.maximal_root_order)))
    fv = v.first_violation
    if fv is not None:
        where = "test curve" if fv.kind == "test_curve" else "contracted curve"
        rows.append(("violation", f"{_weight_name(fv.weight.coords)} has degree {fv.degree} "
                                  f"on {where} C(α{fv.j})"))
    rows.append(("convention", SIGN_CONVENTION))
    head = f"{E.label}: " if E.label else ""
    lines = [f"{head}{E.root_system.simple_type}, I={format_parabolic(E.parabolic.I)}, "
             f"weights {format_weights(E.weights)}"]
    lines += [f"  {k:<20}{val}" for k, val in rows]
    return "\n".join(lines)


def roots_records(rs: RootSystem) -> list[dict]:
    return [
        {
            "simple": list(r.simple_coords),
            "coroot": list(r.coroot_coords),
            "weight": list(root_in_weight_coords(r, rs).coords),
            "height": r.height,
        }
        for r in rs.positive_roots
    ]


def _tup(v) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def render_roots(rs: RootSystem, fmt: str = "human") -> str:
    recs = roots_records(rs)
    if fmt == "machine":
        return json.dumps(
            {"type": str(rs.simple_type), "count": len(recs), "positive_roots": recs},
            sort_keys=True,
            separators=(",", ":"),
        )
    lines = [f"{rs.simple_type}: {len(recs)} positive roots",
             f"{'ht':>3}  {'simple roots':<24}{'coroot':<24}fundamental weights"]
    for r in recs:
        lines.append(f"{r['height']:>3}  {_tup(r['simple']):<24}{_tup(r['coroot']):<24}"
                     f"{_tup(r['weight'])}")
    return "\n".join(lines)
