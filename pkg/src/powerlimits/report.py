"""Build report documents and render them as tables, JSON or CSV.

Every command first builds a plain document (nested dicts/lists of
strings) and the three renderers only format it, so all output modes carry
the same numbers. Rationals travel as ``{"num": "3", "den": "8"}`` and all
integers as decimal strings.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from . import __version__
from .asymptotics import LimitReport, SubsequentialLimits, SurjectivityReport
from .oracle.census import CensusCounts


def frac_json(x: Fraction) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def frac_from_json(obj) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def frac_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_decimal(x: Fraction, digits: int) -> str:
    """Round half-to-even to ``digits`` places, exactly."""
    x = Fraction(x)
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


# -- document builders -----------------------------------------------------------

def limit_doc(report: LimitReport) -> dict:
    doc = {
        "command": "limit",
        "version": __version__,
        "family": report.family.display(),
        "rank": str(report.family.rank),
        "M": str(report.M),
    }
    if report.q is not None:
        doc["q"] = str(report.q)
    else:
        doc["residue"] = str(report.residue)
    doc["value"] = frac_json(report.value)
    doc["terms"] = [
        {
            "torus": t.label,
            "weyl_order": str(t.weyl_order),
            "gcds": [str(g) for g in t.gcds],
            "term": frac_json(t.value),
        }
        for t in report.terms
    ]
    return doc


def limits_all_doc(limits: SubsequentialLimits) -> dict:
    return {
        "command": "limits-all",
        "version": __version__,
        "family": limits.family.display(),
        "M": str(limits.M),
        "entries": [
            {"condition": e.condition, "value": frac_json(e.value)} for e in limits.entries
        ],
        "distinct_values": [frac_json(v) for v in limits.distinct_values],
        "distinct_count": str(len(limits.distinct_values)),
        "nu": str(limits.nu),
        "collisions": [list(pair) for pair in limits.collisions],
    }


CENSUS_COUNT_FIELDS = (
    "group_order",
    "power_image",
    "power_rs",
    "power_ss",
    "power_rg",
    "total_rs",
    "total_ss",
    "total_rg",
)


def census_doc(counts: CensusCounts, limit: Fraction) -> dict:
    props = counts.proportions()
    return {
        "command": "census",
        "version": __version__,
        "family": counts.family,
        "n": str(counts.n),
        "q": str(counts.q),
        "M": str(counts.M),
        "counts": {name: str(getattr(counts, name)) for name in CENSUS_COUNT_FIELDS},
        "proportions": {name: frac_json(v) for name, v in props.items()},
        "limit": frac_json(limit),
        "deviations": {name: frac_json(v - limit) for name, v in props.items()},
    }


def surjective_doc(rep: SurjectivityReport) -> dict:
    return {
        "command": "surjective",
        "version": __version__,
        "n": str(rep.n),
        "q": str(rep.q),
        "M": str(rep.M),
        "surjective": rep.surjective,
        "gcd_M_q": str(rep.gcd_M_q),
        "order_q_mod_M": None if rep.order_q_mod_M is None else str(rep.order_q_mod_M),
        "order_criterion": rep.order_criterion,
        "gcd_M_group_order": str(rep.gcd_M_group_order),
    }


def abelian_doc(factors, M: int, formula: Fraction, counted: Fraction | None) -> dict:
    return {
        "command": "abelian",
        "version": __version__,
        "factors": [str(d) for d in factors],
        "M": str(M),
        "formula": frac_json(formula),
        "census": None if counted is None else frac_json(counted),
        "agree": None if counted is None else formula == counted,
    }


# -- renderers ---------------------------------------------------------------------

def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _dec(obj, decimals):
    if decimals is None:
        return ""
    return format_decimal(frac_from_json(obj), decimals)


def csv_rows(doc: dict, decimals: int | None = None) -> tuple[list[str], list[list[str]]]:
    cmd = doc["command"]
    if cmd == "limit":
        where = doc.get("q", doc.get("residue"))
        header = ["family", "M", "q" if "q" in doc else "residue", "torus", "weyl_order", "gcds", "term", "total"]
        rows = [
            [doc["family"], doc["M"], where, t["torus"], t["weyl_order"], " ".join(t["gcds"]),
             frac_text(frac_from_json(t["term"])), frac_text(frac_from_json(doc["value"]))]
            for t in doc["terms"]
        ]
    elif cmd == "limits-all":
        header = ["family", "M", "condition", "value"]
        rows = [[doc["family"], doc["M"], e["condition"], frac_text(frac_from_json(e["value"]))]
                for e in doc["entries"]]
    elif cmd == "census":
        header = ["family", "n", "q", "M", *CENSUS_COUNT_FIELDS, "limit"]
        rows = [[doc["family"], doc["n"], doc["q"], doc["M"],
                 *(doc["counts"][k] for k in CENSUS_COUNT_FIELDS),
                 frac_text(frac_from_json(doc["limit"]))]]
    elif cmd == "surjective":
        header = ["n", "q", "M", "surjective", "gcd_M_q", "order_q_mod_M", "order_criterion", "gcd_M_group_order"]
        rows = [[doc["n"], doc["q"], doc["M"], str(doc["surjective"]).lower(), doc["gcd_M_q"],
                 doc["order_q_mod_M"] or "", str(doc["order_criterion"]).lower(), doc["gcd_M_group_order"]]]
    elif cmd == "abelian":
        header = ["factors", "M", "formula", "census"]
        rows = [[" ".join(doc["factors"]), doc["M"], frac_text(frac_from_json(doc["formula"])),
                 "" if doc["census"] is None else frac_text(frac_from_json(doc["census"]))]]
    elif cmd == "verify":
        header = ["quantity", "proportion", "limit", "scaled_deviation", "ok"]
        rows = [[c["quantity"], frac_text(frac_from_json(c["proportion"])),
                 frac_text(frac_from_json(doc["limit"])), frac_text(frac_from_json(c["scaled_deviation"])),
                 str(c["ok"]).lower()] for c in doc["checks"]]
    else:
        raise ValueError(f"no CSV layout for {cmd!r}")
    if decimals is not None and cmd in ("limit", "limits-all"):
        header.append(f"decimal_{decimals}dp_rounded")
        values = [t["term"] for t in doc["terms"]] if cmd == "limit" else [e["value"] for e in doc["entries"]]
        for row, v in zip(rows, values):
            row.append(_dec(v, decimals))
    return header, rows


def render_csv(doc: dict, decimals: int | None = None) -> str:
    header, rows = csv_rows(doc, decimals)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_table(doc: dict, decimals: int | None = None) -> str:
    cmd = doc["command"]
    out = []
    if cmd == "limit":
        where = f"q={doc['q']}" if "q" in doc else f"q = {doc['residue']} mod {doc['M']}"
        value = frac_from_json(doc["value"])
        out.append(f"{doc['family']}, M={doc['M']}, {where}")
        out.append(f"limit: {frac_text(value)}")
        if decimals is not None:
            out.append(f"decimal (rounded to {decimals} places): {format_decimal(value, decimals)}")
        out.append("")
        header = ["torus", "|W_T|", "gcd factors", "term"]
        rows = [[t["torus"], t["weyl_order"], " ".join(t["gcds"]), frac_text(frac_from_json(t["term"]))]
                for t in doc["terms"]]
        out.append(_table(header, rows))
    elif cmd == "limits-all":
        out.append(f"{doc['family']}, M={doc['M']}")
        header = ["condition", "value"] + ([f"rounded ({decimals} dp)"] if decimals is not None else [])
        rows = [[e["condition"], frac_text(frac_from_json(e["value"]))]
                + ([_dec(e["value"], decimals)] if decimals is not None else [])
                for e in doc["entries"]]
        out.append(_table(header, rows))
        values = ", ".join(frac_text(frac_from_json(v)) for v in doc["distinct_values"])
        out.append("")
        out.append(f"distinct values ({doc['distinct_count']}): {values}")
        for a, b in doc["collisions"]:
            out.append(f"collision: {a} and {b} give the same value")
    elif cmd == "census":
        out.append(f"{doc['family']}({doc['n']},{doc['q']}), M={doc['M']}")
        out.append(_table(["count", "value"], [[k, v] for k, v in doc["counts"].items()]))
        out.append("")
        limit = frac_from_json(doc["limit"])
        rows = []
        for name, p in doc["proportions"].items():
            row = [name, frac_text(frac_from_json(p)), frac_text(frac_from_json(doc["deviations"][name]))]
            if decimals is not None:
                row.append(format_decimal(frac_from_json(p), decimals))
            rows.append(row)
        header = ["proportion", "exact", "minus limit"] + ([f"rounded ({decimals} dp)"] if decimals is not None else [])
        out.append(_table(header, rows))
        out.append(f"limit at q={doc['q']}: {frac_text(limit)}")
    elif cmd == "surjective":
        verdict = "surjective" if doc["surjective"] else "not surjective"
        out.append(f"x -> x^{doc['M']} on GL({doc['n']},{doc['q']}): {verdict}")
        order = doc["order_q_mod_M"] if doc["order_q_mod_M"] is not None else "undefined (M | q)"
        out.append(f"gcd(M, q) = {doc['gcd_M_q']}")
        out.append(f"ord(q mod M) = {order}, n = {doc['n']}")
        out.append(f"(M, q) = 1 and ord(q mod M) > n: {'yes' if doc['order_criterion'] else 'no'}")
        out.append(f"gcd(M, |GL(n,q)|) = {doc['gcd_M_group_order']}")
    elif cmd == "abelian":
        out.append(f"C_{' x C_'.join(doc['factors'])}, M={doc['M']}")
        out.append(f"formula: {frac_text(frac_from_json(doc['formula']))}")
        if doc["census"] is not None:
            out.append(f"census:  {frac_text(frac_from_json(doc['census']))}")
            out.append("agree" if doc["agree"] else "DISAGREE")
    elif cmd == "verify":
        out.append(f"{doc['family']}({doc['n']},{doc['q']}), M={doc['M']}, bound {doc['bound']}/q")
        header = ["quantity", "proportion", "q*|deviation|", "ok"]
        rows = [[c["quantity"], frac_text(frac_from_json(c["proportion"])),
                 frac_text(frac_from_json(c["scaled_deviation"])), "yes" if c["ok"] else "NO"]
                for c in doc["checks"]]
        out.append(_table(header, rows))
        out.append(f"limit at q={doc['q']}: {frac_text(frac_from_json(doc['limit']))}")
        out.append("PASS" if doc["passed"] else "FAIL")
    else:
        raise ValueError(f"no table layout for {cmd!r}")
    return "\n".join(out) + "\n"


def render(doc: dict, fmt: str, decimals: int | None = None) -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "csv":
        return render_csv(doc, decimals)
    return render_table(doc, decimals)
