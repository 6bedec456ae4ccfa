"""JSON-ready report builders and their plain-text renderings."""

from __future__ import annotations

import json

from . import __version__
from .classify import Case, ClassificationTable, verify_alpha, verify_diagram
from .dress import DressCertificate, marks_matrix, verify_certificate
from .families import FamilyReport, sylow_centralizer_condition, is_p_hyperelementary, cyclic_quotient_check
from .generation import ExponentReport, GenerationDatum, VanishingReport
from .groups import FiniteGroup, Subgroup, SubgroupClass

SCHEMA_VERSION = "1"

BASIS_GENERATION = ("NK_n(RG)_(p) is generated by the images of V_k ∘ phi(P, g) over "
                    "p-subgroups P, g in C_G^perp(P) and k in I(g)")
BASIS_COVER = "NK_n(RG)_(p) is generated by induction from p-elementary subgroups"
BASIS_VANISHING = ("NK_n(ZG)_(p) = 0 for n <= 1 whenever p^2 does not divide |G|; "
                   "hence NK_n(ZG) = 0 for n <= 1 if |G| is square-free")
BASIS_REFINED = ("derived: exponent bound combining p-group generation with the "
                 "vanishing of p-localizations for p^2 not dividing |G|")
SYLOW_CONCLUSION = ("the induction map lambda_n: NK_n(RG_p)^(G/G_p) -> NK_n(RG)_(p) "
                    "is an isomorphism (R regular)")


def envelope(command: str, **body) -> dict:
    return {"schemaVersion": SCHEMA_VERSION, "command": command,
            "generator": f"hyperinduct {__version__}", **body}


def subgroup_json(H: Subgroup) -> dict:
    G = H.parent
    return {"order": H.order, "members": list(H.members),
            "generators": [G.format(g) for g in H.generators]}


def class_json(c: SubgroupClass) -> dict:
    return {**subgroup_json(c.representative), "classSize": c.size}


def group_json(G: FiniteGroup) -> dict:
    return {"label": G.label, "order": G.order}


def families_report(G: FiniteGroup, rep: FamilyReport) -> dict:
    p = rep.prime
    body = {
        "group": group_json(G),
        "prime": p,
        "pSubgroups": [class_json(c) for c in rep.p_subgroup_classes],
        "pElementary": [class_json(c) for c in rep.p_elementary_classes],
        "pHyperelementary": [class_json(c) for c in rep.p_hyperelementary_classes],
    }
    if is_p_hyperelementary(G, p):
        r = cyclic_quotient_check(G, p)
        body["cyclicQuotientTest"] = {"hypothesisHolds": r.hypothesis_holds,
                                      "conclusionHolds": r.conclusion_holds}
    if G.order % p == 0:
        holds = sylow_centralizer_condition(G, p)
        body["normalSylowSelfCentralizing"] = {
            "holds": holds, "conclusion": SYLOW_CONCLUSION if holds else None}
    return envelope("families", **body)


def generation_report(G: FiniteGroup, p: int, data: list[GenerationDatum], deduped: bool) -> dict:
    return envelope("generation", group=group_json(G), prime=p, deduped=deduped,
                    basis=BASIS_GENERATION,
                    data=[{"P": class_json(d.P), "g": G.format(d.g), "gOrder": d.g_order,
                           "allowedPrimes": list(d.allowed_primes), "plainInduction": d.plain,
                           "E": subgroup_json(d.E)} for d in data])


def cover_report(G: FiniteGroup, p: int, classes: list[SubgroupClass]) -> dict:
    return envelope("cover", group=group_json(G), prime=p, basis=BASIS_COVER,
                    classes=[class_json(c) for c in classes])


def classify_report(table: ClassificationTable, window: int) -> tuple[dict, bool]:
    """Report plus a flag telling whether every elementary record verified."""
    rows, ok = [], True
    for rec in table.records:
        row = {"order": rec.H.order, "m": rec.m, "case": rec.case.value,
               "elementary": rec.elementary,
               "goursat": {"A": list(rec.H.record.A.members), "B": list(rec.H.record.B.members),
                           "d1": rec.H.record.d1, "d2": rec.H.record.d2}}
        if rec.case is Case.ELEMENTARY:
            a, d = verify_alpha(rec, window), verify_diagram(rec)
            ok = ok and bool(a) and bool(d)
            row.update({"POrder": rec.P.order, "ell": rec.ell, "k": rec.k,
                        "u": rec.u, "g0": table.G.format(rec.g0),
                        "alphaVerified": bool(a), "diagramVerified": bool(d)})
        rows.append(row)
    rep = envelope("classify", group=group_json(table.G), prime=table.p, M=table.M, N=table.N,
                   window=window, notDeep=len(table.not_deep), records=rows)
    return rep, ok


def dress_report(G: FiniteGroup, cert: DressCertificate) -> dict:
    mm = marks_matrix(G, cert.prime)
    body = cert.as_dict()
    for entry, (cls, _) in zip(body["entries"], cert.coefficients):
        entry.update(class_json(cls))
    return envelope("dress", group=group_json(G), certificate=body,
                    verified=verify_certificate(G, cert),
                    marks={"rows": [list(r.representative.members) for r in mm.rows],
                           "columns": [list(c.representative.members) for c in mm.columns],
                           "entries": [list(e) for e in mm.entries]})


def exponents_report(r: ExponentReport) -> dict:
    return envelope("exponents", **r.as_dict(), refinedBasis=BASIS_REFINED)


def vanishing_json(r: VanishingReport) -> dict:
    return envelope("vanishing", **r.as_dict(), basis=BASIS_VANISHING)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _classes_text(title: str, classes: list[dict]) -> list[str]:
    lines = [f"{title} ({len(classes)} classes):"]
    for c in classes:
        gens = ", ".join(c["generators"]) or "e"
        lines.append(f"  order {c['order']:>3}  x{c['classSize']:<3} <{gens}>")
    return lines


def to_text(doc: dict) -> str:
    cmd = doc["command"]
    lines: list[str] = []
    if "group" in doc:
        g = doc["group"]
        lines.append(f"group {g['label']} (order {g['order']})")
    if cmd == "families":
        lines.append(f"prime {doc['prime']}")
        lines += _classes_text("p-subgroups", doc["pSubgroups"])
        lines += _classes_text("p-elementary", doc["pElementary"])
        lines += _classes_text("p-hyperelementary", doc["pHyperelementary"])
        if "cyclicQuotientTest" in doc:
            t = doc["cyclicQuotientTest"]
            lines.append(f"cyclic q-quotients for all q != p: {t['hypothesisHolds']}; "
                         f"p-elementary: {t['conclusionHolds']}")
        if "normalSylowSelfCentralizing" in doc:
            s = doc["normalSylowSelfCentralizing"]
            lines.append(f"Sylow normal and C_G(P) <= P for all 1 != P <= G_p: {s['holds']}")
            if s["holds"]:
                lines.append(f"  => {s['conclusion']}")
    elif cmd == "generation":
        lines.append(f"prime {doc['prime']}; {len(doc['data'])} data"
                     + (" (deduplicated)" if doc["deduped"] else ""))
        for d in doc["data"]:
            P = d["P"]
            lines.append(f"  P order {P['order']:>3} <{', '.join(P['generators'])}>  "
                         f"g = {d['g']} (|g| = {d['gOrder']}, I(g) primes {d['allowedPrimes']})  "
                         f"E order {d['E']['order']}" + ("  [plain induction]" if d["plainInduction"] else ""))
        lines.append(f"basis: {doc['basis']}")
    elif cmd == "cover":
        lines += _classes_text(f"p-elementary cover, p = {doc['prime']}", doc["classes"])
        lines.append(f"basis: {doc['basis']}")
    elif cmd == "classify":
        lines.append(f"prime {doc['prime']}, M = {doc['M']}, N = {doc['N']}, window = {doc['window']}")
        lines.append(f"{len(doc['records'])} p-hyperelementary H, {doc['notDeep']} with m < M")
        lines.append(f"  {'|H|':>5} {'m':>4} {'case':<10} {'|P|':>4} {'ell':>4} {'k':>3}")
        for r in doc["records"]:
            if r["case"] == "elementary":
                flag = "" if r["alphaVerified"] and r["diagramVerified"] else "  UNVERIFIED"
                lines.append(f"  {r['order']:>5} {r['m']:>4} {r['case']:<10} {r['POrder']:>4} "
                             f"{r['ell']:>4} {r['k']:>3}{flag}")
            else:
                lines.append(f"  {r['order']:>5} {r['m']:>4} {r['case']:<10}")
    elif cmd == "dress":
        cert = doc["certificate"]
        lines.append(f"prime {cert['prime']}; verified: {doc['verified']}")
        for e in cert["entries"]:
            a = str(e["numerator"]) + ("" if e["denominator"] == 1 else f"/{e['denominator']}")
            gens = ", ".join(e["generators"]) or "e"
            lines.append(f"  a_H = {a:>8}  H = <{gens}> (order {e['order']}, x{e['classSize']})")
    elif cmd == "exponents":
        lines.append(f"n = {doc['n']}")
        for q, v in doc["perPrime"].items():
            lines.append(f"  c_{q}({doc['n']}) = {v}")
        lines.append(f"c = {doc['c']}")
        lines.append(f"d = {doc['d']}")
        lines.append(f"refined NK_0 bound = {doc['refinedNK0']} ({doc['refinedBasis']})")
        lines.append(f"vanishing primes: {doc['vanishingPrimes']}")
    elif cmd == "vanishing":
        lines.append(f"|G| = {doc['order']}; square-free: {doc['squarefree']}")
        lines.append(f"zero localizations at: {doc['zeroLocalizations']}")
        lines.append(doc["statement"])
    elif cmd == "verify":
        lines += doc["lines"]
        lines.append("ALL PASSED" if doc["passed"] else "FAILURES PRESENT")
    return "\n".join(lines) + "\n"
