"""Orchestration of the full reduction and deterministic report emission.

The verdict layout mirrors the case split: the five primitive socle types
get open / eliminated_by_computation / eliminated_by_citation verdicts,
the computational sections carry their witnesses and scan bounds, and the
point-imprimitive parameter family is attached as its own section.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from . import atlas, diagonal, imprimitive, product

VERSION = "0.1.0"

# Assumed wherever the odd-part chain is used; smaller lambda is settled by
# cited prior work, not by this tool.
LAMBDA_FLOOR_HYPOTHESIS = (
    "lambda > 100 is assumed in the simple-diagonal elimination; "
    "lambda <= 100 is covered by cited external classifications"
)
BOUNDED_SCAN_HYPOTHESIS = (
    "scan emptiness claims are verified within the configured bounds only"
)

TWISTED_WREATH_CITATION = (
    "the socle would be a point-regular normal subgroup, and a point-regular "
    "normal subgroup of a flag-transitive automorphism group of a 2-design "
    "is solvable (cited), while this socle is a direct product of "
    "non-abelian simple groups"
)


class OnanScottType(Enum):
    AFFINE = "affine"
    ALMOST_SIMPLE = "almost_simple"
    SIMPLE_DIAGONAL = "simple_diagonal"
    PRODUCT = "product"
    TWISTED_WREATH = "twisted_wreath"


class Verdict(Enum):
    OPEN = "open"
    ELIMINATED_BY_COMPUTATION = "eliminated_by_computation"
    ELIMINATED_BY_CITATION = "eliminated_by_citation"


@dataclass(frozen=True)
class ReduceConfig:
    catalog_bound: int = 10_000_000
    out4_n_max: int = 12
    out4_q_max: int = 1024
    v0_min: int = 2
    include_sporadic: bool = True
    sporadic_table: str | None = None
    imprimitive_samples: tuple[int, ...] = (2, 3, 4)

    def as_payload(self) -> dict:
        return {
            "catalog_bound": self.catalog_bound,
            "out4_n_max": self.out4_n_max,
            "out4_q_max": self.out4_q_max,
            "v0_min": self.v0_min,
            "include_sporadic": self.include_sporadic,
            "sporadic_table": self.sporadic_table,
            "imprimitive_samples": list(self.imprimitive_samples),
        }


@dataclass(frozen=True)
class ReductionReport:
    config: ReduceConfig
    verdicts: dict[OnanScottType, Verdict]
    diagonal_result: diagonal.DiagonalScanResult
    out4_result: atlas.Out4ScanResult
    product_triples: tuple[product.ProductTriple, ...]
    m4_reports: tuple[product.M4Report, ...]
    imprimitive_families: tuple[imprimitive.ImprimitiveFamily, ...]
    diagonal_warnings: tuple[str, ...] = ()
    out4_warnings: tuple[str, ...] = ()

    @property
    def product_matches_reference(self) -> bool:
        got = tuple(t.triple for t in self.product_triples)
        return got == product.reference_triples(self.config.v0_min)

    @property
    def agrees_with_reference(self) -> bool:
        return (
            not self.diagonal_result.survivors
            and [atlas.display_name(g) for g in self.out4_result.candidates] == ["L3(4)"]
            and self.out4_result.ok
            and self.product_matches_reference
            and all(not rep.survivors for rep in self.m4_reports)
        )


def run_reduce(config: ReduceConfig = ReduceConfig()) -> ReductionReport:
    diagonal_warnings: list[str] = []
    out4_warnings: list[str] = []

    diag_result = diagonal.diagonal_scan(config.catalog_bound, config.sporadic_table)
    if diag_result.catalog_size == 0:
        diagonal_warnings.append(
            f"catalog bound {config.catalog_bound} admits no simple group at "
            "all: bounds too small for the scan to carry evidence"
        )

    out4_result = atlas.out4_scan(
        config.out4_n_max,
        config.out4_q_max,
        include_sporadic=config.include_sporadic,
        sporadic_table=config.sporadic_table,
    )
    if not out4_result.ok:
        failing = ", ".join(
            f"{check.family.value}/{check.axis}@{check.boundary}"
            for check in out4_result.failing_checks()
        )
        out4_warnings.append(
            f"tail checks failed at: {failing}; the scan bounds are too "
            "small to trust emptiness beyond them"
        )

    triples = tuple(product.enumerate_product_cases(config.v0_min))
    m4_reports = (product.m4_case(5), product.m4_case(6))
    families = tuple(imprimitive.imprimitive_family(lam) for lam in config.imprimitive_samples)

    verdicts = {
        OnanScottType.AFFINE: Verdict.OPEN,
        OnanScottType.ALMOST_SIMPLE: Verdict.OPEN,
        OnanScottType.SIMPLE_DIAGONAL: Verdict.ELIMINATED_BY_COMPUTATION,
        OnanScottType.PRODUCT: Verdict.ELIMINATED_BY_COMPUTATION,
        OnanScottType.TWISTED_WREATH: Verdict.ELIMINATED_BY_CITATION,
    }
    return ReductionReport(
        config=config,
        verdicts=verdicts,
        diagonal_result=diag_result,
        out4_result=out4_result,
        product_triples=triples,
        m4_reports=m4_reports,
        imprimitive_families=families,
        diagonal_warnings=tuple(diagonal_warnings),
        out4_warnings=tuple(out4_warnings),
    )


# -- serialization ----------------------------------------------------------


def _fraction_payload(value) -> str | None:
    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


def _tail_check_payload(check: atlas.TailCheck) -> dict:
    return {
        "family": check.family.value,
        "axis": check.axis,
        "boundary": check.boundary,
        "boundary_ratio": _fraction_payload(check.boundary_ratio),
        "interior_ratio": _fraction_payload(check.interior_ratio),
        "bounded": check.bounded,
        "decreasing": check.decreasing,
        "ok": check.ok,
    }


def _product_triple_payload(triple: product.ProductTriple) -> dict:
    return {
        "v": triple.v,
        "k": triple.k,
        "lambda": triple.lam,
        "witnesses": [
            {
                "m": case.m,
                "a": case.a,
                "v0": case.v0,
                "v0_below_5": case.v0 < 5,
            }
            for case in triple.witnesses
        ],
    }


def _m4_payload(rep: product.M4Report) -> dict:
    return {
        "v0": rep.v0,
        "k_interval_open": list(rep.k_interval),
        "k_min_exact": rep.k_min_exact,
        "stabilizer_order": rep.stabilizer_order,
        "candidates": list(rep.candidates),
        "rejections": [
            {"k": r.k, "reason": r.reason} for r in rep.rejections
        ],
        "survivors": list(rep.survivors),
    }


def report_payload(report: ReductionReport) -> dict:
    """The canonical machine structure: verdicts, evidence, hypotheses,
    config, version.  Everything below is decimal integers, strings, bools
    and lists, so byte-identical serialization is just sorted keys."""
    diag = report.diagonal_result
    out4 = report.out4_result
    reference = product.reference_triples(report.config.v0_min)
    evidence = {
        "simple_diagonal": {
            "catalog_bound": diag.catalog_bound,
            "catalog_size": diag.catalog_size,
            "survivors": [
                {"group": atlas.display_name(case.group), "m": case.m}
                for case in diag.survivors
            ],
            "near_misses": [atlas.display_name(g) for g in diag.near_misses],
            "m_range": [2, 6],
            "label": f"verified within catalog bound {diag.catalog_bound}",
            "out4_scan": {
                "n_max": out4.n_max,
                "q_max": out4.q_max,
                "include_sporadic": out4.include_sporadic,
                "candidates": [atlas.display_name(g) for g in out4.candidates],
                "tail_checks": [_tail_check_payload(c) for c in out4.checks],
                "tail_ok": out4.ok,
                "label": f"verified within bounds [n_max={out4.n_max}, q_max={out4.q_max}]",
                "warnings": list(report.out4_warnings),
            },
            "warnings": list(report.diagonal_warnings),
        },
        "product": {
            "v0_min": report.config.v0_min,
            "m_values": [2, 3],
            "triples": [_product_triple_payload(t) for t in report.product_triples],
            "reference_triples": [list(t) for t in reference],
            "matches_reference": report.product_matches_reference,
            "m4_cases": [_m4_payload(rep) for rep in report.m4_reports],
            "surviving_triples_note": (
                "surviving triples are dismissed by external citation, not "
                "by this computation"
            ),
        },
        "twisted_wreath": {"citation": TWISTED_WREATH_CITATION},
        "point_imprimitive": {
            "family": "(v, k, lambda) = (lambda^2*(lambda+2), lambda*(lambda+1), lambda)",
            "class_options": "(c, d, l) = (lambda^2, lambda+2, lambda) or (lambda+2, lambda^2, 2)",
            "samples": [
                {
                    "lambda": fam.lam,
                    "v": fam.v,
                    "k": fam.k,
                    "options": [[opt.c, opt.d, opt.l] for opt in fam.options],
                }
                for fam in report.imprimitive_families
            ],
        },
    }
    return {
        "verdicts": {t.value: v.value for t, v in report.verdicts.items()},
        "evidence": evidence,
        "hypotheses": [LAMBDA_FLOOR_HYPOTHESIS, BOUNDED_SCAN_HYPOTHESIS],
        "config": report.config.as_payload(),
        "version": VERSION,
    }


_TYPE_TITLES = {
    OnanScottType.AFFINE: "Affine",
    OnanScottType.ALMOST_SIMPLE: "Almost simple",
    OnanScottType.SIMPLE_DIAGONAL: "Simple diagonal",
    OnanScottType.PRODUCT: "Product",
    OnanScottType.TWISTED_WREATH: "Twisted wreath",
}


def _markdown(report: ReductionReport) -> str:
    payload = report_payload(report)
    lines = ["# Reduction report", ""]
    lines.append(f"Version {payload['version']}.")
    lines.append("")
    lines.append("Hypotheses:")
    for hyp in payload["hypotheses"]:
        lines.append(f"- {hyp}")
    lines.append("")
    for otype in OnanScottType:
        lines.append(f"## {_TYPE_TITLES[otype]}")
        lines.append("")
        lines.append(f"Verdict: `{report.verdicts[otype].value}`")
        lines.append("")
        if otype is OnanScottType.SIMPLE_DIAGONAL:
            section = payload["evidence"]["simple_diagonal"]
            lines.append(
                f"Odd-part scan over {section['catalog_size']} groups with "
                f"|T| <= {section['catalog_bound']}, m in [2, 6]: "
                f"{len(section['survivors'])} survivors."
            )
            lines.append(f"Near misses: {', '.join(section['near_misses']) or 'none'}.")
            scan = section["out4_scan"]
            lines.append(
                f"|T| < |Out(T)|^4 scan: candidates "
                f"{', '.join(scan['candidates']) or 'none'}; "
                f"tail checks {'pass' if scan['tail_ok'] else 'FAIL'}; "
                f"{scan['label']}."
            )
            for warning in section["warnings"] + scan["warnings"]:
                lines.append(f"Warning: {warning}")
        elif otype is OnanScottType.PRODUCT:
            section = payload["evidence"]["product"]
            lines.append(
                f"Enumeration with v0_min={section['v0_min']} over m in "
                f"{section['m_values']} found {len(section['triples'])} triples:"
            )
            for item in section["triples"]:
                witnesses = ", ".join(
                    f"(m={w['m']}, a={w['a']}, v0={w['v0']})" for w in item["witnesses"]
                )
                lines.append(
                    f"- (v={item['v']}, k={item['k']}, lambda={item['lambda']}) via {witnesses}"
                )
            lines.append(
                f"Matches the reference outcome: {section['matches_reference']}."
            )
            for m4 in section["m4_cases"]:
                lines.append(
                    f"m=4, v0={m4['v0']}: candidates {m4['candidates']} in open "
                    f"interval {tuple(m4['k_interval_open'])}, survivors "
                    f"{m4['survivors'] or 'none'}."
                )
        elif otype is OnanScottType.TWISTED_WREATH:
            lines.append(payload["evidence"]["twisted_wreath"]["citation"] + ".")
        else:
            lines.append("No computation applies; outside this tool's scope.")
        lines.append("")
    lines.append("## Point-imprimitive case")
    lines.append("")
    section = payload["evidence"]["point_imprimitive"]
    lines.append(f"Family: {section['family']} with {section['class_options']}.")
    for sample in section["samples"]:
        lines.append(
            f"- lambda={sample['lambda']}: (v, k) = ({sample['v']}, {sample['k']}), "
            f"options {sample['options']}"
        )
    lines.append("")
    lines.append("## Configuration")
    lines.append("")
    lines.append("```json")
    lines.append(json.dumps(payload["config"], sort_keys=True, indent=2))
    lines.append("```")
    lines.append("")
    return "\n".join(lines)


def emit(report: ReductionReport, fmt: str) -> str:
    """Serialize deterministically.  json output is byte-stable for a given
    config; md is the human-readable rendering of the same payload."""
    if fmt == "json":
        return json.dumps(report_payload(report), sort_keys=True, indent=2) + "\n"
    if fmt == "md":
        return _markdown(report)
    raise ValueError(f"unsupported format {fmt!r}: expected 'json' or 'md'")
