"""JSON documents for certificates and reports.

Integers are written as decimal strings so consumers never overflow. Keys are
sorted and there are no timestamps, so equal inputs give byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certify import COMBINED_NOTE, Certificate, LevelPrimeReport, RationalOrthogonal
from .factor import Factorization
from .oracle import VerificationReport

FORMAT_VERSION = "1"


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("not a loopspec document")
    return doc


def _s(x: int | None) -> str | None:
    return None if x is None else str(x)


def certificate_to_doc(cert: Certificate) -> dict:
    f = cert.det_factorization
    doc = {
        "kind": "certificate",
        "version": FORMAT_VERSION,
        "verdict": cert.verdict,
        "rule": cert.rule,
        "n": str(cert.n),
        "det_walk": str(cert.det_walk),
        "zero_det": cert.zero_det,
        "det_factors": [] if f is None else [[str(p), str(e)] for p, e in f.prime_powers],
        "failing_primes": [str(p) for p in cert.failing_primes],
        "input_hash": cert.input_hash,
    }
    if cert.discriminant is not None:
        doc["discriminant"] = str(cert.discriminant)
    if cert.rule == "combined":
        doc["conditional_on"] = COMBINED_NOTE
    return doc


def certificate_from_doc(doc: dict) -> Certificate:
    if doc.get("kind") != "certificate":
        raise ValueError("document is not a certificate")
    det = int(doc["det_walk"])
    f = None
    if det != 0:
        f = Factorization(det, -1 if det < 0 else 1,
                          tuple((int(p), int(e)) for p, e in doc["det_factors"]))
        if f.recombine() != det:
            raise ValueError("det_factors do not multiply to det_walk")
    disc = doc.get("discriminant")
    return Certificate(
        verdict=doc["verdict"],
        n=int(doc["n"]),
        det_walk=det,
        det_factorization=f,
        discriminant=None if disc is None else int(disc),
        failing_primes=tuple(int(p) for p in doc["failing_primes"]),
        input_hash=doc["input_hash"],
        rule=doc.get("rule", "walk_det"),
    )


def report_to_doc(rep: VerificationReport, rule: str = "walk_det") -> dict:
    return {
        "kind": "verification",
        "version": FORMAT_VERSION,
        "rule": rule,
        "method": rep.method,
        "n": str(rep.n),
        "total_graphs": str(rep.total_graphs),
        "certified_count": str(rep.certified_count),
        "zero_det_count": str(rep.zero_det_count),
        "buckets": str(rep.buckets),
        "iso_classes": str(rep.iso_classes),
        "cospectral_classes_with_nonisomorphic_members":
            str(rep.cospectral_classes_with_nonisomorphic_members),
        "violations": [
            {"graph": v["graph"], "det_walk": str(v["det_walk"]), "mates": list(v["mates"])}
            for v in rep.violations
        ],
        "holds": rep.holds,
    }


def frequency_to_doc(n: int, samples: int, seed: int, freq: Fraction) -> dict:
    hits = freq * samples
    return {
        "kind": "frequency",
        "version": FORMAT_VERSION,
        "n": str(n),
        "samples": str(samples),
        "seed": str(seed),
        "square_free_count": str(int(hits)),
        "frequency": f"{freq.numerator}/{freq.denominator}",
        "frequency_decimal": f"{float(freq):.6f}",
    }


def mates_to_doc(graph: str, mates: list[str]) -> dict:
    return {"kind": "mates", "version": FORMAT_VERSION, "graph": graph,
            "count": str(len(mates)), "mates": mates}


def _frac(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def level_report_to_doc(r: LevelPrimeReport) -> dict:
    return {
        "p": str(r.p),
        "status": r.status,
        "divides_det": r.divides_det,
        "square_divides_det": r.square_divides_det,
        "rank_x": _s(r.rank_x),
        "rank_y": _s(r.rank_y),
        "t0": _s(r.t0),
        "beta_roots": [str(x) for x in r.beta_roots],
        "kernels_equal": r.kernels_equal,
        "stronger_bound_holds": r.stronger_bound_holds,
        "concluded_p_not_dividing_level": r.concluded_p_not_dividing_level,
        "p_divides_level": r.p_divides_level,
        "consistent": r.consistent,
        "notes": list(r.notes),
    }


def diagnosis_to_doc(q: RationalOrthogonal, det_walk: int, traces: list[LevelPrimeReport]) -> dict:
    return {
        "kind": "diagnosis",
        "version": FORMAT_VERSION,
        "n": str(len(q.q)),
        "det_walk": str(det_walk),
        "level": str(q.level),
        "signed_permutation": q.is_signed_permutation(),
        "q": [[_frac(e) for e in row] for row in q.q],
        "primes": [level_report_to_doc(t) for t in traces],
        "consistent": all(t.consistent for t in traces),
    }
