"""Verdicts with self-contained evidence, and their independent check.

decide() runs the scan pipeline and assembles a certificate; verify()
re-derives everything WITHOUT the scan engine (brute-force oracle,
trial division, witness identities), so a verifier needs none of the
machinery that produced the certificate.

Certificates serialize to JSON with integers as decimal strings (no
consumer precision loss) and a fixed key order, so a document
round-trips byte-identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .arith import check_magnitude, isqrt
from .classify import EligibilityStatus, classify
from .factorize import TwoRepWitness, factor_with_witness
from .represent import Representation, oracle_representations, representations

METHOD_VERSION = "1.0"

NO_REPRESENTATION_NOTE = (
    "no two-square representation exists; a number of this form with none "
    "is composite with at least two prime factors congruent to 3 mod 4, "
    "which this method cannot exhibit"
)


class CertificateError(ValueError):
    """Malformed certificate document."""


class Verdict(Enum):
    PRIME = "prime"
    COMPOSITE_WITH_FACTORS = "composite_with_factors"
    COMPOSITE_NO_REPRESENTATION = "composite_no_representation"
    INELIGIBLE = "ineligible"


@dataclass(frozen=True)
class Certificate:
    n: int
    verdict: Verdict
    representations: tuple[Representation, ...]
    factors: tuple[int, int] | None
    witness: TwoRepWitness | None
    notes: str
    method_version: str = METHOD_VERSION


def decide(n: int) -> Certificate:
    """Certificate for any n >= 0 (ineligible n gets an Ineligible one)."""
    check_magnitude(n)
    elig = classify(n)
    if not elig.is_eligible:
        return Certificate(
            n=n,
            verdict=Verdict.INELIGIBLE,
            representations=(),
            factors=None,
            witness=None,
            notes=f"not in scope: {elig.status.value}",
        )
    reps = tuple(representations(n))
    if not reps:
        return Certificate(
            n=n,
            verdict=Verdict.COMPOSITE_NO_REPRESENTATION,
            representations=(),
            factors=None,
            witness=None,
            notes=NO_REPRESENTATION_NOTE,
        )
    if len(reps) == 1:
        (rep,) = reps
        if rep.coprime and rep.b >= 1:
            return Certificate(
                n=n,
                verdict=Verdict.PRIME,
                representations=reps,
                factors=None,
                witness=None,
                notes="unique coprime two-square representation",
            )
        # unique but non-coprime: the shared divisor's square splits n
        g = gcd(rep.a, rep.b)
        if g * g == n:
            factors = (g, g)
        else:
            lo, hi = sorted((g * g, n // (g * g)))
            factors = (lo, hi)
        return Certificate(
            n=n,
            verdict=Verdict.COMPOSITE_WITH_FACTORS,
            representations=reps,
            factors=factors,
            witness=None,
            notes=f"unique representation with common divisor {g}",
        )
    witness = factor_with_witness(n, list(reps))
    return Certificate(
        n=n,
        verdict=Verdict.COMPOSITE_WITH_FACTORS,
        representations=reps,
        factors=(witness.f1, witness.f2),
        witness=witness,
        notes="factors recovered from two distinct representations",
    )


# ---------------------------------------------------------------------------
# independent verification
# ---------------------------------------------------------------------------

def _is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d <= isqrt(n):
        if n % d == 0:
            return False
        d += 2
    return True


def _witness_consistent(number: int, w: TwoRepWitness) -> bool:
    pairs = {w.rep1.members(), w.rep2.members()}
    if {tuple(sorted((w.a, w.b), reverse=True)), tuple(sorted((w.c, w.d), reverse=True))} != pairs:
        return False
    if w.a * w.a + w.b * w.b != number or w.c * w.c + w.d * w.d != number:
        return False
    if w.u != abs(w.a - w.c) or w.v != abs(w.d - w.b):
        return False
    if w.k != gcd(w.u, w.v) or w.k == 0:
        return False
    if w.l * w.k != w.u or w.m * w.k != w.v:
        return False
    if w.m * w.n != w.a + w.c or w.l * w.n != w.d + w.b:
        return False
    if (w.k**2 + w.n**2) * (w.l**2 + w.m**2) != 4 * number:
        return False
    if w.f1 * w.f2 != number or not 1 < w.f1 <= w.f2 < number:
        return False
    return True


def verify(cert: Certificate) -> bool:
    """Re-derive the certificate's claims from scratch; False on any
    mismatch.  Uses only the brute-force oracle, trial division and the
    witness identities, never the scan engine."""
    try:
        n = cert.n
        check_magnitude(n)
        elig = classify(n)
        if cert.verdict is Verdict.INELIGIBLE:
            return not elig.is_eligible
        if not elig.is_eligible:
            return False
        oracle = oracle_representations(n)
        if list(cert.representations) != oracle:
            return False
        for rep in cert.representations:
            if rep.a < rep.b or rep.b < 0:
                return False
            if rep.a * rep.a + rep.b * rep.b != n:
                return False
            if rep.coprime != (gcd(rep.a, rep.b) == 1):
                return False
        if cert.verdict is Verdict.PRIME:
            if len(oracle) != 1 or cert.factors is not None:
                return False
            (rep,) = oracle
            if not rep.coprime or rep.b < 1:
                return False
            return _is_prime_trial(n)
        if cert.verdict is Verdict.COMPOSITE_NO_REPRESENTATION:
            return not oracle and cert.factors is None
        if cert.verdict is Verdict.COMPOSITE_WITH_FACTORS:
            if cert.factors is None:
                return False
            f1, f2 = cert.factors
            if not (1 < f1 <= f2 < n and f1 * f2 == n):
                return False
            if cert.witness is not None:
                if not _witness_consistent(n, cert.witness):
                    return False
                if (cert.witness.f1, cert.witness.f2) != (f1, f2):
                    return False
            return True
        return False
    except (ValueError, OverflowError, TypeError):
        return False


# ---------------------------------------------------------------------------
# serialization (integers as decimal strings, fixed key order)
# ---------------------------------------------------------------------------

def _rep_to_json(rep: Representation) -> dict:
    return {"a": str(rep.a), "b": str(rep.b), "coprime": rep.coprime}


def _witness_to_json(w: TwoRepWitness) -> dict:
    out = {"rep1": _rep_to_json(w.rep1), "rep2": _rep_to_json(w.rep2)}
    for field in ("a", "b", "c", "d", "u", "v", "k", "l", "m", "n", "f1", "f2"):
        out[field] = str(getattr(w, field))
    return out


def certificate_to_json(cert: Certificate) -> str:
    doc = {
        "n": str(cert.n),
        "verdict": cert.verdict.value,
        "representations": [_rep_to_json(r) for r in cert.representations],
        "factors": [str(f) for f in cert.factors] if cert.factors else None,
        "witness": _witness_to_json(cert.witness) if cert.witness else None,
        "notes": cert.notes,
        "method_version": cert.method_version,
    }
    return json.dumps(doc, indent=2) + "\n"


def _parse_int(value, what: str) -> int:
    if not isinstance(value, str):
        raise CertificateError(f"{what} must be a decimal string")
    try:
        return int(value, 10)
    except ValueError as exc:
        raise CertificateError(f"{what} is not a decimal integer: {value!r}") from exc


def _rep_from_json(doc, what: str) -> Representation:
    if not isinstance(doc, dict) or set(doc) != {"a", "b", "coprime"}:
        raise CertificateError(f"{what} must have fields a, b, coprime")
    if not isinstance(doc["coprime"], bool):
        raise CertificateError(f"{what}.coprime must be a boolean")
    return Representation(
        a=_parse_int(doc["a"], f"{what}.a"),
        b=_parse_int(doc["b"], f"{what}.b"),
        coprime=doc["coprime"],
    )


def _witness_from_json(doc) -> TwoRepWitness:
    fields = ("a", "b", "c", "d", "u", "v", "k", "l", "m", "n", "f1", "f2")
    if not isinstance(doc, dict) or set(doc) != {"rep1", "rep2", *fields}:
        raise CertificateError("witness has wrong fields")
    return TwoRepWitness(
        rep1=_rep_from_json(doc["rep1"], "witness.rep1"),
        rep2=_rep_from_json(doc["rep2"], "witness.rep2"),
        **{f: _parse_int(doc[f], f"witness.{f}") for f in fields},
    )


def certificate_from_json(text: str) -> Certificate:
    """Parse a certificate document; CertificateError on malformed input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not valid JSON: {exc}") from exc
    expected = {"n", "verdict", "representations", "factors", "witness", "notes",
                "method_version"}
    if not isinstance(doc, dict) or set(doc) != expected:
        raise CertificateError(f"certificate must have exactly the fields {sorted(expected)}")
    try:
        verdict = Verdict(doc["verdict"])
    except ValueError as exc:
        raise CertificateError(f"unknown verdict {doc['verdict']!r}") from exc
    if not isinstance(doc["representations"], list):
        raise CertificateError("representations must be a list")
    reps = tuple(
        _rep_from_json(r, f"representations[{i}]")
        for i, r in enumerate(doc["representations"])
    )
    factors = None
    if doc["factors"] is not None:
        if not isinstance(doc["factors"], list) or len(doc["factors"]) != 2:
            raise CertificateError("factors must be null or a pair")
        factors = (
            _parse_int(doc["factors"][0], "factors[0]"),
            _parse_int(doc["factors"][1], "factors[1]"),
        )
    witness = _witness_from_json(doc["witness"]) if doc["witness"] is not None else None
    if not isinstance(doc["notes"], str) or not isinstance(doc["method_version"], str):
        raise CertificateError("notes and method_version must be strings")
    return Certificate(
        n=_parse_int(doc["n"], "n"),
        verdict=verdict,
        representations=reps,
        factors=factors,
        witness=witness,
        notes=doc["notes"],
        method_version=doc["method_version"],
    )
