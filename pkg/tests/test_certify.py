import json
import random

import pytest

from twosquares.certify import (
    Certificate,
    CertificateError,
    Verdict,
    certificate_from_json,
    certificate_to_json,
    decide,
    verify,
)
from twosquares.represent import Representation


def test_decide_worked_composite():
    cert = decide(1000009)
    assert cert.verdict is Verdict.COMPOSITE_WITH_FACTORS
    assert cert.factors == (293, 3413)
    assert [(r.a, r.b) for r in cert.representations] == [(1000, 3), (972, 235)]
    assert cert.witness is not None
    assert verify(cert)


def test_decide_worked_prime():
    cert = decide(1000081)
    assert cert.verdict is Verdict.PRIME
    assert [(r.a, r.b) for r in cert.representations] == [(1000, 9)]
    assert cert.factors is None
    assert verify(cert)


def test_decide_no_representation():
    cert = decide(21)
    assert cert.verdict is Verdict.COMPOSITE_NO_REPRESENTATION
    assert cert.representations == ()
    assert "3 mod 4" in cert.notes
    assert verify(cert)
    # the recorded claim holds on this instance: 21 = 3 * 7, both 3 mod 4
    assert 3 * 7 == 21 and 3 % 4 == 3 and 7 % 4 == 3


def test_decide_noncoprime_unique():
    cert = decide(81)
    assert cert.verdict is Verdict.COMPOSITE_WITH_FACTORS
    assert cert.factors == (9, 9)
    assert verify(cert)
    cert261 = decide(261)  # 261 = 9 * 29, unique rep (15, 6) with gcd 3
    assert cert261.verdict is Verdict.COMPOSITE_WITH_FACTORS
    assert cert261.factors == (9, 29)
    assert verify(cert261)


def test_decide_small_prime():
    cert = decide(29)
    assert cert.verdict is Verdict.PRIME
    assert verify(cert)


def test_decide_ineligible():
    for n in (10, 0, 39, 55):
        cert = decide(n)
        assert cert.verdict is Verdict.INELIGIBLE
        assert verify(cert)


def test_verify_rejects_wrong_factors():
    cert = decide(1000081)
    bad = Certificate(
        n=cert.n,
        verdict=Verdict.COMPOSITE_WITH_FACTORS,
        representations=cert.representations,
        factors=(3, 333360),
        witness=None,
        notes=cert.notes,
    )
    assert not verify(bad)


def test_verify_rejects_verdict_flip():
    cert = decide(1000009)
    flipped = Certificate(
        n=cert.n,
        verdict=Verdict.PRIME,
        representations=cert.representations,
        factors=None,
        witness=None,
        notes=cert.notes,
    )
    assert not verify(flipped)


def test_verify_rejects_coprime_flag_tamper():
    cert = decide(1000081)
    rep = cert.representations[0]
    tampered = Certificate(
        n=cert.n,
        verdict=cert.verdict,
        representations=(Representation(rep.a, rep.b, not rep.coprime),),
        factors=None,
        witness=None,
        notes=cert.notes,
    )
    assert not verify(tampered)


def test_serialization_roundtrip_byte_identical():
    for n in (1000009, 1000081, 21, 81, 10):
        text = certificate_to_json(decide(n))
        again = certificate_to_json(certificate_from_json(text))
        assert again == text


def test_serialization_integers_are_strings():
    doc = json.loads(certificate_to_json(decide(1000009)))
    assert doc["n"] == "1000009"
    assert doc["factors"] == ["293", "3413"]
    assert doc["representations"][0] == {"a": "1000", "b": "3", "coprime": True}
    assert doc["witness"]["k"] == "4"
    assert list(doc) == [
        "n", "verdict", "representations", "factors", "witness", "notes",
        "method_version",
    ]


def test_parse_rejects_malformed():
    with pytest.raises(CertificateError):
        certificate_from_json("not json")
    with pytest.raises(CertificateError):
        certificate_from_json("{}")
    good = certificate_to_json(decide(1000009))
    doc = json.loads(good)
    doc["extra"] = 1
    with pytest.raises(CertificateError):
        certificate_from_json(json.dumps(doc))
    doc = json.loads(good)
    doc["n"] = 1000009  # bare int, must be a decimal string
    with pytest.raises(CertificateError):
        certificate_from_json(json.dumps(doc))


MUTABLE_VERDICTS = [v.value for v in Verdict]


def mutate_document(doc: dict, rng: random.Random) -> dict | None:
    """Mutate one semantic field of a parsed certificate; None if the
    document offers no target."""
    doc = json.loads(json.dumps(doc))  # deep copy
    targets = []
    if doc["representations"]:
        targets.append("n")
        for i, _ in enumerate(doc["representations"]):
            targets.extend([("rep", i, "a"), ("rep", i, "b"), ("rep", i, "coprime")])
    targets.append("verdict")
    if doc["factors"]:
        targets.extend([("factor", 0), ("factor", 1)])
    elif doc["verdict"] != "ineligible":
        targets.append("spurious_factors")
    if doc["witness"]:
        for f in ("a", "b", "c", "d", "u", "v", "k", "l", "m", "n", "f1", "f2"):
            targets.append(("witness", f))
        targets.extend([("witness_rep", "rep1", "a"), ("witness_rep", "rep2", "b")])

    def bump(text: str) -> str:
        value = int(text)
        delta = rng.choice([-3, -2, -1, 1, 2, 3, 10, 100])
        return str(value + delta if value + delta != value else value + 1)

    t = rng.choice(targets)
    if t == "n":
        doc["n"] = bump(doc["n"])
    elif t == "verdict":
        doc["verdict"] = rng.choice([v for v in MUTABLE_VERDICTS if v != doc["verdict"]])
    elif t == "spurious_factors":
        doc["factors"] = ["3", "7"]
    elif t[0] == "rep":
        _, i, field = t
        if field == "coprime":
            doc["representations"][i][field] = not doc["representations"][i][field]
        else:
            doc["representations"][i][field] = bump(doc["representations"][i][field])
    elif t[0] == "factor":
        doc["factors"][t[1]] = bump(doc["factors"][t[1]])
    elif t[0] == "witness":
        doc["witness"][t[1]] = bump(doc["witness"][t[1]])
    elif t[0] == "witness_rep":
        _, rep, field = t
        doc["witness"][rep][field] = bump(doc["witness"][rep][field])
    return doc


def test_random_mutations_rejected():
    rng = random.Random(20260809)
    bases = [decide(n) for n in (1000009, 1000081, 29, 81, 21, 261, 481)]
    docs = [json.loads(certificate_to_json(c)) for c in bases]
    for base in bases:
        assert verify(base)
    for _ in range(200):
        doc = mutate_document(rng.choice(docs), rng)
        mutated = certificate_from_json(json.dumps(doc))
        assert not verify(mutated), doc
