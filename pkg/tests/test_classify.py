from twosquares.classify import EligibilityStatus, classify, mod25_sqrt
from twosquares.represent import oracle_representations


def test_worked_composite():
    e = classify(1000009)
    assert e.status is EligibilityStatus.ELIGIBLE
    assert e.n_mod25 == 9
    assert e.roots_mod25 == (3, 22)


def test_worked_prime():
    e = classify(1000081)
    assert e.status is EligibilityStatus.ELIGIBLE
    assert e.n_mod25 == 6
    assert e.roots_mod25 == (9, 16)


def test_small_eligible():
    e = classify(21)
    assert e.status is EligibilityStatus.ELIGIBLE
    assert e.roots_mod25 == (11, 14)


def test_ineligible_statuses():
    assert classify(39).status is EligibilityStatus.INELIGIBLE_MOD4
    assert classify(10).status is EligibilityStatus.INELIGIBLE_MOD4
    assert classify(33).status is EligibilityStatus.INELIGIBLE_LAST_DIGIT
    assert classify(25).status is EligibilityStatus.INELIGIBLE_LAST_DIGIT
    assert classify(5).status is EligibilityStatus.INELIGIBLE_TOO_SMALL
    assert classify(0).status is EligibilityStatus.INELIGIBLE_TOO_SMALL
    assert classify(9).status is EligibilityStatus.ELIGIBLE


def test_mod25_sqrt_examples():
    assert mod25_sqrt(9) == (3, 22)
    assert mod25_sqrt(6) == (9, 16)
    assert mod25_sqrt(2) == ()
    assert mod25_sqrt(0) == (0, 5, 10, 15, 20)


def test_mod25_sqrt_matches_exhaustive():
    for res in range(25):
        assert mod25_sqrt(res) == tuple(
            r for r in range(25) if r * r % 25 == res
        )


def test_eligible_root_structure():
    # eligible n: roots empty or the pair {r, 25 - r}, both coprime to 5
    for n in range(9, 5000):
        e = classify(n)
        if not e.is_eligible:
            assert e.roots_mod25 == ()
            continue
        assert e.n_mod4 == 1 and e.last_digit in (1, 9) and n >= 9
        roots = e.roots_mod25
        assert roots == () or (
            len(roots) == 2
            and roots[1] == 25 - roots[0]
            and all(r % 5 != 0 for r in roots)
        )


def test_one_member_divisible_by_five():
    # for eligible n every representation has exactly one member = 0 mod 5,
    # which is what justifies the x = 25 t + r parametrization
    for n in range(9, 20001):
        e = classify(n)
        if not e.is_eligible:
            continue
        for rep in oracle_representations(n):
            assert (rep.a % 5 == 0) != (rep.b % 5 == 0)
        if not e.roots_mod25:
            assert oracle_representations(n) == []
