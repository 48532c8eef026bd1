import itertools

import pytest

import zroupoid as z


def signed(alg, neg):
    return [[v - neg for v in row] for row in alg.table]


def test_printed_six_element_chain():
    a = z.build_chain(2, 3)
    assert a.zero == 2
    assert a.labels == ["-2", "-1", "0", "1", "2", "3"]
    assert signed(a, 2) == [
        [-2, -2, -2, -2, -2, -2],
        [-2, -1, -1, -1, -1, -1],
        [-2, -1, 3, 3, 3, 3],
        [-2, -1, 2, 2, 2, 3],
        [-2, -1, 1, 1, 2, 3],
        [-2, -1, 0, 1, 2, 3],
    ]
    assert a.format_table().splitlines()[0] == "=> -2 -1  0  1  2  3"


def test_check_and_witness():
    a = z.build_chain(1, 1)
    assert z.check(a, "(x -> y) -> z = ((z' -> x) -> (y -> z)')'") == (True, None)
    holds, witness = z.check(a, "x -> y = y -> x")
    assert not holds
    x, y = witness["x"], witness["y"]
    assert a.op(x, y) != a.op(y, x)


def test_errors_are_value_errors():
    a = z.build_chain(0, 1)
    with pytest.raises(z.TermSyntaxError):
        z.check(a, "x -> = y")
    with pytest.raises(z.ValidationError):
        z.Algebra([[0, 2], [0, 0]], 0)
    with pytest.raises(z.SizeLimit):
        z.enumerate(9, "chains")
    with pytest.raises(ValueError):
        z.run_lemmas("chains:3", only=["no-such-check"])


def test_algebra_round_trip_and_equality():
    a = z.build_chain(2, 1)
    b = z.Algebra.from_dict(a.to_dict())
    assert a == b and hash(a) == hash(b)
    assert b.to_dict()["schema"] == "zroupoid-v1"


def test_order_matches_integers_on_chains():
    for neg, pos in itertools.product(range(4), range(4)):
        a = z.build_chain(neg, pos)
        n = neg + pos + 1
        assert all(z.leq(a, x, y) == (x <= y) for x in range(n) for y in range(n))
        assert z.meet(a, 0, n - 1) == 0
        report = z.order_report(a)
        assert report["partial_order"] and report["total"]["holds"]
        assert report["greatest"] == a.prime(a.zero)


def test_constant_zero_algebra():
    a = z.constant_zero_algebra()
    m = a.memberships()
    assert m["I"] and not m["I20"]
    assert z.order_report(a)["reflexive"]["witness"] == [1]


@pytest.mark.parametrize("k", range(1, 7))
def test_enumeration_gives_one_class_per_chain(k):
    found, complete = z.enumerate(k, "chains", workers=2)
    assert complete and len(found) == k
    shapes = sorted(z.classify_chain(a) for a in found)
    assert shapes == [(neg, k - 1 - neg) for neg in range(k)]
    for a in found:
        neg, pos = z.classify_chain(a)
        assert z.isomorphism(a, z.build_chain(neg, pos)) is not None


def test_canonical_form_is_invariant():
    a = z.build_chain(1, 2)
    perm = [3, 0, 2, 1]
    table = [[0] * 4 for _ in range(4)]
    for x in range(4):
        for y in range(4):
            table[perm[x]][perm[y]] = perm[a.op(x, y)]
    b = z.Algebra(table, perm[a.zero])
    assert z.canonical_form(a) == z.canonical_form(b)
    iso = z.isomorphism(a, b)
    assert iso is not None and all(b.op(iso[x], iso[y]) == iso[a.op(x, y)] for x in range(4) for y in range(4))


def test_i20_counts():
    assert [len(z.enumerate(k, "all-i20")[0]) for k in range(1, 6)] == [1, 2, 5, 18, 61]
    partial, complete = z.enumerate(6, "all-i20", budget=3)
    assert not complete


def test_lemma_catalog(validate):
    entries = z.catalog()
    assert len(entries) >= 55
    assert len({e["id"] for e in entries}) == len(entries)
    for universe in ("chains:8", "i20:4"):
        report = validate(z.run_lemmas(universe, workers=2))
        assert report["summary"]["failed"] == 0
        assert report["summary"]["applied"] > 0
    algebras = [z.build_chain(1, 1), z.constant_zero_algebra()]
    report = validate(z.run_lemmas(algebras, only=["L2.5-equiv"]))
    assert report["scopes"][1] == {"I": True, "I20": False, "I20-chain": False}
    assert report["verdicts"][1]["members"] == [False, False, False, False]


def test_normalize():
    assert z.normalize("x <= y") == z.normalize("(x -> y')' = x")
