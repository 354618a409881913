import json

import pytest

from dyckflip import (
    LatticePath,
    OddLengthError,
    PathClass,
    RangeError,
    binomial,
    classify,
    concat,
    enumerate_class,
    format_path,
    identity_lhs,
    last_zero_touch,
    parse_path,
    split_at_last_zero,
    unrank,
    verify_bijection,
    verify_identity,
)


def pascal(n, k):
    # independent recurrence oracle for the binomial coefficient
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


class TestBinomial:
    def test_examples(self):
        assert binomial(4, 2) == 6
        assert binomial(0, 0) == 1
        assert binomial(40, 20) == 137846528820 == pascal(40, 20)

    @pytest.mark.parametrize("n", range(0, 25))
    def test_matches_pascal_recurrence(self, n):
        for k in range(n + 1):
            assert binomial(n, k) == pascal(n, k)

    def test_range_errors(self):
        with pytest.raises(RangeError):
            binomial(2, 3)
        with pytest.raises(RangeError):
            binomial(2, -1)
        with pytest.raises(RangeError):
            binomial(-1, 0)


class TestSplitting:
    def test_last_zero_touch_examples(self):
        assert last_zero_touch(parse_path("UDUU")) == 2
        assert last_zero_touch(parse_path("UUUU")) == 0
        assert last_zero_touch(parse_path("UDUD")) == 4
        assert last_zero_touch(LatticePath(())) == 0

    def test_split_examples(self):
        pre, suf = split_at_last_zero(parse_path("UDUU"))
        assert (format_path(pre), format_path(suf)) == ("UD", "UU")
        assert split_at_last_zero(parse_path("UUUU")) == (
            LatticePath(()),
            parse_path("UUUU"),
        )
        assert split_at_last_zero(parse_path("UDUD")) == (
            parse_path("UDUD"),
            LatticePath(()),
        )

    def test_odd_length_rejected(self):
        with pytest.raises(OddLengthError):
            split_at_last_zero(parse_path("UDU"))

    @pytest.mark.parametrize("length", range(0, 17, 2))
    def test_split_is_a_bijection(self, length):
        seen = set()
        for code in range(1 << length):
            p = unrank(length, code)
            pre, suf = split_at_last_zero(p)
            assert classify(pre) is PathClass.BALANCED
            assert classify(suf) in (
                PathClass.BALANCED,  # only when empty
                PathClass.UP_UNBALANCED,
                PathClass.DOWN_UNBALANCED,
            )
            if classify(suf) is PathClass.BALANCED:
                assert suf.length == 0
            assert concat(pre, suf) == p
            seen.add((pre.steps, suf.steps))
        assert len(seen) == 1 << length


class TestEnumerateClass:
    def test_examples(self):
        assert {format_path(p) for p in enumerate_class(2, PathClass.BALANCED)} == {
            "UD",
            "DU",
        }
        assert {format_path(p) for p in enumerate_class(2, PathClass.UP_UNBALANCED)} == {
            "UU"
        }
        up4 = {format_path(p) for p in enumerate_class(4, PathClass.UP_UNBALANCED)}
        assert up4 == {"UUUU", "UUUD", "UUDU"}

    def test_rank_order_and_completeness(self):
        paths = list(enumerate_class(3))
        assert len(paths) == 8
        assert [format_path(p) for p in paths[:2]] == ["DDD", "UDD"]

    def test_range_error(self):
        with pytest.raises(RangeError):
            list(enumerate_class(31))

    @pytest.mark.parametrize("length", range(2, 13, 2))
    def test_class_counts(self, length):
        n = length // 2
        balanced = sum(1 for _ in enumerate_class(length, PathClass.BALANCED))
        up = sum(1 for _ in enumerate_class(length, PathClass.UP_UNBALANCED))
        down = sum(1 for _ in enumerate_class(length, PathClass.DOWN_UNBALANCED))
        assert balanced == binomial(2 * n, n)
        assert up == down == binomial(2 * n, n) // 2
        assert up + down == balanced


class TestVerifyBijection:
    def test_n1(self):
        report = verify_bijection(1)
        assert report.balanced_count == 2
        assert report.unbalanced_count == 2
        assert report.bijection_ok
        assert report.roundtrip_failures == ()

    def test_n2(self):
        report = verify_bijection(2)
        assert report.balanced_count == report.unbalanced_count == 6
        assert report.bijection_ok
        assert report.ok

    def test_corrupted_phi_detected(self):
        # constant-image stub: collides and never covers the codomain
        def bad_phi(p):
            return LatticePath((1,) * p.length)

        report = verify_bijection(2, phi_fn=bad_phi)
        assert not report.bijection_ok
        assert report.roundtrip_failures

    def test_partition_determinism(self):
        reports = [verify_bijection(4, partitions=k).to_kv() for k in (1, 3, 4, 16)]
        assert len(set(reports)) == 1

    def test_range_errors(self):
        with pytest.raises(RangeError):
            verify_bijection(0)
        with pytest.raises(RangeError):
            verify_bijection(99)
        with pytest.raises(RangeError):
            verify_bijection(2, partitions=0)


class TestVerifyIdentity:
    def test_arithmetic_n2(self):
        report = verify_identity(2, "arithmetic")
        assert report.identity_lhs == 1 * 6 + 2 * 2 + 6 * 1 == 16
        assert report.identity_rhs == 16
        assert report.ok

    def test_n0(self):
        assert verify_identity(0).identity_lhs == 1

    def test_structural_n3(self):
        report = verify_identity(3, "structural")
        assert report.structural_tallies == (20, 12, 12, 20)
        assert report.identity_lhs == 64
        assert report.tally_mismatches == ()
        assert report.ok

    @pytest.mark.parametrize("n", range(0, 7))
    def test_modes_agree(self, n):
        a = verify_identity(n, "arithmetic")
        s = verify_identity(n, "structural")
        assert a.identity_lhs == s.identity_lhs == a.identity_rhs

    def test_identity_lhs_matches_brute_sum(self):
        for n in range(0, 30):
            brute = sum(
                pascal(2 * i, i) * pascal(2 * (n - i), n - i) for i in range(n + 1)
            )
            assert identity_lhs(n) == brute == 4**n

    def test_range_errors(self):
        with pytest.raises(RangeError):
            verify_identity(-1)
        with pytest.raises(RangeError):
            verify_identity(13, "structural")
        with pytest.raises(RangeError):
            verify_identity(2, "bogus")


class TestReportSerialization:
    def test_kv_fields(self):
        text = verify_bijection(2).to_kv()
        keys = [line.split("=", 1)[0] for line in text.strip().splitlines()]
        assert keys == [
            "n",
            "total_paths",
            "balanced_count",
            "unbalanced_count",
            "identity_lhs",
            "identity_rhs",
            "bijection_ok",
            "roundtrip_failures",
            "ok",
        ]
        assert "elapsed=" in verify_bijection(2).to_kv(include_elapsed=True)

    def test_json_roundtrips_kv_fields(self):
        report = verify_identity(4, "structural")
        data = json.loads(json.dumps(report.to_json_dict()))
        assert data["identity_lhs"] == report.identity_lhs
        assert data["structural_tallies"] == list(report.structural_tallies)
        assert data["ok"] is True
