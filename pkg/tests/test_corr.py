"""Correlations, correlation sums, and the defining predicates."""

import random

import pytest

from cocodes import (
    CycloNum,
    Sequence,
    SequenceFamily,
    SequenceSet,
    acorr,
    ccc_from_unitary,
    check_size_bound,
    corr_profile,
    corr_sum,
    corr_sum_profile,
    dft_matrix,
    energy,
    from_signs,
    hadamard_matrix,
    is_ccc,
    is_complementary_set,
    is_n_co_sf,
    pcorr,
    set_energy,
    singleton_family,
    zccc_zone,
)


def ints(values):
    return [CycloNum.from_int(v) for v in values]


def profile_ints(s, t, lo, hi):
    return [acorr(s, t, tau) for tau in range(lo, hi + 1)]


class TestAcorr:
    def test_reference_auto_profile(self):
        s = from_signs("+++-")
        assert profile_ints(s, s, -3, 3) == ints([-1, 0, 1, 4, 1, 0, -1])

    def test_second_auto_profile(self):
        s = from_signs("+-++")
        assert profile_ints(s, s, -3, 3) == ints([1, 0, -1, 4, -1, 0, 1])

    def test_no_overlap_is_zero(self):
        s = from_signs("+-+-")
        assert acorr(s, s, 4).is_zero()
        assert acorr(s, s, -4).is_zero()
        assert acorr(s, s, 100).is_zero()

    def test_unequal_lengths_support(self):
        s = from_signs("++")
        t = from_signs("+++-")
        # tau up to len(t)-1 can still overlap
        assert acorr(s, t, 3) == CycloNum.from_int(-1)
        assert acorr(s, t, -2).is_zero()


class TestPcorr:
    def test_zero_shift_is_energy(self):
        s = from_signs("+++-")
        assert pcorr(s, s, 0) == energy(s)

    def test_periodic_aperiodic_identity_sample(self):
        s = from_signs("+++-")
        # tau=1: acorr(1) + acorr(1-4) = 1 + (-1) = 0
        assert pcorr(s, s, 1) == acorr(s, s, 1) + acorr(s, s, -3)
        assert pcorr(s, s, 1).is_zero()

    def test_constant_sequence(self):
        s = from_signs("++++")
        for tau in range(-3, 8):
            assert pcorr(s, s, tau) == CycloNum.from_int(4)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            pcorr(from_signs("++"), from_signs("+++"), 0)


class TestProfiles:
    def test_profile_matches_acorr(self):
        rng = random.Random(99)
        for _ in range(40):
            k = rng.choice([1, 2, 3, 4, 6, 8])
            ls, lt = rng.randint(1, 7), rng.randint(1, 7)
            s = Sequence([CycloNum(k, [rng.randint(-2, 2) for _ in range(k)])
                          for _ in range(ls)])
            t = Sequence([CycloNum(k, [rng.randint(-2, 2) for _ in range(k)])
                          for _ in range(lt)])
            prof = corr_profile(s, t)
            for tau in prof.shifts():
                assert prof.at(tau) == acorr(s, t, tau), (tau, s, t)

    def test_profile_mixed_orders_per_entry(self):
        rng = random.Random(7)
        orders = [1, 2, 3, 4, 6]
        for _ in range(25):
            def entry():
                k = rng.choice(orders)
                return CycloNum(k, [rng.randint(-2, 2) for _ in range(k)])
            s = Sequence([entry() for _ in range(rng.randint(1, 6))])
            t = Sequence([entry() for _ in range(rng.randint(1, 6))])
            prof = corr_profile(s, t)
            for tau in prof.shifts():
                assert prof.at(tau) == acorr(s, t, tau)

    def test_profile_big_coefficients_fallback(self):
        big = 10 ** 12  # pushes the int64 bound, exercising the exact path
        s = Sequence([CycloNum(3, [big, 0, -big]), CycloNum(3, [0, big, 0])])
        t = Sequence([CycloNum(3, [big, big, 0])])
        prof = corr_profile(s, t)
        for tau in prof.shifts():
            assert prof.at(tau) == acorr(s, t, tau)

    def test_profile_approx(self):
        s = Sequence([1 + 0j, 0 + 1j, -1 + 0j])
        prof = corr_profile(s, s)
        for tau in prof.shifts():
            assert abs(prof.at(tau) - acorr(s, s, tau)) < 1e-12

    def test_hermitian_symmetry(self):
        rng = random.Random(17)
        for _ in range(30):
            k = rng.choice([2, 3, 4, 6])
            s = Sequence([CycloNum.root(k, rng.randrange(k)) for _ in range(4)])
            t = Sequence([CycloNum.root(k, rng.randrange(k)) for _ in range(6)])
            for tau in range(-6, 7):
                assert acorr(s, t, tau) == acorr(t, s, -tau).conj()


class TestCorrSum:
    def test_reference_sum(self, golden_cs_pair):
        vals = [corr_sum(golden_cs_pair, golden_cs_pair, tau)
                for tau in range(-3, 4)]
        assert vals == ints([0, 0, 0, 8, 0, 0, 0])

    def test_cross_sum_all_zero(self, golden_ccc_2x2):
        a, b = golden_ccc_2x2[0], golden_ccc_2x2[1]
        for tau in range(-3, 4):
            assert corr_sum(a, b, tau).is_zero()

    def test_zero_shift_is_energy(self, golden_cs_pair):
        assert corr_sum(golden_cs_pair, golden_cs_pair, 0) == set_energy(golden_cs_pair)

    def test_size_mismatch(self):
        a = SequenceSet([from_signs("++")])
        b = SequenceSet([from_signs("++"), from_signs("+-")])
        with pytest.raises(ValueError):
            corr_sum(a, b, 0)

    def test_sum_profile_matches_pointwise(self, golden_ccc_2x2):
        a, b = golden_ccc_2x2[0], golden_ccc_2x2[1]
        prof = corr_sum_profile(a, b)
        for tau in prof.shifts():
            assert prof.at(tau) == corr_sum(a, b, tau)


class TestComplementarySet:
    def test_golden_pair(self, golden_cs_pair):
        assert is_complementary_set(golden_cs_pair).ok

    def test_single_sequence_fails(self):
        report = is_complementary_set(SequenceSet([from_signs("+++-")]))
        assert not report.ok
        viol = report.pairs[0].violations
        assert set(viol) == {-3, -1, 1, 3}

    def test_length_one_trivially_ok(self):
        assert is_complementary_set(
            SequenceSet([from_signs("+"), from_signs("+")])).ok


class TestCcc:
    def test_golden(self, golden_ccc_2x2):
        assert is_ccc(golden_ccc_2x2).ok

    def test_zero_padded_example(self):
        rows = ["++-+ +--- 0000 0000",
                "0000 0000 ++-+ +---",
                "+++- +-++ +++- +-++",
                "+++- +-++ ---+ -+--"]
        fam = SequenceFamily(
            SequenceSet(from_signs(w) for w in row.split()) for row in rows)
        assert is_ccc(fam).ok

    def test_duplicated_set_fails(self, golden_cs_pair):
        fam = SequenceFamily([golden_cs_pair, golden_cs_pair])
        report = is_ccc(fam)
        assert not report.ok
        cross = [p for p in report.pairs if p.left != p.right][0]
        assert 0 in cross.violations  # cross sum at zero shift equals energy

    def test_report_renders(self, golden_cs_pair):
        fam = SequenceFamily([golden_cs_pair, golden_cs_pair])
        text = is_ccc(fam).render()
        assert "FAIL" in text and "tau=0" in text


class TestNCoSf:
    def test_golden_columns(self, golden_ccc_2x2):
        col0 = singleton_family([golden_ccc_2x2[0][0], golden_ccc_2x2[1][0]])
        col1 = singleton_family([golden_ccc_2x2[0][1], golden_ccc_2x2[1][1]])
        assert is_n_co_sf(col0, 2).ok
        assert is_n_co_sf(col1, 2).ok

    def test_mixed_lengths(self, cosf_6_mixed):
        assert is_n_co_sf(cosf_6_mixed, 6).ok

    def test_identical_pair_fails(self):
        fam = singleton_family([from_signs("++"), from_signs("++")])
        report = is_n_co_sf(fam, 2)
        assert not report.ok

    def test_length_divisibility(self):
        fam = singleton_family([from_signs("+++")])
        report = is_n_co_sf(fam, 2)
        assert not report.ok
        assert any("not divisible" in p for p in report.problems)

    def test_multi_sequence_set_rejected(self, golden_ccc_2x2):
        with pytest.raises(ValueError):
            is_n_co_sf(golden_ccc_2x2, 2)


class TestZone:
    def test_dft4(self):
        assert zccc_zone(ccc_from_unitary(dft_matrix(4))) == 3

    def test_hadamard4(self):
        assert zccc_zone(ccc_from_unitary(hadamard_matrix(4))) == 2

    def test_hadamard2_brute(self):
        assert zccc_zone(ccc_from_unitary(hadamard_matrix(2))) == 1

    def test_requires_ccc(self, golden_cs_pair):
        fam = SequenceFamily([golden_cs_pair, golden_cs_pair])
        with pytest.raises(ValueError):
            zccc_zone(fam)

    def test_requires_common_length(self, cosf_6_mixed):
        from cocodes import cosf_to_ccc
        ccc = cosf_to_ccc(cosf_6_mixed, dft_matrix(6))
        with pytest.raises(ValueError):
            zccc_zone(ccc)


class TestSizeBound:
    def test_cosf_bound(self, cosf_2_of_4):
        assert check_size_bound(cosf_2_of_4, "cosf", n=2)

    def test_ccc_bound_with_equality(self):
        fam = ccc_from_unitary(hadamard_matrix(4))
        assert check_size_bound(fam, "ccc")
        assert fam.family_size == fam.set_size == 4

    def test_violated(self):
        fam = singleton_family([from_signs("++"), from_signs("+-"),
                                from_signs("-+")])
        assert not check_size_bound(fam, "cosf", n=2)


class TestApproxMode:
    def test_approx_ccc(self, golden_ccc_2x2):
        approx = SequenceFamily(
            SequenceSet(
                Sequence([x.numeric() for x in seq]) for seq in ss)
            for ss in golden_ccc_2x2)
        assert is_ccc(approx).ok

    def test_approx_near_miss_fails(self):
        a = SequenceSet([Sequence([1 + 0j, 1 + 0j, 1 + 0j, -1 + 0j]),
                         Sequence([1 + 0j, -0.9 + 0j, 1 + 0j, 1 + 0j])])
        assert not is_complementary_set(a).ok

    def test_tolerance_scales_with_energy(self):
        eps = 1e-12
        a = SequenceSet([Sequence([1 + 0j, 1 + 0j, 1 + 0j, -1 + 0j]),
                         Sequence([1 + eps, -1 + 0j, 1 + 0j, 1 + 0j])])
        assert is_complementary_set(a, tol=1e-9).ok
        assert not is_complementary_set(a, tol=1e-15).ok
