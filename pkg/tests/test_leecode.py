import random
from dataclasses import replace

import pytest

from leetoric.lattice import determinant, lee_distance, mannheim_weight
from leetoric.leecode import (
    PerfectLeeCode,
    build_generators,
    check_functional,
    generator_matrix,
    weight_w_vectors,
)


class TestCheckFunctional:
    def test_n5(self):
        assert check_functional(5) == (1, 2, 3, 4, 5)

    def test_annihilates_printed_generator(self):
        # h . (0,0,0,1,8) = 4 + 40 = 44 = 0 mod 11
        h = check_functional(5)
        assert sum(a * b for a, b in zip(h, (0, 0, 0, 1, 8))) % 11 == 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 12])
    def test_residues_cover_zq(self, n):
        q = 2 * n + 1
        h = check_functional(n)
        cover = {0} | {x % q for x in h} | {(-x) % q for x in h}
        assert cover == set(range(q))

    def test_rejects_tiny_dimension(self):
        with pytest.raises(ValueError):
            check_functional(1)


class TestBuildGenerators:
    def test_n5_rows_exact(self):
        gens = build_generators(5)
        assert gens.v == (0, 0, 0, 1, 8)
        assert gens.v1 == (0, 0, 0, 1, -3)
        assert gens.v_last == (1, 0, 0, 0, 2)
        assert gens.middle == ((0, 1, 1, 1, -4), (0, 0, 1, 1, 3))

    def test_rejects_n4(self):
        with pytest.raises(ValueError, match="unsupported dimension"):
            build_generators(4)

    @pytest.mark.parametrize("n", range(5, 13))
    def test_orthogonality(self, n):
        gens = build_generators(n)
        h = check_functional(n)
        for row in gens.rows():
            assert sum(a * b for a, b in zip(h, row)) % gens.q == 0

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_second_to_last_coordinate_value(self, n):
        # the last coordinate of v_{n-2} equals 2n - 7 while that value
        # is still the centered representative (true up to n = 7)
        gens = build_generators(n)
        assert gens.middle[-1][-1] == 2 * n - 7

    @pytest.mark.parametrize("n", range(5, 13))
    def test_middle_support_pattern(self, n):
        gens = build_generators(n)
        for k, row in enumerate(gens.middle, start=2):
            ones = [i + 1 for i, x in enumerate(row[:-1]) if x == 1]
            assert ones == list(range(k, n))
            zeros = [x for i, x in enumerate(row[:-1]) if i + 1 not in ones]
            assert all(x == 0 for x in zeros)


class TestGeneratorMatrix:
    def test_det_n5_is_minus_q(self, code5):
        assert determinant(code5.matrix) == -11

    @pytest.mark.parametrize("n", range(5, 13))
    def test_det_abs_equals_q(self, n):
        code = generator_matrix(n)
        assert abs(determinant(code.matrix)) == 2 * n + 1

    def test_row_order(self, code5):
        gens = code5.generators
        assert code5.matrix == (gens.v, gens.v1) + gens.middle + (gens.v_last,)

    def test_alpha(self, code5):
        assert code5.alpha == 10


class TestLatticeMembership:
    def test_scaled_units_inside(self, code5):
        for i in range(5):
            vec = tuple(11 if t == i else 0 for t in range(5))
            assert code5.lattice_membership(vec)

    def test_generator_sum_inside(self, code5):
        gens = code5.generators
        vec = tuple(a + b for a, b in zip(gens.v, gens.v1))
        assert code5.lattice_membership(vec)

    def test_unit_vector_outside(self, code5):
        assert not code5.lattice_membership((1, 0, 0, 0, 0))

    def test_dimension_checked(self, code5):
        with pytest.raises(ValueError):
            code5.lattice_membership((1, 2, 3))


class TestCodewordEnumeration:
    def test_rank_zero_is_zero_codeword(self, code5):
        assert code5.codeword_from_rank(0, 0).point == (0,) * 5

    def test_rank_one_steps_by_v(self, code5):
        assert code5.codeword_from_rank(0, 1).point == (0, 0, 0, 1, 8)

    def test_section_one_starts_at_v_last(self, code5):
        assert code5.codeword_from_rank(1, 0).point == (1, 0, 0, 0, 2)

    def test_out_of_range(self, code5):
        with pytest.raises(ValueError):
            code5.codeword_from_rank(11, 0)
        with pytest.raises(ValueError):
            code5.codeword_from_rank(0, 11**3)

    def test_exhaustive_bijection_n5(self, code5):
        points = set()
        for cw in code5.iter_codewords():
            assert code5.syndrome(cw.point) == 0
            assert cw.section == cw.point[0]
            assert code5.rank_of(cw.point) == (cw.section, cw.rank)
            points.add(cw.point)
        assert len(points) == 11**4

    @pytest.mark.parametrize("n", [6, 7])
    def test_sampled_roundtrip(self, n):
        code = generator_matrix(n)
        rnd = random.Random(n)
        for _ in range(2000):
            j = rnd.randrange(code.q)
            r = rnd.randrange(code.codewords_per_section)
            cw = code.codeword_from_rank(j, r)
            assert code.syndrome(cw.point) == 0
            assert code.rank_of(cw.point) == (j, r)

    def test_rank_of_rejects_non_codeword(self, code5):
        with pytest.raises(ValueError, match="not a codeword"):
            code5.rank_of((1, 0, 0, 0, 0))


class TestSyndromeDecode:
    def test_syndrome_examples(self, code5):
        assert code5.syndrome((0,) * 5) == 0
        assert code5.syndrome((0, 0, 1, 0, 0)) == 3
        assert code5.syndrome((0, 0, 1, 1, 8)) == 3

    def test_decode_codeword_fixed_point(self, code5):
        cw, err = code5.decode_single((0, 0, 0, 1, 8))
        assert cw.point == (0, 0, 0, 1, 8)
        assert err == (0,) * 5

    def test_decode_positive_unit(self, code5):
        cw, err = code5.decode_single((0, 0, 1, 1, 8))
        assert cw.point == (0, 0, 0, 1, 8)
        assert err == (0, 0, 1, 0, 0)

    def test_decode_negative_unit(self, code5):
        cw, err = code5.decode_single((0, 0, 0, 0, 10))
        assert cw.point == (0,) * 5
        assert err == (0, 0, 0, 0, -1)

    def test_decode_inverts_all_unit_errors(self, code5):
        # exhaustive in the error, random over codewords
        rnd = random.Random(99)
        errors = [(0,) * 5]
        for i in range(5):
            for sign in (1, -1):
                e = [0] * 5
                e[i] = sign
                errors.append(tuple(e))
        for _ in range(10**4):
            j = rnd.randrange(11)
            r = rnd.randrange(11**3)
            cw = code5.codeword_from_rank(j, r)
            for err in errors:
                noisy = tuple((c + e) % 11 for c, e in zip(cw.point, err))
                decoded, found = code5.decode_single(noisy)
                assert decoded.point == cw.point
                assert found == err


class TestTileAssign:
    def test_origin(self, code5):
        ta = code5.tile_assign((0,) * 5)
        assert ta.codeword.point == (0,) * 5
        assert ta.slot == 0

    def test_unit_neighbour(self, code5):
        ta = code5.tile_assign((1, 0, 0, 0, 0))
        assert ta.codeword.point == (0,) * 5
        assert ta.slot == 1

    def test_codeword_center(self, code5):
        ta = code5.tile_assign((0, 0, 0, 1, 8))
        assert ta.codeword.point == (0, 0, 0, 1, 8)
        assert ta.slot == 0

    def test_within_distance_one(self, code5):
        rnd = random.Random(4)
        for _ in range(500):
            z = tuple(rnd.randrange(11) for _ in range(5))
            ta = code5.tile_assign(z)
            assert lee_distance(z, ta.codeword.point, 11) <= 1


class TestDistanceCertificates:
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_min_distance_three(self, n):
        code = generator_matrix(n)
        scan = code.min_mannheim_distance()
        assert scan.exact
        assert scan.distance == 3
        assert mannheim_weight(tuple(x % code.q for x in scan.witness), code.q) == 3
        assert code.lattice_membership(scan.witness)

    def test_no_low_weight_codewords_n5(self, code5):
        assert code5.codewords_of_weight(1) == []
        assert code5.codewords_of_weight(2) == []

    def test_named_weight3_witness(self, code5):
        # 1 + 2 - 3 = 0, so (1, 1, -1, 0, 0) is a codeword of weight 3
        assert code5.lattice_membership((1, 1, -1, 0, 0))

    def test_weight_enumerator_is_exhaustive(self):
        # all weight-w vectors for a small case, counted independently
        vecs = list(weight_w_vectors(2, 2, 11))
        # supports {0}, {1} with magnitude 2 (x2 signs) plus {0,1} with
        # magnitudes (1,1) and 4 sign choices
        assert len(set(vecs)) == len(vecs) == 2 * 2 + 4

    def test_radius_cap_reports_lower_bound(self, code5):
        scan = code5.min_mannheim_distance(radius_cap=2)
        assert not scan.exact
        assert scan.distance == 3
        assert scan.witness is None

    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_section_subcode_distance_four(self, n):
        assert generator_matrix(n).section_subcode_distance() == 4

    def test_v_itself_has_weight_four(self, code5):
        point = tuple(x % 11 for x in code5.generators.v)
        assert mannheim_weight(point, 11) == 4


class TestPerfectPacking:
    def test_sampled_n5(self, code5):
        report = code5.verify_perfect_packing("sampled", samples=10**4, seed=1)
        assert report.ok
        assert report.hypercubes_checked == 10**4
        assert report.residue_coverage_ok

    @pytest.mark.parametrize("n", [6, 7])
    def test_sampled_larger_dimensions(self, n):
        report = generator_matrix(n).verify_perfect_packing(
            "sampled", samples=10**5, seed=2
        )
        assert report.ok

    def test_unknown_mode(self, code5):
        with pytest.raises(ValueError):
            code5.verify_perfect_packing("everything")

    def test_corrupted_generator_is_caught(self):
        gens = build_generators(5)
        middle = list(gens.middle)
        middle[0] = middle[0][:-1] + (middle[0][-1] + 1,)
        bad = PerfectLeeCode(replace(gens, middle=tuple(middle)))
        report = bad.verify_perfect_packing("exhaustive")
        assert not report.ok
        assert report.violation_count > 0
        assert any("covered more than once" in v for v in report.violations)

    def test_cardinality(self, code5):
        assert code5.n_codewords == 11**5 // 11
