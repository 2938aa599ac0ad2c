"""
Tests for the ECA bridges: direct simulation by elementary nominal rules,
the period-4 coding with its diameter-12 rule and the period-3 coding for
ECA 110.

Run with: python manage.py test tests.test_simulation -v2
"""
import numpy as np
from django.test import SimpleTestCase

from automata.engine import EcaRule, random_bits, run, run_eca
from automata.rules import Reaction, reaction_for
from automata.simulation import (
    BODY_CACHE_SIZE, D9, D12, DIRECT, build_rule9_110, build_rule12, compare_simulation, decode, decode12,
    directly_simulable, enca_simulators, encode12, encode9, find_trident, verify_simulation, well_formed
)


def _copied_name(rule, context):
    reaction = reaction_for(rule, context)
    if reaction.is_fresh:
        return None
    return list(dict.fromkeys(context))[reaction.index]


class DirectSimulationTests(SimpleTestCase):

    def test_exhaustive_scan(self):
        found = {n for n in range(256) if directly_simulable(EcaRule(n))}
        self.assertEqual(found, {142, 150, 170, 178, 204, 212, 232, 240})

    def test_rule_110_is_not_direct(self):
        self.assertFalse(directly_simulable(EcaRule(110)))

        with self.assertRaises(ValueError):
            enca_simulators(EcaRule(110))

    def test_simulators(self):
        self.assertEqual(enca_simulators(EcaRule(142)), {52, 53, 54, 55})
        self.assertEqual(enca_simulators(EcaRule(240)), {0, 1, 2, 3})
        self.assertEqual(enca_simulators(EcaRule(204)), {16, 17, 18, 19})

    def test_every_simulator_matches(self):
        results = compare_simulation(EcaRule(142), 32, 32, 1, DIRECT)
        self.assertEqual([r.simulator for r in results], ['enca52', 'enca53', 'enca54', 'enca55'])
        self.assertTrue(all(r.matched for r in results))

    def test_direct_verification(self):
        for number in (150, 232):
            self.assertTrue(verify_simulation(EcaRule(number), 24, 24, 2, DIRECT))


class CodingTests(SimpleTestCase):

    def test_period_four_blocks(self):
        coded = encode12([1, 0])
        self.assertEqual(coded.cells.cells.tolist(), [1, 0, 1, 2, 0, 0, 1, 3])
        self.assertEqual(coded.cells.fresh_counter, 4)
        self.assertEqual(coded.bit_columns, (0, 4))

    def test_markers_are_distinct(self):
        cells = encode12([1, 0, 1, 1]).cells.cells
        self.assertEqual(len(cells), 16)
        markers = [x for x in cells.tolist() if x not in (0, 1)]
        self.assertEqual(len(set(markers)), 4)

    def test_period_three_blocks(self):
        self.assertEqual(encode9([0, 1, 1]).cells.cells.tolist(), [0, 0, 2, 1, 0, 3, 1, 0, 4])

    def test_decode_single_row(self):
        bits = [1, 1, 0, 1, 0]
        self.assertEqual(decode(encode12(bits).cells.cells, 4)[0].tolist(), bits)
        self.assertEqual(decode(encode9(bits).cells.cells, 3)[0].tolist(), bits)

    def test_well_formed(self):
        row = encode12([1, 0, 1]).cells.cells
        self.assertTrue(well_formed(row, 4))
        self.assertFalse(well_formed(row[:-1], 4))

        broken = row.copy()
        broken[7] = broken[3]
        self.assertFalse(well_formed(broken, 4))

    def test_malformed_row_rejected(self):
        with self.assertRaisesMessage(ValueError, 'coding invariant violated'):
            decode([[1, 0, 1, 1, 0, 0, 1, 2]], 4)

    def test_bits_only(self):
        with self.assertRaises(ValueError):
            encode12([0, 2])


class TridentTests(SimpleTestCase):

    def test_positions(self):
        pattern = (0, 1, 0, 2, 0, 1, 0, 3, 1, 1, 0, 4)
        self.assertEqual(find_trident(pattern, 4, (3, 2, 1, 0)), 3)
        self.assertIsNone(find_trident((0, 0, 0, 0, 0, 0, 0, 0, 0), 3, (2, 1, 0)))


class Rule12Tests(SimpleTestCase):

    def setUp(self):
        self.rule = build_rule12(EcaRule(110))

    def test_bit_case(self):
        # bits (1, 1, 0) around the updated cell; f110(1, 1, 0) = 1
        context = (1, 0, 1, 5, 1, 0, 1, 6, 0, 0, 1, 7)
        self.assertEqual(_copied_name(self.rule, context), 1)

    def test_bit_case_zero(self):
        # f110(1, 1, 1) = 0
        context = (1, 0, 1, 5, 1, 0, 1, 6, 1, 0, 1, 7)
        self.assertEqual(_copied_name(self.rule, context), 0)

    def test_zero_marker_kept(self):
        context = (0, 1, 5, 1, 0, 1, 6, 0, 0, 1, 7, 1)
        self.assertEqual(_copied_name(self.rule, context), 0)

    def test_one_marker_kept(self):
        context = (1, 5, 0, 0, 1, 6, 1, 0, 1, 7, 0, 0)
        self.assertEqual(_copied_name(self.rule, context), 1)

    def test_marker_column_refreshed(self):
        context = (5, 1, 0, 1, 6, 0, 0, 1, 7, 1, 0, 1)
        self.assertEqual(reaction_for(self.rule, context), Reaction.fresh())

    def test_shape(self):
        self.assertEqual((self.rule.diameter, self.rule.anchor), (12, 4))
        self.assertTrue(self.rule.is_procedural)
        self.assertEqual(self.rule.label, 'eca110/d12')

    def test_every_eca(self):
        for number in range(256):
            results = compare_simulation(EcaRule(number), 8, 16, 3, D12)
            self.assertTrue(results[0].matched, number)

    def test_body_cache_is_bounded(self):
        self.assertEqual(self.rule.body.cache_info().maxsize, BODY_CACHE_SIZE)
        self.assertEqual(build_rule9_110().body.cache_info().maxsize, BODY_CACHE_SIZE)

    def test_coding_preserved(self):
        bits = random_bits(6, 4)
        diagram = run(encode12(bits).cells, build_rule12(EcaRule(54)), 10)
        self.assertTrue(all(well_formed(row, 4) for row in diagram.rows))
        np.testing.assert_array_equal(decode12(diagram), run_eca(bits, EcaRule(54), 10))


class Rule9Tests(SimpleTestCase):

    def setUp(self):
        self.rule = build_rule9_110()

    def test_one_copied_from_a_bit(self):
        # f110(0, 1, 1) = 1
        context = (0, 0, 5, 1, 0, 6, 1, 0, 7)
        self.assertEqual(_copied_name(self.rule, context), 1)

    def test_zero_from_marker(self):
        context = (0, 0, 5, 0, 0, 6, 0, 0, 7)
        self.assertEqual(_copied_name(self.rule, context), 0)

    def test_all_ones_give_zero(self):
        context = (1, 0, 5, 1, 0, 6, 1, 0, 7)
        self.assertEqual(_copied_name(self.rule, context), 0)

    def test_marker_column_refreshed(self):
        context = (5, 1, 0, 6, 0, 0, 7, 1, 0)
        self.assertEqual(reaction_for(self.rule, context), Reaction.fresh())

    def test_matches_rule_110(self):
        for seed in (1, 2, 3):
            self.assertTrue(verify_simulation(EcaRule(110), 16, 32, seed, D9))

    def test_only_rule_110(self):
        with self.assertRaises(ValueError):
            compare_simulation(EcaRule(54), 16, 8, 1, D9)


class PreconditionTests(SimpleTestCase):

    def test_minimum_width(self):
        with self.assertRaises(ValueError):
            compare_simulation(EcaRule(110), 2, 4, 1, D12)

    def test_unknown_variant(self):
        with self.assertRaises(ValueError):
            compare_simulation(EcaRule(110), 8, 4, 1, 'd7')

    def test_result_fields(self):
        result = compare_simulation(EcaRule(110), 8, 4, 9, D12)[0]
        self.assertEqual((result.eca, result.variant, result.width_bits, result.steps, result.seed),
                         (110, D12, 8, 4, 9))
        self.assertIsNone(result.divergence)
