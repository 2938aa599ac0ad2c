"""
Tests for the stored records: spacetime runs, classifications and
verification results.

Run with: python manage.py test tests.test_models -v2
"""
from django.test import TestCase

from automata.analysis import BehaviourClass
from automata.engine import make_init, run
from automata.models.classification import Classification
from automata.models.run import SpacetimeRun
from automata.models.verification import Verification
from automata.rules import decode_rule
from automata.suites import SuiteResult


class SpacetimeRunTests(TestCase):

    def test_register_and_restore(self):
        diagram = run(make_init('random_bits', n=8, seed=9), decode_rule(61, 3), 4)
        saved, msg = SpacetimeRun.register_run(diagram, 'random:8', rule_number=61)

        self.assertEqual(msg, 'ok')
        self.assertEqual(SpacetimeRun.objects.get(pk=saved.pk).diagram, diagram)
        self.assertEqual(str(saved), '61/d3 (random:8)')

    def test_large_rule_numbers(self):
        number = 10 ** 25
        diagram = run(make_init('uniform', n=6), decode_rule(number, 5), 1)
        saved, _ = SpacetimeRun.register_run(diagram, 'uniform:6', rule_number=number, diameter=5)
        self.assertEqual(int(SpacetimeRun.objects.get(pk=saved.pk).rule_number), number)

    def test_missing_init(self):
        diagram = run(make_init('uniform', n=4), decode_rule(0, 3), 1)
        saved, msg = SpacetimeRun.register_run(diagram, '')
        self.assertIsNone(saved)
        self.assertEqual(msg, 'Missing init spec')


class ClassificationTests(TestCase):

    def test_register(self):
        classes = [
            BehaviourClass(label=0, members=(0, 1, 2)),
            BehaviourClass(label=5, members=(5, )),
        ]
        saved, msg = Classification.register_classification('uniform:12', 12, 6, classes)

        self.assertEqual(msg, 'ok')
        self.assertEqual(saved.class_count, 2)
        self.assertEqual([(c.label, c.members, c.size) for c in saved.get_classes()], [(0, [0, 1, 2], 3), (5, [5], 1)])

    def test_nothing_to_save(self):
        saved, msg = Classification.register_classification('uniform:12', 12, 6, [])
        self.assertIsNone(saved)
        self.assertFalse(Classification.objects.exists())


class VerificationTests(TestCase):

    def test_register(self):
        result = SuiteResult(suite='table1')
        result.check(True, 'space size d=2: 6')
        result.check(False, 'space size d=3: 215')

        saved, _ = Verification.register_result(result)
        saved.refresh_from_db()

        self.assertFalse(saved.passed)
        self.assertEqual(saved.details, ['space size d=2: 6', 'FAIL space size d=3: 215'])
        self.assertEqual(str(saved), 'table1: FAIL')
