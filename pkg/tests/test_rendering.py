"""
Tests for grey-level rendering and the name matrix.

Run with: python manage.py test tests.test_rendering -v2
"""
import numpy as np
from django.test import SimpleTestCase, override_settings

from automata.engine import Diagram
from automata.rendering import HASH, PGM, PNG, RenderSpec, grey_levels, name_matrix, render


def _diagram(rows):
    rows = np.array(rows)
    return Diagram(rows, rule_id='test', fresh_counter=int(rows.max()) + 1)


class RenderTests(SimpleTestCase):

    def test_single_cell(self):
        image = render(_diagram([[0]]), RenderSpec(cell_size=1))
        self.assertEqual(image, b'P5 1 1 255\n\x00')

    def test_golden_pgm(self):
        image = render(_diagram([[4, 4, 1], [1, 8, 4]]), RenderSpec(cell_size=2))
        top = b'\x00\x00\x00\x00\x7f\x7f'
        bottom = b'\x7f\x7f\xff\xff\x00\x00'
        self.assertEqual(image, b'P5 6 4 255\n' + top + top + bottom + bottom)

    def test_two_names_two_levels(self):
        levels = grey_levels(np.array([[5, 9], [9, 5]]))
        self.assertEqual(sorted(set(levels.ravel().tolist())), [0, 255])

    def test_hash_palette_is_injective(self):
        rows = np.array([[3, 17, 3], [40, 17, 2]])
        levels = grey_levels(rows, HASH)
        self.assertEqual(len(set(levels.ravel().tolist())), 4)
        self.assertEqual(levels[0, 0], levels[0, 2])
        self.assertEqual(levels[0, 1], levels[1, 1])

    def test_hash_palette_ignores_layout(self):
        first = grey_levels(np.array([[3, 17, 40]]), HASH)
        second = grey_levels(np.array([[40, 3, 17]]), HASH)
        self.assertEqual(first[0, 0], second[0, 1])
        self.assertEqual(first[0, 2], second[0, 0])

    def test_levels_reused_past_256_names(self):
        rows = np.arange(300).reshape(3, 100)
        with self.assertLogs('automata.rendering', level='WARNING'):
            levels = grey_levels(rows)
        self.assertEqual(levels[0, 0], levels[2, 56])

    def test_png(self):
        image = render(_diagram([[0, 1], [1, 0]]), RenderSpec(format=PNG))
        self.assertTrue(image.startswith(b'\x89PNG'))

    def test_deterministic(self):
        diagram = _diagram([[0, 1, 2], [2, 2, 0]])
        self.assertEqual(render(diagram), render(diagram))

    @override_settings(NCA_RENDER_CELL_SIZE=3)
    def test_default_cell_size(self):
        image = render(_diagram([[0, 1]]), RenderSpec(format=PGM))
        self.assertTrue(image.startswith(b'P5 6 3 255\n'))
        self.assertEqual(len(image), len(b'P5 6 3 255\n') + 18)

    def test_unsupported(self):
        with self.assertRaises(ValueError):
            render(_diagram([[0]]), RenderSpec(format='gif'))

        with self.assertRaises(ValueError):
            grey_levels(np.array([[0]]), 'rainbow')


class NameMatrixTests(SimpleTestCase):

    def test_right_aligned(self):
        self.assertEqual(name_matrix(_diagram([[0, 10], [3, 0]])), ' 0 10\n 3  0')
