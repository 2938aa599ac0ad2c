"""
Grey-level pictures of spacetime diagrams: one block row per step, the
initial configuration on top, equal names in equal greys.
"""
import hashlib
import io
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from django.conf import settings
from PIL import Image

from automata.analysis import canonical_rows

logger = logging.getLogger(__name__)

RAMP = 'ramp'
HASH = 'hash'
PALETTES = (RAMP, HASH)

PGM = 'pgm'
PNG = 'png'
FORMATS = (PGM, PNG)


@dataclass(frozen=True)
class RenderSpec:
    palette: str = RAMP
    cell_size: Optional[int] = None
    format: str = PGM

    @property
    def scale(self):
        return self.cell_size or settings.NCA_RENDER_CELL_SIZE


def _hash_ranks(rows):
    names, inverse = np.unique(rows, return_inverse=True)
    order = sorted(range(len(names)), key=lambda i: hashlib.blake2b(b'%d' % int(names[i]), digest_size=8).digest())
    rank = np.empty(len(names), dtype=np.int64)
    rank[order] = np.arange(len(names))
    return rank[inverse.reshape(-1)].reshape(rows.shape)


def grey_levels(rows, palette=RAMP):
    """
    uint8 grey per cell. Ranks (first occurrence, or digest order for the
    hash palette) are spread over 0..255, which keeps distinct names distinct
    up to 256 names; past that, greys are reused modulo 256.
    """
    if palette not in PALETTES:
        raise ValueError('unknown palette %r' % palette)

    rows = np.asarray(rows)
    ranks = canonical_rows(rows) if palette == RAMP else _hash_ranks(rows)
    count = int(ranks.max()) + 1

    if count > 256:
        logger.warning('%s distinct names for 256 grey levels; reusing levels', count)
        return (ranks % 256).astype(np.uint8)

    return (ranks * 255 // max(count - 1, 1)).astype(np.uint8)


def render(diagram, spec=None):
    spec = spec or RenderSpec()
    if spec.format not in FORMATS:
        raise ValueError('unsupported format %r' % spec.format)

    if spec.scale < 1:
        raise ValueError('cell size must be positive')

    levels = grey_levels(diagram.rows, spec.palette)
    image = np.repeat(np.repeat(levels, spec.scale, axis=0), spec.scale, axis=1)

    if spec.format == PGM:
        height, width = image.shape
        return b'P5 %d %d 255\n' % (width, height) + image.tobytes()

    buffer = io.BytesIO()
    Image.fromarray(image).save(buffer, format='PNG')
    return buffer.getvalue()


def name_matrix(diagram):
    """The names themselves, right-aligned, one line per step."""
    cell = len(str(int(diagram.rows.max())))
    return '\n'.join(' '.join(str(int(x)).rjust(cell) for x in row) for row in diagram.rows)
