import numpy as np
from django.db import models
from django.utils import timezone

from automata.engine import Diagram


class SpacetimeRun(models.Model):
    rule_id = models.CharField(max_length=250)
    diameter = models.IntegerField(default=3)
    # rule numbers outgrow 64 bits from diameter 5 on
    rule_number = models.TextField(null=True, blank=True)
    init_spec = models.CharField(max_length=250)
    seed = models.BigIntegerField(null=True, blank=True)
    width = models.IntegerField()
    steps = models.IntegerField()
    fresh_counter = models.BigIntegerField()
    rows = models.JSONField()
    created_at = models.DateTimeField(default=timezone.now)

    def __str__(self):
        return '%s (%s)' % (self.rule_id, self.init_spec)

    @property
    def diagram(self):
        return Diagram(
            rows=np.array(self.rows, dtype=np.int64),
            rule_id=self.rule_id,
            fresh_counter=self.fresh_counter,
            seed=self.seed,
        )

    @staticmethod
    def register_run(diagram, init_spec, rule_number=None, diameter=3):
        if not init_spec:
            return None, 'Missing init spec'

        run = SpacetimeRun.objects.create(
            rule_id=diagram.rule_id,
            diameter=diameter,
            rule_number=None if rule_number is None else str(rule_number),
            init_spec=init_spec,
            seed=diagram.seed,
            width=diagram.width,
            steps=diagram.steps,
            fresh_counter=diagram.fresh_counter,
            rows=diagram.rows.tolist(),
        )

        return run, 'ok'
