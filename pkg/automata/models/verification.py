from django.db import models
from django.utils import timezone


class Verification(models.Model):
    suite = models.CharField(max_length=50)
    passed = models.BooleanField(default=False)
    details = models.JSONField(default=list)
    duration = models.FloatField(default=0)
    created_at = models.DateTimeField(default=timezone.now)

    def __str__(self):
        return '%s: %s' % (self.suite, 'pass' if self.passed else 'FAIL')

    @staticmethod
    def register_result(result):
        verification = Verification.objects.create(
            suite=result.suite,
            passed=result.passed,
            details=list(result.details),
            duration=result.duration,
        )

        return verification, 'ok'
