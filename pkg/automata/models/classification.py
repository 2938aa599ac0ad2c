from django.db import models
from django.utils import timezone


class Classification(models.Model):
    init_spec = models.CharField(max_length=250)
    width = models.IntegerField()
    steps = models.IntegerField()
    class_count = models.IntegerField()
    created_at = models.DateTimeField(default=timezone.now)

    def __str__(self):
        return '%s, T=%s: %s classes' % (self.init_spec, self.steps, self.class_count)

    def get_classes(self):
        return RuleClass.objects.filter(
            classification=self
        ).order_by('label')

    @staticmethod
    def register_classification(init_spec, width, steps, classes):
        if not classes:
            return None, 'No classes to save'

        classification = Classification.objects.create(
            init_spec=init_spec,
            width=width,
            steps=steps,
            class_count=len(classes),
        )
        RuleClass.objects.bulk_create([
            RuleClass(
                classification=classification,
                label=item.label,
                members=list(item.members),
                size=item.size,
            )
            for item in classes
        ])

        return classification, 'ok'


class RuleClass(models.Model):
    classification = models.ForeignKey(Classification, on_delete=models.CASCADE, related_name='classes')
    label = models.IntegerField()
    members = models.JSONField()
    size = models.IntegerField()

    class Meta:
        unique_together = ('classification', 'label', )

    def __str__(self):
        return 'class %s (%s rules)' % (self.label, self.size)
