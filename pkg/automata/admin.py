from django.contrib import admin

from automata.models.classification import Classification, RuleClass
from automata.models.run import SpacetimeRun
from automata.models.verification import Verification


class SpacetimeRunAdmin(admin.ModelAdmin):
    list_display = (
        'rule_id',
        'init_spec',
        'width',
        'steps',
        'seed',
        'created_at'
    )
    search_fields = (
        'rule_id',
    )
    exclude = (
        'rows',
    )


class RuleClassInline(admin.TabularInline):
    model = RuleClass
    extra = 0


class ClassificationAdmin(admin.ModelAdmin):
    list_display = (
        'init_spec',
        'width',
        'steps',
        'class_count',
        'created_at'
    )
    inlines = (
        RuleClassInline,
    )


class VerificationAdmin(admin.ModelAdmin):
    list_display = (
        'suite',
        'passed',
        'duration',
        'created_at'
    )
    list_filter = (
        'suite',
        'passed',
    )


admin.site.register(SpacetimeRun, SpacetimeRunAdmin)
admin.site.register(Classification, ClassificationAdmin)
admin.site.register(Verification, VerificationAdmin)
