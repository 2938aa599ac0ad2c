import django.db.models.deletion
import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Classification',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('init_spec', models.CharField(max_length=250)),
                ('width', models.IntegerField()),
                ('steps', models.IntegerField()),
                ('class_count', models.IntegerField()),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
            ],
        ),
        migrations.CreateModel(
            name='SpacetimeRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('rule_id', models.CharField(max_length=250)),
                ('diameter', models.IntegerField(default=3)),
                ('rule_number', models.TextField(blank=True, null=True)),
                ('init_spec', models.CharField(max_length=250)),
                ('seed', models.BigIntegerField(blank=True, null=True)),
                ('width', models.IntegerField()),
                ('steps', models.IntegerField()),
                ('fresh_counter', models.BigIntegerField()),
                ('rows', models.JSONField()),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
            ],
        ),
        migrations.CreateModel(
            name='Verification',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite', models.CharField(max_length=50)),
                ('passed', models.BooleanField(default=False)),
                ('details', models.JSONField(default=list)),
                ('duration', models.FloatField(default=0)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
            ],
        ),
        migrations.CreateModel(
            name='RuleClass',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('label', models.IntegerField()),
                ('members', models.JSONField()),
                ('size', models.IntegerField()),
                ('classification', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='classes', to='automata.classification')),
            ],
            options={
                'unique_together': {('classification', 'label')},
            },
        ),
    ]
