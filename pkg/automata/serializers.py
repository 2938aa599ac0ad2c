import json

import numpy as np
from rest_framework import serializers

from automata.engine import Diagram


class DiagramParseError(ValueError):
    def __init__(self, message, lineno=None, colno=None):
        self.lineno = lineno
        self.colno = colno

        if lineno is not None:
            message = 'line %s column %s: %s' % (lineno, colno, message)

        super().__init__(message)


class DiagramSerializer(serializers.Serializer):
    width = serializers.IntegerField(min_value=1)
    rule_id = serializers.CharField(allow_blank=True, trim_whitespace=False)
    seed = serializers.IntegerField(required=False, allow_null=True)
    fresh_counter = serializers.IntegerField(min_value=0)
    rows = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False),
        allow_empty=False,
    )

    def validate(self, data):
        rows = data.get('rows')
        width = data.get('width')

        for i, row in enumerate(rows):
            if len(row) != width:
                raise serializers.ValidationError('row %s has %s cells, expected %s' % (i, len(row), width))

        if data.get('fresh_counter') <= max(max(row) for row in rows):
            raise serializers.ValidationError('fresh_counter must be above every name in the diagram')

        return data

    def to_representation(self, instance):
        data = super().to_representation(instance)

        if data.get('seed') is None:
            data.pop('seed', None)

        return data

    def create(self, validated_data):
        return Diagram(
            rows=np.array(validated_data.get('rows'), dtype=np.int64),
            rule_id=validated_data.get('rule_id'),
            fresh_counter=validated_data.get('fresh_counter'),
            seed=validated_data.get('seed'),
        )


def dump(diagram):
    return json.dumps(DiagramSerializer(diagram).data)


def load(text):
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramParseError(e.msg, e.lineno, e.colno) from e

    if not isinstance(payload, dict):
        raise DiagramParseError('expected a JSON object')

    serializer = DiagramSerializer(data=payload)

    if not serializer.is_valid():
        raise DiagramParseError('invalid diagram: %s' % json.dumps(serializer.errors))

    return serializer.save()
