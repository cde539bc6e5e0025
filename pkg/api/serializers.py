from numbers import Number

from rest_framework import serializers

from nullity_engine.classification import BoundaryRegularity, SetFlag
from nullity_engine.exceptions import NullityEngineError
from nullity_engine.fractal_sets import CantorFamily, CantorSpec, IntervalSet
from nullity_engine.services import CLASSIFY_KINDS
from nullity_engine.utils.numeric import to_fraction


class NumberField(serializers.Field):
    """
    A real number. Integers and numeric strings such as ``"1/3"`` stay exact;
    JSON floats stay floats.
    """

    default_error_messages = {'invalid': 'A number or a numeric string is required.'}

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail('invalid')
        if isinstance(data, float):
            return data
        if isinstance(data, (int, str)):
            try:
                return to_fraction(data)
            except (ValueError, ZeroDivisionError):
                self.fail('invalid')
        if isinstance(data, Number):
            return float(data)
        self.fail('invalid')

    def to_representation(self, value):
        return value if isinstance(value, (int, float)) else str(value)


class StrictSerializer(serializers.Serializer):
    """Serializer that rejects fields it does not declare."""

    def to_internal_value(self, data):
        if hasattr(data, 'keys'):
            unknown = sorted(set(data.keys()) - set(self.fields))
            if unknown:
                raise serializers.ValidationError({key: ['Unknown field.'] for key in unknown})
        return super().to_internal_value(data)


def _exactly_one(attrs, first, second):
    if (first in attrs) == (second in attrs):
        raise serializers.ValidationError(f"Give exactly one of '{first}' and '{second}'.")


class SobolevIndexSerializer(StrictSerializer):
    s = NumberField(help_text="Regularity s")
    p = NumberField(help_text="Integrability p, 1 < p < infinity")


class ClassifySerializer(SobolevIndexSerializer):
    REQUIRED = {
        'cantor': ('family',),
        'dimension': ('d',),
        'boundary': ('regularity',),
        'basic': ('flags',),
    }

    kind = serializers.ChoiceField(choices=CLASSIFY_KINDS)
    n = serializers.IntegerField(min_value=1, default=1)
    family = serializers.CharField(required=False)
    params = serializers.DictField(required=False, help_text="Family parameters")
    d = NumberField(required=False, help_text="Hausdorff dimension")
    regularity = serializers.ChoiceField(choices=[c.value for c in BoundaryRegularity], required=False)
    alpha = NumberField(required=False, help_text="Hölder exponent for C0alpha boundaries")
    flags = serializers.ListField(
        child=serializers.ChoiceField(choices=[f.value for f in SetFlag]), required=False
    )

    def validate(self, attrs):
        missing = [name for name in self.REQUIRED[attrs['kind']] if name not in attrs]
        if missing:
            raise serializers.ValidationError(
                f"Query kind '{attrs['kind']}' needs {', '.join(missing)}."
            )
        return attrs


class HausdorffThresholdSerializer(StrictSerializer):
    d = NumberField()
    n = serializers.IntegerField(min_value=1)
    p = NumberField()


class ProductBoundsSerializer(StrictSerializer):
    s1 = NumberField()
    s2 = NumberField()
    n1 = serializers.IntegerField(min_value=1)
    n2 = serializers.IntegerField(min_value=1)
    p = NumberField()
    positive_measure = serializers.BooleanField(default=False)


class InnerBallSerializer(StrictSerializer):
    center = serializers.JSONField()
    radius = NumberField()


class CloudSerializer(StrictSerializer):
    domain = serializers.ListField(child=serializers.JSONField(), min_length=2, max_length=2)
    centers = serializers.ListField(child=serializers.JSONField(), default=list)
    radii = serializers.ListField(child=NumberField(), default=list)
    multiplicities = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    inner_ball = InnerBallSerializer()
    dense_centers = serializers.BooleanField(default=False)


class FatCheeseSerializer(StrictSerializer):
    alpha = NumberField()
    beta = NumberField()
    depth = serializers.IntegerField(min_value=1, max_value=64)


class CheeseConfigSerializer(SobolevIndexSerializer):
    cloud = CloudSerializer(required=False)
    fat = FatCheeseSerializer(required=False)
    constants = serializers.DictField(child=NumberField(), default=dict)
    removal_trials = serializers.IntegerField(min_value=0, default=0)
    removals = serializers.IntegerField(min_value=1, default=5)
    seed = serializers.IntegerField(required=False, help_text="Seed for the removal check")

    def validate(self, attrs):
        _exactly_one(attrs, 'cloud', 'fat')
        return attrs


class CapComparisonSerializer(StrictSerializer):
    epsilons = serializers.ListField(child=NumberField(), required=False, min_length=1)
    include_grid = serializers.BooleanField(default=False)
    L = serializers.FloatField(required=False, min_value=1)
    N = serializers.IntegerField(required=False, min_value=16)


class CurveSourceSerializer(StrictSerializer):
    d = NumberField(required=False)
    family = serializers.CharField(required=False)
    params = serializers.DictField(required=False)

    def validate(self, attrs):
        _exactly_one(attrs, 'd', 'family')
        return attrs


class ThresholdCurveSerializer(StrictSerializer):
    source = CurveSourceSerializer()
    n = serializers.IntegerField(min_value=1, default=1)
    r_values = serializers.ListField(child=NumberField(), min_length=1)


class ZooConfigSerializer(StrictSerializer):
    table = serializers.CharField(required=False)
    filters = serializers.DictField(
        child=serializers.ListField(child=serializers.CharField()), required=False
    )


class NormSweepConfigSerializer(StrictSerializer):
    alpha = NumberField()
    beta = NumberField()
    s_values = serializers.ListField(child=NumberField(), min_length=1)
    depths = serializers.ListField(
        child=serializers.IntegerField(min_value=0, max_value=32), min_length=1
    )
    gap_depth = serializers.IntegerField(min_value=2, required=False)
    cutoff = serializers.FloatField(min_value=1, required=False)


class BallMaskSerializer(StrictSerializer):
    center = NumberField()
    radius = NumberField()


class MaskSerializer(StrictSerializer):
    intervals = serializers.ListField(
        child=serializers.ListField(child=NumberField(), min_length=2, max_length=2),
        required=False, min_length=1,
    )
    ball = BallMaskSerializer(required=False)

    def validate(self, attrs):
        _exactly_one(attrs, 'intervals', 'ball')
        return attrs


class CapacityConfigSerializer(StrictSerializer):
    L = serializers.FloatField(required=False)
    N = serializers.IntegerField(required=False, min_value=16)
    s = NumberField()
    mask = MaskSerializer()
    variant = serializers.ChoiceField(choices=['cap', 'Cap'], default='cap')
    tol = serializers.FloatField(required=False)
    max_iter = serializers.IntegerField(required=False, min_value=1)
    padding = serializers.IntegerField(required=False, min_value=0)
    refine = serializers.BooleanField(default=False)


class ScalingConfigSerializer(StrictSerializer):
    s = NumberField()
    radii = serializers.ListField(child=NumberField(), required=False)
    half_width = serializers.FloatField(required=False)
    points = serializers.IntegerField(required=False, min_value=16)
    padding = serializers.IntegerField(required=False, min_value=0)
    ab_ratio = serializers.BooleanField(default=False)


class IntervalSetField(serializers.Field):
    """
    An ``IntervalSet`` in its JSON form: an array of ``[[num, den], [num, den]]``
    intervals, or ``{"intervals": [["0.25", "0.5"], ...], "precision_bits": 128}``.
    """

    default_error_messages = {'invalid': 'Not a valid interval set: {detail}'}

    def to_internal_value(self, data):
        try:
            return IntervalSet.from_json(data)
        except ValueError as e:
            self.fail('invalid', detail=str(e))

    def to_representation(self, instance):
        return instance.to_json()


class CantorSpecSerializer(StrictSerializer):
    """A ``CantorSpec`` as ``{family, params, n}``; validates to a built spec."""

    family = serializers.ChoiceField(choices=[family.value for family in CantorFamily])
    params = serializers.DictField(default=dict, help_text="Family parameters")
    n = serializers.IntegerField(min_value=1, default=1)

    def validate(self, attrs):
        try:
            return CantorSpec.from_dict(attrs)
        except (NullityEngineError, TypeError, ValueError) as e:
            raise serializers.ValidationError(str(e))

    def to_representation(self, instance):
        return instance.to_dict()


class LevelSetConfigSerializer(StrictSerializer):
    cantor = CantorSpecSerializer()
    depth = serializers.IntegerField(min_value=0, max_value=32)


class SpectrumConfigSerializer(StrictSerializer):
    cantor = CantorSpecSerializer(required=False)
    depth = serializers.IntegerField(min_value=0, max_value=32, required=False)
    intervals = IntervalSetField(required=False)
    xi = serializers.ListField(child=NumberField(), required=False, min_length=1)
    xi_max = serializers.FloatField(min_value=0, required=False)
    points = serializers.IntegerField(min_value=2, max_value=2**16, default=257)

    def validate(self, attrs):
        _exactly_one(attrs, 'cantor', 'intervals')
        _exactly_one(attrs, 'xi', 'xi_max')
        if 'cantor' in attrs and 'depth' not in attrs:
            raise serializers.ValidationError("A Cantor source needs 'depth'.")
        return attrs


CONFIG_SERIALIZERS = {
    'zoo': ZooConfigSerializer,
    'norm-sweep': NormSweepConfigSerializer,
    'capacity': CapacityConfigSerializer,
    'scaling': ScalingConfigSerializer,
    'cheese': CheeseConfigSerializer,
    'appendix-b': CapComparisonSerializer,
    'cap-comparison': CapComparisonSerializer,
    'threshold-curve': ThresholdCurveSerializer,
    'classify': ClassifySerializer,
    'level-set': LevelSetConfigSerializer,
    'spectrum': SpectrumConfigSerializer,
}
