from rest_framework import serializers

from oracles import boolfn, oracle_compiler
from oracles.dj_runner import Mode
from oracles.exceptions import TruthTableError

FLOAT_DIGITS = 12


def clean_float(value):
    # rounding keeps JSON byte-stable; + 0.0 turns -0.0 into 0.0
    return round(float(value), FLOAT_DIGITS) + 0.0


class RoundedFloatField(serializers.FloatField):

    def to_representation(self, value):
        return clean_float(value)


class EnumValueField(serializers.Field):

    def to_representation(self, value):
        return None if value is None else value.value


class TruthTableInputSerializer(serializers.Serializer):
    truth = serializers.RegexField(r'^[01]+$', error_messages={'invalid': 'Truth table must contain only 0 and 1.'})

    def validate_truth(self, value):
        try:
            return boolfn.parse_truth_table(value)
        except TruthTableError as exc:
            raise serializers.ValidationError(str(exc))


MIN_TOLERANCE = 1e-15
MAX_TOLERANCE = 0.5


class CommandOptionsSerializer(serializers.Serializer):
    seed = serializers.IntegerField(min_value=-(1 << 63), max_value=(1 << 64) - 1)
    tol = serializers.FloatField(min_value=MIN_TOLERANCE, max_value=MAX_TOLERANCE)


class RunOptionsSerializer(serializers.Serializer):
    mode = serializers.ChoiceField(choices=[mode.value for mode in Mode])
    shots = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate(self, attrs):
        if attrs.get('shots') and attrs['mode'] == Mode.CLASSICAL.value:
            raise serializers.ValidationError('--shots has no meaning in classical mode')
        return attrs


class GateCountsSerializer(serializers.Serializer):
    phase_flip = serializers.IntegerField()
    controlled_phase = serializers.IntegerField()
    multi_controlled_z = serializers.IntegerField()
    hadamard = serializers.IntegerField()


class SynthesisReportSerializer(serializers.Serializer):
    truth = serializers.CharField(source='truth_table.bits')
    n = serializers.IntegerField(source='truth_table.n')
    anf = serializers.SerializerMethodField()
    anf_text = serializers.CharField(source='anf.format')
    circuit = serializers.SerializerMethodField()
    gate_counts = GateCountsSerializer()
    global_sign = serializers.IntegerField()

    def get_anf(self, report):
        return [list(m) for m in report.anf.sorted_monomials()]

    def get_circuit(self, report):
        return oracle_compiler.emit_text(report.circuit)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        # the type only exists for three-qubit oracles
        if instance.truth_table.n == oracle_compiler.CONSTRUCTION_QUBITS:
            kind = instance.construction_type
            data['type'] = None if kind is None else kind.value
        return data


class DjOutcomeSerializer(serializers.Serializer):
    truth = serializers.SerializerMethodField()
    mode = EnumValueField()
    verdict = EnumValueField()
    zero_amplitude = RoundedFloatField()
    queries_used = serializers.IntegerField()
    final_probabilities = serializers.ListField(child=RoundedFloatField())
    global_sign = serializers.IntegerField()
    working_qubit_purity = RoundedFloatField(allow_null=True)

    def get_truth(self, outcome):
        return self.context.get('truth')

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if 'histogram' in self.context:
            data['histogram'] = {str(k): v for k, v in self.context['histogram'].items()}
        return data


class ClassicalDecisionSerializer(serializers.Serializer):
    truth = serializers.SerializerMethodField()
    mode = serializers.SerializerMethodField()
    verdict = EnumValueField()
    queries_used = serializers.IntegerField()
    queried_indices = serializers.ListField(child=serializers.IntegerField())

    def get_truth(self, decision):
        return self.context.get('truth')

    def get_mode(self, decision):
        return Mode.CLASSICAL.value


class ClassRecordSerializer(serializers.Serializer):
    truth = serializers.CharField()
    anf = serializers.SerializerMethodField()
    circuit = serializers.SerializerMethodField()
    type = serializers.SerializerMethodField()
    gate_counts = GateCountsSerializer(source='synthesis.gate_counts')
    zero_amplitude = RoundedFloatField()
    fully_product = serializers.BooleanField()

    def get_anf(self, record):
        return [list(m) for m in record.synthesis.anf.sorted_monomials()]

    def get_circuit(self, record):
        return oracle_compiler.emit_text(record.synthesis.circuit)

    def get_type(self, record):
        kind = record.synthesis.construction_type
        return None if kind is None else kind.value


class EnumerationReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    total_balanced = serializers.IntegerField()
    classes = serializers.IntegerField()
    type_counts = serializers.SerializerMethodField()
    phase_flip_distribution = serializers.SerializerMethodField()
    rows = ClassRecordSerializer(many=True)

    def get_type_counts(self, report):
        return {str(kind): count for kind, count in report.type_counts.items()}

    def get_phase_flip_distribution(self, report):
        return {
            str(kind): {str(flips): count for flips, count in tally.items()}
            for kind, tally in report.phase_flip_distribution.items()
        }


class SurveyRowSerializer(serializers.Serializer):
    truth = serializers.CharField()
    purities = serializers.ListField(source='profile.purities', child=RoundedFloatField())
    schmidt_ranks = serializers.ListField(source='profile.schmidt_ranks', child=serializers.IntegerField())
    fully_product = serializers.BooleanField(source='profile.fully_product')
    type = EnumValueField(source='construction_type')


class EntanglementSurveySerializer(serializers.Serializer):
    n = serializers.IntegerField()
    classes = serializers.SerializerMethodField()
    product = serializers.IntegerField(source='product_count')
    entangled = serializers.IntegerField(source='entangled_count')
    rows = SurveyRowSerializer(many=True)

    def get_classes(self, survey):
        return len(survey.rows)


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    checked = serializers.IntegerField()
    detail = serializers.CharField(allow_blank=True)


class VerificationSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    passed = serializers.BooleanField()
    checks = CheckResultSerializer(many=True)
