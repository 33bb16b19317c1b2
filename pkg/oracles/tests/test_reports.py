from unittest import mock

from django.test import SimpleTestCase

from oracles import oracle_compiler, reports
from oracles.oracle_compiler import Circuit


class EnumerationReportTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = reports.build_enumeration_report(3)

    def test_counts(self):
        self.assertEqual(self.report.total_balanced, 70)
        self.assertEqual(self.report.classes, 35)
        self.assertEqual(self.report.type_counts, {1: 7, 2: 12, 3: 12, 4: 4})
        self.assertEqual(sum(self.report.type_counts.values()), self.report.classes)

    def test_rows_are_canonical_and_ascending(self):
        truths = [row.truth for row in self.report.rows]
        self.assertEqual(truths, sorted(truths))
        self.assertTrue(all(truth[0] == '0' for truth in truths))

    def test_phase_flip_distribution_matches_type_counts(self):
        for kind, tally in self.report.phase_flip_distribution.items():
            self.assertEqual(sum(tally.values()), self.report.type_counts[kind])

    def test_balanced_rows_have_zero_amplitude(self):
        self.assertTrue(all(abs(row.zero_amplitude) <= 1e-9 for row in self.report.rows))

    def test_two_qubit_report_has_no_types(self):
        report = reports.build_enumeration_report(2)
        self.assertEqual((report.total_balanced, report.classes), (6, 3))
        self.assertEqual(report.type_counts, {})
        self.assertTrue(all(row.synthesis.construction_type is None for row in report.rows))


class EntanglementSurveyTest(SimpleTestCase):

    def test_three_qubits(self):
        survey = reports.survey_entanglement(3)
        self.assertEqual((survey.product_count, survey.entangled_count), (7, 28))
        product = {row.truth for row in survey.rows if row.profile.fully_product}
        type_1 = {row.truth for row in survey.rows if row.construction_type is oracle_compiler.ConstructionType.TYPE_1}
        self.assertEqual(product, type_1)

    def test_two_qubits(self):
        survey = reports.survey_entanglement(2)
        self.assertEqual((survey.product_count, survey.entangled_count), (3, 0))


class VerificationTest(SimpleTestCase):

    def test_all_suites_pass(self):
        verification = reports.run_verification(3)
        self.assertTrue(verification.passed, verification.checks)
        self.assertEqual(
            [check.name for check in verification.checks],
            ['oracle-equivalence', 'census', 'refined-original-agreement', 'formula-agreement'],
        )
        self.assertIsNone(verification.first_failure)

    def test_broken_synthesizer_fails_oracle_equivalence_first(self):
        with mock.patch.object(oracle_compiler, 'synthesize', side_effect=lambda anf: Circuit(anf.n)):
            verification = reports.run_verification(3)
        self.assertFalse(verification.passed)
        self.assertEqual(verification.first_failure.name, 'oracle-equivalence')
