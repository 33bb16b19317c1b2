"""
Sweeps over whole function families: the balanced-function enumeration
report, the entanglement survey of |psi2> and the verification suites.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field

from oracles import boolfn, dj_runner, oracle_compiler, simulator
from oracles.exceptions import OracleError

logger = logging.getLogger(__name__)

EXPECTED_CENSUS = {
    3: {
        'total_balanced': 70,
        'classes': 35,
        'type_counts': {1: 7, 2: 12, 3: 12, 4: 4},
        'max_controlled_phase': 3,
    },
}


@dataclass(frozen=True)
class ClassRecord:
    synthesis: oracle_compiler.SynthesisReport
    zero_amplitude: float
    fully_product: bool

    @property
    def truth(self):
        return self.synthesis.truth_table.bits


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    total_balanced: int
    classes: int
    type_counts: dict
    phase_flip_distribution: dict
    rows: tuple


@dataclass(frozen=True)
class SurveyRow:
    truth: str
    profile: simulator.EntanglementProfile
    construction_type: oracle_compiler.ConstructionType | None


@dataclass(frozen=True)
class EntanglementSurvey:
    n: int
    rows: tuple

    @property
    def product_count(self):
        return sum(1 for row in self.rows if row.profile.fully_product)

    @property
    def entangled_count(self):
        return len(self.rows) - self.product_count


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ''


@dataclass(frozen=True)
class Verification:
    n: int
    checks: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self):
        return next((check for check in self.checks if not check.passed), None)


def build_enumeration_report(n, tol=simulator.TOLERANCE):
    logger.debug('===== ENUMERATE n=%d START =====', n)
    balanced = boolfn.enumerate_balanced(n)
    rows = []
    for t in boolfn.canonical_classes(n):
        synthesis = oracle_compiler.compile_truth_table(t)
        outcome = dj_runner.run_refined(t, tol)
        profile = dj_runner.entanglement_profile(t, tol)
        rows.append(ClassRecord(synthesis, outcome.zero_amplitude, profile.fully_product))

    type_counts = {}
    phase_flips = {}
    if n == oracle_compiler.CONSTRUCTION_QUBITS:
        type_counts = {kind.value: 0 for kind in oracle_compiler.ConstructionType}
        phase_flips = {kind.value: Counter() for kind in oracle_compiler.ConstructionType}
        for row in rows:
            kind = row.synthesis.construction_type.value
            type_counts[kind] += 1
            phase_flips[kind][row.synthesis.gate_counts.phase_flip] += 1
        phase_flips = {kind: dict(sorted(tally.items())) for kind, tally in phase_flips.items()}

    logger.debug('===== ENUMERATE n=%d END (%d classes) =====', n, len(rows))
    return EnumerationReport(
        n=n,
        total_balanced=len(balanced),
        classes=len(rows),
        type_counts=type_counts,
        phase_flip_distribution=phase_flips,
        rows=tuple(rows),
    )


def survey_entanglement(n, tol=simulator.TOLERANCE):
    rows = []
    for t in boolfn.canonical_classes(n):
        construction_type = None
        if n == oracle_compiler.CONSTRUCTION_QUBITS:
            construction_type = oracle_compiler.compile_truth_table(t).construction_type
        rows.append(SurveyRow(t.bits, dj_runner.entanglement_profile(t, tol), construction_type))
    return EntanglementSurvey(n, tuple(rows))


def promise_tables(n):
    """Both constants followed by every balanced table."""
    size = 1 << n
    return [boolfn.TruthTable(n, (0,) * size), boolfn.TruthTable(n, (1,) * size)] + boolfn.enumerate_balanced(n)


def check_oracle_equivalence(n, tol):
    tables = [boolfn.TruthTable.from_int(n, value) for value in range(1 << (1 << n))]
    for t in tables:
        anf = boolfn.moebius_transform(t)
        result = simulator.equivalent_diagonal(oracle_compiler.synthesize(anf), t, tol)
        expected_sign = -1 if anf.has_constant else 1
        if not result.match or result.global_sign != expected_sign:
            return CheckResult('oracle-equivalence', False, len(tables),
                               f'{t.bits}: match={result.match}, sign={result.global_sign}')
    return CheckResult('oracle-equivalence', True, len(tables))


def check_census(n, tol):
    expected = EXPECTED_CENSUS[n]
    report = build_enumeration_report(n, tol)
    balanced = boolfn.enumerate_balanced(n)
    mcz = [t.bits for t in balanced if oracle_compiler.compile_truth_table(t).gate_counts.multi_controlled_z]
    max_cp = max(row.synthesis.gate_counts.controlled_phase for row in report.rows)
    product = {row.truth for row in report.rows if row.fully_product}
    type_1 = {row.truth for row in report.rows
              if row.synthesis.construction_type is oracle_compiler.ConstructionType.TYPE_1}

    problems = []
    if report.total_balanced != expected['total_balanced']:
        problems.append(f'{report.total_balanced} balanced functions')
    if report.classes != expected['classes']:
        problems.append(f'{report.classes} classes')
    if report.type_counts != expected['type_counts']:
        problems.append(f'type counts {report.type_counts}')
    if mcz:
        problems.append(f'ccz in oracle for {mcz[0]}')
    if max_cp != expected['max_controlled_phase']:
        problems.append(f'max cz count {max_cp}')
    if product != type_1:
        problems.append(f'{len(product)} product classes do not match {len(type_1)} Type1 classes')
    return CheckResult('census', not problems, report.classes, '; '.join(problems))


def check_refined_original_agreement(n, tol):
    tables = promise_tables(n)
    for t in tables:
        refined = dj_runner.run_refined(t, tol)
        original = dj_runner.run_original(t, tol)
        if refined.verdict is not original.verdict:
            return CheckResult('refined-original-agreement', False, len(tables),
                               f'{t.bits}: refined {refined.verdict.value}, original {original.verdict.value}')
        if abs(original.working_qubit_purity - 1) > tol:
            return CheckResult('refined-original-agreement', False, len(tables),
                               f'{t.bits}: working qubit purity {original.working_qubit_purity}')
    return CheckResult('refined-original-agreement', True, len(tables))


def check_formula_agreement(n, tol):
    tables = promise_tables(n)
    for t in tables:
        outcome = dj_runner.run_refined(t, tol)
        formula = dj_runner.zero_amplitude_formula(t)
        expected = dj_runner.expected_verdict(boolfn.classify(t))
        if abs(outcome.zero_amplitude - formula) > tol or outcome.verdict is not expected:
            return CheckResult('formula-agreement', False, len(tables),
                               f'{t.bits}: simulated {outcome.zero_amplitude}, formula {formula}')
    return CheckResult('formula-agreement', True, len(tables))


SUITES = (
    check_oracle_equivalence,
    check_census,
    check_refined_original_agreement,
    check_formula_agreement,
)


def run_verification(n=3, tol=simulator.TOLERANCE):
    checks = []
    for suite in SUITES:
        name = suite.__name__.removeprefix('check_').replace('_', '-')
        try:
            result = suite(n, tol)
        except OracleError as exc:
            logger.warning('suite %s raised %s', name, exc)
            result = CheckResult(name, False, 0, str(exc))
        logger.debug('%s: %s', result.name, 'passed' if result.passed else f'FAILED ({result.detail})')
        checks.append(result)
    return Verification(n, tuple(checks))
