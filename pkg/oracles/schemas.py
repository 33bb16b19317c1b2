"""JSON Schemas pinning the machine-readable outputs of the commands."""

_GATE_COUNTS = {
    'type': 'object',
    'required': ['phase_flip', 'controlled_phase', 'multi_controlled_z', 'hadamard'],
    'properties': {
        key: {'type': 'integer', 'minimum': 0}
        for key in ('phase_flip', 'controlled_phase', 'multi_controlled_z', 'hadamard')
    },
    'additionalProperties': False,
}

_MONOMIALS = {
    'type': 'array',
    'items': {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}},
}

_TRUTH = {'type': 'string', 'pattern': '^[01]+$'}

_TYPE = {'type': ['integer', 'null'], 'minimum': 1, 'maximum': 4}

ENUMERATION_REPORT = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['n', 'total_balanced', 'classes', 'type_counts', 'phase_flip_distribution', 'rows'],
    'additionalProperties': False,
    'properties': {
        'n': {'type': 'integer', 'minimum': 2, 'maximum': 4},
        'total_balanced': {'type': 'integer', 'minimum': 0},
        'classes': {'type': 'integer', 'minimum': 0},
        'type_counts': {
            'type': 'object',
            'propertyNames': {'pattern': '^[1-4]$'},
            'additionalProperties': {'type': 'integer', 'minimum': 0},
        },
        'phase_flip_distribution': {
            'type': 'object',
            'propertyNames': {'pattern': '^[1-4]$'},
            'additionalProperties': {
                'type': 'object',
                'propertyNames': {'pattern': '^[0-9]+$'},
                'additionalProperties': {'type': 'integer', 'minimum': 1},
            },
        },
        'rows': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['truth', 'anf', 'circuit', 'type', 'gate_counts', 'zero_amplitude', 'fully_product'],
                'additionalProperties': False,
                'properties': {
                    'truth': _TRUTH,
                    'anf': _MONOMIALS,
                    'circuit': {'type': 'string', 'pattern': '^qubits [0-9]+\n'},
                    'type': _TYPE,
                    'gate_counts': _GATE_COUNTS,
                    'zero_amplitude': {'type': 'number'},
                    'fully_product': {'type': 'boolean'},
                },
            },
        },
    },
}

SYNTHESIS_REPORT = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['truth', 'n', 'anf', 'anf_text', 'circuit', 'gate_counts', 'global_sign'],
    'additionalProperties': False,
    'properties': {
        'truth': _TRUTH,
        'n': {'type': 'integer', 'minimum': 1},
        'anf': _MONOMIALS,
        'anf_text': {'type': 'string'},
        'circuit': {'type': 'string'},
        'gate_counts': _GATE_COUNTS,
        'global_sign': {'enum': [1, -1]},
        'type': _TYPE,
    },
}

VERIFICATION = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['n', 'passed', 'checks'],
    'properties': {
        'n': {'type': 'integer'},
        'passed': {'type': 'boolean'},
        'checks': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['name', 'passed', 'checked', 'detail'],
                'properties': {
                    'name': {'enum': ['oracle-equivalence', 'census', 'refined-original-agreement', 'formula-agreement']},
                    'passed': {'type': 'boolean'},
                    'checked': {'type': 'integer', 'minimum': 0},
                    'detail': {'type': 'string'},
                },
            },
        },
    },
}
