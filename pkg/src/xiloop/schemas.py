"""JSON Schemas for the ``--format json`` outputs of the CLI."""

_COMPLEX = {
    "type": "object",
    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
    "required": ["re", "im"],
    "additionalProperties": False,
}

EVAL = {
    "type": "object",
    "properties": {
        "sigma": {"type": "number"},
        "t": {"type": "number"},
        "method": {"enum": ["incgamma", "realform", "strip", "theta", "classical", "contour"]},
        "value": _COMPLEX,
        "n_used": {"type": "integer", "minimum": 0},
        "error_estimate": {"type": "number", "minimum": 0},
        "converged": {"type": "boolean"},
    },
    "required": ["sigma", "t", "method", "value", "n_used", "error_estimate", "converged"],
    "additionalProperties": False,
}

COMPARE = {
    "type": "object",
    "properties": {
        "sigma": {"type": "number"},
        "t": {"type": "number"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "method": {"type": "string"},
                    "value": _COMPLEX,
                    "error_estimate": {"type": "number"},
                    "converged": {"type": "boolean"},
                },
                "required": ["method", "value", "error_estimate", "converged"],
                "additionalProperties": False,
            },
        },
        "max_dev": {"type": "number", "minimum": 0},
    },
    "required": ["sigma", "t", "results", "max_dev"],
    "additionalProperties": False,
}

SCAN = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            key: {"type": "number"}
            for key in ("t0", "xi_incgamma", "xi_classical", "xi_theta", "max_dev")
        },
        "required": ["t0", "xi_incgamma", "xi_classical", "xi_theta", "max_dev"],
        "additionalProperties": False,
    },
}

ZEROS = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "t_low": {"type": "number"},
            "t_high": {"type": "number"},
            "root": {"type": "number"},
        },
        "required": ["t_low", "t_high", "root"],
        "additionalProperties": False,
    },
}

GAMMAINC = {
    "type": "object",
    "properties": {
        "beta": {"type": "number"},
        "k": {"type": "number"},
        "alpha": {"type": "number"},
        "value": _COMPLEX,
        "terms_used": {"type": "integer", "minimum": 0},
        "remainder_bound": {"type": "number", "minimum": 0},
        "converged": {"type": "boolean"},
        "crude_bound": {"type": "number", "minimum": 0},
    },
    "required": ["beta", "k", "alpha", "value", "terms_used", "remainder_bound", "converged"],
    "additionalProperties": False,
}
