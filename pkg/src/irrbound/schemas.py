"""JSON Schemas for the CLI's ``--format json`` output.

Field names are a stable contract for scripts consuming the output.
"""

_INT = {"type": "integer", "minimum": 0}
_NUM = {"type": "number", "minimum": 0}
_OPT_INT = {"type": ["integer", "null"], "minimum": 0}


def _obj(props: dict) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": sorted(props),
        "additionalProperties": False,
    }


INFO = _obj({
    "n": _INT,
    "m": _INT,
    "zagreb": _INT,
    "pendants": _INT,
    "max_degree": _INT,
    "irregularity": _INT,
})

BOUNDS = _obj({
    "n": _INT,
    "m": _INT,
    "irregularity": _INT,
    "albertson": _NUM,
    "albertson_trunc": _INT,
    "acd": _INT,
    "acd_trunc": _INT,
    "zhou_luo": _NUM,
    "zhou_luo_trunc": _INT,
    "laplacian_new": _NUM,
    "laplacian_new_trunc": _INT,
    "tree_pendant": _OPT_INT,
    "tree_pendant_trunc": _OPT_INT,
    "lambda_max_used": _NUM,
    "lambda_source": {"enum": ["computed", "merris", "none"]},
    "empty_graph": {"type": "boolean"},
    "tight": {"type": "array", "items": {"type": "string"}},
})

GRAPH = _obj({
    "n": _INT,
    "m": _INT,
    "edges": {
        "type": "array",
        "items": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
    },
})

TREE_ROW = _obj({
    "canonical_id": {"type": "string"},
    "n": _INT,
    "p": _INT,
    "I": _INT,
    "zl_raw": _NUM,
    "new_raw": _NUM,
    "new_trunc": _INT,
    "pendant_bound": _INT,
    "winner": {"enum": ["new", "equal", "tree"]},
})

STUDY_SUMMARY = _obj({
    "n": _INT,
    "trees": _INT,
    "counts": _obj({"new_better": _INT, "equal": _INT, "tree_better": _INT}),
    "parameters": _obj({"rel_tol": _NUM, "truncation_eps": _NUM}),
})

T15 = _obj({
    "n": _INT,
    "candidates": {"type": "array", "items": TREE_ROW},
})

ASYMPTOTICS = {
    "type": "array",
    "items": _obj({
        "family": {"enum": ["yoke-balanced", "path"]},
        "n": _INT,
        "I": _INT,
        "zhou_luo": _NUM,
        "laplacian_new": _NUM,
        "lambda_used": _NUM,
        "lambda_source": {"enum": ["computed", "closed-form", "merris-cap"]},
        "zl_closed": _NUM,
        "new_closed": _NUM,
        "new_limit": _NUM,
    }),
}
