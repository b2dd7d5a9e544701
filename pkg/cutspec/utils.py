"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import json

from .exceptions import InstanceSpecError
from .typing import Any, Dict, List, Optional, Sequence, Verdict

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"
UNKNOWN = "unknown"


def validate_type(types, value: Any, path: str) -> None:
    """
    Checks `value` against one type or a tuple of types. Booleans are
    not accepted where integers are expected.

    Raises:
        InstanceSpecError: Naming `path` when the type does not match.
    """
    if isinstance(types, type):
        types = (types,)
    if isinstance(value, bool) and bool not in types:
        raise InstanceSpecError(f"{path}: unexpected type {type(value)}")
    if not isinstance(value, tuple(types)):
        raise InstanceSpecError(f"{path}: unexpected type {type(value)}")


def validate_keys(
    spec: Dict[str, Any],
    required: Dict[str, Any],
    optional: Dict[str, Any],
    path: str = "instance",
) -> None:
    """
    Checks the keys of an instance specification. `required` maps keys
    to types, `optional` maps keys to {"type", "default"[, "choices"]}.

    Raises:
        InstanceSpecError: On a missing, unexpected or ill-typed key.
    """
    if not isinstance(spec, dict):
        raise InstanceSpecError(
            f"{path}: expected to be a dict, got {type(spec)}"
        )
    for key, tp in required.items():
        if key not in spec:
            raise InstanceSpecError(f"{path}: missing required key '{key}'")
        validate_type(tp, spec[key], f"{path}.{key}")
    for key, opt in optional.items():
        if key not in spec:
            continue
        validate_type(opt["type"], spec[key], f"{path}.{key}")
        if "choices" in opt and spec[key] not in opt["choices"]:
            raise InstanceSpecError(
                f"{path}.{key}: value '{spec[key]}' not in {opt['choices']}"
            )
    extra_keys = [
        key for key in spec if key not in required and key not in optional
    ]
    if extra_keys:
        raise InstanceSpecError(
            f"{path}: found unexpected keys {extra_keys}"
        )


def validate_grid(grid: Any, n: int, path: str) -> None:
    """
    Checks that `grid` is an n×n list of lists.

    Raises:
        InstanceSpecError: When a row is missing or has the wrong size.
    """
    validate_type(list, grid, path)
    if len(grid) != n:
        raise InstanceSpecError(f"{path}: expected {n} rows, got {len(grid)}")
    for i, row in enumerate(grid):
        validate_type(list, row, f"{path}[{i}]")
        if len(row) != n:
            raise InstanceSpecError(
                f"{path}[{i}]: expected {n} entries, got {len(row)}"
            )


def rows(flat: Sequence[Any], n: int) -> List[List[Any]]:
    """Splits a row-major sequence into n rows."""
    return [list(flat[i * n : (i + 1) * n]) for i in range(n)]


def canonical_json(obj: Any) -> str:
    """
    Compact JSON with sorted keys. Equal objects give equal strings.
    """
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def verdict(
    status: str,
    witness: Any = None,
    reason: Optional[str] = None,
    **details: Any,
) -> Verdict:
    """
    Builds a property verdict.

    Args:
        status (str): One of "pass", "fail", "not_applicable", "unknown".
        witness: JSON-ready witness configuration, required on "fail".
        reason (str): Unmet hypothesis or short explanation.
        **details: Extra JSON-ready entries of the verdict.

    Returns:
        verdict (dict): {"status", "witness", "reason", **details}.
    """
    if status not in (PASS, FAIL, NOT_APPLICABLE, UNKNOWN):
        raise ValueError(f"Unknown verdict status '{status}'")
    if status == FAIL and witness is None:
        raise ValueError("A failing verdict must carry a witness")
    return {"status": status, "witness": witness, "reason": reason, **details}


def passes(verdict_: Verdict) -> bool:
    return verdict_["status"] == PASS


def holds_or_skipped(verdict_: Verdict) -> bool:
    return verdict_["status"] in (PASS, NOT_APPLICABLE)
