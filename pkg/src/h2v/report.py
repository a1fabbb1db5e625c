"""Verification reports and their JSON-lines / CSV serialization."""
from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Sequence

__all__ = ["VerificationReport", "to_jsonable", "write_reports", "read_reports", "atomic_write_text"]


def to_jsonable(value: Any) -> Any:
    """Convert numbers, complex values and numpy scalars/arrays to JSON-native data.

    Complex numbers become ``[re, im]`` pairs.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, complex):
        return [float(value.real), float(value.imag)]
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    # numpy scalars and arrays, without importing numpy here
    if hasattr(value, "tolist"):
        return to_jsonable(value.tolist())
    if hasattr(value, "__complex__") and not hasattr(value, "__float__"):
        return to_jsonable(complex(value))
    if hasattr(value, "__float__"):
        return float(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _decode_value(value: Any) -> Any:
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, float) for v in value):
        return complex(value[0], value[1])
    return value


def _modulus(z: complex) -> float:
    """``|z|``, saturating to ``inf`` instead of raising on overflow."""
    try:
        return float(abs(z))
    except OverflowError:
        return math.inf


@dataclass
class VerificationReport:
    """Outcome of one numerical or exact check.

    ``passed`` is always ``abs_err <= tol_abs or rel_err <= tol_rel``.
    ``identity`` names the mathematical statement being checked, and
    ``details`` carries optional JSON-native extras such as convergence
    sequences.  Reports with ``gating=False`` are informational: they are
    written out like any other report but never decide an exit status.
    """

    check_id: str
    identity: str
    inputs: dict
    computed: Any
    reference: Any
    abs_err: float
    rel_err: float
    tol_abs: float
    tol_rel: float
    passed: bool
    runtime_ms: float = 0.0
    details: dict = field(default_factory=dict)
    gating: bool = True

    @classmethod
    def build(
        cls,
        check_id: str,
        identity: str,
        inputs: dict,
        computed,
        reference,
        *,
        tol_abs: float,
        tol_rel: float,
        runtime_ms: float = 0.0,
        abs_err: float | None = None,
        rel_err: float | None = None,
        details: dict | None = None,
    ) -> "VerificationReport":
        """Create a report, deriving errors and the pass flag.

        Errors default to ``|computed - reference|`` and that value divided
        by ``|reference|``.
        """
        if abs_err is None:
            abs_err = _modulus(complex(computed) - complex(reference))
        if rel_err is None:
            scale = _modulus(complex(reference))
            if scale > 0:
                rel_err = abs_err / scale
            else:
                rel_err = 0.0 if abs_err == 0 else math.inf
        if isinstance(computed, complex) and computed.imag == 0 and isinstance(reference, float):
            computed = computed.real
        passed = bool(abs_err <= tol_abs or rel_err <= tol_rel)
        return cls(
            check_id=check_id,
            identity=identity,
            inputs=to_jsonable(inputs),
            computed=_normalize_scalar(computed),
            reference=_normalize_scalar(reference),
            abs_err=float(abs_err),
            rel_err=float(rel_err),
            tol_abs=float(tol_abs),
            tol_rel=float(tol_rel),
            passed=passed,
            runtime_ms=float(runtime_ms),
            details=to_jsonable(details or {}),
        )

    @classmethod
    def exact(
        cls, check_id: str, identity: str, inputs: dict, result: bool, runtime_ms: float = 0.0
    ) -> "VerificationReport":
        """Report for an exact (boolean) identity check."""
        err = 0.0 if result else 1.0
        return cls(
            check_id=check_id,
            identity=identity,
            inputs=to_jsonable(inputs),
            computed=bool(result),
            reference=True,
            abs_err=err,
            rel_err=err,
            tol_abs=0.0,
            tol_rel=0.0,
            passed=bool(result),
            runtime_ms=float(runtime_ms),
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["computed"] = to_jsonable(self.computed)
        d["reference"] = to_jsonable(self.reference)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        data = dict(data)
        data["computed"] = _decode_value(data["computed"])
        data["reference"] = _decode_value(data["reference"])
        data.setdefault("gating", True)
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def consistent(self) -> bool:
        """Whether the pass flag agrees with the stored errors and tolerances."""
        return self.passed == bool(self.abs_err <= self.tol_abs or self.rel_err <= self.tol_rel)


def _normalize_scalar(value):
    if isinstance(value, bool):
        return value
    if hasattr(value, "dtype"):  # numpy scalar
        value = value.item()
    if isinstance(value, complex):
        return complex(float(value.real), float(value.imag))
    if isinstance(value, (int, float)):
        return float(value)
    return value


def atomic_write_text(path: str, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def summary_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_id", "identity", "max_err", "passed"])
    for r in reports:
        writer.writerow([r.check_id, r.identity, repr(r.abs_err), str(r.passed).lower()])
    return buf.getvalue()


def write_reports(reports: Iterable[VerificationReport], out_dir: str) -> tuple[str, str]:
    """Write ``reports.jsonl`` and ``summary.csv`` into ``out_dir``.

    Both files are fully rendered in memory first, so a failure never
    leaves a partial file behind.
    """
    reports = list(reports)
    jsonl = "".join(r.to_json() + "\n" for r in reports)
    summary = summary_csv(reports)
    os.makedirs(out_dir, exist_ok=True)
    jpath = os.path.join(out_dir, "reports.jsonl")
    cpath = os.path.join(out_dir, "summary.csv")
    atomic_write_text(jpath, jsonl)
    atomic_write_text(cpath, summary)
    return jpath, cpath


def read_reports(path: str) -> list[VerificationReport]:
    with open(path, encoding="utf-8") as fh:
        return [VerificationReport.from_json(line) for line in fh if line.strip()]
