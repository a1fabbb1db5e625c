"""Command-line front end: ``h2v eval``, ``h2v verify`` and ``h2v export``.

Exit codes
----------
0
    success
1
    at least one gating verification check failed
2
    argument or configuration parse error
3
    domain error (invalid degree, ``alpha`` outside ``(0, 1)``, ...)
4
    I/O failure

Configuration precedence is defaults < ``--config`` file < command-line
flags, and the environment variable ``H2V_SEED`` overrides the seed.  All
files are written through a temporary file and an atomic rename.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

import numpy as np

from . import exact
from .errors import DomainError, RangeError
from .evaluate import METHODS, eval_hermite
from .kernels import kernel_closed
from .quadrature import gauss_hermite_rule, rule_to_csv
from .report import atomic_write_text, write_reports
from .verify import DEFAULT_CAPS, SUITES, SuiteConfig, run_suites

__all__ = ["main", "build_parser", "parse_complex", "EXIT_OK", "EXIT_FAILED", "EXIT_USAGE",
           "EXIT_DOMAIN", "EXIT_IO"]

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4

_NUM = r"[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?|[0-9]+\.(?:[eE][+-]?[0-9]+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?P<re>[+-]?(?:{_NUM}))?\s*(?:(?P<sign>[+-])?\s*(?P<im>(?:{_NUM}))?\s*(?P<unit>[ij]))?\s*$"
)


class UsageError(Exception):
    """Raised for malformed values; mapped to exit code 2."""


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"``, ``"a-bi"``, ``"a"``, ``"bi"``, ``"-i"`` (``j`` also accepted).

    Examples
    --------
    >>> parse_complex("2+0i")
    (2+0j)
    >>> parse_complex("-1.5e-1-2i")
    (-0.15-2j)
    >>> parse_complex("i")
    1j
    """
    m = _COMPLEX_RE.match(text)
    if not m or not text.strip() or (m.group("re") is None and m.group("unit") is None):
        raise UsageError(f"invalid complex literal {text!r}; expected a+bi")
    re_text, im_text = m.group("re"), m.group("im")
    if m.group("unit") and m.group("sign") is None:
        if re_text is not None and im_text is not None:
            raise UsageError(f"invalid complex literal {text!r}; expected a+bi")
        # a lone imaginary term such as "2.5i" is captured as the real group
        return complex(0.0, float(re_text or im_text or 1.0))
    re_part = float(re_text) if re_text else 0.0
    im_part = 0.0
    if m.group("unit"):
        mag = float(im_text) if im_text else 1.0
        im_part = -mag if m.group("sign") == "-" else mag
    return complex(re_part, im_part)


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _alpha_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha list {text!r}") from None


def _point(text: str) -> tuple[complex, complex]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two complex numbers 'w1,w2'; got {text!r}")
    return _complex_arg(parts[0]), _complex_arg(parts[1])


def _grid(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
    if not m or int(m.group(1)) < 1 or int(m.group(2)) < 1:
        raise argparse.ArgumentTypeError(f"expected a grid size like 3x3; got {text!r}")
    return int(m.group(1)), int(m.group(2))


class _Parser(argparse.ArgumentParser):
    """Argument parser whose errors raise instead of exiting, so ``main`` owns exit codes."""

    def error(self, message):
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value file mirroring the long flags")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="h2v", description="Holomorphic Hermite polynomials in two variables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate H_{m,n}(z1, z2) and print JSON")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z1", type=_complex_arg, required=True)
    p.add_argument("--z2", type=_complex_arg, required=True)
    p.add_argument("--method", choices=METHODS, default="recurrence")
    _add_common(p)

    p = sub.add_parser("verify", help="run verification suites and write reports")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--alpha", type=_alpha_list, help="comma-separated alphas in (0, 1)")
    p.add_argument("--max-degree", type=int, dest="max_degree")
    p.add_argument("--nodes", type=int, help="Gauss-Hermite nodes per axis for polynomial integrands")
    p.add_argument("--seed", type=int)
    p.add_argument("--out-dir", dest="out_dir")
    p.add_argument("--tolerance-rel", type=float, dest="tolerance_rel")
    p.add_argument("--tolerance-abs", type=float, dest="tolerance_abs")
    _add_common(p)

    p = sub.add_parser("export", help="write plot-ready or exact artifacts")
    p.add_argument("target", choices=["kernel-grid", "quadrature-rule", "polynomial"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=_alpha_list)
    p.add_argument("--w", type=_point, help="kernel second argument 'w1,w2' (default 0,0)")
    p.add_argument("--z2", type=_complex_arg, help="fixed z2 for the kernel grid (default 0)")
    p.add_argument("--grid", type=_grid, help="grid size RxC over z1 = x + iy (default 3x3)")
    p.add_argument("--extent", type=float, help="half-width of the square grid (default 1)")
    p.add_argument("--out", help="output path (default: stdout)")
    _add_common(p)
    return parser


_CONFIG_TYPES = {
    "m": int, "n": int, "z1": parse_complex, "z2": parse_complex, "method": str,
    "alpha": lambda s: tuple(float(t) for t in s.split(",") if t.strip()),
    "max_degree": int, "nodes": int, "seed": int, "out_dir": str,
    "tolerance_rel": float, "tolerance_abs": float,
    "w": lambda s: tuple(parse_complex(t) for t in s.split(",")),
    "grid": lambda s: _grid(s), "extent": float, "out": str,
}


def read_config(path: str) -> dict:
    """Parse a ``key=value`` file; ``#`` starts a comment and dashes in keys become underscores."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from None
    out = {}
    for no, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{no}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in _CONFIG_TYPES:
            raise UsageError(f"{path}:{no}: unknown key {key!r}")
        try:
            out[key] = _CONFIG_TYPES[key](value)
        except (ValueError, UsageError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"{path}:{no}: bad value for {key}: {exc}") from None
    return out


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    if getattr(args, "config", None):
        for key, value in read_config(args.config).items():
            if getattr(args, key, None) is None:
                setattr(args, key, value)
    env_seed = os.environ.get("H2V_SEED")
    if env_seed is not None and hasattr(args, "seed"):
        try:
            args.seed = int(env_seed)
        except ValueError:
            raise UsageError(f"H2V_SEED must be an integer; got {env_seed!r}") from None
    return args


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        atomic_write_text(out, text)


def cmd_eval(args) -> int:
    if args.m < 0 or args.n < 0:
        raise DomainError("degrees must be non-negative")
    value = complex(eval_hermite(args.m, args.n, args.z1, args.z2, args.method))
    payload = {
        "m": args.m, "n": args.n,
        "z1": [args.z1.real, args.z1.imag], "z2": [args.z2.real, args.z2.imag],
        "method": args.method, "value_re": value.real, "value_im": value.imag,
    }
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def suite_config(args) -> SuiteConfig:
    kwargs = {}
    if args.alpha is not None:
        kwargs["alpha_list"] = args.alpha
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.tolerance_rel is not None:
        kwargs["tol_rel"] = args.tolerance_rel
    if args.tolerance_abs is not None:
        kwargs["tol_abs"] = args.tolerance_abs
    if args.max_degree is not None:
        if args.max_degree < 0:
            raise DomainError("max-degree must be non-negative")
        if args.suite == "identities":
            # one cap for every exact sweep; the quartic coefficient sweep stays at its default
            kwargs["identity_caps"] = {k: args.max_degree for k in DEFAULT_CAPS}
            kwargs["identity_caps"]["coefficient"] = min(args.max_degree, DEFAULT_CAPS["coefficient"])
        else:
            kwargs["max_degree"] = args.max_degree
    nodes = args.nodes
    if nodes is None:
        nodes = max(SuiteConfig.nodes_per_axis, kwargs.get("max_degree", SuiteConfig.max_degree) + 1)
    kwargs["nodes_per_axis"] = nodes
    return SuiteConfig(**kwargs)


def cmd_verify(args) -> int:
    cfg = suite_config(args)
    reports = run_suites([args.suite], cfg)
    out_dir = args.out_dir or "h2v-reports"
    try:
        jpath, cpath = write_reports(reports, out_dir)
    except OSError as exc:
        print(f"h2v: cannot write reports: {exc}", file=sys.stderr)
        return EXIT_IO
    gating = [r for r in reports if r.gating]
    failed = [r for r in gating if not r.passed]
    print(f"{len(reports)} checks ({len(reports) - len(gating)} informational), "
          f"{len(failed)} gating failures; reports in {jpath} and {cpath}")
    for check_id in sorted({r.check_id for r in failed}):
        count = sum(r.check_id == check_id for r in failed)
        print(f"FAILED {check_id}: {count}")
    return EXIT_FAILED if failed else EXIT_OK


def kernel_grid_csv(alpha: float, w: tuple[complex, complex], z2: complex,
                    grid: tuple[int, int], extent: float) -> str:
    """CSV of ``K(z; w)`` for ``z1 = x + iy`` on a centered square grid and fixed ``z2``."""
    rows, cols = grid
    ys = np.linspace(-extent, extent, rows) if rows > 1 else np.zeros(1)
    xs = np.linspace(-extent, extent, cols) if cols > 1 else np.zeros(1)
    lines = ["x,y,z2_re,z2_im,w1_re,w1_im,w2_re,w2_im,k_re,k_im"]
    for y in ys:
        for x in xs:
            k = complex(kernel_closed(alpha, complex(x, y), z2, *w))
            vals = [x, y, z2.real, z2.imag, w[0].real, w[0].imag, w[1].real, w[1].imag, k.real, k.imag]
            lines.append(",".join(repr(float(v)) for v in vals))
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    if args.target == "polynomial":
        if args.m is None or args.n is None:
            raise UsageError("export polynomial requires --m and --n")
        if args.m < 0 or args.n < 0:
            raise DomainError("degrees must be non-negative")
        text = exact.hermite_exact_direct(args.m, args.n).to_json() + "\n"
    elif args.target == "quadrature-rule":
        if args.n is None:
            raise UsageError("export quadrature-rule requires --n")
        text = rule_to_csv(gauss_hermite_rule(args.n))
    else:
        alphas = args.alpha or (0.5,)
        if len(alphas) != 1:
            raise UsageError("export kernel-grid takes a single --alpha")
        if not (0.0 < alphas[0] < 1.0):
            raise DomainError(f"alpha must lie strictly inside (0, 1); got {alphas[0]!r}")
        text = kernel_grid_csv(alphas[0], args.w or (0j, 0j), args.z2 if args.z2 is not None else 0j,
                               args.grid or (3, 3), 1.0 if args.extent is None else args.extent)
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"h2v: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _merge_config(build_parser().parse_args(argv))
        handler = {"eval": cmd_eval, "verify": cmd_verify, "export": cmd_export}[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"h2v: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, RangeError) as exc:
        print(f"h2v: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"h2v: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
