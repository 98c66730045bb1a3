"""Command-line front end.

Thin client over the service handlers: flags are parsed into the same request
models the HTTP endpoints consume, handlers run in-process, and rows come out
as CSV or JSON. Precedence is CLI flags over config-file values over defaults.

Exit codes: 0 success, 1 validation failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from .errors import ConfigError, GyrospecError
from .service import handlers
from .service.models import (
    CovariantRequest,
    ParticleSystemModel,
    ScanRequest,
    SpectrumRequest,
    ValidateRequest,
)
from .tables import SpectrumRow, rows_to_csv, rows_to_json

COMMANDS = ("kg", "dirac", "covariant", "validate", "scan", "serve")

# demo system: unit triangle spinning about z, at rest
SAMPLE_SYSTEM = {
    "masses": [1.0, 1.0, 1.0],
    "positions": [
        [0.0, 1.0, 0.0, 0.0],
        [0.0, -0.5, 0.8660254037844387, 0.0],
        [0.0, -0.5, -0.8660254037844387, 0.0],
    ],
    "momenta": [
        [1.0770329614269007, 0.0, 0.4, 0.0],
        [1.0770329614269007, -0.3464101615137755, -0.2, 0.0],
        [1.0770329614269007, 0.3464101615137755, -0.2, 0.0],
    ],
    "units": "natural",
}


def _parse_triple(text: str, flag: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"{flag} expects three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError as exc:
        raise ConfigError(f"{flag} expects numbers, got {text!r}") from exc


def _parse_scan(text: str) -> dict:
    parts = text.split(":")
    if len(parts) != 4:
        raise ConfigError(f"--scan expects AXIS:START:STOP:STEP, got {text!r}")
    axis = parts[0]
    try:
        start, stop, step = (float(p) for p in parts[1:])
    except ValueError as exc:
        raise ConfigError(f"--scan bounds must be numbers, got {text!r}") from exc
    return {"axis": axis, "start": start, "stop": stop, "step": step}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gyrospec",
        description="Spectra of relativistic quantum rigid rotors (Klein-Gordon and Dirac"
                    " gyroscopes) and covariant classical-kinematics checks.",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS,
                        help="kg | dirac | covariant | validate | scan | serve")
    parser.add_argument("--l-max", type=int, default=None, help="largest l to tabulate (<= 50)")
    parser.add_argument("--inertia", default=None, metavar="I1,I2,I3",
                        help="principal moments of inertia")
    parser.add_argument("--mass", type=float, default=None, help="total rest mass M")
    parser.add_argument("--hbar", type=float, default=None, help="reduced Planck constant")
    parser.add_argument("--c", type=float, default=None, help="speed of light")
    parser.add_argument("--variant", choices=("abelian", "nonabelian"), default=None)
    parser.add_argument("--v", default=None, metavar="V1,V2,V3",
                        help="unit vector for the nonabelian variant")
    parser.add_argument("--scan", default=None, metavar="AXIS:START:STOP:STEP",
                        help="scan axis (I3_over_I1 | mass | v3) and grid")
    parser.add_argument("--target", choices=("kg", "dirac"), default=None,
                        help="which spectrum a scan tabulates (v3 forces dirac)")
    parser.add_argument("--format", dest="output_format", choices=("csv", "json"), default=None)
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--config", default=None, help="JSON config file mirroring these fields")
    parser.add_argument("--system", default=None,
                        help="particle-system JSON for the covariant command")
    parser.add_argument("--boost", default=None, metavar="V1,V2,V3",
                        help="boost velocity for the covariant mass-shell check")
    parser.add_argument("--n-systems", type=int, default=None,
                        help="random systems per covariant validation check")
    parser.add_argument("--seed", type=int, default=None, help="validation RNG seed")
    parser.add_argument("--host", default="127.0.0.1", help="bind address for serve")
    parser.add_argument("--port", type=int, default=8000, help="port for serve")
    return parser


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return doc


def _merged_settings(args: argparse.Namespace) -> dict:
    config = _load_config(args.config)
    merged = {
        "command": None,
        "l_max": None,  # per-command default: 2 for spectra, 10 for validate
        "inertia": (1.0, 1.0, 1.0),
        "mass": 1.0,
        "hbar": 1.0,
        "c": 1.0,
        "variant": "abelian",
        "v": None,
        "scan": None,
        "target": None,
        "format": None,
        "out": None,
        "system": None,
        "boost": None,
        "n_systems": 200,
        "seed": 20240802,
    }
    for key in merged:
        if key in config and config[key] is not None:
            merged[key] = config[key]
    overrides = {
        "command": args.command,
        "l_max": args.l_max,
        "mass": args.mass,
        "hbar": args.hbar,
        "c": args.c,
        "variant": args.variant,
        "target": args.target,
        "format": args.output_format,
        "out": args.out,
        "system": args.system,
        "n_systems": args.n_systems,
        "seed": args.seed,
    }
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value
    if args.inertia is not None:
        merged["inertia"] = _parse_triple(args.inertia, "--inertia")
    if args.v is not None:
        merged["v"] = _parse_triple(args.v, "--v")
    if args.boost is not None:
        merged["boost"] = _parse_triple(args.boost, "--boost")
    if args.scan is not None:
        merged["scan"] = _parse_scan(args.scan)
    if merged["command"] is None:
        raise ConfigError("no command given (kg | dirac | covariant | validate | scan | serve)")
    if merged["command"] not in COMMANDS:
        raise ConfigError(f"unknown command {merged['command']!r}")
    return merged


def _spectrum_request(settings: dict, command: str) -> SpectrumRequest:
    try:
        return SpectrumRequest(
            command=command,
            params={
                "hbar": settings["hbar"],
                "c": settings["c"],
                "mass": settings["mass"],
                "inertia": tuple(settings["inertia"]),
            },
            variant=settings["variant"],
            v=None if settings["v"] is None else tuple(settings["v"]),
            l_max=settings["l_max"] if settings["l_max"] is not None else 2,
        )
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(loc) for loc in first["loc"])
        raise ConfigError(f"bad field {field}: {first['msg']}") from exc


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text)


def _emit_rows(response, settings: dict, default_format: str = "csv") -> None:
    rows = [
        SpectrumRow(
            l=r.l, m=r.m, branch=r.branch, sign=r.sign,
            e_closed=r.E_closed, e_numeric=r.E_numeric, rel_diff=r.rel_diff,
            scan_value=r.scan_value,
        )
        for r in response.rows
    ]
    fmt = settings["format"] or default_format
    if fmt == "csv":
        _emit(rows_to_csv(rows), settings["out"])
    else:
        _emit(rows_to_json(rows, response.meta), settings["out"])


def _run_validate(settings: dict) -> int:
    try:
        request = ValidateRequest(
            l_max=settings["l_max"] if settings["l_max"] is not None else 10,
            n_systems=settings["n_systems"],
            seed=settings["seed"],
        )
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(loc) for loc in first["loc"])
        raise ConfigError(f"bad field {field}: {first['msg']}") from exc
    report = handlers.compute_validation(request)
    doc = report.model_dump(by_alias=True)
    fmt = settings["format"] or "json"
    if fmt == "json":
        _emit(json.dumps(doc, indent=2) + "\n", settings["out"])
    else:
        lines = ["name,residual,tolerance,pass"]
        for check in doc["checks"]:
            lines.append(
                f"{check['name']},{check['residual']:.17g},{check['tolerance']:.17g},"
                f"{str(check['pass']).lower()}"
            )
        _emit("\n".join(lines) + "\n", settings["out"])
    return 0 if report.passed else 1


def _run_covariant(settings: dict) -> int:
    if settings["system"] is None:
        doc = SAMPLE_SYSTEM
    else:
        path = Path(settings["system"])
        if not path.exists():
            raise ConfigError(f"system file not found: {path}")
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"system file {path} is not valid JSON: {exc}") from exc
    try:
        request = CovariantRequest(
            system=ParticleSystemModel(**doc),
            boost_velocity=None if settings["boost"] is None else tuple(settings["boost"]),
        )
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(loc) for loc in first["loc"])
        raise ConfigError(f"bad system field {field}: {first['msg']}") from exc
    response = handlers.compute_covariant(request)
    doc_out = response.model_dump()
    fmt = settings["format"] or "json"
    if fmt == "json":
        _emit(json.dumps(doc_out, indent=2) + "\n", settings["out"])
    else:
        lines = ["name,residual,tolerance,pass"]
        for check in doc_out["checks"]:
            residual = "" if check["residual"] is None else f"{check['residual']:.17g}"
            lines.append(
                f"{check['name']},{residual},{check['tolerance']:.17g},"
                f"{str(check['passed']).lower()}"
            )
        _emit("\n".join(lines) + "\n", settings["out"])
    return 0 if response.passed else 1


def _run_scan(settings: dict) -> int:
    scan = settings["scan"]
    if scan is None:
        raise ConfigError("scan command needs --scan AXIS:START:STOP:STEP (or a config entry)")
    target = settings["target"] or ("dirac" if scan.get("axis") == "v3" else "kg")
    try:
        request = ScanRequest(
            params={
                "hbar": settings["hbar"],
                "c": settings["c"],
                "mass": settings["mass"],
                "inertia": tuple(settings["inertia"]),
            },
            variant=settings["variant"],
            v=None if settings["v"] is None else tuple(settings["v"]),
            l_max=settings["l_max"] if settings["l_max"] is not None else 2,
            target=target,
            axis=scan.get("axis"),
            start=scan.get("start"),
            stop=scan.get("stop"),
            step=scan.get("step"),
        )
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(loc) for loc in first["loc"])
        raise ConfigError(f"bad scan field {field}: {first['msg']}") from exc
    _emit_rows(handlers.compute_scan(request), settings)
    return 0


def _run_serve(host: str, port: int) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _merged_settings(args)
        command = settings["command"]
        if command in ("kg", "dirac"):
            request = _spectrum_request(settings, command)
            _emit_rows(handlers.compute_spectrum(request), settings)
            return 0
        if command == "scan":
            return _run_scan(settings)
        if command == "validate":
            return _run_validate(settings)
        if command == "covariant":
            return _run_covariant(settings)
        return _run_serve(args.host, args.port)
    except GyrospecError as exc:
        print(f"gyrospec: config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
