"""Reading and checking Shimura-curve norm data files.

A norm file is JSON::

    {"curveDiscriminant": 6, "cmDiscriminant": 244, "degree": 3,
     "points": [{"d": 40, "zeta": "-2187/125",
                 "normNum": "3^22 * 83 * 101 * 107 * 163",
                 "normDen": "5^9 * 17^2 * 29^4"}, ...]}

`normNum`/`normDen` hold the absolute norm |t_d(s_d')| as a fraction; each
may be a plain integer or a product of prime powers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .exact import DomainError, parse_factored

BUNDLED_S244 = "s244.json"


class DataFileError(DomainError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class ShimuraPoint:
    d: int
    zeta: Fraction
    norm: Fraction


@dataclass(frozen=True)
class ShimuraNormFile:
    curve_discriminant: int
    cm_discriminant: int
    degree: int
    points: tuple[ShimuraPoint, ...]


@dataclass
class ValidationReport:
    path: str
    problems: list[str] = field(default_factory=list)
    dataset: ShimuraNormFile | None = None

    @property
    def ok(self) -> bool:
        return not self.problems


def bundled_path(name: str = BUNDLED_S244) -> Path:
    return Path(str(resources.files("singmod") / "data" / name))


def _parse_rational(text, where: str, problems: list[str]) -> Fraction | None:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        problems.append(f"{where}: expected a string, got {type(text).__name__}")
        return None
    try:
        if "/" in text and "^" not in text and "*" not in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(parse_factored(text))
    except (ValueError, ZeroDivisionError) as exc:
        problems.append(f"{where}: {exc}")
        return None


def _int_field(doc: dict, key: str, problems: list[str]) -> int | None:
    if key not in doc:
        problems.append(f"{key}: missing")
        return None
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
        problems.append(f"{key}: expected a positive integer, got {v!r}")
        return None
    return v


def check_document(doc, where: str = "") -> ValidationReport:
    """Schema and consistency checks; never raises on bad content."""
    report = ValidationReport(where)
    problems = report.problems
    if not isinstance(doc, dict):
        problems.append("top level: expected an object")
        return report
    curve = _int_field(doc, "curveDiscriminant", problems)
    cm = _int_field(doc, "cmDiscriminant", problems)
    degree = _int_field(doc, "degree", problems)
    raw_points = doc.get("points")
    if not isinstance(raw_points, list):
        problems.append("points: missing or not an array")
        return report
    points = []
    seen: dict[Fraction, int] = {}
    for i, rec in enumerate(raw_points):
        key = f"points[{i}]"
        if not isinstance(rec, dict):
            problems.append(f"{key}: expected an object")
            continue
        d = rec.get("d")
        if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
            problems.append(f"{key}.d: expected a positive integer, got {d!r}")
        zeta = _parse_rational(rec.get("zeta"), f"{key}.zeta", problems)
        num = _parse_rational(rec.get("normNum"), f"{key}.normNum", problems)
        den = _parse_rational(rec.get("normDen", "1"), f"{key}.normDen", problems)
        if num is None or den is None or zeta is None:
            continue
        if den == 0:
            problems.append(f"{key}.normDen: zero denominator")
            continue
        norm = num / den
        if norm <= 0:
            problems.append(f"{key}: norm must be a positive rational, got {norm}")
            continue
        if zeta in seen:
            problems.append(f"{key}.zeta: duplicate abscissa {zeta} (also points[{seen[zeta]}])")
            continue
        seen[zeta] = i
        points.append(ShimuraPoint(d, zeta, norm))
    if degree is not None and len(raw_points) < degree + 1:
        problems.append(f"points: insufficient points, degree {degree} needs {degree + 1}, got {len(raw_points)}")
    if not problems:
        report.dataset = ShimuraNormFile(curve, cm, degree, tuple(points))
    return report


def validate_data(path) -> ValidationReport:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        return ValidationReport(str(path), [f"line {exc.lineno}: invalid JSON ({exc.msg})"])
    report = check_document(doc, str(path))
    return report


def load_norm_file(path) -> ShimuraNormFile:
    report = validate_data(path)
    if not report.ok:
        raise DataFileError([f"{report.path}: {p}" for p in report.problems])
    return report.dataset


def dump_norm_file(dataset: ShimuraNormFile) -> str:
    doc = {
        "curveDiscriminant": dataset.curve_discriminant,
        "cmDiscriminant": dataset.cm_discriminant,
        "degree": dataset.degree,
        "points": [
            {
                "d": p.d,
                "zeta": str(p.zeta),
                "normNum": str(p.norm.numerator),
                "normDen": str(p.norm.denominator),
            }
            for p in dataset.points
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
