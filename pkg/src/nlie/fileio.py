"""JSON interchange for algebras, forms and reports.

Scalars are always strings ("p" or "p/q", reduced, optional leading "-"),
never JSON numbers, so nothing passes through floating point.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra
from .errors import ParseError
from .linalg import Mat, Subspace
from .metric import Form

_SCALAR = re.compile(r"^([-−]?)(\d+)(?:/(\d+))?$")


def format_scalar(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s) -> Fraction:
    if not isinstance(s, str):
        raise ParseError(f"scalar must be a string, got {type(s).__name__} {s!r}")
    m = _SCALAR.match(s.strip())
    if not m:
        raise ParseError(f"malformed scalar {s!r}")
    sign, p, q = m.groups()
    p = int(p)
    q = int(q) if q is not None else 1
    if q == 0:
        raise ParseError(f"zero denominator in {s!r}")
    if math.gcd(p, q) != 1:
        raise ParseError(f"scalar {s!r} is not reduced")
    v = Fraction(p, q)
    return -v if sign else v


def format_vec(v) -> list[str]:
    return [format_scalar(x) for x in v]


def format_mat(m: Mat) -> list[list[str]]:
    return [format_vec(r) for r in m.rows]


def parse_vectors(text: str, d: int | None = None) -> list[tuple]:
    """'1,0,0;0,1/2,0' -> two vectors.  Empty text gives no vectors."""
    out = []
    text = text.strip()
    if not text:
        return out
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        v = tuple(parse_scalar(x) for x in part.split(","))
        if d is not None and len(v) != d:
            raise ParseError(f"vector {part!r} has length {len(v)}, expected {d}")
        out.append(v)
    return out


def subspace_to_list(W: Subspace) -> list[list[str]]:
    return [format_vec(b) for b in W.basis]


def algebra_to_dict(A: Algebra, form: Form | None = None) -> dict:
    out: dict = {"arity": A.arity, "dim": A.dim}
    if A.labels is not None:
        out["basis_labels"] = list(A.labels)
    brackets = []
    for key in sorted(A.table):
        v = A.table[key]
        brackets.append({
            "args": list(key),
            "value": {str(k + 1): format_scalar(c) for k, c in enumerate(v) if c},
        })
    out["brackets"] = brackets
    if form is not None:
        out["form"] = format_mat(form.gram)
    return out


def _int(obj, name) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise ParseError(f"{name} must be an integer")
    return obj


def algebra_from_dict(obj) -> tuple[Algebra, Form | None]:
    if not isinstance(obj, dict):
        raise ParseError("algebra file must hold a JSON object")
    n = _int(obj.get("arity"), "arity")
    d = _int(obj.get("dim"), "dim")
    if n < 2 or d < 0:
        raise ParseError("need arity >= 2 and dim >= 0")
    labels = obj.get("basis_labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != d or not all(isinstance(x, str) for x in labels):
            raise ParseError("basis_labels must be a list of dim strings")
        labels = tuple(labels)
    table = {}
    for rec in obj.get("brackets", []):
        if not isinstance(rec, dict):
            raise ParseError("bracket records must be objects")
        args = rec.get("args")
        if not isinstance(args, list) or len(args) != n:
            raise ParseError(f"bracket args must list {n} indices")
        args = tuple(_int(a, "bracket index") for a in args)
        if any(b <= a for a, b in zip(args, args[1:])):
            raise ParseError(f"bracket args {list(args)} not strictly increasing")
        if args[0] < 1 or args[-1] > d:
            raise ParseError(f"bracket args {list(args)} outside 1..{d}")
        if args in table:
            raise ParseError(f"bracket {list(args)} listed twice")
        value = rec.get("value", {})
        if not isinstance(value, dict):
            raise ParseError("bracket value must map index -> scalar string")
        v = [Fraction(0)] * d
        for k, c in value.items():
            try:
                ki = int(k)
            except ValueError:
                raise ParseError(f"bad coefficient index {k!r}") from None
            if str(ki) != k or not 1 <= ki <= d:
                raise ParseError(f"coefficient index {k!r} outside 1..{d}")
            v[ki - 1] = parse_scalar(c)
        if any(v):
            table[args] = tuple(v)
    form = None
    if obj.get("form") is not None:
        rows = obj["form"]
        if not isinstance(rows, list) or len(rows) != d or any(not isinstance(r, list) or len(r) != d for r in rows):
            raise ParseError(f"form must be a {d}x{d} matrix")
        form = Form(d, Mat(tuple(tuple(parse_scalar(x) for x in r) for r in rows), d))
    return Algebra(n, d, table, labels), form


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_algebra(path) -> tuple[Algebra, Form | None]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e
    return algebra_from_dict(obj)


def save_algebra(path, A: Algebra, form: Form | None = None) -> None:
    Path(path).write_text(dumps(algebra_to_dict(A, form)), encoding="utf-8")
