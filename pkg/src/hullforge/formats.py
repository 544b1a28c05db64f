"""Text formats: code files, witness files.

Code file (one code per file)::

    q=5 p=5 m=1
    n=7 k=3
    1 0 0 0 0 2 0
    0 1 0 2 2 0 4
    0 0 1 1 3 0 3

For extension fields an optional second line ``modulus=c0,c1,...,cm``
(little-endian coefficients) pins the field representation; omitted it
defaults to the lexicographically smallest irreducible, and it is
rejected for m=1.

Witness file: the transform lines ``sigma=...`` and ``a=...`` (1-based
permutation images, integer scaling encodings), followed by optional
``claim_<name>=<int>`` lines (h, n, k, d) that `verify` re-checks.

All indices in these formats are 1-based.
"""

from __future__ import annotations

from pathlib import Path

from .code import LinearCode, MonomialTransform
from .errors import ParseError
from .gf import FieldSpec

CLAIM_KEYS = ("h", "n", "k", "d")


def _parse_assign(token: str, key: str, lineno: int, col: int) -> str:
    if not token.startswith(key + "="):
        raise ParseError(f"expected {key}=<value>, got {token!r}", lineno, col)
    return token[len(key) + 1:]


def _parse_int(text: str, what: str, lineno: int, col: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {text!r}", lineno, col) from None


def parse_code(text: str) -> LinearCode:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())
             if ln.strip()]
    if not lines:
        raise ParseError("empty code file", 1)
    pos = 0

    lineno, header = lines[pos]
    tokens = header.split()
    if len(tokens) != 3:
        raise ParseError("header must be 'q=<int> p=<int> m=<int>'", lineno, 1)
    col = 1
    vals = {}
    for token, key in zip(tokens, ("q", "p", "m")):
        vals[key] = _parse_int(_parse_assign(token, key, lineno, col), key,
                               lineno, col)
        col = header.find(token, col - 1) + len(token) + 2
    pos += 1

    modulus = None
    if pos < len(lines) and lines[pos][1].startswith("modulus="):
        lineno, mline = lines[pos]
        if vals["m"] == 1:
            raise ParseError("modulus line not allowed for m=1", lineno, 1)
        raw = mline[len("modulus="):]
        modulus = [_parse_int(c, "modulus coefficient", lineno, 1)
                   for c in raw.split(",")]
        pos += 1

    try:
        spec = FieldSpec(vals["p"], vals["m"], modulus)
    except ValueError as exc:
        raise ParseError(str(exc), lines[0][0], 1) from None
    if spec.q != vals["q"]:
        raise ParseError(f"q={vals['q']} is not p^m={spec.q}", lines[0][0], 1)

    if pos >= len(lines):
        raise ParseError("missing 'n=<int> k=<int>' line", lines[-1][0] + 1)
    lineno, dims = lines[pos]
    tokens = dims.split()
    if len(tokens) != 2:
        raise ParseError("size line must be 'n=<int> k=<int>'", lineno, 1)
    n = _parse_int(_parse_assign(tokens[0], "n", lineno, 1), "n", lineno, 1)
    k = _parse_int(_parse_assign(tokens[1], "k", lineno, 1), "k", lineno, 1)
    pos += 1

    rows = []
    for r in range(k):
        if pos >= len(lines):
            raise ParseError(f"expected {k} generator rows, got {r}",
                             lines[-1][0] + 1)
        lineno, rowline = lines[pos]
        entries = rowline.split()
        if len(entries) != n:
            raise ParseError(f"row has {len(entries)} entries, expected n={n}",
                             lineno, 1)
        row = []
        for c, tok in enumerate(entries):
            v = _parse_int(tok, "matrix entry", lineno, c + 1)
            if not 0 <= v < spec.q:
                raise ParseError(f"entry {v} outside [0, {spec.q})", lineno, c + 1)
            row.append(v)
        rows.append(row)
        pos += 1
    if pos != len(lines):
        raise ParseError("trailing content after the generator rows",
                         lines[pos][0], 1)
    code = LinearCode(spec, rows)
    if code.k != k:
        raise ParseError(
            f"generator rows have rank {code.k}, header claims k={k}",
            lines[0][0])
    return code


def format_code(code: LinearCode) -> str:
    spec = code.spec
    out = [f"q={spec.q} p={spec.p} m={spec.m}"]
    if spec.m > 1:
        out.append("modulus=" + ",".join(str(c) for c in spec.modulus))
    out.append(f"n={code.n} k={code.k}")
    for row in code.G.rows_values():
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def parse_witness(text: str) -> tuple[MonomialTransform, dict[str, int]]:
    sigma = None
    a = None
    claims: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("sigma="):
            sigma = [_parse_int(t, "sigma entry", lineno, 1)
                     for t in line[len("sigma="):].split()]
        elif line.startswith("a="):
            a = [_parse_int(t, "scaling entry", lineno, 1)
                 for t in line[len("a="):].split()]
        elif line.startswith("claim_"):
            key, _, value = line.partition("=")
            name = key[len("claim_"):]
            if name not in CLAIM_KEYS:
                raise ParseError(f"unknown claim {name!r}", lineno, 1)
            claims[name] = _parse_int(value, f"claim_{name}", lineno, 1)
        else:
            raise ParseError(f"unrecognized witness line: {line!r}", lineno, 1)
    if sigma is None or a is None:
        raise ParseError("witness needs both a sigma= and an a= line", 1)
    try:
        transform = MonomialTransform(tuple(sigma), tuple(a))
    except Exception as exc:
        raise ParseError(f"invalid transform: {exc}", 1) from None
    return transform, claims


def format_witness(transform: MonomialTransform, claims: dict[str, int] | None = None) -> str:
    out = [
        "sigma=" + " ".join(str(v) for v in transform.sigma),
        "a=" + " ".join(str(v) for v in transform.a),
    ]
    for key in CLAIM_KEYS:
        if claims and key in claims and claims[key] is not None:
            out.append(f"claim_{key}={claims[key]}")
    return "\n".join(out) + "\n"


def load_code(path) -> LinearCode:
    return parse_code(Path(path).read_text(encoding="utf-8"))


def save_code(path, code: LinearCode):
    Path(path).write_text(format_code(code), encoding="utf-8")


def load_witness(path) -> tuple[MonomialTransform, dict[str, int]]:
    return parse_witness(Path(path).read_text(encoding="utf-8"))


def save_witness(path, transform: MonomialTransform, claims=None):
    Path(path).write_text(format_witness(transform, claims), encoding="utf-8")
