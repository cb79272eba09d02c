"""Text and JSON serialization of matrices and block matrices.

Text layout::

    field p=5 modulus=x^3+3x+3      # modulus omitted for prime fields
    block=3                         # optional, marks a block matrix
    companion=x^3+3x+3              # optional, attaches a CompanionCtx
    form=compact                    # optional, blocks written as C^k / O
    rows=3 cols=3
    [0,1,0] [0,2,0] [0,2,0]
    ...

Prime-field entries are bare integers. Extension entries are constant-first
coefficient lists, or ``a^k`` / ``α^k`` for powers of alpha.
"""
from __future__ import annotations

import json
import re

import numpy as np

from . import poly as P
from .companion import BlockMat, CompanionCtx
from .field import GF
from .linalg import Mat

SCHEMA = 1
_TOKEN = re.compile(r"\[[^\]]*\]|\S+")
_POWER = re.compile(r"^(-?\d*)\*?(?:a|α|alpha)(?:\^(\d+))?$")


def field_header(field):
    if field.modulus == (0, 1):
        return f"field p={field.p}"
    return f"field p={field.p} modulus={P.format_poly(field.modulus)}"


def _parse_entry(field, tok):
    if tok.startswith("["):
        return field(int(c) for c in tok.strip("[]").split(",") if c.strip())
    m = _POWER.match(tok)
    if m and field.n > 1:
        c = m.group(1)
        coef = 1 if c in ("", None) else (-1 if c == "-" else int(c))
        e = int(m.group(2)) if m.group(2) else 1
        return field.alpha**e * coef
    return field(int(tok))


def _fmt_entry(x):
    if x.field.n == 1:
        return str(x.value)
    return "[" + ",".join(str(c) for c in x.coeffs) + "]"


def dumps_text(obj, compact=False):
    M = obj.inner if isinstance(obj, BlockMat) else obj
    lines = [field_header(M.field)]
    ctx = obj.ctx if isinstance(obj, BlockMat) else None
    if isinstance(obj, BlockMat):
        lines.append(f"block={obj.block_size}")
        if ctx is not None:
            lines.append(f"companion={P.format_poly(ctx.poly)}")
    lines.append(f"rows={M.rows} cols={M.cols}")
    if compact and ctx is not None:
        lines[-1:-1] = ["form=compact"]
        for row in ctx.power_pattern(obj):
            lines.append(" ".join("O" if k is None else f"C^{k}" for k in row))
    else:
        for row in M.tolist():
            lines.append(" ".join(_fmt_entry(x) for x in row))
    return "\n".join(lines) + "\n"


def loads_text(text):
    header = {}
    data = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field") or re.match(r"^(rows|cols|block|companion|form)=", line):
            for part in line.split()[1:] if line.startswith("field") else line.split():
                k, _, v = part.partition("=")
                header[k] = v
            continue
        data.append(_TOKEN.findall(line))
    if "p" not in header:
        raise ValueError("missing 'field p=...' header")
    p = int(header["p"])
    field = GF(p, header.get("modulus", "prime"))
    rows, cols = int(header["rows"]), int(header["cols"])
    ctx = CompanionCtx(header["companion"], p) if "companion" in header else None
    if header.get("form") == "compact":
        if ctx is None:
            raise ValueError("compact form needs a companion= header")
        n = ctx.n
        codes = np.zeros((rows, cols), dtype=np.int64)
        for i, toks in enumerate(data):
            for j, tok in enumerate(toks):
                if tok != "O":
                    k = int(tok.split("^")[1]) if "^" in tok else 1
                    codes[i * n:(i + 1) * n, j * n:(j + 1) * n] = (ctx.C**k).codes
        M = Mat.from_codes(field, codes)
    else:
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"expected {rows}x{cols} entries")
        M = Mat(field, [[_parse_entry(field, t) for t in r] for r in data])
    if "block" in header:
        return BlockMat(M, int(header["block"]), ctx)
    return M


def to_json_obj(obj):
    M = obj.inner if isinstance(obj, BlockMat) else obj
    f = M.field
    out = {
        "schema": SCHEMA,
        "field": {"p": f.p, "modulus": None if f.modulus == (0, 1) else P.format_poly(f.modulus)},
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[list(x.coeffs) for x in row] for row in M.tolist()],
    }
    if isinstance(obj, BlockMat):
        out["block"] = obj.block_size
        if obj.ctx is not None:
            out["companion"] = P.format_poly(obj.ctx.poly)
    return out


def from_json_obj(obj):
    fdesc = obj["field"]
    field = GF(int(fdesc["p"]), fdesc.get("modulus") or "prime")
    entries = [[x if isinstance(x, int) else list(x) for x in row] for row in obj["entries"]]
    M = Mat(field, entries)
    if M.shape != (obj["rows"], obj["cols"]):
        raise ValueError(f"declared {obj['rows']}x{obj['cols']} but entries are {M.rows}x{M.cols}")
    if "block" in obj:
        ctx = CompanionCtx(obj["companion"], field.p) if obj.get("companion") else None
        return BlockMat(M, int(obj["block"]), ctx)
    return M


def dumps_json(obj):
    return json.dumps(to_json_obj(obj))


def loads(text):
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return from_json_obj(json.loads(text))
    return loads_text(text)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(obj, path, fmt="text"):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(obj) + "\n" if fmt == "json" else dumps_text(obj))
