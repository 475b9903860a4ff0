"""Text formats for quasigroups, strings, leader strings, and reports, and
the portable-pixmap renderer for iterated transformations.

Conventions shared by the text formats: ASCII, newline-terminated, '#'
starts a comment line in files that accept comments. Serialization is
canonical (single spaces, no comments) so parse-serialize round trips are
idempotent.
"""
import json

from .core import Quasigroup
from .errors import FormatError
from .transforms import Const, Index

QG_EXT = ".qg"
STRING_EXT = ".qs"
IMAGE_EXT = ".ppm"
CENSUS_EXT = ".census.txt"


def parse_quasigroup(text):
    """Parse the quasigroup text format: order line, then s rows of s
    entries. Comment lines start with '#'."""
    rows = []
    order = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise FormatError(f"expected order, got {line!r}", line=lineno)
            if order < 1:
                raise FormatError(f"order must be >= 1, got {order}", line=lineno)
            continue
        if len(rows) == order:
            raise FormatError("extra row after table", line=lineno)
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"non-integer entry in row {len(rows)}", line=lineno)
        if len(row) != order:
            raise FormatError(
                f"row {len(rows)} has {len(row)} entries, expected {order}",
                line=lineno)
        rows.append(row)
    if order is None:
        raise FormatError("empty input")
    if len(rows) != order:
        raise FormatError(f"expected {order} rows, got {len(rows)}")
    return Quasigroup(rows)


def serialize_quasigroup(q):
    lines = [str(q.order)]
    lines += [" ".join(str(v) for v in row) for row in q.table]
    return "\n".join(lines) + "\n"


def parse_string(text, order):
    """Parse a symbol string: whitespace-separated base-10 symbols, or for
    order <= 10 a single run of digits ("01230")."""
    toks = text.split()
    if not toks:
        raise FormatError("empty string")
    if len(toks) == 1 and len(toks[0]) > 1 and order <= 10:
        tok = toks[0]
        if not tok.isdigit():
            raise FormatError(f"bad compact string {tok!r}")
        values = tuple(int(c) for c in tok)
    else:
        try:
            values = tuple(int(t) for t in toks)
        except ValueError:
            raise FormatError(f"non-integer symbol in {text!r}")
    for v in values:
        if not 0 <= v < order:
            raise FormatError(f"symbol {v} out of range for order {order}")
    return values


def serialize_string(a, order):
    """Compact digit form when symbols are single digits, else spaced."""
    if order <= 10:
        return "".join(str(v) for v in a)
    return " ".join(str(v) for v in a)


def parse_leaders(text):
    """Parse a leader string like "3,3,i1,i0"; "" and "()" mean empty."""
    text = text.strip()
    if text in ("", "()"):
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise FormatError(f"empty token in leader string {text!r}")
        if tok[0] in "iI":
            try:
                out.append(Index(int(tok[1:])))
            except ValueError:
                raise FormatError(f"bad index leader {tok!r}")
        else:
            try:
                out.append(Const(int(tok)))
            except ValueError:
                raise FormatError(f"bad leader token {tok!r}")
    return tuple(out)


def serialize_leaders(leaders):
    if not leaders:
        return "()"
    return ",".join(
        f"i{t.j}" if isinstance(t, Index) else str(t.value) for t in leaders)


def palette(order):
    """Symbol colors: evenly spaced gray levels, 0 lightest. The order-4
    palette is the fixed reference one."""
    if order == 1:
        return ((255, 255, 255),)
    levels = [round(255 * (order - 1 - i) / (order - 1)) for i in range(order)]
    return tuple((v, v, v) for v in levels)


def render_iterations(q, leader, motif, width, iterations, text=False):
    """Portable pixmap of iterated transformations, one string per row.

    Row 0 is the periodic extension of motif to width; row k+1 is the
    transformation of row k with the constant leader. Binary P6 by default,
    text P3 with text=True. Output is byte-identical for identical inputs.
    """
    if not motif:
        raise FormatError("motif must be non-empty")
    if width % len(motif):
        raise FormatError(f"width {width} is not a multiple of motif length {len(motif)}")
    pal = palette(q.order)
    height = iterations + 1
    table = q.table
    row = list(motif) * (width // len(motif))
    rows = [row]
    for _ in range(iterations):
        prev = rows[-1]
        nxt = []
        x = leader
        for a in prev:
            x = table[x][a]
            nxt.append(x)
        rows.append(nxt)
    if text:
        out = [f"P3\n{width} {height}\n255"]
        for r in rows:
            out.append(" ".join(" ".join(map(str, pal[v])) for v in r))
        return ("\n".join(out) + "\n").encode("ascii")
    body = bytearray()
    flat = [bytes(pal[v]) for v in range(q.order)]
    for r in rows:
        for v in r:
            body += flat[v]
    return f"P6\n{width} {height}\n255\n".encode("ascii") + bytes(body)


def decode_image(data, order):
    """Inverse of render_iterations under the same palette: symbol rows."""
    pal = {rgb: sym for sym, rgb in enumerate(palette(order))}
    if data.startswith(b"P6"):
        parts = data.split(b"\n", 3)
        if len(parts) < 4:
            raise FormatError("truncated pixmap")
        width, height = (int(t) for t in parts[1].split())
        body = parts[3]
        if len(body) != width * height * 3:
            raise FormatError("pixel payload size mismatch")
        it = iter(body)
        pixels = list(zip(it, it, it))
    elif data.startswith(b"P3"):
        toks = data.decode("ascii").split()
        width, height = int(toks[1]), int(toks[2])
        vals = [int(t) for t in toks[4:]]
        it = iter(vals)
        pixels = list(zip(it, it, it))
    else:
        raise FormatError("not a portable pixmap")
    try:
        syms = [pal[p] for p in pixels]
    except KeyError as e:
        raise FormatError(f"pixel {e.args[0]} not in the order-{order} palette")
    return [tuple(syms[y * width:(y + 1) * width]) for y in range(height)]


def serialize_attack_trace(trace, order):
    """Line record: preimage count, guesses, lookups, elapsed ms, then one
    preimage per line."""
    lines = [
        f"preimages {len(trace.preimages)}",
        f"guesses {trace.guesses}",
        f"lookups {trace.lookups}",
        f"elapsed-ms {trace.elapsed * 1000:.3f}",
    ]
    lines += [serialize_string(p, order) for p in trace.preimages]
    return "\n".join(lines) + "\n"


def serialize_histogram(hist):
    """Counts in packed-value order, preceded by the derived flags. Domains
    above 4096 list only the nonzero entries."""
    full = hist.domain_size <= 4096
    lines = [
        f"domain {hist.domain_size}",
        f"permutation {'true' if hist.is_permutation else 'false'}",
        f"regular {'true' if hist.is_regular else 'false'}",
        f"entries {'all' if full else 'nonzero'}",
    ]
    for value, count in enumerate(hist.counts.tolist()):
        if full or count:
            lines.append(f"{value} {count}")
    return "\n".join(lines) + "\n"


def _period_field(point):
    return f"{point.period}{'*' if point.capped else ''}"


def serialize_census_report(report):
    """Parameter header, then one line per quasigroup: 1-based index, label,
    witness leader string or '-', period at the final iterate ('*' marks a
    window-capped value)."""
    st = report.parameters
    lines = [
        "# census order 4",
        f"# N {st.n}",
        f"# max-leader-len {st.max_len}",
        f"# include-indices {'true' if st.include_indices else 'false'}",
        f"# alpha {st.alpha}",
        f"# iterations {st.iterations}",
        f"# width {st.width}",
        f"# motif {serialize_string(st.motif, 10)}",
        f"# threshold {st.threshold}",
        f"# fractal {len(report.fractal)}",
        f"# non-fractal {len(report.non_fractal)}",
        f"# published-diff missing {len(report.published_missing)}"
        f" extra {len(report.published_extra)}",
        f"# classifier-disagreements {len(report.disagreements)}",
    ]
    for miss in report.published_missing:
        lines.append(f"# published-only {miss}")
    for extra in report.published_extra:
        lines.append(f"# computed-only {extra}")
    for idx in report.disagreements:
        lines.append(f"# disagreement {idx}")
    total = len(report.fractal) + len(report.non_fractal)
    from .classification import FRACTAL, NON_FRACTAL

    fset = set(report.fractal)
    for idx in range(1, total + 1):
        label = FRACTAL if idx in fset else NON_FRACTAL
        w = report.witnesses.get(idx)
        witness = "-" if w is None else serialize_leaders(w)
        lines.append(f"{idx} {label} {witness} {_period_field(report.periods[idx])}")
    return "\n".join(lines) + "\n"


def serialize_census_json(report):
    """Machine-readable census export mirroring the text report fields."""
    st = report.parameters
    from .classification import FRACTAL, NON_FRACTAL

    fset = set(report.fractal)
    total = len(report.fractal) + len(report.non_fractal)
    doc = {
        "order": 4,
        "parameters": {
            "n": st.n, "maxLeaderLen": st.max_len,
            "includeIndices": st.include_indices, "alpha": st.alpha,
            "iterations": st.iterations, "width": st.width,
            "motif": list(st.motif), "threshold": st.threshold,
        },
        "fractal": list(report.fractal),
        "nonFractal": list(report.non_fractal),
        "publishedDiff": {
            "missing": list(report.published_missing),
            "extra": list(report.published_extra),
        },
        "disagreements": list(report.disagreements),
        "entries": [
            {
                "index": idx,
                "label": FRACTAL if idx in fset else NON_FRACTAL,
                "witness": None if report.witnesses.get(idx) is None
                else serialize_leaders(report.witnesses[idx]),
                "period": report.periods[idx].period,
                "capped": report.periods[idx].capped,
            }
            for idx in range(1, total + 1)
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
