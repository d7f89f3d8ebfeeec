#!/usr/bin/env python3
"""Extract the appendix table rows from paper.md into data/appendix_c32.csv."""
import re
import sys

SRC = "paper.md"
DST = "data/appendix_c32.csv"

row_re = re.compile(
    r"^\s*(\d+)\s*&\s*(\d+)\s*&\s*\$([^$]+)\$\s*&\s*(.+?)\s*\\\\"
)

def parse_symbol(tex: str) -> str:
    # "A_{1,64}A_{3,128}^2" -> "A1,64 A3,128^2"
    out = []
    for m in re.finditer(r"([A-G])_\{(\d+),\s*(\d+)\}(?:\^\{?(\d+)\}?)?", tex):
        fam, rank, lvl, mult = m.group(1), m.group(2), m.group(3), m.group(4)
        tok = f"{fam}{rank},{lvl}"
        if mult and int(mult) > 1:
            tok += f"^{mult}"
        out.append(tok)
    covered = re.sub(r"([A-G])_\{(\d+),\s*(\d+)\}(?:\^\{?(\d+)\}?)?", "", tex)
    if re.search(r"[A-G]_", covered):
        raise ValueError(f"unparsed factor in {tex!r}")
    return " ".join(out)

def parse_result(tex: str):
    t = tex.strip()
    if t.startswith("?"):
        return ("unknown", "none")
    if t.startswith("X"):
        m = re.search(r"\((dim|Jac|char)\)", t)
        if not m:
            raise ValueError(f"bad X row: {tex!r}")
        return ("X_" + m.group(1).lower(), "none")
    if "Checkmark" in t:
        if "lat" in t:
            return ("pass", "lat")
        if "DGM" in t:
            return ("pass", "dgm")
        return ("pass", "open")
    raise ValueError(f"bad result: {tex!r}")

def main():
    rows = {}
    with open(SRC) as f:
        in_appendix = False
        for line in f:
            if r"\appendix" in line:
                in_appendix = True
            if not in_appendix:
                continue
            # some source lines hold two table rows separated by '\\'
            for piece in line.split(r"\\"):
                piece = piece.strip()
                m = row_re.match(piece + r"\\") if piece else None
                if not m:
                    continue
                idx = int(m.group(1))
                dim = int(m.group(2))
                sym = parse_symbol(m.group(3))
                verdict, real = parse_result(m.group(4))
                if idx in rows:
                    raise ValueError(f"duplicate row {idx}")
                rows[idx] = (dim, sym, verdict, real)
    missing = [i for i in range(1, 450) if i not in rows]
    if missing:
        print("MISSING:", missing, file=sys.stderr)
        sys.exit(1)
    extra = [i for i in rows if i < 1 or i > 449]
    if extra:
        print("EXTRA:", extra, file=sys.stderr)
        sys.exit(1)
    with open(DST, "w") as f:
        f.write("index,dim_v1,symbol,verdict,realization\n")
        for i in range(1, 450):
            dim, sym, verdict, real = rows[i]
            f.write(f'{i},{dim},"{sym}",{verdict},{real}\n')
    from collections import Counter
    c = Counter(v for (_, _, v, _) in rows.values())
    r = Counter(v for (_, _, _, v) in rows.values())
    print("verdicts:", dict(c))
    print("realizations:", dict(r))
    print(f"wrote {len(rows)} rows to {DST}")

if __name__ == "__main__":
    main()
