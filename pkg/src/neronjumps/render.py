"""Rendering of results as text, JSON, CSV or TeX.

Machine formats carry exact fractions only. Text may append decimals, always
behind an explicit "≈".
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from .errors import StructuralError
from .jumps import DJumpMultiset, JumpMultiset, djumps_to_json, jumps_to_json
from .zeta import LPolynomial, RationalSeries, TailTerm

FORMATS = ("text", "json", "csv", "tex")

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise StructuralError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return fmt


def frac_text(x: Fraction | int, decimals: bool = False) -> str:
    x = Fraction(x)
    s = str(x)
    if decimals and x.denominator != 1:
        s += f" (≈{float(x):.6g})"
    return s


def frac_tex(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\tfrac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _csv(rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue().rstrip("\n")


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


# ---- multisets and scalars -------------------------------------------------

def render_jumps(m: JumpMultiset, fmt: str = "text", decimals: bool = False) -> str:
    if fmt == "json":
        return dumps({"jumps": jumps_to_json(m)})
    if fmt == "csv":
        return _csv([("jump", "multiplicity")] + [(str(j), k) for j, k in m.entries])
    if fmt == "tex":
        body = ", ".join(f"{frac_tex(j)}^{{({k})}}" if k > 1 else frac_tex(j) for j, k in m.entries)
        return f"\\{{{body}\\}}"
    if not m.entries:
        return "(empty)"
    return ", ".join(f"{frac_text(j, decimals)}:{k}" for j, k in m.entries)


def render_djumps(m: DJumpMultiset, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(djumps_to_json(m))
    if fmt == "csv":
        return _csv([("d_jump", "multiplicity")] + list(m.entries))
    if fmt == "tex":
        body = ", ".join(f"{j}^{{({k})}}" if k > 1 else str(j) for j, k in m.entries)
        return f"\\{{{body}\\}}_{{d={m.modulus}}}"
    return str(m)


def render_scalar(name: str, value: Fraction | int, fmt: str = "text", decimals: bool = False,
                  **extra: Any) -> str:
    if fmt == "json":
        out: Dict[str, Any] = {name: str(Fraction(value))}
        out.update(extra)
        return dumps(out)
    if fmt == "csv":
        keys = [name] + list(extra)
        return _csv([keys, [str(Fraction(value))] + [extra[k] for k in extra]])
    if fmt == "tex":
        return frac_tex(value)
    return frac_text(value, decimals)


# ---- zeta series -------------------------------------------------------------

def lpoly_tex(c: LPolynomial) -> str:
    f = c.factor_lm1()
    if f is None:
        terms = []
        for k in range(len(c.coeffs) - 1, -1, -1):
            a = c.coeffs[k]
            if a:
                mon = "" if k == 0 else ("\\mathbb{L}" if k == 1 else f"\\mathbb{{L}}^{{{k}}}")
                terms.append(f"{frac_tex(a) if (a != 1 or not mon) else ''}{mon}")
        return "(" + " + ".join(terms) + ")"
    k, a, b = f
    parts = []
    if a:
        parts.append("(\\mathbb{L}-1)" + (f"^{{{a}}}" if a > 1 else ""))
    if b:
        parts.append("\\mathbb{L}" + (f"^{{{b}}}" if b > 1 else ""))
    body = "".join(parts)
    if not body:
        return frac_tex(k)
    if k == 1:
        return body
    if k == -1:
        return "-" + body
    return frac_tex(k) + body


def _xpow(k: int, unicode: bool = True) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "x"
    return "x" + (str(k).translate(_SUP) if unicode else f"^{k}")


def _lpow(k: int) -> str:
    if k == 0:
        return ""
    return "𝐋" + (str(k).translate(_SUP) if k > 1 else "")


def _coeff_times(c: LPolynomial, mon: str) -> str:
    t = c.to_text()
    if not mon:
        return t
    if t == "1":
        return mon
    if t == "-1":
        return "-" + mon
    return t + mon


def series_to_json(s: RationalSeries) -> Dict[str, Any]:
    return {
        "prefix": [{"d": k, "coeff": s.prefix[k].to_json()} for k in sorted(s.prefix)],
        "tails": [
            {"coeff": t.coeff.to_json(), "alpha": t.alpha, "A": t.A, "B": t.B, "power": t.power}
            for t in s.tails
        ],
    }


def series_from_json(obj: Dict[str, Any]) -> RationalSeries:
    def poly(cs):
        return LPolynomial(Fraction(c) if isinstance(c, str) else c for c in cs)

    prefix = {int(e["d"]): poly(e["coeff"]) for e in obj.get("prefix", [])}
    tails = [TailTerm(poly(t["coeff"]), t["alpha"], t["A"], t["B"], t.get("power", 1)) for t in obj.get("tails", [])]
    return RationalSeries(prefix, tails)


def render_truncated(s: RationalSeries, n_terms: int, fmt: str = "text") -> str:
    coeffs = s.expand(n_terms)
    if fmt == "json":
        return dumps({"n_terms": n_terms, **series_to_json(RationalSeries(coeffs, []))})
    if fmt == "csv":
        return _csv([("d", "coeff")] + [(k, " ".join(map(str, c.to_json()))) for k, c in coeffs.items()])
    if fmt == "tex":
        body = " + ".join(f"{lpoly_tex(c)}\\,x^{{{k}}}" for k, c in coeffs.items())
        return (body or "0") + " + \\cdots"
    body = " + ".join(_coeff_times(c, _xpow(k)) for k, c in coeffs.items())
    return (body or "0") + " + …"


def _tail_text(t: TailTerm) -> str:
    den = "1 − " + " ".join(x for x in (_lpow(t.A), _xpow(t.B)) if x)
    den = f"({den})" + (str(t.power).translate(_SUP) if t.power > 1 else "")
    return f"{_coeff_times(t.coeff, _xpow(t.alpha))}/{den}"


def _tail_tex(t: TailTerm) -> str:
    lp = "" if t.A == 0 else ("\\mathbb{L}" if t.A == 1 else f"\\mathbb{{L}}^{{{t.A}}}")
    den = f"(1-{lp}x^{{{t.B}}})" + (f"^{{{t.power}}}" if t.power > 1 else "")
    return f"\\frac{{{lpoly_tex(t.coeff)}\\,x^{{{t.alpha}}}}}{{{den}}}"


def render_closed(s: RationalSeries, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(series_to_json(s))
    if fmt == "csv":
        rows: List[Sequence[Any]] = [("kind", "alpha", "A", "B", "power", "coeff")]
        rows += [("prefix", k, "", "", "", " ".join(map(str, s.prefix[k].to_json()))) for k in sorted(s.prefix)]
        rows += [("tail", t.alpha, t.A, t.B, t.power, " ".join(map(str, t.coeff.to_json()))) for t in s.tails]
        return _csv(rows)
    if fmt == "tex":
        parts = [f"{lpoly_tex(s.prefix[k])}\\,x^{{{k}}}" for k in sorted(s.prefix)]
        parts += [_tail_tex(t) for t in s.tails]
        return " + ".join(parts) or "0"
    parts = [_coeff_times(s.prefix[k], _xpow(k)) for k in sorted(s.prefix)]
    parts += [_tail_text(t) for t in s.tails]
    return " + ".join(parts) or "0"


# ---- generic tables ------------------------------------------------------------

def render_table(header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str = "text") -> str:
    if fmt == "json":
        return dumps([dict(zip(header, map(_jsonable, r))) for r in rows])
    if fmt == "csv":
        return _csv([header] + [list(map(str, r)) for r in rows])
    if fmt == "tex":
        cols = "l" * len(header)
        lines = [f"\\begin{{tabular}}{{{cols}}}", " & ".join(header) + " \\\\ \\hline"]
        lines += [" & ".join(map(str, r)) + " \\\\" for r in rows]
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    out = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    out += ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(out)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x
