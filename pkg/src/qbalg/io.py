"""Presentation files and JSON reports.

Presentation grammar, one statement per line::

    # comment
    gens x y z t
    rel x*y = z*t
    rel x*z = -2/3 * y*t
    lmap x : (y t)(z u)

A file holds either ``rel`` lines (giving a RelationSet) or one ``lmap``
line per generator (giving the quadratic set
r(x, y) = (L_x(y), L_y^{-1}(x))), never both.
"""
import json
import re
from fractions import Fraction

from .errors import PresentationError
from .quadratic_set import QuadraticSet, load_from_lmap
from .relations import Relation, RelationSet, relations_from_set

FORMAT_VERSION = 1

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_NAME_RE = re.compile(_NAME + r"$")
_MONO_RE = re.compile(rf"\s*({_NAME})\s*\*\s*({_NAME})\s*$")
_SCALED_RE = re.compile(r"\s*([+-]?\d+(?:\s*/\s*\d+)?)\s*\*\s*(.*)$")


def _column(raw, fragment):
    pos = raw.find(fragment.strip()) if fragment.strip() else -1
    return pos + 1 if pos >= 0 else None


def _monomial(text, index, lineno, raw):
    m = _MONO_RE.match(text)
    if not m:
        raise PresentationError(f"expected a monomial a*b, got {text.strip()!r}",
                                lineno, _column(raw, text))
    out = []
    for name in m.groups():
        if name not in index:
            raise PresentationError(f"unknown generator {name!r}", lineno,
                                    _column(raw, name))
        out.append(index[name])
    return tuple(out)


def _parse_rel(body, index, lineno, raw):
    if body.count("=") != 1:
        raise PresentationError("relation needs exactly one '='", lineno)
    left, right = body.split("=")
    lhs = _monomial(left, index, lineno, raw)
    coeff = Fraction(1)
    m = _SCALED_RE.match(right)
    if m:
        try:
            coeff = Fraction(m.group(1).replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            raise PresentationError(f"bad rational {m.group(1)!r}", lineno,
                                    _column(raw, m.group(1))) from None
        if coeff == 0:
            raise PresentationError("zero coefficient", lineno, _column(raw, m.group(1)))
        right = m.group(2)
    rhs = _monomial(right, index, lineno, raw)
    return Relation(lhs, rhs, coeff)


def _parse_cycles(body, index, lineno, raw):
    n = len(index)
    perm = list(range(n))
    text = body.strip()
    if text in ("", "()", "id"):
        return perm
    pos = 0
    seen = set()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise PresentationError("expected '(' in cycle notation", lineno,
                                    _column(raw, text[pos:]))
        end = text.find(")", pos)
        if end < 0:
            raise PresentationError("unclosed cycle", lineno, _column(raw, text[pos:]))
        names = [s for s in re.split(r"[\s,]+", text[pos + 1:end]) if s]
        for name in names:
            if name not in index:
                raise PresentationError(f"unknown generator {name!r}", lineno,
                                        _column(raw, name))
            if name in seen:
                raise PresentationError(f"{name!r} repeated in cycle notation", lineno)
            seen.add(name)
        cyc = [index[s] for s in names]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
        pos = end + 1
    return perm


def parse_presentation(text):
    """Parse presentation text into a RelationSet or a QuadraticSet."""
    names = None
    index = {}
    rels = []
    lmaps = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, body = line.partition(" ")
        if names is None:
            if keyword != "gens":
                raise PresentationError("first statement must be 'gens'", lineno, 1)
            names = body.split()
            if not names:
                raise PresentationError("no generators declared", lineno)
            for name in names:
                if not _NAME_RE.match(name):
                    raise PresentationError(f"bad generator name {name!r}", lineno,
                                            _column(raw, name))
                if name in index:
                    raise PresentationError(f"duplicate generator {name!r}", lineno,
                                            _column(raw, name))
                index[name] = len(index)
            continue
        if keyword == "rel":
            if lmaps:
                raise PresentationError("cannot mix 'rel' and 'lmap' lines", lineno, 1)
            rel = _parse_rel(body, index, lineno, raw)
            rels.append((rel, lineno))
        elif keyword == "lmap":
            if rels:
                raise PresentationError("cannot mix 'rel' and 'lmap' lines", lineno, 1)
            head, sep, cycles = body.partition(":")
            name = head.strip()
            if not sep:
                raise PresentationError("lmap needs ':'", lineno)
            if name not in index:
                raise PresentationError(f"unknown generator {name!r}", lineno,
                                        _column(raw, name) if name else None)
            if name in lmaps:
                raise PresentationError(f"second lmap for {name!r}", lineno)
            lmaps[name] = _parse_cycles(cycles, index, lineno, raw)
        elif keyword == "gens":
            raise PresentationError("'gens' may appear only once", lineno, 1)
        else:
            raise PresentationError(f"unknown statement {keyword!r}", lineno, 1)
    if names is None:
        raise PresentationError("empty presentation")
    if lmaps:
        missing = [s for s in names if s not in lmaps]
        if missing:
            raise PresentationError(f"no lmap for {', '.join(missing)}")
        try:
            return load_from_lmap(len(names), [lmaps[s] for s in names], names)
        except ValueError as exc:
            raise PresentationError(str(exc)) from None
    seen = {}
    for rel, lineno in rels:
        for mono in (rel.lhs, rel.rhs):
            word = "*".join(names[c] for c in mono)
            if mono in seen:
                raise PresentationError(
                    f"monomial {word} already used on line {seen[mono]}", lineno)
            seen[mono] = lineno
        if rel.lhs == rel.rhs:
            raise PresentationError("both sides of the relation are equal", lineno)
    return RelationSet(len(names), tuple(r for r, _ in rels), tuple(names))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def format_scalar(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _cycles(perm, names):
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        out.append("(" + " ".join(names[c] for c in cyc) + ")")
    return "".join(out) or "()"


def emit_presentation(obj):
    """Text that parses back to the same relations or the same rmap.

    A QuadraticSet is written with ``lmap`` lines when r has the form
    (L_x(y), L_y^{-1}(x)) and as relations otherwise (r must be involutive).
    """
    names = list(obj.names)
    lines = ["gens " + " ".join(names)]
    if isinstance(obj, QuadraticSet):
        try:
            candidate = load_from_lmap(obj.n, [list(row) for row in obj.left], obj.names)
        except ValueError:  # some L_x not a permutation, or r not bijective
            candidate = None
        if candidate is not None and candidate.rmap == obj.rmap:
            for x, row in enumerate(obj.left):
                lines.append(f"lmap {names[x]} : {_cycles(row, names)}")
            return "\n".join(lines) + "\n"
        obj = relations_from_set(obj)
    for rel in obj.rels:
        lhs = "*".join(names[c] for c in rel.lhs)
        rhs = "*".join(names[c] for c in rel.rhs)
        coeff = "" if rel.coeff == 1 else f"{format_scalar(rel.coeff)} * "
        lines.append(f"rel {lhs} = {coeff}{rhs}")
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value


def emit_report(results):
    """Key-sorted JSON with a ``format`` header; byte-stable for equal input."""
    doc = {"format": FORMAT_VERSION}
    doc.update(_jsonable(results))
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
