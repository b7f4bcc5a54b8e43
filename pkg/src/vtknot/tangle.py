"""Oriented tangle words: a small DSL, boundary typing, and evaluation.

Words are rows of generators listed bottom to top; a row is a horizontal
tensor of generators.  Each generator has a fixed boundary type and adjacent
rows must match.  Evaluation sends a word to a matrix over Q(v,t); rows are
composed sparsely since the intermediate objects grow as d^strands.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cartan as ca
from . import linalg as la
from . import modules as mo
from . import ratfield as rf
from .ratfield import ONE

BOUNDARY = {
    "up": (("+",), ("+",)),
    "dn": (("-",), ("-",)),
    "ev": (("-", "+"), ()),
    "qtr": (("+", "-"), ()),
    "coev": ((), ("-", "+")),
    "coqtr": ((), ("+", "-")),
    "xp": (("+", "+"), ("+", "+")),
    "xm": (("+", "+"), ("+", "+")),
}

BUILTINS = {
    "unknot": "up",
    "hopf": "xp ; xp",
    "trefoil": "xp ; xp ; xp",
    "figure8": "xp * up ; up * xm ; xp * up ; up * xm",
}


class TangleError(ValueError):
    pass


@dataclass(frozen=True)
class TangleWord:
    rows: tuple
    source: tuple
    target: tuple


def _sig(seq) -> str:
    return "(" + ",".join(seq) + ")"


def _row_boundary(row):
    src, tgt = (), ()
    for g in row:
        s, t = BOUNDARY[g]
        src += s
        tgt += t
    return src, tgt


def word(rows) -> TangleWord:
    rows = tuple(tuple(r) for r in rows)
    if not rows or not all(rows):
        raise TangleError("empty tangle word")
    for row in rows:
        for g in row:
            if g not in BOUNDARY:
                raise TangleError("unknown generator %r" % (g,))
    src, prev = _row_boundary(rows[0])
    for k in range(1, len(rows)):
        s, t = _row_boundary(rows[k])
        if s != prev:
            raise TangleError(
                "type error: row %d target %s does not feed row %d source %s"
                % (k, _sig(prev), k + 1, _sig(s))
            )
        prev = t
    return TangleWord(rows, src, prev)


def parse(text: str) -> TangleWord:
    rows = []
    for rk, chunk in enumerate(text.split(";")):
        row = []
        for sk, tok in enumerate(chunk.split("*")):
            tok = tok.strip()
            if tok not in BOUNDARY:
                raise TangleError(
                    "unknown generator %r at row %d, slot %d" % (tok, rk + 1, sk + 1)
                )
            row.append(tok)
        rows.append(row)
    return word(rows)


def compose(a: TangleWord, b: TangleWord) -> TangleWord:
    """a after b: b's rows sit below a's."""
    if a.source != b.target:
        raise TangleError(
            "cannot compose: upper source %s differs from lower target %s"
            % (_sig(a.source), _sig(b.target))
        )
    return word(b.rows + a.rows)


def _id_row(sig):
    return tuple("up" if s == "+" else "dn" for s in sig)


def tensorw(a: TangleWord, b: TangleWord) -> TangleWord:
    """Horizontal concatenation; the shorter word is padded on top with
    identity rows on its target boundary."""
    n = max(len(a.rows), len(b.rows))
    ra = list(a.rows) + [_id_row(a.target)] * (n - len(a.rows))
    rb = list(b.rows) + [_id_row(b.target)] * (n - len(b.rows))
    return word([tuple(x) + tuple(y) for x, y in zip(ra, rb)])


# sparse matrices as (nrows, ncols, {r: {c: value}})


def _sparse(dense):
    nr = len(dense)
    nc = len(dense[0]) if nr else 0
    rows = {}
    for r in range(nr):
        nz = {c: x for c, x in enumerate(dense[r]) if not x.is_zero()}
        if nz:
            rows[r] = nz
    return (nr, nc, rows)


def _skron(a, b):
    ar, ac, arows = a
    br, bc, brows = b
    out = {}
    for r1, row1 in arows.items():
        for r2, row2 in brows.items():
            orow = out.setdefault(r1 * br + r2, {})
            for c1, x in row1.items():
                for c2, y in row2.items():
                    orow[c1 * bc + c2] = x * y
    return (ar * br, ac * bc, out)


def _smul(a, b):
    ar, ac, arows = a
    br, bc, brows = b
    assert ac == br, "shape mismatch"
    out = {}
    for r, row in arows.items():
        acc = {}
        for s, x in row.items():
            brow = brows.get(s)
            if not brow:
                continue
            for c, y in brow.items():
                prev = acc.get(c)
                acc[c] = x * y if prev is None else prev + x * y
        acc = {c: v for c, v in acc.items() if not v.is_zero()}
        if acc:
            out[r] = acc
    return (ar, bc, out)


def _dense(a):
    nr, nc, rows = a
    out = la.zeros(nr, nc)
    for r, row in rows.items():
        for c, x in row.items():
            out[r][c] = x
    return out


def crossing_unit(m: mo.WeightModule) -> rf.RatFunc:
    """f(lam,lam) v^2_{-lam} for the highest weight lam; the curl scalar."""
    lam = mo.highest_weight(m)
    vd = ca.v_deg(m.spec, ca.weight_neg(lam))
    return ca.f(m.spec, lam, lam) * vd * vd


def functor_T(w: TangleWord, m: mo.WeightModule, order: str = "lex") -> la.Matrix:
    """Evaluate the word on the module: + strands carry m, - strands dual(m)."""
    unit = crossing_unit(m)
    gens = {
        "up": la.identity(m.dim),
        "dn": la.identity(m.dim),
        "ev": mo.ev_map(m),
        "qtr": mo.qtr_map(m),
        "coev": mo.coev_map(m),
        "coqtr": mo.coqtr_map(m),
        "xp": la.mat_scale(mo.rmat(m, m, order), rf.inv(unit)),
        "xm": la.mat_scale(mo.rmat_inv(m, m, order), unit),
    }
    sgens = {g: _sparse(mat) for g, mat in gens.items()}
    acc = None
    for row in w.rows:
        rowmat = (1, 1, {0: {0: ONE}})
        for g in row:
            rowmat = _skron(rowmat, sgens[g])
        acc = rowmat if acc is None else _smul(rowmat, acc)
    return _dense(acc)


def closure(w: TangleWord) -> TangleWord:
    """Join matching ends of a square all-plus word, caps above, cups below."""
    n = len(w.source)
    if n == 0 or w.source != w.target or any(s != "+" for s in w.source):
        raise TangleError("closure needs a square all-plus boundary, got %s -> %s"
                          % (_sig(w.source), _sig(w.target)))
    cup = word([("coqtr",)])
    cap = word([("qtr",)])
    for k in range(2, n + 1):
        ring = ("up",) * (k - 1) + ("coqtr",) + ("dn",) * (k - 1)
        cup = compose(word([ring]), cup)
        ring = ("up",) * (k - 1) + ("qtr",) + ("dn",) * (k - 1)
        cap = compose(cap, word([ring]))
    mid = tensorw(w, word([("dn",) * n]))
    return compose(cap, compose(mid, cup))


def invariant(w, m: mo.WeightModule, order: str = "lex") -> rf.RatFunc:
    if isinstance(w, str):
        w = parse(BUILTINS.get(w.strip(), w))
    return functor_T(closure(w), m, order)[0][0]
