"""Offline oracle: torsion structures from PARI/GP (via cypari2) for test curves.

Writes tests/data/pari_torsion.json. Not needed to build or run the tests.
Elements use w = sqrt(D); omega = (1+w)/2 when D = 1 mod 4, else w.
"""
import json
import random
import sys
from fractions import Fraction

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)

FIELDS = [-2, -7, -11, -19, -43, -67, -163]
SEED = 20240611
PER_FIELD = 200
EXT_PER_FIELD = 30
NORM_BOUND = 10**4


def omega(D):
    return (Fraction(1, 2), Fraction(1, 2)) if D % 4 == 1 else (Fraction(0), Fraction(1))


def elem(D, a, b):
    """a + b*omega as (rational part, w part)."""
    o = omega(D)
    return (Fraction(a) + b * o[0], b * o[1])


def norm(D, x):
    return x[0] ** 2 - D * x[1] ** 2


def text(x):
    r, s = x
    def q(v):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if s == 0:
        return q(r)
    return f"({q(r)})+({q(s)})*w"


def gp(x):
    return f"(({x[0]})+({x[1]})*t)"


def mul(D, x, y):
    return (x[0] * y[0] + D * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def shape(tors):
    cyc = [int(c) for c in tors[1]]
    if not cyc:
        return "0"
    if len(cyc) == 1:
        return f"Z/{cyc[0]}"
    return f"Z/{cyc[1]}xZ/{cyc[0]}"


_nf = {}


def nf(D):
    if D not in _nf:
        _nf[D] = pari(f"nfinit(t^2 - ({D}))")
    return _nf[D]


def tors_K(D, al, be):
    K = nf(D)
    E = pari.ellinit([0, pari(gp(add(al, be))), 0, pari(gp(mul(D, al, be))), 0], K)
    return shape(pari.elltors(E))


def is_square_K(D, d):
    K = nf(D)
    return len(pari.nfroots(K, pari(f"x^2 - {gp(d)}"))) > 0


def tors_L(D, al, be, d):
    K = nf(D)
    pol, a, k = pari.rnfequation(K, pari(f"x^2 - {gp(d)}"), 1)
    L = pari.nfinit(pol)
    img = lambda x: pari(f"subst(lift({gp(x)}), t, {pari.lift(a)})")
    E = pari.ellinit([0, img(add(al, be)), 0, img(mul(D, al, be)), 0], L)
    return shape(pari.elltors(E))


def rand_elem(rng, D):
    ba = int(NORM_BOUND ** 0.5)
    bb = max(1, int(2 * ba / abs(D) ** 0.5))
    while True:
        b = 0 if rng.random() < 0.25 else rng.randint(-bb, bb)
        x = elem(D, rng.randint(-ba, ba), b)
        if x != (0, 0) and abs(norm(D, x)) <= NORM_BOUND:
            return x


def twist_values(D):
    vals = [elem(D, v, 0) for v in (-1, -3, 2, -5, 21)] + [elem(D, 0, 1), elem(D, 1, 1)]
    return [d for d in vals if not is_square_K(D, d)]


def constructed(D):
    e = lambda a, b=0: elem(D, a, b)
    m = lambda x, y: mul(D, x, y)
    out = []
    for s, t in [(e(1), e(2)), (e(2), e(3)), (e(1, 1), e(3)), (e(2, 1), e(1, -1))]:
        out.append((m(s, s), m(t, t)))
    for a, b in [(e(2), e(1)), (e(3), e(1)), (e(-3), e(1)), (e(1, 1), e(1)), (e(2), e(-5))]:
        a3 = m(m(a, a), a)
        b3 = m(m(b, b), b)
        out.append((m(a3, add(a, m(e(2), b))), m(b3, add(b, m(e(2), a)))))
    out += [(e(81), e(256)), (e(225), e(64)), (e(64), e(189)), (e(-1), e(-2)), (e(1), e(2))]
    return [c for c in out if c[0] != c[1] and c[0] != (0, 0) and c[1] != (0, 0)]


def main(path):
    rng = random.Random(SEED)
    doc = {"seed": SEED, "norm_bound": NORM_BOUND, "source": "PARI/GP elltors", "curves": []}
    for D in FIELDS:
        curves = []
        while len(curves) < PER_FIELD:
            al, be = rand_elem(rng, D), rand_elem(rng, D)
            if al != be:
                curves.append(("random", al, be))
        curves += [("constructed", al, be) for al, be in constructed(D)]
        tw = twist_values(D)
        n_ext = 0
        for kind, al, be in curves:
            rec = {"D": D, "kind": kind, "alpha": text(al), "beta": text(be), "base": tors_K(D, al, be)}
            if kind == "constructed" or n_ext < EXT_PER_FIELD:
                if kind == "random":
                    n_ext += 1
                rows = []
                for d in tw:
                    rows.append({"d": text(d), "twist": tors_K(D, mul(D, d, al), mul(D, d, be)),
                                 "ext": tors_L(D, al, be, d)})
                rec["twists"] = rows
            doc["curves"].append(rec)
        print(D, len(curves), file=sys.stderr)
    with open(path, "w") as f:
        json.dump(doc, f, indent=0)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/pari_torsion.json")
