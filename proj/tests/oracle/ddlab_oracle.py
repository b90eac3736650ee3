#!/usr/bin/env python3
"""Brute-force reference for the corpus fixtures.

Deliberately shares no code or data layout with the C++ engine: its own
.se/.dcx reader, dict-based exterior algebra, naive Gaussian elimination
over Q(i), and dimension counting by rank formulas only.

    python3 ddlab_oracle.py corpus/manifest.json corpus/fixtures
"""
import itertools
import json
import re
import sys
from fractions import Fraction
from pathlib import Path


class GQ:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, o):
        return GQ(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GQ(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __mul__(self, o):
        return GQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def inv(self):
        n = self.re * self.re + self.im * self.im
        return GQ(self.re / n, -self.im / n)

    def conj(self):
        return GQ(self.re, -self.im)

    def iszero(self):
        return self.re == 0 and self.im == 0


ZERO = GQ()
ONE = GQ(1)


def parse_scalar(s):
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.replace(" ", "")
    total = GQ()
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        imag = body.endswith("i")
        if imag:
            body = body[:-1] or "1"
        v = Fraction(body) * (-1 if sign == "-" else 1)
        total = total + (GQ(0, v) if imag else GQ(v))
    return total


# ---------------------------------------------------------------- exterior algebra
# A form is a dict {tuple_of_sorted_letters: GQ}. Letter k < n is phi_k,
# letter n + k is its conjugate.

def sort_sign(letters):
    letters = list(letters)
    if len(set(letters)) != len(letters):
        return 0, None
    sign = 1
    for i in range(len(letters)):
        for j in range(len(letters) - 1 - i):
            if letters[j] > letters[j + 1]:
                letters[j], letters[j + 1] = letters[j + 1], letters[j]
                sign = -sign
    return sign, tuple(letters)


def add_into(acc, key, c):
    v = acc.get(key, ZERO) + c
    if v.iszero():
        acc.pop(key, None)
    else:
        acc[key] = v


def wedge(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            s, k = sort_sign(ka + kb)
            if s:
                add_into(out, k, ca * cb * GQ(s))
    return out


class Model:
    def __init__(self, n, dgen):
        self.n = n
        self.dletter = {}
        for k in range(n):
            self.dletter[k] = dgen[k]
            conj = {}
            for key, c in dgen[k].items():
                s, ck = sort_sign(tuple((l + n) % (2 * n) for l in key))
                add_into(conj, ck, c.conj() * GQ(s))
            self.dletter[k + n] = conj

    def d(self, form):
        out = {}
        for key, c in form.items():
            for j, l in enumerate(key):
                left = {key[:j]: GQ((-1) ** j) * c}
                piece = wedge(wedge(left, self.dletter[l]), {key[j + 1:]: ONE})
                for k2, c2 in piece.items():
                    add_into(out, k2, c2)
        return out

    def basis(self, p, q):
        n = self.n
        if p < 0 or q < 0 or p > n or q > n:
            return []
        return [I + tuple(n + j for j in J)
                for I in itertools.combinations(range(n), p)
                for J in itertools.combinations(range(n), q)]

    def bidegree(self, key):
        p = sum(1 for l in key if l < self.n)
        return p, len(key) - p

    def matrix(self, p, q, which):
        """which = 'del' or 'delbar'"""
        src = self.basis(p, q)
        tp, tq = (p + 1, q) if which == "del" else (p, q + 1)
        tgt = self.basis(tp, tq)
        index = {k: i for i, k in enumerate(tgt)}
        m = [[ZERO] * len(src) for _ in tgt]
        for j, key in enumerate(src):
            for k2, c in self.d({key: ONE}).items():
                if self.bidegree(k2) == (tp, tq):
                    m[index[k2]][j] = c
        return m


def parse_se(text, overrides):
    n = None
    params = {}
    eqs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dim "):
            n = int(line.split()[1])
        elif line.startswith("param "):
            name, val = line[6:].split("=")
            params[name.strip()] = Fraction(val.strip())
        elif line.startswith("d "):
            lhs, rhs = line[2:].split("=", 1)
            eqs.append((lhs.strip(), rhs.strip()))
    params.update(overrides)
    names = [g for g, _ in eqs]
    letter = {g: i for i, g in enumerate(names)}
    letter.update({g + "bar": i + n for i, g in enumerate(names)})
    for i, g in enumerate(names):
        stem = g.rstrip("0123456789")
        if stem != g:
            letter[stem + "bar" + g[len(stem):]] = i + n
    dgen = []
    for _, rhs in eqs:
        form = {}
        if rhs != "0":
            depth, terms, cur = 0, [], ""
            for ch in rhs:
                if ch == "(":
                    depth += 1
                if ch == ")":
                    depth -= 1
                if ch in "+-" and depth == 0 and cur.strip():
                    terms.append(cur)
                    cur = ""
                cur += ch
            terms.append(cur)
            for t in terms:
                t = t.replace(" ", "")
                sign = GQ(-1) if t.startswith("-") else ONE
                t = t.lstrip("+-")
                coef = sign
                factors = t.split("*")
                for f in factors[:-1]:
                    coef = coef * (GQ(params[f]) if f in params else parse_scalar(f))
                s, key = sort_sign(tuple(letter[g] for g in factors[-1].split("^")))
                if s:
                    add_into(form, key, coef * GQ(s))
        dgen.append(form)
    return Model(n, dgen)


# ---------------------------------------------------------------- naive linear algebra

def rank(rows_as_vectors):
    """Rank of a list of vectors (each a list of GQ)."""
    m = [list(v) for v in rows_as_vectors]
    if not m:
        return 0
    r = 0
    cols = len(m[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].iszero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].iszero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def nullspace(mat, ncols):
    """Basis vectors of {x : mat x = 0}; mat is a list of rows."""
    m = [list(r) for r in mat]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].iszero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].iszero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][free]
        basis.append(v)
    return basis


def columns(mat, ncols):
    return [[row[j] for row in mat] for j in range(ncols)]


def matmul(a, b, inner):
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    out = [[ZERO] * ncols for _ in a]
    for i, row in enumerate(a):
        for k in range(inner):
            if row[k].iszero():
                continue
            for j in range(ncols):
                out[i][j] = out[i][j] + row[k] * b[k][j]
    return out


class Complex:
    """Bidegree-indexed view: dim(p,q), del(p,q), delbar(p,q) as row lists."""

    def __init__(self, dims, dl, dbl, prange, qrange):
        self.dims, self.dl, self.dbl = dims, dl, dbl
        self.prange, self.qrange = prange, qrange

    def dim(self, p, q):
        return self.dims.get((p, q), 0)

    def _get(self, table, p, q, tp, tq):
        m = table.get((p, q))
        if m is None:
            return [[ZERO] * self.dim(p, q) for _ in range(self.dim(tp, tq))]
        return m

    def del_(self, p, q):
        return self._get(self.dl, p, q, p + 1, q)

    def delbar(self, p, q):
        return self._get(self.dbl, p, q, p, q + 1)


def from_model(model):
    n = model.n
    dims, dl, dbl = {}, {}, {}
    for p in range(n + 1):
        for q in range(n + 1):
            dims[(p, q)] = len(model.basis(p, q))
            dl[(p, q)] = model.matrix(p, q, "del")
            dbl[(p, q)] = model.matrix(p, q, "delbar")
    return Complex(dims, dl, dbl, (0, n), (0, n))


def from_dcx(obj):
    dims = {tuple(int(x) for x in k.split(",")): v for k, v in obj.get("dims", {}).items()}

    def table(key):
        out = {}
        for k, rows in obj.get(key, {}).items():
            out[tuple(int(x) for x in k.split(","))] = [[parse_scalar(e) for e in r] for r in rows]
        return out

    return Complex(dims, table("del"), table("delbar"), tuple(obj["p_range"]), tuple(obj["q_range"]))


def table_for(cx):
    def im_dim(m, ncols):
        return rank(columns(m, ncols)) if ncols else 0

    def sum_dim(*bases):
        vecs = [v for b in bases for v in b]
        return rank(vecs)

    out = {}
    for p in range(cx.prange[0], cx.prange[1] + 1):
        for q in range(cx.qrange[0], cx.qrange[1] + 1):
            N = cx.dim(p, q)
            D, Db = cx.del_(p, q), cx.delbar(p, q)
            ker_d = nullspace(D, N)
            ker_db = nullspace(Db, N)
            ddb = matmul(cx.del_(p, q + 1), Db, cx.dim(p, q + 1)) if N else []
            ker_ddb = nullspace(ddb, N) if N else []
            ker_both = nullspace(D + Db, N)
            n_l, n_d = cx.dim(p - 1, q), cx.dim(p, q - 1)
            im_d = columns(cx.del_(p - 1, q), n_l) if N else []
            im_db = columns(cx.delbar(p, q - 1), n_d) if N else []
            n_dd = cx.dim(p - 1, q - 1)
            im_ddb_m = matmul(cx.del_(p - 1, q), cx.delbar(p - 1, q - 1), n_l) if N and n_l else []
            im_ddb = columns(im_ddb_m, n_dd) if im_ddb_m else []

            r = lambda vs: rank(vs)
            dim_imd, dim_imdb, dim_imddb = r(im_d), r(im_db), r(im_ddb)
            dim_kd, dim_kdb, dim_kddb = len(ker_d), len(ker_db), len(ker_ddb)
            imd_cap_imdb = dim_imd + dim_imdb - sum_dim(im_d, im_db)
            imd_cap_kdb = dim_imd + dim_kdb - sum_dim(im_d, ker_db)
            kd_cap_imdb = dim_kd + dim_imdb - sum_dim(ker_d, im_db)
            kd_plus_kdb = sum_dim(ker_d, ker_db)
            row = {
                "h_dbar": dim_kdb - dim_imdb,
                "h_d": dim_kd - dim_imd,
                "h_bc": len(ker_both) - dim_imddb,
                "h_a": dim_kddb - sum_dim(im_d, im_db),
                "a": imd_cap_imdb - dim_imddb,
                "b": imd_cap_kdb - dim_imddb,
                "c": dim_kddb - sum_dim(im_d, ker_db),
                "d": kd_cap_imdb - dim_imddb,
                "e": dim_kddb - sum_dim(ker_d, im_db),
                "f": dim_kddb - kd_plus_kdb,
                "b_tilde": imd_cap_kdb - imd_cap_imdb,
                "d_tilde": kd_cap_imdb - imd_cap_imdb,
                "c_tilde": kd_plus_kdb - sum_dim(im_d, ker_db),
                "e_tilde": kd_plus_kdb - sum_dim(ker_d, im_db),
            }
            out[f"{p},{q}"] = row

    # de Rham numbers of the total complex, assembled block by block
    kmin = cx.prange[0] + cx.qrange[0]
    kmax = cx.prange[1] + cx.qrange[1]

    def blocks(k):
        return [(p, k - p) for p in range(cx.prange[0], cx.prange[1] + 1)
                if cx.qrange[0] <= k - p <= cx.qrange[1]]

    def total_d(k):
        src, tgt = blocks(k), blocks(k + 1)
        ncols = sum(cx.dim(*b) for b in src)
        rows = []
        for (tp, tq) in tgt:
            for i in range(cx.dim(tp, tq)):
                row = []
                for (sp, sq) in src:
                    w = cx.dim(sp, sq)
                    if (tp, tq) == (sp + 1, sq):
                        row += cx.del_(sp, sq)[i]
                    elif (tp, tq) == (sp, sq + 1):
                        row += cx.delbar(sp, sq)[i]
                    else:
                        row += [ZERO] * w
                rows.append(row)
        return rows, ncols

    betti = {}
    for k in range(kmin, kmax + 1):
        m, ncols = total_d(k)
        mprev, nprev = total_d(k - 1)
        betti[str(k)] = len(nullspace(m, ncols)) - (rank(columns(mprev, nprev)) if nprev else 0)
    return out, betti


def main():
    manifest_path = Path(sys.argv[1])
    out_dir = Path(sys.argv[2])
    manifest = json.loads(manifest_path.read_text())
    for entry in manifest["entries"]:
        path = manifest_path.parent / entry["file"]
        overrides = {k: Fraction(v) for k, v in entry.get("params", {}).items()}
        if path.suffix == ".se":
            cx = from_model(parse_se(path.read_text(), overrides))
        else:
            cx = from_dcx(json.loads(path.read_text()))
        table, betti = table_for(cx)
        fixture = {"name": entry["name"], "table": table, "betti": betti}
        (out_dir / f"{entry['name']}.json").write_text(json.dumps(fixture, indent=1, sort_keys=True) + "\n")
        print(entry["name"], "betti", [betti[k] for k in sorted(betti, key=int)])


if __name__ == "__main__":
    main()
