"""Brute-force cross-checks for colon and ideal degree-piece dimensions.

Independent of the package: polynomials over F_2 are bit vectors indexed
by monomials, ideals are row spaces spanned by monomial multiples of the
generators, and colons are solved as linear systems.  No Groebner bases
anywhere, so the numbers printed here make a genuine oracle for the GB
pipeline.  Spans are degree-truncated; SLACK extends the multiplier
degree beyond the target until the reported dimensions stabilize, and we
print several slack values so the stability is visible.

Run:  python3 tools/bruteforce_colon.py
"""

from itertools import product

VARS = ("T", "X", "Y", "Z")
DMAX = 11


def monomials_upto(d):
    out = []
    for exps in product(range(d + 1), repeat=len(VARS)):
        if sum(exps) <= d:
            out.append(exps)
    out.sort(key=lambda m: (sum(m), m))
    return out


MONOS = monomials_upto(DMAX)
INDEX = {m: i for i, m in enumerate(MONOS)}
DEG_OFFSET = [0] * (DMAX + 2)
for m in MONOS:
    DEG_OFFSET[sum(m) + 1] += 1
for d in range(1, DMAX + 2):
    DEG_OFFSET[d] += DEG_OFFSET[d - 1]
# DEG_OFFSET[d+1] = number of monomials of degree <= d


def poly(*monos):
    """Bit vector from exponent tuples; repeated entries cancel (F_2)."""
    v = 0
    for m in monos:
        v ^= 1 << INDEX[m]
    return v


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def poly_shift(v, m):
    """Multiply a bit-vector polynomial by the monomial m."""
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= 1 << INDEX[mono_mul(MONOS[i], m)]
        v >>= 1
        i += 1
    return out


def poly_deg(v):
    return sum(MONOS[v.bit_length() - 1]) if v else -1


def echelon(rows):
    """Row echelon over F_2, pivoting on the highest set bit first."""
    basis = []
    for r in rows:
        for b in basis:
            if r.bit_length() == b.bit_length():
                r ^= b
        if r:
            basis.append(r)
            basis.sort(key=int.bit_length, reverse=True)
    return basis


def reduce_row(r, basis):
    for b in basis:
        if r.bit_length() == b.bit_length():
            r ^= b
    return r


def span_upto(gens, e):
    """Echelon basis of span{m*g : deg(m*g) <= e}."""
    rows = []
    for g in gens:
        dg = poly_deg(g)
        for m in MONOS:
            if sum(m) + dg <= e:
                rows.append(poly_shift(g, m))
    return echelon(rows)


def piece_dims(basis, dmax):
    """dim of (row space  intersect  polys of degree <= d) for d <= dmax."""
    dims = []
    for d in range(dmax + 1):
        cutoff = DEG_OFFSET[d + 1]
        dims.append(sum(1 for b in basis if b.bit_length() <= cutoff))
    return dims


def colon_piece(gens, divisor, d, slack):
    """Basis of {f : deg f <= d, f*divisor in span(gens)} as bit vectors."""
    e = d + poly_deg(divisor) + slack
    V = span_upto(gens, e)
    cand = [m for m in MONOS if sum(m) <= d]
    # residues of m*divisor modulo V, paired with the monomial index
    pairs = []
    for m in cand:
        pairs.append((reduce_row(poly_shift(divisor, m), V), 1 << INDEX[m]))
    # eliminate on the residue part; rows with zero residue give colon elements
    out = []
    basis = []
    for res, tag in pairs:
        for bres, btag in basis:
            if res.bit_length() == bres.bit_length() and res:
                res ^= bres
                tag ^= btag
        if res:
            basis.append((res, tag))
            basis.sort(key=lambda p: p[0].bit_length(), reverse=True)
        else:
            out.append(tag)
    return echelon(out)


def poly_str(v):
    names = []
    i = 0
    while v:
        if v & 1:
            m = MONOS[i]
            parts = [
                f"{VARS[k]}^{e}" if e > 1 else VARS[k]
                for k, e in enumerate(m)
                if e
            ]
            names.append("*".join(parts) if parts else "1")
        v >>= 1
        i += 1
    return " + ".join(reversed(names))


T, X, Y, Z = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
ONE = (0, 0, 0, 0)

J_GENS = [
    poly(mono_mul(T, Y), mono_mul(X, Z)),                      # TY + XZ
    poly(mono_mul(T, mono_mul(X, X)), mono_mul(Y, Z)),         # TX^2 + YZ
    poly(mono_mul(X, mono_mul(X, X)), mono_mul(Y, Y)),         # X^3 + Y^2
    poly(mono_mul(T, mono_mul(T, mono_mul(T, X))),
         mono_mul(T, mono_mul(Z, Z))),                         # T^3X + TZ^2
]
P_GENS = [
    poly(mono_mul(T, Y), mono_mul(X, Z)),                      # TY + XZ
    poly(mono_mul(T, mono_mul(T, X)), mono_mul(Z, Z)),         # T^2X + Z^2
    poly(mono_mul(T, mono_mul(X, X)), mono_mul(Y, Z)),         # TX^2 + YZ
    poly(mono_mul(X, mono_mul(X, X)), mono_mul(Y, Y)),         # X^3 + Y^2
]
Z_POLY = poly(Z)
XT_POLY = poly(X, T)

JZ_GENS = J_GENS + [Z_POLY]
PZ_GENS = P_GENS + [Z_POLY]


def main():
    dtop = 5
    for slack in (2, 3, 4):
        e = dtop + slack
        print(f"--- slack {slack} ---")
        J = span_upto(J_GENS, e + 1)
        JZ = span_upto(JZ_GENS, e + 1)
        PZ = span_upto(PZ_GENS, e + 1)
        print("dim J_<=d        d=0..5:", piece_dims(J, dtop))
        print("dim (J+Z)_<=d    d=0..5:", piece_dims(JZ, dtop))
        print("dim (P+Z)_<=d    d=0..5:", piece_dims(PZ, dtop))
        c0 = colon_piece(J_GENS, Z_POLY, dtop, slack)
        print("dim (J:Z)_<=d    d=0..5:", piece_dims(c0, dtop))
        c1 = colon_piece(JZ_GENS, XT_POLY, dtop, slack)
        print("dim ((J+Z):(X+T))_<=d  :", piece_dims(c1, dtop))
        # containment of the colon in P+(Z), checked on basis elements
        PZ_wide = span_upto(PZ_GENS, dtop + slack + 2)
        inside = all(reduce_row(b, PZ_wide) == 0 for b in c1)
        print("colon basis inside P+(Z):", inside)
        # colon elements that are not already in J+(Z)
        JZ_wide = span_upto(JZ_GENS, dtop + slack + 2)
        fresh = [b for b in c1 if reduce_row(b, JZ_wide) != 0]
        lows = sorted(fresh, key=int.bit_length)[:4]
        print("lowest colon elements beyond J+(Z):")
        for b in lows:
            print("   ", poly_str(b))
    print()
    print("regular-step check: dim (J:Z) == dim J everywhere above means")
    print("the first parameter is a nonzerodivisor; any colon element")
    print("beyond J+(Z) witnesses failure of the second step.")


if __name__ == "__main__":
    main()
