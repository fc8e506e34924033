"""Scratch: weight-shifting pipeline, end to end."""
from quadmorph import RingSpec
from quadmorph.matrices import PolyMatrix
from scratch_feasibility import A2, B2

# Laurent ring for the torus-direction checks: k[Q3 x Gm][t]
RL = RingSpec(["x1", "x2", "y1", "y2", "x3", "t"], invertible={"x3"})
f2L = RL.parse("x1*y1 + x2*y2 - 1")

def ML(rows):
    return PolyMatrix.from_strings(RL, rows)

W = ML([["x1", "-y2"], ["x2", "y1"]])
Winv = ML([["y1", "y2"], ["-x2", "x1"]])
I2 = PolyMatrix.identity(RL, 2)

print("W*Winv == I mod f2:", (W * Winv).eq_mod(I2, [f2L]))

def elem(rows):
    return ML(rows)

A = (elem([["1", "0"], ["t*x3^-1", "1"]])
     * elem([["1", "t - t*x3"], ["0", "1"]])
     * elem([["1", "0"], ["-t", "1"]])
     * elem([["1", "t - t*x3^-1"], ["0", "1"]]))
Ainv = (elem([["1", "-t + t*x3^-1"], ["0", "1"]])
        * elem([["1", "0"], ["t", "1"]])
        * elem([["1", "-t + t*x3"], ["0", "1"]])
        * elem([["1", "0"], ["-t*x3^-1", "1"]]))
print("A*Ainv == I exactly:", (A * Ainv) == I2)

# Whitehead: diag(x3, x3^-1) equals the 4-fold elementary product at t=1
white = (elem([["1", "0"], ["x3^-1", "1"]])
         * elem([["1", "1 - x3"], ["0", "1"]])
         * elem([["1", "0"], ["-1", "1"]])
         * elem([["1", "1 - x3^-1"], ["0", "1"]]))
print("Whitehead identity exact:", white == ML([["x3", "0"], ["0", "x3^-1"]]))

D = A * W * Ainv * Winv

def at_t(Mx, val):
    imgs = {v: RL.var(v) for v in RL.variables}
    imgs["t"] = RL.const(val)
    return Mx.substitute(imgs, target=RL)

D0 = at_t(D, 0)
print("D(0) == I mod f2:", D0.eq_mod(I2, [f2L]))

# T o m' : T with the Gm coordinate squared
Tm = ML([
    ["1 - x2*y2 + x2*y2*x3^2", "x1*y2 - x1*y2*x3^2"],
    ["x2*y1*x3^-2 - x2*y1", "x3^-2 - x1*y1*x3^-2 + x1*y1"],
])
D1 = at_t(D, 1)
print("D(1) == T o m' mod f2:", D1.eq_mod(Tm, [f2L]))

comm = (ML([["x3", "0"], ["0", "x3^-1"]]) * W
        * ML([["x3^-1", "0"], ["0", "x3"]]) * Winv)
print("T o m' == commutator form mod f2:", comm.eq_mod(Tm, [f2L]))

# specialize x3 = -1
def at_x3_minus1(Mx):
    imgs = {v: RL.var(v) for v in RL.variables}
    imgs["x3"] = RL.const(-1)
    return Mx.substitute(imgs, target=RL)

TMAT = ML([["1 - 2*t^2", "4*t - 4*t^3"], ["-2*t + 2*t^3", "1 - 6*t^2 + 4*t^4"]])
TMATinv = ML([["1 - 6*t^2 + 4*t^4", "4*t^3 - 4*t"], ["2*t - 2*t^3", "1 - 2*t^2"]])
Am1 = at_x3_minus1(A)
print("A(t) at x3=-1 == t-matrix of G:", Am1 == TMAT)
print("A(t)^-1 at x3=-1 == displayed inverse:", at_x3_minus1(Ainv) == TMATinv)
print("det t-matrix == 1 exactly:", TMAT.det() == RL.one)

B = (elem([["1", "6*t^2 - 8*t"], ["0", "1"]]) * elem([["1", "0"], ["t^2", "1"]]))
B = B * B
print("B(0) == I:", at_t(B, 0) == I2, " B(1) == -I:", at_t(B, 1) == -I2)
print("A(1)^-1 at x3=-1 == -I:", at_t(at_x3_minus1(Ainv), 1).eq_mod(-I2, [f2L]),
      at_t(at_x3_minus1(Ainv), 1) == -I2)

Gp = TMAT * W * B * Winv

# now reduce mod f2 with lex and take the psi-preimage
RT = RingSpec(["x1", "x2", "y1", "y2", "t"], order="lex")
f2 = RT.parse("x1*y1 + x2*y2 - 1")

def to_RT(p):
    imgs = {v: RT.var(v) for v in ("x1", "x2", "y1", "y2", "t")}
    return p.substitute(imgs, target=RT)

RQ4 = RingSpec(["x1", "x2", "y1", "y2", "z"])
h2 = RQ4.parse("x1*y1 + x2*y2 + z^2 - z")

IY = [RT.index[v] for v in ("y1", "y2")]
IT = RT.index["t"]

def psi_preimage(p):
    """Divide the y-degree-d part by (t(1-t))^d and rename t -> z."""
    p = p.normal_form([f2])
    groups = {}
    for m, c in p.terms.items():
        ydeg = m[IY[0]] + m[IY[1]]
        key = tuple(m[i] if i != IT else 0 for i in range(RT.nvars))
        groups.setdefault((key, ydeg), {})[m[IT]] = c
    tt = RT.parse("t - t^2")
    out = {}
    for (key, ydeg), tcoeffs in groups.items():
        cpoly = RT.poly({tuple(0 if i != IT else e for i in range(RT.nvars)): c
                         for e, c in tcoeffs.items()})
        if ydeg:
            qs, r = cpoly.divmod_by([tt ** ydeg])
            if not r.is_zero():
                raise ValueError(f"entry not in the image of psi (y-deg {ydeg})")
            cpoly = qs[0]
        for m, c in cpoly.terms.items():
            mm = list(key)
            mm[IT] = m[IT]
            mm = tuple(mm)
            out[mm] = out.get(mm, RQ4.domain.zero) + c
    # rename t (last slot in RT) to z (last slot in RQ4)
    return RQ4.poly({m: c for m, c in out.items() if c != 0})

pre = [[psi_preimage(to_RT(Gp.rows[i][j])) for j in range(2)] for i in range(2)]
ap, bp = RQ4.parse(A2), RQ4.parse(B2)
print("preimage[0][0] == a' literally:", pre[0][0] == ap)
print("preimage[0][1] == b' literally:", pre[0][1] == bp)
PRE = PolyMatrix(RQ4, pre)
print("det preimage == 1 mod h2:", (PRE.det() - RQ4.one).is_zero_mod([h2]))

# psi(preimage) == G' mod f2
psi_imgs = {
    "x1": RT.var("x1"), "x2": RT.var("x2"),
    "y1": RT.var("y1") * RT.parse("t - t^2"),
    "y2": RT.var("y2") * RT.parse("t - t^2"),
    "z": RT.var("t"),
}
ok = all((pre[i][j].substitute(psi_imgs, target=RT) - to_RT(Gp.rows[i][j]))
         .is_zero_mod([f2]) for i in range(2) for j in range(2))
print("psi(preimage) == G' mod f2:", ok)
