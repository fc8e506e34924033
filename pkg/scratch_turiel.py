import time

from quadmorph import RingSpec, QI, GF, contains_one, NotUnitIdealError
from scratch_feasibility import A2, B2, R, ap, bp

TA = ("(0-2i)*x1^2*z^2 + (0-4i)*x1*x2*z^2 + (0-2i)*x2^2*z^2 + (0+2i)*y1^2*z^2"
      " + (0-4i)*y1*y2*z^2 + (0+2i)*y2^2*z^2 - 4*x2*y1*z^2 + 4*x1*y2*z^2"
      " + 8*x2*y2*z^2 + 4*z^4 + (0+2i)*x1^2*z + (0+4i)*x1*x2*z + (0+2i)*x2^2*z"
      " + (0-2i)*y1^2*z + (0+4i)*y1*y2*z + (0-2i)*y2^2*z + 4*x2*y1*z - 4*x1*y2*z"
      " - 8*x2*y2*z - 8*z^3 + (0+1i)*x1^2 + (0+4i)*x1*x2 + (0+1i)*x2^2"
      " + (0-1i)*y1^2 + (0+4i)*y1*y2 + (0-1i)*y2^2 + 2*x2*y1 - 2*x1*y2"
      " - 8*x2*y2 + 4*z")
TB = ("(0+2i)*x1^2*z^2 + (0+4i)*x1*x2*z^2 + (0+2i)*x2^2*z^2 + (0+2i)*y1^2*z^2"
      " + (0-4i)*y1*y2*z^2 + (0+2i)*y2^2*z^2 + (0-2i)*x1^2*z + (0-4i)*x1*x2*z"
      " + (0-2i)*x2^2*z + (0-2i)*y1^2*z + (0+4i)*y1*y2*z + (0-2i)*y2^2*z"
      " + (0+4i)*z^3 + (0-1i)*x1^2 + (0-4i)*x1*x2 + (0-1i)*x2^2 + (0-1i)*y1^2"
      " + (0+4i)*y1*y2 + (0-1i)*y2^2 + (0-6i)*z^2 + (0+1i)")

Ri = RingSpec(["x1", "x2", "y1", "y2", "z"], domain=QI)
h2i = Ri.parse("x1*y1 + x2*y2 + z^2 - z")
ta, tb = Ri.parse(TA), Ri.parse(TB)
print("turiel row parsed:", len(ta), len(tb))
print("roundtrip:", Ri.parse(ta.format()) == ta)

t0 = time.time()
cert = contains_one([ta, tb, h2i])
print(f"Turiel contains_one over Q(i): OK {time.time()-t0:.1f}s")

for p in (3, 5, 7):
    Rp = RingSpec(["x1", "x2", "y1", "y2", "z"], domain=GF(p))
    app = ap.reduce_mod_p(p, Rp)
    bpp = bp.reduce_mod_p(p, Rp)
    h2p = Rp.parse("x1*y1 + x2*y2 + z^2 - z")
    t0 = time.time()
    cert = contains_one([app, bpp, h2p])
    print(f"theorem2 over F_{p}: OK {time.time()-t0:.1f}s")

R2 = RingSpec(["x1", "x2", "y1", "y2", "z"], domain=GF(2))
ap2 = ap.reduce_mod_p(2, R2)
bp2 = bp.reduce_mod_p(2, R2)
print("a' mod 2 =", ap2.format(), "; b' mod 2 =", bp2.format())
