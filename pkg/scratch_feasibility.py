"""Scratch: early feasibility probes (thrown away before finishing)."""
import time

from quadmorph import RingSpec, QQ, GF, contains_one, buchberger

A1 = ("16*x2^3*y1^2*y2 + 16*x2^2*y1^2*z - 16*x2^2*y1*y2*z - 16*x2^2*y1^2 - 8*x2^2*y1*y2"
      " - 16*x2^2*y2^2 - 24*x2*y1*z^2 + 20*x2*y1*z - 8*x2*y2*z + 8*z^3 + 4*x2*y1"
      " - 8*x1*y2 + 12*x2*y2 - 8*z^2 - 2*z + 1")
B1 = ("-32*x2^3*y2*z - 32*x1*x2^2*y2 + 32*x2^3*y2 - 32*x2^2*z^2 - 48*x1*x2*z"
      " + 64*x2^2*z - 16*x1^2 + 40*x1*x2 - 32*x2^2")
C1 = "-2*x2*y1^3 - 4*x2*y1^2*y2 + 2*y1^2*z + 4*y1*y2*z + y1^2 + 2*y1*y2 + 4*y2^2"
D1 = "4*x2*y1*z + 8*x2*y2*z - 4*x2*y1 + 8*x1*y2 - 12*x2*y2 - 4*z^2 + 2*z + 1"

A2 = ("144*x2^2*z^9 + 144*x2*y1*z^9 + 72*x1*x2*z^8 - 384*x2^2*z^8 - 240*x2*y1*z^8"
      " - 72*x2*y2*z^8 - 72*z^10 - 192*x1*x2*z^7 + 112*x2^2*z^7 - 128*x2*y1*z^7"
      " + 120*x2*y2*z^7 + 192*z^9 + 92*x1*x2*z^6 + 384*x2^2*z^6 + 256*x2*y1*z^6"
      " + 28*x2*y2*z^6 - 92*z^8 + 96*x1*x2*z^5 - 208*x2^2*z^5 + 48*x2*y1*z^5"
      " - 24*y1^2*z^5 - 68*x2*y2*z^5 - 96*z^7 - 40*x1*x2*z^4 - 64*x2^2*z^4"
      " - 16*x2*y1*z^4 - 16*y1^2*z^4 - 28*x2*y2*z^4 + 12*y1*y2*z^4 + 28*z^6"
      " - 32*x1*x2*z^3 - 48*x2^2*z^3 - 64*x2*y1*z^3 + 16*y1^2*z^3 + 4*x2*y2*z^3"
      " + 8*y1*y2*z^3 + 48*z^5 - 12*x1*x2*z^2 + 64*x2^2*z^2 + 16*y1^2*z^2"
      " + 16*x2*y2*z^2 - 2*y1*y2*z^2 + 18*z^4 + 16*x1*x2*z + 8*y1^2*z - 4*y1*y2*z"
      " - 24*z^3 - 2*y1*y2 - 2*z^2 + 1")
B2 = ("-144*x1*x2*z^9 + 144*x2*y2*z^9 - 72*x1^2*z^8 + 384*x1*x2*z^8 + 72*x1*y2*z^8"
      " - 240*x2*y2*z^8 + 192*x1^2*z^7 - 112*x1*x2*z^7 - 120*x1*y2*z^7 - 128*x2*y2*z^7"
      " - 92*x1^2*z^6 - 384*x1*x2*z^6 - 28*x1*y2*z^6 + 256*x2*y2*z^6 - 96*x1^2*z^5"
      " + 208*x1*x2*z^5 + 68*x1*y2*z^5 + 48*x2*y2*z^5 - 24*y1*y2*z^5 - 24*z^7"
      " + 40*x1^2*z^4 + 64*x1*x2*z^4 + 28*x1*y2*z^4 - 16*x2*y2*z^4 - 16*y1*y2*z^4"
      " + 12*y2^2*z^4 + 32*z^6 + 32*x1^2*z^3 + 48*x1*x2*z^3 - 4*x1*y2*z^3"
      " - 64*x2*y2*z^3 + 16*y1*y2*z^3 + 8*y2^2*z^3 + 24*z^5 + 12*x1^2*z^2"
      " - 64*x1*x2*z^2 - 16*x1*y2*z^2 + 16*y1*y2*z^2 - 2*y2^2*z^2 - 32*z^4"
      " - 16*x1^2*z + 8*y1*y2*z - 4*y2^2*z - 4*z^3 - 2*y2^2 + 4*z")

R = RingSpec(["x1", "x2", "y1", "y2", "z"])
h2 = R.parse("x1*y1 + x2*y2 + z^2 - z")
a, b, c, d = (R.parse(s) for s in (A1, B1, C1, D1))
ap, bp = R.parse(A2), R.parse(B2)

print("len(a')=", len(ap), " len(b')=", len(bp))
print("leading a' =", dict([ap.leading()]) and ap.format()[:20])

t0 = time.time()
nf = (a * d - b * c - R.one).normal_form([h2])
print("Theorem1 det check ad-bc-1 mod h2 == 0:", nf.is_zero(), f"({time.time()-t0:.2f}s)")

t0 = time.time()
try:
    cert = contains_one([ap, bp, h2])
    print(f"contains_one(a',b',h2) over Q: OK in {time.time()-t0:.1f}s;",
          "cofactor sizes", [len(cf) for cf in cert.cofactors])
except Exception as e:
    print("FAILED:", e, f"({time.time()-t0:.1f}s)")
