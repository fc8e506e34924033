"""Scratch: drive the symplectic reduction and compare to the displayed stages."""
from quadmorph import RingSpec
from quadmorph.matrices import PolyMatrix, sym_form_H_blocks, sym_form_J, is_symplectic
from scratch_feasibility import A1, B1, C1, D1

R = RingSpec(["x1", "x2", "y1", "y2", "z"])
h2 = R.parse("x1*y1 + x2*y2 + z^2 - z")
MOD = [h2]

def M(rows):
    return PolyMatrix.from_strings(R, rows)

U = M([
    ["1 - z", "0", "-x2", "x1", "z", "0", "x2", "-x1"],
    ["0", "1 - z", "-y1", "-y2", "0", "z", "y1", "y2"],
    ["-y2", "-x1", "z", "0", "y2", "x1", "1 - z", "0"],
    ["y1", "-x2", "0", "z", "-y1", "x2", "0", "1 - z"],
    ["z", "0", "x2", "-x1", "1 - z", "0", "-x2", "x1"],
    ["0", "z", "y1", "y2", "0", "1 - z", "-y1", "-y2"],
    ["y2", "x1", "1 - z", "0", "-y2", "-x1", "z", "0"],
    ["-y1", "x2", "0", "1 - z", "y1", "-x2", "0", "z"],
])

perm = [1, 3, 5, 7, 2, 4, 6, 8]
S = PolyMatrix(R, [[R.one if j == perm[i] - 1 else R.zero for j in range(8)] for i in range(8)])

H4 = sym_form_H_blocks(R, 4)
J4 = sym_form_J(R, 4)
print("S diag(H...) S^T == J4:", (S * H4 * S.transpose()) == J4)
print("U symplectic wrt H^4 mod h2:", is_symplectic(U, H4, MOD)[0])
print("U^2 == I mod h2:", (U * U).eq_mod(PolyMatrix.identity(R, 8), MOD))

M1 = S * U * S.transpose()
M1_display = M([
    ["-z + 1", "-x2", "z", "x2", "0", "x1", "0", "-x1"],
    ["-y2", "z", "y2", "-z + 1", "-x1", "0", "x1", "0"],
    ["z", "x2", "-z + 1", "-x2", "0", "-x1", "0", "x1"],
    ["y2", "-z + 1", "-y2", "z", "x1", "0", "-x1", "0"],
    ["0", "-y1", "0", "y1", "-z + 1", "-y2", "z", "y2"],
    ["y1", "0", "-y1", "0", "-x2", "z", "x2", "-z + 1"],
    ["0", "y1", "0", "-y1", "z", "y2", "-z + 1", "-y2"],
    ["-y1", "0", "y1", "0", "x2", "-z + 1", "-x2", "z"],
])
print("M1 == display:", M1 == M1_display, " diff:", M1.first_difference(M1_display, MOD))

def diag_pair(E):
    Einv = E.inverse_mod([])
    return PolyMatrix.diag_blocks(E, Einv.transpose())

def shear_upper(C):
    n = C.nrows
    I = PolyMatrix.identity(R, n)
    Z = PolyMatrix.zero(R, n, n)
    return PolyMatrix.from_blocks([[I, C], [Z, I]])

def shear_lower(C):
    n = C.nrows
    I = PolyMatrix.identity(R, n)
    Z = PolyMatrix.zero(R, n, n)
    return PolyMatrix.from_blocks([[I, Z], [C, I]])

E1 = M([["1","0","0","0"],["0","1","0","1"],["0","0","1","0"],["0","0","0","1"]])
E2 = M([["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["-y2","z - 1","y2","1"]])

D1m = diag_pair(E1)
D2m = diag_pair(E2)
step1 = D1m.inverse_mod([]) * M1 * D1m * D2m
P1_display = M([
    ["-z + 1", "-x2", "z", "0", "0", "2*x1", "0", "-2*x1*z + x1"],
    ["-2*y2", "2*z - 1", "2*y2", "0", "-2*x1", "0", "2*x1", "-4*x1*y2"],
    ["z", "x2", "-z + 1", "0", "0", "-2*x1", "0", "2*x1*z - x1"],
    ["0", "0", "0", "1", "x1", "0", "-x1", "2*x1*y2"],
    ["0", "-y1", "0", "0", "-z + 1", "-2*y2", "z", "0"],
    ["y1", "0", "-y1", "0", "-x2", "2*z - 1", "x2", "-2*x2*y2 - 2*z^2 + 2*z"],
    ["0", "y1", "0", "0", "z", "2*y2", "-z + 1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1"],
])
print("post-E1E2 == display (mod h2):", step1.eq_mod(P1_display, MOD),
      " diff:", step1.first_difference(P1_display, MOD))

S14 = M([["0","0","0","-x1"],["0","0","0","0"],["0","0","0","x1"],["-x1","0","x1","-2*x1*y2"]])
step2 = step1 * shear_upper(S14)
P2_display = M([
    ["-z + 1", "-x2", "z", "0", "0", "2*x1", "0", "0"],
    ["-2*y2", "2*z - 1", "2*y2", "0", "-2*x1", "0", "2*x1", "0"],
    ["z", "x2", "-z + 1", "0", "0", "-2*x1", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "-y1", "0", "0", "-z + 1", "-2*y2", "z", "0"],
    ["y1", "0", "-y1", "0", "-x2", "2*z - 1", "x2", "0"],
    ["0", "y1", "0", "0", "z", "2*y2", "-z + 1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1"],
])
print("post-shear == display (mod h2):", step2.eq_mod(P2_display, MOD),
      " diff:", step2.first_difference(P2_display, MOD))

keep6 = [0, 1, 2, 4, 5, 6]
M2 = step2.submatrix(keep6, keep6)
M2_display = M([
    ["-z + 1", "-x2", "z", "0", "2*x1", "0"],
    ["-2*y2", "2*z - 1", "2*y2", "-2*x1", "0", "2*x1"],
    ["z", "x2", "-z + 1", "0", "-2*x1", "0"],
    ["0", "-y1", "0", "-z + 1", "-2*y2", "z"],
    ["y1", "0", "-y1", "-x2", "2*z - 1", "x2"],
    ["0", "y1", "0", "z", "2*y2", "-z + 1"],
])
print("M2 == display:", M2.eq_mod(M2_display, MOD), " diff:", M2.first_difference(M2_display, MOD))
print("M2 symplectic wrt J3 mod h2:", is_symplectic(M2, sym_form_J(R, 3), MOD)[0])

E3 = M([["1","0","1"],["0","1","0"],["0","0","1"]])
E4 = M([["1","0","0"],["0","1","0"],["-z","-x2","1"]])
S2 = M([["0","0","0"],["0","0","2*x1"],["0","2*x1","2*x1*x2"]])
D3m = diag_pair(E3)
D4m = diag_pair(E4)
step3 = D3m.inverse_mod([]) * M2 * D3m * D4m * shear_upper(S2)
keep4 = [0, 1, 3, 4]
M3 = step3.submatrix(keep4, keep4)
M3_display = M([
    ["-2*z + 1", "-2*x2", "0", "4*x1"],
    ["-2*y2", "2*z - 1", "-4*x1", "0"],
    ["0", "-y1", "-2*z + 1", "-2*y2"],
    ["y1", "0", "-2*x2", "2*z - 1"],
])
print("dropped rows/cols unit-like:", all(
    step3.rows[i][j].normal_form(MOD) == (R.one if i == j else R.zero)
    for i in (2, 5) for j in range(6)) and all(
    step3.rows[i][j].normal_form(MOD) == (R.one if i == j else R.zero)
    for j in (2, 5) for i in range(6)))
print("M3 == display:", M3.eq_mod(M3_display, MOD), " diff:", M3.first_difference(M3_display, MOD))

E5 = M([["1","2*x2"],["0","1"]])
E6 = M([["1","0"],["-y1","1"]])
S3 = M([["0","0"],["0","-1"]])
S4b = M([["0","0"],["0","2 - 2*z"]])
M4 = diag_pair(E5) * shear_lower(S3) * M3 * shear_upper(S4b) * diag_pair(E6)
M4_display = M([
    ["-4*x2*y1*z + 4*x2*y1 - 4*x2*y2 - 2*z + 1", "4*x2*z - 4*x2", "-8*x1*x2",
     "8*x2^2*y2 + 8*x2*z + 4*x1 - 8*x2"],
    ["-2*y1*z + y1 - 2*y2", "2*z - 1", "-4*x1", "4*x2*y2 + 2*z - 2"],
    ["y1^2", "-y1", "-2*z + 1", "-y1 - 2*y2"],
    ["-2*x2*y1^2 + 2*y1*z + 2*y2", "2*x2*y1 - 2*z + 1", "4*x2*z + 4*x1 - 4*x2", "1"],
])
print("M4 == display:", M4.eq_mod(M4_display, MOD), " diff:", M4.first_difference(M4_display, MOD))

# as printed E7=E5, E8=E6 fails: N(3,4) etc. nonzero.  The prose says the
# step removes M4(3,4) = -y1-2y2 (row3 += that * row4, i.e. E7^{-T} upper
# shear) and M4(4,3) = 4x2z+4x1-4x2 (col3 -= that * col4).
E7 = M([["1", "0"], ["-y1 - 2*y2", "1"]])
E8 = M([["1", "4*x2*z + 4*x1 - 4*x2"], ["0", "1"]])
N = diag_pair(E7) * M4 * diag_pair(E8)
Nn = N.normal_form(MOD)
print("N[2][3], N[3][2], N[3][3]:", Nn.rows[2][3].format(), "|", Nn.rows[3][2].format(),
      "|", Nn.rows[3][3].format())
N14, N24, N41, N42 = Nn.rows[0][3], Nn.rows[1][3], Nn.rows[3][0], Nn.rows[3][1]
S5 = PolyMatrix(R, [[R.zero, -N14], [-N14, -N24]])
S6 = PolyMatrix(R, [[R.zero, -N41], [-N41, -N42]])
final = (shear_upper(S5) * N * shear_lower(S6)).normal_form(MOD)
print("final row/col 1,3 pattern:")
for i in range(4):
    print(" ", [final.rows[i][j].format() for j in range(4)])

a, b, c, d = (R.parse(s) for s in (A1, B1, C1, D1))
print("a matches:", (final.rows[0][0] - a).is_zero_mod(MOD))
print("b matches:", (final.rows[0][2] - b).is_zero_mod(MOD))
print("c matches:", (final.rows[2][0] - c).is_zero_mod(MOD))
print("d matches:", (final.rows[2][2] - d).is_zero_mod(MOD))
