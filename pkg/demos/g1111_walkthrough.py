"""Walk through the G1111 code of length 16: matrix, code, distance and DNA counts."""

from revdna import codes, composite, dna, gf4, verify
from revdna.codes import LinearCode

coeffs = gf4.parse_vector(verify.G1111_COEFFS)
m = composite.build_family("G1111", coeffs, 16)
print("generator (16 x 16):")
print(gf4.format_matrix(m))
print("matches stored matrix:", bool((m == verify.printed_g1111()).all()))

code = LinearCode(m)
dist = codes.min_distance(code)
print(f"k={code.k} size={code.size} d={dist.d} reversible={codes.is_reversible(code)}")
print("all-ones word in code:", code.contains(gf4.parse_vector("1" * 16)))

# reversible, contains 1 and d >= 6, so every codeword passes HD, RV and RC
rep = dna.check_constraints(code, 6, ("HD", "RV", "RC", "GC"))
print(f"method={rep.method} HD+RV+RC={rep.counts['HD+RV+RC']} with GC={rep.counts['HD+RV+RC+GC']}")

enum = codes.weight_enumerators(code)
print(enum.gcw_text())
print("stored: ", verify.G1111_PRINTED_GCW)

words = dna.dna_code(code)
print("first DNA words:", words[:4])
