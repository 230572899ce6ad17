"""Per-position group substitution can break reversibility."""

from revdna import codes, gf4, verify
from revdna.codes import LinearCode

m = verify.counterexample_matrix()
print(gf4.format_matrix(m))
code = LinearCode(m)
c = gf4.parse_vector(verify.COUNTEREXAMPLE_WORD)
print(f"k={code.k} reversible={codes.is_reversible(code)}")
print(f"c  = {gf4.format_vector(c, sep='')} in code: {code.contains(c)}")
print(f"c^r = {gf4.format_vector(c[::-1], sep='')} in code: {code.contains(c[::-1])}")
