"""Three closed forms for <a1, a2, a3>, checked against the general scan.

Run with ``python demos/03_three_generator_formulas.py``.
"""
from maxdenum import (
    NumericalSemigroup,
    all_methods,
    bezout,
    dmax_bezout,
    dmax_ceiling,
    dmax_min_h,
    gmn_decompose,
    maximally_reduced_elements,
    reduced_structure,
)

form = gmn_decompose(5, 11, 17)
print(form, "->", form.generators)

for triple in [(7, 8, 9), (7, 9, 12), (10, 13, 17), (5, 11, 17)]:
    f = gmn_decompose(*triple)
    print(triple, "g, m, n =", (f.g, f.m, f.n), "Bezout pair", tuple(bezout(f.m, f.n, f.a1)))
    print("   min-h", dmax_min_h(f).value, " ceiling", dmax_ceiling(f).value,
          " bezout", dmax_bezout(f).value)
    print("   all methods:", all_methods(*triple))

# The maximally reduced elements of <7, 8, 9> are the multiples 0, 16, 32, 48
# of n*a2, and the maximal factorizations of i*n*a2 are p*U + q*V with p + q = i.
S = NumericalSemigroup([7, 8, 9])
structure = reduced_structure(S)
print("k =", structure.k, "U =", structure.U, "V =", structure.V)
for i, report in enumerate(maximally_reduced_elements(S)):
    predicted = [str(f) for f in structure.maximal_factorizations(i)]
    print(report.element, predicted, predicted == [str(f) for f in report.maximal_factorizations])
