"""Reference formulas for the order-2 maps on degree-4 and degree-6 inputs.

Variables follow the package layout: a0..ap are the denominator
coefficients (a0 leading), b0..b(p-2) the numerator coefficients.
"""

H_P4 = [
    "16*a0*a4",
    "8*(a1*a4 - a0*a3)",
    "4*(a0*a2 - a1*a3 + 4*a0*a4 + a2*a4)",
    "2*(-a0*a1 + a1*a2 - 3*a0*a3 - a2*a3 + 3*a1*a4 + a3*a4)",
    "(a0 - a1 + a2 - a3 + a4)*(a0 + a1 + a2 + a3 + a4)",
]

H_P6 = [
    "64*a0*a6",
    "-32*(a0*a5 - a1*a6)",
    "16*(a0*a4 - a1*a5 + 6*a0*a6 + a2*a6)",
    "-8*(a0*a3 - a1*a4 + 5*a0*a5 + a2*a5 - 5*a1*a6 - a3*a6)",
    "4*(a0*a2 - a1*a3 + 4*a0*a4 + a2*a4 - 4*a1*a5 - a3*a5 + 9*a0*a6 + 4*a2*a6 + a4*a6)",
    "-2*(a0*a1 - a1*a2 + 3*a0*a3 + a2*a3 - 3*a1*a4 - a3*a4 + 5*a0*a5)"
    " - 2*(3*a2*a5 + a4*a5 - 5*a1*a6 - 3*a3*a6 - a5*a6)",
    "(a0 - a1 + a2 - a3 + a4 - a5 + a6)*(a0 + a1 + a2 + a3 + a4 + a5 + a6)",
]

_E_HALF = [
    "64*a0*a6",
    "64*(a0*a5 - a1*a6)",
    "64*(a0*a4 - a1*a5 + a2*a6)",
    "64*(a0*a3 - a1*a4 + a2*a5 - a3*a6)",
    "64*(a0*a2 - a1*a3 + a2*a4 - a3*a5 + a4*a6)",
    "64*(a0*a1 - a1*a2 + a2*a3 - a3*a4 + a4*a5 - a5*a6)",
]
# e_{12-k} is the k-th entry above and e_k = (-1)^k e_{12-k}; the signs are
# pinned down by E = A * Z with Z below
E_P6 = (
    [f"({(-1) ** k})*({_E_HALF[k]})" for k in range(6)]
    + ["64*(a0**2 - a1**2 + a2**2 - a3**2 + a4**2 - a5**2 + a6**2)"]
    + [_E_HALF[k] for k in range(5, -1, -1)]
)

Z_P6 = ["64*a6", "-64*a5", "64*a4", "-64*a3", "64*a2", "-64*a1", "64*a0"]

C_P6 = [
    "64*a6*b0",
    "-64*(a5*b0 - a6*b1)",
    "64*(a4*b0 - a5*b1 + a6*b2)",
    "-64*(a3*b0 - a4*b1 + a5*b2 - a6*b3)",
    "64*(a2*b0 - a3*b1 + a4*b2 - a5*b3 + a6*b4)",
    "-64*(a1*b0 - a2*b1 + a3*b2 - a4*b3 + a5*b4)",
    "64*(a0*b0 - a1*b1 + a2*b2 - a3*b3 + a4*b4)",
    "64*(a0*b1 - a1*b2 + a2*b3 - a3*b4)",
    "64*(a0*b2 - a1*b3 + a2*b4)",
    "64*(a0*b3 - a1*b4)",
    "64*a0*b4",
]

D_P6 = [
    "32*(a6*b0 + a0*b4)",
    "-16*(a5*b0 - a6*b1 + a0*b3 - a1*b4)",
    "8*(a4*b0 + 3*a6*b0 - a5*b1 + a0*b2 + a6*b2 - a1*b3 + 3*a0*b4 + a2*b4)",
    "-4*(a3*b0 + 2*a5*b0 + a0*b1 - a4*b1 - 2*a6*b1 - a1*b2 + a5*b2)"
    " - 4*(2*a0*b3 + a2*b3 - a6*b3 - 2*a1*b4 - a3*b4)",
    "2*(a0*b0 + a2*b0 + a4*b0 + a6*b0 - a1*b1 - a3*b1 - a5*b1)"
    " + 2*(a0*b2 + a2*b2 + a4*b2 + a6*b2 - a1*b3 - a3*b3 - a5*b3 + a0*b4 + a2*b4 + a4*b4 + a6*b4)",
]

# A variant of the last numerator formula without the -a5*b3 term. The
# pattern a_even*b_even - a_odd*b_odd needs that term, and the pipeline
# must not reproduce this variant.
D4_P6_MISSING_TERM = (
    "2*(a0*b0 + a2*b0 + a4*b0 + a6*b0 - a1*b1 - a3*b1 - a5*b1)"
    " + 2*(a0*b2 + a2*b2 + a4*b2 + a6*b2 - a1*b3 - a3*b3 + a0*b4 + a2*b4 + a4*b4 + a6*b4)"
)

# first two order-2 iterates of 1/(x^4 + 6x^3 + 16x^2 + 21x + 13), as
# (numerator, denominator) descending coefficient lists
QUARTIC = ([1], [1, 6, 16, 21, 13])
QUARTIC_ITERATES = [
    ([8, 24, 60], [208, 456, 600, 396, 171]),
    ([8 * 13848, 8 * 11652, 8 * 11531], [569088, -35136, 756384, -8616, 232537]),
]
