"""Gate set walkthrough, with the exact symbolic oracle in lockstep.

Every gate is a per-clock multiplication: NOT multiplies by the targeted
high references, XOR by the other operand, XNOR additionally by the
all-high product string. Multiplication distributes over sums, so one
gate application updates every string in a superposition simultaneously.
The symbolic side mirrors each step exactly (masks XOR under GF(2)), and
the decoded engine output must match it at every clock.
"""

from noiselogic import (
    ProductTerm,
    SymbolicSuperposition,
    apply_not,
    decode_product,
    decode_superposition,
    generate_reference_system,
    realize,
    superpose,
    synthesize,
    xnor_pair,
    xor_pair,
)

M, T, SEED = 4, 128, 7

sys = generate_reference_system(M, T, seed=SEED)
a = synthesize(sys, "1100")
b = synthesize(sys, "1010")
c = synthesize(sys, "1000")

# NOT on bits 1 and 3 flips them in a single multiplication
out = apply_not(sys, {1, 3}, a)
print("NOT_13(1100) decodes to:", decode_product(sys, out).text)

# the same operation applied to a whole set at once
sup = superpose([a, b, c])
out = apply_not(sys, {1, 3}, sup)
print("NOT_13({1100,1010,1000}) decodes to:", decode_superposition(sys, out).format())

# pairwise XOR/XNOR between two vectors
print("1100 XOR  1010 ->", decode_product(sys, xor_pair(a, b)).text)
print("1100 XNOR 1010 ->", decode_product(sys, xnor_pair(sys, a, b)).text)

# pairwise against a superposition: one multiplication, every member updated
out = xor_pair(a, superpose([b, c]))
print("1100 XOR  (1010+1000) ->", decode_superposition(sys, out).format())
out = xnor_pair(sys, a, superpose([b, c]))
print("1100 XNOR (1010+1000) ->", decode_superposition(sys, out).format())

# the symbolic oracle predicts the same outputs exactly
state = SymbolicSuperposition.of(
    ProductTerm.from_text("1010"), ProductTerm.from_text("1000")
)
predicted = state.gate("xnor", ProductTerm.from_text("1100"))
print("\noracle prediction:     ", predicted.format())
print("oracle realizes to the engine trace:", realize(sys, predicted) == out)

# gates are involutions: multiplying twice by the same +/-1 signal cancels
twice = apply_not(sys, {2, 4}, apply_not(sys, {2, 4}, sup))
print("double NOT returns the original superposition:", twice == sup)
