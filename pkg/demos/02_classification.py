# Classifying the data of small actions
#
# With exactly two fixed points the data must look like a rotation of an
# even sphere.  With four fixed points in dimension six there are exactly
# two shapes: a union of two rotation pairs (Case 1) or the weight pattern
# of a linear action on complex projective 3-space (Case 2).  In dimension
# four a simple grammar generates everything.

from circleact import (
    classify_two_fixed_points,
    classify_6d4fp,
    membership_4d,
    replay_4d_trace,
    data,
    gen_cp3,
    gen_cp2,
)

# Two fixed points: the weight multisets must agree and the signs differ.
print("two points:", classify_two_fixed_points(data((1, 4, 9), (-1, 4, 9))).to_json())

# Four fixed points, dimension 6.  The Petrie-type data splits into two
# opposite-sign pairs.
petrie = data((1, 7, 2, 3), (-1, 7, 2, 3), (1, 5, 2, 3), (-1, 5, 2, 3))
print("\nPetrie:", classify_6d4fp(petrie).to_json())

# The projective-space pattern with parameters (a,b,c) = (1,2,3).
cp3 = gen_cp3(1, 2, 3)
verdict = classify_6d4fp(cp3)
print("cp3(1,2,3):", verdict.to_json())
assert verdict.case2_params() == [(1, 2, 3)]

# When the outer parameters coincide the two cases overlap: the same data
# is both a pair union and a projective-space pattern.
both = classify_6d4fp(gen_cp3(2, 1, 2))
print("cp3(2,1,2):", both.to_json())
assert both.case1() is not None and (2, 1, 2) in both.case2_params()

# Dimension four: membership in the generating grammar, decided by a
# reverse search.  The returned trace is a constructive certificate.
cp2 = gen_cp2(1, 2)
result = membership_4d(cp2)
print("\ncp2(1,2) trace:")
for step in result.matches[0].trace:
    print(" ", step)
assert replay_4d_trace(result.matches[0].trace).same_as(cp2)

# A single positive point admits no reverse move at all.
print("\nsingleton:", membership_4d(data((1, 1, 1))).to_json())
