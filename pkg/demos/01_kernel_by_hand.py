# coding: utf-8

# # Solving an indicator system by hand and by machine
#
# An irreducible o(5) module with highest weight (1,1) is realised inside
# polynomials in five variables z[-2,-1], z[-2,1], z[-1,-1], z[-1,1] and z[0,1].
# The vectors that are highest for the smaller o(3) are the polynomials in
# z[-2,-1], z[-2,1], z[0,1] killed by a short list of operator powers.

# In[1]:

from fractions import Fraction

from gtzlab import HighestWeight, Poly, apply_power, build_indicator_b, solve_kernel, zvar
from gtzlab.kernel import weight_multiset


# Weights are stored doubled so half-integers stay integral.

# In[2]:

w = HighestWeight.parse("B", "1,1")
print(w, w.entries, w.r_vector())


# The system: each operator with the power it has to be raised to.

# In[3]:

system = build_indicator_b(w)
for op, k in system.equations:
    print(f"{op.name}^{k}")


# A guess: z[-2,1] - 1/2 z[0,1]^2 z[-2,-1].  The two terms cancel under the
# first operator, and the rest only need low powers of z[0,1].

# In[4]:

t, a, b = (Poly.var(zvar(*ij)) for ij in [(0, 1), (-2, -1), (-2, 1)])
guess = b - Fraction(1, 2) * t * t * a
print([str(apply_power(op, k, guess)) for op, k in system.equations])


# The oracle finds everything of bounded degree, grouped by Euler weight.

# In[5]:

kernel = solve_kernel(system)
print(kernel.dimension, kernel.stabilized)
for wt, f in zip(kernel.weights, kernel.basis):
    print(wt, f)


# Four solutions. Their weights, read as (o(3) weight, last component):

# In[6]:

print(weight_multiset(kernel))
