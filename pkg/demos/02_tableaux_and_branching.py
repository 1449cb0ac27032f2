# coding: utf-8

# # Counting patterns against dimensions
#
# Each branching pattern should index one kernel vector. Grouping the patterns
# by bottom row and weighting each group by the dimension of the small module
# must add up to the Weyl dimension of the large one.

# In[1]:

from gtzlab import HighestWeight, build_indicator_b, enumerate_b_tableaux, solve_kernel
from gtzlab.tableaux import b_tableau_weight, branching_terms, full_dim


# In[2]:

w = HighestWeight.parse("B", "1,1")
tabs = enumerate_b_tableaux(w)
for t in tabs:
    print(t)


# In[3]:

terms = branching_terms(w)
print(terms)
print(sum(m * d for _, m, d in terms), full_dim(w))


# Now the same count for a small sweep, next to the kernel dimension.

# In[4]:

for text in ["0,0", "1,0", "1,1", "2,1", "1/2,1/2", "3/2,1/2", "5/2,3/2"]:
    wt = HighestWeight.parse("B", text)
    k = solve_kernel(build_indicator_b(wt)).dimension
    print(f"{str(wt):<10} tableaux={len(enumerate_b_tableaux(wt)):>3} kernel={k:>3} dim={full_dim(wt)}")


# The last weight component depends on a formula with three readings.
# At (1,1) only one of them reproduces the kernel weights above.

# In[5]:

for variant in ("printed", "proof_diff", "sigma_neg"):
    print(variant, sorted((b_tableau_weight(t, variant) for t in tabs), reverse=True))
