# coding: utf-8

# # A verification report over a weight range
#
# Every weight gets the full check registry. Checks expected to pass decide
# the verdict; the others just record what the claimed bases and counts do.

# In[1]:

from gtzlab import report as rp


# In[2]:

weights = rp.weight_range("B", 2, 2)
rep = rp.build_report(weights)
print(rp.to_text(rep))


# The summary counts statuses per check.

# In[3]:

for cid, counts in rep["summary"].items():
    print(f"{cid:<16} {rp.EXPECTED[cid]:<7} {counts}")


# The claimed monomial bases are always solutions and always independent;
# most of the time there are just too few of them.

# In[4]:

for r in rep["weights"]:
    c = r["comparisons"]["RB-BASIS"]["details"]["paper/plus"]
    print(r["weight"]["doubled"], c["claimed_count"], "of", c["kernel_dim"])


# Same thing from a shell:
#
#     gtzlab report --n 2 --max-weight 2 --format csv
