# coding: utf-8

# # Random search and the worked-example corpus

# In[1]:

import numpy as np
from srforge import GF, random_search, is_superregular

E = GF(5, "x^3+3x+3")
M = random_search(E, 3, 4, tries=200, seed=1)
print(M)
print(is_superregular(M, exhaustive=True).minors_checked)


# The corpus re-derives every worked example and table; each case prints
# PASS or FAIL with the checks behind it.

# In[2]:

from srforge.corpus import CASE_IDS, run_corpus

print(CASE_IDS)
code, results = run_corpus(["ex2.2", "ex3.10"], samples=20)
print(code)
