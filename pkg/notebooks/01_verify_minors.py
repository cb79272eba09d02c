# coding: utf-8

# # Checking superregularity over GF(7)
#
# A matrix is superregular when every square submatrix is nonsingular.
# The verifier walks selections by size, then rows, then columns, and stops
# at the first singular one.

# In[1]:

from srforge import GF, Mat, is_superregular, minor_table, is_block_superregular

F = GF(7)
A = Mat(F, [[6, 2, 2], [4, 3, 1], [3, 3, 4]])
print(A)


# In[2]:

rep = is_superregular(A)
print(rep.verdict, rep.minors_checked)  # 9 entries + 9 2x2 + 1 3x3


# The 2x2 minors, row pairs down and column pairs across:

# In[3]:

print(minor_table(A, 2).to_text())


# A 0/1 matrix over GF(2) can be 2-block superregular without being superregular.

# In[4]:

B = Mat(GF(2), [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1]])
print(is_block_superregular(B, 2).verdict)
r = is_superregular(B)
print(r.verdict, r.witness)
