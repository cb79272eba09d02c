# coding: utf-8

# # Block superregular matrices from Kronecker products

# In[1]:

from srforge import GF, Mat, kron, det, chain, is_superregular, is_block_superregular
from srforge.verify import witness_matrix

F = GF(7)
A = Mat(F, [[1, 2], [3, 4]])
B = Mat(F, [[1, 1], [0, 3]])
M = kron(A, B)
print(M)
print(det(M), det(A) ** 2 * det(B) ** 2)


# A (x) B is 2-block superregular, but has zero entries, so it is not superregular.

# In[2]:

print(is_block_superregular(M, 2).verdict, is_superregular(M).verdict)


# Chaining two copies of A gives a 4-block superregular matrix. Read with
# 2x2 blocks it fails; the witness is the first singular selection.

# In[3]:

M2 = chain([A, A], B)
print(is_block_superregular(M2).verdict)
r = is_block_superregular(M2.inner, 2)
print(r.verdict, r.witness)
print(witness_matrix(M2.inner, r))
