# coding: utf-8

# # Moving to GF(p^n) through a companion matrix
#
# With a primitive cubic over GF(5), powers of its companion matrix C form
# a copy of GF(125). Psi^-1 maps a block matrix of C-powers back to a
# matrix over the extension field.

# In[1]:

from srforge import CompanionCtx, Mat, kron_block, lift, is_superregular, minor_table, mat_frobenius

ctx = CompanionCtx("x^3+3x+3", 5)
print(ctx.C)


# In[2]:

A = Mat(ctx.base, [[1, 2, 2], [2, 1, 3], [3, 2, 4]])
M = kron_block(A, ctx.C)
print(ctx.power_pattern(M))


# In[3]:

N = ctx.Psi_inv(M)
print(N)
print(is_superregular(N).verdict)
print(minor_table(N, 2).to_text())


# Frobenius powers keep superregularity.

# In[4]:

print(is_superregular(mat_frobenius(N, 2)).verdict)


# lift() does the same for a list of factors. With two factors larger
# than 1x1 the Kronecker product has rank-one 2x2 pieces, so the result
# can not be superregular.

# In[5]:

N2 = lift([Mat(ctx.base, [[1, 2], [3, 4]])] * 2, ctx, check=False)
print(is_superregular(N2).witness)
