# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled automorphism kernel; same contract as ``_kernel_py``."""
from libc.stdlib cimport malloc, free


cdef int _extend(int n, int* alpha, int* sigma, int* simg, int base, int image,
                 int* perm, char* used, int* stack) nogil:
    cdef int i, top, x, y, xx, yy, p, k
    for i in range(n):
        perm[i] = -1
        used[i] = 0
    perm[base] = image
    used[image] = 1
    stack[0] = base
    top = 1
    while top > 0:
        top -= 1
        x = stack[top]
        y = perm[x]
        for k in range(2):
            if k == 0:
                xx = alpha[x]
                yy = alpha[y]
            else:
                xx = sigma[x]
                yy = simg[y]
            p = perm[xx]
            if p < 0:
                if used[yy]:
                    return 0
                perm[xx] = yy
                used[yy] = 1
                stack[top] = xx
                top += 1
            elif p != yy:
                return 0
    for i in range(n):
        if perm[i] < 0:
            return 0
    return 1


def extend(alpha, sigma, sigma_inv, int base, int image, bint reversing):
    res = search_impl(alpha, sigma, sigma_inv, base, [image], 1 if reversing else 0, 1 if reversing else 0)
    return res[0][2] if res else None


def search(alpha, sigma, int base, candidates):
    cdef int n = len(sigma)
    sigma_inv = [0] * n
    for d in range(n):
        sigma_inv[sigma[d]] = d
    return search_impl(alpha, sigma, sigma_inv, base, sorted(candidates), 0, 1)


cdef list search_impl(alpha, sigma, sigma_inv, int base, list images, int rmin, int rmax):
    cdef int n = len(alpha)
    cdef int* a = <int*> malloc(n * sizeof(int))
    cdef int* s = <int*> malloc(n * sizeof(int))
    cdef int* si = <int*> malloc(n * sizeof(int))
    cdef int* perm = <int*> malloc(n * sizeof(int))
    cdef int* stack = <int*> malloc(n * sizeof(int))
    cdef char* used = <char*> malloc(n * sizeof(char))
    cdef int i, image, r, ok
    cdef list out = []
    try:
        for i in range(n):
            a[i] = alpha[i]
            s[i] = sigma[i]
            si[i] = sigma_inv[i]
        for image in images:
            for r in range(rmin, rmax + 1):
                with nogil:
                    ok = _extend(n, a, s, si if r else s, base, image, perm, used, stack)
                if ok:
                    out.append((image, r, [perm[i] for i in range(n)]))
    finally:
        free(a)
        free(s)
        free(si)
        free(perm)
        free(stack)
        free(used)
    return out
