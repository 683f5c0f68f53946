"""Pure-Python automorphism kernel (fallback for the compiled ``_kernel``).

An automorphism of a connected map is fixed by the image of one dart and its
chirality, so the search tries every admissible image of a base dart and
propagates along ``alpha`` and ``sigma``.
"""
from __future__ import annotations

from typing import Sequence


def extend(
    alpha: Sequence[int], sigma: Sequence[int], sigma_inv: Sequence[int], base: int, image: int, reversing: bool
) -> list[int] | None:
    """Extend ``base -> image``; the dart permutation, or None if it does not close."""
    n = len(alpha)
    perm = [-1] * n
    used = [False] * n
    perm[base] = image
    used[image] = True
    s_img = sigma_inv if reversing else sigma
    stack = [base]
    while stack:
        x = stack.pop()
        y = perm[x]
        for xx, yy in ((alpha[x], alpha[y]), (sigma[x], s_img[y])):
            p = perm[xx]
            if p < 0:
                if used[yy]:
                    return None
                perm[xx] = yy
                used[yy] = True
                stack.append(xx)
            elif p != yy:
                return None
    if -1 in perm:
        return None
    return perm


def search(
    alpha: Sequence[int], sigma: Sequence[int], base: int, candidates: Sequence[int]
) -> list[tuple[int, int, list[int]]]:
    """All automorphisms sending ``base`` into ``candidates``.

    Returns ``(image, reversing, perm)`` triples sorted by image then chirality.
    """
    sigma_inv = [0] * len(sigma)
    for d, e in enumerate(sigma):
        sigma_inv[e] = d
    out = []
    for image in sorted(candidates):
        for reversing in (0, 1):
            perm = extend(alpha, sigma, sigma_inv, base, image, bool(reversing))
            if perm is not None:
                out.append((image, reversing, perm))
    return out
