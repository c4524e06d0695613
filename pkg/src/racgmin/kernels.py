"""Inner loops over packed words.

A word is a run of generator indices stored in an ``int8`` buffer; packed
batches are 2-d arrays padded with ``-1`` plus a length vector. ``comm`` is
the boolean commutation matrix with a false diagonal, so a letter never
"commutes past" another copy of itself.

Everything here is compiled by numba unless ``RACGMIN_NUMBA=0``.
"""

import numpy as np

from ._accel import njit

WORD_DTYPE = np.int8


@njit
def push_letter(buf, length, s, comm):
    """Right-multiply the reduced word ``buf[:length]`` by ``s`` in place.

    Returns the new length. The result is reduced but not lex-normalized.
    """
    i = length - 1
    while i >= 0:
        c = buf[i]
        if c == s:
            for j in range(i, length - 1):
                buf[j] = buf[j + 1]
            return length - 1
        if not comm[c, s]:
            break
        i -= 1
    buf[length] = s
    return length + 1


@njit
def lex_normalize(buf, length, comm, out):
    # greedy: emit the smallest letter that can be commuted to the front
    used = np.zeros(length, np.bool_)
    for k in range(length):
        best = -1
        best_pos = -1
        for i in range(length):
            if used[i]:
                continue
            c = buf[i]
            if best >= 0 and c >= best:
                continue
            free = True
            for j in range(i):
                if not used[j] and not comm[buf[j], c]:
                    free = False
                    break
            if free:
                best = c
                best_pos = i
        used[best_pos] = True
        out[k] = best


@njit
def normal_form(letters, comm):
    buf = np.empty(letters.shape[0] + 1, np.int8)
    length = 0
    for q in range(letters.shape[0]):
        length = push_letter(buf, length, letters[q], comm)
    out = np.empty(length, np.int8)
    lex_normalize(buf, length, comm, out)
    return out


@njit
def descent_mask(buf, length, comm):
    """Bitmask of right descents of the reduced word ``buf[:length]``."""
    mask = 0
    for i in range(length - 1, -1, -1):
        c = buf[i]
        last = True
        for j in range(i + 1, length):
            if not comm[c, buf[j]]:
                last = False
                break
        if last:
            mask |= 1 << int(c)
    return mask


@njit
def descent_masks(words, lengths, comm):
    out = np.empty(words.shape[0], np.int64)
    for r in range(words.shape[0]):
        out[r] = descent_mask(words[r], lengths[r], comm)
    return out


@njit
def extension_mask(words, comm):
    """``out[r, s]`` is true iff ``words[r] + s`` is again a ShortLex normal form.

    ``words`` holds normal forms of one common length. The extension fails
    when ``s`` cancels (it is a right descent) or when ``s`` could slide
    left past a larger commuting letter.
    """
    m = words.shape[0]
    k = words.shape[1]
    n = comm.shape[0]
    out = np.zeros((m, n), np.bool_)
    for r in range(m):
        for s in range(n):
            ok = True
            for i in range(k - 1, -1, -1):
                c = words[r, i]
                if c == s:
                    ok = False
                    break
                if not comm[c, s]:
                    break
                if c > s:
                    ok = False
                    break
            out[r, s] = ok
    return out


@njit
def hole_radius(words, lengths, xs, xlens, comm, target, radius, cap):
    """Shortest multiplier landing each word on descent set ``target``.

    ``xs`` must be sorted by length. For word ``w`` only multipliers with
    ``len(x) <= min(cap, radius - len(w))`` are tried; ``cap + 1`` marks a
    word with no hit inside that window.
    """
    m = words.shape[0]
    out = np.empty(m, np.int64)
    buf = np.empty(words.shape[1] + xs.shape[1] + 1, np.int8)
    for r in range(m):
        length = lengths[r]
        limit = min(cap, radius - length)
        best = cap + 1
        for q in range(xs.shape[0]):
            xl = xlens[q]
            if xl > limit:
                break
            for i in range(length):
                buf[i] = words[r, i]
            cur = length
            for j in range(xl):
                cur = push_letter(buf, cur, xs[q, j], comm)
            if descent_mask(buf, cur, comm) == target:
                best = xl
                break
        out[r] = best
    return out


@njit
def min_distances(a_words, a_lens, b_words, b_lens, comm):
    """For each row ``a`` the minimum of ``len(a^-1 b)`` over rows ``b``.

    Returns -1 for every row when ``b_words`` is empty.
    """
    out = np.full(a_words.shape[0], -1, np.int64)
    buf = np.empty(a_words.shape[1] + b_words.shape[1] + 1, np.int8)
    for r in range(a_words.shape[0]):
        la = a_lens[r]
        best = -1
        for q in range(b_words.shape[0]):
            for i in range(la):
                buf[i] = a_words[r, la - 1 - i]
            cur = la
            for j in range(b_lens[q]):
                cur = push_letter(buf, cur, b_words[q, j], comm)
            if best < 0 or cur < best:
                best = cur
                if best == 0:
                    break
        out[r] = best
    return out


@njit
def descents_after(words, lengths, x, comm):
    """Right-descent bitmask of ``w x`` for every row ``w``."""
    out = np.empty(words.shape[0], np.int64)
    buf = np.empty(words.shape[1] + x.shape[0] + 1, np.int8)
    for r in range(words.shape[0]):
        cur = lengths[r]
        for i in range(cur):
            buf[i] = words[r, i]
        for j in range(x.shape[0]):
            cur = push_letter(buf, cur, x[j], comm)
        out[r] = descent_mask(buf, cur, comm)
    return out


@njit
def concat_rows(prefix, words, lengths, suffix, comm):
    """Normal forms of ``prefix w suffix`` for every row ``w``."""
    m = words.shape[0]
    width = words.shape[1] + prefix.shape[0] + suffix.shape[0]
    out = np.full((m, width), -1, np.int8)
    out_len = np.empty(m, np.int64)
    buf = np.empty(width + 1, np.int8)
    tmp = np.empty(width + 1, np.int8)
    for r in range(m):
        cur = 0
        for j in range(prefix.shape[0]):
            cur = push_letter(buf, cur, prefix[j], comm)
        for i in range(lengths[r]):
            cur = push_letter(buf, cur, words[r, i], comm)
        for j in range(suffix.shape[0]):
            cur = push_letter(buf, cur, suffix[j], comm)
        lex_normalize(buf, cur, comm, tmp)
        for i in range(cur):
            out[r, i] = tmp[i]
        out_len[r] = cur
    return out, out_len
