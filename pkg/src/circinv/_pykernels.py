"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built or ``CIRCINV_PURE_PYTHON`` is set.
"""


def minimize_path(n, i, image):
    d = abs(i - image)
    if abs(i - (image + n)) < d:
        return image + n
    if abs(i - (image - n)) < d:
        return image - n
    return image


def nearest_lift(window):
    n = len(window)
    return [minimize_path(n, p + 1, window[p]) for p in range(n)]


def shi_length(images):
    n = len(images)
    total = 0
    for p in range(n):
        x = images[p]
        for q in range(p + 1, n):
            total += abs((images[q] - x) // n)
    return total


def frame_scan(window):
    """Minimum Shi length of nearest lifts over all 2n frames.

    Returns ``(length, rotation, flipped, lifted)`` for the first frame in
    scan order attaining the minimum.
    """
    n = len(window)
    best = None
    for flipped in (False, True):
        for k in range(n):
            if flipped:
                frame = [window[(k - q) % n] for q in range(n)]
            else:
                frame = [window[(q - k) % n] for q in range(n)]
            lifted = nearest_lift(frame)
            length = shi_length(lifted)
            if best is None or length < best[0]:
                best = (length, k, flipped, tuple(lifted))
    return best


def uncross(images):
    """Sort a nearest-lift configuration by swapping the first crossed pair.

    Returns generator letters (1-based, in the configuration's own frame).
    """
    m = list(images)
    n = len(m)
    d = [m[p] - (p + 1) for p in range(n)]
    word = []
    cap = n * (n - 1)
    while True:
        for p in range(n):
            q = (p + 1) % n
            if d[p] > d[q]:
                if q == 0:
                    # wrap: position n + 1 is position 1 shifted by n
                    m[p], m[q] = m[q] + n, m[p] - n
                else:
                    m[p], m[q] = m[q], m[p]
                word.append(p + 1)
                if len(word) > cap:
                    raise RuntimeError("uncrossing exceeded its iteration cap")
                for r in (p, q):
                    m[r] = minimize_path(n, r + 1, m[r])
                    d[r] = m[r] - (r + 1)
                break
        else:
            return word
