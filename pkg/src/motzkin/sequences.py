"""Motzkin numbers and Motzkin difference numbers, exact at any index.

Python integers are unbounded, so the tables never overflow; exactness
at large indexes is the point of recomputing these classic sequences
here rather than hard-coding a prefix.
"""


def motzkin_numbers(n_max: int) -> list[int]:
    """Return the table ``[M_0, ..., M_n_max]``.

    ``M_0 = 1`` and ``M_n = M_{n-1} + sum(M_k * M_{n-2-k}, k=0..n-2)``.
    The n-th entry counts the Motzkin words of length n.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    values = [1]
    for n in range(1, n_max + 1):
        total = values[n - 1]
        for k in range(n - 1):
            total += values[k] * values[n - 2 - k]
        values.append(total)
    return values


def difference_numbers(n_max: int, method: str = "subtraction") -> list[int]:
    """Return the table ``[U_0, ..., U_n_max]`` of difference numbers.

    ``U_0 = 0`` and ``U_1 = 1`` always; the n-th entry counts the unique
    Motzkin words of length n (words that are "0" or start with '(').
    For n >= 2 the two methods compute the same value two ways:

    * ``subtraction``: ``U_n = M_n - M_{n-1}``
    * ``convolution``: ``U_n = sum(M_k * M_{n-2-k}, k=0..n-2)``
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if method not in ("subtraction", "convolution"):
        raise ValueError(f"unknown method {method!r}")
    values = [0, 1][: n_max + 1]
    if n_max < 2:
        return values
    motzkin = motzkin_numbers(n_max)
    if method == "subtraction":
        for n in range(2, n_max + 1):
            values.append(motzkin[n] - motzkin[n - 1])
    else:
        for n in range(2, n_max + 1):
            values.append(sum(motzkin[k] * motzkin[n - 2 - k] for k in range(n - 1)))
    return values
