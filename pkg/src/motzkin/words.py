"""Motzkin words and their length-major lexicographic series.

A Motzkin word is a string over '0', '(' and ')' in which the two
parenthesis counts agree and no prefix closes more than it opened. The
empty word is valid. Words are totally ordered by length first, then
lexicographically with the symbol order '0' < '(' < ')'.

A word is *unique* when it is "0" or starts with '(', *inherited* when
it has length >= 2 and starts with '0'. Listing the unique words in the
total order gives an infinite zero-indexed series whose first entries
are::

    0, (), (0), ()0, (00), (0)0, (()), ()00, ()(), (000), (00)0, (0()), ...

``rank`` and ``unrank`` convert between unique words and positions in
that series. Both walk a completion-count table: ``completion_count(h, r)``
is the number of ways to finish a word when h parentheses are open and
r symbols remain, which doubles as an independent route to the Motzkin
numbers via ``completion_count(0, n)``.
"""

from .errors import (
    BadSymbolError,
    LimitExceededError,
    NotUniqueError,
    MotzkinWordError,
    PrefixViolationError,
    UnbalancedError,
)

ZERO = "0"
OPEN = "("
CLOSE = ")"
SYMBOLS = (ZERO, OPEN, CLOSE)  # ascending alphabet order
_DELTA = {ZERO: 0, OPEN: 1, CLOSE: -1}
_SYMBOL_RANK = {ZERO: 0, OPEN: 1, CLOSE: 2}

EMPTY = "empty"
UNIQUE = "unique"
INHERITED = "inherited"

# Exhaustive enumeration is exponential in n; this bound (853467 words of
# length 16) keeps it comfortable in memory and time.
ENUMERATION_LIMIT = 16

FILTERS = ("all", UNIQUE, INHERITED)


def validate(text: str) -> str:
    """Return ``text`` unchanged if it is a Motzkin word, else raise.

    Raises BadSymbolError for characters outside the alphabet,
    PrefixViolationError when some prefix has more ')' than '(', and
    UnbalancedError when the totals differ. The empty string validates.
    """
    depth = 0
    for position, symbol in enumerate(text):
        if symbol not in _DELTA:
            raise BadSymbolError(f"symbol {symbol!r} at position {position}")
        depth += _DELTA[symbol]
        if depth < 0:
            raise PrefixViolationError(f"prefix {text[: position + 1]!r} closes below depth zero")
    if depth != 0:
        raise UnbalancedError(f"{depth} unmatched '(' in {text!r}")
    return text


def classify(word: str) -> str:
    """Classify a valid word as 'unique', 'inherited' or 'empty'."""
    validate(word)
    if not word:
        return EMPTY
    if word == ZERO or word[0] == OPEN:
        return UNIQUE
    return INHERITED


def compare(first: str, second: str) -> int:
    """Total order on valid words: -1, 0 or 1.

    Shorter words come first; equal lengths compare lexicographically
    with '0' < '(' < ')'.
    """
    validate(first)
    validate(second)
    a, b = sort_key(first), sort_key(second)
    if a < b:
        return -1
    return 0 if a == b else 1


def sort_key(word: str):
    """Sorting key realizing the same order as ``compare``."""
    return len(word), tuple(_SYMBOL_RANK[symbol] for symbol in word)


def _completion_rows(length: int) -> list[list[int]]:
    """Rows r = 0..length of the completion table; rows[r][h] counts the
    ways to finish from h open parentheses in exactly r symbols."""
    rows = [[1]]
    for r in range(1, length + 1):
        prev = rows[-1]

        def count(h: int) -> int:
            return prev[h] if 0 <= h < len(prev) else 0

        rows.append([count(h) + count(h + 1) + (count(h - 1) if h else 0) for h in range(r + 1)])
    return rows


def completion_count(depth: int, remaining: int) -> int:
    """Number of length-``remaining`` suffixes that close ``depth`` open
    parentheses and keep every prefix valid.

    ``completion_count(0, n)`` equals the n-th Motzkin number.
    """
    if depth < 0 or remaining < 0:
        raise ValueError("depth and remaining must be nonnegative")
    if depth > remaining:
        return 0
    return _completion_rows(remaining)[remaining][depth]


def enumerate_words(n: int, kind: str = "all") -> list[str]:
    """All Motzkin words of length ``n`` in the series order.

    ``kind`` restricts the listing to 'unique' or 'inherited' words;
    'all' lists every word. Raises LimitExceededError for n above
    ENUMERATION_LIMIT.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if kind not in FILTERS:
        raise ValueError(f"unknown filter {kind!r}")
    if n > ENUMERATION_LIMIT:
        raise LimitExceededError(f"length {n} exceeds the enumeration bound {ENUMERATION_LIMIT}")

    if n == 0:
        return [""] if kind == "all" else []
    if n == 1:
        return [] if kind == INHERITED else [ZERO]

    rows = _completion_rows(n)
    out: list[str] = []
    prefix: list[str] = []

    def extend(depth: int, remaining: int) -> None:
        if remaining == 0:
            out.append("".join(prefix))
            return
        for symbol in SYMBOLS:
            new_depth = depth + _DELTA[symbol]
            if new_depth < 0 or new_depth > remaining - 1:
                continue
            if rows[remaining - 1][new_depth] == 0:
                continue
            prefix.append(symbol)
            extend(new_depth, remaining - 1)
            prefix.pop()

    if kind == "all":
        extend(0, n)
    elif kind == UNIQUE:
        prefix.append(OPEN)
        extend(1, n - 1)
    else:
        prefix.append(ZERO)
        extend(0, n - 1)
    return out


def rank(word: str) -> int:
    """Zero-based position of a unique word in the series.

    Raises NotUniqueError for the empty word, inherited words, and
    anything that is not a Motzkin word.
    """
    try:
        validate(word)
    except MotzkinWordError as exc:
        raise NotUniqueError(f"not a Motzkin word: {exc}") from exc
    if classify(word) != UNIQUE:
        raise NotUniqueError(f"{word!r} has no position in the series")

    n = len(word)
    if n == 1:
        return 0
    rows = _completion_rows(n)
    # Unique words shorter than n are counted by the (n-1)-th Motzkin number.
    position = rows[n - 1][0]
    depth = 0
    for i, symbol in enumerate(word):
        remaining = n - i - 1
        if i > 0:
            for candidate in SYMBOLS:
                if candidate == symbol:
                    break
                new_depth = depth + _DELTA[candidate]
                if 0 <= new_depth <= remaining:
                    position += rows[remaining][new_depth]
        depth += _DELTA[symbol]
    return position


def unrank(index: int) -> str:
    """The unique word at ``index``; inverse of ``rank``."""
    if index < 0:
        raise ValueError("index must be nonnegative")

    # Grow the completion table until the length block containing the
    # index is known: indexes below completion_count(0, n) have length <= n.
    rows = [[1], [1, 1]]
    n = 1
    while rows[n][0] <= index:
        prev = rows[-1]

        def count(h: int) -> int:
            return prev[h] if 0 <= h < len(prev) else 0

        rows.append([count(h) + count(h + 1) + (count(h - 1) if h else 0) for h in range(n + 2)])
        n += 1

    if n == 1:
        return ZERO
    offset = index - rows[n - 1][0]
    symbols = [OPEN]
    depth = 1
    for i in range(1, n):
        remaining = n - i - 1
        for candidate in SYMBOLS:
            new_depth = depth + _DELTA[candidate]
            if new_depth < 0 or new_depth > remaining:
                continue
            block = rows[remaining][new_depth]
            if offset < block:
                symbols.append(candidate)
                depth = new_depth
                break
            offset -= block
        else:  # pragma: no cover - the blocks partition the index range
            raise AssertionError("completion table exhausted")
    return "".join(symbols)
