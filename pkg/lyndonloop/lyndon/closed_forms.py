"""
Closed-form standard Lyndon loop words for the classical types

Words in the fundamental domain 1 <= d <= |alpha| only use exponents 0 and 1.
They are assembled from runs of consecutive colors, `up(a, b) = a, a+1, ..., b`
and `down(b, c) = b, b-1, ..., c`, which are empty when a = b + 1 (resp. c = b + 1).
Several formulas depend on an auxiliary color `a`; it is the unique value for
which the number of exponent-one letters equals d and the word has degree alpha.
"""

from ..errors import ConsistencyError, DomainError, UnsupportedClosedFormError
from ..rootsys import CartanDatum, height
from ..words import LoopWord
from .loop import LoopLyndonTable


def _up(a, b):
    if a > b + 1:
        return None
    return list(range(a, b + 1))


def _down(b, c):
    if c > b + 1:
        return None
    return list(range(b, c - 1, -1))


def _up_down(a, b, c):
    if a == b + 1 and c == b + 1:
        return []
    if a > b or c > b + 1:
        return None
    return list(range(a, b + 1)) + list(range(b - 1, c - 1, -1))


def _assemble(*runs):
    """Each run is (colors, exponent); returns None if any run is invalid"""
    letters = []
    for colors, exponent in runs:
        if colors is None:
            return None
        letters.extend((c, exponent) for c in colors)
    return letters


def _search_a(n, alpha, d, build_fn, chain=None):
    found = set()
    for a in range(1, n + 1):
        letters = build_fn(a)
        if letters is None:
            continue
        if any(c < 1 or c > n for c, _ in letters):
            continue
        if sum(e for _, e in letters) != d:
            continue
        w = _to_word(letters, chain)
        if w.hdeg(len(alpha)) == alpha:
            found.add(w)
    if len(found) != 1:
        raise ConsistencyError(
            "Closed form for {0} at d={1} is not uniquely determined".format(alpha, d)
        )
    return found.pop()


def _to_word(letters, chain=None) -> LoopWord:
    if chain is not None:
        letters = [(chain[c - 1], e) for c, e in letters]
    return LoopWord(letters)


def _type_a(i, j, d, chain=None) -> LoopWord:
    letters = _assemble(
        ([j - d + 1], 1),
        (_down(j - d, i), 0),
        (_up(j - d + 2, j), 1),
    )
    return _to_word(letters, chain)


def _contiguous(alpha, values):
    """Index range (i, j), 1-based, if alpha is `values` on i..j and 0 elsewhere"""
    support = [k for k, x in enumerate(alpha) if x]
    if not support:
        return None
    i, j = support[0], support[-1]
    if any(alpha[k] not in values for k in range(i, j + 1)):
        return None
    return i + 1, j + 1


def _closed_b(alpha, d, n):
    span = _contiguous(alpha, (1,))
    if span is not None:
        return _type_a(span[0], span[1], d)
    # beta_ij: 1 on i..j-1, 2 on j..n
    ones = [k + 1 for k, x in enumerate(alpha) if x == 1]
    twos = [k + 1 for k, x in enumerate(alpha) if x == 2]
    if not ones or not twos or twos[-1] != n:
        raise DomainError("{0} is not a positive root of B{1}".format(alpha, n))
    i, j = ones[0], twos[0]
    if d == 1:
        pairs = []
        for m in range(n - 1, j - 2, -1):
            pairs.extend([m, m + 1])
        return _to_word(_assemble(([n], 1), (pairs, 0), (_down(j - 2, i), 0)))
    k = d // 2
    if d % 2 == 0:
        if j <= n - k + 1:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, j), 0),
                    (_up(a + 1, n), 1),
                    (_down(n, a), 1),
                    (_down(a - 1, i), 0),
                )

        else:

            def build_fn(a):
                return _assemble(
                    ([a], 1), (_down(a - 1, i), 0), (_up(a + 1, n), 1), (_down(n, j), 1)
                )

    else:
        if j <= n - k + 1:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, i), 0),
                    (_up(a + 1, n), 1),
                    (_down(n, a + 1), 1),
                    (_down(a, j), 0),
                )

        else:

            def build_fn(a):
                return _assemble(
                    ([a], 1), (_down(a - 1, i), 0), (_up(a + 1, n), 1), (_down(n, j), 1)
                )

    return _search_a(n, alpha, d, build_fn)


def _closed_c(alpha, d, n):
    span = _contiguous(alpha, (1,))
    if span is not None:
        return _type_a(span[0], span[1], d)
    # gamma_ij: 1 on i..j-1, 2 on j..n-1, 1 on n
    if alpha[n - 1] != 1:
        raise DomainError("{0} is not a positive root of C{1}".format(alpha, n))
    ones = [k + 1 for k, x in enumerate(alpha[: n - 1]) if x == 1]
    twos = [k + 1 for k, x in enumerate(alpha) if x == 2]
    if not twos:
        raise DomainError("{0} is not a positive root of C{1}".format(alpha, n))
    j = twos[0]
    i = ones[0] if ones else j
    if d == 1:
        pairs = []
        for m in range(n - 1, j - 1, -1):
            pairs.extend([m, m])
        return _to_word(_assemble(([n], 1), (pairs, 0), (_down(j - 1, i), 0)))
    k = d // 2
    if d % 2 == 0:
        if j <= n - k:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, i), 0),
                    (_up_down(a + 1, n, a + 1), 1),
                    (_down(a, j), 0),
                )

        else:

            def build_fn(a):
                return _assemble(([a], 1), (_down(a - 1, i), 0), (_up_down(a + 1, n, j), 1))

    else:
        if i == j:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, i), 0),
                    (_up(a + 1, n - 1), 1),
                    ([a], 1),
                    (_down(a - 1, i), 0),
                    (_up(a + 1, n), 1),
                )

        elif j <= n - k:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, j), 0),
                    (_up_down(a + 1, n, a), 1),
                    (_down(a - 1, i), 0),
                )

        else:

            def build_fn(a):
                return _assemble(([a], 1), (_down(a - 1, i), 0), (_up_down(a + 1, n, j), 1))

    return _search_a(n, alpha, d, build_fn)


def _closed_d(alpha, d, n):
    # roots supported on the chain 1, ..., n-1 or on the chain 1, ..., n-2, n
    if alpha[n - 1] == 0:
        span = _contiguous(alpha[: n - 1], (1,))
        if span is not None:
            return _type_a(span[0], span[1], d)
    if alpha[n - 2] == 0 and alpha[n - 1] == 1:
        chain = list(range(1, n - 1)) + [n]
        folded = tuple(alpha[: n - 2]) + (1,)
        span = _contiguous(folded, (1,))
        if span is not None:
            return _type_a(span[0], span[1], d, chain=chain)

    if alpha[n - 2] != 1 or alpha[n - 1] != 1:
        raise DomainError("{0} is not a positive root of D{1}".format(alpha, n))
    head = alpha[: n - 2]
    twos = [k + 1 for k, x in enumerate(head) if x == 2]
    ones = [k + 1 for k, x in enumerate(head) if x == 1]

    if not twos:
        # sigma_j = alpha_j + ... + alpha_n
        j = ones[0]
        if d == 1:
            return _to_word(_assemble(([n], 1), ([n - 2, n - 1], 0), (_down(n - 3, j), 0)))
        if d == 2:
            return _to_word(_assemble(([n - 1], 1), (_down(n - 2, j), 0), ([n], 1)))
        return _to_word(
            _assemble(
                ([n - d + 1], 1),
                (_down(n - d, j), 0),
                (_up(n - d + 2, n - 2), 1),
                ([n, n - 1], 1),
            )
        )

    # tau_ij: 1 on i..j-1, 2 on j..n-2, 1 on n-1, n
    j = twos[0]
    i = ones[0]
    if d == 1:
        pairs = []
        for m in range(n - 2, j - 2, -1):
            pairs.extend([m, m + 1])
        return _to_word(_assemble(([n], 1), (pairs, 0), (_down(j - 2, i), 0)))
    if d == 2:
        return _to_word(
            _assemble(([n - 1], 1), (_down(n - 2, i), 0), ([n], 1), (_down(n - 2, j), 0))
        )
    if d == 3:
        return _to_word(
            _assemble(
                ([n - 2], 1), (_down(n - 3, i), 0), ([n, n - 1], 1), (_down(n - 2, j), 0)
            )
        )
    k = d // 2
    if d % 2 == 0:
        if j <= n - k:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, j), 0),
                    (_up(a + 1, n - 2), 1),
                    (_down(n, a), 1),
                    (_down(a - 1, i), 0),
                )

        else:

            def build_fn(a):
                return _assemble(
                    ([a], 1), (_down(a - 1, i), 0), (_up(a + 1, n - 2), 1), (_down(n, j), 1)
                )

    else:
        if j <= n - k - 1:

            def build_fn(a):
                return _assemble(
                    ([a], 1),
                    (_down(a - 1, i), 0),
                    (_up(a + 1, n - 2), 1),
                    (_down(n, a + 1), 1),
                    (_down(a, j), 0),
                )

        else:

            def build_fn(a):
                return _assemble(
                    ([a], 1), (_down(a - 1, i), 0), (_up(a + 1, n - 2), 1), (_down(n, j), 1)
                )

    return _search_a(n, alpha, d, build_fn)


def appendix_closed_form(cd: CartanDatum, alpha, d: int) -> LoopWord:
    """
    The closed-form word l(alpha, d) of a classical root system

    Parameters
    ----------
    cd : CartanDatum
        A root system of type A, B, C or D in the standard labelling

    alpha : tuple of int
        A positive root

    d : int
        Vertical degree with 1 <= d <= |alpha|

    Returns
    -------
    LoopWord

    Raises
    ------
    UnsupportedClosedFormError
        For exceptional types or relabelled simple roots
    """
    if not cd.is_classical:
        raise UnsupportedClosedFormError(
            "No closed forms are available for {0}".format(cd.name)
        )
    alpha = cd.check_positive_root(alpha)
    if not 1 <= d <= height(alpha):
        raise DomainError("Closed forms cover 1 <= d <= |alpha|, got d={0}".format(d))
    n = cd.rank
    if cd.type_letter == "A":
        i, j = _contiguous(alpha, (1,))
        return _type_a(i, j, d)
    if cd.type_letter == "B":
        return _closed_b(alpha, d, n)
    if cd.type_letter == "C":
        return _closed_c(alpha, d, n)
    return _closed_d(alpha, d, n)


def emit_dictionary(cd: CartanDatum, a: int, table: LoopLyndonTable = None) -> list:
    """
    Standard Lyndon loop words of the fundamental domain starting with a^(1)

    Parameters
    ----------
    cd : CartanDatum
        The root system

    a : int
        A color

    table : LoopLyndonTable, optional
        A prebuilt table for `cd`

    Returns
    -------
    list of LoopWord
        Sorted in increasing order
    """
    if a not in cd.colors:
        raise DomainError("Color {0} is not in 1..{1}".format(a, cd.rank))
    if table is None:
        table = LoopLyndonTable(cd)
    first = (a, 1)
    words = {w for w in table.fundamental.values() if tuple(w.letters[0]) == first}
    return sorted(words)


def dictionary_tree(words) -> str:
    """
    Renders a set of words as a rooted tree

    Each vertex is a letter; a vertex ending one of the words is marked with
    `o` (hollow), other vertices with `*` (full).
    """
    trie = {}
    ends = set()
    for w in words:
        node = trie
        path = ()
        for letter in w:
            node = node.setdefault(letter, {})
            path += (letter,)
        ends.add(path)

    lines = []

    def walk(node, path, prefix):
        children = sorted(node, key=lambda x: x.key)
        for idx, letter in enumerate(children):
            last = idx == len(children) - 1
            child_path = path + (letter,)
            mark = "o" if child_path in ends else "*"
            if not path:
                lines.append("{0} {1}".format(mark, letter.render()))
                walk(node[letter], child_path, "")
                continue
            branch = "`-- " if last else "|-- "
            lines.append("{0}{1}{2} {3}".format(prefix, branch, mark, letter.render()))
            walk(node[letter], child_path, prefix + ("    " if last else "|   "))

    walk(trie, (), "")
    return "\n".join(lines)
