import hypothesis.strategies as st

from lctkit import MonomialIdeal


@st.composite
def ideals(draw, n=None, max_exponent=6, max_extra=3, finite=True):
    """Random proper monomial ideals; finite colength unless ``finite`` is False."""
    if n is None:
        n = draw(st.integers(1, 3))
    gens = []
    if finite:
        for i in range(n):
            e = [0] * n
            e[i] = draw(st.integers(1, max_exponent))
            gens.append(tuple(e))
    vec = st.tuples(*[st.integers(0, max_exponent)] * n).filter(any)
    gens += draw(st.lists(vec, min_size=0 if finite else 1, max_size=max_extra))
    return MonomialIdeal(n, tuple(gens))


@st.composite
def ideal_pairs(draw, max_exponent=6, max_extra=3):
    n = draw(st.integers(1, 3))
    return (
        draw(ideals(n=n, max_exponent=max_exponent, max_extra=max_extra)),
        draw(ideals(n=n, max_exponent=max_exponent, max_extra=max_extra)),
    )
