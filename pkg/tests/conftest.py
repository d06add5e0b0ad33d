from hypothesis import strategies as st

from ballotkl.laurent import Laurent

exponents = st.tuples(st.integers(-6, 6), st.integers(-3, 3))
laurents = st.dictionaries(exponents, st.integers(-5, 5), max_size=6).map(Laurent)
case_b_laurents = st.dictionaries(
    st.tuples(st.integers(-6, 6), st.just(0)), st.integers(-5, 5), max_size=6
).map(Laurent)


def binary_strings(min_size=1, max_size=6):
    return st.text(alphabet="12", min_size=min_size, max_size=max_size)
