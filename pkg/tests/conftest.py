from fractions import Fraction

from hypothesis import settings, strategies as st

from charcert.scalars import ZERO, CycloNum, cyclo_make

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

LEVELS = (1, 3, 4, 5, 6, 8, 12)


@st.composite
def cyclo_nums(draw, levels=LEVELS, coeff=5):
    n = draw(st.sampled_from(levels))
    cs = draw(st.lists(st.integers(-coeff, coeff), min_size=n, max_size=n))
    den = draw(st.integers(1, 3))
    return sum((Fraction(c, den) * cyclo_make(n, k) for k, c in enumerate(cs)), ZERO)


def numeric(x: CycloNum) -> complex:
    return x.to_complex()
