"""Shared golden objects used across the test modules.

The binary families here are typed in directly from their sign
patterns; everything else is rebuilt through the library and then
compared against independently constructed expectations.
"""

import pytest

from cocodes import (
    SequenceFamily,
    SequenceSet,
    dft_matrix,
    from_signs,
    generate_cosf,
    hadamard_matrix,
)


@pytest.fixture
def golden_cs_pair():
    """The (2,4)-complementary set {(+++-), (+-++)}."""
    return SequenceSet([from_signs("+++-"), from_signs("+-++")])


@pytest.fixture
def golden_ccc_2x2(golden_cs_pair):
    """The classic (2,2,{4})-CCC of two binary complementary pairs."""
    second = SequenceSet([from_signs("++-+"), from_signs("+---")])
    return SequenceFamily([golden_cs_pair, second])


@pytest.fixture
def cosf_2_of_4():
    """The (2,1,{4})-2-CO-SF {(+++-), (++-+)} (generation from H_2)."""
    h2 = hadamard_matrix(2)
    return generate_cosf(h2, [[0, 1]], [h2])


@pytest.fixture
def cosf_6_mixed():
    """The (6,1,{12,24})-6-CO-SF from F_6 with cells {2,4} and H_2/H_4."""
    return generate_cosf(
        dft_matrix(6),
        [[0, 1], [2, 3, 4, 5]],
        [hadamard_matrix(2), hadamard_matrix(4)],
    )
