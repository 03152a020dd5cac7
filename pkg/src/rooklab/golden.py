"""Golden spectra: the published SR(4,n) table for n = 0..15, verbatim.

Stored in exponent notation exactly as printed (multiplicities in braces);
comparisons go through Spectrum.from_string so the diff is on canonical
spectrum strings, catching drift in either direction.
"""

from __future__ import annotations

from .linalg import Spectrum

TABLE1 = {
    0: "0^{1}",
    1: "3^{1} (-1)^{3}",
    2: "6^{1} 1^{4} (-2)^{5}",
    3: "9^{1} 3^{4} 1^{3} (-1)^{6} (-3)^{6}",
    4: "12^{1} 5^{4} 3^{4} 0^{11} (-2)^{6} (-3)^{4} (-4)^{5}",
    5: "15^{1} 7^{4} 5^{4} 3^{3} 1^{12} (-1)^{9} (-2)^{8} (-3)^{4} (-4)^{8} "
       "(-5)^{3}",
    6: "18^{1} 9^{4} 7^{4} 5^{4} 2^{17} 0^{6} (-1)^{16} (-2)^{3} (-3)^{12} "
       "(-4)^{8} (-5)^{8} (-6)^{1}",
    7: "21^{1} 11^{4} 9^{4} 7^{4} 5^{3} 3^{18} 1^{9} 0^{12} (-1)^{18} "
       "(-3)^{21} (-4)^{8} (-5)^{14} (-6)^{4}",
    8: "24^{1} 13^{4} 11^{4} 9^{4} 7^{4} 4^{23} 2^{6} 1^{16} 0^{18} "
       "(-1)^{12} (-2)^{8} (-3)^{24} (-4)^{11} (-5)^{20} (-6)^{10}",
    9: "27^{1} 15^{4} 13^{4} 11^{4} 9^{4} 7^{3} 5^{24} 3^{9} 2^{12} 1^{22} "
       "0^{20} (-1)^{7} (-2)^{20} (-3)^{24} (-4)^{16} (-5)^{26} (-6)^{20}",
    10: "30^{1} 17^{4} 15^{4} 13^{4} 11^{4} 9^{4} 6^{29} 4^{6} 3^{16} "
        "2^{18} 1^{28} 0^{14} (-1)^{12} (-2)^{29} (-3)^{24} (-4)^{22} "
        "(-5)^{32} (-6)^{35}",
    11: "33^{1} 19^{4} 17^{4} 15^{4} 13^{4} 11^{4} 9^{3} 7^{30} 5^{9} "
        "4^{12} 3^{22} 2^{24} 1^{30} 0^{8} (-1)^{24} (-2)^{32} (-3)^{27} "
        "(-4)^{28} (-5)^{38} (-6)^{56}",
    12: "36^{1} 21^{4} 19^{4} 17^{4} 15^{4} 13^{4} 11^{4} 8^{35} 6^{6} "
        "5^{16} 4^{18} 3^{28} 2^{30} 1^{24} 0^{11} (-1)^{36} (-2)^{32} "
        "(-3)^{32} (-4)^{34} (-5)^{44} (-6)^{84}",
    13: "39^{1} 23^{4} 21^{4} 19^{4} 17^{4} 15^{4} 13^{4} 11^{3} 9^{36} "
        "7^{9} 6^{12} 5^{22} 4^{24} 3^{34} 2^{32} 1^{18} 0^{20} (-1)^{45} "
        "(-2)^{32} (-3)^{38} (-4)^{40} (-5)^{50} (-6)^{120}",
    14: "42^{1} 25^{4} 23^{4} 21^{4} 19^{4} 17^{4} 15^{4} 13^{4} 10^{41} "
        "8^{6} 7^{16} 6^{18} 5^{28} 4^{30} 3^{40} 2^{26} 1^{20} 0^{32} "
        "(-1)^{48} (-2)^{35} (-3)^{44} (-4)^{46} (-5)^{56} (-6)^{165}",
    15: "45^{1} 27^{4} 25^{4} 23^{4} 21^{4} 19^{4} 17^{4} 15^{4} 13^{3} "
        "11^{42} 9^{9} 8^{12} 7^{22} 6^{24} 5^{34} 4^{36} 3^{42} 2^{20} "
        "1^{27} 0^{44} (-1)^{48} (-2)^{40} (-3)^{50} (-4)^{52} (-5)^{62} "
        "(-6)^{220}",
}

# complement of SR(3,3): integral cubic graph, pins down SR(3,3) by spectrum
COMPLEMENT_SR33 = "3^{1} 2^{1} 1^{3} (-1)^{2} (-2)^{3}"


def table1_spectrum(n: int) -> Spectrum:
    """Row n of the golden table, parsed."""
    if n not in TABLE1:
        raise KeyError(f"golden table covers n = 0..15, got {n}")
    return Spectrum.from_string(TABLE1[n])
