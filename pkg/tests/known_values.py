"""Reference polynomials over GF(9) (w^2 + 2w + 2 = 0, Theta(a) = a^3)."""

F_EX1 = "x^3 + w^3x^2 + x + 1"
Q_18_BY_F_EX1 = (
    "x^15 + w^5x^14 + x^13 + 2x^12 + x^9 + w^5x^8 + x^7 + 2x^6 + x^3 + w^5x^2 + x + 2"
)
Q_36_BY_LINEAR = " + ".join(
    (f"x^{k}" if k % 2 else f"w^2x^{k}") if k > 1 else ("x" if k == 1 else "w^2") for k in range(35, -1, -1)
)
G2 = "w^2x^2 + x + 1"
Q_36_BY_G2 = (
    "w^6x^34 + 2x^33 + w^5x^32 + 2x^31 + x^30 + w^2x^28 + x^27 + wx^26 + x^25 + 2x^24 + w^6x^22"
    " + 2x^21 + w^5x^20 + 2x^19 + x^18 + w^2x^16 + x^15 + wx^14 + x^13 + 2x^12 + w^6x^10 + 2x^9"
    " + w^5x^8 + 2x^7 + x^6 + w^2x^4 + x^3 + wx^2 + x + 2"
)
G1_EX2 = "w^6x^2 + x + 1"
H1 = (
    "w^2x^34 + 2x^33 + w^7x^32 + 2x^31 + x^30 + w^6x^28 + x^27 + w^3x^26 + x^25 + 2x^24 + w^2x^22"
    " + 2x^21 + w^7x^20 + 2x^19 + x^18 + w^6x^16 + x^15 + w^3x^14 + x^13 + 2x^12 + w^2x^10 + 2x^9"
    " + w^7x^8 + 2x^7 + x^6 + w^6x^4 + x^3 + w^3x^2 + x + 2"
)
H1_DAGGER = (
    "2x^34 + x^33 + w^3x^32 + x^31 + w^6x^30 + x^28 + 2x^27 + w^7x^26 + 2x^25 + w^2x^24 + 2x^22"
    " + x^21 + w^3x^20 + x^19 + w^6x^18 + x^16 + 2x^15 + w^7x^14 + 2x^13 + w^2x^12 + 2x^10 + x^9"
    " + w^3x^8 + x^7 + w^6x^6 + x^4 + 2x^3 + w^7x^2 + 2x + w^2"
)
H1_QUOTIENT = (
    "w^6x^32 + w^5x^31 + wx^30 + w^6x^29 + w^7x^28 + w^2x^27 + 2x^26 + 2x^25 + 2x^24"
    " + w^6x^23 + w^7x^22 + w^2x^21 + wx^20 + w^7x^19 + w^6x^18 + w^2x^14 + wx^13 + w^5x^12"
    " + w^2x^11 + w^3x^10 + w^6x^9 + x^8 + x^7 + x^6 + w^2x^5 + w^3x^4 + w^6x^3 + w^5x^2 + w^3x + w^2"
)
H2 = Q_36_BY_G2
H2_DAGGER = (
    "2x^34 + x^33 + wx^32 + x^31 + w^2x^30 + x^28 + 2x^27 + w^5x^26 + 2x^25 + w^6x^24 + 2x^22"
    " + x^21 + wx^20 + x^19 + w^2x^18 + x^16 + 2x^15 + w^5x^14 + 2x^13 + w^6x^12 + 2x^10 + x^9"
    " + wx^8 + x^7 + w^2x^6 + x^4 + 2x^3 + w^5x^2 + 2x + w^6"
)
H2_QUOTIENT = (
    "w^2x^32 + w^7x^31 + w^3x^30 + w^2x^29 + w^5x^28 + w^6x^27 + 2x^26 + 2x^25 + 2x^24"
    " + w^2x^23 + w^5x^22 + w^6x^21 + w^3x^20 + w^5x^19 + w^2x^18 + w^6x^14 + w^3x^13 + w^7x^12"
    " + w^6x^11 + wx^10 + w^2x^9 + x^8 + x^7 + x^6 + w^6x^5 + wx^4 + w^2x^3 + w^7x^2 + wx + w^6"
)
F_EX2 = "x^3 + w^3x^2 + w^5x + 2"
X49_FACTORS = [
    "x + 2",
    "x^3 + wx^2 + w^7x + 2",
    "x^3 + w^3x^2 + w^5x + 2",
    "x^21 + wx^14 + w^7x^7 + 2",
    "x^21 + w^3x^14 + w^5x^7 + 2",
]
Q_36_BY_G1_EX2 = (
    "w^2x^34 + 2x^33 + w^7x^32 + 2x^31 + x^30 + w^6x^28 + x^27 + w^3x^26 + x^25 + 2x^24 + w^2x^22"
    " + 2x^21 + w^7x^20 + 2x^19 + x^18 + w^6x^16 + x^15 + w^3x^14 + x^13 + 2x^12 + w^2x^10 + 2x^9"
    " + w^7x^8 + 2x^7 + x^6 + w^6x^4 + x^3 + w^3x^2 + x + 2"
)
