#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghz {

/// Maximum qubit count of a PauliOperator (one bit per qubit in a 64-bit word).
inline constexpr std::size_t kMaxPauliQubits = 64;

/// Bit position of 1-based qubit k in an n-qubit mask. Qubit 1 is the most significant bit,
/// which is also the leftmost letter in text and the most significant bit of a basis index.
constexpr std::uint64_t qubit_bit(std::size_t n, std::size_t k) {
    return std::uint64_t{1} << (n - k);
}

constexpr std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A power of i: value = i^exponent, exponent in {0,1,2,3}.
class QuarterPhase {
   public:
    constexpr QuarterPhase() = default;
    constexpr explicit QuarterPhase(int exponent) : exponent_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {}

    constexpr int exponent() const { return exponent_; }
    /// +1 or -1 for real phases; throws DomainError for +-i.
    int real_sign() const;
    constexpr bool is_real() const { return (exponent_ & 1) == 0; }

    constexpr QuarterPhase operator*(QuarterPhase other) const { return QuarterPhase(exponent_ + other.exponent_); }
    constexpr QuarterPhase conj() const { return QuarterPhase(4 - exponent_); }
    constexpr bool operator==(const QuarterPhase &) const = default;

    static constexpr QuarterPhase one() { return QuarterPhase(0); }
    static constexpr QuarterPhase i() { return QuarterPhase(1); }
    static constexpr QuarterPhase minus_one() { return QuarterPhase(2); }
    static constexpr QuarterPhase minus_i() { return QuarterPhase(3); }

   private:
    std::uint8_t exponent_ = 0;
};

enum class Letter : std::uint8_t { I, X, Y, Z };

char letter_char(Letter l);

/// Phase-tracked N-qubit Pauli product in symplectic form.
///
/// Letter at qubit k is decoded from (x_bit, z_bit): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
/// The operator value is phase * L_1 (x) L_2 (x) ... (x) L_N with Y the usual Pauli-Y matrix
/// (not i*X*Z), so the algebra follows X*Y = iZ, Y*Z = iX, Z*X = iY.
class PauliOperator {
   public:
    PauliOperator(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits, QuarterPhase phase = {});

    static PauliOperator identity(std::size_t n);
    /// Phase +1 operator with the given letters; letters[0] is qubit 1.
    static PauliOperator from_letters(std::span<const Letter> letters);
    /// Parses "±[i]L1...LN" (sign optional, defaults to +). Letters I/X/Y/Z, '_' accepted for I.
    static PauliOperator parse(std::string_view text);
    /// Single-qubit letter at 1-based position k, identity elsewhere.
    static PauliOperator single(std::size_t n, std::size_t k, Letter letter);

    std::size_t n() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    QuarterPhase phase() const { return phase_; }

    Letter letter(std::size_t k) const;
    std::vector<Letter> to_letters() const;
    /// Mask of qubits carrying Y.
    std::uint64_t y_mask() const { return x_ & z_; }
    bool is_xy_only() const { return (x_ | ~full_mask(n_)) == ~std::uint64_t{0}; }

    PauliOperator with_phase(QuarterPhase phase) const { return {n_, x_, z_, phase}; }
    PauliOperator negated() const { return with_phase(phase_ * QuarterPhase::minus_one()); }

    /// "-YYY", "+iXZ", "+XXX".
    std::string str() const;
    /// Letters only, phase dropped: "YYY".
    std::string letters_str() const;

    bool operator==(const PauliOperator &) const = default;
    /// Orders by (n, x, z, phase); used only for deterministic containers.
    std::strong_ordering operator<=>(const PauliOperator &other) const;

   private:
    std::size_t n_;
    std::uint64_t x_;
    std::uint64_t z_;
    QuarterPhase phase_;
};

/// Exact operator product a*b with accumulated phase.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);
PauliOperator operator*(const PauliOperator &a, const PauliOperator &b);

/// True iff the symplectic inner product of a and b is even.
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// Number of Y letters. Throws UnsupportedLetterError if any letter is I or Z.
std::size_t y_count(const PauliOperator &op);

PauliOperator from_letters(std::span<const Letter> letters);

}  // namespace ghz
