#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghz/eigenvalue.h"
#include "ghz/ghz_states.h"
#include "ghz/pauli.h"

namespace ghz {

/// Quarter-turn points of the collective angle: E = 0, N = pi/2, W = pi, S = 3 pi/2.
enum class Pole : int { E = 0, N = 1, W = 2, S = 3 };

inline constexpr Pole kAllPoles[] = {Pole::E, Pole::N, Pole::W, Pole::S};

constexpr int pole_index(Pole p) { return static_cast<int>(p); }
constexpr Pole pole_from_index(int quarter) { return static_cast<Pole>(((quarter % 4) + 4) % 4); }
constexpr Pole opposite(Pole p) { return pole_from_index(pole_index(p) + 2); }
char pole_char(Pole p);
/// Accepts "E", "N", "W", "S" (case-insensitive).
std::optional<Pole> parse_pole(std::string_view name);

/// Largest n for which enumerate_pole will materialize a family (2^n strings in total).
inline constexpr std::size_t kEnumerateCap = 24;

/// Phase +1, X/Y-only operator together with its pole (y_count mod 4).
class PoleOperator {
   public:
    /// Throws UnsupportedLetterError unless op is X/Y-only with phase +1.
    explicit PoleOperator(PauliOperator op);
    /// Operator with Y exactly on y_mask and X elsewhere.
    static PoleOperator from_y_mask(std::size_t n, std::uint64_t y_mask);

    const PauliOperator &op() const { return op_; }
    Pole pole() const { return pole_; }
    std::size_t n() const { return op_.n(); }
    std::uint64_t y_mask() const { return op_.y_mask(); }
    std::string str() const { return op_.letters_str(); }

    bool operator==(const PoleOperator &) const = default;

   private:
    PauliOperator op_;
    Pole pole_;
};

/// Splits a real-phase X/Y operator into its sign and phase-free pole operator.
struct SignedPoleOperator {
    int sign;
    PoleOperator op;
};
SignedPoleOperator normalize_pole_operator(const PauliOperator &op);

/// Pole of an X/Y-only phase +1 operator. Throws UnsupportedLetterError otherwise.
Pole classify(const PauliOperator &op);

/// Reverses the low n bits; maps between mask layout (qubit 1 high) and enumeration key (qubit 1 low).
std::uint64_t reverse_low_bits(std::uint64_t value, std::size_t n);

/// Single-Y generator O_k (Y on qubit k, X elsewhere).
PoleOperator single_y_generator(std::size_t n, std::size_t k);

/// Every X/Y string on n qubits whose Y count is congruent to the pole index mod 4, ordered by the
/// Y-position bitmask sum_k 2^(k-1) ascending. Qubit 1 is the lowest bit of this ordering key, so the
/// key is the bit-reversal of PoleOperator::y_mask(): YXX, XYX, XXY.
std::vector<PoleOperator> enumerate_pole(std::size_t n, Pole pole);

/// Eigenvalue of op on |Psi_s{n_k}(Phi)> with Phi = state_phi_quarter * pi/2, computed by acting on
/// the two basis kets: X|0>=|1>, X|1>=|0>, Y|0>=i|1>, Y|1>=-i|0>.
Eigenvalue eigenvalue_symbolic(const GhzLabel &label, int state_phi_quarter, const PoleOperator &op);

/// Shortcut for the pi/2 state of the label: start at +1, flip once per Y over an n_k = 1 bit, flip
/// again for S operators, and flip for a minus-signed label. Throws DomainError for E/W operators.
int eigenvalue_rule(const GhzLabel &label, const PoleOperator &op);

/// Products of all nonempty subsets of {O_1..O_n}, ordered by subset bitmask; 2^n - 1 operators.
std::vector<PauliOperator> compatible_family(std::size_t n);

/// Bitmask subset -> product of the corresponding O_k, in ascending k order.
PauliOperator generator_product(std::size_t n, std::uint64_t subset_mask);

}  // namespace ghz
