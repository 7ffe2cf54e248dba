#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ghz {

using Complex = std::complex<double>;

/// Largest qubit count for which dense statevectors are built.
inline constexpr std::size_t kDenseStateCap = 14;

/// Max-norm tolerance for amplitude comparisons.
inline constexpr double kStateTolerance = 1e-12;

/// Binary label {n_k} with a sign, naming the state (|{n_k}> + sign |{complement n_k}>)/sqrt(2).
///
/// bits uses the same layout as PauliOperator masks: qubit 1 is the most significant of the n bits.
/// A label and its complement name the same basis pair; the canonical representative has qubit 1 = 0.
class GhzLabel {
   public:
    GhzLabel(std::size_t n, std::uint64_t bits, int sign = +1);

    /// "010+" / "010-"; sign suffix optional (defaults to +).
    static GhzLabel parse(std::string_view text);
    static GhzLabel zero(std::size_t n, int sign = +1) { return {n, 0, sign}; }

    std::size_t n() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    std::uint64_t complement_bits() const;
    int sign() const { return sign_; }
    bool bit(std::size_t k) const;

    bool is_canonical() const;
    /// Canonical representative of the Phi = 0 pair: Psi_s{nbar} = s * Psi_s{n}, so only bits flip.
    GhzLabel canonical() const;
    /// Canonical representative of the pi/2 state of this label: |~Psi_+{nbar}> = i |~Psi_-{n}>,
    /// so complementing flips the sign. Returns the label and the global phase exponent of i it drops.
    std::pair<GhzLabel, int> canonical_pihalf() const;

    std::string bits_str() const;
    std::string str() const;

    bool operator==(const GhzLabel &) const = default;

   private:
    std::size_t n_;
    std::uint64_t bits_;
    int sign_;
};

/// All 2^(N-1) canonical bit patterns, ascending.
std::vector<std::uint64_t> canonical_bit_patterns(std::size_t n);

/// A GHZ label rotated to collective angle phi, in the two-dimensional (Psi+, Psi-) picture.
struct RotatedState {
    GhzLabel label;
    double phi = 0.0;

    /// Coefficients on (Psi_+{n}, Psi_-{n}).
    std::pair<Complex, Complex> components() const;
};

/// Dense 2^N amplitude vector; basis index bit (N-k) is qubit k.
class StateVector {
   public:
    explicit StateVector(std::size_t n);
    StateVector(std::size_t n, std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t n, std::uint64_t index);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    Complex &operator[](std::size_t i) { return amplitudes_[i]; }

    double norm_squared() const;

    StateVector &operator*=(Complex c);
    StateVector &operator+=(const StateVector &other);
    StateVector &operator-=(const StateVector &other);

   private:
    std::size_t n_;
    std::vector<Complex> amplitudes_;
};

StateVector operator*(Complex c, StateVector v);
StateVector operator+(StateVector a, const StateVector &b);
StateVector operator-(StateVector a, const StateVector &b);

/// (|{n_k}> + sign |{nbar_k}>)/sqrt(2).
StateVector build_state(const GhzLabel &label);

/// Signed sum of phis[k] * (-1)^{n_k}.
double collective_angle(const GhzLabel &label, std::span<const double> phis);

RotatedState rotate_2d(const RotatedState &state, double delta_phi);

/// Dense expansion of a RotatedState: exp(-i phi/2)|n>/sqrt2 + sign exp(+i phi/2)|nbar>/sqrt2.
StateVector to_state_vector(const RotatedState &state);

/// Applies prod_k exp(-i Z_k phis[k] / 2) to a dense state. phis are physical angles, qubit 1 first.
StateVector apply_rotations(const StateVector &state, std::span<const double> phis);
/// Single-threaded reference for apply_rotations.
StateVector apply_rotations_serial(const StateVector &state, std::span<const double> phis);

/// (1-i)/2 (|{n_k}> + sign*i |{nbar_k}>), the label's state at collective angle pi/2.
StateVector pihalf_state(const GhzLabel &label);

/// <a|b>, conjugate-linear in a. Summation order is fixed, so results are bitwise reproducible.
Complex inner_product(const StateVector &a, const StateVector &b);

/// max_i |a_i - b_i|.
double max_abs_diff(const StateVector &a, const StateVector &b);
/// Phase-sensitive comparison at the given max-norm tolerance.
bool states_equal(const StateVector &a, const StateVector &b, double tol = kStateTolerance);
/// Ray comparison: equal after removing the global phase that best aligns b with a.
bool states_equal_up_to_phase(const StateVector &a, const StateVector &b, double tol = kStateTolerance);

}  // namespace ghz
