#include "ghz/ghz_states.h"

#include <algorithm>
#include <cmath>

#include "ghz/errors.h"
#include "ghz/parallel.h"
#include "ghz/pauli.h"

namespace ghz {

namespace {

void require_dense(std::size_t n) {
    if (n == 0 || n > kDenseStateCap) {
        throw CapacityError("dense statevector needs 1.." + std::to_string(kDenseStateCap) + " qubits, got " +
                            std::to_string(n));
    }
}

void require_same_dim(const StateVector &a, const StateVector &b) {
    if (a.n() != b.n()) {
        throw DimensionError("statevector qubit counts differ");
    }
}

// exp(-i/2 * sum_k (-1)^{b_k} phi_k) for basis index b.
Complex rotation_factor(std::uint64_t index, std::span<const double> phis) {
    std::size_t n = phis.size();
    double angle = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        angle += (index & qubit_bit(n, k)) ? -phis[k - 1] : phis[k - 1];
    }
    return std::polar(1.0, -angle / 2);
}

}  // namespace

GhzLabel::GhzLabel(std::size_t n, std::uint64_t bits, int sign) : n_(n), bits_(bits), sign_(sign) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw DimensionError("GhzLabel qubit count out of range");
    }
    if ((bits & ~full_mask(n)) != 0) {
        throw DimensionError("GhzLabel bits exceed qubit count");
    }
    if (sign != 1 && sign != -1) {
        throw DomainError("GhzLabel sign must be +1 or -1");
    }
}

GhzLabel GhzLabel::parse(std::string_view text) {
    int sign = +1;
    if (!text.empty() && (text.back() == '+' || text.back() == '-')) {
        sign = text.back() == '-' ? -1 : +1;
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw DimensionError("label needs at least one bit");
    }
    if (text.size() > kMaxPauliQubits) {
        throw DimensionError("label too long");
    }
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("label bits must be 0/1, got '" + std::string(text) + "'");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return {text.size(), bits, sign};
}

std::uint64_t GhzLabel::complement_bits() const { return ~bits_ & full_mask(n_); }

bool GhzLabel::bit(std::size_t k) const { return (bits_ & qubit_bit(n_, k)) != 0; }

bool GhzLabel::is_canonical() const { return !bit(1); }

GhzLabel GhzLabel::canonical() const { return is_canonical() ? *this : GhzLabel(n_, complement_bits(), sign_); }

std::pair<GhzLabel, int> GhzLabel::canonical_pihalf() const {
    if (is_canonical()) {
        return {*this, 0};
    }
    // ~Psi_s{nbar} = (1-i)/2 (|nbar> + s i |n>) = s i (1-i)/2 (|n> - s i |nbar>) = s i ~Psi_{-s}{n}.
    return {GhzLabel(n_, complement_bits(), -sign_), sign_ > 0 ? 1 : 3};
}

std::string GhzLabel::bits_str() const {
    std::string out;
    for (std::size_t k = 1; k <= n_; ++k) {
        out.push_back(bit(k) ? '1' : '0');
    }
    return out;
}

std::string GhzLabel::str() const { return bits_str() + (sign_ > 0 ? "+" : "-"); }

std::vector<std::uint64_t> canonical_bit_patterns(std::size_t n) {
    if (n == 0 || n > 32) {
        throw CapacityError("canonical_bit_patterns: n out of range");
    }
    std::vector<std::uint64_t> out(std::size_t{1} << (n - 1));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = i;
    }
    return out;
}

std::pair<Complex, Complex> RotatedState::components() const {
    Complex c(std::cos(phi / 2), 0.0);
    Complex s(0.0, -std::sin(phi / 2));
    // Psi_+(phi) = cos Psi_+ - i sin Psi_- ; Psi_-(phi) = cos Psi_- - i sin Psi_+.
    return label.sign() > 0 ? std::pair{c, s} : std::pair{s, c};
}

StateVector::StateVector(std::size_t n) : n_(n) {
    require_dense(n);
    amplitudes_.assign(std::size_t{1} << n, Complex{});
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    require_dense(n);
    if (amplitudes_.size() != (std::size_t{1} << n)) {
        throw DimensionError("amplitude count does not match 2^n");
    }
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
    StateVector v(n);
    v[index] = 1.0;
    return v;
}

double StateVector::norm_squared() const { return inner_product(*this, *this).real(); }

StateVector &StateVector::operator*=(Complex c) {
    for (auto &a : amplitudes_) a *= c;
    return *this;
}

StateVector &StateVector::operator+=(const StateVector &other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
    return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] -= other.amplitudes_[i];
    return *this;
}

StateVector operator*(Complex c, StateVector v) { return v *= c; }
StateVector operator+(StateVector a, const StateVector &b) { return a += b; }
StateVector operator-(StateVector a, const StateVector &b) { return a -= b; }

StateVector build_state(const GhzLabel &label) {
    require_dense(label.n());
    StateVector v(label.n());
    double r = 1.0 / std::sqrt(2.0);
    v[label.bits()] = r;
    v[label.complement_bits()] = label.sign() * r;
    return v;
}

double collective_angle(const GhzLabel &label, std::span<const double> phis) {
    if (phis.size() != label.n()) {
        throw DimensionError("collective_angle: expected " + std::to_string(label.n()) + " angles, got " +
                             std::to_string(phis.size()));
    }
    double total = 0.0;
    for (std::size_t k = 1; k <= label.n(); ++k) {
        total += label.bit(k) ? -phis[k - 1] : phis[k - 1];
    }
    return total;
}

RotatedState rotate_2d(const RotatedState &state, double delta_phi) { return {state.label, state.phi + delta_phi}; }

StateVector to_state_vector(const RotatedState &state) {
    const auto &label = state.label;
    require_dense(label.n());
    StateVector v(label.n());
    double r = 1.0 / std::sqrt(2.0);
    v[label.bits()] = std::polar(r, -state.phi / 2);
    v[label.complement_bits()] = static_cast<double>(label.sign()) * std::polar(r, state.phi / 2);
    return v;
}

StateVector apply_rotations(const StateVector &state, std::span<const double> phis) {
    if (phis.size() != state.n()) {
        throw DimensionError("apply_rotations: angle count does not match qubit count");
    }
    StateVector out = state;
    auto amps = out.amplitudes();
    auto dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < dim; ++i) {
        amps[i] *= rotation_factor(static_cast<std::uint64_t>(i), phis);
    }
    return out;
}

StateVector apply_rotations_serial(const StateVector &state, std::span<const double> phis) {
    if (phis.size() != state.n()) {
        throw DimensionError("apply_rotations: angle count does not match qubit count");
    }
    StateVector out = state;
    for (std::size_t i = 0; i < out.dim(); ++i) {
        out[i] *= rotation_factor(i, phis);
    }
    return out;
}

StateVector pihalf_state(const GhzLabel &label) {
    require_dense(label.n());
    StateVector v(label.n());
    Complex pre(0.5, -0.5);
    v[label.bits()] = pre;
    v[label.complement_bits()] = pre * Complex(0.0, label.sign());
    return v;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_same_dim(a, b);
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    std::size_t blocks = (x.size() + kReductionBlock - 1) / kReductionBlock;
    std::vector<Complex> partial(blocks);
    auto nblocks = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < nblocks; ++blk) {
        std::size_t lo = static_cast<std::size_t>(blk) * kReductionBlock;
        std::size_t hi = std::min(lo + kReductionBlock, x.size());
        Complex acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += std::conj(x[i]) * y[i];
        partial[blk] = acc;
    }
    Complex total{};
    for (const auto &p : partial) total += p;
    return total;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    require_same_dim(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool states_equal(const StateVector &a, const StateVector &b, double tol) { return max_abs_diff(a, b) < tol; }

bool states_equal_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    Complex overlap = inner_product(b, a);
    if (std::abs(overlap) < tol) {
        return max_abs_diff(a, b) < tol;
    }
    Complex phase = overlap / std::abs(overlap);
    return max_abs_diff(a, phase * b) < tol;
}

}  // namespace ghz
