#include "ghz/rotations.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghz/errors.h"
#include "ghz/oracle.h"

namespace ghz {

QuarterTurns::QuarterTurns(std::vector<int> turns) : turns_(std::move(turns)) {
    if (turns_.empty() || turns_.size() > kMaxPauliQubits) {
        throw DimensionError("QuarterTurns: qubit count out of range");
    }
    for (auto &t : turns_) {
        t = ((t % 4) + 4) % 4;
    }
}

int QuarterTurns::total() const {
    int sum = 0;
    for (int t : turns_) sum += t;
    return sum % 4;
}

std::vector<double> QuarterTurns::angles() const {
    std::vector<double> out;
    out.reserve(turns_.size());
    for (int t : turns_) out.push_back(t * std::numbers::pi / 2);
    return out;
}

ProductObservable::ProductObservable(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.empty() || angles_.size() > kMaxPauliQubits) {
        throw DimensionError("ProductObservable: qubit count out of range");
    }
}

std::pair<std::uint64_t, Complex> ProductObservable::apply_to_basis(std::uint64_t index) const {
    std::size_t n = angles_.size();
    // Factor k maps |0> -> e^{i a}|1> and |1> -> e^{-i a}|0>.
    double phase = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        phase += (index & qubit_bit(n, k)) ? -angles_[k - 1] : angles_[k - 1];
    }
    return {index ^ full_mask(n), std::polar(1.0, phase)};
}

PauliOperator co_rotate_quarter(const QuarterTurns &turns) {
    std::size_t n = turns.n();
    std::uint64_t x = full_mask(n);
    std::uint64_t z = 0;
    int minus_signs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        int t = turns.turns()[k - 1];
        if (t & 1) {
            z |= qubit_bit(n, k);
        }
        if (t >= 2) {
            ++minus_signs;
        }
    }
    return {n, x, z, QuarterPhase(2 * minus_signs)};
}

ProductObservable co_rotate_general(std::span<const double> angles) {
    return ProductObservable(std::vector<double>(angles.begin(), angles.end()));
}

namespace {

// Distance of x from the nearest multiple of 2 pi.
double wrap_distance(double x) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::remainder(x, two_pi);
    return std::abs(r);
}

}  // namespace

EigenCheck eigen_check_general(const GhzLabel &label, double state_phi, std::span<const double> angles) {
    if (label.n() > kDenseStateCap) {
        throw CapacityError("eigen_check_general: dense state cap exceeded");
    }
    double theta = collective_angle(label, angles);
    double delta = theta - state_phi;

    EigenCheck out;
    if (wrap_distance(delta) < kPoleSnapTolerance) {
        out.predicted = eigenvalue_from_sign(label.sign());
    } else if (wrap_distance(delta - std::numbers::pi) < kPoleSnapTolerance) {
        out.predicted = eigenvalue_from_sign(-label.sign());
    }

    StateVector state = to_state_vector(RotatedState{label, state_phi});
    ProductObservable obs = co_rotate_general(angles);
    if (out.predicted == Eigenvalue::NotEigenstate) {
        double plus = check_eigen(state, obs, +1).residual;
        double minus = check_eigen(state, obs, -1).residual;
        out.residual = std::min(plus, minus);
        out.oracle_agrees = out.residual >= kOracleTolerance;
    } else {
        auto check = check_eigen(state, obs, to_int(out.predicted));
        out.residual = check.residual;
        out.oracle_agrees = check.pass;
    }
    return out;
}

}  // namespace ghz
