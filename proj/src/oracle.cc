#include "ghz/oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "ghz/errors.h"
#include "ghz/parallel.h"

namespace ghz {

namespace {

using Mat2 = std::array<Complex, 4>;

Mat2 pauli_matrix(Letter l) {
    constexpr Complex i(0.0, 1.0);
    switch (l) {
        case Letter::I:
            return {1.0, 0.0, 0.0, 1.0};
        case Letter::X:
            return {0.0, 1.0, 1.0, 0.0};
        case Letter::Y:
            return {0.0, -i, i, 0.0};
        case Letter::Z:
            return {1.0, 0.0, 0.0, -1.0};
    }
    return {};
}

Complex phase_value(QuarterPhase p) {
    static const Complex kValues[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kValues[p.exponent()];
}

void require_matrix_cap(std::size_t n) {
    if (n == 0 || n > kDenseMatrixCap) {
        throw CapacityError("dense matrices need 1.." + std::to_string(kDenseMatrixCap) + " qubits, got " +
                            std::to_string(n));
    }
}

// Kronecker product of per-qubit 2x2 factors; factors[0] acts on qubit 1 (most significant).
DenseOperator kron(std::span<const Mat2> factors, Complex scale) {
    std::size_t n = factors.size();
    require_matrix_cap(n);
    DenseOperator out(n);
    auto dim = static_cast<std::int64_t>(out.dim());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < out.dim(); ++c) {
            Complex v = scale;
            for (std::size_t k = 1; k <= n && v != Complex{}; ++k) {
                auto bit = qubit_bit(n, k);
                std::size_t rb = (static_cast<std::uint64_t>(r) & bit) ? 1 : 0;
                std::size_t cb = (c & bit) ? 1 : 0;
                v *= factors[k - 1][rb * 2 + cb];
            }
            out(static_cast<std::size_t>(r), c) = v;
        }
    }
    return out;
}

// Pauli string action on a basis index: op |b> = amp |b ^ x>.
Complex pauli_basis_amplitude(const PauliOperator &op, std::uint64_t b) {
    // Y|0> = i|1>, Y|1> = -i|0>, Z|1> = -|1>.
    std::uint64_t ones = b & op.z_bits();
    std::uint64_t y = op.y_mask();
    int exponent = op.phase().exponent();
    exponent += 2 * std::popcount(ones);           // (-1) from each Z-component acting on |1>
    exponent += std::popcount(y);                   // the i in Y = i X Z
    return phase_value(QuarterPhase(exponent));
}

}  // namespace

DenseOperator::DenseOperator(std::size_t n) : n_(n), dim_(std::size_t{1} << n) {
    require_matrix_cap(n);
    entries_.assign(dim_ * dim_, Complex{});
}

DenseOperator DenseOperator::identity(std::size_t n) {
    DenseOperator out(n);
    for (std::size_t i = 0; i < out.dim(); ++i) out(i, i) = 1.0;
    return out;
}

DenseOperator DenseOperator::diagonal(std::size_t n, std::span<const Complex> diag) {
    DenseOperator out(n);
    if (diag.size() != out.dim()) {
        throw DimensionError("diagonal: length does not match 2^n");
    }
    for (std::size_t i = 0; i < out.dim(); ++i) out(i, i) = diag[i];
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(n_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseOperator materialize(const PauliOperator &op) {
    std::vector<Mat2> factors;
    for (std::size_t k = 1; k <= op.n(); ++k) factors.push_back(pauli_matrix(op.letter(k)));
    return kron(factors, phase_value(op.phase()));
}

DenseOperator materialize(const ProductObservable &obs) {
    std::vector<Mat2> factors;
    for (double a : obs.angles()) {
        factors.push_back({0.0, std::polar(1.0, -a), std::polar(1.0, a), 0.0});
    }
    return kron(factors, 1.0);
}

DenseOperator rotation_matrix(std::span<const double> phis) {
    std::vector<Mat2> factors;
    for (double p : phis) {
        factors.push_back({std::polar(1.0, -p / 2), 0.0, 0.0, std::polar(1.0, p / 2)});
    }
    return kron(factors, 1.0);
}

DenseOperator matmul(const DenseOperator &a, const DenseOperator &b) {
    if (a.n() != b.n()) {
        throw DimensionError("matmul: qubit counts differ");
    }
    DenseOperator out(a.n());
    std::size_t d = a.dim();
    auto dim = static_cast<std::int64_t>(d);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        auto row = static_cast<std::size_t>(r);
        for (std::size_t k = 0; k < d; ++k) {
            Complex av = a(row, k);
            if (av == Complex{}) continue;
            for (std::size_t c = 0; c < d; ++c) out(row, c) += av * b(k, c);
        }
    }
    return out;
}

DenseOperator matmul_serial(const DenseOperator &a, const DenseOperator &b) {
    if (a.n() != b.n()) {
        throw DimensionError("matmul: qubit counts differ");
    }
    DenseOperator out(a.n());
    std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            Complex av = a(r, k);
            if (av == Complex{}) continue;
            for (std::size_t c = 0; c < d; ++c) out(r, c) += av * b(k, c);
        }
    }
    return out;
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    if (a.n() != b.n()) {
        throw DimensionError("max_abs_diff: qubit counts differ");
    }
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

double unitarity_residual(const DenseOperator &u) {
    return max_abs_diff(matmul(u, u.adjoint()), DenseOperator::identity(u.n()));
}

StateVector apply(const DenseOperator &op, const StateVector &state) {
    if (op.n() != state.n()) {
        throw DimensionError("apply: operator and state qubit counts differ");
    }
    StateVector out(state.n());
    auto dim = static_cast<std::int64_t>(op.dim());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        auto row = static_cast<std::size_t>(r);
        Complex acc{};
        for (std::size_t c = 0; c < op.dim(); ++c) acc += op(row, c) * state[c];
        out[row] = acc;
    }
    return out;
}

StateVector apply(const PauliOperator &op, const StateVector &state) {
    if (op.n() != state.n()) {
        throw DimensionError("apply: operator and state qubit counts differ");
    }
    StateVector out(state.n());
    auto dim = static_cast<std::int64_t>(state.dim());
    std::uint64_t flip = op.x_bits();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < dim; ++i) {
        auto b = static_cast<std::uint64_t>(i);
        out[b ^ flip] = pauli_basis_amplitude(op, b) * state[b];
    }
    return out;
}

StateVector apply_serial(const PauliOperator &op, const StateVector &state) {
    if (op.n() != state.n()) {
        throw DimensionError("apply: operator and state qubit counts differ");
    }
    StateVector out(state.n());
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        out[b ^ op.x_bits()] = pauli_basis_amplitude(op, b) * state[b];
    }
    return out;
}

StateVector apply(const ProductObservable &obs, const StateVector &state) {
    if (obs.n() != state.n()) {
        throw DimensionError("apply: observable and state qubit counts differ");
    }
    StateVector out(state.n());
    auto dim = static_cast<std::int64_t>(state.dim());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < dim; ++i) {
        auto [target, amp] = obs.apply_to_basis(static_cast<std::uint64_t>(i));
        out[target] = amp * state[static_cast<std::size_t>(i)];
    }
    return out;
}

namespace {

template <typename Op>
CheckResult eigen_residual(const StateVector &state, const Op &op, int expected) {
    if (expected != 1 && expected != -1) {
        throw DomainError("check_eigen: expected eigenvalue must be +1 or -1");
    }
    StateVector image = apply(op, state);
    double residual = max_abs_diff(image, static_cast<double>(expected) * state);
    return {"eigen", residual, residual < kOracleTolerance};
}

}  // namespace

CheckResult check_eigen(const StateVector &state, const DenseOperator &op, int expected) {
    return eigen_residual(state, op, expected);
}

CheckResult check_eigen(const StateVector &state, const PauliOperator &op, int expected) {
    return eigen_residual(state, op, expected);
}

CheckResult check_eigen(const StateVector &state, const ProductObservable &obs, int expected) {
    return eigen_residual(state, obs, expected);
}

CheckResult check_conjugation(std::span<const double> angles) {
    std::size_t n = angles.size();
    if (n == 0 || n > kDenseStateCap) {
        throw CapacityError("check_conjugation: qubit count out of range");
    }
    ProductObservable rotated = co_rotate_general(angles);
    double residual = 0.0;
    if (n <= kDenseMatrixCap) {
        DenseOperator r = rotation_matrix(angles);
        DenseOperator o = materialize(PauliOperator(n, full_mask(n), 0));
        // R is diagonal, so R O R^dagger is an entrywise rescaling of O.
        DenseOperator lhs(n);
        for (std::size_t row = 0; row < lhs.dim(); ++row) {
            for (std::size_t col = 0; col < lhs.dim(); ++col) {
                lhs(row, col) = r(row, row) * o(row, col) * std::conj(r(col, col));
            }
        }
        residual = max_abs_diff(lhs, materialize(rotated));
    } else {
        // Column j of R O R^-1 is r(jbar) conj(r(j)) e_jbar for the diagonal entries r of R.
        auto diag = [&](std::uint64_t b) {
            double angle = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                angle += (b & qubit_bit(n, k)) ? angles[k - 1] : -angles[k - 1];
            }
            return std::polar(1.0, angle / 2);
        };
        std::uint64_t dim = std::uint64_t{1} << n;
        std::uint64_t all = full_mask(n);
        for (std::uint64_t j = 0; j < dim; ++j) {
            Complex lhs = diag(j ^ all) * std::conj(diag(j));
            auto [target, amp] = rotated.apply_to_basis(j);
            double err = target == (j ^ all) ? std::abs(lhs - amp) : std::abs(lhs) + std::abs(amp);
            residual = std::max(residual, err);
        }
    }
    return {"conjugation", residual, residual < kOracleTolerance};
}

Complex expectation(const StateVector &state, const PauliOperator &op) { return inner_product(state, apply(op, state)); }

double pair_subspace_residual(const StateVector &state, const GhzLabel &label) {
    StateVector plus = build_state(GhzLabel(label.n(), label.bits(), +1));
    StateVector minus = build_state(GhzLabel(label.n(), label.bits(), -1));
    StateVector rest = state - inner_product(plus, state) * plus - inner_product(minus, state) * minus;
    return std::sqrt(rest.norm_squared());
}

DenseOperator swap_axis_rotation(std::size_t n, std::uint64_t qubit_mask) {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::vector<Mat2> factors;
    for (std::size_t k = 1; k <= n; ++k) {
        if (qubit_mask & qubit_bit(n, k)) {
            factors.push_back({0.0, r * (1.0 - i), r * (1.0 + i), 0.0});
        } else {
            factors.push_back(pauli_matrix(Letter::I));
        }
    }
    return kron(factors, 1.0);
}

}  // namespace ghz
