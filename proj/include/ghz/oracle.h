#pragma once

// Dense-matrix cross-checks. Nothing in here is consulted by the symbolic engine; it exists so
// every exact claim can be confirmed by brute linear algebra.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ghz/ghz_states.h"
#include "ghz/pauli.h"
#include "ghz/rotations.h"

namespace ghz {

/// Largest qubit count for which full 2^N x 2^N matrices are materialized.
inline constexpr std::size_t kDenseMatrixCap = 10;

inline constexpr double kOracleTolerance = 1e-12;

/// Row-major 2^N x 2^N complex matrix.
class DenseOperator {
   public:
    explicit DenseOperator(std::size_t n);

    static DenseOperator identity(std::size_t n);
    static DenseOperator diagonal(std::size_t n, std::span<const Complex> diag);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Complex> entries() const { return entries_; }

    DenseOperator adjoint() const;

   private:
    std::size_t n_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Result of one numeric check, in the shape reported by the CLI.
struct CheckResult {
    std::string check;
    double residual = 0.0;
    bool pass = false;
};

/// Kronecker product of single-qubit Pauli matrices, times the phase.
DenseOperator materialize(const PauliOperator &op);
/// Kronecker product of the observable's 2x2 factors.
DenseOperator materialize(const ProductObservable &obs);
/// Diagonal matrix of R({phi_k}) = prod_k exp(-i Z_k phi_k / 2).
DenseOperator rotation_matrix(std::span<const double> phis);

/// Matrix product; rows are distributed across threads.
DenseOperator matmul(const DenseOperator &a, const DenseOperator &b);
/// Single-threaded reference for matmul.
DenseOperator matmul_serial(const DenseOperator &a, const DenseOperator &b);

double max_abs_diff(const DenseOperator &a, const DenseOperator &b);
/// max |U U^dagger - I|.
double unitarity_residual(const DenseOperator &u);

StateVector apply(const DenseOperator &op, const StateVector &state);
/// Applies a Pauli string without materializing it (valid up to the dense statevector cap).
StateVector apply(const PauliOperator &op, const StateVector &state);
/// Single-threaded reference for the factored Pauli application.
StateVector apply_serial(const PauliOperator &op, const StateVector &state);
StateVector apply(const ProductObservable &obs, const StateVector &state);

/// Passes iff max |op*state - expected*state| < kOracleTolerance; residual always filled.
CheckResult check_eigen(const StateVector &state, const DenseOperator &op, int expected);
CheckResult check_eigen(const StateVector &state, const PauliOperator &op, int expected);
CheckResult check_eigen(const StateVector &state, const ProductObservable &obs, int expected);

/// Compares R O R^-1 against the co-rotated product observable entrywise. Dense for N <= 10;
/// above that, the factored operators are compared column by column on basis vectors.
CheckResult check_conjugation(std::span<const double> angles);

/// <psi| op |psi>.
Complex expectation(const StateVector &state, const PauliOperator &op);

/// Norm of the component of state orthogonal to span{Psi_+{n}, Psi_-{n}}.
double pair_subspace_residual(const StateVector &state, const GhzLabel &label);

/// (X + Y)/sqrt(2) on each qubit in the mask: the pi rotation about the 45-degree axis, up to global phase.
DenseOperator swap_axis_rotation(std::size_t n, std::uint64_t qubit_mask);

}  // namespace ghz
