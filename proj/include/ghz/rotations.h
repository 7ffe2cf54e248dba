#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghz/eigenvalue.h"
#include "ghz/ghz_states.h"
#include "ghz/pauli.h"

namespace ghz {

/// Angle-sum distance from a pole below which eigen_check_general snaps to that pole.
inline constexpr double kPoleSnapTolerance = 1e-9;

/// Per-qubit rotations in whole quarter turns: phi_k = turns[k] * pi/2, each entry in {0,1,2,3}.
class QuarterTurns {
   public:
    explicit QuarterTurns(std::vector<int> turns);

    std::size_t n() const { return turns_.size(); }
    std::span<const int> turns() const { return turns_; }
    /// Sum of turns mod 4 (the collective quarter-turn count for the all-zero label).
    int total() const;
    std::vector<double> angles() const;

   private:
    std::vector<int> turns_;
};

/// prod_k (X_k cos a_k + Y_k sin a_k), kept factored.
///
/// Each factor is the 2x2 matrix [[0, e^{-i a}], [e^{i a}, 0]].
class ProductObservable {
   public:
    explicit ProductObservable(std::vector<double> angles);

    std::size_t n() const { return angles_.size(); }
    std::span<const double> angles() const { return angles_; }

    /// Image of basis state |index>: the observable is monomial, so it is amp * |index ^ all-ones>.
    std::pair<std::uint64_t, Complex> apply_to_basis(std::uint64_t index) const;

   private:
    std::vector<double> angles_;
};

/// Co-rotation of prod_k X_k by quarter turns: each factor becomes +X, +Y, -X, -Y for 0..3 turns.
PauliOperator co_rotate_quarter(const QuarterTurns &turns);

/// Co-rotation of prod_k X_k by arbitrary angles, R O R^-1.
ProductObservable co_rotate_general(std::span<const double> angles);

struct EigenCheck {
    /// Pole-based prediction from the collective angles.
    Eigenvalue predicted = Eigenvalue::NotEigenstate;
    /// For an eigen prediction, max-norm of (P psi - lambda psi); otherwise the smaller of the two residuals.
    double residual = 0.0;
    /// Dense application confirmed the prediction.
    bool oracle_agrees = false;
};

/// Is the rotated state |Psi_s{n}(state_phi)> an eigenstate of co_rotate_general(angles)?
///
/// With Theta = collective_angle(label, angles), the prediction is s when Theta = state_phi (mod 2 pi),
/// -s when Theta = state_phi + pi, and not-eigenstate otherwise (snapping within kPoleSnapTolerance).
/// The prediction is then checked by applying the observable to the dense state.
EigenCheck eigen_check_general(const GhzLabel &label, double state_phi, std::span<const double> angles);

}  // namespace ghz
