#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ghz/ghz_states.h"
#include "ghz/pauli.h"
#include "ghz/poles.h"

namespace ghz {

/// Largest n for which exhaustive_search walks all 2^(2n) value assignments.
inline constexpr std::size_t kExhaustiveCap = 10;

/// Noncontextual values for every X_k and Y_k. Bit layout matches PauliOperator masks;
/// a clear bit means +1, a set bit means -1.
struct ValueAssignment {
    std::size_t n = 0;
    std::uint64_t vx = 0;
    std::uint64_t vy = 0;

    /// Decodes the index used by exhaustive_search: low n bits are vx, next n bits are vy.
    static ValueAssignment from_index(std::size_t n, std::uint64_t index);
    int x(std::size_t k) const { return (vx & qubit_bit(n, k)) ? -1 : 1; }
    int y(std::size_t k) const { return (vy & qubit_bit(n, k)) ? -1 : 1; }
};

/// One S operator whose locally-realistic prediction contradicts the quantum eigenvalue.
struct ContradictionReport {
    std::size_t n = 0;
    PoleOperator s_operator;
    int lhv_value = 0;
    int quantum_value = 0;
    /// Generators whose values fix the prediction, ascending qubit order.
    std::vector<PoleOperator> generators_used;
};

/// Product of v(letter_k) over qubits times the operator's sign. Operator must be X/Y-only with real phase.
int value_of(const ValueAssignment &a, const PauliOperator &op);

struct PredictedValue {
    PoleOperator op;
    int value;
};

/// Product-rule predictions for every S operator from the generator values v(O_k), keyed by k (1-based).
/// Throws DomainError unless all n generators are present with values +-1.
std::vector<PredictedValue> predicted_s_values(std::size_t n, const std::map<std::size_t, int> &generator_values);

/// Contradictions for the pi/2 state |~Psi_s{n_k}>: generator values and S values come from
/// eigenvalue_symbolic, predictions from predicted_s_values. Returns one report per S operator.
std::vector<ContradictionReport> find_contradictions(const GhzLabel &label);

enum class ConstraintSet {
    /// Only the N-pole operators must match.
    NPoleOnly,
    /// N-pole and S-pole operators must match.
    NAndSPoles,
};

/// Counts value assignments reproducing every quantum eigenvalue of the pi/2 state on the chosen pole set.
/// Threads split the assignment range; the count is an order-free sum.
std::uint64_t exhaustive_search(const GhzLabel &label, ConstraintSet constraints = ConstraintSet::NAndSPoles);
/// Single-threaded reference for exhaustive_search.
std::uint64_t exhaustive_search_serial(const GhzLabel &label,
                                       ConstraintSet constraints = ConstraintSet::NAndSPoles);

/// Lowest assignment index satisfying the constraints, or none.
std::optional<ValueAssignment> first_satisfying_assignment(const GhzLabel &label, ConstraintSet constraints);

struct KsIdentity {
    bool holds = false;
    int sign = 0;
    /// O_k O_l ... O_p in ascending qubit order.
    PauliOperator product;
    /// O_{kl...p} carrying the expected sign.
    PauliOperator expected;
};

/// Checks O_{kl...p} = (+-) O_k O_l ... O_p by exact multiplication; sign + for |y| = 1 mod 4, - for 3 mod 4.
/// y_positions are 1-based qubit indices; throws DomainError for even size.
KsIdentity ks_identity(std::size_t n, const std::vector<std::size_t> &y_positions);
bool verify_ks_identity(std::size_t n, const std::vector<std::size_t> &y_positions);

/// Exchanges X and Y on the subset (odd size, 1-based indices). Flips y-count parity.
PoleOperator ew_swap(const PoleOperator &op, const std::vector<std::size_t> &subset);

/// Quarter-turn collective angle and label of the state obtained by applying the 45-degree pi rotation on
/// the subset to the pi/2 state of label. Swapped operators are judged against this state.
struct SwappedState {
    GhzLabel label;
    int phi_quarter;
};
SwappedState ew_swapped_state(const GhzLabel &label, const std::vector<std::size_t> &subset);

/// N/S contradictions transported through ew_swap onto the E/W poles of the swapped state.
std::vector<ContradictionReport> ew_contradictions(const GhzLabel &label, const std::vector<std::size_t> &subset);

/// 1-based index list -> PauliOperator-layout mask. Throws DimensionError on out-of-range or repeated indices.
std::uint64_t subset_mask(std::size_t n, const std::vector<std::size_t> &subset);

}  // namespace ghz
