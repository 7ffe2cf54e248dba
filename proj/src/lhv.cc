#include "ghz/lhv.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "ghz/errors.h"
#include "ghz/parallel.h"

namespace ghz {

namespace {

struct Constraint {
    std::uint64_t y_mask;
    // 0 for +1, 1 for -1; compared against the parity of -1 factors.
    int parity;
};

std::vector<Constraint> build_constraints(const GhzLabel &label, ConstraintSet constraints) {
    std::vector<Constraint> out;
    std::vector<Pole> poles = {Pole::N};
    if (constraints == ConstraintSet::NAndSPoles) {
        poles.push_back(Pole::S);
    }
    for (Pole pole : poles) {
        for (const auto &op : enumerate_pole(label.n(), pole)) {
            Eigenvalue e = eigenvalue_symbolic(label, pole_index(Pole::N), op);
            if (e == Eigenvalue::NotEigenstate) {
                throw std::logic_error("pi/2 state is not an eigenstate of " + op.str());
            }
            out.push_back({op.y_mask(), e == Eigenvalue::Minus ? 1 : 0});
        }
    }
    // Single-Y operators first: they reject most assignments immediately.
    std::stable_partition(out.begin(), out.end(), [](const Constraint &c) { return std::popcount(c.y_mask) == 1; });
    return out;
}

bool satisfies(std::uint64_t index, std::size_t n, const std::vector<Constraint> &constraints) {
    std::uint64_t full = full_mask(n);
    std::uint64_t vx = index & full;
    std::uint64_t vy = (index >> n) & full;
    for (const auto &c : constraints) {
        int parity = std::popcount(vx & ~c.y_mask & full) + std::popcount(vy & c.y_mask);
        if ((parity & 1) != c.parity) {
            return false;
        }
    }
    return true;
}

void require_exhaustive_cap(std::size_t n) {
    if (n > kExhaustiveCap) {
        throw CapacityError("exhaustive search is capped at n = " + std::to_string(kExhaustiveCap) + ", got " +
                            std::to_string(n));
    }
}

void require_odd_subset(const std::vector<std::size_t> &subset, const char *what) {
    if (subset.size() % 2 == 0) {
        throw DomainError(std::string(what) + ": subset size must be odd, got " + std::to_string(subset.size()));
    }
}

}  // namespace

ValueAssignment ValueAssignment::from_index(std::size_t n, std::uint64_t index) {
    return {n, index & full_mask(n), (index >> n) & full_mask(n)};
}

int value_of(const ValueAssignment &a, const PauliOperator &op) {
    if (a.n != op.n()) {
        throw DimensionError("value_of: assignment and operator qubit counts differ");
    }
    if (!op.is_xy_only()) {
        throw UnsupportedLetterError("value_of: operator " + op.str() + " contains I or Z");
    }
    int sign = op.phase().real_sign();
    std::uint64_t x_only = op.x_bits() & ~op.z_bits();
    int flips = std::popcount(a.vx & x_only) + std::popcount(a.vy & op.y_mask());
    return (flips % 2 == 0) ? sign : -sign;
}

std::uint64_t subset_mask(std::size_t n, const std::vector<std::size_t> &subset) {
    std::uint64_t mask = 0;
    for (std::size_t k : subset) {
        if (k == 0 || k > n) {
            throw DimensionError("qubit index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
        }
        if (mask & qubit_bit(n, k)) {
            throw DimensionError("qubit index " + std::to_string(k) + " repeated");
        }
        mask |= qubit_bit(n, k);
    }
    return mask;
}

std::vector<PredictedValue> predicted_s_values(std::size_t n, const std::map<std::size_t, int> &generator_values) {
    std::vector<int> values(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        auto it = generator_values.find(k);
        if (it == generator_values.end()) {
            throw DomainError("predicted_s_values: missing value for generator O_" + std::to_string(k));
        }
        if (it->second != 1 && it->second != -1) {
            throw DomainError("predicted_s_values: generator values must be +-1");
        }
        values[k] = it->second;
    }
    if (generator_values.size() != n) {
        throw DomainError("predicted_s_values: generator index out of range");
    }
    std::vector<PredictedValue> out;
    for (const auto &op : enumerate_pole(n, Pole::S)) {
        int product = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            if (op.y_mask() & qubit_bit(n, k)) product *= values[k];
        }
        out.push_back({op, product});
    }
    return out;
}

std::vector<ContradictionReport> find_contradictions(const GhzLabel &label) {
    std::size_t n = label.n();
    std::map<std::size_t, int> generator_values;
    std::vector<PoleOperator> generators;
    for (std::size_t k = 1; k <= n; ++k) {
        auto gen = single_y_generator(n, k);
        generators.push_back(gen);
        generator_values[k] = to_int(eigenvalue_symbolic(label, pole_index(Pole::N), gen));
    }
    std::vector<ContradictionReport> reports;
    for (const auto &[op, lhv] : predicted_s_values(n, generator_values)) {
        int quantum = to_int(eigenvalue_symbolic(label, pole_index(Pole::N), op));
        if (quantum != -lhv) {
            continue;
        }
        ContradictionReport report{n, op, lhv, quantum, {}};
        for (std::size_t k = 1; k <= n; ++k) {
            if (op.y_mask() & qubit_bit(n, k)) report.generators_used.push_back(generators[k - 1]);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

std::uint64_t exhaustive_search(const GhzLabel &label, ConstraintSet constraints) {
    require_exhaustive_cap(label.n());
    std::size_t n = label.n();
    auto list = build_constraints(label, constraints);
    auto total = static_cast<std::int64_t>(std::uint64_t{1} << (2 * n));
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t i = 0; i < total; ++i) {
        if (satisfies(static_cast<std::uint64_t>(i), n, list)) ++count;
    }
    return count;
}

std::uint64_t exhaustive_search_serial(const GhzLabel &label, ConstraintSet constraints) {
    require_exhaustive_cap(label.n());
    std::size_t n = label.n();
    auto list = build_constraints(label, constraints);
    std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (satisfies(i, n, list)) ++count;
    }
    return count;
}

std::optional<ValueAssignment> first_satisfying_assignment(const GhzLabel &label, ConstraintSet constraints) {
    require_exhaustive_cap(label.n());
    std::size_t n = label.n();
    auto list = build_constraints(label, constraints);
    std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (satisfies(i, n, list)) return ValueAssignment::from_index(n, i);
    }
    return std::nullopt;
}

KsIdentity ks_identity(std::size_t n, const std::vector<std::size_t> &y_positions) {
    require_odd_subset(y_positions, "ks_identity");
    std::uint64_t mask = subset_mask(n, y_positions);
    int sign = (y_positions.size() % 4 == 1) ? 1 : -1;
    PauliOperator target = PoleOperator::from_y_mask(n, mask).op();
    if (sign < 0) {
        target = target.negated();
    }
    PauliOperator product = generator_product(n, mask);
    return {product == target, sign, product, target};
}

bool verify_ks_identity(std::size_t n, const std::vector<std::size_t> &y_positions) {
    return ks_identity(n, y_positions).holds;
}

PoleOperator ew_swap(const PoleOperator &op, const std::vector<std::size_t> &subset) {
    require_odd_subset(subset, "ew_swap");
    std::uint64_t mask = subset_mask(op.n(), subset);
    // On X/Y strings, X <-> Y is a z-bit flip.
    return PoleOperator::from_y_mask(op.n(), op.y_mask() ^ mask);
}

SwappedState ew_swapped_state(const GhzLabel &label, const std::vector<std::size_t> &subset) {
    require_odd_subset(subset, "ew_swapped_state");
    std::size_t n = label.n();
    std::uint64_t mask = subset_mask(n, subset);
    // (X+Y)/sqrt2 sends |0> -> w|1> and |1> -> w^-1|0> (w = e^{i pi/4}). On the pi/2 state
    // w^-1|n> + s w|nbar> this gives w^{c-1}|n^m> + s w^{1-c}|nbar^m>, c = #(subset, n_k=0) - #(subset, n_k=1).
    int c = std::popcount(mask & ~label.bits()) - std::popcount(mask & label.bits());
    int q = 1 - c;
    GhzLabel swapped(n, label.bits() ^ mask, label.sign());
    if (!swapped.is_canonical()) {
        // w^-q|n'> + s w^q|nbar'> = s (w^q|nbar'> + s w^-q|n'>): complement the bits and negate the angle.
        swapped = GhzLabel(n, swapped.complement_bits(), swapped.sign());
        q = -q;
    }
    return {swapped, ((q % 4) + 4) % 4};
}

std::vector<ContradictionReport> ew_contradictions(const GhzLabel &label, const std::vector<std::size_t> &subset) {
    require_odd_subset(subset, "ew_contradictions");
    std::size_t n = label.n();
    auto state = ew_swapped_state(label, subset);

    std::vector<PoleOperator> generators;
    std::vector<int> generator_values;
    for (std::size_t k = 1; k <= n; ++k) {
        auto gen = ew_swap(single_y_generator(n, k), subset);
        Eigenvalue e = eigenvalue_symbolic(state.label, state.phi_quarter, gen);
        if (e == Eigenvalue::NotEigenstate) {
            throw std::logic_error("swapped state is not an eigenstate of swapped generator " + gen.str());
        }
        generators.push_back(gen);
        generator_values.push_back(to_int(e));
    }

    std::vector<ContradictionReport> reports;
    if (n < 3) {
        return reports;
    }
    for (const auto &s_op : enumerate_pole(n, Pole::S)) {
        auto target = ew_swap(s_op, subset);
        int lhv = 1;
        ContradictionReport report{n, target, 0, 0, {}};
        for (std::size_t k = 1; k <= n; ++k) {
            if (s_op.y_mask() & qubit_bit(n, k)) {
                lhv *= generator_values[k - 1];
                report.generators_used.push_back(generators[k - 1]);
            }
        }
        Eigenvalue e = eigenvalue_symbolic(state.label, state.phi_quarter, target);
        if (e == Eigenvalue::NotEigenstate) {
            throw std::logic_error("swapped state is not an eigenstate of " + target.str());
        }
        report.lhv_value = lhv;
        report.quantum_value = to_int(e);
        if (report.quantum_value == -lhv) {
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

}  // namespace ghz
