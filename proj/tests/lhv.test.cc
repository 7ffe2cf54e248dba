#include "ghz/lhv.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "ghz/counting.h"
#include "ghz/errors.h"
#include "ghz/oracle.h"

using namespace ghz;

namespace {

// Brute force with no shared machinery: letter-by-letter values and dense eigen checks.
std::uint64_t brute_force_count(const GhzLabel &label, bool include_s) {
    std::size_t n = label.n();
    auto psi = pihalf_state(label);
    std::vector<std::pair<PauliOperator, int>> targets;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        int yc = std::popcount(y) % 4;
        if (yc != 1 && !(include_s && yc == 3)) continue;
        PauliOperator op(n, full_mask(n), y);
        int quantum = check_eigen(psi, op, 1).pass ? 1 : (check_eigen(psi, op, -1).pass ? -1 : 0);
        EXPECT_NE(quantum, 0);
        targets.emplace_back(op, quantum);
    }
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
        auto a = ValueAssignment::from_index(n, idx);
        bool ok = true;
        for (const auto &[op, quantum] : targets) {
            int v = 1;
            for (std::size_t k = 1; k <= n; ++k) v *= op.letter(k) == Letter::Y ? a.y(k) : a.x(k);
            if (v != quantum) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

std::vector<std::vector<std::size_t>> odd_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        if (std::popcount(m) % 2 == 0) continue;
        std::vector<std::size_t> s;
        for (std::size_t k = 1; k <= n; ++k) {
            if (m & (std::uint64_t{1} << (k - 1))) s.push_back(k);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(lhv, value_of_examples) {
    ValueAssignment ones{3, 0, 0};
    EXPECT_EQ(value_of(ones, PauliOperator::parse("XXX")), 1);
    EXPECT_EQ(value_of(ones, PauliOperator::parse("-YYY")), -1);
    ValueAssignment y2{3, 0, qubit_bit(3, 2)};
    EXPECT_EQ(y2.y(2), -1);
    EXPECT_EQ(value_of(y2, PauliOperator::parse("XYX")), -1);
    EXPECT_EQ(value_of(y2, PauliOperator::parse("XXX")), 1);
    EXPECT_THROW(value_of(ones, PauliOperator::parse("XZX")), UnsupportedLetterError);
    EXPECT_THROW(value_of(ones, PauliOperator::parse("iXXX")), DomainError);
}

TEST(lhv, predicted_s_values_examples) {
    auto three = predicted_s_values(3, {{1, 1}, {2, 1}, {3, 1}});
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].op.str(), "YYY");
    EXPECT_EQ(three[0].value, 1);

    auto four = predicted_s_values(4, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    ASSERT_EQ(four.size(), 4u);
    for (const auto &p : four) EXPECT_EQ(p.value, 1);

    auto flipped = predicted_s_values(3, {{1, -1}, {2, 1}, {3, 1}});
    EXPECT_EQ(flipped[0].value, -1);

    EXPECT_THROW(predicted_s_values(3, {{1, 1}, {2, 1}}), DomainError);
    EXPECT_THROW(predicted_s_values(3, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}), DomainError);
    EXPECT_THROW(predicted_s_values(3, {{1, 1}, {2, 0}, {3, 1}}), DomainError);
}

TEST(lhv, find_contradictions_examples) {
    auto three = find_contradictions(GhzLabel::parse("000+"));
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].s_operator.str(), "YYY");
    EXPECT_EQ(three[0].lhv_value, 1);
    EXPECT_EQ(three[0].quantum_value, -1);
    ASSERT_EQ(three[0].generators_used.size(), 3u);
    EXPECT_EQ(three[0].generators_used[0].str(), "YXX");
    EXPECT_EQ(three[0].generators_used[2].str(), "XXY");

    auto four = find_contradictions(GhzLabel::parse("0000+"));
    ASSERT_EQ(four.size(), 4u);
    for (const auto &r : four) {
        EXPECT_EQ(r.lhv_value, 1);
        EXPECT_EQ(r.quantum_value, -1);
    }
    EXPECT_EQ(find_contradictions(GhzLabel::parse("00000+")).size(), 10u);
    EXPECT_TRUE(find_contradictions(GhzLabel::parse("00+")).empty());
}

TEST(lhv, exhaustive_search_examples) {
    // Frozen from brute_force_count, which shares no code with the search kernel.
    EXPECT_EQ(brute_force_count(GhzLabel::parse("000+"), true), 0u);
    EXPECT_EQ(brute_force_count(GhzLabel::parse("0000+"), true), 0u);
    EXPECT_EQ(brute_force_count(GhzLabel::parse("00+"), true), 4u);

    EXPECT_EQ(exhaustive_search(GhzLabel::parse("000+")), 0u);
    EXPECT_EQ(exhaustive_search(GhzLabel::parse("0000+")), 0u);
    EXPECT_EQ(exhaustive_search(GhzLabel::parse("00+")), 4u);
    EXPECT_THROW(exhaustive_search(GhzLabel(11, 0)), CapacityError);
}

TEST(lhv, exhaustive_search_matches_brute_force) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (auto bits : canonical_bit_patterns(n)) {
            for (int sign : {1, -1}) {
                GhzLabel label(n, bits, sign);
                ASSERT_EQ(exhaustive_search(label), brute_force_count(label, true)) << label.str();
                ASSERT_EQ(exhaustive_search(label, ConstraintSet::NPoleOnly), brute_force_count(label, false));
            }
        }
    }
}

TEST(lhv, parallel_search_matches_serial) {
    for (std::size_t n = 2; n <= 7; ++n) {
        GhzLabel label(n, 1);
        EXPECT_EQ(exhaustive_search(label), exhaustive_search_serial(label));
        EXPECT_EQ(exhaustive_search(label, ConstraintSet::NPoleOnly),
                  exhaustive_search_serial(label, ConstraintSet::NPoleOnly));
    }
}

TEST(lhv, n_pole_constraints_alone_are_satisfiable) {
    for (std::size_t n = 3; n <= 7; ++n) {
        GhzLabel label(n, 0);
        EXPECT_GT(exhaustive_search(label, ConstraintSet::NPoleOnly), 0u);
        auto witness = first_satisfying_assignment(label, ConstraintSet::NPoleOnly);
        ASSERT_TRUE(witness.has_value());
        for (const auto &op : enumerate_pole(n, Pole::N)) {
            EXPECT_EQ(value_of(*witness, op.op()), to_int(eigenvalue_symbolic(label, 1, op)));
        }
        EXPECT_FALSE(first_satisfying_assignment(label, ConstraintSet::NAndSPoles).has_value());
    }
}

TEST(lhv, ks_identity_examples) {
    auto full = ks_identity(3, {1, 2, 3});
    EXPECT_TRUE(full.holds);
    EXPECT_EQ(full.product.str(), "-YYY");
    EXPECT_EQ(full.sign, -1);
    EXPECT_TRUE(verify_ks_identity(4, {2}));
    auto five = ks_identity(5, {1, 2, 3, 4, 5});
    EXPECT_TRUE(five.holds);
    EXPECT_EQ(five.product.str(), "+YYYYY");
    auto seven = ks_identity(7, {1, 2, 3, 4, 5, 6, 7});
    EXPECT_TRUE(seven.holds);
    EXPECT_EQ(seven.sign, -1);
    EXPECT_THROW(verify_ks_identity(4, {1, 2}), DomainError);
    EXPECT_THROW(verify_ks_identity(4, {5}), DimensionError);
    EXPECT_THROW(verify_ks_identity(4, {1, 1, 2}), DimensionError);
}

TEST(lhv, ks_identity_all_subsets) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto &s : odd_subsets(n)) ASSERT_TRUE(verify_ks_identity(n, s));
    }
}

TEST(lhv, ew_swap_examples) {
    auto yyy = PoleOperator(PauliOperator::parse("YYY"));
    EXPECT_EQ(ew_swap(yyy, {1, 2, 3}).str(), "XXX");
    EXPECT_EQ(ew_swap(yyy, {1, 2, 3}).pole(), Pole::E);
    EXPECT_EQ(ew_swap(PoleOperator(PauliOperator::parse("YXX")), {1}).str(), "XXX");
    auto xyx = ew_swap(PoleOperator(PauliOperator::parse("XXX")), {2});
    EXPECT_EQ(xyx.str(), "XYX");
    EXPECT_EQ(xyx.pole(), Pole::N);
    EXPECT_THROW(ew_swap(yyy, {1, 2}), DomainError);
}

TEST(lhv, ew_contradictions_examples) {
    EXPECT_EQ(ew_contradictions(GhzLabel::parse("000+"), {1}).size(), 1u);
    EXPECT_EQ(ew_contradictions(GhzLabel::parse("0000+"), {3}).size(), 4u);
    EXPECT_TRUE(ew_contradictions(GhzLabel::parse("00+"), {1}).empty());
    EXPECT_TRUE(ew_contradictions(GhzLabel::parse("00+"), {2}).empty());
    EXPECT_THROW(ew_contradictions(GhzLabel::parse("000+"), {1, 2}), DomainError);
    for (const auto &r : ew_contradictions(GhzLabel::parse("00000+"), {1, 3, 5})) {
        EXPECT_TRUE(r.s_operator.pole() == Pole::E || r.s_operator.pole() == Pole::W);
        EXPECT_EQ(r.lhv_value, -r.quantum_value);
    }
}

TEST(lhv_properties, contradiction_count_equals_c_n) {
    for (std::size_t n = 3; n <= 6; ++n) {
        for (auto bits : canonical_bit_patterns(n)) {
            for (int sign : {1, -1}) {
                auto reports = find_contradictions(GhzLabel(n, bits, sign));
                ASSERT_EQ(BigInt(reports.size()), c_n_closed(n));
                for (const auto &r : reports) ASSERT_EQ(r.lhv_value, -r.quantum_value);
            }
        }
    }
    std::mt19937_64 rng(41);
    for (std::size_t n = 7; n <= 10; ++n) {
        for (int trial = 0; trial < 32; ++trial) {
            GhzLabel label(n, rng() & full_mask(n - 1), (rng() & 1) ? 1 : -1);
            ASSERT_EQ(BigInt(find_contradictions(label).size()), c_n_closed(n));
        }
    }
}

TEST(lhv_properties, product_rule_is_an_lhv_identity) {
    // For every assignment, v(O_T) equals the product of v(O_k) over T (|T| odd), before and after swapping.
    std::mt19937_64 rng(42);
    for (std::size_t n = 3; n <= 6; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            auto a = ValueAssignment::from_index(n, rng() & full_mask(2 * n));
            std::uint64_t t = rng() & full_mask(n);
            if (std::popcount(t) % 2 == 0) t ^= 1;
            std::vector<std::size_t> swap_set = {1 + rng() % n};
            auto target = PoleOperator::from_y_mask(n, t);
            int product = 1;
            int swapped_product = 1;
            for (std::size_t k = 1; k <= n; ++k) {
                if (!(t & qubit_bit(n, k))) continue;
                product *= value_of(a, single_y_generator(n, k).op());
                swapped_product *= value_of(a, ew_swap(single_y_generator(n, k), swap_set).op());
            }
            ASSERT_EQ(value_of(a, target.op()), product);
            ASSERT_EQ(value_of(a, ew_swap(target, swap_set).op()), swapped_product);
        }
    }
}

TEST(lhv_properties, ew_swap_preserves_ks_identity) {
    for (std::size_t n = 3; n <= 6; ++n) {
        for (const auto &swap_set : odd_subsets(n)) {
            for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
                if (std::popcount(t) % 2 == 0) continue;
                PauliOperator product = PauliOperator::identity(n);
                for (std::size_t k = 1; k <= n; ++k) {
                    if (t & qubit_bit(n, k)) product = product * ew_swap(single_y_generator(n, k), swap_set).op();
                }
                int sign = std::popcount(t) % 4 == 1 ? 1 : -1;
                auto target = ew_swap(PoleOperator::from_y_mask(n, t), swap_set).op();
                ASSERT_EQ(product, sign > 0 ? target : target.negated());
            }
        }
    }
}

TEST(lhv_properties, ew_swap_is_conjugation_by_45_degree_rotation) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto &swap_set : odd_subsets(n)) {
            auto u = swap_axis_rotation(n, subset_mask(n, swap_set));
            ASSERT_LT(unitarity_residual(u), 1e-12);
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
                auto op = PoleOperator::from_y_mask(n, y);
                auto conj = matmul(matmul(u, materialize(op.op())), u.adjoint());
                ASSERT_LT(max_abs_diff(conj, materialize(ew_swap(op, swap_set).op())), 1e-12);
            }
        }
    }
}

TEST(lhv_properties, swapped_state_is_the_rotated_pihalf_state) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (auto bits : canonical_bit_patterns(n)) {
            for (const auto &swap_set : odd_subsets(n)) {
                GhzLabel label(n, bits, (bits & 1) ? -1 : 1);
                auto u = swap_axis_rotation(n, subset_mask(n, swap_set));
                auto rotated = apply(u, pihalf_state(label));
                auto swapped = ew_swapped_state(label, swap_set);
                EXPECT_TRUE(swapped.label.is_canonical());
                auto expected = to_state_vector({swapped.label, swapped.phi_quarter * std::numbers::pi / 2});
                ASSERT_TRUE(states_equal_up_to_phase(rotated, expected)) << label.str();
            }
        }
    }
}

TEST(lhv_properties, ew_contradiction_count_equals_c_n) {
    for (std::size_t n = 3; n <= 6; ++n) {
        for (const auto &swap_set : odd_subsets(n)) {
            ASSERT_EQ(BigInt(ew_contradictions(GhzLabel(n, 0), swap_set).size()), c_n_closed(n));
        }
    }
}
