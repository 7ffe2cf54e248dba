#include "ghz/oracle.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "ghz/errors.h"
#include "reference.h"

using namespace ghz;

namespace {

constexpr double kPi = std::numbers::pi;

double diff_to_ref(const DenseOperator &d, const ref::Matrix &m) {
    double worst = 0;
    for (std::size_t i = 0; i < m.a.size(); ++i) worst = std::max(worst, std::abs(d.entries()[i] - m.a[i]));
    return worst;
}

StateVector random_state(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    StateVector v(n);
    for (auto &a : v.amplitudes()) a = {g(rng), g(rng)};
    return v;
}

}  // namespace

TEST(oracle, materialize_examples) {
    auto x = materialize(PauliOperator::parse("X"));
    EXPECT_EQ(x(0, 1), Complex(1, 0));
    EXPECT_EQ(x(1, 0), Complex(1, 0));
    auto y = materialize(PauliOperator::parse("Y"));
    EXPECT_EQ(y(0, 1), Complex(0, -1));
    EXPECT_EQ(y(1, 0), Complex(0, 1));
    auto xx = materialize(PauliOperator::parse("XX"));
    EXPECT_EQ(xx(0, 3), Complex(1, 0));
    EXPECT_EQ(xx(1, 2), Complex(1, 0));
    EXPECT_EQ(xx(0, 0), Complex(0, 0));
    EXPECT_THROW(materialize(PauliOperator::identity(11)), CapacityError);
}

TEST(oracle, check_eigen_examples) {
    auto plus = build_state(GhzLabel::parse("000+"));
    auto minus = build_state(GhzLabel::parse("000-"));
    auto xxx = PauliOperator::parse("XXX");
    EXPECT_TRUE(check_eigen(plus, xxx, 1).pass);
    EXPECT_TRUE(check_eigen(minus, xxx, -1).pass);
    auto res = check_eigen(plus, xxx, -1);
    EXPECT_FALSE(res.pass);
    EXPECT_NEAR(res.residual, 2 / std::sqrt(2.0), 1e-12);

    auto tilde = pihalf_state(GhzLabel::parse("000+"));
    EXPECT_TRUE(check_eigen(tilde, PauliOperator::parse("YYY"), -1).pass);
    EXPECT_TRUE(check_eigen(tilde, materialize(PauliOperator::parse("YXX")), 1).pass);
    EXPECT_FALSE(check_eigen(tilde, xxx, 1).pass);
    EXPECT_FALSE(check_eigen(tilde, xxx, -1).pass);
    EXPECT_THROW(check_eigen(tilde, PauliOperator::parse("XX"), 1), DimensionError);
}

TEST(oracle, check_conjugation_examples) {
    auto zero = check_conjugation(std::vector<double>{0, 0, 0});
    EXPECT_TRUE(zero.pass);
    EXPECT_LT(zero.residual, 1e-15);
    EXPECT_TRUE(check_conjugation(std::vector<double>{kPi / 2, kPi / 2, kPi / 2}).pass);

    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a = {angle(rng), angle(rng), angle(rng)};
        ASSERT_TRUE(check_conjugation(a).pass);
    }
    // Sparse path above the dense matrix cap.
    std::vector<double> wide(11);
    for (auto &a : wide) a = angle(rng);
    auto sparse = check_conjugation(wide);
    EXPECT_TRUE(sparse.pass) << sparse.residual;
    EXPECT_THROW(check_conjugation(std::vector<double>(15, 0.0)), CapacityError);
}

TEST(oracle, rotation_matrix_matches_reference) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<double> phis(n);
        std::vector<ref::Matrix> f;
        for (auto &p : phis) {
            p = angle(rng);
            f.push_back(ref::zrot(p));
        }
        auto r = rotation_matrix(phis);
        EXPECT_LT(diff_to_ref(r, ref::kron_all(f)), 1e-15);
        EXPECT_LT(unitarity_residual(r), 1e-12);
    }
}

TEST(oracle, swap_axis_rotation_examples) {
    auto u = swap_axis_rotation(1, 1);
    // U X U^dagger = Y and U Y U^dagger = X.
    auto uxu = matmul(matmul(u, materialize(PauliOperator::parse("X"))), u.adjoint());
    EXPECT_LT(max_abs_diff(uxu, materialize(PauliOperator::parse("Y"))), 1e-15);
    auto uyu = matmul(matmul(u, materialize(PauliOperator::parse("Y"))), u.adjoint());
    EXPECT_LT(max_abs_diff(uyu, materialize(PauliOperator::parse("X"))), 1e-15);
    EXPECT_LT(max_abs_diff(swap_axis_rotation(3, 0), DenseOperator::identity(3)), 1e-15);
}

TEST(oracle_properties, rotations_are_unitary) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 6;
        std::vector<double> phis(n);
        for (auto &p : phis) p = angle(rng);
        ASSERT_LT(unitarity_residual(rotation_matrix(phis)), 1e-12);
        ASSERT_LT(unitarity_residual(materialize(co_rotate_general(phis))), 1e-12);
    }
}

TEST(oracle_properties, pair_subspace_is_invariant) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            GhzLabel label(n, rng() & full_mask(n - 1), (rng() & 1) ? 1 : -1);
            std::vector<double> phis(n);
            for (auto &p : phis) p = angle(rng);
            auto psi = apply_rotations(build_state(label), phis);
            ASSERT_LT(pair_subspace_residual(psi, label), 1e-12);
        }
    }
    // A basis state outside the pair is detected.
    EXPECT_NEAR(pair_subspace_residual(StateVector::basis(3, 1), GhzLabel::parse("000")), 1.0, 1e-12);
}

TEST(oracle_properties, parallel_kernels_match_serial) {
    std::mt19937_64 rng(55);
    for (std::size_t n = 1; n <= 6; ++n) {
        DenseOperator a(n), b(n);
        std::normal_distribution<double> g;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
                a(i, j) = {g(rng), g(rng)};
                b(i, j) = {g(rng), g(rng)};
            }
        }
        // Same per-entry summation order, so bitwise equal.
        ASSERT_EQ(max_abs_diff(matmul(a, b), matmul_serial(a, b)), 0.0);
    }
    for (std::size_t n = 1; n <= 12; ++n) {
        auto psi = random_state(rng, n);
        auto op = PauliOperator::parse(ref::random_pauli_text(rng, n, true));
        ASSERT_EQ(max_abs_diff(apply(op, psi), apply_serial(op, psi)), 0.0);
        if (n <= 6) ASSERT_LT(max_abs_diff(apply(op, psi), apply(materialize(op), psi)), 1e-12);
    }
}

TEST(oracle_properties, product_observable_apply_matches_dense) {
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<double> a(n);
        for (auto &x : a) x = angle(rng);
        ProductObservable obs(a);
        auto psi = random_state(rng, n);
        ASSERT_LT(max_abs_diff(apply(obs, psi), apply(materialize(obs), psi)), 1e-12);
    }
}
