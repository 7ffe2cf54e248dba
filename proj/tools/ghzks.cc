// ghzks: counting, enumeration, verification and LHV refutation for rotated GHZ states.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage or domain error.

#include <bit>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghz/counting.h"
#include "ghz/errors.h"
#include "ghz/ghz_states.h"
#include "ghz/lhv.h"
#include "ghz/oracle.h"
#include "ghz/poles.h"
#include "ghz/serialize.h"

using namespace ghz;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Angle arrays and sampled operators per verify run.
constexpr int kVerifyAngleSamples = 20;
constexpr int kVerifyConjugationSamples = 10;
constexpr std::size_t kVerifyOperatorSamples = 1000;
// Above this, identity without --subset would walk too many subsets.
constexpr std::size_t kIdentityAllSubsetsCap = 20;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string residual_str(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r);
    return buf;
}

GhzLabel label_or_default(std::size_t n, const std::string &text) {
    if (text.empty()) return GhzLabel::zero(n);
    GhzLabel label = GhzLabel::parse(text);
    if (label.n() != n) throw UsageError("--label has " + std::to_string(label.n()) + " bits, --n is " + std::to_string(n));
    return label;
}

// ---- count ----

int cmd_count(std::size_t n_min, std::size_t n_max, const std::string &format) {
    if (n_max > 64) throw UsageError("--n-max above 64");
    auto rows = table1(n_min, n_max);
    if (format == "json") {
        Json out = Json::array();
        for (const auto &r : rows) out.push_back(to_json(r));
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << count_csv(rows);
    } else {
        std::printf("%4s  %24s  %24s\n", "N", "C_N", "compatible");
        for (const auto &r : rows) {
            std::printf("%4zu  %24s  %24s\n", r.n, r.c_n.str().c_str(), r.compatible.str().c_str());
        }
    }
    for (const auto &r : rows) {
        if (r.closed_form_value != r.binomial_value) return kExitFail;
    }
    return kExitPass;
}

// ---- enumerate ----

int cmd_enumerate(std::size_t n, const std::string &pole_name, const std::string &format) {
    auto pole = parse_pole(pole_name);
    if (!pole) throw UsageError("--pole must be one of E, N, W, S");
    auto ops = enumerate_pole(n, *pole);
    if (format == "json") {
        std::cout << pole_listing_json(n, *pole, ops).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << pole_listing_csv(ops);
    } else {
        std::printf("n=%zu pole=%c count=%zu\n", n, pole_char(*pole), ops.size());
        for (const auto &op : ops) std::printf("  %s\n", op.str().c_str());
    }
    return kExitPass;
}

// ---- verify ----

struct SuiteLine {
    std::string check;
    std::size_t count = 0;
    double residual = 0.0;
    std::size_t failures = 0;

    void record(bool pass, double r) {
        ++count;
        if (!pass) ++failures;
        residual = std::max(residual, r);
    }
};

std::vector<PoleOperator> verify_operators(std::size_t n, std::mt19937_64 &rng) {
    std::vector<PoleOperator> ops;
    if (n <= kDenseMatrixCap) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) ops.push_back(PoleOperator::from_y_mask(n, y));
    } else {
        for (std::size_t i = 0; i < kVerifyOperatorSamples; ++i) ops.push_back(PoleOperator::from_y_mask(n, rng() & full_mask(n)));
    }
    return ops;
}

int cmd_verify(std::size_t n, const std::string &label_text, std::uint64_t seed, const std::string &format) {
    if (n == 0 || n > kDenseStateCap) {
        throw CapacityError("verify: --n must be in 1.." + std::to_string(kDenseStateCap));
    }
    GhzLabel label = label_or_default(n, label_text);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

    SuiteLine eigen{"eigen_symbolic_vs_oracle"};
    SuiteLine rule{"eigen_rule_vs_symbolic"};
    auto ops = verify_operators(n, rng);
    for (int q = 0; q < 4; ++q) {
        auto psi = to_state_vector({label, q * std::numbers::pi / 2});
        for (const auto &op : ops) {
            Eigenvalue e = eigenvalue_symbolic(label, q, op);
            if (e == Eigenvalue::NotEigenstate) {
                auto plus = check_eigen(psi, op.op(), 1);
                auto minus = check_eigen(psi, op.op(), -1);
                eigen.record(!plus.pass && !minus.pass, 0.0);
            } else {
                auto res = check_eigen(psi, op.op(), to_int(e));
                eigen.record(res.pass, res.residual);
            }
            if (q == 1 && (op.pole() == Pole::N || op.pole() == Pole::S)) {
                rule.record(eigenvalue_rule(label, op) == to_int(e), 0.0);
            }
        }
    }

    SuiteLine collapse{"phi_collapse"};
    auto base = build_state(label);
    for (int t = 0; t < kVerifyAngleSamples; ++t) {
        std::vector<double> phis(n);
        for (auto &p : phis) p = angle(rng);
        double phi = collective_angle(label, phis);
        auto rotated = apply_rotations(base, phis);
        std::vector<double> equal(n);
        for (std::size_t k = 1; k <= n; ++k) equal[k - 1] = (label.bit(k) ? -phi : phi) / static_cast<double>(n);
        double r = std::max(max_abs_diff(rotated, to_state_vector({label, phi})),
                            max_abs_diff(rotated, apply_rotations(base, equal)));
        collapse.record(r < kStateTolerance, r);
    }

    SuiteLine conjugation{"conjugation"};
    for (int t = 0; t < kVerifyConjugationSamples; ++t) {
        std::vector<double> phis(n);
        for (auto &p : phis) p = angle(rng);
        auto res = check_conjugation(phis);
        conjugation.record(res.pass, res.residual);
    }

    std::vector<SuiteLine> lines = {eigen, rule, collapse, conjugation};
    bool all_pass = true;
    for (const auto &l : lines) all_pass = all_pass && l.failures == 0;

    if (format == "json") {
        Json checks = Json::array();
        for (const auto &l : lines) {
            Json j = to_json(CheckResult{l.check, l.residual, l.failures == 0});
            j["count"] = l.count;
            j["failures"] = l.failures;
            checks.push_back(std::move(j));
        }
        Json out{{"n", n}, {"label", label.str()}, {"seed", seed}, {"checks", std::move(checks)}, {"pass", all_pass}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::printf("verify n=%zu label=%s seed=%llu\n", n, label.str().c_str(), static_cast<unsigned long long>(seed));
        for (const auto &l : lines) {
            std::printf("  %-26s %8zu checks  max residual %s  %s\n", l.check.c_str(), l.count,
                        residual_str(l.residual).c_str(), l.failures == 0 ? "PASS" : "FAIL");
        }
        std::printf("%s\n", all_pass ? "PASS" : "FAIL");
    }
    return all_pass ? kExitPass : kExitFail;
}

// ---- lhv ----

int cmd_lhv(std::size_t n, const std::string &label_text, bool exhaustive, const std::string &format) {
    if (exhaustive && n > kExhaustiveCap) {
        throw CapacityError("lhv --exhaustive: --n above " + std::to_string(kExhaustiveCap));
    }
    auto [label, dropped_phase] = label_or_default(n, label_text).canonical_pihalf();
    auto reports = find_contradictions(label);
    BigInt expected = n >= 2 ? c_n_closed(n) : BigInt(0);
    bool pass = BigInt(reports.size()) == expected;
    for (const auto &r : reports) pass = pass && r.lhv_value == -r.quantum_value;

    std::uint64_t satisfying = 0;
    std::uint64_t satisfying_n_only = 0;
    if (exhaustive) {
        satisfying = exhaustive_search(label);
        satisfying_n_only = exhaustive_search(label, ConstraintSet::NPoleOnly);
        pass = pass && (n >= 3 ? satisfying == 0 : satisfying > 0) && satisfying_n_only > 0;
    }

    if (format == "json") {
        Json list = Json::array();
        for (const auto &r : reports) list.push_back(to_json(r));
        Json out{{"n", n}, {"label", label.str()}, {"contradictions", reports.size()},
                 {"expected", big_to_json(expected)}, {"reports", std::move(list)}};
        if (exhaustive) {
            out["satisfying_assignments"] = satisfying;
            out["satisfying_n_pole_only"] = satisfying_n_only;
        }
        out["pass"] = pass;
        std::cout << out.dump(2) << '\n';
    } else {
        std::printf("lhv n=%zu label=%s", n, label.str().c_str());
        if (dropped_phase != 0) std::printf(" (canonical form, global phase i^%d dropped)", dropped_phase);
        std::printf("\n");
        for (const auto &r : reports) {
            std::string gens;
            for (const auto &g : r.generators_used) gens += (gens.empty() ? "" : " ") + g.str();
            std::printf("  %s  lhv %+d  quantum %+d  from %s\n", r.s_operator.str().c_str(), r.lhv_value,
                        r.quantum_value, gens.c_str());
        }
        std::printf("contradictions %zu (C_N = %s)\n", reports.size(), expected.str().c_str());
        if (exhaustive) {
            std::printf("satisfying assignments %llu of %llu (N pole only: %llu)\n",
                        static_cast<unsigned long long>(satisfying),
                        static_cast<unsigned long long>(std::uint64_t{1} << (2 * n)),
                        static_cast<unsigned long long>(satisfying_n_only));
        }
        std::printf("%s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? kExitPass : kExitFail;
}

// ---- identity ----

std::vector<std::size_t> parse_subset(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--subset must be a comma-separated list of qubit indices");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

std::string subset_str(const std::vector<std::size_t> &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

int cmd_identity(std::size_t n, const std::string &subset_text, const std::string &format) {
    std::vector<std::vector<std::size_t>> subsets;
    if (!subset_text.empty()) {
        subsets.push_back(parse_subset(subset_text));
        subset_mask(n, subsets.back());
        if (subsets.back().size() % 2 == 0) throw DomainError("--subset must have odd size");
    } else {
        if (n == 0 || n > kIdentityAllSubsetsCap) {
            throw CapacityError("identity without --subset: --n must be in 1.." + std::to_string(kIdentityAllSubsetsCap));
        }
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
            if (std::popcount(m) % 2 == 0) continue;
            std::vector<std::size_t> s;
            for (std::size_t k = 1; k <= n; ++k) {
                if (m & qubit_bit(n, k)) s.push_back(k);
            }
            subsets.push_back(std::move(s));
        }
    }

    bool all_pass = true;
    Json list = Json::array();
    if (format != "json") std::printf("identity n=%zu subsets=%zu\n", n, subsets.size());
    for (const auto &s : subsets) {
        auto id = ks_identity(n, s);
        all_pass = all_pass && id.holds;
        if (format == "json") {
            list.push_back(Json{{"subset", s}, {"sign", id.sign}, {"product", id.product.str()}, {"pass", id.holds}});
        } else {
            std::printf("  %-20s sign %c  product %s  %s\n", subset_str(s).c_str(), id.sign > 0 ? '+' : '-',
                        id.product.str().c_str(), id.holds ? "PASS" : "FAIL");
        }
    }
    if (format == "json") {
        std::cout << Json{{"n", n}, {"checks", std::move(list)}, {"pass", all_pass}}.dump(2) << '\n';
    } else {
        std::printf("%s\n", all_pass ? "PASS" : "FAIL");
    }
    return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pole operators, GHZ contradiction counts and their numeric verification"};
    app.require_subcommand(1);
    const std::vector<std::string> table_formats = {"table", "json", "csv"};
    const std::vector<std::string> report_formats = {"table", "json"};

    std::size_t n_min = 3, n_max = 10, n = 3;
    std::string format = "table", pole, label, subset;
    std::uint64_t seed = 1;
    bool exhaustive = false;

    auto *count = app.add_subcommand("count", "Contradiction and compatible-observable counts per N");
    count->add_option("--n-min", n_min, "Smallest N")->capture_default_str();
    count->add_option("--n-max", n_max, "Largest N")->capture_default_str();
    count->add_option("--format", format)->check(CLI::IsMember(table_formats))->capture_default_str();

    auto *enumerate = app.add_subcommand("enumerate", "List the X/Y operators at one pole");
    enumerate->add_option("--n", n, "Qubit count")->required();
    enumerate->add_option("--pole", pole, "E, N, W or S")->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember(table_formats))->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Symbolic results against dense linear algebra");
    verify->add_option("--n", n, "Qubit count")->required();
    verify->add_option("--label", label, "Bits plus sign, e.g. 010+");
    verify->add_option("--seed", seed, "Seed for random angle arrays")->capture_default_str();
    verify->add_option("--format", format)->check(CLI::IsMember(report_formats))->capture_default_str();

    auto *lhv = app.add_subcommand("lhv", "Contradictions for the pi/2 state");
    lhv->add_option("--n", n, "Qubit count")->required();
    lhv->add_option("--label", label, "Bits plus sign, e.g. 010+");
    lhv->add_flag("--exhaustive", exhaustive, "Also count satisfying value assignments");
    lhv->add_option("--format", format)->check(CLI::IsMember(report_formats))->capture_default_str();

    auto *identity = app.add_subcommand("identity", "Product identities for the single-Y generators");
    identity->add_option("--n", n, "Qubit count")->required();
    identity->add_option("--subset", subset, "Odd-size list of qubits, e.g. 1,2,3");
    identity->add_option("--format", format)->check(CLI::IsMember(report_formats))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) return cmd_count(n_min, n_max, format);
        if (*enumerate) return cmd_enumerate(n, pole, format);
        if (*verify) return cmd_verify(n, label, seed, format);
        if (*lhv) return cmd_lhv(n, label, exhaustive, format);
        if (*identity) return cmd_identity(n, subset, format);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        // DimensionError, CapacityError, DomainError and malformed labels all derive from logic_error.
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
