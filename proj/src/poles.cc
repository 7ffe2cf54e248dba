#include "ghz/poles.h"

#include <bit>
#include <cctype>

#include "ghz/errors.h"

namespace ghz {

char pole_char(Pole p) {
    static constexpr char kNames[] = {'E', 'N', 'W', 'S'};
    return kNames[pole_index(p)];
}

std::optional<Pole> parse_pole(std::string_view name) {
    if (name.size() != 1) {
        return std::nullopt;
    }
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
        case 'E':
            return Pole::E;
        case 'N':
            return Pole::N;
        case 'W':
            return Pole::W;
        case 'S':
            return Pole::S;
        default:
            return std::nullopt;
    }
}

std::uint64_t reverse_low_bits(std::uint64_t value, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (value & (std::uint64_t{1} << i)) out |= std::uint64_t{1} << (n - 1 - i);
    }
    return out;
}

Pole classify(const PauliOperator &op) {
    if (op.phase() != QuarterPhase::one()) {
        throw UnsupportedLetterError("classify: operator " + op.str() + " must carry phase +1");
    }
    return pole_from_index(static_cast<int>(y_count(op) % 4));
}

PoleOperator::PoleOperator(PauliOperator op) : op_(op), pole_(classify(op)) {}

PoleOperator PoleOperator::from_y_mask(std::size_t n, std::uint64_t y_mask) {
    return PoleOperator(PauliOperator(n, full_mask(n), y_mask));
}

SignedPoleOperator normalize_pole_operator(const PauliOperator &op) {
    int sign = op.phase().real_sign();
    return {sign, PoleOperator(op.with_phase(QuarterPhase::one()))};
}

PoleOperator single_y_generator(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) {
        throw DimensionError("single_y_generator: qubit index out of range");
    }
    return PoleOperator::from_y_mask(n, qubit_bit(n, k));
}

std::vector<PoleOperator> enumerate_pole(std::size_t n, Pole pole) {
    if (n == 0) {
        throw DimensionError("enumerate_pole: n must be at least 1");
    }
    if (n > kEnumerateCap) {
        throw CapacityError("enumerate_pole: n above " + std::to_string(kEnumerateCap));
    }
    std::vector<PoleOperator> out;
    int target = pole_index(pole);
    std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t key = 0; key < end; ++key) {
        if (std::popcount(key) % 4 == target) {
            out.push_back(PoleOperator::from_y_mask(n, reverse_low_bits(key, n)));
        }
    }
    return out;
}

Eigenvalue eigenvalue_symbolic(const GhzLabel &label, int state_phi_quarter, const PoleOperator &op) {
    if (label.n() != op.n()) {
        throw DimensionError("eigenvalue_symbolic: label and operator qubit counts differ");
    }
    // Amplitude phases in eighths of a turn (powers of w = e^{i pi/4}):
    // |Psi_s{n}(q pi/2)> ~ w^{-q} |n> + s w^{q} |nbar>.
    int q = ((state_phi_quarter % 8) + 8) % 8;
    int a = (8 - q) % 8;
    int b = (q + (label.sign() < 0 ? 4 : 0)) % 8;

    // op|n> = i^{e} |nbar>, op|nbar> = i^{-e} |n>; X contributes 1, Y contributes +i on |0>, -i on |1>.
    int e = 0;
    for (std::size_t k = 1; k <= op.n(); ++k) {
        if (op.op().letter(k) == Letter::Y) {
            e += label.bit(k) ? -1 : 1;
        }
    }
    int image_on_nbar = ((a + 2 * e) % 8 + 8) % 8;
    int image_on_n = ((b - 2 * e) % 8 + 8) % 8;

    // Eigen with eigenvalue w^L (L in {0,4}) iff both images equal w^L times the original amplitudes.
    int d_n = ((image_on_n - a) % 8 + 8) % 8;
    int d_nbar = ((image_on_nbar - b) % 8 + 8) % 8;
    if (d_n != d_nbar) {
        return Eigenvalue::NotEigenstate;
    }
    if (d_n == 0) {
        return Eigenvalue::Plus;
    }
    if (d_n == 4) {
        return Eigenvalue::Minus;
    }
    return Eigenvalue::NotEigenstate;
}

int eigenvalue_rule(const GhzLabel &label, const PoleOperator &op) {
    if (label.n() != op.n()) {
        throw DimensionError("eigenvalue_rule: label and operator qubit counts differ");
    }
    if (op.pole() != Pole::N && op.pole() != Pole::S) {
        throw DomainError("eigenvalue_rule: only N and S operators follow the rule, got " + op.str());
    }
    int value = 1;
    if (std::popcount(op.y_mask() & label.bits()) % 2 == 1) {
        value = -value;
    }
    if (op.pole() == Pole::S) {
        value = -value;
    }
    return value * label.sign();
}

PauliOperator generator_product(std::size_t n, std::uint64_t subset_mask) {
    if ((subset_mask & ~full_mask(n)) != 0) {
        throw DimensionError("generator_product: subset exceeds qubit count");
    }
    PauliOperator product = PauliOperator::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (subset_mask & qubit_bit(n, k)) {
            product = product * single_y_generator(n, k).op();
        }
    }
    return product;
}

std::vector<PauliOperator> compatible_family(std::size_t n) {
    if (n < 2) {
        throw DomainError("compatible_family: n must be at least 2");
    }
    if (n > kEnumerateCap) {
        throw CapacityError("compatible_family: n above " + std::to_string(kEnumerateCap));
    }
    std::vector<PauliOperator> out;
    std::uint64_t end = std::uint64_t{1} << n;
    out.reserve(end - 1);
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        out.push_back(generator_product(n, mask));
    }
    return out;
}

}  // namespace ghz
