#include "ghz/pauli.h"

#include <bit>

#include "ghz/errors.h"

namespace ghz {

int QuarterPhase::real_sign() const {
    if (!is_real()) {
        throw DomainError("phase is imaginary, not +-1");
    }
    return exponent_ == 0 ? 1 : -1;
}

char letter_char(Letter l) {
    switch (l) {
        case Letter::I:
            return 'I';
        case Letter::X:
            return 'X';
        case Letter::Y:
            return 'Y';
        case Letter::Z:
            return 'Z';
    }
    return '?';
}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits, QuarterPhase phase)
    : n_(n), x_(x_bits), z_(z_bits), phase_(phase) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw DimensionError("PauliOperator needs 1.." + std::to_string(kMaxPauliQubits) + " qubits, got " +
                             std::to_string(n));
    }
    if (((x_bits | z_bits) & ~full_mask(n)) != 0) {
        throw DimensionError("PauliOperator bits set beyond qubit count");
    }
}

PauliOperator PauliOperator::identity(std::size_t n) { return {n, 0, 0}; }

PauliOperator PauliOperator::from_letters(std::span<const Letter> letters) {
    if (letters.empty()) {
        throw DimensionError("from_letters: empty letter sequence");
    }
    std::size_t n = letters.size();
    if (n > kMaxPauliQubits) {
        throw DimensionError("from_letters: too many qubits");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        auto bit = qubit_bit(n, k);
        switch (letters[k - 1]) {
            case Letter::I:
                break;
            case Letter::X:
                x |= bit;
                break;
            case Letter::Y:
                x |= bit;
                z |= bit;
                break;
            case Letter::Z:
                z |= bit;
                break;
        }
    }
    return {n, x, z};
}

PauliOperator from_letters(std::span<const Letter> letters) { return PauliOperator::from_letters(letters); }

PauliOperator PauliOperator::parse(std::string_view text) {
    QuarterPhase phase;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = QuarterPhase::minus_one();
        }
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = phase * QuarterPhase::i();
        ++pos;
    }
    std::vector<Letter> letters;
    for (; pos < text.size(); ++pos) {
        switch (text[pos]) {
            case 'I':
            case '_':
                letters.push_back(Letter::I);
                break;
            case 'X':
                letters.push_back(Letter::X);
                break;
            case 'Y':
                letters.push_back(Letter::Y);
                break;
            case 'Z':
                letters.push_back(Letter::Z);
                break;
            default:
                throw UnsupportedLetterError("cannot parse Pauli string '" + std::string(text) + "'");
        }
    }
    return from_letters(letters).with_phase(phase);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t k, Letter letter) {
    if (k == 0 || k > n) {
        throw DimensionError("qubit index out of range");
    }
    std::vector<Letter> letters(n, Letter::I);
    letters[k - 1] = letter;
    return from_letters(letters);
}

Letter PauliOperator::letter(std::size_t k) const {
    auto bit = qubit_bit(n_, k);
    bool x = (x_ & bit) != 0;
    bool z = (z_ & bit) != 0;
    if (x) {
        return z ? Letter::Y : Letter::X;
    }
    return z ? Letter::Z : Letter::I;
}

std::vector<Letter> PauliOperator::to_letters() const {
    std::vector<Letter> out;
    out.reserve(n_);
    for (std::size_t k = 1; k <= n_; ++k) {
        out.push_back(letter(k));
    }
    return out;
}

std::string PauliOperator::letters_str() const {
    std::string out;
    out.reserve(n_);
    for (std::size_t k = 1; k <= n_; ++k) {
        out.push_back(letter_char(letter(k)));
    }
    return out;
}

std::string PauliOperator::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_.exponent()] + letters_str();
}

std::strong_ordering PauliOperator::operator<=>(const PauliOperator &other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = x_ <=> other.x_; c != 0) return c;
    if (auto c = z_ <=> other.z_; c != 0) return c;
    return phase_.exponent() <=> other.phase_.exponent();
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    if (a.n() != b.n()) {
        throw DimensionError("multiply: qubit counts differ (" + std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()) + ")");
    }
    std::uint64_t ax = a.x_bits() & ~a.z_bits();
    std::uint64_t ay = a.x_bits() & a.z_bits();
    std::uint64_t az = ~a.x_bits() & a.z_bits();
    std::uint64_t bx = b.x_bits() & ~b.z_bits();
    std::uint64_t by = b.x_bits() & b.z_bits();
    std::uint64_t bz = ~b.x_bits() & b.z_bits();
    // Cyclic pairs XY, YZ, ZX contribute +i; anticyclic pairs contribute -i.
    int plus = std::popcount((ax & by) | (ay & bz) | (az & bx));
    int minus = std::popcount((ay & bx) | (az & by) | (ax & bz));
    QuarterPhase phase = a.phase() * b.phase() * QuarterPhase(plus - minus);
    return {a.n(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(), phase};
}

PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) { return multiply(a, b); }

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    if (a.n() != b.n()) {
        throw DimensionError("commutes: qubit counts differ");
    }
    int symplectic = std::popcount((a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits()));
    return (symplectic & 1) == 0;
}

std::size_t y_count(const PauliOperator &op) {
    if (!op.is_xy_only()) {
        throw UnsupportedLetterError("y_count: operator " + op.str() + " contains I or Z");
    }
    return static_cast<std::size_t>(std::popcount(op.y_mask()));
}

}  // namespace ghz
