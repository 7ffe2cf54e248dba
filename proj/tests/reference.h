#pragma once

// Test-only brute-force linear algebra. Deliberately shares no code with the library's oracle:
// matrices are built from literal 2x2 Pauli tables and combined with textbook Kronecker and
// triple-loop products.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace ref {

using C = std::complex<double>;

struct Matrix {
    std::size_t dim = 0;
    std::vector<C> a;

    explicit Matrix(std::size_t d) : dim(d), a(d * d) {}
    C &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    C operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Matrix letter(char l) {
    Matrix m(2);
    const C i(0, 1);
    switch (l) {
        case 'I':
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 'X':
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 'Y':
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        case 'Z':
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
    }
    return m;
}

inline Matrix kron(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim * y.dim);
    for (std::size_t r1 = 0; r1 < x.dim; ++r1)
        for (std::size_t c1 = 0; c1 < x.dim; ++c1)
            for (std::size_t r2 = 0; r2 < y.dim; ++r2)
                for (std::size_t c2 = 0; c2 < y.dim; ++c2)
                    out(r1 * y.dim + r2, c1 * y.dim + c2) = x(r1, c1) * y(r2, c2);
    return out;
}

inline Matrix mul(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim);
    for (std::size_t r = 0; r < x.dim; ++r)
        for (std::size_t c = 0; c < x.dim; ++c) {
            C acc = 0;
            for (std::size_t k = 0; k < x.dim; ++k) acc += x(r, k) * y(k, c);
            out(r, c) = acc;
        }
    return out;
}

inline Matrix scale(Matrix m, C s) {
    for (auto &v : m.a) v *= s;
    return m;
}

inline Matrix adjoint(const Matrix &m) {
    Matrix out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c) out(c, r) = std::conj(m(r, c));
    return out;
}

/// "-iXYZ" style string -> matrix; leftmost letter is the most significant tensor factor.
inline Matrix pauli(const std::string &text) {
    C phase = 1;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = -1;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase *= C(0, 1);
        ++pos;
    }
    Matrix m(1);
    m(0, 0) = phase;
    for (; pos < text.size(); ++pos) m = kron(m, letter(text[pos]));
    return m;
}

/// Single-qubit factor cos(a) X + sin(a) Y.
inline Matrix xy(double a) {
    return [&] {
        Matrix m(2);
        m(0, 1) = C(std::cos(a), -std::sin(a));
        m(1, 0) = C(std::cos(a), std::sin(a));
        return m;
    }();
}

/// exp(-i Z a / 2) as a 2x2 matrix.
inline Matrix zrot(double a) {
    Matrix m(2);
    m(0, 0) = std::polar(1.0, -a / 2);
    m(1, 1) = std::polar(1.0, a / 2);
    return m;
}

inline Matrix kron_all(const std::vector<Matrix> &factors) {
    Matrix m(1);
    m(0, 0) = 1;
    for (const auto &f : factors) m = kron(m, f);
    return m;
}

inline std::vector<C> apply(const Matrix &m, const std::vector<C> &v) {
    std::vector<C> out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c) out[r] += m(r, c) * v[c];
    return out;
}

inline double max_diff(const Matrix &x, const Matrix &y) {
    double worst = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i) worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    return worst;
}

inline double max_diff(const std::vector<C> &x, const std::vector<C> &y) {
    double worst = 0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
}

/// Random Pauli string text of length n, optional phase prefix.
inline std::string random_pauli_text(std::mt19937_64 &rng, std::size_t n, bool with_phase) {
    static const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string s = with_phase ? kPrefix[rng() % 4] : "+";
    for (std::size_t k = 0; k < n; ++k) s.push_back("IXYZ"[rng() % 4]);
    return s;
}

}  // namespace ref
