#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghz {

using BigInt = boost::multiprecision::cpp_int;

/// One row of the contradiction table.
struct CountReport {
    std::size_t n = 0;
    BigInt c_n;
    /// 2^n - 1 mutually commuting products of the single-Y generators.
    BigInt compatible;
    BigInt closed_form_value;
    BigInt binomial_value;
};

/// Exact binomial coefficient.
BigInt binomial(std::size_t n, std::size_t k);

/// sum_j binom(n, 3 + 4j). Throws DomainError for n < 2.
BigInt c_n_binomial(std::size_t n);

/// 2^{n-2} - 2^{(n-2)/2} sin(n pi/4), evaluated by cases on n mod 8 without floating point.
BigInt c_n_closed(std::size_t n);

/// Signed 2^{(n-2)/2} sin(n pi/4) as an exact integer (the oscillation about 2^{n-2}).
BigInt trend_deviation(std::size_t n);

/// One report per n in [n_min, n_max]; throws DomainError unless 2 <= n_min <= n_max.
std::vector<CountReport> table1(std::size_t n_min, std::size_t n_max);

}  // namespace ghz
