#include "ghz/counting.h"

#include <algorithm>
#include <string>

#include "ghz/errors.h"

namespace ghz {

namespace {

void require_domain(std::size_t n) {
    if (n < 2) {
        throw DomainError("contradiction count is defined for n >= 2, got " + std::to_string(n));
    }
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // Exact at every step: result holds binom(n - k + i, i).
        result = result * (n - k + i) / i;
    }
    return result;
}

BigInt c_n_binomial(std::size_t n) {
    require_domain(n);
    BigInt total = 0;
    for (std::size_t k = 3; k <= n; k += 4) {
        total += binomial(n, k);
    }
    return total;
}

BigInt trend_deviation(std::size_t n) {
    require_domain(n);
    // sin(n pi/4) by n mod 8: 0, r, 1, r, 0, -r, -1, -r with r = sqrt(2)/2.
    // Even n: 2^{(n-2)/2} * {0, +-1}.  Odd n: 2^{(n-2)/2} * sqrt(2)/2 = 2^{(n-3)/2}.
    switch (n % 8) {
        case 0:
        case 4:
            return 0;
        case 2:
            return pow2((n - 2) / 2);
        case 6:
            return -pow2((n - 2) / 2);
        case 1:
        case 3:
            return pow2((n - 3) / 2);
        default:  // 5, 7
            return -pow2((n - 3) / 2);
    }
}

BigInt c_n_closed(std::size_t n) {
    require_domain(n);
    return pow2(n - 2) - trend_deviation(n);
}

std::vector<CountReport> table1(std::size_t n_min, std::size_t n_max) {
    if (n_min < 2 || n_min > n_max) {
        throw DomainError("table1: need 2 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                          std::to_string(n_max));
    }
    std::vector<CountReport> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        CountReport row;
        row.n = n;
        row.closed_form_value = c_n_closed(n);
        row.binomial_value = c_n_binomial(n);
        row.c_n = row.binomial_value;
        row.compatible = pow2(n) - 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ghz
