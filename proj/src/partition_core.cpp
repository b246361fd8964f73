#include "rpart/partition_table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rpart {

namespace {

void require_limit(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("table limit must be nonnegative");
}

std::uint64_t count_from(const std::vector<std::int64_t>& parts, std::size_t top, std::int64_t rest) {
    if (rest == 0) return 1;
    std::uint64_t total = 0;
    // parts[0..top] are the allowed sizes, largest last
    for (std::size_t i = top + 1; i-- > 0;) {
        if (parts[i] <= rest) total += count_from(parts, i, rest - parts[i]);
    }
    return total;
}

}  // namespace

PartitionTable::PartitionTable(ResidueClassSet set, std::vector<mpz_class> values)
    : set_(std::move(set)), values_(std::move(values)) {
    if (values_.empty() || values_[0] != 1) {
        throw std::invalid_argument("partition table must start with p_A(0) = 1");
    }
}

std::int64_t PartitionTable::first_recursion_violation() const {
    const auto sigma = sigma_A_table(set_, limit());
    mpz_class acc;
    for (std::int64_t n = 1; n <= limit(); ++n) {
        acc = 0;
        for (std::int64_t j = 1; j <= n; ++j) {
            if (sigma[j] != 0) {
                mpz_addmul_ui(acc.get_mpz_t(), values_[n - j].get_mpz_t(),
                              static_cast<unsigned long>(sigma[j]));
            }
        }
        if (acc != values_[n] * n) return n;
    }
    return -1;
}

PartitionTable compute_table_euler(const ResidueClassSet& set, std::int64_t limit) {
    require_limit(limit);
    std::vector<mpz_class> v(static_cast<std::size_t>(limit) + 1, 0);
    v[0] = 1;
    for (auto a : set.elements_up_to(limit)) {
        for (std::int64_t n = a; n <= limit; ++n) v[n] += v[n - a];
    }
    return PartitionTable(set, std::move(v));
}

std::vector<std::int64_t> sigma_A_table(const ResidueClassSet& set, std::int64_t limit) {
    require_limit(limit);
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(limit) + 1, 0);
    for (auto a : set.elements_up_to(limit)) {
        for (std::int64_t j = a; j <= limit; j += a) sigma[j] += a;
    }
    return sigma;
}

std::int64_t sigma_A(const ResidueClassSet& set, std::int64_t j) {
    if (j <= 0) throw std::invalid_argument("sigma_A: j must be positive");
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= j; ++d) {
        if (j % d != 0) continue;
        if (set.contains(d)) s += d;
        const auto e = j / d;
        if (e != d && set.contains(e)) s += e;
    }
    return s;
}

PartitionTable compute_table_recursion(const ResidueClassSet& set, std::int64_t limit) {
    require_limit(limit);
    const auto sigma = sigma_A_table(set, limit);
    std::vector<mpz_class> v(static_cast<std::size_t>(limit) + 1, 0);
    v[0] = 1;
    mpz_class acc;
    mpz_class rem;
    for (std::int64_t n = 1; n <= limit; ++n) {
        acc = 0;
        for (std::int64_t j = 1; j <= n; ++j) {
            if (sigma[j] != 0 && v[n - j] != 0) {
                mpz_addmul_ui(acc.get_mpz_t(), v[n - j].get_mpz_t(),
                              static_cast<unsigned long>(sigma[j]));
            }
        }
        const auto r = mpz_fdiv_q_ui(v[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        if (r != 0) {
            throw std::logic_error("recursion identity broken: " + std::to_string(n) +
                                   " does not divide the kernel sum for " + set.describe());
        }
    }
    return PartitionTable(set, std::move(v));
}

std::vector<mpz_class> distinct_parts_table(std::int64_t limit) {
    require_limit(limit);
    std::vector<mpz_class> q(static_cast<std::size_t>(limit) + 1, 0);
    q[0] = 1;
    for (std::int64_t part = 1; part <= limit; ++part) {
        for (std::int64_t n = limit; n >= part; --n) q[n] += q[n - part];
    }
    return q;
}

std::uint64_t brute_force_count(const ResidueClassSet& set, std::int64_t n) {
    if (n < 0 || n > kBruteForceLimit) {
        throw std::invalid_argument("brute_force_count supports 0 <= n <= " +
                                    std::to_string(kBruteForceLimit));
    }
    if (n == 0) return 1;
    const auto parts = set.elements_up_to(n);
    if (parts.empty()) return 0;
    return count_from(parts, parts.size() - 1, n);
}

double log_value(const mpz_class& p) {
    if (sgn(p) <= 0) throw std::domain_error("log_value: argument must be >= 1");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, p.get_mpz_t());
    const long double ln2 = 0.693147180559945309417232121458176568L;
    return static_cast<double>(std::log(static_cast<long double>(mant)) +
                               static_cast<long double>(exp2) * ln2);
}

}  // namespace rpart
