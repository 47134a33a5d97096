#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace patternhom {

// Counts routinely exceed 64 bits (factorially normalized series coefficients),
// so everything arithmetic is exact multiprecision.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Pascal-triangle table; zero outside 0 <= k <= n.
class BinomialTable {
public:
    explicit BinomialTable(int max_n) : rows_(static_cast<std::size_t>(max_n) + 1) {
        for (int n = 0; n <= max_n; ++n) {
            auto& row = rows_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1);
            row[0] = row[static_cast<std::size_t>(n)] = 1;
            for (int k = 1; k < n; ++k)
                row[static_cast<std::size_t>(k)] =
                    rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
                    rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
        }
    }

    const BigInt& operator()(int n, int k) const {
        static const BigInt zero = 0;
        if (n < 0 || k < 0 || k > n || n >= static_cast<int>(rows_.size())) return zero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::vector<std::vector<BigInt>> rows_;
};

}  // namespace patternhom
