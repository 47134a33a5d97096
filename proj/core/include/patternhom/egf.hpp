#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patternhom/bigint.hpp"
#include "patternhom/chains.hpp"
#include "patternhom/permutation.hpp"

namespace patternhom {

// Truncated exponential generating function with exact integer coefficients
// e_n = n! * [t^n]. Every series in scope (kernels, avoider EGFs, cleared
// Golod-Shafarevich products) has integer entries in this normalization.
class Egf {
public:
    Egf() = default;
    explicit Egf(std::vector<BigInt> coeffs) : e_(std::move(coeffs)) {}

    static Egf zero(int order) { return Egf(std::vector<BigInt>(static_cast<std::size_t>(order) + 1)); }

    int order() const { return static_cast<int>(e_.size()) - 1; }
    const BigInt& operator[](int n) const { return e_[static_cast<std::size_t>(n)]; }
    BigInt& operator[](int n) { return e_[static_cast<std::size_t>(n)]; }
    const std::vector<BigInt>& coeffs() const { return e_; }

    Egf truncated(int order) const;

    friend bool operator==(const Egf&, const Egf&) = default;

private:
    std::vector<BigInt> e_;
};

// Binomial convolution: (ab)_n = sum_k C(n,k) a_k b_{n-k}, truncated to the
// smaller order. This is the EGF product in the n!-normalized representation.
Egf product(const Egf& a, const Egf& b);

// Multiplicative inverse: g with sum_k C(n,k) h_k g_{n-k} = [n = 0]. Requires
// a unit constant term (h_0 = +-1); exact integers throughout.
Egf invert(const Egf& h);

// Kernel 1 - t + sum_{q>=2,n} (-1)^q c_{n,q} t^n / n! whose reciprocal is the
// avoider EGF.
Egf kernel_from_chains(const ChainTable& table);
Egf kernel_from_clusters(const ClusterTable& table);

// enumerate_chains -> kernel -> invert; e_n = a^P_n.
Egf count_avoiders_via_chains(const PatternSet& P, int n_max);
// Same pipeline over clusters; agrees with the chain route coefficientwise.
Egf count_avoiders_via_clusters(const PatternSet& P, int n_max);

// The polynomial 1 - t + sum_{k>=2} |P_k| t^k / k!, stored exactly as the
// integer numerators over k! (identical normalization to Egf). Supports the
// general coefficient-list form for hand-built kernels such as degree-N
// truncations of e^t - 2t - t^2/2 - t^3/6.
struct GsKernelPoly {
    std::vector<BigInt> numerators;  // numerators[k] = k! * [t^k]

    int degree() const { return static_cast<int>(numerators.size()) - 1; }
    Egf to_egf(int order) const;  // zero-extended / truncated copy
    double eval(double t) const;
    double eval_derivative(double t) const;
};

GsKernelPoly gs_kernel(const PatternSet& P);
// Validates the unit constant term; any integer e_n list is accepted.
GsKernelPoly gs_kernel_from_coeffs(std::vector<BigInt> coeffs);

// Coefficient-wise check that gs_kernel(P) * g_P >= 1, i.e. the product has
// constant term 1 and nonnegative coefficients through n_max.
bool verify_gs_inequality(const PatternSet& P, int n_max);

struct RootBracket {
    double lower = 0.0;  // f(lower) > 0
    double upper = 0.0;  // f(upper) <= 0

    double width() const { return upper - lower; }
    double midpoint() const { return 0.5 * (lower + upper); }
};

// Smallest positive root of the kernel polynomial, bracketed to tol. The
// kernels in scope are convex (1 - t plus nonnegative terms), so the search
// brackets the minimizer of f via its increasing derivative (doubling steps up
// to the horizon, then bisection) and bisects f on [0, t_min]. Returns nullopt
// when f stays positive: the bound is inapplicable, not an error.
std::optional<RootBracket> smallest_positive_root(const GsKernelPoly& f, double tol = 1e-12,
                                                  double horizon = 64.0);

// alpha^{-n} n! evaluated at the upper bracket end, so the returned value is a
// genuine lower bound for a^P_n up to root tolerance. nullopt when the kernel
// has no positive root.
std::optional<double> asymptotic_lower_bound(const PatternSet& P, int n, double tol = 1e-12);

std::optional<double> asymptotic_lower_bound(const GsKernelPoly& f, int n, double tol = 1e-12);

// Series exchange format: decimal strings for e_0..e_N.
std::vector<std::string> to_decimal_strings(const Egf& f);

}  // namespace patternhom
