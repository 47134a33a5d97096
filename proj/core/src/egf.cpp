#include "patternhom/egf.hpp"

#include <algorithm>
#include <cmath>

namespace patternhom {

Egf Egf::truncated(int order) const {
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order && n <= this->order(); ++n) c[static_cast<std::size_t>(n)] = e_[static_cast<std::size_t>(n)];
    return Egf(std::move(c));
}

Egf product(const Egf& a, const Egf& b) {
    const int N = std::min(a.order(), b.order());
    BinomialTable binom(N);
    Egf out = Egf::zero(N);
    for (int n = 0; n <= N; ++n) {
        BigInt acc = 0;
        for (int k = 0; k <= n; ++k) acc += binom(n, k) * a[k] * b[n - k];
        out[n] = acc;
    }
    return out;
}

Egf invert(const Egf& h) {
    if (h.order() < 0 || (h[0] != 1 && h[0] != -1))
        throw InvalidInput("series inversion requires a unit constant term");
    const int N = h.order();
    BinomialTable binom(N);
    Egf g = Egf::zero(N);
    g[0] = h[0];
    for (int n = 1; n <= N; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) acc += binom(n, k) * h[k] * g[n - k];
        g[n] = -h[0] * acc;
    }
    return g;
}

namespace {

Egf kernel_from_counts(const std::map<std::pair<int, int>, BigInt>& counts, int n_max) {
    Egf e = Egf::zero(n_max);
    e[0] = 1;
    if (n_max >= 1) e[1] = -1;
    for (const auto& [nq, v] : counts) {
        const auto& [n, q] = nq;
        if (q < 2 || n > n_max) continue;
        if (q % 2 == 0)
            e[n] += v;
        else
            e[n] -= v;
    }
    return e;
}

}  // namespace

Egf kernel_from_chains(const ChainTable& table) {
    return kernel_from_counts(table.counts, table.n_max);
}

Egf kernel_from_clusters(const ClusterTable& table) {
    return kernel_from_counts(table.counts, table.n_max);
}

Egf count_avoiders_via_chains(const PatternSet& P, int n_max) {
    return invert(kernel_from_chains(enumerate_chains(P, n_max)));
}

Egf count_avoiders_via_clusters(const PatternSet& P, int n_max) {
    return invert(kernel_from_clusters(enumerate_clusters(P, n_max)));
}

Egf GsKernelPoly::to_egf(int order) const {
    Egf e = Egf::zero(order);
    for (int k = 0; k <= std::min(order, degree()); ++k) e[k] = numerators[static_cast<std::size_t>(k)];
    return e;
}

double GsKernelPoly::eval(double t) const {
    // sum_k numerators[k] t^k / k! with a running term
    double term = 1.0, acc = 0.0;
    for (int k = 0; k <= degree(); ++k) {
        acc += static_cast<double>(numerators[static_cast<std::size_t>(k)]) * term;
        term *= t / (k + 1);
    }
    return acc;
}

double GsKernelPoly::eval_derivative(double t) const {
    double term = 1.0, acc = 0.0;
    for (int k = 1; k <= degree(); ++k) {
        acc += static_cast<double>(numerators[static_cast<std::size_t>(k)]) * term;
        term *= t / k;
    }
    return acc;
}

GsKernelPoly gs_kernel(const PatternSet& P) {
    GsKernelPoly f;
    f.numerators.assign(static_cast<std::size_t>(P.max_length()) + 1, 0);
    f.numerators[0] = 1;
    f.numerators[1] = -1;
    for (int k = 2; k <= P.max_length(); ++k)
        f.numerators[static_cast<std::size_t>(k)] = P.count_of_length(k);
    return f;
}

GsKernelPoly gs_kernel_from_coeffs(std::vector<BigInt> coeffs) {
    if (coeffs.empty() || coeffs[0] != 1)
        throw InvalidInput("kernel coefficient list requires constant term 1");
    GsKernelPoly f;
    f.numerators = std::move(coeffs);
    return f;
}

bool verify_gs_inequality(const PatternSet& P, int n_max) {
    const Egf g = count_avoiders_via_chains(P, n_max);
    const Egf prod = product(gs_kernel(P).to_egf(n_max), g);
    if (prod[0] != 1) return false;
    for (int n = 1; n <= n_max; ++n)
        if (prod[n] < 0) return false;
    return true;
}

std::optional<RootBracket> smallest_positive_root(const GsKernelPoly& f, double tol,
                                                  double horizon) {
    if (tol <= 0) throw InvalidInput("tolerance must be positive");
    // Bracket the minimizer via the increasing derivative: double until f' > 0.
    double lo = 0.0, hi = 0.0;
    for (double step = 1.0 / 1024.0; hi < horizon; step *= 2) {
        const double cand = std::min(horizon, hi + step);
        if (f.eval_derivative(cand) > 0) {
            lo = hi;
            hi = cand;
            break;
        }
        hi = cand;
    }
    double t_min = horizon;
    if (f.eval_derivative(hi) > 0) {
        for (int i = 0; i < 200 && hi - lo > tol * 0.25; ++i) {
            const double mid = 0.5 * (lo + hi);
            (f.eval_derivative(mid) > 0 ? hi : lo) = mid;
        }
        t_min = 0.5 * (lo + hi);
    }
    if (f.eval(t_min) > 0) return std::nullopt;  // stays positive: no root
    // f(0) = 1 > 0 >= f(t_min): bisect for the first crossing.
    RootBracket b{0.0, t_min};
    for (int i = 0; i < 400 && b.width() > tol; ++i) {
        const double mid = b.midpoint();
        (f.eval(mid) > 0 ? b.lower : b.upper) = mid;
    }
    return b;
}

std::optional<double> asymptotic_lower_bound(const GsKernelPoly& f, int n, double tol) {
    auto root = smallest_positive_root(f, tol);
    if (!root) return std::nullopt;
    double value = 1.0;
    for (int i = 1; i <= n; ++i) value *= i / root->upper;
    return value;
}

std::optional<double> asymptotic_lower_bound(const PatternSet& P, int n, double tol) {
    return asymptotic_lower_bound(gs_kernel(P), n, tol);
}

std::vector<std::string> to_decimal_strings(const Egf& f) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(f.order()) + 1);
    for (int n = 0; n <= f.order(); ++n) out.push_back(f[n].str());
    return out;
}

}  // namespace patternhom
