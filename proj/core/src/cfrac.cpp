#include "qlogcvx/cfrac.hpp"

#include <stdexcept>

#include "qlogcvx/triangle.hpp"

namespace qlogcvx {

std::vector<Poly> expand_jacobi(const CoeffSeqSpec& spec, unsigned long n_max) {
    return first_column(generate(spec, n_max));
}

CoeffSeqSpec contract(const CoeffSeqSpec& spec) {
    if (spec.kind() != SpecKind::stieltjes)
        throw std::domain_error("contract consumes a stieltjes spec");
    const auto& odd = spec.t_odd_generic();
    const auto& even = spec.t_even_generic();

    BivariateExpr g = BivariateExpr::add(even, shift_k(odd, 1));
    BivariateExpr h = BivariateExpr::mul(odd, even);

    std::map<unsigned long, Poly> g_exc{{0, spec.t(1)}};
    std::map<unsigned long, Poly> h_exc;
    for (const auto& [n, value] : spec.t_exceptions()) {
        (void)value;
        // t_n feeds g at index n/2 (even) or (n-1)/2 (odd), h at (n+1)/2 or n/2
        unsigned long gi = n % 2 ? (n - 1) / 2 : n / 2;
        unsigned long hi = n % 2 ? (n + 1) / 2 : n / 2;
        if (gi >= 1) g_exc.emplace(gi, spec.t(2 * gi) + spec.t(2 * gi + 1));
        h_exc.emplace(hi, spec.t(2 * hi - 1) * spec.t(2 * hi));
    }
    return CoeffSeqSpec::make_jacobi(std::move(g), std::move(h),
                                     std::move(g_exc), std::move(h_exc));
}

std::vector<Poly> expand_stieltjes(const CoeffSeqSpec& spec,
                                   unsigned long n_max) {
    return expand_jacobi(contract(spec), n_max);
}

}  // namespace qlogcvx
