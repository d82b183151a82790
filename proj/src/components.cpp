#include "circfn/components.hpp"

#include <cmath>
#include <utility>

namespace circfn {

ScalarFunction component(ScalarFunction f, Order n, std::size_t j) {
    const std::size_t N = n;
    if (j >= N) throw std::invalid_argument("component: index out of range");
    std::vector<Cplx> rot(N), weight(N);
    for (std::size_t k = 0; k < N; ++k) {
        rot[k] = root_of_unity(N, static_cast<long long>(k));
        weight[k] = root_of_unity(N, -static_cast<long long>(j * k)) / static_cast<double>(N);
    }
    return [f = std::move(f), rot = std::move(rot), weight = std::move(weight)](Cplx x) {
        Cplx s = 0.0;
        for (std::size_t k = 0; k < rot.size(); ++k) s += weight[k] * f(rot[k] * x);
        return s;
    };
}

ComponentVector decompose(ScalarFunction f, Order n) {
    ComponentVector out;
    out.n = n;
    out.parts.reserve(out.n);
    for (std::size_t j = 0; j < out.n; ++j) out.parts.push_back(component(f, n, j));
    return out;
}

bool is_type_j(const ScalarFunction& h, Order n, std::size_t j,
               std::span<const Cplx> samples, double tol) {
    const std::size_t N = n;
    if (j >= N) throw std::invalid_argument("is_type_j: index out of range");
    if (samples.empty()) throw std::invalid_argument("is_type_j: empty sample set");
    const Cplx w = root_of_unity(N, 1);
    const Cplx wj = root_of_unity(N, static_cast<long long>(j));
    double worst = 0.0;
    for (const Cplx& x : samples)
        worst = std::max(worst, std::abs(h(w * x) - wj * h(x)));
    return worst <= tol;
}

Circulant circulant_of(const ScalarFunction& f, Order n, Cplx x) {
    const std::size_t N = n;
    std::vector<Cplx> v(N);
    for (std::size_t k = 0; k < N; ++k) v[k] = f(root_of_unity(N, static_cast<long long>(k)) * x);
    std::vector<Cplx> row(N);
    for (std::size_t j = 0; j < N; ++j) {
        Cplx s = 0.0;
        for (std::size_t k = 0; k < N; ++k)
            s += root_of_unity(N, -static_cast<long long>(j * k)) * v[k];
        row[j] = s / static_cast<double>(N);
    }
    return Circulant(std::move(row));
}

Circulant circulant_at(const ComponentVector& f, Cplx x) {
    std::vector<Cplx> row(f.n);
    for (std::size_t j = 0; j < f.n; ++j) row[j] = f.parts[j](x);
    return Circulant(std::move(row));
}

} // namespace circfn
