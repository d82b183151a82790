#pragma once

#include <functional>
#include <span>

#include "circfn/circulant.hpp"
#include "circfn/types.hpp"

namespace circfn {

using ScalarFunction = std::function<Cplx(Cplx)>;

/// The ordered components (f_0, ..., f_{n-1}) of a function, f_j of type j.
struct ComponentVector {
    std::size_t n = 0;
    std::vector<ScalarFunction> parts;
};

/// Component j of f: x -> (1/n) sum_k w^{-jk} f(w^k x). Each evaluation of
/// the returned closure costs n calls to f; callers may memoize.
ScalarFunction component(ScalarFunction f, Order n, std::size_t j);

/// All n components at once; sum of parts reproduces f pointwise.
ComponentVector decompose(ScalarFunction f, Order n);

/// True iff max over samples of |h(w x) - w^j h(x)| <= tol.
bool is_type_j(const ScalarFunction& h, Order n, std::size_t j,
               std::span<const Cplx> samples, double tol);

/// circ(f_0(x), ..., f_{n-1}(x)), the circulant matrix function of f at x.
/// Costs n calls to f (the component filter shares the f(w^k x) values).
Circulant circulant_of(const ScalarFunction& f, Order n, Cplx x);

/// Same matrix for components that are already split out.
Circulant circulant_at(const ComponentVector& f, Cplx x);

} // namespace circfn
