#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>

namespace circfn {

using Cplx = std::complex<double>;

/// Order of the component decomposition. Everything downstream of the
/// Fourier/circulant layer assumes a fixed n >= 2.
class Order {
public:
    explicit Order(std::size_t n) : n_(n) {
        if (n < 2) throw std::invalid_argument("Order: n must be >= 2");
    }
    operator std::size_t() const { return n_; }
    std::size_t value() const { return n_; }

private:
    std::size_t n_;
};

} // namespace circfn
