// Serial reference implementations. These are the straightforward textbook loops;
// the OpenMP kernels in f2_kernels.cpp must agree with them bit for bit.

#include "conf2/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace conf2::f2::reference {

RrefResult rref(const F2Matrix& m)
{
    RrefResult out{m, {}};
    F2Matrix& a = out.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(lead, p);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != lead && a.get(r, c)) a.add_row(r, lead);
        out.pivots.push_back(c);
        ++lead;
    }
    return out;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
    F2Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool acc = false;
            for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) && b.get(k, j);
            c.set(i, j, acc);
        }
    return c;
}

} // namespace conf2::f2::reference
