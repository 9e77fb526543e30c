#include "conf2/linalg.hpp"

#include <bit>
#include <cstddef>
#include <stdexcept>

namespace conf2::f2::kernels {

namespace {

// Below this many words touched per elimination step the fork/join costs more than it saves.
constexpr std::size_t kParallelWords = std::size_t{1} << 14;

} // namespace

std::vector<std::size_t> rref_in_place(F2Matrix& a)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t stride = a.stride();
    if (rows == 0 || cols == 0) return pivots;

    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        const std::size_t w0 = c / kWordBits;
        const Word mask = Word{1} << (c % kWordBits);

        std::size_t p = lead;
        while (p < rows && (a.row_words(p)[w0] & mask) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(lead, p);

        // The pivot row is zero left of column c, so only words from w0 on change.
        const Word* pivot = a.row_words(lead).data();
        Word* base = a.row_words(0).data();
        const auto n = static_cast<std::ptrdiff_t>(rows);
        const auto piv = static_cast<std::ptrdiff_t>(lead);
#pragma omp parallel for schedule(static) if (rows * (stride - w0) >= kParallelWords)
        for (std::ptrdiff_t r = 0; r < n; ++r) {
            if (r == piv) continue;
            Word* row = base + static_cast<std::size_t>(r) * stride;
            if ((row[w0] & mask) == 0) continue;
            for (std::size_t w = w0; w < stride; ++w) row[w] ^= pivot[w];
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
    F2Matrix c(a.rows(), b.cols());
    const std::size_t stride = b.stride();
    const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 64) if (a.rows() * stride >= kParallelWords)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto ai = a.row_words(static_cast<std::size_t>(i));
        auto ci = c.row_words(static_cast<std::size_t>(i));
        for (std::size_t w = 0; w < ai.size(); ++w) {
            Word bits = ai[w];
            while (bits != 0) {
                const auto k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                const auto bk = b.row_words(k);
                for (std::size_t x = 0; x < stride; ++x) ci[x] ^= bk[x];
                bits &= bits - 1;
            }
        }
    }
    return c;
}

} // namespace conf2::f2::kernels
