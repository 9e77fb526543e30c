#include "conf2/f2matrix.hpp"
#include "conf2/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace conf2::f2 {

BitVector BitVector::from_bits(std::initializer_list<int> bits)
{
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, (b & 1) != 0);
    return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t index)
{
    BitVector v(size);
    v.set(index);
    return v;
}

void BitVector::set(std::size_t i, bool value)
{
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_) throw std::invalid_argument("BitVector: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    F2Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("F2Matrix::from_rows: ragged rows");
        std::size_t c = 0;
        for (int b : row) m.set(r, c++, (b & 1) != 0);
        ++r;
    }
    return m;
}

F2Matrix F2Matrix::from_row_vectors(std::span<const BitVector> rows, std::size_t cols)
{
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

F2Matrix F2Matrix::from_column_vectors(std::span<const BitVector> columns, std::size_t rows)
{
    F2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("F2Matrix::from_column_vectors: size mismatch");
        for (std::size_t r : columns[c].support()) m.set(r, c);
    }
    return m;
}

F2Matrix F2Matrix::permutation(std::span<const std::size_t> image)
{
    F2Matrix m(image.size(), image.size());
    for (std::size_t c = 0; c < image.size(); ++c) m.set(image[c], c);
    return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

BitVector F2Matrix::row(std::size_t r) const
{
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

BitVector F2Matrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

void F2Matrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix::set_row: size mismatch");
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void F2Matrix::add_row(std::size_t dst, std::size_t src)
{
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool F2Matrix::row_is_zero(std::size_t r) const
{
    const auto w = row_words(r);
    return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

void F2Matrix::place(std::size_t row, std::size_t col, const F2Matrix& block)
{
    if (row + block.rows_ > rows_ || col + block.cols_ > cols_)
        throw std::out_of_range("F2Matrix::place: block does not fit");
    for (std::size_t r = 0; r < block.rows_; ++r) {
        const auto src = block.row_words(r);
        for (std::size_t w = 0; w < block.stride_; ++w) {
            Word bits = src[w];
            while (bits != 0) {
                const auto c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                set(row + r, col + c);
                bits &= bits - 1;
            }
        }
    }
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto src = row_words(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = src[w];
            while (bits != 0) {
                const auto c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitVector F2Matrix::apply(const BitVector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix::apply: size mismatch");
    BitVector out(rows_);
    const auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto rw = row_words(r);
        Word acc = 0;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= rw[w] & vw[w];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

bool F2Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t F2Matrix::popcount() const
{
    std::size_t n = 0;
    for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

F2Matrix F2Matrix::row_block(std::size_t first, std::size_t count) const
{
    if (first + count > rows_) throw std::out_of_range("F2Matrix::row_block");
    F2Matrix m(count, cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * stride_), count * stride_, m.data_.begin());
    return m;
}

F2Matrix F2Matrix::vstack(const F2Matrix& top, const F2Matrix& bottom)
{
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("F2Matrix::vstack: column mismatch");
    F2Matrix m(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return m;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other)
{
    if (other.rows_ != rows_ || other.cols_ != cols_) throw std::invalid_argument("F2Matrix: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
    return *this;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) { return kernels::multiply(a, b); }

std::string F2Matrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

} // namespace conf2::f2
