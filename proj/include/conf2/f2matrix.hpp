#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace conf2::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed vector over the two-element field. Bits past size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector unit(std::size_t size, std::size_t index);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    [[nodiscard]] bool any() const;
    [[nodiscard]] std::size_t popcount() const;
    [[nodiscard]] std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    [[nodiscard]] std::span<const Word> words() const { return words_; }
    [[nodiscard]] std::span<Word> words() { return words_; }

    /// "0110..." with index 0 first.
    [[nodiscard]] std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major matrix over F2, each row padded to whole words.
/// Matrices act on column vectors: (rows x cols) maps F2^cols -> F2^rows.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static F2Matrix from_row_vectors(std::span<const BitVector> rows, std::size_t cols);
    static F2Matrix from_column_vectors(std::span<const BitVector> columns, std::size_t rows);
    static F2Matrix permutation(std::span<const std::size_t> image);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t stride() const { return stride_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    [[nodiscard]] std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    [[nodiscard]] std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    [[nodiscard]] BitVector row(std::size_t r) const;
    [[nodiscard]] BitVector column(std::size_t c) const;
    void set_row(std::size_t r, const BitVector& v);
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    [[nodiscard]] bool row_is_zero(std::size_t r) const;

    /// Copy `block` into this matrix with its (0,0) entry at (row, col).
    void place(std::size_t row, std::size_t col, const F2Matrix& block);

    [[nodiscard]] F2Matrix transpose() const;
    [[nodiscard]] BitVector apply(const BitVector& v) const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t popcount() const;

    /// Rows [first, first+count) as a new matrix.
    [[nodiscard]] F2Matrix row_block(std::size_t first, std::size_t count) const;
    [[nodiscard]] static F2Matrix vstack(const F2Matrix& top, const F2Matrix& bottom);

    F2Matrix& operator+=(const F2Matrix& other);
    friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }
    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend bool operator==(const F2Matrix& a, const F2Matrix& b) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

} // namespace conf2::f2
