#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace topt {

// Packed vector over GF(2). Padding bits past size() are always zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    static BitVec unit(std::size_t size, std::size_t index);
    static BitVec from_string(const std::string& bits);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);
    bool operator[](std::size_t i) const { return get(i); }

    std::size_t weight() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }
    // Index of the lowest set bit, or size() when zero.
    std::size_t first() const noexcept;
    bool dot(const BitVec& other) const;

    void resize(std::size_t size);
    void push_back(bool value);

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend bool operator==(const BitVec& a, const BitVec& b) = default;
    friend bool operator<(const BitVec& a, const BitVec& b);

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::vector<std::uint64_t>& words() noexcept { return words_; }
    std::string to_string() const;

private:
    void check(std::size_t i) const;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept;
};

// Row-major dense matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);
    static BitMatrix from_columns(std::size_t rows, const std::vector<BitVec>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    const BitVec& row(std::size_t r) const;
    BitVec& row(std::size_t r);
    BitVec column(std::size_t c) const;
    std::vector<BitVec> columns() const;

    void append_row(const BitVec& row);
    void append_column(const BitVec& column);
    // Removes the listed columns (any order, no duplicates).
    void remove_columns(std::vector<std::size_t> indices);

    BitMatrix transpose() const;
    BitVec multiply(const BitVec& x) const;
    bool is_zero() const noexcept;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

struct Echelon {
    BitMatrix reduced;               // reduced row-echelon form, zero rows last
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

Echelon rref(BitMatrix m);
std::size_t rank(const BitMatrix& m);
// Columns are the canonical basis of the right null space: one per free column
// of the RREF, in increasing free-column order.
BitMatrix nullspace(const BitMatrix& m);
BitMatrix invert(const BitMatrix& m);

}  // namespace topt
