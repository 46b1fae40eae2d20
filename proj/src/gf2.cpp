#include "topt/gf2.hpp"

#include "topt/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace topt {

namespace {

constexpr std::size_t kWord = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWord - 1) / kWord; }

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
    BitVec v(size);
    v.set(index);
    return v;
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain 0 and 1");
        }
    }
    return v;
}

void BitVec::check(std::size_t i) const {
    if (i >= size_) {
        throw std::out_of_range("bit index " + std::to_string(i) + " out of range " + std::to_string(size_));
    }
}

bool BitVec::get(std::size_t i) const {
    check(i);
    return (words_[i / kWord] >> (i % kWord)) & 1U;
}

void BitVec::set(std::size_t i, bool value) {
    check(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % kWord);
    if (value) {
        words_[i / kWord] |= mask;
    } else {
        words_[i / kWord] &= ~mask;
    }
}

void BitVec::flip(std::size_t i) {
    check(i);
    words_[i / kWord] ^= std::uint64_t{1} << (i % kWord);
}

std::size_t BitVec::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVec::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) return k * kWord + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
}

bool BitVec::dot(const BitVec& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVec::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

void BitVec::resize(std::size_t size) {
    words_.resize(word_count(size), 0);
    if (size < size_ && size % kWord != 0) {
        words_.back() &= (std::uint64_t{1} << (size % kWord)) - 1;
    }
    size_ = size;
}

void BitVec::push_back(bool value) {
    resize(size_ + 1);
    if (value) set(size_ - 1);
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec and: length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
}

bool operator<(const BitVec& a, const BitVec& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t k = a.words_.size(); k-- > 0;) {
        if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    }
    return false;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (auto w : v.words()) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        m.data_[r] = BitVec::from_string(rows[r]);
    }
    return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, const std::vector<BitVec>& columns) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("BitMatrix::from_columns: length mismatch");
        for (std::size_t r = 0; r < rows; ++r) {
            if (columns[c].get(r)) m.data_[r].set(c);
        }
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const { return row(r).get(c); }
void BitMatrix::set(std::size_t r, std::size_t c, bool value) { row(r).set(c, value); }
void BitMatrix::flip(std::size_t r, std::size_t c) { row(r).flip(c); }

const BitVec& BitMatrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("row index out of range");
    return data_[r];
}

BitVec& BitMatrix::row(std::size_t r) {
    if (r >= rows_) throw std::out_of_range("row index out of range");
    return data_[r];
}

BitVec BitMatrix::column(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("column index out of range");
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].get(c)) v.set(r);
    }
    return v;
}

std::vector<BitVec> BitMatrix::columns() const {
    std::vector<BitVec> out(cols_, BitVec(rows_));
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& words = data_[r].words();
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::uint64_t w = words[k];
            while (w != 0) {
                const std::size_t c = k * kWord + static_cast<std::size_t>(std::countr_zero(w));
                out[c].set(r);
                w &= w - 1;
            }
        }
    }
    return out;
}

void BitMatrix::append_row(const BitVec& row) {
    if (row.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    data_.push_back(row);
    ++rows_;
}

void BitMatrix::append_column(const BitVec& column) {
    if (column.size() != rows_) throw std::invalid_argument("append_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) data_[r].push_back(column.get(r));
    ++cols_;
}

void BitMatrix::remove_columns(std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw std::invalid_argument("remove_columns: duplicate index");
    }
    if (!indices.empty() && indices.back() >= cols_) throw std::out_of_range("remove_columns: index out of range");
    std::vector<BitVec> cols = columns();
    std::vector<BitVec> kept;
    kept.reserve(cols_ - indices.size());
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (next < indices.size() && indices[next] == c) {
            ++next;
            continue;
        }
        kept.push_back(std::move(cols[c]));
    }
    *this = from_columns(rows_, kept);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& words = data_[r].words();
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::uint64_t w = words[k];
            while (w != 0) {
                t.data_[k * kWord + static_cast<std::size_t>(std::countr_zero(w))].set(r);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitVec BitMatrix::multiply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::multiply: length mismatch");
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(x)) y.set(r);
    }
    return y;
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const BitVec& r) { return r.none(); });
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix product: shape mismatch");
    BitMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        const auto& words = a.data_[r].words();
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::uint64_t w = words[k];
            while (w != 0) {
                p.data_[r] ^= b.data_[k * kWord + static_cast<std::size_t>(std::countr_zero(w))];
                w &= w - 1;
            }
        }
    }
    return p;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += data_[r].to_string();
        s += '\n';
    }
    return s;
}

Echelon rref(BitMatrix m) {
    Echelon out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && !m.row(pivot).get(c)) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(m.row(pivot), m.row(lead));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != lead && m.row(r).get(c)) m.row(r) ^= m.row(lead);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix nullspace(const BitMatrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec y = BitVec::unit(m.cols(), f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (e.reduced.get(r, f)) y.set(e.pivots[r]);
        }
        basis.push_back(std::move(y));
    }
    return BitMatrix::from_columns(m.cols(), basis);
}

BitMatrix invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    BitMatrix work(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m.get(r, c)) work.set(r, c);
        }
        work.set(r, n + r);
    }
    const Echelon e = rref(work);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (e.reduced.get(r, n + c)) inv.set(r, c);
        }
    }
    return inv;
}

}  // namespace topt
