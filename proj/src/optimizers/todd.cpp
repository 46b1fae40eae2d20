#include "topt/optimizers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace topt {

namespace {

using Word = std::uint64_t;

inline bool test_bit(const Word* row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1U; }

inline std::size_t lowest_bit(const Word* row, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
    return SIZE_MAX;
}

// Row-space basis over GF(2) built by streaming insertion. Row i is zero at the
// pivots of rows 0..i-1; its pivot is its lowest set bit.
class Eliminator {
public:
    Eliminator(std::size_t width, std::uint64_t* ops) : words_((width + 63) / 64), ops_(ops) {}

    std::size_t size() const noexcept { return pivots_.size(); }
    std::size_t words() const noexcept { return words_; }
    const Word* row(std::size_t i) const { return data_.data() + i * words_; }
    std::size_t pivot(std::size_t i) const { return pivots_[i]; }

    void reduce(Word* v) const {
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            if (test_bit(v, pivots_[i])) xor_into(v, row(i));
        }
    }

    // Returns true if the row enlarged the span.
    bool insert(std::vector<Word>& v) {
        reduce(v.data());
        const std::size_t p = lowest_bit(v.data(), words_);
        if (p == SIZE_MAX) return false;
        data_.insert(data_.end(), v.begin(), v.end());
        pivots_.push_back(p);
        return true;
    }

    void xor_into(Word* dst, const Word* src) const {
        for (std::size_t w = 0; w < words_; ++w) dst[w] ^= src[w];
        *ops_ += words_;
    }

    // Reduced row echelon form: rows sorted by pivot, each pivot column a unit.
    void make_reduced() {
        std::vector<std::size_t> order(pivots_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        std::vector<Word> sorted;
        std::vector<std::size_t> piv;
        sorted.reserve(data_.size());
        for (auto i : order) {
            sorted.insert(sorted.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * words_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * words_));
            piv.push_back(pivots_[i]);
        }
        data_ = std::move(sorted);
        pivots_ = std::move(piv);
        for (std::size_t i = pivots_.size(); i-- > 0;) {
            for (std::size_t j = 0; j < i; ++j) {
                Word* rj = data_.data() + j * words_;
                if (test_bit(rj, pivots_[i])) xor_into(rj, row(i));
            }
        }
    }

private:
    std::size_t words_;
    std::uint64_t* ops_;
    std::vector<Word> data_;
    std::vector<std::size_t> pivots_;
};

struct Search {
    bool found = false;
    std::size_t a = 0, b = 0;
    BitVec y;
};

Search find_reduction(const std::vector<BitVec>& cols, std::size_t n, ToddStats& stats) {
    const std::size_t m = cols.size();
    const std::size_t W = (m + 63) / 64;
    std::uint64_t& ops = stats.word_ops;

    // Rows of A and all pairwise ANDs r_b & r_g.
    std::vector<Word> rows(n * W, 0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            if (cols[j].get(r)) rows[r * W + j / 64] |= Word{1} << (j % 64);
        }
    }
    std::vector<Word> ands(n * n * W, 0);
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t g = b + 1; g < n; ++g) {
            Word* dst = ands.data() + (b * n + g) * W;
            for (std::size_t w = 0; w < W; ++w) dst[w] = rows[b * W + w] & rows[g * W + w];
            ops += W;
        }
    }
    auto P = [&](std::size_t b, std::size_t g) { return ands.data() + (b * n + g) * W; };

    Eliminator base(m, &ops);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Word> v(rows.begin() + static_cast<std::ptrdiff_t>(r * W),
                            rows.begin() + static_cast<std::ptrdiff_t>((r + 1) * W));
        base.insert(v);
    }

    std::vector<Word> u(W), chi_row(W);
    std::vector<std::size_t> zs;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            ++stats.pairs_tested;
            const BitVec z = cols[a] ^ cols[b];
            zs.clear();
            for (std::size_t r = 0; r < n; ++r) {
                if (z.get(r)) zs.push_back(r);
            }
            std::fill(u.begin(), u.end(), 0);
            u[a / 64] ^= Word{1} << (a % 64);
            u[b / 64] ^= Word{1} << (b % 64);
            base.reduce(u.data());
            if (lowest_bit(u.data(), W) == SIZE_MAX) continue;

            // Some null vector y of [A; chi(A,z)] has y_a != y_b iff e_a + e_b
            // stays outside the row space.
            Eliminator elim = base;
            bool alive = true;
            for (std::size_t al = 0; al < n && alive; ++al) {
                for (std::size_t be = al + 1; be < n && alive; ++be) {
                    for (std::size_t ga = be + 1; ga < n && alive; ++ga) {
                        const bool za = z.get(al), zb = z.get(be), zg = z.get(ga);
                        if (!(za || zb || zg)) continue;
                        std::fill(chi_row.begin(), chi_row.end(), 0);
                        if (za) elim.xor_into(chi_row.data(), P(be, ga));
                        if (zb) elim.xor_into(chi_row.data(), P(al, ga));
                        if (zg) elim.xor_into(chi_row.data(), P(al, be));
                        if (!elim.insert(chi_row)) continue;
                        const std::size_t k = elim.size() - 1;
                        if (test_bit(u.data(), elim.pivot(k))) {
                            elim.xor_into(u.data(), elim.row(k));
                            if (lowest_bit(u.data(), W) == SIZE_MAX) alive = false;
                        }
                    }
                }
            }
            if (!alive) continue;

            // Canonical null basis: first free column whose vector splits a and b.
            elim.make_reduced();
            std::vector<std::size_t> row_of(m, SIZE_MAX);
            for (std::size_t i = 0; i < elim.size(); ++i) row_of[elim.pivot(i)] = i;
            auto y_at = [&](std::size_t idx, std::size_t f) {
                if (idx == f) return true;
                if (row_of[idx] == SIZE_MAX) return false;
                return test_bit(elim.row(row_of[idx]), f);
            };
            for (std::size_t f = 0; f < m; ++f) {
                if (row_of[f] != SIZE_MAX) continue;
                if (y_at(a, f) == y_at(b, f)) continue;
                Search s;
                s.found = true;
                s.a = a;
                s.b = b;
                s.y = BitVec::unit(m, f);
                for (std::size_t i = 0; i < elim.size(); ++i) {
                    if (test_bit(elim.row(i), f)) s.y.set(elim.pivot(i));
                }
                return s;
            }
            throw std::logic_error("todd: split vector expected but not found");
        }
    }
    return {};
}

}  // namespace

GateSynthesisMatrix todd(const GateSynthesisMatrix& A, ToddStats* stats, const ToddObserver& observer) {
    ToddStats local;
    ToddStats& st = stats ? *stats : local;
    const std::size_t n = A.rows();
    BitMatrix cur = proper(A);
    if (observer) observer(cur);
    for (;;) {
        std::vector<BitVec> cols = cur.columns();
        if (cols.size() < 2) break;
        Search s = find_reduction(cols, n, st);
        if (!s.found) break;
        if (s.y.weight() % 2 == 1) {
            cols.emplace_back(n);
            s.y.push_back(true);
        }
        const BitVec z = cols[s.a] ^ cols[s.b];
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (s.y.get(j)) cols[j] ^= z;
        }
        cur = proper(BitMatrix::from_columns(n, cols));
        ++st.iterations;
        if (observer) observer(cur);
    }
    return cur;
}

}  // namespace topt
