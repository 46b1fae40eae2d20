#include "topt/optimizers.hpp"

#include "topt/errors.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace topt {

GateSynthesisMatrix rm_decode(const SignatureTensor3& S, std::size_t rm_limit) {
    const std::size_t n = S.n();
    if (rm_limit > kMaxRmLimit) rm_limit = kMaxRmLimit;
    if (n > rm_limit) {
        throw TooLarge("rm_decode: n = " + std::to_string(n) + " exceeds the limit " + std::to_string(rm_limit));
    }
    if (S.is_zero()) return BitMatrix(n, 0);

    // Row per independent entry (monomial T, |T| <= 3), column per nonzero v.
    // Entry = [T subset of supp(v)]; the last word column carries s(S).
    std::vector<std::uint64_t> monomials;
    for (std::size_t a = 0; a < n; ++a) monomials.push_back(std::uint64_t{1} << a);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) monomials.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t g = b + 1; g < n; ++g) {
                monomials.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << g));
            }
        }
    }
    const BitVec s = S.to_vector();
    const std::size_t cols = (std::size_t{1} << n) - 1;  // column j <-> v = j + 1
    const std::uint64_t rhs_bit = std::uint64_t{1} << cols;
    std::vector<std::uint64_t> rows(monomials.size(), 0);
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        for (std::size_t j = 0; j < cols; ++j) {
            const std::uint64_t v = j + 1;
            if ((monomials[r] & v) == monomials[r]) rows[r] |= std::uint64_t{1} << j;
        }
        if (s.get(r)) rows[r] |= rhs_bit;
    }

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t p = lead;
        while (p < rows.size() && !(rows[p] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[lead]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != lead && (rows[r] & bit)) rows[r] ^= rows[lead];
        }
        pivots.push_back(c);
        ++lead;
    }
    for (std::size_t r = lead; r < rows.size(); ++r) {
        if (rows[r] & rhs_bit) throw std::logic_error("rm_decode: inconsistent system");
    }

    std::uint64_t y0 = 0;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (rows[r] & rhs_bit) y0 |= std::uint64_t{1} << pivots[r];
    }
    std::vector<std::uint64_t> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::uint64_t y = std::uint64_t{1} << f;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (rows[r] & (std::uint64_t{1} << f)) y |= std::uint64_t{1} << pivots[r];
        }
        basis.push_back(y);
    }

    // Gray-code walk over the coset y0 + span(basis).
    std::uint64_t cur = y0, best = y0;
    int best_weight = std::popcount(y0);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        const int w = std::popcount(cur);
        if (w < best_weight) {
            best_weight = w;
            best = cur;
        }
    }

    std::vector<BitVec> out;
    for (std::size_t j = 0; j < cols; ++j) {
        if (!(best & (std::uint64_t{1} << j))) continue;
        BitVec v(n);
        for (std::size_t a = 0; a < n; ++a) {
            if ((j + 1) >> a & 1U) v.set(a);
        }
        out.push_back(std::move(v));
    }
    return BitMatrix::from_columns(n, out);
}

}  // namespace topt
