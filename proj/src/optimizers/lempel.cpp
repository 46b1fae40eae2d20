#include "topt/optimizers.hpp"

#include <stdexcept>
#include <vector>

namespace topt {

std::size_t lempel_bound(const SignatureMatrix2& S) {
    bool diagonal_zero = true;
    for (std::size_t a = 0; a < S.n(); ++a) diagonal_zero = diagonal_zero && !S.get(a, a);
    return rank(S.matrix()) + (diagonal_zero ? 1 : 0);
}

GateSynthesisMatrix lempel_factor(const SignatureMatrix2& S) {
    const std::size_t n = S.n();
    if (S.matrix().is_zero()) return BitMatrix(n, 0);

    std::vector<BitVec> init;
    for (std::size_t a = 0; a < n; ++a) {
        if (S.get(a, a)) init.push_back(BitVec::unit(n, a));
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!S.get(a, b)) continue;
            init.push_back(BitVec::unit(n, a));
            init.push_back(BitVec::unit(n, b));
            init.push_back(BitVec::unit(n, a) ^ BitVec::unit(n, b));
        }
    }
    std::vector<BitVec> cols = proper(BitMatrix::from_columns(n, init)).columns();
    const std::size_t target = lempel_bound(S);

    for (std::size_t guard = 0; cols.size() > target; ++guard) {
        if (guard > 4 * (init.size() + n) + 16) throw std::logic_error("lempel_factor failed to converge");
        const std::size_t m = cols.size();
        const BitMatrix N = nullspace(BitMatrix::from_columns(n, cols));
        BitVec y;
        for (std::size_t k = 0; k < N.cols(); ++k) {
            BitVec cand = N.column(k);
            const std::size_t w = cand.weight();
            if (w > 0 && w < m) {
                y = std::move(cand);
                break;
            }
        }
        if (y.size() == 0) {
            // Only the all-ones vector annihilates A (m even): pad with a zero
            // column and use y = (1,...,1,0).
            y = BitVec(m + 1);
            for (std::size_t j = 0; j < m; ++j) y.set(j);
            cols.emplace_back(n);
        } else if (y.weight() % 2 == 1) {
            cols.emplace_back(n);
            y.push_back(true);
        }
        std::size_t a = y.size(), b = y.size();
        for (std::size_t j = 0; j < y.size() && (a == y.size() || b == y.size()); ++j) {
            if (y.get(j) && a == y.size()) a = j;
            if (!y.get(j) && b == y.size()) b = j;
        }
        const BitVec z = cols[a] ^ cols[b];
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y.get(j)) cols[j] ^= z;
        }
        // Columns a and b are now equal; their outer products cancel.
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)));
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)));
    }
    return BitMatrix::from_columns(n, cols);
}

}  // namespace topt
