#include "topt/optimizers.hpp"

#include <vector>

namespace topt {

namespace {

void push(std::vector<BitVec>& cols, const BitVec& v, long long copies) {
    for (Z8 k = 0; k < z8(copies); ++k) cols.push_back(v);
}

}  // namespace

GateSynthesisMatrix re_expand(const WeightedPolynomial& f) {
    const std::size_t n = f.n();
    std::vector<BitVec> cols;
    auto e = [n](std::size_t i) { return BitVec::unit(n, i); };
    for (std::size_t a = 0; a < n; ++a) push(cols, e(a), f.l(a));
    // 2ab = a + b - (a^b)
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const long long q = f.q(a, b);
            if (q == 0) continue;
            push(cols, e(a), q);
            push(cols, e(b), q);
            push(cols, e(a) ^ e(b), -q);
        }
    }
    // 4abc = a + b + c - (a^b) - (a^c) - (b^c) + (a^b^c)
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t g = b + 1; g < n; ++g) {
                const long long c = f.c(a, b, g);
                if (c == 0) continue;
                push(cols, e(a), c);
                push(cols, e(b), c);
                push(cols, e(g), c);
                push(cols, e(a) ^ e(b), -c);
                push(cols, e(a) ^ e(g), -c);
                push(cols, e(b) ^ e(g), -c);
                push(cols, e(a) ^ e(b) ^ e(g), c);
            }
        }
    }
    return BitMatrix::from_columns(n, cols);
}

}  // namespace topt
