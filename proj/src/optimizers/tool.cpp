#include "topt/optimizers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace topt {

namespace {

std::vector<std::size_t> eligible_variables(const SignatureTensor3& S) {
    const std::size_t n = S.n();
    std::vector<bool> hit(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        if (S.l(a)) hit[a] = true;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (S.q(a, b)) hit[a] = hit[b] = true;
            for (std::size_t g = b + 1; g < n; ++g) {
                if (S.c(a, b, g)) hit[a] = hit[b] = hit[g] = true;
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < n; ++a) {
        if (hit[a]) out.push_back(a);
    }
    return out;
}

SignatureTensor3 restrict_to(const SignatureTensor3& S, const std::vector<std::size_t>& vars) {
    const std::size_t k = vars.size();
    SignatureTensor3 sub(k);
    for (std::size_t a = 0; a < k; ++a) {
        sub.set_l(a, S.l(vars[a]));
        for (std::size_t b = a + 1; b < k; ++b) {
            sub.set_q(a, b, S.q(vars[a], vars[b]));
            for (std::size_t g = b + 1; g < k; ++g) sub.set_c(a, b, g, S.c(vars[a], vars[b], vars[g]));
        }
    }
    return sub;
}

}  // namespace

GateSynthesisMatrix tool(const SignatureTensor3& S, bool feedback, const ControlSelector& select,
                         std::size_t rm_limit) {
    const std::size_t n = S.n();
    SignatureTensor3 cur = S;
    std::vector<BitVec> out;

    for (;;) {
        const std::vector<std::size_t> eligible = eligible_variables(cur);
        if (eligible.empty()) break;
        if (rm_limit > 0 && eligible.size() <= rm_limit) {
            const BitMatrix sub = rm_decode(restrict_to(cur, eligible), rm_limit);
            for (std::size_t j = 0; j < sub.cols(); ++j) {
                BitVec col(n);
                for (std::size_t a = 0; a < eligible.size(); ++a) {
                    if (sub.get(a, j)) col.set(eligible[a]);
                }
                out.push_back(std::move(col));
            }
            break;
        }

        const std::size_t c = select(eligible);
        // f = x_c (l_c + 2 sum_a q_ca x_a + 4 sum_{a<b} c_cab x_a x_b) + f'
        SignatureMatrix2 St(n);
        for (std::size_t a = 0; a < n; ++a) {
            if (a == c) continue;
            St.set(a, a, cur.q(c, a));
            for (std::size_t b = a + 1; b < n; ++b) {
                if (b != c) St.set(a, b, cur.c(c, a, b));
            }
        }
        const BitMatrix At = lempel_factor(St);
        const BitVec ec = BitVec::unit(n, c);
        std::vector<BitVec> round;
        if ((At.cols() + (cur.l(c) ? 1 : 0)) % 2 == 1) round.push_back(ec);
        for (std::size_t j = 0; j < At.cols(); ++j) round.push_back(At.column(j) ^ ec);
        if (!feedback) {
            for (std::size_t j = 0; j < At.cols(); ++j) round.push_back(At.column(j));
        }
        cur ^= signature_from_A(BitMatrix::from_columns(n, round));
        const std::vector<std::size_t> left = eligible_variables(cur);
        if (std::find(left.begin(), left.end(), c) != left.end()) {
            throw std::logic_error("tool: control variable survived its round");
        }
        out.insert(out.end(), round.begin(), round.end());
    }
    return proper(BitMatrix::from_columns(n, out));
}

GateSynthesisMatrix tool(const WeightedPolynomial& f, bool feedback, std::uint64_t seed, std::size_t rm_limit) {
    std::mt19937_64 rng(seed);
    ControlSelector select = [&rng](const std::vector<std::size_t>& eligible) {
        std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
        return eligible[pick(rng)];
    };
    return tool(signature_from_wp(f), feedback, select, rm_limit);
}

}  // namespace topt
