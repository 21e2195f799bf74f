#pragma once

// Base-field images of cyclic codes: expanded generator/parity matrices
// over GF(q), component words mu_j(beta_i g(gamma)), the chi_gamma
// polynomial and the constant-weight codebooks.

#include <vector>

#include "basis.hpp"
#include "cyclic.hpp"

namespace xcyclic {

// symbol-major GF(q) expansion: symbol t occupies positions t*m .. t*m+m-1
inline std::vector<FieldElement> expand_word(const std::vector<FieldElement>& y,
                                             const Basis& b) {
    std::vector<FieldElement> out;
    out.reserve(y.size() * b.m());
    for (const auto& s : y) {
        auto mu = b.decompose(s);
        out.insert(out.end(), mu.begin(), mu.end());
    }
    return out;
}

// mK x mN over GF(q); row (i-1)m + j is the expansion of beta_j * g(gamma_i)
inline Matrix expand_generator(const CyclicCode& c, const Basis& b) {
    int m = b.m();
    Matrix ge(c.f(), (size_t)m * c.K, (size_t)m * c.N);
    for (int i = 0; i < c.K; ++i) {
        auto g = g_vector(c.f().alpha_pow(c.gamma_exps[i]));
        for (int j = 0; j < m; ++j) {
            size_t row = (size_t)i * m + j;
            for (int t = 0; t < c.N; ++t) {
                auto mu = b.decompose(b.elements()[j] * g[t]);
                for (int l = 0; l < m; ++l) ge.at(row, (size_t)t * m + l) = mu[l];
            }
        }
    }
    return ge;
}

// mR x mN over GF(q); row (j-1)m + l annihilates every expanded codeword:
// entry at column (t, i) is mu_l(beta_i alpha_j^t)
inline Matrix expand_parity(const CyclicCode& c, const Basis& b) {
    int m = b.m();
    Matrix he(c.f(), (size_t)m * c.R(), (size_t)m * c.N);
    for (int j = 0; j < c.R(); ++j) {
        FieldElement a = c.f().alpha_pow(c.roots[j]);
        FieldElement x = c.f().one();
        for (int t = 0; t < c.N; ++t) {
            for (int i = 0; i < m; ++i) {
                auto mu = b.decompose(b.elements()[i] * x);
                for (int l = 0; l < m; ++l) he.at((size_t)j * m + l, (size_t)t * m + i) = mu[l];
            }
            x *= a;
        }
    }
    return he;
}

inline std::vector<FieldElement> component_word(const std::vector<FieldElement>& c,
                                                const Basis& b, int j) {
    return b.decompose_vector(c, j);
}

inline Poly component_poly(const Poly& c, const Basis& b, int j) {
    return b.decompose_poly(c, j);
}

// chi_gamma(x) = gamma^{-1} (x - gamma^{-q})(x - gamma^{-q^2})...(x - gamma^{-q^{m_gamma-1}});
// beta_i g_gamma(x) = (x^N - 1)/p_{gamma^{-1}}(x) * beta_i chi_gamma(x)
inline Poly chi_poly(const FieldElement& gamma, int q) {
    if (gamma.is_zero()) throw Error("ZeroElement", "chi of zero");
    const Field& f = gamma.field();
    int mg = minimal_dimension(gamma, q);
    std::vector<FieldElement> roots;
    long long qs = q;
    for (int s = 1; s < mg; ++s) {
        roots.push_back(gamma.inv().pow(qs));
        qs *= q;
    }
    return Poly::from_roots(f, roots) * gamma.inv();
}

struct Codebook {
    int q;
    std::vector<std::vector<int>> messages;             // small-field digit vectors
    std::vector<std::vector<FieldElement>> codewords;   // GF(q) symbols, length N
};

// all q^{m_gamma} codewords of the GF(q) cyclic code with generator
// polynomial (x^N - 1)/p_gamma(x); index 0 is the zero codeword
inline Codebook constant_weight_codebook(const Field& f, int q, const FieldElement& gamma) {
    if (gamma.is_zero()) throw Error("ZeroElement", "gamma must be nonzero");
    int N = f.mult_order();
    int mg = minimal_dimension(gamma, q);
    Poly G = Poly::x_pow_minus_one(f, N) / minimal_polynomial(gamma, q);
    SubfieldView view(f, q);
    Codebook cb;
    cb.q = q;
    long long total = 1;
    for (int i = 0; i < mg; ++i) total *= q;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> msg(mg);
        long long v = idx;
        for (int i = 0; i < mg; ++i) {
            msg[i] = (int)(v % q);
            v /= q;
        }
        std::vector<FieldElement> a;
        for (int d : msg) a.push_back(view.elems[d]);
        Poly cw = Poly(f, a) * G;
        std::vector<FieldElement> word(N, f.zero());
        for (int t = 0; t <= cw.degree(); ++t) word[t] = cw.coeff(t);
        cb.messages.push_back(std::move(msg));
        cb.codewords.push_back(std::move(word));
    }
    return cb;
}

}  // namespace xcyclic
