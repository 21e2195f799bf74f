#pragma once

// Primitive cyclic codes over GF(q^m) of length N = q^m - 1 given by a
// squarefree root set; Vandermonde generator/parity-check matrices; encoding.

#include <map>
#include <set>
#include <vector>

#include "galois.hpp"
#include "linalg.hpp"

namespace xcyclic {

struct CyclicCode {
    const Field* field;
    int N;
    std::vector<int> roots;       // alpha-exponents of G(x) roots, ascending
    std::vector<int> gamma_exps;  // exponents of the gamma set, ascending
    int K;

    const Field& f() const { return *field; }
    int R() const { return (int)roots.size(); }
};

inline CyclicCode code_from_roots(const Field& f, const std::set<int>& root_exponents) {
    int N = f.mult_order();
    CyclicCode c;
    c.field = &f;
    c.N = N;
    for (int e : root_exponents) {
        if (e < 0 || e >= N) throw Error("BadRoot", "root exponent out of [0, N)");
        c.roots.push_back(e);
    }
    c.K = N - (int)c.roots.size();
    if (c.K == 0) throw Error("ZeroDimension", "G(x) = x^N - 1 defines the zero code");
    // gamma set: inverses of the non-roots (Lemma: GF* minus {alpha_j^{-1}})
    std::set<int> root_inv;
    for (int e : c.roots) root_inv.insert((N - e) % N);
    for (int e = 0; e < N; ++e)
        if (!root_inv.count(e)) c.gamma_exps.push_back(e);
    return c;
}

inline Poly generator_poly(const CyclicCode& c) {
    std::vector<FieldElement> roots;
    for (int e : c.roots) roots.push_back(c.f().alpha_pow(e));
    return Poly::from_roots(c.f(), roots);
}

inline CyclicCode code_from_generator_poly(const Field& f, const Poly& G) {
    int N = f.mult_order();
    if (G.is_zero() || !G.divides(Poly::x_pow_minus_one(f, N)))
        throw Error("NotDivisor", "G(x) does not divide x^N - 1");
    std::set<int> roots;
    for (int e = 0; e < N; ++e)
        if (G.eval(f.alpha_pow(e)).is_zero()) roots.insert(e);
    if ((int)roots.size() != G.degree())
        throw Error("NotDivisor", "G(x) has repeated roots");
    return code_from_roots(f, roots);
}

// g(gamma) = [1, gamma, gamma^2, ..., gamma^(N-1)]
inline std::vector<FieldElement> g_vector(const FieldElement& gamma) {
    if (gamma.is_zero()) throw Error("ZeroElement", "g(0) undefined");
    const Field& f = gamma.field();
    std::vector<FieldElement> v;
    v.reserve(f.mult_order());
    FieldElement x = f.one();
    for (int t = 0; t < f.mult_order(); ++t) {
        v.push_back(x);
        x *= gamma;
    }
    return v;
}

inline Poly g_poly(const FieldElement& gamma) {
    return Poly(gamma.field(), g_vector(gamma));
}

inline Matrix generator_matrix(const CyclicCode& c) {
    Matrix g(c.f(), c.K, c.N);
    for (int i = 0; i < c.K; ++i) {
        auto row = g_vector(c.f().alpha_pow(c.gamma_exps[i]));
        for (int t = 0; t < c.N; ++t) g.at(i, t) = row[t];
    }
    return g;
}

inline Matrix parity_check_matrix(const CyclicCode& c) {
    Matrix h(c.f(), c.roots.size(), c.N);
    for (size_t j = 0; j < c.roots.size(); ++j) {
        FieldElement a = c.f().alpha_pow(c.roots[j]);
        FieldElement x = c.f().one();
        for (int t = 0; t < c.N; ++t) {
            h.at(j, t) = x;
            x *= a;
        }
    }
    return h;
}

inline std::vector<FieldElement> encode(const CyclicCode& c,
                                        const std::vector<FieldElement>& message) {
    if ((int)message.size() != c.K)
        throw Error("LengthMismatch", "message length must equal K");
    std::vector<FieldElement> cw(c.N, c.f().zero());
    for (int i = 0; i < c.K; ++i) {
        if (message[i].is_zero()) continue;
        FieldElement gamma = c.f().alpha_pow(c.gamma_exps[i]);
        FieldElement x = message[i];
        for (int t = 0; t < c.N; ++t) {
            cw[t] += x;
            x *= gamma;
        }
    }
    return cw;
}

inline int hamming_weight(const std::vector<FieldElement>& v) {
    int w = 0;
    for (const auto& x : v)
        if (!x.is_zero()) ++w;
    return w;
}

// w_gamma(c) = |{t : c_t = gamma}| for every value occurring in c
inline std::map<int, int> weight_profile(const std::vector<FieldElement>& v) {
    std::map<int, int> prof;
    for (const auto& x : v) ++prof[x.code()];
    return prof;
}

}  // namespace xcyclic
