#pragma once

// Distance bounds: exact rational Plotkin bound and its matching check, the
// generalized-concatenation lower bound on the expanded minimum distance,
// exact minimum distance by enumeration, and low-weight witness codewords
// for the asymptotic-badness construction.

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace xcyclic {

constexpr long long kEnumCap = 1LL << 24;

struct Rational {
    long long num, den;
    long long floor_val() const { return num / den; }
    bool is_integer() const { return num % den == 0; }
};

// d <= N(q-1) / (q - q/A) = N(q-1)A / (q(A-1)), exact
inline Rational plotkin_bound(long long N, long long q, long long A) {
    if (A < 2 || N < 1) throw Error("PreconditionViolated", "need A >= 2, N >= 1");
    long long num = N * (q - 1) * A;
    long long den = q * (A - 1);
    long long g = std::gcd(num, den);
    return {num / g, den / g};
}

// all q^K codewords of the GF(q) cyclic code with generator G over GF(q)
inline Codebook q_ary_codebook(const Field& f, int q, const Poly& G, long long cap = kEnumCap) {
    int N = f.mult_order();
    int K = N - G.degree();
    if (K <= 0) throw Error("ZeroDimension", "generator degree >= N");
    SubfieldView view(f, q);
    long long total = 1;
    for (int i = 0; i < K; ++i) {
        total *= q;
        if (total > cap) throw Error("TooLarge", "codebook enumeration cap exceeded");
    }
    Codebook cb;
    cb.q = q;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> msg(K);
        long long v = idx;
        for (int i = 0; i < K; ++i) {
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

inline int min_nonzero_weight(const Codebook& cb) {
    int d = -1;
    for (size_t i = 1; i < cb.codewords.size(); ++i) {
        int w = hamming_weight(cb.codewords[i]);
        if (w && (d < 0 || w < d)) d = w;
    }
    if (d < 0) throw Error("ZeroDimension", "no nonzero codeword");
    return d;
}

enum class PlotkinVariant { ClassCode, WithXMinusOne, PuncturedZero };

struct PlotkinMatch {
    long long N, q, A;
    int d_min;
    Rational bound;
    bool matches;  // d_min == floor(bound)
};

// the three code families that meet the Plotkin bound with equality
inline PlotkinMatch plotkin_match_check(const Field& f, int q, const FieldElement& gamma,
                                        PlotkinVariant variant) {
    if (gamma.is_zero()) throw Error("PreconditionViolated", "gamma must be nonzero");
    int N = f.mult_order();
    int mg = minimal_dimension(gamma, q);
    int m = f.n() / f.subfield_degree(q);
    if (variant != PlotkinVariant::ClassCode && mg != m)
        throw Error("PreconditionViolated", "variant requires a non-subfield gamma");
    PlotkinMatch r;
    r.N = N;
    r.q = q;
    if (variant == PlotkinVariant::WithXMinusOne) {
        Poly p = minimal_polynomial(gamma, q);
        if (!p.eval(f.one()).is_zero()) {
            Poly xm1 = Poly::from_roots(f, {f.one()});
            Poly G = Poly::x_pow_minus_one(f, N) / (xm1 * p);
            r.d_min = min_nonzero_weight(q_ary_codebook(f, q, G));
        } else {
            throw Error("PreconditionViolated", "x - 1 already divides p_gamma");
        }
        long long A = 1;
        for (int i = 0; i <= mg; ++i) A *= q;
        r.A = A;
    } else {
        Codebook cb = constant_weight_codebook(f, q, gamma);
        if (variant == PlotkinVariant::ClassCode) {
            r.d_min = min_nonzero_weight(cb);
            long long A = 1;
            for (int i = 0; i < mg; ++i) A *= q;
            r.A = A;
        } else {  // nonlinear code: zero codeword removed, minimum pairwise distance
            int d = -1;
            for (size_t i = 1; i < cb.codewords.size(); ++i)
                for (size_t j = i + 1; j < cb.codewords.size(); ++j) {
                    int w = 0;
                    for (int t = 0; t < N; ++t)
                        if (cb.codewords[i][t] != cb.codewords[j][t]) ++w;
                    if (d < 0 || w < d) d = w;
                }
            r.d_min = d;
            long long A = 1;
            for (int i = 0; i < mg; ++i) A *= q;
            r.A = A - 1;
        }
    }
    r.bound = plotkin_bound(N, q, r.A);
    r.matches = (r.d_min == r.bound.floor_val());
    return r;
}

// ---- generalized-concatenation lower bound ----

struct LevelReport {
    int i;                        // inner subbasis-size level
    std::vector<int> class_reps;  // alpha-exponents of class representatives in this level
    std::vector<int> root_exps;   // alpha-exponents of the roots of G^{(i)}
    int K;                        // q-ary dimension of the level code
    int d;                        // minimum distance of the level code
    bool exact;                   // true: enumerated; false: BCH lower bound only
    long long product;            // i * d
};

struct BoundReport {
    std::vector<LevelReport> levels;
    long long bound = 0;
};

// BCH bound: longest cyclic run of consecutive exponents in the root set, +1
inline int bch_bound(int N, const std::set<int>& root_exps) {
    int best = 0, run = 0;
    for (int t = 0; t < 2 * N; ++t) {
        if (root_exps.count(t % N)) {
            ++run;
            if (run > best) best = run;
        } else {
            run = 0;
        }
        if (best >= N) break;
    }
    return std::min(best, N - 1) + 1;
}

// d_min(G_e) >= min_i i * d^{(i)}, where level i collects the conjugacy
// classes whose minimal achievable subbasis size under the given basis is
// <= i, and d^{(i)} is the minimum distance of the cyclic code generated by
// G^{(i)}(x) = (x^N - 1) / prod p_{gamma_c^{-1}}(x) over those classes.
// A generator in GF(q)[x] gives the same minimum distance over GF(q) and
// GF(q^m) (scalar extension), so d^{(i)} is enumerated over q^{K_i} q-ary
// codewords when that fits the cap; otherwise the BCH bound is substituted
// and tagged as a lower bound only.
inline BoundReport gcc_dmin_bound(const Field& f, int q, const std::vector<int>& gamma_exps,
                                  const Basis& b, long long cap = kEnumCap) {
    int N = f.mult_order();
    auto sels = group_selections(f, q, gamma_exps);
    std::vector<int> lvl(sels.size());
    for (size_t c = 0; c < sels.size(); ++c)
        lvl[c] = min_achievable_subbasis_size(sels[c], b);
    std::set<int> level_values(lvl.begin(), lvl.end());
    BoundReport rep;
    for (int i : level_values) {
        LevelReport lr;
        lr.i = i;
        Poly quot = Poly(f, {f.one()});
        std::set<int> removed;  // gamma-set exponents of the level code
        for (size_t c = 0; c < sels.size(); ++c) {
            if (lvl[c] > i) continue;
            lr.class_reps.push_back((int)f.log_code(sels[c].gamma.code()));
            quot = quot * minimal_polynomial(sels[c].gamma.inv(), q);
            for (const auto& e : conjugacy_class(sels[c].gamma, q))
                removed.insert((int)f.log_code(e.code()));
        }
        Poly G = Poly::x_pow_minus_one(f, N) / quot;
        lr.K = quot.degree();
        std::set<int> roots;
        for (int e = 0; e < N; ++e)
            if (!removed.count((N - e) % N)) roots.insert(e);
        lr.root_exps.assign(roots.begin(), roots.end());
        long long total = 1;
        bool fits = true;
        for (int t = 0; t < lr.K && fits; ++t) {
            total *= q;
            if (total > cap) fits = false;
        }
        if (fits) {
            lr.d = min_nonzero_weight(q_ary_codebook(f, q, G, cap));
            lr.exact = true;
        } else {
            lr.d = bch_bound(N, roots);
            lr.exact = false;
        }
        lr.product = (long long)lr.i * lr.d;
        rep.levels.push_back(std::move(lr));
    }
    if (rep.levels.empty()) throw Error("ZeroDimension", "empty gamma selection");
    rep.bound = rep.levels.front().product;
    for (const auto& l : rep.levels) rep.bound = std::min(rep.bound, l.product);
    return rep;
}

// GF(q)-weight of each ambient symbol under the basis, indexed by code
inline std::vector<int> symbol_weight_table(const Basis& b) {
    const Field& f = b.field();
    std::vector<int> wt(f.order(), 0);
    for (int c = 1; c < f.order(); ++c) {
        for (const auto& x : b.decompose(f.element(c)))
            if (!x.is_zero()) ++wt[c];
    }
    return wt;
}

// exact minimum GF(q)-weight over all nonzero expanded codewords of
// G_e(gamma list); enumeration over q^{mk} coefficient vectors
inline int exact_dmin_expanded(const Field& f, int q, const std::vector<int>& gamma_exps,
                               const Basis& b, long long cap = kEnumCap) {
    if (gamma_exps.empty()) throw Error("ZeroDimension", "empty gamma selection");
    auto rows = selection_rows(f, gamma_exps, b);
    size_t mk = rows.size();
    long long total = 1;
    for (size_t i = 0; i < mk; ++i) {
        total *= q;
        if (total > cap) throw Error("TooLarge", "enumeration cap exceeded");
    }
    auto wt = symbol_weight_table(b);
    SubfieldView view(f, q);
    int N = f.mult_order();
    int best = -1;
    std::vector<FieldElement> cw(N, f.zero());
    for (long long idx = 1; idx < total; ++idx) {
        for (int t = 0; t < N; ++t) cw[t] = f.zero();
        long long v = idx;
        for (size_t r = 0; r < mk; ++r) {
            int d = (int)(v % q);
            v /= q;
            if (!d) continue;
            FieldElement s = view.elems[d];
            for (int t = 0; t < N; ++t) cw[t] += s * rows[r][t];
        }
        int w = 0;
        for (int t = 0; t < N; ++t) w += wt[cw[t].code()];
        if (best < 0 || w < best) best = w;
    }
    return best;
}

// ---- low-weight witness for the asymptotic-badness construction ----

struct BadnessWitness {
    std::shared_ptr<Field> field;   // keeps the codeword elements valid
    int m;
    int k;                          // conjugate-selection size is k + 1
    std::vector<int> gamma_exps;    // alpha-exponents 2^{s} of the selection
    std::vector<int> subbasis;      // included polynomial-basis indices
    int dim;                        // subspace-subcode dimension
    std::vector<FieldElement> codeword;
    int weight;
    long long weight_bound;         // (m - k) * 2^{m-1}
    bool strong_support;            // support size <= the stronger bound (negative-delta case)
    double ratio;                   // weight / (m * (2^m - 1))
};

inline int floor_log2(long long v) {
    int k = -1;
    while (v > 0) {
        v >>= 1;
        ++k;
    }
    return k;
}

// rate r = r_num / r_den, offset delta; binary base field (q = 2).
// delta >= 0: selection alpha^{2^0..2^k} with k = floor(log2(r N - delta));
// delta < 0: selection alpha^{2^{k1}..2^{k2}} with k1 = ceil(log2(-delta)),
// k2 = floor(log2(r N - delta)), checked against the weaker weight bound
// (m - (k2 - k1)) 2^{m-1}; strong_support records whether the support also
// meets the stronger m - (k2 + k1) size claim.
inline BadnessWitness badness_witness(int m, long long r_num, long long r_den,
                                      long long delta) {
    if (m < 2 || m > 10) throw Error("PreconditionViolated", "need 2 <= m <= 10");
    auto fp = std::make_shared<Field>(2, m);
    Field& f = *fp;
    long long N = f.mult_order();
    int lo, hi;  // offsets of the conjugate selection: alpha^{2^lo} .. alpha^{2^hi}
    if (delta >= 0) {
        lo = 0;
        hi = floor_log2(N * r_num / r_den - delta);
    } else {
        lo = 0;
        long long d = -delta;
        while ((1LL << lo) < d) ++lo;  // ceil(log2(-delta))
        hi = floor_log2(N * r_num / r_den - delta);
    }
    if (hi < lo + 1 || hi >= m)
        throw Error("PreconditionViolated", "parameters give no valid selection");
    int k = hi - lo;
    Basis b = Basis::polynomial(f, 2);
    FieldElement gamma = f.alpha_pow(1LL << lo);
    std::vector<int> offsets;
    for (int s = 0; s <= k; ++s) offsets.push_back(s);
    ConjugacySelection sel = make_selection(gamma, 2, offsets);

    BadnessWitness w;
    w.field = fp;
    w.m = m;
    w.k = k;
    for (int s = lo; s <= hi; ++s) w.gamma_exps.push_back((int)((1LL << s) % N));
    for (int i = 0; i < m - k; ++i) w.subbasis.push_back(i);
    auto excluded = complement_indices(m, w.subbasis);
    w.dim = dim_via_gamma(sel, b, excluded);
    auto cands = gamma_nullspace_codewords(sel, b, excluded);
    w.weight_bound = (long long)(m - k) * (1LL << (m - 1));
    auto wt = symbol_weight_table(b);
    w.weight = -1;
    for (const auto& cw : cands) {
        bool inside = true;
        for (const auto& s : cw) {
            for (int e : excluded)
                if (!b.mu(e, s).is_zero()) inside = false;
            if (!inside) break;
        }
        if (!inside) continue;
        int wgt = 0;
        bool nonzero = false;
        for (const auto& s : cw) {
            wgt += wt[s.code()];
            if (!s.is_zero()) nonzero = true;
        }
        if (nonzero && wgt <= w.weight_bound && (w.weight < 0 || wgt < w.weight)) {
            w.weight = wgt;
            w.codeword = cw;
        }
    }
    if (w.weight < 0) throw Error("NoWitnessFound", "no in-subbasis codeword met the bound");
    int support = (int)b.support_indices(w.codeword).size();
    int strong = m - (hi + lo);
    w.strong_support = (support <= strong);
    w.ratio = (double)w.weight / ((double)m * N);
    return w;
}

}  // namespace xcyclic
