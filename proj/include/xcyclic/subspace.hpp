#pragma once

// Subspace-subcode dimensions of expanded codes, computed three ways:
// constraint-matrix rank over GF(q) (Gamma), Frobenius-power rank over
// GF(q^{m_gamma}) (Theta), and a direct linear-constraint oracle on the
// expanded generator matrix.

#include <algorithm>
#include <set>
#include <vector>

#include "basis.hpp"
#include "cyclic.hpp"
#include "expansion.hpp"

namespace xcyclic {

// one conjugacy class of generator-row elements: gamma, gamma^{q^{s_1}}, ...
struct ConjugacySelection {
    FieldElement gamma;        // class representative
    int q;
    int m_gamma;
    std::vector<int> offsets;  // distinct, sorted, offsets[0] == 0

    int k() const { return (int)offsets.size(); }
    std::vector<int> z_set() const {
        std::vector<int> z;
        for (int v = 1; v < m_gamma; ++v)
            if (std::find(offsets.begin(), offsets.end(), v) == offsets.end()) z.push_back(v);
        return z;
    }
    std::vector<FieldElement> members() const {
        std::vector<FieldElement> out;
        long long qs = 1;
        int last = 0;
        FieldElement x = gamma;
        for (int s : offsets) {
            for (; last < s; ++last) x = x.pow(q);
            out.push_back(x);
        }
        (void)qs;
        return out;
    }
};

inline ConjugacySelection make_selection(const FieldElement& gamma, int q,
                                         std::vector<int> offsets) {
    ConjugacySelection sel{gamma, q, minimal_dimension(gamma, q), {}};
    std::sort(offsets.begin(), offsets.end());
    if (offsets.empty() || offsets.front() != 0)
        throw Error("BadSelection", "offsets must contain 0");
    for (size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] < 0 || offsets[i] >= sel.m_gamma)
            throw Error("BadSelection", "offset outside [0, m_gamma)");
        if (i && offsets[i] == offsets[i - 1])
            throw Error("BadSelection", "duplicate offset");
    }
    sel.offsets = std::move(offsets);
    return sel;
}

// group a list of nonzero elements into conjugacy selections over GF(q);
// each class is represented by its first occurrence in the list
inline std::vector<ConjugacySelection> group_selections(const Field& f, int q,
                                                        const std::vector<int>& gamma_exps) {
    std::vector<ConjugacySelection> sels;
    for (int e : gamma_exps) {
        FieldElement g = f.alpha_pow(e);
        bool placed = false;
        for (auto& sel : sels) {
            auto cls = conjugacy_class(sel.gamma, q);
            for (int s = 0; s < (int)cls.size(); ++s) {
                if (cls[s] == g) {
                    if (std::find(sel.offsets.begin(), sel.offsets.end(), s) != sel.offsets.end())
                        throw Error("DuplicateRoot", "repeated gamma in selection");
                    sel.offsets.push_back(s);
                    placed = true;
                    break;
                }
            }
            if (placed) break;
        }
        if (!placed) sels.push_back(make_selection(g, q, {0}));
    }
    for (auto& sel : sels) std::sort(sel.offsets.begin(), sel.offsets.end());
    return sels;
}

// union of the decomposition supports of the subfield GF(q^{m_gamma});
// this is the unique minimal subbasis representing the whole subfield
inline std::vector<int> minimal_subfield_subbasis(const Basis& b, int subfield_order) {
    const Field& f = b.field();
    std::set<int> supp;
    long long step = f.mult_order() / (subfield_order - 1);
    for (int i = 0; i < subfield_order - 1; ++i) {
        auto s = b.support_indices(f.alpha_pow(step * i));
        supp.insert(s.begin(), s.end());
    }
    return {supp.begin(), supp.end()};
}

// constraint matrix of the Gamma method: rows (offset l, multiplier rho),
// columns (excluded index a, column element u); entry mu_{i_a}(beta_rho u^{q^{s_l}})
inline Matrix gamma_matrix(const ConjugacySelection& sel, const Basis& b,
                           const std::vector<int>& excluded,
                           const std::vector<FieldElement>& columns) {
    const Field& f = b.field();
    int m = b.m();
    Matrix g(f, (size_t)sel.k() * m, excluded.size() * columns.size());
    for (int l = 0; l < sel.k(); ++l) {
        long long qs = 1;
        for (int i = 0; i < sel.offsets[l]; ++i) qs *= sel.q;
        for (int rho = 0; rho < m; ++rho) {
            size_t row = (size_t)l * m + rho;
            for (size_t jc = 0; jc < columns.size(); ++jc) {
                auto mu = b.decompose(b.elements()[rho] * columns[jc].pow(qs));
                for (size_t a = 0; a < excluded.size(); ++a)
                    g.at(row, a * columns.size() + jc) = mu[excluded[a]];
            }
        }
    }
    return g;
}

// column elements used by the Gamma method for this selection. The
// constraint functional nu -> sum nu_{l,rho} mu_{i_a}(beta_rho u^{q^{s_l}})
// is GF(q)-linear in u and must vanish on the GF(q)-span of the powers of
// gamma, i.e. on GF(q^{m_gamma}); a basis of that span is enough. For a
// non-subfield gamma that span is the whole field and the ambient basis is
// used; for a proper subfield element the power basis {1, gamma, ...,
// gamma^{m_gamma - 1}} gives exactly the right constraint set (restricting
// to the minimal ambient subbasis instead can over-constrain).
inline std::vector<FieldElement> gamma_columns(const ConjugacySelection& sel, const Basis& b) {
    if (sel.m_gamma == b.m()) return b.elements();
    std::vector<FieldElement> columns;
    FieldElement x = b.field().one();
    for (int c = 0; c < sel.m_gamma; ++c) {
        columns.push_back(x);
        x *= sel.gamma;
    }
    return columns;
}

// dimension = mk - R(Gamma), with columns restricted to the minimal
// subfield subbasis when gamma is a proper subfield element
inline int dim_via_gamma(const ConjugacySelection& sel, const Basis& b,
                         const std::vector<int>& excluded) {
    if (excluded.empty()) return b.m() * sel.k();  // nothing excluded: full code
    Matrix g = gamma_matrix(sel, b, excluded, gamma_columns(sel, b));
    return b.m() * sel.k() - (int)g.rank();
}

// dimension = m_gamma * (t - R(Theta)), rank taken over GF(q^{m_gamma})
inline int dim_via_theta(const ConjugacySelection& sel, const Basis& b,
                         const std::vector<int>& included) {
    if (included.empty()) throw Error("EmptyInclusion", "subbasis must be non-empty");
    auto z = sel.z_set();
    int t = (int)included.size();
    if (z.empty()) return sel.m_gamma * t;  // full conjugacy class: no constraints
    const Field& f = b.field();
    Matrix theta(f, t, z.size());
    for (int a = 0; a < t; ++a)
        for (size_t bz = 0; bz < z.size(); ++bz) {
            long long qs = 1;
            for (int i = 0; i < sel.m_gamma - z[bz]; ++i) qs *= sel.q;
            theta.at(a, bz) = b.elements()[included[a]].pow(qs);
        }
    long long qmg = 1;
    for (int i = 0; i < sel.m_gamma; ++i) qmg *= sel.q;
    int r = (int)rank_over_subfield(theta, (int)qmg);
    return sel.m_gamma * (t - r);
}

// codewords built from the left-nullspace of Gamma; cheap even when mk is
// large, unlike the enumeration oracle
inline std::vector<std::vector<FieldElement>> gamma_nullspace_codewords(
    const ConjugacySelection& sel, const Basis& b, const std::vector<int>& excluded) {
    const Field& f = b.field();
    Matrix g = gamma_matrix(sel, b, excluded, gamma_columns(sel, b));
    auto members = sel.members();
    int m = b.m();
    std::vector<std::vector<FieldElement>> out;
    for (const auto& nu : g.transpose().nullspace()) {
        std::vector<FieldElement> cw(f.mult_order(), f.zero());
        for (int l = 0; l < sel.k(); ++l) {
            FieldElement x = f.one();
            for (int t = 0; t < f.mult_order(); ++t) {
                for (int rho = 0; rho < m; ++rho) {
                    const FieldElement& v = nu[(size_t)l * m + rho];
                    if (!v.is_zero()) cw[t] += v * b.elements()[rho] * x;
                }
                x *= members[l];
            }
        }
        out.push_back(std::move(cw));
    }
    return out;
}

inline std::vector<int> complement_indices(int m, const std::vector<int>& subset) {
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        if (std::find(subset.begin(), subset.end(), i) == subset.end()) out.push_back(i);
    return out;
}

// multi-class dimension: per-class machinery composed block-diagonally
inline int dim_closed_form(const Field& f, int q, const std::vector<int>& gamma_exps,
                           const Basis& b, const std::vector<int>& included) {
    int dim = 0;
    for (const auto& sel : group_selections(f, q, gamma_exps))
        dim += dim_via_theta(sel, b, included);
    return dim;
}

// ---- direct oracle on the expanded generator rows ----

constexpr int kOracleRowCap = 24;

// the mk rows beta_rho * g(gamma_l) as symbol vectors, l-major
inline std::vector<std::vector<FieldElement>> selection_rows(const Field& f,
                                                             const std::vector<int>& gamma_exps,
                                                             const Basis& b) {
    std::vector<std::vector<FieldElement>> rows;
    for (int e : gamma_exps) {
        auto g = g_vector(f.alpha_pow(e));
        for (int rho = 0; rho < b.m(); ++rho) {
            std::vector<FieldElement> r(g.size());
            for (size_t t = 0; t < g.size(); ++t) r[t] = b.elements()[rho] * g[t];
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

// linear constraint system over GF(q): variable nu in GF(q)^{mk}, one
// constraint per (excluded index, symbol position)
inline Matrix oracle_constraints(const Field& f, const std::vector<int>& gamma_exps,
                                 const Basis& b, const std::vector<int>& included) {
    auto excluded = complement_indices(b.m(), included);
    auto rows = selection_rows(f, gamma_exps, b);
    size_t nv = rows.size();
    Matrix c(f, excluded.size() * f.mult_order(), nv);
    for (size_t v = 0; v < nv; ++v)
        for (int t = 0; t < f.mult_order(); ++t) {
            auto mu = b.decompose(rows[v][t]);
            for (size_t a = 0; a < excluded.size(); ++a)
                c.at(a * f.mult_order() + t, v) = mu[excluded[a]];
        }
    return c;
}

inline int dim_bruteforce(const Field& f, int q, const std::vector<int>& gamma_exps,
                          const Basis& b, const std::vector<int>& included) {
    size_t mk = gamma_exps.size() * b.m();
    if (mk > kOracleRowCap) throw Error("TooLarge", "oracle capped at mk <= 24");
    if ((int)included.size() == b.m()) return (int)mk;
    (void)q;
    Matrix c = oracle_constraints(f, gamma_exps, b, included);
    return (int)mk - (int)c.rank();
}

// nonzero codewords (symbol vectors) spanning the subspace subcode
inline std::vector<std::vector<FieldElement>> subspace_codeword_basis(
    const Field& f, int q, const std::vector<int>& gamma_exps, const Basis& b,
    const std::vector<int>& included) {
    (void)q;
    Matrix c = oracle_constraints(f, gamma_exps, b, included);
    auto rows = selection_rows(f, gamma_exps, b);
    std::vector<std::vector<FieldElement>> out;
    for (const auto& nu : c.nullspace()) {
        std::vector<FieldElement> cw(f.mult_order(), f.zero());
        for (size_t v = 0; v < nu.size(); ++v) {
            if (nu[v].is_zero()) continue;
            for (int t = 0; t < f.mult_order(); ++t) cw[t] += nu[v] * rows[v][t];
        }
        out.push_back(std::move(cw));
    }
    return out;
}

// exhaustive scan: true iff no nonzero codeword of G_e(gamma list) has a
// proper-subbasis support; preconditions per the non-conjugate theorem
inline bool nonconjugate_subbasis_check(const Field& f, int q,
                                        const std::vector<int>& gamma_exps, const Basis& b) {
    for (int e : gamma_exps) {
        if (minimal_dimension(f.alpha_pow(e), q) != b.m())
            throw Error("PreconditionViolated", "gamma is a subfield element");
    }
    auto sels = group_selections(f, q, gamma_exps);
    if (sels.size() != gamma_exps.size())
        throw Error("PreconditionViolated", "conjugate elements in the list");
    auto rows = selection_rows(f, gamma_exps, b);
    size_t mk = rows.size();
    long long total = 1;
    for (size_t i = 0; i < mk; ++i) {
        total *= q;
        if (total > (1 << 24)) throw Error("TooLarge", "codeword enumeration cap exceeded");
    }
    SubfieldView view(f, q);
    int N = f.mult_order();
    for (long long idx = 1; idx < total; ++idx) {
        std::vector<FieldElement> cw(N, f.zero());
        long long v = idx;
        for (size_t r = 0; r < mk; ++r) {
            int d = (int)(v % q);
            v /= q;
            if (!d) continue;
            FieldElement s = view.elems[d];
            for (int t = 0; t < N; ++t) cw[t] += s * rows[r][t];
        }
        if ((int)b.support_indices(cw).size() < b.m()) return false;
    }
    return true;
}

// helper: all size-t index subsets of {0..m-1} in lexicographic order
inline std::vector<std::vector<int>> index_subsets(int m, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == t) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= m - (t - (int)cur.size()); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// smallest subbasis size carrying a nonzero codeword of G_e(selection)
inline int min_achievable_subbasis_size(const ConjugacySelection& sel, const Basis& b) {
    for (int t = 1; t <= b.m(); ++t)
        for (const auto& sub : index_subsets(b.m(), t))
            if (dim_via_theta(sel, b, sub) > 0) return t;
    throw Error("Internal", "full basis carries no codeword");
}

// closed-form weight of a codeword with minimal subbasis of size i
inline long long min_subbasis_codeword_weight(const ConjugacySelection& sel, int i) {
    const Field& f = sel.gamma.field();
    long long q = sel.q;
    long long qmg = 1;
    for (int s = 0; s < sel.m_gamma; ++s) qmg *= q;
    long long per = qmg / q * (q - 1) * f.mult_order() / (qmg - 1);
    return i * per;
}

// find a codeword whose support is exactly the given subbasis; empty if none
inline std::vector<FieldElement> find_exact_support_codeword(
    const Field& f, int q, const std::vector<int>& gamma_exps, const Basis& b,
    const std::vector<int>& subbasis) {
    auto cands = subspace_codeword_basis(f, q, gamma_exps, b, subbasis);
    std::set<int> want(subbasis.begin(), subbasis.end());
    for (const auto& cw : cands)
        if (b.support_indices(cw) == want) return cw;
    // basis vectors alone may miss full support; try pairwise sums
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j) {
            std::vector<FieldElement> cw(cands[i]);
            for (size_t t = 0; t < cw.size(); ++t) cw[t] += cands[j][t];
            if (b.support_indices(cw) == want) return cw;
        }
    return {};
}

struct SubbasisSearchResult {
    int basis_index = -1;
    std::vector<int> subbasis;
    int dimension = -1;
};

// maximize the subspace-subcode dimension over candidate bases and all
// size-t subbases; ties broken by (basis index, lexicographic subbasis)
inline SubbasisSearchResult best_subbasis_search(const Field& f, int q,
                                                 const std::vector<int>& gamma_exps,
                                                 const std::vector<Basis>& candidates, int t) {
    SubbasisSearchResult best;
    for (size_t bi = 0; bi < candidates.size(); ++bi) {
        const Basis& b = candidates[bi];
        for (const auto& sub : index_subsets(b.m(), t)) {
            int d = dim_closed_form(f, q, gamma_exps, b, sub);
            if (d > best.dimension) best = {(int)bi, sub, d};
        }
    }
    return best;
}

// lower bound on the number of linearly independent component words of a
// codeword theta_1 g(gamma_1) + ... + theta_k g(gamma_k)
inline int independent_component_count_bound(const Field& f, int q,
                                             const std::vector<int>& gamma_exps,
                                             const Basis& b) {
    int bound = 1;
    for (const auto& sel : group_selections(f, q, gamma_exps))
        bound = std::max(bound, min_achievable_subbasis_size(sel, b));
    return bound;
}

}  // namespace xcyclic
