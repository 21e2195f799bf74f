#pragma once

// Bases of GF(q^m) over GF(q): decomposition maps mu_i, dual basis via
// trace, composite bases, structure constants and the coefficient
// functions f_{i,l}.

#include <map>
#include <set>
#include <vector>

#include "galois.hpp"
#include "linalg.hpp"

namespace xcyclic {

class Basis {
public:
    // elements must be m = n/s linearly independent over GF(q), q = p^s
    Basis(const Field& f, int q, std::vector<FieldElement> elements)
        : f_(&f), q_(q), view_(f, q), elems_(std::move(elements)) {
        s_ = f.subfield_degree(q);
        m_ = f.n() / s_;
        if ((int)elems_.size() != m_)
            throw Error("WrongCount", "basis needs " + std::to_string(m_) + " elements");
        // change of coordinates: gamma = sum_{i,j} c_{ij} (beta_i g^j), c over GF(p)
        Matrix change(f, f.n(), f.n());
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < s_; ++j) {
                FieldElement b = elems_[i] * view_.g.pow(j);
                auto d = f.digits(b.code());
                for (int r = 0; r < f.n(); ++r)
                    change.at(r, (size_t)i * s_ + j) = f.element(d[r]);
            }
        try {
            inv_ = change.inverse();
        } catch (const Error&) {
            throw Error("LinearlyDependent", "elements not independent over GF(q)");
        }
    }

    static Basis polynomial(const Field& f, int q) {
        int m = f.n() / f.subfield_degree(q);
        std::vector<FieldElement> el;
        for (int i = 0; i < m; ++i) el.push_back(f.alpha_pow(i));
        return Basis(f, q, std::move(el));
    }

    const Field& field() const { return *f_; }
    int q() const { return q_; }
    int m() const { return m_; }
    const std::vector<FieldElement>& elements() const { return elems_; }
    const SubfieldView& subfield() const { return view_; }

    // (mu_1(gamma), ..., mu_m(gamma)) as GF(q) elements
    std::vector<FieldElement> decompose(const FieldElement& g) const {
        auto d = f_->digits(g.code());
        std::vector<FieldElement> v;
        v.reserve(f_->n());
        for (int r = 0; r < f_->n(); ++r) v.push_back(f_->element(d[r]));
        auto c = inv_.apply(v);
        std::vector<FieldElement> mu(m_, f_->zero());
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < s_; ++j) mu[i] += c[(size_t)i * s_ + j] * view_.g.pow(j);
        return mu;
    }
    FieldElement mu(int i, const FieldElement& g) const { return decompose(g)[i]; }

    FieldElement recompose(const std::vector<FieldElement>& mu) const {
        FieldElement g = f_->zero();
        for (int i = 0; i < m_; ++i) g += mu[i] * elems_[i];
        return g;
    }

    // componentwise mu_i over a vector of symbols
    std::vector<FieldElement> decompose_vector(const std::vector<FieldElement>& y, int i) const {
        std::vector<FieldElement> out;
        out.reserve(y.size());
        for (const auto& s : y) out.push_back(decompose(s)[i]);
        return out;
    }
    Poly decompose_poly(const Poly& pl, int i) const {
        std::vector<FieldElement> c;
        for (int d = 0; d <= pl.degree(); ++d) c.push_back(decompose(pl.coeff(d))[i]);
        return Poly(*f_, std::move(c));
    }

    // 0-based indices i with mu_i(y_t) != 0 for some t
    std::set<int> support_indices(const std::vector<FieldElement>& y) const {
        std::set<int> out;
        for (const auto& s : y) {
            auto mu = decompose(s);
            for (int i = 0; i < m_; ++i)
                if (!mu[i].is_zero()) out.insert(i);
        }
        return out;
    }
    std::set<int> support_indices(const FieldElement& g) const {
        return support_indices(std::vector<FieldElement>{g});
    }

    // dual basis: Tr(beta_i * dual_j) = delta_ij
    Basis dual() const {
        Matrix tr(*f_, m_, m_);
        for (int i = 0; i < m_; ++i)
            for (int k = 0; k < m_; ++k) tr.at(i, k) = trace_to(elems_[i] * elems_[k], q_);
        Matrix inv = tr.inverse();
        std::vector<FieldElement> dual(m_, f_->zero());
        for (int j = 0; j < m_; ++j)
            for (int k = 0; k < m_; ++k) dual[j] += inv.at(k, j) * elems_[k];
        return Basis(*f_, q_, std::move(dual));
    }

private:
    const Field* f_;
    int q_, s_, m_;
    SubfieldView view_;
    std::vector<FieldElement> elems_;
    Matrix inv_;
};

// products outer_j * inner_i in outer-major order; inner is a basis of the
// intermediate GF(q_mid) over GF(q), outer a basis of the field over GF(q_mid)
inline Basis composite_basis(const Field& f, int q, int q_mid,
                             const std::vector<FieldElement>& inner,
                             const std::vector<FieldElement>& outer) {
    f.subfield_degree(q);
    int s_mid = f.subfield_degree(q_mid);
    if (s_mid % f.subfield_degree(q) != 0)
        throw Error("NoSuchSubfield", "GF(q) is not a subfield of GF(q_mid)");
    std::vector<FieldElement> prod;
    for (const auto& o : outer)
        for (const auto& i : inner) prod.push_back(o * i);
    return Basis(f, q, std::move(prod));
}

// mu^{(i,k)}_j with beta_i beta_k = sum_j mu^{(i,k)}_j beta_j, and the
// Frobenius constants mu^{(i[q^s])}_j with beta_i^{q^s} = sum_j ... beta_j
struct StructureConstants {
    const Basis* basis;
    std::vector<std::vector<std::vector<FieldElement>>> prod;  // [i][k] -> mu vector
    std::map<int, std::vector<std::vector<FieldElement>>> frob;  // s -> [i] -> mu vector

    StructureConstants(const Basis& b, const std::set<int>& frobenius_exponents = {})
        : basis(&b) {
        int m = b.m();
        prod.assign(m, std::vector<std::vector<FieldElement>>(m));
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                prod[i][k] = b.decompose(b.elements()[i] * b.elements()[k]);
        for (int s : frobenius_exponents) add_frobenius(s);
    }

    void add_frobenius(int s) {
        if (frob.count(s)) return;
        const Basis& b = *basis;
        std::vector<std::vector<FieldElement>> fs(b.m());
        long long qs = 1;
        for (int i = 0; i < s; ++i) qs *= b.q();
        for (int i = 0; i < b.m(); ++i) fs[i] = b.decompose(b.elements()[i].pow(qs));
        frob[s] = std::move(fs);
    }
};

// f_{i,l}(mu_1, ..., mu_m) = sum_j mu^{(i,j)}_l mu_j; satisfies
// gamma * beta_i = sum_l beta_l f_{i,l}(mu(gamma))
inline FieldElement f_coeff(int i, int l, const std::vector<FieldElement>& mu,
                            const StructureConstants& sc) {
    const Basis& b = *sc.basis;
    FieldElement r = b.field().zero();
    for (int j = 0; j < b.m(); ++j) r += sc.prod[i][j][l] * mu[j];
    return r;
}

}  // namespace xcyclic
