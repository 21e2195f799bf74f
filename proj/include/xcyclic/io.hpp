#pragma once

// Text and JSON serialization: element notation "0"/"1"/"a^k", polynomial
// text like "x^4+x+1", basis and subbasis strings, matrix exports, and the
// JSON descriptors used by the CLI (all with "schema": 1).

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "basis.hpp"
#include "bounds.hpp"
#include "cyclic.hpp"
#include "expansion.hpp"

namespace xcyclic {

using json = nlohmann::ordered_json;

inline std::string element_to_string(const FieldElement& x) {
    if (x.is_zero()) return "0";
    int k = x.log();
    if (k == 0) return "1";
    if (k == 1) return "a";
    return "a^" + std::to_string(k);
}

inline FieldElement parse_element(const Field& f, const std::string& s) {
    if (s == "0") return f.zero();
    if (s == "1") return f.one();
    if (s == "a") return f.alpha();
    if (s.rfind("a^", 0) == 0) {
        long long e = std::stoll(s.substr(2));
        return f.alpha_pow(((e % f.mult_order()) + f.mult_order()) % f.mult_order());
    }
    // bare integers are prime-subfield constants (e.g. "2" in GF(3^2))
    bool digits = !s.empty();
    for (char c : s)
        if (!isdigit((unsigned char)c)) digits = false;
    if (digits) {
        int v = std::stoi(s);
        if (v < f.p()) return f.element(v);
    }
    throw Error("ParseError", "bad element notation: " + s);
}

// monomials high-to-low: "x^4+x+1", "a^5x^2+a^10x+1"
inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        FieldElement c = p.coeff(d);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = element_to_string(c);
        if (d == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs;
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

inline Poly parse_poly(const Field& f, const std::string& s) {
    std::vector<FieldElement> coeffs;
    std::stringstream ss(s);
    std::string mono;
    auto set = [&](int d, const FieldElement& c) {
        if ((int)coeffs.size() <= d) coeffs.resize(d + 1, f.zero());
        coeffs[d] += c;
    };
    while (std::getline(ss, mono, '+')) {
        if (mono.empty()) throw Error("ParseError", "empty monomial in: " + s);
        size_t xp = mono.find('x');
        std::string cs = (xp == std::string::npos) ? mono : mono.substr(0, xp);
        FieldElement c = cs.empty() ? f.one() : parse_element(f, cs);
        int d = 0;
        if (xp != std::string::npos) {
            std::string rest = mono.substr(xp + 1);
            if (rest.empty())
                d = 1;
            else if (rest[0] == '^')
                d = std::stoi(rest.substr(1));
            else
                throw Error("ParseError", "bad monomial: " + mono);
        }
        set(d, c);
    }
    return Poly(f, std::move(coeffs));
}

// small-field defining polynomial, integer coefficients low-first
inline std::vector<int> parse_prime_poly(const std::string& s, int p) {
    std::vector<int> coeffs;
    std::stringstream ss(s);
    std::string mono;
    while (std::getline(ss, mono, '+')) {
        size_t xp = mono.find('x');
        int c = (xp == std::string::npos) ? std::stoi(mono)
                                          : (xp == 0 ? 1 : std::stoi(mono.substr(0, xp)));
        int d = 0;
        if (xp != std::string::npos) {
            std::string rest = mono.substr(xp + 1);
            d = rest.empty() ? 1 : (rest[0] == '^' ? std::stoi(rest.substr(1)) : -1);
            if (d < 0) throw Error("ParseError", "bad monomial: " + mono);
        }
        if ((int)coeffs.size() <= d) coeffs.resize(d + 1, 0);
        coeffs[d] = (coeffs[d] + c) % p;
    }
    return coeffs;
}

inline std::string prime_poly_to_string(const std::vector<int>& c) {
    std::string out;
    for (int d = (int)c.size() - 1; d >= 0; --d) {
        if (!c[d]) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += std::to_string(c[d]);
        } else {
            if (c[d] != 1) out += std::to_string(c[d]);
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

// "1,a^5,a,a^6"
inline Basis parse_basis(const Field& f, int q, const std::string& s) {
    std::vector<FieldElement> el;
    for (const auto& tok : split_csv(s)) el.push_back(parse_element(f, tok));
    return Basis(f, q, std::move(el));
}

inline std::string basis_to_string(const Basis& b) {
    std::string out;
    for (const auto& e : b.elements()) {
        if (!out.empty()) out += ",";
        out += element_to_string(e);
    }
    return out;
}

// subbasis indices are 1-based externally, 0-based internally
inline std::vector<int> parse_subbasis(const std::string& s, int m) {
    std::vector<int> out;
    for (const auto& tok : split_csv(s)) {
        int v = std::stoi(tok);
        if (v < 1 || v > m) throw Error("ParseError", "subbasis index out of range: " + tok);
        out.push_back(v - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<int> parse_exponents(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split_csv(s)) out.push_back(std::stoi(tok));
    return out;
}

// one row per line, comma-separated element notation
inline std::string matrix_to_text(const Matrix& m) {
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += element_to_string(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

// one row per line, entry codes as base-p digits, no separators; each GF(q)
// entry takes subfield_degree(q) digits so rows are fixed-width
inline std::string expanded_matrix_to_text(const Matrix& m, int q) {
    const Field& f = m.field();
    if (f.p() > 9) throw Error("PreconditionViolated", "digit export needs p <= 9");
    int s = f.subfield_degree(q);
    SubfieldView view(f, q);
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            int small = view.index(m.at(i, j));
            for (int d = s - 1; d >= 0; --d) {
                int pw = 1;
                for (int t = 0; t < d; ++t) pw *= f.p();
                out += (char)('0' + (small / pw) % f.p());
            }
        }
        out += "\n";
    }
    return out;
}

inline std::string word_to_digits(const std::vector<FieldElement>& w, int q) {
    if (w.empty()) return "";
    Matrix m(w[0].field(), 1, w.size());
    for (size_t i = 0; i < w.size(); ++i) m.at(0, i) = w[i];
    std::string s = expanded_matrix_to_text(m, q);
    s.pop_back();  // strip trailing newline
    return s;
}

inline json field_json(const Field& f) {
    return {{"schema", 1},
            {"p", f.p()},
            {"n", f.n()},
            {"defining_poly", prime_poly_to_string(f.defining_poly())},
            {"order", f.order()}};
}

inline json codebook_json(const Codebook& cb, const Basis& b) {
    json out = {{"schema", 1}, {"q", cb.q}, {"codewords", json::array()}};
    for (size_t i = 0; i < cb.codewords.size(); ++i) {
        std::vector<std::string> sym;
        for (const auto& x : cb.codewords[i]) sym.push_back(element_to_string(x));
        out["codewords"].push_back(
            {{"message", cb.messages[i]},
             {"symbol_codeword", sym},
             {"expanded_codeword", word_to_digits(expand_word(cb.codewords[i], b), cb.q)},
             {"weight", hamming_weight(cb.codewords[i])}});
    }
    return out;
}

inline json bound_report_json(const BoundReport& rep) {
    json levels = json::array();
    for (const auto& l : rep.levels)
        levels.push_back({{"i", l.i},
                          {"class_reps", l.class_reps},
                          {"K", l.K},
                          {"d", l.d},
                          {"method", l.exact ? "exact-brute-force" : "BCH-fallback"},
                          {"product", l.product}});
    return {{"schema", 1}, {"levels", levels}, {"bound", rep.bound}};
}

}  // namespace xcyclic
