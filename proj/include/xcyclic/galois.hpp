#pragma once

// Finite field construction GF(p^n) with log/antilog tables, subfield views,
// conjugacy classes and minimal polynomials.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace xcyclic {

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- polynomial arithmetic over Z_p (coefficients low degree first) ---

inline void ztrim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> zmulmod(const std::vector<int>& a, const std::vector<int>& b,
                                const std::vector<int>& f, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce mod monic f
    int n = (int)f.size() - 1;
    for (int d = (int)r.size() - 1; d >= n; --d) {
        int c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (int i = 0; i < n; ++i)
            r[d - n + i] = ((r[d - n + i] - c * f[i]) % p + p) % p;
    }
    ztrim(r);
    return r;
}

inline std::vector<int> zpowmod(std::vector<int> base, long long e,
                                const std::vector<int>& f, int p) {
    std::vector<int> r = {1};
    while (e > 0) {
        if (e & 1) r = zmulmod(r, base, f, p);
        base = zmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<int> zmod(std::vector<int> a, const std::vector<int>& b, int p) {
    // remainder of a by b (b nonzero, not necessarily monic)
    int db = (int)b.size() - 1;
    int lead = b[db];
    // inverse of lead mod p
    int inv = 1;
    for (int i = 0; i < p - 2; ++i) inv = inv * lead % p;
    for (int d = (int)a.size() - 1; d >= db; --d) {
        if (a[d] == 0) continue;
        int c = a[d] * inv % p;
        for (int i = 0; i <= db; ++i)
            a[d - db + i] = ((a[d - db + i] - c * b[i]) % p + p) % p;
    }
    ztrim(a);
    return a;
}

inline std::vector<int> zgcd(std::vector<int> a, std::vector<int> b, int p) {
    ztrim(a);
    ztrim(b);
    while (!b.empty()) {
        auto r = zmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f monic degree n is irreducible over GF(p) iff
// x^(p^n) == x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for each prime l | n.
inline bool is_irreducible(const std::vector<int>& f, int p) {
    int n = (int)f.size() - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    auto ppow = [](int p, int e) {
        long long r = 1;
        while (e--) r *= p;
        return r;
    };
    std::vector<int> x = {0, 1};
    auto xn = zpowmod(x, ppow(p, n), f, p);
    std::vector<int> diff = xn;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ztrim(diff);
    if (!diff.empty()) return false;
    int m = n;
    for (int l = 2; l <= m; ++l) {
        if (m % l) continue;
        while (m % l == 0) m /= l;
        auto xs = zpowmod(x, ppow(p, n / l), f, p);
        std::vector<int> d = xs;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        ztrim(d);
        auto g = zgcd(f, d, p);
        if ((int)g.size() - 1 != 0) return false;
    }
    return true;
}

inline std::vector<long long> prime_factors(long long x) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            fs.push_back(d);
            while (x % d == 0) x /= d;
        }
    if (x > 1) fs.push_back(x);
    return fs;
}

}  // namespace detail

class FieldElement;

// GF(p^n) with precomputed discrete log tables. Elements are integer codes
// whose base-p digits are the coordinates over the power basis of the
// defining polynomial. Immutable after construction.
class Field {
public:
    static constexpr int kTableCap = 1 << 20;

    Field(int p, int n) : Field(p, n, default_poly(p, n)) {}

    Field(int p, int n, const std::vector<int>& defining_poly)
        : p_(p), n_(n), poly_(defining_poly) {
        if (!detail::is_prime(p)) throw Error("NotPrime", "p = " + std::to_string(p));
        if (n < 1) throw Error("BadDegree", "n = " + std::to_string(n));
        long long ord = 1;
        for (int i = 0; i < n; ++i) {
            ord *= p;
            if (ord > kTableCap)
                throw Error("TooLarge", "p^n exceeds table cap 2^20");
        }
        order_ = (int)ord;
        N_ = order_ - 1;
        detail::ztrim(poly_);
        if ((int)poly_.size() - 1 != n || poly_.back() != 1)
            throw Error("BadPoly", "defining polynomial must be monic of degree n");
        for (int c : poly_)
            if (c < 0 || c >= p) throw Error("BadPoly", "coefficients must be in [0, p)");
        if (!detail::is_irreducible(poly_, p))
            throw Error("NotIrreducible", "defining polynomial is reducible over GF(p)");
        build_tables();
    }

    int p() const { return p_; }
    int n() const { return n_; }
    int order() const { return order_; }
    int mult_order() const { return N_; }  // N = p^n - 1
    const std::vector<int>& defining_poly() const { return poly_; }

    // ---- code-level arithmetic ----
    int add_codes(int a, int b) const {
        if (p_ == 2) return a ^ b;
        int r = 0, mul = 1;
        while (a || b) {
            r += (a % p_ + b % p_) % p_ * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }
    int neg_code(int a) const {
        if (p_ == 2) return a;
        int r = 0, mul = 1;
        while (a) {
            r += (p_ - a % p_) % p_ * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }
    int mul_codes(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % N_];
    }
    int inv_code(int a) const {
        if (a == 0) throw Error("DivideByZero", "inverse of zero");
        return antilog_[(N_ - log_[a]) % N_];
    }
    int pow_code(int a, long long e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw Error("DivideByZero", "0 to a negative power");
        }
        long long k = (long long)log_[a] * (e % N_) % N_;
        if (k < 0) k += N_;
        return antilog_[k];
    }
    int log_code(int a) const {
        if (a == 0) throw Error("DivideByZero", "log of zero");
        return log_[a];
    }
    int antilog_code(long long k) const {
        k %= N_;
        if (k < 0) k += N_;
        return antilog_[k];
    }

    std::vector<int> digits(int code) const {
        std::vector<int> d(n_);
        for (int i = 0; i < n_; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    }
    int from_digits(const std::vector<int>& d) const {
        int code = 0;
        for (int i = (int)d.size() - 1; i >= 0; --i) code = code * p_ + d[i] % p_;
        return code;
    }

    // ---- subfields ----
    bool is_subfield_order(long long q) const {
        if (q < 2) return false;
        long long v = q;
        int s = 0;
        while (v % p_ == 0) {
            v /= p_;
            ++s;
        }
        return v == 1 && s >= 1 && n_ % s == 0;
    }
    int subfield_degree(long long q) const {
        if (!is_subfield_order(q))
            throw Error("NoSuchSubfield", "no subfield of order " + std::to_string(q));
        int s = 0;
        while (q > 1) {
            q /= p_;
            ++s;
        }
        return s;
    }
    std::vector<int> subfield_orders() const {
        std::vector<int> out;
        for (int s = 1; s <= n_; ++s)
            if (n_ % s == 0) {
                int q = 1;
                for (int i = 0; i < s; ++i) q *= p_;
                out.push_back(q);
            }
        return out;
    }

    // ---- element factories ----
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const;
    FieldElement alpha_pow(long long e) const;
    FieldElement element(int code) const;

private:
    static std::vector<int> default_poly(int p, int n) {
        // fixed defaults for the common binary fields; otherwise the monic
        // primitive polynomial with smallest coefficient code (sum c_i p^i)
        if (p == 2) {
            static const std::map<int, std::vector<int>> table = {
                {1, {1, 1}},                          // x + 1
                {2, {1, 1, 1}},                       // x^2 + x + 1
                {4, {1, 1, 0, 0, 1}},                 // x^4 + x + 1
                {5, {1, 0, 1, 0, 0, 1}},              // x^5 + x^2 + 1
                {6, {1, 1, 0, 0, 0, 0, 1}},           // x^6 + x + 1
                {8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},     // x^8 + x^4 + x^3 + x^2 + 1
                {10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},  // x^10 + x^3 + 1
            };
            auto it = table.find(n);
            if (it != table.end()) return it->second;
        }
        return search_primitive(p, n);
    }

    static std::vector<int> search_primitive(int p, int n) {
        long long cap = 1;
        for (int i = 0; i < n; ++i) cap *= p;
        for (long long code = 1; code < cap; ++code) {
            std::vector<int> f(n + 1);
            long long c = code;
            for (int i = 0; i < n; ++i) {
                f[i] = (int)(c % p);
                c /= p;
            }
            f[n] = 1;
            if (f[0] == 0) continue;
            if (!detail::is_irreducible(f, p)) continue;
            if (is_primitive(f, p, n)) return f;
        }
        throw Error("NotPrimitive", "no primitive polynomial found");  // unreachable
    }

    static bool is_primitive(const std::vector<int>& f, int p, int n) {
        long long N = 1;
        for (int i = 0; i < n; ++i) N *= p;
        N -= 1;
        std::vector<int> x = {0, 1};
        if (n == 1) x = {((-f[0]) % p + p) % p};  // alpha = -c0, root of x + c0
        for (long long l : detail::prime_factors(N)) {
            auto r = detail::zpowmod(x, N / l, f, p);
            if (r.size() == 1 && r[0] == 1) return false;
        }
        return true;
    }

    void build_tables() {
        antilog_.assign(N_, 0);
        log_.assign(order_, -1);
        // alpha = residue of x (or -c0 for n == 1); multiply-by-alpha walk
        std::vector<int> cur = {1};
        int alpha_c0 = (n_ == 1) ? ((-poly_[0]) % p_ + p_) % p_ : 0;
        for (int k = 0; k < N_; ++k) {
            int code = 0;
            for (int i = (int)cur.size() - 1; i >= 0; --i) code = code * p_ + cur[i];
            if (code == 0 || (log_[code] != -1))
                throw Error("NotPrimitive", "x does not generate the multiplicative group");
            antilog_[k] = code;
            log_[code] = k;
            if (n_ == 1)
                cur = {cur[0] * alpha_c0 % p_};
            else
                cur = detail::zmulmod(cur, {0, 1}, poly_, p_);
        }
        // closure check: alpha^N = 1
        if (n_ > 1) {
            int code = 0;
            for (int i = (int)cur.size() - 1; i >= 0; --i) code = code * p_ + cur[i];
            if (code != 1) throw Error("NotPrimitive", "alpha^N != 1");
        }
    }

    int p_, n_, order_, N_;
    std::vector<int> poly_;
    std::vector<int> log_, antilog_;
};

class FieldElement {
public:
    FieldElement() : f_(nullptr), code_(0) {}
    FieldElement(const Field* f, int code) : f_(f), code_(code) {}

    const Field& field() const { return *f_; }
    const Field* field_ptr() const { return f_; }
    int code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }
    int log() const { return f_->log_code(code_); }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return {f_, f_->add_codes(code_, o.code_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return {f_, f_->add_codes(code_, f_->neg_code(o.code_))};
    }
    FieldElement operator-() const { return {f_, f_->neg_code(code_)}; }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return {f_, f_->mul_codes(code_, o.code_)};
    }
    FieldElement operator/(const FieldElement& o) const {
        check(o);
        return {f_, f_->mul_codes(code_, f_->inv_code(o.code_))};
    }
    FieldElement inv() const { return {f_, f_->inv_code(code_)}; }
    FieldElement pow(long long e) const { return {f_, f_->pow_code(code_, e)}; }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && code_ == o.code_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return code_ < o.code_; }

private:
    void check(const FieldElement& o) const {
        if (f_ != o.f_) throw Error("FieldMismatch", "elements of different fields");
    }
    const Field* f_;
    int code_;
};

inline FieldElement Field::zero() const { return {this, 0}; }
inline FieldElement Field::one() const { return {this, 1}; }
inline FieldElement Field::alpha() const { return {this, antilog_code(1)}; }
inline FieldElement Field::alpha_pow(long long e) const { return {this, antilog_code(e)}; }
inline FieldElement Field::element(int code) const {
    if (code < 0 || code >= order_) throw Error("BadCode", "element code out of range");
    return {this, code};
}

// gamma lies in the subfield of the given order iff gamma^q = gamma.
inline bool is_subfield_element(const FieldElement& g, long long q) {
    const Field& f = g.field();
    f.subfield_degree(q);  // validates, throws NoSuchSubfield
    return g.pow(q) == g;
}

// smallest d >= 1 with gamma^(q^d) = gamma; divides n / subfield_degree(q)
inline int minimal_dimension(const FieldElement& g, long long q) {
    const Field& f = g.field();
    int s = f.subfield_degree(q);
    int m = f.n() / s;
    if (g.is_zero()) return 1;
    FieldElement x = g;
    for (int d = 1; d <= m; ++d) {
        x = x.pow(q);
        if (x == g) return d;
    }
    throw Error("Internal", "Frobenius orbit did not close");
}

inline std::vector<FieldElement> conjugacy_class(const FieldElement& g, long long q) {
    int d = minimal_dimension(g, q);
    std::vector<FieldElement> out;
    FieldElement x = g;
    for (int i = 0; i < d; ++i) {
        out.push_back(x);
        x = x.pow(q);
    }
    return out;
}

// Elements of the subfield GF(q) viewed inside the ambient field, indexed by
// a canonical small-field code: elem(c) = sum_j digit_j(c) * g^j where g is
// the fixed primitive element alpha^(N/(q-1)) of the subfield.
struct SubfieldView {
    const Field* field;
    int q;
    int s;                              // degree over prime field
    FieldElement g;                     // primitive element of GF(q)
    std::vector<FieldElement> elems;    // indexed by small-field code
    std::vector<int> index_of_code;     // ambient code -> small code, -1 if outside

    SubfieldView(const Field& f, int q_) : field(&f), q(q_), s(f.subfield_degree(q_)) {
        g = (q == f.order()) ? f.alpha()
            : (q == 2)       ? f.one()
                             : f.alpha_pow((long long)f.mult_order() / (q - 1));
        elems.reserve(q);
        index_of_code.assign(f.order(), -1);
        int p = f.p();
        for (int c = 0; c < q; ++c) {
            FieldElement e = f.zero();
            int v = c;
            FieldElement gp = f.one();
            for (int j = 0; j < s; ++j) {
                int d = v % p;
                v /= p;
                FieldElement t = gp;
                for (int r = 1; r < d; ++r) t += gp;  // d * g^j via repeated add
                if (d) e += t;
                gp *= g;
            }
            elems.push_back(e);
            index_of_code[e.code()] = c;
        }
    }
    int index(const FieldElement& e) const {
        int i = index_of_code[e.code()];
        if (i < 0) throw Error("NoSuchSubfield", "element not in subfield view");
        return i;
    }
};

// trace from GF(p^n) down to GF(q)
inline FieldElement trace_to(const FieldElement& x, long long q) {
    const Field& f = x.field();
    int s = f.subfield_degree(q);
    int m = f.n() / s;
    FieldElement t = f.zero();
    FieldElement y = x;
    for (int i = 0; i < m; ++i) {
        t += y;
        y = y.pow(q);
    }
    return t;
}

// ---- polynomials over a field ----

class Poly {
public:
    Poly() : f_(nullptr) {}
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<FieldElement> coeffs) : f_(&f), c_(std::move(coeffs)) {
        trim();
    }
    static Poly from_codes(const Field& f, const std::vector<int>& codes) {
        std::vector<FieldElement> c;
        c.reserve(codes.size());
        for (int v : codes) c.push_back(f.element(v));
        return Poly(f, std::move(c));
    }
    static Poly x_pow(const Field& f, int k) {
        std::vector<FieldElement> c(k + 1, f.zero());
        c[k] = f.one();
        return Poly(f, std::move(c));
    }
    // x^N - 1
    static Poly x_pow_minus_one(const Field& f, int N) {
        std::vector<FieldElement> c(N + 1, f.zero());
        c[0] = -f.one();
        c[N] = f.one();
        return Poly(f, std::move(c));
    }
    static Poly from_roots(const Field& f, const std::vector<FieldElement>& roots) {
        Poly r(f, {f.one()});
        for (const auto& rt : roots) r = r * Poly(f, {-rt, f.one()});
        return r;
    }

    const Field& field() const { return *f_; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(int i) const {
        return (i >= 0 && i < (int)c_.size()) ? c_[i] : f_->zero();
    }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement lead() const { return c_.back(); }

    Poly operator+(const Poly& o) const {
        std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), f_->zero());
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff((int)i) + o.coeff((int)i);
        return Poly(*f_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), f_->zero());
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff((int)i) - o.coeff((int)i);
        return Poly(*f_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(*f_);
        std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, f_->zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(*f_, std::move(r));
    }
    Poly operator*(const FieldElement& s) const {
        std::vector<FieldElement> r = c_;
        for (auto& x : r) x *= s;
        return Poly(*f_, std::move(r));
    }

    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error("DivideByZero", "polynomial division by zero");
        std::vector<FieldElement> rem = c_;
        int dd = d.degree();
        FieldElement linv = d.lead().inv();
        std::vector<FieldElement> quot;
        if ((int)rem.size() - 1 >= dd) quot.assign(rem.size() - dd, f_->zero());
        for (int k = (int)rem.size() - 1 - dd; k >= 0; --k) {
            FieldElement c = rem[k + dd] * linv;
            quot[k] = c;
            if (c.is_zero()) continue;
            for (int i = 0; i <= dd; ++i) rem[k + i] -= c * d.c_[i];
        }
        return {Poly(*f_, std::move(quot)), Poly(*f_, std::move(rem))};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& num) const { return (num % *this).is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }

    FieldElement eval(const FieldElement& x) const {
        FieldElement r = f_->zero();
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const Field* f_;
    std::vector<FieldElement> c_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

// p_gamma(x) = (x - gamma)(x - gamma^q)...(x - gamma^(q^(m_gamma - 1)))
inline Poly minimal_polynomial(const FieldElement& g, long long q) {
    auto cls = conjugacy_class(g, q);
    Poly r = Poly::from_roots(g.field(), cls);
    for (const auto& c : r.coeffs())
        if (!is_subfield_element(c, q))
            throw Error("Internal", "minimal polynomial coefficient outside GF(q)");
    return r;
}

// all conjugacy classes of nonzero elements over GF(q), sorted by smallest
// alpha-exponent; each class is listed starting from its smallest exponent
inline std::vector<std::vector<FieldElement>> conjugacy_classes(const Field& f, long long q) {
    std::vector<char> seen(f.order(), 0);
    std::vector<std::vector<FieldElement>> out;
    for (int e = 0; e < f.mult_order(); ++e) {
        FieldElement g = f.alpha_pow(e);
        if (seen[g.code()]) continue;
        auto cls = conjugacy_class(g, q);
        for (const auto& x : cls) seen[x.code()] = 1;
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace xcyclic
