#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xcyclic/basis.hpp"
#include "xcyclic/cyclic.hpp"

using namespace xcyclic;

TEST_CASE("basis construction") {
    Field f(2, 4);
    SUBCASE("polynomial basis is valid") {
        Basis b = Basis::polynomial(f, 2);
        CHECK(b.m() == 4);
        for (int i = 0; i < 4; ++i) CHECK(b.elements()[i] == f.alpha_pow(i));
    }
    SUBCASE("composite basis {1, a^5, a, a^6} is valid") {
        Basis b(f, 2, {f.one(), f.alpha_pow(5), f.alpha(), f.alpha_pow(6)});
        CHECK(b.m() == 4);
    }
    SUBCASE("dependent set rejected: 1 + a^5 + a^10 = 0") {
        try {
            Basis(f, 2, {f.one(), f.alpha_pow(5), f.alpha_pow(10), f.alpha_pow(2)});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "LinearlyDependent");
        }
    }
    SUBCASE("wrong count rejected") {
        try {
            Basis(f, 2, {f.one(), f.alpha()});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "WrongCount");
        }
    }
    SUBCASE("basis over GF(4): m = 2") {
        Basis b = Basis::polynomial(f, 4);
        CHECK(b.m() == 2);
    }
}

TEST_CASE("decompose") {
    Field f(2, 4);
    Basis comp(f, 2, {f.one(), f.alpha_pow(5), f.alpha(), f.alpha_pow(6)});
    SUBCASE("basis element gives unit vector") {
        for (int i = 0; i < 4; ++i) {
            auto mu = comp.decompose(comp.elements()[i]);
            for (int j = 0; j < 4; ++j) CHECK(mu[j] == (i == j ? f.one() : f.zero()));
        }
    }
    SUBCASE("zero gives zero vector") {
        for (const auto& mu : comp.decompose(f.zero())) CHECK(mu.is_zero());
    }
    SUBCASE("a^10 = 1 + a^5 under {1, a^5, a, a^6}") {
        auto mu = comp.decompose(f.alpha_pow(10));
        CHECK(mu[0] == f.one());
        CHECK(mu[1] == f.one());
        CHECK(mu[2].is_zero());
        CHECK(mu[3].is_zero());
    }
    SUBCASE("round trip, exhaustive on GF(2^4) and GF(9)") {
        for (int c = 0; c < f.order(); ++c)
            CHECK(comp.recompose(comp.decompose(f.element(c))) == f.element(c));
        Field g(3, 2);
        Basis pb = Basis::polynomial(g, 3);
        for (int c = 0; c < g.order(); ++c)
            CHECK(pb.recompose(pb.decompose(g.element(c))) == g.element(c));
    }
    SUBCASE("GF(q)-linearity over GF(4) view") {
        Basis b4 = Basis::polynomial(f, 4);
        SubfieldView v(f, 4);
        for (int a = 1; a < 4; ++a)
            for (int c = 0; c < f.order(); ++c) {
                FieldElement s = v.elems[a], x = f.element(c);
                auto mu_x = b4.decompose(x);
                auto mu_sx = b4.decompose(s * x);
                for (int i = 0; i < 2; ++i) CHECK(mu_sx[i] == s * mu_x[i]);
            }
    }
}

TEST_CASE("decompose_vector and decompose_poly") {
    Field f(2, 4);
    Basis b = Basis::polynomial(f, 2);
    SUBCASE("zero vector maps to zero") {
        std::vector<FieldElement> z(5, f.zero());
        for (const auto& x : b.decompose_vector(z, 0)) CHECK(x.is_zero());
    }
    SUBCASE("component of g(a) is the coordinate table") {
        auto g = g_vector(f.alpha());
        auto c0 = b.decompose_vector(g, 0);
        for (int t = 0; t < 15; ++t) CHECK(c0[t] == b.decompose(f.alpha_pow(t))[0]);
    }
    SUBCASE("reconstruction: sum_j beta_j mu_j(y) = y") {
        auto g = g_vector(f.alpha_pow(7));
        std::vector<FieldElement> back(g.size(), f.zero());
        for (int j = 0; j < 4; ++j) {
            auto cj = b.decompose_vector(g, j);
            for (size_t t = 0; t < g.size(); ++t) back[t] += b.elements()[j] * cj[t];
        }
        CHECK(back == g);
    }
}

TEST_CASE("dual basis") {
    SUBCASE("defining trace property and involution, GF(2^4)") {
        Field f(2, 4);
        for (auto elems : std::vector<std::vector<FieldElement>>{
                 {f.one(), f.alpha(), f.alpha_pow(2), f.alpha_pow(3)},
                 {f.one(), f.alpha_pow(5), f.alpha(), f.alpha_pow(6)}}) {
            Basis b(f, 2, elems);
            Basis d = b.dual();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(trace_to(b.elements()[i] * d.elements()[j], 2) ==
                          (i == j ? f.one() : f.zero()));
            Basis dd = d.dual();
            for (int i = 0; i < 4; ++i) CHECK(dd.elements()[i] == b.elements()[i]);
        }
    }
    SUBCASE("GF(2^2), {1, a}: dual = {a^2, 1}") {
        Field f(2, 2);
        Basis b(f, 2, {f.one(), f.alpha()});
        Basis d = b.dual();
        CHECK(d.elements()[0] == f.alpha_pow(2));
        CHECK(d.elements()[1] == f.one());
    }
}

TEST_CASE("composite basis") {
    Field f(2, 8);
    auto A = [&](int e) { return f.alpha_pow(e); };
    SUBCASE("GF(16) inner x {1, a} outer") {
        Basis b = composite_basis(f, 2, 16, {A(0), A(17), A(34), A(51)}, {A(0), A(1)});
        std::vector<int> want = {0, 17, 34, 51, 1, 18, 35, 52};
        for (int i = 0; i < 8; ++i) CHECK(b.elements()[i] == A(want[i]));
    }
    SUBCASE("GF(4) inner x 4-element outer") {
        Basis b = composite_basis(f, 2, 4, {A(0), A(85)}, {A(0), A(17), A(1), A(18)});
        std::vector<int> want = {0, 85, 17, 102, 1, 86, 18, 103};
        for (int i = 0; i < 8; ++i) CHECK(b.elements()[i] == A(want[i]));
    }
    SUBCASE("trivial outer keeps inner") {
        Field g(2, 4);
        Basis b = composite_basis(g, 2, 16, {g.one(), g.alpha(), g.alpha_pow(2), g.alpha_pow(3)},
                                  {g.one()});
        for (int i = 0; i < 4; ++i) CHECK(b.elements()[i] == g.alpha_pow(i));
    }
}

TEST_CASE("structure constants and f_coeff") {
    Field f(2, 4);
    Basis b = Basis::polynomial(f, 2);
    StructureConstants sc(b, {0, 1, 2});
    SUBCASE("beta_1 = 1: mu^{(1,k)}_j = delta_kj") {
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j)
                CHECK(sc.prod[0][k][j] == (k == j ? f.one() : f.zero()));
    }
    SUBCASE("q^0 Frobenius constants are the identity pattern") {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(sc.frob.at(0)[i][j] == (i == j ? f.one() : f.zero()));
    }
    SUBCASE("beta_2^2 = a^2 = beta_3") {
        for (int j = 0; j < 4; ++j)
            CHECK(sc.frob.at(1)[1][j] == (j == 2 ? f.one() : f.zero()));
    }
    SUBCASE("reconstruction of products") {
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                FieldElement s = f.zero();
                for (int j = 0; j < 4; ++j) s += sc.prod[i][k][j] * b.elements()[j];
                CHECK(s == b.elements()[i] * b.elements()[k]);
            }
    }
    SUBCASE("f_coeff identity: gamma * beta_i = sum_l beta_l f_il(mu(gamma)), exhaustive") {
        for (int c = 0; c < f.order(); ++c) {
            auto mu = b.decompose(f.element(c));
            for (int i = 0; i < 4; ++i) {
                FieldElement s = f.zero();
                for (int l = 0; l < 4; ++l) s += b.elements()[l] * f_coeff(i, l, mu, sc);
                CHECK(s == f.element(c) * b.elements()[i]);
            }
        }
    }
    SUBCASE("f_coeff at unit vector returns the structure constant") {
        for (int r = 0; r < 4; ++r) {
            std::vector<FieldElement> e(4, f.zero());
            e[r] = f.one();
            for (int i = 0; i < 4; ++i)
                for (int l = 0; l < 4; ++l) CHECK(f_coeff(i, l, e, sc) == sc.prod[i][r][l]);
        }
    }
}

// rank over GF(2) of the m vectors [f_{i,j}(mu(gamma^t))]_t
static int component_rank(const Field& f, const Basis& b, const StructureConstants& sc,
                          const FieldElement& gamma, int j) {
    int N = f.mult_order();
    Matrix m(f, b.m(), N);
    FieldElement x = f.one();
    for (int t = 0; t < N; ++t) {
        auto mu = b.decompose(x);
        for (int i = 0; i < b.m(); ++i) m.at(i, t) = f_coeff(i, j, mu, sc);
        x *= gamma;
    }
    return (int)m.rank();
}

TEST_CASE("coefficient-function independence") {
    Field f(2, 4);
    Basis b = Basis::polynomial(f, 2);
    StructureConstants sc(b);
    SUBCASE("no nontrivial combination vanishes on all of GF*(q^m)") {
        // nu with sum_i nu_i f_ij(mu(gamma)) = 0 for all gamma must be zero:
        // equivalently the m functions f_.j have full rank over all arguments
        for (int j = 0; j < 4; ++j) {
            Matrix m(f, 4, f.mult_order());
            for (int t = 0; t < f.mult_order(); ++t) {
                auto mu = b.decompose(f.alpha_pow(t));
                for (int i = 0; i < 4; ++i) m.at(i, t) = f_coeff(i, j, mu, sc);
            }
            CHECK(m.rank() == 4);
        }
    }
    SUBCASE("non-subfield gamma: component vectors independent") {
        for (int e : {1, 3, 7}) {
            for (int j = 0; j < 4; ++j)
                CHECK(component_rank(f, b, sc, f.alpha_pow(e), j) == 4);
        }
    }
    SUBCASE("subfield gamma = a^5 fails independence") {
        bool all_full = true;
        for (int j = 0; j < 4; ++j)
            if (component_rank(f, b, sc, f.alpha_pow(5), j) < 4) all_full = false;
        CHECK(!all_full);
    }
}

TEST_CASE("support indices") {
    Field f(2, 4);
    Basis comp(f, 2, {f.one(), f.alpha_pow(5), f.alpha(), f.alpha_pow(6)});
    SUBCASE("zero word has empty support") {
        std::vector<FieldElement> z(5, f.zero());
        CHECK(comp.support_indices(z).empty());
    }
    SUBCASE("beta_1 g(a^10) supported on {1, 2} (1-based)") {
        auto g = g_vector(f.alpha_pow(10));
        std::vector<FieldElement> y(g.size());
        for (size_t t = 0; t < g.size(); ++t) y[t] = comp.elements()[0] * g[t];
        CHECK(comp.support_indices(y) == std::set<int>{0, 1});
        for (size_t t = 0; t < g.size(); ++t) y[t] = comp.elements()[1] * g[t];
        CHECK(comp.support_indices(y) == std::set<int>{0, 1});
    }
    SUBCASE("g(a) has full support under any basis (Lemma: non-subfield)") {
        Basis pb = Basis::polynomial(f, 2);
        auto g = g_vector(f.alpha());
        CHECK(pb.support_indices(g) == std::set<int>{0, 1, 2, 3});
        CHECK(comp.support_indices(g) == std::set<int>{0, 1, 2, 3});
    }
    SUBCASE("theta g(gamma) full support for every nonzero theta, non-subfield gamma") {
        Basis pb = Basis::polynomial(f, 2);
        for (int e : {1, 3, 7}) {
            auto g = g_vector(f.alpha_pow(e));
            for (int th = 1; th < f.order(); ++th) {
                std::vector<FieldElement> y(g.size());
                for (size_t t = 0; t < g.size(); ++t) y[t] = f.element(th) * g[t];
                CHECK(pb.support_indices(y).size() == 4);
            }
        }
    }
}
