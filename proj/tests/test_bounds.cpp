#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xcyclic/bounds.hpp"

using namespace xcyclic;

TEST_CASE("Plotkin bound arithmetic") {
    SUBCASE("(15, 2, 16) -> 8") {
        Rational r = plotkin_bound(15, 2, 16);
        CHECK(r.is_integer());
        CHECK(r.floor_val() == 8);
    }
    SUBCASE("(63, 2, 8) -> 36") {
        Rational r = plotkin_bound(63, 2, 8);
        CHECK(r.is_integer());
        CHECK(r.floor_val() == 36);
    }
    SUBCASE("non-integer case floors") {
        Rational r = plotkin_bound(3, 2, 2);  // 3*1*2 / (2*1) = 3
        CHECK(r.floor_val() == 3);
        Rational s = plotkin_bound(5, 2, 3);  // 15/4
        CHECK(!s.is_integer());
        CHECK(s.floor_val() == 3);
    }
    SUBCASE("A < 2 rejected") {
        try {
            plotkin_bound(15, 2, 1);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "PreconditionViolated");
        }
    }
}

TEST_CASE("Plotkin matching families") {
    SUBCASE("GF(2^4), gamma = a: all three variants match") {
        Field f(2, 4);
        auto r1 = plotkin_match_check(f, 2, f.alpha(), PlotkinVariant::ClassCode);
        CHECK(r1.d_min == 8);
        CHECK(r1.A == 16);
        CHECK(r1.matches);
        auto r2 = plotkin_match_check(f, 2, f.alpha(), PlotkinVariant::WithXMinusOne);
        CHECK(r2.d_min == 7);
        CHECK(r2.A == 32);
        CHECK(r2.matches);
        auto r3 = plotkin_match_check(f, 2, f.alpha(), PlotkinVariant::PuncturedZero);
        CHECK(r3.d_min == 8);
        CHECK(r3.A == 15);
        CHECK(r3.matches);
    }
    SUBCASE("GF(2^4), subfield gamma = a^5: class code matches, others rejected") {
        Field f(2, 4);
        auto r = plotkin_match_check(f, 2, f.alpha_pow(5), PlotkinVariant::ClassCode);
        CHECK(r.d_min == 10);
        CHECK(r.A == 4);
        CHECK(r.matches);
        for (auto v : {PlotkinVariant::WithXMinusOne, PlotkinVariant::PuncturedZero}) {
            try {
                plotkin_match_check(f, 2, f.alpha_pow(5), v);
                CHECK(false);
            } catch (const Error& e) {
                CHECK(e.kind == "PreconditionViolated");
            }
        }
    }
    SUBCASE("GF(2^5) and GF(3^2): all variants match") {
        Field f5(2, 5, {1, 0, 1, 0, 0, 1});
        Field f9(3, 2);
        for (auto v : {PlotkinVariant::ClassCode, PlotkinVariant::WithXMinusOne,
                       PlotkinVariant::PuncturedZero}) {
            CHECK(plotkin_match_check(f5, 2, f5.alpha(), v).matches);
            CHECK(plotkin_match_check(f9, 3, f9.alpha(), v).matches);
        }
    }
    SUBCASE("zero gamma rejected") {
        Field f(2, 4);
        try {
            plotkin_match_check(f, 2, f.zero(), PlotkinVariant::ClassCode);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "PreconditionViolated");
        }
    }
}

TEST_CASE("BCH bound") {
    CHECK(bch_bound(15, {1, 2, 3, 4}) == 5);
    CHECK(bch_bound(15, {14, 0, 1}) == 4);  // cyclic wraparound
    CHECK(bch_bound(15, {}) == 1);
    CHECK(bch_bound(7, {0, 1, 2, 3, 4, 5}) == 7);
}

TEST_CASE("concatenation lower bound on the expanded distance") {
    Field f(2, 5, {1, 0, 1, 0, 0, 1});
    Basis b = Basis::polynomial(f, 2);
    const long long reference[3] = {48, 48, 36};
    const std::vector<std::vector<int>> sels = {
        {21, 22}, {21, 22, 23}, {18, 19, 20, 21, 22}};
    SUBCASE("three codes beat the reference bounds: 64 / 60 / 40") {
        long long expected[3] = {64, 60, 40};
        for (int c = 0; c < 3; ++c) {
            BoundReport rep = gcc_dmin_bound(f, 2, sels[c], b);
            CHECK(rep.bound == expected[c]);
            CHECK(rep.bound > reference[c]);
            for (const auto& l : rep.levels) CHECK(l.exact);
        }
    }
    SUBCASE("per-level values") {
        BoundReport r0 = gcc_dmin_bound(f, 2, sels[0], b);
        REQUIRE(r0.levels.size() == 1);
        CHECK(r0.levels[0].i == 4);
        CHECK(r0.levels[0].d == 16);
        BoundReport r1 = gcc_dmin_bound(f, 2, sels[1], b);
        REQUIRE(r1.levels.size() == 2);
        CHECK(r1.levels[0].i == 4);
        CHECK(r1.levels[0].d == 16);
        CHECK(r1.levels[1].i == 5);
        CHECK(r1.levels[1].d == 12);
        BoundReport r2 = gcc_dmin_bound(f, 2, sels[2], b);
        REQUIRE(r2.levels.size() == 2);
        CHECK(r2.levels[0].i == 4);
        CHECK(r2.levels[0].d == 10);
        CHECK(r2.levels[1].i == 5);
        CHECK(r2.levels[1].d == 8);
    }
    SUBCASE("levels accumulate classes and K grows") {
        BoundReport r1 = gcc_dmin_bound(f, 2, sels[1], b);
        CHECK(r1.levels[0].K < r1.levels[1].K);
        CHECK(r1.levels[0].class_reps.size() < r1.levels[1].class_reps.size());
    }
    SUBCASE("bound is sound where exact enumeration is feasible (GF(2^4))") {
        Field f4(2, 4);
        Basis b4 = Basis::polynomial(f4, 2);
        for (auto exps : std::vector<std::vector<int>>{{1}, {1, 2}, {5}, {7, 11}}) {
            BoundReport rep = gcc_dmin_bound(f4, 2, exps, b4);
            int exact = exact_dmin_expanded(f4, 2, exps, b4);
            CHECK(rep.bound <= exact);
        }
    }
    SUBCASE("tiny cap forces the BCH fallback, still a lower bound") {
        Field f4(2, 4);
        Basis b4 = Basis::polynomial(f4, 2);
        BoundReport rep = gcc_dmin_bound(f4, 2, {1}, b4, 4);
        for (const auto& l : rep.levels) CHECK(!l.exact);
        CHECK(rep.bound <= exact_dmin_expanded(f4, 2, {1}, b4));
        CHECK(rep.bound >= 1);
    }
    SUBCASE("empty selection rejected") {
        try {
            gcc_dmin_bound(f, 2, {}, b);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "ZeroDimension");
        }
    }
}

TEST_CASE("exact expanded minimum distance") {
    Field f(2, 4);
    Basis b = Basis::polynomial(f, 2);
    SUBCASE("single class of alpha: every nonzero element appears once per word") {
        // theta g(alpha) has binary weight sum_x wt(x) over GF(16)* = 32
        CHECK(exact_dmin_expanded(f, 2, {1}, b) == 32);
    }
    SUBCASE("matches a direct expansion-matrix enumeration") {
        std::set<int> roots;
        for (int e = 0; e < 15; ++e)
            if (e != 5 && e != 10) roots.insert(e);
        CyclicCode c = code_from_roots(f, roots);  // gamma set {5, 10}, K = 2
        Matrix ge = expand_generator(c, b);
        int best = -1;
        for (int msk = 1; msk < (1 << 8); ++msk) {
            int w = 0;
            for (size_t t = 0; t < ge.cols(); ++t) {
                FieldElement s = f.zero();
                for (int r = 0; r < 8; ++r)
                    if ((msk >> r) & 1) s += ge.at(r, t);
                if (!s.is_zero()) ++w;
            }
            if (best < 0 || w < best) best = w;
        }
        CHECK(exact_dmin_expanded(f, 2, c.gamma_exps, b) == best);
    }
    SUBCASE("cap exceeded") {
        Field f8(2, 8);
        try {
            exact_dmin_expanded(f8, 2, {1, 2, 4, 8}, Basis::polynomial(f8, 2));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "TooLarge");
        }
    }
    SUBCASE("empty selection rejected") {
        try {
            exact_dmin_expanded(f, 2, {}, b);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "ZeroDimension");
        }
    }
}

TEST_CASE("badness witnesses") {
    SUBCASE("m = 5, rate 1/2, delta = 1") {
        BadnessWitness w = badness_witness(5, 1, 2, 1);
        CHECK(w.k == 3);
        CHECK(w.gamma_exps == std::vector<int>{1, 2, 4, 8});
        CHECK(w.subbasis == std::vector<int>{0, 1});
        CHECK(w.dim > 0);
        CHECK(w.weight == 32);
        CHECK(w.weight_bound == 32);
        CHECK(w.ratio == doctest::Approx(32.0 / 155.0));
        // the witness really is a codeword: parity annihilation
        const Field& f = w.codeword[0].field();
        CyclicCode c = code_from_roots(
            f, [&] {
                std::set<int> roots;
                std::set<int> gam(w.gamma_exps.begin(), w.gamma_exps.end());
                gam.insert(16);  // close the class
                for (int e = 0; e < 31; ++e)
                    if (!gam.count((31 - e) % 31)) roots.insert(e);
                return roots;
            }());
        Matrix h = parity_check_matrix(c);
        for (const auto& s : h.apply(w.codeword)) CHECK(s.is_zero());
        // weight claim is real
        Basis b = Basis::polynomial(f, 2);
        int wt = 0;
        for (const auto& s : w.codeword)
            for (const auto& x : b.decompose(s))
                if (!x.is_zero()) ++wt;
        CHECK(wt == 32);
    }
    SUBCASE("m = 8, rate 1/2, delta = 1: beyond the enumeration oracle") {
        BadnessWitness w = badness_witness(8, 1, 2, 1);
        CHECK(w.k == 6);
        CHECK(w.dim > 0);
        CHECK(w.weight == 256);
        CHECK(w.weight_bound == 256);
        CHECK(w.ratio == doctest::Approx(256.0 / (8.0 * 255.0)));
        Basis b = Basis::polynomial(w.codeword[0].field(), 2);
        for (const auto& s : w.codeword)
            for (int e : {2, 3, 4, 5, 6, 7}) CHECK(b.mu(e, s).is_zero());
    }
    SUBCASE("negative delta uses a shifted class start") {
        BadnessWitness w = badness_witness(6, 1, 2, -3);
        CHECK(w.gamma_exps.front() == 4);  // k1 = ceil(log2 3) = 2
        CHECK(w.weight <= w.weight_bound);
        CHECK(w.dim > 0);
    }
    SUBCASE("out-of-range m rejected") {
        try {
            badness_witness(12, 1, 2, 0);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "PreconditionViolated");
        }
    }
    SUBCASE("infeasible parameters rejected") {
        try {
            badness_witness(5, 1, 30, 0);  // rN/30 = 1, no selection
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "PreconditionViolated");
        }
    }
}

TEST_CASE("low-rate supplement: weight 4N/3 under the composite basis") {
    Field f(2, 4);
    Basis comp(f, 2, {f.one(), f.alpha_pow(5), f.alpha(), f.alpha_pow(6)});
    auto g = g_vector(f.alpha_pow(5));
    int wt = 0;
    for (const auto& s : g)
        for (const auto& x : comp.decompose(s))
            if (!x.is_zero()) ++wt;
    CHECK(wt == 20);  // = 4 * 15 / 3
}
