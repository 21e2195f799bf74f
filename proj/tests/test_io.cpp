#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xcyclic/io.hpp"

using namespace xcyclic;

TEST_CASE("element notation") {
    Field f(2, 4);
    CHECK(element_to_string(f.zero()) == "0");
    CHECK(element_to_string(f.one()) == "1");
    CHECK(element_to_string(f.alpha()) == "a");
    CHECK(element_to_string(f.alpha_pow(11)) == "a^11");
    SUBCASE("round trip over all of GF(2^4) and GF(9)") {
        Field f9(3, 2);
        for (const Field* fp : {&f, &f9})
            for (int c = 0; c < fp->order(); ++c) {
                FieldElement x = fp->element(c);
                CHECK(parse_element(*fp, element_to_string(x)) == x);
            }
    }
    SUBCASE("negative and oversized exponents normalize") {
        CHECK(parse_element(f, "a^15") == f.one());
        CHECK(parse_element(f, "a^-1") == f.alpha_pow(14));
    }
    SUBCASE("prime-subfield digits") {
        Field f9(3, 2);
        CHECK(parse_element(f9, "2") == f9.one() + f9.one());
    }
    SUBCASE("garbage rejected") {
        try {
            parse_element(f, "b^3");
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "ParseError");
        }
    }
}

TEST_CASE("polynomial notation") {
    Field f(2, 4);
    SUBCASE("print") {
        CHECK(poly_to_string(Poly::from_codes(f, {1, 1, 0, 0, 1})) == "x^4+x+1");
        CHECK(poly_to_string(Poly(f)) == "0");
        CHECK(poly_to_string(Poly(f, {f.alpha_pow(10), f.alpha_pow(5)})) == "a^5x+a^10");
    }
    SUBCASE("parse round trip for every minimal polynomial") {
        for (int e = 0; e < 15; ++e) {
            Poly p = minimal_polynomial(f.alpha_pow(e), 2);
            CHECK(parse_poly(f, poly_to_string(p)) == p);
        }
    }
    SUBCASE("GF(9) coefficients round trip") {
        Field f9(3, 2);
        Poly p = minimal_polynomial(f9.alpha(), 3);
        CHECK(parse_poly(f9, poly_to_string(p)) == p);
    }
    SUBCASE("prime polynomial text") {
        CHECK(prime_poly_to_string({1, 1, 0, 0, 1}) == "x^4+x+1");
        CHECK(parse_prime_poly("x^4+x+1", 2) == std::vector<int>({1, 1, 0, 0, 1}));
        CHECK(parse_prime_poly("x^2+x+2", 3) == std::vector<int>({2, 1, 1}));
        CHECK(prime_poly_to_string(parse_prime_poly("x^2+x+2", 3)) == "x^2+x+2");
    }
}

TEST_CASE("basis and subbasis strings") {
    Field f(2, 4);
    SUBCASE("basis parse and print") {
        Basis b = parse_basis(f, 2, "1,a^5,a,a^6");
        CHECK(b.elements()[1] == f.alpha_pow(5));
        CHECK(basis_to_string(b) == "1,a^5,a,a^6");
    }
    SUBCASE("subbasis indices are 1-based externally") {
        CHECK(parse_subbasis("1,3", 4) == std::vector<int>({0, 2}));
        CHECK(parse_subbasis("4,2,2", 4) == std::vector<int>({1, 3}));  // sorted, deduped
        try {
            parse_subbasis("0,1", 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "ParseError");
        }
        try {
            parse_subbasis("5", 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == "ParseError");
        }
    }
}

TEST_CASE("matrix exports") {
    Field f(2, 4);
    SUBCASE("symbol matrix text") {
        Matrix m(f, 1, 3);
        m.at(0, 0) = f.zero();
        m.at(0, 1) = f.one();
        m.at(0, 2) = f.alpha_pow(7);
        CHECK(matrix_to_text(m) == "0,1,a^7\n");
    }
    SUBCASE("binary digit export") {
        Basis b = Basis::polynomial(f, 2);
        auto g = g_vector(f.alpha_pow(14));
        auto word = expand_word(g, b);
        std::string s = word_to_digits(word, 2);
        CHECK(s.size() == 60);
        int ones = 0;
        for (char c : s) {
            CHECK((c == '0' || c == '1'));
            if (c == '1') ++ones;
        }
        CHECK(ones == 32);  // each nonzero element of GF(16) appears once
    }
    SUBCASE("GF(4) entries widen to two binary digits") {
        Matrix m(f, 1, 2);
        m.at(0, 0) = f.one();
        m.at(0, 1) = f.alpha_pow(5);
        std::string s = expanded_matrix_to_text(m, 4);
        CHECK(s == "0110\n");  // indices 1 and 2 in the GF(4) view
    }
    SUBCASE("ternary digits for GF(9)") {
        Field f9(3, 2);
        Matrix m(f9, 1, 3);
        m.at(0, 0) = f9.zero();
        m.at(0, 1) = f9.one() + f9.one();
        m.at(0, 2) = f9.one();
        CHECK(expanded_matrix_to_text(m, 3) == "021\n");
    }
}

TEST_CASE("JSON descriptors") {
    Field f(2, 4);
    SUBCASE("field descriptor") {
        json j = field_json(f);
        CHECK(j["schema"] == 1);
        CHECK(j["p"] == 2);
        CHECK(j["n"] == 4);
        CHECK(j["defining_poly"] == "x^4+x+1");
        CHECK(j["order"] == 16);
    }
    SUBCASE("codebook descriptor") {
        Basis b = Basis::polynomial(f, 2);
        Codebook cb = constant_weight_codebook(f, 2, f.alpha_pow(14));
        json j = codebook_json(cb, b);
        CHECK(j["schema"] == 1);
        CHECK(j["q"] == 2);
        REQUIRE(j["codewords"].size() == 16);
        CHECK(j["codewords"][1]["weight"] == 8);
        CHECK(j["codewords"][1]["expanded_codeword"].get<std::string>().size() == 60);
        CHECK(j["codewords"][1]["symbol_codeword"].size() == 15);
    }
    SUBCASE("bound report descriptor") {
        Field f5(2, 5, {1, 0, 1, 0, 0, 1});
        Basis b5 = Basis::polynomial(f5, 2);
        BoundReport rep = gcc_dmin_bound(f5, 2, {21, 22, 23}, b5);
        json j = bound_report_json(rep);
        CHECK(j["schema"] == 1);
        CHECK(j["bound"] == 60);
        REQUIRE(j["levels"].size() == 2);
        CHECK(j["levels"][0]["method"] == "exact-brute-force");
        CHECK(j["levels"][0]["product"] == 64);
        CHECK(j["levels"][1]["product"] == 60);
    }
}
