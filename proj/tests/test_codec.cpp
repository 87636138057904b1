#include <doctest.h>

#include <random>

#include "lrc/codec.hpp"
#include "lrc/lrcopt.hpp"

using namespace lrc;

TEST_CASE("systematic encoding") {
    const Field& f5 = field_of(5, 1);
    CodeSpec c1 = CodeSpec::single(f5, 1, 1, 1, 1);

    CHECK(encode(c1, {0, 0, 0, 0}).coeffs == std::vector<int>(5, 0));
    CHECK(encode(c1, {1, 0, 0, 0}).coeffs == std::vector<int>{4, 1, 0, 0, 0});

    std::mt19937 rng(99);
    for (auto code : {CodeSpec::single(f5, 1, 2, f5.neg(1), 8),
                      CodeSpec::single(field_of(2, 2), 3, 2, 2, 2),
                      CodeSpec::pair(field_of(7, 1), 1, 2, 1, 7)}) {
        std::uniform_int_distribution<int> sym(0, (int)code.field().q() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<int> u(code.k());
            for (int& x : u) x = sym(rng);
            Codeword cw = encode(code, u);
            CHECK(is_codeword(code, cw.coeffs));
            for (long t = 0; t < code.k(); ++t)
                CHECK(cw.coeffs[code.n() - code.k() + t] == u[t]);
        }
    }

    CHECK_THROWS_AS((void)encode(c1, {1, 2}), lrc_error);
    CHECK_THROWS_AS((void)encode(CodeSpec::single(f5, 1, 1, 1, 5), {}), lrc_error);
}

TEST_CASE("repair plans") {
    const Field& f5 = field_of(5, 1);
    CodeSpec c1 = CodeSpec::single(f5, 1, 1, 1, 1);
    RepairPlan plan = repair_plan(c1, 2);
    CHECK(plan.helper_indices == std::vector<int>{0, 1, 3, 4});

    // locality-1 code: every index repairs from exactly one helper
    const Field& f4 = field_of(2, 2);
    CodeSpec c48 = CodeSpec::single(f4, 3, 4, 2, 8);
    for (int e : {0, 1, 13, 47}) {
        RepairPlan p48 = repair_plan(c48, e);
        CHECK(p48.helper_indices.size() == 1);
    }

    // the unshifted dual word covers index 0 (its constant term is nonzero)
    Codeword dw = min_weight_dual_word(c1);
    CHECK(dw.coeffs[0] != 0);
    RepairPlan p0 = repair_plan(c1, 0);
    CHECK(p0.helper_indices == std::vector<int>{1, 2, 3, 4});

    // plans depend only on (code, index)
    RepairPlan again = repair_plan(c1, 2);
    CHECK(again.helper_indices == plan.helper_indices);
    CHECK(again.coefficients == plan.coefficients);
    CHECK(again.scale == plan.scale);
}

TEST_CASE("repair round-trip") {
    std::mt19937 rng(2024);
    std::vector<CodeSpec> sample = {
        CodeSpec::single(field_of(5, 1), 1, 2, 4, 8),
        CodeSpec::single(field_of(2, 1), 1, 6, 1, 33),
        CodeSpec::single(field_of(2, 2), 3, 2, 2, 2),
        CodeSpec::pair(field_of(7, 1), 1, 2, 2, 5),
        CodeSpec::pair(field_of(3, 1), 2, 1, 0, 3),
    };
    for (const CodeSpec& code : sample) {
        long r = locality(code).r;
        std::uniform_int_distribution<int> sym(0, (int)code.field().q() - 1);
        std::uniform_int_distribution<int> pos(0, (int)code.n() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> u(code.k());
            for (int& x : u) x = sym(rng);
            Codeword cw = encode(code, u);
            int e = pos(rng);
            ReceivedWord rec{cw.coeffs, e};
            rec.symbols[e] = sym(rng);  // stale value; must be ignored
            RepairPlan plan = repair_plan(code, e);
            CHECK((long)plan.helper_indices.size() == r);
            Codeword fixed = repair(code, rec, plan);
            CHECK(fixed.coeffs == cw.coeffs);
        }
    }
}

TEST_CASE("inconsistent words are rejected") {
    const Field& f5 = field_of(5, 1);
    CodeSpec c6 = CodeSpec::single(f5, 1, 2, f5.neg(1), 6);  // d = 3
    std::vector<int> u(c6.k(), 1);
    Codeword cw = encode(c6, u);
    RepairPlan plan = repair_plan(c6, 0);
    ReceivedWord rec{cw.coeffs, 0};
    int corrupt = plan.helper_indices[0];
    rec.symbols[corrupt] = f5.add(rec.symbols[corrupt], 1);
    CHECK_THROWS_AS((void)repair(c6, rec, plan), lrc_error);
}

TEST_CASE("zero word repairs to zero") {
    const Field& f7 = field_of(7, 1);
    CodeSpec code = CodeSpec::pair(f7, 1, 2, 1, 7);
    for (int e = 0; e < code.n(); ++e) {
        ReceivedWord rec{std::vector<int>(code.n(), 0), e};
        rec.symbols[e] = 3;
        CHECK(repair(code, rec).coeffs == std::vector<int>(code.n(), 0));
    }
}
