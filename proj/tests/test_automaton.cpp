#include <set>

#include "doctest.h"
#include "insenc/automaton.hpp"
#include "insenc/generate.hpp"
#include "insenc/vertical.hpp"

using namespace insenc;

namespace {
Basis B(const std::string& s) { return Basis::parse(s); }

long class_count(int n, const Basis& basis, Mode mode) {
    long c = 0;
    if (mode == Mode::Matching)
        for_each_matching_rgf_avoiding(n, basis, [&](const Word&) { ++c; });
    else
        for_each_rgf_avoiding(n, basis, [&](const Word&) { ++c; });
    return c;
}
}  // namespace

TEST_CASE("build_dfa rejects unsupported combinations") {
    CHECK_THROWS_AS(build_dfa(B("121"), 'v', Mode::Matching), InvalidInput);
    CHECK_THROWS_AS(build_dfa(B("121"), 'x', Mode::Rgf), InvalidInput);
    CHECK_THROWS_AS(build_dfa(B("121"), 'h', Mode::Cayley), InvalidInput);
}

TEST_CASE("irregular bases do not build") {
    auto empty = build_dfa(Basis{}, 'h', Mode::Rgf);
    CHECK(empty.status == BuildStatus::NotSlotBounded);
    CHECK_FALSE(empty.dfa.has_value());
    CHECK(empty.report.verdict == Verdict::Irregular);
    CHECK(build_dfa(B("112"), 'h', Mode::Rgf).status ==
          BuildStatus::NotSlotBounded);
    CHECK(build_dfa(B("111"), 'v', Mode::Rgf).status ==
          BuildStatus::NotSlotBounded);
}

TEST_CASE("Av(121) vertical: counts double") {
    auto out = build_dfa(B("121"), 'v', Mode::Rgf);
    REQUIRE(out.status == BuildStatus::Built);
    const Dfa& d = *out.dfa;
    CHECK(out.slot_bound == 1);
    CHECK(d.slot_bound == 1);
    CHECK(d.encoding == "vertical");
    CHECK(d.mode == "rgf");
    CHECK(d.basis == "121");
    CHECK(count_accepted(d, 0) == 0);
    BigInt expect = 1;
    for (int n = 1; n <= 10; ++n) {
        CHECK(count_accepted(d, n) == expect);
        expect *= 2;
    }
    auto series = count_series(d, 5);
    CHECK(series == std::vector<BigInt>{1, 2, 4, 8, 16});
}

TEST_CASE("Av(12) has one member per size in both encodings") {
    for (char enc : {'h', 'v'}) {
        auto out = build_dfa(B("12"), enc, Mode::Rgf);
        REQUIRE(out.status == BuildStatus::Built);
        for (int n = 1; n <= 8; ++n) CHECK(count_accepted(*out.dfa, n) == 1);
    }
}

TEST_CASE("Av(121) matchings: exactly one per even size") {
    auto out = build_dfa(B("121"), 'h', Mode::Matching);
    REQUIRE(out.status == BuildStatus::Built);
    CHECK(out.dfa->mode == "matching");
    for (int n = 1; n <= 10; ++n)
        CHECK(count_accepted(*out.dfa, n) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("oracle equivalence: regular singletons, horizontal rgf") {
    for (const auto& b : {"121", "122", "123", "132", "231"}) {
        auto out = build_dfa(B(b), 'h', Mode::Rgf);
        REQUIRE(out.status == BuildStatus::Built);
        for (int n = 1; n <= 7; ++n)
            CHECK(count_accepted(*out.dfa, n) ==
                  class_count(n, B(b), Mode::Rgf));
    }
}

TEST_CASE("oracle equivalence: regular singletons, vertical rgf") {
    for (const auto& b : {"112", "121"}) {
        auto out = build_dfa(B(b), 'v', Mode::Rgf);
        REQUIRE(out.status == BuildStatus::Built);
        for (int n = 1; n <= 7; ++n)
            CHECK(count_accepted(*out.dfa, n) ==
                  class_count(n, B(b), Mode::Rgf));
    }
}

TEST_CASE("oracle equivalence: regular singletons, matchings") {
    for (const auto& b : {"121", "122", "123", "132", "231"}) {
        auto out = build_dfa(B(b), 'h', Mode::Matching);
        REQUIRE(out.status == BuildStatus::Built);
        for (int n = 1; n <= 10; ++n)
            CHECK(count_accepted(*out.dfa, n) ==
                  class_count(n, B(b), Mode::Matching));
    }
}

TEST_CASE("oracle equivalence: multi-pattern bases") {
    struct Case {
        const char* basis;
        char enc;
    };
    const Case cases[] = {{"112;321", 'h'},
                          {"112;121", 'h'},
                          {"112;121", 'v'},
                          {"122;212;221;123;213;231", 'v'},
                          {"11", 'h'},
                          {"11", 'v'}};
    for (const auto& c : cases) {
        auto out = build_dfa(B(c.basis), c.enc, Mode::Rgf);
        REQUIRE(out.status == BuildStatus::Built);
        for (int n = 1; n <= 7; ++n)
            CHECK(count_accepted(*out.dfa, n) ==
                  class_count(n, B(c.basis), Mode::Rgf));
    }
}

TEST_CASE("state abstraction is sound to depth 5") {
    CHECK(check_state_soundness(B("121"), 'v', Mode::Rgf, 5).ok);
    CHECK(check_state_soundness(B("112"), 'v', Mode::Rgf, 5).ok);
    CHECK(check_state_soundness(B("112;321"), 'h', Mode::Rgf, 5).ok);
    CHECK(check_state_soundness(B("121"), 'h', Mode::Rgf, 5).ok);
    CHECK(check_state_soundness(B("121"), 'h', Mode::Matching, 6).ok);
    CHECK(check_state_soundness(B("132"), 'h', Mode::Rgf, 5).ok);
}

TEST_CASE("minimize preserves counts and is idempotent") {
    for (const auto& c :
         {std::pair<const char*, char>{"121", 'v'},
          std::pair<const char*, char>{"112;321", 'h'},
          std::pair<const char*, char>{"231", 'h'}}) {
        auto out = build_dfa(B(c.first), c.second, Mode::Rgf);
        REQUIRE(out.status == BuildStatus::Built);
        Dfa m = minimize(*out.dfa);
        CHECK(m.state_count() <= out.dfa->state_count());
        Dfa mm = minimize(m);
        CHECK(mm.state_count() == m.state_count());
        for (int n = 1; n <= 8; ++n)
            CHECK(count_accepted(m, n) == count_accepted(*out.dfa, n));
        CHECK(m.slot_bound == out.dfa->slot_bound);
    }
}

TEST_CASE("dfa states all lie on accepting paths") {
    auto out = build_dfa(B("112;321"), 'h', Mode::Rgf);
    REQUIRE(out.status == BuildStatus::Built);
    const Dfa& d = *out.dfa;
    // forward reachability from the start covers every state
    std::set<int> seen{0};
    std::vector<int> work{0};
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (const auto& [text, t] : d.trans[s]) {
            (void)text;
            if (seen.insert(t).second) work.push_back(t);
        }
    }
    CHECK(static_cast<int>(seen.size()) == d.state_count());
    // transitions are sorted by letter text and deterministic
    for (int s = 0; s < d.state_count(); ++s) {
        for (size_t i = 1; i < d.trans[s].size(); ++i)
            CHECK(d.trans[s][i - 1].first < d.trans[s][i].first);
    }
}

TEST_CASE("dfa_to_json carries the metadata") {
    auto out = build_dfa(B("121"), 'v', Mode::Rgf);
    REQUIRE(out.status == BuildStatus::Built);
    std::string js = dfa_to_json(*out.dfa);
    CHECK(js.find("\"basis\"") != std::string::npos);
    CHECK(js.find("\"121\"") != std::string::npos);
    CHECK(js.find("\"vertical\"") != std::string::npos);
    CHECK(js.find("\"transitions\"") != std::string::npos);
}
