#include <functional>
#include <set>

#include "doctest.h"
#include "insenc/generate.hpp"
#include "insenc/vertical.hpp"
#include "insenc/word.hpp"

using namespace insenc;

namespace {
Word W(const std::string& s) { return parse_word(s); }
VWord V(const std::string& s) { return parse_v_letters(s); }
}  // namespace

TEST_CASE("vertical letters: textual form") {
    CHECK(format_letters(V("m{1,1}l{1,1}r{1,0}")) == "m{1,1}l{1,1}r{1,0}");
    CHECK(V("l{2,0}")[0] == VLetter{VKind::L, 2, false});
    CHECK(V("ℓ{1,1}")[0] == VLetter{VKind::L, 1, true});  // script ell
    CHECK(V(" r{1,0} f{12,1} ")[1] == VLetter{VKind::F, 12, true});
    CHECK_THROWS_AS(V("d{1,1}"), InvalidInput);
    CHECK_THROWS_AS(V("l{1,3}"), InvalidInput);
    CHECK_THROWS_AS(V("l{0,1}"), InvalidInput);
    CHECK(V("").empty());
}

TEST_CASE("encode_v: worked examples") {
    CHECK(format_letters(encode_v(W("242143"))) ==
          "m{1,1}l{1,1}r{1,0}r{2,1}f{1,1}f{1,0}");
    CHECK(format_letters(encode_v(W("121"))) == "l{1,1}r{1,0}f{1,1}");
    CHECK(format_letters(encode_v(W("12"))) == "l{1,1}f{1,1}");
    CHECK(format_letters(encode_v(W("1"))) == "f{1,1}");
    CHECK(format_letters(encode_v(W("1211"))) == "l{1,1}m{1,0}f{2,0}f{1,1}");
    CHECK_THROWS_AS(encode_v(W("13")), InvalidInput);  // not Cayley
}

TEST_CASE("decode_v inverts encode_v") {
    for (const auto& s :
         {"242143", "121", "12", "1", "1211", "2211", "21312", "123142536"}) {
        Word pi = W(s);
        CHECK(decode_v(encode_v(pi)) == pi);
    }
    for (int n = 1; n <= 6; ++n) {
        for_each_cayley(n, [&](const Word& pi) {
            CHECK(decode_v(encode_v(pi)) == pi);
        });
    }
}

TEST_CASE("encode_v is injective (size <= 5)") {
    std::set<std::string> seen;
    long total = 0;
    for (int n = 1; n <= 5; ++n) {
        for_each_cayley(n, [&](const Word& pi) {
            seen.insert(format_letters(encode_v(pi)));
            ++total;
        });
    }
    CHECK(static_cast<long>(seen.size()) == total);
}

TEST_CASE("run threshold blocks out-of-order repeats") {
    // After m{1,1} the configuration is slot,1,slot with threshold 2:
    // a repeat of the current value may not land left of the previous one.
    ConfigV c = apply_letter_v(initial_config_v(), VLetter{VKind::M, 1, true},
                               Mode::Cayley);
    CHECK(c.slot_count() == 2);
    CHECK(c.threshold == 2);
    CHECK_THROWS_AS(apply_letter_v(c, VLetter{VKind::L, 1, false},
                                   Mode::Cayley),
                    IllegalLetter);
    // the same letter with an increase flag is fine (new value restarts)
    ConfigV d = apply_letter_v(c, VLetter{VKind::L, 1, true}, Mode::Cayley);
    CHECK(d.threshold == 1);
}

TEST_CASE("decode_v error cases") {
    CHECK_THROWS_AS(decode_v(V("l{1,1}")), DanglingSlots);
    CHECK_THROWS_AS(decode_v(VWord{}), DanglingSlots);
    CHECK_THROWS_AS(decode_v(V("f{2,1}")), IllegalLetter);   // no slot 2
    CHECK_THROWS_AS(decode_v(V("f{1,0}")), IllegalLetter);   // nothing to repeat
    CHECK_THROWS_AS(decode_v(V("m{1,1}l{1,0}f{1,1}f{2,1}")), IllegalLetter);
    // rgf mode: increase letters other than l{1,1}/f{1,1} are rejected
    CHECK_THROWS_AS(decode_v(V("m{1,1}f{1,1}f{1,1}"), Mode::Rgf),
                    IllegalLetter);
    CHECK_THROWS_AS(decode_v(V("l{1,1}m{1,0}l{2,1}f{1,1}f{1,1}"), Mode::Rgf),
                    IllegalLetter);
    CHECK(decode_v(V("l{1,1}l{1,1}f{1,1}"), Mode::Rgf) == W("123"));
    // vertical matching insertion is not defined
    CHECK_THROWS_AS(decode_v(V("f{1,1}"), Mode::Matching), InvalidInput);
}

TEST_CASE("legal_letters_v on small configurations") {
    ConfigV c0 = initial_config_v();
    CHECK(c0.slot_count() == 1);
    CHECK(format_letters(legal_letters_v(c0, Mode::Cayley)) ==
          "l{1,1}m{1,1}r{1,1}f{1,1}");
    CHECK(format_letters(legal_letters_v(c0, Mode::Rgf)) == "l{1,1}f{1,1}");
    CHECK_THROWS_AS(legal_letters_v(c0, Mode::Matching), InvalidInput);
    // slot,1,slot with threshold 2: slot-1 repeats are blocked
    ConfigV c = apply_letter_v(c0, VLetter{VKind::M, 1, true}, Mode::Cayley);
    CHECK(format_letters(legal_letters_v(c, Mode::Cayley)) ==
          "l{1,1}m{1,1}r{1,1}f{1,1}"
          "l{2,0}l{2,1}m{2,0}m{2,1}r{2,0}r{2,1}f{2,0}f{2,1}");
}

TEST_CASE("legal letters agree with apply_letter_v") {
    for (const auto& s : {"242143", "1211", "121", "2211"}) {
        ConfigV c = initial_config_v();
        for (const VLetter& a : encode_v(W(s))) {
            bool found = false;
            for (const auto& b : legal_letters_v(c, Mode::Cayley))
                found = found || b == a;
            CHECK(found);
            c = apply_letter_v(c, a, Mode::Cayley);
        }
        CHECK(c.slot_count() == 0);
        CHECK(legal_letters_v(c, Mode::Cayley).empty());
    }
}

TEST_CASE("conforms_v characterizes rgf words (size <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        for_each_cayley(n, [&](const Word& pi) {
            CHECK(conforms_v(encode_v(pi), Mode::Rgf) == is_rgf(pi));
        });
    }
    CHECK_THROWS_AS(conforms_v(V("f{1,1}"), Mode::Matching), InvalidInput);
}

TEST_CASE("canonical words: every completed legal word is an encoding") {
    // Depth-first over legal letters; any configuration with zero slots
    // must decode to a Cayley permutation that encodes back to the word.
    long completed = 0;
    std::function<void(const ConfigV&, VWord&, int)> walk =
        [&](const ConfigV& c, VWord& w, int depth) {
            if (c.slot_count() == 0) {
                Word pi = decode_v(w);
                CHECK(is_cayley(pi));
                CHECK(format_letters(encode_v(pi)) == format_letters(w));
                ++completed;
                return;
            }
            if (depth == 0) return;
            for (const VLetter& a : legal_letters_v(c, Mode::Cayley)) {
                w.push_back(a);
                walk(apply_letter_v(c, a, Mode::Cayley), w, depth - 1);
                w.pop_back();
            }
        };
    VWord w;
    walk(initial_config_v(), w, 6);
    // completed words of length <= 6 = Cayley counts 1+3+13+75+541+4683
    CHECK(completed == 1 + 3 + 13 + 75 + 541 + 4683);
}

TEST_CASE("max_slots_v: hand-computed values") {
    CHECK(max_slots_v(W("242143")) == 2);
    CHECK(max_slots_v(W("123142536")) == 3);
    CHECK(max_slots_v(W("1")) == 1);
    CHECK(max_slots_v(W("1211")) == 2);
    for (int n = 1; n <= 5; ++n) {
        for_each_cayley(n, [&](const Word& pi) {
            ConfigV c = initial_config_v();
            int mx = c.slot_count();
            for (const VLetter& a : encode_v(pi)) {
                c = apply_letter_v(c, a, Mode::Cayley);
                mx = std::max(mx, c.slot_count());
            }
            CHECK(mx == max_slots_v(pi));
        });
    }
}
