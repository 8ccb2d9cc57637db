// Pins the fixture values used across the suite against the brute-force
// reference before any library algorithm is trusted with them.

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using oracle::Entry;
using oracle::Mask;

namespace {

constexpr Mask a = 1, b = 2, c = 4, d = 8;

std::vector<Entry> sorted(std::vector<Entry> v) {
    oracle::canonical(v);
    return v;
}

} // namespace

TEST_CASE("oracle reproduces the K4 fixture values") {
    const oracle::Table t(fixtures::k4());

    std::size_t ones = 0;
    for (auto r : t.rows) ones += static_cast<std::size_t>(std::popcount(r));
    CHECK(ones == 10);

    CHECK(t.support(a) == 3);
    CHECK(t.support(0) == 4);
    CHECK(t.support(a | b | c) == 1);
    CHECK(t.support(b | d) == 0);
    CHECK(t.closure(d) == (a | c | d));
    CHECK(t.closure(a | b) == (a | b));
    CHECK(t.closure(b | d) == t.full());

    CHECK(oracle::frequent(t, 2) == sorted({{a, 3}, {b, 3}, {c, 3}, {a | b, 2}, {a | c, 2}, {b | c, 2}}));
    CHECK(oracle::frequent(t, 1).size() == 11);
    CHECK(oracle::frequent(t, 5).empty());

    CHECK(oracle::closed(t, 2) == sorted({{a, 3}, {b, 3}, {c, 3}, {a | b, 2}, {a | c, 2}, {b | c, 2}}));
    CHECK(oracle::closed(t, 1) == sorted({{a, 3}, {b, 3}, {c, 3}, {a | b, 2}, {a | c, 2}, {b | c, 2},
                                          {a | b | c, 1}, {a | c | d, 1}}));

    CHECK(oracle::generators(t, 1) == sorted({{a, 3}, {b, 3}, {c, 3}, {d, 1}, {a | b, 2}, {a | c, 2}, {b | c, 2},
                                              {a | b | c, 1}}));
    CHECK(oracle::generators(t, 2) == sorted({{a, 3}, {b, 3}, {c, 3}, {a | b, 2}, {a | c, 2}, {b | c, 2}}));

    CHECK(oracle::minimal_rare(t, 2) == sorted({{d, 1}, {a | b | c, 1}}));
    CHECK(oracle::minimal_rare(t, 1) == sorted({{b | d, 0}}));

    CHECK(oracle::pseudo_closed(t) == std::vector<Mask>{d});

    const auto ints = oracle::intents(t);
    CHECK(ints.size() == 10);
    CHECK(oracle::covers(ints).size() == 15);
}
