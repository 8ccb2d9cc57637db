#include "doctest.h"
#include "fixtures.hpp"
#include "latmine/errors.hpp"
#include "latmine/toolbox.hpp"

using namespace latmine;

TEST_CASE("random_context extremes and labels") {
    const auto empty = random_context({5, 4, 0.0, 1});
    CHECK(stats(empty).ones == 0);
    const auto full = random_context({5, 4, 1.0, 1});
    CHECK(stats(full).ones == 20);
    CHECK(full.object_labels() == std::vector<std::string>{"o1", "o2", "o3", "o4", "o5"});
    CHECK(full.attribute_labels() == std::vector<std::string>{"a1", "a2", "a3", "a4"});

    CHECK(random_context({0, 0, 0.5, 1}).object_count() == 0);
    CHECK_THROWS_AS(random_context({2, 2, 1.5, 1}), ConstraintError);
    CHECK_THROWS_AS(random_context({2, 2, -0.1, 1}), ConstraintError);
}

TEST_CASE("random_context is a function of its seed") {
    CHECK(random_context({100, 20, 0.5, 42}) == random_context({100, 20, 0.5, 42}));
    CHECK_FALSE(random_context({100, 20, 0.5, 42}) == random_context({100, 20, 0.5, 43}));
}

TEST_CASE("random_context density concentrates") {
    for (double d : {0.1, 0.5, 0.9}) {
        const auto s = stats(random_context({1000, 100, d, 7}));
        CHECK(s.density > d - 0.02);
        CHECK(s.density < d + 0.02);
    }
}

TEST_CASE("equivalence class rendering") {
    const auto k4 = fixtures::k4();
    const auto& labels = k4.attribute_labels();
    const EquivalenceClass acd{fixtures::items(k4, "a c d"), {fixtures::items(k4, "d")}, 1};
    CHECK(render_equivalence_classes({acd}, labels) == "CLASS closed={a c d} supp=1\n  gen: {d}\n");

    const EquivalenceClass ab{fixtures::items(k4, "a b"), {fixtures::items(k4, "a b")}, 2};
    CHECK(render_equivalence_classes({ab}, labels) == "CLASS closed={a b} supp=2\n  gen: {a b}\n");

    CHECK(render_equivalence_classes({}, labels).empty());

    const auto classes = mine_equivalence_classes(k4, SupportThreshold::absolute(1));
    const auto text = render_equivalence_classes(classes, labels);
    CHECK(text.find("CLASS closed={a c d} supp=1\n  gen: {d}\n") != std::string::npos);
    CHECK(text.rfind("CLASS closed={a} supp=3\n  gen: {a}\n", 0) == 0);
}
