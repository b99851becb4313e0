#include <doctest.h>

#include "splitlink/links.hpp"

using namespace splitlink;

TEST_SUITE("links") {

TEST_CASE("hopf3: cutting any ring leaves the other two linked") {
    const LinkModel model = LinkModel::hopf3();
    CHECK(cut(model, 'A') == std::set<ComponentPair>{{'B', 'C'}});
    CHECK(cut(model, 'B') == std::set<ComponentPair>{{'A', 'C'}});
    CHECK(cut(model, 'C') == std::set<ComponentPair>{{'A', 'B'}});
}

TEST_CASE("borromean: cutting any ring frees the other two") {
    const LinkModel model = LinkModel::borromean();
    for (char c : model.components) {
        CHECK(cut(model, c).empty());
    }
}

TEST_CASE("chain3: only the central cut unlinks everything") {
    const LinkModel centered_c = LinkModel::chain3('C');
    CHECK(cut(centered_c, 'C').empty());
    CHECK(cut(centered_c, 'A') == std::set<ComponentPair>{{'B', 'C'}});
    CHECK(cut(centered_c, 'B') == std::set<ComponentPair>{{'A', 'C'}});

    const LinkModel centered_a = LinkModel::chain3('A');
    CHECK(cut(centered_a, 'B') == std::set<ComponentPair>{{'A', 'C'}});
    CHECK(cut(centered_a, 'C') == std::set<ComponentPair>{{'A', 'B'}});
    CHECK(cut(centered_a, 'A').empty());
}

TEST_CASE("standard_models returns the five models with valid cut profiles") {
    const auto models = standard_models();
    REQUIRE(models.size() == 5);
    CHECK(models[0].name == LinkName::Hopf3);
    CHECK(models[1].name == LinkName::Borromean);

    int chains = 0;
    for (const auto& model : models) {
        CHECK(model.cut_profile.size() == 3);
        CHECK(model.center.has_value() == (model.name == LinkName::Chain3));
        if (model.name == LinkName::Chain3) {
            ++chains;
            // exactly one empty cut, and it is the declared center
            int empty_cuts = 0;
            for (char c : model.components) {
                if (cut(model, c).empty()) {
                    ++empty_cuts;
                    CHECK(c == *model.center);
                }
            }
            CHECK(empty_cuts == 1);
        }
    }
    CHECK(chains == 3);
}

TEST_CASE("hopf3 cuts are invariant under relabeling") {
    const LinkModel model = LinkModel::hopf3();
    // every cut removes exactly the chosen component and links the other two
    for (char c : model.components) {
        const auto linked = cut(model, c);
        REQUIRE(linked.size() == 1);
        const auto& [x, y] = *linked.begin();
        CHECK(x != c);
        CHECK(y != c);
        CHECK(x < y);
    }
}

TEST_CASE("unknown components are rejected") {
    CHECK_THROWS_AS(cut(LinkModel::hopf3(), 'D'), UnknownComponent);
    CHECK_THROWS_AS(LinkModel::chain3('Z'), UnknownComponent);
}

}  // TEST_SUITE
