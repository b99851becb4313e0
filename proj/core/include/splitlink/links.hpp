// links.hpp
// Three-component links modeled purely by their cut semantics: for each
// component removed, which pairs of the remaining components stay linked.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "splitlink/errors.hpp"

namespace splitlink {

enum class LinkName {
    Hopf3,      // every pair Hopf-linked; any cut leaves the other two linked
    Borromean,  // no pair linked; any cut frees the other two
    Chain3,     // open chain; cutting the center unlinks the outer pair
};

std::string_view to_string(LinkName name);

// Unordered pair of component labels, stored with first < second.
using ComponentPair = std::pair<char, char>;

inline ComponentPair make_pair_sorted(char a, char b) {
    return a < b ? ComponentPair{a, b} : ComponentPair{b, a};
}

struct LinkModel {
    LinkName name = LinkName::Hopf3;
    std::array<char, 3> components{'A', 'B', 'C'};
    std::optional<char> center;  // Chain3 only
    // component -> pairs of the remaining two that stay linked after its cut
    std::map<char, std::set<ComponentPair>> cut_profile;

    static LinkModel hopf3();
    static LinkModel borromean();
    static LinkModel chain3(char center);

    friend bool operator==(const LinkModel&, const LinkModel&) = default;
};

// Pairs still linked after cutting `component`. Throws UnknownComponent.
std::set<ComponentPair> cut(const LinkModel& model, char component);

// Hopf3, Borromean, and the three Chain3 variants (one per center).
std::vector<LinkModel> standard_models();

}  // namespace splitlink
