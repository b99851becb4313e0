#include "splitlink/links.hpp"

#include <string>

namespace splitlink {

std::string_view to_string(LinkName name) {
    switch (name) {
        case LinkName::Hopf3: return "HOPF3";
        case LinkName::Borromean: return "BORROMEAN";
        case LinkName::Chain3: return "CHAIN3";
    }
    return "?";
}

namespace {

// The pair of components other than `cut_component`.
ComponentPair remaining_pair(const std::array<char, 3>& components, char cut_component) {
    char a = 0, b = 0;
    for (char c : components) {
        if (c == cut_component) continue;
        (a == 0 ? a : b) = c;
    }
    return make_pair_sorted(a, b);
}

}  // namespace

LinkModel LinkModel::hopf3() {
    LinkModel model;
    model.name = LinkName::Hopf3;
    for (char c : model.components) {
        model.cut_profile[c] = {remaining_pair(model.components, c)};
    }
    return model;
}

LinkModel LinkModel::borromean() {
    LinkModel model;
    model.name = LinkName::Borromean;
    for (char c : model.components) {
        model.cut_profile[c] = {};
    }
    return model;
}

LinkModel LinkModel::chain3(char center) {
    LinkModel model;
    model.name = LinkName::Chain3;
    bool found = false;
    for (char c : model.components) found |= (c == center);
    if (!found) {
        throw UnknownComponent(std::string("no component '") + center + "' in model");
    }
    model.center = center;
    for (char c : model.components) {
        if (c == center) {
            model.cut_profile[c] = {};  // outer pair falls apart
        } else {
            // remaining outer component stays linked to the center
            char other_outer = 0;
            for (char d : model.components) {
                if (d != c && d != center) other_outer = d;
            }
            model.cut_profile[c] = {make_pair_sorted(other_outer, center)};
        }
    }
    return model;
}

std::set<ComponentPair> cut(const LinkModel& model, char component) {
    const auto it = model.cut_profile.find(component);
    if (it == model.cut_profile.end()) {
        throw UnknownComponent(std::string("no component '") + component + "' in " +
                               std::string(to_string(model.name)));
    }
    return it->second;
}

std::vector<LinkModel> standard_models() {
    std::vector<LinkModel> models;
    models.push_back(LinkModel::hopf3());
    models.push_back(LinkModel::borromean());
    for (char center : {'A', 'B', 'C'}) {
        models.push_back(LinkModel::chain3(center));
    }
    return models;
}

}  // namespace splitlink
