#include <doctest.h>

#include <algorithm>
#include <queue>

#include "ontoterm/concept_system.h"
#include "support.h"

using namespace ontoterm;
using namespace ontoterm::testing;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ontoterm::Error");
    return ErrorCode::invalid_argument;
}

// Genus-link transitive closure from `root`, walking children breadth first.
std::vector<Id> genus_closure(const ConceptSystem& s, const Id& root) {
    std::vector<Id> out;
    std::queue<Id> todo;
    todo.push(root);
    while (!todo.empty()) {
        Id id = todo.front();
        todo.pop();
        out.push_back(id);
        for (const auto& c : s.children(id)) todo.push(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("add_character registers and bumps the version") {
    ConceptSystem s;
    auto v0 = s.version();
    Id seuil = s.add_character({"", CharacterKind::essential, {{"fr", "seuil"}}, {{"fr", {"à seuil", ModifierPosition::after_head}}}});
    Id tension = s.add_character({"", CharacterKind::essential, {{"fr", "tension"}}, {{"fr", {"de tension", ModifierPosition::after_head}}}});
    CHECK(seuil != tension);
    CHECK(s.version() == v0 + 2);
    CHECK(s.character(seuil).modifier_forms.at("fr").form == "à seuil");
    CHECK(s.character(tension).kind == CharacterKind::essential);
}

TEST_CASE("add_character errors") {
    ConceptSystem s;
    CHECK(code_of([&] { s.add_character({"x", CharacterKind::essential, {}, {}}); }) == ErrorCode::empty_labels);
    s.add_character({"x", CharacterKind::essential, {{"fr", "x"}}, {}});
    CHECK(code_of([&] { s.add_character({"x", CharacterKind::essential, {{"fr", "y"}}, {}}); }) == ErrorCode::duplicate_id);
    CHECK(code_of([&] {
              s.add_character({"y", CharacterKind::essential, {{"fr", "y"}}, {{"en", {"y", ModifierPosition::before_head}}}});
          }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { s.add_character({"bad id", CharacterKind::essential, {{"fr", "y"}}, {}}); }) ==
          ErrorCode::invalid_argument);
    CHECK(s.characters().size() == 1);
}

TEST_CASE("define_concept builds the relay chain") {
    ConceptSystem s = relay_system();
    const Concept& species = s.get_concept(kVoltageThresholdRelay);
    CHECK(species.intent == IdSet{"switching", "threshold", "voltage"});
    CHECK(species.genus == std::optional<Id>(kThresholdRelay));
    CHECK(species.differentia == IdSet{"voltage"});
    CHECK(s.get_concept(kRelay).differentia == s.get_concept(kRelay).intent);
}

TEST_CASE("define_concept errors") {
    ConceptSystem s = relay_system();
    auto before = s;
    CHECK(code_of([&] { s.define_concept(std::string(kRelay), {"threshold"}); }) == ErrorCode::duplicate_intent);
    CHECK(code_of([&] { s.define_concept(std::string("nope"), {"threshold"}); }) == ErrorCode::unknown_concept);
    CHECK(code_of([&] { s.define_concept(std::string(kThresholdRelay), {"threshold"}); }) ==
          ErrorCode::overlapping_differentia);
    CHECK(code_of([&] { s.define_concept(std::string(kRelay), {}); }) == ErrorCode::empty_differentia);
    CHECK(code_of([&] { s.define_concept(std::string(kRelay), {"ghost"}); }) == ErrorCode::unknown_character);
    CHECK(code_of([&] { s.define_concept(std::nullopt, {"voltage"}, kRelay); }) == ErrorCode::duplicate_id);
    CHECK(s == before);
    CHECK(s.version() == before.version());
}

TEST_CASE("subsumes follows intent inclusion") {
    ConceptSystem s = relay_system();
    CHECK(subsumes(s, kThresholdRelay, kVoltageThresholdRelay));
    CHECK(subsumes(s, kRelay, kVoltageThresholdRelay));
    CHECK_FALSE(subsumes(s, kVoltageThresholdRelay, kThresholdRelay));
    for (const auto& [id, c] : s.concepts()) CHECK(subsumes(s, id, id));
    CHECK(code_of([&] { subsumes(s, "nope", kRelay); }) == ErrorCode::unknown_concept);
}

TEST_CASE("descendants") {
    ConceptSystem s = relay_system();
    auto d = descendants(s, kRelay);
    CHECK(d == genus_closure(s, kRelay));
    CHECK(d == std::vector<Id>{kRelay, kThresholdRelay, kVoltageThresholdRelay});
    for (const auto& id : d) CHECK(subsumes(s, kRelay, id));
    CHECK(descendants(s, kVoltageThresholdRelay) == std::vector<Id>{kVoltageThresholdRelay});
    CHECK(code_of([&] { descendants(s, "nope"); }) == ErrorCode::unknown_concept);
}

TEST_CASE("conjunction is intent union, disjunction is rejected") {
    ConceptSystem s = relay_system();
    s.add_character({"current", CharacterKind::essential, {{"fr", "courant"}}, {{"fr", {"de courant", ModifierPosition::after_head}}}});
    s.define_concept(std::string(kRelay), {"voltage"}, "voltage_relay");
    CHECK(conjunction(s, kThresholdRelay, "voltage_relay") == std::optional<Id>(kVoltageThresholdRelay));
    CHECK(conjunction(s, kRelay, kThresholdRelay) == std::optional<Id>(kThresholdRelay));
    s.define_concept(std::string(kRelay), {"current"}, "current_relay");
    CHECK_FALSE(conjunction(s, "voltage_relay", "current_relay").has_value());
    CHECK(code_of([&] { disjunction(s, kThresholdRelay, "voltage_relay"); }) == ErrorCode::disjunction_unsupported);
}

TEST_CASE("check_rigidity") {
    CHECK(check_rigidity(ConceptSystem{}).empty());
    ConceptSystem s = relay_system();
    CHECK(check_rigidity(s).empty());
    s.add_character({"hot", CharacterKind::descriptive, {{"fr", "chaud"}}, {{"fr", {"chaud", ModifierPosition::after_head}}}});
    s.define_concept(std::string(kRelay), {"hot"}, "hot_relay");
    auto v = check_rigidity(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == rules::rigidity);
    CHECK(v[0].subjects == std::vector<std::string>{"hot_relay", "hot"});
}

TEST_CASE("check_system catches injected breaches") {
    CHECK(check_system(ConceptSystem{}).empty());
    CHECK(check_system(relay_system()).empty());

    SUBCASE("equal intents") {
        ConceptSystem s = relay_system();
        s.insert_concept_unchecked({"twin", {"switching", "threshold"}, std::string(kRelay), {"threshold"}, {}});
        auto v = check_system(s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == rules::unique_intent);
        CHECK(v[0].subjects == std::vector<std::string>{kThresholdRelay, "twin"});
    }
    SUBCASE("genus cycle") {
        ConceptSystem s;
        s.add_character({"a", CharacterKind::essential, {{"fr", "a"}}, {}});
        s.add_character({"b", CharacterKind::essential, {{"fr", "b"}}, {}});
        s.insert_concept_unchecked({"x", {"a", "b"}, std::string("y"), {"a"}, {}});
        s.insert_concept_unchecked({"y", {"a", "b"}, std::string("x"), {"b"}, {}});
        auto v = check_system(s);
        CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) {
            return x.rule == rules::acyclic_genus && x.subjects == std::vector<std::string>{"x", "y"};
        }));
    }
    SUBCASE("dangling ids and bad composition") {
        ConceptSystem s = relay_system();
        s.insert_concept_unchecked({"orphan", {"switching", "ghost"}, std::string("missing"), {"ghost"}, {}});
        s.insert_concept_unchecked({"bent", {"switching", "voltage"}, std::string(kRelay), {"threshold"}, {}});
        auto v = check_system(s);
        auto has = [&](std::string_view rule) {
            return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
        };
        CHECK(has(rules::dangling_character));
        CHECK(has(rules::dangling_genus));
        CHECK(has(rules::intent_composition));
    }
}

TEST_CASE("subsumes is a partial order on random systems") {
    std::mt19937 rng(20240611);
    std::size_t checked = 0;
    for (int round = 0; round < 40; ++round) {
        ConceptSystem s = random_system(rng);
        REQUIRE(check_system(s).empty());
        std::vector<Id> ids;
        for (const auto& [id, c] : s.concepts()) ids.push_back(id);
        for (const auto& a : ids) {
            CHECK(subsumes(s, a, a));
            if (const auto& g = s.get_concept(a).genus) CHECK(subsumes(s, *g, a));
            for (const auto& b : ids) {
                if (a != b) CHECK_FALSE((subsumes(s, a, b) && subsumes(s, b, a)));
                if (!subsumes(s, a, b)) continue;
                for (const auto& c : ids)
                    if (subsumes(s, b, c)) CHECK(subsumes(s, a, c));
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("define_concept never yields a system with violations") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        RandomSystemOptions opt;
        opt.characters = 6;
        opt.descriptive_ratio = 0.3;
        CHECK(check_system(random_system(rng, opt)).empty());
    }
}
