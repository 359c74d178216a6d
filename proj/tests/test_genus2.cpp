#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2galois/catalog.hpp"
#include "g2galois/errors.hpp"
#include "g2galois/genus2.hpp"

using namespace g2galois;

namespace {

std::string data_dir() { return G2GALOIS_DATA_DIR; }

std::shared_ptr<const FiniteGroup> perm_group(
    const std::string& name, const std::vector<std::string>& cycles) {
    std::vector<Permutation> gens;
    int deg = 0;
    for (const std::string& c : cycles)
        deg = std::max(deg, Permutation::max_point(c));
    for (const std::string& c : cycles)
        gens.push_back(Permutation::parse_cycles(c, deg));
    return std::make_shared<FiniteGroup>(
        FiniteGroup::from_permutations(name, std::move(gens)));
}

} // namespace

TEST_CASE("the central involution is found when unique") {
    auto c2 = perm_group("C2", {"(1 2)"});
    CHECK(hyperelliptic_involution(*c2) == 1);

    auto d4 = perm_group("D4", {"(1 2 3 4)", "(1 3)"});
    int s = hyperelliptic_involution(*d4);
    CHECK(d4->element_order(s) == 2);
    for (int x = 0; x < d4->order(); ++x) CHECK(d4->mul(s, x) == d4->mul(x, s));

    auto c10 = perm_group("C10", {"(1 2 3 4 5 6 7 8 9 10)"});
    CHECK(c10->element_order(hyperelliptic_involution(*c10)) == 2);
}

TEST_CASE("several central involutions require a designation") {
    auto v4 = perm_group("C2xC2", {"(1 2)", "(3 4)"});
    CHECK_THROWS_AS(hyperelliptic_involution(*v4), AmbiguousSigma);
    CHECK_THROWS_AS(make_context(AutGroupId::C2xC2, v4), AmbiguousSigma);

    // designating (1 2) resolves the ambiguity
    int target = -1;
    for (int x = 1; x < v4->order(); ++x)
        if (v4->element_label(x) == "(1 2)") target = x;
    REQUIRE(target > 0);
    CurveContext ctx = make_context(AutGroupId::C2xC2, v4, target);
    CHECK(ctx.sigma == target);
    CHECK(ctx.lattice.subgroups[ctx.sigma_subgroup].contains(target));
    CHECK(ctx.p1_count() == 2);

    // the identity is not an involution, so it is rejected as a designation
    CHECK_THROWS_AS(make_context(AutGroupId::C2xC2, v4, 0),
                    std::invalid_argument);
}

TEST_CASE("projective-line quotients and very ample degrees") {
    auto d6 = perm_group("D6", {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"});
    CurveContext ctx = make_context(AutGroupId::D6_12, d6);

    // exactly the subgroups of order >= 3 plus the sigma subgroup
    for (int i = 0; i < ctx.lattice.count(); ++i) {
        bool expect = ctx.lattice.subgroups[i].order >= 3 || i == ctx.sigma_subgroup;
        CHECK(quotient_is_p1(ctx, i) == expect);
        CHECK((ctx.p1_node_of(i) >= 0) == expect);
    }
    CHECK(ctx.p1_count() == 9);

    for (int n = 0; n < ctx.p1_count(); ++n)
        CHECK(very_ample(ctx, n) == (ctx.node_order(n) >= 5));
    CHECK((very_ample_orders(ctx) == std::vector<int>{6, 12}));

    auto c2 = perm_group("C2", {"(1 2)"});
    CurveContext small = make_context(AutGroupId::C2, c2);
    CHECK(small.p1_count() == 1);
    CHECK(very_ample_orders(small).empty());
}

TEST_CASE("node references name the isomorphism type and lattice slot") {
    auto d6 = perm_group("D6", {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"});
    CurveContext ctx = make_context(AutGroupId::D6_12, d6);
    for (int n = 0; n < ctx.p1_count(); ++n) {
        std::string ref = ctx.node_ref(n);
        auto hash = ref.find('#');
        REQUIRE(hash != std::string::npos);
        CHECK(ref.substr(0, hash) == ctx.labels[ctx.p1_nodes[n]]);
        CHECK(std::stoi(ref.substr(hash + 1)) == ctx.p1_nodes[n]);
    }
    CHECK(ctx.subgroup_ref(ctx.lattice.count() - 1).substr(0, 2) == "D6");
}

TEST_CASE("group names parse and print") {
    for (AutGroupId id : all_aut_groups)
        CHECK(parse_aut_group(aut_group_name(id)) == id);
    CHECK(parse_aut_group("D4_8") == AutGroupId::D4_8);
    CHECK(parse_aut_group("GL2F3_48") == AutGroupId::GL2F3_48);
    CHECK_THROWS_AS(parse_aut_group("S5"), std::invalid_argument);
}

TEST_CASE("the shipped catalog builds all seven contexts in order") {
    std::vector<CurveContext> all = load_catalog(data_dir() + "/catalog.txt");
    REQUIRE(all.size() == 7);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].id == all_aut_groups[i]);
        CHECK(all[i].name == aut_group_name(all[i].id));
    }

    const int expected_subgroups[] = {2, 5, 10, 4, 16, 30, 55};
    const int expected_p1[] = {1, 2, 5, 3, 9, 21, 42};
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].lattice.count() == expected_subgroups[i]);
        CHECK(all[i].p1_count() == expected_p1[i]);
        CHECK(all[i].sigma > 0);
        CHECK(all[i].group->element_order(all[i].sigma) == 2);
    }
}

TEST_CASE("catalog text parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_catalog("D4 | quaternion | (1 2)\n"), DataFormatError);
    CHECK_THROWS_AS(parse_catalog("D4 | perm\n"), DataFormatError);

    std::vector<CatalogEntry> ok =
        parse_catalog("# comment\n\nD4 | perm | (1 2 3 4) ; (1 3)\n");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].name == "D4");
    CHECK(ok[0].kind == "perm");
    CHECK(ok[0].generators.size() == 2);
    CHECK(ok[0].sigma_spec.empty());
}

TEST_CASE("context validation catches a tampered catalog entry") {
    CatalogEntry bad;
    bad.name = "D4";
    bad.kind = "perm";
    bad.generators = {"(1 2 3 4)"}; // generates only a cyclic group of order 4
    CHECK_THROWS_AS(build_context(bad), CatalogCorrupt);

    CatalogEntry unknown;
    unknown.name = "Q8";
    unknown.kind = "mat3";
    unknown.generators = {"0 2 1 0", "1 1 1 2"};
    CHECK_THROWS_AS(build_context(unknown), CatalogCorrupt);
}
