#include <gtest/gtest.h>

#include "dnaprover/error.hpp"
#include "dnaprover/fixtures.hpp"
#include "dnaprover/process.hpp"

using namespace dnaprover;

TEST(ProcessParse, RoundTrip) {
  const Process p = fixtures::fourway();
  EXPECT_EQ(to_string(p), "<a^!i b!j1 c^*> | <d^* b*!j1 a^*!i> | <c^ b*!j2 e^!k> | <e^*!k b!j2 d^>");
  EXPECT_EQ(to_string(parse_process(to_string(p))), to_string(p));
  EXPECT_EQ(p.strand_count(), 4u);
  EXPECT_EQ(p.domain_count(), 12u);
  EXPECT_EQ(p.bonds(), (std::vector<std::string>{"i", "j1", "j2", "k"}));
  EXPECT_EQ(p.endpoints("j1"), SitePair({1, 2}, {2, 2}));
  EXPECT_EQ(p.fresh_bond_id(), "x1");
}

TEST(ProcessParse, AngleBrackets) {
  EXPECT_EQ(to_string(parse_process("⟨t^ p⟩ | ⟨p*⟩")), "<t^ p> | <p*>");
}

TEST(ProcessParse, Errors) {
  EXPECT_THROW(parse_process("<p"), ParseError);
  EXPECT_THROW(parse_process("<p!>"), ParseError);
  EXPECT_THROW(parse_process("<p!x>"), WellFormednessError);
  EXPECT_THROW(parse_process("<p!x> | <q*!x>"), WellFormednessError);
  EXPECT_THROW(parse_process("<p!x> | <p!x>"), WellFormednessError);
  EXPECT_THROW(parse_process("<p!x> | <p*!x> | <p*!x>"), WellFormednessError);
  EXPECT_THROW(parse_process("<p^> | <p*>"), WellFormednessError);
  EXPECT_EQ(check_well_formed({{{"p", false, false, "x"}}}).empty(), false);
  EXPECT_EQ(check_well_formed({{{"p", false, false, std::nullopt}}}), "");
}

TEST(ProcessEquivalence, RenamingAndReordering) {
  const Process a = parse_process("<a!x b> | <b* a*!x>");
  const Process b = parse_process("<b* a*!q> | <a!q b>");
  EXPECT_TRUE(alpha_equivalent(a, b));
  EXPECT_EQ(canonical_string(a), "<a!b1 b> | <b* a*!b1>");
  EXPECT_FALSE(alpha_equivalent(a, parse_process("<a b> | <b* a*>")));
}

TEST(Anchoring, FourWayJunction) {
  const Process p = fixtures::fourway();
  EXPECT_EQ(adjacent_bonds("i", p), (std::vector<std::string>{"j1"}));
  EXPECT_TRUE(is_anchored("i", p));
  EXPECT_TRUE(is_anchored("k", p));
  EXPECT_FALSE(is_anchored("i", parse_process("<a^!i c> | <a^*!i>")));
}

TEST(RuleRB, BindsFreeComplements) {
  const Process p = fixtures::hairpin();
  const Process q = apply_rb(p, {1, 1}, {3, 6});
  EXPECT_TRUE(q.has_bond("x1"));
  EXPECT_EQ(q.endpoints("x1"), SitePair({1, 1}, {3, 6}));
  EXPECT_EQ(q.bond_count(), p.bond_count() + 1);
  EXPECT_THROW(apply_rb(p, {1, 1}, {1, 2}), RuleError);   // not complementary
  EXPECT_THROW(apply_rb(p, {1, 2}, {3, 5}), RuleError);   // (3,5) is bound
  EXPECT_THROW(apply_rb(p, {1, 1}, {1, 1}), RuleError);
  EXPECT_THROW(apply_rb(p, {1, 1}, {9, 1}), RuleError);
  EXPECT_THROW(apply_rb(p, {1, 1}, {3, 6}, "y1"), RuleError);  // id in use
  auto always = [](const Process&, std::string_view) { return true; };
  EXPECT_THROW(apply_rb(p, {1, 1}, {3, 6}, "", always), RuleError);
}

TEST(RuleRU, OnlyUnanchoredToeholds) {
  const Process p = apply_rb(fixtures::hairpin(), {1, 1}, {3, 6}, "x");
  const Process back = apply_ru(p, "x");
  EXPECT_EQ(to_string(back), to_string(fixtures::hairpin()));
  EXPECT_THROW(apply_ru(p, "y1"), RuleError);  // not a toehold
  EXPECT_THROW(apply_ru(fixtures::fourway(), "i"), RuleError);  // anchored
  EXPECT_THROW(apply_ru(p, "nope"), RuleError);
}

TEST(RuleRBRU, RoundTripIsIdentity) {
  const Process p = parse_process("<t^ a> | <t^* b>");
  EXPECT_EQ(to_string(apply_ru(apply_rb(p, {1, 1}, {2, 1}), "x1")), to_string(p));
}

TEST(RuleR3, DisplacesAndNeedsAnchor) {
  const Process h = fixtures::hairpin();
  EXPECT_THROW(apply_r3(h, {1, 2}, "y1"), RuleError);  // no toehold bond yet
  const Process p = apply_rb(h, {1, 1}, {3, 6}, "x");
  EXPECT_FALSE(is_anchored("x", p));
  const Process q = apply_r3(p, {1, 2}, "y1", "y2");
  EXPECT_TRUE(is_anchored("x", q));
  EXPECT_THROW(apply_ru(q, "x"), RuleError);
  EXPECT_FALSE(q.has_bond("y1"));
  EXPECT_EQ(q.endpoints("y2"), SitePair({1, 2}, {3, 5}));
  EXPECT_TRUE(q.at({3, 1}).is_free());
  EXPECT_THROW(apply_r3(p, {1, 2}, "z1"), RuleError);  // wrong domain
  EXPECT_THROW(apply_r3(p, {1, 2}, "y1", "x"), RuleError);
}

TEST(RuleRM, SwapsJunctionAndIsAnInvolution) {
  Process p = fixtures::fourway();
  EXPECT_THROW(apply_rm(p, {"j1", "j2"}), RuleError);  // no anchor for the new bonds yet
  p = apply_rb(p, {1, 3}, {3, 1});
  p = apply_rb(p, {2, 1}, {4, 3});
  const Process q = apply_rm(p, {"j1", "j2"});
  EXPECT_EQ(q.endpoints("j1"), SitePair({1, 2}, {3, 2}));
  EXPECT_EQ(q.endpoints("j2"), SitePair({2, 2}, {4, 2}));
  EXPECT_EQ(q.bond_count(), p.bond_count());
  EXPECT_EQ(to_string(apply_rm(q, {"j1", "j2"})), to_string(p));
  EXPECT_THROW(apply_rm(p, {"j1"}), RuleError);
  EXPECT_THROW(apply_rm(p, {"j1", "j1"}), RuleError);
  EXPECT_THROW(apply_rm(p, {"j1", "i"}), RuleError);
}

TEST(Scripts, HairpinStaysWellFormed) {
  Process p = fixtures::hairpin();
  for (const auto& step : fixtures::hairpin_script()) {
    p = step.apply(p);
    std::vector<Strand> strands = p.strands();
    EXPECT_EQ(check_well_formed(strands), "") << step.label;
  }
  EXPECT_EQ(to_string(p), "<t^!x p!y2> | <r*!u q*!z2 p*!y3> | <p!y3 q!z2 r!u q* p*!y2 t^*!x>");
}

TEST(Scripts, TheoremBindsEverything) {
  Process p = fixtures::theorem();
  for (const auto& step : fixtures::theorem_script()) p = step.apply(p);
  for (const auto& s : p.strands())
    for (const auto& d : s) EXPECT_FALSE(d.is_free());
}
