#include <gtest/gtest.h>

#include "pairlin/diagnostics.hpp"
#include "pairlin/error.hpp"
#include "pairlin/instances.hpp"
#include "pairlin/relations.hpp"

using namespace pairlin;

namespace {
std::vector<Element> carrier_of(const PairAlgebra& a) { return a.carrier().value(); }
}  // namespace

namespace {

Element lit(const AlgebraPtr& a, std::string_view s) { return a->parse(s); }

}  // namespace

TEST(Circ, SignOneGivesInfinity) {
    auto s = make_pair("sign");
    EXPECT_EQ(circ(*s, lit(s, "1")), lit(s, "inf"));
    EXPECT_TRUE(s->is_null(circ(*s, lit(s, "-1"))));
}

TEST(Circ, SuperBooleanOneGivesE) {
    auto sb = make_pair("superboolean");
    EXPECT_EQ(circ(*sb, sb->one()), lit(sb, "e"));
}

TEST(Circ, SupertropicalTangibleGivesGhost) {
    auto st = make_pair("supertropical");
    EXPECT_EQ(circ(*st, lit(st, "3")), lit(st, "3g"));
}

TEST(Circ, RejectsNonTangible) {
    auto s = make_pair("sign");
    try {
        circ(*s, lit(s, "inf"));
        FAIL() << "expected NonTangibleInput";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonTangibleInput);
    }
}

TEST(EElements, KnownPairs) {
    auto s = make_pair("sign");
    auto es = e_elements(*s);
    EXPECT_EQ(es.e, lit(s, "inf"));
    EXPECT_EQ(es.e_prime, lit(s, "inf"));

    auto sb = make_pair("superboolean");
    auto eb = e_elements(*sb);
    EXPECT_EQ(eb.e, lit(sb, "e"));
    EXPECT_EQ(eb.e_prime, lit(sb, "e"));

    auto db = make_pair("doubled:boolean");
    auto ed = e_elements(*db);
    EXPECT_EQ(ed.e, lit(db, "1|1"));
    EXPECT_EQ(ed.e_prime, lit(db, "1|1"));
    EXPECT_TRUE(db->is_null(ed.e));
}

TEST(Balances, SignPair) {
    auto s = make_pair("sign");
    EXPECT_TRUE(balances(*s, lit(s, "1"), lit(s, "1")));
    EXPECT_FALSE(balances(*s, lit(s, "1"), lit(s, "-1")));
    EXPECT_TRUE(balances(*s, lit(s, "inf"), lit(s, "1")));
}

TEST(Balances, FirstKindUsesSum) {
    auto st = make_pair("supertropical");
    EXPECT_TRUE(balances(*st, lit(st, "2"), lit(st, "2")));
    EXPECT_FALSE(balances(*st, lit(st, "2"), lit(st, "1")));
    EXPECT_TRUE(balances(*st, lit(st, "2g"), lit(st, "1")));
}

TEST(Surpasses0, Examples) {
    auto s = make_pair("sign");
    EXPECT_TRUE(surpasses0(*s, lit(s, "1"), lit(s, "inf")));
    EXPECT_FALSE(surpasses0(*s, lit(s, "inf"), lit(s, "1")));
    for (const auto& b : carrier_of(*s)) EXPECT_TRUE(surpasses0(*s, b, b));

    auto st = make_pair("supertropical");
    EXPECT_TRUE(surpasses0(*st, lit(st, "3"), lit(st, "3g")));
    EXPECT_TRUE(surpasses0(*st, lit(st, "3"), lit(st, "4g")));
    EXPECT_FALSE(surpasses0(*st, lit(st, "4"), lit(st, "3g")));
    EXPECT_FALSE(surpasses0(*st, lit(st, "3"), lit(st, "4")));
    EXPECT_TRUE(surpasses0(*st, st->zero(), lit(st, "4g")));
}

TEST(Surpasses0, HyperSubsetInclusion) {
    auto h = make_pair("hyper:hex1:3");
    auto a = h->one();
    auto aa = h->add(a, a);
    EXPECT_TRUE(surpasses0(*h, h->zero(), aa));
    EXPECT_FALSE(surpasses0(*h, aa, a));
}

TEST(Height, Examples) {
    auto s = make_pair("sign");
    auto sb = make_pair("superboolean");
    EXPECT_EQ(height(*s, s->zero()), 0u);
    EXPECT_EQ(height(*s, lit(s, "-1")), 1u);
    EXPECT_EQ(height(*s, lit(s, "inf")), 2u);
    EXPECT_EQ(height(*sb, lit(sb, "e")), 2u);
}

TEST(Characteristic, Examples) {
    auto c = characteristic(*make_pair("npq:2:3"));
    ASSERT_TRUE(c.finite);
    EXPECT_EQ(c.p, 2u);
    EXPECT_EQ(c.q, 3u);
    EXPECT_EQ(c.m, 4u);

    auto sb = characteristic(*make_pair("superboolean"));
    EXPECT_EQ(sb.p, 1u);
    EXPECT_EQ(sb.q, 2u);
    EXPECT_EQ(sb.m, 2u);

    auto s = characteristic(*make_pair("sign"));
    EXPECT_EQ(s.p, 1u);
    EXPECT_EQ(s.q, 1u);
    EXPECT_EQ(s.m, 1u);
}

TEST(Characteristic, SupertropicalIsFinite) {
    // one is tangible 0; 1 + 1 = 0g and 0g + 1 = 0g
    auto c = characteristic(*make_pair("supertropical"));
    EXPECT_TRUE(c.finite);
    EXPECT_FALSE(c.capped);
    EXPECT_EQ(c.p, 1u);
    EXPECT_EQ(c.q, 2u);
}

TEST(UniformPresentation, SignPair) {
    auto s = make_pair("sign");
    auto p = uniform_presentation(*s, lit(s, "inf"));
    EXPECT_EQ(p.form, PresentationForm::QuasiZero);
    EXPECT_EQ(p.multiplicity, 2u);
    EXPECT_EQ(p.base, lit(s, "1"));

    auto t = uniform_presentation(*s, lit(s, "-1"));
    EXPECT_EQ(t.form, PresentationForm::Tangible);
    EXPECT_EQ(t.multiplicity, 1u);
    EXPECT_EQ(t.base, lit(s, "-1"));
}

TEST(UniformPresentation, SuperBoolean) {
    auto sb = make_pair("superboolean");
    auto p = uniform_presentation(*sb, lit(sb, "e"));
    EXPECT_EQ(p.form, PresentationForm::Multiple);
    EXPECT_EQ(p.multiplicity, 2u);
    EXPECT_EQ(p.base, sb->one());
    EXPECT_EQ(reconstruct(*sb, p), lit(sb, "e"));
}

TEST(Audit, SignPair) {
    auto r = axiom_audit(*make_pair("sign"));
    EXPECT_FALSE(r.sample_only);
    for (auto f : {"admissible", "property-n", "a0-bipotent", "strict-second-kind", "almost-regular", "uniquely-negated"})
        EXPECT_TRUE(r.holds(f)) << f;
    EXPECT_FALSE(r.holds("first-kind"));
}

TEST(Audit, Supertropical) {
    auto r = axiom_audit(*make_pair("supertropical"));
    EXPECT_TRUE(r.sample_only);
    EXPECT_TRUE(r.holds("first-kind"));
    EXPECT_TRUE(r.holds("tropical-type"));
}

TEST(Audit, MinimalSecondKindIsIdempotent) {
    auto r = axiom_audit(*make_pair("minimal:second:2"));
    EXPECT_TRUE(r.holds("a0-bipotent"));
    EXPECT_TRUE(r.holds("idempotent-addition"));
    EXPECT_TRUE(r.holds("second-kind"));
}

TEST(Audit, FlagsCounterexampleWitness) {
    auto r = axiom_audit(*make_pair("boolean"));
    EXPECT_FALSE(r.holds("property-n"));
    EXPECT_FALSE(r.flag("property-n").witness.empty());
}

TEST(Kind, DetectedMatchesDeclared) {
    for (const auto& rp : registered_pairs()) {
        auto r = axiom_audit(*make_pair(rp.spec));
        EXPECT_FALSE(r.kind_mismatch) << rp.spec;
    }
}

TEST(Balances, DoubledSupertropicalUsesSwitchShortcut) {
    auto d = make_pair("doubled:supertropical");
    EXPECT_NO_THROW(balances(*d, d->one(), d->one()));
}

TEST(Errors, ElementsFromDifferentAlgebrasAreRejected) {
    auto s = make_pair("sign");
    auto b = make_pair("boolean");
    EXPECT_THROW(s->add(s->one(), b->one()), Error);
}
