#include "arrowtips/tip_catalog.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "arrowtips/errors.hpp"

using namespace arrowtips;

namespace {

const std::vector<double> kWidths{0.2, 0.4, 0.8, 1.6, 3.2};

TipId end_tip(const std::string& name) { return lookup(name, Side::end); }

Point resolved(const TipPoint& p, double w) { return {p.x.resolve(w), p.y.resolve(w)}; }

}  // namespace

TEST(Registry, OneEntryPerDeclaration) { EXPECT_EQ(registry().size(), 47u); }

TEST(Registry, NamesFromTheDeclarations) {
    const TipDefinition& stealth = definition(end_tip("stealth'"));
    EXPECT_EQ(stealth.start_name, "stealth'");
    EXPECT_EQ(stealth.end_name, "stealth'");

    const TipDefinition& bracket = definition(end_tip("]"));
    EXPECT_EQ(bracket.start_name, "[");
    EXPECT_EQ(bracket.end_name, "]");
}

TEST(Registry, NamesUniquePerSide) {
    for (const Side side : {Side::start, Side::end}) {
        const auto all = names(side);
        EXPECT_EQ(std::set<std::string>(all.begin(), all.end()).size(), all.size());
    }
}

TEST(Extents, HandEvaluatedValues) {
    // angle 60 at w = 0.4: a = 0.3 + 0.1 = 0.4, left = -(7.29 * 0.4 + 0.2), right = 0.2 + 0.4
    const Extents a60 = extents(end_tip("angle 60"), 0.4);
    EXPECT_NEAR(a60.left, -3.116, 1e-12);
    EXPECT_NEAR(a60.right, 0.6, 1e-12);

    for (const double w : kWidths) {
        EXPECT_EQ(extents(end_tip("round cap"), w), (Extents{0.0, w}));
    }

    // "]" at w = 0.4: setup unit 1 + 0.5
    const Extents br = extents(end_tip("]"), 0.4);
    EXPECT_NEAR(br.left, -1.5, 1e-12);
    EXPECT_NEAR(br.right, 0.2, 1e-12);
}

TEST(Extents, HarpoonLeftIsBothNegativeAndAsWritten) {
    const Extents e = extents(end_tip("left to"), 1.0);
    EXPECT_NEAR(e.left, -0.84 - 1.3, 1e-12);
    EXPECT_NEAR(e.right, 0.21 + 0.625, 1e-12);
}

TEST(Extents, DomainError) {
    EXPECT_THROW(extents(end_tip("o"), 0.0), DomainError);
    EXPECT_THROW(program(end_tip("o"), -0.1), DomainError);
}

TEST(Extents, OrderedAndMonotone) {
    for (std::size_t i = 0; i < registry().size(); ++i) {
        Extents prev{};
        for (std::size_t k = 0; k < kWidths.size(); ++k) {
            const Extents e = extents({i, Side::end}, kWidths[k]);
            EXPECT_LE(e.left, e.right) << registry()[i].end_name;
            if (k > 0) {
                EXPECT_GE(std::abs(e.left), std::abs(prev.left)) << registry()[i].end_name;
                EXPECT_GE(e.right, prev.right) << registry()[i].end_name;
            }
            prev = e;
        }
    }
}

TEST(Program, BracketOpsAsTranscribed) {
    for (const double w : kWidths) {
        const double a = 2.0 + 1.5 * w;
        const double b = a + w;
        const RenderProgram expected(std::vector<ProgramOp>{
            SetDashSolid{}, SetJoin{LineJoin::miter}, SetCap{LineCap::butt}, MoveTo{{pt(-0.5 * b), pt(-a)}},
            LineTo{{pt(0), pt(-a)}}, LineTo{{pt(0), pt(a)}}, LineTo{{pt(-0.5 * b), pt(a)}},
            UsePath{PathAction::stroke}});
        EXPECT_EQ(program(end_tip("]"), w), expected);
    }
}

TEST(Program, LatexIsOneFill) {
    const RenderProgram p = program(end_tip("latex'"), 0.4);
    ASSERT_EQ(p.action_count(), 1u);
    EXPECT_EQ(std::get<UsePath>(p.ops().back()).action, PathAction::fill);
}

TEST(Program, DeclaredReversalIsMirrorX) {
    for (const double w : kWidths) {
        EXPECT_EQ(program(end_tip("angle 60 reversed"), w), mirror_x(program(end_tip("angle 60"), w)));
    }
}

TEST(Program, SerifShiftsBeforeDrawing) {
    const RenderProgram p = program(end_tip("serif cm"), 1.0);
    EXPECT_EQ(p.ops().front(), (ProgramOp{Translate{{lw(0.04), pt(0)}}}));
}

TEST(Program, SixtyDegreeApex) {
    for (const std::string name : {"angle 60", "triangle 60"}) {
        for (const double w : kWidths) {
            const double a = definition(end_tip(name)).base_unit(w);
            const auto& ops = program(end_tip(name), w).ops();
            std::vector<Point> vertices;
            for (const auto& op : ops) {
                if (const auto* m = std::get_if<MoveTo>(&op)) vertices.push_back(resolved(m->to, w));
                if (const auto* l = std::get_if<LineTo>(&op)) vertices.push_back(resolved(l->to, w));
            }
            ASSERT_EQ(vertices.size(), 3u);
            EXPECT_EQ(vertices[1], (Point{0.5 * a, 0}));
            EXPECT_EQ(vertices[0], add({0.5 * a, 0}, polar(150, 9 * a)));
            EXPECT_EQ(vertices[2], add({0.5 * a, 0}, polar(-150, 9 * a)));
            EXPECT_EQ(vertices[0].x, vertices[2].x);
            EXPECT_EQ(vertices[0].y, -vertices[2].y);
        }
    }
}

TEST(Program, LeftRightPairsMirror) {
    for (const double w : kWidths) {
        EXPECT_EQ(program(end_tip("right to"), w), mirror_y(program(end_tip("left to"), w)));
        EXPECT_EQ(program(end_tip("right to reversed"), w), mirror_y(program(end_tip("left to reversed"), w)));
        EXPECT_EQ(program(end_tip("right hook"), w), mirror_y(program(end_tip("left hook"), w)));
    }
}

TEST(Program, ParenthesisStartAndEndShareGeometry) {
    EXPECT_EQ(lookup("(", Side::start).index, lookup(")", Side::end).index);
    EXPECT_EQ(lookup(")", Side::start).index, lookup("(", Side::end).index);
}

TEST(Reversed, BracketSwapsNamesAndExtents) {
    const TipId rev = reversed(end_tip("]"));
    EXPECT_EQ(name_of(rev), "[");
    EXPECT_EQ(rev.side, Side::end);
    for (const double w : kWidths) {
        const Extents e = extents(rev, w);
        EXPECT_EQ(e.left, -(0.5 * w));
        EXPECT_EQ(e.right, 1.0 + 1.25 * w);
    }
}

TEST(Reversed, Involution) {
    const TipId a90 = end_tip("angle 90");
    EXPECT_EQ(reversed(reversed(a90)), a90);
    EXPECT_EQ(name_of(reversed(end_tip("stealth'"))), "stealth' reversed");
}

TEST(Reversed, OnlyDeclaredReversals) {
    std::size_t declared = 0;
    for (const auto& def : registry()) {
        declared += def.reverses ? 1 : 0;
    }
    EXPECT_EQ(declared, 13u);
    for (const std::string name : {"serif cm", "round cap", "butt cap", "triangle 90 cap", "fast cap",
                                   "open triangle 90", "left to", "left to reversed"}) {
        EXPECT_THROW(reversed(end_tip(name)), LookupError) << name;
    }
}

TEST(Lookup, Sides) {
    EXPECT_EQ(lookup("[", Side::start).index, lookup("]", Side::end).index);
    EXPECT_EQ(lookup("angle 90", Side::start).index, lookup("angle 90", Side::end).index);
    try {
        lookup("bogus", Side::end);
        FAIL();
    } catch (const LookupError& e) {
        EXPECT_FALSE(e.candidates().empty());
    }
    try {
        lookup("angle 9", Side::end);
        FAIL();
    } catch (const LookupError& e) {
        ASSERT_FALSE(e.candidates().empty());
        EXPECT_EQ(e.candidates().front().rfind("angle 9", 0), 0u);
    }
}

TEST(CatalogDump, OneRecordPerDeclaration) {
    const std::string dump = catalog_dump();
    EXPECT_EQ(static_cast<std::size_t>(std::count(dump.begin(), dump.end(), '\n')), registry().size());
    EXPECT_NE(dump.find("0\t[\t]\tbase\t-1\t-1.25\t0\t0.5\n"), std::string::npos);
}
