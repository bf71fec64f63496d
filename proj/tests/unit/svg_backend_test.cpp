#include "arrowtips/svg_backend.hpp"

#include <gtest/gtest.h>

#include "arrowtips/attachment.hpp"
#include "arrowtips/tip_catalog.hpp"

using namespace arrowtips;

TEST(FormatNumber, FixedThenTrimmed) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(-0.00001), "0");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(2.16), "2.16");
    EXPECT_EQ(format_number(1.23456), "1.2346");
    EXPECT_EQ(format_number(-3.1160000000000005), "-3.116");
    EXPECT_EQ(format_number(100.0), "100");
}

TEST(PathData, Commands) {
    EXPECT_EQ(to_path_data({outline::MoveTo{{0, 0}}, outline::LineTo{{0.5, 0}}}), "M 0 0 L 0.5 0");
    EXPECT_EQ(to_path_data({outline::MoveTo{{0, 0}}, outline::CurveTo{{1, 2}, {3, 4}, {5, 6}}, outline::Close{}}),
              "M 0 0 C 1 2 3 4 5 6 Z");
}

TEST(PathData, CircleBecomesTwoArcs) {
    const double a = 0.4 + 0.2 * 0.4;
    const Drawable d = evaluate(program(lookup("o", Side::end), 0.4), 0.4).drawables.at(0);
    const std::string data = to_path_data(d.outline);
    EXPECT_EQ(data, "M 4.32 0 A 2.16 2.16 0 1 0 0 0 A 2.16 2.16 0 1 0 4.32 0 Z");
    EXPECT_EQ(format_number(4.5 * a), "2.16");
}

TEST(PathElement, ActionFidelity) {
    const Outline o{outline::MoveTo{{0, 0}}, outline::LineTo{{1, 0}}};
    const std::string s = path_element({o, 0.4, LineCap::round, LineJoin::round, PathAction::stroke}, "#123456");
    EXPECT_NE(s.find("fill=\"none\" stroke=\"#123456\" stroke-width=\"0.4\" stroke-linecap=\"round\" "
                     "stroke-linejoin=\"round\""),
              std::string::npos);
    const std::string f = path_element({o, 0.4, LineCap::butt, LineJoin::miter, PathAction::fill}, "#123456");
    EXPECT_NE(f.find("fill=\"#123456\" stroke=\"none\""), std::string::npos);
    const std::string fs = path_element({o, 0.4, LineCap::butt, LineJoin::miter, PathAction::fill_stroke}, "#abc");
    EXPECT_NE(fs.find("fill=\"#abc\" stroke=\"#abc\""), std::string::npos);
}

TEST(RenderDocument, OneLabeledGroupPerScene) {
    const HostPath host({LineSegment{{0, 0}, {40, 0}}});
    const std::vector<LabeledScene> one{{"a<b>&'", decorate(host, parse_spec("-stealth'"), 0.4)}};
    const std::string doc = render_document(one, GridLayout{1});
    EXPECT_EQ(doc.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg ", 0), 0u);
    EXPECT_NE(doc.find("<g id=\"scene-0\""), std::string::npos);
    EXPECT_EQ(doc.find("<g id=\"scene-1\""), std::string::npos);
    EXPECT_NE(doc.find(">a&lt;b&gt;&amp;&apos;</text>"), std::string::npos);
    EXPECT_NE(doc.find("scale(1 -1)"), std::string::npos);
    EXPECT_EQ(doc, render_document(one, GridLayout{1}));
}

TEST(RenderDocument, RejectsBadInput) {
    EXPECT_THROW(render_document({}, GridLayout{1}), std::invalid_argument);
    const std::vector<LabeledScene> one{{"x", EvaluatedScene{}}};
    EXPECT_THROW(render_document(one, GridLayout{0}), std::invalid_argument);
    EXPECT_THROW(render_document(one, GridLayout{1}, "red"), std::invalid_argument);
}
