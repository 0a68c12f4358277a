#include "doctest.h"

#include <sstream>

#include "ctsurg/front.hpp"
#include "ctsurg/io.hpp"
#include "ctsurg/lutz.hpp"
#include "ctsurg/render.hpp"
#include "ctsurg/surgery.hpp"
#include "ctsurg/transverse.hpp"

#include "helpers.hpp"

using namespace ctsurg;

TEST_CASE("front parsing: tokens, comments, orient lines") {
    Diagram d = parse_diagram("front v1\nL1 R1\n");
    REQUIRE(std::holds_alternative<FrontDiagram>(d));
    FrontDiagram f = std::get<FrontDiagram>(d);
    CHECK(f.events == std::vector<FrontEvent>{left_cusp(1), right_cusp(1)});

    Diagram d2 = parse_diagram("front v1\n# a comment\nL1 X1 # trailing\nX1 R1\norient 0 -\n");
    FrontDiagram f2 = std::get<FrontDiagram>(d2);
    CHECK(f2.events.size() == 4);
    CHECK(f2.component_reversed(0));

    Diagram t = parse_diagram("tfront v1\nC1 O1 D1\n");
    REQUIRE(std::holds_alternative<TransverseFront>(t));
    CHECK(std::get<TransverseFront>(t).events ==
          std::vector<TransverseEvent>{cup(1), crossing_over(1), cap(1)});

    CHECK_THROWS_AS(parse_diagram("front v2\nL1\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("widget v1\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("front v1\nQ1\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("front v1\nL0\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("front v1\nL\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("front v1\nLx\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("front v1\norient 0\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram(""), ParseError);
}

TEST_CASE("file round trip: parse(write(d)) == d") {
    testutil::Rng rng(4321);
    for (int it = 0; it < 40; ++it) {
        FrontDiagram d = testutil::random_front(rng, 36);
        Diagram back = parse_diagram(to_text(d));
        REQUIRE(std::holds_alternative<FrontDiagram>(back));
        CHECK(std::get<FrontDiagram>(back) == d);
    }
    for (int it = 0; it < 25; ++it) {
        FrontDiagram d = testutil::random_knot_front(rng, 30);
        TransverseFront t = positive_transverse_pushoff(d, 0);
        Diagram back = parse_diagram(to_text(t));
        REQUIRE(std::holds_alternative<TransverseFront>(back));
        CHECK(std::get<TransverseFront>(back) == t);
    }
}

TEST_CASE("presentation JSON round trip") {
    FrontDiagram unknot{{left_cusp(1), right_cusp(1)}, {}};
    SurgeryPresentation p = lutz_pair(unknot, 0, LutzSign::positive, {}, "unknot");
    SurgeryPresentation q = presentation_from_json(presentation_to_json(p));
    CHECK(linking_matrix(q) == linking_matrix(p));
    CHECK(q.component(0).rot == p.component(0).rot);
    CHECK(q.component(0).tb == p.component(0).tb);
    CHECK(q.component(1).source.kind == SurgerySource::Kind::derived);
    CHECK(q.component(1).source.zigzags == std::vector<ZigzagDir>{ZigzagDir::up, ZigzagDir::up});
    CHECK(q.component(0).source.front_ref == "unknot");

    testutil::Rng rng(888);
    for (int it = 0; it < 25; ++it) {
        SurgeryPresentation a =
            testutil::random_presentation(rng, testutil::uniform(rng, 1, 4), false);
        SurgeryPresentation b = presentation_from_json(presentation_to_json(a));
        CHECK(linking_matrix(b) == linking_matrix(a));
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(b.component(i).coefficient == a.component(i).coefficient);
            CHECK(b.component(i).rot == a.component(i).rot);
            CHECK(b.component(i).tb == a.component(i).tb);
        }
    }

    CHECK_THROWS_AS(presentation_from_json(json::parse("{\"components\": []}")), ParseError);
    CHECK_THROWS_AS(
        presentation_from_json(json::parse(
            R"({"components":[{"source":{"abstract":{}},"coefficient":"+2"}],
                "framings":[0],"rotations":[0],"linking":[[0]]})")),
        ParseError);
}

TEST_CASE("parsers survive arbitrary input without crashing") {
    testutil::Rng rng(13);
    const char alphabet[] = "LRXCDOU0123456789 \n#-+orient frontv";
    for (int it = 0; it < 300; ++it) {
        std::string s;
        int len = testutil::uniform(rng, 0, 60);
        for (int i = 0; i < len; ++i)
            s += alphabet[testutil::uniform(rng, 0, sizeof(alphabet) - 2)];
        try {
            Diagram d = parse_diagram(s);
            // parsed inputs must also round-trip
            if (std::holds_alternative<FrontDiagram>(d))
                CHECK(std::get<FrontDiagram>(parse_diagram(to_text(std::get<FrontDiagram>(d)))) ==
                      std::get<FrontDiagram>(d));
        } catch (const ParseError&) {
            // rejection is fine; crashes are not
        }
    }
    for (int it = 0; it < 200; ++it) {
        std::string s;
        int len = testutil::uniform(rng, 0, 80);
        for (int i = 0; i < len; ++i) s += static_cast<char>(testutil::uniform(rng, 1, 255));
        std::istringstream in(s);
        CHECK_THROWS_AS(parse_presentation(in), ParseError);
    }
}

TEST_CASE("renderers are deterministic and draw the frozen glyphs") {
    FrontDiagram unknot{{left_cusp(1), right_cusp(1)}, {}};
    CHECK(render_ascii(unknot) == "(--)\n(--)\n");

    TransverseFront kinked{{cup(1), crossing_over(1), cap(1)}, {}};
    CHECK(render_ascii(kinked) == "(--X--)\n(--X--)\n");

    FrontDiagram trefoil{{left_cusp(1), left_cusp(3), crossing(2), crossing(2), crossing(2),
                          right_cusp(3), right_cusp(1)},
                         {}};
    std::string a1 = render_ascii(trefoil);
    std::string a2 = render_ascii(trefoil);
    CHECK(a1 == a2);
    std::string s1 = render_svg(trefoil);
    CHECK(s1 == render_svg(trefoil));
    CHECK(s1.find("<svg") == 0);
    CHECK(s1.find("Q ") != std::string::npos); // cusps drawn as quadratic arcs

    CHECK_THROWS_AS(render_ascii(FrontDiagram{{left_cusp(1)}, {}}), InvalidDiagram);
}
