#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "tcmotion/io.hpp"
#include "tcmotion/verification.hpp"

using namespace tcmotion;
using nlohmann::json;

TEST(ConfigurationJson, RoundTripIsBitIdentical) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = random_configuration(3, 4, rng);
        const auto text = to_json(c).dump();
        EXPECT_EQ(configuration_from_json(json::parse(text)), c);
    }
}

TEST(ConfigurationJson, RejectsMalformed) {
    EXPECT_THROW(configuration_from_json(json::parse(R"({"dim": 2})")), std::invalid_argument);
    EXPECT_THROW(configuration_from_json(json::parse(R"({"dim": 2, "points": [[0, 0], [1]]})")), std::invalid_argument);
    EXPECT_THROW(configuration_from_json(json::parse(R"({"dim": 2, "points": [[0, 0], [0, 0]]})")), std::invalid_argument);
    EXPECT_THROW(configuration_from_json(json::parse(R"({"dim": "x", "points": []})")), std::invalid_argument);
}

TEST(TreeJson, RoundTrip) {
    const Tree h = make_h_tree();
    const Tree back = tree_from_json(json::parse(to_json(h).dump()));
    EXPECT_EQ(back.ids(), h.ids());
    EXPECT_EQ(back.edge_id_pairs(), h.edge_id_pairs());
    EXPECT_EQ(back.root(), h.root());
}

TEST(TreePointJson, EdgeParameterFollowsListedEndpoint) {
    const Tree y = make_y_tree();
    const auto p = tree_point_from_json(y, json::parse(R"({"type": "edge", "edge": [2, 1], "s": 0.25})"));
    const auto& e = y.edge(p.index);
    EXPECT_EQ(y.id_of(e.lower), 1);
    EXPECT_DOUBLE_EQ(p.s, 0.75);
    EXPECT_THROW(tree_point_from_json(y, json::parse(R"({"type": "edge", "edge": [2, 3], "s": 0.5})")),
                 std::invalid_argument);
    EXPECT_THROW(tree_point_from_json(y, json::parse(R"({"type": "corner", "id": 1})")), std::invalid_argument);
}

TEST(TreeConfigurationJson, RoundTrip) {
    const Tree h = make_h_tree();
    std::mt19937_64 rng(2);
    const auto c = random_tree_configuration(h, 4, 1, rng);
    EXPECT_EQ(tree_configuration_from_json(h, json::parse(to_json(h, c).dump())), c);
}

TEST(Csv, HeaderAndRows) {
    const Configuration a(2, std::vector<Vector>{{0, 0}, {1, 0}});
    const Configuration b(2, std::vector<Vector>{{0, 1}, {1, 1}});
    std::ostringstream out;
    write_trajectory_csv(out, linear_move(a, b), 5);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,p0_x0,p0_x1,p1_x0,p1_x1");
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    EXPECT_EQ(rows, 5);
    EXPECT_EQ(last, "1,0,1,1,1");
}

TEST(TreeDump, SamplesCarryPoints) {
    const Tree y = make_y_tree();
    const TreeConfiguration c{TreePoint::vertex(y.index_of(2))};
    const auto dump = tree_sample_dump(y, TreeTrajectory::constant(y, c), 3);
    ASSERT_EQ(dump["samples"].size(), 3u);
    EXPECT_EQ(dump["samples"][2]["points"][0]["id"], 2);
}
