// Tests for the intermediate token-document and feature-set file formats.
#include <doctest.h>

#include <smfp/dataio.hpp>
#include <smfp/errors.hpp>
#include <smfp/version.hpp>

#include <optional>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace smfp;

namespace {

FeatureVector fv(std::vector<std::size_t> indices, std::size_t dimension) {
    FeatureVector x;
    x.indices = std::move(indices);
    x.dimension = dimension;
    return x;
}

}  // namespace

TEST_SUITE("dataio") {

TEST_CASE("token documents round-trip with optional labels") {
    testutil::TempDir dir;
    const auto path = dir.path("docs.jsonl");

    std::vector<TokenDoc> docs;
    docs.push_back({{"my", "pale", "works"}, 1});
    docs.push_back({{}, 0});
    docs.push_back({{"unlabeled", ":)"}, std::nullopt});
    write_token_docs(docs, path);

    const auto back = load_token_docs(path);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        CHECK(back[i].tokens == docs[i].tokens);
        CHECK(back[i].label == docs[i].label);
    }

    SUBCASE("empty collection") {
        write_token_docs({}, path);
        CHECK(read_file(path).empty());
        CHECK(load_token_docs(path).empty());
    }
}

TEST_CASE("load_token_docs rejects malformed rows") {
    testutil::TempDir dir;
    const auto path = dir.path("docs.jsonl");

    SUBCASE("missing tokens key") {
        testutil::write_file(path, R"({"label": 1})" "\n");
        CHECK_THROWS_AS((void)load_token_docs(path), ParseError);
    }
    SUBCASE("tokens not an array") {
        testutil::write_file(path, R"({"tokens": "a b"})" "\n");
        CHECK_THROWS_AS((void)load_token_docs(path), ParseError);
    }
    SUBCASE("non-string token") {
        testutil::write_file(path, R"({"tokens": ["a", 3]})" "\n");
        CHECK_THROWS_AS((void)load_token_docs(path), ParseError);
    }
    SUBCASE("bad label") {
        testutil::write_file(path, R"({"tokens": ["a"], "label": 7})" "\n");
        CHECK_THROWS_AS((void)load_token_docs(path), ValidationError);
    }
    SUBCASE("boolean label") {
        testutil::write_file(path, R"({"tokens": ["a"], "label": false})" "\n");
        CHECK_THROWS_AS((void)load_token_docs(path), ValidationError);
    }
    SUBCASE("invalid json names the line") {
        testutil::write_file(path, R"({"tokens": []})" "\n{nope\n");
        try {
            (void)load_token_docs(path);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)load_token_docs(path), IoError);
    }
}

TEST_CASE("feature files round-trip vectors, labels, and dimension") {
    testutil::TempDir dir;
    const auto path = dir.path("features.jsonl");

    const std::vector<FeatureVector> vectors{fv({0, 2, 4}, 5), fv({}, 5), fv({4}, 5)};
    const std::vector<std::optional<int>> labels{1, std::nullopt, 0};
    write_feature_file(vectors, labels, 5, path);

    const auto back = load_feature_file(path);
    CHECK(back.dimension == 5);
    REQUIRE(back.vectors.size() == 3);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        CHECK(back.vectors[i] == vectors[i]);
        CHECK(back.labels[i] == labels[i]);
    }

    SUBCASE("empty label list means all unlabeled") {
        write_feature_file(vectors, {}, 5, path);
        const auto unlabeled = load_feature_file(path);
        REQUIRE(unlabeled.labels.size() == 3);
        for (const auto& l : unlabeled.labels) CHECK_FALSE(l.has_value());
    }
    SUBCASE("no vectors still writes the header") {
        write_feature_file({}, {}, 7, path);
        const auto empty = load_feature_file(path);
        CHECK(empty.dimension == 7);
        CHECK(empty.vectors.empty());
    }
}

TEST_CASE("write_feature_file validates its inputs") {
    testutil::TempDir dir;
    const auto path = dir.path("features.jsonl");
    const std::vector<FeatureVector> vectors{fv({0}, 3), fv({1}, 3)};

    SUBCASE("label count must match vector count or be zero") {
        CHECK_THROWS_AS(write_feature_file(vectors, {1}, 3, path), InvalidArgument);
    }
    SUBCASE("unwritable path") {
        CHECK_THROWS_AS(write_feature_file(vectors, {}, 3, dir.path("no/such/dir.jsonl")),
                        IoError);
    }
}

TEST_CASE("load_feature_file rejects malformed files") {
    testutil::TempDir dir;
    const auto path = dir.path("features.jsonl");

    SUBCASE("missing header") {
        testutil::write_file(path, R"({"indices": [0]})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ParseError);
    }
    SUBCASE("empty file") {
        testutil::write_file(path, "");
        CHECK_THROWS_AS((void)load_feature_file(path), ParseError);
    }
    SUBCASE("index at the dimension") {
        testutil::write_file(path, R"({"dimension": 3})" "\n" R"({"indices": [3]})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ValidationError);
    }
    SUBCASE("indices not strictly increasing") {
        testutil::write_file(path, R"({"dimension": 3})" "\n" R"({"indices": [1, 1]})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ValidationError);
    }
    SUBCASE("indices out of order") {
        testutil::write_file(path, R"({"dimension": 3})" "\n" R"({"indices": [2, 0]})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ValidationError);
    }
    SUBCASE("negative index") {
        testutil::write_file(path, R"({"dimension": 3})" "\n" R"({"indices": [-1]})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ParseError);
    }
    SUBCASE("row without indices") {
        testutil::write_file(path, R"({"dimension": 3})" "\n" R"({"label": 1})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ParseError);
    }
    SUBCASE("bad label") {
        testutil::write_file(path,
                             R"({"dimension": 3})" "\n" R"({"indices": [0], "label": 5})" "\n");
        CHECK_THROWS_AS((void)load_feature_file(path), ValidationError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)load_feature_file(path), IoError);
    }
}

TEST_CASE("to_labeled_set requires every row to carry a label") {
    testutil::TempDir dir;
    const auto path = dir.path("features.jsonl");

    const std::vector<FeatureVector> vectors{fv({0}, 2), fv({1}, 2)};
    write_feature_file(vectors, {1, 0}, 2, path);
    const auto set = to_labeled_set(load_feature_file(path));
    CHECK(set.dimension == 2);
    CHECK(set.labels == std::vector<int>{1, 0});
    REQUIRE(set.vectors.size() == 2);
    CHECK(set.vectors[0] == vectors[0]);

    write_feature_file(vectors, {1, std::nullopt}, 2, path);
    CHECK_THROWS_AS((void)to_labeled_set(load_feature_file(path)), ValidationError);
}

}  // TEST_SUITE("dataio")
