// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Golden tests for the command line. Each tests/golden/*.case file holds
// "args:", "exit:", a "---" separator and the expected standard output;
// "{{ANY}}" matches any text within a line.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amegraph/graph.h"
#include "cli.h"

namespace amegraph {
namespace {

namespace fs = std::filesystem;

struct Case {
    std::vector<std::string> args;
    int exit_code = 0;
    std::string expected;
};

Case load_case(const fs::path &path) {
    std::ifstream in(path);
    Case c;
    std::string line;
    std::getline(in, line);
    std::istringstream words(line.substr(line.find(':') + 1));
    for (std::string w; words >> w;) {
        c.args.push_back(w);
    }
    std::getline(in, line);
    c.exit_code = std::stoi(line.substr(line.find(':') + 1));
    std::getline(in, line);
    std::ostringstream rest;
    rest << in.rdbuf();
    c.expected = rest.str();
    return c;
}

bool line_matches(const std::string &expected, const std::string &actual) {
    const std::string any = "{{ANY}}";
    std::size_t star = expected.find(any);
    if (star == std::string::npos) {
        return expected == actual;
    }
    std::string head = expected.substr(0, star);
    std::string tail = expected.substr(star + any.size());
    return actual.size() >= head.size() + tail.size() && actual.compare(0, head.size(), head) == 0 &&
           actual.compare(actual.size() - tail.size(), tail.size(), tail) == 0;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

class CliGolden : public ::testing::Test {
   protected:
    void SetUp() override {
        previous_ = fs::current_path();
        fs::current_path(AMEGRAPH_TEST_DATA_DIR);
    }
    void TearDown() override {
        fs::current_path(previous_);
    }

    fs::path previous_;
};

TEST_F(CliGolden, EveryCaseMatches) {
    std::size_t count = 0;
    for (const auto &entry : fs::directory_iterator("tests/golden")) {
        if (entry.path().extension() != ".case") {
            continue;
        }
        SCOPED_TRACE(entry.path().filename().string());
        Case c = load_case(entry.path());
        std::ostringstream out, err;
        int code = cli::run(c.args, out, err);
        EXPECT_EQ(code, c.exit_code) << err.str();
        std::vector<std::string> want = lines_of(c.expected);
        std::vector<std::string> got = lines_of(out.str());
        ASSERT_EQ(got.size(), want.size()) << out.str();
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_TRUE(line_matches(want[i], got[i])) << "line " << i + 1 << "\n  want: " << want[i]
                                                       << "\n  got:  " << got[i];
        }
        if (code == cli::kUsage) {
            EXPECT_FALSE(err.str().empty());
        }
        ++count;
    }
    EXPECT_GE(count, 25u);
}

TEST_F(CliGolden, SearchWritesWitnessFile) {
    fs::path out_path = fs::temp_directory_path() / "amegraph_cli_witnesses.txt";
    std::ostringstream out, err;
    int code = cli::run({"search", "--n", "4", "--p", "3", "--canonical", "--rescale", "--out", out_path.string()},
                        out, err);
    EXPECT_EQ(code, cli::kOk);
    std::vector<Graph> graphs = parse_graphs(read_text_file(out_path.string()));
    EXPECT_FALSE(graphs.empty());
    fs::remove(out_path);
}

TEST_F(CliGolden, HelpSucceeds) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::run({"--help"}, out, err), cli::kOk);
    EXPECT_NE(out.str().find("verify"), std::string::npos);
}

}  // namespace
}  // namespace amegraph
