// Copyright 2026 The dvworkbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) { return std::string(DV_FIXTURES_DIR) + "/" + name; }

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = dvw::dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / ("dvw-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

TEST(Cli, CheckAlgebraExamples) {
    const auto b2 = run({"check-algebra", fixture("b2.alg")});
    EXPECT_EQ(b2.status, dvw::kExitVerified);
    EXPECT_TRUE(has(b2.out, "class: zero-dimensional deVries"));
    const auto c2 = run({"--format", "kv", "check-algebra", fixture("c2.alg")});
    EXPECT_EQ(c2.status, dvw::kExitRefuted);
    EXPECT_TRUE(has(c2.out, "check.A7: fail"));
    EXPECT_TRUE(has(c2.out, "witness.A7: a={p}"));
    EXPECT_TRUE(has(c2.out, "status: refuted"));
    EXPECT_EQ(run({"check-algebra", fixture("c2.alg"), "--require", "contact"}).status, dvw::kExitVerified);
    const auto missing = run({"check-algebra", "/nonexistent"});
    EXPECT_EQ(missing.status, dvw::kExitInputError);
    EXPECT_TRUE(has(missing.err, "dvw: error:"));
}

TEST(Cli, CountermodelExample) {
    const auto r = run({"s2ic", "countermodel", "(p -> p) -> (p => p)", "--max-atoms", "2", "--class", "contact"});
    EXPECT_EQ(r.status, dvw::kExitRefuted);
    EXPECT_TRUE(has(r.out, "prec: 0 {p}\n"));
    EXPECT_TRUE(has(r.out, "prec: {p} 1\n"));
    EXPECT_FALSE(has(r.out, "prec: {p} {p}\n"));
    EXPECT_TRUE(has(r.out, "valuation: V(p)=p"));
    const auto jobs = run({"--jobs", "3", "s2ic", "countermodel", "(p -> p) -> (p => p)", "--max-atoms", "2",
                           "--class", "contact"});
    EXPECT_EQ(jobs.out, r.out);
    EXPECT_EQ(run({"s2ic", "countermodel", "(p => q) -> (p -> q)", "--max-atoms", "2", "--class", "contact"}).status,
              dvw::kExitVerified);
    EXPECT_EQ(run({"s2ic", "countermodel", "p", "--max-atoms", "4", "--class", "contact"}).status,
              dvw::kExitInputError);
    EXPECT_EQ(run({"s2ic", "countermodel", "p &", "--max-atoms", "2", "--class", "contact"}).status,
              dvw::kExitInputError);
}

TEST(Cli, BadInvocations) {
    const auto unknown = run({"frobnicate"});
    EXPECT_EQ(unknown.status, dvw::kExitInputError);
    EXPECT_TRUE(has(unknown.err, "unknown verb"));
    EXPECT_EQ(run({}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"check-space"}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"--format", "xml", "check-algebra", fixture("b2.alg")}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"check-space", fixture("b2.alg")}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, DualizeIsDeterministicAndReadsBack) {
    const auto dir = scratch_dir();
    for (const char* name : {"b0.alg", "b1.alg", "b2.alg", "b3.alg"}) {
        const auto first = run({"dualize", fixture(name)});
        const auto second = run({"dualize", fixture(name)});
        ASSERT_EQ(first.status, dvw::kExitVerified) << first.err;
        EXPECT_EQ(first.out, second.out);
        const auto path = (dir / (std::string(name) + ".space")).string();
        ASSERT_EQ(run({"dualize", fixture(name), "-o", path}).status, dvw::kExitVerified);
        std::ifstream in(path);
        const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        EXPECT_EQ(written, first.out);
        const auto check = run({"check-space", path});
        EXPECT_EQ(check.status, dvw::kExitVerified) << check.out;
    }
    // Λ is defined for any subordination algebra; the trivial table has one point.
    const auto c2 = run({"dualize", fixture("c2.alg")});
    EXPECT_EQ(c2.status, dvw::kExitVerified);
    EXPECT_TRUE(has(c2.out, "points: F1\n"));
    fs::remove_all(dir);
}

TEST(Cli, SpaceVerbs) {
    EXPECT_EQ(run({"check-space", fixture("s3.space")}).status, dvw::kExitVerified);
    const auto s = run({"--format", "kv", "check-space", fixture("sierpinski.space")});
    EXPECT_EQ(s.status, dvw::kExitRefuted);
    EXPECT_TRUE(has(s.out, "fail"));
    EXPECT_EQ(run({"check-space", fixture("s3-subbasis.space"), "--generate"}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"roundtrip", fixture("b3.alg")}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"roundtrip", fixture("s3.space")}).status, dvw::kExitVerified);
}

TEST(Cli, MorphismVerbs) {
    EXPECT_EQ(run({"morphism", "check", fixture("b2-identity.mor")}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"morphism", "check", fixture("b2-collapse-p.mor")}).status, dvw::kExitVerified);
    const auto bad = run({"--format", "kv", "morphism", "check", fixture("b2-constant-one.mor")});
    EXPECT_EQ(bad.status, dvw::kExitRefuted);
    EXPECT_TRUE(has(bad.out, "h(0)=1"));
    EXPECT_EQ(run({"morphism", "check", fixture("s3-to-point.pmap")}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"morphism", "check", fixture("point-to-f1.pmap")}).status, dvw::kExitRefuted);
    EXPECT_EQ(run({"morphism", "star", fixture("b1-collapse.mor"), fixture("b2-collapse-p.mor")}).status,
              dvw::kExitVerified);
    EXPECT_EQ(run({"morphism", "star", fixture("b2-identity.mor"), fixture("b2-collapse-p.mor")}).status,
              dvw::kExitInputError);
    const auto dual = run({"morphism", "dualize", fixture("b2-collapse-p.mor")});
    EXPECT_EQ(dual.status, dvw::kExitVerified);
    EXPECT_TRUE(has(dual.out, "map: F1 Fq"));
}

TEST(Cli, FrameVerbs) {
    EXPECT_EQ(run({"frame", "check", fixture("bool4.frame")}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"frame", "check", fixture("chain3.frame")}).status, dvw::kExitRefuted);
    EXPECT_EQ(run({"frame", "check", fixture("m3.frame")}).status, dvw::kExitRefuted);
    EXPECT_EQ(run({"frame", "booleanize", fixture("bool4.frame")}).out, "atoms: a b\nprec: leq\n");
    EXPECT_EQ(run({"frame", "booleanize", fixture("chain3.frame")}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"frame", "ideals", fixture("b2.alg")}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"frame", "xi", fixture("bool4.frame")}).status, dvw::kExitVerified);
    const auto uv = run({"frame", "uv", fixture("bool4.frame")});
    EXPECT_TRUE(has(uv.out, "points: 0 a b\n"));
    EXPECT_EQ(run({"frame", "gur", fixture("bool8.frame")}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"frame", "gur", fixture("b3.alg")}).status, dvw::kExitVerified);
}

TEST(Cli, ProductVerb) {
    const auto r = run({"product", fixture("discrete2.space"), fixture("discrete2.space")});
    EXPECT_EQ(r.status, dvw::kExitVerified);
    EXPECT_TRUE(has(r.out, "15"));
    EXPECT_EQ(run({"product", fixture("s3.space")}).status, dvw::kExitInputError);
}

TEST(Cli, S2icVerbs) {
    EXPECT_EQ(run({"s2ic", "check", "--space", fixture("s3.space"), "(p => q) -> (p -> q)"}).status,
              dvw::kExitVerified);
    const auto invalid = run({"s2ic", "check", "--space", fixture("s3.space"), "p"});
    EXPECT_EQ(invalid.status, dvw::kExitRefuted);
    EXPECT_TRUE(has(invalid.out, "V(p)={}"));
    EXPECT_EQ(run({"s2ic", "check", "--space", fixture("sierpinski.space"), "p"}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"s2ic", "agree", "--algebra", fixture("b2.alg"), "p => p"}).status, dvw::kExitVerified);
    EXPECT_EQ(run({"s2ic", "agree", "--algebra", fixture("c2.alg"), "p => p"}).status, dvw::kExitInputError);
    EXPECT_EQ(run({"s2ic", "check", "--space", fixture("s3.space"), "--valuation", fixture("s3-pq.val"), "p => q"})
                  .status,
              dvw::kExitRefuted);
}

TEST(Cli, FixtureDirectoryFallback) {
    ::setenv("DVW_FIXTURES", DV_FIXTURES_DIR, 1);
    EXPECT_EQ(run({"check-algebra", "b2.alg"}).status, dvw::kExitVerified);
    ::unsetenv("DVW_FIXTURES");
}

#ifdef DVW_BINARY
int shell(const std::string& args) {
    const std::string cmd = std::string("\"") + DVW_BINARY + "\" " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(Cli, BinaryExitStatuses) {
    EXPECT_EQ(shell("check-algebra " + fixture("b2.alg")), 0);
    EXPECT_EQ(shell("check-algebra " + fixture("c2.alg")), 1);
    EXPECT_EQ(shell("check-algebra /nonexistent"), 2);
    EXPECT_EQ(shell("s2ic countermodel '(p -> p) -> (p => p)' --max-atoms 2 --class contact"), 1);
    EXPECT_EQ(shell("nonsense"), 2);
}
#endif

}  // namespace
