#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace sqcolor::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const RunConfig& c) {
    std::ostringstream out, err;
    const int code = run_cli(c, out, err);
    return {code, out.str(), err.str()};
}

Run run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "sqcolor");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path scratch(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / ("sqcolor_test_" + name);
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("fixture runs") {
    const Run ok = run_args({"@petersen-minus-edge", "--uniform", "8", "--solver", "8", "--verify"});
    CHECK(ok.code == kOk);
    CHECK(lines(ok.out) == 10);
    CHECK(ok.err.find("verified") != std::string::npos);

    const Run pet = run_args({"@petersen", "--uniform", "8", "--solver", "8"});
    CHECK(pet.code == kPrecondition);
    CHECK(pet.err.find("PetersenInput") != std::string::npos);

    const Run unsat = run_args({"@figure1b", "--uniform", "7", "--solver", "oracle"});
    CHECK(unsat.code == kPrecondition);
    CHECK(unsat.err.find("no proper list coloring") != std::string::npos);

    const Run mad = run_args({"@petersen-minus-edge", "--uniform", "7", "--solver", "7"});
    CHECK(mad.code == kPrecondition);
    CHECK(mad.err.find("mad = 14/5") != std::string::npos);
}

TEST_CASE("auto selection") {
    RunConfig c;
    c.input = "@mcgee";
    c.uniform_k = 8;
    c.verify = true;
    const Run r = run(c);
    CHECK(r.code == kOk);
    CHECK(r.err.find("girth = 7") != std::string::npos);
    CHECK(r.err.find("solver 8") != std::string::npos);

    c.input = "@cycle9";
    c.uniform_k = 6;
    const Run six = run(c);
    CHECK(six.code == kOk);
    CHECK(six.err.find("solver 6") != std::string::npos);
}

TEST_CASE("random lists are reproducible") {
    RunConfig c;
    c.input = "@heawood";
    c.random_k = 8;
    c.seed = 17;
    c.solver = "8";
    const Run a = run(c), b = run(c);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
}

TEST_CASE("files and traces") {
    const auto graph = scratch("g.txt", "4 4\na b\nb c\nc d\nd a\n");
    const auto lists = scratch("l.txt", "a: 1 2 3 4 5 6 7\nb: 1 2 3 4 5 6 7\nc: 1 2 3 4 5 6 7\nd: 1 2 3 4 5 6 7\n");
    const auto trace = std::filesystem::temp_directory_path() / "sqcolor_test_trace.txt";
    RunConfig c;
    c.input = graph.string();
    c.lists_path = lists.string();
    c.solver = "7";
    c.trace_path = trace.string();
    const Run r = run(c);
    CHECK(r.code == kOk);
    CHECK(r.out.starts_with("a = "));
    std::ifstream in(trace);
    std::string first;
    std::getline(in, first);
    CHECK(first.starts_with("REMOVE "));

    const auto bad = scratch("bad.txt", "3 2\n0 1\n");
    c.input = bad.string();
    const Run e = run(c);
    CHECK(e.code == kBadInput);
    CHECK(e.err.find("line") != std::string::npos);
}

TEST_CASE("argument errors") {
    CHECK(run_args({"@k4"}).code == kBadInput);
    CHECK(run_args({"@k4", "--uniform", "8", "--random", "8", "1"}).code == kBadInput);
    CHECK(run_args({"@k4", "--uniform", "8", "--solver", "9"}).code == kBadInput);
    CHECK(run_args({"@nonesuch", "--uniform", "8"}).code == kBadInput);
}
