#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "treeconn/cli.hpp"
#include "treeconn/generators.hpp"
#include "treeconn/json_out.hpp"

using namespace treeconn;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli_run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string petersen_text() {
    std::ostringstream s;
    write_graph_text(s, petersen());
    return s.str();
}

}  // namespace

TEST_CASE("omega and pack subcommands") {
    CliResult omega = run({"omega", "--m", "2", "-"}, petersen_text());
    CHECK(omega.code == 0);
    CHECK(omega.out == "5\n");

    CliResult pack = run({"pack", "--m", "2", "--json", "-"}, petersen_text());
    CHECK(pack.code == 0);
    json j = json::parse(pack.out);
    CHECK(j["kind"] == "packing");
    CHECK(j["m"] == 2);
    CHECK(j["schema"] == 1);
    size_t total = j["forests"][0].size() + j["forests"][1].size();
    CHECK(total == 15);
}

TEST_CASE("sparse exit codes") {
    CHECK(run({"sparse", "--m", "1", "-"}, "graph 3\ne 0 1\ne 1 2\n").code == 0);
    CliResult tri = run({"sparse", "--m", "1", "--json", "-"}, "graph 3\ne 0 1\ne 1 2\ne 0 2\n");
    CHECK(tri.code == 1);
    CHECK(json::parse(tri.out).contains("witness_S"));
}

TEST_CASE("factor subcommand") {
    std::string k4 = "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";
    CliResult ham = run({"factor", "--m", "1", "--f", "2", "--json", "-"}, k4);
    CHECK(ham.code == 0);
    json j = json::parse(ham.out);
    CHECK(j["factor"].size() == 3);
    CHECK(j["te"] == 0);
    CHECK(j["bound_violations"].empty());

    // not 2-tree-connected: certificate, exit 1
    CliResult pet = run({"factor", "--m", "2", "--f", "2", "--json", "-"}, petersen_text());
    CHECK(pet.code == 1);
    CHECK(json::parse(pet.out)["kind"] == "partition");

    // derived-bound regime
    CliResult reg = run({"factor", "--m", "1", "--k", "2", "--u", "0", "--json", "-"},
                        "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    CHECK(reg.code == 0);
}

TEST_CASE("trail and walk subcommands") {
    CliResult pet = run({"trail", "--f", "1", "-"}, petersen_text());
    CHECK(pet.code == 1);

    std::string k5 = "graph 5\n";
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5 += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
    CliResult ham = run({"trail", "--f", "1", "--json", "-"}, k5);
    CHECK(ham.code == 0);
    json j = json::parse(ham.out);
    CHECK(j["kind"] == "trail");
    CHECK(j["edges"].size() == 5);
    CHECK(j["visits"]["0"] == 1);

    CliResult wk = run({"walk", "--f", "2", "--k", "2", "--json", "-"},
                       "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    CHECK(wk.code == 0);
    CHECK(json::parse(wk.out)["kind"] == "walk");

    CliResult tf = run({"trail", "--factor-24", "--json", "-"}, k5);
    CHECK(tf.code == 0);

    // usage errors
    CHECK(run({"trail", "-"}, k5).code == 2);
    CHECK(run({"trail", "--k", "2", "-"}, k5).code == 2);
}

TEST_CASE("verify subcommand") {
    std::string k5 = "graph 5\n";
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5 += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
    CliResult holds = run({"verify", "--variant", "thm4.3", "--m", "1", "--f", "2", "--json", "-"}, k5);
    CHECK(holds.code == 0);
    json j = json::parse(holds.out);
    CHECK(j["holds"] == true);
    CHECK(j["condition"] == "thm4.3");
    CHECK(j["enumerated"] == 32);

    CliResult fails =
        run({"verify", "--variant", "thm7.1", "--m", "2", "--f", "2", "--json", "-"}, petersen_text());
    CHECK(fails.code == 1);
    CHECK(json::parse(fails.out).contains("witness_S"));

    CliResult t63 = run({"verify", "--variant", "thm6.3", "--m", "2", "--eps", "1", "--c", "1",
                         "--json", "-"},
                        petersen_text());
    CHECK(t63.code == 1);  // hypothesis fails on the Petersen graph

    CHECK(run({"verify", "--variant", "nope", "-"}, k5).code == 2);
}

TEST_CASE("toughness subcommand") {
    CliResult t = run({"toughness", "-"}, petersen_text());
    CHECK(t.code == 0);
    CHECK(t.out == "4/3\n");
    CliResult strong = run({"toughness", "--m", "2", "--json", "-"},
                           "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(strong.code == 0);
    CHECK(json::parse(strong.out)["toughness"] == "2/3");
}

TEST_CASE("generate round-trips id-identically") {
    for (auto family : {std::vector<std::string>{"generate", "--family", "petersen"},
                        std::vector<std::string>{"generate", "--family", "petersen-chain", "--n", "2"},
                        std::vector<std::string>{"generate", "--family", "circulant", "--n", "9",
                                                 "--m", "2"}}) {
        CliResult gen = run(family);
        REQUIRE(gen.code == 0);
        std::istringstream in(gen.out);
        Multigraph g = read_graph_text(in);
        std::ostringstream again;
        write_graph_text(again, g);
        // writer output minus the comment header matches
        std::string no_comment = gen.out.substr(gen.out.find("graph"));
        CHECK(again.str() == no_comment);
    }
}

TEST_CASE("scan subcommand flags the candidate") {
    CliResult rows = run({"scan", "--conjecture", "7.11", "--json", "-"},
                         petersen_text() + "\ngraph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    CHECK(rows.code == 1);  // the Petersen row is a counterexample candidate
    std::istringstream lines(rows.out);
    std::string line;
    std::getline(lines, line);
    CHECK(json::parse(line)["counterexample_candidate"] == true);
    std::getline(lines, line);
    CHECK(json::parse(line)["counterexample_candidate"] == false);

    CliResult q = run({"scan", "--conjecture", "7.14", "--json", "-"}, petersen_text());
    CHECK(q.code == 0);
    CHECK(json::parse(q.out)["note"] == "density=5/3 epsilon=1/3");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"omega", "-"}, "garbage").code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"omega", "--m", "1", "/nonexistent/file"}).code == 2);
}

TEST_CASE("trail regime at k = 4") {
    std::string c82 = "graph 8\n";
    for (int i = 0; i < 8; ++i) {
        c82 += "e " + std::to_string(i) + " " + std::to_string((i + 1) % 8) + "\n";
        c82 += "e " + std::to_string(i) + " " + std::to_string((i + 2) % 8) + "\n";
    }
    CliResult tr = run({"trail", "--k", "4", "--json", "-"}, c82);
    CHECK(tr.code == 0);
    CHECK(json::parse(tr.out)["kind"] == "trail");
}
