#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "hplanar/graph.hpp"
#include "hplanar/io.hpp"
#include "hplanar/matching.hpp"

using namespace hplanar;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HPLANAR_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::string out;
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "hplanar_cli_fixtures";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& content) {
    auto path = scratch() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

// Just enough of JSON Schema to pin the CLI reports down: type, enum,
// required, properties, items, and same-directory $ref.
bool conforms(const json& value, const json& schema, std::string* why);

bool conforms_type(const json& value, const std::string& type, std::string* why) {
    bool ok = (type == "object" && value.is_object()) || (type == "array" && value.is_array()) ||
              (type == "integer" && value.is_number_integer()) ||
              (type == "string" && value.is_string()) || (type == "boolean" && value.is_boolean());
    if (!ok && why) *why = "expected " + type + ", got " + value.dump();
    return ok;
}

bool conforms(const json& value, const json& schema, std::string* why) {
    if (schema.contains("$ref")) {
        std::ifstream in(std::filesystem::path(HPLANAR_SCHEMA_DIR) / schema["$ref"].get<std::string>());
        if (!in) {
            if (why) *why = "missing referenced schema " + schema["$ref"].get<std::string>();
            return false;
        }
        return conforms(value, json::parse(in), why);
    }
    if (schema.contains("enum")) {
        for (const json& opt : schema["enum"])
            if (value == opt) return true;
        if (why) *why = value.dump() + " not in enum " + schema["enum"].dump();
        return false;
    }
    if (schema.contains("type") && !conforms_type(value, schema["type"], why)) return false;
    if (schema.contains("required"))
        for (const json& key : schema["required"])
            if (!value.contains(key.get<std::string>())) {
                if (why) *why = "missing required key " + key.get<std::string>();
                return false;
            }
    if (schema.contains("properties"))
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !conforms(value.at(key), sub, why)) return false;
    if (schema.contains("items") && value.is_array())
        for (const json& item : value)
            if (!conforms(item, schema["items"], why)) return false;
    return true;
}

void check_schema(const std::string& output, const std::string& schema_name) {
    std::ifstream in(std::filesystem::path(HPLANAR_SCHEMA_DIR) / schema_name);
    REQUIRE(in.good());
    std::string why;
    bool ok = conforms(json::parse(output), json::parse(in), &why);
    INFO(schema_name << ": " << why);
    CHECK(ok);
}

std::string k5_file() {
    static std::string path = write_fixture("k5.txt", write_graph_text(complete_graph(5)));
    return path;
}

std::string k6_file() {
    static std::string path = write_fixture("k6.txt", write_graph_text(complete_graph(6)));
    return path;
}

std::string grid_file() {
    static std::string path = write_fixture("grid33.txt", write_graph_text(generate_grid(3, 3)));
    return path;
}

}  // namespace

TEST_CASE("generators round-trip and count matchings") {
    RunResult gen = run("gen grid --rows 2 --cols 4");
    REQUIRE(gen.code == 0);
    Graph g = parse_graph_text(gen.out);
    CHECK(g.num_vertices() == 8);
    CHECK(g.num_edges() == 10);
    std::string path = write_fixture("grid24.txt", gen.out);

    RunResult fkt = run("pmm fkt " + path);
    CHECK(fkt.code == 0);
    CHECK(fkt.out == "5\n");
    RunResult brute = run("pmm brute " + path);
    CHECK(brute.code == 0);
    CHECK(brute.out == "5\n");

    RunResult js = run("--output-format json pmm fkt " + path);
    CHECK(js.code == 0);
    check_schema(js.out, "pmm.schema.json");

    // identical invocations are byte-identical
    CHECK(run("gen wall --radius 3").out == run("gen wall --radius 3").out);
    RunResult wall_js = run("--output-format json gen wall --radius 3");
    CHECK(wall_js.code == 0);
    check_schema(wall_js.out, "gen.schema.json");

    // fkt refuses non-planar input, brute force refuses oversized input
    CHECK(run("pmm fkt " + k5_file()).code == 2);
    std::string big = write_fixture("edgeless20.txt", write_graph_text(Graph(20)));
    CHECK(run("pmm brute " + big).code == 3);
}

TEST_CASE("modulator checking and searching") {
    CHECK(run("check-modulator " + grid_file() + " --hclass planar").code == 0);
    RunResult bad = run("check-modulator " + k5_file() + " --hclass planar --x 0,1,2,3,4");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("torso") != std::string::npos);
    RunResult bad_js = run("--output-format json check-modulator " + k5_file() + " --hclass planar");
    CHECK(bad_js.code == 1);
    check_schema(bad_js.out, "modulator.schema.json");

    RunResult found = run("find-modulator brute " + k5_file() + " --hclass edgeless");
    CHECK(found.code == 0);
    CHECK(found.out.find("size 4") != std::string::npos);
    RunResult found_js = run("--output-format json find-modulator selfreduce " + k5_file() + " --hclass edgeless");
    CHECK(found_js.code == 0);
    check_schema(found_js.out, "modulator.schema.json");

    CHECK(run("find-modulator brute " + k6_file() + " --hclass edgeless").code == 1);
    CHECK(run("find-modulator brute " + k6_file() + " --hclass edgeless --ceiling 3").code == 3);

    // hplanar counting through a supplied modulator
    RunResult hp = run("pmm hplanar " + k5_file() + " --hclass all_graphs --hsize 1 --x 0,1,2,3");
    CHECK(hp.code == 0);
    CHECK(hp.out == format_rational(pmm_bruteforce(complete_graph(5))) + "\n");
    CHECK(run("pmm hplanar " + k5_file() + " --hclass edgeless --x 0").code == 2);
}

TEST_CASE("decomposition commands") {
    RunResult depth = run("ptd " + k6_file() + " --hclass edgeless --kmax 3");
    CHECK(depth.code == 0);
    CHECK(depth.out.find("depth 2") != std::string::npos);
    CHECK(run("ptd " + k6_file() + " --hclass edgeless --kmax 1").code == 1);
    RunResult depth_js = run("--output-format json ptd " + k6_file() + " --hclass edgeless --kmax 3");
    check_schema(depth_js.out, "ptd.schema.json");

    std::string decomp = write_fixture("grid33.decomp.json",
                                       R"({"bags": [[0,1,2,3,4,5,6,7,8]], "edges": [], "tags": ["planar"]})");
    CHECK(run("ptw-verify " + grid_file() + " " + decomp + " --k 0").code == 0);
    std::string wrong = write_fixture("grid33.wrong.json",
                                      R"({"bags": [[0,1,2,3,4,5,6,7,8]], "edges": [], "tags": ["small"]})");
    RunResult rejected = run("--output-format json ptw-verify " + grid_file() + " " + wrong + " --k 0");
    CHECK(rejected.code == 1);
    check_schema(rejected.out, "ptw-verify.schema.json");
    CHECK(run("ptw-verify " + grid_file() + " /nonexistent.json --k 0").code == 2);
}

TEST_CASE("approximation commands") {
    RunResult baker = run("--output-format json baker-is " + grid_file() + " --hclass bipartite --epsilon 1/2");
    CHECK(baker.code == 0);
    check_schema(baker.out, "baker.schema.json");
    CHECK(json::parse(baker.out)["size"].get<int>() >= 3);
    CHECK(run("baker-is " + grid_file() + " --hclass bipartite --epsilon 2").code == 2);

    RunResult flat = run("--output-format json color " + grid_file() + " --mode flat --hclass bipartite");
    CHECK(flat.code == 0);
    check_schema(flat.out, "color.schema.json");
    CHECK(json::parse(flat.out)["color_count"].get<int>() <= 4);

    RunResult layered =
        run("--output-format json color " + k6_file() + " --mode ptd --hclass edgeless --layers \"0,1,2,3;4,5\"");
    CHECK(layered.code == 0);
    CHECK(json::parse(layered.out)["color_count"].get<int>() >= 6);

    std::string decomp = write_fixture(
        "grid33.htd.json",
        R"({"x": [0,1,2,3,4,5,6,7,8], "bags": [[0,1,2,3,4,5,6,7,8]], "edges": [], "tags": ["planar"]})");
    RunResult bagged = run("--output-format json color " + grid_file() +
                           " --mode ptw --hclass bipartite --decomp " + decomp + " --k 0");
    CHECK(bagged.code == 0);
    check_schema(bagged.out, "color.schema.json");
}

TEST_CASE("hardness generator") {
    RunResult gen = run("gen hardness --vars 1 --clauses 1 --seed 5");
    REQUIRE(gen.code == 0);
    CHECK(gen.out.find("p cnf 1 1") != std::string::npos);
    CHECK(gen.out == run("gen hardness --vars 1 --clauses 1 --seed 5").out);
    CHECK(gen.out != run("gen hardness --vars 1 --clauses 1 --seed 6").out);

    RunResult js = run("--output-format json gen hardness --vars 2 --clauses 1 --seed 7");
    REQUIRE(js.code == 0);
    check_schema(js.out, "gen.schema.json");
    json rep = json::parse(js.out);
    Graph g = graph_from_json(rep["graph"]);
    int pads = 0;
    for (const auto& cl : rep["cnf"]["clauses"]) pads += int(cl.size());
    CHECK(g.num_vertices() == 5 * 2 + 3 + pads);

    // the seed is mandatory
    CHECK(run("gen hardness --vars 1 --clauses 1").code == 2);

    // split outputs
    auto cnf_path = (scratch() / "gen.cnf").string();
    auto graph_path = (scratch() / "gen.graph").string();
    RunResult split = run("gen hardness --vars 1 --clauses 1 --seed 5 --cnf-out " + cnf_path +
                          " --graph-out " + graph_path);
    CHECK(split.code == 0);
    CHECK(split.out.empty());
    std::ifstream cnf_in(cnf_path);
    std::string first;
    std::getline(cnf_in, first);
    CHECK(first.rfind("p cnf", 0) == 0);
    CHECK(load_graph_file(graph_path).num_vertices() == 10);
}

TEST_CASE("unbreakability, minors, and error reporting") {
    CHECK(run("unbreakable " + k5_file() + " --s 2 --c 1").code == 0);
    std::string p8 = write_fixture("p8.txt", write_graph_text(path_graph(8)));
    RunResult broken = run("--output-format json unbreakable " + p8 + " --s 2 --c 1");
    CHECK(broken.code == 1);
    check_schema(broken.out, "unbreakable.schema.json");

    std::string k4 = write_fixture("k4.txt", write_graph_text(complete_graph(4)));
    RunResult has = run("--output-format json minor " + grid_file() + " " + k4);
    CHECK(has.code == 0);
    check_schema(has.out, "minor.schema.json");
    CHECK(run("minor " + grid_file() + " " + k5_file()).code == 1);

    CHECK(run("check-modulator /nonexistent.txt --hclass planar").code == 2);
    CHECK(run("check-modulator " + k5_file() + " --hclass no_such_class").code == 2);
    CHECK(run("check-modulator " + k5_file() + " --hclass planar --x 9").code == 2);
    CHECK(run("--no-such-flag gen grid").code == 2);
    CHECK(run("").code == 2);  // a subcommand is required
}
