#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicbase/analysis.hpp"
#include "cubicbase/canon.hpp"
#include "cubicbase/constructions.hpp"
#include "cubicbase/graph6.hpp"
#include "cubicbase/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cubicbase;

namespace {

struct Caps {
    int base = 4200;
    int aut = 4096;
    int star = 50000;
};

Caps parse_caps(const std::string& spec) {
    Caps caps;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--caps", "expected key=value");
        const std::string key = item.substr(0, eq);
        const int value = std::stoi(item.substr(eq + 1));
        if (value <= 0) throw CLI::ValidationError("--caps", "caps must be positive");
        if (key == "base")
            caps.base = value;
        else if (key == "aut")
            caps.aut = value;
        else if (key == "star")
            caps.star = value;
        else
            throw CLI::ValidationError("--caps", "unknown cap: " + key);
    }
    return caps;
}

std::uint64_t env_seed() {
    const char* s = std::getenv("CUBICBASE_SEED");
    if (!s) return 12345;
    return std::strtoull(s, nullptr, 10);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw error("cannot open output file: " + path);
    return file;
}

Graph build_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw error("malformed spec: " + spec);
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    auto two_ints = [&]() {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw error("malformed spec: " + spec);
        return std::pair{std::stoi(args.substr(0, comma)),
                         std::stoi(args.substr(comma + 1))};
    };
    if (kind == "px") {
        auto [r, s] = two_ints();
        return px_graph(r, s);
    }
    if (kind == "spx") {
        auto [r, s] = two_ints();
        return spx_graph(r, s);
    }
    if (kind == "ladder") return circular_ladder(std::stoi(args));
    if (kind == "moebius") return moebius_ladder(std::stoi(args));
    if (kind == "table1") return table1_graph(args);
    throw error("malformed spec: " + spec);
}

int cmd_construct(const std::string& spec, const std::string& output) {
    Graph g = build_spec(spec);
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    out << to_sparse6(g) << "\n";
    return 0;
}

struct LineResult {
    json record;
    bool internal_error = false;
};

LineResult classify_line(const std::string& line, std::size_t lineno, const Caps& caps) {
    LineResult res;
    res.record["line"] = lineno;
    Graph g = Graph::from_edges(1, {});
    try {
        g = from_graph6_line(line);
    } catch (const error& e) {
        res.record["status"] = "error";
        res.record["reason"] =
            "line " + std::to_string(lineno) + ": " + e.what();
        res.internal_error = true;
        return res;
    }
    res.record["vertices"] = g.num_vertices();
    if (!g.is_regular(3)) {
        res.record["status"] = "skipped";
        res.record["reason"] = "not cubic";
        return res;
    }
    if (!is_connected(g)) {
        res.record["status"] = "skipped";
        res.record["reason"] = "not connected";
        return res;
    }
    if (g.num_vertices() > caps.aut) {
        res.record["status"] = "skipped";
        res.record["reason"] = "exceeds aut cap";
        return res;
    }
    PermGroup aut = automorphism_group(g, caps.aut);
    if (!aut.is_transitive()) {
        res.record["status"] = "skipped";
        res.record["reason"] = "not vertex-transitive";
        return res;
    }
    try {
        ClassificationReport rep = classify(g);
        res.record["status"] = "ok";
        switch (rep.verdict) {
            case Verdict::Exceptional:
                res.record["verdict"] = "exceptional";
                res.record["name"] = rep.exceptional_name;
                break;
            case Verdict::SplitPX:
                res.record["verdict"] = "split-px";
                res.record["r"] = rep.r;
                res.record["s"] = rep.s;
                break;
            case Verdict::BaseSizeAtMost2:
                res.record["verdict"] = "base-at-most-2";
                // re-validate the witness before reporting it
                if (!aut.pointwise_stabiliser(rep.base_witness).is_trivial())
                    throw error("witness failed re-validation");
                res.record["witness"] = rep.base_witness;
                break;
        }
        res.record["base_size"] = rep.base_size;
        res.record["aut_order"] = rep.aut_order.str();
    } catch (const error& e) {
        res.record["status"] = "error";
        res.record["reason"] = e.what();
        res.internal_error = true;
    }
    return res;
}

void print_record(std::ostream& out, const json& rec, const std::string& format) {
    if (format == "json") {
        out << rec.dump() << "\n";
        return;
    }
    if (format == "csv") {
        auto field = [&](const char* key) {
            return rec.contains(key) ? rec[key].dump() : std::string();
        };
        out << field("line") << "," << field("status") << "," << field("verdict")
            << "," << field("name") << "," << field("r") << "," << field("s")
            << "," << field("base_size") << "," << field("aut_order") << ","
            << field("reason") << "\n";
        return;
    }
    out << "line " << rec["line"] << ": " << rec["status"].get<std::string>();
    if (rec.contains("verdict")) out << " " << rec["verdict"].get<std::string>();
    if (rec.contains("name")) out << " " << rec["name"].get<std::string>();
    if (rec.contains("r")) out << " (" << rec["r"] << "," << rec["s"] << ")";
    if (rec.contains("reason")) out << " (" << rec["reason"].get<std::string>() << ")";
    out << "\n";
}

int cmd_classify(const std::string& input, const Caps& caps, const std::string& format,
                 int jobs, const std::string& output) {
    std::ifstream in(input);
    if (!in) throw error("cannot read input file: " + input);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);

    std::vector<LineResult> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            results[i] = classify_line(lines[i], i + 1, caps);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ofstream file;
    std::ostream& out = open_output(output, file);
    bool failed = false;
    if (format == "csv")
        out << "line,status,verdict,name,r,s,base_size,aut_order,reason\n";
    for (const LineResult& r : results) {
        print_record(out, r.record, format);
        failed |= r.internal_error;
    }
    return failed ? 1 : 0;
}

int cmd_verify(const std::string& suite, const std::string& format,
               const std::string& output) {
    SuiteResult res = run_suite(suite, env_seed());
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    if (format == "json") {
        json j;
        j["suite"] = res.suite;
        j["pass"] = res.pass();
        j["checks"] = json::array();
        for (const Check& c : res.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"expected", c.expected},
                                   {"computed", c.computed},
                                   {"pass", c.pass}});
        out << j.dump(2) << "\n";
    } else {
        for (const Check& c : res.checks)
            out << (c.pass ? "ok   " : "FAIL ") << c.name << ": expected "
                << c.expected << ", computed " << c.computed << "\n";
        out << (res.pass() ? "PASS" : "FAIL") << " " << res.suite << " ("
            << res.checks.size() << " checks)\n";
    }
    return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic vertex-transitive graph analysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string caps_spec, format = "json", output;
    int jobs = 1;
    app.add_option("--caps", caps_spec, "search limits, e.g. base=200,aut=2000,star=50000");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--output", output, "output path (default stdout)");

    std::string spec, input, suite;
    auto* construct = app.add_subcommand("construct", "build a graph and write it");
    construct->add_option("spec", spec, "px:R,S | spx:R,S | ladder:N | moebius:N | table1:NAME")
        ->required();
    auto* classify_cmd = app.add_subcommand("classify", "classify graphs from a census file");
    classify_cmd->add_option("input", input, "graph6/sparse6 file, one graph per line")
        ->required();
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));

    CLI11_PARSE(app, argc, argv);

    try {
        const Caps caps = caps_spec.empty() ? Caps{} : parse_caps(caps_spec);
        if (construct->parsed()) return cmd_construct(spec, output);
        if (classify_cmd->parsed())
            return cmd_classify(input, caps, format, jobs, output);
        return cmd_verify(suite, format, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
