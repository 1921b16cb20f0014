// freeness: certified bounds on the freeness index of a graph.

#include "freeness/bounds.hpp"
#include "freeness/embedding.hpp"
#include "freeness/io.hpp"
#include "freeness/named.hpp"
#include "freeness/report_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace freeness;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string named;
    std::string file;

    Graph load() const {
        if (named.empty() == file.empty()) throw InputError("give exactly one of --named or a graph file");
        return named.empty() ? read_graph_file(file) : build_named(named);
    }
    std::string echo() const { return named.empty() ? file : "named:" + named; }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Budgets make_budgets(std::uint64_t nodes, std::optional<int> max_genus) {
    Budgets b;
    b.nodes = nodes;
    if (max_genus) b.max_genus = *max_genus;
    return b;
}

std::string interval(int lo, int hi) {
    return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

json analyze_json(const Graph& g, const Budgets& budgets, const std::string& input, BoundReport* keep = nullptr) {
    auto start = std::chrono::steady_clock::now();
    auto rep = report(g, budgets);
    std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    json j = to_json(g, rep, {input, elapsed.count()});
    if (rep.summary.cubic && rep.summary.bridgeless) j["conjecture_scan"] = to_json(g, conjecture_verdict(rep));
    if (keep) *keep = std::move(rep);
    return j;
}

int cmd_analyze(const GraphSource& src, const Budgets& budgets, const std::string& json_path) {
    Graph g = src.load();
    BoundReport rep;
    json j = analyze_json(g, budgets, src.echo(), &rep);
    if (json_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    write_output(json_path, j.dump(2) + "\n");
    std::cout << "index " << interval(rep.lower.value, rep.upper.value) << "  (lower " << to_string(rep.lower.rule())
              << ", upper " << to_string(rep.upper.rule()) << ")\n"
              << "class " << interval(rep.class_low(), rep.class_high()) << '\n';
    return kExitOk;
}

int cmd_verify(const GraphSource& src, const std::string& rotation_path, bool strong, bool polyhedral,
               const std::string& json_path) {
    Graph g = src.load();
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    if (polyhedral && !is_cubic(g)) throw PreconditionError("polyhedral check needs a cubic graph");
    RotationSystem rot = parse_rotation(g, read_text(rotation_path));
    FaceSet faces = trace_faces(g, rot);

    json j = {{"genus", faces.genus}, {"faces", faces.face_count()}};
    bool face_strong = is_strong(g, faces);
    if (strong) j["strong"] = face_strong;
    if (polyhedral) j["polyhedral"] = is_polyhedral(g, faces);
    if (face_strong) {
        auto cdc = cdc_from_faces(g, faces);
        json cycles = json::array();
        for (const auto& c : cdc.cycles) cycles.push_back(c.edges);
        j["cdc"] = {{"verified", verify_cdc(g, cdc)}, {"cycles", cycles}};
    }

    if (!json_path.empty()) {
        write_output(json_path, j.dump(2) + "\n");
    }
    if (strong) std::cout << "strong: " << (j["strong"].get<bool>() ? "true" : "false") << '\n';
    if (polyhedral) std::cout << "polyhedral: " << (j["polyhedral"].get<bool>() ? "true" : "false") << '\n';
    std::cout << "genus: " << faces.genus << '\n' << "faces: " << faces.face_count() << '\n';
    if (face_strong) {
        std::cout << "cycle double cover (" << (j["cdc"]["verified"].get<bool>() ? "verified" : "INVALID") << "):\n";
        for (const auto& c : j["cdc"]["cycles"]) {
            std::cout << " ";
            for (const auto& e : c) std::cout << ' ' << e.get<int>();
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int cmd_batch(const std::string& path, const Budgets& budgets, const std::string& json_path, unsigned jobs) {
    std::vector<std::pair<int, std::string>> lines;
    {
        std::istringstream in(read_text(path));
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            lines.emplace_back(no, line);
        }
    }

    std::vector<json> records(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            const auto& [no, word] = lines[i];
            json rec;
            try {
                Graph g = parse_graph6(word);
                rec = analyze_json(g, budgets, word);
            } catch (const PreconditionError& e) {
                rec = {{"error", e.what()}, {"kind", "precondition"}};
            } catch (const std::exception& e) {
                rec = {{"error", e.what()}, {"kind", "input"}};
            }
            rec["line"] = no;
            records[i] = std::move(rec);
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string out;
    json hits = json::object();
    json lower_wins = json::object();
    std::vector<int> flagged;
    std::size_t errors = 0, determined = 0, undetermined = 0;
    for (auto& rec : records) {
        if (rec.contains("error")) {
            ++errors;
        } else {
            for (const auto& r : rec["rules"])
                if (r["status"] == "applied") hits[r["rule"].get<std::string>()] = hits.value(r["rule"].get<std::string>(), 0) + 1;
            auto win = rec["lower"]["rule"].get<std::string>();
            lower_wins[win] = lower_wins.value(win, 0) + 1;
            if (rec["determined"].get<bool>()) ++determined;
            if (rec.contains("conjecture_scan")) {
                auto v = rec["conjecture_scan"]["verdict"];
                if (v == "flag") flagged.push_back(rec["line"].get<int>());
                if (v == "undetermined") ++undetermined;
            }
        }
        out += rec.dump() + '\n';
    }
    write_output(json_path, out);

    json summary = {{"graphs", records.size() - errors},
                    {"errors", errors},
                    {"determined", determined},
                    {"rule_hits", hits},
                    {"lower_bound_rules", lower_wins},
                    {"conjecture_flags", flagged},
                    {"conjecture_undetermined", undetermined}};
    (json_path.empty() || json_path == "-" ? std::cerr : std::cout) << summary.dump(2) << '\n';
    return kExitOk;
}

int cmd_named(bool list, const std::string& spec) {
    if (list || spec.empty()) {
        for (const auto& f : named_catalog()) std::cout << f.syntax << "\t" << f.description << '\n';
        return kExitOk;
    }
    std::cout << format_edge_list(build_named(spec));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified bounds on the freeness index of a graph"};
    app.require_subcommand(1);

    std::uint64_t budget_nodes = Budgets{}.nodes;
    std::optional<int> max_genus;
    std::string json_path;
    GraphSource src;

    auto add_budgets = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "node budget for each search")->check(CLI::PositiveNumber);
        cmd->add_option("--max-genus", max_genus, "genus cap for the strong-embedding search")->check(CLI::NonNegativeNumber);
    };
    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--named", src.named, "named graph, e.g. petersen or flower-snark:5");
        cmd->add_option("graph", src.file, "graph file (edge list, or graph6 with a .g6 extension)");
    };

    auto* analyze = app.add_subcommand("analyze", "bound the freeness index of one graph");
    add_graph(analyze);
    add_budgets(analyze);
    analyze->add_option("--json", json_path, "write the JSON report here instead of stdout");

    std::string rotation_path;
    bool strong = false, polyhedral = false;
    auto* verify = app.add_subcommand("verify-embedding", "check a rotation system");
    add_graph(verify);
    verify->add_option("--rotation", rotation_path, "rotation file")->required();
    verify->add_flag("--strong", strong, "check that the embedding is strong");
    verify->add_flag("--polyhedral", polyhedral, "check that the embedding is polyhedral");
    verify->add_option("--json", json_path, "also write a JSON verdict");

    std::string batch_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* batch = app.add_subcommand("batch", "analyze a file of graph6 lines");
    batch->add_option("input", batch_path, "graph6 file, one graph per line")->required();
    add_budgets(batch);
    batch->add_option("--json", json_path, "JSON-lines output path (default stdout)");
    batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    bool list = false;
    std::string named_spec;
    auto* named = app.add_subcommand("named", "list or print catalog graphs");
    named->add_flag("--list", list, "list the graph families");
    named->add_option("spec", named_spec, "print this graph as an edge list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        Budgets budgets = make_budgets(budget_nodes, max_genus);
        if (*analyze) return cmd_analyze(src, budgets, json_path);
        if (*verify) {
            if (!strong && !polyhedral) throw InputError("give --strong and/or --polyhedral");
            return cmd_verify(src, rotation_path, strong, polyhedral, json_path);
        }
        if (*batch) return cmd_batch(batch_path, budgets, json_path, jobs);
        if (*named) return cmd_named(list, named_spec);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
