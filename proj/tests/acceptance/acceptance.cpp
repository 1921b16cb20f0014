// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "freeness/bounds.hpp"
#include "freeness/cycles.hpp"
#include "freeness/embedding.hpp"
#include "freeness/io.hpp"
#include "freeness/minor.hpp"
#include "freeness/named.hpp"
#include "freeness/report_json.hpp"
#include "freeness/small_graph.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

using namespace freeness;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 20) failures.push_back(what);
        if (!ok) ++violations;
    }
    std::size_t violations = 0;
};

int failed = 0;

struct Part {
    std::string id, title;
    double secs = 0;
    bool ok = false;
    std::vector<std::string> failures;
};
std::vector<Part> pending;

void part(const char* id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < limit_s, "runtime " + std::to_string(secs) + " s over the " + std::to_string(limit_s) + " s limit");
    pending.push_back({id, title, secs, c.violations == 0, c.failures});
}

// One line per criterion; parts of multi-part criteria follow, indented.
void criterion(const char* id, const char* title, double limit_s) {
    double secs = 0;
    bool ok = true;
    for (const auto& p : pending) {
        secs += p.secs;
        ok = ok && p.ok;
    }
    const bool in_time = secs < limit_s;
    ok = ok && in_time;
    failed += !ok;
    std::printf("%s %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
    if (!in_time) std::printf("       total runtime over the %.0f s limit\n", limit_s);
    for (const auto& p : pending) {
        if (pending.size() > 1) std::printf("       %s %s: %s (%.2f s)\n", p.ok ? "ok  " : "FAIL", p.id.c_str(), p.title.c_str(), p.secs);
        for (const auto& f : p.failures) std::printf("         %s\n", f.c_str());
    }
    pending.clear();
    std::fflush(stdout);
}

void single(const char* id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
    part(id, title, limit_s, body);
    criterion(id, title, limit_s);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    std::string cmd = std::string("'") + FREENESS_CLI + "' " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("cannot start " + cmd);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// The analyze document as printed by the CLI, with both certificates re-verified.
struct Analyzed {
    Graph graph;
    nlohmann::json doc;
    bool certificates_ok = false;
};

Analyzed analyze_named(const std::string& spec) {
    auto run = run_cli("analyze --named " + spec);
    if (run.code != 0) throw std::runtime_error("analyze exited with " + std::to_string(run.code) + ": " + run.out);
    Analyzed a{build_named(spec), nlohmann::json::parse(run.out)};
    a.certificates_ok = verify_bound(a.graph, bound_from_json(a.graph, a.doc["lower"])) &&
                        verify_bound(a.graph, bound_from_json(a.graph, a.doc["upper"]));
    return a;
}

int link_length(const nlohmann::json& doc) {
    if (doc["upper"]["rule"] != "U-Link") return -1;
    return doc["upper"]["certificate"]["pair"]["total_length"].get<int>();
}

void strong_implies_cdc(Check& c, const Graph& g, const RotationSystem& rot, const std::string& what) {
    auto faces = trace_faces(g, rot);
    if (!is_strong(g, faces)) return;
    c.expect(verify_cdc(g, cdc_from_faces(g, faces)), "strong rotation without a valid CDC: " + what);
}

}  // namespace

int main() {
    single("1", "K6: upper 8 via U-Link (L_min 6), lower 3 via R3-Ham", 5, [](Check& c) {
        auto a = analyze_named("complete:6");
        c.expect(a.doc["upper"]["value"] == 8, "upper " + a.doc["upper"]["value"].dump());
        c.expect(a.doc["upper"]["rule"] == "U-Link", "upper rule " + a.doc["upper"]["rule"].dump());
        c.expect(link_length(a.doc) == 6, "L_min " + std::to_string(link_length(a.doc)));
        c.expect(a.doc["lower"]["value"] == 3, "lower " + a.doc["lower"]["value"].dump());
        c.expect(a.doc["lower"]["rule"] == "R3-Ham", "lower rule " + a.doc["lower"]["rule"].dump());
        c.expect(a.certificates_ok, "certificates");
    });

    single("2", "Petersen: upper 4 via U-Link (L_min 10), lower 2 via R2-F2", 5, [](Check& c) {
        auto a = analyze_named("petersen");
        c.expect(a.doc["upper"]["value"] == 4, "upper " + a.doc["upper"]["value"].dump());
        c.expect(a.doc["upper"]["rule"] == "U-Link", "upper rule");
        c.expect(link_length(a.doc) == 10, "L_min " + std::to_string(link_length(a.doc)));
        c.expect(a.doc["lower"]["value"] == 2, "lower " + a.doc["lower"]["value"].dump());
        c.expect(a.doc["lower"]["rule"] == "R2-F2", "lower rule " + a.doc["lower"]["rule"].dump());
        if (a.doc["lower"]["rule"] == "R2-F2") {
            const auto& cycles = a.doc["lower"]["certificate"]["two_factor"]["cycles"];
            c.expect(cycles.size() == 2 && cycles[0]["edges"].size() == 5 && cycles[1]["edges"].size() == 5,
                     "2-factor is not two 5-cycles");
        }
        c.expect(a.certificates_ok, "certificates");
    });

    single("3", "class intervals: K6 starts at 7, Petersen at 11", 5, [](Check& c) {
        auto k6 = analyze_named("complete:6");
        auto pet = analyze_named("petersen");
        c.expect(k6.doc["class_interval"][0] == 7, "K6 class " + k6.doc["class_interval"].dump());
        c.expect(pet.doc["class_interval"][0] == 11, "Petersen class " + pet.doc["class_interval"].dump());
    });

    single("4", "linkless graphs: R-Full fires and index = |E|", 30, [](Check& c) {
        std::vector<std::pair<std::string, Graph>> graphs;
        for (const char* s : {"complete:5", "complete:4", "complete-bipartite:3,3"}) graphs.push_back({s, build_named(s)});
        for (int n = 3; n <= 64; ++n) graphs.push_back({"cycle:" + std::to_string(n), build_named("cycle:" + std::to_string(n))});
        ft::Rng rng(20240611);
        for (int i = 0; i < 20; ++i) {
            int n = 4 + 2 * static_cast<int>(rng() % 7);
            auto m = ft::random_planar_cubic(rng, n);
            c.expect(trace_faces(m.graph, m.rotation).genus == 0, "generated map is not planar");
            graphs.push_back({"planar cubic #" + std::to_string(i) + " (" + std::to_string(n) + " vertices)", m.graph});
        }
        for (const auto& [name, g] : graphs) {
            auto r = report(g);
            const int e = static_cast<int>(g.edge_count());
            c.expect(r.outcome(Rule::RFull).status == RuleStatus::Applied, name + ": R-Full did not fire");
            c.expect(r.lower.value == e && r.upper.value == e, name + ": index not exactly |E|");
            c.expect(r.class_low() == 0 && r.class_high() == 0, name + ": class not [0, 0]");
            c.expect(verify_bound(g, r.lower), name + ": certificate");
        }
    });

    single("5", "Petersen family: 7 pairwise non-isomorphic 15-edge graphs incl. Petersen", 10, [](Check& c) {
        const auto& fam = petersen_family();
        c.expect(fam.size() == 7, "size " + std::to_string(fam.size()));
        std::set<std::string> keys;
        bool has_petersen = false;
        auto pet_key = canonical_form(to_small(build_named("petersen"))).key();
        for (const auto& m : fam) {
            c.expect(m.graph.edge_count() == 15, m.name + " has " + std::to_string(m.graph.edge_count()) + " edges");
            auto key = canonical_form(to_small(m.graph)).key();
            keys.insert(key);
            has_petersen = has_petersen || key == pet_key;
        }
        c.expect(keys.size() == fam.size(), "isomorphic members");
        c.expect(has_petersen, "Petersen graph missing");
    });

    auto j5 = build_named("flower-snark:5");

    part("6a/b", "R2-F2 certificate and a strong embedding at genus 2", 60, [&j5](Check& c) {
        auto r = report(j5);
        const auto& f2 = r.outcome(Rule::R2F2);
        c.expect(f2.status == RuleStatus::Applied, "R2-F2 status " + std::string(to_string(f2.status)));
        c.expect(r.lower.rule() == Rule::R2F2 && verify_bound(j5, r.lower), "R2-F2 certificate");
        auto s = search_strong_embedding(j5, 2, 1 << 24);
        c.expect(s.found() && s.value->genus == 2, "strong search: " + std::string(to_string(s.status)));
        if (s.found()) {
            c.expect(is_strong(j5, s.value->rotation) && trace_faces(j5, s.value->rotation).genus == 2,
                     "rotation does not re-check");
            strong_implies_cdc(c, j5, s.value->rotation, "J5");
        }
    });

    part("6c", "no polyhedral embedding over all 2^20 rotations", 1800, [&j5](Check& c) {
        c.expect(rotation_space_size(j5) == (std::uint64_t{1} << 20), "rotation space size");
        auto p = search_polyhedral_embedding(j5, std::uint64_t{1} << 20);
        c.expect(p.status == SearchStatus::NotFound, "status " + std::string(to_string(p.status)));
        c.expect(p.nodes == (std::uint64_t{1} << 20), "visited " + std::to_string(p.nodes) + " rotations");
    });
    criterion("6", "flower snark J5", 1860);

    single("7", "J7: shipped rotation passes verify-embedding --strong at genus 3 and its faces form a CDC", 1, [](Check& c) {
        const std::string path = std::string(FREENESS_DATA_DIR) + "/j7_genus3.rot";
        const auto out = std::filesystem::temp_directory_path() / "freeness-acceptance-j7.json";
        auto run = run_cli("verify-embedding --named flower-snark:7 --rotation '" + path + "' --strong --json '" +
                           out.string() + "'");
        c.expect(run.code == 0, "verify-embedding exited with " + std::to_string(run.code));
        c.expect(run.out.find("strong: true") != std::string::npos && run.out.find("genus: 3") != std::string::npos,
                 "printed verdict: " + run.out.substr(0, 80));
        auto doc = nlohmann::json::parse(slurp(out.string()));
        std::filesystem::remove(out);
        c.expect(doc["strong"] == true, "not strong");
        c.expect(doc["genus"] == 3, "genus " + doc["genus"].dump());
        c.expect(doc["cdc"]["verified"] == true, "CDC reported invalid");

        auto j7 = build_named("flower-snark:7");
        auto faces = trace_faces(j7, parse_rotation(j7, slurp(path)));
        c.expect(faces.genus == 3 && is_strong(j7, faces), "library re-check");
        c.expect(is_strong(j7, faces) && verify_cdc(j7, cdc_from_faces(j7, faces)), "library CDC");
    });

    part("8a", "Euler integrality and dart coverage on 10^4 random rotations", 600, [](Check& c) {
        ft::Rng rng(8001);
        for (int i = 0; i < 10000; ++i) {
            int n = 4 + 2 * static_cast<int>(rng() % 7);
            auto g = ft::random_cubic(rng, n);
            auto rot = ft::random_rotation(rng, g);
            auto faces = trace_faces(g, rot);
            std::vector<int> seen(2 * g.edge_count(), 0);
            for (const auto& w : faces.walks)
                for (Dart d : w) ++seen[static_cast<std::size_t>(d)];
            bool covered = std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
            long chi = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                       static_cast<long>(faces.face_count());
            c.expect(covered, "dart coverage, sample " + std::to_string(i));
            c.expect(chi % 2 == 0 && chi <= 2 && chi == 2 - 2L * faces.genus, "Euler, sample " + std::to_string(i));
            c.expect(faces.face_count() == ft::oracle_faces(g, rot).size(), "face count, sample " + std::to_string(i));
            strong_implies_cdc(c, g, rot, "sample " + std::to_string(i));
        }
    });

    part("8b", "strong implies CDC on every strong rotation found by search", 600, [](Check& c) {
        for (int n = 4; n <= 12; n += 2)
            for (const auto& g : ft::cubic_catalog(n)) {
                auto s = search_strong_embedding(g, 100, 1 << 22);
                if (s.found()) strong_implies_cdc(c, g, s.value->rotation, "catalog graph");
                else c.expect(s.status == SearchStatus::NotFound, "catalog search ran out of budget");
            }
        for (const char* spec : {"petersen", "flower-snark:5", "flower-snark:7", "complete:5", "complete-bipartite:4,5"}) {
            auto g = build_named(spec);
            auto s = search_strong_embedding(g, 100, 50'000'000);
            c.expect(s.found(), std::string(spec) + ": strong search " + std::string(to_string(s.status)));
            if (s.found()) strong_implies_cdc(c, g, s.value->rotation, spec);
        }
    });

    part("8c", "two-factor / perfect-matching bijection on all cubic graphs up to 12 vertices", 600, [](Check& c) {
        const std::size_t expected[] = {1, 2, 5, 19, 85};
        for (int n = 4; n <= 12; n += 2) {
            const auto& cat = ft::cubic_catalog(n);
            c.expect(cat.size() == expected[(n - 4) / 2],
                     "catalog on " + std::to_string(n) + " vertices has " + std::to_string(cat.size()) + " graphs");
            for (const auto& g : cat) {
                auto pms = perfect_matchings(g, 1 << 20);
                auto tfs = two_factors(g, 1 << 20);
                std::set<std::vector<EdgeId>> comp, fac;
                for (const auto& m : pms) {
                    c.expect(is_perfect_matching(g, m), "invalid matching");
                    comp.insert(m.complement().ids());
                }
                for (const auto& f : tfs) {
                    c.expect(is_two_factor(g, f), "invalid 2-factor");
                    fac.insert(f.sorted_edges());
                }
                c.expect(pms.size() == ft::brute_perfect_matching_count(g), "matching count");
                c.expect(comp.size() == pms.size() && comp == fac, "bijection broken");
            }
        }
    });

    part("8d", "every Found minor model verifies independently", 600, [](Check& c) {
        const auto& fam = petersen_family();
        auto check_linkage = [&](const Graph& g) {
            auto r = is_intrinsically_linked(g, 20'000'000);
            if (r.status == Linkage::Linked)
                c.expect(r.model && verify_minor_model(g, fam[static_cast<std::size_t>(r.member)].graph, *r.model),
                         "linkage model");
        };
        for (const auto& g : ft::connected_graphs_up_to(8))
            if (g.edge_count() >= 15) check_linkage(g);
        ft::Rng rng(8004);
        for (int i = 0; i < 60; ++i) check_linkage(ft::random_connected_graph(rng, 9 + static_cast<int>(rng() % 4), 0.5));
        for (const char* s : {"complete:6", "complete:7", "petersen", "flower-snark:5", "complete-bipartite:4,4"})
            check_linkage(build_named(s));
        auto k5 = build_named("complete:5");
        auto k33 = build_named("complete-bipartite:3,3");
        for (const auto& g : ft::connected_graphs_up_to(7))
            for (const Graph* pattern : {&k5, &k33}) {
                auto m = has_minor(g, *pattern, 10'000'000);
                c.expect(m.status != SearchStatus::BudgetExhausted, "minor search ran out of budget");
                if (m.found()) c.expect(verify_minor_model(g, *pattern, *m.value), "minor model");
            }
    });

    part("8e", "oracle equivalence on all connected graphs up to 8 vertices", 600, [](Check& c) {
        auto graphs = ft::connected_graphs_up_to(8);
        std::size_t on8 = 0;
        for (const auto& g : graphs) {
            on8 += g.vertex_count() == 8;
            if (g.vertex_count() >= 3) {
                auto h = hamiltonian_cycle(g, 100'000'000);
                c.expect(h.status != SearchStatus::BudgetExhausted && h.found() == ft::brute_hamiltonian(g),
                         "hamiltonian_cycle " + encode_graph6(g));
                if (h.found()) c.expect(is_hamiltonian_cycle(g, *h.value), "invalid Hamiltonian cycle");
            }
            c.expect(girth(g) == ft::brute_girth(g), "girth " + encode_graph6(g));
            auto p = min_disjoint_cycle_pair(g);
            auto bp = ft::brute_min_disjoint_pair(g);
            c.expect(p.status != SearchStatus::BudgetExhausted && p.found() == bp.has_value() &&
                         (!bp || p.value->total_length == *bp),
                     "min_disjoint_cycle_pair " + encode_graph6(g));
            c.expect(bridges(g).ids() == ft::brute_bridges(g), "bridges " + encode_graph6(g));
        }
        c.expect(on8 == 11117, "connected graphs on 8 vertices: " + std::to_string(on8));
    });
    criterion("8", "property suites, zero violations", 600);

    std::printf("%s\n", failed == 0 ? "ALL PASS" : (std::to_string(failed) + " FAILED").c_str());
    return failed == 0 ? 0 : 1;
}
