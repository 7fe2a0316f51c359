// Command-line front end: classification, sequence search, exact counting,
// and the verification suites.

#include "mpart/brute.hpp"
#include "mpart/census.hpp"
#include "mpart/derect.hpp"
#include "mpart/exceptions.hpp"
#include "mpart/graph.hpp"
#include "mpart/interp.hpp"
#include "mpart/matrix.hpp"
#include "mpart/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace mpart;

namespace {

int budget_bits_from_env() {
    const char* v = std::getenv("MPART_BUDGET_BITS");
    if (!v) return kDefaultBudgetBits;
    int bits = std::atoi(v);
    if (bits <= 0) throw std::runtime_error("MPART_BUDGET_BITS must be a positive integer");
    return bits;
}

SimpleGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

struct Check {
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (cond) {
            std::cout << "ok: " << what << "\n";
        } else {
            std::cout << "FAIL: " << what << "\n";
            ok = false;
        }
    }
};

// Named test graphs for the verification suites.
SimpleGraph named_graph(const std::string& name) {
    if (name == "K1") return complete_graph(1);
    if (name == "K2") return complete_graph(2);
    if (name == "K3") return complete_graph(3);
    if (name == "P3") return path_graph(3);
    if (name == "P4") return path_graph(4);
    if (name == "C4") return cycle_graph(4);
    if (name == "C6") return cycle_graph(6);
    if (name == "S3") return star_graph(3);
    throw std::runtime_error("unknown graph name: " + name);
}

int cmd_classify(const std::string& matrix_text, bool all, bool no_exceptions,
                 const std::string& format, int jobs) {
    if (all) {
        CensusOptions opts;
        opts.use_exceptions = !no_exceptions;
        opts.jobs = jobs;
        CensusResult res = run_census(opts);
        if (format == "json") {
            std::cout << census_to_json(res) << "\n";
        } else if (format == "csv") {
            std::cout << census_to_csv(res);
        } else {
            for (const CensusEntry& e : res.entries)
                std::cout << e.key << "  " << e.cls.describe() << "\n";
            std::cout << census_summary(res);
        }
        return 0;
    }
    PartitionMatrix m = parse_matrix(matrix_text);
    Classification cls;
    if (m.size() <= 3) {
        cls = small_matrix_classification(m);
    } else {
        cls = classify(m, build_exception_registry(), !no_exceptions);
    }
    std::cout << cls.describe() << "\n";
    if (!cls.hard_keys.empty()) {
        std::cout << "hard classes:";
        for (const auto& k : cls.hard_keys) std::cout << " " << k;
        std::cout << "\n";
    }
    return 0;
}

int cmd_derect(const std::string& matrix_text) {
    PartitionMatrix m = parse_matrix(matrix_text);
    auto w = has_derect_sequence(m);
    if (!w) {
        std::cout << "none\n";
        return 0;
    }
    std::cout << "sequence:";
    for (PartSet s : w->sequence) std::cout << " " << s.to_string();
    std::cout << "\nrelation: " << w->offending.to_string() << "\n";
    return 0;
}

int cmd_count(const std::string& matrix_text, const std::string& graph_path,
              const std::string& surjective) {
    PartitionMatrix m = parse_matrix(matrix_text);
    SimpleGraph g = load_graph(graph_path);
    int bits = budget_bits_from_env();
    if (surjective.empty()) {
        std::cout << brute_Z(m, g, bits) << "\n";
    } else {
        PartSet s = parse_part_set(surjective, m.size());
        std::cout << brute_Z_surjective(m, g, s, bits) << "\n";
    }
    return 0;
}

int verify_gadget_formula_cmd(const std::string& matrix_text, int limit) {
    int bits = budget_bits_from_env();
    Check c;
    std::vector<PartitionMatrix> ms;
    if (!matrix_text.empty()) {
        ms.push_back(parse_matrix(matrix_text));
    } else {
        std::vector<PartitionMatrix> reps = enumerate_canonical(4);
        size_t stride = limit > 0 && size_t(limit) < reps.size()
                            ? reps.size() / size_t(limit)
                            : 1;
        for (size_t i = 0; i < reps.size(); i += stride) ms.push_back(reps[i]);
    }
    for (const PartitionMatrix& m : ms)
        for (int tau = 0; tau <= 1; tau++)
            for (int k = m.size() + 1; k <= m.size() + 4; k++)
                if (!verify_gadget_formula(m, tau, k, std::max(bits, 16))) {
                    c.expect(false, "closed form for " + format_matrix_rows(m) +
                                        " tau=" + std::to_string(tau) +
                                        " k=" + std::to_string(k));
                }
    c.expect(c.ok, "closed form matches brute force on " +
                       std::to_string(ms.size()) + " matrices");
    return c.ok ? 0 : 1;
}

int verify_eq1_cmd(int seed) {
    int bits = budget_bits_from_env();
    Check c;
    const PartitionMatrix m = exception_matrix("hand-iii"); // impure with rich profiles
    c.expect(verify_eq1(m, false, false, 5, complete_graph(2), std::max(bits, 32)),
             "split-by-image identity, pi=0 tau=0 k=5 G=K2");
    c.expect(verify_eq1(m, false, false, 0, path_graph(3), bits),
             "split-by-image identity at k=0");
    std::mt19937 rng{uint32_t(seed)};
    bool random_ok = true;
    for (int trial = 0; trial < 20; trial++) {
        PartitionMatrix rm(4);
        for (int i = 0; i < 4; i++)
            for (int j = i; j < 4; j++)
                rm.set(i, j, Symbol(rng() % 3));
        SimpleGraph g(int(rng() % 5));
        for (int i = 0; i < g.n; i++)
            for (int j = i + 1; j < g.n; j++)
                if (rng() % 2) g.add_edge(i, j);
        bool pi = rng() % 2, tau = rng() % 2;
        int k = int(rng() % 7);
        if (!verify_eq1(rm, pi, tau, k, g, std::max(bits, 32))) random_ok = false;
    }
    c.expect(random_ok, "split-by-image identity on 20 random (M, G)");
    return c.ok ? 0 : 1;
}

int verify_interpolation_cmd(const std::string& matrix_text) {
    Check c;
    PartitionMatrix m =
        matrix_text.empty() ? parse_matrix("001*01111*") : parse_matrix(matrix_text);
    for (const char* name : {"K1", "K2", "P3", "K3", "C4"})
        c.expect(verify_interpolation_roundtrip(m, false, false, named_graph(name)),
                 std::string("round-trip recovers profile sums on ") + name);
    return c.ok ? 0 : 1;
}

int verify_lemma6_cmd() {
    int bits = budget_bits_from_env();
    Check c;
    for (const char* name : {"K2", "P3", "P4", "S3", "C6"})
        c.expect(verify_lemma6(named_graph(name), bits),
                 std::string("count equals twice the bipartite cliques on ") + name);
    return c.ok ? 0 : 1;
}

int verify_lemma7_cmd() {
    int bits = budget_bits_from_env();
    Check c;
    // brute-forced three-element-set gadget counts for the clique gadget
    const char* ids[] = {"lemma7-M1", "lemma7-M2", "lemma7-M3"};
    for (const char* id : ids) {
        PartitionMatrix m = exception_matrix(id);
        for (int k = 5; k <= 6; k++) {
            bool row_ok = true;
            for (uint16_t sbits = 1; sbits < 16; sbits++) {
                PartSet s(sbits);
                if (s.size() != 3) continue;
                Count expected = 0;
                bool is_acd = (sbits == 0b1101);
                bool is_abd = (sbits == 0b1011);
                if (is_acd) expected = f_count(1, 3, k);
                if (is_abd && std::string(id) == "lemma7-M3") expected = f_count(2, 3, k);
                if (brute_Z_surjective(m, build_gadget(true, k), s, std::max(bits, 16)) !=
                    expected)
                    row_ok = false;
            }
            c.expect(row_ok, std::string("clique-gadget table row for ") + id +
                                 " at k=" + std::to_string(k));
        }
    }
    // structure of the clique-attachment construction
    SimpleGraph g = path_graph(3);
    Bipartition bip = bipartition_of_connected(g);
    SimpleGraph gk = build_lemma7_Gk(g, bip, 3);
    bool clique_ok = true, join_ok = true;
    for (int i = g.n; i < gk.n; i++)
        for (int j = i + 1; j < gk.n; j++)
            if (!gk.adjacent(i, j)) clique_ok = false;
    for (int v = 0; v < g.n; v++)
        for (int w = g.n; w < gk.n; w++)
            if (gk.adjacent(v, w) != !bip.in_u(v)) join_ok = false;
    c.expect(clique_ok, "attached set forms a clique");
    c.expect(join_ok, "clique joined exactly to the V side");
    return c.ok ? 0 : 1;
}

int verify_hand3_cmd() {
    int bits = budget_bits_from_env();
    Check c;
    PartitionMatrix m = exception_matrix("hand-iii");
    // independent-set-gadget counts over two-element sets:
    // ab -> f_{0,2}, ac/ad/bd -> f_{1,2}, bc/cd -> 0
    for (int k = 5; k <= 7; k++) {
        bool row_ok = true;
        for (uint16_t sbits = 1; sbits < 16; sbits++) {
            PartSet s(sbits);
            if (s.size() != 2) continue;
            Count expected = 0;
            if (sbits == 0b0011) expected = f_count(0, 2, k);
            if (sbits == 0b0101 || sbits == 0b1001 || sbits == 0b1010)
                expected = f_count(1, 2, k);
            if (brute_Z_surjective(m, build_gadget(false, k), s, std::max(bits, 16)) !=
                expected)
                row_ok = false;
        }
        c.expect(row_ok, "independent-set-gadget table row at k=" + std::to_string(k));
    }
    // structure of the pinned construction
    SimpleGraph g = path_graph(3);
    Bipartition bip = bipartition_of_connected(g);
    int k = 4;
    SimpleGraph gk = build_hand3_Gk(g, bip, k);
    int n_u = 0, n_v = 0;
    for (int v = 0; v < g.n; v++) bip.in_u(v) ? n_u++ : n_v++;
    int xd = gk.n - 1;
    int deg_xd = 0;
    for (int v = 0; v < gk.n; v++)
        if (v != xd && gk.adjacent(xd, v)) deg_xd++;
    c.expect(deg_xd == n_v + k, "pin vertex degree is |V|+k");
    int uv_edges = 0;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (bip.in_u(u) != bip.in_u(v) && gk.adjacent(u, v)) uv_edges++;
    c.expect(uv_edges == n_u * n_v - g.edge_count(), "U-V edges are complemented");
    bool w_indep = true;
    for (int i = g.n; i < g.n + k; i++)
        for (int j = i + 1; j < g.n + k; j++)
            if (gk.adjacent(i, j)) w_indep = false;
    c.expect(w_indep, "attached set is independent");
    (void)bits;
    return c.ok ? 0 : 1;
}

int verify_hand4_cmd() {
    int bits = budget_bits_from_env();
    Check c;
    for (const char* name : {"K1", "K2", "P3"}) {
        Hand4Result r = verify_hand4_system(named_graph(name), std::max(bits, 24));
        c.expect(r.ok, std::string("two-equation system on ") + name);
        if (std::string(name) == "K2")
            c.expect(r.solved_ad == 3, "recovered independent-set count of K2");
    }
    return c.ok ? 0 : 1;
}

int verify_dichotomy_cmd(int jobs) {
    CensusOptions opts;
    opts.jobs = jobs;
    CensusResult res = run_census(opts);
    CrossCheckResult cc = cross_check_dichotomy(res);
    std::cout << census_summary(res);
    if (cc.ok) {
        std::cout << "cross-check: ok\n";
        return 0;
    }
    for (const auto& f : cc.failures) std::cout << "FAIL: " << f << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification and verification for symmetric {0,1,*} "
                 "partition-counting matrices"};
    app.require_subcommand(1);

    std::string matrix_text, graph_path, surjective, format = "text", what;
    bool all = false, no_exceptions = false;
    int jobs = 1, seed = 1, limit = 600;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a matrix or the full census");
    classify_cmd->add_option("--matrix", matrix_text, "matrix, row format (0*/**) or 10-char word");
    classify_cmd->add_flag("--all", all, "classify every canonical 4x4 matrix");
    classify_cmd->add_flag("--no-exceptions", no_exceptions, "disable the hand-resolved registry");
    classify_cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    classify_cmd->add_option("--jobs", jobs, "census worker threads");

    auto* derect_cmd = app.add_subcommand("derect", "Search for a derectangularising sequence");
    derect_cmd->add_option("--matrix", matrix_text)->required();

    auto* count_cmd = app.add_subcommand("count", "Exact partition count of a graph");
    count_cmd->add_option("--matrix", matrix_text)->required();
    count_cmd->add_option("--graph", graph_path, "edge-list file: 'n m' then 'u v' lines")->required();
    count_cmd->add_option("--surjective", surjective, "restrict to partitions with this exact image, e.g. ab");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd
        ->add_option("what", what,
                     "gadget-formula|eq1|interpolation|lemma6|lemma7|hand3|hand4|dichotomy")
        ->required()
        ->check(CLI::IsMember({"gadget-formula", "eq1", "interpolation", "lemma6",
                               "lemma7", "hand3", "hand4", "dichotomy"}));
    verify_cmd->add_option("--matrix", matrix_text);
    verify_cmd->add_option("--limit", limit, "matrix sample size for gadget-formula");
    verify_cmd->add_option("--seed", seed, "seed for randomized sweeps");
    verify_cmd->add_option("--jobs", jobs, "census worker threads (dichotomy)");
    verify_cmd->add_flag("--all", all, "run the census-wide check (dichotomy)");

    auto* report_cmd = app.add_subcommand("census-report", "Full census report");
    report_cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    report_cmd->add_flag("--no-exceptions", no_exceptions);
    report_cmd->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) {
            if (!all && matrix_text.empty()) {
                std::cerr << "classify: need --matrix or --all\n";
                return 2;
            }
            return cmd_classify(matrix_text, all, no_exceptions, format, jobs);
        }
        if (derect_cmd->parsed()) return cmd_derect(matrix_text);
        if (count_cmd->parsed()) return cmd_count(matrix_text, graph_path, surjective);
        if (verify_cmd->parsed()) {
            if (what == "gadget-formula") return verify_gadget_formula_cmd(matrix_text, limit);
            if (what == "eq1") return verify_eq1_cmd(seed);
            if (what == "interpolation") return verify_interpolation_cmd(matrix_text);
            if (what == "lemma6") return verify_lemma6_cmd();
            if (what == "lemma7") return verify_lemma7_cmd();
            if (what == "hand3") return verify_hand3_cmd();
            if (what == "hand4") return verify_hand4_cmd();
            if (what == "dichotomy") return verify_dichotomy_cmd(jobs);
        }
        if (report_cmd->parsed())
            return cmd_classify("", true, no_exceptions, format, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
