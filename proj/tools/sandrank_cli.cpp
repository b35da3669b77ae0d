#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "sandrank/acceptance.hpp"
#include "sandrank/complete_graph.hpp"
#include "sandrank/dyck.hpp"
#include "sandrank/genfun.hpp"
#include "sandrank/io.hpp"
#include "sandrank/rank.hpp"
#include "sandrank/sandpile.hpp"
#include "sandrank/strip.hpp"

using namespace sandrank;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph selection shared by the graph-based subcommands.
struct GraphArgs {
    std::string graph;
    int complete = 0;
    int wheel = 0;

    void attach(CLI::App* app) {
        app->add_option("--graph", graph, "graph as inline JSON or a JSON file: {\"n\":..,\"edges\":[[i,j,mult],..]}");
        app->add_option("--complete", complete, "use the complete graph K_n")->check(CLI::Range(1, 1000000));
        app->add_option("--wheel", wheel, "use the wheel with this many rim vertices (hub is the sink)")->check(CLI::Range(3, 10000));
    }
    int chosen() const { return !graph.empty() + (complete > 0) + (wheel > 0); }
    MultiGraph build() const {
        if (chosen() != 1) throw UsageError("give exactly one of --graph, --complete, --wheel");
        if (!graph.empty()) return graph_from_json(load_json(graph));
        if (complete > 0) {
            if (complete > 2000) throw std::invalid_argument("--complete above 2000 is only supported by the K_n rank methods");
            return MultiGraph::complete(complete);
        }
        return MultiGraph::wheel(wheel);
    }
};

Configuration read_config(const std::string& text) {
    if (text.empty()) throw UsageError("--config is required");
    return configuration_from_json(load_json(text));
}

void print(const Json& j) { std::cout << j.dump() << std::endl; }

Json word_stats(const BinaryWord& input) {
    BinaryWord dyck = input;
    if (!is_dyck(input)) {
        if (!is_Dn(input)) throw std::invalid_argument("word " + input.str() + " is neither a Dyck word nor in D_n");
        dyck = Dn_to_dyck(input);
    }
    const BinaryWord dn = dyck_to_Dn(dyck);
    return {{"word", dyck.str()},
            {"heights", heights(dyck)},
            {"coheights", coheights(dyck)},
            {"area", area(dyck)},
            {"prerank", prerank(dyck)},
            {"dinv", dinv(dyck)},
            {"cdinv", cdinv(dn)},
            {"contacts", contacts(dn)},
            {"phi", phi_dyck(dyck).str()},
            {"zeta", zeta_haglund(dyck).str()},
            {"r_zeta", r_map(zeta_haglund(dyck)).str()}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chip-firing, sandpile and Baker-Norine rank toolkit"};
    app.require_subcommand(1);
    std::function<void()> action;

    // stabilize / parking / recurrent / effective
    GraphArgs stab_graph;
    std::string stab_config;
    std::optional<std::uint64_t> stab_seed;
    auto* stab = app.add_subcommand("stabilize", "stabilize a sandpile configuration; prints config and odometer");
    stab_graph.attach(stab);
    stab->add_option("--config", stab_config, "configuration JSON array (sink last)");
    stab->add_option("--seed", stab_seed, "use a random legal toppling order with this seed");
    stab->callback([&] {
        action = [&] {
            const MultiGraph g = stab_graph.build();
            const Configuration f = read_config(stab_config);
            require_size(g, f);
            const Stabilization s = stab_seed ? stabilize_shuffled(g, f, *stab_seed) : stabilize(g, f);
            print({{"config", configuration_to_json(s.config)}, {"odometer", s.odometer}});
        };
    });

    GraphArgs park_graph;
    std::string park_config;
    auto* park = app.add_subcommand("parking", "parking (superstable) representative of the toppling class");
    park_graph.attach(park);
    park->add_option("--config", park_config, "configuration JSON array");
    park->callback([&] {
        action = [&] {
            const Configuration f = read_config(park_config);
            if (park_graph.complete > 0 && park_graph.chosen() == 1) {
                if (static_cast<int>(f.size()) != park_graph.complete) throw std::invalid_argument("configuration size differs from n");
                const KnParking p = parking_via_cyclic_lemma(f);
                print({{"parking", configuration_to_json(p.representative)},
                       {"sorted", configuration_to_json(p.sorted.to_configuration())},
                       {"word", p.sorted.word.str()}});
                return;
            }
            const MultiGraph g = park_graph.build();
            print({{"parking", configuration_to_json(parking_representative(g, f))}});
        };
    });

    GraphArgs rec_graph;
    std::string rec_config;
    auto* rec = app.add_subcommand("recurrent", "recurrent representative of the toppling class");
    rec_graph.attach(rec);
    rec->add_option("--config", rec_config, "configuration JSON array");
    rec->callback([&] {
        action = [&] {
            const MultiGraph g = rec_graph.build();
            const Configuration f = read_config(rec_config);
            print({{"recurrent", configuration_to_json(recurrent_representative(g, f))}});
        };
    });

    GraphArgs eff_graph;
    std::string eff_config;
    auto* eff = app.add_subcommand("effective", "whether the class of the configuration contains an effective one");
    eff_graph.attach(eff);
    eff->add_option("--config", eff_config, "configuration JSON array");
    eff->callback([&] {
        action = [&] {
            const MultiGraph g = eff_graph.build();
            const Configuration f = read_config(eff_config);
            const Configuration p = parking_representative(g, f);
            print({{"effective", is_effective_class(g, f)}, {"parking", configuration_to_json(p)}});
        };
    });

    GraphArgs tutte_graph;
    Int tutte_dmax = -1;
    std::string tutte_format = "json";
    auto* tutte = app.add_subcommand("tutte-counts", "effective-class counts by degree and the coefficients of T(1,y)");
    tutte_graph.attach(tutte);
    tutte->add_option("--d-max", tutte_dmax, "largest degree (default m-n+3)");
    tutte->add_option("--format", tutte_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    tutte->callback([&] {
        action = [&] {
            const MultiGraph g = tutte_graph.build();
            const Int dmax = tutte_dmax >= 0 ? tutte_dmax : g.edge_count() - g.vertex_count() + 3;
            const EffectiveClassCounts e = effective_class_counts(g, dmax);
            if (tutte_format == "csv") {
                std::cout << "degree,count,count_by_level\n";
                for (Int d = 0; d <= dmax; ++d) std::cout << d << ',' << e.by_parking[d] << ',' << e.by_level[d] << '\n';
                return;
            }
            print({{"by_parking", e.by_parking},
                   {"by_level", e.by_level},
                   {"tutte_coefficients", e.tutte_coefficients},
                   {"spanning_trees", e.spanning_trees}});
        };
    });

    // rank
    GraphArgs rank_graph;
    std::string rank_config;
    std::string rank_method;
    bool rank_ops = false;
    auto* rank = app.add_subcommand("rank", "Baker-Norine rank of a configuration");
    rank_graph.attach(rank);
    rank->add_option("--config", rank_config, "configuration JSON array");
    rank->add_option("--method", rank_method, "formula, greedy (K_n only) or bruteforce; default formula on K_n")
        ->check(CLI::IsMember({"formula", "greedy", "bruteforce"}));
    rank->add_flag("--count-ops", rank_ops, "report the arithmetic operation count of the K_n methods");
    rank->callback([&] {
        action = [&] {
            const Configuration f = read_config(rank_config);
            const bool kn = rank_graph.complete > 0 && rank_graph.chosen() == 1;
            const std::string method = rank_method.empty() ? (kn ? "formula" : "bruteforce") : rank_method;
            if (method != "bruteforce") {
                if (!kn) throw UsageError("--method " + method + " needs --complete n");
                if (static_cast<int>(f.size()) != rank_graph.complete) throw std::invalid_argument("configuration size differs from n");
                OpCounter ops;
                const Int r = method == "formula" ? rank_formula(f, &ops) : rank_greedy(f, &ops);
                Json out{{"rank", r}, {"method", method}, {"n", f.size()}};
                if (rank_ops) out["ops"] = ops.ops;
                print(out);
                return;
            }
            if (rank_ops) throw UsageError("--count-ops applies to the K_n methods only");
            const MultiGraph g = rank_graph.build();
            const RankResult r = rank_bruteforce(g, f);
            print({{"rank", r.rank}, {"method", method}, {"witness", configuration_to_json(r.witness)}});
        };
    });

    GraphArgs rr_graph;
    std::string rr_config;
    auto* rr = app.add_subcommand("rr-check", "check rank(f) - rank(kappa - f) = deg(f) + n - m by brute force");
    rr_graph.attach(rr);
    rr->add_option("--config", rr_config, "configuration JSON array");
    rr->callback([&] {
        action = [&] {
            const MultiGraph g = rr_graph.build();
            const Configuration f = read_config(rr_config);
            const Configuration dual = kappa(g) - f;
            const Int a = rank_bruteforce(g, f).rank;
            const Int b = rank_bruteforce(g, dual).rank;
            const Int rhs = degree(f) + g.vertex_count() - g.edge_count();
            print({{"holds", a - b == rhs},
                   {"rank", a},
                   {"dual", configuration_to_json(dual)},
                   {"rank_dual", b},
                   {"degree", degree(f)},
                   {"n", g.vertex_count()},
                   {"m", g.edge_count()}});
        };
    });

    // rank-table
    int table_n = 0;
    Int table_lo = -3;
    Int table_hi = 0;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("rank-table", "(degree, rank) distribution over sorted parking configurations of K_n");
    table->add_option("--complete", table_n, "n")->required()->check(CLI::Range(1, 12));
    table->add_option("--sink-min", table_lo, "smallest sink value");
    table->add_option("--sink-max", table_hi, "largest sink value (default 2m-2n+3)");
    table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
    table->callback([&] {
        action = [&] {
            const Int m = static_cast<Int>(table_n) * (table_n - 1) / 2;
            const Int hi = table->count("--sink-max") ? table_hi : 2 * m - 2 * table_n + 3;
            if (hi < table_lo) throw UsageError("--sink-max is below --sink-min");
            std::map<std::pair<Int, Int>, Int> tally;
            for (const BinaryWord& w : all_Dn_words(static_cast<std::size_t>(table_n)))
                for (Int s = table_lo; s <= hi; ++s) {
                    const Configuration f = SortedParking{w, s}.to_configuration();
                    ++tally[{degree(f), rank_formula(f)}];
                }
            if (table_format == "csv") {
                std::cout << "degree,rank,count\n";
                for (const auto& [k, c] : tally) std::cout << k.first << ',' << k.second << ',' << c << '\n';
                return;
            }
            Json rows = Json::array();
            for (const auto& [k, c] : tally) rows.push_back({{"degree", k.first}, {"rank", k.second}, {"count", c}});
            print(rows);
        };
    });

    // dyck stats
    auto* dyck = app.add_subcommand("dyck", "Dyck word statistics");
    dyck->require_subcommand(1);
    std::string dyck_word;
    auto* dyck_stats = dyck->add_subcommand("stats", "heights, coheights, area, prerank, dinv, cdinv, Phi, zeta");
    dyck_stats->add_option("word", dyck_word, "Dyck word (or a D_n word, whose final b is dropped)")->required();
    dyck_stats->callback([&] { action = [&] { print(word_stats(BinaryWord::parse(dyck_word))); }; });

    // strip leftright
    auto* strip = app.add_subcommand("strip", "strip labelling statistics");
    strip->require_subcommand(1);
    std::string strip_word;
    Int strip_s = 0;
    auto* strip_lr = strip->add_subcommand("leftright", "left(w,s), right(w,s) and lastright(w) for w in D_n");
    strip_lr->add_option("word", strip_word, "word of D_n")->required();
    strip_lr->add_option("s", strip_s, "threshold label")->required();
    strip_lr->callback([&] {
        action = [&] {
            const BinaryWord w = BinaryWord::parse(strip_word);
            const LeftRight lr = left_right(w, strip_s);
            const StripPoint p = psi_involution(w, strip_s);
            print({{"left", lr.left},
                   {"right", lr.right},
                   {"lastright", lastright(w)},
                   {"psi", {{"word", p.word.str()}, {"s", p.sink}}}});
        };
    });

    // genfun
    auto* genfun = app.add_subcommand("genfun", "generating-function computations");
    genfun->require_subcommand(1);
    int ln_n = 2;
    int ln_trunc = 8;
    std::string ln_format = "json";
    auto* ln = genfun->add_subcommand("ln", "L_n(x,y) truncated at total degree T");
    ln->add_option("--n", ln_n, "n")->required()->check(CLI::Range(1, 12));
    ln->add_option("--trunc", ln_trunc, "truncation T")->check(CLI::Range(0, 200));
    ln->add_option("--format", ln_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    ln->callback([&] {
        action = [&] {
            const TruncatedSeries s = Ln_direct(ln_n, ln_trunc);
            if (ln_format == "text") std::cout << s.to_string({"x", "y"}) << std::endl;
            else print(series_to_json(s));
        };
    });
    int id_n = 4;
    int id_trunc = 8;
    auto* ident = genfun->add_subcommand("identity", "check sum L_n z^(n-1) against its Carlitz closed form");
    ident->add_option("--max-n", id_n, "largest n (z-degree below this)")->check(CLI::Range(1, 9));
    ident->add_option("--trunc", id_trunc, "x,y total degree bound")->check(CLI::Range(0, 40));
    ident->callback([&] { action = [&] { print({{"holds", LnC_identity_check(id_n, id_trunc)}}); }; });

    // verify all
    auto* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->require_subcommand(1);
    std::uint64_t verify_seed = kDefaultSeed;
    bool verify_json = false;
    auto* verify_all = verify->add_subcommand("all", "run the acceptance suite and print a pass/fail table");
    verify_all->add_option("--seed", verify_seed, "seed of the randomized sweeps");
    verify_all->add_flag("--json", verify_json, "print JSON instead of a table");
    int verify_status = 0;
    verify_all->callback([&] {
        action = [&] {
            Json rows = Json::array();
            for (const CriterionResult& r : run_acceptance(verify_seed)) {
                verify_status |= !r.pass;
                if (verify_json)
                    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
                else
                    std::cout << format_result(r) << std::endl;
            }
            if (verify_json) print(rows);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (action) action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return verify_status;
}
