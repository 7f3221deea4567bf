// braidsig: signatures and Betti numbers of positive braid closures, by two
// independent pipelines, plus an exhaustive verification harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidsig/braidsig.hpp"

namespace bs = braidsig;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json json_int(const bs::Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

ordered_json matrix_json(const bs::IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : m) {
        ordered_json row = ordered_json::array();
        for (const auto& x : r) row.push_back(json_int(x));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(std::ostream& os, const bs::IntMatrix& m) {
    for (const auto& r : m) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) os << ' ';
            os << r[j];
        }
        os << '\n';
    }
    if (m.empty()) os << "(0x0)\n";
}

ordered_json report_json(const bs::InvariantReport& r) {
    ordered_json j;
    j["word"] = r.word;
    j["b1"] = r.b1;
    j["sigma"] = r.sigma;
    j["det"] = json_int(r.det);
    j["nullity"] = r.nullity;
    j["components"] = r.components;
    j["method"] = r.method;
    if (r.components == 1) j["genus_lb"] = bs::genus_lower_bound(r);
    return j;
}

std::vector<std::string> checks_applied(const bs::InvariantReport& r, int strands) {
    std::vector<std::string> c{"pipeline-agreement", "sigma-range"};
    if (r.b1 >= 1) {
        c.push_back("bound-eighth");
        if (strands <= 4) c.push_back("bound-half");
        if (strands <= 3 && r.b1 >= 2) c.push_back("bound-three-braid");
    }
    return c;
}

int default_workers() {
    if (const char* env = std::getenv("BRAIDSIG_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signatures of positive braid closures (Goeritz and Seifert pipelines)"};
    app.require_subcommand(1);

    std::string word_str;
    bool as_json = false;
    bool dump_diagram = false;
    int fam_n = 1;
    std::string format = "text";
    int v_strands = 3, v_maxlen = 6, v_workers = default_workers();
    std::uint64_t v_seed = 0, v_budget = (1ull << 28);
    std::string results_path;
    int ts_k = 1;
    std::size_t saddle_pos = 0;
    int appendix_budget = 64;

    auto* c_sig = app.add_subcommand("sig", "both pipelines on one word");
    c_sig->add_option("word", word_str, "word as B<strands>:<k1>,<k2>,...")->required();
    c_sig->add_flag("--json", as_json, "structured output");
    c_sig->add_flag("--dump-diagram", dump_diagram, "print the closure diagram");

    auto* c_goe = app.add_subcommand("goeritz", "Goeritz matrix and GL signature");
    c_goe->add_option("word", word_str)->required();
    c_goe->add_flag("--json", as_json);

    auto* c_sei = app.add_subcommand("seifert", "Seifert matrix and signature");
    c_sei->add_option("word", word_str)->required();
    c_sei->add_flag("--json", as_json);

    auto* c_fam = app.add_subcommand("families", "sharp example families table");
    c_fam->add_option("--n", fam_n, "max family index")->required();
    c_fam->add_option("--format", format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* c_ver = app.add_subcommand("verify", "exhaustive bounded verification");
    c_ver->add_option("--strands", v_strands)->required()->check(CLI::Range(2, 5));
    c_ver->add_option("--max-len", v_maxlen)->required()->check(CLI::Range(0, 64));
    c_ver->add_option("--workers", v_workers);
    c_ver->add_option("--seed", v_seed);
    c_ver->add_option("--budget", v_budget);
    c_ver->add_option("--results", results_path, "append one JSON document per word");
    c_ver->add_flag("--json", as_json);

    auto* c_tw = app.add_subcommand("twist-shift", "full-twist signature shift check");
    c_tw->add_option("word", word_str)->required();
    c_tw->add_option("--k", ts_k)->required();
    c_tw->add_flag("--json", as_json);

    auto* c_sad = app.add_subcommand("saddle", "one-smoothing signature bound check");
    c_sad->add_option("word", word_str)->required();
    c_sad->add_option("--position", saddle_pos)->required();
    c_sad->add_flag("--json", as_json);

    auto* c_fr = app.add_subcommand("first-row", "Goeritz comparison under a3 -> a1");
    c_fr->add_option("word", word_str)->required();
    c_fr->add_flag("--json", as_json);

    auto* c_app = app.add_subcommand("appendix", "mod-4 smoothing reduction check");
    c_app->add_option("word", word_str)->required();
    c_app->add_option("--sigma-budget", appendix_budget, "max b1 for the signature chain");
    c_app->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*c_sig) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            if (dump_diagram)
                std::cout << bs::PlanarDiagram(w).dump();
            const bs::InvariantReport r = bs::check_word(w);
            if (as_json) {
                std::cout << report_json(r).dump() << '\n';
            } else {
                std::cout << "word=" << r.word << " sigma=" << r.sigma << " b1=" << r.b1
                          << " det=" << r.det << " nullity=" << r.nullity
                          << " components=" << r.components << " method=" << r.method;
                if (r.components == 1)
                    std::cout << " genus_lb=" << bs::genus_lower_bound(r);
                std::cout << '\n';
            }
            return 0;
        }
        if (*c_goe) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            const bs::InvariantReport r = bs::signature_gl(w);
            bs::PlanarDiagram d(w);
            bs::Coloring col = bs::checkerboard(d);
            const bs::GoeritzData g = bs::goeritz(d, col);
            const auto t = bs::signature_triple(g.matrix);
            if (as_json) {
                ordered_json j;
                j["word"] = r.word;
                j["mu"] = g.mu;
                j["deleted_region"] = g.deleted_region;
                ordered_json labels = ordered_json::array();
                for (int f : g.region_labels) labels.push_back(f);
                j["basis"] = labels;
                j["G"] = matrix_json(g.matrix);
                j["sigma_G"] = t.sigma();
                j["sigma"] = r.sigma;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "word=" << r.word << '\n' << "mu=" << g.mu << '\n';
                std::cout << "deleted_region=f" << g.deleted_region << '\n' << "basis=";
                for (std::size_t i = 0; i < g.region_labels.size(); ++i)
                    std::cout << (i ? "," : "") << 'f' << g.region_labels[i];
                std::cout << '\n' << "G=\n";
                print_matrix(std::cout, g.matrix);
                std::cout << "sigma_G=" << t.sigma() << '\n' << "sigma=" << r.sigma << '\n';
            }
            return 0;
        }
        if (*c_sei) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            const bs::SeifertData s = bs::seifert_matrix(w);
            const bs::InvariantReport r = bs::signature_seifert(w);
            const bs::IntMatrix sym = bs::symmetrized(s.v);
            if (as_json) {
                ordered_json j;
                j["word"] = r.word;
                j["V"] = matrix_json(s.v);
                j["V_plus_Vt"] = matrix_json(sym);
                ordered_json basis = ordered_json::array();
                for (const auto& b : s.basis)
                    basis.push_back({{"column", b.column}, {"pair", {b.t1, b.t2}}});
                j["basis"] = basis;
                j["sigma"] = r.sigma;
                j["det"] = json_int(r.det);
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "word=" << r.word << '\n' << "V=\n";
                print_matrix(std::cout, s.v);
                std::cout << "V+Vt=\n";
                print_matrix(std::cout, sym);
                std::cout << "sigma=" << r.sigma << '\n' << "det=" << r.det << '\n';
            }
            return 0;
        }
        if (*c_fam) {
            const auto rows = bs::verify_families(fam_n);
            if (format == "csv") {
                std::cout << "family,n,word,b1,neg_sigma,components\n";
                for (const auto& r : rows)
                    std::cout << bs::family_name_str(r.name) << ',' << r.n << ",\"" << r.word
                              << "\"," << r.b1 << ',' << r.neg_sigma << ',' << r.components << '\n';
            } else if (format == "json") {
                ordered_json out = ordered_json::array();
                for (const auto& r : rows)
                    out.push_back({{"family", bs::family_name_str(r.name)},
                                   {"n", r.n},
                                   {"word", r.word},
                                   {"b1", r.b1},
                                   {"neg_sigma", r.neg_sigma},
                                   {"components", r.components}});
                std::cout << out.dump() << '\n';
            } else {
                for (const auto& r : rows)
                    std::cout << bs::family_name_str(r.name) << " n=" << r.n
                              << " word=" << r.word << " b1=" << r.b1
                              << " -sigma=" << r.neg_sigma
                              << " components=" << r.components << '\n';
            }
            return 0;
        }
        if (*c_ver) {
            std::ofstream results;
            std::function<void(const bs::InvariantReport&)> sink;
            if (!results_path.empty()) {
                results.open(results_path, std::ios::app);
                if (!results)
                    throw bs::Error("cannot open results file " + results_path);
                sink = [&](const bs::InvariantReport& r) {
                    ordered_json j = report_json(r);
                    j.erase("method");
                    j["checks"] = checks_applied(r, v_strands);
                    results << j.dump() << '\n';
                };
            }
            const bs::VerificationSummary s =
                bs::enumerate_and_verify(v_strands, v_maxlen, v_workers, v_budget, v_seed, sink);
            ordered_json j;
            j["strands"] = s.strands;
            j["max_length"] = s.max_length;
            j["workers"] = s.workers;
            j["seed"] = s.seed;
            j["words_examined"] = s.words_examined;
            j["canonical_classes"] = s.canonical_classes;
            ordered_json counts;
            for (const auto& [k, v] : s.check_counts) counts[k] = v;
            j["check_counts"] = counts;
            j["violations"] = s.violations;
            if (s.has_min_ratio) {
                j["min_ratio"] = std::to_string(s.min_ratio_num) + "/" + std::to_string(s.min_ratio_den);
                j["min_ratio_witness"] = s.min_ratio_witness;
            }
            if (!results_path.empty())
                results << ordered_json{{"summary", j}}.dump() << '\n';
            if (as_json) {
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "strands=" << s.strands << " max_len=" << s.max_length
                          << " words=" << s.words_examined
                          << " classes=" << s.canonical_classes
                          << " violations=" << s.violations.size();
                if (s.has_min_ratio)
                    std::cout << " min_ratio=" << s.min_ratio_num << '/' << s.min_ratio_den
                              << " witness=" << s.min_ratio_witness;
                std::cout << '\n';
                for (const auto& [k, v] : s.check_counts)
                    std::cout << "  " << k << "=" << v << '\n';
                for (const auto& v : s.violations)
                    std::cout << "VIOLATION " << v << '\n';
            }
            return s.violations.empty() ? 0 : 3;
        }
        if (*c_tw) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            const bool ok = bs::verify_twist_shift(w, ts_k);
            if (as_json)
                std::cout << ordered_json{{"word", bs::serialize(w)}, {"k", ts_k}, {"shift_exact", ok}}.dump() << '\n';
            else
                std::cout << "shift_exact=" << (ok ? "true" : "false") << '\n';
            return ok ? 0 : 3;
        }
        if (*c_sad) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            const long long s0 = bs::check_word(w).sigma;
            const long long s1 = bs::check_word(bs::delete_letter(w, saddle_pos)).sigma;
            const bool ok = bs::verify_saddle_bound(w, saddle_pos);
            if (as_json)
                std::cout << ordered_json{{"word", bs::serialize(w)},
                                          {"position", saddle_pos},
                                          {"delta_sigma", s0 - s1},
                                          {"within_bound", ok}}.dump() << '\n';
            else
                std::cout << "delta_sigma=" << (s0 - s1) << " within_bound=" << (ok ? "true" : "false") << '\n';
            return ok ? 0 : 3;
        }
        if (*c_fr) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            const bs::FirstRowReport r = bs::first_row_comparison(w);
            if (as_json) {
                ordered_json j;
                j["word"] = bs::serialize(w);
                j["G_beta"] = matrix_json(r.g_beta.matrix);
                j["G_alpha"] = matrix_json(r.g_alpha.matrix);
                j["agree_submatrix"] = r.agree_submatrix;
                j["sigma_G_beta"] = r.sigma_g_beta;
                j["sigma_G_alpha"] = r.sigma_g_alpha;
                j["signature_inequality"] = r.signature_inequality;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "G_beta=\n";
                print_matrix(std::cout, r.g_beta.matrix);
                std::cout << "G_alpha=\n";
                print_matrix(std::cout, r.g_alpha.matrix);
                std::cout << "agree_submatrix=" << (r.agree_submatrix ? "true" : "false")
                          << " sigma_G_beta=" << r.sigma_g_beta
                          << " sigma_G_alpha=" << r.sigma_g_alpha
                          << " signature_inequality=" << (r.signature_inequality ? "true" : "false")
                          << '\n';
            }
            return (r.agree_submatrix && r.signature_inequality) ? 0 : 3;
        }
        if (*c_app) {
            const bs::BraidWord w = bs::parse_serialized(word_str);
            const bs::ResidueReductionReport r = bs::verify_residue_reduction(w, appendix_budget);
            bool chain_ok = true;
            for (const auto& e : r.entries) chain_ok = chain_ok && e.sigma_chain_ok;
            if (as_json) {
                ordered_json entries = ordered_json::array();
                for (const auto& e : r.entries)
                    entries.push_back({{"residue", e.residue},
                                       {"word", e.word},
                                       {"b1", e.b1},
                                       {"smoothed", e.smoothed},
                                       {"generators_once", e.generators_once},
                                       {"sigma_checked", e.sigma_checked},
                                       {"sigma_chain_ok", e.sigma_chain_ok}});
                ordered_json j;
                j["word"] = bs::serialize(w);
                j["entries"] = entries;
                j["best_residue"] = r.best_residue;
                j["betti_bound_ok"] = r.betti_bound_ok;
                j["all_generators_once"] = r.all_generators_once;
                std::cout << j.dump() << '\n';
            } else {
                for (const auto& e : r.entries)
                    std::cout << "i=" << e.residue << " word=" << e.word << " b1=" << e.b1
                              << " smoothed=" << e.smoothed
                              << " generators_once=" << (e.generators_once ? "true" : "false")
                              << (e.sigma_checked
                                      ? std::string(" sigma_chain_ok=") + (e.sigma_chain_ok ? "true" : "false")
                                      : std::string())
                              << '\n';
                std::cout << "best_residue=" << r.best_residue
                          << " betti_bound_ok=" << (r.betti_bound_ok ? "true" : "false")
                          << " all_generators_once=" << (r.all_generators_once ? "true" : "false")
                          << '\n';
            }
            return (r.betti_bound_ok && r.all_generators_once && chain_ok) ? 0 : 3;
        }
    } catch (const bs::VerificationFatal& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    } catch (const bs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
