// Command-line front end: analyze | verify | betti | search | med-family.
// Exit codes: 0 all checks pass, 1 identity failure, 2 usage or validation.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nsg/nsg.hpp"

namespace {

std::vector<long long> parse_tuple(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw nsg::BadParameters("cannot parse generator '" + item + "'");
        }
        if (pos != item.size())
            throw nsg::BadParameters("cannot parse generator '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw nsg::BadParameters("empty generator tuple");
    return out;
}

bool is_validation_error(const nsg::Error& e) {
    return dynamic_cast<const nsg::NonPositiveGenerator*>(&e) ||
           dynamic_cast<const nsg::DuplicateGenerator*>(&e) ||
           dynamic_cast<const nsg::NotCoprime*>(&e) ||
           dynamic_cast<const nsg::NotMinimal*>(&e) ||
           dynamic_cast<const nsg::InputTooLarge*>(&e) ||
           dynamic_cast<const nsg::BadParameters*>(&e) ||
           dynamic_cast<const nsg::NotMed*>(&e) ||
           dynamic_cast<const nsg::NotMember*>(&e) ||
           dynamic_cast<const nsg::PreconditionFailed*>(&e);
}

std::string class_name(const nsg::AnalysisReport& r) {
    if (r.symmetric) return "symmetric";
    if (r.pseudosymmetric) return "pseudosymmetric";
    if (r.almost_symmetric) return "almost_symmetric";
    return "other";
}

void print_text_report(const nsg::AnalysisReport& r, std::ostream& os) {
    os << "generators:";
    for (long long d : r.generators) os << ' ' << d;
    os << "  (edim " << r.edim << ", multiplicity " << r.multiplicity << ")\n";
    os << "frobenius: " << r.frobenius << "  conductor: " << r.conductor
       << "  genus: " << r.genus << "  sigma: " << r.sigma_m << "\n";
    os << "gaps:";
    for (long long g : r.gaps) os << ' ' << g;
    os << "\napery: " << r.apery.to_string() << "\n";
    os << "pseudo_frobenius:";
    for (long long x : r.pseudo_frobenius) os << ' ' << x;
    os << "  (type " << r.type << ")\n";
    os << "delta_g:";
    for (long long x : r.delta_g) os << ' ' << x;
    os << "\ndelta_h:";
    for (long long x : r.delta_h) os << ' ' << x;
    os << "  (gamma " << r.gamma << ")\n";
    os << "class: " << class_name(r) << "\n";
    os << "identities: tr9=" << (r.tr9_ok ? "ok" : "FAIL")
       << " theorem1=" << (r.theorem1_ok ? "ok" : "FAIL")
       << " duality=" << (r.duality_ok ? "holds" : "fails") << "\n";
    os << "Q = " << r.q.to_string() << "\n";
    if (r.resolution) {
        os << "betti:";
        for (const auto& b : r.resolution->betti_numbers) os << ' ' << b;
        os << "\n";
        for (std::size_t i = 1; i < r.resolution->betti_degrees.size(); ++i)
            os << "B_" << i << " = " << r.resolution->betti_degrees[i].to_string()
               << "\n";
    }
    if (r.master) {
        os << "ell: " << r.master->ell << "  wp: " << r.master->wp
           << "  delta: " << r.master->delta
           << "  d_eo: " << r.master->deo.to_string() << "\n";
    }
    if (r.med) {
        os << "med: almost_symmetric=" << (r.med->almost_symmetric_med ? "yes" : "no")
           << " closed_frobenius=" << r.med->closed_frobenius
           << " closed_genus=" << r.med->closed_genus << "\n";
    }
    os << "elapsed_ms: " << r.elapsed_ms << "\n";
}

int run_analyze(const std::string& tuple, bool json, bool skip_betti) {
    nsg::NumericalSemigroup s(parse_tuple(tuple));
    nsg::AnalysisOptions opt;
    opt.skip_betti = skip_betti;
    const nsg::AnalysisReport r = nsg::analyze(s, opt);
    if (json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        print_text_report(r, std::cout);
    return 0;
}

int run_verify(const std::string& tuple) {
    nsg::NumericalSemigroup s(parse_tuple(tuple));
    const nsg::VerifyResult v = nsg::verify(s);
    for (const auto& line : v.lines) {
        const char* st = line.status == nsg::CheckStatus::pass   ? "pass"
                         : line.status == nsg::CheckStatus::fail ? "FAIL"
                                                                 : "n/a";
        std::cout << line.name << ": " << st;
        if (!line.gating) std::cout << "  [informational]";
        if (!line.detail.empty()) std::cout << "  (" << line.detail << ")";
        std::cout << "\n";
    }
    std::cout << "class: " << class_name(v.report) << "\n";
    return v.all_ok ? 0 : 1;
}

int run_betti(const std::string& tuple) {
    nsg::NumericalSemigroup s(parse_tuple(tuple));
    const nsg::GradedBettiTable table = nsg::graded_betti(s);
    std::cout << "betti:";
    for (const auto& b : table.betti()) std::cout << ' ' << b;
    std::cout << "\n";
    for (std::size_t i = 0; i < table.tables.size(); ++i)
        std::cout << "B_" << i << " = " << table.tables[i].to_string() << "\n";
    return 0;
}

int run_med_family(bool have_prop1, const std::vector<long long>& prop1,
                   bool have_arith, const std::vector<long long>& arith) {
    if (have_prop1 == have_arith)
        throw nsg::BadParameters("choose exactly one of --prop1 or --arith");
    nsg::NumericalSemigroup s = have_prop1
                                    ? nsg::prop1_family(prop1[0], prop1[1])
                                    : nsg::arith_med_family(arith[0], arith[1]);
    const nsg::AnalysisReport r = nsg::analyze(s, {});
    std::cout << "tuple:";
    for (long long d : r.generators) std::cout << ' ' << d;
    std::cout << "\npseudo_frobenius:";
    for (long long x : r.pseudo_frobenius) std::cout << ' ' << x;
    std::cout << "\nclass: " << class_name(r) << "\n";
    if (r.med)
        std::cout << "med_almost_symmetric: "
                  << (r.med->almost_symmetric_med ? "true" : "false") << "\n";
    if (r.master)
        std::cout << "ell: " << r.master->ell << "  wp: " << r.master->wp << "\n";
    return 0;
}

struct SearchStats {
    std::vector<long long> per_genus;
    long long symmetric = 0, pseudosymmetric = 0, almost_symmetric = 0, other = 0;
    long long med = 0, t2_not_pseudosymmetric = 0;
    long long emitted = 0, failures = 0;

    void merge(const SearchStats& o) {
        if (per_genus.size() < o.per_genus.size()) per_genus.resize(o.per_genus.size());
        for (std::size_t i = 0; i < o.per_genus.size(); ++i)
            per_genus[i] += o.per_genus[i];
        symmetric += o.symmetric;
        pseudosymmetric += o.pseudosymmetric;
        almost_symmetric += o.almost_symmetric;
        other += o.other;
        med += o.med;
        t2_not_pseudosymmetric += o.t2_not_pseudosymmetric;
        emitted += o.emitted;
        failures += o.failures;
    }
};

struct SearchConfig {
    int max_genus = 10;
    int edim = 0;  // 0 = any
    std::string filter;
    bool verify_all = false;
};

// Shared per-node handler; appends the JSONL record (if the node matches the
// filters) and updates the tallies.
void search_visit(const nsg::SemigroupNode& node, const SearchConfig& cfg,
                  std::string& out, SearchStats& stats) {
    nsg::NumericalSemigroup s(node.min_generators());
    if (static_cast<std::size_t>(node.genus) + 1 > stats.per_genus.size())
        stats.per_genus.resize(static_cast<std::size_t>(node.genus) + 1);
    stats.per_genus[static_cast<std::size_t>(node.genus)] += 1;

    nsg::AnalysisReport r;
    bool node_ok = true;
    if (cfg.verify_all) {
        const nsg::VerifyResult v = nsg::verify(s);
        // negative oracle: the duality identity must fail off-class
        node_ok = v.all_ok && (v.report.almost_symmetric || !v.report.duality_ok);
        if (!node_ok) stats.failures += 1;
        r = v.report;
    } else {
        nsg::AnalysisOptions opt;
        opt.skip_betti = true;
        r = nsg::analyze(s, opt);
    }

    const std::string cls = class_name(r);
    if (cls == "symmetric") stats.symmetric += 1;
    if (cls == "pseudosymmetric") stats.pseudosymmetric += 1;
    if (r.almost_symmetric) stats.almost_symmetric += 1;
    if (!r.almost_symmetric) stats.other += 1;
    const bool med = nsg::is_med(s);
    if (med) stats.med += 1;
    if (r.type == 2 && !r.pseudosymmetric) stats.t2_not_pseudosymmetric += 1;

    if (cfg.edim != 0 && r.edim != cfg.edim) return;
    if (cfg.filter == "symmetric" && !r.symmetric) return;
    if (cfg.filter == "pseudosymmetric" && !r.pseudosymmetric) return;
    if (cfg.filter == "almost-symmetric" && !r.almost_symmetric) return;
    if (cfg.filter == "med" && !med) return;
    if (cfg.filter == "almost-symmetric-med" && !(med && r.almost_symmetric)) return;

    nsg::Json rec;
    rec["generators"] = r.generators;
    rec["genus"] = r.genus;
    rec["edim"] = r.edim;
    rec["multiplicity"] = r.multiplicity;
    rec["frobenius"] = r.frobenius;
    rec["type"] = r.type;
    rec["gamma"] = r.gamma;
    rec["class"] = cls;
    rec["med"] = med;
    if (cfg.verify_all) rec["verified"] = node_ok;
    out += rec.dump();
    out += "\n";
    stats.emitted += 1;
}

int run_search(const SearchConfig& cfg, const std::string& out_path, int threads) {
    std::ostringstream buffer;
    SearchStats stats;

    const nsg::EnumerationPlan plan = nsg::split_enumeration(2, cfg.max_genus);
    std::vector<std::future<std::pair<std::string, SearchStats>>> jobs(
        plan.items.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= plan.items.size()) break;
            if (!plan.items[i].is_subtree_root) continue;
            std::string text;
            SearchStats st;
            nsg::enumerate_subtree(plan.items[i].node, cfg.max_genus,
                                   [&](const nsg::SemigroupNode& n) {
                                       search_visit(n, cfg, text, st);
                                   });
            std::promise<std::pair<std::string, SearchStats>> p;
            p.set_value({std::move(text), std::move(st)});
            jobs[i] = p.get_future();
        }
    };

    if (threads < 1) threads = 1;
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < plan.items.size(); ++i) {
        if (plan.items[i].is_subtree_root) {
            auto [text, st] = jobs[i].get();
            buffer << text;
            stats.merge(st);
        } else {
            std::string text;
            SearchStats st;
            search_visit(plan.items[i].node, cfg, text, st);
            buffer << text;
            stats.merge(st);
        }
    }

    nsg::Json summary;
    summary["summary"] = {
        {"per_genus", stats.per_genus},
        {"symmetric", stats.symmetric},
        {"pseudosymmetric", stats.pseudosymmetric},
        {"almost_symmetric", stats.almost_symmetric},
        {"other", stats.other},
        {"med", stats.med},
        {"t2_not_pseudosymmetric", stats.t2_not_pseudosymmetric},
        {"emitted", stats.emitted},
        {"verify_failures", cfg.verify_all ? nsg::Json(stats.failures) : nsg::Json(nullptr)}};
    buffer << summary.dump() << "\n";

    if (out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw nsg::BadParameters("cannot open output file " + out_path);
        f << buffer.str();
    }
    return cfg.verify_all && stats.failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact numerical semigroup toolkit"};
    app.require_subcommand(1);

    std::string tuple;
    bool json = false, skip_betti = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "full invariant report");
    analyze_cmd->add_option("tuple", tuple, "comma-separated generators")->required();
    analyze_cmd->add_flag("--json", json, "emit a JSON document");
    analyze_cmd->add_flag("--skip-betti", skip_betti, "omit the resolution block");

    auto* verify_cmd = app.add_subcommand("verify", "run every applicable identity");
    std::string verify_tuple;
    verify_cmd->add_option("tuple", verify_tuple, "comma-separated generators")
        ->required();

    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table");
    std::string betti_tuple;
    betti_cmd->add_option("tuple", betti_tuple, "comma-separated generators")
        ->required();

    auto* search_cmd = app.add_subcommand("search", "enumerate semigroups by genus");
    SearchConfig cfg;
    std::string out_path;
    int threads = 0;
    bool unsafe_genus = false;
    search_cmd->add_option("--max-genus", cfg.max_genus, "genus bound")->required();
    search_cmd->add_option("--edim", cfg.edim, "restrict to one embedding dimension");
    search_cmd
        ->add_option("--filter", cfg.filter,
                     "symmetric|pseudosymmetric|almost-symmetric|med|almost-symmetric-med")
        ->check(CLI::IsMember({"", "symmetric", "pseudosymmetric", "almost-symmetric",
                               "med", "almost-symmetric-med"}));
    search_cmd->add_flag("--verify-all", cfg.verify_all,
                         "run the identity suite on every semigroup");
    search_cmd->add_option("--out", out_path, "write records to a file");
    search_cmd->add_option("--threads", threads, "worker count (default: NSG_THREADS or hardware)");
    search_cmd->add_flag("--unsafe-genus", unsafe_genus, "lift the genus hard cap");

    auto* med_cmd = app.add_subcommand("med-family", "maximal-edim family generators");
    std::vector<long long> prop1, arith;
    auto* prop1_opt = med_cmd->add_option("--prop1", prop1, "t g")->expected(2);
    auto* arith_opt = med_cmd->add_option("--arith", arith, "n a")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(tuple, json, skip_betti);
        if (verify_cmd->parsed()) return run_verify(verify_tuple);
        if (betti_cmd->parsed()) return run_betti(betti_tuple);
        if (search_cmd->parsed()) {
            constexpr int kGenusCap = 25;
            if (cfg.max_genus < 0) throw nsg::BadParameters("negative genus bound");
            if (cfg.max_genus > kGenusCap && !unsafe_genus)
                throw nsg::BadParameters(
                    "genus bound above " + std::to_string(kGenusCap) +
                    " requires --unsafe-genus");
            // embedding dimension reaches max-genus + 1, and the resolution
            // machinery is capped at 16 vertices
            if (cfg.verify_all && cfg.max_genus > 15)
                throw nsg::BadParameters(
                    "--verify-all supports genus bounds up to 15");
            if (threads <= 0) {
                if (const char* env = std::getenv("NSG_THREADS"))
                    threads = std::atoi(env);
                if (threads <= 0)
                    threads = static_cast<int>(std::thread::hardware_concurrency());
                if (threads <= 0) threads = 1;
            }
            return run_search(cfg, out_path, threads);
        }
        if (med_cmd->parsed())
            return run_med_family(prop1_opt->count() > 0, prop1,
                                  arith_opt->count() > 0, arith);
    } catch (const nsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_validation_error(e) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
