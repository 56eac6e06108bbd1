#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "cowl/certify.hpp"
#include "cowl/decide.hpp"
#include "cowl/enumerate.hpp"
#include "cowl/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cowl;
using nlohmann::json;

namespace {

// exit codes: 0 Yes / certificate valid, 1 No / certificate invalid,
// 2 Unknown, 3 parse or validation error, 4 usage
constexpr int kExitYes = 0, kExitNo = 1, kExitUnknown = 2, kExitParse = 3, kExitUsage = 4;

int exit_code(Answer a) {
    switch (a) {
        case Answer::Yes: return kExitYes;
        case Answer::No: return kExitNo;
        case Answer::Unknown: return kExitUnknown;
    }
    return kExitUsage;
}

struct CommonOpts {
    std::string input;
    std::string format = "text";
    std::string out;
    long long characteristic = 2;
    std::size_t lq_cap = 24;
    std::size_t split_cap = 20;
    std::size_t node_budget = 4'000'000;
    bool no_oracle = false;
    bool serial = false;
    bool paranoid = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input) cmd->add_option("--input", o.input, "input file")->required();
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "write the report to a file as well");
    cmd->add_option("--char", o.characteristic, "field characteristic (0 or a prime)");
    cmd->add_option("--lq-cap", o.lq_cap, "linear-quotient search generator cap");
    cmd->add_option("--split-cap", o.split_cap, "vertex-split search generator cap");
    cmd->add_option("--node-budget", o.node_budget, "search node budget");
    cmd->add_flag("--no-oracle", o.no_oracle, "never fall back to the Betti oracle");
    cmd->add_flag("--serial", o.serial, "disable parallel kernels");
    cmd->add_flag("--paranoid", o.paranoid, "extend componentwise checks two degrees past the top");
}

DecideOptions make_opts(const CommonOpts& o) {
    DecideOptions opts;
    opts.caps.lq_max_generators = o.lq_cap;
    opts.caps.split_max_generators = o.split_cap;
    opts.caps.node_budget = o.node_budget;
    opts.oracle.characteristic = o.characteristic;
    opts.oracle.policy = o.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    opts.oracle.paranoid = o.paranoid;
    opts.use_oracle = !o.no_oracle;
    return opts;
}

json request_echo(const std::string& command, const CommonOpts& o, std::uint64_t k) {
    json req;
    req["command"] = command;
    req["input"] = o.input;
    if (k >= 1) req["k"] = k;
    req["characteristic"] = o.characteristic;
    req["lq_cap"] = o.lq_cap;
    req["split_cap"] = o.split_cap;
    req["node_budget"] = o.node_budget;
    req["use_oracle"] = !o.no_oracle;
    req["format"] = o.format;
    return req;
}

json graph_summary(const BuiltGraph& built) {
    const auto& d = built.graph;
    json out;
    out["n"] = d.n();
    out["arc_count"] = d.arc_count();
    json vp = json::array();
    for (int v : set_to_list(v_plus(d))) vp.push_back(d.ids[v]);
    out["v_plus"] = vp;
    std::map<std::string, int> profile;
    for (auto w : d.weights) profile[std::to_string(w)]++;
    out["weight_profile"] = profile;
    out["normalized_sources"] = built.report.normalized_sources;
    return out;
}

void emit(const json& report, const CommonOpts& o, const Verdict& v, const IoContext& ctx) {
    std::string rendered;
    if (o.format == "json") {
        rendered = report.dump(2) + "\n";
    } else {
        rendered = render_verdict_text(v, ctx);
    }
    std::cout << rendered;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << report.dump(2) << "\n";
    }
}

int run_analyze_or_power(const std::string& command, const CommonOpts& o, std::uint64_t k) {
    auto t0 = std::chrono::steady_clock::now();
    BuiltGraph built = graph_from_json(load_json_file(o.input));
    DecideOptions opts = make_opts(o);
    Verdict v = command == "analyze" ? decide_componentwise_linear(built.graph, opts)
                                     : decide_power(built.graph, k, opts);
    MonomialIdeal I = edge_ideal(built.graph);
    MonomialIdeal subject = (k >= 2 && !I.is_zero()) ? power(I, k) : I;
    IoContext ctx{&built.graph, &subject};

    json report;
    report["format_version"] = kFormatVersion;
    report["request"] = request_echo(command, o, k);
    report["graph"] = graph_summary(built);
    report["criteria"] = criterion4_to_json(criterion4(built.graph), built.graph);
    report["verdict"] = verdict_to_json(v, ctx);
    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    emit(report, o, v, ctx);
    return exit_code(v.answer);
}

int run_oracle(const CommonOpts& o, std::uint64_t k, bool ideal_input, bool regularity_only) {
    auto t0 = std::chrono::steady_clock::now();
    json doc = load_json_file(o.input);
    std::optional<BuiltGraph> built;
    MonomialIdeal base;
    if (ideal_input) {
        base = ideal_from_json(doc);
    } else {
        built = graph_from_json(doc);
        base = edge_ideal(built->graph);
    }
    if (base.is_zero()) {
        std::cerr << "the ideal is zero; nothing to measure\n";
        return kExitParse;
    }
    MonomialIdeal subject = k >= 2 ? power(base, k) : base;
    DecideOptions opts = make_opts(o);

    Verdict v;
    if (regularity_only) {
        long long reg = regularity(subject, opts.oracle);
        json report;
        report["format_version"] = kFormatVersion;
        report["request"] = request_echo("oracle", o, k);
        report["regularity"] = reg;
        report["characteristic"] = o.characteristic;
        auto t1 = std::chrono::steady_clock::now();
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (o.format == "json") std::cout << report.dump(2) << "\n";
        else std::cout << "regularity: " << reg << " (characteristic " << o.characteristic << ")\n";
        if (!o.out.empty()) std::ofstream(o.out) << report.dump(2) << "\n";
        return kExitYes;
    }

    BettiEvidence ev = is_componentwise_linear_oracle(subject, opts.oracle, true);
    v.answer = ev.componentwise_linear() ? Answer::Yes : Answer::No;
    v.rule = "betti_oracle";
    v.certificate = ev;
    IoContext ctx{built ? &built->graph : nullptr, &subject};

    json report;
    report["format_version"] = kFormatVersion;
    report["request"] = request_echo("oracle", o, k);
    if (built) report["graph"] = graph_summary(*built);
    report["ideal"] = ideal_to_json(subject);
    report["verdict"] = verdict_to_json(v, ctx);
    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    emit(report, o, v, ctx);
    return exit_code(v.answer);
}

int run_certify(const CommonOpts& o, const std::string& report_path, bool ideal_input) {
    json report = load_json_file(report_path);
    json doc = load_json_file(o.input);
    std::optional<WeightedOrientedGraph> graph;
    std::optional<MonomialIdeal> ideal;
    if (ideal_input) ideal = ideal_from_json(doc);
    else graph = graph_from_json(doc).graph;
    CertifyResult res = verify_report_json(report, graph, ideal);
    if (res.ok) {
        std::cout << "certificate OK\n";
        return kExitYes;
    }
    std::cout << "certificate INVALID: " << res.violation << "\n";
    return kExitNo;
}

int run_census(const CommonOpts& o, int max_n, std::uint64_t max_weight, bool connected) {
    auto t0 = std::chrono::steady_clock::now();
    if (max_n < 1 || max_n > 6) {
        std::cerr << "census supports --max-n between 1 and 6\n";
        return kExitUsage;
    }
    CensusOptions copts;
    copts.max_n = max_n;
    copts.max_weight = max_weight;
    copts.connected_only = connected;
    auto classes = census_classes(copts);
    DecideOptions opts = make_opts(o);

    std::vector<std::pair<std::string, std::string>> results(classes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (!o.serial)
#endif
    for (std::size_t i = 0; i < classes.size(); ++i) {
        Verdict v = decide_componentwise_linear(classes[i], opts);
        results[i] = {answer_name(v.answer), v.rule};
    }
    std::map<std::pair<std::string, std::string>, std::size_t> table;
    for (const auto& r : results) table[r]++;

    json report;
    report["format_version"] = kFormatVersion;
    json req = request_echo("census", o, 0);
    req.erase("k");
    req["max_n"] = max_n;
    req["max_weight"] = max_weight;
    req["connected"] = connected;
    report["request"] = req;
    report["classes"] = classes.size();
    json rows = json::array();
    for (const auto& [key, count] : table)
        rows.push_back({{"answer", key.first}, {"rule", key.second}, {"count", count}});
    report["table"] = rows;
    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (o.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "census: " << classes.size() << " isomorphism classes (n <= " << max_n
                  << ", weights <= " << max_weight << (connected ? ", connected" : "") << ")\n";
        for (const auto& [key, count] : table)
            std::cout << "  " << key.first << " via " << key.second << ": " << count << "\n";
    }
    if (!o.out.empty()) std::ofstream(o.out) << report.dump(2) << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"componentwise linearity of weighted oriented edge ideals"};
    app.require_subcommand(1);

    CommonOpts ao;
    auto* analyze = app.add_subcommand("analyze", "decide componentwise linearity of I(D)");
    add_common(analyze, ao);

    CommonOpts po;
    std::uint64_t k = 2;
    auto* powercmd = app.add_subcommand("power", "decide componentwise linearity of I(D)^k");
    add_common(powercmd, po);
    powercmd->add_option("--k", k, "power to decide")->required()->check(CLI::PositiveNumber);

    CommonOpts oo;
    std::uint64_t ok = 1;
    bool oracle_ideal = false, regularity_only = false;
    auto* oraclecmd = app.add_subcommand("oracle", "Betti-table oracle on a graph or raw ideal");
    add_common(oraclecmd, oo);
    oraclecmd->add_option("--k", ok, "power before measuring")->check(CLI::PositiveNumber);
    oraclecmd->add_flag("--ideal", oracle_ideal, "input file is an ideal document");
    oraclecmd->add_flag("--regularity-only", regularity_only, "print only the regularity");

    CommonOpts co;
    std::string report_path;
    bool certify_ideal = false;
    auto* certifycmd = app.add_subcommand("certify", "re-verify an emitted report against its input");
    add_common(certifycmd, co);
    certifycmd->add_option("--report", report_path, "report file to verify")->required();
    certifycmd->add_flag("--ideal", certify_ideal, "input file is an ideal document");

    CommonOpts no;
    int census_n = 4;
    std::uint64_t census_w = 2;
    bool census_connected = false;
    auto* censuscmd = app.add_subcommand("census", "tabulate verdicts over all graphs up to a size");
    add_common(censuscmd, no, false);
    censuscmd->add_option("--max-n", census_n, "largest vertex count")->required();
    censuscmd->add_option("--max-weight", census_w, "largest vertex weight");
    censuscmd->add_flag("--connected", census_connected, "restrict to connected graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze_or_power("analyze", ao, 1);
        if (powercmd->parsed()) return run_analyze_or_power("power", po, k);
        if (oraclecmd->parsed()) return run_oracle(oo, ok, oracle_ideal, regularity_only);
        if (certifycmd->parsed()) return run_certify(co, report_path, certify_ideal);
        if (censuscmd->parsed()) return run_census(no, census_n, census_w, census_connected);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const SearchCapError& e) {
        std::cerr << "search cap: " << e.what() << "\n";
        return kExitUnknown;
    }
    return kExitUsage;
}
