#include "cowl/certify.hpp"

namespace cowl {

namespace {

CertifyResult fail(std::string why) { return {false, std::move(why)}; }
CertifyResult pass() { return {true, ""}; }

CertifyResult check_criterion4(const WeightedOrientedGraph& d) {
    if (find_forbidden(d)) return fail("criterion recheck: a forbidden pattern is present");
    if (!is_cochordal(underlying(d)).chordal)
        return fail("criterion recheck: the underlying complement is not chordal");
    if (!is_cochordal(h_graph(d)).chordal)
        return fail("criterion recheck: the degree-two graph's complement is not chordal");
    return pass();
}

}  // namespace

CertifyResult verify_verdict(const WeightedOrientedGraph* d, const MonomialIdeal* subject,
                             std::uint64_t k, const Verdict& v) {
    const std::string& rule = v.rule;

    if (v.answer == Answer::Unknown) {
        if (rule == "search_capped" || rule == "undecided") return pass();
        return fail("unknown verdict under a decisive rule '" + rule + "'");
    }

    if (rule == "zero_ideal") {
        if (!subject || !subject->is_zero()) return fail("zero_ideal verdict but the ideal is nonzero");
        if (v.answer != Answer::Yes) return fail("zero ideal must decide Yes");
        return pass();
    }

    if (rule == "forbidden_pattern" || rule == "pattern_obstructs_all_powers") {
        if (!d) return fail("pattern certificate requires the graph input");
        if (v.answer != Answer::No) return fail("pattern rules decide No");
        auto* pm = std::get_if<PatternMatch>(&v.certificate);
        if (!pm) return fail("missing pattern witness");
        auto msg = verify_pattern_match(*d, *pm);
        if (!msg.empty()) return fail("pattern witness: " + msg);
        return pass();
    }

    if (rule == "g_complement_not_chordal" || rule == "h_complement_not_chordal") {
        if (!d) return fail("cochordality certificate requires the graph input");
        if (v.answer != Answer::No) return fail("cochordality obstructions decide No");
        auto* ce = std::get_if<CochordalityEvidence>(&v.certificate);
        if (!ce) return fail("missing cochordality evidence");
        bool want_h = rule[0] == 'h';
        if (want_h != (ce->target == CochordalityEvidence::Target::HGraph))
            return fail("cochordality evidence targets the wrong graph");
        if (ce->cert.chordal) return fail("obstruction evidence claims chordality");
        SimpleGraph target = want_h ? h_graph(*d) : underlying(*d);
        auto msg = verify_chordless_cycle(complement(target), ce->cert.cycle);
        if (!msg.empty()) return fail("complement cycle: " + msg);
        return pass();
    }

    if (rule == "house_free_characterization" || rule == "chordal_characterization" ||
        rule == "multipartite_characterization") {
        if (!d || !subject) return fail("characterization verdicts require the graph input");
        if (v.answer != Answer::Yes) return fail("characterization rules decide Yes");
        if (auto c4 = check_criterion4(*d); !c4.ok) return c4;
        SimpleGraph g = underlying(*d);
        if (rule == "house_free_characterization" && !is_house_free(g))
            return fail("class recheck: the underlying graph contains a house");
        if (rule == "chordal_characterization" && !is_chordal(g).chordal)
            return fail("class recheck: the underlying graph is not chordal");
        if (rule == "multipartite_characterization" && !complete_multipartite(g))
            return fail("class recheck: the underlying graph is not complete multipartite");
        auto* st = std::get_if<std::shared_ptr<const SplitTree>>(&v.certificate);
        if (!st || !*st) return fail("missing split certificate");
        MonomialIdeal I = edge_ideal(*d);
        auto msg = verify_split_tree(I, **st);
        if (!msg.empty()) return fail("split certificate: " + msg);
        return pass();
    }

    if (rule == "linear_quotients") {
        if (!subject) return fail("linear-quotient verdicts require a subject ideal");
        if (v.answer != Answer::Yes) return fail("linear quotients decide Yes");
        auto* lq = std::get_if<LinearQuotientOrder>(&v.certificate);
        if (!lq) return fail("missing linear-quotient order");
        auto msg = verify_linear_quotient_order(*subject, *lq);
        if (!msg.empty()) return fail("linear-quotient order: " + msg);
        return pass();
    }

    if (rule == "betti_oracle") {
        if (!subject) return fail("betti evidence requires a subject ideal");
        auto* be = std::get_if<BettiEvidence>(&v.certificate);
        if (!be) return fail("missing betti evidence");
        OracleOptions opts;
        opts.characteristic = be->characteristic;
        BettiEvidence replay =
            is_componentwise_linear_oracle(*subject, opts, be->total_regularity.has_value());
        if (replay.componentwise_linear() != be->componentwise_linear())
            return fail("betti replay: componentwise verdict differs");
        if ((v.answer == Answer::Yes) != be->componentwise_linear())
            return fail("betti evidence contradicts the recorded answer");
        if (replay.failing_degree != be->failing_degree)
            return fail("betti replay: failing degree differs");
        if (replay.per_degree.size() != be->per_degree.size())
            return fail("betti replay: per-degree evidence differs");
        for (std::size_t i = 0; i < replay.per_degree.size(); ++i) {
            const auto& a = replay.per_degree[i];
            const auto& b = be->per_degree[i];
            if (a.d != b.d || a.linear != b.linear)
                return fail("betti replay: result at degree " + std::to_string(b.d) + " differs");
            bool aw = a.violation.has_value(), bw = b.violation.has_value();
            if (aw != bw) return fail("betti replay: witness presence differs at degree " + std::to_string(b.d));
            if (aw && !(a.violation->multidegree == b.violation->multidegree &&
                        a.violation->i == b.violation->i && a.violation->j == b.violation->j))
                return fail("betti replay: violation witness differs at degree " + std::to_string(b.d));
        }
        if (be->total_regularity && replay.total_regularity != be->total_regularity)
            return fail("betti replay: total regularity differs");
        return pass();
    }

    if (rule == "multipartite_power_reduction") {
        if (!d) return fail("power reduction requires the graph input");
        if (k < 2) return fail("power reduction recorded for k < 2");
        if (!complete_multipartite(underlying(*d)))
            return fail("class recheck: the underlying graph is not complete multipartite");
        if (!v.base) return fail("power reduction is missing the first-power verdict");
        if (v.base->answer != v.answer) return fail("power reduction answer differs from its base");
        MonomialIdeal I = edge_ideal(*d);
        return verify_verdict(d, &I, 1, *v.base);
    }

    if (rule == "house_free_power_reduction") {
        if (!d) return fail("power reduction requires the graph input");
        if (k < 2) return fail("power reduction recorded for k < 2");
        if (v.answer != Answer::No) return fail("house-free power reduction decides No");
        SimpleGraph g = underlying(*d);
        if (!is_house_free(g)) return fail("class recheck: the underlying graph contains a house");
        if (!is_cochordal(g).chordal || !is_cochordal(h_graph(*d)).chordal)
            return fail("class recheck: co-chordality hypothesis fails");
        if (!v.base || v.base->answer != Answer::No)
            return fail("power reduction is missing a No first-power verdict");
        MonomialIdeal I = edge_ideal(*d);
        return verify_verdict(d, &I, 1, *v.base);
    }

    return fail("unknown rule '" + rule + "'");
}

CertifyResult verify_report_json(const nlohmann::json& report,
                                 const std::optional<WeightedOrientedGraph>& graph_input,
                                 const std::optional<MonomialIdeal>& ideal_input) {
    try {
        if (!report.contains("format_version") ||
            report.at("format_version").get<int>() != kFormatVersion)
            return fail("unsupported or missing format_version");
        if (!report.contains("request") || !report.contains("verdict"))
            return fail("report needs 'request' and 'verdict' fields");
        const auto& req = report.at("request");
        std::uint64_t k = req.value("k", std::uint64_t{1});

        MonomialIdeal base;
        if (graph_input) base = edge_ideal(*graph_input);
        else if (ideal_input) base = *ideal_input;
        else return fail("no input to certify against");
        MonomialIdeal subject = (k >= 2 && !base.is_zero()) ? power(base, k) : base;

        IoContext ctx;
        ctx.graph = graph_input ? &*graph_input : nullptr;
        ctx.subject = &subject;

        // parse the verdict (recursively, for power reductions)
        std::function<Verdict(const nlohmann::json&, const MonomialIdeal&)> parse =
            [&](const nlohmann::json& vj, const MonomialIdeal& subj) {
                Verdict v;
                std::string ans = vj.at("answer").get<std::string>();
                v.answer = ans == "Yes" ? Answer::Yes : ans == "No" ? Answer::No : Answer::Unknown;
                v.rule = vj.at("rule").get<std::string>();
                IoContext c2;
                c2.graph = ctx.graph;
                c2.subject = &subj;
                v.certificate = certificate_from_json(vj.at("certificate"), c2);
                v.notes = vj.value("notes", "");
                if (vj.contains("base")) v.base = std::make_shared<Verdict>(parse(vj.at("base"), base));
                return v;
            };
        Verdict v = parse(report.at("verdict"), subject);
        return verify_verdict(ctx.graph, &subject, k, v);
    } catch (const std::exception& e) {
        return fail(std::string("certificate parse: ") + e.what());
    }
}

}  // namespace cowl
