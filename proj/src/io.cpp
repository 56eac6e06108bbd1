#include "cowl/io.hpp"

#include <fstream>

namespace cowl {

using nlohmann::json;

BuiltGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
        throw ParseError("graph document needs 'vertices' and 'arcs' fields");
    std::vector<std::string> ids;
    std::vector<std::uint64_t> weights;
    for (const auto& v : j.at("vertices")) {
        if (v.is_string()) {
            ids.push_back(v.get<std::string>());
            weights.push_back(1);
            continue;
        }
        if (!v.is_object() || !v.contains("id"))
            throw ParseError("vertex entries need an 'id' field");
        ids.push_back(v.at("id").get<std::string>());
        if (v.contains("weight")) {
            if (!v.at("weight").is_number_integer() || v.at("weight").get<long long>() < 1)
                throw ParseError("vertex '" + ids.back() + "' has a non-positive weight");
            weights.push_back(v.at("weight").get<std::uint64_t>());
        } else {
            weights.push_back(1);
        }
    }
    std::vector<std::pair<std::string, std::string>> arcs;
    for (const auto& a : j.at("arcs")) {
        if (!a.is_array() || a.size() != 2)
            throw ParseError("arc entries must be [tail, head] pairs");
        arcs.push_back({a[0].get<std::string>(), a[1].get<std::string>()});
    }
    return make_weighted_oriented(std::move(ids), arcs, weights);
}

json graph_to_json(const WeightedOrientedGraph& d) {
    json verts = json::array();
    for (int v = 0; v < d.n(); ++v)
        verts.push_back({{"id", d.ids[v]}, {"weight", d.weights[v]}});
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({d.ids[u], d.ids[v]});
    return {{"vertices", verts}, {"arcs", arcs}};
}

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw ParseError("ideal document needs 'variables' and 'generators' fields");
    std::vector<std::string> vars;
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    for (const auto& v : vars) {
        if (v.empty() || v.find_first_of(" \t\r\n*^") != std::string::npos)
            throw ParseError("bad variable name '" + v + "'");
    }
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
    return make_ideal(std::move(vars), gens);
}

json ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.gens) gens.push_back(monomial_to_string(I, g));
    return {{"variables", I.vars}, {"generators", gens}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return j;
}

namespace {

json ids_of(const std::vector<int>& verts, const WeightedOrientedGraph* g) {
    json out = json::array();
    for (int v : verts) out.push_back(g ? g->ids.at(v) : std::to_string(v));
    return out;
}

std::vector<int> ids_to_indices(const json& arr, const WeightedOrientedGraph* g) {
    std::vector<int> out;
    for (const auto& e : arr) {
        std::string id = e.get<std::string>();
        if (!g) throw ParseError("certificate references vertices but no graph was given");
        auto it = std::find(g->ids.begin(), g->ids.end(), id);
        if (it == g->ids.end()) throw ParseError("certificate references unknown vertex '" + id + "'");
        out.push_back(static_cast<int>(it - g->ids.begin()));
    }
    return out;
}

json chordality_to_json(const ChordalityCertificate& c, const WeightedOrientedGraph* g) {
    json out;
    out["chordal"] = c.chordal;
    if (c.chordal) out["peo"] = ids_of(c.peo, g);
    else out["cycle"] = ids_of(c.cycle, g);
    return out;
}

ChordalityCertificate chordality_from_json(const json& j, const WeightedOrientedGraph* g) {
    ChordalityCertificate c;
    c.chordal = j.at("chordal").get<bool>();
    if (c.chordal) c.peo = ids_to_indices(j.at("peo"), g);
    else c.cycle = ids_to_indices(j.at("cycle"), g);
    return c;
}

json split_to_json(const SplitTree& t, const IoContext& ctx) {
    switch (t.kind) {
        case SplitTree::Kind::LeafZero: return {{"kind", "zero"}};
        case SplitTree::Kind::LeafUnit: return {{"kind", "unit"}};
        case SplitTree::Kind::LeafMonomial:
            return {{"kind", "monomial"},
                    {"monomial", monomial_to_string(ctx.subject->vars, t.leaf)}};
        case SplitTree::Kind::Split: break;
    }
    return {{"kind", "split"},
            {"variable", ctx.subject->vars.at(t.var)},
            {"left", split_to_json(*t.left, ctx)},
            {"right", split_to_json(*t.right, ctx)}};
}

std::shared_ptr<const SplitTree> split_from_json(const json& j, const IoContext& ctx) {
    auto t = std::make_shared<SplitTree>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") {
        t->kind = SplitTree::Kind::LeafZero;
    } else if (kind == "unit") {
        t->kind = SplitTree::Kind::LeafUnit;
        t->leaf = Monomial(ctx.subject->nvars());
    } else if (kind == "monomial") {
        t->kind = SplitTree::Kind::LeafMonomial;
        t->leaf = parse_monomial(ctx.subject->vars, j.at("monomial").get<std::string>());
    } else if (kind == "split") {
        t->kind = SplitTree::Kind::Split;
        std::string var = j.at("variable").get<std::string>();
        auto it = std::find(ctx.subject->vars.begin(), ctx.subject->vars.end(), var);
        if (it == ctx.subject->vars.end())
            throw ParseError("split certificate references unknown variable '" + var + "'");
        t->var = static_cast<int>(it - ctx.subject->vars.begin());
        t->left = split_from_json(j.at("left"), ctx);
        t->right = split_from_json(j.at("right"), ctx);
    } else {
        throw ParseError("unknown split node kind '" + kind + "'");
    }
    return t;
}

json violation_to_json(const LinearityViolation& w, const IoContext& ctx) {
    return {{"multidegree", monomial_to_string(ctx.subject->vars, w.multidegree)},
            {"i", w.i},
            {"j", w.j}};
}

LinearityViolation violation_from_json(const json& j, const IoContext& ctx) {
    LinearityViolation w;
    w.multidegree = parse_monomial(ctx.subject->vars, j.at("multidegree").get<std::string>());
    w.i = j.at("i").get<long long>();
    w.j = j.at("j").get<std::uint64_t>();
    return w;
}

}  // namespace

json certificate_to_json(const Certificate& c, const IoContext& ctx) {
    json out;
    if (std::holds_alternative<std::monostate>(c)) {
        out["type"] = "none";
    } else if (auto* pm = std::get_if<PatternMatch>(&c)) {
        out["type"] = "pattern";
        out["pattern"] = pattern_name(pm->pattern);
        out["witness"] = ids_of(pm->witness, ctx.graph);
    } else if (auto* ce = std::get_if<CochordalityEvidence>(&c)) {
        out["type"] = "cochordality";
        out["target"] = ce->target == CochordalityEvidence::Target::Underlying ? "underlying" : "h_graph";
        out["complement_chordality"] = chordality_to_json(ce->cert, ctx.graph);
    } else if (auto* mp = std::get_if<MultipartiteCertificate>(&c)) {
        out["type"] = "multipartite";
        json parts = json::array();
        for (VertexSet p : mp->parts) parts.push_back(ids_of(set_to_list(p), ctx.graph));
        out["parts"] = parts;
    } else if (auto* lq = std::get_if<LinearQuotientOrder>(&c)) {
        out["type"] = "linear_quotients";
        json order = json::array();
        for (int g : lq->order) order.push_back(monomial_to_string(ctx.subject->vars, ctx.subject->gens.at(g)));
        out["order"] = order;
        json wits = json::array();
        for (const auto& ws : lq->colon_witnesses) {
            json vars = json::array();
            for (int v : ws) vars.push_back(ctx.subject->vars.at(v));
            wits.push_back(vars);
        }
        out["colon_witnesses"] = wits;
    } else if (auto* st = std::get_if<std::shared_ptr<const SplitTree>>(&c)) {
        out["type"] = "split_tree";
        out["tree"] = split_to_json(**st, ctx);
    } else if (auto* be = std::get_if<BettiEvidence>(&c)) {
        out["type"] = "betti";
        out["characteristic"] = be->characteristic;
        json per = json::array();
        for (const auto& chk : be->per_degree) {
            json e = {{"d", chk.d}, {"linear", chk.linear}};
            if (chk.violation) e["witness"] = violation_to_json(*chk.violation, ctx);
            per.push_back(e);
        }
        out["per_degree"] = per;
        if (be->failing_degree) out["failing_degree"] = *be->failing_degree;
        if (be->total_regularity) out["total_regularity"] = *be->total_regularity;
    } else if (auto* fe = std::get_if<FormulaEvidence>(&c)) {
        out["type"] = "formula";
        out["pattern"] = pattern_name(fe->pattern);
        out["k"] = fe->k;
        out["w2"] = fe->w2;
        out["w3"] = fe->w3;
        out["predicted_regularity"] = fe->predicted_regularity;
    }
    return out;
}

Certificate certificate_from_json(const json& j, const IoContext& ctx) {
    std::string type = j.at("type").get<std::string>();
    if (type == "none") return std::monostate{};
    if (type == "pattern") {
        PatternMatch pm;
        auto p = pattern_from_name(j.at("pattern").get<std::string>());
        if (!p) throw ParseError("unknown pattern '" + j.at("pattern").get<std::string>() + "'");
        pm.pattern = *p;
        pm.witness = ids_to_indices(j.at("witness"), ctx.graph);
        return pm;
    }
    if (type == "cochordality") {
        CochordalityEvidence ce;
        std::string target = j.at("target").get<std::string>();
        if (target == "underlying") ce.target = CochordalityEvidence::Target::Underlying;
        else if (target == "h_graph") ce.target = CochordalityEvidence::Target::HGraph;
        else throw ParseError("unknown cochordality target '" + target + "'");
        ce.cert = chordality_from_json(j.at("complement_chordality"), ctx.graph);
        return ce;
    }
    if (type == "multipartite") {
        MultipartiteCertificate mp;
        for (const auto& part : j.at("parts")) {
            VertexSet s = 0;
            for (int v : ids_to_indices(part, ctx.graph)) s |= VertexSet{1} << v;
            mp.parts.push_back(s);
        }
        return mp;
    }
    if (type == "linear_quotients") {
        if (!ctx.subject) throw ParseError("linear-quotient certificate without a subject ideal");
        LinearQuotientOrder lq;
        for (const auto& s : j.at("order")) {
            Monomial m = parse_monomial(ctx.subject->vars, s.get<std::string>());
            auto it = std::find(ctx.subject->gens.begin(), ctx.subject->gens.end(), m);
            if (it == ctx.subject->gens.end())
                throw ParseError("order entry '" + s.get<std::string>() + "' is not a minimal generator");
            lq.order.push_back(static_cast<int>(it - ctx.subject->gens.begin()));
        }
        for (const auto& ws : j.at("colon_witnesses")) {
            std::vector<int> vars;
            for (const auto& v : ws) {
                std::string name = v.get<std::string>();
                auto it = std::find(ctx.subject->vars.begin(), ctx.subject->vars.end(), name);
                if (it == ctx.subject->vars.end())
                    throw ParseError("witness references unknown variable '" + name + "'");
                vars.push_back(static_cast<int>(it - ctx.subject->vars.begin()));
            }
            lq.colon_witnesses.push_back(vars);
        }
        return lq;
    }
    if (type == "split_tree") {
        if (!ctx.subject) throw ParseError("split certificate without a subject ideal");
        Certificate c = split_from_json(j.at("tree"), ctx);
        return c;
    }
    if (type == "betti") {
        if (!ctx.subject) throw ParseError("betti certificate without a subject ideal");
        BettiEvidence be;
        be.characteristic = j.at("characteristic").get<long long>();
        for (const auto& e : j.at("per_degree")) {
            DegreeCheck chk;
            chk.d = e.at("d").get<std::uint64_t>();
            chk.linear = e.at("linear").get<bool>();
            if (e.contains("witness")) chk.violation = violation_from_json(e.at("witness"), ctx);
            be.per_degree.push_back(chk);
        }
        if (j.contains("failing_degree")) be.failing_degree = j.at("failing_degree").get<std::uint64_t>();
        if (j.contains("total_regularity")) be.total_regularity = j.at("total_regularity").get<long long>();
        return be;
    }
    if (type == "formula") {
        FormulaEvidence fe;
        auto p = pattern_from_name(j.at("pattern").get<std::string>());
        if (!p) throw ParseError("unknown pattern in formula evidence");
        fe.pattern = *p;
        fe.k = j.at("k").get<std::uint64_t>();
        fe.w2 = j.at("w2").get<std::uint64_t>();
        fe.w3 = j.at("w3").get<std::uint64_t>();
        fe.predicted_regularity = j.at("predicted_regularity").get<long long>();
        return fe;
    }
    throw ParseError("unknown certificate type '" + type + "'");
}

json verdict_to_json(const Verdict& v, const IoContext& ctx) {
    json out;
    out["answer"] = answer_name(v.answer);
    out["rule"] = v.rule;
    out["certificate"] = certificate_to_json(v.certificate, ctx);
    out["notes"] = v.notes;
    if (v.base) out["base"] = verdict_to_json(*v.base, ctx);
    return out;
}

json criterion4_to_json(const Criterion4Report& rep, const WeightedOrientedGraph& d) {
    json out;
    out["holds"] = rep.holds;
    out["g_cochordal"] = chordality_to_json(rep.g_cochordal, &d);
    out["h_cochordal"] = chordality_to_json(rep.h_cochordal, &d);
    if (rep.forbidden) {
        out["forbidden"] = {{"pattern", pattern_name(rep.forbidden->pattern)},
                            {"witness", ids_of(rep.forbidden->witness, &d)}};
    } else {
        out["forbidden"] = nullptr;
    }
    return out;
}

std::string render_verdict_text(const Verdict& v, const IoContext& ctx) {
    std::string out = "verdict: " + answer_name(v.answer) + "\nrule: " + v.rule + "\n";
    if (!v.notes.empty()) out += "notes: " + v.notes + "\n";
    json cert = certificate_to_json(v.certificate, ctx);
    std::string type = cert.at("type").get<std::string>();
    if (type != "none") out += "certificate (" + type + "): " + cert.dump() + "\n";
    if (v.base) out += "reduced from first power:\n" + render_verdict_text(*v.base, ctx);
    return out;
}

}  // namespace cowl
