#ifndef COWL_IO_HPP
#define COWL_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "cowl/decide.hpp"
#include "cowl/graph.hpp"
#include "cowl/ideal.hpp"

namespace cowl {

inline constexpr int kFormatVersion = 1;

/// Graph document: {"vertices": [{"id": ..., "weight": ...}, ...],
/// "arcs": [[tail, head], ...]}. Weight defaults to 1.
BuiltGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const WeightedOrientedGraph& d);

/// Ideal document: {"variables": [...], "generators": ["x1*x2^3", ...]}.
MonomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const MonomialIdeal& I);

/// Load either document from a file, reporting the offending path on errors.
nlohmann::json load_json_file(const std::string& path);

/// Serialization context: certificates reference vertices by id and
/// generators by monomial string.
struct IoContext {
    const WeightedOrientedGraph* graph = nullptr;  // for vertex names
    const MonomialIdeal* subject = nullptr;        // the ideal a certificate speaks about
};

nlohmann::json certificate_to_json(const Certificate& c, const IoContext& ctx);
Certificate certificate_from_json(const nlohmann::json& j, const IoContext& ctx);

nlohmann::json verdict_to_json(const Verdict& v, const IoContext& ctx);

nlohmann::json criterion4_to_json(const Criterion4Report& rep, const WeightedOrientedGraph& d);

std::string render_verdict_text(const Verdict& v, const IoContext& ctx);

}  // namespace cowl

#endif
