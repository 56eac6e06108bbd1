#ifndef COWL_CERTIFY_HPP
#define COWL_CERTIFY_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "cowl/decide.hpp"
#include "cowl/io.hpp"

namespace cowl {

struct CertifyResult {
    bool ok = false;
    std::string violation;  // empty iff ok
};

/// Re-verify a previously emitted report against its input. The subject
/// ideal is re-derived from the request echo (command and k); every rule has
/// its own semantic re-check and failures name the violated condition.
CertifyResult verify_report_json(const nlohmann::json& report,
                                 const std::optional<WeightedOrientedGraph>& graph_input,
                                 const std::optional<MonomialIdeal>& ideal_input);

/// Verify one verdict (with certificate) for a given subject.
CertifyResult verify_verdict(const WeightedOrientedGraph* d, const MonomialIdeal* subject,
                             std::uint64_t k, const Verdict& v);

}  // namespace cowl

#endif
