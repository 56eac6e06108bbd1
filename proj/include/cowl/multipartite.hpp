#ifndef COWL_MULTIPARTITE_HPP
#define COWL_MULTIPARTITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cowl/graph.hpp"

namespace cowl {

struct MultipartiteCertificate {
    std::vector<VertexSet> parts;  // disjoint, nonempty, covering V
    int r() const { return static_cast<int>(parts.size()); }
    bool operator==(const MultipartiteCertificate& o) const = default;
};

/// Connected components of the complement; a certificate is returned iff each
/// component is independent in G (then every cross-part pair is an edge).
/// Parts are ordered by smallest member.
std::optional<MultipartiteCertificate> complete_multipartite(const SimpleGraph& g);

std::string verify_multipartite(const SimpleGraph& g, const MultipartiteCertificate& cert);

}  // namespace cowl

#endif
