#pragma once

#include <cstddef>
#include <vector>

namespace hypdom {

enum class GroundSet { Vertex, Edge };

/// An ordered list of disjoint item-index classes covering a ground set
/// (vertices or edges of some hypergraph). `total` marks the intended
/// domination flavor. Classes are kept sorted ascending.
struct DomaticPartition {
    GroundSet kind = GroundSet::Vertex;
    bool total = false;
    std::vector<std::vector<std::size_t>> classes;
};

enum class FailureReason { NotDominating, NotTotalDominating };

struct ClassFailure {
    std::size_t class_index = 0;
    FailureReason reason = FailureReason::NotDominating;
    std::size_t witness = 0;  // first item the class fails to dominate
};

struct ValidationReport {
    bool coverage_ok = false;  // disjoint, non-empty classes covering every item
    std::vector<ClassFailure> failures;
    bool valid = false;  // coverage_ok and no failures
};

}  // namespace hypdom
