#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ontoterm/concept_system.h"

namespace ontoterm {

// Object × character incidence table. Rows are objects, columns attributes.
class FormalContext {
public:
    FormalContext() = default;
    // Throws malformed_context when dimensions disagree or ids repeat.
    FormalContext(std::vector<Id> objects, std::vector<Id> attributes, std::vector<std::vector<bool>> incidence);

    const std::vector<Id>& objects() const { return objects_; }
    const std::vector<Id>& attributes() const { return attributes_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    bool incident(std::size_t object, std::size_t attribute) const { return incidence_[object][attribute]; }

    std::size_t object_index(std::string_view id) const;
    std::size_t attribute_index(std::string_view id) const;

    bool operator==(const FormalContext&) const = default;

private:
    std::vector<Id> objects_;
    std::vector<Id> attributes_;
    std::vector<std::vector<bool>> incidence_;
};

// Index-set form of the derivation operators; masks are sized to the
// attribute (resp. object) count.
using Mask = std::vector<bool>;
Mask derive_extent(const FormalContext& ctx, const Mask& attributes);
Mask derive_intent(const FormalContext& ctx, const Mask& objects);
Mask close_intent(const FormalContext& ctx, const Mask& attributes);

// Id-set form. Unknown ids throw malformed_context.
IdSet derive_extent(const FormalContext& ctx, const IdSet& attributes);
IdSet derive_intent(const FormalContext& ctx, const IdSet& objects);

struct FormalConcept {
    IdSet extent;
    IdSet intent;

    bool operator==(const FormalConcept&) const = default;
    auto operator<=>(const FormalConcept&) const = default;
};

// All closed (extent, intent) pairs, enumerated by NextClosure. The result
// is in lectic order of intents with respect to the context's attribute
// order, so the first entry carries the smallest closed intent.
std::vector<FormalConcept> build_lattice(const FormalContext& ctx);

}  // namespace ontoterm
