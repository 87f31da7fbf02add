#include "ontoterm/formal_context.h"

#include <algorithm>
#include <set>

namespace ontoterm {

namespace {

void require_unique(const std::vector<Id>& ids, const char* what) {
    std::set<std::string_view> seen;
    for (const auto& id : ids) {
        if (id.empty()) throw Error(ErrorCode::malformed_context, std::string("empty ") + what + " id");
        if (!seen.insert(id).second)
            throw Error(ErrorCode::malformed_context, std::string("duplicate ") + what + " id '" + id + "'");
    }
}

IdSet to_ids(const std::vector<Id>& names, const Mask& mask) {
    IdSet out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.insert(names[i]);
    return out;
}

}  // namespace

FormalContext::FormalContext(std::vector<Id> objects, std::vector<Id> attributes,
                             std::vector<std::vector<bool>> incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), incidence_(std::move(incidence)) {
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    if (incidence_.size() != objects_.size())
        throw Error(ErrorCode::malformed_context, "incidence has " + std::to_string(incidence_.size()) +
                                                      " rows for " + std::to_string(objects_.size()) + " objects");
    for (std::size_t i = 0; i < incidence_.size(); ++i) {
        if (incidence_[i].size() != attributes_.size())
            throw Error(ErrorCode::malformed_context, "row for object '" + objects_[i] + "' has " +
                                                          std::to_string(incidence_[i].size()) + " cells, expected " +
                                                          std::to_string(attributes_.size()));
    }
}

std::size_t FormalContext::object_index(std::string_view id) const {
    auto it = std::find(objects_.begin(), objects_.end(), id);
    if (it == objects_.end()) throw Error(ErrorCode::malformed_context, "unknown object '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - objects_.begin());
}

std::size_t FormalContext::attribute_index(std::string_view id) const {
    auto it = std::find(attributes_.begin(), attributes_.end(), id);
    if (it == attributes_.end())
        throw Error(ErrorCode::malformed_context, "unknown attribute '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - attributes_.begin());
}

Mask derive_extent(const FormalContext& ctx, const Mask& attributes) {
    Mask extent(ctx.object_count(), true);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            if (attributes[m] && !ctx.incident(g, m)) {
                extent[g] = false;
                break;
            }
        }
    }
    return extent;
}

Mask derive_intent(const FormalContext& ctx, const Mask& objects) {
    Mask intent(ctx.attribute_count(), true);
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            if (objects[g] && !ctx.incident(g, m)) {
                intent[m] = false;
                break;
            }
        }
    }
    return intent;
}

Mask close_intent(const FormalContext& ctx, const Mask& attributes) {
    return derive_intent(ctx, derive_extent(ctx, attributes));
}

IdSet derive_extent(const FormalContext& ctx, const IdSet& attributes) {
    Mask mask(ctx.attribute_count(), false);
    for (const auto& a : attributes) mask[ctx.attribute_index(a)] = true;
    return to_ids(ctx.objects(), derive_extent(ctx, mask));
}

IdSet derive_intent(const FormalContext& ctx, const IdSet& objects) {
    Mask mask(ctx.object_count(), false);
    for (const auto& o : objects) mask[ctx.object_index(o)] = true;
    return to_ids(ctx.attributes(), derive_intent(ctx, mask));
}

std::vector<FormalConcept> build_lattice(const FormalContext& ctx) {
    const std::size_t n = ctx.attribute_count();
    std::vector<FormalConcept> out;
    auto emit = [&](const Mask& intent) {
        out.push_back({to_ids(ctx.objects(), derive_extent(ctx, intent)), to_ids(ctx.attributes(), intent)});
    };

    Mask current = close_intent(ctx, Mask(n, false));
    emit(current);
    // Ganter's NextClosure: the lectic successor of `current` is the closure
    // of (current ∩ {0..i-1}) ∪ {i} for the largest i whose closure adds
    // nothing below i.
    for (;;) {
        bool advanced = false;
        for (std::size_t k = n; k-- > 0;) {
            if (current[k]) {
                current[k] = false;
                continue;
            }
            Mask candidate = current;
            candidate[k] = true;
            Mask closed = close_intent(ctx, candidate);
            bool canonical = true;
            for (std::size_t j = 0; j < k; ++j) {
                if (closed[j] && !current[j]) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) {
                current = std::move(closed);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
        emit(current);
    }
    return out;
}

}  // namespace ontoterm
