#pragma once

#include <functional>
#include <memory>
#include <mutex>

#include "ontoterm/concept_system.h"
#include "ontoterm/docstore.h"
#include "ontoterm/lexicon.h"

namespace ontoterm {

struct Snapshot {
    ConceptSystem system;
    Termbase termbase;
    DocStore store;

    bool operator==(const Snapshot&) const = default;
};

// Publishes immutable snapshots. Readers take a shared_ptr and keep a
// consistent view for as long as they hold it; writers are serialized and
// each successful update swaps in a complete successor snapshot.
class Workspace {
public:
    Workspace();
    explicit Workspace(Snapshot initial);

    std::shared_ptr<const Snapshot> current() const;

    // Applies `mutate` to a copy of the current snapshot. If the concept
    // system or termbase changed, postings are rebuilt, and the system must
    // pass check_system. Any exception leaves the published snapshot as is.
    std::shared_ptr<const Snapshot> update(const std::function<void(Snapshot&)>& mutate);

    void replace(Snapshot next);

private:
    mutable std::mutex read_mutex_;
    std::mutex write_mutex_;
    std::shared_ptr<const Snapshot> current_;
};

}  // namespace ontoterm
