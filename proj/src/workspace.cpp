#include "ontoterm/workspace.h"

namespace ontoterm {

Workspace::Workspace() : current_(std::make_shared<const Snapshot>()) {}

Workspace::Workspace(Snapshot initial) : current_(std::make_shared<const Snapshot>(std::move(initial))) {}

std::shared_ptr<const Snapshot> Workspace::current() const {
    std::lock_guard lock(read_mutex_);
    return current_;
}

std::shared_ptr<const Snapshot> Workspace::update(const std::function<void(Snapshot&)>& mutate) {
    std::lock_guard writer(write_mutex_);
    auto base = current();
    auto next = std::make_shared<Snapshot>(*base);
    mutate(*next);
    bool system_changed = next->system.version() != base->system.version();
    if (system_changed) {
        auto violations = check_system(next->system);
        if (!violations.empty()) {
            std::string message = "update breaks system invariants: " + to_string(violations.front());
            throw Error(ErrorCode::invariant_violation, message, std::move(violations));
        }
    }
    if (system_changed || next->termbase.version() != base->termbase.version())
        next->store.reindex(next->termbase, next->system);

    std::shared_ptr<const Snapshot> published = std::move(next);
    {
        std::lock_guard lock(read_mutex_);
        current_ = published;
    }
    return published;
}

void Workspace::replace(Snapshot next) {
    std::lock_guard writer(write_mutex_);
    auto published = std::make_shared<const Snapshot>(std::move(next));
    std::lock_guard lock(read_mutex_);
    current_ = std::move(published);
}

}  // namespace ontoterm
