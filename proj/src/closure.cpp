#include "gpp/closure.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "gpp/errors.hpp"

namespace gpp {

bool ClosedLanguage::contains(const Predicate& p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

namespace {

void validate_base(const Domain& domain, const std::vector<Predicate>& base) {
    for (const auto& p : base) {
        if (p.is_epsilon() || p.arity() < 1)
            throw ValidationError("language predicates must have arity >= 1");
        if (!p.is_bottom() && p.domain_size() != domain.size)
            throw ValidationError("language predicate domain mismatch");
    }
}

// Worklist fixpoint with key-based dedup. `rules` receives each newly added
// member and pushes its consequences through `emit`.
class Fixpoint {
public:
    Fixpoint(std::size_t cap, const char* what) : cap_(cap), what_(what) {}

    bool add(const Predicate& p) {
        auto [it, fresh] = seen_.emplace(p.key(), members_.size());
        (void)it;
        if (!fresh)
            return false;
        if (members_.size() >= cap_)
            throw CapacityError(std::string(what_) + " exceeded the member cap of " +
                                std::to_string(cap_));
        members_.push_back(p);
        queue_.push_back(members_.size() - 1);
        return true;
    }

    bool pending() const { return !queue_.empty(); }
    std::size_t pop() {
        std::size_t i = queue_.front();
        queue_.pop_front();
        return i;
    }

    const Predicate& at(std::size_t i) const { return members_[i]; }
    std::size_t count() const { return members_.size(); }
    std::vector<Predicate> take_sorted() {
        std::sort(members_.begin(), members_.end());
        return std::move(members_);
    }

private:
    std::size_t cap_;
    const char* what_;
    std::vector<Predicate> members_;
    std::deque<std::size_t> queue_;
    std::unordered_map<std::string, std::size_t> seen_;
};

ClosedLanguage finish(const Domain& domain, std::vector<Predicate> base,
                      std::vector<Predicate> members, ClosureKind kind) {
    ClosedLanguage out;
    out.domain = domain;
    out.base = std::move(base);
    out.members = std::move(members);
    out.kind = kind;
    out.includes_epsilon = out.contains(Predicate::epsilon());
    out.includes_bottom = out.contains(Predicate::bottom());
    return out;
}

std::vector<Predicate> dedup_base(const std::vector<Predicate>& base) {
    std::vector<Predicate> out = base;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ClosedLanguage prefix_closure(const Domain& domain, const std::vector<Predicate>& base,
                              const ClosureOptions& options) {
    validate_base(domain, base);
    Fixpoint fix(options.member_cap, "prefix closure");
    fix.add(Predicate::epsilon());
    for (const auto& p : base)
        fix.add(p);
    while (fix.pending()) {
        const Predicate p = fix.at(fix.pop());
        if (p.is_epsilon() || p.is_bottom())
            continue;
        fix.add(prefix_drop(p));
    }
    return finish(domain, dedup_base(base), fix.take_sorted(), ClosureKind::Prefix);
}

ClosedLanguage cap_bar_closure(const Domain& domain, const std::vector<Predicate>& base,
                               const ClosureOptions& options) {
    validate_base(domain, base);
    Fixpoint fix(options.member_cap, "prefix+join closure");
    fix.add(Predicate::epsilon());
    for (const auto& p : base)
        fix.add(p);
    while (fix.pending()) {
        const std::size_t i = fix.pop();
        {
            const Predicate p = fix.at(i);
            if (!p.is_epsilon() && !p.is_bottom())
                fix.add(prefix_drop(p));
        }
        for (std::size_t j = 0; j < fix.count(); ++j) {
            // copies: fix.add may reallocate the member store
            const Predicate a = fix.at(i);
            const Predicate b = fix.at(j);
            fix.add(suffix_join(a, b));
        }
    }
    return finish(domain, dedup_base(base), fix.take_sorted(), ClosureKind::CapBar);
}

ClosedLanguage singleton_suffix_saturate(const ClosedLanguage& closed) {
    std::vector<Predicate> members = closed.members;
    for (const auto& p : closed.members) {
        if (p.is_epsilon() || p.is_bottom())
            continue;
        for (Letter a = 1; a <= closed.domain.size; ++a)
            members.push_back(singleton_extend(p, a));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ClosedLanguage out = finish(closed.domain, closed.base, std::move(members), ClosureKind::Star);
    out.cap_bar_size = closed.size();
    return out;
}

namespace {

// Completes a prefix+join closed seed under all three rules. Joins that
// vanish are discarded here; bottom membership is decided by the seed (an
// empty relation never derives a nonempty one, so nothing else is lost).
ClosedLanguage complete_star(const Domain& domain, const std::vector<Predicate>& base,
                             const std::vector<Predicate>& seed, std::size_t cap_bar_size,
                             const ClosureOptions& options) {
    Fixpoint fix(options.member_cap, "full closure");
    for (const auto& p : seed)
        fix.add(p);
    while (fix.pending()) {
        const std::size_t i = fix.pop();
        {
            const Predicate p = fix.at(i);
            if (!p.is_epsilon() && !p.is_bottom()) {
                fix.add(prefix_drop(p));
                for (Letter a = 1; a <= domain.size; ++a)
                    fix.add(singleton_extend(p, a));
            }
        }
        for (std::size_t j = 0; j < fix.count(); ++j) {
            // copies: fix.add may reallocate the member store
            const Predicate a = fix.at(i);
            const Predicate b = fix.at(j);
            const Predicate joined = suffix_join(a, b);
            if (!joined.is_bottom())
                fix.add(joined);
        }
    }
    ClosedLanguage out = finish(domain, dedup_base(base), fix.take_sorted(), ClosureKind::Star);
    out.cap_bar_size = cap_bar_size;
    return out;
}

} // namespace

ClosedLanguage star_closure(const Domain& domain, const std::vector<Predicate>& base,
                            const ClosureOptions& options) {
    bool simple = true;
    for (const auto& p : base)
        if (p.is_extensional())
            simple = false;
    if (!simple)
        return star_closure_fixpoint(domain, base, options);
    // One saturation sweep reaches the fixpoint whenever no member keeps a
    // full leading window (languages in eliminated form). The completion
    // pass verifies that instead of assuming it; it adds nothing in the
    // usual case and repairs the set in the degenerate ones.
    const ClosedLanguage stage1 = cap_bar_closure(domain, base, options);
    const ClosedLanguage saturated = singleton_suffix_saturate(stage1);
    return complete_star(domain, base, saturated.members, stage1.size(), options);
}

ClosedLanguage star_closure_fixpoint(const Domain& domain, const std::vector<Predicate>& base,
                                     const ClosureOptions& options) {
    const ClosedLanguage stage1 = cap_bar_closure(domain, base, options);
    return complete_star(domain, base, stage1.members, stage1.size(), options);
}

} // namespace gpp
