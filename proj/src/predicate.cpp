#include "gpp/predicate.hpp"

#include <algorithm>
#include <sstream>

#include "gpp/errors.hpp"

namespace gpp {

namespace {

std::string make_key(Predicate::Kind kind, const std::vector<LetterSet>& factors,
                     const std::vector<LetterTuple>& tuples) {
    std::ostringstream out;
    switch (kind) {
    case Predicate::Kind::Bottom:
        return "#bot";
    case Predicate::Kind::Epsilon:
        return "#eps";
    case Predicate::Kind::Simple:
        out << "s[";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i)
                out << ',';
            out << '{';
            bool first = true;
            for (Letter a : factors[i].letters()) {
                if (!first)
                    out << ',';
                out << a;
                first = false;
            }
            out << '}';
        }
        out << ']';
        return out.str();
    case Predicate::Kind::Extensional:
        out << "x[";
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (i)
                out << ',';
            out << '(';
            for (std::size_t j = 0; j < tuples[i].size(); ++j) {
                if (j)
                    out << ',';
                out << tuples[i][j];
            }
            out << ')';
        }
        out << ']';
        return out.str();
    }
    return {};
}

} // namespace

const Predicate& Predicate::bottom() {
    static const Predicate p = [] {
        Predicate q;
        q.kind_ = Kind::Bottom;
        q.key_ = make_key(Kind::Bottom, {}, {});
        return q;
    }();
    return p;
}

const Predicate& Predicate::epsilon() {
    static const Predicate p = [] {
        Predicate q;
        q.kind_ = Kind::Epsilon;
        q.key_ = make_key(Kind::Epsilon, {}, {});
        return q;
    }();
    return p;
}

Predicate Predicate::simple(std::vector<LetterSet> factors) {
    if (factors.empty())
        return epsilon();
    const int width = factors.front().width();
    for (const auto& f : factors) {
        if (f.width() != width)
            throw ValidationError("simple predicate factors disagree on domain size");
        if (f.empty())
            return bottom();
    }
    Predicate p;
    p.kind_ = Kind::Simple;
    p.arity_ = static_cast<int>(factors.size());
    p.domain_size_ = width;
    p.factors_ = std::move(factors);
    p.key_ = make_key(Kind::Simple, p.factors_, {});
    return p;
}

Predicate Predicate::extensional(int domain_size, int arity, std::vector<LetterTuple> tuples) {
    if (arity < 1)
        throw ValidationError("extensional predicate arity must be >= 1");
    if (tuples.empty())
        return bottom();
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != arity)
            throw ValidationError("extensional tuple has wrong arity");
        for (Letter a : t)
            if (a < 1 || a > domain_size)
                throw ValidationError("extensional tuple letter out of domain range");
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    Predicate p;
    p.kind_ = Kind::Extensional;
    p.arity_ = arity;
    p.domain_size_ = domain_size;
    p.tuples_ = std::move(tuples);
    p.key_ = make_key(Kind::Extensional, {}, p.tuples_);
    return p;
}

bool Predicate::contains(std::span<const Letter> tuple) const {
    switch (kind_) {
    case Kind::Bottom:
        return false;
    case Kind::Epsilon:
        return tuple.empty();
    case Kind::Simple:
        if (static_cast<int>(tuple.size()) != arity_)
            return false;
        for (int i = 0; i < arity_; ++i)
            if (!factors_[i].contains(tuple[i]))
                return false;
        return true;
    case Kind::Extensional: {
        if (static_cast<int>(tuple.size()) != arity_)
            return false;
        LetterTuple t(tuple.begin(), tuple.end());
        return std::binary_search(tuples_.begin(), tuples_.end(), t);
    }
    }
    return false;
}

std::uint64_t Predicate::tuple_count() const {
    switch (kind_) {
    case Kind::Bottom:
        return 0;
    case Kind::Epsilon:
        return 1;
    case Kind::Simple: {
        std::uint64_t n = 1;
        for (const auto& f : factors_)
            n *= static_cast<std::uint64_t>(f.count());
        return n;
    }
    case Kind::Extensional:
        return tuples_.size();
    }
    return 0;
}

std::string Predicate::pretty() const {
    switch (kind_) {
    case Kind::Bottom:
        return "bottom";
    case Kind::Epsilon:
        return "eps";
    case Kind::Simple: {
        std::ostringstream out;
        out << '<';
        for (int i = 0; i < arity_; ++i) {
            if (i)
                out << ',';
            if (factors_[i].is_full()) {
                out << 'D';
                continue;
            }
            out << '{';
            bool first = true;
            for (Letter a : factors_[i].letters()) {
                if (!first)
                    out << ',';
                out << a;
                first = false;
            }
            out << '}';
        }
        out << '>';
        return out.str();
    }
    case Kind::Extensional:
        return key_;
    }
    return {};
}

bool membership_suffix(const Word& w, const Predicate& p) {
    if (p.is_bottom())
        return false;
    if (p.is_epsilon())
        return true;
    const int k = p.arity();
    if (w.length() < k)
        return false;
    std::span<const Letter> tail(w.letters.data() + (w.length() - k), static_cast<std::size_t>(k));
    return p.contains(tail);
}

Predicate to_extensional(const Predicate& p) {
    if (!p.is_simple())
        return p;
    if (p.tuple_count() > detail::kMaxExpandedTuples)
        throw CapacityError("simple predicate too large to expand to tuples");
    std::vector<LetterTuple> tuples;
    tuples.reserve(static_cast<std::size_t>(p.tuple_count()));
    LetterTuple current(static_cast<std::size_t>(p.arity()));
    std::vector<std::vector<Letter>> choices;
    choices.reserve(p.factors().size());
    for (const auto& f : p.factors())
        choices.push_back(f.letters());
    // odometer over the factor letter lists
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < choices.size(); ++i)
            current[i] = choices[i][idx[i]];
        tuples.push_back(current);
        std::size_t pos = choices.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < choices[pos].size())
                break;
            idx[pos] = 0;
            if (pos == 0)
                return Predicate::extensional(p.domain_size(), p.arity(), std::move(tuples));
        }
    }
}

namespace {

int common_domain(const Predicate& a, const Predicate& b) {
    const int da = a.domain_size();
    const int db = b.domain_size();
    if (da != 0 && db != 0 && da != db)
        throw ValidationError("predicates come from different domains");
    return da != 0 ? da : db;
}

Predicate join_simple(const Predicate& longer, const Predicate& shorter) {
    std::vector<LetterSet> factors = longer.factors();
    const int offset = longer.arity() - shorter.arity();
    for (int i = 0; i < shorter.arity(); ++i) {
        factors[offset + i] = factors[offset + i].intersect(shorter.factors()[i]);
        if (factors[offset + i].empty())
            return Predicate::bottom();
    }
    return Predicate::simple(std::move(factors));
}

Predicate join_extensional(const Predicate& longer, const Predicate& shorter) {
    const int k = shorter.arity();
    std::vector<LetterTuple> kept;
    for (const auto& t : longer.tuples()) {
        std::span<const Letter> tail(t.data() + (t.size() - k), static_cast<std::size_t>(k));
        if (shorter.contains(tail))
            kept.push_back(t);
    }
    if (kept.empty())
        return Predicate::bottom();
    return Predicate::extensional(longer.domain_size(), longer.arity(), std::move(kept));
}

} // namespace

Predicate suffix_join(const Predicate& a, const Predicate& b) {
    if (a.is_bottom() || b.is_bottom())
        return Predicate::bottom();
    if (a.is_epsilon())
        return b;
    if (b.is_epsilon())
        return a;
    common_domain(a, b);
    const Predicate& longer = a.arity() >= b.arity() ? a : b;
    const Predicate& shorter = a.arity() >= b.arity() ? b : a;
    if (longer.is_simple() && shorter.is_simple())
        return join_simple(longer, shorter);
    if (longer.is_simple())
        return join_extensional(to_extensional(longer), shorter);
    return join_extensional(longer, shorter);
}

Predicate prefix_drop(const Predicate& p) {
    if (p.is_bottom())
        return Predicate::bottom();
    if (p.is_epsilon())
        throw ValidationError("prefix_drop is undefined on the empty-word predicate");
    if (p.arity() == 1)
        return Predicate::epsilon();
    if (p.is_simple()) {
        std::vector<LetterSet> factors(p.factors().begin(), p.factors().end() - 1);
        return Predicate::simple(std::move(factors));
    }
    std::vector<LetterTuple> prefixes;
    prefixes.reserve(p.tuples().size());
    for (const auto& t : p.tuples())
        prefixes.emplace_back(t.begin(), t.end() - 1);
    return Predicate::extensional(p.domain_size(), p.arity() - 1, std::move(prefixes));
}

Predicate singleton_extend(const Predicate& p, Letter a) {
    if (p.is_bottom())
        return Predicate::bottom();
    if (p.is_epsilon())
        throw ValidationError("singleton_extend is undefined on the empty-word predicate");
    if (a < 1 || a > p.domain_size())
        throw ValidationError("singleton_extend letter out of domain range");
    Predicate head = prefix_drop(p);
    if (p.is_simple()) {
        std::vector<LetterSet> factors =
            head.is_epsilon() ? std::vector<LetterSet>{} : head.factors();
        factors.push_back(LetterSet::single(p.domain_size(), a));
        return Predicate::simple(std::move(factors));
    }
    std::vector<LetterTuple> tuples;
    if (head.is_epsilon()) {
        tuples.push_back({a});
    } else {
        tuples.reserve(head.tuples().size());
        for (const auto& t : head.tuples()) {
            LetterTuple ext = t;
            ext.push_back(a);
            tuples.push_back(std::move(ext));
        }
    }
    return Predicate::extensional(p.domain_size(), p.arity(), std::move(tuples));
}

Predicate suffix_slice(const Predicate& p, int k) {
    if (p.is_bottom())
        return Predicate::bottom();
    if (k < 0 || k > p.arity())
        throw ValidationError("suffix_slice length out of range");
    if (k == 0)
        return Predicate::epsilon();
    if (p.is_simple()) {
        std::vector<LetterSet> factors(p.factors().end() - k, p.factors().end());
        return Predicate::simple(std::move(factors));
    }
    std::vector<LetterTuple> suffixes;
    suffixes.reserve(p.tuples().size());
    for (const auto& t : p.tuples())
        suffixes.emplace_back(t.end() - k, t.end());
    return Predicate::extensional(p.domain_size(), k, std::move(suffixes));
}

LetterSet last_projection(const Predicate& p) {
    if (p.is_bottom())
        return LetterSet(0);
    if (p.is_epsilon())
        throw ValidationError("last_projection is undefined on the empty-word predicate");
    if (p.is_simple())
        return p.factors().back();
    LetterSet out(p.domain_size());
    for (const auto& t : p.tuples())
        out.insert(t.back());
    return out;
}

} // namespace gpp
