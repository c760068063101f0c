#ifndef GPP_PREDICATE_HPP
#define GPP_PREDICATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpp/domain.hpp"

namespace gpp {

// Fixed-width bit vector over the letters 1..width of a domain.
class LetterSet {
public:
    LetterSet() = default;
    explicit LetterSet(int width) : width_(width), bits_((width + 63) / 64, 0) {}

    static LetterSet full(int width) {
        LetterSet s(width);
        for (Letter a = 1; a <= width; ++a)
            s.insert(a);
        return s;
    }
    static LetterSet single(int width, Letter a) {
        LetterSet s(width);
        s.insert(a);
        return s;
    }
    static LetterSet of(int width, std::span<const Letter> letters) {
        LetterSet s(width);
        for (Letter a : letters)
            s.insert(a);
        return s;
    }

    int width() const { return width_; }
    void insert(Letter a) { bits_[word(a)] |= mask(a); }
    bool contains(Letter a) const {
        return a >= 1 && a <= width_ && (bits_[word(a)] & mask(a)) != 0;
    }
    bool empty() const {
        for (auto w : bits_)
            if (w)
                return false;
        return true;
    }
    bool is_full() const { return count() == width_; }
    int count() const {
        int c = 0;
        for (auto w : bits_)
            c += __builtin_popcountll(w);
        return c;
    }
    LetterSet intersect(const LetterSet& other) const {
        LetterSet r(width_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            r.bits_[i] = bits_[i] & other.bits_[i];
        return r;
    }
    bool subset_of(const LetterSet& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~other.bits_[i])
                return false;
        return true;
    }
    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        for (Letter a = 1; a <= width_; ++a)
            if (contains(a))
                out.push_back(a);
        return out;
    }

    bool operator==(const LetterSet& other) const {
        return width_ == other.width_ && bits_ == other.bits_;
    }

private:
    static std::size_t word(Letter a) { return static_cast<std::size_t>(a - 1) / 64; }
    static std::uint64_t mask(Letter a) { return std::uint64_t{1} << ((a - 1) % 64); }

    int width_ = 0;
    std::vector<std::uint64_t> bits_;
};

using LetterTuple = std::vector<Letter>;

// A finite relation over the domain. Four kinds:
//   Bottom       the unique empty relation (empty results of every arity are
//                identified, so the suffix order stays antisymmetric)
//   Epsilon      arity 0, contains only the empty word
//   Simple       a product of per-position letter sets
//   Extensional  an explicit tuple set of fixed arity
//
// Values are immutable after construction and canonical: equal relations of
// one kind have equal keys, an empty Simple/Extensional collapses to Bottom.
class Predicate {
public:
    enum class Kind { Bottom, Epsilon, Simple, Extensional };

    static const Predicate& bottom();
    static const Predicate& epsilon();
    static Predicate simple(std::vector<LetterSet> factors);
    static Predicate extensional(int domain_size, int arity, std::vector<LetterTuple> tuples);

    Kind kind() const { return kind_; }
    bool is_bottom() const { return kind_ == Kind::Bottom; }
    bool is_epsilon() const { return kind_ == Kind::Epsilon; }
    bool is_simple() const { return kind_ == Kind::Simple; }
    bool is_extensional() const { return kind_ == Kind::Extensional; }

    // Arity; 0 for both Bottom and Epsilon.
    int arity() const { return arity_; }
    // 0 for Bottom/Epsilon (they are domain-polymorphic constants).
    int domain_size() const { return domain_size_; }

    const std::vector<LetterSet>& factors() const { return factors_; }
    const std::vector<LetterTuple>& tuples() const { return tuples_; }

    // Exact membership of a full-arity tuple.
    bool contains(std::span<const Letter> tuple) const;

    // Number of tuples in the relation (expanded size for Simple).
    std::uint64_t tuple_count() const;

    const std::string& key() const { return key_; }
    std::string pretty() const;

    bool operator==(const Predicate& other) const { return key_ == other.key_; }
    bool operator<(const Predicate& other) const { return key_ < other.key_; }

private:
    Predicate() = default;

    Kind kind_ = Kind::Bottom;
    int arity_ = 0;
    int domain_size_ = 0;
    std::vector<LetterSet> factors_;
    std::vector<LetterTuple> tuples_; // sorted lexicographically, deduplicated
    std::string key_;
};

// w is in *p iff |w| >= arity(p) and the last arity(p) letters of w lie in p.
// *epsilon contains every word; *bottom contains none.
bool membership_suffix(const Word& w, const Predicate& p);

// The predicate a|b with *(a|b) = (*a) n (*b): the longer operand filtered so
// that its trailing window lies in the shorter one. Joining Simple with
// Simple stays Simple; epsilon is the identity, bottom absorbs. Joining a
// Simple with an Extensional operand expands the Simple side.
Predicate suffix_join(const Predicate& a, const Predicate& b);

// Drops the last coordinate. Arity 1 gives epsilon, bottom stays bottom,
// epsilon is rejected.
Predicate prefix_drop(const Predicate& p);

// prefix_drop(p) x {a}. Bottom stays bottom, epsilon is rejected.
Predicate singleton_extend(const Predicate& p, Letter a);

// Projection to the last k coordinates; k = 0 gives epsilon.
Predicate suffix_slice(const Predicate& p, int k);

// Letters occurring in the last coordinate; empty set for bottom.
LetterSet last_projection(const Predicate& p);

namespace detail {
// Expansion guard for Simple->Extensional promotion.
inline constexpr std::uint64_t kMaxExpandedTuples = 1u << 20;
} // namespace detail

// Rewrites a Simple predicate as an Extensional one (identity on
// Extensional/bottom/epsilon). Guarded by a tuple-count cap.
Predicate to_extensional(const Predicate& p);

} // namespace gpp

#endif
