#ifndef GPP_DOMAIN_HPP
#define GPP_DOMAIN_HPP

#include <string>
#include <unordered_set>
#include <vector>

#include "gpp/errors.hpp"

namespace gpp {

// Letters are 1-based integers in [1, |D|].
using Letter = int;

struct Domain {
    int size = 0;
    std::vector<std::string> labels; // optional; empty or exactly `size` entries

    Domain() = default;
    explicit Domain(int n, std::vector<std::string> names = {})
        : size(n), labels(std::move(names)) {
        if (size < 1)
            throw ValidationError("domain size must be >= 1");
        if (!labels.empty()) {
            if (static_cast<int>(labels.size()) != size)
                throw ValidationError("domain labels must have exactly `size` entries");
            std::unordered_set<std::string> seen(labels.begin(), labels.end());
            if (static_cast<int>(seen.size()) != size)
                throw ValidationError("domain labels must be distinct");
        }
    }

    bool contains(Letter a) const { return a >= 1 && a <= size; }

    bool operator==(const Domain& other) const { return size == other.size; }
};

// A word over the domain; may be empty.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::vector<Letter> ls, const Domain& d) : letters(std::move(ls)) {
        for (Letter a : letters)
            if (!d.contains(a))
                throw ValidationError("word letter out of domain range");
    }

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
};

} // namespace gpp

#endif
