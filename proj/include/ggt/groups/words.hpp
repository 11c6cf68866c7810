#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ggt/base.hpp"

namespace ggt {

// Reduced word in a free group. Letters are nonzero ints: i > 0 is the i-th
// generator, -i its inverse. The representation is always reduced, so
// equality of elements is equality of letter sequences.
class FreeWord {
  public:
    FreeWord() = default;

    // Reduces on construction.
    static FreeWord from_letters(const std::vector<int>& letters);

    // 'a'..'z' are generators 1..26, 'A'..'Z' their inverses.
    static FreeWord parse(const std::string& text);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    int max_generator() const;

    FreeWord operator*(const FreeWord& o) const;
    FreeWord inverse() const;

    bool operator==(const FreeWord& o) const = default;
    auto operator<=>(const FreeWord& o) const = default;

    std::string str() const;  // "e" for the identity

  private:
    std::vector<int> letters_;
};

// Length of the longest cancelling suffix of a against prefix of b^-1 -- the
// amount of reduction in a * b.
std::size_t cancellation_length(const FreeWord& a, const FreeWord& b);

// Two nontrivial free-group elements share a translation axis on the tree
// iff they commute.
bool same_axis(const FreeWord& f, const FreeWord& g);

}  // namespace ggt
