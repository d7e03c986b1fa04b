#pragma once

#include <string>
#include <vector>

#include "ratlink/error.hpp"

namespace ratlink {

enum class SiteOrientation { Horizontal, Vertical };
enum class ClosureKind { Knot, TwoComponentLink };

// Validated twist-site sequence "p q1 ... qk r" with derived orientations.
// Rules: every site >= 1; the first and last sites >= 2 (the single-site case
// counts as both); sites alternate Horizontal/Vertical and the last site is
// Horizontal, so site i (1-based of s) is Horizontal iff s - i is even.
class TwistSequence {
  public:
    explicit TwistSequence(std::vector<int> sites);

    const std::vector<int>& sites() const { return sites_; }
    const std::vector<SiteOrientation>& orientations() const { return orientations_; }
    int site_count() const { return static_cast<int>(sites_.size()); }
    int total_crossings() const { return n_; }

    // 1-based site lookup, matching crossing/site numbering elsewhere.
    int site(int k) const { return sites_[static_cast<std::size_t>(k - 1)]; }
    SiteOrientation orientation(int k) const {
        return orientations_[static_cast<std::size_t>(k - 1)];
    }

    std::string str() const; // canonical space-separated form

    friend bool operator==(const TwistSequence&, const TwistSequence&) = default;
    friend bool operator<(const TwistSequence& a, const TwistSequence& b) {
        return a.sites_ < b.sites_;
    }

  private:
    std::vector<int> sites_;
    std::vector<SiteOrientation> orientations_;
    int n_ = 0;
};

// Accepts whitespace/comma separated integers, or (when the trimmed text is a
// bare digit run of length >= 2) the compact per-digit form "221122". A lone
// multi-digit site therefore needs a separator somewhere, e.g. "12,".
TwistSequence parse_conway(const std::string& text);

// Closure kind of the numerator closure, from the post-permutation automaton:
// a horizontal crossing swaps the strand ends at NE/SE, a vertical one at
// SW/SE; the closure is a 2-component link exactly when the final strand ends
// pair NW with NE and SW with SE.
ClosureKind predict_components(const TwistSequence& seq);

// Every valid sequence with total crossings <= max_crossings whose closure
// matches `kind`, in lexicographic order.
std::vector<TwistSequence> enumerate_sequences(int max_crossings, ClosureKind kind);

const char* to_string(SiteOrientation o);
const char* to_string(ClosureKind k);

} // namespace ratlink
